//! Term graphs: the graph `G(t)` of a nontrivial term and the inverse
//! construction of a term from a rooted graph.

use std::collections::BTreeSet;

use super::Term;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::name::Name;

/// `G(t)` together with its root `L(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermGraph {
    pub graph: Graph,
    pub root: Name,
}

/// Builds `G(t)`: vertices are the variables of `t`; `(t1 t2)` contributes the
/// edge `(L(t1), L(t2))` on top of the edges of both halves.
pub fn term_graph(t: &Term) -> Result<TermGraph> {
    let root = t.leftmost()?.clone();
    let mut edges = BTreeSet::new();
    collect_edges(t, &mut edges);
    let graph = Graph::new(t.vars(), edges)?;
    Ok(TermGraph { graph, root })
}

/// Returns the leftmost variable of a nontrivial subterm.
fn collect_edges(t: &Term, edges: &mut BTreeSet<(Name, Name)>) -> Name {
    match t {
        Term::Var(x) => x.clone(),
        Term::App(l, r) => {
            let a = collect_edges(l, edges);
            let b = collect_edges(r, edges);
            edges.insert((a.clone(), b));
            a
        }
        Term::Inf => unreachable!("caller checked the term is nontrivial"),
    }
}

/// The least vertex from which every vertex is reachable, if any.
pub fn is_term_graph(g: &Graph) -> Result<Option<Name>> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Ok(root_index(g).map(|i| g.name(i).clone()))
}

pub(crate) fn root_index(g: &Graph) -> Option<usize> {
    (0..g.len()).find(|&i| g.reach_idx(i).len() == g.len())
}

/// A term `t` with `G(t) = g` exactly and `L(t) = root`.
///
/// Depth-first from the root: the subterm of `v` is `v` applied in turn to
/// one argument per out-neighbour `w` (ascending), the subterm of `w` on
/// first visit and the bare variable `w` afterwards. Every edge `(v, w)` is
/// contributed exactly once, by the application that adds `w`'s argument.
pub fn graph_to_term(g: &Graph, root: &str) -> Result<Term> {
    let r = g.index_of(root).ok_or_else(|| Error::UnknownVertex(root.to_string()))?;
    if g.reach_idx(r).len() != g.len() {
        return Err(Error::NotRoot(root.to_string()));
    }
    let mut visited = vec![false; g.len()];
    visited[r] = true;
    Ok(expand(g, r, &mut visited))
}

fn expand(g: &Graph, v: usize, visited: &mut [bool]) -> Term {
    let mut t = Term::Var(g.name(v).clone());
    for &w in g.out_neighbors(v) {
        let arg = if visited[w] {
            Term::Var(g.name(w).clone())
        } else {
            visited[w] = true;
            expand(g, w, visited)
        };
        t = Term::app(t, arg);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tg(s: &str) -> TermGraph {
        term_graph(&Term::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn term_graph_examples() {
        let k = tg("x (y x)");
        assert_eq!(k.graph, Graph::new(["x", "y"], [("x", "y"), ("y", "x")]).unwrap());
        assert_eq!(k.root, "x");
        let single = tg("x");
        assert_eq!((single.graph.len(), single.graph.edge_count()), (1, 0));
        let looped = tg("x x");
        assert_eq!(looped.graph, Graph::new(["x"], [("x", "x")]).unwrap());
        assert!(matches!(term_graph(&Term::parse("x inf").unwrap()), Err(Error::TrivialTerm(_))));
    }

    #[test]
    fn rooted_graph_detection() {
        let k3 = Graph::from_fn(3, |i, j| i != j);
        assert_eq!(is_term_graph(&k3).unwrap().unwrap(), "0");
        assert_eq!(is_term_graph(&Graph::from_indices(2, &[])).unwrap(), None);
        let path = Graph::from_indices(3, &[(0, 1), (1, 2)]);
        assert_eq!(is_term_graph(&path).unwrap().unwrap(), "0");
        let back = Graph::from_indices(3, &[(1, 0), (1, 2)]);
        assert_eq!(is_term_graph(&back).unwrap().unwrap(), "1");
        assert!(matches!(is_term_graph(&Graph::empty()), Err(Error::EmptyGraph)));
    }

    #[test]
    fn graph_to_term_examples() {
        let k2 = Graph::new(["x", "y"], [("x", "y"), ("y", "x")]).unwrap();
        let t = graph_to_term(&k2, "x").unwrap();
        assert_eq!(t.to_string(), "x (y x)");
        assert_eq!(term_graph(&t).unwrap(), TermGraph { graph: k2, root: "x".into() });

        let dot = Graph::new(["v"], [("v", "v")]).unwrap();
        assert_eq!(graph_to_term(&dot, "v").unwrap().to_string(), "v v");

        let path = Graph::from_indices(3, &[(0, 1), (1, 2)]);
        let t = graph_to_term(&path, "0").unwrap();
        assert_eq!(t.to_string(), "0 (1 2)");
        assert_eq!(term_graph(&t).unwrap().graph, path);

        assert!(matches!(graph_to_term(&path, "1"), Err(Error::NotRoot(_))));
        assert!(matches!(graph_to_term(&path, "q"), Err(Error::UnknownVertex(_))));
    }

    fn digraphs(n: usize) -> impl Iterator<Item = Graph> {
        (0..1u32 << (n * n)).map(move |code| Graph::from_fn(n, |i, j| code >> (i * n + j) & 1 == 1))
    }

    #[test]
    fn round_trip_over_all_small_rooted_graphs() {
        let mut checked = 0;
        for n in 1..=3 {
            for g in digraphs(n) {
                for r in 0..n {
                    if g.reach_idx(r).len() < n {
                        continue;
                    }
                    let root = g.name(r).clone();
                    let t = graph_to_term(&g, root.as_str()).unwrap();
                    let back = term_graph(&t).unwrap();
                    assert_eq!(back, TermGraph { graph: g.clone(), root: root.clone() });
                    checked += 1;
                }
            }
        }
        assert_eq!(checked, 786);
        // every seventh 4-vertex graph
        for g in digraphs(4).step_by(7) {
            if let Some(r) = root_index(&g) {
                let t = graph_to_term(&g, g.name(r).as_str()).unwrap();
                assert_eq!(term_graph(&t).unwrap().graph, g);
            }
        }
    }
}
