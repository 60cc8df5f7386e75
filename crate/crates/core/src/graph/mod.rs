//! Finite directed graphs with loops, their standard constructions and
//! homomorphism search.
//!
//! A [`Graph`] keeps its vertex names sorted in [`Name`] order, so vertex
//! index `i` is always the `i`-th smallest identifier. Every deterministic
//! choice in the crate ("least vertex", "ascending candidates") refers to
//! that order.

mod hom;
mod io;
mod product;
mod scc;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::name::Name;

pub use hom::{enumerate_homomorphisms, Constraints, Homomorphisms, MapKind, Mapping, VertexMap};
pub(crate) use hom::HomSearch;
pub use product::{pointed_product, ProductVertex, BOTTOM};

/// A finite directed graph without multiple edges. Loops are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    names: Vec<Name>,
    adj: Vec<bool>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from a vertex collection and an edge collection.
    ///
    /// Duplicate vertices and edges collapse. Every edge endpoint must be
    /// listed among the vertices.
    pub fn new<V, E, A, B>(vertices: V, edges: E) -> Result<Graph>
    where
        V: IntoIterator,
        V::Item: Into<Name>,
        E: IntoIterator<Item = (A, B)>,
        A: Into<Name>,
        B: Into<Name>,
    {
        let set: BTreeSet<Name> = vertices.into_iter().map(Into::into).collect();
        let names: Vec<Name> = set.into_iter().collect();
        let mut g = Graph::with_names(names);
        for (a, b) in edges {
            let (a, b) = (a.into(), b.into());
            match (g.index_of(a.as_str()), g.index_of(b.as_str())) {
                (Some(i), Some(j)) => g.set_edge(i, j),
                _ => return Err(Error::DanglingEdge(a.into_string(), b.into_string())),
            }
        }
        g.rebuild_lists();
        Ok(g)
    }

    /// The graph with no vertices.
    pub fn empty() -> Graph {
        Graph::with_names(Vec::new())
    }

    /// Graph on vertices `"0"`, …, `"n-1"` with edges given by index.
    ///
    /// Panics if an index is out of range.
    pub fn from_indices(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::with_names((0..n).map(Name::from).collect());
        for &(i, j) in edges {
            assert!(i < n && j < n, "edge ({i}, {j}) out of range for {n} vertices");
            g.set_edge(i, j);
        }
        g.rebuild_lists();
        g
    }

    /// Graph on vertices `"0"`, …, `"n-1"` from an `n × n` adjacency predicate.
    pub fn from_fn(n: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut g = Graph::with_names((0..n).map(Name::from).collect());
        for i in 0..n {
            for j in 0..n {
                if edge(i, j) {
                    g.set_edge(i, j);
                }
            }
        }
        g.rebuild_lists();
        g
    }

    /// `names` must already be sorted and duplicate free.
    fn with_names(names: Vec<Name>) -> Graph {
        let n = names.len();
        Graph {
            names,
            adj: vec![false; n * n],
            out: vec![Vec::new(); n],
            inc: vec![Vec::new(); n],
        }
    }

    fn set_edge(&mut self, i: usize, j: usize) {
        let n = self.names.len();
        self.adj[i * n + j] = true;
    }

    fn rebuild_lists(&mut self) {
        let n = self.names.len();
        for i in 0..n {
            self.out[i].clear();
            self.inc[i].clear();
        }
        for i in 0..n {
            for j in 0..n {
                if self.adj[i * n + j] {
                    self.out[i].push(j);
                    self.inc[j].push(i);
                }
            }
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Vertex names in ascending order.
    pub fn vertices(&self) -> &[Name] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &Name {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names
            .binary_search_by(|v| crate::name::natural_cmp(v.as_str(), name))
            .ok()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    #[inline]
    pub fn has_edge_idx(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.names.len() + j]
    }

    /// Edge test by name; unknown names have no edges.
    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.has_edge_idx(i, j),
            _ => false,
        }
    }

    pub fn has_loop(&self, i: usize) -> bool {
        self.has_edge_idx(i, i)
    }

    pub fn out_neighbors(&self, i: usize) -> &[usize] {
        &self.out[i]
    }

    pub fn in_neighbors(&self, i: usize) -> &[usize] {
        &self.inc[i]
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Edges as index pairs, lexicographically ordered.
    pub fn edge_indices(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(i, outs)| outs.iter().map(move |&j| (i, j)))
    }

    /// Edges as name pairs, in index order.
    pub fn edges(&self) -> impl Iterator<Item = (&Name, &Name)> + '_ {
        self.edge_indices()
            .map(|(i, j)| (&self.names[i], &self.names[j]))
    }

    /// True if the edge relation is symmetric.
    pub fn is_undirected(&self) -> bool {
        self.edge_indices().all(|(i, j)| self.has_edge_idx(j, i))
    }

    /// Vertices reachable from `i` by a walk of length ≥ 0, ascending.
    pub fn reach_idx(&self, i: usize) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        seen[i] = true;
        let mut queue = VecDeque::from([i]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.out[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        (0..self.len()).filter(|&j| seen[j]).collect()
    }

    /// Vertices reachable from `v` (including `v` itself), ascending.
    pub fn reach(&self, v: &str) -> Result<Vec<Name>> {
        let i = self.require(v)?;
        Ok(self.reach_idx(i).into_iter().map(|j| self.names[j].clone()).collect())
    }

    /// The subgraph induced by the vertices reachable from `v`.
    pub fn reach_subgraph(&self, v: &str) -> Result<Graph> {
        let i = self.require(v)?;
        Ok(self.induced_by_indices(&self.reach_idx(i)))
    }

    /// Subgraph induced by a set of vertex names.
    pub fn induced_subgraph<I>(&self, subset: I) -> Result<Graph>
    where
        I: IntoIterator,
        I::Item: AsRef<str>,
    {
        let mut idx = Vec::new();
        for v in subset {
            idx.push(self.require(v.as_ref())?);
        }
        idx.sort_unstable();
        idx.dedup();
        Ok(self.induced_by_indices(&idx))
    }

    /// Subgraph induced by vertex indices. `idx` must be ascending and
    /// duplicate free.
    pub fn induced_by_indices(&self, idx: &[usize]) -> Graph {
        let mut g = Graph::with_names(idx.iter().map(|&i| self.names[i].clone()).collect());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                if self.has_edge_idx(i, j) {
                    g.set_edge(a, b);
                }
            }
        }
        g.rebuild_lists();
        g
    }

    /// Same vertices, edges `{(u, v) : u ≠ v, (u, v) ∉ E}`. Never has loops.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::with_names(self.names.clone());
        for i in 0..self.len() {
            for j in 0..self.len() {
                if i != j && !self.has_edge_idx(i, j) {
                    g.set_edge(i, j);
                }
            }
        }
        g.rebuild_lists();
        g
    }

    /// Copy of the graph with every vertex renamed by `f`. `f` must be
    /// injective on the vertex set.
    pub fn relabel(&self, mut f: impl FnMut(&Name) -> Name) -> Graph {
        let renamed: Vec<Name> = self.names.iter().map(&mut f).collect();
        let edges: Vec<(Name, Name)> = self
            .edge_indices()
            .map(|(i, j)| (renamed[i].clone(), renamed[j].clone()))
            .collect();
        let g = Graph::new(renamed.iter().cloned(), edges).expect("renamed edges stay inside the renamed vertex set");
        assert_eq!(g.len(), self.len(), "relabel function is not injective");
        g
    }

    /// Disjoint union. Component `k`'s vertex `v` becomes `k:v`.
    pub fn disjoint_union(graphs: &[Graph]) -> Graph {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for (k, g) in graphs.iter().enumerate() {
            let tag = |v: &Name| Name::new(format!("{k}:{v}"));
            vertices.extend(g.names.iter().map(tag));
            edges.extend(g.edges().map(|(a, b)| (tag(a), tag(b))));
        }
        Graph::new(vertices, edges).expect("component edges stay inside their component")
    }

    /// Direct (categorical) product of a finite family of graphs.
    ///
    /// Vertices are coordinate tuples named `(a,b,…)`; there is an edge
    /// between two tuples iff there is one in every coordinate. The empty
    /// family gives the one-vertex graph `()` with a loop.
    pub fn direct_product(graphs: &[&Graph]) -> Graph {
        let (g, _) = product::product_with_coords(graphs);
        g
    }

    /// `G` extended by a fresh vertex `⊥` with an edge from `⊥` to every
    /// vertex, itself included. Returns the graph and the name used for `⊥`.
    ///
    /// `⊥` is spelled [`BOTTOM`] unless the graph already uses that name, in
    /// which case primes are appended until the name is fresh.
    pub fn pointed(&self) -> (Graph, Name) {
        let mut bottom = BOTTOM.to_string();
        while self.contains(&bottom) {
            bottom.push('\'');
        }
        let bottom = Name::new(bottom);
        let mut vertices = self.names.clone();
        vertices.push(bottom.clone());
        let mut edges: Vec<(Name, Name)> =
            self.edges().map(|(a, b)| (a.clone(), b.clone())).collect();
        edges.extend(vertices.iter().map(|v| (bottom.clone(), v.clone())));
        let g = Graph::new(vertices, edges).expect("pointed extension is closed");
        (g, bottom)
    }

    /// Strongly connected components, each ascending, ordered by least member.
    pub fn sccs(&self) -> Vec<Vec<Name>> {
        self.scc_indices()
            .into_iter()
            .map(|c| c.into_iter().map(|i| self.names[i].clone()).collect())
            .collect()
    }

    /// Components with no edge entering them from outside.
    pub fn sources(&self) -> Vec<Vec<Name>> {
        self.source_indices()
            .into_iter()
            .map(|c| c.into_iter().map(|i| self.names[i].clone()).collect())
            .collect()
    }

    /// Least vertex of every source component, ascending.
    pub fn transversal(&self) -> Vec<Name> {
        self.source_indices()
            .into_iter()
            .map(|c| self.names[c[0]].clone())
            .collect()
    }

    /// Degree-multiset pruning followed by a bijective strong homomorphism
    /// search. Returns the witness `g → h` on success.
    pub fn isomorphism<'a>(&'a self, other: &'a Graph) -> Option<VertexMap<'a>> {
        if self.len() != other.len() || self.edge_count() != other.edge_count() {
            return None;
        }
        let profile = |g: &Graph| {
            let mut d: Vec<(usize, usize, bool)> = (0..g.len())
                .map(|i| (g.out[i].len(), g.inc[i].len(), g.has_loop(i)))
                .collect();
            d.sort_unstable();
            d
        };
        if profile(self) != profile(other) {
            return None;
        }
        let constraints = Constraints {
            injective: true,
            ..Constraints::default()
        };
        enumerate_homomorphisms(self, other, true, &constraints)
            .ok()?
            .next()
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.isomorphism(other).is_some()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.names)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn g0() -> Graph {
        Graph::from_indices(2, &[(0, 1), (1, 0), (1, 1)])
    }

    fn k3() -> Graph {
        Graph::from_fn(3, |i, j| i != j)
    }

    fn names(v: &[&str]) -> Vec<Name> {
        v.iter().map(|s| Name::from(*s)).collect()
    }

    #[test]
    fn new_rejects_dangling_edges() {
        let err = Graph::new(["a"], [("a", "b")]).unwrap_err();
        assert!(matches!(err, Error::DanglingEdge(_, _)));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(["a", "b"], [("a", "b"), ("a", "b")]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn reach_on_path_and_g0() {
        let path = Graph::from_indices(3, &[(0, 1), (1, 2)]);
        assert_eq!(path.reach("0").unwrap(), names(&["0", "1", "2"]));
        assert_eq!(g0().reach("0").unwrap(), names(&["0", "1"]));
        let iso = Graph::from_indices(2, &[(1, 1)]);
        assert_eq!(iso.reach("0").unwrap(), names(&["0"]));
        assert!(matches!(path.reach("7"), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn induced_subgraph_examples() {
        let e = k3().induced_subgraph(["0", "1"]).unwrap();
        assert_eq!(e, Graph::from_indices(2, &[(0, 1), (1, 0)]));
        let l = g0().induced_subgraph(["1"]).unwrap();
        assert_eq!(l, Graph::new(["1"], [("1", "1")]).unwrap());
        assert!(k3().induced_subgraph(Vec::<&str>::new()).unwrap().is_empty());
        assert!(k3().induced_subgraph(["0", "9"]).is_err());
    }

    #[test]
    fn disjoint_union_counts() {
        let u = Graph::disjoint_union(&[g0(), g0()]);
        assert_eq!(u.len(), 4);
        assert_eq!(u.edge_count(), 6);
        assert!(Graph::disjoint_union(&[]).is_empty());
        assert!(Graph::disjoint_union(&[g0()]).is_isomorphic(&g0()));
        for k in 0..2 {
            let part = u
                .induced_subgraph([format!("{k}:0"), format!("{k}:1")])
                .unwrap();
            assert!(part.is_isomorphic(&g0()));
        }
    }

    #[test]
    fn product_examples() {
        let dot = Graph::new(["v"], [("v", "v")]).unwrap();
        let p = Graph::direct_product(&[&dot, &dot]);
        assert_eq!(p.len(), 1);
        assert_eq!(p.edge_count(), 1);

        let empty_family = Graph::direct_product(&[]);
        assert_eq!(empty_family.len(), 1);
        assert!(empty_family.has_loop(0));

        let edgeless = Graph::from_indices(2, &[]);
        assert_eq!(Graph::direct_product(&[&g0(), &edgeless]).edge_count(), 0);
    }

    #[test]
    fn g0_squared_matches_coordinatewise_enumeration() {
        let g = g0();
        let p = Graph::direct_product(&[&g, &g]);
        assert_eq!(p.len(), 4);
        let mut expected = 0;
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        let e = g.has_edge_idx(a, c) && g.has_edge_idx(b, d);
                        let from = format!("({a},{b})");
                        let to = format!("({c},{d})");
                        assert_eq!(p.has_edge(&from, &to), e, "{from} -> {to}");
                        expected += e as usize;
                    }
                }
            }
        }
        assert_eq!(p.edge_count(), expected);
        assert!(p.has_edge("(1,1)", "(1,1)"));
    }

    #[test]
    fn pointed_examples() {
        let (p, bot) = Graph::empty().pointed();
        assert_eq!(p.len(), 1);
        assert!(p.has_edge(bot.as_str(), bot.as_str()));

        let (p, bot) = g0().pointed();
        assert_eq!(p.len(), 3);
        assert_eq!(p.edge_count(), 6);
        for v in ["0", "1", bot.as_str()] {
            assert!(p.has_edge(bot.as_str(), v));
        }

        let (p, _) = Graph::from_indices(4, &[]).pointed();
        assert_eq!((p.len(), p.edge_count()), (5, 5));
    }

    #[test]
    fn pointed_avoids_existing_bottom_name() {
        let g = Graph::new([BOTTOM], Vec::<(&str, &str)>::new()).unwrap();
        let (p, bot) = g.pointed();
        assert_ne!(bot.as_str(), BOTTOM);
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn sources_and_transversals() {
        let path = Graph::from_indices(3, &[(0, 1), (1, 2)]);
        assert_eq!(path.sources(), vec![names(&["0"])]);
        assert_eq!(path.transversal(), names(&["0"]));

        let cycle = Graph::from_indices(3, &[(1, 2), (2, 0), (0, 1)]);
        assert_eq!(cycle.sccs(), vec![names(&["0", "1", "2"])]);
        assert_eq!(cycle.transversal(), names(&["0"]));

        let loops = Graph::new(["u", "v"], [("u", "u"), ("v", "v")]).unwrap();
        assert_eq!(loops.transversal(), names(&["u", "v"]));
    }

    #[test]
    fn complement_examples() {
        let c5 = Graph::from_fn(5, |i, j| (i + 1) % 5 == j || (j + 1) % 5 == i);
        assert!(c5.complement().is_isomorphic(&c5));
        assert_eq!(k3().complement().edge_count(), 0);
        assert_eq!(Graph::from_indices(3, &[]).complement(), k3());
        let looped = Graph::from_indices(1, &[(0, 0)]);
        assert_eq!(looped.complement().edge_count(), 0);
    }

    #[test]
    fn isomorphism_examples() {
        let g = g0();
        let w = g.isomorphism(&g).unwrap();
        assert_eq!(w.images(), &[0, 1]);
        let c3 = Graph::from_indices(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(!k3().is_isomorphic(&c3));
        let relabeled = g.relabel(|v| Name::new(format!("v{v}")));
        assert!(relabeled.is_isomorphic(&g));
        let flipped = Graph::from_indices(2, &[(0, 1), (1, 0), (0, 0)]);
        let w = flipped.isomorphism(&g).unwrap();
        assert_eq!(w.images(), &[1, 0]);
    }
}
