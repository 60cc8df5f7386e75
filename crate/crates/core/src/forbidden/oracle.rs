//! Direct semantic checks used to validate the implication families.

use std::collections::VecDeque;

use super::{path_vertex, xi_implication, PhiAssignment, ROOT};
use crate::algebra::{Assignment, Element, Implication};
use crate::error::{Error, Result};
use crate::graph::{Graph, HomSearch};
use crate::name::Name;
use crate::term::root_index;

/// [`forbidden_membership`] refuses graphs `H` above this size.
pub const FORBIDDEN_GUARD_VERTICES: usize = 8;

/// True iff no vertex subset of `h` induces a term graph that receives a
/// strong homomorphism from `g`. Enumerates all subsets of `V(h)`.
pub fn forbidden_membership(g: &Graph, h: &Graph) -> Result<bool> {
    forbidden_membership_with(g, h, false)
}

pub fn forbidden_membership_with(g: &Graph, h: &Graph, force: bool) -> Result<bool> {
    if !force && h.len() > FORBIDDEN_GUARD_VERTICES {
        return Err(Error::Capacity(format!(
            "{} vertices exceed the subset-enumeration limit of {FORBIDDEN_GUARD_VERTICES}",
            h.len()
        )));
    }
    let n = h.len();
    for mask in 1u64..1 << n {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let sub = h.induced_by_indices(&idx);
        if root_index(&sub).is_some() && HomSearch::new(g, &sub, true).first().is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Breadth-first predecessor table from `src`.
fn bfs_parents(h: &Graph, src: usize) -> Vec<Option<usize>> {
    let mut parent = vec![None; h.len()];
    parent[src] = Some(src);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for &w in h.out_neighbors(u) {
            if parent[w].is_none() {
                parent[w] = Some(u);
                queue.push_back(w);
            }
        }
    }
    parent
}

/// Builds a member of `Ξ_G` violated by `h` from a strong homomorphism of
/// `g` into `h` whose image lies in the reach set of one vertex.
///
/// The root goes to that vertex `v`; every transversal vertex `a` gets
/// `φ(a)` equal to the distance from `v` to `h(a)`, and the path vertices go
/// along a shortest path. Returns `φ`, the implication, and the violating
/// assignment, or `None` when no such homomorphism exists.
pub fn violating_phi(g: &Graph, h: &Graph) -> Result<Option<(PhiAssignment, Implication, Assignment)>> {
    let s = g.transversal();
    for v in 0..h.len() {
        let reach = h.reach_idx(v);
        let mut mask = vec![false; h.len()];
        for &i in &reach {
            mask[i] = true;
        }
        let Some(images) = HomSearch::new(g, h, true).within_mask(&mask).first() else {
            continue;
        };
        let parent = bfs_parents(h, v);
        let mut phi = Vec::new();
        let mut values = Assignment::new();
        let element = |i: usize| Element::Vertex(h.name(i).clone());
        values.insert(Name::from(ROOT), element(v));
        for (b, &img) in images.iter().enumerate() {
            values.insert(g.name(b).clone(), element(img));
        }
        for a in &s {
            let target = images[g.index_of(a.as_str()).expect("transversal vertex")];
            let mut path = vec![target];
            while *path.last().unwrap() != v {
                let p = parent[*path.last().unwrap()].expect("target is reachable from v");
                path.push(p);
            }
            path.reverse();
            let len = path.len() - 1;
            for (j, &p) in path.iter().enumerate().take(len).skip(1) {
                values.insert(path_vertex(a, j), element(p));
            }
            phi.push((a.clone(), len));
        }
        let phi = PhiAssignment::from_pairs(phi);
        let imp = xi_implication(g, &phi)?;
        return Ok(Some((phi, imp, values)));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Checker;

    fn g0() -> Graph {
        Graph::from_indices(2, &[(0, 1), (1, 0), (1, 1)])
    }

    fn k3() -> Graph {
        Graph::from_fn(3, |i, j| i != j)
    }

    #[test]
    fn oracle_examples() {
        assert!(forbidden_membership(&k3(), &g0()).unwrap());
        assert!(!forbidden_membership(&k3(), &k3()).unwrap());
        let looped = Graph::from_indices(1, &[(0, 0)]);
        assert!(forbidden_membership(&looped, &Graph::from_fn(3, |i, j| i < j)).unwrap());
        assert!(!forbidden_membership(&looped, &g0()).unwrap());
        let big = Graph::from_indices(9, &[]);
        assert!(forbidden_membership(&looped, &big).unwrap_err().is_capacity());
        assert!(forbidden_membership_with(&looped, &big, true).unwrap());
    }

    #[test]
    fn constructed_violations_are_violations() {
        let graphs = [
            g0(),
            k3(),
            Graph::from_indices(3, &[(0, 1), (1, 2)]),
            Graph::from_indices(3, &[(0, 1), (2, 1), (1, 1)]),
            Graph::from_indices(2, &[(0, 1)]),
            Graph::from_indices(1, &[(0, 0)]),
        ];
        for g in &graphs {
            for h in &graphs {
                let member = forbidden_membership(g, h).unwrap();
                match violating_phi(g, h).unwrap() {
                    None => assert!(member),
                    Some((phi, imp, values)) => {
                        assert!(!member);
                        assert!(phi.iter().all(|(_, v)| v < h.len().max(1)));
                        assert!(!Checker::new(h).holds_under(&imp, &values).unwrap());
                    }
                }
            }
        }
    }
}
