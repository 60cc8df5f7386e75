//! Implication sets describing the graphs into which a fixed finite graph
//! `G` has no strong homomorphism onto an induced term subgraph.
//!
//! Fix the canonical source transversal `S` of `G` (least vertex of each
//! strongly connected component without incoming edges). For
//! `φ : S → ℕ`, the tree `T_φ` has a root `r` and a directed path of length
//! `φ(a)` from `r` to every `a` with `φ(a) > 0`. The implication
//!
//! ```text
//! Σ(G) ∪ Γ_e(T_φ) ∪ {x_a ≈ x_r : φ(a) = 0}  →  x_r ≈ ∞
//! ```
//!
//! says that no copy of `G` hangs off a root in the prescribed way. The
//! family over all `φ` is `Ξ_G`.
//!
//! Vertices introduced by `T_φ` are named `__r` and `__p_{a}_{j}`; names
//! beginning with `__` are reserved in forbidden graphs.

mod oracle;
mod perfect;

use std::collections::BTreeMap;

use crate::algebra::{gamma_e, sigma, Identity, Implication};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::name::Name;
use crate::term::{term_graph, Term};

pub use oracle::{forbidden_membership, forbidden_membership_with, violating_phi, FORBIDDEN_GUARD_VERTICES};
pub use perfect::{odd_cycle, perfect_graph_axioms};

/// Prefix reserved for vertices created by the construction.
pub const RESERVED_PREFIX: &str = "__";
/// Root of `T_φ` and `G_φ`.
pub const ROOT: &str = "__r";
/// Default cap on the size of [`xi_family`].
pub const XI_FAMILY_LIMIT: usize = 100_000;

/// Name of the `j`-th interior vertex on the path from the root to `a`.
pub fn path_vertex(a: &Name, j: usize) -> Name {
    Name::new(format!("{RESERVED_PREFIX}p_{a}_{j}"))
}

/// Path lengths `φ(a)` for the vertices of a transversal.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PhiAssignment {
    values: BTreeMap<Name, usize>,
}

impl PhiAssignment {
    pub fn new(values: BTreeMap<Name, usize>) -> Self {
        PhiAssignment { values }
    }

    pub fn constant(s: &[Name], value: usize) -> Self {
        PhiAssignment { values: s.iter().map(|a| (a.clone(), value)).collect() }
    }

    pub fn from_pairs<N: Into<Name>>(pairs: impl IntoIterator<Item = (N, usize)>) -> Self {
        PhiAssignment { values: pairs.into_iter().map(|(a, v)| (a.into(), v)).collect() }
    }

    pub fn get(&self, a: &str) -> Option<usize> {
        self.values.get(&Name::from(a)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Name, usize)> {
        self.values.iter().map(|(a, &v)| (a, v))
    }

    pub fn domain(&self) -> impl Iterator<Item = &Name> {
        self.values.keys()
    }

    /// `S⁰ = {a : φ(a) = 0}`.
    pub fn zeros(&self) -> Vec<Name> {
        self.iter().filter(|&(_, v)| v == 0).map(|(a, _)| a.clone()).collect()
    }

    /// `S⁺ = {a : φ(a) > 0}`.
    pub fn positives(&self) -> Vec<Name> {
        self.iter().filter(|&(_, v)| v > 0).map(|(a, _)| a.clone()).collect()
    }
}

fn check_reserved<'a>(names: impl IntoIterator<Item = &'a Name>) -> Result<()> {
    for v in names {
        if v.as_str().starts_with(RESERVED_PREFIX) {
            return Err(Error::ReservedName(v.to_string()));
        }
    }
    Ok(())
}

fn check_domain(s: &[Name], phi: &PhiAssignment) -> Result<()> {
    let mut want: Vec<&Name> = s.iter().collect();
    want.sort();
    want.dedup();
    let have: Vec<&Name> = phi.domain().collect();
    if want != have {
        return Err(Error::InvalidTransversal(format!(
            "φ is defined on {have:?} but the transversal is {want:?}"
        )));
    }
    Ok(())
}

/// `T_φ` and its root.
pub fn build_t_phi(s: &[Name], phi: &PhiAssignment) -> Result<(Graph, Name)> {
    check_reserved(s)?;
    check_domain(s, phi)?;
    let root = Name::from(ROOT);
    let mut vertices = vec![root.clone()];
    let mut edges = Vec::new();
    for (a, len) in phi.iter().filter(|&(_, v)| v > 0) {
        let mut prev = root.clone();
        for j in 1..len {
            let p = path_vertex(a, j);
            vertices.push(p.clone());
            edges.push((prev, p.clone()));
            prev = p;
        }
        vertices.push(a.clone());
        edges.push((prev, a.clone()));
    }
    Ok((Graph::new(vertices, edges)?, root))
}

/// Checks that `s` picks exactly one vertex from every source component.
pub fn check_transversal(g: &Graph, s: &[Name]) -> Result<()> {
    let sources = g.sources();
    let mut used = vec![false; sources.len()];
    for a in s {
        let k = sources
            .iter()
            .position(|c| c.contains(a))
            .ok_or_else(|| Error::InvalidTransversal(format!("`{a}` is not in a source component")))?;
        if std::mem::replace(&mut used[k], true) {
            return Err(Error::InvalidTransversal(format!("two vertices from the source component of `{a}`")));
        }
    }
    if let Some(k) = used.iter().position(|u| !u) {
        return Err(Error::InvalidTransversal(format!("source component of `{}` is missed", sources[k][0])));
    }
    Ok(())
}

/// `G_φ`: the union of `G` and `T_φ` with `r` and every vertex of `S⁰`
/// identified. Edges are carried through the identification, so a loop or
/// an edge between two glued vertices becomes a loop at `r`.
pub fn build_g_phi(g: &Graph, s: &[Name], phi: &PhiAssignment) -> Result<(Graph, Name)> {
    check_reserved(g.vertices())?;
    check_transversal(g, s)?;
    let (t, root) = build_t_phi(s, phi)?;
    let zeros = phi.zeros();
    let q = |v: &Name| if zeros.contains(v) { root.clone() } else { v.clone() };
    let vertices: Vec<Name> = g.vertices().iter().chain(t.vertices()).map(q).collect();
    let edges: Vec<(Name, Name)> = g
        .edges()
        .chain(t.edges())
        .map(|(u, v)| (q(u), q(v)))
        .collect();
    Ok((Graph::new(vertices, edges)?, root))
}

/// The member of `Ξ_G` for `φ`, over the canonical transversal of `g`.
pub fn xi_implication(g: &Graph, phi: &PhiAssignment) -> Result<Implication> {
    check_reserved(g.vertices())?;
    let s = g.transversal();
    let (t, root) = build_t_phi(&s, phi)?;
    let r = Term::Var(root);
    let mut premise = sigma(g);
    premise.extend(gamma_e(&t));
    premise.extend(phi.zeros().into_iter().map(|a| Identity::new(Term::Var(a), r.clone())));
    Ok(Implication::new(premise, Identity::new(r, Term::Inf)))
}

/// Number of `φ` with values in `0..=bound` on a transversal of size `s`,
/// or `None` on overflow.
fn family_size(s: usize, bound: usize) -> Option<usize> {
    (bound.checked_add(1)?).checked_pow(s.try_into().ok()?)
}

/// Every `φ : S → {0, …, bound}` over the canonical transversal, in
/// lexicographic order with the least transversal vertex varying slowest.
pub fn phi_assignments(g: &Graph, bound: usize, limit: usize) -> Result<Vec<PhiAssignment>> {
    let s = g.transversal();
    let size = family_size(s.len(), bound).filter(|&n| n <= limit).ok_or_else(|| {
        Error::Capacity(format!("(bound + 1)^|S| = {}^{} exceeds {limit}", bound + 1, s.len()))
    })?;
    let mut out = Vec::with_capacity(size);
    let mut vals = vec![0usize; s.len()];
    loop {
        out.push(PhiAssignment::new(s.iter().cloned().zip(vals.iter().copied()).collect()));
        let mut k = s.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if vals[k] < bound {
                vals[k] += 1;
                break;
            }
            vals[k] = 0;
        }
    }
}

/// `Ξ_G` truncated to `φ` with values at most `bound`, capped at
/// [`XI_FAMILY_LIMIT`] implications.
pub fn xi_family(g: &Graph, bound: usize) -> Result<Vec<Implication>> {
    xi_family_limited(g, bound, XI_FAMILY_LIMIT)
}

pub fn xi_family_limited(g: &Graph, bound: usize, limit: usize) -> Result<Vec<Implication>> {
    check_reserved(g.vertices())?;
    phi_assignments(g, bound, limit)?
        .iter()
        .map(|phi| xi_implication(g, phi))
        .collect()
}

/// `Σ(G(t)) → L(t) ≈ ∞`, violated by exactly the graphs that receive a
/// strong homomorphism from `G(t)`.
pub fn term_graph_implication(t: &Term) -> Result<Implication> {
    let tg = term_graph(t)?;
    Ok(Implication::new(sigma(&tg.graph), Identity::new(Term::Var(tg.root), Term::Inf)))
}
