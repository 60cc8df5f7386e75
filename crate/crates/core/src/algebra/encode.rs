//! Graphs written as sets of identities, with every vertex `a` doubling as
//! the variable `x_a`.

use super::Identity;
use crate::graph::Graph;
use crate::term::Term;

fn pair_identity(g: &Graph, a: usize, b: usize) -> Identity {
    let x = Term::Var(g.name(a).clone());
    let y = Term::Var(g.name(b).clone());
    let rhs = if g.has_edge_idx(a, b) { x.clone() } else { Term::Inf };
    Identity::new(Term::app(x, y), rhs)
}

fn pairs(g: &Graph) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..g.len()).flat_map(move |a| (0..g.len()).map(move |b| (a, b)))
}

/// `{x_a x_b ≈ x_a : (a, b) ∈ E}` in edge order.
pub fn gamma_e(g: &Graph) -> Vec<Identity> {
    pairs(g)
        .filter(|&(a, b)| g.has_edge_idx(a, b))
        .map(|(a, b)| pair_identity(g, a, b))
        .collect()
}

/// `{x_a x_b ≈ ∞ : (a, b) ∉ E}` in pair order.
pub fn gamma_n(g: &Graph) -> Vec<Identity> {
    pairs(g)
        .filter(|&(a, b)| !g.has_edge_idx(a, b))
        .map(|(a, b)| pair_identity(g, a, b))
        .collect()
}

/// `Σ(G) = Γ_e(G) ∪ Γ_n(G)`, one identity per ordered pair of vertices, in
/// pair order.
pub fn sigma(g: &Graph) -> Vec<Identity> {
    pairs(g).map(|(a, b)| pair_identity(g, a, b)).collect()
}
