//! The Berge condition as implications: loopless, undirected, and no
//! induced odd hole or odd antihole of length at least five.

use crate::algebra::{identity_as_implication, Identity, Implication};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::term::{graph_to_term, Term};

use super::term_graph_implication;

/// The undirected loopless cycle on `0, …, n - 1`.
pub fn odd_cycle(n: usize) -> Graph {
    Graph::from_fn(n, |i, j| (i + 1) % n == j || (j + 1) % n == i)
}

/// The loop axiom `x0 x0 ≈ ∞`, the symmetry axiom `x0 (x1 x0) ≈ x0 x1`, and
/// the term-graph implications of `C_{2k+1}` and its complement for
/// `2 ≤ k ≤ k_max`.
pub fn perfect_graph_axioms(k_max: usize) -> Result<Vec<Implication>> {
    if k_max < 2 {
        return Err(Error::Contract(format!("k_max must be at least 2, got {k_max}")));
    }
    let x0 = || Term::var("x0");
    let x1 = || Term::var("x1");
    let mut out = vec![
        identity_as_implication(&Identity::new(Term::app(x0(), x0()), Term::Inf)),
        identity_as_implication(&Identity::new(
            Term::app(x0(), Term::app(x1(), x0())),
            Term::app(x0(), x1()),
        )),
    ];
    for k in 2..=k_max {
        let c = odd_cycle(2 * k + 1);
        for g in [c.clone(), c.complement()] {
            let t = graph_to_term(&g, "0")?;
            out.push(term_graph_implication(&t)?);
        }
    }
    Ok(out)
}
