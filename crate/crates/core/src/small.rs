//! Exhaustive enumeration of small digraphs and terms.
//!
//! Vertices of generated graphs are named `0, 1, …, n - 1`. A graph on `n`
//! vertices is encoded by the `n²`-bit adjacency code with bit `i·n + j`
//! set for the edge `(i, j)`.

use crate::graph::Graph;
use crate::name::Name;
use crate::term::Term;

/// Largest `n` accepted by the code-based functions (`n²` bits must fit).
pub const MAX_CODED_VERTICES: usize = 8;

pub fn from_code(n: usize, code: u64) -> Graph {
    Graph::from_fn(n, |i, j| code >> (i * n + j) & 1 == 1)
}

pub fn to_code(g: &Graph) -> u64 {
    let n = g.len();
    assert!(n <= MAX_CODED_VERTICES, "graph too large for an adjacency code");
    g.edge_indices().fold(0, |c, (i, j)| c | 1 << (i * n + j))
}

/// Every labeled digraph (loops allowed) on `n` vertices, by code.
pub fn digraphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 5, "2^(n²) graphs is too many beyond n = 5");
    (0..1u64 << (n * n)).map(move |code| from_code(n, code))
}

/// Every labeled digraph on at most `n` vertices, smallest first, starting
/// with the empty graph.
pub fn digraphs_up_to(n: usize) -> impl Iterator<Item = Graph> {
    (0..=n).flat_map(digraphs)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, p, out);
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
    heap(k - 1, p, out);
}

fn permuted_code(n: usize, code: u64, p: &[usize]) -> u64 {
    let mut out = 0;
    for i in 0..n {
        for j in 0..n {
            if code >> (i * n + j) & 1 == 1 {
                out |= 1 << (p[i] * n + p[j]);
            }
        }
    }
    out
}

/// The least adjacency code over all relabelings. Equal exactly for
/// isomorphic graphs of the same order.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.len();
    let code = to_code(g);
    permutations(n).iter().map(|p| permuted_code(n, code, p)).min().unwrap_or(0)
}

/// One graph per isomorphism class on `n` vertices: the one whose code is
/// canonical, in ascending code order.
pub fn iso_class_representatives(n: usize) -> Vec<Graph> {
    assert!(n <= 4, "class enumeration is exhaustive over 2^(n²) codes");
    let perms = permutations(n);
    (0..1u64 << (n * n))
        .filter(|&c| perms.iter().all(|p| permuted_code(n, c, p) >= c))
        .map(|c| from_code(n, c))
        .collect()
}

/// Class representatives for every order from 0 to `n`.
pub fn iso_class_representatives_up_to(n: usize) -> Vec<Graph> {
    (0..=n).flat_map(iso_class_representatives).collect()
}

/// All terms of depth at most `depth` (a leaf has depth 1) over the given
/// variables, plus `∞` as a leaf when `with_inf` is set. Ordered by depth,
/// then lexicographically by the pair of subterms.
pub fn terms_up_to_depth(vars: &[Name], depth: usize, with_inf: bool) -> Vec<Term> {
    if depth == 0 {
        return Vec::new();
    }
    let mut leaves: Vec<Term> = vars.iter().cloned().map(Term::Var).collect();
    if with_inf {
        leaves.push(Term::Inf);
    }
    let mut all = leaves;
    for _ in 1..depth {
        let prev = all.clone();
        let mut next: Vec<Term> = all.iter().filter(|t| t.depth() == 1).cloned().collect();
        for l in &prev {
            for r in &prev {
                next.push(Term::app(l.clone(), r.clone()));
            }
        }
        all = next;
    }
    all
}
