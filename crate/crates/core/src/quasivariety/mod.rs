//! Membership of a finite graph in the quasivariety generated by a finite
//! class of graphs.
//!
//! `W` belongs to the class of finite models of the quasi-identities of `K`
//! exactly when
//!
//! * (a) for every vertex `a`, some strong homomorphism maps `reach(a)` into a
//!   member of `K`, and
//! * (b) for every pair `a ≠ a'` with `reach(a) = reach(a')`, some strong
//!   homomorphism of `reach(a)` into a member of `K` separates `a` and `a'`.
//!
//! When (a) or (b) fails, [`witness_implication`] produces a quasi-identity
//! true in `K` and false in `W`. When both hold, [`build_sps_embedding`]
//! places `W` inside a pointed product of members of `K`.

mod sps;

use serde::{Deserialize, Serialize};

use crate::algebra::{sigma, Assignment, Checker, Element, Identity, Implication};
use crate::error::{Error, Result};
use crate::graph::{Graph, HomSearch, Mapping};
use crate::name::Name;
use crate::term::Term;

pub use sps::{build_sps_embedding, verify_sps, IndexSite, SpsCondition, SpsEmbedding, SpsViolation};

/// A strong homomorphism of `reach(vertex)` into `K[factor]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexWitness {
    pub vertex: Name,
    pub factor: usize,
    pub map: Mapping,
}

/// A strong homomorphism of `reach(pair.0) = reach(pair.1)` into
/// `K[factor]` sending the two vertices apart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairWitness {
    pub pair: (Name, Name),
    pub factor: usize,
    pub map: Mapping,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "condition")]
pub enum Failure {
    /// Condition (a): `reach(vertex)` has no strong homomorphism into `K`.
    Unmappable { vertex: Name },
    /// Condition (b): every strong homomorphism of the common reach set into
    /// `K` identifies the pair. `maps` lists them all as `(factor, map)`.
    Inseparable { pair: (Name, Name), maps: Vec<(usize, Mapping)> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipEvidence {
    pub verdict: bool,
    /// Maps found for condition (a), in vertex order, up to the failure.
    pub vertex_maps: Vec<VertexWitness>,
    /// Maps found for condition (b), in pair order, up to the failure.
    pub pair_maps: Vec<PairWitness>,
    pub failure: Option<Failure>,
}

/// Reach sets of every vertex, as ascending index lists.
fn reach_table(w: &Graph) -> Vec<Vec<usize>> {
    (0..w.len()).map(|a| w.reach_idx(a)).collect()
}

fn to_mapping(dom: &Graph, cod: &Graph, images: &[usize]) -> Mapping {
    dom.vertices()
        .iter()
        .zip(images)
        .map(|(v, &c)| (v.clone(), cod.name(c).clone()))
        .collect()
}

/// Decides membership of `w` and collects the evidence.
///
/// The search is deterministic: vertices and pairs are visited in
/// identifier order, members of `k` in list order, and the first map found
/// by the homomorphism search is kept.
pub fn membership(w: &Graph, k: &[Graph]) -> MembershipEvidence {
    let reach = reach_table(w);
    let mut ev = MembershipEvidence {
        verdict: false,
        vertex_maps: Vec::new(),
        pair_maps: Vec::new(),
        failure: None,
    };
    for a in 0..w.len() {
        let sub = w.induced_by_indices(&reach[a]);
        let found = k
            .iter()
            .enumerate()
            .find_map(|(f, g)| HomSearch::new(&sub, g, true).first().map(|im| (f, to_mapping(&sub, g, &im))));
        match found {
            Some((factor, map)) => ev.vertex_maps.push(VertexWitness { vertex: w.name(a).clone(), factor, map }),
            None => {
                ev.failure = Some(Failure::Unmappable { vertex: w.name(a).clone() });
                return ev;
            }
        }
    }
    for a in 0..w.len() {
        for b in a + 1..w.len() {
            if reach[a] != reach[b] {
                continue;
            }
            let sub = w.induced_by_indices(&reach[a]);
            let la = reach[a].binary_search(&a).expect("a reaches itself");
            let lb = reach[a].binary_search(&b).expect("b is in reach(a)");
            let pair = (w.name(a).clone(), w.name(b).clone());
            let found = k.iter().enumerate().find_map(|(f, g)| {
                let mut s = HomSearch::new(&sub, g, true);
                s.distinct = Some((la, lb));
                s.first().map(|im| (f, to_mapping(&sub, g, &im)))
            });
            match found {
                Some((factor, map)) => ev.pair_maps.push(PairWitness { pair, factor, map }),
                None => {
                    let mut maps = Vec::new();
                    for (f, g) in k.iter().enumerate() {
                        let mut it = HomSearch::new(&sub, g, true).into_iter();
                        while let Some(im) = it.next_images() {
                            maps.push((f, to_mapping(&sub, g, &im)));
                        }
                    }
                    ev.failure = Some(Failure::Inseparable { pair, maps });
                    return ev;
                }
            }
        }
    }
    ev.verdict = true;
    ev
}

/// A quasi-identity satisfied by every member of `k` and violated by `w`.
///
/// The premise is `Σ(reach(a))` at the failing site; the consequence is
/// `x_a ≈ ∞` for a failure of (a) and `x_a ≈ x_a'` for a failure of (b).
/// Variables are the vertex names of `w`; use
/// [`Implication::standardized`] for `x1, x2, …`. Both claims are checked
/// before the implication is returned.
pub fn witness_implication(w: &Graph, k: &[Graph]) -> Result<Implication> {
    let ev = membership(w, k);
    let failure = ev
        .failure
        .ok_or_else(|| Error::Contract("witness_implication needs a non-member".into()))?;
    let (base, consequence) = match &failure {
        Failure::Unmappable { vertex } => (vertex.clone(), Identity::new(Term::Var(vertex.clone()), Term::Inf)),
        Failure::Inseparable { pair: (a, b), .. } => {
            (a.clone(), Identity::new(Term::Var(a.clone()), Term::Var(b.clone())))
        }
    };
    let sub = w.reach_subgraph(base.as_str())?;
    let imp = Implication::new(sigma(&sub), consequence);

    let identity: Assignment = sub
        .vertices()
        .iter()
        .map(|v| (v.clone(), Element::Vertex(v.clone())))
        .collect();
    if Checker::new(w).holds_under(&imp, &identity)? {
        return Err(Error::Internal(format!("witness `{imp}` is not violated by the identity assignment")));
    }
    for (f, g) in k.iter().enumerate() {
        if !Checker::new(g).force(true).implication(&imp)?.holds() {
            return Err(Error::Internal(format!("witness `{imp}` fails in member {f} of the class")));
        }
    }
    Ok(imp)
}

/// Membership of every induced subgraph of `w`. Exponential in `|V(w)|`;
/// meant as a consistency probe on small graphs.
pub fn membership_hereditary_check(w: &Graph, k: &[Graph]) -> bool {
    let n = w.len();
    (0u64..1 << n).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        membership(&w.induced_by_indices(&idx), k).verdict
    })
}
