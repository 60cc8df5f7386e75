//! Embeddings of members into strong pointed subproducts.
//!
//! For a member `W` of the quasivariety of `K`, every vertex `a` and every
//! pair `{a, a'}` with equal reach sets indexes one factor `G_i ∈ K`. The
//! coordinate `φ̃_i(x)` is the image of `x` under the stored strong
//! homomorphism when `x` lies in the reach set of the index's base vertex,
//! and `⊥` otherwise. The tuples `ã = (φ̃_i(a))_i` induce a subgraph `W̃` of
//! the pointed product `∏ G_i^⊥`, and `a ↦ ã` is an isomorphism.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::membership;
use crate::error::{Error, Result};
use crate::graph::{Graph, Mapping, ProductVertex, BOTTOM};
use crate::name::Name;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexSite {
    Vertex(Name),
    /// An unordered pair, stored least vertex first. The least vertex is the
    /// base whose reach set carries the coordinate map.
    Pair(Name, Name),
}

impl IndexSite {
    pub fn base(&self) -> &Name {
        match self {
            IndexSite::Vertex(a) | IndexSite::Pair(a, _) => a,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpsEmbedding {
    /// The embedded graph `W`.
    pub source: Graph,
    /// The index set `I`.
    pub indices: Vec<IndexSite>,
    /// Position in `K` of the factor used by each index.
    pub factors: Vec<usize>,
    /// The factor graphs themselves, one per index.
    pub factor_graphs: Vec<Graph>,
    /// `a ↦ ã` for every vertex of `W`.
    pub coordinates: BTreeMap<Name, ProductVertex>,
    /// `W̃`, with vertices named by their tuples.
    pub image: Graph,
}

/// The pointed-factor edge relation: `⊥` points at everything, nothing
/// else points at `⊥`.
fn pointed_edge(g: &Graph, u: Option<&Name>, v: Option<&Name>) -> bool {
    match (u, v) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(a), Some(b)) => g.has_edge(a.as_str(), b.as_str()),
    }
}

fn coordinatewise_edge(factors: &[Graph], a: &ProductVertex, b: &ProductVertex) -> bool {
    factors
        .iter()
        .zip(a.coords().iter().zip(b.coords()))
        .all(|(g, (x, y))| pointed_edge(g, x.as_ref(), y.as_ref()))
}

impl SpsEmbedding {
    /// Assembles an embedding from its coordinate data, computing `W̃` as
    /// the subgraph of the pointed product induced by the tuples.
    pub fn from_parts(
        source: Graph,
        indices: Vec<IndexSite>,
        factors: Vec<usize>,
        factor_graphs: Vec<Graph>,
        coordinates: BTreeMap<Name, ProductVertex>,
    ) -> Result<SpsEmbedding> {
        if indices.len() != factors.len() || indices.len() != factor_graphs.len() {
            return Err(Error::Contract("one factor per index is required".into()));
        }
        for (v, t) in &coordinates {
            if t.coords().len() != indices.len() {
                return Err(Error::Contract(format!("tuple of `{v}` has the wrong length")));
            }
        }
        let tuples: Vec<&ProductVertex> = coordinates.values().collect();
        let names: Vec<Name> = tuples.iter().map(|t| t.tuple_name()).collect();
        let mut edges = Vec::new();
        for (a, ta) in tuples.iter().enumerate() {
            for (b, tb) in tuples.iter().enumerate() {
                if coordinatewise_edge(&factor_graphs, ta, tb) {
                    edges.push((names[a].clone(), names[b].clone()));
                }
            }
        }
        let image = Graph::new(names, edges)?;
        Ok(SpsEmbedding { source, indices, factors, factor_graphs, coordinates, image })
    }

    /// The isomorphism `W → W̃`, `a ↦ ã`.
    pub fn iso(&self) -> Mapping {
        self.coordinates
            .iter()
            .map(|(a, t)| (a.clone(), t.tuple_name()))
            .collect()
    }

    pub fn is_valid(&self) -> bool {
        verify_sps(self).is_ok()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("embedding serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<SpsEmbedding> {
        Ok(serde_json::from_str(s)?)
    }
}

/// Builds the embedding of a member `w` of the quasivariety of `k`.
pub fn build_sps_embedding(w: &Graph, k: &[Graph]) -> Result<SpsEmbedding> {
    for g in k {
        if g.contains(BOTTOM) {
            return Err(Error::ReservedName(BOTTOM.into()));
        }
    }
    let ev = membership(w, k);
    if !ev.verdict {
        return Err(Error::Contract("build_sps_embedding needs a member".into()));
    }
    let mut indices = Vec::new();
    let mut factors = Vec::new();
    let mut maps: Vec<&Mapping> = Vec::new();
    for vw in &ev.vertex_maps {
        indices.push(IndexSite::Vertex(vw.vertex.clone()));
        factors.push(vw.factor);
        maps.push(&vw.map);
    }
    for pw in &ev.pair_maps {
        indices.push(IndexSite::Pair(pw.pair.0.clone(), pw.pair.1.clone()));
        factors.push(pw.factor);
        maps.push(&pw.map);
    }
    // each map is defined exactly on the reach set of its index's base
    let coordinates: BTreeMap<Name, ProductVertex> = w
        .vertices()
        .iter()
        .map(|x| (x.clone(), ProductVertex(maps.iter().map(|m| m.get(x).cloned()).collect())))
        .collect();
    let factor_graphs = factors.iter().map(|&f| k[f].clone()).collect();
    let e = SpsEmbedding::from_parts(w.clone(), indices, factors, factor_graphs, coordinates)?;
    verify_sps(&e).map_err(|v| Error::Internal(format!("constructed embedding is invalid: {v}")))?;
    Ok(e)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpsCondition {
    /// `W̃` is the subgraph of the pointed product induced by its tuples.
    Induced,
    /// Every tuple has a coordinate other than `⊥`.
    Support,
    /// Projections restricted to reach sets are strong homomorphisms.
    Projection,
    /// `a ↦ ã` is an isomorphism `W → W̃`.
    Isomorphism,
}

impl fmt::Display for SpsCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpsCondition::Induced => "induced subgraph",
            SpsCondition::Support => "nonempty support",
            SpsCondition::Projection => "strong projection",
            SpsCondition::Isomorphism => "isomorphism",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpsViolation {
    pub condition: SpsCondition,
    pub detail: String,
}

impl fmt::Display for SpsViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated: {}", self.condition, self.detail)
    }
}

fn violation(condition: SpsCondition, detail: String) -> Result<(), SpsViolation> {
    Err(SpsViolation { condition, detail })
}

/// Checks the three defining conditions of a strong pointed subproduct and
/// the isomorphism, reporting the first that fails.
pub fn verify_sps(e: &SpsEmbedding) -> Result<(), SpsViolation> {
    use SpsCondition::*;
    let n = e.indices.len();
    if e.factor_graphs.len() != n {
        return violation(Induced, "factor list and index list differ in length".into());
    }

    // (1) tuples are points of the product and W̃ carries exactly the
    // coordinatewise edges
    let mut tuple_of: BTreeMap<Name, &ProductVertex> = BTreeMap::new();
    for (a, t) in &e.coordinates {
        if t.coords().len() != n {
            return violation(Induced, format!("tuple of `{a}` has {} coordinates", t.coords().len()));
        }
        for (i, c) in t.coords().iter().enumerate() {
            if let Some(c) = c {
                if !e.factor_graphs[i].contains(c.as_str()) {
                    return violation(Induced, format!("coordinate {i} of `{a}` is not a vertex of its factor"));
                }
            }
        }
        if tuple_of.insert(t.tuple_name(), t).is_some() {
            return violation(Isomorphism, format!("two vertices share the tuple {t}"));
        }
    }
    if tuple_of.len() != e.image.len() || !tuple_of.keys().all(|v| e.image.contains(v.as_str())) {
        return violation(Induced, "image vertices are not the tuples".into());
    }
    let tuples: Vec<&ProductVertex> = e.image.vertices().iter().map(|v| tuple_of[v]).collect();
    for (a, ta) in tuples.iter().enumerate() {
        for (b, tb) in tuples.iter().enumerate() {
            if e.image.has_edge_idx(a, b) != coordinatewise_edge(&e.factor_graphs, ta, tb) {
                return violation(Induced, format!("pair ({ta}, {tb}) disagrees with the pointed product"));
            }
        }
    }

    // (2)
    for t in &tuples {
        if t.support().is_empty() {
            return violation(Support, format!("{t} has empty support"));
        }
    }

    // (3)
    for (a, ta) in tuples.iter().enumerate() {
        let reach = e.image.reach_idx(a);
        for k in ta.support() {
            let g = &e.factor_graphs[k];
            let mut images = Vec::with_capacity(reach.len());
            for &b in &reach {
                match &tuples[b].coords()[k] {
                    Some(c) => images.push(g.index_of(c.as_str()).expect("checked above")),
                    None => {
                        return violation(
                            Projection,
                            format!("projection {k} from {ta} meets ⊥ at {}", tuples[b]),
                        )
                    }
                }
            }
            let dom = e.image.induced_by_indices(&reach);
            let strong = crate::graph::VertexMap::classify(&dom, g, images).is_some_and(|m| m.is_strong());
            if !strong {
                return violation(Projection, format!("projection {k} on reach({ta}) is not strong"));
            }
        }
    }

    // W ≅ W̃ through a ↦ ã
    let w = &e.source;
    if w.len() != e.coordinates.len() || !w.vertices().iter().all(|v| e.coordinates.contains_key(v)) {
        return violation(Isomorphism, "coordinate table does not cover the source".into());
    }
    let img = |v: &Name| e.image.index_of(e.coordinates[v].tuple_name().as_str()).expect("tuple is a vertex");
    let images: Vec<usize> = w.vertices().iter().map(img).collect();
    let iso = crate::graph::VertexMap::classify(w, &e.image, images).is_some_and(|m| m.is_strong() && m.is_injective());
    if !iso {
        return violation(Isomorphism, "a ↦ ã does not preserve edges and non-edges".into());
    }
    Ok(())
}
