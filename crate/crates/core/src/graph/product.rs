use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Graph;
use crate::name::Name;

/// Spelling of the distinguished vertex `⊥` of pointed graphs and of `⊥`
/// coordinates in serialized product vertices.
pub const BOTTOM: &str = "_|_";

/// A vertex of a pointed product: one coordinate per factor, `None` for `⊥`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductVertex(pub Vec<Option<Name>>);

impl ProductVertex {
    pub fn coords(&self) -> &[Option<Name>] {
        &self.0
    }

    /// The support: indices whose coordinate is not `⊥`.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.as_ref().map(|_| i))
            .collect()
    }

    /// Vertex name used inside product graphs, e.g. `(1,_|_,0)`.
    pub fn tuple_name(&self) -> Name {
        tuple_name(self.0.iter().map(|c| c.as_ref().map_or(BOTTOM, Name::as_str)))
    }
}

impl fmt::Display for ProductVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tuple_name().as_str())
    }
}

impl Serialize for ProductVertex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<&str> = self.0.iter().map(|c| c.as_ref().map_or(BOTTOM, Name::as_str)).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ProductVertex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        Ok(ProductVertex(
            v.into_iter()
                .map(|s| if s == BOTTOM { None } else { Some(Name::from(s)) })
                .collect(),
        ))
    }
}

/// Joins components into `(a,b,…)`, escaping `\ , ( )` inside components so
/// distinct tuples always get distinct names.
pub(crate) fn tuple_name<'a>(parts: impl Iterator<Item = &'a str>) -> Name {
    let mut s = String::from("(");
    for (k, p) in parts.enumerate() {
        if k > 0 {
            s.push(',');
        }
        for ch in p.chars() {
            if matches!(ch, '\\' | ',' | '(' | ')') {
                s.push('\\');
            }
            s.push(ch);
        }
    }
    s.push(')');
    Name::new(s)
}

/// Direct product together with the coordinate indices of every vertex.
pub(crate) fn product_with_coords(graphs: &[&Graph]) -> (Graph, Vec<Vec<usize>>) {
    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
    for g in graphs {
        let mut next = Vec::with_capacity(tuples.len() * g.len());
        for t in &tuples {
            for v in 0..g.len() {
                let mut t = t.clone();
                t.push(v);
                next.push(t);
            }
        }
        tuples = next;
    }
    let names: Vec<Name> = tuples
        .iter()
        .map(|t| tuple_name(t.iter().zip(graphs).map(|(&v, g)| g.name(v).as_str())))
        .collect();
    let mut edges = Vec::new();
    for (a, ta) in tuples.iter().enumerate() {
        for (b, tb) in tuples.iter().enumerate() {
            if graphs.iter().enumerate().all(|(k, g)| g.has_edge_idx(ta[k], tb[k])) {
                edges.push((names[a].clone(), names[b].clone()));
            }
        }
    }
    let g = Graph::new(names.iter().cloned(), edges).expect("product edges join product vertices");
    // Graph::new sorts vertices by name; realign the coordinate table.
    let mut coords = vec![Vec::new(); tuples.len()];
    for (name, t) in names.iter().zip(tuples) {
        let i = g.index_of(name.as_str()).expect("every tuple became a vertex");
        coords[i] = t;
    }
    (g, coords)
}

/// The pointed product `∏ G_i^⊥` together with the [`ProductVertex`] of every
/// vertex, indexed like the product graph's vertices.
pub fn pointed_product(factors: &[Graph]) -> (Graph, Vec<ProductVertex>) {
    let pointed: Vec<(Graph, Name)> = factors.iter().map(Graph::pointed).collect();
    let refs: Vec<&Graph> = pointed.iter().map(|(g, _)| g).collect();
    let (g, coords) = product_with_coords(&refs);
    let points = coords
        .into_iter()
        .map(|t| {
            ProductVertex(
                t.into_iter()
                    .zip(&pointed)
                    .map(|(v, (pg, bot))| {
                        let name = pg.name(v);
                        (name != bot).then(|| name.clone())
                    })
                    .collect(),
            )
        })
        .collect();
    (g, points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_names_are_injective_under_awkward_components() {
        let a = tuple_name(["a,b", "c"].into_iter());
        let b = tuple_name(["a", "b,c"].into_iter());
        assert_ne!(a, b);
    }

    #[test]
    fn support_and_reachability_in_pointed_products() {
        // every ≤3-vertex graph from a spread of adjacency codes, paired up
        let samples: Vec<Graph> = (0..512u32)
            .step_by(37)
            .map(|code| Graph::from_fn(3, |i, j| code >> (i * 3 + j) & 1 == 1))
            .chain([Graph::from_indices(1, &[]), Graph::from_indices(2, &[(0, 1)])])
            .collect();
        for g in &samples {
            for h in samples.iter().take(4) {
                let (p, points) = pointed_product(&[g.clone(), h.clone()]);
                for a in 0..p.len() {
                    let ya = points[a].support();
                    for b in p.reach_idx(a) {
                        let yb = points[b].support();
                        assert!(ya.iter().all(|k| yb.contains(k)));
                    }
                }
            }
            let (pg, bot) = g.pointed();
            let b = pg.index_of(bot.as_str()).unwrap();
            assert_eq!(pg.out_neighbors(b).len(), pg.len());
        }
    }

    #[test]
    fn product_vertex_json_uses_bottom_token() {
        let p = ProductVertex(vec![Some("1".into()), None]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["1","_|_"]"#);
        assert_eq!(serde_json::from_str::<ProductVertex>(&s).unwrap(), p);
        assert_eq!(p.support(), vec![0]);
        assert_eq!(p.tuple_name().as_str(), "(1,_|_)");
    }
}
