//! Graph file formats.
//!
//! JSON: `{"vertices": ["a", ...], "edges": [["a", "b"], ...]}`.
//!
//! Edge list: a `vertices:` header listing every vertex, then one
//! whitespace-separated edge per line. Blank lines and `#` comments are
//! ignored.
//!
//! ```text
//! vertices: 0 1
//! 0 1
//! 1 0
//! 1 1
//! ```

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Graph;
use crate::error::{Error, Result};
use crate::name::Name;

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<Name>,
    edges: Vec<(Name, Name)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphJson {
            vertices: self.vertices().to_vec(),
            edges: self.edges().map(|(a, b)| (a.clone(), b.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        Graph::new(raw.vertices, raw.edges).map_err(serde::de::Error::custom)
    }
}

impl Graph {
    pub fn from_json_str(s: &str) -> Result<Graph> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_edge_list(s: &str) -> Result<Graph> {
        let mut vertices: Option<Vec<String>> = None;
        let mut edges = Vec::new();
        for (k, raw) in s.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("vertices:") {
                if vertices.is_some() {
                    return Err(Error::GraphFormat {
                        line: line_no,
                        message: "duplicate `vertices:` header".into(),
                    });
                }
                vertices = Some(rest.split_whitespace().map(str::to_string).collect());
                continue;
            }
            if vertices.is_none() {
                return Err(Error::GraphFormat {
                    line: line_no,
                    message: "edge before the `vertices:` header".into(),
                });
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts.as_slice() {
                [a, b] => edges.push((a.to_string(), b.to_string())),
                _ => {
                    return Err(Error::GraphFormat {
                        line: line_no,
                        message: format!("expected `u v`, found `{line}`"),
                    })
                }
            }
        }
        let vertices = vertices.ok_or(Error::GraphFormat {
            line: 0,
            message: "missing `vertices:` header".into(),
        })?;
        Graph::new(vertices, edges)
    }

    /// Writes the edge-list format. Fails if a vertex name cannot be
    /// written unambiguously (whitespace, `#`, or empty).
    pub fn to_edge_list(&self) -> Result<String> {
        for v in self.vertices() {
            let s = v.as_str();
            if s.is_empty() || s.contains('#') || s.chars().any(char::is_whitespace) {
                return Err(Error::GraphFormat {
                    line: 0,
                    message: format!("vertex name {s:?} cannot be written as an edge list"),
                });
            }
        }
        let mut out = String::from("vertices:");
        for v in self.vertices() {
            out.push(' ');
            out.push_str(v.as_str());
        }
        out.push('\n');
        for (a, b) in self.edges() {
            out.push_str(&format!("{a} {b}\n"));
        }
        Ok(out)
    }

    /// Parses either format: JSON when the first non-blank character is `{`.
    pub fn parse_any(s: &str) -> Result<Graph> {
        if s.trim_start().starts_with('{') {
            Graph::from_json_str(s)
        } else {
            Graph::from_edge_list(s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_keeps_isolated_vertices() {
        let g = Graph::new(["a", "b", "c"], [("a", "b")]).unwrap();
        let s = g.to_json();
        assert_eq!(s, r#"{"vertices":["a","b","c"],"edges":[["a","b"]]}"#);
        assert_eq!(Graph::from_json_str(&s).unwrap(), g);
    }

    #[test]
    fn json_rejects_dangling_edges() {
        assert!(Graph::from_json_str(r#"{"vertices":["a"],"edges":[["a","z"]]}"#).is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_indices(3, &[(0, 1), (1, 0), (1, 1)]);
        let text = g.to_edge_list().unwrap();
        assert_eq!(text, "vertices: 0 1 2\n0 1\n1 0\n1 1\n");
        assert_eq!(Graph::from_edge_list(&text).unwrap(), g);
        assert_eq!(Graph::parse_any(&text).unwrap(), g);
        assert_eq!(Graph::parse_any(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        let err = Graph::from_edge_list("0 1\n").unwrap_err();
        assert!(matches!(err, Error::GraphFormat { line: 1, .. }));
        let err = Graph::from_edge_list("vertices: 0 1\n# c\n0 1 2\n").unwrap_err();
        assert!(matches!(err, Error::GraphFormat { line: 3, .. }));
        assert!(Graph::from_edge_list("vertices: 0\n0 5\n").is_err());
    }

    #[test]
    fn edge_list_refuses_unwritable_names() {
        let g = Graph::new(["a b"], Vec::<(&str, &str)>::new()).unwrap();
        assert!(g.to_edge_list().is_err());
    }
}
