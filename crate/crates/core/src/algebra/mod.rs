//! Graph algebras: the multiplication `u · v`, term evaluation, and
//! satisfaction of identities and implications.

mod check;
mod compiled;
mod encode;
mod formula;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::name::Name;
use crate::term::Term;

pub use check::{satisfies_identity, satisfies_implication, Checker, Mode, Satisfaction, GUARD_VARIABLES, GUARD_VERTICES};
pub use encode::{gamma_e, gamma_n, sigma};
pub use formula::{Identity, Implication};

/// An element of a graph algebra: a vertex or the absorbing `∞`.
///
/// `Inf` orders before every vertex, which is the value order used when
/// assignments are enumerated.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Inf,
    Vertex(Name),
}

impl Element {
    pub fn vertex(name: impl Into<Name>) -> Element {
        Element::Vertex(name.into())
    }

    pub fn is_inf(&self) -> bool {
        matches!(self, Element::Inf)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Inf => f.write_str("∞"),
            Element::Vertex(v) => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// JSON: a vertex is its name, `∞` is `null`.
impl Serialize for Element {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Element::Inf => s.serialize_none(),
            Element::Vertex(v) => s.serialize_some(v),
        }
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(match Option::<Name>::deserialize(d)? {
            None => Element::Inf,
            Some(v) => Element::Vertex(v),
        })
    }
}

/// Values for variables.
pub type Assignment = BTreeMap<Name, Element>;

fn check_element(g: &Graph, e: &Element) -> Result<()> {
    match e {
        Element::Vertex(v) if !g.contains(v.as_str()) => Err(Error::UnknownVertex(v.to_string())),
        _ => Ok(()),
    }
}

/// `u · v` in the graph algebra of `g`: `u` if `(u, v)` is an edge, else `∞`.
pub fn mult(g: &Graph, u: &Element, v: &Element) -> Result<Element> {
    check_element(g, u)?;
    check_element(g, v)?;
    Ok(match (u, v) {
        (Element::Vertex(a), Element::Vertex(b)) if g.has_edge(a.as_str(), b.as_str()) => u.clone(),
        _ => Element::Inf,
    })
}

/// The value of `t` under `h` in the graph algebra of `g`.
pub fn eval(g: &Graph, t: &Term, h: &Assignment) -> Result<Element> {
    match t {
        Term::Inf => Ok(Element::Inf),
        Term::Var(x) => {
            let e = h.get(x).ok_or_else(|| Error::Unbound(x.to_string()))?;
            check_element(g, e)?;
            Ok(e.clone())
        }
        Term::App(l, r) => {
            let a = eval(g, l, h)?;
            let b = eval(g, r, h)?;
            mult(g, &a, &b)
        }
    }
}

/// The identity `t ≈ t'` seen as the implication `∞ ≈ ∞ → t ≈ t'`.
pub fn identity_as_implication(id: &Identity) -> Implication {
    Implication::new(vec![Identity::new(Term::Inf, Term::Inf)], id.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g0() -> Graph {
        Graph::from_indices(2, &[(0, 1), (1, 0), (1, 1)])
    }

    fn v(s: &str) -> Element {
        Element::vertex(s)
    }

    #[test]
    fn multiplication_in_g0() {
        let g = g0();
        assert_eq!(mult(&g, &v("0"), &v("1")).unwrap(), v("0"));
        assert_eq!(mult(&g, &v("0"), &v("0")).unwrap(), Element::Inf);
        assert_eq!(mult(&g, &v("1"), &v("1")).unwrap(), v("1"));
        assert_eq!(mult(&g, &Element::Inf, &v("1")).unwrap(), Element::Inf);
        assert_eq!(mult(&g, &v("1"), &Element::Inf).unwrap(), Element::Inf);
        assert!(matches!(mult(&g, &v("7"), &v("1")), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn evaluation_examples() {
        let g = g0();
        let t = Term::parse("x (y z)").unwrap();
        let h: Assignment = [("x", v("0")), ("y", v("1")), ("z", v("0"))]
            .into_iter()
            .map(|(k, e)| (Name::from(k), e))
            .collect();
        assert_eq!(eval(&g, &t, &h).unwrap(), v("0"));
        assert_eq!(eval(&g, &Term::parse("x (y inf)").unwrap(), &h).unwrap(), Element::Inf);
        assert_eq!(eval(&g, &Term::var("y"), &h).unwrap(), v("1"));
        assert!(matches!(eval(&g, &Term::var("w"), &h), Err(Error::Unbound(_))));
    }

    #[test]
    fn identity_as_implication_shape() {
        let id = Identity::parse("x x =~ inf").unwrap();
        let imp = identity_as_implication(&id);
        assert_eq!(imp.premise, vec![Identity::new(Term::Inf, Term::Inf)]);
        assert_eq!(imp.consequence, id);
        assert_eq!(imp.to_string(), "inf =~ inf -> x x =~ inf");
    }

    #[test]
    fn identity_and_its_implication_agree() {
        let g = g0();
        let id = Identity::parse("x y =~ x").unwrap();
        let direct = satisfies_identity(&g, &id, Mode::Brute).unwrap();
        let via = satisfies_implication(&g, &identity_as_implication(&id)).unwrap().holds();
        assert_eq!(direct, via);
        assert!(!direct);
    }

    #[test]
    fn element_json() {
        assert_eq!(serde_json::to_string(&Element::Inf).unwrap(), "null");
        assert_eq!(serde_json::to_string(&v("a")).unwrap(), "\"a\"");
        assert_eq!(serde_json::from_str::<Element>("null").unwrap(), Element::Inf);
        assert!(Element::Inf < v("0"));
    }
}
