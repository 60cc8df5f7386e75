use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::name::Name;
use crate::term::{syntax::Parser, Term};

/// An identity `t ≈ t'`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Identity {
    #[serde(rename = "lhs")]
    pub left: Term,
    #[serde(rename = "rhs")]
    pub right: Term,
}

impl Identity {
    pub fn new(left: Term, right: Term) -> Identity {
        Identity { left, right }
    }

    /// Parses `term =~ term` (or `≈`).
    pub fn parse(text: &str) -> Result<Identity> {
        Parser::new(text)?.whole_identity()
    }

    pub fn vars(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        self.left.collect_vars(&mut out);
        self.right.collect_vars(&mut out);
        out
    }

    pub fn rename(&self, f: &impl Fn(&Name) -> Name) -> Identity {
        Identity::new(self.left.rename(f), self.right.rename(f))
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Identity> {
        Identity::parse(s)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} =~ {}", self.left, self.right)
    }
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Identity({self})")
    }
}

/// A quasi-identity: a finite conjunction of identities implying one more.
///
/// The premise is kept in insertion order with duplicates removed.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Implication {
    pub premise: Vec<Identity>,
    pub consequence: Identity,
}

impl Implication {
    pub fn new(premise: Vec<Identity>, consequence: Identity) -> Implication {
        let mut seen = BTreeSet::new();
        let premise = premise
            .into_iter()
            .filter(|id| seen.insert(id.to_string()))
            .collect();
        Implication { premise, consequence }
    }

    /// Parses `id & id & … -> id`. The premise may be empty (`-> id`) or
    /// wrapped in parentheses.
    pub fn parse(text: &str) -> Result<Implication> {
        Parser::new(text)?.whole_implication()
    }

    pub fn vars(&self) -> BTreeSet<Name> {
        let mut out = self.consequence.vars();
        for id in &self.premise {
            id.left.collect_vars(&mut out);
            id.right.collect_vars(&mut out);
        }
        out
    }

    pub fn rename(&self, f: &impl Fn(&Name) -> Name) -> Implication {
        Implication::new(
            self.premise.iter().map(|id| id.rename(f)).collect(),
            self.consequence.rename(f),
        )
    }

    /// Renames the variables to `x1, x2, …` following their sorted order.
    pub fn standardized(&self) -> Implication {
        let map: BTreeMap<Name, Name> = self
            .vars()
            .into_iter()
            .enumerate()
            .map(|(k, v)| (v, Name::new(format!("x{}", k + 1))))
            .collect();
        self.rename(&|v| map[v].clone())
    }
}

impl FromStr for Implication {
    type Err = Error;

    fn from_str(s: &str) -> Result<Implication> {
        Implication::parse(s)
    }
}

impl fmt::Display for Implication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, id) in self.premise.iter().enumerate() {
            if k > 0 {
                f.write_str(" & ")?;
            }
            write!(f, "{id}")?;
        }
        if !self.premise.is_empty() {
            f.write_str(" ")?;
        }
        write!(f, "-> {}", self.consequence)
    }
}

impl fmt::Debug for Implication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Implication({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_text_round_trip() {
        let id = Identity::parse("x (y z) ≈ x y").unwrap();
        assert_eq!(id.to_string(), "x (y z) =~ x y");
        assert_eq!(Identity::parse(&id.to_string()).unwrap(), id);
        assert!(Identity::parse("x y").is_err());
        assert!(Identity::parse("x =~ y =~ z").is_err());
    }

    #[test]
    fn implication_text_forms() {
        let a = Implication::parse("(x (y z)) =~ x & (z x) =~ inf -> (x (y y)) =~ (x y)").unwrap();
        assert_eq!(a.premise.len(), 2);
        assert_eq!(a.to_string(), "x (y z) =~ x & z x =~ inf -> x (y y) =~ x y");
        assert_eq!(Implication::parse(&a.to_string()).unwrap(), a);

        let b = Implication::parse("(x =~ y & y =~ z) -> x =~ z").unwrap();
        assert_eq!(b.premise.len(), 2);
        let c = Implication::parse("(x y) =~ x -> x =~ inf").unwrap();
        assert_eq!(c.premise[0], Identity::parse("x y =~ x").unwrap());

        let empty = Implication::parse("-> x =~ x").unwrap();
        assert!(empty.premise.is_empty());
        assert_eq!(empty.to_string(), "-> x =~ x");
        assert_eq!(Implication::parse("→ x ≈ x").unwrap(), empty);
        assert!(Implication::parse("x =~ y").is_err());
    }

    #[test]
    fn duplicate_premises_collapse() {
        let imp = Implication::parse("x =~ y & x =~ y -> y =~ x").unwrap();
        assert_eq!(imp.premise.len(), 1);
    }

    #[test]
    fn json_shapes() {
        let id = Identity::parse("x inf =~ x").unwrap();
        let s = serde_json::to_string(&id).unwrap();
        assert_eq!(s, r#"{"lhs":["app",["var","x"],["inf"]],"rhs":["var","x"]}"#);
        assert_eq!(serde_json::from_str::<Identity>(&s).unwrap(), id);
        let imp = Implication::parse("x y =~ x -> x =~ inf").unwrap();
        let s = serde_json::to_string(&imp).unwrap();
        assert!(s.starts_with(r#"{"premise":[{"lhs""#));
        assert_eq!(serde_json::from_str::<Implication>(&s).unwrap(), imp);
    }

    #[test]
    fn standardization_is_simultaneous() {
        let imp = Implication::parse("x2 x1 =~ x2 & b x2 =~ b -> b =~ inf").unwrap();
        let std = imp.standardized();
        // sorted: b, x1, x2 -> x1, x2, x3
        assert_eq!(std.to_string(), "x3 x2 =~ x3 & x1 x3 =~ x1 -> x1 =~ inf");
    }
}
