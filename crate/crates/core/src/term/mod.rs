//! Terms of type (2, 0): variables, the constant `∞`, and binary
//! application written as juxtaposition.

mod graph;
mod json;
pub(crate) mod syntax;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::name::Name;

pub use graph::{graph_to_term, is_term_graph, term_graph, TermGraph};
pub(crate) use graph::root_index;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(Name),
    Inf,
    App(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<Name>) -> Term {
        Term::Var(name.into())
    }

    pub fn app(left: Term, right: Term) -> Term {
        Term::App(Box::new(left), Box::new(right))
    }

    /// Left-associated application `((t0 t1) t2) …`. Panics on an empty list.
    pub fn apply_all(terms: impl IntoIterator<Item = Term>) -> Term {
        let mut it = terms.into_iter();
        let first = it.next().expect("apply_all needs at least one term");
        it.fold(first, Term::app)
    }

    pub fn parse(text: &str) -> Result<Term> {
        syntax::Parser::new(text)?.whole_term()
    }

    /// A term is trivial iff `∞` occurs in it.
    pub fn is_trivial(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Inf => true,
            Term::App(l, r) => l.is_trivial() || r.is_trivial(),
        }
    }

    /// The set of variables occurring in the term.
    pub fn vars(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<Name>) {
        match self {
            Term::Var(x) => {
                out.insert(x.clone());
            }
            Term::Inf => {}
            Term::App(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    /// The leftmost leaf when it is a variable. Only `None` if the leftmost
    /// leaf is `∞`.
    fn leftmost_leaf(&self) -> Option<&Name> {
        match self {
            Term::Var(x) => Some(x),
            Term::Inf => None,
            Term::App(l, _) => l.leftmost_leaf(),
        }
    }

    /// The leftmost variable `L(t)` of a nontrivial term.
    pub fn leftmost(&self) -> Result<&Name> {
        if self.is_trivial() {
            return Err(Error::TrivialTerm(self.to_string()));
        }
        Ok(self.leftmost_leaf().expect("nontrivial terms start with a variable"))
    }

    /// Height of the syntax tree, counting a leaf as depth 1.
    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) | Term::Inf => 1,
            Term::App(l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// Number of leaves.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Inf => 1,
            Term::App(l, r) => l.size() + r.size(),
        }
    }

    /// Replaces variables through `f`.
    pub fn rename(&self, f: &impl Fn(&Name) -> Name) -> Term {
        match self {
            Term::Var(x) => Term::Var(f(x)),
            Term::Inf => Term::Inf,
            Term::App(l, r) => Term::app(l.rename(f), r.rename(f)),
        }
    }
}

pub fn parse_term(text: &str) -> Result<Term> {
    Term::parse(text)
}

pub fn format_term(t: &Term) -> String {
    t.to_string()
}

impl FromStr for Term {
    type Err = Error;

    fn from_str(s: &str) -> Result<Term> {
        Term::parse(s)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(x) => syntax::write_name(f, x),
            Term::Inf => f.write_str("inf"),
            Term::App(l, r) => {
                write!(f, "{l} ")?;
                if matches!(**r, Term::App(..)) {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Term({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Term {
        Term::var(s)
    }

    #[test]
    fn juxtaposition_is_left_associative() {
        assert_eq!(Term::parse("x (y z)").unwrap(), Term::app(v("x"), Term::app(v("y"), v("z"))));
        assert_eq!(Term::parse("x y z").unwrap(), Term::app(Term::app(v("x"), v("y")), v("z")));
        assert_eq!(Term::parse("inf").unwrap(), Term::Inf);
        assert_eq!(Term::parse("∞ x").unwrap(), Term::app(Term::Inf, v("x")));
        assert_eq!(Term::parse("((x))").unwrap(), v("x"));
    }

    #[test]
    fn formatting_uses_minimal_parentheses() {
        for s in ["x (y z)", "x y z", "inf", "x (y x)", "x_0 (x_1 x_0)", "a (b c) (d e)"] {
            assert_eq!(Term::parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn awkward_names_are_quoted() {
        let t = Term::app(v("(0,1)"), v("inf"));
        let s = t.to_string();
        assert_eq!(s, r#""(0,1)" "inf""#);
        assert_eq!(Term::parse(&s).unwrap(), t);
        let t = Term::var(r#"a"b\c"#);
        assert_eq!(Term::parse(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn syntax_errors_report_positions() {
        match Term::parse("x (y z").unwrap_err() {
            Error::Syntax { position, .. } => assert_eq!(position, 6),
            e => panic!("unexpected {e}"),
        }
        match Term::parse("x ) y").unwrap_err() {
            Error::Syntax { position, .. } => assert_eq!(position, 2),
            e => panic!("unexpected {e}"),
        }
        assert!(Term::parse("").is_err());
        assert!(Term::parse("()").is_err());
        assert!(Term::parse("x $").is_err());
    }

    #[test]
    fn leftmost_variable() {
        assert_eq!(Term::parse("x (y z)").unwrap().leftmost().unwrap(), "x");
        assert_eq!(Term::parse("(z x) y").unwrap().leftmost().unwrap(), "z");
        assert_eq!(Term::parse("x").unwrap().leftmost().unwrap(), "x");
        assert!(matches!(Term::parse("x inf").unwrap().leftmost(), Err(Error::TrivialTerm(_))));
    }

    #[test]
    fn structural_queries() {
        let t = Term::parse("x (y x) z").unwrap();
        assert_eq!(t.vars().into_iter().map(Name::into_string).collect::<Vec<_>>(), ["x", "y", "z"]);
        assert_eq!(t.depth(), 4);
        assert_eq!(t.size(), 4);
        assert!(!t.is_trivial());
        assert!(Term::parse("x (y inf)").unwrap().is_trivial());
    }
}
