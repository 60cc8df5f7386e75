//! JSON form of terms: `["var", "x"]`, `["inf"]`, `["app", left, right]`.

use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use super::Term;
use crate::name::Name;

impl Serialize for Term {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Term::Var(x) => {
                let mut seq = s.serialize_seq(Some(2))?;
                seq.serialize_element("var")?;
                seq.serialize_element(x)?;
                seq.end()
            }
            Term::Inf => {
                let mut seq = s.serialize_seq(Some(1))?;
                seq.serialize_element("inf")?;
                seq.end()
            }
            Term::App(l, r) => {
                let mut seq = s.serialize_seq(Some(3))?;
                seq.serialize_element("app")?;
                seq.serialize_element(l)?;
                seq.serialize_element(r)?;
                seq.end()
            }
        }
    }
}

fn from_value(v: &Value) -> Result<Term, String> {
    let arr = v.as_array().ok_or_else(|| format!("expected a term array, found {v}"))?;
    match (arr.first().and_then(Value::as_str), arr.len()) {
        (Some("var"), 2) => arr[1]
            .as_str()
            .map(|s| Term::Var(Name::from(s)))
            .ok_or_else(|| "variable name must be a string".to_string()),
        (Some("inf"), 1) => Ok(Term::Inf),
        (Some("app"), 3) => Ok(Term::app(from_value(&arr[1])?, from_value(&arr[2])?)),
        _ => Err(format!("malformed term {v}")),
    }
}

impl<'de> Deserialize<'de> for Term {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        from_value(&v).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_array_form() {
        let t = Term::parse("x (y inf)").unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"["app",["var","x"],["app",["var","y"],["inf"]]]"#);
        assert_eq!(serde_json::from_str::<Term>(&s).unwrap(), t);
    }

    #[test]
    fn malformed_json_is_rejected() {
        for bad in [r#"["var"]"#, r#"["app",["inf"]]"#, r#"{"var":"x"}"#, r#"["var",3]"#] {
            assert!(serde_json::from_str::<Term>(bad).is_err(), "{bad}");
        }
    }
}
