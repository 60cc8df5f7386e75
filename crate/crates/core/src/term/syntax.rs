//! Lexer and recursive-descent parser for terms, identities and implications.
//!
//! ```text
//! implication := premise? '->' identity
//! premise     := identity ('&' identity)* | '(' identity ('&' identity)* ')'
//! identity    := term ('=~' | '≈') term
//! term        := atom+                      (left associative)
//! atom        := name | 'inf' | '∞' | '(' term ')'
//! name        := [A-Za-z0-9_][A-Za-z0-9_.:']*  |  '"' quoted '"'
//! ```
//!
//! `∧` and `→` are accepted for `&` and `->`. Positions in errors count
//! characters from 0.

use std::fmt;

use crate::algebra::{Identity, Implication};
use crate::error::{Error, Result};
use crate::name::Name;
use crate::term::Term;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Inf,
    LParen,
    RParen,
    Approx,
    And,
    Arrow,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Name(n) => format!("name `{n}`"),
            Tok::Inf => "`inf`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Approx => "`=~`".into(),
            Tok::And => "`&`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn is_name_char(c: char) -> bool {
    is_name_start(c) || matches!(c, '.' | ':' | '\'')
}

/// True when `s` can be written without quotes.
pub(crate) fn is_plain_name(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if is_name_start(c) => chars.all(is_name_char) && s != "inf",
        _ => false,
    }
}

pub(crate) fn write_name(f: &mut fmt::Formatter<'_>, name: &Name) -> fmt::Result {
    let s = name.as_str();
    if is_plain_name(s) {
        return f.write_str(s);
    }
    f.write_str("\"")?;
    for c in s.chars() {
        if c == '"' || c == '\\' {
            f.write_str("\\")?;
        }
        write!(f, "{c}")?;
    }
    f.write_str("\"")
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    let err = |position: usize, message: String| Error::Syntax { position, message };
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '(' => {
                i += 1;
                Tok::LParen
            }
            ')' => {
                i += 1;
                Tok::RParen
            }
            '≈' => {
                i += 1;
                Tok::Approx
            }
            '&' | '∧' => {
                i += 1;
                Tok::And
            }
            '→' => {
                i += 1;
                Tok::Arrow
            }
            '∞' => {
                i += 1;
                Tok::Inf
            }
            '=' if chars.get(i + 1) == Some(&'~') => {
                i += 2;
                Tok::Approx
            }
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 2;
                Tok::Arrow
            }
            '"' => {
                i += 1;
                let mut s = String::new();
                loop {
                    match chars.get(i) {
                        None => return Err(err(start, "unterminated quoted name".into())),
                        Some('"') => {
                            i += 1;
                            break;
                        }
                        Some('\\') => match chars.get(i + 1) {
                            Some(&e @ ('"' | '\\')) => {
                                s.push(e);
                                i += 2;
                            }
                            _ => return Err(err(i, "bad escape in quoted name".into())),
                        },
                        Some(&ch) => {
                            s.push(ch);
                            i += 1;
                        }
                    }
                }
                Tok::Name(s)
            }
            c if is_name_start(c) => {
                while i < chars.len() && is_name_char(chars[i]) {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                if s == "inf" {
                    Tok::Inf
                } else {
                    Tok::Name(s)
                }
            }
            other => return Err(err(start, format!("unexpected character `{other}`"))),
        };
        toks.push((tok, start));
    }
    toks.push((Tok::End, chars.len()));
    Ok(toks)
}

pub(crate) struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    pub(crate) fn new(text: &str) -> Result<Parser> {
        Ok(Parser { toks: lex(text)?, at: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos(),
            message: format!("expected {expected}, found {}", self.peek().describe()),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(what)
        }
    }

    fn finish(&self) -> Result<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.fail("end of input")
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Tok::Name(_) | Tok::Inf | Tok::LParen)
    }

    fn atom(&mut self) -> Result<Term> {
        match self.peek().clone() {
            Tok::Name(n) => {
                self.bump();
                Ok(Term::Var(Name::new(n)))
            }
            Tok::Inf => {
                self.bump();
                Ok(Term::Inf)
            }
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => self.fail("a term"),
        }
    }

    fn term(&mut self) -> Result<Term> {
        let mut t = self.atom()?;
        while self.starts_atom() {
            let r = self.atom()?;
            t = Term::app(t, r);
        }
        Ok(t)
    }

    fn identity(&mut self) -> Result<Identity> {
        let l = self.term()?;
        self.expect(Tok::Approx, "`=~` or `≈`")?;
        let r = self.term()?;
        Ok(Identity::new(l, r))
    }

    fn conjunction(&mut self) -> Result<Vec<Identity>> {
        let mut ids = vec![self.identity()?];
        while *self.peek() == Tok::And {
            self.bump();
            ids.push(self.identity()?);
        }
        Ok(ids)
    }

    fn premise(&mut self) -> Result<Vec<Identity>> {
        if *self.peek() == Tok::Arrow {
            return Ok(Vec::new());
        }
        if *self.peek() == Tok::LParen {
            let mark = self.at;
            self.bump();
            if let Ok(ids) = self.conjunction() {
                if *self.peek() == Tok::RParen {
                    self.bump();
                    if *self.peek() == Tok::Arrow {
                        return Ok(ids);
                    }
                }
            }
            self.at = mark;
        }
        self.conjunction()
    }

    pub(crate) fn whole_term(mut self) -> Result<Term> {
        let t = self.term()?;
        self.finish()?;
        Ok(t)
    }

    pub(crate) fn whole_identity(mut self) -> Result<Identity> {
        let id = self.identity()?;
        self.finish()?;
        Ok(id)
    }

    pub(crate) fn whole_implication(mut self) -> Result<Implication> {
        let premise = self.premise()?;
        self.expect(Tok::Arrow, "`->`")?;
        let consequence = self.identity()?;
        self.finish()?;
        Ok(Implication::new(premise, consequence))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_names() {
        assert!(is_plain_name("x_0"));
        assert!(is_plain_name("0:a"));
        assert!(is_plain_name("x'"));
        assert!(!is_plain_name("inf"));
        assert!(!is_plain_name("(0,1)"));
        assert!(!is_plain_name(""));
        assert!(!is_plain_name("'x"));
    }

    #[test]
    fn lexer_accepts_unicode_and_ascii_operators() {
        let a = lex("x ≈ y ∧ z → ∞").unwrap();
        let b = lex("x =~ y & z -> inf").unwrap();
        let strip = |v: Vec<(Tok, usize)>| v.into_iter().map(|(t, _)| t).collect::<Vec<_>>();
        assert_eq!(strip(a), strip(b));
    }

    #[test]
    fn unterminated_quote() {
        assert!(matches!(lex("\"abc"), Err(Error::Syntax { position: 0, .. })));
    }
}
