//! Text and JSON forms of [`Polynomial`].
//!
//! Printed form is compact: degree ascending, coefficient written against
//! the first variable, variables joined by `*`, e.g. `1+3q+q^2` or
//! `p^2+2p*q`. The parser accepts that form and the more general
//! `c*v1^e1*v2^e2` notation, parentheses, powers and implicit
//! multiplication.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::{Assignment, Monomial, PolyError, Polynomial, VarSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyParseError {
    #[error("at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("at offset {pos}: unknown variable in `{ident}`")]
    UnknownVariable { pos: usize, ident: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl Polynomial {
    pub fn parse(vars: &VarSet, text: &str) -> Result<Polynomial, PolyParseError> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
            vars,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(out)
    }

    /// Printed with explicit `*` between coefficient and variables, which
    /// the weight-formula language requires.
    pub fn to_expr_string(&self) -> String {
        self.render(true)
    }

    fn render(&self, explicit_star: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let names = self.vars().names();
        let mut out = String::new();
        for (m, c) in display_order(self.terms()) {
            let vars_part = m
                .exponents()
                .iter()
                .zip(names)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
                .collect::<Vec<_>>()
                .join("*");
            let (neg, mag) = (c.is_negative(), c.abs());
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if vars_part.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&vars_part);
            } else {
                out.push_str(&mag.to_string());
                if explicit_star {
                    out.push('*');
                }
                out.push_str(&vars_part);
            }
        }
        out
    }
}

/// Degree ascending; within one degree, lexicographically descending so
/// that `p^2` precedes `p*q` precedes `q^2`.
fn display_order(terms: &[(Monomial, BigInt)]) -> Vec<&(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(terms.len());
    let mut i = 0;
    while i < terms.len() {
        let d = terms[i].0.degree();
        let mut j = i;
        while j < terms.len() && terms[j].0.degree() == d {
            j += 1;
        }
        out.extend(terms[i..j].iter().rev());
        i = j;
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a VarSet,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> PolyParseError {
        PolyParseError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, PolyParseError> {
        let mut acc = Polynomial::zero(self.vars);
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() || c == b'_' => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, PolyParseError> {
        let (head, base) = self.atom()?;
        let base = if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.nat()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            base.pow(e)
        } else {
            base
        };
        Ok(match head {
            Some(h) => &h * &base,
            None => base,
        })
    }

    fn nat(&mut self) -> Result<BigInt, PolyParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a nonnegative integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit run parses"))
    }

    /// Returns an optional prefix that a following `^` does not apply to,
    /// and the base that it does.
    fn atom(&mut self) -> Result<(Option<Polynomial>, Polynomial), PolyParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok((None, inner))
            }
            Some(c) if c.is_ascii_digit() => {
                Ok((None, Polynomial::constant(self.vars, self.nat()?)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.identifier_run(),
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    /// Reads a maximal identifier and splits it greedily into declared
    /// variable names, so `pq` reads as `p*q` when both are declared.
    /// Only the last variable of the run takes a following `^`.
    fn identifier_run(&mut self) -> Result<(Option<Polynomial>, Polynomial), PolyParseError> {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let ident = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        let pieces = split_identifier(self.vars, ident).ok_or(PolyParseError::UnknownVariable {
            pos: start,
            ident: ident.to_string(),
        })?;
        let (last, init) = pieces.split_last().expect("nonempty identifier");
        let mut head = None;
        for name in init {
            let v = Polynomial::var(self.vars, name)?;
            head = Some(match head {
                Some(h) => &h * &v,
                None => v,
            });
        }
        Ok((head, Polynomial::var(self.vars, last)?))
    }
}

fn split_identifier<'v>(vars: &'v VarSet, mut ident: &str) -> Option<Vec<&'v str>> {
    let mut out = Vec::new();
    while !ident.is_empty() {
        let best = vars
            .names()
            .iter()
            .filter(|n| ident.starts_with(n.as_str()))
            .max_by_key(|n| n.len())?;
        out.push(best.as_str());
        ident = &ident[best.len()..];
    }
    Some(out)
}

/// Parses `q=2` or `p=1,q=2` (whitespace tolerant).
pub fn parse_assignment(text: &str) -> Result<Assignment, String> {
    let mut out = Assignment::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| format!("expected name=value, got `{part}`"))?;
        let value: BigInt = value
            .trim()
            .parse()
            .map_err(|_| format!("bad integer in `{part}`"))?;
        if value.is_negative() {
            return Err(format!("negative value in `{part}`"));
        }
        out.insert(name.trim().to_string(), value);
    }
    if out.is_empty() {
        return Err("empty assignment".to_string());
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    e: Vec<u32>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            vars: self.vars().names().to_vec(),
            terms: self
                .terms()
                .iter()
                .map(|(m, c)| TermJson {
                    e: m.exponents().to_vec(),
                    c: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = PolyJson::deserialize(d)?;
        let vars = VarSet::new(raw.vars).map_err(D::Error::custom)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| {
                let c: BigInt = t
                    .c
                    .parse()
                    .map_err(|_| D::Error::custom(format!("bad coefficient `{}`", t.c)))?;
                Ok((t.e, c))
            })
            .collect::<Result<Vec<_>, D::Error>>()?;
        Polynomial::from_terms(&vars, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(names: &[&str]) -> VarSet {
        VarSet::new(names.iter().copied()).unwrap()
    }

    #[test]
    fn display_forms() {
        let q = vs(&["q"]);
        assert_eq!(Polynomial::parse(&q, "q^2 + 1 + 3*q").unwrap().to_string(), "1+3q+q^2");
        assert_eq!(Polynomial::zero(&q).to_string(), "0");
        assert_eq!(Polynomial::parse(&q, "-q^8 - 4q^10").unwrap().to_string(), "-q^8-4q^10");
        let pq = vs(&["p", "q"]);
        let f = Polynomial::parse(&pq, "(p+q)^2").unwrap();
        assert_eq!(f.to_string(), "p^2+2p*q+q^2");
        assert_eq!(f.to_expr_string(), "p^2+2*p*q+q^2");
    }

    #[test]
    fn parser_accepts_spec_notation() {
        let pq = vs(&["p", "q"]);
        let a = Polynomial::parse(&pq, "2*p^1*q^3 - 1").unwrap();
        let b = Polynomial::parse(&pq, "2pq^3-1").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coefficient(&[1, 3]), BigInt::from(2));
    }

    #[test]
    fn greedy_split_prefers_longest_name() {
        let xs = vs(&["x1", "x10", "x0"]);
        let f = Polynomial::parse(&xs, "x10x1").unwrap();
        assert_eq!(f.coefficient(&[1, 1, 0]), BigInt::from(1));
        assert!(matches!(
            Polynomial::parse(&xs, "y"),
            Err(PolyParseError::UnknownVariable { .. })
        ));
    }

    #[test]
    fn parse_errors_report_offsets() {
        let q = vs(&["q"]);
        match Polynomial::parse(&q, "1 + (q") {
            Err(PolyParseError::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Polynomial::parse(&q, "1 +").is_err());
        assert!(Polynomial::parse(&q, "q^").is_err());
    }

    #[test]
    fn display_round_trips_through_parse() {
        let pq = vs(&["p", "q"]);
        for s in ["0", "1", "-3p^2*q+p-7", "p^4+q^4-2p^2*q^2"] {
            let f = Polynomial::parse(&pq, s).unwrap();
            assert_eq!(Polynomial::parse(&pq, &f.to_string()).unwrap(), f);
            assert_eq!(Polynomial::parse(&pq, &f.to_expr_string()).unwrap(), f);
        }
    }

    #[test]
    fn json_shape() {
        let q = vs(&["q"]);
        let f = Polynomial::parse(&q, "1+3q+q^2").unwrap();
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(
            j,
            r#"{"vars":["q"],"terms":[{"e":[0],"c":"1"},{"e":[1],"c":"3"},{"e":[2],"c":"1"}]}"#
        );
        let back: Polynomial = serde_json::from_str(&j).unwrap();
        assert_eq!(back, f);
        let big = r#"{"vars":["q"],"terms":[{"e":[3],"c":"-123456789012345678901234567890"}]}"#;
        let g: Polynomial = serde_json::from_str(big).unwrap();
        assert_eq!(g.to_string(), "-123456789012345678901234567890q^3");
    }

    #[test]
    fn assignments() {
        let a = parse_assignment("p=1, q=2").unwrap();
        assert_eq!(a["q"], BigInt::from(2));
        assert!(parse_assignment("q").is_err());
        assert!(parse_assignment("q=-1").is_err());
    }
}
