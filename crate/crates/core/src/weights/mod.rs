//! Piecewise weight formulas in the index `k` and weight systems `(r, s, t)`.
//!
//! A formula is a list of guarded clauses, first match wins:
//!
//! ```text
//! k=0: 1; else: 1+q
//! k<=2: q; else: p
//! (k+1)*q + k
//! ```

mod parse;

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{PolyError, Polynomial, VarSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}, column {col}: unknown identifier `{name}`")]
    UnknownIdentifier { line: usize, col: usize, name: String },
    #[error("line {line}, column {col}: clause after the catch-all clause")]
    ClauseAfterCatchAll { line: usize, col: usize },
    #[error("formula has no catch-all clause")]
    MissingCatchAll,
    #[error("{seq}_{k} = {value} has negative coefficient {coeff} at {monomial}")]
    NotNonnegative {
        seq: char,
        k: u64,
        value: String,
        coeff: BigInt,
        monomial: String,
    },
    #[error("reserved name `{0}` cannot be a variable")]
    ReservedVariable(String),
    #[error("in `{seq}`: {source}")]
    InFormula {
        seq: char,
        #[source]
        source: Box<WeightError>,
    },
    #[error("weight system JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Num(BigInt),
    Index,
    Var(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Guard {
    Eq(u64),
    Le(u64),
    Ge(u64),
    Lt(u64),
    Gt(u64),
    Always,
}

impl Guard {
    pub fn matches(self, k: u64) -> bool {
        match self {
            Guard::Eq(c) => k == c,
            Guard::Le(c) => k <= c,
            Guard::Ge(c) => k >= c,
            Guard::Lt(c) => k < c,
            Guard::Gt(c) => k > c,
            Guard::Always => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub guard: Guard,
    pub expr: Expr,
}

/// Ordered guarded clauses; the last one is the catch-all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFormula {
    clauses: Vec<Clause>,
}

impl WeightFormula {
    pub fn parse(text: &str, vars: &VarSet) -> Result<Self, WeightError> {
        parse::parse(text, vars)
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Value of the first matching clause at index `k`, without the
    /// nonnegativity check.
    pub fn eval_raw(&self, k: u64, vars: &VarSet) -> Result<Polynomial, PolyError> {
        let clause = self
            .clauses
            .iter()
            .find(|c| c.guard.matches(k))
            .expect("catch-all clause always matches");
        eval_expr(&clause.expr, k, vars)
    }

    /// Value at index `k`; fails unless every coefficient is nonnegative.
    pub fn eval(&self, k: u64, vars: &VarSet) -> Result<Polynomial, WeightError> {
        self.eval_named('w', k, vars)
    }

    fn eval_named(&self, seq: char, k: u64, vars: &VarSet) -> Result<Polynomial, WeightError> {
        let value = self.eval_raw(k, vars)?;
        if let Some((m, c)) = value.first_negative_term() {
            let monomial = Polynomial::monomial(vars, m.exponents(), 1)?.to_string();
            return Err(WeightError::NotNonnegative {
                seq,
                k,
                value: value.to_string(),
                coeff: c.clone(),
                monomial,
            });
        }
        Ok(value)
    }
}

fn eval_expr(e: &Expr, k: u64, vars: &VarSet) -> Result<Polynomial, PolyError> {
    Ok(match e {
        Expr::Num(n) => Polynomial::constant(vars, n.clone()),
        Expr::Index => Polynomial::constant(vars, k),
        Expr::Var(name) => Polynomial::var(vars, name)?,
        Expr::Add(a, b) => eval_expr(a, k, vars)?.try_add(&eval_expr(b, k, vars)?)?,
        Expr::Sub(a, b) => eval_expr(a, k, vars)?.try_sub(&eval_expr(b, k, vars)?)?,
        Expr::Mul(a, b) => eval_expr(a, k, vars)?.try_mul(&eval_expr(b, k, vars)?)?,
        Expr::Pow(a, n) => eval_expr(a, k, vars)?.pow(*n),
    })
}

// Precedence levels for the printer: 0 sum, 1 product, 2 power, 3 atom.
fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 0,
        Expr::Mul(..) => 1,
        Expr::Pow(..) => 2,
        _ => 3,
    }
}

fn write_expr(f: &mut fmt::Formatter<'_>, e: &Expr, min_level: u8) -> fmt::Result {
    let paren = level(e) < min_level;
    if paren {
        f.write_str("(")?;
    }
    match e {
        Expr::Num(n) => write!(f, "{n}")?,
        Expr::Index => f.write_str("k")?,
        Expr::Var(v) => f.write_str(v)?,
        Expr::Add(a, b) => {
            write_expr(f, a, 0)?;
            f.write_str(" + ")?;
            write_expr(f, b, 1)?;
        }
        Expr::Sub(a, b) => {
            write_expr(f, a, 0)?;
            f.write_str(" - ")?;
            write_expr(f, b, 1)?;
        }
        Expr::Mul(a, b) => {
            write_expr(f, a, 1)?;
            f.write_str("*")?;
            write_expr(f, b, 2)?;
        }
        Expr::Pow(a, n) => {
            write_expr(f, a, 3)?;
            write!(f, "^{n}")?;
        }
    }
    if paren {
        f.write_str(")")?;
    }
    Ok(())
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(f, self, 0)
    }
}

impl fmt::Display for WeightFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let single = self.clauses.len() == 1;
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            match c.guard {
                Guard::Always if single => {}
                Guard::Always => f.write_str("else: ")?,
                Guard::Eq(n) => write!(f, "k = {n}: ")?,
                Guard::Le(n) => write!(f, "k <= {n}: ")?,
                Guard::Ge(n) => write!(f, "k >= {n}: ")?,
                Guard::Lt(n) => write!(f, "k < {n}: ")?,
                Guard::Gt(n) => write!(f, "k > {n}: ")?,
            }
            write!(f, "{}", c.expr)?;
        }
        Ok(())
    }
}

/// The weight triple: `r_k` (k ≥ 1) above the diagonal of the Jacobi
/// matrix, `s_k` (k ≥ 0) on it, `t_k` (k ≥ 1) below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    vars: VarSet,
    r: WeightFormula,
    s: WeightFormula,
    t: WeightFormula,
}

#[derive(Serialize, Deserialize)]
struct WeightSystemJson {
    vars: Vec<String>,
    r: String,
    s: String,
    t: String,
}

impl WeightSystem {
    pub fn new(vars: VarSet, r: &str, s: &str, t: &str) -> Result<Self, WeightError> {
        if let Some(bad) = vars.names().iter().find(|n| *n == "k" || *n == "else") {
            return Err(WeightError::ReservedVariable(bad.clone()));
        }
        let tag = |seq: char| move |e: WeightError| WeightError::InFormula {
            seq,
            source: Box::new(e),
        };
        Ok(WeightSystem {
            r: WeightFormula::parse(r, &vars).map_err(tag('r'))?,
            s: WeightFormula::parse(s, &vars).map_err(tag('s'))?,
            t: WeightFormula::parse(t, &vars).map_err(tag('t'))?,
            vars,
        })
    }

    /// Convenience constructor from variable names.
    pub fn from_strs(vars: &[&str], r: &str, s: &str, t: &str) -> Result<Self, WeightError> {
        Self::new(VarSet::new(vars.iter().copied())?, r, s, t)
    }

    pub fn from_json(text: &str) -> Result<Self, WeightError> {
        let raw: WeightSystemJson =
            serde_json::from_str(text).map_err(|e| WeightError::Json(e.to_string()))?;
        Self::new(VarSet::new(raw.vars)?, &raw.r, &raw.s, &raw.t)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&WeightSystemJson {
            vars: self.vars.names().to_vec(),
            r: self.r.to_string(),
            s: self.s.to_string(),
            t: self.t.to_string(),
        })
        .expect("plain strings serialize")
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn r_formula(&self) -> &WeightFormula {
        &self.r
    }

    pub fn s_formula(&self) -> &WeightFormula {
        &self.s
    }

    pub fn t_formula(&self) -> &WeightFormula {
        &self.t
    }

    pub fn r(&self, k: u64) -> Result<Polynomial, WeightError> {
        self.r.eval_named('r', k, &self.vars)
    }

    pub fn s(&self, k: u64) -> Result<Polynomial, WeightError> {
        self.s.eval_named('s', k, &self.vars)
    }

    pub fn t(&self, k: u64) -> Result<Polynomial, WeightError> {
        self.t.eval_named('t', k, &self.vars)
    }

    /// Evaluates `r_1..r_n`, `s_0..s_n`, `t_1..t_n`, failing on the first
    /// weight with a negative coefficient.
    pub fn validate(&self, n: u64) -> Result<(), WeightError> {
        for k in 0..=n {
            self.s(k)?;
            if k >= 1 {
                self.r(k)?;
                self.t(k)?;
            }
        }
        Ok(())
    }

    /// True when `r_k = 1` for `1 ≤ k ≤ n`.
    pub fn r_is_one(&self, n: u64) -> bool {
        (1..=n).all(|k| self.r(k).map(|p| p.is_one()).unwrap_or(false))
    }
}
