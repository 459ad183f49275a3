//! Homogenization by an extra variable: a polynomial of degree `d` becomes
//! `x0^d · f(x/x0)`, computed by padding exponents.

use thiserror::Error;

use crate::poly::{PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomogError {
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("variable `{0}` already occurs in the polynomial ring")]
    NameCollision(String),
    #[error("term {index} has degree {found}, expected {index}")]
    DegreeMismatch { index: usize, found: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Maximal total degree.
pub fn degree(f: &Polynomial) -> Result<u32, HomogError> {
    f.total_degree().ok_or(HomogError::ZeroPolynomial)
}

pub fn is_homogeneous(f: &Polynomial) -> Result<bool, HomogError> {
    let d = degree(f)?;
    Ok(f.terms().iter().all(|(m, _)| m.degree() == d))
}

/// Homogenizes to the degree of `f`.
pub fn homogenize(f: &Polynomial, x0: &str) -> Result<Polynomial, HomogError> {
    let d = degree(f)?;
    homogenize_to(f, x0, d)
}

/// Pads every monomial with `x0` up to total degree `target`; `x0` becomes
/// the first variable of the new ring.
fn homogenize_to(f: &Polynomial, x0: &str, target: u32) -> Result<Polynomial, HomogError> {
    if f.vars().contains(x0) {
        return Err(HomogError::NameCollision(x0.to_string()));
    }
    let vars = f.vars().with_prepended(x0)?;
    Ok(Polynomial::from_terms(
        &vars,
        f.terms().iter().map(|(m, c)| {
            let mut e = Vec::with_capacity(vars.len());
            e.push(target - m.degree());
            e.extend_from_slice(m.exponents());
            (e, c.clone())
        }),
    )?)
}

/// Homogenizes `a_n` to degree `n`; requires `deg(a_n) = n` for every `n`.
pub fn homogenize_sequence(seq: &[Polynomial], x0: &str) -> Result<Vec<Polynomial>, HomogError> {
    seq.iter()
        .enumerate()
        .map(|(n, f)| {
            let d = f.total_degree();
            if d != Some(n as u32) {
                return Err(HomogError::DegreeMismatch {
                    index: n,
                    found: d.map_or("undefined (zero polynomial)".to_string(), |d| d.to_string()),
                });
            }
            homogenize_to(f, x0, n as u32)
        })
        .collect()
}
