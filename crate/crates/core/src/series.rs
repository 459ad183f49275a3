//! Truncated power series in an unnamed variable `x` with polynomial
//! coefficients, and the generating functions of recursive matrices
//! `R(a, b; c, e)`.

use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::{PolyMatrix, Polynomial, VarSet};
use crate::recmatrix::{build_triangle, RecError};
use crate::weights::{WeightError, WeightSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("constant coefficient must be 1 for inversion, got {0}")]
    NotUnit(String),
    #[error("riordan parameter `{0}` has a negative coefficient")]
    NegativeParameter(char),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Rec(#[from] RecError),
}

/// `c_0 + c_1 x + … + c_T x^T`, all arithmetic truncated at `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySeries {
    vars: VarSet,
    coeffs: Vec<Polynomial>,
}

impl PolySeries {
    /// Pads with zeros or truncates `coeffs` to length `order + 1`.
    pub fn new(vars: &VarSet, mut coeffs: Vec<Polynomial>, order: usize) -> Self {
        coeffs.resize(order + 1, Polynomial::zero(vars));
        PolySeries {
            vars: vars.clone(),
            coeffs,
        }
    }

    pub fn zero(vars: &VarSet, order: usize) -> Self {
        Self::new(vars, Vec::new(), order)
    }

    pub fn one(vars: &VarSet, order: usize) -> Self {
        Self::new(vars, vec![Polynomial::one(vars)], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn coeff(&self, n: usize) -> &Polynomial {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    fn same_order(&self, other: &PolySeries) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch(self.order(), other.order()))
        }
    }

    pub fn add(&self, other: &PolySeries) -> Result<PolySeries, SeriesError> {
        self.same_order(other)?;
        Ok(PolySeries {
            vars: self.vars.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &PolySeries) -> Result<PolySeries, SeriesError> {
        self.same_order(other)?;
        Ok(PolySeries {
            vars: self.vars.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &PolySeries) -> Result<PolySeries, SeriesError> {
        self.same_order(other)?;
        let t = self.order();
        let mut out = vec![Polynomial::zero(&self.vars); t + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=t - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Ok(PolySeries {
            vars: self.vars.clone(),
            coeffs: out,
        })
    }

    /// Multiplies every coefficient by `p`.
    pub fn scale(&self, p: &Polynomial) -> PolySeries {
        PolySeries {
            vars: self.vars.clone(),
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> PolySeries {
        let t = self.order();
        let mut coeffs = vec![Polynomial::zero(&self.vars); k.min(t + 1)];
        coeffs.extend(self.coeffs.iter().take((t + 1).saturating_sub(k)).cloned());
        PolySeries {
            vars: self.vars.clone(),
            coeffs,
        }
    }

    /// Multiplicative inverse of a series with constant term 1, via
    /// `g_n = -Σ_{i≥1} f_i g_{n-i}`.
    pub fn inverse(&self) -> Result<PolySeries, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NotUnit(self.coeffs[0].to_string()));
        }
        let t = self.order();
        let mut g: Vec<Polynomial> = Vec::with_capacity(t + 1);
        g.push(Polynomial::one(&self.vars));
        for n in 1..=t {
            let mut acc = Polynomial::zero(&self.vars);
            for i in 1..=n {
                let f = &self.coeffs[i];
                if !f.is_zero() && !g[n - i].is_zero() {
                    acc = &acc + &(f * &g[n - i]);
                }
            }
            g.push(-acc);
        }
        Ok(PolySeries {
            vars: self.vars.clone(),
            coeffs: g,
        })
    }
}

/// Parameters of the recursive matrix
/// `r_{n+1,0} = a r_{n,0} + b r_{n,1}`,
/// `r_{n+1,k+1} = r_{n,k} + c r_{n,k+1} + e r_{n,k+2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiordanSpec {
    pub a: Polynomial,
    pub b: Polynomial,
    pub c: Polynomial,
    pub e: Polynomial,
}

impl RiordanSpec {
    pub fn new(
        a: Polynomial,
        b: Polynomial,
        c: Polynomial,
        e: Polynomial,
    ) -> Result<Self, SeriesError> {
        for (name, p) in [('a', &a), ('b', &b), ('c', &c), ('e', &e)] {
            if !p.is_x_nonnegative() {
                return Err(SeriesError::NegativeParameter(name));
            }
        }
        Ok(RiordanSpec { a, b, c, e })
    }

    pub fn parse(vars: &VarSet, a: &str, b: &str, c: &str, e: &str) -> Result<Self, SeriesError> {
        let p = |s: &str| Polynomial::parse(vars, s).expect("riordan parameter text");
        Self::new(p(a), p(b), p(c), p(e))
    }

    pub fn vars(&self) -> &VarSet {
        self.a.vars()
    }

    /// The weight system with `s_0 = a`, `s_k = c`, `t_1 = b`, `t_k = e`,
    /// `r_k = 1`.
    pub fn weight_system(&self) -> Result<WeightSystem, SeriesError> {
        let s = format!(
            "k=0: {}; else: {}",
            self.a.to_expr_string(),
            self.c.to_expr_string()
        );
        let t = format!(
            "k=1: {}; else: {}",
            self.b.to_expr_string(),
            self.e.to_expr_string()
        );
        Ok(WeightSystem::new(self.vars().clone(), "1", &s, &t)?)
    }

    /// `Z = (a, b)`.
    pub fn z_sequence(&self) -> Vec<Polynomial> {
        vec![self.a.clone(), self.b.clone()]
    }

    /// `A = (1, c, e)`.
    pub fn a_sequence(&self) -> Vec<Polynomial> {
        vec![Polynomial::one(self.vars()), self.c.clone(), self.e.clone()]
    }
}

/// The series solution of `h = 1 + c x h + e x^2 h^2`.
pub fn solve_h(spec: &RiordanSpec, order: usize) -> PolySeries {
    let vars = spec.vars();
    let mut h: Vec<Polynomial> = Vec::with_capacity(order + 1);
    h.push(Polynomial::one(vars));
    for n in 1..=order {
        let mut acc = &spec.c * &h[n - 1];
        if n >= 2 && !spec.e.is_zero() {
            let mut conv = Polynomial::zero(vars);
            for i in 0..=n - 2 {
                conv = &conv + &(&h[i] * &h[n - 2 - i]);
            }
            acc = &acc + &(&spec.e * &conv);
        }
        h.push(acc);
    }
    PolySeries::new(vars, h, order)
}

/// `d = 1 / (1 - x (a + b x h))`.
pub fn solve_d(spec: &RiordanSpec, order: usize) -> PolySeries {
    let vars = spec.vars();
    let h = solve_h(spec, order);
    let inner = PolySeries::new(vars, vec![spec.a.clone()], order)
        .add(&h.scale(&spec.b).shift(1))
        .expect("same order");
    PolySeries::one(vars, order)
        .sub(&inner.shift(1))
        .expect("same order")
        .inverse()
        .expect("constant term is 1")
}

/// `h - 1 - c x h - e x^2 h^2`, zero through order `T` for the true solution.
pub fn h_residual(spec: &RiordanSpec, h: &PolySeries) -> PolySeries {
    let vars = spec.vars();
    let t = h.order();
    let h2 = h.mul(h).expect("same order");
    h.sub(&PolySeries::one(vars, t))
        .and_then(|s| s.sub(&h.scale(&spec.c).shift(1)))
        .and_then(|s| s.sub(&h2.scale(&spec.e).shift(2)))
        .expect("same order")
}

/// One line of a generating-function comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnComparison {
    pub n: usize,
    pub from_series: Polynomial,
    pub from_triangle: Polynomial,
}

impl ColumnComparison {
    pub fn equal(&self) -> bool {
        self.from_series == self.from_triangle
    }
}

/// `d_n` against `m_{n,0}` for `n ≤ T`.
pub fn compare_riordan_column(
    spec: &RiordanSpec,
    w: &WeightSystem,
    order: usize,
) -> Result<Vec<ColumnComparison>, SeriesError> {
    let d = solve_d(spec, order);
    let tri = build_triangle(w, order)?;
    Ok((0..=order)
        .map(|n| ColumnComparison {
            n,
            from_series: d.coeff(n).clone(),
            from_triangle: tri.get(n, 0),
        })
        .collect())
}

pub fn verify_riordan_column(
    spec: &RiordanSpec,
    w: &WeightSystem,
    order: usize,
) -> Result<bool, SeriesError> {
    Ok(compare_riordan_column(spec, w, order)?
        .iter()
        .all(ColumnComparison::equal))
}

/// Whether `m_{n+1,0} = Σ_j z_j m_{n,j}` and
/// `m_{n+1,k+1} = Σ_j a_j m_{n,k+j}` hold throughout the matrix; entries
/// past the last column count as zero.
pub fn verify_az_recurrences(m: &PolyMatrix, z: &[Polynomial], a: &[Polynomial]) -> bool {
    let vars = m.vars();
    let at = |n: usize, k: usize| {
        if k < m.cols() {
            m.get(n, k).clone()
        } else {
            Polynomial::zero(vars)
        }
    };
    let dot = |coeffs: &[Polynomial], n: usize, k0: usize| {
        coeffs
            .iter()
            .enumerate()
            .fold(Polynomial::zero(vars), |acc, (j, c)| &acc + &(c * &at(n, k0 + j)))
    };
    for n in 0..m.rows().saturating_sub(1) {
        if at(n + 1, 0) != dot(z, n, 0) {
            return false;
        }
        for k in 0..m.cols().saturating_sub(1) {
            if at(n + 1, k + 1) != dot(a, n, k) {
                return false;
            }
        }
    }
    true
}

/// `1 + Σ_{k=1}^{T} q^k x^k / ((1-px)(1-2px)⋯(1-kpx))` over variables `(p, q)`.
pub fn bell_gf_series(order: usize) -> PolySeries {
    let vars = VarSet::new(["p", "q"]).expect("distinct names");
    let p = Polynomial::var(&vars, "p").expect("declared");
    let q = Polynomial::var(&vars, "q").expect("declared");
    let mut total = PolySeries::one(&vars, order);
    let mut denom = PolySeries::one(&vars, order);
    let mut qk = Polynomial::one(&vars);
    for k in 1..=order {
        let factor = PolySeries::new(
            &vars,
            vec![Polynomial::one(&vars), -p.scale(&BigInt::from(k))],
            order,
        );
        denom = denom.mul(&factor).expect("same order");
        qk = &qk * &q;
        let term = denom.inverse().expect("unit").scale(&qk).shift(k);
        total = total.add(&term).expect("same order");
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> VarSet {
        VarSet::new(["q"]).unwrap()
    }

    fn series(v: &VarSet, items: &[&str], order: usize) -> PolySeries {
        PolySeries::new(
            v,
            items.iter().map(|s| Polynomial::parse(v, s).unwrap()).collect(),
            order,
        )
    }

    fn texts(s: &PolySeries) -> Vec<String> {
        s.coeffs().iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn products() {
        let v = q();
        let ones = series(&v, &["1", "1", "1", "1"], 3);
        assert_eq!(ones.mul(&PolySeries::one(&v, 3)).unwrap(), ones);
        assert_eq!(texts(&series(&v, &["1", "1"], 2).mul(&series(&v, &["1", "1"], 2)).unwrap()), ["1", "2", "1"]);
        assert_eq!(texts(&series(&v, &["1", "q"], 2).mul(&series(&v, &["1", "q"], 2)).unwrap()), ["1", "2q", "q^2"]);
        assert!(ones.mul(&PolySeries::one(&v, 2)).is_err());
    }

    #[test]
    fn inverses() {
        let v = q();
        assert_eq!(texts(&series(&v, &["1", "-q"], 3).inverse().unwrap()), ["1", "q", "q^2", "q^3"]);
        assert_eq!(PolySeries::one(&v, 4).inverse().unwrap(), PolySeries::one(&v, 4));
        assert_eq!(texts(&series(&v, &["1", "-1-q"], 2).inverse().unwrap()), ["1", "1+q", "1+2q+q^2"]);
        assert!(matches!(series(&v, &["2"], 2).inverse(), Err(SeriesError::NotUnit(_))));
    }

    #[test]
    fn shift_truncates() {
        let v = q();
        let s = series(&v, &["1", "2", "3"], 2);
        assert_eq!(texts(&s.shift(1)), ["0", "1", "2"]);
        assert_eq!(texts(&s.shift(5)), ["0", "0", "0"]);
    }

    #[test]
    fn h_and_d() {
        let v = q();
        let triv = RiordanSpec::parse(&v, "1", "0", "0", "0").unwrap();
        assert_eq!(solve_h(&triv, 3), PolySeries::one(&v, 3));
        let ex31 = RiordanSpec::parse(&v, "1", "q", "1+q", "q").unwrap();
        let h = solve_h(&ex31, 4);
        assert_eq!(h.coeff(1).to_string(), "1+q");
        assert_eq!(h.coeff(2), &Polynomial::parse(&v, "(1+q)^2+q").unwrap());
        assert!(h_residual(&ex31, &h).coeffs().iter().all(Polynomial::is_zero));
        assert_eq!(texts(&solve_d(&ex31, 3)), ["1", "1", "1+q", "1+3q+q^2"]);
        let geo = RiordanSpec::parse(&v, "2q", "0", "1", "1").unwrap();
        assert_eq!(texts(&solve_d(&geo, 3)), ["1", "2q", "4q^2", "8q^3"]);
    }

    #[test]
    fn weight_system_round_trip() {
        let v = VarSet::new(["p", "q"]).unwrap();
        let spec = RiordanSpec::parse(&v, "p+q", "2p*q", "p+q", "p*q").unwrap();
        let w = spec.weight_system().unwrap();
        assert_eq!(w.s(0).unwrap(), spec.a);
        assert_eq!(w.s(3).unwrap(), spec.c);
        assert_eq!(w.t(1).unwrap(), spec.b);
        assert_eq!(w.t(2).unwrap(), spec.e);
        assert_eq!(solve_d(&spec, 2).coeff(2).to_string(), "p^2+4p*q+q^2");
        assert!(verify_riordan_column(&spec, &w, 8).unwrap());
    }

    #[test]
    fn az_recurrences() {
        let v = q();
        let ex31 = RiordanSpec::parse(&v, "1", "q", "1+q", "q").unwrap();
        let w = ex31.weight_system().unwrap();
        let m = build_triangle(&w, 6).unwrap().leading_block(7);
        assert!(verify_az_recurrences(&m, &ex31.z_sequence(), &ex31.a_sequence()));
        assert!(!verify_az_recurrences(&m, &ex31.a_sequence(), &ex31.a_sequence()));
        let pascal = RiordanSpec::parse(&v, "1", "0", "1", "0").unwrap();
        let pm = build_triangle(&pascal.weight_system().unwrap(), 5).unwrap().leading_block(6);
        let one = Polynomial::one(&v);
        assert!(verify_az_recurrences(&pm, &[one.clone()], &[one.clone(), one.clone()]));
        assert_eq!(pm.get(5, 2).to_string(), "10");
        let id = PolyMatrix::identity(&v, 4);
        assert!(verify_az_recurrences(&id, &[Polynomial::zero(&v)], &[one]));
    }

    #[test]
    fn bell_series_coefficients() {
        let s = bell_gf_series(5);
        assert!(s.coeff(0).is_one());
        assert_eq!(s.coeff(3).to_string(), "p^2*q+3p*q^2+q^3");
        let mut at = crate::poly::Assignment::new();
        at.insert("p".into(), 1.into());
        at.insert("q".into(), 1.into());
        let bells: Vec<BigInt> = s.coeffs().iter().map(|c| c.evaluate(&at).unwrap()).collect();
        assert_eq!(bells, [1, 1, 2, 5, 15, 52].map(BigInt::from));
    }
}
