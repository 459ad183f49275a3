//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Terms are kept in canonical form: sorted ascending in graded
//! lexicographic order over the [`VarSet`] order, no zero coefficients.
//! The zero polynomial is the empty term list.

mod matrix;
mod text;

pub use matrix::{MatrixError, PolyMatrix};
pub use text::{parse_assignment, PolyParseError};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;
use smallvec::SmallVec;
use thiserror::Error;

/// Named integer point used by evaluation and specialization.
pub type Assignment = BTreeMap<String, BigInt>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable sets differ: ({left}) vs ({right})")]
    VarSetMismatch { left: String, right: String },
    #[error("variable names must be nonempty and unique, got {0:?}")]
    InvalidVarSet(Vec<String>),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("assignment does not cover variable `{0}`")]
    MissingAssignment(String),
    #[error("exponent vector has length {got}, expected {expected}")]
    ArityMismatch { expected: usize, got: usize },
}

/// Ordered list of distinct variable names; the order fixes exponent positions.
#[derive(Clone)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<I, S>(names: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let valid = names.iter().all(|n| !n.is_empty())
            && names
                .iter()
                .enumerate()
                .all(|(i, n)| !names[..i].contains(n));
        if !valid {
            return Err(PolyError::InvalidVarSet(names));
        }
        Ok(VarSet(names.into()))
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// A new set with `name` placed first.
    pub fn with_prepended(&self, name: &str) -> Result<VarSet, PolyError> {
        VarSet::new(std::iter::once(name.to_string()).chain(self.0.iter().cloned()))
    }

    fn check_same(&self, other: &VarSet) -> Result<(), PolyError> {
        if self == other {
            Ok(())
        } else {
            Err(PolyError::VarSetMismatch {
                left: self.0.join(","),
                right: other.0.join(","),
            })
        }
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for VarSet {}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarSet({})", self.0.join(","))
    }
}

/// Exponent vector, one entry per variable of the owning [`VarSet`].
///
/// Ordered graded-lexicographically: total degree first, then the first
/// differing exponent.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(SmallVec::from_elem(0, arity))
    }

    pub fn from_exponents(exponents: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exponents))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone)]
pub struct Polynomial {
    vars: VarSet,
    terms: Vec<(Monomial, BigInt)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(vars: &VarSet) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, BigInt::one())
    }

    pub fn constant(vars: &VarSet, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(Monomial::one(vars.len()), c)]
        };
        Polynomial {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn var(vars: &VarSet, name: &str) -> Result<Self, PolyError> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut m = Monomial::one(vars.len());
        m.0[i] = 1;
        Ok(Polynomial {
            vars: vars.clone(),
            terms: vec![(m, BigInt::one())],
        })
    }

    pub fn monomial(
        vars: &VarSet,
        exponents: &[u32],
        c: impl Into<BigInt>,
    ) -> Result<Self, PolyError> {
        Self::from_terms(vars, [(exponents.to_vec(), c.into())])
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated or
    /// zero) terms.
    pub fn from_terms<I>(vars: &VarSet, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(PolyError::ArityMismatch {
                    expected: vars.len(),
                    got: e.len(),
                });
            }
            *acc.entry(Monomial::from_exponents(&e)).or_default() += c;
        }
        Ok(Self::from_map(vars, acc))
    }

    fn from_map(vars: &VarSet, acc: FxHashMap<Monomial, BigInt>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Polynomial {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        let m = Monomial::from_exponents(exponents);
        self.terms
            .binary_search_by(|(t, _)| t.cmp(&m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        match self.terms.first() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => BigInt::zero(),
        }
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.last()
    }

    /// Maximal total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    /// True iff every coefficient is nonnegative.
    pub fn is_x_nonnegative(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    /// First term with a negative coefficient.
    pub fn first_negative_term(&self) -> Option<&(Monomial, BigInt)> {
        self.terms.iter().find(|(_, c)| c.is_negative())
    }

    /// `self ≥_x other`: the difference has no negative coefficient.
    pub fn geq_x(&self, other: &Polynomial) -> Result<bool, PolyError> {
        Ok(self.try_sub(other)?.is_x_nonnegative())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.vars.check_same(&other.vars)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.vars.check_same(&other.vars)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let rhs = |c: &BigInt| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0.clone(), rhs(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), rhs(c))));
        Polynomial {
            vars: self.vars.clone(),
            terms: out,
        }
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.vars.check_same(&other.vars)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.vars));
        }
        if self.terms.len() == 1 {
            return Ok(other.mul_term(&self.terms[0].0, &self.terms[0].1));
        }
        if other.terms.len() == 1 {
            return Ok(self.mul_term(&other.terms[0].0, &other.terms[0].1));
        }
        let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
        acc.reserve(self.terms.len() * other.terms.len() / 2);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ca * cb;
                match acc.get_mut(&ma.mul(mb)) {
                    Some(c) => *c += prod,
                    None => {
                        acc.insert(ma.mul(mb), prod);
                    }
                }
            }
        }
        Ok(Self::from_map(&self.vars, acc))
    }

    /// Multiplication by a single term keeps the order, no re-sorting needed.
    fn mul_term(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, d)| (t.mul(m), d * c))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder (or the divisor is zero).
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        if self.vars != divisor.vars {
            return None;
        }
        let (lead_m, lead_c) = divisor.leading_term()?;
        if self.is_zero() {
            return Some(Polynomial::zero(&self.vars));
        }
        if divisor.terms.len() == 1 {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !lead_m.divides(m) || !(c % lead_c).is_zero() {
                    return None;
                }
                terms.push((lead_m.quotient_of(m), c / lead_c));
            }
            return Some(Polynomial {
                vars: self.vars.clone(),
                terms,
            });
        }
        let mut rem: BTreeMap<Monomial, BigInt> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Monomial, BigInt)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if !lead_m.divides(&m) || !(&c % lead_c).is_zero() {
                return None;
            }
            let qm = lead_m.quotient_of(&m);
            let qc = &c / lead_c;
            // the leading product cancels `m` exactly, skip it
            for (dm, dc) in divisor.terms.iter().rev().skip(1) {
                let key = dm.mul(&qm);
                let delta = dc * &qc;
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= delta;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        quot.reverse();
        Some(Polynomial {
            vars: self.vars.clone(),
            terms: quot,
        })
    }

    /// Full evaluation at an integer point given by name.
    pub fn evaluate(&self, point: &Assignment) -> Result<BigInt, PolyError> {
        let values = self
            .vars
            .names()
            .iter()
            .map(|n| {
                point
                    .get(n)
                    .cloned()
                    .ok_or_else(|| PolyError::MissingAssignment(n.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.evaluate_at(&values))
    }

    /// Evaluation with values given positionally in VarSet order.
    pub fn evaluate_at(&self, values: &[BigInt]) -> BigInt {
        assert_eq!(values.len(), self.vars.len(), "point arity");
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in values.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(v.clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Substitutes integer values for the assigned variables, keeping the
    /// VarSet. Unassigned variables stay symbolic; unknown names are errors.
    pub fn specialize(&self, point: &Assignment) -> Result<Polynomial, PolyError> {
        let mut slots: Vec<Option<BigInt>> = vec![None; self.vars.len()];
        for (name, value) in point {
            let i = self
                .vars
                .index_of(name)
                .ok_or_else(|| PolyError::UnknownVariable(name.clone()))?;
            slots[i] = Some(value.clone());
        }
        let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut exps: SmallVec<[u32; 4]> = m.0.clone();
            for (i, slot) in slots.iter().enumerate() {
                if let Some(v) = slot {
                    coeff *= num_traits::pow(v.clone(), exps[i] as usize);
                    exps[i] = 0;
                }
            }
            *acc.entry(Monomial(exps)).or_default() += coeff;
        }
        Ok(Self::from_map(&self.vars, acc))
    }

    /// Sets variable `name` to `value` and removes it from the VarSet.
    pub fn eliminate(&self, name: &str, value: &BigInt) -> Result<Polynomial, PolyError> {
        let i = self
            .vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let vars = VarSet::new(
            self.vars
                .names()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, n)| n.clone()),
        )?;
        Polynomial::from_terms(
            &vars,
            self.terms.iter().map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                let power = e.remove(i);
                (e, c * num_traits::pow(value.clone(), power as usize))
            }),
        )
    }

    /// Re-expresses the polynomial over a superset of its variables.
    pub fn embed(&self, target: &VarSet) -> Result<Polynomial, PolyError> {
        let positions = self
            .vars
            .names()
            .iter()
            .map(|n| {
                target
                    .index_of(n)
                    .ok_or_else(|| PolyError::UnknownVariable(n.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0u32; target.len()];
                for (&p, &x) in positions.iter().zip(m.exponents()) {
                    e[p] = x;
                }
                (e, c.clone())
            }),
        )
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.vars.names().join(","), self)
    }
}

// Operator forms panic on a VarSet mismatch; use the `try_*` methods where
// inputs come from different sources.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
