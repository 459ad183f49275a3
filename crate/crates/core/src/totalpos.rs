//! Coefficientwise total positivity of polynomial matrices.
//!
//! A matrix is x-TP of order `r` when every minor of order at most `r` is
//! a polynomial with nonnegative coefficients.

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::poly::{MatrixError, PolyMatrix, Polynomial, VarSet};
use crate::weights::{WeightError, WeightFormula, WeightSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TotalPosError {
    #[error("order bound must be at least 1")]
    ZeroOrder,
    #[error("matrix is not tridiagonal")]
    NotTridiagonal,
    #[error("entry ({row},{col}) = {value} has a negative coefficient")]
    NegativeEntry { row: usize, col: usize, value: String },
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    /// No violation among the minors checked, but the order bound was below
    /// the matrix size.
    #[serde(rename = "pass-up-to-order")]
    PassUpToOrder,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    #[serde(serialize_with = "poly_text")]
    pub det: Polynomial,
}

fn poly_text<S: Serializer>(p: &Polynomial, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TPReport {
    pub verdict: Verdict,
    pub order_checked: usize,
    pub violations: Vec<Violation>,
    pub minors_evaluated: u64,
}

impl TPReport {
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TpOptions {
    /// Collect every violation instead of stopping at the first.
    pub exhaustive: bool,
    /// Skip minor `(R, C)` when `C < R` if the matrix is symmetric.
    pub use_symmetry: bool,
    /// Minors handed to the worker pool per batch.
    pub batch: usize,
}

impl Default for TpOptions {
    fn default() -> Self {
        TpOptions {
            exhaustive: false,
            use_symmetry: true,
            batch: 256,
        }
    }
}

/// Default order bound for a matrix of size `n`.
pub fn default_order(n: usize) -> usize {
    n.min(4)
}

pub fn check_xtp(m: &PolyMatrix, order: usize) -> Result<TPReport, TotalPosError> {
    check_xtp_with(m, order, &TpOptions::default())
}

/// Enumerates minors by increasing order, then row set, then column set
/// (both lexicographic), and tests each determinant for nonnegativity.
///
/// Results do not depend on the size of the worker pool: batches are
/// evaluated in parallel but scanned in enumeration order.
pub fn check_xtp_with(
    m: &PolyMatrix,
    order: usize,
    opts: &TpOptions,
) -> Result<TPReport, TotalPosError> {
    if order == 0 {
        return Err(TotalPosError::ZeroOrder);
    }
    let full = m.rows().min(m.cols());
    let kmax = order.min(full);
    let symmetric = opts.use_symmetry && m.is_symmetric();
    let mut violations = Vec::new();
    let mut evaluated = 0u64;
    let mut batch: Vec<(Vec<usize>, Vec<usize>)> = Vec::with_capacity(opts.batch);

    let flush = |batch: &mut Vec<(Vec<usize>, Vec<usize>)>,
                     violations: &mut Vec<Violation>,
                     evaluated: &mut u64|
     -> bool {
        let dets: Vec<Polynomial> = batch
            .par_iter()
            .map(|(r, c)| minor(m, r, c))
            .collect();
        for ((r, c), det) in batch.drain(..).zip(dets) {
            *evaluated += 1;
            if !det.is_x_nonnegative() {
                violations.push(Violation { rows: r, cols: c, det });
                if !opts.exhaustive {
                    return true;
                }
            }
        }
        false
    };

    'outer: for k in 1..=kmax {
        let row_sets = combinations(m.rows(), k);
        let col_sets = combinations(m.cols(), k);
        for r in &row_sets {
            for c in &col_sets {
                if symmetric && c < r {
                    continue;
                }
                batch.push((r.clone(), c.clone()));
                if batch.len() >= opts.batch.max(1)
                    && flush(&mut batch, &mut violations, &mut evaluated)
                {
                    break 'outer;
                }
            }
        }
        if !batch.is_empty() && flush(&mut batch, &mut violations, &mut evaluated) {
            break;
        }
    }

    let verdict = if !violations.is_empty() {
        Verdict::Fail
    } else if kmax < full {
        Verdict::PassUpToOrder
    } else {
        Verdict::Pass
    };
    Ok(TPReport {
        verdict,
        order_checked: kmax,
        violations,
        minors_evaluated: evaluated,
    })
}

fn minor(m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Polynomial {
    m.submatrix_unchecked(rows, cols)
        .determinant()
        .expect("minors are square")
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// x-TP test for a tridiagonal matrix with nonnegative entries using only
/// its consecutive principal minors, computed by the continuant
/// recurrence `D_k = a_k D_{k-1} - b_{k-1} c_{k-1} D_{k-2}`.
///
/// A pass certifies every order, so `order_checked` is the matrix size.
pub fn check_tridiagonal_xtp(j: &PolyMatrix) -> Result<TPReport, TotalPosError> {
    if !j.is_tridiagonal() {
        return Err(TotalPosError::NotTridiagonal);
    }
    let n = j.rows();
    for r in 0..n {
        for c in r.saturating_sub(1)..(r + 2).min(n) {
            if !j.get(r, c).is_x_nonnegative() {
                return Err(TotalPosError::NegativeEntry {
                    row: r,
                    col: c,
                    value: j.get(r, c).to_string(),
                });
            }
        }
    }
    let vars = j.vars();
    // table[s][k-1] = det of the block starting at s with size k
    let table: Vec<Vec<Polynomial>> = (0..n)
        .into_par_iter()
        .map(|s| continuants(j, s, vars))
        .collect();
    let mut evaluated = 0;
    for k in 1..=n {
        for s in 0..=n - k {
            evaluated += 1;
            let det = &table[s][k - 1];
            if !det.is_x_nonnegative() {
                return Ok(TPReport {
                    verdict: Verdict::Fail,
                    order_checked: n,
                    violations: vec![Violation {
                        rows: (s..s + k).collect(),
                        cols: (s..s + k).collect(),
                        det: det.clone(),
                    }],
                    minors_evaluated: evaluated,
                });
            }
        }
    }
    Ok(TPReport {
        verdict: Verdict::Pass,
        order_checked: n,
        violations: Vec::new(),
        minors_evaluated: evaluated,
    })
}

/// Consecutive principal minors of `j` starting at `s`, sizes `1..=n-s`.
fn continuants(j: &PolyMatrix, s: usize, vars: &VarSet) -> Vec<Polynomial> {
    let n = j.rows();
    let mut out: Vec<Polynomial> = Vec::with_capacity(n - s);
    let mut prev2 = Polynomial::one(vars);
    let mut prev1 = j.get(s, s).clone();
    out.push(prev1.clone());
    for i in s + 1..n {
        let off = j.get(i - 1, i) * j.get(i, i - 1);
        let next = &(j.get(i, i) * &prev1) - &(&off * &prev2);
        out.push(next.clone());
        prev2 = prev1;
        prev1 = next;
    }
    out
}

/// Which sufficient condition failed first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionFailure {
    /// 1 for `s_0 - 1`, 2 for `s_i s_{i+1} - t_{i+1} r_{i+1}`,
    /// 3 for `s_{i+1} - t_{i+1} r_{i+1} - 1`.
    pub condition: u8,
    pub index: usize,
    pub value: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaKeyReport {
    pub depth: usize,
    pub failure: Option<ConditionFailure>,
}

impl LemmaKeyReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Tests the three coefficientwise inequalities for `0 ≤ i < depth`:
/// `s_0 ≥ 1`, `s_i s_{i+1} ≥ t_{i+1} r_{i+1}` and
/// `s_{i+1} ≥ t_{i+1} r_{i+1} + 1`. Reports the first that fails.
pub fn check_lemma_key(w: &WeightSystem, depth: usize) -> Result<LemmaKeyReport, TotalPosError> {
    let vars = w.vars();
    let one = Polynomial::one(vars);
    let fail = |condition, index, value| {
        Ok(LemmaKeyReport {
            depth,
            failure: Some(ConditionFailure {
                condition,
                index,
                value,
            }),
        })
    };
    let c1 = &w.s(0)? - &one;
    if !c1.is_x_nonnegative() {
        return fail(1, 0, c1);
    }
    for i in 0..depth {
        let k = i as u64;
        let tr = &w.t(k + 1)? * &w.r(k + 1)?;
        let (si, si1) = (w.s(k)?, w.s(k + 1)?);
        let c2 = &(&si * &si1) - &tr;
        if !c2.is_x_nonnegative() {
            return fail(2, i, c2);
        }
        let c3 = &(&si1 - &tr) - &one;
        if !c3.is_x_nonnegative() {
            return fail(3, i, c3);
        }
    }
    Ok(LemmaKeyReport {
        depth,
        failure: None,
    })
}

/// Whether `s_n = b_{n+1} + c_{n+1}` (`0 ≤ n ≤ depth`) and
/// `t_n = c_n b_{n+1}`, `r_n = 1` (`1 ≤ n ≤ depth`).
pub fn check_bc_decomposition(
    b: &WeightFormula,
    c: &WeightFormula,
    w: &WeightSystem,
    depth: usize,
) -> Result<bool, TotalPosError> {
    let vars = w.vars();
    let bs: Vec<Polynomial> = (0..=depth as u64 + 1)
        .map(|k| b.eval(k, vars))
        .collect::<Result<_, _>>()?;
    let cs: Vec<Polynomial> = (0..=depth as u64 + 1)
        .map(|k| c.eval(k, vars))
        .collect::<Result<_, _>>()?;
    for n in 0..=depth {
        if w.s(n as u64)? != &bs[n + 1] + &cs[n + 1] {
            return Ok(false);
        }
        if n >= 1 && (w.t(n as u64)? != &cs[n] * &bs[n + 1] || !w.r(n as u64)?.is_one()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The `n×n` tridiagonal matrix with `b_{i+1} + c_{i+1}` on the diagonal,
/// ones above and `c_i b_{i+1}` below.
pub fn bc_jacobi(
    b: &WeightFormula,
    c: &WeightFormula,
    vars: &VarSet,
    n: usize,
) -> Result<PolyMatrix, TotalPosError> {
    let mut m = PolyMatrix::zeros(vars, n, n);
    for i in 0..n {
        let k = i as u64;
        m.set(i, i, &b.eval(k + 1, vars)? + &c.eval(k + 1, vars)?);
        if i + 1 < n {
            m.set(i, i + 1, Polynomial::one(vars));
            m.set(i + 1, i, &c.eval(k + 1, vars)? * &b.eval(k + 2, vars)?);
        }
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlcxReport {
    /// First `(n, m, f_n f_m - f_{n-1} f_{m+1})` with a negative coefficient.
    pub failure: Option<(usize, usize, Polynomial)>,
}

impl SlcxReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Strong log-convexity: `f_n f_m - f_{n-1} f_{m+1}` is coefficientwise
/// nonnegative for all `n ≥ m ≥ 1` inside the list.
pub fn check_slcx(seq: &[Polynomial]) -> SlcxReport {
    let len = seq.len();
    for n in 1..len {
        for m in 1..=n.min(len.saturating_sub(2)) {
            let d = &(&seq[n] * &seq[m]) - &(&seq[n - 1] * &seq[m + 1]);
            if !d.is_x_nonnegative() {
                return SlcxReport {
                    failure: Some((n, m, d)),
                };
            }
        }
    }
    SlcxReport { failure: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recmatrix::jacobi_matrix;

    fn q() -> VarSet {
        VarSet::new(["q"]).unwrap()
    }

    fn polys(v: &VarSet, items: &[&str]) -> Vec<Polynomial> {
        items.iter().map(|s| Polynomial::parse(v, s).unwrap()).collect()
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(
            combinations(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn identity_passes() {
        let id = PolyMatrix::identity(&q(), 4);
        let rep = check_xtp(&id, 4).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass);
        assert_eq!(check_xtp(&id, 2).unwrap().verdict, Verdict::PassUpToOrder);
        assert!(check_xtp(&id, 0).is_err());
    }

    #[test]
    fn first_violation_and_json() {
        let v = q();
        // [[1,1],[1,q]]: the only negative minor is the full one, q - 1
        let m = PolyMatrix::from_rows(&v, vec![polys(&v, &["1", "1"]), polys(&v, &["1", "q"])]).unwrap();
        let rep = check_xtp(&m, 2).unwrap();
        assert_eq!(rep.verdict, Verdict::Fail);
        let viol = rep.first_violation().unwrap();
        assert_eq!((viol.rows.clone(), viol.cols.clone()), (vec![0, 1], vec![0, 1]));
        // symmetric: 3 order-1 minors (01 and 10 are one) plus the full one
        assert_eq!(rep.minors_evaluated, 4);
        assert_eq!(
            rep.to_json(),
            r#"{"verdict":"fail","order_checked":2,"violations":[{"rows":[0,1],"cols":[0,1],"det":"-1+q"}],"minors_evaluated":4}"#
        );
        let no_sym = TpOptions { use_symmetry: false, ..TpOptions::default() };
        assert_eq!(check_xtp_with(&m, 2, &no_sym).unwrap().minors_evaluated, 5);
    }

    #[test]
    fn exhaustive_collects_everything() {
        let v = q();
        let m = PolyMatrix::from_rows(
            &v,
            vec![polys(&v, &["1", "2", "0"]), polys(&v, &["2", "1", "2"]), polys(&v, &["0", "2", "1"])],
        )
        .unwrap();
        let opts = TpOptions { exhaustive: true, ..TpOptions::default() };
        let rep = check_xtp_with(&m, 3, &opts).unwrap();
        let early = check_xtp(&m, 3).unwrap();
        assert_eq!(rep.violations[0], early.violations[0]);
        assert!(rep.violations.len() > 1);
        assert!(rep.violations.iter().all(|v| !v.det.is_x_nonnegative()));
    }

    #[test]
    fn tridiagonal_examples() {
        let w = WeightSystem::from_strs(&["q"], "1", "k=0: 1; else: 1+q", "q").unwrap();
        let j = jacobi_matrix(&w, 6).unwrap();
        let rep = check_tridiagonal_xtp(&j).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass);
        assert_eq!(rep.minors_evaluated, 21);
        let v = q();
        let one = PolyMatrix::from_rows(&v, vec![polys(&v, &["q"])]).unwrap();
        assert!(check_tridiagonal_xtp(&one).unwrap().passed());
        let full = PolyMatrix::from_fn(&v, 3, 3, |_, _| Polynomial::one(&v));
        assert_eq!(check_tridiagonal_xtp(&full), Err(TotalPosError::NotTridiagonal));
        let neg = PolyMatrix::from_rows(&v, vec![polys(&v, &["1", "-q"]), polys(&v, &["1", "1"])]).unwrap();
        assert!(matches!(
            check_tridiagonal_xtp(&neg),
            Err(TotalPosError::NegativeEntry { row: 0, col: 1, .. })
        ));
        // [[1,1],[2,1]] fails at the full 2x2 minor
        let bad = PolyMatrix::from_rows(&v, vec![polys(&v, &["1", "1"]), polys(&v, &["2", "1"])]).unwrap();
        let rep = check_tridiagonal_xtp(&bad).unwrap();
        assert_eq!(rep.first_violation().unwrap().det.to_string(), "-1");
    }

    #[test]
    fn lemma_key_examples() {
        let ex31 = WeightSystem::from_strs(&["q"], "1", "k=0: 1; else: 1+q", "q").unwrap();
        assert!(check_lemma_key(&ex31, 8).unwrap().passed());
        let ce = WeightSystem::from_strs(&["q"], "1", "k=0: q^2; else: 1+q^2", "k=1: q^4; else: q^2+q^4").unwrap();
        let f = check_lemma_key(&ce, 4).unwrap().failure.unwrap();
        assert_eq!((f.condition, f.index, f.value.to_string()), (1, 0, "-1+q^2".to_string()));
    }

    #[test]
    fn bc_examples() {
        let v = VarSet::new(["p", "q"]).unwrap();
        let w = WeightSystem::new(v.clone(), "1", "p+q", "p*q").unwrap();
        let b = WeightFormula::parse("p", &v).unwrap();
        let c = WeightFormula::parse("q", &v).unwrap();
        assert!(check_bc_decomposition(&b, &c, &w, 6).unwrap());
        assert!(!check_bc_decomposition(&c, &c, &w, 6).unwrap());
        let j = bc_jacobi(&b, &c, &v, 4).unwrap();
        assert_eq!(j, jacobi_matrix(&w, 4).unwrap());
        let triv = WeightSystem::new(v.clone(), "1", "1", "0").unwrap();
        let one = WeightFormula::parse("1", &v).unwrap();
        let zero = WeightFormula::parse("0", &v).unwrap();
        assert!(check_bc_decomposition(&one, &zero, &triv, 5).unwrap());
    }

    #[test]
    fn slcx_examples() {
        let v = q();
        assert!(check_slcx(&polys(&v, &["1", "q", "q^2", "q^3"])).passed());
        let f = check_slcx(&polys(&v, &["1", "1", "3"])).failure.unwrap();
        assert_eq!((f.0, f.1, f.2.to_string()), (1, 1, "-2".to_string()));
    }
}
