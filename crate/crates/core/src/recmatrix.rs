//! The recursive triangle `m_{n,k}`, its Jacobi matrix, Hankel truncations
//! of the first column, and the Motzkin-path reference enumeration.

use thiserror::Error;

use crate::poly::{MatrixError, PolyMatrix, Polynomial, VarSet};
use crate::weights::{WeightError, WeightSystem};

/// Path enumeration is exponential in `n`; suites stop here by default.
pub const DEFAULT_ORACLE_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecError {
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error("sequence has {got} terms, a {n}x{n} Hankel matrix needs {needed}")]
    InsufficientLength { n: usize, needed: usize, got: usize },
    #[error("size must be at least 1")]
    EmptySize,
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Rows `0..=N` of the lower-triangular array generated by
/// `m_{n+1,k} = r_k m_{n,k-1} + s_k m_{n,k} + t_{k+1} m_{n,k+1}`, `m_{0,0} = 1`.
#[derive(Debug, Clone)]
pub struct RecursiveTriangle {
    weights: WeightSystem,
    rows: Vec<Vec<Polynomial>>,
}

impl RecursiveTriangle {
    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn vars(&self) -> &VarSet {
        self.weights.vars()
    }

    /// Largest row index `N`.
    pub fn size(&self) -> usize {
        self.rows.len() - 1
    }

    /// `m_{n,k}`, zero outside `0 ≤ k ≤ n`.
    pub fn get(&self, n: usize, k: usize) -> Polynomial {
        self.rows
            .get(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.vars()))
    }

    pub fn row(&self, n: usize) -> &[Polynomial] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<Polynomial>] {
        &self.rows
    }

    /// `m_{0,k}, …, m_{N,k}`.
    pub fn column(&self, k: usize) -> Vec<Polynomial> {
        (0..self.rows.len()).map(|n| self.get(n, k)).collect()
    }

    pub fn first_column(&self) -> Vec<Polynomial> {
        self.rows.iter().map(|r| r[0].clone()).collect()
    }

    /// The leading `n×n` block `[m_{i,j}]_{0≤i,j<n}`.
    pub fn leading_block(&self, n: usize) -> PolyMatrix {
        assert!(n <= self.rows.len(), "block larger than the triangle");
        PolyMatrix::from_fn(self.vars(), n, n, |i, j| self.get(i, j))
    }
}

pub fn build_triangle(w: &WeightSystem, n: usize) -> Result<RecursiveTriangle, RecError> {
    let vars = w.vars();
    let mut r = Vec::with_capacity(n + 1);
    let mut s = Vec::with_capacity(n + 1);
    let mut t = Vec::with_capacity(n + 2);
    for k in 0..=n as u64 {
        r.push(if k == 0 { Polynomial::zero(vars) } else { w.r(k)? });
        s.push(w.s(k)?);
        t.push(if k == 0 { Polynomial::zero(vars) } else { w.t(k)? });
    }
    let mut rows: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(vars)]];
    for m in 0..n {
        let prev = &rows[m];
        let mut next = Vec::with_capacity(m + 2);
        for k in 0..=m + 1 {
            let mut acc = Polynomial::zero(vars);
            if k >= 1 {
                acc = &acc + &(&r[k] * &prev[k - 1]);
            }
            if k <= m {
                acc = &acc + &(&s[k] * &prev[k]);
            }
            if k + 1 <= m {
                acc = &acc + &(&t[k + 1] * &prev[k + 1]);
            }
            next.push(acc);
        }
        rows.push(next);
    }
    Ok(RecursiveTriangle {
        weights: w.clone(),
        rows,
    })
}

/// `m_{n,k}` as a sum over Motzkin prefixes from `(0,0)` to `(n,k)` that
/// never go below the axis. An up-step ending at level `j` weighs `r_j`,
/// a level step at `j` weighs `s_j`, a down-step ending at `j` weighs
/// `t_{j+1}`.
///
/// Enumerates every path separately; cost grows exponentially with `n`.
pub fn motzkin_oracle(w: &WeightSystem, n: usize, k: usize) -> Result<Polynomial, RecError> {
    let vars = w.vars();
    if k > n {
        return Ok(Polynomial::zero(vars));
    }
    let mut up = Vec::with_capacity(n + 1);
    let mut level = Vec::with_capacity(n + 1);
    let mut down = Vec::with_capacity(n + 1);
    for j in 0..=n as u64 {
        up.push(if j == 0 { Polynomial::zero(vars) } else { w.r(j)? });
        level.push(w.s(j)?);
        down.push(w.t(j + 1)?);
    }
    let steps = StepWeights { up, level, down };
    let mut total = Polynomial::zero(vars);
    walk(&steps, 0, n, k, Polynomial::one(vars), &mut total);
    Ok(total)
}

struct StepWeights {
    up: Vec<Polynomial>,
    level: Vec<Polynomial>,
    down: Vec<Polynomial>,
}

fn walk(w: &StepWeights, height: usize, left: usize, target: usize, acc: Polynomial, total: &mut Polynomial) {
    if left == 0 {
        if height == target {
            *total = &*total + &acc;
        }
        return;
    }
    // the remaining steps must still be able to reach the target height
    let reachable = |h: usize| h.abs_diff(target) <= left - 1;
    if reachable(height + 1) {
        walk(w, height + 1, left - 1, target, &acc * &w.up[height + 1], total);
    }
    if reachable(height) {
        walk(w, height, left - 1, target, &acc * &w.level[height], total);
    }
    if height > 0 && reachable(height - 1) {
        walk(w, height - 1, left - 1, target, &acc * &w.down[height - 1], total);
    }
}

/// The `n×n` tridiagonal matrix with `s_0..s_{n-1}` on the diagonal,
/// `r_1..r_{n-1}` above and `t_1..t_{n-1}` below.
pub fn jacobi_matrix(w: &WeightSystem, n: usize) -> Result<PolyMatrix, RecError> {
    if n == 0 {
        return Err(RecError::EmptySize);
    }
    let mut m = PolyMatrix::zeros(w.vars(), n, n);
    for i in 0..n {
        m.set(i, i, w.s(i as u64)?);
        if i + 1 < n {
            m.set(i, i + 1, w.r(i as u64 + 1)?);
            m.set(i + 1, i, w.t(i as u64 + 1)?);
        }
    }
    Ok(m)
}

/// `diag(T_0, …, T_{n-1})` with `T_0 = 1`, `T_k = t_1 ⋯ t_k`.
pub fn diagonal_t(w: &WeightSystem, n: usize) -> Result<PolyMatrix, RecError> {
    if n == 0 {
        return Err(RecError::EmptySize);
    }
    let vars = w.vars();
    let mut m = PolyMatrix::zeros(vars, n, n);
    let mut acc = Polynomial::one(vars);
    for k in 0..n {
        if k > 0 {
            acc = &acc * &w.t(k as u64)?;
        }
        m.set(k, k, acc.clone());
    }
    Ok(m)
}

/// An `n×n` Hankel matrix together with the sequence it was read from.
#[derive(Debug, Clone)]
pub struct HankelTruncation {
    pub sequence: Vec<Polynomial>,
    pub matrix: PolyMatrix,
}

/// `[a_{i+j}]_{0≤i,j<n}`; needs at least `2n-1` terms.
pub fn hankel(seq: &[Polynomial], n: usize) -> Result<HankelTruncation, RecError> {
    if n == 0 {
        return Err(RecError::EmptySize);
    }
    let needed = 2 * n - 1;
    if seq.len() < needed {
        return Err(RecError::InsufficientLength {
            n,
            needed,
            got: seq.len(),
        });
    }
    let vars = seq[0].vars().clone();
    for p in &seq[..needed] {
        if p.vars() != &vars {
            return Err(MatrixError::Poly(crate::poly::PolyError::VarSetMismatch {
                left: vars.names().join(","),
                right: p.vars().names().join(","),
            })
            .into());
        }
    }
    Ok(HankelTruncation {
        sequence: seq[..needed].to_vec(),
        matrix: PolyMatrix::from_fn(&vars, n, n, |i, j| seq[i + j].clone()),
    })
}

/// Hankel truncation of the first column of the triangle for `w`.
pub fn column_hankel(w: &WeightSystem, n: usize) -> Result<HankelTruncation, RecError> {
    if n == 0 {
        return Err(RecError::EmptySize);
    }
    let tri = build_triangle(w, 2 * n - 2)?;
    hankel(&tri.first_column(), n)
}

/// Whether the `n×n` Hankel matrix of `(m_{j,0})` equals `M·T·Mᵗ`, with
/// `M` the leading block of the triangle.
///
/// The identity needs `r_k = 1`; for other `r` the comparison is still
/// carried out and will typically report `false`.
pub fn verify_factorization(w: &WeightSystem, n: usize) -> Result<bool, RecError> {
    if n == 0 {
        return Err(RecError::EmptySize);
    }
    let tri = build_triangle(w, 2 * n - 2)?;
    let h = hankel(&tri.first_column(), n)?.matrix;
    let m = tri.leading_block(n);
    let t = diagonal_t(w, n)?;
    let mtm = m.try_mul(&t)?.try_mul(&m.transpose())?;
    Ok(h == mtm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex31() -> WeightSystem {
        WeightSystem::from_strs(&["q"], "1", "k=0: 1; else: 1+q", "q").unwrap()
    }

    fn ex32() -> WeightSystem {
        WeightSystem::from_strs(&["q"], "1", "1+q+q^2", "q").unwrap()
    }

    #[test]
    fn triangle_entries() {
        let a = build_triangle(&ex31(), 3).unwrap();
        assert_eq!(a.get(3, 0).to_string(), "1+3q+q^2");
        assert_eq!(a.get(3, 1).to_string(), "3+5q+q^2");
        assert_eq!(a.get(3, 2).to_string(), "3+2q");
        assert!(a.get(3, 3).is_one());
        assert!(a.get(2, 3).is_zero());
        let b = build_triangle(&ex32(), 2).unwrap();
        assert_eq!(b.get(2, 1).to_string(), "2+2q+2q^2");
        let z = build_triangle(&ex31(), 0).unwrap();
        assert_eq!(z.rows().len(), 1);
        assert!(z.get(0, 0).is_one());
    }

    #[test]
    fn oracle_small_cases() {
        let w = WeightSystem::from_strs(&["a", "b", "c", "d"], "k=1: a; else: 0", "k=0: b; else: 0", "k=1: c; else: d").unwrap();
        assert_eq!(motzkin_oracle(&w, 1, 0).unwrap().to_string(), "b");
        // LL and UD
        assert_eq!(motzkin_oracle(&w, 2, 0).unwrap().to_string(), "a*c+b^2");
        assert_eq!(motzkin_oracle(&ex31(), 3, 0).unwrap().to_string(), "1+3q+q^2");
        assert!(motzkin_oracle(&ex31(), 2, 3).unwrap().is_zero());
    }

    #[test]
    fn jacobi_and_t() {
        let j = jacobi_matrix(&ex31(), 2).unwrap();
        assert_eq!(format!("{}", j.get(1, 0)), "q");
        assert_eq!(format!("{}", j.get(1, 1)), "1+q");
        assert!(j.get(0, 1).is_one());
        let t = diagonal_t(&ex31(), 3).unwrap();
        assert_eq!(t.get(2, 2).to_string(), "q^2");
        assert!(t.get(0, 0).is_one());
        assert!(t.get(0, 1).is_zero());
        assert!(jacobi_matrix(&ex31(), 0).is_err());
    }

    #[test]
    fn hankel_shapes() {
        let v = VarSet::new(["q"]).unwrap();
        let geo: Vec<_> = (0..3)
            .map(|i| Polynomial::monomial(&v, &[i], 1).unwrap())
            .collect();
        let h = hankel(&geo, 2).unwrap();
        assert_eq!(h.matrix.get(1, 1).to_string(), "q^2");
        assert!(h.matrix.is_symmetric());
        assert!(matches!(
            hankel(&geo, 3),
            Err(RecError::InsufficientLength { needed: 5, got: 3, .. })
        ));
        assert_eq!(hankel(&geo[..1], 1).unwrap().matrix.rows(), 1);
    }

    #[test]
    fn factorization_small() {
        for n in 1..=5 {
            assert!(verify_factorization(&ex31(), n).unwrap());
        }
    }
}
