//! Dense matrices of polynomials over a shared [`VarSet`].

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::{Assignment, PolyError, Polynomial, VarSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("invalid index list: {0}")]
    BadIndices(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    vars: VarSet,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(vars: &VarSet, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            vars: vars.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(vars); rows * cols],
        }
    }

    pub fn identity(vars: &VarSet, n: usize) -> Self {
        let mut m = Self::zeros(vars, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(vars));
        }
        m
    }

    /// Builds from row vectors; every row must have the same length and
    /// every entry the given VarSet.
    pub fn from_rows(vars: &VarSet, rows: Vec<Vec<Polynomial>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(n * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(MatrixError::Dimension(format!(
                    "row {i} has {} entries, expected {c}",
                    row.len()
                )));
            }
            for p in row {
                if p.vars() != vars {
                    return Err(PolyError::VarSetMismatch {
                        left: vars.names().join(","),
                        right: p.vars().names().join(","),
                    }
                    .into());
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix {
            vars: vars.clone(),
            rows: n,
            cols: c,
            entries,
        })
    }

    pub fn from_fn(
        vars: &VarSet,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Polynomial,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let p = f(i, j);
                assert!(p.vars() == vars, "entry ({i},{j}) has a foreign VarSet");
                entries.push(p);
            }
        }
        PolyMatrix {
            vars: vars.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        assert!(p.vars() == &self.vars, "entry has a foreign VarSet");
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<PolyMatrix, MatrixError> {
        check_indices(rows, self.rows, "row")?;
        check_indices(cols, self.cols, "column")?;
        Ok(self.submatrix_unchecked(rows, cols))
    }

    pub(crate) fn submatrix_unchecked(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        PolyMatrix::from_fn(&self.vars, rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(&self.vars, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn try_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.vars != other.vars {
            return Err(PolyError::VarSetMismatch {
                left: self.vars.names().join(","),
                right: other.vars.names().join(","),
            }
            .into());
        }
        Ok(PolyMatrix::from_fn(&self.vars, self.rows, other.cols, |i, j| {
            let mut acc = Polynomial::zero(&self.vars);
            for l in 0..self.cols {
                let (a, b) = (self.get(i, l), other.get(l, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        }))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Square with zero entries wherever `|i - j| > 1`.
    pub fn is_tridiagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| i.abs_diff(j) <= 1 || self.get(i, j).is_zero()))
    }

    pub fn evaluate(&self, point: &Assignment) -> Result<Vec<Vec<BigInt>>, PolyError> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|p| p.evaluate(point)).collect())
            .collect()
    }

    pub fn specialize(&self, point: &Assignment) -> Result<PolyMatrix, PolyError> {
        let entries = self
            .entries
            .iter()
            .map(|p| p.specialize(point))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMatrix {
            vars: self.vars.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Exact determinant. Cofactor expansion up to order 4, fraction-free
    /// Bareiss elimination above.
    ///
    /// # Panics
    /// If a Bareiss division is inexact, which can only mean an arithmetic
    /// bug.
    pub fn determinant(&self) -> Result<Polynomial, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Polynomial::one(&self.vars));
        }
        if n <= 4 {
            let rows: Vec<&[Polynomial]> = (0..n).map(|i| self.row(i)).collect();
            let cols: Vec<usize> = (0..n).collect();
            return Ok(cofactor(&self.vars, &rows, &cols));
        }
        Ok(bareiss(&self.vars, self.to_rows()))
    }

    /// Leibniz expansion over all permutations. Slow; kept as an
    /// independent reference for [`PolyMatrix::determinant`].
    pub fn det_by_permutations(&self) -> Result<Polynomial, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut total = Polynomial::zero(&self.vars);
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |p| {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if p[i] > p[j] {
                        inversions += 1;
                    }
                }
            }
            let mut term = Polynomial::one(&self.vars);
            for (i, &j) in p.iter().enumerate() {
                term = &term * self.get(i, j);
                if term.is_zero() {
                    return;
                }
            }
            total = if inversions % 2 == 0 {
                &total + &term
            } else {
                &total - &term
            };
        });
        Ok(total)
    }
}

fn permute(p: &mut Vec<usize>, start: usize, visit: &mut impl FnMut(&[usize])) {
    if start == p.len() {
        visit(p);
        return;
    }
    for i in start..p.len() {
        p.swap(start, i);
        permute(p, start + 1, visit);
        p.swap(start, i);
    }
}

fn check_indices(idx: &[usize], bound: usize, what: &str) -> Result<(), MatrixError> {
    if let Some(&bad) = idx.iter().find(|&&i| i >= bound) {
        return Err(MatrixError::BadIndices(format!(
            "{what} index {bad} out of range (size {bound})"
        )));
    }
    if idx.windows(2).any(|w| w[0] >= w[1]) {
        return Err(MatrixError::BadIndices(format!(
            "{what} indices {idx:?} are not strictly increasing"
        )));
    }
    Ok(())
}

/// Laplace expansion along the first of `rows`, restricted to `cols`.
fn cofactor(vars: &VarSet, rows: &[&[Polynomial]], cols: &[usize]) -> Polynomial {
    match cols.len() {
        1 => rows[0][cols[0]].clone(),
        2 => {
            let (a, b) = (&rows[0][cols[0]], &rows[0][cols[1]]);
            let (c, d) = (&rows[1][cols[0]], &rows[1][cols[1]]);
            &(a * d) - &(b * c)
        }
        _ => {
            let mut acc = Polynomial::zero(vars);
            let mut rest = Vec::with_capacity(cols.len() - 1);
            for (pos, &c) in cols.iter().enumerate() {
                let head = &rows[0][c];
                if head.is_zero() {
                    continue;
                }
                rest.clear();
                rest.extend(cols.iter().copied().filter(|&x| x != c));
                let minor = cofactor(vars, &rows[1..], &rest);
                if minor.is_zero() {
                    continue;
                }
                let term = head * &minor;
                acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

fn bareiss(vars: &VarSet, mut a: Vec<Vec<Polynomial>>) -> Polynomial {
    let n = a.len();
    let mut negate = false;
    let mut prev = Polynomial::one(vars);
    for k in 0..n - 1 {
        // sparsest nonzero pivot in column k
        let pivot = (k..n)
            .filter(|&i| !a[i][k].is_zero())
            .min_by_key(|&i| a[i][k].num_terms());
        let Some(p) = pivot else {
            return Polynomial::zero(vars);
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("inexact Bareiss division: polynomial arithmetic is broken");
            }
            a[i][k] = Polynomial::zero(vars);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

impl std::fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [{}]", self.rows, self.cols, self.vars.names().join(","))?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolyMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let rows = Vec::<Vec<Polynomial>>::deserialize(d)?;
        let vars = rows
            .first()
            .and_then(|r| r.first())
            .map(|p| p.vars().clone())
            .ok_or_else(|| D::Error::custom("empty matrix"))?;
        PolyMatrix::from_rows(&vars, rows).map_err(D::Error::custom)
    }
}
