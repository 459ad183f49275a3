//! Determinant identities checked by general elimination, not by the
//! continuant recursion.

use super::{pq_integer, preset, preset_with, CatalogError, PresetParams};
use crate::poly::Polynomial;
use crate::recmatrix::{build_triangle, hankel, jacobi_matrix};

/// Determinant of the `3×3` Hankel matrix of the counterexample column.
pub fn counterexample_regression(a: u32, b: u32) -> Result<Polynomial, CatalogError> {
    let p = preset_with(
        "counterexample",
        &PresetParams {
            a: Some(a),
            b: Some(b),
            ..Default::default()
        },
    )?;
    let tri = build_triangle(&p.weights, 4)?;
    Ok(hankel(&tri.first_column(), 3)?.matrix.determinant()?)
}

/// `P_k = det J[1..k, 1..k]` for the three-variable example, `1 ≤ k ≤ K`.
pub fn pk_sequence(k_max: usize) -> Result<Vec<Polynomial>, CatalogError> {
    let w = preset("ex3_5")?.weights;
    let j = jacobi_matrix(&w, k_max)?;
    (1..=k_max)
        .map(|k| {
            let idx: Vec<usize> = (0..k).collect();
            Ok(j.submatrix(&idx, &idx)?.determinant()?)
        })
        .collect()
}

/// `P_1 = q+r`, `P_2 = q²+(p+q)r+r²`,
/// `P_k = (p+q+r) P_{k-1} - q(p+r) P_{k-2}`, all coefficientwise
/// nonnegative, for `k ≤ K`.
pub fn pk_recursion_check(k_max: usize) -> Result<bool, CatalogError> {
    let k_max = k_max.max(2);
    let p = pk_sequence(k_max)?;
    let vars = p[0].vars().clone();
    let parse = |s: &str| Polynomial::parse(&vars, s).expect("literal");
    if p[0] != parse("q+r") || p[1] != parse("q^2+(p+q)*r+r^2") {
        return Ok(false);
    }
    let (s, t) = (parse("p+q+r"), parse("q*(p+r)"));
    for k in 2..k_max {
        if p[k] != &(&s * &p[k - 1]) - &(&t * &p[k - 2]) {
            return Ok(false);
        }
    }
    Ok(p.iter().all(Polynomial::is_x_nonnegative))
}

/// `det J^{(u)}[1..k, 1..k] = [k+u-1]_{p,q}` for `k ≤ K`.
pub fn nuk_identity_check(u: u32, k_max: usize) -> Result<bool, CatalogError> {
    let w = preset_with(
        "ex3_4",
        &PresetParams {
            u: Some(u),
            ..Default::default()
        },
    )?
    .weights;
    let j = jacobi_matrix(&w, k_max)?;
    for k in 1..=k_max {
        let idx: Vec<usize> = (0..k).collect();
        let det = j.submatrix(&idx, &idx)?.determinant()?;
        if det != pq_integer(k + u as usize - 1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pk_base_cases() {
        let p = pk_sequence(3).unwrap();
        let v = p[0].vars().clone();
        assert_eq!(p[0], Polynomial::parse(&v, "q+r").unwrap());
        assert_eq!(p[1], Polynomial::parse(&v, "q^2+p*r+q*r+r^2").unwrap());
        assert!(pk_recursion_check(5).unwrap());
    }

    #[test]
    fn nuk_small() {
        assert!(nuk_identity_check(3, 4).unwrap());
        assert!(nuk_identity_check(2, 1).is_err());
    }
}
