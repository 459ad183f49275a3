//! Seeded generators and independent integer oracles shared by the
//! integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stieltjes::poly::{Polynomial, VarSet};
use stieltjes::weights::WeightSystem;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn vars(names: &[&str]) -> VarSet {
    VarSet::new(names.iter().copied()).unwrap()
}

pub fn poly(v: &VarSet, text: &str) -> Polynomial {
    Polynomial::parse(v, text).unwrap()
}

/// Random polynomial with at most `terms` terms of degree at most `deg`.
pub fn random_poly(
    rng: &mut ChaCha8Rng,
    v: &VarSet,
    deg: u32,
    terms: usize,
    coeff: i64,
    signed: bool,
) -> Polynomial {
    let count = rng.gen_range(1..=terms);
    let raw: Vec<(Vec<u32>, BigInt)> = (0..count)
        .map(|_| {
            let mut left = rng.gen_range(0..=deg);
            let e: Vec<u32> = (0..v.len())
                .map(|_| {
                    let x = rng.gen_range(0..=left);
                    left -= x;
                    x
                })
                .collect();
            let lo = if signed { -coeff } else { 0 };
            (e, BigInt::from(rng.gen_range(lo..=coeff)))
        })
        .collect();
    Polynomial::from_terms(v, raw).unwrap()
}

/// A nonnegative piecewise weight system with arbitrary `r`.
pub fn random_weight_system(rng: &mut ChaCha8Rng) -> WeightSystem {
    let v = if rng.gen_bool(0.5) { vars(&["q"]) } else { vars(&["p", "q"]) };
    let piece = |rng: &mut ChaCha8Rng| {
        let a = random_poly(rng, &v, 2, 3, 3, false).to_expr_string();
        let b = random_poly(rng, &v, 2, 3, 3, false).to_expr_string();
        let c = random_poly(rng, &v, 1, 2, 2, false).to_expr_string();
        let cut = rng.gen_range(0..3);
        format!("k<={cut}: {a}; else: {b}+k*({c})")
    };
    let r = if rng.gen_bool(0.5) { "1".to_string() } else { piece(rng) };
    let s = piece(rng);
    let t = piece(rng);
    WeightSystem::new(v.clone(), &r, &s, &t).unwrap()
}

/// `r = 1`, `s_0 = 1 + A`, `s_k = t_k + 1 + B_k` with random x-nonnegative
/// `A`, `B_k`, `t_k`; this satisfies all three sufficient conditions.
pub fn lemma_key_system(rng: &mut ChaCha8Rng, depth: u64) -> WeightSystem {
    let v = vars(&["p", "q"]);
    let slack = |rng: &mut ChaCha8Rng| random_poly(rng, &v, 1, 2, 2, false);
    let one = Polynomial::one(&v);
    let mut s_clauses = vec![format!("k=0: {}", (&one + &slack(rng)).to_expr_string())];
    let mut t_clauses = Vec::new();
    for k in 1..=depth {
        let t = slack(rng);
        let s = &(&t + &one) + &slack(rng);
        s_clauses.push(format!("k={k}: {}", s.to_expr_string()));
        t_clauses.push(format!("k={k}: {}", t.to_expr_string()));
    }
    let t_tail = slack(rng);
    s_clauses.push(format!("else: {}", (&(&t_tail + &one) + &slack(rng)).to_expr_string()));
    t_clauses.push(format!("else: {}", t_tail.to_expr_string()));
    WeightSystem::new(v.clone(), "1", &s_clauses.join("; "), &t_clauses.join("; ")).unwrap()
}

/// Integer determinant by fraction-free elimination with row swaps.
pub fn int_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if piv != k {
            a.swap(piv, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        BigInt::one()
    } else {
        sign * &a[n - 1][n - 1]
    }
}

pub fn nonneg(x: &BigInt) -> bool {
    !x.is_negative()
}

/// Polynomials over `v` with up to `terms` terms, exponents below `deg`.
pub fn arb_poly(v: VarSet, deg: u32, terms: usize, coeff: i64) -> impl Strategy<Value = Polynomial> {
    let arity = v.len();
    prop::collection::vec(
        (prop::collection::vec(0..deg, arity), -coeff..=coeff),
        0..=terms,
    )
    .prop_map(move |raw| {
        Polynomial::from_terms(&v, raw.into_iter().map(|(e, c)| (e, BigInt::from(c)))).unwrap()
    })
}

pub fn arb_nonneg_poly(v: VarSet, deg: u32, terms: usize, coeff: i64) -> impl Strategy<Value = Polynomial> {
    let arity = v.len();
    prop::collection::vec((prop::collection::vec(0..deg, arity), 0..=coeff), 0..=terms).prop_map(
        move |raw| Polynomial::from_terms(&v, raw.into_iter().map(|(e, c)| (e, BigInt::from(c)))).unwrap(),
    )
}
