//! Enumerative oracles and closed forms, independent of the recursion.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{preset, CatalogError, ClosedForm};
use crate::poly::{Polynomial, VarSet};

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn div_exact(num: BigInt, den: usize, what: &str) -> Result<BigInt, CatalogError> {
    let den = BigInt::from(den);
    if (&num % &den).is_zero() {
        Ok(num / den)
    } else {
        Err(CatalogError::InexactDivision(format!("{what}: {num} / {den}")))
    }
}

fn pq_vars() -> VarSet {
    VarSet::new(["p", "q"]).expect("distinct names")
}

/// `Σ_k c_k q^k p^{n-k}`; the `p` factor is dropped when `vars` has no `p`.
fn bivariate(
    vars: &VarSet,
    n: usize,
    mut coeff: impl FnMut(usize) -> Result<BigInt, CatalogError>,
) -> Result<Polynomial, CatalogError> {
    let (ip, iq) = (vars.index_of("p"), vars.index_of("q"));
    let iq = iq.ok_or_else(|| crate::poly::PolyError::UnknownVariable("q".into()))?;
    let mut terms = Vec::new();
    for k in 0..=n {
        let c = coeff(k)?;
        if c.is_zero() {
            continue;
        }
        let mut e = vec![0u32; vars.len()];
        e[iq] = k as u32;
        if let Some(ip) = ip {
            e[ip] = (n - k) as u32;
        }
        terms.push((e, c));
    }
    Ok(Polynomial::from_terms(vars, terms)?)
}

/// `[n]_{p,q} = p^{n-1} + p^{n-2} q + ⋯ + q^{n-1}`.
pub fn pq_integer(n: usize) -> Result<Polynomial, CatalogError> {
    if n < 1 {
        return Err(CatalogError::OutOfRange {
            what: "n",
            value: n,
            range: "n >= 1",
        });
    }
    bivariate(&pq_vars(), n - 1, |_| Ok(BigInt::one()))
}

/// `S(n, 0..=n)` by listing restricted growth strings, i.e. every set
/// partition of `{1..n}` once. Panics for `n > 12`.
pub fn stirling_row(n: usize) -> Vec<u64> {
    assert!(n <= 12, "set partition enumeration is limited to n <= 12");
    let mut row = vec![0u64; n + 1];
    if n == 0 {
        row[0] = 1;
        return row;
    }
    // a[i] is the block of element i; blocks are opened in order.
    let mut a = vec![0usize; n];
    loop {
        let blocks = a.iter().max().map_or(0, |m| m + 1);
        row[blocks] += 1;
        // Next restricted growth string.
        let mut i = n - 1;
        loop {
            if i == 0 {
                return row;
            }
            let limit = a[..i].iter().max().copied().unwrap_or(0) + 1;
            if a[i] < limit {
                a[i] += 1;
                a[i + 1..].iter_mut().for_each(|x| *x = 0);
                break;
            }
            i -= 1;
        }
    }
}

/// Number of partitions of `{1..n}` into `k` nonempty blocks.
pub fn stirling_oracle(n: usize, k: usize) -> u64 {
    stirling_row(n).get(k).copied().unwrap_or(0)
}

/// `E_n(p, q) = Σ_{σ ∈ S_n} q^{des σ} p^{ris σ}` over all permutations.
pub fn eulerian_oracle(n: usize) -> Result<Polynomial, CatalogError> {
    if !(1..=9).contains(&n) {
        return Err(CatalogError::OutOfRange {
            what: "n",
            value: n,
            range: "1..=9",
        });
    }
    let mut counts = vec![vec![0u64; n]; n];
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let des = perm.windows(2).filter(|w| w[0] > w[1]).count();
        let ris = perm.windows(2).filter(|w| w[0] < w[1]).count();
        counts[des][ris] += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let vars = pq_vars();
    let mut terms = Vec::new();
    for (des, row) in counts.iter().enumerate() {
        for (ris, &c) in row.iter().enumerate() {
            if c > 0 {
                terms.push((vec![ris as u32, des as u32], BigInt::from(c)));
            }
        }
    }
    Ok(Polynomial::from_terms(&vars, terms)?)
}

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = a.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = a.iter().rposition(|&x| x > a[i]).expect("a[i+1] qualifies");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// Sum over Motzkin paths of length `n` from level 0 to 0 that never rise
/// above `height`. Up steps weigh 1, a level step weighs `level`, and a down
/// step ending at level `j` weighs `down(j)`.
pub fn bounded_motzkin_oracle(
    n: usize,
    height: usize,
    level: &Polynomial,
    down: &dyn Fn(usize) -> Polynomial,
) -> Polynomial {
    fn walk(
        steps_left: usize,
        at: usize,
        height: usize,
        weight: Polynomial,
        level: &Polynomial,
        down: &dyn Fn(usize) -> Polynomial,
        acc: &mut Polynomial,
    ) {
        if at > steps_left {
            return;
        }
        if steps_left == 0 {
            *acc = &*acc + &weight;
            return;
        }
        if at < height {
            walk(steps_left - 1, at + 1, height, weight.clone(), level, down, acc);
        }
        walk(steps_left - 1, at, height, &weight * level, level, down, acc);
        if at > 0 {
            let w = &weight * &down(at - 1);
            walk(steps_left - 1, at - 1, height, w, level, down, acc);
        }
    }
    let vars = level.vars().clone();
    let mut acc = Polynomial::zero(&vars);
    walk(n, 0, height, Polynomial::one(&vars), level, down, &mut acc);
    acc
}

pub(super) fn closed_form(form: ClosedForm, vars: &VarSet, n: usize) -> Result<Polynomial, CatalogError> {
    match form {
        ClosedForm::NarayanaB => bivariate(vars, n, |k| Ok(binom(n, k).pow(2))),
        ClosedForm::NarayanaA => {
            if n == 0 {
                return Ok(Polynomial::one(vars));
            }
            bivariate(vars, n, |k| {
                if k == 0 {
                    return Ok(BigInt::zero());
                }
                div_exact(binom(n, k - 1) * binom(n, k), n, "Narayana")
            })
        }
        ClosedForm::Stirling => {
            if n > 12 {
                return Err(CatalogError::OutOfRange {
                    what: "n",
                    value: n,
                    range: "0..=12",
                });
            }
            let row = stirling_row(n);
            bivariate(vars, n, |k| Ok(BigInt::from(row[k])))
        }
        ClosedForm::EulerianShifted => Ok(eulerian_oracle(n + 1)?.embed(vars)?),
        ClosedForm::QSchroeder => bivariate(vars, n, |k| {
            Ok(div_exact(binom(2 * k, k), k + 1, "Catalan")? * binom(n + k, 2 * k))
        }),
        ClosedForm::QDelannoy => bivariate(vars, n, |k| Ok(binom(n + k, 2 * k) * binom(2 * k, k))),
    }
}

/// The closed form for the first column of the named preset.
pub fn closed_form_column(name: &str, n: usize) -> Result<Polynomial, CatalogError> {
    preset(name)?.closed_form_column(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pq(s: &str) -> Polynomial {
        Polynomial::parse(&pq_vars(), s).unwrap()
    }

    #[test]
    fn stirling_small() {
        assert_eq!(stirling_oracle(3, 2), 3);
        assert_eq!(stirling_row(4), vec![0, 1, 7, 6, 1]);
        for n in 1..=8 {
            assert_eq!(stirling_oracle(n, n), 1);
            assert_eq!(stirling_oracle(n, 0), 0);
        }
        assert_eq!(stirling_oracle(0, 0), 1);
        let bell10: u64 = stirling_row(10).iter().sum();
        assert_eq!(bell10, 115975);
    }

    #[test]
    fn eulerian_small() {
        assert_eq!(eulerian_oracle(1).unwrap(), pq("1"));
        assert_eq!(eulerian_oracle(2).unwrap(), pq("p+q"));
        assert_eq!(eulerian_oracle(3).unwrap(), pq("p^2+4p*q+q^2"));
        assert!(eulerian_oracle(0).is_err());
        assert!(eulerian_oracle(10).is_err());
    }

    #[test]
    fn pq_integers() {
        assert_eq!(pq_integer(1).unwrap(), pq("1"));
        assert_eq!(pq_integer(2).unwrap(), pq("p+q"));
        assert_eq!(pq_integer(3).unwrap(), pq("p^2+p*q+q^2"));
        assert!(pq_integer(0).is_err());
        let p = pq("p");
        for n in 2..8 {
            let lhs = &p * &pq_integer(n).unwrap();
            let rhs = &p.pow(n as u32) + &(&pq("p*q") * &pq_integer(n - 1).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn closed_form_examples() {
        let v = pq_vars();
        assert_eq!(closed_form(ClosedForm::NarayanaB, &v, 2).unwrap(), pq("p^2+4p*q+q^2"));
        assert_eq!(closed_form(ClosedForm::NarayanaA, &v, 3).unwrap(), pq("p^2*q+3p*q^2+q^3"));
        assert_eq!(closed_form(ClosedForm::Stirling, &v, 3).unwrap(), pq("q*p^2+3q^2*p+q^3"));
        let q = VarSet::new(["q"]).unwrap();
        let qs = closed_form(ClosedForm::QSchroeder, &q, 2).unwrap();
        assert_eq!(qs, Polynomial::parse(&q, "1+3q+2q^2").unwrap());
        let qd = closed_form(ClosedForm::QDelannoy, &q, 2).unwrap();
        assert_eq!(qd, Polynomial::parse(&q, "1+6q+6q^2").unwrap());
    }

    #[test]
    fn bounded_paths() {
        let q = VarSet::new(["q"]).unwrap();
        let one = Polynomial::one(&q);
        let motzkin: Vec<BigInt> = (0..7)
            .map(|n| bounded_motzkin_oracle(n, n, &one, &|_| one.clone()).constant_term())
            .collect();
        assert_eq!(motzkin, [1, 1, 2, 4, 9, 21, 51].map(BigInt::from));
        let flat = bounded_motzkin_oracle(5, 0, &Polynomial::parse(&q, "1+q").unwrap(), &|_| one.clone());
        assert_eq!(flat, Polynomial::parse(&q, "1+q").unwrap().pow(5));
    }
}
