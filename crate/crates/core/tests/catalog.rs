mod common;

use common::*;
use num_bigint::BigInt;

use stieltjes::catalog::{
    bounded_motzkin_oracle, closed_form_column, counterexample_regression,
    displayed_counterexample_column, displayed_counterexample_determinant, eulerian_oracle,
    nuk_identity_check, pk_recursion_check, pq_integer, preset, run_preset_suite, stirling_oracle,
    CheckStatus, PRESET_NAMES,
};
use stieltjes::homog::homogenize_sequence;
use stieltjes::poly::{Assignment, Polynomial};
use stieltjes::recmatrix::{build_triangle, hankel};
use stieltjes::totalpos::check_xtp;

fn column(name: &str, n: usize) -> Vec<Polynomial> {
    build_triangle(&preset(name).unwrap().weights, n).unwrap().first_column()
}

fn at(pairs: &[(&str, i64)]) -> Assignment {
    pairs.iter().map(|&(k, v)| (k.to_string(), BigInt::from(v))).collect()
}

fn values(col: &[Polynomial], point: &Assignment) -> Vec<i64> {
    col.iter()
        .map(|p| i64::try_from(p.evaluate(point).unwrap()).unwrap())
        .collect()
}

#[test]
fn bell_column_is_a_stirling_sum() {
    let v = vars(&["q"]);
    for (n, m) in column("intro_bell", 10).iter().enumerate() {
        let terms = (0..=n).map(|k| (vec![k as u32], BigInt::from(stirling_oracle(n, k))));
        assert_eq!(m, &Polynomial::from_terms(&v, terms).unwrap(), "n = {n}");
    }
}

#[test]
fn eulerian_triangle_column() {
    let one = BigInt::from(1);
    let col = column("intro_eulerian", 8);
    let q = poly(&vars(&["q"]), "q");
    for n in 1..=8 {
        let e = eulerian_oracle(n).unwrap().eliminate("p", &one).unwrap();
        assert_eq!(col[n], &q * &e, "n = {n}");
    }
}

#[test]
fn eulerian_numbers_recurrence() {
    // A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1), indexed by descents.
    let mut prev = vec![BigInt::from(1)];
    for n in 2..=9usize {
        let cur: Vec<BigInt> = (0..n)
            .map(|k| {
                let a = prev.get(k).cloned().unwrap_or_default() * (k + 1);
                let b = if k > 0 { prev[k - 1].clone() * (n - k) } else { BigInt::from(0) };
                a + b
            })
            .collect();
        let e = eulerian_oracle(n).unwrap();
        for (k, c) in cur.iter().enumerate() {
            assert_eq!(&e.coefficient(&[(n - 1 - k) as u32, k as u32]), c);
        }
        prev = cur;
    }
}

#[test]
fn shifted_eulerian_lifts_to_ex3_9() {
    let one = BigInt::from(1);
    let seq: Vec<Polynomial> = (1..=9)
        .map(|n| eulerian_oracle(n).unwrap().eliminate("p", &one).unwrap())
        .collect();
    let lifted = homogenize_sequence(&seq, "p").unwrap();
    assert_eq!(lifted, column("ex3_9_eulerian", 8));
}

#[test]
fn narayana_b_closed_form_to_ten() {
    let col = column("ex3_6", 10);
    for (n, m) in col.iter().enumerate() {
        assert_eq!(m, &closed_form_column("ex3_6", n).unwrap());
    }
    let v = vars(&["p", "q"]);
    assert_eq!(closed_form_column("ex3_6", 2).unwrap(), poly(&v, "p^2+4p*q+q^2"));
    assert_eq!(closed_form_column("ex3_7", 3).unwrap(), poly(&v, "p^2*q+3p*q^2+q^3"));
    assert_eq!(closed_form_column("ex3_8", 3).unwrap(), poly(&v, "q*p^2+3q^2*p+q^3"));
    assert!(closed_form_column("ex3_1", 3).is_err());
}

#[test]
fn threshold_height_bound() {
    let v = vars(&["p", "q"]);
    let level = poly(&v, "1+q");
    let down = poly(&v, "q");
    for s in 0..=3u32 {
        let name = format!("ex3_3_threshold({s})");
        let col = column(&name, 8);
        let zero = at(&[("p", 0)]);
        let spec: Vec<Polynomial> = col.iter().map(|c| c.specialize(&zero).unwrap()).collect();
        for (n, c) in spec.iter().enumerate() {
            let want = bounded_motzkin_oracle(n, s as usize, &level, &|_| down.clone());
            assert_eq!(c, &want, "s = {s}, n = {n}");
        }
        let rep = check_xtp(&hankel(&spec, 5).unwrap().matrix, 4).unwrap();
        assert!(rep.passed(), "s = {s}");
    }
}

#[test]
fn listed_prefixes() {
    let cases: &[(&str, &[(&str, i64)], &[i64])] = &[
        ("ex3_1", &[("q", 1)], &[1, 1, 2, 5, 14, 42, 132]),
        ("ex3_2", &[("q", 1)], &[1, 3, 10, 36, 137]),
        ("ex3_4(3)", &[("p", 1), ("q", 1)], &[1, 3, 11, 43, 173, 707, 2917]),
        ("ex3_5", &[("p", 1), ("q", 1), ("r", 2)], &[1, 3, 12, 57, 300, 1686, 9912]),
        ("ex3_6", &[("p", 1), ("q", 1)], &[1, 2, 6, 20, 70, 252]),
        ("ex3_6", &[("p", 2), ("q", 1)], &[1, 3, 13, 63, 321, 1683]),
        ("ex3_7", &[("p", 1), ("q", 2)], &[1, 2, 6, 22, 90, 394, 1806]),
        ("ex3_8", &[("p", 2), ("q", 1)], &[1, 1, 3, 11, 49, 257, 1539]),
        ("ex3_8", &[("p", 1), ("q", 2)], &[1, 2, 6, 22, 94, 454, 2430]),
    ];
    for (name, point, expect) in cases {
        let got = values(&column(name, expect.len() - 1), &at(point));
        assert_eq!(&got, expect, "{name} at {point:?}");
    }
}

#[test]
fn misprinted_prefixes_recomputed() {
    let little = values(&column("ex3_7", 7), &at(&[("p", 2), ("q", 1)]));
    assert_eq!(little[5], 197);
    let bell2 = values(&column("ex3_8", 7), &at(&[("p", 2), ("q", 2)]));
    assert_eq!(bell2, [1, 2, 8, 40, 240, 1664, 12992, 112256]);
    let nar2 = values(&column("ex3_7", 7), &at(&[("p", 2), ("q", 2)]));
    assert_eq!(nar2, [1, 2, 8, 40, 224, 1344, 8448, 54912]);
    let c22 = values(&column("ex3_3", 5), &at(&[("p", 2), ("q", 2)]));
    assert_eq!(c22, [1, 5, 27, 155, 933, 5825]);
    let i121 = values(&column("ex3_5", 6), &at(&[("p", 1), ("q", 2), ("r", 1)]));
    assert_eq!(i121, [1, 3, 13, 67, 381, 2307, 14589]);
}

#[test]
fn identities() {
    assert!(pk_recursion_check(10).unwrap());
    for u in 3..=5 {
        assert!(nuk_identity_check(u, 6).unwrap(), "u = {u}");
    }
    let v = vars(&["p", "q"]);
    assert_eq!(pq_integer(3).unwrap(), poly(&v, "p^2+p*q+q^2"));
}

#[test]
fn counterexample_printed_data_is_self_consistent() {
    for (a, b) in [(0, 0), (1, 1), (1, 2), (2, 3)] {
        let col = displayed_counterexample_column(a, b);
        let det = hankel(&col, 3).unwrap().matrix.determinant().unwrap();
        assert_eq!(det, displayed_counterexample_determinant(a, b));
    }
    // The stated weights give q^10 + q^12 instead.
    let v = vars(&["q"]);
    for (a, b) in [(0, 0), (1, 1), (1, 2), (2, 3)] {
        assert_eq!(counterexample_regression(a, b).unwrap(), poly(&v, "q^10+q^12"));
    }
}

#[test]
fn suites_report_every_family() {
    for name in PRESET_NAMES {
        let rep = run_preset_suite(name, 4).unwrap();
        assert!(!rep.checks.is_empty());
        assert!(rep.checks.iter().any(|c| c.name == "hankel x-TP"));
        let json: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
        assert_eq!(json["preset"], rep.preset);
    }
    let rep = run_preset_suite("ex3_1", 6).unwrap();
    assert!(rep.passed);
    let prefix = rep.checks.iter().find(|c| c.name == "prefix at q=1").unwrap();
    assert_eq!(prefix.status, CheckStatus::Pass);
    let rep = run_preset_suite("ex3_4(3)", 7).unwrap();
    assert!(rep.passed);
    assert!(rep.checks.iter().any(|c| c.name == "(p,q)-integer identity" && c.status == CheckStatus::Pass));
    let rep = run_preset_suite("ex3_5", 5).unwrap();
    let shown = rep.checks.iter().find(|c| c.name == "displayed column").unwrap();
    assert_eq!(shown.status, CheckStatus::Pass);
}
