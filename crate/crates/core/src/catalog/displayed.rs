//! Printed reference data: leading triangles, the first column of the
//! three-variable example, and the closed-form counterexample entries.

use num_bigint::BigInt;

use crate::poly::{Polynomial, VarSet};

/// How a printed triangle differs from the computed one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Correction {
    None,
    /// The printed entries have the two named variables exchanged.
    SwapVariables(&'static str, &'static str),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisplayedTriangle {
    pub label: &'static str,
    pub vars: &'static [&'static str],
    /// Rows `0..` of the lower triangle, including the unit diagonal.
    pub rows: &'static [&'static [&'static str]],
    pub correction: Correction,
}

impl DisplayedTriangle {
    pub fn var_set(&self) -> VarSet {
        VarSet::new(self.vars.iter().copied()).expect("distinct names")
    }

    /// Entries exactly as printed.
    pub fn listed(&self) -> Vec<Vec<Polynomial>> {
        let vars = self.var_set();
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| Polynomial::parse(&vars, s).expect("displayed entry parses"))
                    .collect()
            })
            .collect()
    }

    /// Entries after applying the correction.
    pub fn corrected(&self) -> Vec<Vec<Polynomial>> {
        let listed = self.listed();
        let Correction::SwapVariables(x, y) = self.correction else {
            return listed;
        };
        let vars = self.var_set();
        let (i, j) = (vars.index_of(x).expect("declared"), vars.index_of(y).expect("declared"));
        listed
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|p| {
                        let terms = p.terms().iter().map(|(m, c)| {
                            let mut e = m.exponents().to_vec();
                            e.swap(i, j);
                            (e, c.clone())
                        });
                        Polynomial::from_terms(&vars, terms).expect("same arity")
                    })
                    .collect()
            })
            .collect()
    }
}

const A_Q: DisplayedTriangle = DisplayedTriangle {
    label: "A(q)",
    vars: &["q"],
    rows: &[
        &["1"],
        &["1", "1"],
        &["1+q", "2+q", "1"],
        &["1+3q+q^2", "3+5q+q^2", "3+2q", "1"],
    ],
    correction: Correction::None,
};

const B_Q: DisplayedTriangle = DisplayedTriangle {
    label: "B(q)",
    vars: &["q"],
    rows: &[
        &["1"],
        &["1+q+q^2", "1"],
        &["1+3q+3q^2+2q^3+q^4", "2+2q+2q^2", "1"],
        &["1+6q+9q^2+10q^3+6q^4+3q^5+q^6", "3+8q+9q^2+6q^3+3q^4", "3+3q+3q^2", "1"],
    ],
    correction: Correction::None,
};

const C_PQ: DisplayedTriangle = DisplayedTriangle {
    label: "C(p,q)",
    vars: &["p", "q"],
    rows: &[
        &["1"],
        &["1+p+q", "1"],
        &["1+3p+2q+2p*q+p^2+q^2", "2+2p+2q", "1"],
        &[
            "1+6p+3q+6p^2+9p*q+3q^2+p^3+3p^2*q+3p*q^2+q^3",
            "3+8p+6q+3p^2+6p*q+3q^2",
            "3+3p+3q",
            "1",
        ],
    ],
    correction: Correction::SwapVariables("p", "q"),
};

const D3_PQ: DisplayedTriangle = DisplayedTriangle {
    label: "D^(3)(p,q)",
    vars: &["p", "q"],
    rows: &[
        &["1"],
        &["p^2+p*q+q^2", "1"],
        &["(p^2+p*q+q^2)^2+p*q*(p+q)", "p^2+p*q+q^2+p+q", "1"],
    ],
    correction: Correction::None,
};

const I_PQR: DisplayedTriangle = DisplayedTriangle {
    label: "I(p,q,r)",
    vars: &["p", "q", "r"],
    rows: &[
        &["1"],
        &["q+r", "1"],
        &["(p*q+q^2)+3q*r+r^2", "(p+2q)+2r", "1"],
        &[
            "(p^2*q+3p*q^2+q^3)+(4p*q+6q^2)*r+6q*r^2+r^3",
            "(p^2+5p*q+3q^2)+(3p+8q)*r+3r^2",
            "(2p+3q)+3r",
            "1",
        ],
    ],
    correction: Correction::None,
};

/// The printed leading triangle for a preset, if there is one.
pub fn displayed_triangle(preset: &str) -> Option<&'static DisplayedTriangle> {
    match preset {
        "ex3_1" => Some(&A_Q),
        "ex3_2" => Some(&B_Q),
        "ex3_3" => Some(&C_PQ),
        "ex3_4(3)" => Some(&D3_PQ),
        "ex3_5" => Some(&I_PQR),
        _ => None,
    }
}

const I_COLUMN: &[&str] = &[
    "1",
    "q+r",
    "p*q+q^2+3q*r+r^2",
    "p^2*q+3p*q^2+q^3+(4p*q+6q^2)*r+6q*r^2+r^3",
    "(p^3*q+6p^2*q^2+6p*q^3+q^4)+(5p^2*q+20p*q^2+10q^3)*r+(10p*q+20q^2)*r^2+10q*r^3+r^4",
];

/// `i_{n,0}(p,q,r)` for `n ≤ 4` as printed.
pub fn ex3_5_displayed_column() -> Vec<Polynomial> {
    let vars = VarSet::new(["p", "q", "r"]).expect("distinct names");
    I_COLUMN
        .iter()
        .map(|s| Polynomial::parse(&vars, s).expect("displayed entry parses"))
        .collect()
}

/// `Σ c a^i q^{e + j b}` over `(c, i, e, j)`.
fn ab_poly(a: u32, b: u32, terms: &[(i64, u32, u32, u32)]) -> Polynomial {
    let vars = VarSet::new(["q"]).expect("single name");
    let a = BigInt::from(a);
    Polynomial::from_terms(
        &vars,
        terms
            .iter()
            .map(|&(c, i, e, j)| (vec![e + j * b], BigInt::from(c) * a.pow(i))),
    )
    .expect("single variable")
}

/// Printed values of `m_{0,0}, …, m_{4,0}` for the counterexample.
pub fn displayed_counterexample_column(a: u32, b: u32) -> Vec<Polynomial> {
    vec![
        ab_poly(a, b, &[(1, 0, 0, 0)]),
        ab_poly(a, b, &[(1, 0, 2, 0)]),
        ab_poly(a, b, &[(1, 0, 4, 0), (4, 0, 6, 0), (1, 1, 4, 1)]),
        ab_poly(
            a,
            b,
            &[
                (1, 0, 4, 0),
                (5, 0, 6, 0),
                (9, 0, 8, 0),
                (2, 1, 4, 1),
                (4, 1, 6, 1),
                (1, 2, 4, 2),
            ],
        ),
        displayed_counterexample_m4(a, b),
    ]
}

/// Printed `m_{4,0}` for the counterexample.
pub fn displayed_counterexample_m4(a: u32, b: u32) -> Polynomial {
    ab_poly(
        a,
        b,
        &[
            (1, 0, 4, 0),
            (8, 0, 6, 0),
            (20, 0, 8, 0),
            (21, 0, 10, 0),
            (3, 1, 4, 1),
            (13, 1, 6, 1),
            (15, 1, 8, 1),
            (3, 2, 4, 2),
            (5, 2, 6, 2),
            (1, 3, 4, 3),
        ],
    )
}

/// Printed determinant of the `3×3` Hankel matrix of the counterexample.
pub fn displayed_counterexample_determinant(a: u32, b: u32) -> Polynomial {
    ab_poly(
        a,
        b,
        &[
            (-1, 0, 8, 0),
            (-4, 0, 10, 0),
            (6, 0, 12, 0),
            (36, 0, 14, 0),
            (27, 0, 16, 0),
            (-64, 0, 18, 0),
            (-3, 1, 8, 1),
            (-2, 1, 10, 1),
            (27, 1, 12, 1),
            (35, 1, 14, 1),
            (-48, 1, 16, 1),
            (-3, 2, 8, 2),
            (5, 2, 10, 2),
            (14, 2, 12, 2),
            (-12, 2, 14, 2),
            (-1, 3, 8, 3),
            (3, 3, 10, 3),
            (-1, 3, 12, 3),
        ],
    )
}
