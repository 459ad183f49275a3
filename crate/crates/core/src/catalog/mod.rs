//! Named weight systems with their closed forms, combinatorial oracles and
//! reference integer prefixes.

mod displayed;
mod identities;
mod oracles;
mod suite;

use num_bigint::BigInt;
use thiserror::Error;

use crate::homog::HomogError;
use crate::poly::{Assignment, MatrixError, PolyError, Polynomial, VarSet};
use crate::recmatrix::RecError;
use crate::series::{RiordanSpec, SeriesError};
use crate::totalpos::TotalPosError;
use crate::weights::{WeightError, WeightSystem};

pub use displayed::{
    displayed_counterexample_column, displayed_counterexample_determinant,
    displayed_counterexample_m4, displayed_triangle, ex3_5_displayed_column, Correction,
    DisplayedTriangle,
};
pub use identities::{
    counterexample_regression, nuk_identity_check, pk_recursion_check, pk_sequence,
};
pub use oracles::{
    bounded_motzkin_oracle, closed_form_column, eulerian_oracle, pq_integer, stirling_oracle,
    stirling_row,
};
pub use suite::{
    run_preset_suite, run_suite, run_suites, CheckResult, CheckStatus, SuiteOptions, SuiteReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown preset `{0}` (see `catalog list`)")]
    UnknownPreset(String),
    #[error("invalid parameter for `{preset}`: {msg}")]
    InvalidParameter { preset: String, msg: String },
    #[error("preset `{0}` has no closed form")]
    NoClosedForm(String),
    #[error("{what} = {value} is outside the supported range {range}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        range: &'static str,
    },
    #[error("closed form is not integral: {0}")]
    InexactDivision(String),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error(transparent)]
    Rec(#[from] RecError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    TotalPos(#[from] TotalPosError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Homog(#[from] HomogError),
}

/// Independent formula for `m_{n,0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// `Σ C(n,k)² q^k p^{n-k}`.
    NarayanaB,
    /// `Σ_{k≥1} (1/n) C(n,k-1) C(n,k) q^k p^{n-k}`, `1` at `n = 0`.
    NarayanaA,
    /// `Σ S(n,k) q^k p^{n-k}`.
    Stirling,
    /// `E_{n+1}(p, q)`.
    EulerianShifted,
    /// `Σ (1/(k+1)) C(2k,k) C(n+k,n-k) q^k`.
    QSchroeder,
    /// `Σ C(n+k,n-k) C(2k,k) q^k`.
    QDelannoy,
}

/// Preset-specific checks run by the suite in addition to the generic ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtraCheck {
    DisplayedTriangle,
    DisplayedColumn,
    NukIdentity(u32),
    PkRecursion,
    BcDecomposition,
    HeightBounded(Vec<u32>),
    BellSeries,
    EulerianOracle,
    EulerianAlignment,
    Homogenized,
    ColumnCoincidence,
    CounterexampleDisplay { a: u32, b: u32 },
}

/// A reference integer prefix of `m_{n,0}` at a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Specialization {
    pub point: Assignment,
    /// As printed in the source remark.
    pub listed: Vec<BigInt>,
    /// Recomputed value when the printed one is a known misprint.
    pub corrected: Option<Vec<BigInt>>,
    pub provenance: String,
}

impl Specialization {
    pub fn expected(&self) -> &[BigInt] {
        self.corrected.as_deref().unwrap_or(&self.listed)
    }

    pub fn point_text(&self) -> String {
        self.point
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[derive(Debug, Clone)]
pub struct Preset {
    pub name: String,
    pub summary: String,
    pub weights: WeightSystem,
    pub riordan: Option<RiordanSpec>,
    pub closed_form: Option<ClosedForm>,
    pub specializations: Vec<Specialization>,
    pub extras: Vec<ExtraCheck>,
    /// `false` for systems built to exhibit a failure.
    pub expect_stieltjes: bool,
}

impl Preset {
    pub fn vars(&self) -> &VarSet {
        self.weights.vars()
    }

    pub fn closed_form_column(&self, n: usize) -> Result<Polynomial, CatalogError> {
        match self.closed_form {
            Some(form) => oracles::closed_form(form, self.vars(), n),
            None => Err(CatalogError::NoClosedForm(self.name.clone())),
        }
    }
}

/// Family names accepted by [`preset`].
pub const PRESET_NAMES: &[&str] = &[
    "ex3_1",
    "ex3_2",
    "ex3_3",
    "ex3_3_threshold",
    "ex3_4",
    "ex3_5",
    "ex3_6",
    "ex3_7",
    "ex3_8_bell",
    "ex3_9_eulerian",
    "counterexample",
    "intro_bell",
    "intro_eulerian",
    "intro_qschroeder",
    "intro_qdelannoy",
    "intro_narayana_A",
    "intro_narayana_B",
];

/// Parameters of the parametrized families; unset fields take defaults
/// (`u = 3`, `a = b = 0`, thresholds `[1]`).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PresetParams {
    pub u: Option<u32>,
    pub a: Option<u32>,
    pub b: Option<u32>,
    pub thresholds: Option<Vec<u32>>,
}

impl PresetParams {
    fn is_empty(&self) -> bool {
        self == &PresetParams::default()
    }
}

/// Looks up `name`, which may carry parameters: `ex3_4(5)`,
/// `counterexample(1,2)`, `ex3_3_threshold(1,3)`.
pub fn preset(name: &str) -> Result<Preset, CatalogError> {
    preset_with(name, &PresetParams::default())
}

/// Like [`preset`]; explicit `params` override those in the name.
pub fn preset_with(name: &str, params: &PresetParams) -> Result<Preset, CatalogError> {
    let (base, args) = split_name(name)?;
    let base = match base {
        "ex3_8" => "ex3_8_bell",
        "ex3_9" => "ex3_9_eulerian",
        b => b,
    };
    let invalid = |msg: String| CatalogError::InvalidParameter {
        preset: base.to_string(),
        msg,
    };
    let mut p = params.clone();
    match (base, args.len()) {
        (_, 0) => {}
        ("ex3_4", 1) => {
            p.u.get_or_insert(args[0]);
        }
        ("counterexample", 2) => {
            p.a.get_or_insert(args[0]);
            p.b.get_or_insert(args[1]);
        }
        ("ex3_3_threshold", _) => {
            p.thresholds.get_or_insert(args);
        }
        _ => return Err(invalid(format!("unexpected arguments {args:?}"))),
    }
    let takes = match base {
        "ex3_4" => p.a.is_none() && p.b.is_none() && p.thresholds.is_none(),
        "counterexample" => p.u.is_none() && p.thresholds.is_none(),
        "ex3_3_threshold" => p.u.is_none() && p.a.is_none() && p.b.is_none(),
        _ => p.is_empty(),
    };
    if PRESET_NAMES.contains(&base) && !takes {
        return Err(invalid("parameter not used by this family".into()));
    }
    match base {
        "ex3_1" => ex3_1(),
        "ex3_2" => ex3_2(),
        "ex3_3" => ex3_3(),
        "ex3_3_threshold" => {
            let s = p.thresholds.unwrap_or_else(|| vec![1]);
            if s.is_empty() || s.windows(2).any(|w| w[0] >= w[1]) {
                return Err(invalid("thresholds must be nonempty and strictly increasing".into()));
            }
            ex3_3_threshold(&s)
        }
        "ex3_4" => {
            let u = p.u.unwrap_or(3);
            if u < 3 {
                return Err(invalid(format!("u = {u}, need u >= 3")));
            }
            ex3_4(u)
        }
        "ex3_5" => ex3_5(),
        "ex3_6" => ex3_6(),
        "ex3_7" => ex3_7(),
        "ex3_8_bell" => ex3_8(),
        "ex3_9_eulerian" => ex3_9(),
        "counterexample" => counterexample(p.a.unwrap_or(0), p.b.unwrap_or(0)),
        "intro_bell" => intro_bell(),
        "intro_eulerian" => intro_eulerian(),
        "intro_qschroeder" => intro_qschroeder(),
        "intro_qdelannoy" => intro_qdelannoy(),
        "intro_narayana_A" => intro_narayana_a(),
        "intro_narayana_B" => intro_narayana_b(),
        other => Err(CatalogError::UnknownPreset(other.to_string())),
    }
}

fn split_name(name: &str) -> Result<(&str, Vec<u32>), CatalogError> {
    let name = name.trim();
    let Some(open) = name.find('(') else {
        return Ok((name, Vec::new()));
    };
    let bad = || CatalogError::InvalidParameter {
        preset: name.to_string(),
        msg: "expected name(n, ...) with nonnegative integers".into(),
    };
    let inner = name[open + 1..].strip_suffix(')').ok_or_else(bad)?;
    let args = inner
        .split(',')
        .map(|a| a.trim().parse::<u32>().map_err(|_| bad()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((name[..open].trim(), args))
}

fn ints(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

fn point(pairs: &[(&str, i64)]) -> Assignment {
    pairs
        .iter()
        .map(|&(k, v)| (k.to_string(), BigInt::from(v)))
        .collect()
}

fn spec(pairs: &[(&str, i64)], listed: &[i64], provenance: &str) -> Specialization {
    Specialization {
        point: point(pairs),
        listed: ints(listed),
        corrected: None,
        provenance: provenance.to_string(),
    }
}

fn erratum(pairs: &[(&str, i64)], listed: &[i64], corrected: &[i64], provenance: &str) -> Specialization {
    Specialization {
        corrected: Some(ints(corrected)),
        ..spec(pairs, listed, provenance)
    }
}

struct Builder {
    name: String,
    summary: &'static str,
    vars: Vec<String>,
    s: String,
    t: String,
    riordan: Option<[String; 4]>,
    closed_form: Option<ClosedForm>,
    specializations: Vec<Specialization>,
    extras: Vec<ExtraCheck>,
}

impl Builder {
    fn new(name: impl Into<String>, summary: &'static str, vars: &[&str]) -> Self {
        Builder {
            name: name.into(),
            summary,
            vars: vars.iter().map(|v| v.to_string()).collect(),
            s: String::new(),
            t: String::new(),
            riordan: None,
            closed_form: None,
            specializations: Vec::new(),
            extras: Vec::new(),
        }
    }

    fn weights(mut self, s: impl Into<String>, t: impl Into<String>) -> Self {
        self.s = s.into();
        self.t = t.into();
        self
    }

    fn riordan(mut self, a: &str, b: &str, c: &str, e: &str) -> Self {
        self.riordan = Some([a, b, c, e].map(String::from));
        self
    }

    fn closed(mut self, form: ClosedForm) -> Self {
        self.closed_form = Some(form);
        self
    }

    fn spec(mut self, s: Specialization) -> Self {
        self.specializations.push(s);
        self
    }

    fn extra(mut self, e: ExtraCheck) -> Self {
        self.extras.push(e);
        self
    }

    fn build(self) -> Result<Preset, CatalogError> {
        let vars = VarSet::new(self.vars.iter().cloned())?;
        let weights = WeightSystem::new(vars.clone(), "1", &self.s, &self.t)?;
        let riordan = match &self.riordan {
            Some([a, b, c, e]) => Some(RiordanSpec::new(
                Polynomial::parse(&vars, a).map_err(poly_text_error)?,
                Polynomial::parse(&vars, b).map_err(poly_text_error)?,
                Polynomial::parse(&vars, c).map_err(poly_text_error)?,
                Polynomial::parse(&vars, e).map_err(poly_text_error)?,
            )?),
            None => None,
        };
        Ok(Preset {
            name: self.name,
            summary: self.summary.to_string(),
            weights,
            riordan,
            closed_form: self.closed_form,
            specializations: self.specializations,
            extras: self.extras,
            expect_stieltjes: true,
        })
    }
}

fn poly_text_error(e: crate::poly::PolyParseError) -> CatalogError {
    CatalogError::InvalidParameter {
        preset: "riordan".into(),
        msg: e.to_string(),
    }
}

const CATALAN: &[i64] = &[1, 1, 2, 5, 14, 42, 132];
const LARGE_SCHROEDER: &[i64] = &[1, 2, 6, 22, 90, 394, 1806];
const BELL: &[i64] = &[1, 1, 2, 5, 15, 52, 203];

fn ex3_1() -> Result<Preset, CatalogError> {
    Builder::new("ex3_1", "Catalan-like triangle A(q); little Schroeder at q=2", &["q"])
        .weights("k=0: 1; else: 1+q", "q")
        .riordan("1", "q", "1+q", "q")
        .spec(spec(&[("q", 1)], CATALAN, "Catalan numbers, A000108"))
        .spec(spec(
            &[("q", 2)],
            &[1, 1, 3, 11, 45, 197, 903],
            "little Schroeder numbers, A001003",
        ))
        .spec(spec(&[("q", 3)], &[1, 1, 4, 19, 100, 562, 3304], "A007564"))
        .spec(spec(&[("q", 4)], &[1, 1, 5, 29, 185, 1257, 8925], "A059231"))
        .extra(ExtraCheck::DisplayedTriangle)
        .build()
}

fn ex3_2() -> Result<Preset, CatalogError> {
    Builder::new("ex3_2", "triangle B(q) with constant diagonal 1+q+q^2", &["q"])
        .weights("1+q+q^2", "q")
        .riordan("1+q+q^2", "q", "1+q+q^2", "q")
        .spec(spec(&[("q", 1)], &[1, 3, 10, 36, 137], "A002212"))
        .extra(ExtraCheck::DisplayedTriangle)
        .build()
}

fn ex3_3() -> Result<Preset, CatalogError> {
    Builder::new("ex3_3", "triangle C(p,q), 3-colored Motzkin paths at p=q=1", &["p", "q"])
        .weights("1+p+q", "q")
        .riordan("1+p+q", "q", "1+p+q", "q")
        .spec(spec(&[("p", 1), ("q", 1)], &[1, 3, 10, 36, 137], "A002212"))
        .spec(spec(&[("p", 1), ("q", 2)], &[1, 4, 18, 88, 456, 2464], "A024175"))
        .spec(spec(
            &[("p", 2), ("q", 2)],
            &[1, 4, 20, 112, 672, 4224],
            "A003645, printed as 2^n C_{n+1}",
        ))
        .extra(ExtraCheck::DisplayedTriangle)
        .build()
}

fn ex3_3_threshold(s: &[u32]) -> Result<Preset, CatalogError> {
    const PQ: &[&str] = &["p", "q"];
    let list = s.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    let name = format!("ex3_3_threshold({list})");
    if s.len() == 1 {
        return Builder::new(name, "t_k = q up to the threshold, p beyond", PQ)
            .weights("1+p+q", format!("k<={}: q; else: p", s[0]))
            .extra(ExtraCheck::HeightBounded(s.to_vec()))
            .build();
    }
    let n = s.len() + 1;
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let s_text = format!("1+{}", names.join("+"));
    let mut t_text: Vec<String> = s
        .iter()
        .zip(&names)
        .map(|(si, x)| format!("k<={si}: {x}"))
        .collect();
    t_text.push(format!("else: {}", names[n - 1]));
    Builder::new(name, "t_k = x_j on the j-th threshold band", &refs)
        .weights(s_text, t_text.join("; "))
        .extra(ExtraCheck::HeightBounded(s.to_vec()))
        .build()
}

fn ex3_4(u: u32) -> Result<Preset, CatalogError> {
    let pu = pq_integer(u as usize)?;
    let pqu1 = pq_integer(u as usize - 1)?.try_mul(&Polynomial::parse(pu.vars(), "p*q").expect("literal"))?;
    let (a, b) = (pu.to_expr_string(), pqu1.to_expr_string());
    let mut builder = Builder::new(format!("ex3_4({u})"), "s_0 = [u]_{p,q}, t_1 = pq[u-1]_{p,q}", &["p", "q"])
        .weights(format!("k=0: {a}; else: p+q"), format!("k=1: {b}; else: p*q"))
        .riordan(&a, &b, "p+q", "p*q")
        .extra(ExtraCheck::NukIdentity(u));
    if u == 3 {
        builder = builder
            .spec(spec(
                &[("p", 1), ("q", 1)],
                &[1, 3, 11, 43, 173, 707, 2917],
                "A026671",
            ))
            .extra(ExtraCheck::DisplayedTriangle);
    }
    builder.build()
}

fn ex3_5() -> Result<Preset, CatalogError> {
    Builder::new("ex3_5", "three-variable triangle I(p,q,r)", &["p", "q", "r"])
        .weights("k=0: q+r; else: p+q+r", "q*(p+r)")
        .riordan("q+r", "q*(p+r)", "p+q+r", "q*(p+r)")
        .spec(spec(&[("p", 1), ("q", 1), ("r", 0)], CATALAN, "Catalan numbers, A000108"))
        .spec(spec(
            &[("p", 1), ("q", 1), ("r", 1)],
            &[1, 2, 6, 22, 90],
            "large Schroeder numbers, A006318",
        ))
        .spec(spec(
            &[("p", 1), ("q", 1), ("r", 2)],
            &[1, 3, 12, 57, 300, 1686, 9912],
            "A047891",
        ))
        .spec(spec(
            &[("p", 1), ("q", 2), ("r", 1)],
            &[1, 3, 13, 67, 381, 2307, 14598],
            "A064062",
        ))
        .extra(ExtraCheck::DisplayedTriangle)
        .extra(ExtraCheck::DisplayedColumn)
        .extra(ExtraCheck::PkRecursion)
        .extra(ExtraCheck::BcDecomposition)
        .build()
}

fn ex3_6() -> Result<Preset, CatalogError> {
    Builder::new("ex3_6", "homogenized Narayana polynomials of type B", &["p", "q"])
        .weights("p+q", "k=1: 2*p*q; else: p*q")
        .riordan("p+q", "2*p*q", "p+q", "p*q")
        .closed(ClosedForm::NarayanaB)
        .spec(spec(
            &[("p", 1), ("q", 1)],
            &[1, 2, 6, 20, 70, 252],
            "central binomial coefficients, A000984",
        ))
        .spec(spec(
            &[("p", 2), ("q", 1)],
            &[1, 3, 13, 63, 321, 1683],
            "central Delannoy numbers, A001850",
        ))
        .spec(spec(&[("p", 2), ("q", 2)], &[1, 4, 24, 160, 1120, 8064], "A059304"))
        .spec(spec(&[("p", 2), ("q", 4)], &[1, 6, 52, 504, 5136], "A084773"))
        .build()
}

fn ex3_7() -> Result<Preset, CatalogError> {
    Builder::new("ex3_7", "homogenized Narayana polynomials of type A", &["p", "q"])
        .weights("k=0: q; else: p+q", "p*q")
        .riordan("q", "p*q", "p+q", "p*q")
        .closed(ClosedForm::NarayanaA)
        .spec(spec(&[("p", 1), ("q", 1)], CATALAN, "Catalan numbers, A000108"))
        .spec(erratum(
            &[("p", 2), ("q", 1)],
            &[1, 1, 3, 11, 45, 19, 903, 4279],
            &[1, 1, 3, 11, 45, 197, 903, 4279],
            "little Schroeder numbers, A001003",
        ))
        .spec(spec(&[("p", 1), ("q", 2)], LARGE_SCHROEDER, "large Schroeder numbers, A006318"))
        .spec(spec(
            &[("p", 2), ("q", 2)],
            &[1, 2, 8, 40, 224, 1344, 8448, 54912],
            "A151374",
        ))
        .extra(ExtraCheck::ColumnCoincidence)
        .build()
}

fn ex3_8() -> Result<Preset, CatalogError> {
    Builder::new("ex3_8_bell", "homogenized Bell polynomials S_n(p,q)", &["p", "q"])
        .weights("k*p+q", "k*p*q")
        .closed(ClosedForm::Stirling)
        .spec(spec(&[("p", 1), ("q", 1)], BELL, "Bell numbers, A000110"))
        .spec(spec(&[("p", 2), ("q", 1)], &[1, 1, 3, 11, 49, 257, 1539], "A004211"))
        .spec(spec(&[("p", 1), ("q", 2)], &[1, 2, 6, 22, 94, 454, 2430], "A001861"))
        .spec(erratum(
            &[("p", 2), ("q", 2)],
            &[1, 2, 8, 40, 224, 1344, 8448, 54912],
            &[1, 2, 8, 40, 240, 1664, 12992, 112256],
            "A055882, 2^n B_n",
        ))
        .extra(ExtraCheck::BellSeries)
        .extra(ExtraCheck::ColumnCoincidence)
        .build()
}

fn ex3_9() -> Result<Preset, CatalogError> {
    Builder::new("ex3_9_eulerian", "bivariate Eulerian polynomials E_{n+1}(p,q)", &["p", "q"])
        .weights("(k+1)*(p+q)", "k*(k+1)*p*q")
        .closed(ClosedForm::EulerianShifted)
        .spec(spec(
            &[("p", 1), ("q", 1)],
            &[1, 2, 6, 24, 120, 720, 5040],
            "factorials (n+1)!, A000142",
        ))
        .extra(ExtraCheck::EulerianOracle)
        .build()
}

fn counterexample(a: u32, b: u32) -> Result<Preset, CatalogError> {
    let mut p = Builder::new(
        format!("counterexample({a},{b})"),
        "weights whose leading Hankel minors are displayed in closed form",
        &["q"],
    )
    .weights(
        format!("k=0: q^2; else: 1+q^2+{a}*q^{b}"),
        "k=1: q^4; else: q^2+q^4",
    )
    .extra(ExtraCheck::CounterexampleDisplay { a, b })
    .build()?;
    p.expect_stieltjes = false;
    Ok(p)
}

fn intro_bell() -> Result<Preset, CatalogError> {
    Builder::new("intro_bell", "Bell polynomials B_n(q)", &["q"])
        .weights("k+q", "k*q")
        .closed(ClosedForm::Stirling)
        .spec(spec(&[("q", 1)], BELL, "Bell numbers, A000110"))
        .extra(ExtraCheck::Homogenized)
        .build()
}

fn intro_eulerian() -> Result<Preset, CatalogError> {
    Builder::new("intro_eulerian", "Eulerian polynomials", &["q"])
        .weights("(k+1)*q+k", "k^2*q")
        .extra(ExtraCheck::EulerianAlignment)
        .extra(ExtraCheck::Homogenized)
        .build()
}

fn intro_qschroeder() -> Result<Preset, CatalogError> {
    Builder::new("intro_qschroeder", "q-Schroeder polynomials", &["q"])
        .weights("k=0: 1+q; else: 1+2*q", "q*(1+q)")
        .riordan("1+q", "q*(1+q)", "1+2*q", "q*(1+q)")
        .closed(ClosedForm::QSchroeder)
        .spec(spec(&[("q", 1)], LARGE_SCHROEDER, "large Schroeder numbers, A006318"))
        .build()
}

fn intro_qdelannoy() -> Result<Preset, CatalogError> {
    Builder::new("intro_qdelannoy", "q-central Delannoy polynomials", &["q"])
        .weights("1+2*q", "k=1: 2*q*(q+1); else: q*(1+q)")
        .riordan("1+2*q", "2*q*(q+1)", "1+2*q", "q*(1+q)")
        .closed(ClosedForm::QDelannoy)
        .spec(spec(
            &[("q", 1)],
            &[1, 3, 13, 63, 321, 1683],
            "central Delannoy numbers, A001850",
        ))
        .build()
}

fn intro_narayana_a() -> Result<Preset, CatalogError> {
    Builder::new("intro_narayana_A", "Narayana polynomials of type A", &["q"])
        .weights("k=0: q; else: 1+q", "q")
        .riordan("q", "q", "1+q", "q")
        .closed(ClosedForm::NarayanaA)
        .spec(spec(&[("q", 1)], CATALAN, "Catalan numbers, A000108"))
        .extra(ExtraCheck::Homogenized)
        .build()
}

fn intro_narayana_b() -> Result<Preset, CatalogError> {
    Builder::new("intro_narayana_B", "Narayana polynomials of type B", &["q"])
        .weights("1+q", "k=1: 2*q; else: q")
        .riordan("1+q", "2*q", "1+q", "q")
        .closed(ClosedForm::NarayanaB)
        .spec(spec(
            &[("q", 1)],
            &[1, 2, 6, 20, 70, 252],
            "central binomial coefficients, A000984",
        ))
        .extra(ExtraCheck::Homogenized)
        .build()
}
