use std::collections::BTreeSet;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::sequence::{check_normal, jacobian_matrix, Sequence};
use crate::error::LogtanError;
use crate::groebner::{annihilator, GradedMap, Ideal, SubmoduleBasis};
use crate::hilbert::{dimension_degree, hilbert_polynomial_linear, hilbert_series_cokernel};
use crate::homology::{betti_table, graded_pdim, minimal_free_resolution, BettiTable, FreeResolution, ModuleInput};
use crate::monomial::Monomial;
use crate::scalar::Scalar;
use crate::AlgebraError;

/// Slope stability of the rank-two sheaf, decided from `e` and `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stability {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl Stability {
    pub fn classify(e: i64, d: i64) -> Self {
        if 2 * e > d {
            Stability::Stable
        } else if 2 * e == d {
            Stability::StrictlySemistable
        } else {
            Stability::Unstable
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Stability::Stable => "stable",
            Stability::StrictlySemistable => "strictly_semistable",
            Stability::Unstable => "unstable",
        }
    }
}

impl std::fmt::Display for Stability {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub free: bool,
    pub nearly_free: bool,
    pub three_syzygy: bool,
}

/// Projective dimension and degree of a subscheme (`dimension = -1` for the empty scheme).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeData {
    pub dimension: i64,
    pub degree: i64,
}

impl SchemeData {
    fn of(ideal: &Ideal) -> Result<Self, AlgebraError> {
        match dimension_degree(ideal) {
            Ok((dimension, degree)) => Ok(SchemeData { dimension, degree }),
            Err(AlgebraError::EmptyScheme) => Ok(SchemeData { dimension: -1, degree: 0 }),
            Err(e) => Err(e),
        }
    }
}

/// The two scheme structures on the support of `Q_σ`, measured after saturation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeComparison {
    pub fitting: SchemeData,
    pub annihilator: SchemeData,
    /// True when the saturated ideals are equal.
    pub coincide: bool,
    pub fitting_saturated: Vec<String>,
    pub annihilator_saturated: Vec<String>,
}

mod ratio_string {
    use num_rational::Rational64;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational64, D::Error> {
        let text = String::deserialize(d)?;
        let (p, q) = text.split_once('/').ok_or_else(|| D::Error::custom("expected p/q"))?;
        let p: i64 = p.trim().parse().map_err(D::Error::custom)?;
        let q: i64 = q.trim().parse().map_err(D::Error::custom)?;
        if q == 0 {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(Rational64::new(p, q))
    }
}

/// Every discrete invariant of one normal sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub d_f: i64,
    pub d_g: i64,
    pub d: i64,
    pub m0: i64,
    pub normal: bool,
    pub compressible: bool,
    pub h0_t: i64,
    pub exponents: Vec<i64>,
    pub e: i64,
    pub m: i64,
    pub ch3_q: i64,
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
    pub bour: i64,
    pub gpdim: usize,
    pub generator_count: usize,
    pub flags: Flags,
    pub stability: Stability,
    #[serde(with = "ratio_string")]
    pub slope: Rational64,
    pub schemes: Option<SchemeComparison>,
}

impl InvariantReport {
    /// `|`-separated list of the set flags followed by the stability class.
    pub fn flag_string(&self) -> String {
        let mut parts = Vec::new();
        if self.flags.free {
            parts.push("free");
        }
        if self.flags.nearly_free {
            parts.push("nearly_free");
        }
        if self.flags.three_syzygy {
            parts.push("three_syzygy");
        }
        if self.compressible {
            parts.push("compressible");
        }
        parts.push(self.stability.as_str());
        parts.join("|")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    /// Compute saturated Fitting and annihilator ideals and their degrees.
    pub schemes: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { schemes: true }
    }
}

/// A completed analysis: the report together with the objects it was computed from.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub sequence: Sequence,
    pub jacobian: GradedMap,
    pub tangent: SubmoduleBasis,
    pub resolution: FreeResolution,
    pub betti: BettiTable,
    pub report: InvariantReport,
}

/// Number of independent constant vectors `v` with `∇σ · v = 0`.
pub fn h0_tangent(seq: &Sequence) -> i64 {
    let jac = jacobian_matrix(seq);
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..2 {
        let row = jac.row(i);
        let monos: BTreeSet<Monomial> = row.iter().flat_map(|p| p.terms().iter().map(|t| t.0)).collect();
        for mono in monos {
            rows.push(row.iter().map(|p| p.coefficient(&mono)).collect());
        }
    }
    4 - rank(rows) as i64
}

fn rank(mut rows: Vec<Vec<Scalar>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].mul(&inv);
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x = x.sub(&factor.mul(y));
            }
        }
        r += 1;
    }
    r
}

fn integral(r: Rational64, what: &str) -> Result<i64, LogtanError> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(LogtanError::Inconsistent(format!("{what} = {r} is not an integer")))
    }
}

/// `(c2, c3)` of a sheaf from the generator degrees of a free resolution and `c1`.
fn chern_from_resolution(betti: &BettiTable, c1: i64) -> Result<(i64, i64), LogtanError> {
    let mut ch2 = Rational64::from_integer(0);
    let mut ch3 = Rational64::from_integer(0);
    for (i, row) in betti.all_degrees().iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for &a in row {
            ch2 += Rational64::new(sign * a * a, 2);
            ch3 += Rational64::new(-sign * a * a * a, 6);
        }
    }
    chern_from_ch(c1, ch2, ch3)
}

fn chern_from_ch(c1: i64, ch2: Rational64, ch3: Rational64) -> Result<(i64, i64), LogtanError> {
    let c1r = Rational64::from_integer(c1);
    let c2 = (c1r * c1r - ch2 * 2) / 2;
    let c3 = ch3 * 2 - c1r * c1r * c1r / 3 + c1r * c2;
    Ok((integral(c2, "c2")?, integral(c3, "c3")?))
}

/// Runs the full analysis of a normal sequence.
pub fn analyze(seq: &Sequence, opts: &AnalysisOptions) -> Result<Analysis, LogtanError> {
    let normal = check_normal(seq)?;
    if !normal.normal {
        return Err(LogtanError::NotNormal { dimension: normal.dimension, divisor_degree: normal.degree });
    }
    let jacobian = jacobian_matrix(seq);
    let (d_f, d_g, d, m0) = (seq.d_f(), seq.d_g(), seq.d(), seq.m0());

    let hq = hilbert_series_cokernel(&jacobian);
    let (m, b) = hilbert_polynomial_linear(&hq)?;
    let ch3_q = b - 2 * m;

    let tangent = crate::groebner::kernel_of_map(&jacobian);
    let resolution = minimal_free_resolution(ModuleInput::Submodule(tangent.clone()))?;
    let betti = betti_table(&resolution)?;
    let exponents = betti.exponents();
    let e = *exponents.first().ok_or_else(|| LogtanError::Inconsistent("T_σ has no generators".into()))?;

    let c1 = -d;
    let ch2_t = Rational64::new(-(d_f * d_f + d_g * d_g), 2) + m;
    let ch3_t = Rational64::new(-(d_f * d_f * d_f + d_g * d_g * d_g), 6) + ch3_q;
    let (c2, c3) = chern_from_ch(c1, ch2_t, ch3_t)?;
    if c2 != m0 - m {
        return Err(LogtanError::Inconsistent(format!("c2 = {c2} but m0 - m = {}", m0 - m)));
    }
    let (c2_res, c3_res) = chern_from_resolution(&betti, c1)?;
    if (c2_res, c3_res) != (c2, c3) {
        return Err(LogtanError::Inconsistent(format!(
            "Chern classes from Q give ({c2}, {c3}), from the resolution of T give ({c2_res}, {c3_res})"
        )));
    }

    let zero_exponents = exponents.iter().filter(|&&a| a == 0).count() as i64;
    let h0_t = h0_tangent(seq);
    if h0_t != zero_exponents {
        return Err(LogtanError::Inconsistent(format!(
            "constant syzygies span {h0_t} dimensions but {zero_exponents} exponents vanish"
        )));
    }

    let bour = e * (e - d) + m0 - m;
    let generator_count = exponents.len();
    let free = bour == 0;
    if free != (generator_count == 2) {
        return Err(LogtanError::Inconsistent(format!("Bour = {bour} but T_σ has {generator_count} generators")));
    }
    let flags = Flags { free, nearly_free: bour == 1, three_syzygy: generator_count == 3 };

    let schemes = if opts.schemes { Some(compare_schemes(&jacobian, &normal.fitting)?) } else { None };

    let report = InvariantReport {
        d_f,
        d_g,
        d,
        m0,
        normal: true,
        compressible: e == 0,
        h0_t,
        exponents,
        e,
        m,
        ch3_q,
        c1,
        c2,
        c3,
        bour,
        gpdim: graded_pdim(&resolution),
        generator_count,
        flags,
        stability: Stability::classify(e, d),
        slope: Rational64::new(-d, 2),
        schemes,
    };
    Ok(Analysis { sequence: seq.clone(), jacobian, tangent, resolution, betti, report })
}

fn compare_schemes(jacobian: &GradedMap, fitting: &Ideal) -> Result<SchemeComparison, LogtanError> {
    let fit = fitting.saturate()?;
    let ann = annihilator(jacobian)?.saturate()?;
    let show = |i: &Ideal| i.groebner_basis().iter().map(|p| p.to_string()).collect();
    Ok(SchemeComparison {
        fitting: SchemeData::of(&fit)?,
        annihilator: SchemeData::of(&ann)?,
        coincide: fit.same_as(&ann),
        fitting_saturated: show(&fit),
        annihilator_saturated: show(&ann),
    })
}

/// Invariant report with default options.
pub fn invariants(seq: &Sequence) -> Result<InvariantReport, LogtanError> {
    Ok(analyze(seq, &AnalysisOptions::default())?.report)
}
