//! Worked examples with their published invariants, and a runner that checks them.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::LogtanError;
use crate::groebner::{annihilator, Ideal};
use crate::homology::LiftingCheck;
use crate::logtan::{
    analyze, bourbaki, check_normal, validate_theorems, AnalysisOptions, BourbakiData, InvariantReport, Sequence,
    Stability, Violation,
};
use crate::parse::parse_polynomial;
use crate::scalar::Field;

/// Expected values. `None` means the value is not pinned.
#[derive(Clone, Debug, Default)]
pub struct Pins {
    pub e: Option<i64>,
    pub exponents: Option<Vec<i64>>,
    pub m: Option<i64>,
    pub bour: Option<i64>,
    pub c3: Option<i64>,
    pub gpdim: Option<usize>,
    pub generator_count: Option<usize>,
    /// Generator degrees of the minimal resolution of `T_σ`, per homological index.
    pub betti: Option<Vec<Vec<i64>>>,
    pub free: Option<bool>,
    pub nearly_free: Option<bool>,
    pub three_syzygy: Option<bool>,
    pub compressible: Option<bool>,
    pub stability: Option<Stability>,
    pub complete_intersection: Option<bool>,
    pub bourbaki_betti: Option<Vec<Vec<i64>>>,
    pub deg_b: Option<i64>,
    pub p_a: Option<i64>,
    /// Degrees of `V(Fitt0)` and `V(Ann)`, compared as an unordered pair.
    pub scheme_degrees: Option<[i64; 2]>,
    pub annihilator: Option<Vec<&'static str>>,
    pub fitting: Option<Vec<&'static str>>,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub f: String,
    pub g: String,
    pub pins: Pins,
}

fn fx(name: &str, f: &str, g: &str, pins: Pins) -> Fixture {
    Fixture { name: name.to_string(), f: f.to_string(), g: g.to_string(), pins }
}

fn rows(r: &[&[i64]]) -> Option<Vec<Vec<i64>>> {
    Some(r.iter().map(|x| x.to_vec()).collect())
}

/// The built-in corpus.
pub fn fixtures() -> Vec<Fixture> {
    use Stability::*;
    let mut out = vec![
        fx(
            "schematic-difference",
            "2*x1*x3 - x1^2",
            "3*x2*x3^2 - 3*x0*x1*x3 + x1^3",
            Pins {
                exponents: Some(vec![1, 2]),
                m: Some(5),
                free: Some(true),
                scheme_degrees: Some([4, 6]),
                annihilator: Some(vec!["x3^2", "x1*x3", "x0*x1^2 - x1^3"]),
                fitting: Some(vec!["x3^2", "x1*x3^2", "x1^2*x3", "x0*x1^2 - x1^3 - 2*x1*x2*x3 + 2*x2*x3^2"]),
                ..Default::default()
            },
        ),
        fx(
            "pencils-cubics-genericpencil",
            "x3*(x0*x2 - x1^2) - (x0 - 2*x1)*(3*x1 - x0 - 2*x2)*(x1 - 2*x2)",
            "x3*(x0*x2 - x1^2) - x1^2*(x0 - x1)",
            Pins {
                m: Some(0),
                bour: Some(12),
                c3: Some(32),
                betti: rows(&[&[4, 4, 4, 4], &[6, 6]]),
                ..Default::default()
            },
        ),
        fx(
            "compressible-pencilcubics",
            "x0^3 + x1^3 + x0*x1*x3",
            "x0*x1*x3",
            Pins {
                m: Some(12),
                exponents: Some(vec![0, 4]),
                compressible: Some(true),
                free: Some(true),
                ..Default::default()
            },
        ),
        fx(
            "free-incompressible-m9",
            "x1*(x2^2 - x1^2)",
            "x3*x2*(x0 - x1)",
            Pins { exponents: Some(vec![1, 3]), m: Some(9), free: Some(true), ..Default::default() },
        ),
        fx(
            "free-incompressible-m8",
            "x0^2*x1 + x3^3",
            "x0^3 + x0*x2*x3 + x3^3",
            Pins { exponents: Some(vec![2, 2]), m: Some(8), free: Some(true), ..Default::default() },
        ),
        fx(
            "nearly-free-cubics",
            "x0^2*(x1 - x2) + x2^2*(x1 - x0 + x3)",
            "-x1*x2*x3 + x2^2*x3",
            Pins {
                e: Some(2),
                m: Some(7),
                bour: Some(1),
                c3: Some(2),
                nearly_free: Some(true),
                stability: Some(StrictlySemistable),
                ..Default::default()
            },
        ),
        fx(
            "pcubics-pog-not-nf",
            "x2*x3*(x0 - x1)",
            "x0*(x0^2 + x1^2 + x2^2 + x3^2)",
            Pins {
                e: Some(3),
                bour: Some(4),
                m: Some(5),
                c3: Some(8),
                three_syzygy: Some(true),
                betti: rows(&[&[3, 3, 3], &[5]]),
                complete_intersection: Some(true),
                bourbaki_betti: rows(&[&[2, 2], &[4]]),
                ..Default::default()
            },
        ),
        fx(
            "pencilcubics-Bour4-m5-notpog",
            "x0^2*x2 + x0*x1*x3 + x3^3",
            "x2^3 + x1*x2*x3 + x3^3",
            Pins {
                e: Some(3),
                bour: Some(4),
                m: Some(5),
                c3: Some(8),
                gpdim: Some(1),
                generator_count: Some(4),
                three_syzygy: Some(false),
                betti: rows(&[&[3, 3, 3, 4], &[4, 5]]),
                ..Default::default()
            },
        ),
        fx(
            "pencilcubics-Bour4-m5-pog-c3-8",
            "x0^3 + x0*x1*x3 + x3^3",
            "x3^3 + x1*x3^2 + x0*x1*x3 + x0^2*x2",
            Pins {
                e: Some(3),
                bour: Some(4),
                m: Some(5),
                c3: Some(8),
                gpdim: Some(2),
                betti: rows(&[&[3, 4, 4, 4, 4, 4, 4], &[5, 5, 5, 5, 5, 5, 5], &[6, 6]]),
                complete_intersection: Some(false),
                bourbaki_betti: rows(&[&[3, 3, 3, 3, 3, 3], &[4, 4, 4, 4, 4, 4, 4], &[5, 5]]),
                ..Default::default()
            },
        ),
        fx(
            "pencil-of-cubics-bour2",
            "x0*x1^2 + x2^3 + x2^2*x3",
            "x2*x3*(x2 - x1)",
            Pins {
                e: Some(3),
                m: Some(7),
                bour: Some(2),
                gpdim: Some(2),
                betti: rows(&[&[3, 3, 3, 3, 3], &[4, 4, 4, 4], &[5]]),
                ..Default::default()
            },
        ),
        fx(
            "strictly-sst-pencil-cubics",
            "x0^3 + x1^3 + x2^3 + x3^3",
            "x0^3 + x1^3 + x2*x3^2",
            Pins {
                e: Some(2),
                bour: Some(4),
                m: Some(4),
                c3: Some(16),
                three_syzygy: Some(true),
                stability: Some(StrictlySemistable),
                betti: rows(&[&[2, 4, 4], &[6]]),
                ..Default::default()
            },
        ),
        fx(
            "compressible-mixeddegrees",
            "x0*(x1 - x2)",
            "x0^3 + x1^3 + x2^3",
            Pins { exponents: Some(vec![0, 3]), compressible: Some(true), free: Some(true), ..Default::default() },
        ),
        fx(
            "mixeddegrees-m5",
            "x0*x1",
            "x3*x2*(x0 - x1)",
            Pins { exponents: Some(vec![1, 2]), m: Some(5), free: Some(true), ..Default::default() },
        ),
        fx(
            "nearly-free-mixed-degrees-e1",
            "x0^2 + x3^2",
            "x0^3 + x0*x1*x2 + x3^3",
            Pins {
                e: Some(1),
                m: Some(4),
                bour: Some(1),
                c3: Some(3),
                nearly_free: Some(true),
                stability: Some(Unstable),
                betti: rows(&[&[1, 3, 3], &[4]]),
                ..Default::default()
            },
        ),
        fx(
            "nearly-free-mixed-degrees-e2",
            "x0*x1 - x2*x3",
            "x1*x3*(x0 - x2)",
            Pins {
                e: Some(2),
                m: Some(4),
                bour: Some(1),
                c3: Some(1),
                nearly_free: Some(true),
                stability: Some(Stable),
                betti: rows(&[&[2, 2, 2], &[3]]),
                deg_b: Some(1),
                p_a: Some(0),
                ..Default::default()
            },
        ),
        fx(
            "B2-mixed-degrees-c3-2",
            "x3*(x0 - x1)",
            "x0^2*x2 + x0*x1*x3 + x3^3",
            Pins {
                e: Some(2),
                bour: Some(2),
                m: Some(3),
                c3: Some(2),
                betti: rows(&[&[2, 3, 3, 3, 3], &[4, 4, 4, 4], &[5]]),
                ..Default::default()
            },
        ),
        fx(
            "B2-mixed-degrees-c3-4",
            "x0^2 + x1^2 + x2^2 + x3^2",
            "x3*(x2 - x3)*(x0 - x1)",
            Pins {
                e: Some(2),
                bour: Some(2),
                m: Some(3),
                c3: Some(4),
                betti: rows(&[&[2, 2, 3], &[4]]),
                ..Default::default()
            },
        ),
        fx(
            "B3-mixed-degrees-e-2",
            "-x0*x1 + x1*x2 - x2*x3",
            "x0*x1^2 + x2^3 + x2^2*x3",
            Pins {
                e: Some(2),
                bour: Some(3),
                m: Some(2),
                c3: Some(7),
                p_a: Some(0),
                betti: rows(&[&[2, 3, 3, 3], &[4, 4]]),
                ..Default::default()
            },
        ),
        fx(
            "mixed-degrees-m2-e3",
            "x2*x3 - x0*x1",
            "x0^2*x2 + x0*x1*x3 + x2*x3^2 + x3^3",
            Pins {
                e: Some(3),
                bour: Some(5),
                m: Some(2),
                c3: Some(3),
                betti: rows(&[&[3, 3, 3, 3, 3, 4], &[4, 4, 4, 5, 5], &[6]]),
                ..Default::default()
            },
        ),
    ];
    for k in 2..=4i64 {
        let f = "x0^3 + x0*x1*x2 + x3^3".to_string();
        let g = format!("x0^{p} + x3^{p}", p = k + 1);
        let d = 2 + k;
        let pins = if k == 2 {
            Pins { exponents: Some(vec![1, 3]), m: Some(9), free: Some(true), ..Default::default() }
        } else {
            Pins {
                e: Some(1),
                nearly_free: Some(true),
                betti: Some(vec![vec![1, d, d], vec![d + 1]]),
                ..Default::default()
            }
        };
        out.push(Fixture { name: format!("free-nearlyfree-sequence-k{k}"), f, g, pins });
    }
    out
}

/// Result of checking one fixture.
#[derive(Clone, Debug, Serialize)]
pub struct FixtureOutcome {
    pub name: String,
    pub passed: bool,
    pub mismatches: Vec<String>,
    pub report: Option<InvariantReport>,
    pub bourbaki: Option<BourbakiData>,
    pub lifting: Option<LiftingCheck>,
    pub violations: Vec<Violation>,
}

fn compare<T: PartialEq + std::fmt::Debug>(out: &mut Vec<String>, what: &str, pinned: &Option<T>, got: &T) {
    if let Some(p) = pinned {
        if p != got {
            out.push(format!("{what}: expected {p:?}, got {got:?}"));
        }
    }
}

fn ideal_of(gens: &[&str], field: Field) -> Result<Ideal, LogtanError> {
    let ring = crate::polynomial::Ring::new(4, field);
    let polys = gens.iter().map(|s| parse_polynomial(s, ring)).collect::<Result<Vec<_>, _>>()?;
    Ok(Ideal::new(ring, polys)?)
}

/// Analyzes a fixture over `field` and compares every pinned value, plus the Bourbaki
/// cross-checks, the lifting comparison and the theorem constraints.
pub fn run_fixture(fixture: &Fixture, field: Field) -> FixtureOutcome {
    let mut outcome = FixtureOutcome {
        name: fixture.name.clone(),
        passed: false,
        mismatches: Vec::new(),
        report: None,
        bourbaki: None,
        lifting: None,
        violations: Vec::new(),
    };
    if let Err(err) = check_fixture(fixture, field, &mut outcome) {
        outcome.mismatches.push(format!("error: {err}"));
    }
    outcome.passed = outcome.mismatches.is_empty();
    outcome
}

fn check_fixture(fixture: &Fixture, field: Field, out: &mut FixtureOutcome) -> Result<(), LogtanError> {
    let p = &fixture.pins;
    let seq = Sequence::parse(&fixture.f, &fixture.g, field)?;
    let analysis = analyze(&seq, &AnalysisOptions { schemes: p.scheme_degrees.is_some() })?;
    let r = &analysis.report;
    let mm = &mut out.mismatches;
    compare(mm, "e", &p.e, &r.e);
    compare(mm, "exponents", &p.exponents, &r.exponents);
    compare(mm, "m", &p.m, &r.m);
    compare(mm, "Bour", &p.bour, &r.bour);
    compare(mm, "c3", &p.c3, &r.c3);
    compare(mm, "gpdim", &p.gpdim, &r.gpdim);
    compare(mm, "generator_count", &p.generator_count, &r.generator_count);
    compare(mm, "betti", &p.betti, &analysis.betti.all_degrees().to_vec());
    compare(mm, "free", &p.free, &r.flags.free);
    compare(mm, "nearly_free", &p.nearly_free, &r.flags.nearly_free);
    compare(mm, "three_syzygy", &p.three_syzygy, &r.flags.three_syzygy);
    compare(mm, "compressible", &p.compressible, &r.compressible);
    compare(mm, "stability", &p.stability, &r.stability);

    if let (Some(pinned), Some(s)) = (p.scheme_degrees, &r.schemes) {
        let mut want = pinned;
        want.sort();
        let mut got = [s.fitting.degree, s.annihilator.degree];
        got.sort();
        if want != got {
            mm.push(format!("scheme degrees: expected {want:?}, got {got:?}"));
        }
    }
    if p.annihilator.is_some() || p.fitting.is_some() {
        let jac = &analysis.jacobian;
        if let Some(gens) = &p.annihilator {
            let ann = annihilator(jac)?.saturate()?;
            if !ann.same_as(&ideal_of(gens, field)?.saturate()?) {
                mm.push(format!("saturated annihilator differs: got {ann}"));
            }
        }
        if let Some(gens) = &p.fitting {
            let fit = check_normal(&seq)?.fitting.saturate()?;
            if !fit.same_as(&ideal_of(gens, field)?.saturate()?) {
                mm.push(format!("saturated Fitting ideal differs: got {fit}"));
            }
        }
    }

    let b = bourbaki(&analysis)?;
    let lifting = b.as_ref().map_or(LiftingCheck::NotApplicable, |b| b.lifting);
    if lifting == LiftingCheck::Fails {
        mm.push("resolution of T does not lift the resolution of I_B".into());
    }
    if let Some(b) = &b {
        compare(mm, "complete_intersection", &p.complete_intersection, &b.complete_intersection);
        compare(mm, "bourbaki betti", &p.bourbaki_betti, &b.betti.all_degrees().to_vec());
        compare(mm, "deg_B", &p.deg_b, &b.deg_b);
        compare(mm, "p_a", &p.p_a, &b.p_a);
        if b.complete_intersection != r.flags.three_syzygy {
            mm.push(format!(
                "complete intersection = {} but three_syzygy = {}",
                b.complete_intersection, r.flags.three_syzygy
            ));
        }
    } else if p.complete_intersection.is_some() || p.bourbaki_betti.is_some() || p.deg_b.is_some() {
        mm.push("Bourbaki data pinned but the sequence is free".into());
    }
    out.violations = validate_theorems(r);
    for v in &out.violations {
        mm.push(format!("violation {}: {}", v.rule, v.detail));
    }
    out.lifting = Some(lifting);
    out.bourbaki = b;
    out.report = Some(analysis.report);
    Ok(())
}

/// Runs every fixture in parallel; results are in corpus order.
pub fn run_corpus(fixtures: &[Fixture], field: Field) -> Vec<FixtureOutcome> {
    fixtures.par_iter().map(|f| run_fixture(f, field)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(name: &str) -> Fixture {
        fixtures().into_iter().find(|f| f.name == name).unwrap()
    }

    #[test]
    fn fixture_names_are_unique() {
        let all = fixtures();
        let mut names: Vec<&str> = all.iter().map(|f| f.name.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), all.len());
    }

    #[test]
    fn nearly_free_example_passes() {
        let o = run_fixture(&named("nearly-free-mixed-degrees-e1"), Field::Rational);
        assert!(o.passed, "{:?}", o.mismatches);
        assert_eq!(o.lifting, Some(LiftingCheck::Holds));
    }

    #[test]
    fn corrupted_pin_fails_that_row() {
        let mut fx = named("nearly-free-mixed-degrees-e1");
        fx.pins.m = Some(5);
        let o = run_fixture(&fx, Field::Rational);
        assert!(!o.passed);
        assert_eq!(o.mismatches, ["m: expected 5, got 4"]);
    }
}
