mod common;

use logtan::corpus::fixtures;
use logtan::logtan::{
    analyze, bourbaki_with_choice, canonical_syzygies, jacobian_matrix, minimal_degree_choices, tjurina_plane,
    AnalysisOptions, InvariantReport, Sequence,
};
use logtan::search::{draw, SearchConfig};
use logtan::{parse_polynomial, Field, Polynomial, Ring};
use proptest::prelude::*;

const FP: Field = Field::Prime(common::P);

fn report(seq: &Sequence) -> InvariantReport {
    analyze(seq, &AnalysisOptions { schemes: false }).unwrap().report
}

fn fixture_pair(index: usize, field: Field) -> (Polynomial, Polynomial) {
    let all = fixtures();
    let fx = &all[index % all.len()];
    let ring = Ring::new(4, field);
    (parse_polynomial(&fx.f, ring).unwrap(), parse_polynomial(&fx.g, ring).unwrap())
}

type Key = (i64, i64, Vec<i64>, i64, i64);

fn key(r: &InvariantReport) -> Key {
    (r.m, r.e, r.exponents.clone(), r.bour, r.c3)
}

#[test]
fn exchanging_f_and_g_leaves_the_report_unchanged() {
    for fx in fixtures() {
        let a = report(&Sequence::parse(&fx.f, &fx.g, Field::Rational).unwrap());
        let b = report(&Sequence::parse(&fx.g, &fx.f, Field::Rational).unwrap());
        assert_eq!(a, b, "{}", fx.name);
    }
}

#[test]
fn minimal_degree_choice_does_not_change_the_curve_invariants() {
    for fx in fixtures() {
        let seq = Sequence::parse(&fx.f, &fx.g, Field::Rational).unwrap();
        let a = analyze(&seq, &AnalysisOptions { schemes: false }).unwrap();
        if a.report.flags.free {
            continue;
        }
        let mut seen = Vec::new();
        for choice in minimal_degree_choices(&a) {
            let b = bourbaki_with_choice(&a, choice).unwrap();
            seen.push((b.deg_b, b.p_a));
        }
        seen.dedup();
        assert_eq!(seen.len(), 1, "{}: {seen:?}", fx.name);
    }
}

#[test]
fn global_sections_match_zero_exponents() {
    for fx in fixtures() {
        let r = report(&Sequence::parse(&fx.f, &fx.g, Field::Rational).unwrap());
        let zeros = r.exponents.iter().filter(|&&a| a == 0).count() as i64;
        assert_eq!(r.h0_t, zeros, "{}", fx.name);
    }
}

/// Curves `g(x0, x1, x2)` with their Tjurina numbers.
const PLANE_CURVES: &[(&str, i64)] = &[
    ("x0^2 + x1^2 + x2^2", 0),
    ("x1^2*x2 - x0^3 - x0^2*x2", 1),
    ("x1^2*x2 - x0^3", 2),
    ("x0*x1*x2", 3),
    ("x0*x1*(x0 - x1)", 4),
    ("x0^3 + x1^3 + x2^3", 0),
    ("x0*x1*(x0 - x2)*(x1 - x2)", 6),
];

#[test]
fn plane_curve_reduction() {
    let r3 = Ring::new(3, Field::Rational);
    for &(g, tau) in PLANE_CURVES {
        assert_eq!(tjurina_plane(&parse_polynomial(g, r3).unwrap()).unwrap(), tau, "{g}");
        let r = report(&Sequence::parse("x3", g, Field::Rational).unwrap());
        assert_eq!(r.m, tau, "{g}");
        let d_g = r.d_g;
        assert_eq!(r.bour, r.e * (r.e - d_g) + d_g * d_g - tau, "{g}");
    }
}

#[test]
fn canonical_syzygies_of_random_pairs() {
    for (d_f, d_g) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
        let cfg = SearchConfig { d_f, d_g, count: 1, seed: 99, prime: common::P };
        for index in 0..25 {
            let (f, g) = draw(&cfg, index).unwrap();
            let seq = Sequence::new(f, g).unwrap();
            let jac = jacobian_matrix(&seq);
            let nu = canonical_syzygies(&seq);
            assert!(nu.iter().any(|v| !v.is_zero()));
            for v in &nu {
                assert!(jac.apply(v).is_zero());
                if !v.is_zero() {
                    assert_eq!(jac.source().degree_of(v).unwrap(), Some(seq.d()));
                }
            }
        }
    }
}

fn scalar_poly(ring: Ring, c: i64) -> Polynomial {
    ring.from_i64(c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scaling_leaves_the_report_unchanged(index in 0usize..64, a in 1i64..50, b in -50i64..-1) {
        let (f, g) = fixture_pair(index, FP);
        let ring = f.ring();
        let base = report(&Sequence::new(f.clone(), g.clone()).unwrap());
        let scaled = report(&Sequence::new(f.mul(&scalar_poly(ring, a)), g.mul(&scalar_poly(ring, b))).unwrap());
        prop_assert_eq!(base, scaled);
    }

    #[test]
    fn linear_coordinate_changes_preserve_invariants(
        index in 0usize..64,
        entries in prop::collection::vec(-2i64..=2, 16),
    ) {
        let (f, g) = fixture_pair(index, FP);
        let ring = f.ring();
        let rows: Vec<Vec<i64>> = entries.chunks(4).map(|c| c.to_vec()).collect();
        prop_assume!(det4(&rows) % common::P as i64 != 0);
        let images: Vec<Polynomial> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .fold(ring.zero(), |acc, (j, &c)| acc.add(&ring.var(j).mul(&scalar_poly(ring, c))))
            })
            .collect();
        let base = report(&Sequence::new(f.clone(), g.clone()).unwrap());
        let moved = report(&Sequence::new(f.substitute(&images), g.substitute(&images)).unwrap());
        prop_assert_eq!(key(&base), key(&moved));
    }
}

fn det4(m: &[Vec<i64>]) -> i64 {
    fn det(m: &[Vec<i64>]) -> i64 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum()
    }
    det(m)
}
