mod common;

use common::*;
use logtan::groebner::default_groebner_basis;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ideal_spairs_reduce_to_zero(seed in any::<u64>()) {
        let mut r = rng(seed);
        let i = random_ideal(&mut r, ring_for(seed));
        let gb = default_groebner_basis(&ideal_as_submodule(&i));
        prop_assert!(spairs_reduce_to_zero(&gb));
    }

    #[test]
    fn module_spairs_reduce_to_zero(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_module(&mut r, ring_for(seed));
        let gb = default_groebner_basis(&m);
        prop_assert!(spairs_reduce_to_zero(&gb));
        let probe = random_module(&mut r, m.parent().ring());
        if probe.parent() == m.parent() {
            prop_assert!(basis_spans_and_reduces(&m, &gb, &probe.generators()[0]));
        } else {
            prop_assert!(basis_spans_and_reduces(&m, &gb, &m.generators()[0]));
        }
    }

    #[test]
    fn syzygies_annihilate_generators(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_module(&mut r, ring_for(seed));
        prop_assert!(syzygies_vanish(&m));
    }

    #[test]
    fn resolutions_are_exact_and_minimal(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_module(&mut r, ring_for(seed));
        let (_, c) = check_resolution(&m);
        prop_assert!(c.complex, "d∘d != 0");
        prop_assert!(c.exact, "not exact");
        prop_assert!(c.minimal, "not minimal");
        prop_assert!(c.euler, "Hilbert functions disagree");
    }

    #[test]
    fn saturation_is_idempotent(seed in any::<u64>()) {
        let mut r = rng(seed);
        let ring = ring_for(seed);
        let base = random_ideal(&mut r, ring);
        let i = with_embedded_component(&mut r, &base);
        prop_assert!(saturation_idempotent(&i));
    }

    #[test]
    fn fitting_ideal_lies_in_annihilator(seed in any::<u64>()) {
        let mut r = rng(seed);
        let phi = random_matrix_2x4(&mut r, ring_for(seed));
        prop_assert!(fitting_in_annihilator(&phi));
    }
}
