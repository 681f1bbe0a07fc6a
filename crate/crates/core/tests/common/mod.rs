//! Random inputs and property checkers shared by the property suites and the acceptance run.
#![allow(dead_code)]

use logtan::groebner::{
    annihilator, default_groebner_basis, fitting_ideal_0, kernel_of_map, normal_form, syzygy_basis, GradedFreeModule,
    GradedMap, Ideal, ModuleElement, SubmoduleBasis,
};
use logtan::hilbert::hilbert_series_submodule;
use logtan::homology::{minimal_free_resolution, FreeResolution, ModuleInput};
use logtan::{Field, Monomial, Polynomial, Ring};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const P: u32 = 32003;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Alternates between the rationals (small sparse inputs) and `F_32003` (denser inputs).
pub fn ring_for(seed: u64) -> Ring {
    if seed.is_multiple_of(3) {
        Ring::new(4, Field::Rational)
    } else {
        Ring::new(4, Field::Prime(P))
    }
}

/// A random homogeneous polynomial of degree `deg`, possibly zero for negative degrees.
pub fn random_poly(rng: &mut ChaCha8Rng, ring: Ring, deg: i64) -> Polynomial {
    if deg < 0 {
        return ring.zero();
    }
    let monos = Monomial::all_of_degree(ring.nvars(), deg as u32);
    let max_terms = if ring.field() == Field::Rational { 3 } else { 5 };
    let n = rng.gen_range(1..=max_terms.min(monos.len()));
    let terms = (0..n)
        .map(|_| {
            let m = monos[rng.gen_range(0..monos.len())];
            let mut c = rng.gen_range(-4i64..=4);
            if c == 0 {
                c = 1;
            }
            (m, ring.field().from_i64(c))
        })
        .collect();
    ring.from_terms(terms)
}

pub fn random_ideal(rng: &mut ChaCha8Rng, ring: Ring) -> Ideal {
    let n = rng.gen_range(2..=4);
    let gens = (0..n)
        .map(|_| {
            let deg = rng.gen_range(1..=3);
            random_poly(rng, ring, deg)
        })
        .collect();
    Ideal::new(ring, gens).unwrap()
}

pub fn ideal_as_submodule(i: &Ideal) -> SubmoduleBasis {
    let f = GradedFreeModule::free(i.ring(), 1);
    let gens = i.generators().iter().map(|g| ModuleElement::from_entries(vec![g.clone()])).collect();
    SubmoduleBasis::new(f, gens).unwrap()
}

/// A random homogeneous submodule of a free module of rank 1 to 3 with twists in `0..=1`.
pub fn random_module(rng: &mut ChaCha8Rng, ring: Ring) -> SubmoduleBasis {
    let rank = rng.gen_range(1..=3);
    let twists: Vec<i64> = (0..rank).map(|_| rng.gen_range(0..=1)).collect();
    let top = *twists.iter().max().unwrap();
    let parent = GradedFreeModule::new(ring, twists.clone());
    let n = rng.gen_range(1..=4);
    let mut gens = Vec::new();
    while gens.len() < n {
        let deg = top + rng.gen_range(1..=2);
        let v = ModuleElement::from_entries(twists.iter().map(|a| random_poly(rng, ring, deg - a)).collect());
        if !v.is_zero() {
            gens.push(v);
        }
    }
    SubmoduleBasis::new(parent, gens).unwrap()
}

/// A random 2x4 homogeneous matrix `R^4 -> R(a) ⊕ R(b)` with rows of degree `a, b ∈ {1, 2}`.
pub fn random_matrix_2x4(rng: &mut ChaCha8Rng, ring: Ring) -> GradedMap {
    let (a, b) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
    let rows =
        vec![(0..4).map(|_| random_poly(rng, ring, a)).collect(), (0..4).map(|_| random_poly(rng, ring, b)).collect()];
    GradedMap::from_rows(GradedFreeModule::free(ring, 4), GradedFreeModule::new(ring, vec![-a, -b]), rows).unwrap()
}

/// Every S-vector of a Gröbner basis reduces to zero under the basis itself.
pub fn spairs_reduce_to_zero(gb: &SubmoduleBasis) -> bool {
    let leads = gb.leading_terms().expect("a Gröbner basis");
    let ring = gb.parent().ring();
    let gens = gb.generators();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let ((mi, ci), (mj, cj)) = (leads[i], leads[j]);
            if ci != cj {
                continue;
            }
            let l = mi.lcm(&mj);
            let ai = gens[i].entry(ci).coefficient(&mi);
            let aj = gens[j].entry(cj).coefficient(&mj);
            let ui = ring.term(l.div(&mi).unwrap(), ai.inv());
            let uj = ring.term(l.div(&mj).unwrap(), aj.inv());
            let s = gens[i].mul_poly(&ui).sub(&gens[j].mul_poly(&uj));
            if !normal_form(&s, gb).unwrap().is_zero() {
                return false;
            }
        }
    }
    true
}

/// The original generators lie in the span of the basis, and reducing twice changes nothing.
pub fn basis_spans_and_reduces(m: &SubmoduleBasis, gb: &SubmoduleBasis, probe: &ModuleElement) -> bool {
    let spans = m.generators().iter().all(|g| normal_form(g, gb).unwrap().is_zero());
    let once = normal_form(probe, gb).unwrap();
    spans && normal_form(&once, gb).unwrap() == once
}

/// Every syzygy `s` of the generators satisfies `sum s_i g_i = 0`.
pub fn syzygies_vanish(m: &SubmoduleBasis) -> bool {
    let syz = syzygy_basis(m.parent(), m.generators()).unwrap();
    syz.generators().iter().all(|s| {
        let mut acc = m.parent().zero();
        for (c, g) in s.entries().iter().zip(m.generators()) {
            acc = acc.add(&g.mul_poly(c));
        }
        acc.is_zero()
    })
}

fn free_hf(twists: &[i64], t: i64) -> BigInt {
    let mut acc = BigInt::from(0);
    for a in twists {
        let k = t - a;
        if k >= 0 {
            acc += BigInt::from((k + 1) * (k + 2) * (k + 3) / 6);
        }
    }
    acc
}

pub struct ResolutionCheck {
    pub complex: bool,
    pub exact: bool,
    pub euler: bool,
    pub minimal: bool,
}

impl ResolutionCheck {
    pub fn ok(&self) -> bool {
        self.complex && self.exact && self.euler && self.minimal
    }
}

fn same_span(a: &SubmoduleBasis, b: &SubmoduleBasis) -> bool {
    let (ga, gb) = (default_groebner_basis(a), default_groebner_basis(b));
    a.generators().iter().all(|v| normal_form(v, &gb).unwrap().is_zero())
        && b.generators().iter().all(|v| normal_form(v, &ga).unwrap().is_zero())
}

/// Resolves `m` and checks `d∘d = 0`, exactness via kernels, minimality, and the
/// alternating sum of free Hilbert functions against the module's own Hilbert function
/// for every degree up to the largest twist plus six.
pub fn check_resolution(m: &SubmoduleBasis) -> (FreeResolution, ResolutionCheck) {
    let res = minimal_free_resolution(ModuleInput::Submodule(m.clone())).unwrap();
    let maps = res.differentials();
    let mut exact = true;
    if let Some(aug) = res.augmentation() {
        let k = kernel_of_map(aug);
        exact &= match maps.first() {
            Some(d1) => same_span(&k, &d1.image()),
            None => k.is_zero(),
        };
    }
    for i in 0..maps.len() {
        let k = kernel_of_map(&maps[i]);
        exact &= match maps.get(i + 1) {
            Some(next) => same_span(&k, &next.image()),
            None => k.is_zero(),
        };
    }
    let all: Vec<i64> = res.modules().iter().flat_map(|f| f.twists().to_vec()).collect();
    let lo = all.iter().copied().min().unwrap_or(0);
    let hi = all.iter().copied().max().unwrap_or(0) + 6;
    let hm = hilbert_series_submodule(&default_groebner_basis(m));
    let euler = (lo..=hi).all(|t| {
        let mut alt = BigInt::from(0);
        for (i, f) in res.modules().iter().enumerate() {
            let h = free_hf(f.twists(), t);
            if i % 2 == 0 {
                alt += h;
            } else {
                alt -= h;
            }
        }
        alt == hm.hilbert_function(t)
    });
    let check = ResolutionCheck { complex: res.is_complex(), exact, euler, minimal: res.is_minimal() };
    (res, check)
}

/// `I ⊆ I^sat` and saturating again changes nothing.
pub fn saturation_idempotent(i: &Ideal) -> bool {
    let s = i.saturate().unwrap();
    let ss = s.saturate().unwrap();
    s.contains_ideal(i) && ss.same_as(&s)
}

/// `Fitt0(phi) ⊆ Ann(coker phi)`.
pub fn fitting_in_annihilator(phi: &GradedMap) -> bool {
    let fit = fitting_ideal_0(phi).unwrap();
    let ann = annihilator(phi).unwrap();
    ann.contains_ideal(&fit)
}

/// Multiplies the generators of `i` by random linear forms so that the result usually
/// has an embedded component at the irrelevant ideal.
pub fn with_embedded_component(rng: &mut ChaCha8Rng, i: &Ideal) -> Ideal {
    let ring = i.ring();
    let gens = i
        .generators()
        .iter()
        .flat_map(|g| {
            let a = random_poly(rng, ring, 1);
            let b = random_poly(rng, ring, 1);
            [g.mul(&a), g.mul(&b)]
        })
        .collect();
    Ideal::new(ring, gens).unwrap()
}
