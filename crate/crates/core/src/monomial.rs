//! Monomials with a fixed-width exponent vector, ordered by grevlex.

use std::cmp::Ordering;
use std::fmt;

/// Largest number of variables a ring may have.
pub const MAX_VARS: usize = 8;

/// A monomial `x0^a0 * x1^a1 * ...`. Slots beyond the ring's variable count
/// stay zero, so comparisons never need to know the ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::default();
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Self::default();
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent overflow");
            m.degree += e;
        }
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    /// Highest index with a nonzero exponent, plus one.
    pub fn support_len(&self) -> usize {
        self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += other.exps[i];
        }
        m.degree += other.degree;
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] -= other.exps[i];
        }
        m.degree -= other.degree;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::default();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
            m.degree += m.exps[i] as u32;
        }
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::default();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].min(other.exps[i]);
            m.degree += m.exps[i] as u32;
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// `self` with the exponent of variable `i` replaced.
    pub fn with_exponent(&self, i: usize, e: u32) -> Monomial {
        let mut m = *self;
        m.degree = m.degree - m.exps[i] as u32 + e;
        m.exps[i] = e as u16;
        m
    }

    /// Degree reverse lexicographic comparison with x0 > x1 > ... .
    #[inline]
    pub fn grevlex_cmp(&self, other: &Monomial) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..MAX_VARS).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                // smaller exponent in the last differing variable wins
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }

    /// All monomials of the given degree in `nvars` variables, in descending grevlex.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; nvars];
        fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == exps.len() {
                exps[i] = left;
                out.push(Monomial::from_exponents(exps));
                return;
            }
            for e in (0..=left).rev() {
                exps[i] = e;
                rec(i + 1, left - e, exps, out);
            }
        }
        if nvars == 0 {
            if degree == 0 {
                out.push(Monomial::one());
            }
            return out;
        }
        rec(0, degree, &mut exps, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grevlex_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: [u32; 4]) -> Monomial {
        Monomial::from_exponents(&e)
    }

    #[test]
    fn grevlex_examples() {
        // x1^2 > x1*x3 in grevlex
        assert!(mono([0, 2, 0, 0]) > mono([0, 1, 0, 1]));
        // x0*x2 > x1^2 (x2 tie at exponent 1 vs 0 ... last differing is x2)
        assert!(mono([1, 0, 1, 0]) < mono([0, 2, 0, 0]));
        assert!(mono([1, 0, 0, 0]) > mono([0, 1, 0, 0]));
        assert!(mono([0, 0, 0, 2]) > mono([0, 0, 0, 1]));
    }

    #[test]
    fn count_of_degree() {
        assert_eq!(Monomial::all_of_degree(4, 3).len(), 20);
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        let v = Monomial::all_of_degree(4, 2);
        assert!(v.windows(2).all(|w| w[0] > w[1]));
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        proptest::array::uniform4(0u32..5).prop_map(mono)
    }

    proptest! {
        #[test]
        fn grevlex_is_transitive(a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            if a >= b && b >= c {
                prop_assert!(a >= c);
            }
        }

        #[test]
        fn grevlex_is_multiplicative(a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            prop_assert_eq!(a.cmp(&b), a.mul(&c).cmp(&b.mul(&c)));
        }

        #[test]
        fn grevlex_refines_degree(a in arb_mono(), b in arb_mono()) {
            if a.degree() > b.degree() {
                prop_assert!(a > b);
            }
        }

        #[test]
        fn lcm_gcd_product(a in arb_mono(), b in arb_mono()) {
            prop_assert_eq!(a.lcm(&b).mul(&a.gcd(&b)), a.mul(&b));
            prop_assert_eq!(a.mul(&b).div(&b), Some(a));
        }
    }
}
