//! Sparse multivariate polynomials over a [`Field`], terms kept in descending grevlex.

use std::cmp::Ordering;
use std::fmt;

use crate::error::AlgebraError;
use crate::monomial::{Monomial, MAX_VARS};
use crate::scalar::{Field, Scalar};

/// A polynomial ring `k[x0, ..., x(n-1)]`. Cheap to copy; every value carries one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    nvars: usize,
    field: Field,
}

impl Ring {
    pub fn new(nvars: usize, field: Field) -> Self {
        assert!((1..=MAX_VARS).contains(&nvars), "ring needs 1..={MAX_VARS} variables");
        Ring { nvars, field }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial { ring: *self, terms: Vec::new() }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: Scalar) -> Polynomial {
        self.term(Monomial::one(), c)
    }

    pub fn from_i64(&self, n: i64) -> Polynomial {
        self.constant(self.field.from_i64(n))
    }

    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.nvars, "variable index out of range");
        self.term(Monomial::var(i), self.field.one())
    }

    pub fn term(&self, m: Monomial, c: Scalar) -> Polynomial {
        debug_assert!(m.support_len() <= self.nvars);
        if c.is_zero() {
            self.zero()
        } else {
            Polynomial { ring: *self, terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, Scalar)>) -> Polynomial {
        terms.sort_by_key(|t| std::cmp::Reverse(t.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if matches!(out.last(), Some((_, c)) if c.is_zero()) {
            out.pop();
        }
        Polynomial { ring: *self, terms: out }
    }
}

/// A polynomial; the term list is strictly descending in grevlex with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.degree() == 0)
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    /// Total degree of the leading term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(n, _)| n.degree() == m.degree()),
        }
    }

    /// Coefficient of a given monomial (zero if absent).
    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        match self.terms.binary_search_by(|(n, _)| m.cmp(n)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.ring.field.zero(),
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), AlgebraError> {
        if self.ring.field != other.ring.field {
            return Err(AlgebraError::FieldMismatch(self.ring.field, other.ring.field));
        }
        if self.ring.nvars != other.ring.nvars {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_ring(other)?;
        Ok(self.add(other))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_ring(other)?;
        Ok(self.mul(other))
    }

    /// Sum. Panics if the rings differ; use [`Polynomial::try_add`] for a checked version.
    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].1.add(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Polynomial { ring: self.ring, terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { ring: self.ring, terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial { ring: self.ring, terms: self.terms.iter().map(|(m, a)| (*m, a.mul(c))).collect() }
    }

    /// Multiplies by the single term `c * m`; order is preserved because grevlex is multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial { ring: self.ring, terms: self.terms.iter().map(|(n, a)| (n.mul(m), a.mul(c))).collect() }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = self.ring.zero();
        for (m, c) in &small.terms {
            acc = acc.add(&large.mul_term(m, c));
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = self.ring.one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        assert!(i < self.ring.nvars, "variable index out of range");
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(i) > 0)
            .map(|(m, c)| {
                let k = m.exponent(i);
                (m.with_exponent(i, k - 1), c.mul_u64(k as u64))
            })
            .collect();
        // the map x_i^k -> x_i^(k-1) is not order preserving in general, so re-sort
        self.ring.from_terms(terms)
    }

    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.ring.nvars).map(|i| self.partial_derivative(i)).collect()
    }

    /// Substitutes `x_i -> images[i]` for every variable.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars);
        let target = images.first().map_or(self.ring, |p| p.ring);
        let mut acc = target.zero();
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![target.one()]; images.len()];
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, img) in images.iter().enumerate() {
                let e = m.exponent(i) as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul(img);
                    powers[i].push(next);
                }
                if e > 0 {
                    t = t.mul(&powers[i][e]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Divides every coefficient by the leading one.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Reinterprets the polynomial in a ring with at least as many variables.
    pub fn embed(&self, ring: Ring) -> Polynomial {
        assert_eq!(ring.field, self.ring.field);
        assert!(ring.nvars >= self.ring.nvars);
        Polynomial { ring, terms: self.terms.clone() }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { c.neg() } else { c.clone() };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q4() -> Ring {
        Ring::new(4, Field::Rational)
    }

    #[test]
    fn difference_of_squares() {
        let r = q4();
        let (x0, x1) = (r.var(0), r.var(1));
        let p = x0.add(&x1).mul(&x0.sub(&x1));
        assert_eq!(p, x0.pow(2).sub(&x1.pow(2)));
        assert!(p.mul(&r.zero()).is_zero());
    }

    #[test]
    fn square_of_linear_form_has_ten_terms() {
        let r = q4();
        let s = (0..4).fold(r.zero(), |acc, i| acc.add(&r.var(i)));
        let sq = s.pow(2);
        assert_eq!(sq.len(), 10);
        for (m, c) in sq.terms() {
            let expected = if (0..4).any(|i| m.exponent(i) == 2) { 1 } else { 2 };
            assert_eq!(*c, r.field().from_i64(expected));
        }
    }

    #[test]
    fn derivatives() {
        let r = q4();
        let (x1, x3) = (r.var(1), r.var(3));
        let p = r.from_i64(2).mul(&x1).mul(&x3).sub(&x1.pow(2));
        assert_eq!(p.partial_derivative(3), r.from_i64(2).mul(&x1));
        assert!(x1.pow(2).partial_derivative(0).is_zero());
        assert_eq!(r.var(2).pow(5).partial_derivative(2), r.from_i64(5).mul(&r.var(2).pow(4)));
    }

    #[test]
    fn printer() {
        let r = q4();
        let (x0, x1) = (r.var(0), r.var(1));
        assert_eq!(x0.add(&x1).pow(2).to_string(), "x0^2 + 2*x0*x1 + x1^2");
        assert_eq!(x1.neg().to_string(), "-x1");
        assert_eq!(r.zero().to_string(), "0");
        assert_eq!(x0.sub(&r.from_i64(3)).to_string(), "x0 - 3");
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = q4().var(0);
        let b = Ring::new(4, Field::Prime(7)).var(0);
        assert!(matches!(a.try_add(&b), Err(AlgebraError::FieldMismatch(..))));
    }

    pub(crate) fn arb_homogeneous(deg: u32) -> impl Strategy<Value = Polynomial> {
        let monos = Monomial::all_of_degree(4, deg);
        let n = monos.len();
        proptest::collection::vec(-5i64..=5, n).prop_map(move |coefs| {
            let r = q4();
            let terms = monos.iter().zip(coefs).map(|(m, c)| (*m, r.field().from_i64(c))).collect();
            r.from_terms(terms)
        })
    }

    proptest! {
        #[test]
        fn euler_relation(deg in 0u32..5, seed in any::<u64>()) {
            // build a polynomial deterministically from the seed
            let r = q4();
            let monos = Monomial::all_of_degree(4, deg);
            let mut s = seed;
            let terms = monos.iter().map(|m| {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (*m, r.field().from_i64(((s >> 33) % 11) as i64 - 5))
            }).collect();
            let p = r.from_terms(terms);
            let lhs = (0..4).fold(r.zero(), |acc, i| acc.add(&r.var(i).mul(&p.partial_derivative(i))));
            prop_assert_eq!(lhs, p.scale(&r.field().from_i64(deg as i64)));
        }

        #[test]
        fn product_of_homogeneous_is_homogeneous(a in arb_homogeneous(2), b in arb_homogeneous(3)) {
            let p = a.mul(&b);
            prop_assert!(p.is_homogeneous());
            if !a.is_zero() && !b.is_zero() {
                prop_assert_eq!(p.degree(), Some(5));
            }
        }

        #[test]
        fn multiplication_commutes(a in arb_homogeneous(2), b in arb_homogeneous(1)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }
    }
}
