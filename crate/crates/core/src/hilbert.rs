//! Hilbert series and Hilbert polynomials of graded quotients `F/M`.
//!
//! The series of `F/M` equals that of `F/in(M)` (Macaulay), so everything is
//! computed from leading monomials with the pivot recursion
//! `N(I) = N(I + (x)) + z N(I : x)` on monomial ideals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::AlgebraError;
use crate::groebner::{default_groebner_basis, GradedFreeModule, GradedMap, Ideal, SubmoduleBasis};
use crate::monomial::{Monomial, MAX_VARS};

/// A Laurent polynomial in `z` with integer coefficients: `coeffs[k]` multiplies `z^(offset + k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    offset: i64,
    coeffs: Vec<i128>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { offset: 0, coeffs: Vec::new() }
    }

    pub fn monomial(exp: i64, c: i128) -> Self {
        Laurent { offset: exp, coeffs: vec![c] }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while matches!(self.coeffs.last(), Some(0)) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead_zeros == self.coeffs.len() {
            return Laurent::zero();
        }
        self.coeffs.drain(..lead_zeros);
        self.offset += lead_zeros as i64;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i128)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0).map(|(k, c)| (self.offset + k as i64, *c))
    }

    pub fn coefficient(&self, exp: i64) -> i128 {
        let k = exp - self.offset;
        if k < 0 {
            return 0;
        }
        self.coeffs.get(k as usize).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(other.offset);
        let hi = (self.offset + self.coeffs.len() as i64).max(other.offset + other.coeffs.len() as i64);
        let coeffs = (lo..hi).map(|e| self.coefficient(e) + other.coefficient(e)).collect();
        Laurent { offset: lo, coeffs }.trimmed()
    }

    pub fn neg(&self) -> Laurent {
        Laurent { offset: self.offset, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        self.add(&other.neg())
    }

    pub fn shift(&self, by: i64) -> Laurent {
        Laurent { offset: self.offset + by, coeffs: self.coeffs.clone() }
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Laurent { offset: self.offset + other.offset, coeffs }.trimmed()
    }

    /// Value at `z = 1`.
    pub fn at_one(&self) -> i128 {
        self.coeffs.iter().sum()
    }

    /// Exact division by `1 - z`; only valid when the value at 1 is zero.
    fn div_one_minus_z(&self) -> Laurent {
        // a(z) = (1 - z) q(z)  =>  q_k = sum_{j <= k} a_j
        let mut acc = 0i128;
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            acc += c;
            coeffs.push(acc);
        }
        debug_assert_eq!(coeffs.last().copied().unwrap_or(0), 0);
        Laurent { offset: self.offset, coeffs }.trimmed()
    }
}

impl std::fmt::Display for Laurent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "z")?,
                (_, 1) => write!(f, "z^{e}")?,
                (1, _) => write!(f, "{a}*z")?,
                _ => write!(f, "{a}*z^{e}")?,
            }
        }
        Ok(())
    }
}

fn one_minus_z_power(d: u32) -> Laurent {
    // 1 - z^d
    let mut coeffs = vec![0i128; d as usize + 1];
    coeffs[0] = 1;
    coeffs[d as usize] -= 1;
    Laurent { offset: 0, coeffs }.trimmed()
}

fn minimalize_monomials(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator `N(z)` of the Hilbert series of `R/(gens)` over `n` variables,
/// `HS = N(z) / (1 - z)^n`.
pub fn monomial_ideal_numerator(gens: &[Monomial]) -> Laurent {
    numerator_rec(minimalize_monomials(gens.to_vec()))
}

fn numerator_rec(gens: Vec<Monomial>) -> Laurent {
    if gens.is_empty() {
        return Laurent::monomial(0, 1);
    }
    if gens.iter().any(|g| g.degree() == 0) {
        return Laurent::zero();
    }
    let coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        return gens.iter().fold(Laurent::monomial(0, 1), |acc, g| acc.mul(&one_minus_z_power(g.degree())));
    }
    let mut counts = [0usize; MAX_VARS];
    for g in &gens {
        for (i, c) in counts.iter_mut().enumerate() {
            if g.exponent(i) > 0 {
                *c += 1;
            }
        }
    }
    let pivot = (0..MAX_VARS).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).unwrap();
    let x = Monomial::var(pivot);

    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exponent(pivot) == 0).copied().collect();
    plus.push(x);
    let colon: Vec<Monomial> = gens.iter().map(|g| g.div(&x).unwrap_or(*g)).collect();

    numerator_rec(minimalize_monomials(plus)).add(&numerator_rec(minimalize_monomials(colon)).shift(1))
}

/// Hilbert series data of a graded module over `k[x0..x(n-1)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    nvars: usize,
    numerator: Laurent,
    reduced: Laurent,
    /// Pole order of the series at `z = 1` (Krull dimension); zero for the zero module.
    krull_dim: usize,
    /// Hilbert polynomial coefficients, constant term first.
    polynomial: Vec<BigRational>,
}

impl HilbertData {
    /// Builds the data from a numerator over `(1 - z)^nvars`.
    pub fn from_numerator(nvars: usize, numerator: Laurent) -> Self {
        let mut reduced = numerator.clone();
        let mut dim = nvars;
        while dim > 0 && !reduced.is_zero() && reduced.at_one() == 0 {
            reduced = reduced.div_one_minus_z();
            dim -= 1;
        }
        if reduced.is_zero() {
            dim = 0;
        }
        let polynomial = hilbert_polynomial(&reduced, dim);
        HilbertData { nvars, numerator, reduced, krull_dim: dim, polynomial }
    }

    pub fn numerator(&self) -> &Laurent {
        &self.numerator
    }

    pub fn reduced_numerator(&self) -> &Laurent {
        &self.reduced
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn krull_dimension(&self) -> usize {
        self.krull_dim
    }

    /// Dimension of the support in projective space; `-1` when empty.
    pub fn projective_dimension(&self) -> i64 {
        self.krull_dim as i64 - 1
    }

    /// Multiplicity: the reduced numerator at `z = 1`.
    pub fn degree(&self) -> i64 {
        self.reduced.at_one() as i64
    }

    /// Hilbert polynomial coefficients, constant term first.
    pub fn polynomial(&self) -> &[BigRational] {
        &self.polynomial
    }

    pub fn eval_polynomial(&self, t: i64) -> BigRational {
        let t = BigRational::from_integer(BigInt::from(t));
        self.polynomial.iter().rev().fold(BigRational::zero(), |acc, c| acc * &t + c)
    }

    /// Exact value of the Hilbert function in degree `t`.
    pub fn hilbert_function(&self, t: i64) -> BigInt {
        let n = self.nvars as i64;
        let mut acc = BigInt::zero();
        for (k, c) in self.numerator.terms() {
            if t - k >= 0 {
                acc += BigInt::from(c) * binomial(t - k + n - 1, n - 1);
            }
        }
        acc
    }

    /// `(a, b)` with Hilbert polynomial `a t + b`; fails if the support has dimension at least 2.
    pub fn linear_coefficients(&self) -> Result<(i64, i64), AlgebraError> {
        if self.krull_dim > 2 {
            return Err(AlgebraError::SupportTooLarge(self.projective_dimension()));
        }
        let get = |k: usize| -> i64 {
            let c = self.polynomial.get(k).cloned().unwrap_or_else(BigRational::zero);
            assert!(c.is_integer(), "non-integral Hilbert coefficient");
            c.to_integer().to_i64().expect("coefficient fits in i64")
        };
        Ok((get(1), get(0)))
    }

    /// A degree from which the Hilbert function equals the Hilbert polynomial:
    /// the top exponent of the unreduced numerator.
    pub fn regularity_bound(&self) -> i64 {
        self.numerator.terms().map(|(e, _)| e).max().unwrap_or(0)
    }
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn hilbert_polynomial(reduced: &Laurent, dim: usize) -> Vec<BigRational> {
    if dim == 0 || reduced.is_zero() {
        return Vec::new();
    }
    // sum_k n_k C(t - k + dim - 1, dim - 1)
    let mut total = vec![BigRational::zero(); dim];
    let mut fact = BigInt::one();
    for i in 1..dim as i64 {
        fact *= BigInt::from(i);
    }
    for (k, c) in reduced.terms() {
        let mut p = vec![BigRational::one()];
        for j in 1..dim as i64 {
            // multiply by (t - k + j)
            let shift = BigRational::from_integer(BigInt::from(j - k));
            let mut next = vec![BigRational::zero(); p.len() + 1];
            for (i, a) in p.iter().enumerate() {
                next[i + 1] += a;
                next[i] += a * &shift;
            }
            p = next;
        }
        let scale = BigRational::new(BigInt::from(c), fact.clone());
        for (i, a) in p.into_iter().enumerate() {
            total[i] += a * &scale;
        }
    }
    while matches!(total.last(), Some(c) if c.is_zero()) {
        total.pop();
    }
    total
}

/// Hilbert series of `F/in(M)` from leading terms `(monomial, component)`.
pub fn hilbert_series_from_leads(nvars: usize, twists: &[i64], leads: &[(Monomial, usize)]) -> HilbertData {
    let mut numerator = Laurent::zero();
    for (c, a) in twists.iter().enumerate() {
        let gens: Vec<Monomial> = leads.iter().filter(|(_, k)| *k == c).map(|(m, _)| *m).collect();
        numerator = numerator.add(&monomial_ideal_numerator(&gens).shift(*a));
    }
    HilbertData::from_numerator(nvars, numerator)
}

/// Hilbert series of the quotient `F/M` of the parent free module by a submodule.
pub fn hilbert_series_quotient(m: &SubmoduleBasis) -> HilbertData {
    let g = default_groebner_basis(m);
    let leads = g.leading_terms().expect("Gröbner basis");
    hilbert_series_from_leads(m.parent().ring().nvars(), m.parent().twists(), &leads)
}

/// Hilbert series of a graded free module.
pub fn hilbert_series_free(f: &GradedFreeModule) -> HilbertData {
    hilbert_series_from_leads(f.ring().nvars(), f.twists(), &[])
}

/// Hilbert series of a submodule `M` of a free module `F`.
pub fn hilbert_series_submodule(m: &SubmoduleBasis) -> HilbertData {
    let total = hilbert_series_free(m.parent());
    let quotient = hilbert_series_quotient(m);
    HilbertData::from_numerator(m.parent().ring().nvars(), total.numerator.sub(&quotient.numerator))
}

/// Hilbert series of `coker(phi)`.
pub fn hilbert_series_cokernel(phi: &GradedMap) -> HilbertData {
    hilbert_series_quotient(&phi.image())
}

/// Hilbert series of `R/I`.
pub fn hilbert_series_ideal(i: &Ideal) -> HilbertData {
    hilbert_series_quotient(&i.as_submodule())
}

/// Projective dimension and degree of `V(I)`.
pub fn dimension_degree(i: &Ideal) -> Result<(i64, i64), AlgebraError> {
    if i.is_unit() {
        return Err(AlgebraError::EmptyScheme);
    }
    let h = hilbert_series_ideal(i);
    Ok((h.projective_dimension(), h.degree()))
}

/// `(a, b)` with `HP(M)(t) = a t + b` for a module whose support has dimension at most one.
pub fn hilbert_polynomial_linear(h: &HilbertData) -> Result<(i64, i64), AlgebraError> {
    h.linear_coefficients()
}
