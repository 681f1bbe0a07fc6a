//! Flat sparse vectors over `R^r`, the working representation of the Buchberger engine.

use std::cmp::Ordering;

use crate::monomial::Monomial;
use crate::order::ModuleOrder;
use crate::polynomial::{Polynomial, Ring};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub mono: Monomial,
    pub comp: u32,
    pub coef: Scalar,
}

/// Terms sorted strictly descending in a [`ModuleOrder`], no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Vector {
    pub terms: Vec<Term>,
}

impl Vector {
    pub fn from_entries(entries: &[Polynomial], order: &ModuleOrder) -> Vector {
        let mut terms: Vec<Term> = entries
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.terms().iter().map(move |(m, c)| Term { mono: *m, comp: i as u32, coef: c.clone() }))
            .collect();
        terms.sort_by(|a, b| order.cmp((&b.mono, b.comp), (&a.mono, a.comp)));
        Vector { terms }
    }

    pub fn to_entries(&self, ring: Ring, rank: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.comp as usize].push((t.mono, t.coef.clone()));
        }
        buckets.into_iter().map(|b| ring.from_terms(b)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn monic(mut self) -> Vector {
        if let Some(t) = self.terms.first() {
            if !t.coef.is_one() {
                let inv = t.coef.inv();
                for t in &mut self.terms {
                    t.coef = t.coef.mul(&inv);
                }
            }
        }
        self
    }

    /// Drops every component `< from` and re-indexes the rest from zero.
    pub fn tail_block(&self, from: u32) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|t| t.comp >= from)
                .map(|t| Term { mono: t.mono, comp: t.comp - from, coef: t.coef.clone() })
                .collect(),
        }
    }

    /// Re-sorts the terms after an order change.
    pub fn resort(mut self, order: &ModuleOrder) -> Vector {
        self.terms.sort_by(|a, b| order.cmp((&b.mono, b.comp), (&a.mono, a.comp)));
        self
    }
}

/// `a - c * m * b`, with `a` and `b` sorted in `order`.
pub fn sub_mul(a: &[Term], c: &Scalar, m: &Monomial, b: &[Term], order: &ModuleOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut pending: Option<Term> = None;
    while i < a.len() || j < b.len() || pending.is_some() {
        if pending.is_none() && j < b.len() {
            let t = &b[j];
            pending = Some(Term { mono: t.mono.mul(m), comp: t.comp, coef: t.coef.mul(c).neg() });
            j += 1;
        }
        match (a.get(i), pending.as_ref()) {
            (Some(x), Some(y)) => match order.cmp((&x.mono, x.comp), (&y.mono, y.comp)) {
                Ordering::Greater => {
                    out.push(x.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(pending.take().unwrap());
                }
                Ordering::Equal => {
                    let s = x.coef.add(&y.coef);
                    if !s.is_zero() {
                        out.push(Term { mono: x.mono, comp: x.comp, coef: s });
                    }
                    i += 1;
                    pending = None;
                }
            },
            (Some(_), None) => {
                out.extend_from_slice(&a[i..]);
                i = a.len();
            }
            (None, Some(_)) => out.push(pending.take().unwrap()),
            (None, None) => break,
        }
    }
    out
}
