//! Homogeneous Buchberger algorithm on submodules of graded free modules.
//!
//! Pairs and inputs are processed one degree at a time. Inside a degree all
//! S-pairs are reduced before the inputs of that degree, so an input that
//! survives reduction is a minimal generator of the submodule.

use crate::monomial::Monomial;
use crate::order::ModuleOrder;

use super::vector::{sub_mul, Term, Vector};

/// Engine parameters.
#[derive(Clone, Debug)]
pub struct GbConfig<'a> {
    pub order: &'a ModuleOrder,
    /// Degree of the generator of each component; element degree is `deg(m) + shifts[comp]`.
    pub shifts: &'a [i64],
    /// Buchberger's coprime-leading-term criterion. Only sound in rank one, and must be off
    /// when syzygies are harvested.
    pub product_criterion: bool,
    /// Elements whose leading component is `>= inert_from` are set aside instead of
    /// joining the basis.
    pub inert_from: Option<u32>,
}

#[derive(Clone, Debug, Default)]
pub struct GbResult {
    /// Reduced Gröbner basis, monic, sorted by degree then insertion.
    pub basis: Vec<Vector>,
    /// `(input index, reduced form)` for every input that was a minimal generator,
    /// in processing order.
    pub minimal: Vec<(usize, Vector)>,
    /// Elements whose leading term fell into the inert block, in discovery order.
    pub inert: Vec<Vector>,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    degree: i64,
}

struct Engine<'a> {
    cfg: GbConfig<'a>,
    basis: Vec<Vector>,
    by_comp: Vec<Vec<usize>>,
    pairs: Vec<Pair>,
}

impl<'a> Engine<'a> {
    fn degree(&self, v: &Vector) -> i64 {
        let t = v.lead().expect("nonzero vector");
        t.mono.degree() as i64 + self.cfg.shifts[t.comp as usize]
    }

    fn find_reducer(&self, t: &Term, skip: Option<usize>) -> Option<usize> {
        self.by_comp
            .get(t.comp as usize)?
            .iter()
            .copied()
            .find(|&k| Some(k) != skip && self.basis[k].terms[0].mono.divides(&t.mono))
    }

    /// Full reduction of `v` by the current basis, optionally ignoring one element.
    fn reduce(&self, v: Vector, skip: Option<usize>) -> Vector {
        let order = self.cfg.order;
        let mut p = v.terms;
        let mut start = 0;
        let mut done: Vec<Term> = Vec::new();
        while start < p.len() {
            let t = &p[start];
            match self.find_reducer(t, skip) {
                Some(k) => {
                    let g = &self.basis[k];
                    let q = t.mono.div(&g.terms[0].mono).expect("divisor");
                    let c = t.coef.clone();
                    p = sub_mul(&p[start..], &c, &q, &g.terms, order);
                    start = 0;
                }
                None => {
                    done.push(p[start].clone());
                    start += 1;
                }
            }
        }
        Vector { terms: done }
    }

    fn spoly(&self, pair: &Pair) -> Vector {
        let (a, b) = (&self.basis[pair.i], &self.basis[pair.j]);
        let qa = pair.lcm.div(&a.terms[0].mono).unwrap();
        let qb = pair.lcm.div(&b.terms[0].mono).unwrap();
        let one = a.terms[0].coef.field().one();
        let scaled_a = sub_mul(&[], &one.neg(), &qa, &a.terms, self.cfg.order);
        Vector { terms: sub_mul(&scaled_a, &one, &qb, &b.terms, self.cfg.order) }
    }

    fn is_inert(&self, v: &Vector) -> bool {
        matches!((self.cfg.inert_from, v.lead()), (Some(s), Some(t)) if t.comp >= s)
    }

    fn insert(&mut self, h: Vector) -> usize {
        let h = h.monic();
        let idx = self.basis.len();
        let lead = h.terms[0].clone();
        let comp = lead.comp;
        let lh = lead.mono;
        let product = self.cfg.product_criterion;

        let candidates: Vec<(usize, Monomial, bool)> = self.by_comp[comp as usize]
            .iter()
            .map(|&g| {
                let lg = self.basis[g].terms[0].mono;
                (g, lg.lcm(&lh), product && lg.is_coprime(&lh))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (k, cand) in candidates.iter().enumerate() {
            let dominated =
                candidates[k + 1..].iter().any(|c| c.1.divides(&cand.1)) || kept.iter().any(|c| c.1.divides(&cand.1));
            if cand.2 || !dominated {
                kept.push(*cand);
            }
        }

        let basis = &self.basis;
        self.pairs.retain(|p| {
            if p.comp != comp || !lh.divides(&p.lcm) {
                return true;
            }
            let li = basis[p.i].terms[0].mono.lcm(&lh);
            let lj = basis[p.j].terms[0].mono.lcm(&lh);
            li == p.lcm || lj == p.lcm
        });

        let shift = self.cfg.shifts[comp as usize];
        for (g, lcm, coprime) in kept {
            if coprime {
                continue;
            }
            self.pairs.push(Pair { i: g, j: idx, lcm, comp, degree: lcm.degree() as i64 + shift });
        }

        self.basis.push(h);
        self.by_comp[comp as usize].push(idx);
        idx
    }

    fn next_pair(&mut self, degree: i64) -> Option<Pair> {
        let pos = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(_, p)| p.degree <= degree)
            .min_by_key(|(_, p)| (p.degree, p.j, p.i))
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(pos))
    }
}

/// Runs Buchberger's algorithm on homogeneous inputs.
///
/// Every input must be nonzero-or-empty and homogeneous with respect to `cfg.shifts`;
/// zero inputs are skipped.
pub fn buchberger(inputs: &[Vector], cfg: GbConfig<'_>) -> GbResult {
    let rank = cfg.shifts.len();
    let mut engine = Engine { cfg, basis: Vec::new(), by_comp: vec![Vec::new(); rank], pairs: Vec::new() };

    let mut queue: Vec<(i64, usize)> =
        inputs.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(k, v)| (engine.degree(v), k)).collect();
    queue.sort();

    let mut result = GbResult::default();
    let mut q = 0;
    loop {
        let next_input = queue.get(q).map(|x| x.0);
        let next_pair = engine.pairs.iter().map(|p| p.degree).min();
        let degree = match (next_input, next_pair) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };

        while let Some(pair) = engine.next_pair(degree) {
            let s = engine.spoly(&pair);
            let r = engine.reduce(s, None);
            if r.is_zero() {
                continue;
            }
            if engine.is_inert(&r) {
                result.inert.push(r);
            } else {
                engine.insert(r);
            }
        }

        while q < queue.len() && queue[q].0 == degree {
            let k = queue[q].1;
            q += 1;
            let r = engine.reduce(inputs[k].clone(), None);
            if r.is_zero() {
                continue;
            }
            if engine.is_inert(&r) {
                result.inert.push(r);
            } else {
                let idx = engine.insert(r);
                result.minimal.push((k, engine.basis[idx].clone()));
            }
        }
    }

    // inter-reduce tails; leading terms are already pairwise non-divisible
    for k in 0..engine.basis.len() {
        let v = std::mem::take(&mut engine.basis[k]);
        let lead = v.terms[0].clone();
        let tail = Vector { terms: v.terms[1..].to_vec() };
        let mut reduced = engine.reduce(tail, Some(k));
        reduced.terms.insert(0, lead);
        engine.basis[k] = reduced;
    }
    result.basis = engine.basis;
    result
}
