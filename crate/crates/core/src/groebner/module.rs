//! Graded free modules, their elements and submodules, and maps between them.

use crate::error::AlgebraError;
use crate::order::ModuleOrder;
use crate::polynomial::{Polynomial, Ring};

use super::buchberger::{buchberger, GbConfig, GbResult};
use super::vector::Vector;

/// `F = R(-a_0) + ... + R(-a_{r-1})`; component `i` has its generator in degree `a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedFreeModule {
    ring: Ring,
    twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(ring: Ring, twists: Vec<i64>) -> Self {
        GradedFreeModule { ring, twists }
    }

    /// `R^rank` with all generators in degree zero.
    pub fn free(ring: Ring, rank: usize) -> Self {
        Self::new(ring, vec![0; rank])
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    /// Generator degrees `a_i`.
    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    /// `Hom(F, R)`: generator degrees negated.
    pub fn dual(&self) -> GradedFreeModule {
        Self::new(self.ring, self.twists.iter().map(|a| -a).collect())
    }

    pub fn zero(&self) -> ModuleElement {
        ModuleElement { entries: vec![self.ring.zero(); self.rank()] }
    }

    pub fn basis_element(&self, i: usize) -> ModuleElement {
        let mut v = self.zero();
        v.entries[i] = self.ring.one();
        v
    }

    /// Wraps entries after checking rank and ring.
    pub fn element(&self, entries: Vec<Polynomial>) -> Result<ModuleElement, AlgebraError> {
        if entries.len() != self.rank() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{} entries for a rank-{} module",
                entries.len(),
                self.rank()
            )));
        }
        if entries.iter().any(|p| p.ring() != self.ring) {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(ModuleElement { entries })
    }

    /// Degree of a homogeneous element; `Ok(None)` for zero.
    pub fn degree_of(&self, v: &ModuleElement) -> Result<Option<i64>, AlgebraError> {
        self.check(v)?;
        let mut degree = None;
        for (p, a) in v.entries.iter().zip(&self.twists) {
            if p.is_zero() {
                continue;
            }
            if !p.is_homogeneous() {
                return Err(AlgebraError::Inhomogeneous(format!("entry {p}")));
            }
            let d = p.degree().unwrap() as i64 + a;
            match degree {
                None => degree = Some(d),
                Some(e) if e != d => {
                    return Err(AlgebraError::Inhomogeneous(format!("entries of degrees {e} and {d}")))
                }
                _ => {}
            }
        }
        Ok(degree)
    }

    pub fn check(&self, v: &ModuleElement) -> Result<(), AlgebraError> {
        if v.entries.len() != self.rank() || v.entries.iter().any(|p| p.ring() != self.ring) {
            return Err(AlgebraError::ParentMismatch);
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &GradedFreeModule) -> GradedFreeModule {
        let mut twists = self.twists.clone();
        twists.extend_from_slice(&other.twists);
        Self::new(self.ring, twists)
    }

    /// Default term-over-position order respecting the twists.
    pub fn default_order(&self) -> ModuleOrder {
        ModuleOrder::top_shifted(self.twists.clone())
    }
}

/// A column vector of polynomials. Its parent free module is supplied by the caller.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleElement {
    entries: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn from_entries(entries: Vec<Polynomial>) -> Self {
        ModuleElement { entries }
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Polynomial> {
        self.entries
    }

    pub fn entry(&self, i: usize) -> &Polynomial {
        &self.entries[i]
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        assert_eq!(self.rank(), other.rank());
        ModuleElement { entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &ModuleElement) -> ModuleElement {
        assert_eq!(self.rank(), other.rank());
        ModuleElement { entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn mul_poly(&self, p: &Polynomial) -> ModuleElement {
        ModuleElement { entries: self.entries.iter().map(|a| a.mul(p)).collect() }
    }

    /// Divides by the leading coefficient of the first nonzero entry.
    pub fn normalized(&self) -> ModuleElement {
        match self.entries.iter().find(|p| !p.is_zero()) {
            None => self.clone(),
            Some(p) => {
                let c = p.leading_term().unwrap().1.inv();
                ModuleElement { entries: self.entries.iter().map(|a| a.scale(&c)).collect() }
            }
        }
    }

    pub(crate) fn to_vector(&self, order: &ModuleOrder) -> Vector {
        Vector::from_entries(&self.entries, order)
    }
}

impl std::fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A finitely generated graded submodule of a free module.
#[derive(Clone, Debug)]
pub struct SubmoduleBasis {
    parent: GradedFreeModule,
    gens: Vec<ModuleElement>,
    /// The order the generators form a Gröbner basis for, if they do.
    groebner_order: Option<ModuleOrder>,
}

impl SubmoduleBasis {
    pub fn new(parent: GradedFreeModule, gens: Vec<ModuleElement>) -> Result<Self, AlgebraError> {
        for g in &gens {
            parent.degree_of(g)?;
        }
        Ok(SubmoduleBasis { parent, gens, groebner_order: None })
    }

    pub fn parent(&self) -> &GradedFreeModule {
        &self.parent
    }

    pub fn generators(&self) -> &[ModuleElement] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_groebner(&self) -> bool {
        self.groebner_order.is_some()
    }

    pub fn groebner_order(&self) -> Option<&ModuleOrder> {
        self.groebner_order.as_ref()
    }

    /// Degrees of the (nonzero) generators, in generator order.
    pub fn degrees(&self) -> Vec<i64> {
        self.gens.iter().filter_map(|g| self.parent.degree_of(g).ok().flatten()).collect()
    }

    /// True when every generator is zero.
    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(ModuleElement::is_zero)
    }

    fn vectors(&self, order: &ModuleOrder) -> Vec<Vector> {
        self.gens.iter().map(|g| g.to_vector(order)).collect()
    }

    fn element_from(&self, v: &Vector) -> ModuleElement {
        ModuleElement { entries: v.to_entries(self.parent.ring, self.parent.rank()) }
    }

    /// Leading terms `(monomial, component)` of a Gröbner basis.
    pub fn leading_terms(&self) -> Option<Vec<(crate::monomial::Monomial, usize)>> {
        let order = self.groebner_order.as_ref()?;
        Some(
            self.gens
                .iter()
                .map(|g| {
                    let t = g.to_vector(order).terms[0].clone();
                    (t.mono, t.comp as usize)
                })
                .collect(),
        )
    }
}

/// Reduced Gröbner basis of `m` with respect to `order`.
pub fn groebner_basis(m: &SubmoduleBasis, order: &ModuleOrder) -> SubmoduleBasis {
    let res = run(m, order, true, None);
    SubmoduleBasis {
        parent: m.parent.clone(),
        gens: res.basis.iter().map(|v| m.element_from(v)).collect(),
        groebner_order: Some(order.clone()),
    }
}

/// Gröbner basis in the module's default term-over-position order.
pub fn default_groebner_basis(m: &SubmoduleBasis) -> SubmoduleBasis {
    if m.is_groebner() && m.groebner_order.as_ref() == Some(&m.parent.default_order()) {
        return m.clone();
    }
    groebner_basis(m, &m.parent.default_order())
}

fn run(m: &SubmoduleBasis, order: &ModuleOrder, product: bool, inert_from: Option<u32>) -> GbResult {
    let product_criterion = product && m.parent.rank() == 1;
    let cfg = GbConfig { order, shifts: m.parent.twists(), product_criterion, inert_from };
    buchberger(&m.vectors(order), cfg)
}

/// A minimal homogeneous generating set, sorted by degree.
pub fn minimal_generators(m: &SubmoduleBasis) -> SubmoduleBasis {
    let order = m.parent.default_order();
    let res = run(m, &order, true, None);
    SubmoduleBasis {
        parent: m.parent.clone(),
        gens: res.minimal.iter().map(|(_, v)| m.element_from(v)).collect(),
        groebner_order: None,
    }
}

/// Remainder of `v` modulo a Gröbner basis: no term is divisible by a leading term of `g`.
pub fn normal_form(v: &ModuleElement, g: &SubmoduleBasis) -> Result<ModuleElement, AlgebraError> {
    g.parent.check(v)?;
    let order = g
        .groebner_order
        .as_ref()
        .ok_or_else(|| AlgebraError::NonMinimal("normal form needs a Gröbner basis".into()))?;
    let basis: Vec<Vector> = g.vectors(order).into_iter().map(Vector::monic).collect();
    let mut p = v.to_vector(order).terms;
    let mut done = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let t = &p[start];
        match basis.iter().find(|b| !b.is_zero() && b.terms[0].comp == t.comp && b.terms[0].mono.divides(&t.mono)) {
            Some(b) => {
                let q = t.mono.div(&b.terms[0].mono).unwrap();
                let c = t.coef.clone();
                p = super::vector::sub_mul(&p[start..], &c, &q, &b.terms, order);
                start = 0;
            }
            None => {
                done.push(p[start].clone());
                start += 1;
            }
        }
    }
    Ok(g.element_from(&Vector { terms: done }))
}

/// Membership test against a Gröbner basis.
pub fn contains(g: &SubmoduleBasis, v: &ModuleElement) -> Result<bool, AlgebraError> {
    Ok(normal_form(v, g)?.is_zero())
}

/// A homogeneous map `source -> target`, stored by columns (images of the source basis).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    source: GradedFreeModule,
    target: GradedFreeModule,
    columns: Vec<ModuleElement>,
}

impl GradedMap {
    /// Checks that column `j` is homogeneous of degree `source.twists()[j]` (or zero).
    pub fn new(
        source: GradedFreeModule,
        target: GradedFreeModule,
        columns: Vec<ModuleElement>,
    ) -> Result<Self, AlgebraError> {
        if columns.len() != source.rank() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{} columns for a rank-{} source",
                columns.len(),
                source.rank()
            )));
        }
        for (j, c) in columns.iter().enumerate() {
            target.check(c)?;
            if let Some(d) = target.degree_of(c)? {
                if d != source.twists()[j] {
                    return Err(AlgebraError::Inhomogeneous(format!(
                        "column {j} has degree {d}, source twist is {}",
                        source.twists()[j]
                    )));
                }
            }
        }
        Ok(GradedMap { source, target, columns })
    }

    /// Builds a map from rows, checking homogeneity.
    pub fn from_rows(
        source: GradedFreeModule,
        target: GradedFreeModule,
        rows: Vec<Vec<Polynomial>>,
    ) -> Result<Self, AlgebraError> {
        if rows.len() != target.rank() || rows.iter().any(|r| r.len() != source.rank()) {
            return Err(AlgebraError::DimensionMismatch("row lengths".into()));
        }
        let columns = (0..source.rank())
            .map(|j| ModuleElement::from_entries(rows.iter().map(|r| r[j].clone()).collect()))
            .collect();
        Self::new(source, target, columns)
    }

    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    pub fn columns(&self) -> &[ModuleElement] {
        &self.columns
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        self.columns[j].entry(i)
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        self.columns.iter().map(|c| c.entry(i).clone()).collect()
    }

    pub fn image(&self) -> SubmoduleBasis {
        SubmoduleBasis { parent: self.target.clone(), gens: self.columns.clone(), groebner_order: None }
    }

    /// `Hom(target, R) -> Hom(source, R)`.
    pub fn transpose(&self) -> GradedMap {
        let columns = (0..self.nrows()).map(|i| ModuleElement::from_entries(self.row(i))).collect();
        GradedMap { source: self.target.dual(), target: self.source.dual(), columns }
    }

    pub fn apply(&self, v: &ModuleElement) -> ModuleElement {
        let mut acc = self.target.zero();
        for (c, p) in self.columns.iter().zip(v.entries()) {
            if !p.is_zero() {
                acc = acc.add(&c.mul_poly(p));
            }
        }
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMap) -> GradedMap {
        assert_eq!(other.target.rank(), self.source.rank());
        GradedMap {
            source: other.source.clone(),
            target: self.target.clone(),
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(ModuleElement::is_zero)
    }

    /// Positions of nonzero constant entries.
    pub fn unit_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (j, c) in self.columns.iter().enumerate() {
            for (i, p) in c.entries().iter().enumerate() {
                if !p.is_zero() && p.is_constant() {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// Generators of `ker(phi)`, as a submodule of `phi.source()`.
///
/// Uses the augmented module `(phi(e_j), e_j)` under an elimination order; elements
/// whose image part reduces to zero are syzygies. With `minimize` the result is a
/// minimal generating set, otherwise just some generating set.
pub fn kernel_generators(phi: &GradedMap, minimize: bool) -> SubmoduleBasis {
    let r = phi.target.rank();
    let aug = phi.target.direct_sum(&phi.source);
    let order = ModuleOrder::elimination(r, phi.target.default_order(), phi.source.default_order());
    let inputs: Vec<Vector> = phi
        .columns
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let mut entries = c.entries().to_vec();
            entries.extend(phi.source.basis_element(j).into_entries());
            Vector::from_entries(&entries, &order)
        })
        .collect();
    let cfg = GbConfig { order: &order, shifts: aug.twists(), product_criterion: false, inert_from: Some(r as u32) };
    let res = buchberger(&inputs, cfg);
    let ring = phi.source.ring;
    let syz: Vec<ModuleElement> = res
        .inert
        .iter()
        .map(|v| ModuleElement { entries: v.tail_block(r as u32).to_entries(ring, phi.source.rank()) })
        .collect();
    let sub = SubmoduleBasis { parent: phi.source.clone(), gens: syz, groebner_order: None };
    if minimize {
        minimal_generators(&sub)
    } else {
        sub
    }
}

/// Minimal generators of the kernel of a homogeneous map.
pub fn kernel_of_map(phi: &GradedMap) -> SubmoduleBasis {
    kernel_generators(phi, true)
}

/// Syzygies of `gens` in `R^{#gens}`, with component `i` twisted by the degree of `gens[i]`.
/// Zero generators get twist zero.
pub fn syzygy_basis(parent: &GradedFreeModule, gens: &[ModuleElement]) -> Result<SubmoduleBasis, AlgebraError> {
    let twists = gens.iter().map(|g| parent.degree_of(g).map(|d| d.unwrap_or(0))).collect::<Result<Vec<_>, _>>()?;
    let source = GradedFreeModule::new(parent.ring, twists);
    let phi = GradedMap::new(source, parent.clone(), gens.to_vec())?;
    Ok(kernel_of_map(&phi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::scalar::Field;

    fn ring() -> Ring {
        Ring::new(4, Field::Rational)
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, ring()).unwrap()
    }

    fn ideal(gens: &[&str]) -> SubmoduleBasis {
        let f = GradedFreeModule::free(ring(), 1);
        SubmoduleBasis::new(f, gens.iter().map(|s| ModuleElement::from_entries(vec![p(s)])).collect()).unwrap()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let g = default_groebner_basis(&ideal(&["x0", "x1"]));
        assert_eq!(g.len(), 2);
    }

    #[test]
    fn twisted_cubic_basis() {
        let g = default_groebner_basis(&ideal(&["x0^2 - x1*x2", "x0*x1 - x2^2"]));
        assert!(g.len() >= 3);
        let nf = normal_form(&ModuleElement::from_entries(vec![p("x0^2 - x1*x2")]), &g).unwrap();
        assert!(nf.is_zero());
    }

    #[test]
    fn normal_forms() {
        let g = default_groebner_basis(&ideal(&["x0"]));
        let v = |s: &str| ModuleElement::from_entries(vec![p(s)]);
        assert!(normal_form(&v("x0^2"), &g).unwrap().is_zero());
        assert_eq!(normal_form(&v("x1"), &g).unwrap(), v("x1"));
        let bad = ModuleElement::from_entries(vec![p("x1"), p("x2")]);
        assert_eq!(normal_form(&bad, &g), Err(AlgebraError::ParentMismatch));
    }

    #[test]
    fn koszul_syzygy() {
        let f = GradedFreeModule::free(ring(), 1);
        let gens = vec![ModuleElement::from_entries(vec![p("x0")]), ModuleElement::from_entries(vec![p("x1")])];
        let s = syzygy_basis(&f, &gens).unwrap();
        assert_eq!(s.len(), 1);
        let v = s.generators()[0].normalized();
        assert_eq!(v, ModuleElement::from_entries(vec![p("x1"), p("-x0")]).normalized());
        assert_eq!(s.parent().twists(), &[1, 1]);
        assert_eq!(s.degrees(), vec![2]);
    }

    #[test]
    fn single_generator_has_no_syzygies() {
        let f = GradedFreeModule::free(ring(), 1);
        let s = syzygy_basis(&f, &[ModuleElement::from_entries(vec![p("x0*x1 + x2^2")])]).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn identity_and_zero_maps() {
        let r = ring();
        let f = GradedFreeModule::free(r, 2);
        let id = GradedMap::new(f.clone(), f.clone(), vec![f.basis_element(0), f.basis_element(1)]).unwrap();
        assert!(kernel_of_map(&id).is_empty());
        let zero = GradedMap::new(f.clone(), f.clone(), vec![f.zero(), f.zero()]).unwrap();
        assert_eq!(kernel_of_map(&zero).len(), 2);
    }

    #[test]
    fn inhomogeneous_columns_are_rejected() {
        let r = ring();
        let src = GradedFreeModule::free(r, 1);
        let tgt = GradedFreeModule::free(r, 1);
        let col = ModuleElement::from_entries(vec![p("x0")]);
        assert!(matches!(GradedMap::new(src, tgt, vec![col]), Err(AlgebraError::Inhomogeneous(_))));
    }

    #[test]
    fn three_generators_of_twisted_cubic_have_two_syzygies() {
        let f = GradedFreeModule::free(ring(), 1);
        let gens: Vec<_> = ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]
            .iter()
            .map(|s| ModuleElement::from_entries(vec![p(s)]))
            .collect();
        let s = syzygy_basis(&f, &gens).unwrap();
        assert_eq!(s.degrees(), vec![3, 3]);
        for v in s.generators() {
            let total = gens.iter().zip(v.entries()).fold(ring().zero(), |acc, (g, c)| acc.add(&g.entry(0).mul(c)));
            assert!(total.is_zero());
        }
    }
}
