//! Homogeneous ideals: colon, intersection, saturation, annihilators and Fitting ideals.

use crate::error::AlgebraError;
use crate::polynomial::{Polynomial, Ring};

use super::module::{
    default_groebner_basis, kernel_generators, minimal_generators, normal_form, GradedFreeModule, GradedMap,
    ModuleElement, SubmoduleBasis,
};

/// Hard cap on the number of quotients by the irrelevant ideal in [`Ideal::saturate`].
pub const SATURATION_CAP: usize = 64;

/// A homogeneous ideal given by generators. Zero generators are dropped on construction.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: Ring, gens: Vec<Polynomial>) -> Result<Self, AlgebraError> {
        for g in &gens {
            if g.ring() != ring {
                return Err(AlgebraError::RingMismatch);
            }
            if !g.is_homogeneous() {
                return Err(AlgebraError::Inhomogeneous(g.to_string()));
            }
        }
        Ok(Ideal { ring, gens: gens.into_iter().filter(|g| !g.is_zero()).collect() })
    }

    pub fn zero(ring: Ring) -> Self {
        Ideal { ring, gens: Vec::new() }
    }

    pub fn unit(ring: Ring) -> Self {
        Ideal { ring, gens: vec![ring.one()] }
    }

    /// The irrelevant ideal `(x0, ..., x(n-1))`.
    pub fn irrelevant(ring: Ring) -> Self {
        Ideal { ring, gens: (0..ring.nvars()).map(|i| ring.var(i)).collect() }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub(crate) fn as_submodule(&self) -> SubmoduleBasis {
        let f = GradedFreeModule::free(self.ring, 1);
        let gens = self.gens.iter().map(|g| ModuleElement::from_entries(vec![g.clone()])).collect();
        SubmoduleBasis::new(f, gens).expect("homogeneous generators")
    }

    fn from_submodule(ring: Ring, m: &SubmoduleBasis) -> Self {
        Ideal { ring, gens: m.generators().iter().map(|v| v.entry(0).clone()).filter(|p| !p.is_zero()).collect() }
    }

    /// Reduced grevlex Gröbner basis (monic), sorted by ascending leading monomial.
    pub fn groebner_basis(&self) -> Vec<Polynomial> {
        let mut gens = Self::from_submodule(self.ring, &default_groebner_basis(&self.as_submodule())).gens;
        gens.sort_by_key(|p| p.leading_monomial());
        gens
    }

    /// The same ideal with its reduced Gröbner basis as generators.
    pub fn to_groebner(&self) -> Ideal {
        Ideal { ring: self.ring, gens: self.groebner_basis() }
    }

    /// A minimal homogeneous generating set sorted by degree.
    pub fn minimalize(&self) -> Ideal {
        Self::from_submodule(self.ring, &minimal_generators(&self.as_submodule()))
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| !g.is_zero() && g.is_constant())
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        let g = default_groebner_basis(&self.as_submodule());
        normal_form(&ModuleElement::from_entries(vec![p.clone()]), &g).expect("same ring").is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        let g = default_groebner_basis(&self.as_submodule());
        other
            .gens
            .iter()
            .all(|p| normal_form(&ModuleElement::from_entries(vec![p.clone()]), &g).expect("same ring").is_zero())
    }

    /// Equality of ideals, by mutual containment.
    pub fn same_as(&self, other: &Ideal) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    /// `I : h = { r : r h in I }`.
    pub fn colon(&self, h: &Polynomial) -> Result<Ideal, AlgebraError> {
        if h.is_zero() {
            return Err(AlgebraError::ColonByZero);
        }
        if !h.is_homogeneous() {
            return Err(AlgebraError::Inhomogeneous(h.to_string()));
        }
        let mut cols = vec![h.clone()];
        cols.extend(self.gens.iter().cloned());
        Ok(first_components_of_syzygies(self.ring, &cols))
    }

    /// `I : J`.
    pub fn quotient(&self, j: &Ideal) -> Result<Ideal, AlgebraError> {
        let mut acc: Option<Ideal> = None;
        for h in &j.gens {
            let q = self.colon(h)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q),
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(self.ring)))
    }

    /// `I ∩ J`, from syzygies of `(1, 1), (g_i, 0), (0, h_j)`.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        if self.is_zero() || other.is_zero() {
            return Ideal::zero(self.ring);
        }
        let r = self.ring;
        let target = GradedFreeModule::free(r, 2);
        let mut twists = vec![0];
        let mut cols = vec![ModuleElement::from_entries(vec![r.one(), r.one()])];
        for g in &self.gens {
            twists.push(g.degree().unwrap() as i64);
            cols.push(ModuleElement::from_entries(vec![g.clone(), r.zero()]));
        }
        for h in &other.gens {
            twists.push(h.degree().unwrap() as i64);
            cols.push(ModuleElement::from_entries(vec![r.zero(), h.clone()]));
        }
        let phi = GradedMap::new(GradedFreeModule::new(r, twists), target, cols).expect("homogeneous");
        let k = kernel_generators(&phi, false);
        let gens = k.generators().iter().map(|v| v.entry(0).clone()).collect();
        Ideal { ring: r, gens }.minimalize()
    }

    /// `I : m` for the irrelevant ideal `m`.
    pub fn quotient_by_irrelevant(&self) -> Ideal {
        self.quotient(&Ideal::irrelevant(self.ring)).expect("variables are nonzero")
    }

    /// Saturation `I : m^∞`, computed by iterating `I : m` until it stabilises.
    pub fn saturate(&self) -> Result<Ideal, AlgebraError> {
        let mut current = self.minimalize();
        for _ in 0..SATURATION_CAP {
            if current.is_zero() || current.is_unit() {
                return Ok(current);
            }
            let next = current.quotient_by_irrelevant();
            if current.contains_ideal(&next) {
                return Ok(current);
            }
            current = next;
        }
        Err(AlgebraError::SaturationDiverged(SATURATION_CAP))
    }
}

impl std::fmt::Display for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// The ideal of first coordinates of syzygies among the polynomials `cols`.
fn first_components_of_syzygies(ring: Ring, cols: &[Polynomial]) -> Ideal {
    let target = GradedFreeModule::free(ring, 1);
    let twists = cols.iter().map(|c| c.degree().map_or(0, |d| d as i64)).collect();
    let columns = cols.iter().map(|c| ModuleElement::from_entries(vec![c.clone()])).collect();
    let phi = GradedMap::new(GradedFreeModule::new(ring, twists), target, columns).expect("homogeneous");
    let k = kernel_generators(&phi, false);
    Ideal { ring, gens: k.generators().iter().map(|v| v.entry(0).clone()).filter(|p| !p.is_zero()).collect() }
        .minimalize()
}

/// `M : v = { r : r v in M }` for a submodule `M` of a free module and an element `v`.
pub fn module_colon(m: &SubmoduleBasis, v: &ModuleElement) -> Result<Ideal, AlgebraError> {
    let parent = m.parent();
    let dv = parent.degree_of(v)?.ok_or(AlgebraError::ColonByZero)?;
    let mut twists = vec![dv];
    let mut cols = vec![v.clone()];
    for g in m.generators() {
        if let Some(d) = parent.degree_of(g)? {
            twists.push(d);
            cols.push(g.clone());
        }
    }
    let ring = parent.ring();
    let phi = GradedMap::new(GradedFreeModule::new(ring, twists), parent.clone(), cols)?;
    let k = kernel_generators(&phi, false);
    Ok(Ideal { ring, gens: k.generators().iter().map(|s| s.entry(0).clone()).filter(|p| !p.is_zero()).collect() }
        .minimalize())
}

/// Annihilator of `coker(phi)`, as the intersection of `im(phi) : e_i` over the target basis.
pub fn annihilator(phi: &GradedMap) -> Result<Ideal, AlgebraError> {
    let image = phi.image();
    let mut acc: Option<Ideal> = None;
    for i in 0..phi.target().rank() {
        let q = module_colon(&image, &phi.target().basis_element(i))?;
        acc = Some(match acc {
            None => q,
            Some(a) => a.intersect(&q),
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(phi.target().ring())))
}

/// Determinant by Laplace expansion along the first row.
pub fn determinant(rows: &[Vec<Polynomial>]) -> Polynomial {
    let n = rows.len();
    let ring = rows[0][0].ring();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = ring.zero();
    for j in 0..n {
        if rows[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = rows[0][j].mul(&determinant(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// All `k x k` minors of a `k x m` matrix, columns chosen in lexicographic order.
pub fn maximal_minors(rows: &[Vec<Polynomial>]) -> Result<Vec<Polynomial>, AlgebraError> {
    let k = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    if k == 0 || k > m {
        return Err(AlgebraError::FittingShape { rows: k, cols: m });
    }
    let mut out = Vec::new();
    let mut choice: Vec<usize> = (0..k).collect();
    loop {
        let sub: Vec<Vec<Polynomial>> = rows.iter().map(|r| choice.iter().map(|&j| r[j].clone()).collect()).collect();
        out.push(determinant(&sub));
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if choice[i] < m - k + i {
                choice[i] += 1;
                for t in i + 1..k {
                    choice[t] = choice[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Zeroth Fitting ideal of `coker(phi)` for a `k x m` matrix with `k <= m`: the ideal of maximal minors.
pub fn fitting_ideal_0(phi: &GradedMap) -> Result<Ideal, AlgebraError> {
    let rows: Vec<Vec<Polynomial>> = (0..phi.nrows()).map(|i| phi.row(i)).collect();
    let minors = maximal_minors(&rows)?;
    Ideal::new(phi.target().ring(), minors)
}
