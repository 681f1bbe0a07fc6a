//! Minimal graded free resolutions, Betti tables, duals and the lifting comparison.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::groebner::{kernel_of_map, minimal_generators, GradedFreeModule, GradedMap, ModuleElement, SubmoduleBasis};
use crate::hilbert::{hilbert_series_quotient, hilbert_series_submodule, Laurent};
use crate::polynomial::Polynomial;

/// Longest resolution accepted; anything longer means the kernel is broken.
pub const MAX_RESOLUTION_LENGTH: usize = 4;

/// What a resolution resolves.
#[derive(Clone, Debug)]
pub enum ModuleInput {
    /// A submodule of a free module, resolved through its generators.
    Submodule(SubmoduleBasis),
    /// The cokernel of a presentation `F1 -> F0`.
    Cokernel(GradedMap),
}

/// `0 <- M <- F0 <- F1 <- ... <- Fl <- 0`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    modules: Vec<GradedFreeModule>,
    /// `maps[i] = d_{i+1} : F_{i+1} -> F_i`.
    maps: Vec<GradedMap>,
    /// For submodules, the map `F0 -> ambient` onto the generators.
    augmentation: Option<GradedMap>,
    input: ModuleInput,
}

impl FreeResolution {
    pub fn modules(&self) -> &[GradedFreeModule] {
        &self.modules
    }

    /// `d_i : F_i -> F_{i-1}` for `i >= 1`.
    pub fn differential(&self, i: usize) -> Option<&GradedMap> {
        if i == 0 {
            return None;
        }
        self.maps.get(i - 1)
    }

    pub fn differentials(&self) -> &[GradedMap] {
        &self.maps
    }

    pub fn augmentation(&self) -> Option<&GradedMap> {
        self.augmentation.as_ref()
    }

    pub fn input(&self) -> &ModuleInput {
        &self.input
    }

    /// Index of the last nonzero free module (0 for the zero module).
    pub fn length(&self) -> usize {
        self.modules.iter().rposition(|f| f.rank() > 0).unwrap_or(0)
    }

    /// True when no differential has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|d| d.unit_positions().is_empty())
    }

    /// True when every composite `d_i ∘ d_{i+1}` (and augmentation ∘ d_1) vanishes.
    pub fn is_complex(&self) -> bool {
        let mut ok = true;
        if let (Some(aug), Some(d1)) = (&self.augmentation, self.maps.first()) {
            ok &= aug.compose(d1).is_zero();
        }
        for w in self.maps.windows(2) {
            ok &= w[0].compose(&w[1]).is_zero();
        }
        ok
    }

    /// `sum_i (-1)^i sum_j z^{a_ij}`: the Hilbert numerator predicted by the resolution.
    pub fn euler_numerator(&self) -> Laurent {
        let mut acc = Laurent::zero();
        for (i, f) in self.modules.iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for a in f.twists() {
                acc = acc.add(&Laurent::monomial(*a, sign));
            }
        }
        acc
    }

    /// Hilbert numerator of the resolved module, computed from its own Gröbner basis.
    pub fn module_numerator(&self) -> Laurent {
        match &self.input {
            ModuleInput::Submodule(m) => hilbert_series_submodule(m).numerator().clone(),
            ModuleInput::Cokernel(phi) => hilbert_series_quotient(&phi.image()).numerator().clone(),
        }
    }
}

/// Minimal free resolution, built by repeatedly taking minimal generators of kernels and
/// finished by a unit-pivot pruning pass.
pub fn minimal_free_resolution(input: ModuleInput) -> Result<FreeResolution, AlgebraError> {
    let (mut modules, mut maps, augmentation) = match &input {
        ModuleInput::Submodule(m) => {
            let gens = minimal_generators(m);
            let f0 = GradedFreeModule::new(m.parent().ring(), gens.degrees());
            let aug = GradedMap::new(f0.clone(), m.parent().clone(), gens.generators().to_vec())?;
            (vec![f0], Vec::new(), Some(aug))
        }
        ModuleInput::Cokernel(phi) => {
            let f0 = phi.target().clone();
            let gens = minimal_generators(&phi.image());
            let f1 = GradedFreeModule::new(f0.ring(), gens.degrees());
            let d1 = GradedMap::new(f1.clone(), f0.clone(), gens.generators().to_vec())?;
            if f1.rank() == 0 {
                (vec![f0], Vec::new(), None)
            } else {
                (vec![f0, f1], vec![d1], None)
            }
        }
    };

    let mut last = maps.last().cloned().or_else(|| augmentation.clone());
    while let Some(phi) = last {
        if phi.ncols() == 0 {
            break;
        }
        let k = kernel_of_map(&phi);
        if k.is_empty() {
            break;
        }
        if modules.len() > MAX_RESOLUTION_LENGTH {
            return Err(AlgebraError::ResolutionTooLong(modules.len()));
        }
        let f = GradedFreeModule::new(phi.source().ring(), k.degrees());
        let d = GradedMap::new(f.clone(), phi.source().clone(), k.generators().to_vec())?;
        modules.push(f);
        maps.push(d.clone());
        last = Some(d);
    }

    let mut res = FreeResolution { modules, maps, augmentation, input };
    prune(&mut res);
    while res.modules.len() > 1 && res.modules.last().is_some_and(|f| f.rank() == 0) {
        res.modules.pop();
        res.maps.pop();
    }
    if res.length() > MAX_RESOLUTION_LENGTH {
        return Err(AlgebraError::ResolutionTooLong(res.length()));
    }
    Ok(res)
}

/// A minimal presentation `F1 -> F0` of `coker(phi)`: minimal generators of the image,
/// followed by removal of unit entries.
pub fn minimal_presentation(phi: &GradedMap) -> Result<GradedMap, AlgebraError> {
    let f0 = phi.target().clone();
    let gens = minimal_generators(&phi.image());
    let f1 = GradedFreeModule::new(f0.ring(), gens.degrees());
    let d1 = GradedMap::new(f1.clone(), f0.clone(), gens.generators().to_vec())?;
    let mut res = FreeResolution {
        modules: vec![f0, f1],
        maps: vec![d1],
        augmentation: None,
        input: ModuleInput::Cokernel(phi.clone()),
    };
    prune(&mut res);
    Ok(res.maps.pop().expect("presentation map survives pruning"))
}

fn delete_row(m: &GradedMap, r: usize) -> GradedMap {
    let target = GradedFreeModule::new(
        m.target().ring(),
        m.target().twists().iter().enumerate().filter(|(i, _)| *i != r).map(|(_, a)| *a).collect(),
    );
    let cols = m
        .columns()
        .iter()
        .map(|c| {
            ModuleElement::from_entries(
                c.entries().iter().enumerate().filter(|(i, _)| *i != r).map(|(_, p)| p.clone()).collect(),
            )
        })
        .collect();
    GradedMap::new(m.source().clone(), target, cols).expect("row deletion keeps homogeneity")
}

fn delete_column(m: &GradedMap, c: usize) -> GradedMap {
    let source = GradedFreeModule::new(
        m.source().ring(),
        m.source().twists().iter().enumerate().filter(|(i, _)| *i != c).map(|(_, a)| *a).collect(),
    );
    let cols = m.columns().iter().enumerate().filter(|(i, _)| *i != c).map(|(_, v)| v.clone()).collect();
    GradedMap::new(source, m.target().clone(), cols).expect("column deletion keeps homogeneity")
}

/// Removes trivial summands `R(-a) --1--> R(-a)` until no differential has a unit entry.
pub fn prune(res: &mut FreeResolution) {
    loop {
        let mut found = None;
        for (k, d) in res.maps.iter().enumerate() {
            if let Some(&(r, c)) = d.unit_positions().first() {
                found = Some((k, r, c));
                break;
            }
        }
        let Some((k, r, c)) = found else { return };
        // d = maps[k] : F_{k+1} -> F_k
        let d = &res.maps[k];
        let u_inv = d.entry(r, c).leading_term().unwrap().1.inv();
        let pivot_col = d.columns()[c].clone();
        let cols: Vec<ModuleElement> = d
            .columns()
            .iter()
            .enumerate()
            .map(|(j, col)| {
                if j == c || col.entry(r).is_zero() {
                    return col.clone();
                }
                let factor: Polynomial = col.entry(r).scale(&u_inv);
                col.sub(&pivot_col.mul_poly(&factor))
            })
            .collect();
        let cleared = GradedMap::new(d.source().clone(), d.target().clone(), cols).expect("homogeneous");
        res.maps[k] = delete_column(&delete_row(&cleared, r), c);

        if k == 0 {
            if let Some(aug) = &res.augmentation {
                res.augmentation = Some(delete_column(aug, r));
            }
        } else {
            res.maps[k - 1] = delete_column(&res.maps[k - 1], r);
        }
        if k + 1 < res.maps.len() {
            res.maps[k + 1] = delete_row(&res.maps[k + 1], c);
        }
        res.modules[k] = res.maps[k].target().clone();
        res.modules[k + 1] = res.maps[k].source().clone();
    }
}

/// Generator degrees per homological index (a twist `R(-a)` is recorded as `a`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    degrees: Vec<Vec<i64>>,
}

impl BettiTable {
    pub fn from_degrees(mut degrees: Vec<Vec<i64>>) -> Self {
        for row in &mut degrees {
            row.sort();
        }
        while degrees.last().is_some_and(Vec::is_empty) {
            degrees.pop();
        }
        BettiTable { degrees }
    }

    /// Sorted generator degrees of `F_i`.
    pub fn degrees(&self, i: usize) -> &[i64] {
        self.degrees.get(i).map_or(&[], Vec::as_slice)
    }

    /// Twists of `F_i` in the `R(t)` convention, i.e. negated degrees.
    pub fn twists(&self, i: usize) -> Vec<i64> {
        self.degrees(i).iter().map(|a| -a).collect()
    }

    pub fn all_degrees(&self) -> &[Vec<i64>] {
        &self.degrees
    }

    pub fn rank(&self, i: usize) -> usize {
        self.degrees(i).len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Index of the last nonzero column.
    pub fn length(&self) -> usize {
        self.degrees.len().saturating_sub(1)
    }

    /// Exponents: degrees of the generators, ascending.
    pub fn exponents(&self) -> Vec<i64> {
        self.degrees(0).to_vec()
    }

    /// Macaulay2-style grid: column `i`, row `r` counts generators of `F_i` in degree `r + i`.
    pub fn to_grid(&self) -> String {
        if self.degrees.is_empty() {
            return "total:\n".to_string();
        }
        let mut cells: BTreeMap<(i64, usize), usize> = BTreeMap::new();
        for (i, row) in self.degrees.iter().enumerate() {
            for a in row {
                *cells.entry((a - i as i64, i)).or_default() += 1;
            }
        }
        let cols = self.degrees.len();
        let rows: Vec<i64> = {
            let lo = cells.keys().map(|k| k.0).min().unwrap_or(0);
            let hi = cells.keys().map(|k| k.0).max().unwrap_or(0);
            (lo..=hi).collect()
        };
        let width: Vec<usize> = (0..cols)
            .map(|i| {
                let total = self.rank(i).to_string().len();
                total.max(i.to_string().len())
            })
            .collect();
        let label_w = rows.iter().map(|r| format!("{r}:").len()).max().unwrap_or(0).max("total:".len());
        let mut out = String::new();
        let _ = write!(out, "{:>label_w$}", "");
        for (i, w) in width.iter().enumerate() {
            let _ = write!(out, " {i:>w$}");
        }
        out.push('\n');
        let _ = write!(out, "{:>label_w$}", "total:");
        for (i, w) in width.iter().enumerate() {
            let _ = write!(out, " {:>w$}", self.rank(i));
        }
        out.push('\n');
        for r in rows {
            let _ = write!(out, "{:>label_w$}", format!("{r}:"));
            for (i, w) in width.iter().enumerate() {
                let cell = cells.get(&(r, i)).map_or(".".to_string(), |n| n.to_string());
                let _ = write!(out, " {cell:>w$}");
            }
            out.push('\n');
        }
        out
    }
}

impl std::fmt::Display for BettiTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_grid())
    }
}

/// Betti table of a minimal resolution.
pub fn betti_table(res: &FreeResolution) -> Result<BettiTable, AlgebraError> {
    if !res.is_minimal() {
        return Err(AlgebraError::NonMinimal("a differential has a unit entry".into()));
    }
    Ok(BettiTable::from_degrees(res.modules.iter().map(|f| f.twists().to_vec()).collect()))
}

/// Graded projective dimension: index of the last nonzero free module.
pub fn graded_pdim(res: &FreeResolution) -> usize {
    res.length()
}

/// `Hom(coker(phi), R)` as a submodule of `F0^∨`: the kernel of the transpose.
pub fn module_dual(phi: &GradedMap) -> SubmoduleBasis {
    kernel_of_map(&phi.transpose())
}

/// Outcome of [`verify_lifting`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LiftingCheck {
    Holds,
    Fails,
    NotApplicable,
}

/// Compares the resolution of `T` with the marked degree-`e` generator removed against
/// the resolution of `I_B` shifted up by `d - e`, homological degree by degree.
pub fn verify_lifting(
    res_t: &BettiTable,
    res_b: Option<&BettiTable>,
    e: i64,
    d: i64,
) -> Result<LiftingCheck, AlgebraError> {
    let Some(res_b) = res_b else {
        return Ok(LiftingCheck::NotApplicable);
    };
    let mut t: Vec<Vec<i64>> = res_t.all_degrees().to_vec();
    let f0 = t.first_mut().ok_or(AlgebraError::MarkerAbsent(e))?;
    let pos = f0.iter().position(|&a| a == e).ok_or(AlgebraError::MarkerAbsent(e))?;
    f0.remove(pos);
    let t = BettiTable::from_degrees(t);
    let shifted = BettiTable::from_degrees(
        res_b.all_degrees().iter().map(|row| row.iter().map(|a| a + d - e).collect()).collect(),
    );
    Ok(if t == shifted { LiftingCheck::Holds } else { LiftingCheck::Fails })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::parse::parse_polynomial;
    use crate::polynomial::Ring;
    use crate::scalar::Field;

    fn ring() -> Ring {
        Ring::new(4, Field::Rational)
    }

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, ring()).unwrap()
    }

    fn ideal_res(gens: &[&str]) -> FreeResolution {
        let i = Ideal::new(ring(), gens.iter().map(|s| p(s)).collect()).unwrap();
        minimal_free_resolution(ModuleInput::Submodule(i.as_submodule())).unwrap()
    }

    #[test]
    fn koszul_complex_of_variables() {
        let res = ideal_res(&["x0", "x1", "x2", "x3"]);
        let b = betti_table(&res).unwrap();
        assert_eq!(b.degrees(0), &[1, 1, 1, 1]);
        assert_eq!(b.degrees(1), &[2; 6]);
        assert_eq!(b.degrees(2), &[3; 4]);
        assert_eq!(b.degrees(3), &[4]);
        assert!(res.is_complex());
        assert_eq!(res.euler_numerator(), res.module_numerator());
    }

    #[test]
    fn twisted_cubic_resolution() {
        let res = ideal_res(&["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
        let b = betti_table(&res).unwrap();
        assert_eq!(b.all_degrees(), &[vec![2, 2, 2], vec![3, 3]]);
        assert_eq!(graded_pdim(&res), 1);
        assert_eq!(b.to_grid(), "       0 1\ntotal: 3 2\n    2: 3 2\n");
    }

    #[test]
    fn cokernel_with_unit_is_pruned() {
        let r = ring();
        // coker of (1, x0; 0, x1) is R/(x1)
        let phi = GradedMap::from_rows(
            GradedFreeModule::new(r, vec![0, 1]),
            GradedFreeModule::free(r, 2),
            vec![vec![r.one(), p("x0")], vec![r.zero(), p("x1")]],
        )
        .unwrap();
        let res = minimal_free_resolution(ModuleInput::Cokernel(phi)).unwrap();
        let b = betti_table(&res).unwrap();
        assert_eq!(b.all_degrees(), &[vec![0], vec![1]]);
        assert!(res.is_minimal());
        assert_eq!(res.euler_numerator(), res.module_numerator());
    }

    #[test]
    fn free_module_has_length_zero() {
        let r = ring();
        let f = GradedFreeModule::new(r, vec![1, 3]);
        let m = SubmoduleBasis::new(f.clone(), vec![f.basis_element(0), f.basis_element(1)]).unwrap();
        let res = minimal_free_resolution(ModuleInput::Submodule(m)).unwrap();
        let b = betti_table(&res).unwrap();
        assert_eq!(b.twists(0), vec![-1, -3]);
        assert_eq!(graded_pdim(&res), 0);
    }

    #[test]
    fn zero_module_gives_empty_table() {
        let f = GradedFreeModule::free(ring(), 2);
        let m = SubmoduleBasis::new(f, vec![]).unwrap();
        let res = minimal_free_resolution(ModuleInput::Submodule(m)).unwrap();
        assert!(betti_table(&res).unwrap().is_empty());
    }

    #[test]
    fn duals() {
        let r = ring();
        // R(-3) presented by the zero map from nothing
        let f0 = GradedFreeModule::new(r, vec![3]);
        let phi = GradedMap::new(GradedFreeModule::new(r, vec![]), f0, vec![]).unwrap();
        let dual = module_dual(&phi);
        assert_eq!(dual.parent().twists(), &[-3]);
        assert_eq!(dual.degrees(), vec![-3]);
        // coker(x0) is torsion
        let phi =
            GradedMap::from_rows(GradedFreeModule::new(r, vec![1]), GradedFreeModule::free(r, 1), vec![vec![p("x0")]])
                .unwrap();
        assert!(module_dual(&phi).is_empty());
    }

    #[test]
    fn lifting_comparison() {
        let t = BettiTable::from_degrees(vec![vec![3, 3, 3], vec![5]]);
        let b = BettiTable::from_degrees(vec![vec![2, 2], vec![4]]);
        assert_eq!(verify_lifting(&t, Some(&b), 3, 4).unwrap(), LiftingCheck::Holds);
        let shifted = BettiTable::from_degrees(vec![vec![3, 3], vec![5]]);
        assert_eq!(verify_lifting(&t, Some(&shifted), 3, 4).unwrap(), LiftingCheck::Fails);
        assert_eq!(verify_lifting(&t, None, 3, 4).unwrap(), LiftingCheck::NotApplicable);
        assert_eq!(verify_lifting(&t, Some(&b), 2, 4), Err(AlgebraError::MarkerAbsent(2)));
    }
}
