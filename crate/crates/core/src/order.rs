//! Term orders on free modules `R^r`, all built over grevlex on monomials.

use std::cmp::Ordering;

use crate::monomial::Monomial;

/// A well-order on module terms `m * e_i` that is compatible with multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleOrder {
    /// Compare `deg(m) + shifts[i]`, then grevlex on `m`, then the smaller index wins.
    /// With all shifts zero this is plain term-over-position.
    TermOverPosition { shifts: Vec<i64> },
    /// Components `< split` are compared by `upper`, the rest by `lower` (re-indexed
    /// from zero), and every upper term beats every lower term.
    Elimination { split: usize, upper: Box<ModuleOrder>, lower: Box<ModuleOrder> },
    /// Schreyer order induced by marked terms `marks[i] = (m_i, c_i)` in `base`:
    /// `m * e_i > n * e_j` iff `m*m_i e_{c_i} > n*m_j e_{c_j}` in `base`, ties broken by smaller index.
    Schreyer { marks: Vec<(Monomial, u32)>, base: Box<ModuleOrder> },
}

impl ModuleOrder {
    /// Term-over-position with zero shifts, valid for any rank.
    pub fn top(rank: usize) -> Self {
        ModuleOrder::TermOverPosition { shifts: vec![0; rank] }
    }

    pub fn top_shifted(shifts: Vec<i64>) -> Self {
        ModuleOrder::TermOverPosition { shifts }
    }

    pub fn elimination(split: usize, upper: ModuleOrder, lower: ModuleOrder) -> Self {
        ModuleOrder::Elimination { split, upper: Box::new(upper), lower: Box::new(lower) }
    }

    pub fn schreyer(marks: Vec<(Monomial, u32)>, base: ModuleOrder) -> Self {
        ModuleOrder::Schreyer { marks, base: Box::new(base) }
    }

    /// Compares `a.0 * e_{a.1}` with `b.0 * e_{b.1}`.
    #[inline]
    pub fn cmp(&self, a: (&Monomial, u32), b: (&Monomial, u32)) -> Ordering {
        match self {
            ModuleOrder::TermOverPosition { shifts } => {
                let sa = shifts.get(a.1 as usize).copied().unwrap_or(0);
                let sb = shifts.get(b.1 as usize).copied().unwrap_or(0);
                let da = a.0.degree() as i64 + sa;
                let db = b.0.degree() as i64 + sb;
                da.cmp(&db).then_with(|| a.0.grevlex_cmp(b.0)).then_with(|| b.1.cmp(&a.1))
            }
            ModuleOrder::Elimination { split, upper, lower } => {
                let s = *split as u32;
                match (a.1 < s, b.1 < s) {
                    (true, true) => upper.cmp(a, b),
                    (false, false) => lower.cmp((a.0, a.1 - s), (b.0, b.1 - s)),
                    (true, false) => Ordering::Greater,
                    (false, true) => Ordering::Less,
                }
            }
            ModuleOrder::Schreyer { marks, base } => {
                let (ma, ca) = marks[a.1 as usize];
                let (mb, cb) = marks[b.1 as usize];
                base.cmp((&a.0.mul(&ma), ca), (&b.0.mul(&mb), cb)).then_with(|| b.1.cmp(&a.1))
            }
        }
    }
}
