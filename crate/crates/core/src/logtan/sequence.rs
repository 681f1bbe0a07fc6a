use crate::error::LogtanError;
use crate::groebner::{fitting_ideal_0, GradedFreeModule, GradedMap, Ideal, ModuleElement, SubmoduleBasis};
use crate::hilbert::dimension_degree;
use crate::parse::parse_polynomial;
use crate::polynomial::{Polynomial, Ring};
use crate::scalar::Field;
use crate::AlgebraError;

/// A pair of homogeneous polynomials in four variables, stored with `deg f <= deg g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence {
    f: Polynomial,
    g: Polynomial,
    swapped: bool,
}

impl Sequence {
    pub fn new(f: Polynomial, g: Polynomial) -> Result<Self, LogtanError> {
        if f.ring() != g.ring() {
            return Err(AlgebraError::RingMismatch.into());
        }
        if f.ring().nvars() != 4 {
            return Err(LogtanError::InvalidSequence(format!(
                "expected polynomials in 4 variables, got {}",
                f.ring().nvars()
            )));
        }
        for (name, p) in [("f", &f), ("g", &g)] {
            if p.is_zero() {
                return Err(LogtanError::InvalidSequence(format!("{name} is zero")));
            }
            if !p.is_homogeneous() {
                return Err(LogtanError::InvalidSequence(format!("{name} is not homogeneous")));
            }
            if p.degree() == Some(0) {
                return Err(LogtanError::InvalidSequence(format!("{name} is a constant")));
            }
        }
        if f.degree() > g.degree() {
            Ok(Sequence { f: g, g: f, swapped: true })
        } else {
            Ok(Sequence { f, g, swapped: false })
        }
    }

    /// Parses both polynomials over `field` in the ring `k[x0..x3]`.
    pub fn parse(f: &str, g: &str, field: Field) -> Result<Self, LogtanError> {
        let ring = Ring::new(4, field);
        Sequence::new(parse_polynomial(f, ring)?, parse_polynomial(g, ring)?)
    }

    pub fn ring(&self) -> Ring {
        self.f.ring()
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn g(&self) -> &Polynomial {
        &self.g
    }

    /// True when the inputs were exchanged to put the lower degree first.
    pub fn swapped(&self) -> bool {
        self.swapped
    }

    pub fn d_f(&self) -> i64 {
        self.f.degree().unwrap() as i64 - 1
    }

    pub fn d_g(&self) -> i64 {
        self.g.degree().unwrap() as i64 - 1
    }

    pub fn d(&self) -> i64 {
        self.d_f() + self.d_g()
    }

    pub fn m0(&self) -> i64 {
        let (a, b) = (self.d_f(), self.d_g());
        a * a + b * b + a * b
    }

    pub fn is_pencil_of_cubics(&self) -> bool {
        self.d_f() == 2 && self.d_g() == 2
    }
}

/// The 2x4 Jacobian matrix as a map `R^4 -> R(d_f) ⊕ R(d_g)`.
pub fn jacobian_matrix(seq: &Sequence) -> GradedMap {
    let ring = seq.ring();
    let source = GradedFreeModule::free(ring, 4);
    let target = GradedFreeModule::new(ring, vec![-seq.d_f(), -seq.d_g()]);
    GradedMap::from_rows(source, target, vec![seq.f.gradient(), seq.g.gradient()])
        .expect("gradients of homogeneous polynomials are homogeneous")
}

/// Outcome of the normality test.
#[derive(Clone, Debug)]
pub struct NormalCheck {
    pub normal: bool,
    /// Projective dimension of `V(Fitt0)`; `-1` when empty.
    pub dimension: i64,
    pub degree: i64,
    pub fitting: Ideal,
}

/// Normal means `V(Fitt0(∇σ))` has codimension at least two. Fails if `f, g` are dependent.
pub fn check_normal(seq: &Sequence) -> Result<NormalCheck, LogtanError> {
    let fitting = fitting_ideal_0(&jacobian_matrix(seq))?;
    if fitting.is_zero() {
        return Err(LogtanError::Dependent);
    }
    let (dimension, degree) = match dimension_degree(&fitting) {
        Ok(dd) => dd,
        Err(AlgebraError::EmptyScheme) => (-1, 0),
        Err(e) => return Err(e.into()),
    };
    Ok(NormalCheck { normal: dimension <= 1, dimension, degree, fitting })
}

/// `T_σ = ker ∇σ`, by minimal generators.
pub fn tangent_module(seq: &Sequence) -> SubmoduleBasis {
    crate::groebner::kernel_of_map(&jacobian_matrix(seq))
}

/// `Q_σ = coker ∇σ` (the Jacobian matrix itself is the presentation).
pub fn cokernel_presentation(seq: &Sequence) -> GradedMap {
    jacobian_matrix(seq)
}

/// The four degree-`d` syzygies built from the 2x2 minors `p_ij` of the Jacobian matrix.
pub fn canonical_syzygies(seq: &Sequence) -> [ModuleElement; 4] {
    let df = seq.f.gradient();
    let dg = seq.g.gradient();
    let p = |i: usize, j: usize| df[i].mul(&dg[j]).sub(&df[j].mul(&dg[i]));
    let z = seq.ring().zero();
    let v = |a: Polynomial, b: Polynomial, c: Polynomial, d: Polynomial| ModuleElement::from_entries(vec![a, b, c, d]);
    [
        v(z.clone(), p(2, 3), p(1, 3).neg(), p(1, 2)),
        v(p(2, 3), z.clone(), p(0, 3).neg(), p(0, 2)),
        v(p(1, 3), p(0, 3).neg(), z.clone(), p(0, 1)),
        v(p(1, 2), p(0, 2).neg(), p(0, 1), z),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(f: &str, g: &str) -> Sequence {
        Sequence::parse(f, g, Field::Rational).unwrap()
    }

    #[test]
    fn jacobian_of_first_example() {
        let s = seq("2*x1*x3 - x1^2", "3*x2*x3^2 - 3*x0*x1*x3 + x1^3");
        let j = jacobian_matrix(&s);
        let rows: Vec<String> = j.row(0).iter().map(|p| p.to_string()).collect();
        assert_eq!(rows, ["0", "-2*x1 + 2*x3", "0", "2*x1"]);
        let rows: Vec<String> = j.row(1).iter().map(|p| p.to_string()).collect();
        assert_eq!(rows, ["-3*x1*x3", "3*x1^2 - 3*x0*x3", "3*x3^2", "-3*x0*x1 + 6*x2*x3"]);
        assert_eq!(j.target().twists(), &[-1, -2]);
    }

    #[test]
    fn swaps_into_degree_order() {
        let s = seq("x0^3", "x1^2");
        assert!(s.swapped());
        assert_eq!((s.d_f(), s.d_g(), s.d(), s.m0()), (1, 2, 3, 7));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(Sequence::parse("x0 + x1^2", "x2", Field::Rational).is_err());
        assert!(Sequence::parse("0", "x2", Field::Rational).is_err());
        assert!(Sequence::parse("3", "x2", Field::Rational).is_err());
    }

    #[test]
    fn normality() {
        assert!(check_normal(&seq("x0*x1", "x3*x2*(x0 - x1)")).unwrap().normal);
        assert!(matches!(check_normal(&seq("x0^2", "x0^3")), Err(LogtanError::Dependent)));
        let c = check_normal(&seq("x0^2", "x0*x1^2")).unwrap();
        assert!(!c.normal);
        assert_eq!(c.dimension, 2);
        let c = check_normal(&seq("x0", "x1")).unwrap();
        assert!(c.normal);
        assert_eq!(c.dimension, -1);
    }

    #[test]
    fn canonical_syzygies_of_coordinate_pair() {
        let s = seq("x0", "x1");
        let nu = canonical_syzygies(&s);
        assert!(nu[0].is_zero() && nu[1].is_zero());
        let strs = |v: &ModuleElement| v.entries().iter().map(|p| p.to_string()).collect::<Vec<_>>();
        assert_eq!(strs(&nu[2]), ["0", "0", "0", "1"]);
        assert_eq!(strs(&nu[3]), ["0", "0", "1", "0"]);
        let j = jacobian_matrix(&s);
        for v in &nu {
            assert!(j.apply(v).is_zero());
        }
    }

    #[test]
    fn tangent_of_coordinate_pair_is_trivial() {
        let t = tangent_module(&seq("x0", "x1"));
        assert_eq!(t.degrees(), vec![0, 0]);
    }
}
