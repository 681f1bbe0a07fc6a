//! Logarithmic tangent sheaves of pairs of surfaces in P^3.
//!
//! The crate bundles a small graded commutative-algebra kernel (exact arithmetic,
//! Gröbner bases for modules, syzygies, minimal free resolutions, Hilbert series)
//! and, on top of it, the invariants of the sheaf `T_σ = ker ∇σ` attached to a pair
//! `σ = (f, g)` of homogeneous polynomials in `x0..x3`.

pub mod corpus;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod homology;
pub mod logtan;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod polynomial;
pub mod scalar;
pub mod search;

pub use error::{AlgebraError, LogtanError, ParseError};
pub use monomial::{Monomial, MAX_VARS};
pub use order::ModuleOrder;
pub use parse::parse_polynomial;
pub use polynomial::{Polynomial, Ring};
pub use scalar::{Field, Scalar, DEFAULT_PRIME};
