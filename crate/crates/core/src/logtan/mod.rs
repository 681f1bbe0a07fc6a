//! Logarithmic tangent sheaves of pairs of surfaces in projective 3-space.
//!
//! For `σ = (f, g)` the Jacobian matrix `∇σ : R^4 -> R(d_f) ⊕ R(d_g)` has kernel `T_σ`
//! and cokernel `Q_σ`. [`analyze`] computes the exponents of `T_σ`, the degree `m` of
//! `Q_σ`, Chern classes, the Bourbaki degree and the classification flags.

mod bourbaki;
mod invariants;
mod sequence;
mod tjurina;
mod validate;

pub use bourbaki::{bourbaki, bourbaki_with_choice, minimal_degree_choices, BourbakiData};
pub use invariants::{
    analyze, h0_tangent, invariants, Analysis, AnalysisOptions, Flags, InvariantReport, SchemeComparison, SchemeData,
    Stability,
};
pub use sequence::{
    canonical_syzygies, check_normal, cokernel_presentation, jacobian_matrix, tangent_module, NormalCheck, Sequence,
};
pub use tjurina::tjurina_plane;
pub use validate::{validate_theorems, Violation};
