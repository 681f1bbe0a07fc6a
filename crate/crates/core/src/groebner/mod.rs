//! Gröbner bases for ideals and graded submodules, and the operations built on them.

mod buchberger;
pub mod ideal;
pub mod module;
mod vector;

pub use buchberger::{buchberger, GbConfig, GbResult};
pub use ideal::{annihilator, determinant, fitting_ideal_0, maximal_minors, module_colon, Ideal, SATURATION_CAP};
pub use module::{
    contains, default_groebner_basis, groebner_basis, kernel_generators, kernel_of_map, minimal_generators,
    normal_form, syzygy_basis, GradedFreeModule, GradedMap, ModuleElement, SubmoduleBasis,
};
pub use vector::{Term, Vector};
