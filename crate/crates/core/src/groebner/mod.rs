//! Gröbner bases for ideals and for submodules of free modules.
//!
//! Computations over a quotient ring `R/I` are done in `R` with the fixed basis
//! of `I` appended to every generating set.

mod engine;
mod ideal;
mod module;

pub use ideal::{buchberger, eliminate, eliminate_variables, normal_form, GroebnerBasis, Ideal};
pub use module::{syzygies, FreeModuleVector, LiftingBasis, Matrix, SubmoduleBasis};
