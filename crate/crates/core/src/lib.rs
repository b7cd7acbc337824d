//! Rees algebras of finitely generated modules over finitely presented
//! `QQ`-algebras, computed two ways: through a versal map into a free module,
//! and as the image of `Sym(M)` in the graded dual of the divided power
//! algebra of `M*`.
//!
//! ```
//! use reeskit::corpus::residue_field;
//! use reeskit::sym_rees::rees_via_versal;
//! use reeskit::verify_theorem_a;
//!
//! let m = residue_field();
//! let r = rees_via_versal(&m)?;
//! assert_eq!(r.render(), "A[U] / (x*U, U^2)");
//! assert!(verify_theorem_a(&m, 4)?.holds());
//! # Ok::<(), reeskit::Error>(())
//! ```

pub mod corpus;
pub mod divided_powers;
pub mod error;
pub mod gamma_rees;
pub mod groebner;
pub mod poly;
pub mod presented;
pub mod sym_rees;

pub use error::{Error, Result};
pub use gamma_rees::{verify_theorem_a, TheoremAReport};
pub use groebner::{FreeModuleVector, GroebnerBasis, Ideal, Matrix, SubmoduleBasis};
pub use poly::{Monomial, MonomialOrder, Polynomial, Rational};
pub use presented::{ModuleMap, PresentedModule, PresentedRing};
pub use sym_rees::{GradedAlgebraMap, GradedAlgebraPresentation};
