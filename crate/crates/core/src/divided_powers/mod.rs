//! Divided power algebras of free and presented modules, the comultiplication,
//! and the graded dual with its bullet product.
//!
//! `Γⁿ(M)` for `M = coker(P)` is the quotient of `Γⁿ(A^q)` by the degree-`n`
//! part of the ideal generated by `γᵏ(P e_i)`, `k ≥ 1`.

mod coalgebra;
mod dual;
mod gamma;

pub use coalgebra::{comultiplication, counit, gamma_identity, swap, IntMatrix};
pub use dual::{bullet, bullet_power, gamma_dual_degree, sym_dual_iso, DualFunctional};
pub use gamma::{
    dp_basis, dp_multiply, gamma_map_degree, gamma_module_degree, gamma_of_vector, DPMonomial,
    GammaElement, GammaModuleDegree,
};
