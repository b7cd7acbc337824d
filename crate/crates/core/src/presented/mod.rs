//! Finitely presented rings and modules: duals, double duals, direct sums and
//! versal maps into free modules.

mod module;
mod ring;

pub use module::{
    direct_sum, direct_sum_map, double_dual, double_dual_map, dual, dual_map, is_versal,
    versal_map, DoubleDual, DualModule, ModuleMap, PresentedModule,
};
pub use ring::{PresentedRing, RingElement};
