//! Graded algebra presentations, symmetric algebras, kernels of algebra maps
//! and Rees algebras of modules and ideals.

mod presentation;
mod rees;

pub use presentation::{
    graded_piece, hilbert_function, presentation_equal, tensor_presentation,
    GradedAlgebraMap, GradedAlgebraPresentation, GradedPiece,
};
pub use rees::{
    algebra_map_kernel, rees_map, rees_of_ideal, rees_of_ideal_routes, rees_of_map,
    rees_via_versal, sym_map, sym_map_between, sym_presentation, sym_presentation_named,
    IdealRees,
};
