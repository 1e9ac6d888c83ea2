//! Builders for Helly graphs and the fixtures around them.

pub mod garside;
pub mod generators;
pub mod lattice;
pub mod thickening;

pub use garside::{garside_b3_ball, Braid, GarsideBall};
pub use generators::{generate, Generated};
pub use lattice::{lattice_to_graph, zn_window, LatticeAction, LatticeGraph};
pub use thickening::{cell_helly_check, thickening, CellComplexSpec, CellHellyReport};
