//! Fusion-tree states and the operations that act on them.

mod basis;
mod fusion_state;
mod shape;
mod stump;

pub use basis::FusionBasis;
pub use fusion_state::{BlockComponent, Choice, Exchange, FusionState, Measured, Recouple};
pub use shape::{Shape, Span};
pub use stump::{stump_by_fusion, stump_matrix, Stump};
