//! Fusion rules, skeletal F/R data and the quantities derived from them.

mod consistency;
mod derived;
mod fusion;
mod gauge;
mod io;
mod skeletal;

pub use consistency::{
    check_all, check_hexagon, check_pentagon, dimension_defect, f_unitarity_defect,
    ConsistencyReport, Residual,
};
pub use derived::{
    derive, fs_indicator, leg_bend_k, leg_bend_l, monodromy, pivotal, root_of_unity_order,
    s_matrix, spin, spin_from_pivotal, total_dimension, DerivedData,
};
pub use fusion::{FusionRules, Label, Violation};
pub use gauge::GaugeTransform;
pub use io::{FBlockFile, RSymbolFile, TheoryFile};
pub use skeletal::{FKey, FMatrix, RKey, SkeletalData};
