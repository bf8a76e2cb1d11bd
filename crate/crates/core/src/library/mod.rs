//! Concrete theories and the hexagon solver.

mod builders;
mod solver;

pub use builders::{
    build_ising, build_tambara_yamagami, build_tambara_yamagami_with, tambara_yamagami, Kappa,
    TheorySpec,
};
pub use solver::{solve_hexagon, BraidingSolution, SolveReport, SolverConfig};
