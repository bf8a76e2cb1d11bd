//! Simulation of multiplicity-free anyon theories: skeletal data and its
//! consistency, fusion-tree states, and teleportation and superdense coding
//! protocols for Ising and Tambara-Yamagami anyons.

pub mod algebra;
pub mod category;
pub mod error;
pub mod library;
pub mod protocols;
pub mod scalar;
pub mod state;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Theory = category::SkeletalData<f64>;
pub type Theory32 = category::SkeletalData<f32>;
pub type Matrix = algebra::CMatrix<f64>;
pub type Gauge = category::GaugeTransform<f64>;

#[cfg(test)]
pub(crate) mod testutil {
    use crate::library::{build_ising, build_tambara_yamagami, solve_hexagon, Kappa, SolverConfig};
    use crate::Theory;

    /// Every braided class over the given F-data.
    pub fn braided(base: &Theory) -> Vec<Theory> {
        let report = solve_hexagon(
            base,
            &SolverConfig {
                restarts: 60,
                ..SolverConfig::default()
            },
        )
        .unwrap();
        report
            .classes
            .iter()
            .map(|c| c.theory(base).unwrap())
            .collect()
    }

    pub fn ising(kappa: Kappa) -> Theory {
        braided(&build_ising(kappa).unwrap()).remove(0)
    }

    pub fn ty(n: u32) -> Theory {
        braided(&build_tambara_yamagami(n, Kappa::Plus).unwrap()).remove(0)
    }
}
