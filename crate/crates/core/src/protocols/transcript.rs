use serde::{Deserialize, Serialize};

use super::qudit::qudit_amplitudes;
use super::sdc::SdcRun;
use super::teleport::{bob_block, BraidedTeleport, TeleportRun};
use crate::category::{Label, SkeletalData};
use crate::error::Result;
use crate::scalar::{Real, C};
use crate::state::FusionState;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Braided,
    BraidFree,
}

/// How the measurement outcomes of a run were chosen.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Seed(u64),
    ForcedRecord(Vec<u16>),
}

/// Dit sent for a group label: its index, which is the value of its bit word.
pub fn dit(l: Label) -> u64 {
    l.0 as u64
}

fn pairs<T: Real>(v: &[C<T>]) -> Vec<[f64; 2]> {
    v.iter().map(|z| [z.re.as_f64(), z.im.as_f64()]).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TeleportTranscript {
    pub protocol: String,
    pub mode: Mode,
    pub theory_id: String,
    /// `p` qubits when braided, `N` anyons when braid-free.
    pub size: usize,
    #[serde(flatten)]
    pub source: Source,
    pub record: Vec<String>,
    pub dits: Vec<u64>,
    pub correction: Vec<String>,
    pub probabilities: Vec<f64>,
    pub record_probability: f64,
    /// Pair-channel amplitudes of the input and of Bob's corrected anyons.
    pub input: Vec<[f64; 2]>,
    pub output: Vec<[f64; 2]>,
    pub fidelity: f64,
    pub braid_count: u64,
}

impl TeleportTranscript {
    fn from_run<T: Real>(
        theory: &SkeletalData<T>,
        theory_id: &str,
        mode: Mode,
        size: usize,
        source: Source,
        input: &FusionState<T>,
        run: &TeleportRun<T>,
    ) -> Result<Self> {
        let bob = bob_block(theory, &run.output, run.bob_start, input.len())?;
        Ok(Self {
            protocol: "teleport".into(),
            mode,
            theory_id: theory_id.into(),
            size,
            source,
            record: run
                .record
                .iter()
                .map(|&l| theory.rules().name(l).to_string())
                .collect(),
            dits: run.record.iter().map(|&l| dit(l)).collect(),
            correction: run.correction.clone(),
            probabilities: run.probabilities.clone(),
            record_probability: run.record_probability,
            input: pairs(&qudit_amplitudes(theory, input)?),
            output: pairs(&qudit_amplitudes(theory, &bob)?),
            fidelity: run.fidelity,
            braid_count: run.braid_count,
        })
    }

    pub fn braided<T: Real>(
        theory: &SkeletalData<T>,
        theory_id: &str,
        source: Source,
        input: &FusionState<T>,
        run: &BraidedTeleport<T>,
    ) -> Result<Self> {
        Self::from_run(
            theory,
            theory_id,
            Mode::Braided,
            run.x.len(),
            source,
            input,
            &run.run,
        )
    }

    pub fn braidfree<T: Real>(
        theory: &SkeletalData<T>,
        theory_id: &str,
        source: Source,
        input: &FusionState<T>,
        run: &TeleportRun<T>,
    ) -> Result<Self> {
        Self::from_run(
            theory,
            theory_id,
            Mode::BraidFree,
            input.len(),
            source,
            input,
            run,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SdcTranscript {
    pub protocol: String,
    pub mode: Mode,
    pub theory_id: String,
    #[serde(flatten)]
    pub source: Source,
    pub dits: [u64; 2],
    pub decoded: [u64; 2],
    pub success: bool,
    pub probabilities: Vec<f64>,
    pub other_mass: Vec<f64>,
    pub braid_count: u64,
}

impl SdcTranscript {
    pub fn new<T: Real>(theory_id: &str, mode: Mode, source: Source, run: &SdcRun<T>) -> Self {
        Self {
            protocol: "sdc".into(),
            mode,
            theory_id: theory_id.into(),
            source,
            dits: [dit(run.sent.0), dit(run.sent.1)],
            decoded: [dit(run.decoded.0), dit(run.decoded.1)],
            success: run.success(),
            probabilities: run.probabilities.clone(),
            other_mass: run.other_mass.clone(),
            braid_count: run.braid_count,
        }
    }
}
