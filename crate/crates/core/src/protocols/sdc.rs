use super::edit::make_edit;
use super::schedule::{Ledger, Schedule};
use crate::category::{Label, SkeletalData};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::state::FusionState;

/// Where Bob's first fusion outcome is absorbed during decoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decode {
    /// Into his own left anyon.
    Standard,
    /// Into Alice's second anyon.
    Alternative,
}

#[derive(Debug, Clone)]
pub struct SdcRun<T: Real> {
    pub sent: (Label, Label),
    pub decoded: (Label, Label),
    pub probabilities: Vec<f64>,
    /// Per measurement, the mass on every outcome other than the one found.
    pub other_mass: Vec<f64>,
    pub encoded: FusionState<T>,
    pub output: FusionState<T>,
    pub braid_count: u64,
}

fn decode<T: Real>(
    theory: &SkeletalData<T>,
    encoded: &FusionState<T>,
    mode: Decode,
) -> Result<(Label, Label, Ledger, FusionState<T>)> {
    let mut ledger = Ledger::default();
    // Outcomes are deterministic, so any schedule works.
    let mut schedule = Schedule::seeded(0);
    let m = ledger.measure(theory, encoded, 1, &mut schedule)?;
    let c = m.outcome;
    let state = match mode {
        Decode::Standard => ledger.absorb(theory, &m.state, 0)?,
        Decode::Alternative => ledger.absorb(theory, &m.state, 1)?,
    };
    let m = ledger.measure(theory, &state, 0, &mut schedule)?;
    Ok((m.outcome, c, ledger, m.state))
}

fn finish<T: Real>(
    theory: &SkeletalData<T>,
    sent: (Label, Label),
    encoded: FusionState<T>,
    mode: Decode,
) -> Result<SdcRun<T>> {
    let (total, c, ledger, output) = decode(theory, &encoded, mode)?;
    Ok(SdcRun {
        sent,
        decoded: (total, c),
        probabilities: ledger.probabilities,
        other_mass: ledger.other_mass,
        braid_count: output.braid_count(),
        encoded,
        output,
    })
}

fn bit(theory_labels: usize, l: Label) -> Result<u32> {
    if l.idx() >= theory_labels {
        return Err(Error::Precondition(format!(
            "message symbol {} out of range",
            l.0
        )));
    }
    Ok(l.0 as u32)
}

/// Sends two bits `(i, j)` over an Ising Bell pair. Alice applies `Z^j` as a
/// full twist of her two anyons and `X^i` by winding her second anyon around
/// a freshly created pair.
pub fn sdc_braided<T: Real>(
    theory: &SkeletalData<T>,
    i: Label,
    j: Label,
    mode: Decode,
) -> Result<SdcRun<T>> {
    if !theory.has_braiding() {
        return Err(Error::NoBraiding);
    }
    let q = theory.label("q")?;
    if theory.rules().fuse(q, q).len() != 2 {
        return Err(Error::Unsupported(
            "braided protocol needs Ising anyons".into(),
        ));
    }
    let (bi, bj) = (bit(2, i)?, bit(2, j)?);
    let mut state = make_edit(theory)?;
    for _ in 0..bj {
        state = state.braid_power(theory, 2, 2)?;
    }
    if bi == 1 {
        state = state.pair_create(theory, 4, q)?.braid_power(theory, 3, 2)?;
    }
    finish(theory, (i, j), state, mode)
}

/// Sends `(i, j)` in `G x G` over a Tambara-Yamagami Bell pair with pair
/// creations and fusions only.
pub fn sdc_braidfree<T: Real>(
    theory: &SkeletalData<T>,
    i: Label,
    j: Label,
    mode: Decode,
) -> Result<SdcRun<T>> {
    let q = theory.label("q")?;
    let order = theory.rules().fuse(q, q).len();
    bit(order, i)?;
    bit(order, j)?;
    let mut ledger = Ledger::default();
    let mut state = make_edit(theory)?;
    if !j.is_vacuum() {
        state = state.pair_create(theory, 3, j)?;
        state = ledger.absorb(theory, &state, 2)?;
        state = ledger.absorb(theory, &state, 3)?;
    }
    if !i.is_vacuum() {
        state = state.pair_create(theory, 4, i)?;
        state = ledger.absorb(theory, &state, 3)?;
    }
    finish(theory, (i, j), state, mode)
}

impl<T: Real> SdcRun<T> {
    pub fn success(&self) -> bool {
        self.sent == self.decoded
    }
}
