use super::braidword::{correction_braidword, BraidOp};
use super::qudit::{phase_pair, qudit_amplitudes, qudit_state, shift_pair};
use super::schedule::{Ledger, Schedule};
use crate::category::{Label, SkeletalData};
use crate::error::{Error, Result};
use crate::scalar::{re, Real};
use crate::state::FusionState;

/// Outcome of one teleportation run.
#[derive(Debug, Clone)]
pub struct TeleportRun<T: Real> {
    /// Measured charges in the order they were obtained.
    pub record: Vec<Label>,
    /// Conditional probability of each measured charge.
    pub probabilities: Vec<f64>,
    pub record_probability: f64,
    /// Bob's anyons right after Alice's measurements.
    pub pre_correction: FusionState<T>,
    pub correction: Vec<String>,
    pub output: FusionState<T>,
    /// Index of Bob's first anyon in `output`.
    pub bob_start: usize,
    pub fidelity: f64,
    pub braid_count: u64,
}

/// Braided run with the measured bits per qubit.
#[derive(Debug, Clone)]
pub struct BraidedTeleport<T: Real> {
    pub x: Vec<u8>,
    pub z: Vec<u8>,
    pub word: Vec<BraidOp>,
    pub run: TeleportRun<T>,
}

fn all_q<T: Real>(theory: &SkeletalData<T>, input: &FusionState<T>) -> Result<Label> {
    let q = theory.label("q")?;
    if input.leaves().iter().any(|&l| l != q) || input.is_empty() {
        return Err(Error::Precondition(
            "input must be a nonempty row of q anyons".into(),
        ));
    }
    Ok(q)
}

/// Creates `count` pairs nested inside one another, starting at `pos`.
fn nested_pairs<T: Real>(
    theory: &SkeletalData<T>,
    state: &FusionState<T>,
    pos: usize,
    count: usize,
    q: Label,
) -> Result<FusionState<T>> {
    (0..count).try_fold(state.clone(), |s, k| s.pair_create(theory, pos + k, q))
}

pub(crate) fn bob_block<T: Real>(
    theory: &SkeletalData<T>,
    state: &FusionState<T>,
    start: usize,
    len: usize,
) -> Result<FusionState<T>> {
    let mut comps = state.block_components(theory, start, len)?;
    comps.retain(|c| c.weight.as_f64() > 1e-9);
    let (first, rest) = comps.split_first().ok_or(Error::BasisMismatch)?;
    for c in rest {
        if !first.state.phase_equal(&c.state, 1e-9)? {
            return Err(Error::Numerical(
                "Bob's anyons are entangled with the environment".into(),
            ));
        }
    }
    Ok(first.state.clone())
}

/// Teleports `p` Ising qubits (`2p` anyons) through `p` nested Bell pairs.
/// For each qubit from the right Alice fuses across into the Bell pair
/// (outcome `z_j`), absorbs that charge on her left, fuses again (outcome
/// `x_j`) and passes `x_j` on to the next qubit. Bob corrects with
/// monodromies, see [`correction_braidword`].
pub fn teleport_braided<T: Real>(
    theory: &SkeletalData<T>,
    input: &FusionState<T>,
    schedule: &mut Schedule,
) -> Result<BraidedTeleport<T>> {
    if !theory.has_braiding() {
        return Err(Error::NoBraiding);
    }
    let q = all_q(theory, input)?;
    if theory.rules().fuse(q, q).len() != 2 {
        return Err(Error::Unsupported(
            "braided protocol needs Ising anyons".into(),
        ));
    }
    if input.len() % 2 != 0 {
        return Err(Error::Precondition("input must encode whole qubits".into()));
    }
    let p = input.len() / 2;
    let mut ledger = Ledger::default();
    let mut state = nested_pairs(theory, input, 2 * p, 2 * p, q)?;
    let (mut x, mut z) = (vec![0u8; p], vec![0u8; p]);
    for j in (1..=p).rev() {
        let a = 2 * j - 1;
        let m = ledger.measure(theory, &state, a, schedule)?;
        z[j - 1] = m.outcome.0 as u8;
        state = ledger.absorb(theory, &m.state, a - 1)?;
        let m = ledger.measure(theory, &state, a - 1, schedule)?;
        x[j - 1] = m.outcome.0 as u8;
        state = m.state;
        if j > 1 {
            state = ledger.absorb(theory, &state, a - 2)?;
        }
    }
    let pre_correction = bob_block(theory, &state, 1, 2 * p)?;
    let word = correction_braidword(&x, &z);
    let mut offset = 1usize;
    for op in &word {
        state = match *op {
            BraidOp::Sigma { generator, power } => {
                let i = (offset as i32 + generator - 1) as usize;
                state.braid_power(theory, i, power)?
            }
            BraidOp::CreateLeft => {
                let s = state.pair_create(theory, offset, q)?;
                offset += 2;
                s
            }
            BraidOp::CreateRight => state.pair_create(theory, offset + 2 * p, q)?,
        };
    }
    let fidelity = state.block_fidelity(theory, offset, input)?.as_f64();
    let run = TeleportRun {
        record_probability: ledger.joint_probability(),
        record: ledger.outcomes,
        probabilities: ledger.probabilities,
        pre_correction,
        correction: word.iter().map(ToString::to_string).collect(),
        braid_count: state.braid_count(),
        output: state,
        bob_start: offset,
        fidelity,
    };
    Ok(BraidedTeleport { x, z, word, run })
}

/// `prod_j Z^{z_j} X^{x_j + x_{j+1}}` applied to the input, the state Bob
/// holds before correcting.
pub fn expected_pre_correction<T: Real>(
    theory: &SkeletalData<T>,
    input: &FusionState<T>,
    x: &[u8],
    z: &[u8],
) -> Result<FusionState<T>> {
    let p = input.len() / 2;
    let mut amps = qudit_amplitudes(theory, input)?;
    for j in 1..=p {
        let flip = x[j - 1] ^ x.get(j).copied().unwrap_or(0);
        if flip == 1 {
            amps = shift_pair(theory, &amps, p, j, Label(1))?;
        }
        if z[j - 1] == 1 {
            amps = phase_pair(theory, &amps, p, j, |k| {
                re(if k.0 == 0 { T::one() } else { -T::one() })
            })?;
        }
    }
    qudit_state(theory, p, &amps)
}

/// Teleports `N` anyons of charge `q` (N even) with fusions only.
///
/// Alice fuses her rightmost anyon with the innermost anyon received from
/// the shared pairs (outcome `g_N`), absorbs `g_N` into her next anyon, and
/// repeats down to `g_1`. Bob undoes the resulting lines with pair creations
/// and fusions: a `g_1` pair on his left edge, then a `g_j` pair between his
/// anyons `j - 1` and `j` for `j = 2..N`.
pub fn teleport_braidfree<T: Real>(
    theory: &SkeletalData<T>,
    input: &FusionState<T>,
    schedule: &mut Schedule,
) -> Result<TeleportRun<T>> {
    let q = all_q(theory, input)?;
    let n = input.len();
    if n % 2 != 0 {
        return Err(Error::Precondition(format!(
            "need an even number of anyons, got {n}"
        )));
    }
    let mut ledger = Ledger::default();
    let mut state = nested_pairs(theory, input, n, n, q)?;
    let mut g = vec![Label::VACUUM; n + 1];
    for m in (1..=n).rev() {
        let meas = ledger.measure(theory, &state, m - 1, schedule)?;
        g[m] = meas.outcome;
        state = meas.state;
        if m > 1 {
            state = ledger.absorb(theory, &state, m - 2)?;
        }
    }
    let pre_correction = bob_block(theory, &state, 1, n)?;
    let rules = theory.rules();
    let mut correction = Vec::new();
    let mut bob_start = 1;
    if !g[1].is_vacuum() {
        state = state.pair_create(theory, 1, g[1])?;
        state = ledger.absorb(theory, &state, 2)?;
        bob_start = 2;
        correction.push(format!("edge({})", rules.name(g[1])));
    }
    for j in 2..=n {
        if g[j].is_vacuum() {
            continue;
        }
        let left = bob_start + j - 2;
        state = state.pair_create(theory, left + 1, g[j])?;
        state = ledger.absorb(theory, &state, left)?;
        state = ledger.absorb(theory, &state, left + 1)?;
        correction.push(format!("rung{}({})", j, rules.name(g[j])));
    }
    let fidelity = state.block_fidelity(theory, bob_start, input)?.as_f64();
    Ok(TeleportRun {
        record_probability: ledger.joint_probability(),
        record: ledger.outcomes,
        probabilities: ledger.probabilities,
        pre_correction,
        correction,
        braid_count: state.braid_count(),
        output: state,
        bob_start,
        fidelity,
    })
}
