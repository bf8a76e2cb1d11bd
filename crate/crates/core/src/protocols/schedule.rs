use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::category::{Label, SkeletalData};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::state::{Choice, FusionState, Measured};

/// Source of measurement outcomes: Born sampling from a seeded generator,
/// or a forced record replayed in order.
#[derive(Debug, Clone)]
pub enum Schedule {
    Sampled(ChaCha8Rng),
    Forced(VecDeque<Label>),
}

impl Schedule {
    pub fn seeded(seed: u64) -> Self {
        Schedule::Sampled(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn forced(record: impl IntoIterator<Item = Label>) -> Self {
        Schedule::Forced(record.into_iter().collect())
    }

    fn next(&mut self) -> Result<Choice> {
        match self {
            Schedule::Sampled(rng) => Ok(Choice::Uniform(rng.gen())),
            Schedule::Forced(queue) => queue
                .pop_front()
                .map(Choice::Forced)
                .ok_or_else(|| Error::Precondition("forced record is too short".into())),
        }
    }
}

/// Bookkeeping shared by the protocols: every measurement and its
/// conditional probability.
#[derive(Debug, Clone, Default)]
pub struct Ledger {
    pub outcomes: Vec<Label>,
    pub probabilities: Vec<f64>,
    /// Mass on the outcomes not taken, summed from the distribution.
    pub other_mass: Vec<f64>,
}

impl Ledger {
    /// A measurement whose outcome comes from the schedule.
    pub fn measure<T: Real>(
        &mut self,
        theory: &SkeletalData<T>,
        state: &FusionState<T>,
        i: usize,
        schedule: &mut Schedule,
    ) -> Result<Measured<T>> {
        let m = state.fuse_measure(theory, i, schedule.next()?)?;
        self.record(&m);
        Ok(m)
    }

    /// A fusion with a single possible outcome, such as an abelian charge
    /// merging into its neighbour.
    pub fn absorb<T: Real>(
        &mut self,
        theory: &SkeletalData<T>,
        state: &FusionState<T>,
        i: usize,
    ) -> Result<FusionState<T>> {
        let m = state.fuse_measure(theory, i, Choice::Uniform(0.0))?;
        if (m.probability.as_f64() - 1.0).abs() > 1e-9 {
            return Err(Error::Precondition(format!(
                "fusion at {i} is not deterministic"
            )));
        }
        Ok(m.state)
    }

    fn record<T: Real>(&mut self, m: &Measured<T>) {
        self.outcomes.push(m.outcome);
        self.probabilities.push(m.probability.as_f64());
        self.other_mass.push(
            m.distribution
                .iter()
                .filter(|(l, _)| *l != m.outcome)
                .fold(0.0, |a, (_, p)| a + p.as_f64()),
        );
    }

    pub fn joint_probability(&self) -> f64 {
        self.probabilities.iter().product()
    }
}

/// Every sequence of `len` symbols from `alphabet`, first position most
/// significant.
pub fn all_records(alphabet: &[Label], len: usize) -> impl Iterator<Item = Vec<Label>> + '_ {
    let base = alphabet.len();
    let total = base.checked_pow(len as u32).unwrap_or(0);
    (0..total).map(move |mut n| {
        let mut rec = vec![Label::VACUUM; len];
        for slot in rec.iter_mut().rev() {
            *slot = alphabet[n % base];
            n /= base;
        }
        rec
    })
}
