use rand::Rng;
use rand_distr::StandardNormal;

use crate::category::{Label, SkeletalData};
use crate::error::{Error, Result};
use crate::scalar::{c, Real, C};
use crate::state::{FusionBasis, FusionState, Shape};

/// Basis of `2p` anyons of charge `q` in pairwise form; coordinate `k` lists
/// the pair channels `(k_1, ..., k_p)` with `k_1` most significant.
pub fn qudit_basis<T: Real>(theory: &SkeletalData<T>, pairs: usize) -> Result<FusionBasis> {
    let q = theory.label("q")?;
    FusionBasis::enumerate(
        theory.rules(),
        vec![q; 2 * pairs],
        Shape::pairwise(2 * pairs),
        None,
    )
}

pub fn qudit_state<T: Real>(
    theory: &SkeletalData<T>,
    pairs: usize,
    amps: &[C<T>],
) -> Result<FusionState<T>> {
    qudit_basis(theory, pairs)?.state(theory, amps)
}

pub fn qudit_amplitudes<T: Real>(
    theory: &SkeletalData<T>,
    state: &FusionState<T>,
) -> Result<Vec<C<T>>> {
    qudit_basis(theory, state.len() / 2)?.coordinates(theory, state)
}

/// Normalised complex Gaussian vector.
pub fn random_amplitudes<T: Real, R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<C<T>> {
    let v: Vec<(f64, f64)> = (0..dim)
        .map(|_| (rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    let norm = v.iter().map(|(a, b)| a * a + b * b).sum::<f64>().sqrt();
    v.into_iter()
        .map(|(a, b)| c(T::lit(a / norm), T::lit(b / norm)))
        .collect()
}

pub fn random_qudit_state<T: Real, R: Rng + ?Sized>(
    theory: &SkeletalData<T>,
    pairs: usize,
    rng: &mut R,
) -> Result<FusionState<T>> {
    let basis = qudit_basis(theory, pairs)?;
    basis.state(theory, &random_amplitudes(basis.dim(), rng))
}

/// Number of pair channels, which must all be abelian.
fn channels<T: Real>(theory: &SkeletalData<T>) -> Result<usize> {
    let q = theory.label("q")?;
    let ch = theory.rules().fuse(q, q);
    if ch
        .iter()
        .enumerate()
        .any(|(i, l)| l.idx() != i || !theory.rules().is_abelian(*l))
    {
        return Err(Error::Unsupported(
            "pair channels must be the abelian labels 0..|G|".into(),
        ));
    }
    Ok(ch.len())
}

/// `k_j -> k_j g` on pair `j` (1-based).
pub fn shift_pair<T: Real>(
    theory: &SkeletalData<T>,
    amps: &[C<T>],
    pairs: usize,
    j: usize,
    g: Label,
) -> Result<Vec<C<T>>> {
    let d = channels(theory)?;
    let stride = d.pow((pairs - j) as u32);
    let mut out = amps.to_vec();
    for (idx, &z) in amps.iter().enumerate() {
        let k = Label::from(idx / stride % d);
        let moved = theory
            .rules()
            .fuse_unique(k, g)
            .ok_or(Error::Unsupported("non-abelian shift".into()))?;
        out[idx - k.idx() * stride + moved.idx() * stride] = z;
    }
    Ok(out)
}

/// Multiplies the coordinate with pair channel `k_j` by `phase(k_j)`.
pub fn phase_pair<T: Real>(
    theory: &SkeletalData<T>,
    amps: &[C<T>],
    pairs: usize,
    j: usize,
    phase: impl Fn(Label) -> C<T>,
) -> Result<Vec<C<T>>> {
    let d = channels(theory)?;
    let stride = d.pow((pairs - j) as u32);
    Ok(amps
        .iter()
        .enumerate()
        .map(|(idx, &z)| z * phase(Label::from(idx / stride % d)))
        .collect())
}
