use crate::category::{Label, SkeletalData};
use crate::error::Result;
use crate::scalar::Real;
use crate::state::FusionState;

/// `b* a* a b` created as two nested pairs from the vacuum, expressed in the
/// pairwise basis `((b* a*)_{e*} (a b)_e)_0`.
pub fn make_edit_with<T: Real>(
    theory: &SkeletalData<T>,
    a: Label,
    b: Label,
) -> Result<FusionState<T>> {
    let rules = theory.rules();
    FusionState::vacuum()
        .pair_create(theory, 0, rules.dual(b))?
        .pair_create(theory, 1, rules.dual(a))?
        .to_pairwise(theory)
}

/// Maximally entangled pair of `q q` qudits.
pub fn make_edit<T: Real>(theory: &SkeletalData<T>) -> Result<FusionState<T>> {
    let q = theory.label("q")?;
    make_edit_with(theory, q, q)
}
