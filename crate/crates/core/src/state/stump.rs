use super::fusion_state::{Choice, FusionState};
use super::shape::Shape;
use crate::algebra::CMatrix;
use crate::category::{Label, SkeletalData};
use crate::error::{Error, Result};
use crate::scalar::{one, Real, C};

/// The two orientations of an abelian line `h` joining the two anyons of a
/// `q q` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stump {
    A,
    B,
}

/// Diagonal action on `V^{qq} = (+)_j V^{qq}_j` (channels in label order):
/// `B_h = [F^{qhq}_j]_{qq}` and `A_h = conj(B_h)`.
pub fn stump_matrix<T: Real>(
    theory: &SkeletalData<T>,
    h: Label,
    kind: Stump,
) -> Result<CMatrix<T>> {
    let q = theory.label("q")?;
    let rules = theory.rules();
    if !rules.is_abelian(h) {
        return Err(Error::Precondition("stump charge must be abelian".into()));
    }
    let diag = rules
        .fuse(q, q)
        .into_iter()
        .map(|j| {
            let b = theory.f_entry([q, h, q, j], q, q)?;
            Ok(match kind {
                Stump::A => b.conj(),
                Stump::B => b,
            })
        })
        .collect::<Result<Vec<C<T>>>>()?;
    Ok(CMatrix::diag(&diag))
}

/// The same line realised by creating an `h, h*` pair between the two
/// anyons and fusing each half into its neighbour. Agrees with
/// [`stump_matrix`] for [`Stump::A`] up to a global phase.
pub fn stump_by_fusion<T: Real>(theory: &SkeletalData<T>, h: Label) -> Result<CMatrix<T>> {
    let q = theory.label("q")?;
    let channels = theory.rules().fuse(q, q);
    let mut diag = Vec::new();
    for &j in &channels {
        let pair =
            FusionState::from_entries(theory, vec![q, q], Shape::pairwise(2), [(vec![j], one())])?;
        let created = pair.pair_create(theory, 1, h)?;
        let left = created.fuse_measure(theory, 0, Choice::Forced(q))?.state;
        let right = left.fuse_measure(theory, 1, Choice::Forced(q))?.state;
        diag.push(right.amplitude(&[j]));
    }
    Ok(CMatrix::diag(&diag))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library::{build_ising, build_tambara_yamagami, Kappa};
    use crate::scalar::re;

    #[test]
    fn vacuum_stump_is_identity() {
        let t = build_tambara_yamagami::<f64>(2, Kappa::Minus).unwrap();
        for kind in [Stump::A, Stump::B] {
            let m = stump_matrix(&t, Label::VACUUM, kind).unwrap();
            assert!(m.max_abs_diff(&CMatrix::identity(4)).unwrap() < 1e-15);
        }
    }

    #[test]
    fn ising_stumps_are_pauli_z() {
        for k in Kappa::both() {
            let t = build_ising::<f64>(k).unwrap();
            let z = CMatrix::diag(&[re(1.0), re(-1.0)]);
            for kind in [Stump::A, Stump::B] {
                assert!(
                    stump_matrix(&t, Label(1), kind)
                        .unwrap()
                        .max_abs_diff(&z)
                        .unwrap()
                        < 1e-15
                );
            }
        }
    }

    #[test]
    fn inverse_pair() {
        let t = build_tambara_yamagami::<f64>(2, Kappa::Plus).unwrap();
        for h in 0..4 {
            let a = stump_matrix(&t, Label(h), Stump::A).unwrap();
            let b = stump_matrix(&t, Label(h), Stump::B).unwrap();
            assert!(
                a.matmul(&b)
                    .unwrap()
                    .max_abs_diff(&CMatrix::identity(4))
                    .unwrap()
                    < 1e-12
            );
        }
        let q = t.label("q").unwrap();
        assert!(stump_matrix(&t, q, Stump::A).is_err());
    }

    #[test]
    fn fusion_realisation_matches_a() {
        for n in 1..=2 {
            let t = build_tambara_yamagami::<f64>(n, Kappa::Minus).unwrap();
            for h in 0..(1u16 << n) {
                let a = stump_matrix(&t, Label(h), Stump::A).unwrap();
                let f = stump_by_fusion(&t, Label(h)).unwrap();
                let phase = f[(0, 0)] / a[(0, 0)];
                assert!((phase.norm() - 1.0).abs() < 1e-12);
                assert!(
                    f.max_abs_diff(&a.scale(phase)).unwrap() < 1e-12,
                    "n={n} h={h}"
                );
            }
        }
    }
}
