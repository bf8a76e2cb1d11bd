use crate::algebra::CMatrix;
use crate::category::{Label, SkeletalData};
use crate::error::{Error, Result};
use crate::scalar::{c, one, zero, Real, C};
use crate::state::{stump_matrix, Choice, FusionBasis, FusionState, Shape, Span, Stump};

fn pair_f<T: Real>(theory: &SkeletalData<T>) -> Result<CMatrix<T>> {
    let q = theory.label("q")?;
    let f = theory.f(q, q, q, q)?;
    if f.rows != theory.rules().fuse(q, q) || f.cols != f.rows {
        return Err(Error::Shape(
            "F^{qqq}_q is not indexed by the pair channels in order".into(),
        ));
    }
    Ok(f.matrix.clone())
}

/// `U_{g1,g2} = F^{qqq}_q B_{g2} (F^{qqq}_q)^dag B_{g1}` on a qubit or qudit
/// `V^{qq}`: a line `g1` across the pair followed by a line `g2` between a
/// spectator on the left and the pair's first anyon.
pub fn pauli_braidfree<T: Real>(
    theory: &SkeletalData<T>,
    g1: Label,
    g2: Label,
) -> Result<CMatrix<T>> {
    let f = pair_f(theory)?;
    let b1 = stump_matrix(theory, g1, Stump::B)?;
    let b2 = stump_matrix(theory, g2, Stump::B)?;
    f.matmul(&b2)?.matmul(&f.adjoint())?.matmul(&b1)
}

/// [`pauli_braidfree`] with `A` stumps, which is what the engine realises
/// with pair creations and fusions.
pub fn pauli_braidfree_a<T: Real>(
    theory: &SkeletalData<T>,
    g1: Label,
    g2: Label,
) -> Result<CMatrix<T>> {
    let f = pair_f(theory)?;
    let a1 = stump_matrix(theory, g1, Stump::A)?;
    let a2 = stump_matrix(theory, g2, Stump::A)?;
    f.matmul(&a2)?.matmul(&f.adjoint())?.matmul(&a1)
}

/// The same gate computed by the state engine on `(s (q q)_k)_q`: an `h, h*`
/// pair is created and each half fused into its neighbour, first between
/// the pair's anyons, then between the spectator and the pair.
pub fn pauli_by_fusion<T: Real>(
    theory: &SkeletalData<T>,
    g1: Label,
    g2: Label,
) -> Result<CMatrix<T>> {
    let q = theory.label("q")?;
    let shape = Shape::from_nodes(
        3,
        vec![
            Span {
                lo: 1,
                hi: 3,
                split: 2,
            },
            Span {
                lo: 0,
                hi: 3,
                split: 1,
            },
        ],
    )?;
    let basis = FusionBasis::enumerate(theory.rules(), vec![q; 3], shape, Some(q))?;
    let dim = basis.dim();
    let mut columns = Vec::with_capacity(dim);
    for k in 0..dim {
        let coords: Vec<C<T>> = (0..dim)
            .map(|i| if i == k { one() } else { zero() })
            .collect();
        let mut state = basis.state(theory, &coords)?;
        state = line(theory, &state, 1, g1, q)?;
        state = line(theory, &state, 0, g2, q)?;
        columns.push(basis.coordinates(theory, &state)?);
    }
    let data = (0..dim)
        .flat_map(|i| columns.iter().map(move |col| col[i]))
        .collect();
    CMatrix::from_vec(dim, dim, data)
}

fn line<T: Real>(
    theory: &SkeletalData<T>,
    state: &FusionState<T>,
    left: usize,
    h: Label,
    q: Label,
) -> Result<FusionState<T>> {
    if h.is_vacuum() {
        return Ok(state.clone());
    }
    let s = state.pair_create(theory, left + 1, h)?;
    let s = s.fuse_measure(theory, left, Choice::Forced(q))?.state;
    Ok(s.fuse_measure(theory, left + 1, Choice::Forced(q))?.state)
}

/// The single-qubit Pauli matrices `I, X, Y, Z`.
pub fn paulis<T: Real>() -> [CMatrix<T>; 4] {
    let (o, z, i) = (one::<T>(), zero::<T>(), c(T::zero(), T::one()));
    let m = |a: [C<T>; 4]| CMatrix::from_vec(2, 2, a.to_vec()).expect("2x2");
    [
        m([o, z, z, o]),
        m([z, o, o, z]),
        m([z, -i, i, z]),
        m([o, z, z, -o]),
    ]
}

/// `|tr(U^dag P)|` for `P = I, X, Y, Z`.
pub fn pauli_overlaps<T: Real>(u: &CMatrix<T>) -> Result<[f64; 4]> {
    let ps = paulis::<T>();
    let mut out = [0.0; 4];
    for (o, p) in out.iter_mut().zip(&ps) {
        *o = u.adjoint().matmul(p)?.trace().norm().as_f64();
    }
    Ok(out)
}
