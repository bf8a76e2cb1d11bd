use serde::Serialize;

use super::fusion::Label;
use super::skeletal::SkeletalData;
use crate::algebra::CMatrix;
use crate::error::{Error, Result};
use crate::scalar::{re, to_c64, zero, Real, C};

/// `K^{ab}_c = sqrt(d_a d_b / d_c) conj([F^{a* a b}_b]_{c,0})`.
pub fn leg_bend_k<T: Real>(t: &SkeletalData<T>, a: Label, b: Label, c: Label) -> Result<C<T>> {
    let ad = t.rules().dual(a);
    let f = t.f_entry([ad, a, b, b], c, Label::VACUUM)?;
    Ok(f.conj() * bend_norm(t, a, b, c))
}

/// `L^{ab}_c = sqrt(d_a d_b / d_c) [F^{a b b*}_a]_{0,c}`.
pub fn leg_bend_l<T: Real>(t: &SkeletalData<T>, a: Label, b: Label, c: Label) -> Result<C<T>> {
    let bd = t.rules().dual(b);
    let f = t.f_entry([a, b, bd, a], Label::VACUUM, c)?;
    Ok(f * bend_norm(t, a, b, c))
}

fn bend_norm<T: Real>(t: &SkeletalData<T>, a: Label, b: Label, c: Label) -> T {
    (t.dim(a) * t.dim(b) / t.dim(c)).sqrt()
}

/// Pivotal coefficient `t_a = d_a conj([F^{a a* a}_a]_{00})`.
pub fn pivotal<T: Real>(t: &SkeletalData<T>, a: Label) -> Result<C<T>> {
    let ad = t.rules().dual(a);
    let f = t.f_entry([a, ad, a, a], Label::VACUUM, Label::VACUUM)?;
    Ok(f.conj() * t.dim(a))
}

/// Frobenius-Schur indicator of a self-dual label, `None` otherwise.
pub fn fs_indicator<T: Real>(t: &SkeletalData<T>, a: Label, tol: f64) -> Result<Option<i8>> {
    if t.rules().dual(a) != a {
        return Ok(None);
    }
    let p = to_c64(pivotal(t, a)?);
    for s in [1i8, -1] {
        if (p.re - s as f64).abs() <= tol && p.im.abs() <= tol {
            return Ok(Some(s));
        }
    }
    Err(Error::Numerical(format!(
        "pivotal coefficient {p} of a self-dual label is not +-1"
    )))
}

/// `theta_a = d_a^{-1} sum_c d_c R^{aa}_c`.
pub fn spin<T: Real>(t: &SkeletalData<T>, a: Label) -> Result<C<T>> {
    let sum = t
        .rules()
        .fuse(a, a)
        .into_iter()
        .try_fold(zero(), |s, c| Ok::<_, Error>(s + t.r(a, a, c)? * t.dim(c)))?;
    Ok(sum / t.dim(a))
}

/// `t_a conj(R^{a* a}_0)`, an independent route to the spin.
pub fn spin_from_pivotal<T: Real>(t: &SkeletalData<T>, a: Label) -> Result<C<T>> {
    let ad = t.rules().dual(a);
    Ok(pivotal(t, a)? * t.r(ad, a, Label::VACUUM)?.conj())
}

/// Smallest `k <= 64` with `z^k = 1`.
pub fn root_of_unity_order(z: C<f64>, tol: f64) -> Option<u32> {
    let mut w = z;
    for k in 1..=64 {
        if (w - C::new(1.0, 0.0)).norm() <= tol {
            return Some(k);
        }
        w *= z;
    }
    None
}

/// `M^{ab}_c = R^{ba}_c R^{ab}_c`.
pub fn monodromy<T: Real>(t: &SkeletalData<T>, a: Label, b: Label, c: Label) -> Result<C<T>> {
    Ok(t.r(b, a, c)? * t.r(a, b, c)?)
}

/// `sqrt(sum_c d_c^2)`.
pub fn total_dimension<T: Real>(t: &SkeletalData<T>) -> T {
    t.dims().iter().fold(T::zero(), |s, &d| s + d * d).sqrt()
}

/// `S_ab = D^{-1} sum_c theta_c / (theta_a theta_b) N^{a b*}_c d_c`.
pub fn s_matrix<T: Real>(t: &SkeletalData<T>) -> Result<CMatrix<T>> {
    let rules = t.rules();
    let thetas: Vec<C<T>> = rules.labels().map(|a| spin(t, a)).collect::<Result<_>>()?;
    let dd = total_dimension(t);
    let l = rules.size();
    let mut s = CMatrix::zeros(l, l);
    for a in rules.labels() {
        for b in rules.labels() {
            let sum = rules
                .fuse(a, rules.dual(b))
                .into_iter()
                .fold(zero::<T>(), |acc, c| acc + thetas[c.idx()] * t.dim(c));
            s[(a.idx(), b.idx())] = sum / (thetas[a.idx()] * thetas[b.idx()]) / re(dd);
        }
    }
    Ok(s)
}

/// Quantities derived from skeletal data, in `f64`.
#[derive(Debug, Clone, Serialize)]
pub struct DerivedData {
    pub dims: Vec<f64>,
    pub total_dimension: f64,
    pub pivotal: Vec<C<f64>>,
    pub fs: Vec<Option<i8>>,
    pub spins: Option<Vec<C<f64>>>,
    /// Order of each spin as a root of unity.
    pub spin_orders: Option<Vec<Option<u32>>>,
    pub modular: Option<bool>,
}

pub fn derive<T: Real>(t: &SkeletalData<T>, tol: f64) -> Result<DerivedData> {
    let rules = t.rules();
    let pivotal = rules
        .labels()
        .map(|a| pivotal(t, a).map(to_c64))
        .collect::<Result<Vec<_>>>()?;
    let fs = rules
        .labels()
        .map(|a| fs_indicator(t, a, tol))
        .collect::<Result<Vec<_>>>()?;
    let (spins, spin_orders, modular) = if t.has_braiding() {
        let spins = rules
            .labels()
            .map(|a| spin(t, a).map(to_c64))
            .collect::<Result<Vec<_>>>()?;
        for (a, theta) in rules.labels().zip(&spins) {
            let other = to_c64(spin_from_pivotal(t, a)?);
            if (theta - other).norm() > tol {
                return Err(Error::Numerical(format!(
                    "spin of {} is {theta} or {other}",
                    rules.name(a)
                )));
            }
        }
        let orders = spins.iter().map(|&z| root_of_unity_order(z, tol)).collect();
        let defect = s_matrix(t)?.unitarity_defect()?.as_f64();
        (Some(spins), Some(orders), Some(defect <= tol))
    } else {
        (None, None, None)
    };
    Ok(DerivedData {
        dims: t.dims().iter().map(|d| d.as_f64()).collect(),
        total_dimension: total_dimension(t).as_f64(),
        pivotal,
        fs,
        spins,
        spin_orders,
        modular,
    })
}
