use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{AbelianGroup, SignTable};
use crate::category::{FusionRules, Label, SkeletalData};
use crate::error::{Error, Result};
use crate::scalar::{one, re, Real};

/// Frobenius-Schur indicator of the non-abelian label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kappa {
    Plus,
    Minus,
}

impl Kappa {
    pub fn sign(self) -> i8 {
        match self {
            Kappa::Plus => 1,
            Kappa::Minus => -1,
        }
    }

    pub fn from_sign(s: i64) -> Result<Self> {
        match s {
            1 => Ok(Kappa::Plus),
            -1 => Ok(Kappa::Minus),
            _ => Err(Error::Precondition(format!(
                "kappa must be +1 or -1, got {s}"
            ))),
        }
    }

    pub fn both() -> [Kappa; 2] {
        [Kappa::Plus, Kappa::Minus]
    }
}

impl fmt::Display for Kappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if *self == Kappa::Plus { "+1" } else { "-1" })
    }
}

/// Ising data with labels `0, 1, q`:
/// `F^{qqq}_q = kappa/sqrt2 [[1,1],[1,-1]]`, `F^{1q1}_q = F^{q1q}_1 = -1`, all other entries 1.
pub fn build_ising<T: Real>(kappa: Kappa) -> Result<SkeletalData<T>> {
    let names = ["0", "1", "q"].map(String::from).to_vec();
    let (v, e, q) = (Label(0), Label(1), Label(2));
    let rules = FusionRules::from_table(names, vec![v, e, q], |a, b| match (a.0, b.0) {
        (0, x) | (x, 0) => vec![Label(x)],
        (1, 1) => vec![v],
        (2, 2) => vec![v, e],
        _ => vec![q],
    })?;
    let s = T::lit(kappa.sign() as f64) / T::lit(2.0).sqrt();
    SkeletalData::from_fn(rules, |key, f, ee| match key {
        [a, b, c, d] if [a, b, c, d] == [q, q, q, q] => {
            if f == e && ee == e {
                re(-s)
            } else {
                re(s)
            }
        }
        k if k == [e, q, e, q] || k == [q, e, q, e] => re(-T::one()),
        _ => one(),
    })
}

/// Tambara-Yamagami data over `group` with `tau = kappa / sqrt|G|`.
///
/// Labels are the group elements followed by `q`. Nontrivial blocks:
/// `F^{aqb}_q = F^{qaq}_b = chi(a,b)` and `[F^{qqq}_q]_{fe} = tau conj(chi(e,f))`.
pub fn tambara_yamagami<T: Real>(group: &AbelianGroup, kappa: Kappa) -> Result<SkeletalData<T>> {
    let order = group.order();
    let q = Label::from(order);
    let mut names: Vec<String> = (0..order).map(|g| group.element_name(g)).collect();
    names.push("q".into());
    let mut dual: Vec<Label> = (0..order).map(|g| Label::from(group.inv(g))).collect();
    dual.push(q);
    let rules = FusionRules::from_table(names, dual, |a, b| match (a == q, b == q) {
        (false, false) => vec![Label::from(group.mul(a.idx(), b.idx()))],
        (true, true) => (0..order).map(Label::from).collect(),
        _ => vec![q],
    })?;
    let tau = T::lit(kappa.sign() as f64) / T::lit(order as f64).sqrt();
    SkeletalData::from_fn(rules, |[a, b, c, d], f, e| {
        let g = |x: Label| x != q;
        match (g(a), g(b), g(c), g(d)) {
            (true, false, true, false) => group.chi(a.idx(), c.idx()),
            (false, true, false, true) => group.chi(b.idx(), d.idx()),
            (false, false, false, false) => group.chi::<T>(e.idx(), f.idx()).conj() * tau,
            _ => one(),
        }
    })
}

/// Tambara-Yamagami over Z_2^n with the dot-product bicharacter.
pub fn build_tambara_yamagami<T: Real>(rank: u32, kappa: Kappa) -> Result<SkeletalData<T>> {
    if rank == 0 {
        return Err(Error::Precondition("rank must be at least 1".into()));
    }
    tambara_yamagami(&AbelianGroup::elementary(rank), kappa)
}

/// Tambara-Yamagami over Z_2^n with a custom sign table.
pub fn build_tambara_yamagami_with<T: Real>(
    table: SignTable,
    kappa: Kappa,
) -> Result<SkeletalData<T>> {
    tambara_yamagami(&AbelianGroup::Elementary(table), kappa)
}

/// Named constructions accepted by the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheorySpec {
    Ising { kappa: Kappa },
    TambaraYamagami { rank: u32, kappa: Kappa },
    TambaraYamagamiCyclic { order: u32, kappa: Kappa },
}

impl TheorySpec {
    pub fn build<T: Real>(&self) -> Result<SkeletalData<T>> {
        match *self {
            TheorySpec::Ising { kappa } => build_ising(kappa),
            TheorySpec::TambaraYamagami { rank, kappa } => build_tambara_yamagami(rank, kappa),
            TheorySpec::TambaraYamagamiCyclic { order, kappa } => {
                if order < 2 {
                    return Err(Error::Precondition(
                        "cyclic order must be at least 2".into(),
                    ));
                }
                tambara_yamagami(&AbelianGroup::Cyclic(order), kappa)
            }
        }
    }

    pub fn id(&self) -> String {
        match *self {
            TheorySpec::Ising { kappa } => format!("ising(kappa={kappa})"),
            TheorySpec::TambaraYamagami { rank, kappa } => format!("ty(Z2^{rank},kappa={kappa})"),
            TheorySpec::TambaraYamagamiCyclic { order, kappa } => {
                format!("ty(Z{order},kappa={kappa})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{check_pentagon, dimension_defect, f_unitarity_defect};

    #[test]
    fn ising_pentagon() {
        for k in Kappa::both() {
            let t = build_ising::<f64>(k).unwrap();
            assert!(check_pentagon(&t).unwrap().max < 1e-14);
            assert!(f_unitarity_defect(&t).unwrap() < 1e-14);
        }
    }

    #[test]
    fn ty_pentagon_all_ranks() {
        for n in 1..=3 {
            for k in Kappa::both() {
                let t = build_tambara_yamagami::<f64>(n, k).unwrap();
                let p = check_pentagon(&t).unwrap();
                assert!(p.max < 1e-13, "n={n} {k}: {p:?}");
                assert!(dimension_defect(&t) < 1e-12);
            }
        }
    }

    #[test]
    fn cyclic_ty_pentagon() {
        for m in [3, 4, 5] {
            let t: SkeletalData<f64> =
                tambara_yamagami(&AbelianGroup::Cyclic(m), Kappa::Plus).unwrap();
            let p = check_pentagon(&t).unwrap();
            assert!(p.max < 1e-13, "Z{m}: {p:?}");
        }
    }

    #[test]
    fn single_precision_build() {
        let t = build_ising::<f32>(Kappa::Minus).unwrap();
        assert!(check_pentagon(&t).unwrap().max < 1e-6);
    }

    #[test]
    fn ty_rank_one_is_ising() {
        for k in Kappa::both() {
            let a = build_ising::<f64>(k).unwrap();
            let b = build_tambara_yamagami::<f64>(1, k).unwrap();
            for ((ka, fa), (kb, fb)) in a.f_blocks().zip(b.f_blocks()) {
                assert_eq!(ka, kb);
                assert!(fa.matrix.max_abs_diff(&fb.matrix).unwrap() < 1e-15);
            }
        }
    }

    #[test]
    fn spec_kappa_parse() {
        assert_eq!(Kappa::from_sign(-1).unwrap(), Kappa::Minus);
        assert!(Kappa::from_sign(0).is_err());
    }

    #[test]
    fn ising_f_symbols() {
        for k in Kappa::both() {
            let t = build_ising::<f64>(k).unwrap();
            let (v, e, q) = (Label(0), Label(1), Label(2));
            let h = 1.0 / 2f64.sqrt() * k.sign() as f64;
            let f = t.f(q, q, q, q).unwrap();
            for (row, col, want) in [(0, 0, h), (0, 1, h), (1, 0, h), (1, 1, -h)] {
                assert!((f.matrix[(row, col)].re - want).abs() < 1e-15);
            }
            assert_eq!(t.f_entry([e, q, e, q], q, q).unwrap().re, -1.0);
            assert_eq!(t.f_entry([q, e, q, e], q, q).unwrap().re, -1.0);
            for key in t
                .f_blocks()
                .map(|(k, _)| *k)
                .filter(|k| k[..3].contains(&v))
            {
                let m = &t.f(key[0], key[1], key[2], key[3]).unwrap().matrix;
                assert!(
                    m.max_abs_diff(&crate::algebra::CMatrix::identity(m.rows()))
                        .unwrap()
                        < 1e-15
                );
            }
        }
    }

    #[test]
    fn ty_rank_two_rows_balanced() {
        let t = build_tambara_yamagami::<f64>(2, Kappa::Plus).unwrap();
        let q = t.label("q").unwrap();
        let f = t.f(q, q, q, q).unwrap();
        for row in 1..4 {
            let plus = (0..4).filter(|&c| f.matrix[(row, c)].re > 0.0).count();
            assert_eq!(plus, 2);
        }
    }

    #[test]
    fn ty_leg_bending_is_trivial_on_group_legs() {
        use crate::category::{leg_bend_k, leg_bend_l};
        for n in 1..=3 {
            let t = build_tambara_yamagami::<f64>(n, Kappa::Minus).unwrap();
            let q = t.label("q").unwrap();
            for j in t.rules().fuse(q, q) {
                assert!((leg_bend_k(&t, q, j, q).unwrap() - 1.0).norm() < 1e-12);
                assert!((leg_bend_l(&t, j, q, q).unwrap() - 1.0).norm() < 1e-12);
            }
        }
    }
}
