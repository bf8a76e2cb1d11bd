use std::collections::BTreeMap;

use rand::Rng;

use super::fusion::{FusionRules, Label};
use super::skeletal::{RKey, SkeletalData};
use crate::error::{Error, Result};
use crate::scalar::{cis, one, Real, C};

/// Vertex rescaling `u^{ab}_c`, unimodular, with `u^{a0}_a = u^{0a}_a = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeTransform<T: Real> {
    u: BTreeMap<RKey, C<T>>,
}

impl<T: Real> GaugeTransform<T> {
    pub fn identity(rules: &FusionRules) -> Self {
        Self {
            u: rules
                .triples()
                .map(|(a, b, c)| ([a, b, c], one()))
                .collect(),
        }
    }

    pub fn random<R: Rng + ?Sized>(rules: &FusionRules, rng: &mut R) -> Self {
        let u = rules
            .triples()
            .map(|(a, b, c)| {
                let z = if a.is_vacuum() || b.is_vacuum() {
                    one()
                } else {
                    cis(T::lit(rng.gen_range(0.0..std::f64::consts::TAU)))
                };
                ([a, b, c], z)
            })
            .collect();
        Self { u }
    }

    pub fn from_map(rules: &FusionRules, u: BTreeMap<RKey, C<T>>, tol: f64) -> Result<Self> {
        for (a, b, c) in rules.triples() {
            let z = *u
                .get(&[a, b, c])
                .ok_or_else(|| Error::BadGauge(format!("missing u({a:?},{b:?};{c:?})")))?;
            if ((z.norm() - T::one()).abs()).as_f64() > tol {
                return Err(Error::BadGauge("phases must be unimodular".into()));
            }
            if (a.is_vacuum() || b.is_vacuum()) && (z - one()).norm().as_f64() > tol {
                return Err(Error::BadGauge("vacuum vertices must stay fixed".into()));
            }
        }
        Ok(Self { u })
    }

    pub fn vertex(&self, a: Label, b: Label, c: Label) -> C<T> {
        self.u.get(&[a, b, c]).copied().unwrap_or_else(one)
    }

    pub fn apply(&self, theory: &SkeletalData<T>) -> Result<SkeletalData<T>> {
        let mut out = theory.clone();
        for (&[a, b, c, d], block) in out.f_blocks_mut() {
            for (i, &f) in block.rows.iter().enumerate() {
                for (j, &e) in block.cols.iter().enumerate() {
                    let factor = self.vertex(a, f, d) * self.vertex(b, c, f)
                        / (self.vertex(a, b, e) * self.vertex(e, c, d));
                    block.matrix[(i, j)] = block.matrix[(i, j)] * factor;
                }
            }
        }
        if let Some(r) = out.r_symbols_mut() {
            for (&[a, b, c], value) in r.iter_mut() {
                *value = *value * self.vertex(b, a, c) / self.vertex(a, b, c);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{check_hexagon, check_pentagon, spin};
    use crate::library::Kappa;
    use crate::scalar::cis;
    use crate::testutil::{ising, ty};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_changes_nothing() {
        let t = ising(Kappa::Plus);
        assert_eq!(GaugeTransform::identity(t.rules()).apply(&t).unwrap(), t);
    }

    #[test]
    fn random_gauge_keeps_consistency_and_spin() {
        let t = ising(Kappa::Minus);
        let q = Label(2);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let g = GaugeTransform::random(t.rules(), &mut rng)
                .apply(&t)
                .unwrap();
            assert!(check_pentagon(&g).unwrap().max < 1e-9);
            assert!(check_hexagon(&g).unwrap().max < 1e-7);
            assert!((spin(&g, q).unwrap() - spin(&t, q).unwrap()).norm() < 1e-12);
        }
    }

    #[test]
    fn self_braiding_is_invariant() {
        let t = ty(2);
        let q = t.label("q").unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let g = GaugeTransform::random(t.rules(), &mut rng)
            .apply(&t)
            .unwrap();
        for c in t.rules().fuse(q, q) {
            assert!((g.r(q, q, c).unwrap() - t.r(q, q, c).unwrap()).norm() < 1e-12);
        }
    }

    #[test]
    fn from_map_validates() {
        let t = ising(Kappa::Plus);
        let rules = t.rules();
        let base: BTreeMap<RKey, C<f64>> = rules
            .triples()
            .map(|(a, b, c)| ([a, b, c], one()))
            .collect();
        assert!(GaugeTransform::from_map(rules, base.clone(), 1e-12).is_ok());
        let mut bad = base.clone();
        bad.insert([Label(2), Label(2), Label(0)], one::<f64>() * 2.0);
        assert!(matches!(
            GaugeTransform::from_map(rules, bad, 1e-12),
            Err(Error::BadGauge(_))
        ));
        let mut vac = base;
        vac.insert([Label(0), Label(2), Label(2)], cis(0.3));
        assert!(GaugeTransform::from_map(rules, vac, 1e-12).is_err());
    }
}
