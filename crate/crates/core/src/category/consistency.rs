use serde::Serialize;

use super::fusion::Label;
use super::skeletal::SkeletalData;
use crate::error::Result;
use crate::scalar::{zero, Real, C};

/// Largest equation residual and the labels where it occurred.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Residual {
    pub max: f64,
    pub equations: usize,
    pub worst: Option<[u16; 5]>,
}

impl Residual {
    fn new() -> Self {
        Self {
            max: 0.0,
            equations: 0,
            worst: None,
        }
    }

    fn record(&mut self, value: f64, at: [Label; 5]) {
        self.equations += 1;
        if value > self.max || value.is_nan() {
            self.max = value;
            self.worst = Some(at.map(|l| l.0));
        }
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max <= tol
    }
}

/// Pentagon residual over every label assignment.
pub fn check_pentagon<T: Real>(theory: &SkeletalData<T>) -> Result<Residual> {
    let rules = theory.rules();
    let ls: Vec<Label> = rules.labels().collect();
    let mut res = Residual::new();
    for &a in &ls {
        for &b in &ls {
            for &c in &ls {
                for &d in &ls {
                    for &e in &ls {
                        for p in rules.fuse(a, b) {
                            for q in rules
                                .fuse(p, c)
                                .into_iter()
                                .filter(|&q| rules.admissible(q, d, e))
                            {
                                for r in rules
                                    .fuse(c, d)
                                    .into_iter()
                                    .filter(|&r| rules.admissible(p, r, e))
                                {
                                    for s in rules
                                        .fuse(b, r)
                                        .into_iter()
                                        .filter(|&s| rules.admissible(a, s, e))
                                    {
                                        let lhs = theory.f_entry([a, b, r, e], s, p)?
                                            * theory.f_entry([p, c, d, e], r, q)?;
                                        let mut rhs = zero();
                                        for t in rules.fuse(b, c) {
                                            if rules.admissible(a, t, q)
                                                && rules.admissible(t, d, s)
                                            {
                                                rhs = rhs
                                                    + theory.f_entry([b, c, d, s], r, t)?
                                                        * theory.f_entry([a, t, d, e], s, q)?
                                                        * theory.f_entry([a, b, c, q], t, p)?;
                                            }
                                        }
                                        res.record((lhs - rhs).norm().as_f64(), [a, b, c, d, e]);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(res)
}

/// Both hexagon residuals, the second using `(R^{-1})^{ab}_c = (R^{ba}_c)^{-1}`.
pub fn check_hexagon<T: Real>(theory: &SkeletalData<T>) -> Result<Residual> {
    let rules = theory.rules();
    let ls: Vec<Label> = rules.labels().collect();
    let mut res = Residual::new();
    for inverse in [false, true] {
        let rr = |a, b, c| {
            if inverse {
                theory.r_inv(a, b, c)
            } else {
                theory.r(a, b, c)
            }
        };
        for &a in &ls {
            for &b in &ls {
                for &c in &ls {
                    for &d in &ls {
                        for x in rules
                            .fuse(a, b)
                            .into_iter()
                            .filter(|&x| rules.admissible(x, c, d))
                        {
                            for z in rules
                                .fuse(a, c)
                                .into_iter()
                                .filter(|&z| rules.admissible(b, z, d))
                            {
                                let mut lhs: C<T> = zero();
                                for y in rules
                                    .fuse(b, c)
                                    .into_iter()
                                    .filter(|&y| rules.admissible(a, y, d))
                                {
                                    lhs = lhs
                                        + theory.f_entry([b, c, a, d], z, y)?
                                            * rr(a, y, d)?
                                            * theory.f_entry([a, b, c, d], y, x)?;
                                }
                                let rhs = rr(a, c, z)?
                                    * theory.f_entry([b, a, c, d], z, x)?
                                    * rr(a, b, x)?;
                                res.record((lhs - rhs).norm().as_f64(), [a, b, c, d, x]);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(res)
}

/// Largest `|F^dagger F - I|` over all blocks.
pub fn f_unitarity_defect<T: Real>(theory: &SkeletalData<T>) -> Result<f64> {
    theory
        .f_blocks()
        .map(|(_, b)| b.matrix.unitarity_defect().map(Real::as_f64))
        .try_fold(0.0f64, |m, d| d.map(|d| m.max(d)))
}

/// Largest `|d_a d_b - sum_c N^{ab}_c d_c|`.
pub fn dimension_defect<T: Real>(theory: &SkeletalData<T>) -> f64 {
    let rules = theory.rules();
    let mut worst = 0.0f64;
    for a in rules.labels() {
        for b in rules.labels() {
            let sum = rules
                .fuse(a, b)
                .into_iter()
                .fold(T::zero(), |s, c| s + theory.dim(c));
            worst = worst.max((theory.dim(a) * theory.dim(b) - sum).abs().as_f64());
        }
    }
    worst
}

/// Summary of every structural check.
#[derive(Debug, Clone, Serialize)]
pub struct ConsistencyReport {
    pub fusion_violations: Vec<String>,
    pub pentagon: Residual,
    pub unitarity_defect: f64,
    pub dimension_defect: f64,
    pub hexagon: Option<Residual>,
}

impl ConsistencyReport {
    /// `hexagon_tol` is separate because R-data usually comes from the solver.
    pub fn passes(&self, tol: f64, hexagon_tol: f64) -> bool {
        self.fusion_violations.is_empty()
            && self.pentagon.passes(tol)
            && self.unitarity_defect <= tol
            && self.dimension_defect <= tol
            && self.hexagon.map_or(true, |h| h.passes(hexagon_tol))
    }
}

pub fn check_all<T: Real>(theory: &SkeletalData<T>) -> Result<ConsistencyReport> {
    Ok(ConsistencyReport {
        fusion_violations: theory
            .rules()
            .validate()
            .iter()
            .map(ToString::to_string)
            .collect(),
        pentagon: check_pentagon(theory)?,
        unitarity_defect: f_unitarity_defect(theory)?,
        dimension_defect: dimension_defect(theory),
        hexagon: if theory.has_braiding() {
            Some(check_hexagon(theory)?)
        } else {
            None
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{FusionRules, Label};
    use crate::library::{build_ising, Kappa};
    use crate::scalar::{one, re};
    use std::collections::BTreeMap;

    #[test]
    fn flipped_sign_breaks_pentagon() {
        let mut t = build_ising::<f64>(Kappa::Plus).unwrap();
        let q = Label(2);
        for (key, block) in t.f_blocks_mut() {
            if *key == [q, q, q, q] {
                block.matrix[(1, 1)] = -block.matrix[(1, 1)];
            }
        }
        let r = check_pentagon(&t).unwrap();
        assert!(r.max >= 0.1, "{r:?}");
        assert!(r.worst.is_some());
    }

    #[test]
    fn trivial_r_breaks_hexagon() {
        let base = build_ising::<f64>(Kappa::Minus).unwrap();
        let r: BTreeMap<_, _> = base
            .rules()
            .triples()
            .map(|(a, b, c)| ([a, b, c], one()))
            .collect();
        let t = base.with_braiding(r).unwrap();
        assert!(check_hexagon(&t).unwrap().max >= 0.1);
    }

    #[test]
    fn abelian_z2_braidings() {
        let rules = FusionRules::from_table(
            vec!["0".into(), "1".into()],
            vec![Label(0), Label(1)],
            |a, b| vec![Label(a.0 ^ b.0)],
        )
        .unwrap();
        for sign in [1.0, -1.0] {
            let r = BTreeMap::from([([Label(1), Label(1), Label(0)], re(sign))]);
            let t = SkeletalData::<f64>::from_fn(rules.clone(), |_, _, _| one())
                .unwrap()
                .with_braiding(r)
                .unwrap();
            assert!(check_hexagon(&t).unwrap().max < 1e-12);
            assert!(check_all(&t).unwrap().passes(1e-12, 1e-12));
        }
    }

    #[test]
    fn missing_r_is_reported() {
        let t = build_ising::<f64>(Kappa::Plus).unwrap();
        assert!(check_hexagon(&t).is_err());
    }
}
