use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::category::{check_hexagon, fs_indicator, spin, Label, RKey, SkeletalData};
use crate::error::Result;
use crate::scalar::{from_c64, to_c64, Real, C};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub restarts: usize,
    pub max_iterations: usize,
    pub seed: u64,
    /// Solutions with a larger hexagon residual are discarded.
    pub keep_tolerance: f64,
    /// Grid the gauge invariants are rounded to before deduplication.
    pub dedup_grid: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            restarts: 200,
            max_iterations: 500,
            seed: 0,
            keep_tolerance: 1e-7,
            dedup_grid: 1e-5,
        }
    }
}

/// One gauge class of braidings for fixed F-data.
#[derive(Debug, Clone, PartialEq)]
pub struct BraidingSolution<T: Real> {
    pub r: BTreeMap<RKey, C<T>>,
    pub spins: Vec<Complex64>,
    pub fs_q: Option<i8>,
    /// Independent hexagon residual of the stored representative.
    pub residual: f64,
    key: Vec<i64>,
}

impl<T: Real> BraidingSolution<T> {
    /// Rounded gauge invariants identifying the class.
    pub fn key(&self) -> &[i64] {
        &self.key
    }

    pub fn theory(&self, f_data: &SkeletalData<T>) -> Result<SkeletalData<T>> {
        f_data
            .clone()
            .without_braiding()
            .with_braiding(self.r.clone())
    }
}

#[derive(Debug, Clone)]
pub struct SolveReport<T: Real> {
    pub classes: Vec<BraidingSolution<T>>,
    pub restarts: usize,
    pub converged: usize,
}

#[derive(Debug, Clone, Copy)]
enum Slot {
    One,
    Var(usize),
}

#[derive(Debug, Clone)]
struct Term {
    coef: Complex64,
    vars: Vec<(usize, f64)>,
}

/// Hexagon equations compiled to sums of `coef * exp(i sum_k s_k phi_k)`.
struct System {
    unknowns: Vec<RKey>,
    equations: Vec<Vec<Term>>,
}

impl System {
    fn compile<T: Real>(theory: &SkeletalData<T>) -> Result<Self> {
        let rules = theory.rules();
        let unknowns: Vec<RKey> = rules
            .triples()
            .filter(|(a, b, _)| !a.is_vacuum() && !b.is_vacuum())
            .map(|(a, b, c)| [a, b, c])
            .collect();
        let slot =
            |a: Label, b: Label, c: Label| match unknowns.iter().position(|k| *k == [a, b, c]) {
                Some(i) => Slot::Var(i),
                None => Slot::One,
            };
        let f = |k: [Label; 4], row: Label, col: Label| theory.f_entry(k, row, col).map(to_c64);
        let ls: Vec<Label> = rules.labels().filter(|l| !l.is_vacuum()).collect();
        let mut equations = Vec::new();
        for inverse in [false, true] {
            // R^{ab}_c, or (R^{ba}_c)^{-1} for the second hexagon.
            let r = |a, b, c| {
                if inverse {
                    (slot(b, a, c), -1.0)
                } else {
                    (slot(a, b, c), 1.0)
                }
            };
            for &a in &ls {
                for &b in &ls {
                    for &c in &ls {
                        for d in rules.labels() {
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
                                    let mut terms = Vec::new();
                                    for y in rules
                                        .fuse(b, c)
                                        .into_iter()
                                        .filter(|&y| rules.admissible(a, y, d))
                                    {
                                        let coef = f([b, c, a, d], z, y)? * f([a, b, c, d], y, x)?;
                                        terms.push(term(coef, &[r(a, y, d)]));
                                    }
                                    let coef = -f([b, a, c, d], z, x)?;
                                    terms.push(term(coef, &[r(a, c, z), r(a, b, x)]));
                                    equations.push(merge(terms));
                                }
                            }
                        }
                    }
                }
            }
        }
        equations.retain(|eq| !eq.is_empty());
        Ok(Self {
            unknowns,
            equations,
        })
    }

    fn residuals(&self, phi: &[f64], out: &mut Vec<Complex64>) {
        out.clear();
        out.extend(
            self.equations
                .iter()
                .map(|eq| eq.iter().map(|t| eval(t, phi)).sum::<Complex64>()),
        );
    }

    /// Returns `(J^T J, J^T r, |r|^2 / 2)` for the stacked real residual.
    fn normal_equations(&self, phi: &[f64]) -> (Vec<f64>, Vec<f64>, f64) {
        let u = self.unknowns.len();
        let mut jtj = vec![0.0; u * u];
        let mut jtr = vec![0.0; u];
        let mut cost = 0.0;
        let mut grad = vec![Complex64::new(0.0, 0.0); u];
        for eq in &self.equations {
            grad.iter_mut().for_each(|g| *g = Complex64::new(0.0, 0.0));
            let mut res = Complex64::new(0.0, 0.0);
            for t in eq {
                let v = eval(t, phi);
                res += v;
                for &(k, s) in &t.vars {
                    grad[k] += Complex64::new(0.0, s) * v;
                }
            }
            cost += 0.5 * res.norm_sqr();
            let nz: Vec<usize> = (0..u).filter(|&k| grad[k].norm_sqr() > 0.0).collect();
            for &i in &nz {
                jtr[i] += grad[i].re * res.re + grad[i].im * res.im;
                for &j in &nz {
                    jtj[i * u + j] += grad[i].re * grad[j].re + grad[i].im * grad[j].im;
                }
            }
        }
        (jtj, jtr, cost)
    }

    fn cost(&self, phi: &[f64], scratch: &mut Vec<Complex64>) -> f64 {
        self.residuals(phi, scratch);
        scratch.iter().map(|r| 0.5 * r.norm_sqr()).sum()
    }

    /// Damped Gauss-Newton from `phi`; returns the final max residual.
    fn levenberg_marquardt(&self, phi: &mut [f64], max_iterations: usize) -> f64 {
        let u = phi.len();
        let mut scratch = Vec::new();
        let mut lambda = 1e-3;
        let (mut jtj, mut jtr, mut cost) = self.normal_equations(phi);
        let mut checkpoint = cost;
        for it in 1..=max_iterations {
            if cost < 1e-28 {
                break;
            }
            let mut a = jtj.clone();
            for i in 0..u {
                a[i * u + i] += lambda * (1.0 + jtj[i * u + i]);
            }
            let rhs: Vec<f64> = jtr.iter().map(|g| -g).collect();
            let Some(step) = cholesky_solve(&a, &rhs, u) else {
                lambda *= 10.0;
                continue;
            };
            let trial: Vec<f64> = phi.iter().zip(&step).map(|(p, s)| p + s).collect();
            let trial_cost = self.cost(&trial, &mut scratch);
            if trial_cost < cost {
                phi.copy_from_slice(&trial);
                (jtj, jtr, cost) = self.normal_equations(phi);
                lambda = (lambda / 3.0).max(1e-15);
            } else {
                lambda *= 4.0;
                if lambda > 1e12 {
                    break;
                }
            }
            if it % 25 == 0 {
                if cost > 1e-16 && cost > 0.7 * checkpoint {
                    break;
                }
                checkpoint = cost;
            }
        }
        self.residuals(phi, &mut scratch);
        scratch.iter().fold(0.0, |m, r| m.max(r.norm()))
    }
}

fn term(coef: Complex64, rs: &[(Slot, f64)]) -> Term {
    let mut vars: Vec<(usize, f64)> = Vec::new();
    for &(slot, s) in rs {
        if let Slot::Var(k) = slot {
            match vars.iter_mut().find(|(v, _)| *v == k) {
                Some(entry) => entry.1 += s,
                None => vars.push((k, s)),
            }
        }
    }
    vars.retain(|&(_, s)| s != 0.0);
    vars.sort_by_key(|&(k, _)| k);
    Term { coef, vars }
}

fn merge(terms: Vec<Term>) -> Vec<Term> {
    let mut out: Vec<Term> = Vec::new();
    for t in terms {
        match out.iter_mut().find(|o| o.vars == t.vars) {
            Some(o) => o.coef += t.coef,
            None => out.push(t),
        }
    }
    out.retain(|t| t.coef.norm() > 1e-14);
    out
}

fn eval(t: &Term, phi: &[f64]) -> Complex64 {
    let angle: f64 = t.vars.iter().map(|&(k, s)| s * phi[k]).sum();
    t.coef * Complex64::from_polar(1.0, angle)
}

fn cholesky_solve(a: &[f64], b: &[f64], n: usize) -> Option<Vec<f64>> {
    let mut l = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let s: f64 = a[i * n + j] - (0..j).map(|k| l[i * n + k] * l[j * n + k]).sum::<f64>();
            if i == j {
                if s <= 0.0 {
                    return None;
                }
                l[i * n + i] = s.sqrt();
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }
    let mut y = vec![0.0; n];
    for i in 0..n {
        y[i] = (b[i] - (0..i).map(|k| l[i * n + k] * y[k]).sum::<f64>()) / l[i * n + i];
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        x[i] = (y[i] - (i + 1..n).map(|k| l[k * n + i] * x[k]).sum::<f64>()) / l[i * n + i];
    }
    Some(x)
}

/// Gauge-invariant fingerprint: every spin and every `R^{aa}_b`, rounded.
fn invariant_key<T: Real>(theory: &SkeletalData<T>, grid: f64) -> Result<Vec<i64>> {
    let rules = theory.rules();
    let mut values = Vec::new();
    for a in rules.labels() {
        values.push(to_c64(spin(theory, a)?));
        for b in rules.fuse(a, a) {
            values.push(to_c64(theory.r(a, a, b)?));
        }
    }
    Ok(values
        .iter()
        .flat_map(|z| [z.re, z.im])
        .map(|x| (x / grid).round() as i64)
        .collect())
}

/// Enumerates gauge classes of braidings compatible with the F-data of `theory`
/// by seeded restarts of a damped least-squares solve over R-phases.
pub fn solve_hexagon<T: Real>(
    theory: &SkeletalData<T>,
    config: &SolverConfig,
) -> Result<SolveReport<T>> {
    let system = System::compile(theory)?;
    let base = theory.clone().without_braiding();
    let q = base.rules().label("q").ok();
    let mut classes: Vec<BraidingSolution<T>> = Vec::new();
    let mut converged = 0;
    for restart in 0..config.restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(restart as u64);
        let mut phi: Vec<f64> = (0..system.unknowns.len())
            .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
            .collect();
        let res = system.levenberg_marquardt(&mut phi, config.max_iterations);
        if res >= config.keep_tolerance {
            continue;
        }
        let r: BTreeMap<RKey, C<T>> = system
            .unknowns
            .iter()
            .zip(&phi)
            .map(|(&k, &p)| (k, from_c64(Complex64::from_polar(1.0, p))))
            .collect();
        let candidate = base.clone().with_braiding(r.clone())?;
        let residual = check_hexagon(&candidate)?.max;
        if residual >= config.keep_tolerance {
            continue;
        }
        converged += 1;
        let key = invariant_key(&candidate, config.dedup_grid)?;
        if classes.iter().any(|c| c.key == key) {
            continue;
        }
        let spins = base
            .rules()
            .labels()
            .map(|a| spin(&candidate, a).map(to_c64))
            .collect::<Result<_>>()?;
        let fs_q = match q {
            Some(q) => fs_indicator(&candidate, q, 1e-9)?,
            None => None,
        };
        classes.push(BraidingSolution {
            r,
            spins,
            fs_q,
            residual,
            key,
        });
    }
    classes.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(SolveReport {
        classes,
        restarts: config.restarts,
        converged,
    })
}
