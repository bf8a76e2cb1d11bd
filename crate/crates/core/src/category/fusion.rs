use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Index of a simple object. Label 0 is always the vacuum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Label(pub u16);

impl Label {
    pub const VACUUM: Label = Label(0);

    pub fn idx(self) -> usize {
        self.0 as usize
    }

    pub fn is_vacuum(self) -> bool {
        self.0 == 0
    }
}

impl From<usize> for Label {
    fn from(i: usize) -> Self {
        Label(i as u16)
    }
}

/// A violated fusion-rule axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Vacuum { a: Label, b: Label },
    Commutativity { a: Label, b: Label, c: Label },
    Rotation { a: Label, b: Label, c: Label },
    Dual { a: Label },
    Multiplicity { a: Label, b: Label, c: Label, n: u8 },
    EmptyProduct { a: Label, b: Label },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Multiplicity-free fusion rules `N^{ab}_c`.
#[derive(Debug, Clone, PartialEq)]
pub struct FusionRules {
    names: Vec<String>,
    dual: Vec<Label>,
    n: Vec<u8>,
}

impl FusionRules {
    /// Builds rules from the list of admissible triples. Axioms are not
    /// checked here, see [`FusionRules::validate`].
    pub fn new(
        names: Vec<String>,
        dual: Vec<Label>,
        triples: &[(Label, Label, Label)],
    ) -> Result<Self> {
        let l = names.len();
        if l == 0 {
            return Err(Error::FusionRules("no labels".into()));
        }
        if dual.len() != l || dual.iter().any(|d| d.idx() >= l) {
            return Err(Error::FusionRules(
                "dual map does not match the label set".into(),
            ));
        }
        let mut n = vec![0u8; l * l * l];
        for &(a, b, c) in triples {
            if a.idx() >= l || b.idx() >= l || c.idx() >= l {
                return Err(Error::FusionRules(format!(
                    "triple ({a:?},{b:?},{c:?}) out of range"
                )));
            }
            n[(a.idx() * l + b.idx()) * l + c.idx()] += 1;
        }
        Ok(Self { names, dual, n })
    }

    /// Builds rules from a product table: `table(a, b)` lists the channels.
    pub fn from_table(
        names: Vec<String>,
        dual: Vec<Label>,
        table: impl Fn(Label, Label) -> Vec<Label>,
    ) -> Result<Self> {
        let l = names.len();
        let triples: Vec<_> = (0..l)
            .flat_map(|a| (0..l).map(move |b| (Label::from(a), Label::from(b))))
            .flat_map(|(a, b)| table(a, b).into_iter().map(move |c| (a, b, c)))
            .collect();
        Self::new(names, dual, &triples)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> + Clone {
        (0..self.size()).map(Label::from)
    }

    pub fn name(&self, a: Label) -> &str {
        &self.names[a.idx()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn label(&self, name: &str) -> Result<Label> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(Label::from)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    pub fn dual(&self, a: Label) -> Label {
        self.dual[a.idx()]
    }

    pub fn n(&self, a: Label, b: Label, c: Label) -> u8 {
        let l = self.size();
        self.n[(a.idx() * l + b.idx()) * l + c.idx()]
    }

    pub fn admissible(&self, a: Label, b: Label, c: Label) -> bool {
        self.n(a, b, c) > 0
    }

    /// Channels of `a x b` in label order.
    pub fn fuse(&self, a: Label, b: Label) -> Vec<Label> {
        self.labels()
            .filter(|&c| self.admissible(a, b, c))
            .collect()
    }

    /// The unique channel of `a x b` when there is exactly one.
    pub fn fuse_unique(&self, a: Label, b: Label) -> Option<Label> {
        match self.fuse(a, b).as_slice() {
            [c] => Some(*c),
            _ => None,
        }
    }

    pub fn is_abelian(&self, a: Label) -> bool {
        self.fuse(a, self.dual(a)) == [Label::VACUUM]
    }

    pub fn triples(&self) -> impl Iterator<Item = (Label, Label, Label)> + '_ {
        let ls = self.labels();
        ls.clone()
            .flat_map(move |a| ls.clone().map(move |b| (a, b)))
            .flat_map(move |(a, b)| self.labels().map(move |c| (a, b, c)))
            .filter(move |&(a, b, c)| self.admissible(a, b, c))
    }

    /// Every violated axiom; empty when the rules are consistent.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let ls: Vec<Label> = self.labels().collect();
        let v = Label::VACUUM;
        for &a in &ls {
            for &b in &ls {
                let expect = u8::from(a == b);
                if self.n(a, v, b) != expect || self.n(v, a, b) != expect {
                    out.push(Violation::Vacuum { a, b });
                }
                if self.fuse(a, b).is_empty() {
                    out.push(Violation::EmptyProduct { a, b });
                }
                for &c in &ls {
                    let n = self.n(a, b, c);
                    if n > 1 {
                        out.push(Violation::Multiplicity { a, b, c, n });
                    }
                    if n != self.n(b, a, c) {
                        out.push(Violation::Commutativity { a, b, c });
                    }
                    let (ad, bd, cd) = (self.dual(a), self.dual(b), self.dual(c));
                    if n != self.n(b, cd, ad) || n != self.n(cd, a, bd) || n != self.n(bd, ad, cd) {
                        out.push(Violation::Rotation { a, b, c });
                    }
                }
            }
            let ad = self.dual(a);
            let unique = ls.iter().filter(|&&b| self.n(a, b, v) > 0).count() == 1;
            if self.n(a, ad, v) != 1 || !unique || self.dual(ad) != a {
                out.push(Violation::Dual { a });
            }
        }
        out
    }

    /// Frobenius-Perron dimensions. The positive eigenvector of
    /// `I + sum_a N^a` is found by power iteration and normalised to `d_0 = 1`.
    pub fn quantum_dimensions<T: Real>(&self) -> Result<Vec<T>> {
        let l = self.size();
        let ls: Vec<Label> = self.labels().collect();
        let mut v = vec![T::one(); l];
        let tol = T::epsilon() * T::lit(64.0);
        for _ in 0..10_000 {
            let mut w = v.clone();
            for &a in &ls {
                for &b in &ls {
                    for &c in &ls {
                        if self.admissible(a, b, c) {
                            w[b.idx()] = w[b.idx()] + v[c.idx()];
                        }
                    }
                }
            }
            let norm = w.iter().fold(T::zero(), |m, &x| m.max(x));
            if !(norm > T::zero()) {
                return Err(Error::Numerical("power iteration collapsed".into()));
            }
            w.iter_mut().for_each(|x| *x = *x / norm);
            let change = w
                .iter()
                .zip(&v)
                .fold(T::zero(), |m, (a, b)| m.max((*a - *b).abs()));
            v = w;
            if change <= tol {
                let v0 = v[0];
                return Ok(v.into_iter().map(|x| x / v0).collect());
            }
        }
        Err(Error::Numerical("power iteration did not converge".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ising() -> FusionRules {
        let names = ["0", "1", "q"].map(String::from).to_vec();
        FusionRules::from_table(names, vec![Label(0), Label(1), Label(2)], |a, b| {
            match (a.0, b.0) {
                (0, x) | (x, 0) => vec![Label(x)],
                (1, 1) => vec![Label(0)],
                (2, 2) => vec![Label(0), Label(1)],
                _ => vec![Label(2)],
            }
        })
        .unwrap()
    }

    #[test]
    fn ising_rules_valid() {
        assert!(ising().validate().is_empty());
    }

    #[test]
    fn ising_dimensions() {
        let d: Vec<f64> = ising().quantum_dimensions().unwrap();
        assert!((d[1] - 1.0).abs() < 1e-13);
        assert!((d[2] - 2f64.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn duplicate_triple_is_multiplicity() {
        let names = ["0", "a"].map(String::from).to_vec();
        let t = [
            (Label(0), Label(0), Label(0)),
            (Label(0), Label(1), Label(1)),
            (Label(1), Label(0), Label(1)),
            (Label(1), Label(1), Label(0)),
            (Label(1), Label(1), Label(0)),
        ];
        let r = FusionRules::new(names, vec![Label(0), Label(1)], &t).unwrap();
        assert!(r
            .validate()
            .iter()
            .any(|v| matches!(v, Violation::Multiplicity { .. })));
    }

    #[test]
    fn broken_commutativity_reported() {
        let names = ["0", "a", "b"].map(String::from).to_vec();
        let r = FusionRules::from_table(names, vec![Label(0), Label(1), Label(2)], |a, b| {
            match (a.0, b.0) {
                (0, x) | (x, 0) => vec![Label(x)],
                (1, 2) => vec![Label(1)],
                (x, y) if x == y => vec![Label(0)],
                _ => vec![Label(2)],
            }
        })
        .unwrap();
        assert!(r
            .validate()
            .iter()
            .any(|v| matches!(v, Violation::Commutativity { .. })));
    }
}
