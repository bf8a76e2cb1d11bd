use std::collections::BTreeMap;

use super::fusion::{FusionRules, Label};
use crate::algebra::CMatrix;
use crate::error::{Error, Result};
use crate::scalar::{one, Real, C};

/// `[F^{abc}_d]_{fe}` with rows indexed by `f in b x c` and columns by `e in a x b`.
#[derive(Debug, Clone, PartialEq)]
pub struct FMatrix<T: Real> {
    pub rows: Vec<Label>,
    pub cols: Vec<Label>,
    pub matrix: CMatrix<T>,
}

impl<T: Real> FMatrix<T> {
    pub fn entry(&self, f: Label, e: Label) -> Option<C<T>> {
        let i = self.rows.iter().position(|&x| x == f)?;
        let j = self.cols.iter().position(|&x| x == e)?;
        Some(self.matrix[(i, j)])
    }
}

pub type FKey = [Label; 4];
pub type RKey = [Label; 3];

/// Multiplicity-free skeletal data: fusion rules, F-matrices and optional R-symbols.
#[derive(Debug, Clone, PartialEq)]
pub struct SkeletalData<T: Real> {
    rules: FusionRules,
    dims: Vec<T>,
    f: BTreeMap<FKey, FMatrix<T>>,
    r: Option<BTreeMap<RKey, C<T>>>,
}

impl<T: Real> SkeletalData<T> {
    /// Intermediate channels `e` of `((ab)_e c)_d`.
    pub fn left_channels(rules: &FusionRules, [a, b, c, d]: FKey) -> Vec<Label> {
        rules
            .labels()
            .filter(|&e| rules.admissible(a, b, e) && rules.admissible(e, c, d))
            .collect()
    }

    /// Intermediate channels `f` of `(a(bc)_f)_d`.
    pub fn right_channels(rules: &FusionRules, [a, b, c, d]: FKey) -> Vec<Label> {
        rules
            .labels()
            .filter(|&f| rules.admissible(b, c, f) && rules.admissible(a, f, d))
            .collect()
    }

    /// Every `(a,b,c,d)` with a nonempty F-block.
    pub fn f_keys(rules: &FusionRules) -> Vec<FKey> {
        let ls: Vec<Label> = rules.labels().collect();
        let mut keys = Vec::new();
        for &a in &ls {
            for &b in &ls {
                for &c in &ls {
                    for &d in &ls {
                        if !Self::left_channels(rules, [a, b, c, d]).is_empty() {
                            keys.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        keys
    }

    pub fn new(rules: FusionRules, f: BTreeMap<FKey, FMatrix<T>>) -> Result<Self> {
        for key in Self::f_keys(&rules) {
            let block = f
                .get(&key)
                .ok_or(Error::MissingF(key[0], key[1], key[2], key[3]))?;
            let ok = block.cols == Self::left_channels(&rules, key)
                && block.rows == Self::right_channels(&rules, key)
                && block.matrix.rows() == block.rows.len()
                && block.matrix.cols() == block.cols.len();
            if !ok {
                return Err(Error::FBlockShape(key[0], key[1], key[2], key[3]));
            }
        }
        if f.len() != Self::f_keys(&rules).len() {
            return Err(Error::FusionRules(
                "F-data has blocks for inadmissible labels".into(),
            ));
        }
        let dims = rules.quantum_dimensions()?;
        Ok(Self {
            rules,
            dims,
            f,
            r: None,
        })
    }

    /// Fills every block from `entry(key, f, e)`.
    pub fn from_fn(
        rules: FusionRules,
        mut entry: impl FnMut(FKey, Label, Label) -> C<T>,
    ) -> Result<Self> {
        let mut f = BTreeMap::new();
        for key in Self::f_keys(&rules) {
            let rows = Self::right_channels(&rules, key);
            let cols = Self::left_channels(&rules, key);
            let mut matrix = CMatrix::zeros(rows.len(), cols.len());
            for (i, &fl) in rows.iter().enumerate() {
                for (j, &el) in cols.iter().enumerate() {
                    matrix[(i, j)] = entry(key, fl, el);
                }
            }
            f.insert(key, FMatrix { rows, cols, matrix });
        }
        Self::new(rules, f)
    }

    /// Attaches R-symbols. `R^{a0}_a = R^{0a}_a = 1` are filled in when absent.
    pub fn with_braiding(mut self, mut r: BTreeMap<RKey, C<T>>) -> Result<Self> {
        for (a, b, c) in self.rules.triples() {
            if a.is_vacuum() || b.is_vacuum() {
                r.entry([a, b, c]).or_insert_with(one);
            } else if !r.contains_key(&[a, b, c]) {
                return Err(Error::MissingR(a, b, c));
            }
        }
        if r.keys().any(|&[a, b, c]| !self.rules.admissible(a, b, c)) {
            return Err(Error::FusionRules(
                "R-symbol on an inadmissible triple".into(),
            ));
        }
        self.r = Some(r);
        Ok(self)
    }

    pub fn without_braiding(mut self) -> Self {
        self.r = None;
        self
    }

    pub fn rules(&self) -> &FusionRules {
        &self.rules
    }

    pub fn dims(&self) -> &[T] {
        &self.dims
    }

    pub fn dim(&self, a: Label) -> T {
        self.dims[a.idx()]
    }

    pub fn f_blocks(&self) -> impl Iterator<Item = (&FKey, &FMatrix<T>)> {
        self.f.iter()
    }

    pub fn f_blocks_mut(&mut self) -> impl Iterator<Item = (&FKey, &mut FMatrix<T>)> {
        self.f.iter_mut()
    }

    pub fn f(&self, a: Label, b: Label, c: Label, d: Label) -> Result<&FMatrix<T>> {
        self.f.get(&[a, b, c, d]).ok_or(Error::MissingF(a, b, c, d))
    }

    /// `[F^{abc}_d]_{fe}`.
    pub fn f_entry(&self, key: FKey, f: Label, e: Label) -> Result<C<T>> {
        self.f(key[0], key[1], key[2], key[3])?
            .entry(f, e)
            .ok_or(Error::MissingF(key[0], key[1], key[2], key[3]))
    }

    /// `[G^{abc}_d]_{ef} = conj([F^{abc}_d]_{fe})`.
    pub fn g_entry(&self, key: FKey, e: Label, f: Label) -> Result<C<T>> {
        Ok(self.f_entry(key, f, e)?.conj())
    }

    pub fn has_braiding(&self) -> bool {
        self.r.is_some()
    }

    pub fn r_symbols(&self) -> Option<&BTreeMap<RKey, C<T>>> {
        self.r.as_ref()
    }

    pub fn r_symbols_mut(&mut self) -> Option<&mut BTreeMap<RKey, C<T>>> {
        self.r.as_mut()
    }

    /// `R^{ab}_c`.
    pub fn r(&self, a: Label, b: Label, c: Label) -> Result<C<T>> {
        self.r
            .as_ref()
            .ok_or(Error::NoBraiding)?
            .get(&[a, b, c])
            .copied()
            .ok_or(Error::MissingR(a, b, c))
    }

    /// `(R^{-1})^{ab}_c = (R^{ba}_c)^{-1}`.
    pub fn r_inv(&self, a: Label, b: Label, c: Label) -> Result<C<T>> {
        Ok(self.r(b, a, c)?.inv())
    }

    /// Label by name, for the `q` of Ising and Tambara-Yamagami theories.
    pub fn label(&self, name: &str) -> Result<Label> {
        self.rules.label(name)
    }
}
