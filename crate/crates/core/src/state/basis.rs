use super::fusion_state::FusionState;
use super::shape::Shape;
use crate::category::{FusionRules, Label, SkeletalData};
use crate::error::{Error, Result};
use crate::scalar::{zero, Real, C};

/// Admissible labellings of a tree shape, in lexicographic order of the
/// canonical node order (pair channels first, total charge last).
#[derive(Debug, Clone, PartialEq)]
pub struct FusionBasis {
    leaves: Vec<Label>,
    shape: Shape,
    labellings: Vec<Vec<Label>>,
}

impl FusionBasis {
    pub fn enumerate(
        rules: &FusionRules,
        leaves: Vec<Label>,
        shape: Shape,
        total: Option<Label>,
    ) -> Result<Self> {
        if shape.leaves() != leaves.len() {
            return Err(Error::BasisMismatch);
        }
        let shape = shape.canonical();
        let n = leaves.len();
        let mut labellings: Vec<Vec<Label>> = if n < 2 {
            let charge = leaves.first().copied().unwrap_or(Label::VACUUM);
            if total.map_or(true, |t| t == charge) {
                vec![Vec::new()]
            } else {
                Vec::new()
            }
        } else {
            options(rules, &leaves, &shape, 0, n)
                .into_iter()
                .filter(|(c, _)| total.map_or(true, |t| t == *c))
                .map(|(_, assignment)| {
                    let mut lab = vec![Label::VACUUM; shape.nodes().len()];
                    for (slot, l) in assignment {
                        lab[slot] = l;
                    }
                    lab
                })
                .collect()
        };
        labellings.sort();
        Ok(Self {
            leaves,
            shape,
            labellings,
        })
    }

    pub fn dim(&self) -> usize {
        self.labellings.len()
    }

    pub fn leaves(&self) -> &[Label] {
        &self.leaves
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn labellings(&self) -> &[Vec<Label>] {
        &self.labellings
    }

    /// State with the given coordinates.
    pub fn state<T: Real>(
        &self,
        theory: &SkeletalData<T>,
        coords: &[C<T>],
    ) -> Result<FusionState<T>> {
        if coords.len() != self.dim() {
            return Err(Error::Shape(format!(
                "{} coordinates for dimension {}",
                coords.len(),
                self.dim()
            )));
        }
        FusionState::from_entries(
            theory,
            self.leaves.clone(),
            self.shape.clone(),
            self.labellings
                .iter()
                .cloned()
                .zip(coords.iter().copied())
                .filter(|(_, z)| z.norm() > T::zero()),
        )
    }

    /// Coordinates of `state` in this basis; mass outside the basis is an error.
    pub fn coordinates<T: Real>(
        &self,
        theory: &SkeletalData<T>,
        state: &FusionState<T>,
    ) -> Result<Vec<C<T>>> {
        if state.leaves() != self.leaves.as_slice() {
            return Err(Error::BasisMismatch);
        }
        let s = state.to_shape(theory, &self.shape)?;
        let entries = s.entries();
        let mut out = vec![zero(); self.dim()];
        for (lab, z) in entries {
            match self.labellings.binary_search(&lab) {
                Ok(k) => out[k] = z,
                Err(_) if z.norm().as_f64() < 1e-12 => {}
                Err(_) => return Err(Error::BasisMismatch),
            }
        }
        Ok(out)
    }
}

fn options(
    rules: &FusionRules,
    leaves: &[Label],
    shape: &Shape,
    lo: usize,
    hi: usize,
) -> Vec<(Label, Vec<(usize, Label)>)> {
    if hi - lo == 1 {
        return vec![(leaves[lo], Vec::new())];
    }
    let slot = shape.slot(lo, hi).expect("node");
    let split = shape.nodes()[slot].split;
    let left = options(rules, leaves, shape, lo, split);
    let right = options(rules, leaves, shape, split, hi);
    let mut out = Vec::new();
    for (a, la) in &left {
        for (b, lb) in &right {
            for c in rules.fuse(*a, *b) {
                let mut assignment = la.clone();
                assignment.extend(lb.iter().copied());
                assignment.push((slot, c));
                out.push((c, assignment));
            }
        }
    }
    out
}
