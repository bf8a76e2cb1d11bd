use std::collections::BTreeMap;

use super::shape::{Shape, Span};
use crate::category::{GaugeTransform, Label, SkeletalData};
use crate::error::{Error, Result};
use crate::scalar::{one, zero, Real, C};

/// Which way a braid generator exchanges two neighbouring anyons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Exchange {
    /// `sigma_i`, acting with `R`.
    Positive,
    /// `sigma_i^{-1}`, acting with `R^{-1}`.
    Negative,
}

/// Direction of an F-move at a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Recouple {
    /// `((AB)C) -> (A(BC))`, amplitudes transform with `F`.
    Right,
    /// `(A(BC)) -> ((AB)C)`, amplitudes transform with `G = F^dagger`.
    Left,
}

/// How a fusion measurement picks its outcome.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Choice {
    /// Post-select this outcome.
    Forced(Label),
    /// Born sampling driven by a uniform number in `[0, 1)`.
    Uniform(f64),
}

/// Result of a fusion measurement.
#[derive(Debug, Clone)]
pub struct Measured<T: Real> {
    pub outcome: Label,
    pub probability: T,
    pub distribution: Vec<(Label, T)>,
    pub state: FusionState<T>,
}

/// Reduced description of a contiguous block of anyons for one labelling of
/// the rest of the system.
#[derive(Debug, Clone)]
pub struct BlockComponent<T: Real> {
    pub environment: Vec<Label>,
    pub weight: T,
    pub state: FusionState<T>,
}

/// Amplitudes over the admissible labellings of a fusion tree. The total
/// charge is the root label and may be in superposition.
#[derive(Debug, Clone, PartialEq)]
pub struct FusionState<T: Real> {
    leaves: Vec<Label>,
    shape: Shape,
    amps: BTreeMap<Vec<Label>, C<T>>,
    braids: u64,
}

#[derive(Clone, Copy)]
enum Sub {
    Leaf(Label),
    Node(usize),
}

impl Sub {
    fn label(self, lab: &[Label]) -> Label {
        match self {
            Sub::Leaf(l) => l,
            Sub::Node(k) => lab[k],
        }
    }
}

impl<T: Real> FusionState<T> {
    /// The empty system.
    pub fn vacuum() -> Self {
        Self {
            leaves: Vec::new(),
            shape: Shape::pairwise(0),
            amps: BTreeMap::from([(Vec::new(), one())]),
            braids: 0,
        }
    }

    /// Amplitudes are keyed by node labels in the slot order of `shape`.
    pub fn from_entries(
        theory: &SkeletalData<T>,
        leaves: Vec<Label>,
        shape: Shape,
        entries: impl IntoIterator<Item = (Vec<Label>, C<T>)>,
    ) -> Result<Self> {
        if shape.leaves() != leaves.len() {
            return Err(Error::BasisMismatch);
        }
        let mut amps = BTreeMap::new();
        for (lab, z) in entries {
            if lab.len() != shape.nodes().len() {
                return Err(Error::BasisMismatch);
            }
            let e = amps.entry(lab).or_insert_with(zero);
            *e = *e + z;
        }
        let state = Self {
            leaves,
            shape,
            amps,
            braids: 0,
        };
        state.check_admissible(theory)?;
        Ok(state)
    }

    fn check_admissible(&self, theory: &SkeletalData<T>) -> Result<()> {
        let rules = theory.rules();
        for lab in self.amps.keys() {
            for (k, s) in self.shape.nodes().iter().enumerate() {
                let (a, b) = (
                    self.sub(s.lo, s.split).label(lab),
                    self.sub(s.split, s.hi).label(lab),
                );
                if !rules.admissible(a, b, lab[k]) {
                    return Err(Error::Precondition(format!(
                        "inadmissible labelling {lab:?}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn leaves(&self) -> &[Label] {
        &self.leaves
    }

    pub fn len(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaves.is_empty()
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// Number of braid generators applied over this state's history.
    pub fn braid_count(&self) -> u64 {
        self.braids
    }

    /// Nonzero amplitudes in canonical node order.
    pub fn entries(&self) -> Vec<(Vec<Label>, C<T>)> {
        let perm = self.shape.canonical_permutation();
        let mut v: Vec<(Vec<Label>, C<T>)> = self
            .amps
            .iter()
            .map(|(lab, &z)| (perm.iter().map(|&k| lab[k]).collect(), z))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn amplitude(&self, labelling_in_canonical_order: &[Label]) -> C<T> {
        let perm = self.shape.canonical_permutation();
        let mut lab = vec![Label::VACUUM; perm.len()];
        for (k, &slot) in perm.iter().enumerate() {
            lab[slot] = labelling_in_canonical_order[k];
        }
        self.amps.get(&lab).copied().unwrap_or_else(zero)
    }

    pub fn norm(&self) -> T {
        self.amps
            .values()
            .fold(T::zero(), |s, z| s + z.norm_sqr())
            .sqrt()
    }

    fn sub(&self, lo: usize, hi: usize) -> Sub {
        if hi - lo == 1 {
            Sub::Leaf(self.leaves[lo])
        } else {
            Sub::Node(self.shape.slot(lo, hi).expect("child spans are nodes"))
        }
    }

    /// Total charge of a labelling.
    pub fn total_charge(&self, lab: &[Label]) -> Label {
        match self.leaves.len() {
            0 => Label::VACUUM,
            n => self.sub(0, n).label(lab),
        }
    }

    /// Probability of each total charge.
    pub fn charge_distribution(&self) -> BTreeMap<Label, T> {
        let mut out = BTreeMap::new();
        for (lab, z) in &self.amps {
            let e = out.entry(self.total_charge(lab)).or_insert_with(T::zero);
            *e = *e + z.norm_sqr();
        }
        out
    }

    fn prune(amps: &mut BTreeMap<Vec<Label>, C<T>>) {
        let floor = T::epsilon() * T::epsilon();
        amps.retain(|_, z| z.norm() > floor);
    }

    /// `((AB)_e C)_d -> (A(BC)_f)_d` at the node in `slot`.
    fn rotate_right(&mut self, theory: &SkeletalData<T>, x: usize) -> Result<()> {
        let Span { lo, hi, split: t } = self.shape.nodes()[x];
        if t - lo < 2 {
            return Err(Error::BadMove("left child is a leaf".into()));
        }
        let y = self.shape.slot(lo, t).expect("left child");
        let s = self.shape.nodes()[y].split;
        let (a, b, c) = (self.sub(lo, s), self.sub(s, t), self.sub(t, hi));
        let rules = theory.rules();
        let mut out = BTreeMap::new();
        for (lab, &amp) in &self.amps {
            let (la, lb, lc, d, e) = (a.label(lab), b.label(lab), c.label(lab), lab[x], lab[y]);
            let block = theory.f(la, lb, lc, d)?;
            let j = block
                .cols
                .iter()
                .position(|&v| v == e)
                .ok_or(Error::MissingF(la, lb, lc, d))?;
            for (i, &f) in block.rows.iter().enumerate() {
                debug_assert!(rules.admissible(lb, lc, f));
                let mut nl = lab.clone();
                nl[y] = f;
                let acc = out.entry(nl).or_insert_with(zero);
                *acc = *acc + block.matrix[(i, j)] * amp;
            }
        }
        Self::prune(&mut out);
        self.amps = out;
        *self.shape.node_mut(y) = Span {
            lo: s,
            hi,
            split: t,
        };
        self.shape.node_mut(x).split = s;
        Ok(())
    }

    /// `(A(BC)_f)_d -> ((AB)_e C)_d` at the node in `slot`.
    fn rotate_left(&mut self, theory: &SkeletalData<T>, x: usize) -> Result<()> {
        let Span { lo, hi, split: t } = self.shape.nodes()[x];
        if hi - t < 2 {
            return Err(Error::BadMove("right child is a leaf".into()));
        }
        let y = self.shape.slot(t, hi).expect("right child");
        let s = self.shape.nodes()[y].split;
        let (a, b, c) = (self.sub(lo, t), self.sub(t, s), self.sub(s, hi));
        let mut out = BTreeMap::new();
        for (lab, &amp) in &self.amps {
            let (la, lb, lc, d, f) = (a.label(lab), b.label(lab), c.label(lab), lab[x], lab[y]);
            let block = theory.f(la, lb, lc, d)?;
            let i = block
                .rows
                .iter()
                .position(|&v| v == f)
                .ok_or(Error::MissingF(la, lb, lc, d))?;
            for (j, &e) in block.cols.iter().enumerate() {
                let mut nl = lab.clone();
                nl[y] = e;
                let acc = out.entry(nl).or_insert_with(zero);
                *acc = *acc + block.matrix[(i, j)].conj() * amp;
            }
        }
        Self::prune(&mut out);
        self.amps = out;
        *self.shape.node_mut(y) = Span {
            lo,
            hi: s,
            split: t,
        };
        self.shape.node_mut(x).split = s;
        Ok(())
    }

    /// Single F-move at the node covering `lo..hi`.
    pub fn f_move(
        &self,
        theory: &SkeletalData<T>,
        lo: usize,
        hi: usize,
        dir: Recouple,
    ) -> Result<Self> {
        let x = self
            .shape
            .slot(lo, hi)
            .ok_or_else(|| Error::BadMove(format!("no node covers {lo}..{hi}")))?;
        let mut out = self.clone();
        match dir {
            Recouple::Right => out.rotate_right(theory, x)?,
            Recouple::Left => out.rotate_left(theory, x)?,
        }
        Ok(out)
    }

    /// Recouples until the node covering `lo..hi` splits at `s`.
    fn make_split(
        &mut self,
        theory: &SkeletalData<T>,
        lo: usize,
        hi: usize,
        s: usize,
    ) -> Result<()> {
        let x = self.shape.slot(lo, hi).expect("node exists");
        let t = self.shape.nodes()[x].split;
        if t > s {
            if t - lo >= 2 {
                self.make_split(theory, lo, t, s)?;
            }
            self.rotate_right(theory, x)?;
        } else if t < s {
            if hi - t >= 2 {
                self.make_split(theory, t, hi, s)?;
            }
            self.rotate_left(theory, x)?;
        }
        Ok(())
    }

    fn align(
        &mut self,
        theory: &SkeletalData<T>,
        target: &Shape,
        lo: usize,
        hi: usize,
    ) -> Result<()> {
        if hi - lo < 2 {
            return Ok(());
        }
        let s = target.nodes()[target.slot(lo, hi).ok_or(Error::BasisMismatch)?].split;
        self.make_split(theory, lo, hi, s)?;
        self.align(theory, target, lo, s)?;
        self.align(theory, target, s, hi)
    }

    /// The same state expressed in the basis of `target` (in canonical slot order).
    pub fn to_shape(&self, theory: &SkeletalData<T>, target: &Shape) -> Result<Self> {
        if target.leaves() != self.len() {
            return Err(Error::BasisMismatch);
        }
        let mut out = self.clone();
        out.align(theory, target, 0, self.len())?;
        Ok(out.canonical())
    }

    /// Pairwise caterpillar basis.
    pub fn to_pairwise(&self, theory: &SkeletalData<T>) -> Result<Self> {
        self.to_shape(theory, &Shape::pairwise(self.len()))
    }

    /// Reorders node slots canonically without changing the tree.
    pub fn canonical(mut self) -> Self {
        let perm = self.shape.canonical_permutation();
        if perm.iter().enumerate().all(|(k, &p)| k == p) {
            return self;
        }
        self.amps = self
            .amps
            .into_iter()
            .map(|(lab, z)| (perm.iter().map(|&k| lab[k]).collect(), z))
            .collect();
        self.shape = self.shape.canonical();
        self
    }

    /// Recouples so that leaves `i` and `i + 1` fuse directly; returns that node's slot.
    fn bring_together(&mut self, theory: &SkeletalData<T>, i: usize) -> Result<usize> {
        if i + 1 >= self.len() {
            return Err(Error::BadPosition(i, self.len()));
        }
        if let Some(k) = self.shape.slot(i, i + 2) {
            return Ok(k);
        }
        let x = self
            .shape
            .meet(i, i + 1)
            .expect("two leaves have a common ancestor");
        let Span { lo, hi, .. } = self.shape.nodes()[x];
        if i > lo {
            self.make_split(theory, lo, i + 1, i)?;
        }
        if hi > i + 2 {
            self.make_split(theory, i + 1, hi, i + 2)?;
        }
        if i > lo {
            self.rotate_right(theory, x)?;
        }
        if hi > i + 2 {
            let y = self.shape.slot(i, hi).expect("node over the pair");
            self.rotate_left(theory, y)?;
        }
        Ok(self.shape.slot(i, i + 2).expect("pair node"))
    }

    /// Applies `sigma_i` or its inverse to leaves `i, i + 1`; the basis is unchanged.
    pub fn braid(&self, theory: &SkeletalData<T>, i: usize, ex: Exchange) -> Result<Self> {
        if !theory.has_braiding() {
            return Err(Error::NoBraiding);
        }
        let original = self.shape.canonical();
        let mut out = self.clone();
        let k = out.bring_together(theory, i)?;
        let (a, b) = (out.leaves[i], out.leaves[i + 1]);
        let mut amps = BTreeMap::new();
        for (lab, z) in std::mem::take(&mut out.amps) {
            let c = lab[k];
            let phase = match ex {
                Exchange::Positive => theory.r(a, b, c)?,
                Exchange::Negative => theory.r_inv(a, b, c)?,
            };
            amps.insert(lab, z * phase);
        }
        out.amps = amps;
        out.leaves.swap(i, i + 1);
        out.braids += 1;
        out.to_shape(theory, &original)
    }

    /// `sigma_i^power`.
    pub fn braid_power(&self, theory: &SkeletalData<T>, i: usize, power: i32) -> Result<Self> {
        let ex = if power >= 0 {
            Exchange::Positive
        } else {
            Exchange::Negative
        };
        (0..power.unsigned_abs()).try_fold(self.clone(), |s, _| s.braid(theory, i, ex))
    }

    /// Creates `a, a*` from the vacuum between leaves `pos - 1` and `pos`.
    pub fn pair_create(&self, theory: &SkeletalData<T>, pos: usize, a: Label) -> Result<Self> {
        let n = self.len();
        if pos > n {
            return Err(Error::BadPosition(pos, n));
        }
        let ad = theory.rules().dual(a);
        let mut leaves = self.leaves.clone();
        leaves.splice(pos..pos, [a, ad]);
        if n == 0 {
            let shape = Shape::pairwise(2);
            let amps = self
                .amps
                .values()
                .map(|&z| (vec![Label::VACUUM], z))
                .collect();
            return Ok(Self {
                leaves,
                shape,
                amps,
                braids: self.braids,
            });
        }
        // The pair node hangs off the neighbouring leaf, which keeps its charge.
        let (anchor, pair, host) = if pos < n {
            (
                self.leaves[pos],
                Span {
                    lo: pos,
                    hi: pos + 2,
                    split: pos + 1,
                },
                Span {
                    lo: pos,
                    hi: pos + 3,
                    split: pos + 2,
                },
            )
        } else {
            (
                self.leaves[n - 1],
                Span {
                    lo: n,
                    hi: n + 2,
                    split: n + 1,
                },
                Span {
                    lo: n - 1,
                    hi: n + 2,
                    split: n,
                },
            )
        };
        let shift_lo = |x: usize| if x <= pos { x } else { x + 2 };
        let shift_hi = |x: usize| if x <= pos { x } else { x + 2 };
        let mut nodes: Vec<Span> = self
            .shape
            .nodes()
            .iter()
            .map(|s| {
                if pos == n {
                    Span {
                        lo: s.lo,
                        hi: if s.hi == n { n + 2 } else { s.hi },
                        split: s.split,
                    }
                } else {
                    Span {
                        lo: shift_lo(s.lo),
                        hi: shift_hi(s.hi),
                        split: shift_lo(s.split),
                    }
                }
            })
            .collect();
        nodes.push(pair);
        nodes.push(host);
        let shape = Shape::from_nodes(n + 2, nodes)?;
        let amps = self
            .amps
            .iter()
            .map(|(lab, &z)| {
                let mut l = lab.clone();
                l.push(Label::VACUUM);
                l.push(anchor);
                (l, z)
            })
            .collect();
        Ok(Self {
            leaves,
            shape,
            amps,
            braids: self.braids,
        }
        .canonical())
    }

    /// Fuses leaves `i, i + 1` and measures the channel.
    pub fn fuse_measure(
        &self,
        theory: &SkeletalData<T>,
        i: usize,
        choice: Choice,
    ) -> Result<Measured<T>> {
        let mut work = self.clone();
        let k = work.bring_together(theory, i)?;
        let mut mass: BTreeMap<Label, T> = BTreeMap::new();
        for (lab, z) in &work.amps {
            let e = mass.entry(lab[k]).or_insert_with(T::zero);
            *e = *e + z.norm_sqr();
        }
        let total = mass.values().fold(T::zero(), |s, &m| s + m);
        if !(total > T::zero()) {
            return Err(Error::Numerical("measuring a zero state".into()));
        }
        let distribution: Vec<(Label, T)> = mass.iter().map(|(&l, &m)| (l, m / total)).collect();
        let outcome = match choice {
            Choice::Forced(l) => l,
            Choice::Uniform(u) => {
                let mut acc = 0.0;
                let mut pick = distribution.last().map(|p| p.0).expect("nonempty");
                for &(l, p) in &distribution {
                    acc += p.as_f64();
                    if u < acc {
                        pick = l;
                        break;
                    }
                }
                pick
            }
        };
        let probability = distribution
            .iter()
            .find(|p| p.0 == outcome)
            .map_or(T::zero(), |p| p.1);
        if probability.as_f64() <= 1e-24 {
            return Err(Error::ZeroMass(outcome));
        }
        let scale = (probability * total).sqrt();
        let unshift = |x: usize| if x > i { x - 1 } else { x };
        let nodes: Vec<Span> = work
            .shape
            .nodes()
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, s)| Span {
                lo: unshift(s.lo),
                hi: unshift(s.hi),
                split: unshift(s.split),
            })
            .collect();
        let mut leaves = work.leaves.clone();
        leaves.splice(i..i + 2, [outcome]);
        let shape = Shape::from_nodes(leaves.len(), nodes)?;
        let amps = work
            .amps
            .iter()
            .filter(|(lab, _)| lab[k] == outcome)
            .map(|(lab, &z)| {
                let mut l = lab.clone();
                l.remove(k);
                (l, z / scale)
            })
            .collect();
        let state = Self {
            leaves,
            shape,
            amps,
            braids: work.braids,
        }
        .canonical();
        Ok(Measured {
            outcome,
            probability,
            distribution,
            state,
        })
    }

    /// Rescales amplitudes by `prod_vertices u^{ab}_c` (or its inverse), the
    /// coordinate change induced by a gauge transformation.
    pub fn gauge(&self, gauge: &GaugeTransform<T>, inverse: bool) -> Self {
        let mut out = self.clone();
        for (lab, z) in out.amps.iter_mut() {
            let mut factor = one::<T>();
            for (k, s) in self.shape.nodes().iter().enumerate() {
                let (a, b) = (
                    self.sub(s.lo, s.split).label(lab),
                    self.sub(s.split, s.hi).label(lab),
                );
                factor = factor * gauge.vertex(a, b, lab[k]);
            }
            *z = if inverse { *z / factor } else { *z * factor };
        }
        out
    }

    fn aligned_pair(
        &self,
        other: &Self,
    ) -> Result<(Vec<(Vec<Label>, C<T>)>, Vec<(Vec<Label>, C<T>)>)> {
        if self.leaves != other.leaves || !self.shape.same_tree(&other.shape) {
            return Err(Error::BasisMismatch);
        }
        Ok((self.entries(), other.entries()))
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> Result<C<T>> {
        let (a, b) = self.aligned_pair(other)?;
        let bm: BTreeMap<_, _> = b.into_iter().collect();
        Ok(a.iter().fold(zero(), |s, (lab, z)| {
            s + z.conj() * bm.get(lab).copied().unwrap_or_else(zero)
        }))
    }

    /// `lambda` with `self = lambda other` up to `tol`, unit modulus. The
    /// reference entry is the largest-modulus component of `other`, ties to
    /// the first labelling.
    pub fn phase_relation(&self, other: &Self, tol: f64) -> Result<Option<C<T>>> {
        let (a, b) = self.aligned_pair(other)?;
        let am: BTreeMap<_, _> = a.into_iter().collect();
        let bm: BTreeMap<_, _> = b.into_iter().collect();
        let mut reference: Option<(&Vec<Label>, C<T>)> = None;
        for (lab, z) in &bm {
            if reference.map_or(true, |(_, r)| z.norm() > r.norm()) {
                reference = Some((lab, *z));
            }
        }
        let lambda = match reference {
            None => {
                return Ok(if am.values().all(|z| z.norm().as_f64() <= tol) {
                    Some(one())
                } else {
                    None
                })
            }
            Some((lab, r)) => {
                let x = am.get(lab).copied().unwrap_or_else(zero) / r;
                if x.norm().as_f64() <= tol {
                    return Ok(None);
                }
                x / x.norm()
            }
        };
        let keys: std::collections::BTreeSet<_> = am.keys().chain(bm.keys()).collect();
        let worst = keys.into_iter().fold(0.0f64, |m, lab| {
            let x = am.get(lab).copied().unwrap_or_else(zero);
            let y = bm.get(lab).copied().unwrap_or_else(zero);
            m.max((x - lambda * y).norm().as_f64())
        });
        Ok(if worst <= tol { Some(lambda) } else { None })
    }

    pub fn phase_equal(&self, other: &Self, tol: f64) -> Result<bool> {
        Ok(self.phase_relation(other, tol)?.is_some())
    }

    /// Splits the state into the block `start..start + len` and its
    /// environment, one component per environment labelling. Needs every
    /// environment block charge to be definite given its labelling.
    pub fn block_components(
        &self,
        theory: &SkeletalData<T>,
        start: usize,
        len: usize,
    ) -> Result<Vec<BlockComponent<T>>> {
        let n = self.len();
        if len < 1 || start + len > n {
            return Err(Error::BadPosition(start + len, n));
        }
        let shape = Shape::blocks(&[start, len, n - start - len]);
        let s = self.to_shape(theory, &shape)?;
        let inside = |sp: &Span| start <= sp.lo && sp.hi <= start + len;
        let outside = |sp: &Span| sp.hi <= start || sp.lo >= start + len;
        let block_shape = Shape::pairwise(len);
        let mut groups: BTreeMap<Vec<Label>, BTreeMap<Vec<Label>, C<T>>> = BTreeMap::new();
        for (lab, z) in &s.amps {
            let env: Vec<Label> = s
                .shape
                .nodes()
                .iter()
                .zip(lab)
                .filter(|(sp, _)| outside(sp))
                .map(|(_, &l)| l)
                .collect();
            let inner: Vec<Label> = s
                .shape
                .nodes()
                .iter()
                .zip(lab)
                .filter(|(sp, _)| inside(sp))
                .map(|(_, &l)| l)
                .collect();
            if groups.entry(env).or_default().insert(inner, *z).is_some() {
                return Err(Error::Unsupported(
                    "environment charge is not determined by its labelling".into(),
                ));
            }
        }
        let leaves = self.leaves[start..start + len].to_vec();
        groups
            .into_iter()
            .map(|(environment, amps)| {
                let weight = amps
                    .values()
                    .fold(T::zero(), |a, z| a + z.norm_sqr())
                    .sqrt();
                let amps = amps.into_iter().map(|(l, z)| (l, z / weight)).collect();
                let state = Self {
                    leaves: leaves.clone(),
                    shape: block_shape.clone(),
                    amps,
                    braids: self.braids,
                };
                Ok(BlockComponent {
                    environment,
                    weight,
                    state,
                })
            })
            .collect()
    }

    /// `sqrt(sum_env |<target|block_env>|^2)`, the overlap of `target` with
    /// the reduced state of the block.
    pub fn block_fidelity(
        &self,
        theory: &SkeletalData<T>,
        start: usize,
        target: &Self,
    ) -> Result<T> {
        let target = target.to_pairwise(theory)?;
        let mut sum = T::zero();
        for comp in self.block_components(theory, start, target.len())? {
            sum = sum + (target.inner(&comp.state)? * comp.weight).norm_sqr();
        }
        Ok(sum.sqrt())
    }
}
