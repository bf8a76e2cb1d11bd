use serde::Serialize;

use crate::error::{Error, Result};

/// Internal node of a fusion tree covering leaves `lo..hi`, with children
/// `lo..split` and `split..hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
    pub split: usize,
}

impl Span {
    pub fn len(&self) -> usize {
        self.hi - self.lo
    }

    pub fn contains(&self, other: &Span) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    fn order_key(&self) -> (usize, usize) {
        (self.len(), self.lo)
    }
}

/// Binary tree shape over `leaves` ordered anyons. Node order is the
/// canonical one (by span length, then left end) unless a recoupling has
/// moved a node, see [`Shape::canonical_permutation`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Shape {
    leaves: usize,
    nodes: Vec<Span>,
}

impl Shape {
    pub(crate) fn from_nodes(leaves: usize, nodes: Vec<Span>) -> Result<Self> {
        let shape = Self { leaves, nodes };
        shape.validate()?;
        Ok(shape)
    }

    fn build(leaves: usize, mut nodes: Vec<Span>) -> Self {
        nodes.sort_by_key(Span::order_key);
        Self { leaves, nodes }
    }

    /// `((((a1 a2) a3) a4) ...)`.
    pub fn left_assoc(leaves: usize) -> Self {
        Self::build(
            leaves,
            (2..=leaves)
                .map(|k| Span {
                    lo: 0,
                    hi: k,
                    split: k - 1,
                })
                .collect(),
        )
    }

    /// Pairs `(a1 a2), (a3 a4), ...` (an odd last leaf stands alone), then the
    /// pairs fused left to right.
    pub fn pairwise(leaves: usize) -> Self {
        Self::blocks(&[leaves])
    }

    /// Consecutive blocks, each shaped pairwise, fused left to right.
    pub fn blocks(lengths: &[usize]) -> Self {
        let mut nodes = Vec::new();
        let mut units: Vec<(usize, usize)> = Vec::new();
        let mut start = 0;
        for &len in lengths.iter().filter(|&&l| l > 0) {
            let end = start + len;
            let mut pairs = Vec::new();
            let mut i = start;
            while i < end {
                let j = (i + 2).min(end);
                if j - i == 2 {
                    nodes.push(Span {
                        lo: i,
                        hi: j,
                        split: i + 1,
                    });
                }
                pairs.push((i, j));
                i = j;
            }
            fold_left(&pairs, &mut nodes);
            units.push((start, end));
            start = end;
        }
        fold_left(&units, &mut nodes);
        Self::build(start, nodes)
    }

    pub fn leaves(&self) -> usize {
        self.leaves
    }

    pub fn nodes(&self) -> &[Span] {
        &self.nodes
    }

    pub fn slot(&self, lo: usize, hi: usize) -> Option<usize> {
        self.nodes.iter().position(|s| s.lo == lo && s.hi == hi)
    }

    pub(crate) fn node_mut(&mut self, slot: usize) -> &mut Span {
        &mut self.nodes[slot]
    }

    pub fn root(&self) -> Option<usize> {
        self.slot(0, self.leaves)
    }

    /// Smallest node containing leaves `i` and `j > i`.
    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        self.nodes
            .iter()
            .enumerate()
            .filter(|(_, s)| s.lo <= i && j < s.hi)
            .min_by_key(|(_, s)| s.len())
            .map(|(k, _)| k)
    }

    /// Same nodes regardless of slot order.
    pub fn same_tree(&self, other: &Shape) -> bool {
        self.leaves == other.leaves && self.sorted_nodes() == other.sorted_nodes()
    }

    fn sorted_nodes(&self) -> Vec<Span> {
        let mut v = self.nodes.clone();
        v.sort_by_key(Span::order_key);
        v
    }

    /// `perm[k]` is the current slot of the `k`-th node in canonical order.
    pub(crate) fn canonical_permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.nodes.len()).collect();
        perm.sort_by_key(|&k| self.nodes[k].order_key());
        perm
    }

    pub(crate) fn canonical(&self) -> Shape {
        Self {
            leaves: self.leaves,
            nodes: self.sorted_nodes(),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Precondition(format!("invalid tree shape: {m}")));
        if self.leaves >= 2 && self.nodes.len() != self.leaves - 1 {
            return bad("wrong node count");
        }
        if self.leaves < 2 && !self.nodes.is_empty() {
            return bad("nodes without enough leaves");
        }
        if self.leaves >= 2 && self.root().is_none() {
            return bad("no root");
        }
        for s in &self.nodes {
            if !(s.lo < s.split && s.split < s.hi && s.hi <= self.leaves) {
                return bad("malformed span");
            }
            for (lo, hi) in [(s.lo, s.split), (s.split, s.hi)] {
                if hi - lo >= 2 && self.slot(lo, hi).is_none() {
                    return bad("missing child");
                }
            }
        }
        Ok(())
    }
}

fn fold_left(units: &[(usize, usize)], nodes: &mut Vec<Span>) {
    if let Some(&(lo, first_hi)) = units.first() {
        let mut hi = first_hi;
        for &(_, next_hi) in &units[1..] {
            nodes.push(Span {
                lo,
                hi: next_hi,
                split: hi,
            });
            hi = next_hi;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_six() {
        let s = Shape::pairwise(6);
        let spans: Vec<(usize, usize)> = s.nodes().iter().map(|n| (n.lo, n.hi)).collect();
        assert_eq!(spans, [(0, 2), (2, 4), (4, 6), (0, 4), (0, 6)]);
        assert!(s.validate().is_ok());
    }

    #[test]
    fn pairwise_odd() {
        let s = Shape::pairwise(5);
        assert!(s.validate().is_ok());
        assert_eq!(s.nodes().len(), 4);
        assert!(s.slot(0, 5).is_some());
        assert!(s.slot(4, 5).is_none());
    }

    #[test]
    fn blocks_and_small() {
        let s = Shape::blocks(&[1, 2, 4]);
        assert!(s.validate().is_ok());
        assert!(s.slot(1, 3).is_some() && s.slot(3, 7).is_some() && s.slot(0, 3).is_some());
        assert!(Shape::pairwise(1).nodes().is_empty());
        assert!(Shape::pairwise(0).validate().is_ok());
    }

    #[test]
    fn meet_finds_smallest() {
        let s = Shape::pairwise(4);
        assert_eq!(
            s.nodes()[s.meet(1, 2).unwrap()],
            Span {
                lo: 0,
                hi: 4,
                split: 2
            }
        );
        assert_eq!(
            s.nodes()[s.meet(0, 1).unwrap()],
            Span {
                lo: 0,
                hi: 2,
                split: 1
            }
        );
    }
}
