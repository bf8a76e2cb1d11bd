use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{cis, re, Real, C};

/// Element of the elementary abelian group Z_2^n stored as a bit word.
///
/// Bit `n - 1 - i` holds the `i`-th coordinate, so the integer value of the
/// word is its position in lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    bits: u32,
    rank: u32,
}

impl GroupElement {
    pub fn new(bits: u32, rank: u32) -> Result<Self> {
        if rank > 16 || (rank < 32 && bits >> rank != 0) {
            return Err(Error::Precondition(format!(
                "bit word {bits:#b} does not fit rank {rank}"
            )));
        }
        Ok(Self { bits, rank })
    }

    pub fn identity(rank: u32) -> Self {
        Self { bits: 0, rank }
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn rank(self) -> u32 {
        self.rank
    }

    pub fn is_identity(self) -> bool {
        self.bits == 0
    }

    /// All elements of Z_2^n in lexicographic order.
    pub fn all(rank: u32) -> impl Iterator<Item = GroupElement> {
        (0..1u32 << rank).map(move |bits| GroupElement { bits, rank })
    }

    /// Coordinates as a string of 0/1, most significant coordinate first.
    pub fn word(self) -> String {
        (0..self.rank)
            .rev()
            .map(|i| if self.bits >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }
}

pub fn group_mul(g: GroupElement, h: GroupElement) -> Result<GroupElement> {
    if g.rank != h.rank {
        return Err(Error::GroupMismatch(g.rank, h.rank));
    }
    Ok(GroupElement {
        bits: g.bits ^ h.bits,
        rank: g.rank,
    })
}

/// `(-1)^{g . h}`.
pub fn standard_bicharacter(g: GroupElement, h: GroupElement) -> i8 {
    if (g.bits & h.bits).count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A +-1 valued symmetric nondegenerate bicharacter on Z_2^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignTable {
    rank: u32,
    table: Vec<i8>,
}

impl SignTable {
    pub fn standard(rank: u32) -> Self {
        let size = 1usize << rank;
        let table = (0..size * size)
            .map(|k| {
                let (g, h) = ((k / size) as u32, (k % size) as u32);
                standard_bicharacter(
                    GroupElement { bits: g, rank },
                    GroupElement { bits: h, rank },
                )
            })
            .collect();
        Self { rank, table }
    }

    /// Validates a user supplied table indexed `[g * 2^n + h]`.
    pub fn custom(rank: u32, table: Vec<i8>) -> Result<Self> {
        let size = 1usize << rank;
        if table.len() != size * size || table.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::BadBicharacter);
        }
        let at = |g: usize, h: usize| table[g * size + h];
        for g in 0..size {
            for h in 0..size {
                if at(g, h) != at(h, g) {
                    return Err(Error::BadBicharacter);
                }
                for k in 0..size {
                    if at(g ^ h, k) != at(g, k) * at(h, k) {
                        return Err(Error::BadBicharacter);
                    }
                }
            }
            if g != 0 && (0..size).all(|h| at(g, h) == 1) {
                return Err(Error::BadBicharacter);
            }
        }
        Ok(Self { rank, table })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn sign(&self, g: GroupElement, h: GroupElement) -> i8 {
        self.table[(g.bits as usize) << self.rank | h.bits as usize]
    }
}

/// Finite abelian group with a symmetric nondegenerate bicharacter, the
/// input of the Tambara-Yamagami construction. Elements are indices
/// `0..order()` with 0 the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AbelianGroup {
    /// Z_2^n with a sign bicharacter.
    Elementary(SignTable),
    /// Z_m with `chi(a, b) = exp(2 pi i a b / m)`.
    Cyclic(u32),
}

impl AbelianGroup {
    pub fn elementary(rank: u32) -> Self {
        Self::Elementary(SignTable::standard(rank))
    }

    pub fn order(&self) -> usize {
        match self {
            Self::Elementary(t) => 1 << t.rank(),
            Self::Cyclic(m) => *m as usize,
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            Self::Elementary(_) => a ^ b,
            Self::Cyclic(m) => (a + b) % *m as usize,
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        match self {
            Self::Elementary(_) => a,
            Self::Cyclic(m) => (*m as usize - a) % *m as usize,
        }
    }

    pub fn chi<T: Real>(&self, a: usize, b: usize) -> C<T> {
        match self {
            Self::Elementary(t) => {
                let rank = t.rank();
                let s = t.sign(
                    GroupElement {
                        bits: a as u32,
                        rank,
                    },
                    GroupElement {
                        bits: b as u32,
                        rank,
                    },
                );
                re(T::lit(s as f64))
            }
            Self::Cyclic(m) => {
                let k = (a * b) % *m as usize;
                cis(T::lit(2.0 * std::f64::consts::PI * k as f64 / *m as f64))
            }
        }
    }

    pub fn element_name(&self, a: usize) -> String {
        if a == 0 {
            return "0".to_string();
        }
        match self {
            Self::Elementary(t) => format!(
                "g:{}",
                GroupElement {
                    bits: a as u32,
                    rank: t.rank()
                }
                .word()
            ),
            Self::Cyclic(_) => format!("g:{a}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_rejects_rank_mismatch() {
        let g = GroupElement::new(1, 1).unwrap();
        let h = GroupElement::new(1, 2).unwrap();
        assert_eq!(group_mul(g, h), Err(Error::GroupMismatch(1, 2)));
    }

    #[test]
    fn words_are_lexicographic() {
        let words: Vec<_> = GroupElement::all(2).map(|g| g.word()).collect();
        assert_eq!(words, ["00", "01", "10", "11"]);
    }

    #[test]
    fn standard_table_is_valid() {
        for n in 1..=3 {
            let t = SignTable::standard(n);
            assert!(SignTable::custom(n, t.table.clone()).is_ok());
        }
    }

    #[test]
    fn degenerate_table_rejected() {
        assert_eq!(
            SignTable::custom(1, vec![1, 1, 1, 1]),
            Err(Error::BadBicharacter)
        );
    }

    #[test]
    fn bicharacter_examples() {
        let e = |b| GroupElement::new(b, 2).unwrap();
        assert_eq!(standard_bicharacter(e(0b11), e(0b01)), -1);
        assert_eq!(standard_bicharacter(e(0b11), e(0b11)), 1);
    }
}
