use std::fmt;

use serde::{Deserialize, Serialize};

/// One step of a correction: a braid generator power on Bob's anyons or the
/// creation of an ancilla pair at a boundary.
///
/// Generator `sigma_i` exchanges anyons `i` and `i + 1`, where Bob's anyons
/// are numbered `1..=2p` and the left ancilla pair is `-1, 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BraidOp {
    Sigma { generator: i32, power: i32 },
    CreateLeft,
    CreateRight,
}

impl fmt::Display for BraidOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidOp::Sigma { generator, power } => write!(f, "s{generator}^{power}"),
            BraidOp::CreateLeft => f.write_str("a_l+"),
            BraidOp::CreateRight => f.write_str("a_r+"),
        }
    }
}

/// Bob's correction for measurement record `x, z` (qubit `j` at index `j - 1`):
/// `z_j` gives `sigma_{2j-1}^2`, then `x_p, ..., x_1` give `sigma_{2j-2}^2`,
/// with a left ancilla pair created before `sigma_0` is used.
pub fn correction_braidword(x: &[u8], z: &[u8]) -> Vec<BraidOp> {
    let p = x.len().min(z.len());
    let mut word: Vec<BraidOp> = (1..=p)
        .filter(|&j| z[j - 1] == 1)
        .map(|j| BraidOp::Sigma {
            generator: 2 * j as i32 - 1,
            power: 2,
        })
        .collect();
    for j in (1..=p).rev().filter(|&j| x[j - 1] == 1) {
        if j == 1 {
            word.push(BraidOp::CreateLeft);
        }
        word.push(BraidOp::Sigma {
            generator: 2 * j as i32 - 2,
            power: 2,
        });
    }
    word
}

/// Vertex operators `v_j` realised by the word, one per `sigma_{2j-2}^2`.
pub fn vertex_operators(word: &[BraidOp]) -> Vec<usize> {
    word.iter()
        .filter_map(|op| match op {
            BraidOp::Sigma { generator, .. } if generator % 2 == 0 => {
                Some((generator / 2 + 1) as usize)
            }
            _ => None,
        })
        .collect()
}
