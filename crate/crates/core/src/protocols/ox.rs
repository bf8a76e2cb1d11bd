use serde::Serialize;

/// Positions of Bob's X-type errors after multi-qubit teleportation, drawn
/// as crosses on sites `1..=p`, plus the charge pushed onto the left edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OxDiagram {
    crosses: Vec<bool>,
    edge_error: bool,
}

impl OxDiagram {
    /// Sites carrying a cross, 1-based.
    pub fn crosses(&self) -> Vec<usize> {
        self.crosses
            .iter()
            .enumerate()
            .filter(|(_, &c)| c)
            .map(|(k, _)| k + 1)
            .collect()
    }

    pub fn edge_error(&self) -> bool {
        self.edge_error
    }

    pub fn sites(&self) -> usize {
        self.crosses.len()
    }

    pub fn is_clear(&self) -> bool {
        self.crosses.iter().all(|c| !c)
    }

    /// `v_j = X_{j-1} X_j`; site 0 is the left ancilla.
    pub fn apply_vertex(&mut self, j: usize) {
        if j >= 2 {
            self.crosses[j - 2] ^= true;
        }
        self.crosses[j - 1] ^= true;
    }

    /// Clears the diagram by moving the rightmost cross left until it meets
    /// another cross or leaves through the left edge. Returns the vertex
    /// operators used, in order.
    pub fn sweep(&mut self) -> Vec<usize> {
        let mut used = Vec::new();
        while let Some(mut site) = self.crosses.iter().rposition(|&c| c).map(|k| k + 1) {
            loop {
                let annihilates = site >= 2 && self.crosses[site - 2];
                self.apply_vertex(site);
                used.push(site);
                if annihilates || site == 1 {
                    break;
                }
                site -= 1;
            }
        }
        used
    }

    /// ASCII rendering: `x` for a cross, `o` otherwise.
    pub fn render(&self) -> String {
        self.crosses
            .iter()
            .map(|&c| if c { 'x' } else { 'o' })
            .collect()
    }
}

/// Builds the diagram from the bits `x_1..x_p` measured by Alice.
///
/// A maximal run of ones `x_j..x_{j+l}` with `j > 1` puts crosses on sites
/// `j - 1` and `j + l`. A run starting at `x_1` and ending at `x_j` puts a
/// single cross on site `j` and flags an edge error.
pub fn ox_from_bits(x: &[u8]) -> OxDiagram {
    let p = x.len();
    let mut crosses = vec![false; p];
    let mut edge_error = false;
    let mut j = 1;
    while j <= p {
        if x[j - 1] == 0 {
            j += 1;
            continue;
        }
        let mut end = j;
        while end < p && x[end] == 1 {
            end += 1;
        }
        if j == 1 {
            crosses[end - 1] = true;
            edge_error = true;
        } else {
            crosses[j - 2] = true;
            crosses[end - 1] = true;
        }
        j = end + 1;
    }
    OxDiagram {
        crosses,
        edge_error,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tabulated_example() {
        let d = ox_from_bits(&[0, 0, 1, 1]);
        assert_eq!(d.crosses(), [2, 4]);
        assert!(!d.edge_error());
        assert_eq!(d.render(), "oxox");
    }

    #[test]
    fn leading_run_is_edge_error() {
        let d = ox_from_bits(&[1, 1, 0]);
        assert_eq!(d.crosses(), [2]);
        assert!(d.edge_error());
    }
}
