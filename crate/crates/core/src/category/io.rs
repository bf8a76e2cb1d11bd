use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::fusion::{FusionRules, Label};
use super::skeletal::{FKey, RKey, SkeletalData};
use crate::error::{Error, Result};
use crate::scalar::{c, Real, C};

/// JSON layout of a theory. Indices refer to `labels`, complex numbers are
/// `[re, im]` pairs and F entries are stored row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoryFile {
    pub labels: Vec<String>,
    pub dual: Vec<u16>,
    pub fusion: Vec<[u16; 3]>,
    #[serde(rename = "F")]
    pub f: Vec<FBlockFile>,
    #[serde(rename = "R", default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<RSymbolFile>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FBlockFile {
    pub abcd: [u16; 4],
    pub rows: Vec<u16>,
    pub cols: Vec<u16>,
    pub entries: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RSymbolFile {
    pub ab: [u16; 2],
    pub c: u16,
    pub value: [f64; 2],
}

fn pair<T: Real>(z: C<T>) -> [f64; 2] {
    [z.re.as_f64(), z.im.as_f64()]
}

fn complex<T: Real>([re, im]: [f64; 2]) -> C<T> {
    c(T::lit(re), T::lit(im))
}

fn labels(v: &[u16]) -> Vec<Label> {
    v.iter().map(|&l| Label(l)).collect()
}

impl TheoryFile {
    pub fn from_theory<T: Real>(theory: &SkeletalData<T>) -> Self {
        let rules = theory.rules();
        let f = theory
            .f_blocks()
            .map(|(key, block)| FBlockFile {
                abcd: key.map(|l| l.0),
                rows: block.rows.iter().map(|l| l.0).collect(),
                cols: block.cols.iter().map(|l| l.0).collect(),
                entries: block.matrix.entries().iter().map(|&z| pair(z)).collect(),
            })
            .collect();
        let r = theory.r_symbols().map(|r| {
            r.iter()
                .map(|(&[a, b, c], &z)| RSymbolFile {
                    ab: [a.0, b.0],
                    c: c.0,
                    value: pair(z),
                })
                .collect()
        });
        Self {
            labels: rules.names().to_vec(),
            dual: rules.labels().map(|a| rules.dual(a).0).collect(),
            fusion: rules.triples().map(|(a, b, c)| [a.0, b.0, c.0]).collect(),
            f,
            r,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("theory files always serialize")
    }

    /// The same file with the R-symbols dropped.
    pub fn f_only(&self) -> Self {
        Self {
            r: None,
            ..self.clone()
        }
    }

    pub fn to_theory<T: Real>(&self) -> Result<SkeletalData<T>> {
        let triples: Vec<_> = self
            .fusion
            .iter()
            .map(|&[a, b, c]| (Label(a), Label(b), Label(c)))
            .collect();
        if triples.iter().collect::<BTreeSet<_>>().len() != triples.len() {
            return Err(Error::Parse(
                "repeated fusion triple (multiplicities are not supported)".into(),
            ));
        }
        let rules = FusionRules::new(self.labels.clone(), labels(&self.dual), &triples)?;
        let mut entries: BTreeMap<(FKey, Label, Label), C<T>> = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for block in &self.f {
            let key: FKey = block.abcd.map(Label);
            if !seen.insert(key) {
                return Err(Error::Parse(format!(
                    "F block {:?} given twice",
                    block.abcd
                )));
            }
            let (rows, cols) = (labels(&block.rows), labels(&block.cols));
            if block.entries.len() != rows.len() * cols.len() {
                return Err(Error::Parse(format!(
                    "F block {:?} has {} entries",
                    block.abcd,
                    block.entries.len()
                )));
            }
            let sorted = |v: &[Label]| v.iter().copied().collect::<BTreeSet<_>>();
            if sorted(&rows) != sorted(&SkeletalData::<T>::right_channels(&rules, key))
                || sorted(&cols) != sorted(&SkeletalData::<T>::left_channels(&rules, key))
            {
                return Err(Error::FBlockShape(key[0], key[1], key[2], key[3]));
            }
            for (i, &f) in rows.iter().enumerate() {
                for (j, &e) in cols.iter().enumerate() {
                    entries.insert((key, f, e), complex(block.entries[i * cols.len() + j]));
                }
            }
        }
        let present: BTreeSet<FKey> = seen;
        if let Some(&k) = SkeletalData::<T>::f_keys(&rules)
            .iter()
            .find(|k| !present.contains(*k))
        {
            return Err(Error::MissingF(k[0], k[1], k[2], k[3]));
        }
        let theory = SkeletalData::from_fn(rules, |key, f, e| entries[&(key, f, e)])?;
        match &self.r {
            None => Ok(theory),
            Some(r) => {
                let mut map: BTreeMap<RKey, C<T>> = BTreeMap::new();
                for s in r {
                    if map
                        .insert(
                            [Label(s.ab[0]), Label(s.ab[1]), Label(s.c)],
                            complex(s.value),
                        )
                        .is_some()
                    {
                        return Err(Error::Parse(format!(
                            "R symbol {:?};{} given twice",
                            s.ab, s.c
                        )));
                    }
                }
                theory.with_braiding(map)
            }
        }
    }
}
