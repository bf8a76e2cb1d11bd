use std::fs;
use std::path::{Path, PathBuf};

use anyonsim::category::{RSymbolFile, TheoryFile};
use anyonsim::library::{solve_hexagon, Kappa, SolverConfig, TheorySpec};
use anyonsim::Theory;
use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Ising,
    Ty,
    TyCyclic,
}

#[derive(Debug, Clone, Args)]
pub struct TheoryArgs {
    /// Built-in theory.
    #[arg(long, value_enum, conflicts_with = "input")]
    pub theory: Option<Kind>,
    /// Rank n of Z2^n for `ty`, group order for `ty-cyclic`.
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    /// Frobenius-Schur indicator of q.
    #[arg(long, value_parser = parse_kappa, allow_hyphen_values = true)]
    pub kappa: Option<Kappa>,
    /// Theory file in JSON format.
    #[arg(long, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Solver restarts used when R-data must be computed.
    #[arg(long, default_value_t = 200)]
    pub restarts: usize,
    /// Which braiding class to use when R-data is computed.
    #[arg(long, default_value_t = 0)]
    pub class: usize,
}

fn parse_kappa(s: &str) -> std::result::Result<Kappa, String> {
    match s {
        "+1" | "1" | "+" => Ok(Kappa::Plus),
        "-1" | "-" => Ok(Kappa::Minus),
        _ => Err(format!("kappa must be +1 or -1, got {s}")),
    }
}

pub struct Loaded {
    pub id: String,
    pub theory: Theory,
}

impl TheoryArgs {
    /// Built-in theories named by the flags. Without `--kappa` this is
    /// `+1`, or both signs when `both_kappas` is set.
    pub fn specs(&self, default: Kind, both_kappas: bool) -> Vec<TheorySpec> {
        let kind = self.theory.unwrap_or(default);
        let kappas = match self.kappa {
            Some(k) => vec![k],
            None if both_kappas => Kappa::both().to_vec(),
            None => vec![Kappa::Plus],
        };
        kappas
            .into_iter()
            .map(|kappa| match kind {
                Kind::Ising => TheorySpec::Ising { kappa },
                Kind::Ty => TheorySpec::TambaraYamagami {
                    rank: self.n,
                    kappa,
                },
                Kind::TyCyclic => TheorySpec::TambaraYamagamiCyclic {
                    order: self.n,
                    kappa,
                },
            })
            .collect()
    }

    pub fn load(&self, default: Kind) -> Result<Loaded> {
        match &self.input {
            Some(path) => load_file(path),
            None => {
                let spec = self.specs(default, false).remove(0);
                Ok(Loaded {
                    id: spec.id(),
                    theory: spec.build()?,
                })
            }
        }
    }

    pub fn solver(&self, seed: u64) -> SolverConfig {
        SolverConfig {
            restarts: self.restarts,
            seed,
            ..SolverConfig::default()
        }
    }

    /// The theory with R-data, solving the hexagon equations (through the
    /// cache) when it has none.
    pub fn braided(&self, default: Kind, cache: &Path) -> Result<Loaded> {
        let loaded = self.load(default)?;
        if loaded.theory.has_braiding() {
            return Ok(loaded);
        }
        let solved = solve_cached(&loaded.theory, &self.solver(0), cache)?;
        let class = solved.classes.get(self.class).ok_or_else(|| {
            CliError::Capability(if solved.classes.is_empty() {
                format!("no braiding found for {}", loaded.id)
            } else {
                format!(
                    "class {} requested, {} found",
                    self.class,
                    solved.classes.len()
                )
            })
        })?;
        let file = TheoryFile {
            r: Some(class.r.clone()),
            ..TheoryFile::from_theory(&loaded.theory)
        };
        Ok(Loaded {
            id: format!("{}#{}", loaded.id, self.class),
            theory: file.to_theory()?,
        })
    }
}

pub fn read_file(path: &Path) -> Result<TheoryFile> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    Ok(TheoryFile::from_json(&text)?)
}

pub fn load_file(path: &Path) -> Result<Loaded> {
    let file = read_file(path)?;
    let id = path.file_name().map_or_else(
        || path.display().to_string(),
        |n| n.to_string_lossy().into_owned(),
    );
    Ok(Loaded {
        id,
        theory: file.to_theory()?,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Invariants {
    pub spins: Vec<[f64; 2]>,
    pub fs_q: Option<i8>,
    pub residual: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolvedClass {
    #[serde(rename = "R")]
    pub r: Vec<RSymbolFile>,
    pub invariants: Invariants,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Solved {
    pub key: String,
    pub restarts: usize,
    pub converged: usize,
    pub classes: Vec<SolvedClass>,
}

pub fn cache_key(theory: &Theory, config: &SolverConfig) -> String {
    let f = serde_json::to_string(&TheoryFile::from_theory(theory).f_only())
        .expect("theory files serialize");
    let mut h = Sha256::new();
    h.update(f.as_bytes());
    h.update(format!(
        "|{}|{}|{}|{}|{}",
        config.restarts,
        config.seed,
        config.max_iterations,
        config.keep_tolerance,
        config.dedup_grid
    ));
    hex::encode(h.finalize())
}

pub fn solve(theory: &Theory, config: &SolverConfig) -> Result<Solved> {
    let report = solve_hexagon(theory, config)?;
    let classes = report
        .classes
        .iter()
        .map(|c| {
            let with_r = c.theory(theory)?;
            Ok(SolvedClass {
                r: TheoryFile::from_theory(&with_r).r.unwrap_or_default(),
                invariants: Invariants {
                    spins: c.spins.iter().map(|z| [z.re, z.im]).collect(),
                    fs_q: c.fs_q,
                    residual: c.residual,
                },
            })
        })
        .collect::<Result<_>>()?;
    Ok(Solved {
        key: cache_key(theory, config),
        restarts: report.restarts,
        converged: report.converged,
        classes,
    })
}

pub fn solve_cached(theory: &Theory, config: &SolverConfig, dir: &Path) -> Result<Solved> {
    let key = cache_key(theory, config);
    let path = dir.join(format!("{key}.json"));
    if let Some(hit) = fs::read_to_string(&path)
        .ok()
        .and_then(|t| serde_json::from_str::<Solved>(&t).ok())
    {
        if hit.key == key {
            return Ok(hit);
        }
    }
    let solved = solve(theory, config)?;
    fs::create_dir_all(dir)?;
    fs::write(
        &path,
        serde_json::to_string(&solved).expect("solutions serialize"),
    )?;
    Ok(solved)
}

/// `ANYONSIM_CACHE_DIR`, else a cache directory beside the output file,
/// else one in the system temporary directory.
pub fn cache_dir(out: Option<&Path>) -> PathBuf {
    if let Some(dir) = std::env::var_os("ANYONSIM_CACHE_DIR") {
        return PathBuf::from(dir);
    }
    match out.and_then(Path::parent) {
        Some(p) if !p.as_os_str().is_empty() => p.join(".anyonsim-cache"),
        Some(_) => PathBuf::from(".anyonsim-cache"),
        None => std::env::temp_dir().join("anyonsim-cache"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_spellings() {
        assert_eq!(parse_kappa("+1"), Ok(Kappa::Plus));
        assert_eq!(parse_kappa("-1"), Ok(Kappa::Minus));
        assert!(parse_kappa("0").is_err());
    }

    #[test]
    fn cache_key_tracks_f_data_and_config() {
        let plus: Theory = TheorySpec::Ising { kappa: Kappa::Plus }.build().unwrap();
        let minus: Theory = TheorySpec::Ising {
            kappa: Kappa::Minus,
        }
        .build()
        .unwrap();
        let cfg = SolverConfig::default();
        assert_eq!(cache_key(&plus, &cfg), cache_key(&plus.clone(), &cfg));
        assert_ne!(cache_key(&plus, &cfg), cache_key(&minus, &cfg));
        assert_ne!(
            cache_key(&plus, &cfg),
            cache_key(&plus, &SolverConfig { seed: 1, ..cfg })
        );
        assert_eq!(cache_key(&plus, &cfg).len(), 64);
    }
}
