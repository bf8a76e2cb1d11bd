use thiserror::Error;

use crate::category::Label;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("group elements come from different ranks ({0} vs {1})")]
    GroupMismatch(u32, u32),
    #[error("bicharacter table is not symmetric and nondegenerate")]
    BadBicharacter,
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("tolerance {0} outside (0, 1)")]
    BadTolerance(f64),
    #[error("fusion rules invalid: {0}")]
    FusionRules(String),
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("missing F-matrix for ({0:?},{1:?},{2:?},{3:?})")]
    MissingF(Label, Label, Label, Label),
    #[error("F-matrix block ({0:?},{1:?},{2:?},{3:?}) has the wrong index set")]
    FBlockShape(Label, Label, Label, Label),
    #[error("missing R-symbol for ({0:?},{1:?};{2:?})")]
    MissingR(Label, Label, Label),
    #[error("theory has no braiding data")]
    NoBraiding,
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("gauge transformation is invalid: {0}")]
    BadGauge(String),
    #[error("invalid position {0} for a state with {1} anyons")]
    BadPosition(usize, usize),
    #[error("recoupling is impossible at this node: {0}")]
    BadMove(String),
    #[error("forced outcome {0:?} has zero probability")]
    ZeroMass(Label),
    #[error("states live in different bases")]
    BasisMismatch,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
