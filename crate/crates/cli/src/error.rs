use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Capability(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Capability(_) => 4,
            CliError::Io(_) | CliError::Other(_) => 1,
        })
    }
}

impl From<anyonsim::Error> for CliError {
    fn from(e: anyonsim::Error) -> Self {
        use anyonsim::Error as E;
        let msg = e.to_string();
        match e {
            E::Parse(_)
            | E::FusionRules(_)
            | E::UnknownLabel(_)
            | E::MissingF(..)
            | E::FBlockShape(..)
            | E::MissingR(..) => CliError::Parse(msg),
            E::Precondition(_) | E::BadPosition(..) => CliError::Precondition(msg),
            E::NoBraiding | E::Unsupported(_) => CliError::Capability(msg),
            _ => CliError::Other(msg),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn library_errors_map_to_exit_codes() {
        use anyonsim::Error as E;
        assert!(matches!(
            CliError::from(E::Parse("x".into())),
            CliError::Parse(_)
        ));
        assert!(matches!(
            CliError::from(E::Precondition("x".into())),
            CliError::Precondition(_)
        ));
        assert!(matches!(
            CliError::from(E::NoBraiding),
            CliError::Capability(_)
        ));
        assert!(matches!(
            CliError::from(E::Unsupported("x".into())),
            CliError::Capability(_)
        ));
        assert!(matches!(
            CliError::from(E::Numerical("x".into())),
            CliError::Other(_)
        ));
    }
}
