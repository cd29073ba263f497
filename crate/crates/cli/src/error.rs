use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] k3hilb::Error),
    #[error("verification failed: {0} checks failed")]
    Verification(usize),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 2 for invalid input, 3 for a failed consistency check, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        use k3hilb::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Verification(_) => 3,
            CliError::Core(e) => match e {
                E::NotACharacter { .. }
                | E::Inconsistent(_)
                | E::NotInvariant(_)
                | E::InexactDivision(_) => 3,
                E::RankOutOfRange { .. }
                | E::OutOfRange { .. }
                | E::Parse(_)
                | E::NonDominant(_)
                | E::WeightLength(..)
                | E::HalfSpinPair(_)
                | E::UnsupportedRootSystem { .. }
                | E::OracleRankCap { .. } => 2,
                _ => 1,
            },
            CliError::Io(_) | CliError::Json(_) | CliError::Csv(_) => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
