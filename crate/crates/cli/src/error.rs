use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    /// The mathematics answered no: a relation fails, nothing matched.
    pub const NEGATIVE: u8 = 1;
    pub const USAGE: u8 = 2;
    /// Network, cache or file system trouble.
    pub const ENVIRONMENT: u8 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] galileo_core::Error),
    #[error(transparent)]
    Oeis(#[from] galileo_oeis::OeisError),
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use galileo_core::Error as C;
        use galileo_oeis::OeisError as O;
        match self {
            CliError::Usage(_) => exit::USAGE,
            // the input was read fine and the answer is no
            CliError::Core(C::LocalIdentityViolated { .. } | C::RootRelationViolated) => exit::NEGATIVE,
            CliError::Core(_) => exit::USAGE,
            CliError::Oeis(O::InvalidIdentifier(_) | O::InvalidOptions(_) | O::TooFewTerms { .. }) => exit::USAGE,
            CliError::Oeis(_) | CliError::Read { .. } => exit::ENVIRONMENT,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
