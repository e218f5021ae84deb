use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed spec: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema version {0}")]
    Schema(u64),
    #[error("sign map key {0:?} is not a positive integer")]
    SigmaKey(String),
    #[error("sign of class {divisor} must be 1 or -1, got {value}")]
    SigmaValue { divisor: u64, value: i64 },
    #[error("unknown export format {0:?}")]
    UnknownFormat(String),
    #[error("unknown mode {0:?}")]
    UnknownMode(String),
    #[error("modulus {n} is not a multiple of {step} as required by mode {mode}")]
    ModeModulus {
        n: u64,
        step: u64,
        mode: &'static str,
    },
    #[error("{count} specs exceed the budget of {budget}")]
    BudgetExceeded { count: u128, budget: u128 },
    #[error(transparent)]
    Core(#[from] imcg_core::Error),
}

impl Error {
    /// Stable machine-readable tag for structured error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Io { .. } => "io",
            Error::Json(_) | Error::Schema(_) | Error::SigmaKey(_) | Error::SigmaValue { .. } => {
                "format"
            }
            Error::UnknownFormat(_) => "unknown_format",
            Error::UnknownMode(_) => "unknown_mode",
            Error::ModeModulus { .. } => "bad_modulus",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::Core(imcg_core::Error::VerificationFailed { .. }) => "verification_failed",
            Error::Core(_) => "invalid_input",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
