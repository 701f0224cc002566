use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("singular point x_s = {x:.12e} inside the requested range ({context})")]
    Singular { x: f64, context: String },
    #[error("verification failed: {failed} of {total} checks")]
    Verification { failed: usize, total: usize },
    #[error(transparent)]
    Numeric(susypt::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Singular { .. } => 3,
            CliError::Verification { .. } => 4,
            CliError::Numeric(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<susypt::Error> for CliError {
    fn from(e: susypt::Error) -> Self {
        match e {
            susypt::Error::Singular { x } => CliError::Singular {
                x,
                context: "evaluation hit the singularity".into(),
            },
            susypt::Error::Domain(msg) => CliError::Config(msg),
            other => CliError::Numeric(other),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
