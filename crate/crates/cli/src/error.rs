use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Budget(_) => 3,
            CliError::Input(_) | CliError::Io(_) => 2,
        }
    }
}

impl From<cistab::Error> for CliError {
    fn from(e: cistab::Error) -> Self {
        match e {
            cistab::Error::BudgetExhausted(_) => CliError::Budget(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
