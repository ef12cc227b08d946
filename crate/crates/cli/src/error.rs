use polyhopf::analyzer::AnalyzerError;
use polyhopf::constructions::ConstructionError;
use polyhopf::groups::GroupError;
use polyhopf::hopf::HopfError;
use polyhopf::reptheory::RepError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Analyzer(#[from] AnalyzerError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Construction(ConstructionError::UnknownName(_) | ConstructionError::CyclicBase) | CliError::Group(_) => 2,
            _ => 1,
        }
    }
}
