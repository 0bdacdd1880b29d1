use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("diagrams are not composable: {0}")]
    NotComposable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported characteristic {0}")]
    UnsupportedCharacteristic(u64),
    #[error("characteristic {p} must exceed n = {n}")]
    CharacteristicTooSmall { p: u64, n: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("trace method did not determine the decomposition: {0}")]
    Undetermined(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidDiagram(_) => "invalid_diagram",
            Error::NotComposable(_) => "not_composable",
            Error::Parse(_) => "parse",
            Error::UnsupportedCharacteristic(_) => "unsupported_characteristic",
            Error::CharacteristicTooSmall { .. } => "characteristic_too_small",
            Error::Dimension(_) => "dimension",
            Error::Inconsistent => "inconsistent",
            Error::Undetermined(_) => "undetermined",
            Error::Budget(_) => "budget",
            Error::Invalid(_) => "invalid",
        }
    }
}
