use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("maps do not compose: {0}")]
    Composition(String),
    #[error("malformed structure: {0}")]
    Structure(String),
    #[error("simplicial identity d_{i} d_{j} = d_{jm1} d_{i} fails on generator `{generator}`", jm1 = .j - 1)]
    Identity { generator: String, i: usize, j: usize },
    #[error("enumeration exceeded the cap of {0} candidate extensions")]
    CapExceeded(u64),
    #[error("infinite result: {0}")]
    Infinite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
