use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("polynomials belong to different rings ({0} vs {1})")]
    RingMismatch(String, String),
    #[error("colon by the zero polynomial is undefined")]
    ZeroColon,
}
