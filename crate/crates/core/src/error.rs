use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid generator {atom}: {reason}")]
    InvalidGenerator { atom: String, reason: &'static str },
    #[error("operands belong to different algebras")]
    ParamsMismatch,
    #[error("word of length {len} exceeds the configured cap of {cap} generators")]
    ResourceLimit { len: usize, cap: usize },
    #[error("invalid index sequence: {0}")]
    InvalidSequence(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("product of {} kernel classes normal-forms to zero: {}", factors.len(), factors.join(" * "))]
    CertificateFailure { factors: Vec<String> },
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("invalid generator at position {position}: {source}")]
    InvalidAtom {
        position: usize,
        #[source]
        source: alloc::boxed::Box<Error>,
    },
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("denominator vanishes at t = 0; no power series expansion")]
    PoleAtZero,
    #[error("rational function has no pole form A/(1-t)^2 + B/(1-t) + p(t)")]
    NoPoleForm,
    #[error("invalid sequence rule: {0}")]
    InvalidRule(String),
    #[error("first differences do not stabilise within the horizon: {differences:?}")]
    NoStabilization { differences: Vec<BigInt> },
}
