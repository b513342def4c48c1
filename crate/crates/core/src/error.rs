use thiserror::Error;

use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("EmptyGenerators: at least one generator is required")]
    EmptyGenerators,

    #[error("ZeroGenerator: generators must be positive integers")]
    ZeroGenerator,

    #[error("GcdNotOne: the generators {generators:?} have gcd {gcd}")]
    GcdNotOne { generators: Vec<u64>, gcd: u64 },

    #[error("NotASemigroup: {reason}")]
    NotASemigroup { reason: String },

    #[error("NonPositiveDivisor: quotient divisor must be at least 1")]
    NonPositiveDivisor,

    #[error("NonPositiveParameter: proportionally modular parameters must be positive (got {a}, {b}, {c})")]
    NonPositiveParameter { a: u64, b: u64, c: u64 },

    #[error("TooLarge: conductor exceeds the limit of {limit}")]
    TooLarge { limit: u64 },

    #[error("IsNaturals: the operation requires a semigroup other than N")]
    IsNaturals,

    #[error("BadM: {m} must be an odd element of {semigroup}")]
    BadM { m: u64, semigroup: String },

    #[error("NotGapSubset: {element} is not a gap of {semigroup}")]
    NotGapSubset { element: u64, semigroup: String },

    #[error("InvalidCertificate: {reason}")]
    InvalidCertificate { reason: String },

    #[error("PredicateNotClosed: predicate `{predicate}` accepts {semigroup} but rejects its quotient by {divisor}")]
    PredicateNotClosed {
        predicate: String,
        semigroup: String,
        divisor: u64,
    },

    #[error("UnknownFormat: `{0}`")]
    UnknownFormat(String),

    #[error("BoundTooLarge: bound {bound} exceeds the cap of {cap}")]
    BoundTooLarge { bound: u64, cap: u64 },

    #[error("MissingExtremum: no {which} element in the extension set of {semigroup}")]
    MissingExtremum {
        which: &'static str,
        semigroup: String,
    },
}

impl Error {
    /// The bare variant name, used by the CLI when reporting domain errors.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyGenerators => "EmptyGenerators",
            Error::ZeroGenerator => "ZeroGenerator",
            Error::GcdNotOne { .. } => "GcdNotOne",
            Error::NotASemigroup { .. } => "NotASemigroup",
            Error::NonPositiveDivisor => "NonPositiveDivisor",
            Error::NonPositiveParameter { .. } => "NonPositiveParameter",
            Error::TooLarge { .. } => "TooLarge",
            Error::IsNaturals => "IsNaturals",
            Error::BadM { .. } => "BadM",
            Error::NotGapSubset { .. } => "NotGapSubset",
            Error::InvalidCertificate { .. } => "InvalidCertificate",
            Error::PredicateNotClosed { .. } => "PredicateNotClosed",
            Error::UnknownFormat(_) => "UnknownFormat",
            Error::BoundTooLarge { .. } => "BoundTooLarge",
            Error::MissingExtremum { .. } => "MissingExtremum",
        }
    }

    pub(crate) fn bad_m(m: u64, s: &NumericalSemigroup) -> Self {
        Error::BadM {
            m,
            semigroup: s.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
