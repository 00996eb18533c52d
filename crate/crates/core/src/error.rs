use thiserror::Error;

use crate::boundary::Flavor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The candidate quadruple violates one or more axioms; the report lists them.
    #[error("invalid geometric type: {0}")]
    Invalid(String),

    #[error("label {0} is out of range for this geometric type")]
    InvalidLabel(String),

    #[error("expected a {expected}-flavored boundary label, got {got}")]
    Flavor { expected: Flavor, got: Flavor },

    #[error("incidence matrix is not binary; apply refine_if_needed first")]
    NotBinary,

    #[error("incidence matrix is not mixing")]
    NotMixing,

    #[error("code is not admissible: {0}")]
    NotAdmissible(String),

    #[error("code is outside the required stratum: {0}")]
    Stratum(String),

    #[error("code is periodic; the operation needs a non-periodic code")]
    Periodic,

    #[error("more than one partner satisfies the identification conditions")]
    AmbiguousPartner,

    #[error("class closure hit the cap of {cap} members; relation is indeterminate")]
    Indeterminate { cap: usize },

    #[error("budget exceeded: {needed} > {budget}")]
    Budget { needed: u128, budget: u128 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    Argument(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Invalid(_) => "invalid-type",
            Error::InvalidLabel(_) => "invalid-label",
            Error::Flavor { .. } => "wrong-flavor",
            Error::NotBinary => "not-binary",
            Error::NotMixing => "not-mixing",
            Error::NotAdmissible(_) => "not-admissible",
            Error::Stratum(_) => "wrong-stratum",
            Error::Periodic => "periodic",
            Error::AmbiguousPartner => "ambiguous-partner",
            Error::Indeterminate { .. } => "indeterminate",
            Error::Budget { .. } => "budget-exceeded",
            Error::Parse(_) => "parse",
            Error::Argument(_) => "argument",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
