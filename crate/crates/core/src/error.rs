use thiserror::Error;

/// Errors raised by the simulation core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A configuration field violates its invariant.
    #[error("invalid configuration `{key}`: {reason}")]
    InvalidConfig { key: &'static str, reason: String },

    /// A function was called with arguments outside its domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("no pursuers given")]
    NoPursuers,

    /// The evader sits exactly on top of its closest pursuer, so there is no
    /// direction to flee in.
    #[error("evader coincides with pursuer {0}")]
    DegenerateEvasion(usize),

    #[error("every action has utility -inf")]
    NoFeasibleAction,

    #[error("exhaustive enumeration over {0} pursuers is not supported (max {max})", max = crate::game::MAX_ENUMERATION_PURSUERS)]
    TooManyPursuers(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
