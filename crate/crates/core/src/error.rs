//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    /// A caller-supplied argument violates a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Two objects that must live on the same box/partition do not.
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    /// The system is too large for exact enumeration.
    #[error("enumeration cap exceeded: {0}")]
    EnumerationCap(String),

    /// A Monte Carlo indicator estimate came out exactly zero.
    #[error("rare-event regime: indicator probability estimate is 0 ({0})")]
    RareEventRegime(String),

    /// The ghost cluster reached the wired boundary under a negative field.
    #[error("conditioning violated: {0}")]
    ConditioningViolated(String),

    /// Rejection sampling exceeded its configured cap.
    #[error("rejection cap exceeded after {0} attempts")]
    RejectionOverflow(u64),

    /// A half-space family does not bound a polytope.
    #[error("unbounded half-space family: {0}")]
    Unbounded(String),

    /// The conditioning event has probability zero.
    #[error("empty event: {0}")]
    EmptyEvent(String),

    /// No shift keeps the shape inside the macroscopic box.
    #[error("no admissible shift: {0}")]
    NoAdmissibleShift(String),

    /// An iterative construction hit its cap before meeting its certificate.
    #[error("did not converge: {0}")]
    Nonconvergence(String),

    /// Internal consistency violation; indicates a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
