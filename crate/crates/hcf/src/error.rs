use thiserror::Error;

/// Errors shared by the arithmetic, expansion and geometry layers.
#[derive(Debug, Error)]
pub enum HcfError {
    #[error("division by zero in Z[i]")]
    DivisionByZero,

    /// A floating component sits too close to a half-integer rounding
    /// boundary for the certified error radius to decide the digit.
    #[error("component within error radius of a rounding boundary")]
    AmbiguousRounding,

    #[error("orbit precision dropped to {certified} certified bits (floor {floor})")]
    PrecisionExhausted { certified: i64, floor: i64 },

    #[error("shift map applied to zero (expansion already terminated)")]
    ZeroInput,

    #[error("membership query cannot be certified near a shape boundary")]
    AmbiguousBoundary,

    #[error("transition image is not one of the thirteen catalogue shapes: {0}")]
    UnclassifiableShape(String),

    #[error("lower diameter bound needs every digit norm >= sqrt(8); digit {0} violates this")]
    LowerBoundInapplicable(String),

    #[error("digit filter too weak: L = {0} < sqrt(8), no lower diameter bound")]
    FilterTooWeak(f64),

    #[error("no bracketing pair of exponents at this depth")]
    NoBracket,

    #[error("stage has infinitely many descendants and no tail bound at s = {0}")]
    TailBoundMissing(f64),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, HcfError>;
