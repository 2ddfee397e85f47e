use thiserror::Error;

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: u32, right: u32 },

    #[error("basis index {index} out of range for level {level} (dimension {})", 1usize << level)]
    IndexOutOfRange { level: u32, index: usize },

    #[error("coefficient vector has length {len}, expected {expected}")]
    BadLength { len: usize, expected: usize },

    #[error("{op} requires level >= {min}, got {level}")]
    LevelTooLow { op: &'static str, min: u32, level: u32 },

    #[error("{op}: `{arg}` must be pure")]
    NotPure { op: &'static str, arg: &'static str },

    #[error("{op}: `{arg}` must be doubly pure")]
    NotDoublyPure { op: &'static str, arg: &'static str },

    #[error("{op}: `{arg}` must be non-zero")]
    Zero { op: &'static str, arg: &'static str },

    #[error("{op}: `{arg}` must be alternative")]
    NotAlternative { op: &'static str, arg: &'static str },

    #[error("{op}: `{arg}` has norm_sq {norm_sq}, expected 1")]
    NotUnitNorm { op: &'static str, arg: &'static str, norm_sq: String },

    #[error("{op}: norm_sq {norm_sq} of `{arg}` is not the square of a rational")]
    IrrationalNorm { op: &'static str, arg: &'static str, norm_sq: String },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("basis elements {0} and {1} are not orthogonal")]
    NonOrthogonalBasis(usize, usize),

    #[error("basis element {0} is zero")]
    ZeroBasisElement(usize),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown theorem `{id}`; registered: {}", known.join(", "))]
    UnknownTheorem { id: String, known: Vec<&'static str> },

    #[error("theorem `{id}` needs level >= {min}, got {level}")]
    TheoremLevel { id: &'static str, min: u32, level: u32 },

    #[error("malformed payload: {0}")]
    Payload(String),
}
