use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("mixed signature at byte {offset}: `*` cannot be combined with `[,]` or `{{,}}`")]
    MixedSignature { offset: usize },

    #[error("generator index 0 at byte {offset}; generators start at x1")]
    ZeroGenerator { offset: usize },

    #[error("expected a term over {expected}, found {found}")]
    SignatureMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("generator x{index} is outside the permutation domain 1..={size}")]
    IndexOutOfRange { index: u32, size: usize },

    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("expected a multilinear polynomial of degree {expected}: {detail}")]
    NotMultilinear { expected: usize, detail: String },

    #[error("degree mismatch: basis has degree {expected}, polynomial has degree {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("differential monomial {monomial} has weight {weight}, expected -1")]
    Weight { monomial: String, weight: i64 },

    #[error("invalid identity: {0}")]
    Identity(String),

    #[error("invalid permutation: {0}")]
    Permutation(String),

    #[error("unknown variety `{0}`")]
    UnknownVariety(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn syntax(offset: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            offset,
            message: message.into(),
        }
    }

    /// True for errors caused by malformed text input.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::MixedSignature { .. }
                | Error::ZeroGenerator { .. }
                | Error::SignatureMismatch { .. }
                | Error::Identity(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
