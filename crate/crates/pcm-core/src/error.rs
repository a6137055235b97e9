use std::fmt;

/// Errors from matrix-level operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    /// Adding a row to itself would zero it and change the code.
    SameRow(usize),
    /// A row index was outside `0..m`.
    RowOutOfRange { index: usize, rows: usize },
    /// Two matrices with different column counts were compared.
    DimensionMismatch { left: usize, right: usize },
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::SameRow(i) => write!(f, "cannot add row {i} to itself"),
            MatrixError::RowOutOfRange { index, rows } => {
                write!(f, "row index {index} out of range for {rows} rows")
            }
            MatrixError::DimensionMismatch { left, right } => {
                write!(f, "column counts differ: {left} vs {right}")
            }
        }
    }
}

impl std::error::Error for MatrixError {}

/// Errors from parsing an alist document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlistError {
    message: String,
}

impl AlistError {
    pub(crate) fn new(message: impl Into<String>) -> Self {
        AlistError {
            message: message.into(),
        }
    }

    pub fn message(&self) -> &str {
        &self.message
    }
}

impl fmt::Display for AlistError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed alist: {}", self.message)
    }
}

impl std::error::Error for AlistError {}
