use thiserror::Error;

/// Errors reported by the library.
///
/// Refutations (a fan failing validation, a candidate failing the morphism
/// test, a false equality verdict) are *not* errors; they are ordinary
/// results. Errors are reserved for malformed input and shape mismatches.
#[derive(Debug, Error)]
pub enum Error {
    /// Semantically invalid input (negative degree, zero group element, ...).
    #[error("input error: {0}")]
    Input(String),

    /// Unparseable file or text.
    #[error("parse error: {0}")]
    Parse(String),

    /// Two objects that must share a shape (fan, dimension, degrees) do not.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Unknown catalog fan name.
    #[error("unknown catalog fan `{0}`")]
    UnknownCatalog(String),
}

pub type Result<T> = std::result::Result<T, Error>;
