//! Error types shared across the crate.

use thiserror::Error;

/// A single validation failure, pointing at the offending field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldError {
    /// Dotted path of the field, e.g. `vehicle.mass`.
    pub field: String,
    /// What the invariant requires.
    pub message: String,
}

impl std::fmt::Display for FieldError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

/// Configuration rejected by validation. Carries every violated invariant,
/// one entry per offending field.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct InvalidConfig(pub Vec<FieldError>);

impl std::fmt::Display for InvalidConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "invalid configuration ({} error(s)): ", self.0.len())?;
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

impl InvalidConfig {
    /// True when some error mentions the given field path fragment.
    pub fn mentions(&self, fragment: &str) -> bool {
        self.0.iter().any(|e| e.field.contains(fragment))
    }
}

/// An operation was called outside its mathematical domain.
#[derive(Clone, Debug, PartialEq, Error)]
#[error("domain error in {op}: {detail}")]
pub struct DomainError {
    pub op: &'static str,
    pub detail: String,
}

impl DomainError {
    pub fn new(op: &'static str, detail: impl Into<String>) -> Self {
        DomainError {
            op,
            detail: detail.into(),
        }
    }
}
