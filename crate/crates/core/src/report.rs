//! Pass/fail records for identity checks and cross-checks.

use std::fmt;

/// Outcome of one verification, with the parameters it ran at.
///
/// `passed` implies `witness` is `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub passed: bool,
    pub witness: Option<String>,
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn new(name: impl Into<String>) -> Self {
        VerifyReport {
            name: name.into(),
            params: Vec::new(),
            passed: true,
            witness: None,
            notes: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub fn note(mut self, text: impl Into<String>) -> Self {
        self.notes.push(text.into());
        self
    }

    /// Records the first failure; later failures are ignored.
    pub fn fail(&mut self, witness: impl Into<String>) {
        if self.passed {
            self.passed = false;
            self.witness = Some(witness.into());
        }
    }

    /// Fails with `witness()` unless `ok`.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.fail(witness());
        }
    }

    /// Folds another report in; the combined report passes only if both do.
    pub fn absorb(&mut self, other: VerifyReport) {
        if !other.passed {
            let w = other.witness.unwrap_or_default();
            self.fail(format!("{}: {}", other.name, w));
        }
        self.notes.extend(other.notes);
    }

    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.name)?;
        if !self.params.is_empty() {
            write!(f, " ({})", self.params_string())?;
        }
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_failure_wins() {
        let mut r = VerifyReport::new("demo").param("n", 3);
        assert!(r.passed);
        r.fail("a");
        r.fail("b");
        assert_eq!(r.witness.as_deref(), Some("a"));
        assert_eq!(r.to_string(), "FAIL demo (n=3): a");
    }
}
