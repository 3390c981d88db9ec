//! Enumeration size guard.
//!
//! Every exhaustive search in the workbench counts the candidates it visits
//! against a [`Cap`]. Exceeding the cap is a hard error, never a silent
//! truncation: a partial enumeration would poison every downstream
//! universal-property check.

/// Default number of candidates an enumeration may visit per call.
pub const DEFAULT_CAP: usize = 50_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cap(pub usize);

impl Default for Cap {
    fn default() -> Self {
        Cap(DEFAULT_CAP)
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
#[error("size cap exceeded in {operation}: more than {cap} candidates")]
pub struct CapError {
    pub operation: String,
    pub cap: usize,
}

/// A deterministic candidate counter tied to one operation name.
#[derive(Debug)]
pub struct Counter<'a> {
    cap: Cap,
    seen: usize,
    operation: &'a str,
}

impl<'a> Counter<'a> {
    pub fn new(cap: Cap, operation: &'a str) -> Self {
        Counter { cap, seen: 0, operation }
    }

    /// Record one candidate; errors once the cap is passed.
    pub fn tick(&mut self) -> Result<(), CapError> {
        self.seen += 1;
        if self.seen > self.cap.0 {
            Err(CapError { operation: self.operation.to_string(), cap: self.cap.0 })
        } else {
            Ok(())
        }
    }

    pub fn seen(&self) -> usize {
        self.seen
    }
}
