use std::fmt;

/// Description of the first identity that failed inside a check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch(pub String);

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<crate::error::Error> for Mismatch {
    fn from(e: crate::error::Error) -> Self {
        Mismatch(e.to_string())
    }
}

pub type Verdict = Result<(), Mismatch>;

pub(crate) fn ensure(cond: bool, what: impl FnOnce() -> String) -> Verdict {
    if cond {
        Ok(())
    } else {
        Err(Mismatch(what()))
    }
}
