//! Pass/fail verdicts with located witnesses.

use std::fmt;

/// Where a check failed: which identity, at which deformation order (if any),
/// on which tuple of basis indices (0-based).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Witness {
    pub order: Option<usize>,
    pub check: String,
    pub tuple: Vec<usize>,
}

impl Witness {
    pub fn new(check: impl Into<String>, tuple: Vec<usize>) -> Self {
        Witness {
            order: None,
            check: check.into(),
            tuple,
        }
    }

    pub fn at_order(mut self, order: usize) -> Self {
        self.order = Some(order);
        self
    }

    /// Tuple as 1-based indices, the convention used in files and reports.
    pub fn tuple_one_based(&self) -> Vec<usize> {
        self.tuple.iter().map(|i| i + 1).collect()
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}", self.check, self.tuple_one_based())?;
        if let Some(o) = self.order {
            write!(f, " (order {o})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Witness),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }

    /// Runs `next` only if `self` passed.
    pub fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Pass => next(),
            fail => fail,
        }
    }

    pub(crate) fn fail(check: impl Into<String>, tuple: Vec<usize>) -> Verdict {
        Verdict::Fail(Witness::new(check, tuple))
    }
}
