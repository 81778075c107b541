use crate::error::{Error, Result};

/// Environment variable that overrides the default node budget.
pub const BUDGET_ENV: &str = "SPECTRALAB_BUDGET";

/// Upper bound on branch nodes explored by a single exponential search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub nodes: u64,
}

impl Budget {
    pub const DEFAULT_NODES: u64 = 100_000_000;

    pub fn new(nodes: u64) -> Self {
        Budget { nodes }
    }

    /// Default budget, overridden by `SPECTRALAB_BUDGET` when it parses as an integer.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
            .map(Budget::new)
            .unwrap_or_default()
    }

    pub(crate) fn meter(self, context: &'static str) -> Meter {
        Meter {
            used: 0,
            limit: self.nodes,
            context,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(Self::DEFAULT_NODES)
    }
}

/// Running node count for one search.
#[derive(Debug)]
pub(crate) struct Meter {
    pub used: u64,
    limit: u64,
    context: &'static str,
}

impl Meter {
    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded {
                context: self.context,
                budget: self.limit,
            })
        } else {
            Ok(())
        }
    }
}
