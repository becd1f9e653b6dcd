use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::Error;

/// Shared node counter for bounded searches. Every exhaustive search in the
/// crate ticks a budget and fails loudly instead of running unbounded.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

/// Default node budget for enumeration and brute-force scans.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Default sub-multiset budget for minimality witness searches.
pub const DEFAULT_SUBSET_BUDGET: u64 = 1 << 20;

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
        }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    /// Consume `n` nodes, erroring once the limit is crossed.
    pub fn tick(&self, n: u64) -> Result<(), Error> {
        let prior = self.used.fetch_add(n, Ordering::Relaxed);
        if prior.saturating_add(n) > self.limit {
            Err(Error::SearchBudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_NODE_BUDGET)
    }
}
