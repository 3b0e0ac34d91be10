//! Node and wall-clock limits for exhaustive searches.

use std::time::{Duration, Instant};

use thiserror::Error;

/// Default node cap for solver searches.
pub const DEFAULT_NODES: u64 = 10_000_000;
/// Default per-instance time limit.
pub const DEFAULT_SECONDS: u64 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub time_limit: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: DEFAULT_NODES,
            time_limit: Some(Duration::from_secs(DEFAULT_SECONDS)),
        }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes,
            time_limit: None,
        }
    }

    pub fn unlimited() -> Self {
        Budget {
            max_nodes: u64::MAX,
            time_limit: None,
        }
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    pub fn meter(&self) -> Meter {
        Meter {
            nodes: 0,
            max_nodes: self.max_nodes,
            deadline: self.time_limit.map(|d| Instant::now() + d),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget exceeded after {nodes} nodes")]
pub struct BudgetExceeded {
    pub nodes: u64,
}

/// Running counter checked by the searches.
#[derive(Debug)]
pub struct Meter {
    nodes: u64,
    max_nodes: u64,
    deadline: Option<Instant>,
}

impl Meter {
    #[inline]
    pub fn tick(&mut self) -> Result<(), BudgetExceeded> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(BudgetExceeded { nodes: self.nodes });
        }
        if self.nodes & 0xFFF == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    return Err(BudgetExceeded { nodes: self.nodes });
                }
            }
        }
        Ok(())
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }
}
