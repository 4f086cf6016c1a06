use crate::error::{Error, Result};

/// Default cap on `m(G)` for edge-subset enumeration (2^m subgraphs).
pub const DEFAULT_EDGE_CAP: usize = 20;

/// Default cap on the number of assignments a brute-force oracle may visit.
pub const DEFAULT_WORK_CAP: u64 = 1 << 28;

pub const EDGE_CAP_ENV: &str = "GRAPHPOLY_EDGE_CAP";

/// Guards that turn exponential blow-ups into errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub edge_cap: usize,
    pub work_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { edge_cap: DEFAULT_EDGE_CAP, work_cap: DEFAULT_WORK_CAP }
    }
}

impl Limits {
    /// Defaults, with the edge cap overridden by `GRAPHPOLY_EDGE_CAP` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(EDGE_CAP_ENV) {
            limits.edge_cap = raw.trim().parse().map_err(|_| {
                Error::Input(format!("{EDGE_CAP_ENV} must be a non-negative integer, got {raw:?}"))
            })?;
        }
        Ok(limits)
    }

    pub fn check_edges(&self, m: usize) -> Result<()> {
        if m > self.edge_cap || m >= 64 {
            return Err(Error::Resource {
                what: format!("edge-subset enumeration over {m} edges"),
                cap: self.edge_cap as u64,
            });
        }
        Ok(())
    }

    /// Checks that `base^exp` assignments fit in the work cap and returns the count.
    pub fn check_work(&self, base: u64, exp: usize, what: &str) -> Result<u64> {
        let mut total: u64 = 1;
        for _ in 0..exp {
            total = total.saturating_mul(base);
            if total > self.work_cap {
                return Err(Error::Resource {
                    what: format!("{what} ({base}^{exp} assignments)"),
                    cap: self.work_cap,
                });
            }
        }
        Ok(total)
    }
}
