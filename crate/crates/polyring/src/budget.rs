//! Explicit resource budgets for potentially heavy computations.
//!
//! Groebner-type computations can blow up; rather than risking
//! nontermination, every heavy operation takes a [`Budget`] and returns a
//! distinguished error once a wall-clock deadline, a basis-size cap or a
//! degree cap is hit.

use crate::error::AlgebraError;
use std::time::Instant;

#[derive(Clone, Debug)]
pub struct Budget {
    start: Instant,
    /// Wall-clock limit in milliseconds; `None` means unlimited.
    pub max_millis: Option<u64>,
    /// Cap on the number of basis elements kept during Buchberger.
    pub max_basis: usize,
    /// Cap on the total degree of any S-polynomial processed.
    pub max_degree: u32,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            start: Instant::now(),
            max_millis: None,
            max_basis: usize::MAX,
            max_degree: u32::MAX,
        }
    }

    pub fn with_seconds(secs: u64) -> Self {
        Budget {
            start: Instant::now(),
            max_millis: Some(secs.saturating_mul(1000)),
            max_basis: usize::MAX,
            max_degree: u32::MAX,
        }
    }

    pub fn max_basis(mut self, n: usize) -> Self {
        self.max_basis = n;
        self
    }

    pub fn max_degree(mut self, d: u32) -> Self {
        self.max_degree = d;
        self
    }

    /// Restart the clock; budgets are cheap to clone per stage.
    pub fn restarted(&self) -> Self {
        let mut b = self.clone();
        b.start = Instant::now();
        b
    }

    pub fn elapsed_ms(&self) -> u64 {
        self.start.elapsed().as_millis() as u64
    }

    pub fn check(&self, stage: &str, degree_reached: u32, basis_size: usize) -> Result<(), AlgebraError> {
        let over_time = self
            .max_millis
            .map(|m| self.elapsed_ms() > m)
            .unwrap_or(false);
        if over_time || basis_size > self.max_basis || degree_reached > self.max_degree {
            return Err(AlgebraError::BudgetExceeded {
                stage: stage.to_string(),
                degree_reached,
                basis_size,
                elapsed_ms: self.elapsed_ms(),
            });
        }
        Ok(())
    }
}
