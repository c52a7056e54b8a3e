//! Bound certificates: a method tag, the method's formula value, and an
//! ignition schedule achieving the bound together with its verification
//! verdicts on the input graph.

use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::schedule::{
    schedule_from_assignment, verify_burning, verify_covering, CoverAssignment, Schedule,
};

/// A certified upper bound. `k` is the achieved schedule length; it never
/// exceeds the rounded formula value of the producing method.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub method: String,
    pub n: usize,
    pub formula_value: f64,
    pub k: usize,
    pub sequence: Vec<usize>,
    pub valid_covering: bool,
    pub valid_burning: bool,
}

impl BoundReport {
    /// Converts a covering assignment into a repaired schedule of length at
    /// most `k_target` and verifies it against `g`.
    pub(crate) fn from_assignment(
        g: &Graph,
        method: &str,
        formula_value: f64,
        k_target: usize,
        assignment: &CoverAssignment,
    ) -> Result<BoundReport> {
        let schedule = schedule_from_assignment(g, assignment, k_target)?;
        BoundReport::from_schedule(g, method, formula_value, &schedule)
    }

    pub(crate) fn from_schedule(
        g: &Graph,
        method: &str,
        formula_value: f64,
        schedule: &Schedule,
    ) -> Result<BoundReport> {
        Ok(BoundReport {
            method: method.to_string(),
            n: g.n(),
            formula_value,
            k: schedule.k(),
            sequence: schedule.as_slice().to_vec(),
            valid_covering: verify_covering(g, schedule)?.ok,
            valid_burning: verify_burning(g, schedule)?.ok,
        })
    }

    pub fn schedule(&self) -> Schedule {
        Schedule::new(self.sequence.clone()).expect("reports hold nonempty schedules")
    }
}

/// Integer ceiling of the square root.
pub(crate) fn isqrt_ceil(n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let mut k = 1usize;
    while k * k < n {
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_ceil_values() {
        assert_eq!(isqrt_ceil(0), 0);
        assert_eq!(isqrt_ceil(1), 1);
        assert_eq!(isqrt_ceil(9), 3);
        assert_eq!(isqrt_ceil(10), 4);
        assert_eq!(isqrt_ceil(16), 4);
        assert_eq!(isqrt_ceil(17), 5);
    }
}
