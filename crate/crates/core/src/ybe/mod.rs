//! Exhaustive checks of the train (RTT) and braid (RRR) Yang-Baxter equations,
//! the unitarity identity, the worked Case 10 tables, and a numeric cross-check.

mod case10;
mod numeric;
mod rrr;
mod rtt;

use serde::Serialize;

use crate::coeffring::RationalFunction;

pub use case10::{case10_tables, Case10Row, Case10Table};
pub use numeric::{numeric_sample, NumericReport, NumericSuite, NUMERIC_TOLERANCE};
pub use rrr::{rrr_check, unitarity_check, unitarity_normalized_check};
pub use rtt::{
    max_cases_from_env, rtt_boundaries, rtt_check, rtt_check_all, rtt_terms, RTTBoundary, RttConfig, RttTerm,
};

/// One boundary where the two sides differ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub boundary: String,
    pub lhs: RationalFunction,
    pub rhs: RationalFunction,
}

/// Outcome of an exhaustive check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct YbeReport {
    pub suite: String,
    pub claim: String,
    pub n: u32,
    pub variant: String,
    pub cases: usize,
    /// Set when the case space was capped (see `ICE_MAX_CASES`).
    pub truncated: bool,
    pub failure_count: usize,
    /// The first few failures, in case order.
    pub failures: Vec<Failure>,
}

/// How many failures a report keeps verbatim.
pub const KEPT_FAILURES: usize = 16;

impl YbeReport {
    pub(crate) fn new(suite: &str, claim: &str, n: u32, variant: &str) -> Self {
        Self {
            suite: suite.into(),
            claim: claim.into(),
            n,
            variant: variant.into(),
            cases: 0,
            truncated: false,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    pub(crate) fn record(&mut self, f: Option<Failure>) {
        self.cases += 1;
        if let Some(f) = f {
            self.failure_count += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(f);
            }
        }
    }

    pub fn pass(&self) -> bool {
        self.failure_count == 0
    }
}
