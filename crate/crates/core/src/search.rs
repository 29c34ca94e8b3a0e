//! Enumeration of every admissible family code over a range of field sizes.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::code::build_family_code;
use crate::defining_set::{Construction, DefiningSet};
use crate::report::{CodeReport, ReportError, ReportOptions};

pub const DEFAULT_Q_CAP: u64 = 100;
pub const DEFAULT_MAX_N: u64 = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("q range {q_min}..={q_max} exceeds the cap of {cap}")]
    CapExceeded { q_min: u64, q_max: u64, cap: u64 },
    #[error("empty q range {q_min}..={q_max}")]
    EmptyRange { q_min: u64, q_max: u64 },
    #[error("{family}: {source}")]
    Report {
        family: Construction,
        #[source]
        source: ReportError,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Euclidean,
    Hermitian,
    Both,
}

impl SearchMode {
    fn accepts(self, c: Construction) -> bool {
        match self {
            SearchMode::Euclidean => !c.is_hermitian(),
            SearchMode::Hermitian => c.is_hermitian(),
            SearchMode::Both => true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchQuery {
    pub q_min: u64,
    pub q_max: u64,
    pub mode: SearchMode,
    pub family: Option<Construction>,
    pub max_n: u64,
    pub q_cap: u64,
}

impl SearchQuery {
    pub fn new(q_min: u64, q_max: u64, mode: SearchMode) -> Self {
        Self {
            q_min,
            q_max,
            mode,
            family: None,
            max_n: DEFAULT_MAX_N,
            q_cap: DEFAULT_Q_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchPlan {
    pub sets: Vec<DefiningSet>,
    /// Admissible tuples left out because `n > max_n`.
    pub skipped_long: usize,
    /// Tuples dropped because an earlier one had the same `(alphabet, n, Z)`.
    pub duplicates: usize,
}

/// Admissible defining sets in family order, then q, then parameter order.
pub fn plan(query: &SearchQuery) -> Result<SearchPlan, SearchError> {
    if query.q_min > query.q_max {
        return Err(SearchError::EmptyRange {
            q_min: query.q_min,
            q_max: query.q_max,
        });
    }
    if query.q_max > query.q_cap {
        return Err(SearchError::CapExceeded {
            q_min: query.q_min,
            q_max: query.q_max,
            cap: query.q_cap,
        });
    }
    let mut seen: BTreeSet<(u64, u64, Vec<u64>)> = BTreeSet::new();
    let mut out = SearchPlan {
        sets: Vec::new(),
        skipped_long: 0,
        duplicates: 0,
    };
    let families = Construction::ALL
        .into_iter()
        .filter(|&c| query.mode.accepts(c) && query.family.map_or(true, |f| f == c));
    for c in families {
        for q in (query.q_min..=query.q_max).filter(|&q| arith::is_odd_prime_power(q)) {
            for p in c.admissible(q) {
                let set = c.build(&p).expect("admissible parameters build");
                if set.n > query.max_n {
                    out.skipped_long += 1;
                    continue;
                }
                let key = (set.alphabet, set.n, set.elements.iter().copied().collect());
                if seen.insert(key) {
                    out.sets.push(set);
                } else {
                    out.duplicates += 1;
                }
            }
        }
    }
    Ok(out)
}

/// Builds and reports every planned code, in plan order.
pub fn run(plan: &SearchPlan, opts: ReportOptions) -> Result<Vec<CodeReport>, SearchError> {
    plan.sets
        .par_iter()
        .map(|set| {
            let wrap = |source: ReportError| SearchError::Report {
                family: set.family.construction(),
                source,
            };
            let code = build_family_code(set).map_err(|e| wrap(e.into()))?;
            CodeReport::build(&code, opts).map_err(wrap)
        })
        .collect()
}
