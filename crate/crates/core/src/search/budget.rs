use std::time::{Duration, Instant};

use serde::Serialize;

/// Limits on an exhaustive search. Running out of any of them makes the
/// result inconclusive; nothing is silently truncated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_vertices: usize,
    pub max_facets: usize,
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_vertices: 9,
            max_facets: 14,
            node_limit: 50_000_000,
            time_limit: Duration::from_secs(600),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum SearchStatus {
    Complete,
    Inconclusive { reason: String },
}

impl SearchStatus {
    pub fn is_complete(&self) -> bool {
        matches!(self, SearchStatus::Complete)
    }
}

/// Node and clock accounting for one search.
pub(crate) struct Meter<'a> {
    budget: &'a SearchBudget,
    start: Instant,
    pub nodes: u64,
    exhausted: Option<String>,
}

impl<'a> Meter<'a> {
    pub fn new(budget: &'a SearchBudget) -> Self {
        Self {
            budget,
            start: Instant::now(),
            nodes: 0,
            exhausted: None,
        }
    }

    /// Counts one node; false once the budget is spent.
    pub fn tick(&mut self) -> bool {
        if self.exhausted.is_some() {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.budget.node_limit {
            self.exhausted = Some(format!("node limit {} reached", self.budget.node_limit));
        } else if self.nodes % 4096 == 0 && self.start.elapsed() > self.budget.time_limit {
            self.exhausted = Some(format!("time limit {:?} reached", self.budget.time_limit));
        }
        self.exhausted.is_none()
    }

    pub fn status(&self) -> SearchStatus {
        match &self.exhausted {
            None => SearchStatus::Complete,
            Some(reason) => SearchStatus::Inconclusive {
                reason: reason.clone(),
            },
        }
    }
}
