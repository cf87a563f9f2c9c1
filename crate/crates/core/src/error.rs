//! Errors shared by the operator, semantics and oracle layers.

use thiserror::Error;

/// Resource caps for the exponential procedures.
///
/// Exceeding a cap is always a hard error, never silent truncation. All
/// limits are exponents: a cap of `k` permits `2^k` (or `3^k`) steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caps {
    /// Per-statement bound on undefined parents when taking a consensus
    /// (cost `2^k` evaluations).
    pub max_undef: usize,
    /// Bound on `|S|` for scans over all two-valued interpretations.
    pub max_enum_two: usize,
    /// Bound on `|S|` for scans over all three-valued interpretations.
    pub max_enum_three: usize,
    /// Bound on the parent count when tabulating an acceptance condition.
    pub max_table_parents: usize,
    /// Bound on the number of undefined statements in the brute-force
    /// consensus oracle, which completes over all of them.
    pub max_oracle_undef: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_undef: 25,
            max_enum_two: 20,
            max_enum_three: 14,
            max_table_parents: 20,
            max_oracle_undef: 16,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("statement `{statement}` has {count} undefined parents, over the cap of {cap}")]
    UndefCapExceeded {
        statement: String,
        count: usize,
        cap: usize,
    },
    #[error("completion set over {count} statements is over the cap of {cap}")]
    CompletionCapExceeded { count: usize, cap: usize },
    #[error("{count} statements to enumerate, over the cap of {cap}")]
    EnumCapExceeded { count: usize, cap: usize },
    #[error("statement `{statement}` has {count} parents, over the truth-table cap of {cap}")]
    TableCapExceeded {
        statement: String,
        count: usize,
        cap: usize,
    },
    #[error("interpretation is not a two-valued model")]
    NotAModel,
    #[error("no unique least complete interpretation exists")]
    NoLeastComplete,
}
