//! Two- and three-valued interpretations over a statement vocabulary.
//!
//! A three-valued interpretation is a pair of sets `(defined, trues)` with
//! `trues ⊆ defined`: statements in `defined` carry a classical truth
//! value, the rest are undefined. A total interpretation is the special
//! case `defined = S`, which is how two-valued interpretations embed.

use thiserror::Error;

use crate::set::StmtSet;

/// Truth value of a single statement under a three-valued interpretation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Truth {
    True,
    False,
    Undef,
}

impl Truth {
    /// Rank used for lexicographic ordering of enumeration output:
    /// true before false before undefined.
    pub(crate) fn rank(self) -> u8 {
        match self {
            Truth::True => 0,
            Truth::False => 1,
            Truth::Undef => 2,
        }
    }
}

impl std::fmt::Display for Truth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Truth::True => "t",
            Truth::False => "f",
            Truth::Undef => "u",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpError {
    #[error("true set is not contained in the defined set")]
    TruesOutsideDefined,
    #[error("interpretation components have different universes")]
    UniverseMismatch,
}

/// A total assignment, stored as the set of true statements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoValued {
    trues: StmtSet,
}

impl TwoValued {
    pub fn new(trues: StmtSet) -> Self {
        TwoValued { trues }
    }

    pub fn all_false(n: usize) -> Self {
        TwoValued {
            trues: StmtSet::empty(n),
        }
    }

    pub fn all_true(n: usize) -> Self {
        TwoValued {
            trues: StmtSet::full(n),
        }
    }

    pub fn value(&self, s: usize) -> bool {
        self.trues.contains(s)
    }

    pub fn trues(&self) -> &StmtSet {
        &self.trues
    }

    /// Number of statements in the underlying vocabulary.
    pub fn universe(&self) -> usize {
        self.trues.universe()
    }
}

/// A partial assignment `(defined, trues)` with `trues ⊆ defined ⊆ S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThreeValued {
    defined: StmtSet,
    trues: StmtSet,
}

impl ThreeValued {
    pub fn new(defined: StmtSet, trues: StmtSet) -> Result<Self, InterpError> {
        if defined.universe() != trues.universe() {
            return Err(InterpError::UniverseMismatch);
        }
        if !trues.is_subset(&defined) {
            return Err(InterpError::TruesOutsideDefined);
        }
        Ok(ThreeValued { defined, trues })
    }

    /// The all-undefined interpretation, the least element of the
    /// information ordering.
    pub fn undefined(n: usize) -> Self {
        ThreeValued {
            defined: StmtSet::empty(n),
            trues: StmtSet::empty(n),
        }
    }

    pub fn value(&self, s: usize) -> Truth {
        if !self.defined.contains(s) {
            Truth::Undef
        } else if self.trues.contains(s) {
            Truth::True
        } else {
            Truth::False
        }
    }

    pub fn defined(&self) -> &StmtSet {
        &self.defined
    }

    pub fn trues(&self) -> &StmtSet {
        &self.trues
    }

    pub fn universe(&self) -> usize {
        self.defined.universe()
    }

    /// True when every statement is defined.
    pub fn is_total(&self) -> bool {
        self.defined.len() == self.defined.universe()
    }

    pub fn to_two_valued(&self) -> Option<TwoValued> {
        self.is_total().then(|| TwoValued::new(self.trues.clone()))
    }
}

impl From<&TwoValued> for ThreeValued {
    fn from(w: &TwoValued) -> Self {
        ThreeValued {
            defined: StmtSet::full(w.universe()),
            trues: w.trues().clone(),
        }
    }
}

impl From<TwoValued> for ThreeValued {
    fn from(w: TwoValued) -> Self {
        ThreeValued::from(&w)
    }
}
