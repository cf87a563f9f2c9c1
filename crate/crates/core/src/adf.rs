//! The framework type: statements, links, and acceptance conditions.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::error::{Caps, Error};
use crate::formula::{self, Formula};
use crate::set::StmtSet;
use crate::vocab::Vocabulary;

/// A well-formedness violation found while building or checking a framework.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("statement `{statement}` has no acceptance condition")]
    MissingCondition { statement: String },
    #[error("statement `{statement}` has more than one acceptance condition")]
    DuplicateCondition { statement: String },
    #[error("condition of `{statement}` mentions `{atom}`, which is not one of its parents")]
    AtomNotParent { statement: String, atom: String },
    #[error("condition of `{statement}` mentions atom index {index}, outside the vocabulary")]
    AtomOutOfRange { statement: String, index: usize },
    #[error("link ({from}, {to}) relates undeclared statement indices")]
    LinkOutOfRange { from: usize, to: usize },
}

/// A framework `(S, L, C)`: a vocabulary, a dependency relation on it, and
/// one acceptance condition per statement.
///
/// Links are authoritative: the atoms of each condition must be a subset
/// of the statement's link-induced parents, but a parent need not occur
/// in the condition (a "don't care" parent). Construction validates this,
/// so a value of this type is always well-formed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adf {
    vocab: Vocabulary,
    links: BTreeSet<(usize, usize)>,
    conditions: Vec<Formula>,
    parents: Vec<StmtSet>,
}

impl Adf {
    /// Build a framework from one condition per statement, in vocabulary
    /// order. Returns every violation found, not just the first.
    pub fn new(
        vocab: Vocabulary,
        links: impl IntoIterator<Item = (usize, usize)>,
        conditions: Vec<Formula>,
    ) -> Result<Self, Vec<Violation>> {
        let pairs = conditions.into_iter().enumerate().collect();
        Self::from_parts(vocab, links, pairs)
    }

    /// Build from `(statement, condition)` pairs in any order, reporting
    /// missing and duplicate conditions as violations.
    pub fn from_parts(
        vocab: Vocabulary,
        links: impl IntoIterator<Item = (usize, usize)>,
        pairs: Vec<(usize, Formula)>,
    ) -> Result<Self, Vec<Violation>> {
        let n = vocab.len();
        let links: BTreeSet<(usize, usize)> = links.into_iter().collect();
        let mut violations = Vec::new();

        for &(from, to) in &links {
            if from >= n || to >= n {
                violations.push(Violation::LinkOutOfRange { from, to });
            }
        }
        if !violations.is_empty() {
            // parent sets below need in-range links
            return Err(violations);
        }

        let mut parents = vec![StmtSet::empty(n); n];
        for &(from, to) in &links {
            parents[to].insert(from);
        }

        let mut conditions: Vec<Option<Formula>> = (0..n).map(|_| None).collect();
        for (s, f) in pairs {
            assert!(s < n, "condition for statement index {s} outside vocabulary");
            if conditions[s].is_some() {
                violations.push(Violation::DuplicateCondition {
                    statement: vocab.name(s).to_owned(),
                });
            } else {
                conditions[s] = Some(f);
            }
        }

        for (s, cond) in conditions.iter().enumerate() {
            match cond {
                None => violations.push(Violation::MissingCondition {
                    statement: vocab.name(s).to_owned(),
                }),
                Some(f) => {
                    if f.max_atom_bound() > n {
                        violations.push(Violation::AtomOutOfRange {
                            statement: vocab.name(s).to_owned(),
                            index: f.max_atom_bound() - 1,
                        });
                        continue;
                    }
                    let extra = f.atoms(n).difference(&parents[s]);
                    for a in extra.iter() {
                        violations.push(Violation::AtomNotParent {
                            statement: vocab.name(s).to_owned(),
                            atom: vocab.name(a).to_owned(),
                        });
                    }
                }
            }
        }

        if violations.is_empty() {
            Ok(Adf {
                vocab,
                links,
                conditions: conditions.into_iter().map(Option::unwrap).collect(),
                parents,
            })
        } else {
            Err(violations)
        }
    }

    pub fn vocab(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn statement_count(&self) -> usize {
        self.vocab.len()
    }

    pub fn condition(&self, s: usize) -> &Formula {
        &self.conditions[s]
    }

    /// The parents of `s`: all statements with a link into `s`.
    pub fn parents(&self, s: usize) -> &StmtSet {
        &self.parents[s]
    }

    /// Links as ordered pairs `(from, to)`, ascending.
    pub fn links(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.links.iter().copied()
    }

    pub fn has_link(&self, from: usize, to: usize) -> bool {
        self.links.contains(&(from, to))
    }

    /// Links whose source never occurs in the target's condition. Legal,
    /// but worth surfacing to the user.
    pub fn dont_care_links(&self) -> Vec<(usize, usize)> {
        self.links
            .iter()
            .copied()
            .filter(|&(from, to)| !self.conditions[to].atoms(self.vocab.len()).contains(from))
            .collect()
    }

    /// The link set induced by the conditions alone: `(a, s)` for every
    /// atom `a` of the condition of `s`.
    pub fn induced_links(&self) -> BTreeSet<(usize, usize)> {
        let n = self.vocab.len();
        let mut induced = BTreeSet::new();
        for (s, f) in self.conditions.iter().enumerate() {
            for a in f.atoms(n).iter() {
                induced.insert((a, s));
            }
        }
        induced
    }

    pub fn links_equal_induced(&self) -> bool {
        self.links == self.induced_links()
    }

    /// Re-check the structural invariants of an already built value.
    /// Always empty for frameworks produced by the constructors; used as
    /// a post-condition check on derived frameworks and generated ones.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.vocab.len();
        let mut violations = Vec::new();
        for &(from, to) in &self.links {
            if from >= n || to >= n {
                violations.push(Violation::LinkOutOfRange { from, to });
            }
        }
        for (s, f) in self.conditions.iter().enumerate() {
            if f.max_atom_bound() > n {
                violations.push(Violation::AtomOutOfRange {
                    statement: self.vocab.name(s).to_owned(),
                    index: f.max_atom_bound() - 1,
                });
                continue;
            }
            for a in f.atoms(n).difference(&self.parents[s]).iter() {
                violations.push(Violation::AtomNotParent {
                    statement: self.vocab.name(s).to_owned(),
                    atom: self.vocab.name(a).to_owned(),
                });
            }
        }
        violations
    }

    /// Tabulate the acceptance condition of `s` over all parent subsets.
    pub fn truth_table(&self, s: usize, caps: &Caps) -> Result<TruthTable, Error> {
        let parents: Vec<usize> = self.parents[s].iter().collect();
        if parents.len() > caps.max_table_parents {
            return Err(Error::TableCapExceeded {
                statement: self.vocab.name(s).to_owned(),
                count: parents.len(),
                cap: caps.max_table_parents,
            });
        }
        let n = self.vocab.len();
        let mut rows = Vec::with_capacity(1usize << parents.len());
        let mut scratch = StmtSet::empty(n);
        for mask in 0u64..(1u64 << parents.len()) {
            for (j, &p) in parents.iter().enumerate() {
                scratch.set(p, mask >> j & 1 == 1);
            }
            rows.push(self.conditions[s].eval_set(&scratch));
        }
        Ok(TruthTable {
            statement: s,
            parents,
            rows,
        })
    }
}

/// The explicit truth-table form of one acceptance condition: a value for
/// each subset of the statement's parents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    pub statement: usize,
    /// Parent indices in declaration order.
    pub parents: Vec<usize>,
    /// `rows[mask]`, where bit `j` of `mask` means `parents[j]` is true.
    /// Exactly `2^|parents|` entries.
    pub rows: Vec<bool>,
}

impl TruthTable {
    pub fn value(&self, mask: u64) -> bool {
        self.rows[mask as usize]
    }

    /// Reassemble a formula from the table, as a disjunction of full
    /// conjunctions over the parents, one per true row.
    pub fn to_dnf(&self) -> Formula {
        let mut terms = Vec::new();
        for (mask, &v) in self.rows.iter().enumerate() {
            if !v {
                continue;
            }
            let literals = self.parents.iter().enumerate().map(|(j, &p)| {
                if mask >> j & 1 == 1 {
                    formula::atom(p)
                } else {
                    formula::neg(formula::atom(p))
                }
            });
            terms.push(
                literals
                    .reduce(formula::and)
                    .unwrap_or_else(formula::verum),
            );
        }
        terms.into_iter().reduce(formula::or).unwrap_or_else(formula::falsum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fig1;
    use crate::formula::{and, atom, verum};

    #[test]
    fn parents_come_from_links() {
        let adf = fig1();
        assert_eq!(adf.parents(2), &StmtSet::from_indices(4, [0, 1]));
        assert_eq!(adf.parents(0), &StmtSet::empty(4));
        assert_eq!(adf.parents(3), &StmtSet::from_indices(4, [1]));
    }

    #[test]
    fn parents_stay_within_but_need_not_cover_the_vocabulary() {
        let adf = fig1();
        let everything = StmtSet::full(4);
        for s in 0..4 {
            assert!(adf.parents(s).is_subset(&everything));
        }
        // the reverse inclusion fails already on this instance
        assert!(!everything.is_subset(adf.parents(0)));
    }

    #[test]
    fn empty_link_relation_means_no_parents() {
        let vocab = Vocabulary::new(["x", "y"]).unwrap();
        let adf = Adf::new(vocab, [], vec![verum(), verum()]).unwrap();
        assert!(adf.parents(0).is_empty() && adf.parents(1).is_empty());
    }

    #[test]
    fn atom_outside_parents_is_rejected() {
        let vocab = Vocabulary::new(["a", "b", "c"]).unwrap();
        // c depends on a and b but only (b, c) is declared
        let err = Adf::new(
            vocab,
            [(1, 2)],
            vec![verum(), verum(), and(atom(0), atom(1))],
        )
        .unwrap_err();
        assert_eq!(
            err,
            vec![Violation::AtomNotParent {
                statement: "c".into(),
                atom: "a".into()
            }]
        );
    }

    #[test]
    fn duplicate_and_missing_conditions_are_reported() {
        let vocab = Vocabulary::new(["a", "b"]).unwrap();
        let err =
            Adf::from_parts(vocab, [], vec![(0, verum()), (0, verum())]).unwrap_err();
        assert!(err.contains(&Violation::DuplicateCondition {
            statement: "a".into()
        }));
        assert!(err.contains(&Violation::MissingCondition {
            statement: "b".into()
        }));
    }

    #[test]
    fn dont_care_links_are_allowed_and_flagged() {
        let vocab = Vocabulary::new(["a", "b"]).unwrap();
        let adf = Adf::new(vocab, [(0, 1)], vec![verum(), verum()]).unwrap();
        assert_eq!(adf.dont_care_links(), vec![(0, 1)]);
        assert!(!adf.links_equal_induced());
    }

    #[test]
    fn truth_table_matches_worked_example() {
        let adf = fig1();
        let caps = Caps::default();
        // c over parents {a, b}: true only when both hold
        let t = adf.truth_table(2, &caps).unwrap();
        assert_eq!(t.parents, vec![0, 1]);
        assert_eq!(t.rows, vec![false, false, false, true]);
        // d over parent {b}: true only when b fails
        let t = adf.truth_table(3, &caps).unwrap();
        assert_eq!(t.parents, vec![1]);
        assert_eq!(t.rows, vec![true, false]);
        // a has no parents and a single row
        let t = adf.truth_table(0, &caps).unwrap();
        assert_eq!(t.rows, vec![true]);
    }

    #[test]
    fn truth_table_cap_names_the_statement() {
        let adf = fig1();
        let caps = Caps {
            max_table_parents: 1,
            ..Caps::default()
        };
        assert_eq!(
            adf.truth_table(2, &caps),
            Err(Error::TableCapExceeded {
                statement: "c".into(),
                count: 2,
                cap: 1
            })
        );
    }

    #[test]
    fn dnf_round_trip_preserves_the_table() {
        let adf = fig1();
        let caps = Caps::default();
        for s in 0..4 {
            let table = adf.truth_table(s, &caps).unwrap();
            let dnf = table.to_dnf();
            let mut w = StmtSet::empty(4);
            for mask in 0u64..(1 << table.parents.len()) {
                for (j, &p) in table.parents.iter().enumerate() {
                    w.set(p, mask >> j & 1 == 1);
                }
                assert_eq!(dnf.eval_set(&w), table.value(mask), "s={s} mask={mask}");
            }
        }
    }
}
