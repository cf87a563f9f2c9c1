//! Abstract dialectical frameworks with operator-based semantics.
//!
//! A framework is a set of statements, a dependency relation, and one
//! propositional acceptance condition per statement. The crate decides
//! and enumerates two-valued models and the admissible, complete,
//! preferred, grounded and stable semantics, all defined through the
//! ultimate approximation operator `Γ` of the two-valued revision
//! operator `G`.
//!
//! Three layers ship together and check each other:
//!
//! * the optimized operators and semantics ([`operators`], [`semantics`]),
//! * definition-literal brute-force oracles ([`oracle`]), and
//! * a randomized property checker for the classical relationships
//!   between the semantics ([`meta`]).
//!
//! [`parse`] and [`print`] implement the fact-style instance format and
//! the `t(..) f(..) u(..)` interpretation syntax; [`cli`] is the
//! command-line surface built on top.

pub mod adf;
pub mod cli;
pub mod error;
pub mod formula;
pub mod interp;
pub mod meta;
pub mod operators;
pub mod oracle;
pub mod parse;
pub mod print;
pub mod semantics;
pub mod set;
pub mod vocab;

pub use adf::{Adf, TruthTable, Violation};
pub use error::{Caps, Error};
pub use formula::Formula;
pub use interp::{ThreeValued, Truth, TwoValued};
pub use semantics::Semantics;
pub use set::StmtSet;
pub use vocab::Vocabulary;

/// Shared fixtures for the in-crate tests: the worked four-statement
/// framework, the two-statement mutual attack, and the self-supporting
/// loop, plus small constructors for interpretations.
#[cfg(test)]
pub(crate) mod fixtures {
    use crate::formula::{and, atom, neg, verum};
    use crate::set::StmtSet;
    use crate::{Adf, ThreeValued, TwoValued, Vocabulary};

    /// `a` unconditionally accepted, `b` self-supporting, `c` requires
    /// both `a` and `b`, `d` accepted unless `b` is.
    pub fn fig1() -> Adf {
        Adf::new(
            Vocabulary::new(["a", "b", "c", "d"]).unwrap(),
            [(0, 2), (1, 1), (1, 2), (1, 3)],
            vec![verum(), atom(1), and(atom(0), atom(1)), neg(atom(1))],
        )
        .unwrap()
    }

    /// The two models, the grounded interpretation and the rejected one
    /// of [`fig1`], in the usual order.
    pub fn fig1_interps() -> (TwoValued, TwoValued, ThreeValued, ThreeValued) {
        (
            two(4, &[0, 1, 2]),
            two(4, &[0, 3]),
            three(4, &[0], &[0]),
            three(4, &[0], &[]),
        )
    }

    /// Mutual attack between two statements, the standard two-argument
    /// argumentation framework.
    pub fn fig6() -> Adf {
        Adf::new(
            Vocabulary::new(["a", "b"]).unwrap(),
            [(0, 1), (1, 0)],
            vec![neg(atom(1)), neg(atom(0))],
        )
        .unwrap()
    }

    /// A single self-supporting statement: a model that is not stable.
    pub fn fig4() -> Adf {
        Adf::new(
            Vocabulary::new(["a"]).unwrap(),
            [(0, 0)],
            vec![atom(0)],
        )
        .unwrap()
    }

    pub fn two(n: usize, trues: &[usize]) -> TwoValued {
        TwoValued::new(StmtSet::from_indices(n, trues.iter().copied()))
    }

    pub fn three(n: usize, defined: &[usize], trues: &[usize]) -> ThreeValued {
        ThreeValued::new(
            StmtSet::from_indices(n, defined.iter().copied()),
            StmtSet::from_indices(n, trues.iter().copied()),
        )
        .unwrap()
    }
}
