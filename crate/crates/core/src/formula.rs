//! Propositional acceptance-condition formulas.
//!
//! Atoms refer to statements by index into the owning framework's
//! vocabulary. Evaluation is classical two-valued semantics; three-valued
//! behaviour is obtained upstream by quantifying over completions, never
//! by a three-valued connective table.

use crate::interp::TwoValued;
use crate::set::StmtSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Const(bool),
    Atom(usize),
    Neg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Xor(Box<Formula>, Box<Formula>),
}

pub fn verum() -> Formula {
    Formula::Const(true)
}

pub fn falsum() -> Formula {
    Formula::Const(false)
}

pub fn atom(i: usize) -> Formula {
    Formula::Atom(i)
}

pub fn neg(f: Formula) -> Formula {
    Formula::Neg(Box::new(f))
}

pub fn and(a: Formula, b: Formula) -> Formula {
    Formula::And(Box::new(a), Box::new(b))
}

pub fn or(a: Formula, b: Formula) -> Formula {
    Formula::Or(Box::new(a), Box::new(b))
}

pub fn imp(a: Formula, b: Formula) -> Formula {
    Formula::Imp(Box::new(a), Box::new(b))
}

pub fn iff(a: Formula, b: Formula) -> Formula {
    Formula::Iff(Box::new(a), Box::new(b))
}

pub fn xor(a: Formula, b: Formula) -> Formula {
    Formula::Xor(Box::new(a), Box::new(b))
}

impl Formula {
    /// Classical evaluation under a total assignment.
    pub fn eval(&self, w: &TwoValued) -> bool {
        self.eval_set(w.trues())
    }

    pub(crate) fn eval_set(&self, trues: &StmtSet) -> bool {
        match self {
            Formula::Const(b) => *b,
            Formula::Atom(i) => trues.contains(*i),
            Formula::Neg(f) => !f.eval_set(trues),
            Formula::And(a, b) => a.eval_set(trues) && b.eval_set(trues),
            Formula::Or(a, b) => a.eval_set(trues) || b.eval_set(trues),
            Formula::Imp(a, b) => !a.eval_set(trues) || b.eval_set(trues),
            Formula::Iff(a, b) => a.eval_set(trues) == b.eval_set(trues),
            Formula::Xor(a, b) => a.eval_set(trues) != b.eval_set(trues),
        }
    }

    /// The set of atoms occurring in the formula, as a subset of `0..n`.
    pub fn atoms(&self, n: usize) -> StmtSet {
        let mut set = StmtSet::empty(n);
        self.collect_atoms(&mut set);
        set
    }

    fn collect_atoms(&self, out: &mut StmtSet) {
        match self {
            Formula::Const(_) => {}
            Formula::Atom(i) => out.insert(*i),
            Formula::Neg(f) => f.collect_atoms(out),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Imp(a, b)
            | Formula::Iff(a, b)
            | Formula::Xor(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Largest atom index plus one, 0 for atom-free formulas. Used to
    /// bound-check formulas before a vocabulary-sized set exists.
    pub(crate) fn max_atom_bound(&self) -> usize {
        match self {
            Formula::Const(_) => 0,
            Formula::Atom(i) => i + 1,
            Formula::Neg(f) => f.max_atom_bound(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Imp(a, b)
            | Formula::Iff(a, b)
            | Formula::Xor(a, b) => a.max_atom_bound().max(b.max_atom_bound()),
        }
    }

    /// Rebuild the formula with every atom replaced by `f(atom)`.
    pub fn map_atoms(&self, f: &impl Fn(usize) -> Formula) -> Formula {
        match self {
            Formula::Const(b) => Formula::Const(*b),
            Formula::Atom(i) => f(*i),
            Formula::Neg(a) => neg(a.map_atoms(f)),
            Formula::And(a, b) => and(a.map_atoms(f), b.map_atoms(f)),
            Formula::Or(a, b) => or(a.map_atoms(f), b.map_atoms(f)),
            Formula::Imp(a, b) => imp(a.map_atoms(f), b.map_atoms(f)),
            Formula::Iff(a, b) => iff(a.map_atoms(f), b.map_atoms(f)),
            Formula::Xor(a, b) => xor(a.map_atoms(f), b.map_atoms(f)),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            Formula::Const(_) | Formula::Atom(_) => 1,
            Formula::Neg(f) => 1 + f.node_count(),
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Imp(a, b)
            | Formula::Iff(a, b)
            | Formula::Xor(a, b) => 1 + a.node_count() + b.node_count(),
        }
    }

    /// Immediate subformulas, used by the counterexample shrinker.
    pub(crate) fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::Const(_) | Formula::Atom(_) => vec![],
            Formula::Neg(f) => vec![f],
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Imp(a, b)
            | Formula::Iff(a, b)
            | Formula::Xor(a, b) => vec![a, b],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, trues: &[usize]) -> TwoValued {
        TwoValued::new(StmtSet::from_indices(n, trues.iter().copied()))
    }

    #[test]
    fn eval_matches_worked_cases() {
        // over {a, b} with a true, b false
        let v = w(2, &[0]);
        assert!(!and(atom(0), atom(1)).eval(&v));
        assert!(or(atom(0), atom(1)).eval(&v));
        assert!(verum().eval(&v));
        assert!(!falsum().eval(&v));
        assert!(imp(atom(1), atom(0)).eval(&v));
        assert!(!iff(atom(0), atom(1)).eval(&v));
        assert!(xor(atom(0), atom(1)).eval(&v));
        assert!(neg(atom(1)).eval(&v));
    }

    #[test]
    fn atoms_are_collected() {
        let f = and(atom(0), or(neg(atom(2)), imp(atom(0), falsum())));
        assert_eq!(f.atoms(4), StmtSet::from_indices(4, [0, 2]));
        assert_eq!(verum().atoms(4), StmtSet::empty(4));
    }

    #[test]
    fn map_atoms_substitutes() {
        let f = and(atom(0), atom(1));
        let g = f.map_atoms(&|i| if i == 1 { falsum() } else { atom(i) });
        assert_eq!(g, and(atom(0), falsum()));
    }
}
