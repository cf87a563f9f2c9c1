//! The operator layer: information ordering, completion sets, the
//! two-valued revision operator `G`, and its ultimate approximation `Γ`.
//!
//! `Γ` assigns each statement the consensus value of its acceptance
//! condition over every total interpretation the input approximates:
//! true (false) when all completions agree, undefined otherwise.

use crate::adf::Adf;
use crate::error::{Caps, Error};
use crate::interp::{ThreeValued, TwoValued};
use crate::set::StmtSet;

/// The information ordering: `a ≤ b` iff `b` preserves every classical
/// commitment of `a`, possibly defining more.
pub fn leq_i(a: &ThreeValued, b: &ThreeValued) -> bool {
    a.defined().is_subset(b.defined()) && a.trues().eq_under_mask(b.trues(), a.defined())
}

/// Strict version of [`leq_i`].
pub fn lt_i(a: &ThreeValued, b: &ThreeValued) -> bool {
    a != b && leq_i(a, b)
}

/// `G(w)`: re-evaluate every acceptance condition under `w`.
///
/// Fixpoints of this operator are exactly the two-valued models.
pub fn apply_g(adf: &Adf, w: &TwoValued) -> TwoValued {
    let n = adf.statement_count();
    let mut trues = StmtSet::empty(n);
    for s in 0..n {
        if adf.condition(s).eval(w) {
            trues.insert(s);
        }
    }
    TwoValued::new(trues)
}

/// All total interpretations that extend `v` on the statements in `over`,
/// with every other undefined statement set to false.
///
/// With `over` equal to the whole undefined set this is exactly the
/// completion set of `v`; `2^|over|` interpretations are produced, in
/// ascending order of the subset counter.
pub fn completions(
    v: &ThreeValued,
    over: &StmtSet,
    caps: &Caps,
) -> Result<Completions, Error> {
    assert!(
        over.intersection(v.defined()).is_empty(),
        "completion targets must be undefined statements"
    );
    let targets: Vec<usize> = over.iter().collect();
    if targets.len() > caps.max_undef {
        return Err(Error::CompletionCapExceeded {
            count: targets.len(),
            cap: caps.max_undef,
        });
    }
    Ok(Completions {
        base: v.trues().clone(),
        targets,
        next: 0,
    })
}

pub struct Completions {
    base: StmtSet,
    targets: Vec<usize>,
    next: u64,
}

impl Iterator for Completions {
    type Item = TwoValued;

    fn next(&mut self) -> Option<TwoValued> {
        if self.next >= 1u64 << self.targets.len() {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let mut trues = self.base.clone();
        for (j, &t) in self.targets.iter().enumerate() {
            if mask >> j & 1 == 1 {
                trues.insert(t);
            }
        }
        Some(TwoValued::new(trues))
    }
}

impl ExactSizeIterator for Completions {
    fn len(&self) -> usize {
        (1usize << self.targets.len()) - self.next as usize
    }
}

/// Consensus of a condition over the completions of `v` restricted to the
/// given undefined statements. Stops as soon as both values were seen.
fn consensus(
    condition: &crate::formula::Formula,
    v: &ThreeValued,
    undefined: &StmtSet,
) -> Option<bool> {
    let targets: Vec<usize> = undefined.iter().collect();
    let mut scratch = v.trues().clone();
    let mut seen_true = false;
    let mut seen_false = false;
    for mask in 0u64..(1u64 << targets.len()) {
        for (j, &t) in targets.iter().enumerate() {
            scratch.set(t, mask >> j & 1 == 1);
        }
        if condition.eval_set(&scratch) {
            seen_true = true;
        } else {
            seen_false = true;
        }
        if seen_true && seen_false {
            return None;
        }
    }
    Some(seen_true)
}

/// `Γ(v)`: the ultimate approximation of `G`, computed per statement.
///
/// The consensus for a statement only quantifies over its *undefined
/// parents* rather than all undefined statements — sound because a
/// condition's value depends only on its parents, and checked against the
/// full-completion oracle in the test suite. Cost is `2^k` evaluations
/// per statement, with `k` capped by `caps.max_undef`.
pub fn gamma(adf: &Adf, v: &ThreeValued, caps: &Caps) -> Result<ThreeValued, Error> {
    let n = adf.statement_count();
    let mut defined = StmtSet::empty(n);
    let mut trues = StmtSet::empty(n);
    for s in 0..n {
        let undefined_parents = adf.parents(s).difference(v.defined());
        let k = undefined_parents.len();
        if k > caps.max_undef {
            return Err(Error::UndefCapExceeded {
                statement: adf.vocab().name(s).to_owned(),
                count: k,
                cap: caps.max_undef,
            });
        }
        if let Some(value) = consensus(adf.condition(s), v, &undefined_parents) {
            defined.insert(s);
            if value {
                trues.insert(s);
            }
        }
    }
    Ok(ThreeValued::new(defined, trues).expect("consensus only marks defined statements true"))
}
