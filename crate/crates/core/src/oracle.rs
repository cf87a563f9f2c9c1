//! Definition-literal brute-force routes, used to cross-check the
//! optimized operators and exposed on the command line for auditing.
//!
//! Nothing here is tuned: the consensus oracle completes over *all*
//! undefined statements instead of the relevant parents, and the grounded
//! oracle scans every three-valued interpretation for the least complete
//! one. Agreement with the fast paths is asserted by the test suite.

use crate::adf::Adf;
use crate::error::{Caps, Error};
use crate::interp::{ThreeValued, TwoValued};
use crate::operators::{apply_g, completions, leq_i, lt_i};
use crate::semantics::{is_model, output_order, reduct, Semantics};
use crate::set::StmtSet;

/// `Γ(v)` straight from the definition: one pass over the full completion
/// set `[v]₂`, taking the per-statement consensus of `G`.
pub fn gamma_bruteforce(adf: &Adf, v: &ThreeValued, caps: &Caps) -> Result<ThreeValued, Error> {
    let n = adf.statement_count();
    let undefined = StmtSet::full(n).difference(v.defined());
    if undefined.len() > caps.max_oracle_undef {
        return Err(Error::CompletionCapExceeded {
            count: undefined.len(),
            cap: caps.max_oracle_undef,
        });
    }
    let relaxed = Caps {
        max_undef: caps.max_oracle_undef,
        ..caps.clone()
    };
    let mut all_true = vec![true; n];
    let mut all_false = vec![true; n];
    for w in completions(v, &undefined, &relaxed)? {
        let g = apply_g(adf, &w);
        for s in 0..n {
            if g.value(s) {
                all_false[s] = false;
            } else {
                all_true[s] = false;
            }
        }
    }
    let mut defined = StmtSet::empty(n);
    let mut trues = StmtSet::empty(n);
    for s in 0..n {
        if all_true[s] {
            defined.insert(s);
            trues.insert(s);
        } else if all_false[s] {
            defined.insert(s);
        }
    }
    Ok(ThreeValued::new(defined, trues).expect("trues only set together with defined"))
}

/// Every total interpretation over `n` statements, in ascending order of
/// the true-set counter. Exactly `2^n` items.
pub fn enum_all_two(n: usize, caps: &Caps) -> Result<impl Iterator<Item = TwoValued>, Error> {
    check_cap(n, caps.max_enum_two)?;
    Ok((0u64..(1u64 << n)).map(move |mask| TwoValued::new(mask_to_set(n, mask))))
}

/// Every three-valued interpretation over `n` statements, duplicate-free,
/// by a base-3 odometer with one digit per statement. Exactly `3^n` items.
pub fn enum_all_three(n: usize, caps: &Caps) -> Result<impl Iterator<Item = ThreeValued>, Error> {
    check_cap(n, caps.max_enum_three)?;
    let mut digits = vec![0u8; n];
    let mut done = false;
    Ok(std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mut defined = StmtSet::empty(n);
        let mut trues = StmtSet::empty(n);
        for (s, &d) in digits.iter().enumerate() {
            match d {
                0 => {}
                1 => {
                    defined.insert(s);
                    trues.insert(s);
                }
                _ => {
                    defined.insert(s);
                }
            }
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                done = true;
                break;
            }
            digits[i] += 1;
            if digits[i] < 3 {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        Some(ThreeValued::new(defined, trues).expect("digits keep trues within defined"))
    }))
}

/// The grounded interpretation as the unique least complete one, found by
/// exhaustive scan. A missing least element would contradict the theory
/// and is reported as an error rather than papered over.
pub fn grounded_bruteforce(adf: &Adf, caps: &Caps) -> Result<ThreeValued, Error> {
    let n = adf.statement_count();
    let mut complete = Vec::new();
    for v in enum_all_three(n, caps)? {
        if gamma_bruteforce(adf, &v, caps)? == v {
            complete.push(v);
        }
    }
    let least = complete
        .iter()
        .find(|v| complete.iter().all(|other| leq_i(v, other)))
        .cloned();
    least.ok_or(Error::NoLeastComplete)
}

/// Brute-force variant of [`crate::semantics::enumerate`]: filter the
/// exhaustive scans by definition-literal predicates. The only machinery
/// shared with the fast route is `G` itself and the output ordering.
pub fn enumerate_bruteforce(
    adf: &Adf,
    sem: Semantics,
    caps: &Caps,
) -> Result<Vec<ThreeValued>, Error> {
    let n = adf.statement_count();
    let mut found = match sem {
        Semantics::Model => enum_all_two(n, caps)?
            .filter(|w| is_model(adf, w))
            .map(ThreeValued::from)
            .collect(),
        Semantics::Stable => {
            let mut out = Vec::new();
            for w in enum_all_two(n, caps)? {
                if is_stable_bruteforce(adf, &w, caps)? {
                    out.push(ThreeValued::from(w));
                }
            }
            out
        }
        Semantics::Admissible => {
            let mut out = Vec::new();
            for v in enum_all_three(n, caps)? {
                if leq_i(&v, &gamma_bruteforce(adf, &v, caps)?) {
                    out.push(v);
                }
            }
            out
        }
        Semantics::Complete => {
            let mut out = Vec::new();
            for v in enum_all_three(n, caps)? {
                if gamma_bruteforce(adf, &v, caps)? == v {
                    out.push(v);
                }
            }
            out
        }
        Semantics::Preferred => {
            let admissible = enumerate_bruteforce(adf, Semantics::Admissible, caps)?;
            admissible
                .iter()
                .filter(|v| !admissible.iter().any(|above| lt_i(v, above)))
                .cloned()
                .collect()
        }
        Semantics::Grounded => vec![grounded_bruteforce(adf, caps)?],
    };
    found.sort_by(output_order);
    Ok(found)
}

fn is_stable_bruteforce(adf: &Adf, w: &TwoValued, caps: &Caps) -> Result<bool, Error> {
    if !is_model(adf, w) {
        return Ok(false);
    }
    let reduced = reduct(adf, w)?;
    let g = grounded_bruteforce(&reduced, caps)?;
    Ok(g.trues().len() == reduced.statement_count())
}

fn check_cap(n: usize, cap: usize) -> Result<(), Error> {
    let cap = cap.min(63);
    if n > cap {
        return Err(Error::EnumCapExceeded { count: n, cap });
    }
    Ok(())
}

fn mask_to_set(n: usize, mask: u64) -> StmtSet {
    let mut s = StmtSet::empty(n);
    for i in 0..n {
        if mask >> i & 1 == 1 {
            s.insert(i);
        }
    }
    s
}
