//! Decision procedures and enumeration for the six semantics.

use std::cmp::Ordering;

use crate::adf::Adf;
use crate::error::{Caps, Error};
use crate::formula::{self, Formula};
use crate::interp::{ThreeValued, TwoValued};
use crate::operators::{apply_g, gamma, leq_i, lt_i};
use crate::set::StmtSet;
use crate::vocab::Vocabulary;

/// The semantics this crate can decide and enumerate.
///
/// Model and stable verdicts apply to total interpretations; the others
/// to arbitrary three-valued ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Semantics {
    Model,
    Admissible,
    Complete,
    Preferred,
    Grounded,
    Stable,
}

impl Semantics {
    pub const ALL: [Semantics; 6] = [
        Semantics::Model,
        Semantics::Admissible,
        Semantics::Complete,
        Semantics::Preferred,
        Semantics::Grounded,
        Semantics::Stable,
    ];

    /// Three-letter code used on the command line.
    pub fn code(self) -> &'static str {
        match self {
            Semantics::Model => "mod",
            Semantics::Admissible => "adm",
            Semantics::Complete => "com",
            Semantics::Preferred => "prf",
            Semantics::Grounded => "grd",
            Semantics::Stable => "stb",
        }
    }

    pub fn from_code(code: &str) -> Option<Semantics> {
        Self::ALL.iter().copied().find(|s| s.code() == code)
    }
}

/// `w` is a model iff it is a fixpoint of `G`.
pub fn is_model(adf: &Adf, w: &TwoValued) -> bool {
    apply_g(adf, w) == *w
}

/// `v` is admissible iff `v ≤ Γ(v)` in the information ordering.
pub fn is_admissible(adf: &Adf, v: &ThreeValued, caps: &Caps) -> Result<bool, Error> {
    Ok(leq_i(v, &gamma(adf, v, caps)?))
}

/// `v` is complete iff it is a fixpoint of `Γ`.
pub fn is_complete(adf: &Adf, v: &ThreeValued, caps: &Caps) -> Result<bool, Error> {
    Ok(gamma(adf, v, caps)? == *v)
}

/// The least fixpoint of `Γ`, by Kleene iteration from the all-undefined
/// interpretation.
pub fn grounded(adf: &Adf, caps: &Caps) -> Result<ThreeValued, Error> {
    grounded_with_steps(adf, caps).map(|(v, _)| v)
}

/// Iteration with its application count. Starting from the least element,
/// every non-final step strictly grows the defined set, so the fixpoint
/// is reached within `|S| + 1` applications; that bound is asserted.
pub(crate) fn grounded_with_steps(adf: &Adf, caps: &Caps) -> Result<(ThreeValued, usize), Error> {
    let n = adf.statement_count();
    let mut v = ThreeValued::undefined(n);
    let mut steps = 0;
    loop {
        let next = gamma(adf, &v, caps)?;
        steps += 1;
        assert!(steps <= n + 1, "fixpoint iteration exceeded |S| + 1 steps");
        if next == v {
            return Ok((v, steps));
        }
        v = next;
    }
}

/// `v` is grounded iff it equals the least fixpoint of `Γ` — equivalently,
/// iff it is complete and below every complete interpretation.
pub fn is_grounded(adf: &Adf, v: &ThreeValued, caps: &Caps) -> Result<bool, Error> {
    Ok(grounded(adf, caps)? == *v)
}

/// `v` is preferred iff it is maximal admissible. Only proper extensions
/// of `v` can lie above it, so the search assigns the three values to the
/// undefined statements of `v` and never touches the rest.
pub fn is_preferred(adf: &Adf, v: &ThreeValued, caps: &Caps) -> Result<bool, Error> {
    if !is_admissible(adf, v, caps)? {
        return Ok(false);
    }
    let free: Vec<usize> = StmtSet::full(v.universe())
        .difference(v.defined())
        .iter()
        .collect();
    if free.len() > caps.max_enum_three {
        return Err(Error::EnumCapExceeded {
            count: free.len(),
            cap: caps.max_enum_three,
        });
    }
    // base-3 odometer over the undefined statements; digit 0 keeps a
    // statement undefined, so skipping all-zero skips v itself
    let mut digits = vec![0u8; free.len()];
    'outer: loop {
        let mut i = 0;
        loop {
            if i == digits.len() {
                break 'outer;
            }
            digits[i] += 1;
            if digits[i] < 3 {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        let mut defined = v.defined().clone();
        let mut trues = v.trues().clone();
        for (j, &s) in free.iter().enumerate() {
            match digits[j] {
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
        let ext = ThreeValued::new(defined, trues).expect("extension stays well-formed");
        if is_admissible(adf, &ext, caps)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The reduced framework for a model `w`: keep the true statements and
/// the links among them, and substitute falsum for every rejected atom in
/// the surviving conditions. Substitution does not simplify the result.
pub fn reduct(adf: &Adf, w: &TwoValued) -> Result<Adf, Error> {
    if !is_model(adf, w) {
        return Err(Error::NotAModel);
    }
    let n = adf.statement_count();
    let survivors: Vec<usize> = w.trues().iter().collect();
    let mut new_index = vec![usize::MAX; n];
    for (new, &old) in survivors.iter().enumerate() {
        new_index[old] = new;
    }
    let vocab = Vocabulary::new(survivors.iter().map(|&s| adf.vocab().name(s)))
        .expect("sub-vocabulary of a valid vocabulary");
    let links: Vec<(usize, usize)> = adf
        .links()
        .filter(|&(a, b)| w.value(a) && w.value(b))
        .map(|(a, b)| (new_index[a], new_index[b]))
        .collect();
    let conditions: Vec<Formula> = survivors
        .iter()
        .map(|&s| {
            adf.condition(s).map_atoms(&|a| {
                if w.value(a) {
                    formula::atom(new_index[a])
                } else {
                    formula::falsum()
                }
            })
        })
        .collect();
    Ok(Adf::new(vocab, links, conditions).expect("reduct of a valid framework is valid"))
}

/// `w` is stable iff it is a model and the grounded interpretation of its
/// reduct accepts every statement the reduct retains. Non-models are
/// simply not stable; only the reduct itself insists on a model input.
pub fn is_stable(adf: &Adf, w: &TwoValued, caps: &Caps) -> Result<bool, Error> {
    if !is_model(adf, w) {
        return Ok(false);
    }
    let reduced = reduct(adf, w)?;
    let g = grounded(&reduced, caps)?;
    Ok(g.trues().len() == reduced.statement_count())
}

/// Output order for enumerated interpretations: most-defined first, ties
/// broken statement by statement in declaration order with t < f < u.
pub fn output_order(a: &ThreeValued, b: &ThreeValued) -> Ordering {
    b.defined()
        .len()
        .cmp(&a.defined().len())
        .then_with(|| {
            for s in 0..a.universe() {
                let ord = a.value(s).rank().cmp(&b.value(s).rank());
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        })
}

/// All interpretations satisfying the given semantics, sorted by
/// [`output_order`]. Total semantics scan the `2^|S|` assignments, the
/// partial ones scan all `3^|S|`; both scans are capped.
pub fn enumerate(adf: &Adf, sem: Semantics, caps: &Caps) -> Result<Vec<ThreeValued>, Error> {
    let n = adf.statement_count();
    let mut found = match sem {
        Semantics::Model | Semantics::Stable => {
            check_enum_cap(n, caps.max_enum_two)?;
            let mut out = Vec::new();
            for mask in 0u64..(1u64 << n) {
                let w = TwoValued::new(set_from_mask(n, mask));
                let keep = match sem {
                    Semantics::Model => is_model(adf, &w),
                    _ => is_stable(adf, &w, caps)?,
                };
                if keep {
                    out.push(ThreeValued::from(w));
                }
            }
            out
        }
        Semantics::Admissible | Semantics::Complete => {
            check_enum_cap(n, caps.max_enum_three)?;
            let mut out = Vec::new();
            for dmask in 0u64..(1u64 << n) {
                let mut tmask = dmask;
                loop {
                    let v = ThreeValued::new(set_from_mask(n, dmask), set_from_mask(n, tmask))
                        .expect("submask of the defined mask");
                    let keep = match sem {
                        Semantics::Admissible => is_admissible(adf, &v, caps)?,
                        _ => is_complete(adf, &v, caps)?,
                    };
                    if keep {
                        out.push(v);
                    }
                    if tmask == 0 {
                        break;
                    }
                    tmask = (tmask - 1) & dmask;
                }
            }
            out
        }
        Semantics::Preferred => {
            let admissible = enumerate(adf, Semantics::Admissible, caps)?;
            admissible
                .iter()
                .filter(|v| !admissible.iter().any(|above| lt_i(v, above)))
                .cloned()
                .collect()
        }
        Semantics::Grounded => vec![grounded(adf, caps)?],
    };
    found.sort_by(output_order);
    Ok(found)
}

fn check_enum_cap(n: usize, cap: usize) -> Result<(), Error> {
    // 63 is an absolute bound so the mask arithmetic cannot overflow
    let cap = cap.min(63);
    if n > cap {
        return Err(Error::EnumCapExceeded { count: n, cap });
    }
    Ok(())
}

fn set_from_mask(n: usize, mask: u64) -> StmtSet {
    let mut s = StmtSet::empty(n);
    for i in 0..n {
        if mask >> i & 1 == 1 {
            s.insert(i);
        }
    }
    s
}
