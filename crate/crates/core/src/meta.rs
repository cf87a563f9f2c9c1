//! Randomized checking of the relationships between the semantics.
//!
//! Each property is checked on a stream of generated frameworks: the
//! inclusion chain and the existence guarantees must hold on every
//! instance, while their converses and the other negative claims are
//! counterexample searches that are expected to succeed. Found
//! counterexamples are shrunk greedily (dropping statements, simplifying
//! conditions, trimming links) before they are reported.
//!
//! Everything is seeded: the same configuration always produces the same
//! instance stream, the same verdicts and the same counterexamples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::adf::Adf;
use crate::error::{Caps, Error};
use crate::formula::{self, Formula};
use crate::interp::ThreeValued;
use crate::operators::{gamma, leq_i};
use crate::oracle::{enum_all_three, grounded_bruteforce};
use crate::semantics::{enumerate, grounded, is_admissible, is_complete, Semantics};
use crate::vocab::Vocabulary;

/// Configuration of the random-instance stream.
#[derive(Debug, Clone, PartialEq)]
pub struct GenConfig {
    /// Statement count of a directly generated instance; trial streams
    /// draw each instance's size uniformly from `1..=n_statements`.
    pub n_statements: usize,
    pub max_formula_depth: usize,
    /// Probability of each ordered pair being a link.
    pub link_density: f64,
    pub seed: u64,
    pub trials: u32,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            n_statements: 5,
            max_formula_depth: 3,
            link_density: 0.5,
            seed: 0xADF,
            trials: 1000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    HoldsOnSample,
    CounterexampleFound,
}

/// A framework violating a property, with the interpretations witnessing
/// the violation on it (possibly none, e.g. when the violation is the
/// emptiness of a semantics).
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub adf: Adf,
    pub witnesses: Vec<ThreeValued>,
}

#[derive(Debug, Clone)]
pub struct PropertyReport {
    pub name: &'static str,
    /// What a correct implementation of a correct theory should produce.
    pub expected: Status,
    /// Instances actually examined (seeded fixtures included).
    pub trials: u32,
    pub status: Status,
    /// Non-empty exactly when `status` is `CounterexampleFound`.
    pub violations: Vec<Counterexample>,
}

impl PropertyReport {
    pub fn as_expected(&self) -> bool {
        self.status == self.expected
    }
}

fn trial_seed(master: u64, trial: u64) -> u64 {
    // splitmix64 of the trial index, offset by the master seed
    let mut z = master.wrapping_add(trial.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn statement_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if n <= 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("s{i}")
            }
        })
        .collect()
}

fn sample_links(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Vec<(usize, usize)> {
    let mut links = Vec::new();
    for to in 0..n {
        for from in 0..n {
            if rng.gen_bool(density) {
                links.push((from, to));
            }
        }
    }
    links
}

fn random_formula(rng: &mut ChaCha8Rng, parents: &[usize], depth: usize) -> Formula {
    if parents.is_empty() {
        return Formula::Const(rng.gen_bool(0.5));
    }
    if depth == 0 || rng.gen_bool(0.3) {
        if rng.gen_bool(0.85) {
            formula::atom(parents[rng.gen_range(0..parents.len())])
        } else {
            Formula::Const(rng.gen_bool(0.5))
        }
    } else {
        let a = random_formula(rng, parents, depth - 1);
        match rng.gen_range(0..6) {
            0 => formula::neg(a),
            op => {
                let b = random_formula(rng, parents, depth - 1);
                match op {
                    1 => formula::and(a, b),
                    2 => formula::or(a, b),
                    3 => formula::imp(a, b),
                    4 => formula::iff(a, b),
                    _ => formula::xor(a, b),
                }
            }
        }
    }
}

/// A random framework with exactly `cfg.n_statements` statements. Links
/// are sampled per ordered pair; each condition is a random formula over
/// the statement's sampled parents, so the result always validates.
/// Parents may stay unused by their condition, exercising the don't-care
/// case.
pub fn gen_random_adf(cfg: &GenConfig) -> Adf {
    assert!(cfg.n_statements >= 1, "generator needs at least one statement");
    assert!(
        (0.0..=1.0).contains(&cfg.link_density),
        "link density must be a probability"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = cfg.n_statements;
    let links = sample_links(&mut rng, n, cfg.link_density);
    let mut parents = vec![Vec::new(); n];
    for &(from, to) in &links {
        parents[to].push(from);
    }
    let conditions = (0..n)
        .map(|s| random_formula(&mut rng, &parents[s], cfg.max_formula_depth))
        .collect();
    Adf::new(
        Vocabulary::new(statement_names(n)).expect("generated names are unique"),
        links,
        conditions,
    )
    .expect("generated conditions only mention their parents")
}

/// Like [`gen_random_adf`] but attack-shaped: every condition is the
/// conjunction of the negated parents, a tautology for parentless
/// statements. Frameworks of this shape are exactly the classical
/// argumentation frameworks.
pub fn gen_random_af(cfg: &GenConfig) -> Adf {
    assert!(cfg.n_statements >= 1, "generator needs at least one statement");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = cfg.n_statements;
    let links = sample_links(&mut rng, n, cfg.link_density);
    let mut parents = vec![Vec::new(); n];
    for &(from, to) in &links {
        parents[to].push(from);
    }
    let conditions = (0..n).map(|s| af_condition(&parents[s])).collect();
    Adf::new(
        Vocabulary::new(statement_names(n)).expect("generated names are unique"),
        links,
        conditions,
    )
    .expect("attack conditions only mention parents")
}

fn af_condition(parents: &[usize]) -> Formula {
    let mut sorted = parents.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted
        .into_iter()
        .map(|p| formula::neg(formula::atom(p)))
        .reduce(formula::and)
        .unwrap_or_else(formula::verum)
}

#[derive(Debug, Clone, Copy)]
enum GenKind {
    Adf,
    Af,
}

/// The single self-supporting statement. Its model `t(a)` is not stable,
/// so this instance refutes both converse directions involving stability;
/// it is seeded into those searches.
fn self_support_instance() -> Adf {
    Adf::new(
        Vocabulary::new(["a"]).expect("fixed name"),
        [(0, 0)],
        vec![formula::atom(0)],
    )
    .expect("fixture is well-formed")
}

/// The worked four-statement example; its grounded interpretation is
/// complete but not preferred, and rejecting `a` is not admissible.
fn worked_instance() -> Adf {
    Adf::new(
        Vocabulary::new(["a", "b", "c", "d"]).expect("fixed names"),
        [(0, 2), (1, 1), (1, 2), (1, 3)],
        vec![
            formula::verum(),
            formula::atom(1),
            formula::and(formula::atom(0), formula::atom(1)),
            formula::neg(formula::atom(1)),
        ],
    )
    .expect("fixture is well-formed")
}

/// Verdict of one property on one instance: `None` when the property
/// holds there, otherwise the witnessing interpretations.
type Witnesses = Option<Vec<ThreeValued>>;
type WitnessFn = fn(&Adf, &Caps) -> Result<Witnesses, Error>;

fn violation(witnesses: Vec<ThreeValued>) -> Witnesses {
    (!witnesses.is_empty()).then_some(witnesses)
}

/// Run one property over its instance stream: seeded fixtures first,
/// then `cfg.trials` random instances with per-trial sizes and seeds.
/// Stops at the first violating instance, shrinks it, and reports.
fn run_search(
    name: &'static str,
    expected: Status,
    kind: GenKind,
    seeded: Vec<Adf>,
    cfg: &GenConfig,
    caps: &Caps,
    witnesses: WitnessFn,
) -> Result<PropertyReport, Error> {
    let mut trials = 0u32;
    let verdict = |adf: Adf, trials: u32| -> Result<Option<PropertyReport>, Error> {
        match witnesses(&adf, caps)? {
            None => Ok(None),
            Some(found) => {
                let (adf, found) = shrink(adf, found, caps, witnesses)?;
                Ok(Some(PropertyReport {
                    name,
                    expected,
                    trials,
                    status: Status::CounterexampleFound,
                    violations: vec![Counterexample {
                        adf,
                        witnesses: found,
                    }],
                }))
            }
        }
    };
    for adf in seeded {
        trials += 1;
        if let Some(report) = verdict(adf, trials)? {
            return Ok(report);
        }
    }
    for t in 0..cfg.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(cfg.seed, t as u64));
        let trial_cfg = GenConfig {
            n_statements: rng.gen_range(1..=cfg.n_statements.max(1)),
            seed: rng.gen(),
            ..cfg.clone()
        };
        let adf = match kind {
            GenKind::Adf => gen_random_adf(&trial_cfg),
            GenKind::Af => gen_random_af(&trial_cfg),
        };
        trials += 1;
        if let Some(report) = verdict(adf, trials)? {
            return Ok(report);
        }
    }
    Ok(PropertyReport {
        name,
        expected,
        trials,
        status: Status::HoldsOnSample,
        violations: Vec::new(),
    })
}

fn measure(adf: &Adf) -> (usize, usize, usize) {
    let nodes = (0..adf.statement_count())
        .map(|s| adf.condition(s).node_count())
        .sum();
    (adf.statement_count(), nodes, adf.links().count())
}

/// Greedy shrinking: keep applying the first size-reducing rewrite that
/// still violates the property. Rewrites are statement removal, condition
/// simplification, and dropping links the conditions never read.
fn shrink(
    mut adf: Adf,
    mut found: Vec<ThreeValued>,
    caps: &Caps,
    witnesses: WitnessFn,
) -> Result<(Adf, Vec<ThreeValued>), Error> {
    loop {
        let before = measure(&adf);
        let mut improved = false;
        for candidate in shrink_candidates(&adf) {
            if measure(&candidate) >= before {
                continue;
            }
            if let Ok(Some(still)) = witnesses(&candidate, caps) {
                adf = candidate;
                found = still;
                improved = true;
                break;
            }
        }
        if !improved {
            return Ok((adf, found));
        }
    }
}

fn shrink_candidates(adf: &Adf) -> Vec<Adf> {
    let n = adf.statement_count();
    let mut out = Vec::new();
    if n > 1 {
        for s in 0..n {
            out.push(remove_statement(adf, s));
        }
    }
    for s in 0..n {
        let current = adf.condition(s);
        let mut replacements = vec![formula::falsum(), formula::verum()];
        replacements.extend(current.children().into_iter().cloned());
        for replacement in replacements {
            if &replacement != current {
                out.push(replace_condition(adf, s, replacement));
            }
        }
    }
    if !adf.links_equal_induced() {
        let induced = adf.induced_links();
        let conditions = (0..n).map(|s| adf.condition(s).clone()).collect();
        out.push(
            Adf::new(adf.vocab().clone(), induced, conditions)
                .expect("induced links cover all atoms"),
        );
    }
    out
}

fn remove_statement(adf: &Adf, victim: usize) -> Adf {
    let n = adf.statement_count();
    let survivors: Vec<usize> = (0..n).filter(|&s| s != victim).collect();
    let mut remap = vec![usize::MAX; n];
    for (new, &old) in survivors.iter().enumerate() {
        remap[old] = new;
    }
    let vocab = Vocabulary::new(survivors.iter().map(|&s| adf.vocab().name(s)))
        .expect("removing a statement keeps names unique");
    let links: Vec<(usize, usize)> = adf
        .links()
        .filter(|&(a, b)| a != victim && b != victim)
        .map(|(a, b)| (remap[a], remap[b]))
        .collect();
    let conditions: Vec<Formula> = survivors
        .iter()
        .map(|&s| {
            adf.condition(s).map_atoms(&|a| {
                if a == victim {
                    formula::falsum()
                } else {
                    formula::atom(remap[a])
                }
            })
        })
        .collect();
    Adf::new(vocab, links, conditions).expect("projection keeps atoms within parents")
}

fn replace_condition(adf: &Adf, s: usize, replacement: Formula) -> Adf {
    let conditions: Vec<Formula> = (0..adf.statement_count())
        .map(|i| {
            if i == s {
                replacement.clone()
            } else {
                adf.condition(i).clone()
            }
        })
        .collect();
    Adf::new(adf.vocab().clone(), adf.links(), conditions)
        .expect("replacement atoms are a subset of the original's")
}

// ---------------------------------------------------------------------
// The individual properties
// ---------------------------------------------------------------------

fn not_in<'a>(
    list: &'a [ThreeValued],
) -> impl Fn(&ThreeValued) -> bool + 'a {
    move |v| !list.contains(v)
}

fn witnesses_stable_to_model(adf: &Adf, caps: &Caps) -> Result<Witnesses, Error> {
    let models = enumerate(adf, Semantics::Model, caps)?;
    let strays: Vec<_> = enumerate(adf, Semantics::Stable, caps)?
        .into_iter()
        .filter(not_in(&models))
        .collect();
    Ok(violation(strays))
}

fn witnesses_model_to_preferred(adf: &Adf, caps: &Caps) -> Result<Witnesses, Error> {
    let preferred = enumerate(adf, Semantics::Preferred, caps)?;
    let strays: Vec<_> = enumerate(adf, Semantics::Model, caps)?
        .into_iter()
        .filter(not_in(&preferred))
        .collect();
    Ok(violation(strays))
}

fn witnesses_preferred_to_complete(adf: &Adf, caps: &Caps) -> Result<Witnesses, Error> {
    let complete = enumerate(adf, Semantics::Complete, caps)?;
    let strays: Vec<_> = enumerate(adf, Semantics::Preferred, caps)?
        .into_iter()
        .filter(not_in(&complete))
        .collect();
    Ok(violation(strays))
}

fn witnesses_complete_to_admissible(adf: &Adf, caps: &Caps) -> Result<Witnesses, Error> {
    let mut strays = Vec::new();
    for v in enumerate(adf, Semantics::Complete, caps)? {
        if !is_admissible(adf, &v, caps)? {
            strays.push(v);
        }
    }
    Ok(violation(strays))
}

fn witnesses_grounded_to_complete(adf: &Adf, caps: &Caps) -> Result<Witnesses, Error> {
    let g = grounded(adf, caps)?;
    if is_complete(adf, &g, caps)? {
        Ok(None)
    } else {
        Ok(Some(vec![g]))
    }
}

fn witnesses_model_not_stable(adf: &Adf, caps: &Caps) -> Result<Witnesses, Error> {
    let stable = enumerate(adf, Semantics::Stable, caps)?;
    let strays: Vec<_> = enumerate(adf, Semantics::Model, caps)?
        .into_iter()
        .filter(not_in(&stable))
        .collect();
    Ok(violation(strays))
}

fn witnesses_preferred_not_model(adf: &Adf, caps: &Caps) -> Result<Witnesses, Error> {
    let models = enumerate(adf, Semantics::Model, caps)?;
    let strays: Vec<_> = enumerate(adf, Semantics::Preferred, caps)?
        .into_iter()
        .filter(not_in(&models))
        .collect();
    Ok(violation(strays))
}

fn witnesses_complete_not_preferred(adf: &Adf, caps: &Caps) -> Result<Witnesses, Error> {
    let preferred = enumerate(adf, Semantics::Preferred, caps)?;
    let strays: Vec<_> = enumerate(adf, Semantics::Complete, caps)?
        .into_iter()
        .filter(not_in(&preferred))
        .collect();
    Ok(violation(strays))
}

fn witnesses_admissible_not_complete(adf: &Adf, caps: &Caps) -> Result<Witnesses, Error> {
    let complete = enumerate(adf, Semantics::Complete, caps)?;
    let strays: Vec<_> = enumerate(adf, Semantics::Admissible, caps)?
        .into_iter()
        .filter(not_in(&complete))
        .collect();
    Ok(violation(strays))
}

fn witnesses_complete_not_grounded(adf: &Adf, caps: &Caps) -> Result<Witnesses, Error> {
    let g = grounded(adf, caps)?;
    let strays: Vec<_> = enumerate(adf, Semantics::Complete, caps)?
        .into_iter()
        .filter(|v| *v != g)
        .collect();
    Ok(violation(strays))
}

fn witnesses_existence(adf: &Adf, caps: &Caps) -> Result<Witnesses, Error> {
    for sem in [
        Semantics::Admissible,
        Semantics::Complete,
        Semantics::Preferred,
        Semantics::Grounded,
    ] {
        if enumerate(adf, sem, caps)?.is_empty() {
            // the violation is the emptiness itself
            return Ok(Some(vec![]));
        }
    }
    Ok(None)
}

fn witnesses_non_admissible(adf: &Adf, caps: &Caps) -> Result<Witnesses, Error> {
    for v in enum_all_three(adf.statement_count(), caps)? {
        if !is_admissible(adf, &v, caps)? {
            return Ok(Some(vec![v]));
        }
    }
    Ok(None)
}

/// Disagreement between models and stable models. Since stability implies
/// modelhood, any disagreement is a model that is not stable.
fn witnesses_model_stable_disagree(adf: &Adf, caps: &Caps) -> Result<Witnesses, Error> {
    let models = enumerate(adf, Semantics::Model, caps)?;
    let stable = enumerate(adf, Semantics::Stable, caps)?;
    let mut strays: Vec<ThreeValued> =
        models.iter().filter(|v| !stable.contains(v)).cloned().collect();
    strays.extend(stable.iter().filter(|v| !models.contains(v)).cloned());
    Ok(violation(strays))
}

fn witnesses_grounded_unique(adf: &Adf, caps: &Caps) -> Result<Witnesses, Error> {
    let fast = grounded(adf, caps)?;
    let brute = grounded_bruteforce(adf, caps)?;
    if fast != brute {
        return Ok(Some(vec![fast, brute]));
    }
    let complete = enumerate(adf, Semantics::Complete, caps)?;
    let least: Vec<ThreeValued> = complete
        .iter()
        .filter(|v| complete.iter().all(|other| leq_i(v, other)))
        .cloned()
        .collect();
    if least.len() == 1 && least[0] == fast {
        Ok(None)
    } else {
        Ok(Some(least))
    }
}

fn witnesses_gamma_preserves_admissible(adf: &Adf, caps: &Caps) -> Result<Witnesses, Error> {
    for v in enumerate(adf, Semantics::Admissible, caps)? {
        let next = gamma(adf, &v, caps)?;
        if !is_admissible(adf, &next, caps)? {
            return Ok(Some(vec![v, next]));
        }
    }
    Ok(None)
}

fn witnesses_total_model_equiv(
    adf: &Adf,
    caps: &Caps,
    sem: Semantics,
) -> Result<Witnesses, Error> {
    let models = enumerate(adf, Semantics::Model, caps)?;
    let totals: Vec<ThreeValued> = enumerate(adf, sem, caps)?
        .into_iter()
        .filter(ThreeValued::is_total)
        .collect();
    let mut strays: Vec<ThreeValued> =
        models.iter().filter(|v| !totals.contains(v)).cloned().collect();
    strays.extend(totals.iter().filter(|v| !models.contains(v)).cloned());
    Ok(violation(strays))
}

fn witnesses_total_model_equiv_preferred(adf: &Adf, caps: &Caps) -> Result<Witnesses, Error> {
    witnesses_total_model_equiv(adf, caps, Semantics::Preferred)
}

fn witnesses_total_model_equiv_complete(adf: &Adf, caps: &Caps) -> Result<Witnesses, Error> {
    witnesses_total_model_equiv(adf, caps, Semantics::Complete)
}

/// One registered property: its name, expected outcome, and search.
pub struct PropertyCheck {
    pub name: &'static str,
    pub expected: Status,
    kind: GenKind,
    seeded: fn() -> Vec<Adf>,
    witnesses: WitnessFn,
}

impl PropertyCheck {
    pub fn run(&self, cfg: &GenConfig, caps: &Caps) -> Result<PropertyReport, Error> {
        run_search(
            self.name,
            self.expected,
            self.kind,
            (self.seeded)(),
            cfg,
            caps,
            self.witnesses,
        )
    }
}

fn no_fixtures() -> Vec<Adf> {
    vec![]
}

fn self_support_fixture() -> Vec<Adf> {
    vec![self_support_instance()]
}

fn worked_fixture() -> Vec<Adf> {
    vec![worked_instance()]
}

/// All registered properties, in reporting order.
pub fn checks() -> Vec<PropertyCheck> {
    use Status::{CounterexampleFound as Cex, HoldsOnSample as Holds};
    vec![
        PropertyCheck {
            name: "stable_to_model",
            expected: Holds,
            kind: GenKind::Adf,
            seeded: no_fixtures,
            witnesses: witnesses_stable_to_model,
        },
        PropertyCheck {
            name: "model_to_preferred",
            expected: Holds,
            kind: GenKind::Adf,
            seeded: no_fixtures,
            witnesses: witnesses_model_to_preferred,
        },
        PropertyCheck {
            name: "preferred_to_complete",
            expected: Holds,
            kind: GenKind::Adf,
            seeded: no_fixtures,
            witnesses: witnesses_preferred_to_complete,
        },
        PropertyCheck {
            name: "complete_to_admissible",
            expected: Holds,
            kind: GenKind::Adf,
            seeded: no_fixtures,
            witnesses: witnesses_complete_to_admissible,
        },
        PropertyCheck {
            name: "grounded_to_complete",
            expected: Holds,
            kind: GenKind::Adf,
            seeded: no_fixtures,
            witnesses: witnesses_grounded_to_complete,
        },
        PropertyCheck {
            name: "converse_model_to_stable",
            expected: Cex,
            kind: GenKind::Adf,
            seeded: self_support_fixture,
            witnesses: witnesses_model_not_stable,
        },
        PropertyCheck {
            name: "converse_preferred_to_model",
            expected: Cex,
            kind: GenKind::Adf,
            seeded: no_fixtures,
            witnesses: witnesses_preferred_not_model,
        },
        PropertyCheck {
            name: "converse_complete_to_preferred",
            expected: Cex,
            kind: GenKind::Adf,
            seeded: worked_fixture,
            witnesses: witnesses_complete_not_preferred,
        },
        PropertyCheck {
            name: "converse_admissible_to_complete",
            expected: Cex,
            kind: GenKind::Adf,
            seeded: no_fixtures,
            witnesses: witnesses_admissible_not_complete,
        },
        PropertyCheck {
            name: "converse_complete_to_grounded",
            expected: Cex,
            kind: GenKind::Adf,
            seeded: no_fixtures,
            witnesses: witnesses_complete_not_grounded,
        },
        PropertyCheck {
            name: "existence",
            expected: Holds,
            kind: GenKind::Adf,
            seeded: no_fixtures,
            witnesses: witnesses_existence,
        },
        PropertyCheck {
            name: "not_all_admissible",
            expected: Cex,
            kind: GenKind::Adf,
            seeded: worked_fixture,
            witnesses: witnesses_non_admissible,
        },
        PropertyCheck {
            name: "af_model_equiv_stable",
            expected: Holds,
            kind: GenKind::Af,
            seeded: no_fixtures,
            witnesses: witnesses_model_stable_disagree,
        },
        PropertyCheck {
            name: "non_af_model_equiv_stable",
            expected: Cex,
            kind: GenKind::Adf,
            seeded: self_support_fixture,
            witnesses: witnesses_model_stable_disagree,
        },
        PropertyCheck {
            name: "grounded_unique",
            expected: Holds,
            kind: GenKind::Adf,
            seeded: no_fixtures,
            witnesses: witnesses_grounded_unique,
        },
        PropertyCheck {
            name: "gamma_preserves_admissible",
            expected: Holds,
            kind: GenKind::Adf,
            seeded: no_fixtures,
            witnesses: witnesses_gamma_preserves_admissible,
        },
        PropertyCheck {
            name: "total_model_equiv_preferred",
            expected: Holds,
            kind: GenKind::Adf,
            seeded: no_fixtures,
            witnesses: witnesses_total_model_equiv_preferred,
        },
        PropertyCheck {
            name: "total_model_equiv_complete",
            expected: Holds,
            kind: GenKind::Adf,
            seeded: no_fixtures,
            witnesses: witnesses_total_model_equiv_complete,
        },
    ]
}

/// Run every registered property.
pub fn run_all(cfg: &GenConfig, caps: &Caps) -> Result<Vec<PropertyReport>, Error> {
    checks().iter().map(|c| c.run(cfg, caps)).collect()
}

/// The inclusion chain and the five converse searches.
pub fn check_inclusion_chain(cfg: &GenConfig, caps: &Caps) -> Result<Vec<PropertyReport>, Error> {
    run_selected(
        cfg,
        caps,
        &[
            "stable_to_model",
            "model_to_preferred",
            "preferred_to_complete",
            "complete_to_admissible",
            "grounded_to_complete",
            "converse_model_to_stable",
            "converse_preferred_to_model",
            "converse_complete_to_preferred",
            "converse_admissible_to_complete",
            "converse_complete_to_grounded",
        ],
    )
}

/// Non-emptiness of the partial semantics plus the search for a
/// non-admissible interpretation.
pub fn check_existence(cfg: &GenConfig, caps: &Caps) -> Result<Vec<PropertyReport>, Error> {
    run_selected(cfg, caps, &["existence", "not_all_admissible"])
}

/// Model/stable coincidence on attack-shaped instances, and the search
/// for an unconstrained instance breaking it.
pub fn check_af_equivalence(cfg: &GenConfig, caps: &Caps) -> Result<Vec<PropertyReport>, Error> {
    run_selected(
        cfg,
        caps,
        &["af_model_equiv_stable", "non_af_model_equiv_stable"],
    )
}

/// Uniqueness of the grounded interpretation, cross-checked against the
/// brute-force route.
pub fn check_grounded_uniqueness(cfg: &GenConfig, caps: &Caps) -> Result<PropertyReport, Error> {
    let mut reports = run_selected(cfg, caps, &["grounded_unique"])?;
    Ok(reports.remove(0))
}

fn run_selected(
    cfg: &GenConfig,
    caps: &Caps,
    names: &[&str],
) -> Result<Vec<PropertyReport>, Error> {
    checks()
        .iter()
        .filter(|c| names.contains(&c.name))
        .map(|c| c.run(cfg, caps))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp::Truth;

    fn small_cfg(trials: u32) -> GenConfig {
        GenConfig {
            n_statements: 4,
            trials,
            ..GenConfig::default()
        }
    }

    #[test]
    fn generator_is_deterministic() {
        let cfg = GenConfig::default();
        assert_eq!(gen_random_adf(&cfg), gen_random_adf(&cfg));
        assert_eq!(gen_random_af(&cfg), gen_random_af(&cfg));
        let other = GenConfig {
            seed: cfg.seed + 1,
            ..cfg
        };
        assert_ne!(gen_random_adf(&cfg), gen_random_adf(&other));
    }

    #[test]
    fn zero_density_means_constant_conditions() {
        let cfg = GenConfig {
            link_density: 0.0,
            ..GenConfig::default()
        };
        let adf = gen_random_adf(&cfg);
        for s in 0..adf.statement_count() {
            assert!(matches!(adf.condition(s), Formula::Const(_)));
        }
    }

    #[test]
    fn generated_instances_validate() {
        for t in 0..1000 {
            let cfg = GenConfig {
                n_statements: 4,
                seed: trial_seed(7, t),
                ..GenConfig::default()
            };
            assert!(gen_random_adf(&cfg).validate().is_empty());
            assert!(gen_random_af(&cfg).validate().is_empty());
        }
    }

    #[test]
    fn af_generator_only_accepts_the_empty_parent_subset() {
        let cfg = GenConfig {
            n_statements: 3,
            seed: 11,
            ..GenConfig::default()
        };
        let af = gen_random_af(&cfg);
        let caps = Caps::default();
        for s in 0..af.statement_count() {
            let table = af.truth_table(s, &caps).unwrap();
            for mask in 0..(1u64 << table.parents.len()) {
                assert_eq!(table.value(mask), mask == 0);
            }
        }
    }

    #[test]
    fn seeded_self_support_refutes_model_to_stable() {
        let cfg = small_cfg(0); // the fixture alone must be enough
        let caps = Caps::default();
        let report = checks()
            .into_iter()
            .find(|c| c.name == "converse_model_to_stable")
            .unwrap()
            .run(&cfg, &caps)
            .unwrap();
        assert_eq!(report.status, Status::CounterexampleFound);
        let cex = &report.violations[0];
        assert_eq!(cex.adf, self_support_instance());
        assert_eq!(cex.witnesses.len(), 1);
        assert_eq!(cex.witnesses[0].value(0), Truth::True);
    }

    #[test]
    fn seeded_worked_instance_refutes_complete_to_preferred() {
        let cfg = small_cfg(0);
        let caps = Caps::default();
        let report = checks()
            .into_iter()
            .find(|c| c.name == "converse_complete_to_preferred")
            .unwrap()
            .run(&cfg, &caps)
            .unwrap();
        assert_eq!(report.status, Status::CounterexampleFound);
    }

    #[test]
    fn non_admissible_witness_on_the_worked_instance_rejects_a() {
        let cfg = small_cfg(0);
        let report = checks()
            .into_iter()
            .find(|c| c.name == "not_all_admissible")
            .unwrap()
            .run(&cfg, &Caps::default())
            .unwrap();
        assert_eq!(report.status, Status::CounterexampleFound);
        // shrinking may cut the instance down, but a witness survives
        assert!(!report.violations[0].witnesses.is_empty());
    }

    #[test]
    fn discovery_witnesses_on_the_worked_instance_are_the_classic_ones() {
        // before shrinking: the complete-but-not-preferred interpretation
        // is the grounded one, and the first non-admissible one rejects a
        let adf = worked_instance();
        let caps = Caps::default();
        let found = witnesses_complete_not_preferred(&adf, &caps).unwrap().unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0], grounded(&adf, &caps).unwrap());
        assert_eq!(found[0].value(0), crate::interp::Truth::True);
        assert_eq!(found[0].defined().len(), 1);

        let found = witnesses_non_admissible(&adf, &caps).unwrap().unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].value(0), crate::interp::Truth::False);
        assert_eq!(found[0].defined().len(), 1);
    }

    #[test]
    fn the_suite_meets_expectations_on_a_small_budget() {
        let cfg = GenConfig {
            n_statements: 4,
            trials: 60,
            ..GenConfig::default()
        };
        let caps = Caps::default();
        for report in run_all(&cfg, &caps).unwrap() {
            assert!(
                report.as_expected(),
                "property {} ended {:?}, expected {:?}",
                report.name,
                report.status,
                report.expected
            );
            assert_eq!(
                report.violations.is_empty(),
                report.status == Status::HoldsOnSample
            );
        }
    }

    #[test]
    fn shrinking_reaches_a_tiny_refutation() {
        let report = run_search(
            "probe",
            Status::CounterexampleFound,
            GenKind::Adf,
            vec![],
            &GenConfig {
                n_statements: 4,
                trials: 200,
                seed: 3,
                ..GenConfig::default()
            },
            &Caps::default(),
            witnesses_model_not_stable,
        )
        .unwrap();
        assert_eq!(report.status, Status::CounterexampleFound);
        let cex = &report.violations[0];
        assert!(cex.adf.statement_count() <= 2, "shrunk to {:?}", cex.adf);
    }
}
