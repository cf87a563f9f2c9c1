//! Acceptance suite: golden fixtures, the oracle-equivalence corpus, the
//! randomized theorem checks, and the io round-trip guarantees. One
//! criterion per test, each printing a PASS/FAIL line (visible with
//! `cargo test --test acceptance -- --nocapture`).

use std::panic::UnwindSafe;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use adf_core::meta::{self, GenConfig, Status};
use adf_core::operators::{apply_g, completions, gamma, leq_i};
use adf_core::oracle::{
    enum_all_three, enum_all_two, enumerate_bruteforce, gamma_bruteforce, grounded_bruteforce,
};
use adf_core::parse::{parse_adf, parse_interp};
use adf_core::print::{instance_text, interp_text};
use adf_core::semantics::{
    enumerate, grounded, is_admissible, is_complete, is_grounded, is_model, is_preferred,
    is_stable, output_order, reduct,
};
use adf_core::set::StmtSet;
use adf_core::{Adf, Caps, Semantics, ThreeValued, Truth, TwoValued};

const FIG1: &str = "s(a). s(b). s(c). s(d). ac(a,c(v)). ac(b,b). ac(c,and(a,b)). ac(d,neg(b)).";
const FIG6: &str = "s(a). s(b). ac(a,neg(b)). ac(b,neg(a)).";
const SELF_LOOP: &str = "s(a). ac(a,a).";
const CORPUS_SEED: u64 = 0xADF;
const CORPUS_SIZE: u64 = 1000;
const CORPUS_MAX_N: usize = 6;

fn criterion(number: u32, name: &str, body: impl FnOnce() + UnwindSafe) {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(body);
    let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
    println!(
        "criterion {number} ({name}): {status} [{:.3}s]",
        start.elapsed().as_secs_f64()
    );
    if let Err(panic) = outcome {
        std::panic::resume_unwind(panic);
    }
}

fn interp(adf: &Adf, text: &str) -> ThreeValued {
    parse_interp(text, adf.vocab()).expect("test interpretation parses")
}

fn expect_set(adf: &Adf, sem: Semantics, expected: &[&str]) {
    let caps = Caps::default();
    let found = enumerate(adf, sem, &caps).unwrap();
    let expected: Vec<ThreeValued> = expected.iter().map(|t| interp(adf, t)).collect();
    assert_eq!(found, expected, "{} enumeration differs", sem.code());
}

/// The seeded corpus shared by criteria 4-8: a thousand frameworks with
/// one to six statements each.
fn corpus() -> impl Iterator<Item = Adf> {
    (0..CORPUS_SIZE).map(|t| {
        let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED.wrapping_add(t));
        let cfg = GenConfig {
            n_statements: rng.gen_range(1..=CORPUS_MAX_N),
            seed: rng.gen(),
            ..GenConfig::default()
        };
        meta::gen_random_adf(&cfg)
    })
}

fn corpus_cfg() -> GenConfig {
    GenConfig {
        n_statements: CORPUS_MAX_N,
        trials: CORPUS_SIZE as u32,
        seed: CORPUS_SEED,
        ..GenConfig::default()
    }
}

fn random_three_valued(rng: &mut ChaCha8Rng, n: usize) -> ThreeValued {
    let mut defined = StmtSet::empty(n);
    let mut trues = StmtSet::empty(n);
    for s in 0..n {
        match rng.gen_range(0..3) {
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
    ThreeValued::new(defined, trues).unwrap()
}

/// Forget each defined statement with probability one half; the result is
/// information-below the input by construction.
fn weaken(rng: &mut ChaCha8Rng, v: &ThreeValued) -> ThreeValued {
    let mut defined = v.defined().clone();
    let mut trues = v.trues().clone();
    for s in v.defined().iter() {
        if rng.gen_bool(0.5) {
            defined.remove(s);
            trues.remove(s);
        }
    }
    ThreeValued::new(defined, trues).unwrap()
}

#[test]
fn criterion_1_worked_example_fixture() {
    criterion(1, "four-statement golden fixture", || {
        let start = Instant::now();
        let adf = parse_adf(FIG1).unwrap();
        let v1 = "t(a) t(b) t(c) f(d)";
        let v2 = "t(a) f(b) f(c) t(d)";
        let v3 = "t(a) u(b) u(c) u(d)";
        expect_set(&adf, Semantics::Model, &[v1, v2]);
        expect_set(&adf, Semantics::Complete, &[v1, v2, v3]);
        expect_set(&adf, Semantics::Preferred, &[v1, v2]);
        expect_set(&adf, Semantics::Grounded, &[v3]);
        expect_set(&adf, Semantics::Stable, &[v2]);
        let v4 = interp(&adf, "f(a) u(b) u(c) u(d)");
        assert!(!is_admissible(&adf, &v4, &Caps::default()).unwrap());
        assert!(start.elapsed() < Duration::from_millis(100), "too slow");
    });
}

#[test]
fn criterion_2_mutual_attack_fixture() {
    criterion(2, "two-statement attack golden fixture", || {
        let start = Instant::now();
        let af = parse_adf(FIG6).unwrap();
        let tf = "t(a) f(b)";
        let ft = "f(a) t(b)";
        let uu = "u(a) u(b)";
        expect_set(&af, Semantics::Model, &[tf, ft]);
        expect_set(&af, Semantics::Stable, &[tf, ft]);
        expect_set(&af, Semantics::Preferred, &[tf, ft]);
        expect_set(&af, Semantics::Complete, &[tf, ft, uu]);
        expect_set(&af, Semantics::Grounded, &[uu]);
        let caps = Caps::default();
        assert!(!is_admissible(&af, &interp(&af, "t(a) t(b)"), &caps).unwrap());
        assert!(!is_admissible(&af, &interp(&af, "f(a) f(b)"), &caps).unwrap());
        assert!(start.elapsed() < Duration::from_millis(100), "too slow");
    });
}

#[test]
fn criterion_3_reduct_fixture() {
    criterion(3, "reduct golden fixture", || {
        let adf = parse_adf(FIG1).unwrap();
        let caps = Caps::default();

        let v1 = interp(&adf, "t(a) t(b) t(c) f(d)").to_two_valued().unwrap();
        let r1 = reduct(&adf, &v1).unwrap();
        let g1 = grounded(&r1, &caps).unwrap();
        assert_eq!(interp_text(&g1, r1.vocab()), "t(a) u(b) u(c)");

        let v2 = interp(&adf, "t(a) f(b) f(c) t(d)").to_two_valued().unwrap();
        let r2 = reduct(&adf, &v2).unwrap();
        let g2 = grounded(&r2, &caps).unwrap();
        assert_eq!(interp_text(&g2, r2.vocab()), "t(a) t(d)");
    });
}

#[test]
fn criterion_4_oracle_equivalence_corpus() {
    criterion(4, "oracle equivalence on the corpus", || {
        let start = Instant::now();
        let caps = Caps::default();
        for (t, adf) in corpus().enumerate() {
            let n = adf.statement_count();
            for v in enum_all_three(n, &caps).unwrap() {
                assert_eq!(
                    gamma(&adf, &v, &caps).unwrap(),
                    gamma_bruteforce(&adf, &v, &caps).unwrap(),
                    "consensus routes disagree, instance {t}, input {v:?}"
                );
            }
            assert_eq!(
                grounded(&adf, &caps).unwrap(),
                grounded_bruteforce(&adf, &caps).unwrap(),
                "grounded routes disagree, instance {t}"
            );
            for sem in Semantics::ALL {
                let fast = enumerate(&adf, sem, &caps).unwrap();
                let scan = predicate_scan(&adf, sem, &caps);
                assert_eq!(fast, scan, "{} scan differs, instance {t}", sem.code());
                let brute = enumerate_bruteforce(&adf, sem, &caps).unwrap();
                assert_eq!(fast, brute, "{} oracle differs, instance {t}", sem.code());
            }
        }
        let elapsed = start.elapsed();
        assert!(elapsed < Duration::from_secs(60), "corpus took {elapsed:?}");
    });
}

/// The definitional route for enumeration: run the decision predicate on
/// every interpretation of the right kind.
fn predicate_scan(adf: &Adf, sem: Semantics, caps: &Caps) -> Vec<ThreeValued> {
    let n = adf.statement_count();
    let mut out: Vec<ThreeValued> = match sem {
        Semantics::Model => enum_all_two(n, caps)
            .unwrap()
            .filter(|w| is_model(adf, w))
            .map(ThreeValued::from)
            .collect(),
        Semantics::Stable => enum_all_two(n, caps)
            .unwrap()
            .filter(|w| is_stable(adf, w, caps).unwrap())
            .map(ThreeValued::from)
            .collect(),
        Semantics::Admissible => enum_all_three(n, caps)
            .unwrap()
            .filter(|v| is_admissible(adf, v, caps).unwrap())
            .collect(),
        Semantics::Complete => enum_all_three(n, caps)
            .unwrap()
            .filter(|v| is_complete(adf, v, caps).unwrap())
            .collect(),
        Semantics::Preferred => enum_all_three(n, caps)
            .unwrap()
            .filter(|v| is_preferred(adf, v, caps).unwrap())
            .collect(),
        Semantics::Grounded => enum_all_three(n, caps)
            .unwrap()
            .filter(|v| is_grounded(adf, v, caps).unwrap())
            .collect(),
    };
    out.sort_by(output_order);
    out
}

#[test]
fn criterion_5_inclusion_chain_and_converses() {
    criterion(5, "inclusion chain with converse refutations", || {
        let caps = Caps::default();
        let reports = meta::check_inclusion_chain(&corpus_cfg(), &caps).unwrap();
        assert_eq!(reports.len(), 10);
        for report in &reports {
            assert!(
                report.as_expected(),
                "property {} ended {:?}",
                report.name,
                report.status
            );
        }
        let model_to_stable = reports
            .iter()
            .find(|r| r.name == "converse_model_to_stable")
            .unwrap();
        // the refutation must be the seeded self-supporting loop
        let cex = &model_to_stable.violations[0];
        assert_eq!(cex.adf, parse_adf(SELF_LOOP).unwrap());
        assert_eq!(cex.witnesses.len(), 1);
        assert_eq!(cex.witnesses[0].value(0), Truth::True);
    });
}

#[test]
fn criterion_6_existence_and_grounded_uniqueness() {
    criterion(6, "existence and grounded uniqueness", || {
        let caps = Caps::default();
        let cfg = corpus_cfg();
        for report in meta::check_existence(&cfg, &caps).unwrap() {
            assert!(report.as_expected(), "property {}", report.name);
        }
        let unique = meta::check_grounded_uniqueness(&cfg, &caps).unwrap();
        assert_eq!(unique.status, Status::HoldsOnSample);
        assert!(unique.violations.is_empty());
    });
}

#[test]
fn criterion_7_operator_lemmas() {
    criterion(7, "consensus operator lemmas", || {
        let start = Instant::now();
        let caps = Caps::default();

        // monotonicity in the information ordering, 10 000 ordered pairs
        let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ 0x6d6f6e6f);
        for i in 0..10_000u32 {
            let cfg = GenConfig {
                n_statements: rng.gen_range(1..=CORPUS_MAX_N),
                seed: rng.gen(),
                ..GenConfig::default()
            };
            let adf = meta::gen_random_adf(&cfg);
            let stronger = random_three_valued(&mut rng, adf.statement_count());
            let weaker = weaken(&mut rng, &stronger);
            let g_weaker = gamma(&adf, &weaker, &caps).unwrap();
            let g_stronger = gamma(&adf, &stronger, &caps).unwrap();
            assert!(
                leq_i(&g_weaker, &g_stronger),
                "monotonicity violated at pair {i}: {weaker:?} vs {stronger:?}"
            );
        }

        // on total inputs the consensus collapses to plain re-evaluation
        let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ 0x746f7461);
        for _ in 0..1000u32 {
            let cfg = GenConfig {
                n_statements: rng.gen_range(1..=CORPUS_MAX_N),
                seed: rng.gen(),
                ..GenConfig::default()
            };
            let adf = meta::gen_random_adf(&cfg);
            let n = adf.statement_count();
            let mut trues = StmtSet::empty(n);
            for s in 0..n {
                if rng.gen_bool(0.5) {
                    trues.insert(s);
                }
            }
            let w = TwoValued::new(trues);
            let out = gamma(&adf, &ThreeValued::from(&w), &caps).unwrap();
            assert!(out.is_total(), "total input must stay total");
            assert_eq!(out.trues(), apply_g(&adf, &w).trues());
        }

        // defined-false means every full completion rejects the condition
        let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ 0x66616c73);
        for _ in 0..1000u32 {
            let cfg = GenConfig {
                n_statements: rng.gen_range(1..=CORPUS_MAX_N),
                seed: rng.gen(),
                ..GenConfig::default()
            };
            let adf = meta::gen_random_adf(&cfg);
            let n = adf.statement_count();
            let v = random_three_valued(&mut rng, n);
            let out = gamma(&adf, &v, &caps).unwrap();
            let undefined = StmtSet::full(n).difference(v.defined());
            for s in 0..n {
                let all_reject = completions(&v, &undefined, &caps)
                    .unwrap()
                    .all(|w| !adf.condition(s).eval(&w));
                assert_eq!(
                    out.value(s) == Truth::False,
                    all_reject,
                    "false-consensus mismatch at statement {s}"
                );
            }
        }

        let elapsed = start.elapsed();
        assert!(elapsed < Duration::from_secs(30), "lemmas took {elapsed:?}");
    });
}

#[test]
fn criterion_8_attack_shaped_equivalence() {
    criterion(8, "model/stable coincidence on attack-shaped instances", || {
        let caps = Caps::default();
        let reports = meta::check_af_equivalence(&corpus_cfg(), &caps).unwrap();
        let af = reports.iter().find(|r| r.name == "af_model_equiv_stable").unwrap();
        assert_eq!(af.status, Status::HoldsOnSample);
        assert_eq!(af.trials, CORPUS_SIZE as u32);
        let non_af = reports
            .iter()
            .find(|r| r.name == "non_af_model_equiv_stable")
            .unwrap();
        assert_eq!(non_af.status, Status::CounterexampleFound);
    });
}

#[test]
fn criterion_9_round_trip_and_determinism() {
    criterion(9, "round-trip and byte-identical reruns", || {
        for text in [FIG1, FIG6, SELF_LOOP] {
            let adf = parse_adf(text).unwrap();
            assert_eq!(parse_adf(&instance_text(&adf)).unwrap(), adf);
            for v in enumerate(&adf, Semantics::Complete, &Caps::default()).unwrap() {
                let line = interp_text(&v, adf.vocab());
                assert_eq!(parse_interp(&line, adf.vocab()).unwrap(), v);
            }
        }
        // a don't-care link forces explicit link facts through the cycle
        let dont_care = parse_adf("s(a). s(b). ac(a,c(v)). ac(b,c(v)). l(a,b).").unwrap();
        assert_eq!(parse_adf(&instance_text(&dont_care)).unwrap(), dont_care);

        let dir = std::env::temp_dir().join(format!("adf-acceptance-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let file = dir.join("fig1.adf");
        std::fs::write(&file, FIG1).unwrap();
        let solve = ["solve", "--sem", "com", file.to_str().unwrap()];
        let meta_args = ["meta", "--trials", "50", "--n", "4", "--seed", "9"];
        for args in [&solve[..], &meta_args[..]] {
            let first = run_cli(args);
            let second = run_cli(args);
            assert_eq!(first, second, "reruns differ for {args:?}");
        }
        let (stdout, code) = run_cli(&solve);
        assert_eq!(code, 0);
        assert_eq!(
            String::from_utf8(stdout).unwrap(),
            "t(a) t(b) t(c) f(d)\nt(a) f(b) f(c) t(d)\nt(a) u(b) u(c) u(d)\n"
        );
        std::fs::remove_dir_all(&dir).ok();
    });
}

fn run_cli(args: &[&str]) -> (Vec<u8>, i32) {
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_adf"))
        .args(args)
        .output()
        .expect("solver binary runs");
    (output.stdout, output.status.code().unwrap_or(-1))
}
