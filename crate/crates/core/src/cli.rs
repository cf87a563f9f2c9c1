//! Command-line interface.
//!
//! Exit codes follow one convention everywhere: 0 for "found"/"yes"/"all
//! outcomes as expected", 1 for "none"/"no"/"unexpected outcome", 2 for
//! any error (bad usage, unreadable file, parse failure, exceeded cap).

use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::adf::Adf;
use crate::error::Caps;
use crate::interp::ThreeValued;
use crate::meta::{self, GenConfig, Status};
use crate::oracle;
use crate::parse::{parse_adf, parse_interp};
use crate::print::{instance_text, interp_text, table_text};
use crate::semantics::{self, Semantics};

#[derive(Parser)]
#[command(
    name = "adf",
    version,
    about = "Solve and check dialectical frameworks under operator-based semantics",
    max_term_width = 100
)]
struct Cli {
    /// Cap on the statement count for exhaustive scans (also bounds
    /// truth-table parents).
    #[arg(long, global = true, value_name = "N")]
    max_enum: Option<usize>,

    /// Cap on undefined parents per statement in the consensus operator.
    #[arg(long, global = true, value_name = "N")]
    max_undef: Option<usize>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate all interpretations of FILE under a semantics.
    Solve {
        /// Semantics to enumerate.
        #[arg(long)]
        sem: SemArg,
        /// Print only the number of interpretations.
        #[arg(long)]
        count: bool,
        /// Print at most N interpretations.
        #[arg(long, value_name = "N")]
        limit: Option<usize>,
        /// Use the brute-force oracle route instead of the optimized one.
        #[arg(long)]
        oracle: bool,
        file: PathBuf,
    },
    /// Decide whether an interpretation satisfies a semantics.
    Check {
        #[arg(long)]
        sem: SemArg,
        /// Interpretation in `t(a) f(b) u(c)` syntax.
        #[arg(long)]
        interp: String,
        file: PathBuf,
    },
    /// Print the reduct of FILE under a two-valued model.
    Reduct {
        /// A two-valued model in `t(a) f(b)` syntax.
        #[arg(long)]
        interp: String,
        file: PathBuf,
    },
    /// Print acceptance conditions as explicit truth tables.
    Table {
        file: PathBuf,
        /// Restrict output to one statement.
        #[arg(long)]
        statement: Option<String>,
    },
    /// Run the randomized property suite.
    Meta {
        /// Random instances per property.
        #[arg(long, default_value_t = 1000)]
        trials: u32,
        /// Maximum statements per generated instance.
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 0xADF)]
        seed: u64,
        /// Run a single property by name.
        #[arg(long)]
        property: Option<String>,
        /// Write found counterexample instances into this directory.
        #[arg(long, value_name = "DIR")]
        cex_dir: Option<PathBuf>,
    },
    /// Emit a random instance.
    Gen {
        /// Statement count (at least 1).
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Attack-shaped conditions only (a classical framework).
        #[arg(long)]
        af: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SemArg {
    #[value(name = "mod")]
    Model,
    #[value(name = "stb")]
    Stable,
    #[value(name = "adm")]
    Admissible,
    #[value(name = "com")]
    Complete,
    #[value(name = "prf")]
    Preferred,
    #[value(name = "grd")]
    Grounded,
}

impl From<SemArg> for Semantics {
    fn from(arg: SemArg) -> Semantics {
        match arg {
            SemArg::Model => Semantics::Model,
            SemArg::Stable => Semantics::Stable,
            SemArg::Admissible => Semantics::Admissible,
            SemArg::Complete => Semantics::Complete,
            SemArg::Preferred => Semantics::Preferred,
            SemArg::Grounded => Semantics::Grounded,
        }
    }
}

/// Run the CLI against explicit argument and output streams; returns the
/// process exit code. `main` is a thin wrapper over this.
pub fn run<O: Write, E: Write>(
    args: impl IntoIterator<Item = String>,
    out: &mut O,
    err: &mut E,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = write!(err, "{e}");
            return 2;
        }
        Err(e) => {
            // --help and --version land here
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    let mut caps = Caps::default();
    if let Some(n) = cli.max_enum {
        caps.max_enum_two = n;
        caps.max_enum_three = n;
        caps.max_table_parents = n;
    }
    if let Some(n) = cli.max_undef {
        caps.max_undef = n;
    }
    match dispatch(cli.cmd, &caps, out, err) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {failure}");
            2
        }
    }
}

fn dispatch<O: Write, E: Write>(
    cmd: Cmd,
    caps: &Caps,
    out: &mut O,
    err: &mut E,
) -> Result<i32, String> {
    match cmd {
        Cmd::Solve {
            sem,
            count,
            limit,
            oracle: use_oracle,
            file,
        } => {
            let adf = load_instance(&file, err)?;
            let sem = Semantics::from(sem);
            let found = if use_oracle {
                oracle::enumerate_bruteforce(&adf, sem, caps)
            } else {
                semantics::enumerate(&adf, sem, caps)
            }
            .map_err(stringify)?;
            if count {
                let _ = writeln!(out, "{}", found.len());
            } else {
                for v in found.iter().take(limit.unwrap_or(usize::MAX)) {
                    let _ = writeln!(out, "{}", interp_text(v, adf.vocab()));
                }
            }
            Ok(if found.is_empty() { 1 } else { 0 })
        }
        Cmd::Check { sem, interp, file } => {
            let adf = load_instance(&file, err)?;
            let v = load_interp(&interp, &adf, err)?;
            let yes = check_semantics(&adf, sem.into(), &v, caps)?;
            let _ = writeln!(out, "{}", if yes { "YES" } else { "NO" });
            Ok(if yes { 0 } else { 1 })
        }
        Cmd::Reduct { interp, file } => {
            let adf = load_instance(&file, err)?;
            let v = load_interp(&interp, &adf, err)?;
            let w = v
                .to_two_valued()
                .ok_or("the reduct needs a two-valued interpretation (no `u` terms)")?;
            let reduced = semantics::reduct(&adf, &w).map_err(stringify)?;
            let _ = write!(out, "{}", instance_text(&reduced));
            Ok(0)
        }
        Cmd::Table { file, statement } => {
            let adf = load_instance(&file, err)?;
            let targets: Vec<usize> = match statement {
                Some(name) => vec![adf
                    .vocab()
                    .index_of(&name)
                    .ok_or_else(|| format!("unknown statement `{name}`"))?],
                None => (0..adf.statement_count()).collect(),
            };
            for s in targets {
                let table = adf.truth_table(s, caps).map_err(stringify)?;
                let _ = write!(out, "{}", table_text(&table, adf.vocab()));
            }
            Ok(0)
        }
        Cmd::Meta {
            trials,
            n,
            seed,
            property,
            cex_dir,
        } => {
            if n == 0 {
                return Err("--n must be at least 1".into());
            }
            let cfg = GenConfig {
                n_statements: n,
                trials,
                seed,
                ..GenConfig::default()
            };
            let checks = meta::checks();
            let selected: Vec<_> = match &property {
                Some(name) => {
                    let found: Vec<_> =
                        checks.into_iter().filter(|c| c.name == *name).collect();
                    if found.is_empty() {
                        return Err(format!("unknown property `{name}`"));
                    }
                    found
                }
                None => checks,
            };
            let mut all_expected = true;
            for check in selected {
                let report = check.run(&cfg, caps).map_err(stringify)?;
                all_expected &= report.as_expected();
                print_report(&report, cex_dir.as_deref(), out)?;
            }
            Ok(if all_expected { 0 } else { 1 })
        }
        Cmd::Gen { n, seed, af } => {
            if n == 0 {
                return Err("--n must be at least 1".into());
            }
            let cfg = GenConfig {
                n_statements: n,
                seed,
                ..GenConfig::default()
            };
            let adf = if af {
                meta::gen_random_af(&cfg)
            } else {
                meta::gen_random_adf(&cfg)
            };
            let _ = write!(out, "{}", instance_text(&adf));
            Ok(0)
        }
    }
}

fn check_semantics(
    adf: &Adf,
    sem: Semantics,
    v: &ThreeValued,
    caps: &Caps,
) -> Result<bool, String> {
    let verdict = match sem {
        // total-only semantics: a partial interpretation is simply a "no"
        Semantics::Model => match v.to_two_valued() {
            Some(w) => semantics::is_model(adf, &w),
            None => false,
        },
        Semantics::Stable => match v.to_two_valued() {
            Some(w) => semantics::is_stable(adf, &w, caps).map_err(stringify)?,
            None => false,
        },
        Semantics::Admissible => semantics::is_admissible(adf, v, caps).map_err(stringify)?,
        Semantics::Complete => semantics::is_complete(adf, v, caps).map_err(stringify)?,
        Semantics::Preferred => semantics::is_preferred(adf, v, caps).map_err(stringify)?,
        Semantics::Grounded => semantics::is_grounded(adf, v, caps).map_err(stringify)?,
    };
    Ok(verdict)
}

fn load_instance<E: Write>(path: &Path, err: &mut E) -> Result<Adf, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let adf = match parse_adf(&text) {
        Ok(adf) => adf,
        Err(diagnostics) => {
            for d in &diagnostics {
                let _ = writeln!(err, "{}: {d}", path.display());
            }
            return Err(format!("{} is not a valid instance", path.display()));
        }
    };
    for (from, to) in adf.dont_care_links() {
        let _ = writeln!(
            err,
            "{}: warning: link ({},{}) is never read by the condition of `{}`",
            path.display(),
            adf.vocab().name(from),
            adf.vocab().name(to),
            adf.vocab().name(to),
        );
    }
    Ok(adf)
}

fn load_interp<E: Write>(text: &str, adf: &Adf, err: &mut E) -> Result<ThreeValued, String> {
    match parse_interp(text, adf.vocab()) {
        Ok(v) => Ok(v),
        Err(diagnostics) => {
            for d in &diagnostics {
                let _ = writeln!(err, "interpretation: {d}");
            }
            Err("invalid interpretation".into())
        }
    }
}

fn print_report<O: Write>(
    report: &meta::PropertyReport,
    cex_dir: Option<&Path>,
    out: &mut O,
) -> Result<(), String> {
    let status = match report.status {
        Status::HoldsOnSample => "holds",
        Status::CounterexampleFound => "cex",
    };
    let verdict = if report.as_expected() {
        "as expected"
    } else {
        "UNEXPECTED"
    };
    match report.status {
        Status::HoldsOnSample => {
            let _ = writeln!(
                out,
                "property {}: holds on {} instances ({verdict})",
                report.name, report.trials
            );
        }
        Status::CounterexampleFound => {
            let _ = writeln!(
                out,
                "property {}: counterexample at instance {} ({verdict})",
                report.name, report.trials
            );
        }
    }
    let mut file_field = String::new();
    for cex in &report.violations {
        for line in instance_text(&cex.adf).lines() {
            let _ = writeln!(out, "    {line}");
        }
        for w in &cex.witnesses {
            let _ = writeln!(out, "    witness: {}", interp_text(w, cex.adf.vocab()));
        }
        if let Some(dir) = cex_dir {
            std::fs::create_dir_all(dir)
                .map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
            let path = dir.join(format!("{}.adf", report.name));
            let mut contents = instance_text(&cex.adf);
            for w in &cex.witnesses {
                contents.push_str(&format!("% witness: {}\n", interp_text(w, cex.adf.vocab())));
            }
            std::fs::write(&path, contents)
                .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            file_field = format!(" FILE {}", path.display());
        }
    }
    let _ = writeln!(
        out,
        "PROP {} TRIALS {} STATUS {status}{file_field}",
        report.name, report.trials
    );
    Ok(())
}

fn stringify(e: impl Display) -> String {
    e.to_string()
}
