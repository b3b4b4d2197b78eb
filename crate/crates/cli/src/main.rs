//! `semideal`: parse, analyze, enumerate and check small semigroups.
//!
//! Exit status is 0 on success, 1 on usage or input errors and 2 when
//! `verify` finds a failure outside the errata list or `counterexample`
//! finds one at all.

mod render;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use thiserror::Error;

use semideal_core::classify::is_zero_degenerate;
use semideal_core::enumerate::Dedup;
use semideal_core::format::{parse_document, to_catalog, to_json_line};
use semideal_core::harness::{find_counterexample, run_suite, SuiteReport};
use semideal_core::idealprops::profiles;
use semideal_core::{
    classify, enumerate_ideals, enumerate_semigroups, green_partition, parse_catalog,
    EnumerationConfig, IdealKind, NamedViolation, ParseErrorKind, Relation, Semigroup, TheoremId,
};

#[derive(Parser)]
#[command(
    name = "semideal",
    version,
    about = "Ideal theory of finite semigroups"
)]
struct Cli {
    /// Worker threads for sweeps (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Report elapsed time on standard error.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a .sg file holds an associative table.
    Validate {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Classifications, interior ideals with their flags, and Green's relations.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// List every ideal of one kind.
    Ideals {
        file: PathBuf,
        #[arg(long, default_value = "interior")]
        kind: IdealKind,
        #[arg(long)]
        json: bool,
    },
    /// Classes of L, R, J, H and the IN(a) relation I.
    Green {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Check theorems on one file, a catalog, or every semigroup of an order.
    Verify(VerifyArgs),
    /// Print every semigroup of an order as a catalog or as JSON lines.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Search orders 1..=N for the first semigroup refuting a theorem.
    Counterexample {
        #[arg(long)]
        theorem: TheoremId,
        #[arg(long)]
        max_order: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(conflicts_with_all = ["order", "catalog"])]
    file: Option<PathBuf>,
    #[arg(long, conflicts_with = "catalog")]
    order: Option<usize>,
    #[arg(long)]
    catalog: Option<PathBuf>,
    /// Comma-separated ids, or `all`.
    #[arg(long, default_value = "all")]
    theorems: String,
    #[arg(long, requires = "order")]
    up_to_iso: bool,
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse {
        path: String,
        source: semideal_core::ParseError,
    },
    #[error(transparent)]
    Core(#[from] semideal_core::Error),
}

/// Successful runs that still want a nonzero status.
enum Outcome {
    Clean,
    Refuted,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })
}

fn load(path: &Path) -> Result<Semigroup, CliError> {
    let text = read(path)?;
    semideal_core::parse_semigroup(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

/// `writeln!` into the output buffer; writing to a `String` cannot fail.
macro_rules! say {
    ($out:expr, $($arg:tt)*) => {{
        let _ = writeln!($out, $($arg)*);
    }};
}

fn print_json(out: &mut String, v: &serde_json::Value) {
    say!(out, "{}", serde_json::to_string_pretty(v).expect("json"));
}

fn validate(out: &mut String, path: &Path, as_json: bool) -> Result<Outcome, CliError> {
    let text = read(path)?;
    let display = path.display().to_string();
    let doc = parse_document(&text).map_err(|source| CliError::Parse {
        path: display.clone(),
        source,
    })?;
    let names = doc.names.clone();
    match doc.into_semigroup() {
        Ok(s) => {
            if as_json {
                print_json(
                    out,
                    &json!({
                        "order": s.order(),
                        "elements": s.names(),
                        "zero": render::zero_json(&s),
                        "associative": true,
                    }),
                );
            } else {
                say!(out, "order: {}", s.order());
                say!(out, "zero: {}", render::zero_text(&s));
                say!(out, "associative: yes");
            }
            Ok(Outcome::Clean)
        }
        Err(e) => {
            if let ParseErrorKind::NotAssociative(v) = &e.kind {
                let NamedViolation {
                    a, b, c, lhs, rhs, ..
                } = v.as_ref();
                if as_json {
                    print_json(
                        out,
                        &json!({
                            "order": names.len(),
                            "elements": names,
                            "associative": false,
                            "violation": {"triple": [a, b, c], "lhs": lhs, "rhs": rhs},
                        }),
                    );
                } else {
                    say!(out, "order: {}", names.len());
                    say!(out, "associative: no");
                    say!(out, "violation: ({a},{b},{c}) lhs {lhs} rhs {rhs}");
                }
            }
            Err(CliError::Parse {
                path: display,
                source: e,
            })
        }
    }
}

fn analyze(out: &mut String, path: &Path, as_json: bool) -> Result<Outcome, CliError> {
    let s = load(path)?;
    let c = classify(&s);
    let degenerate = is_zero_degenerate(&s);
    let ps = profiles(&s);
    let parts: Vec<_> = Relation::ALL
        .iter()
        .map(|&r| green_partition(&s, r))
        .collect();
    if as_json {
        print_json(
            out,
            &json!({
                "order": s.order(),
                "elements": s.names(),
                "zero": render::zero_json(&s),
                "classifications": render::classification_json(&s, &c, degenerate),
                "interiorIdeals": ps.iter().map(|p| render::profile_json(&s, p)).collect::<Vec<_>>(),
                "green": render::partitions_json(&s, &parts),
            }),
        );
        return Ok(Outcome::Clean);
    }
    say!(out, "order: {}", s.order());
    say!(out, "zero: {}", render::zero_text(&s));
    out.push_str(&render::table_text(&s));
    let yn = |b: bool| if b { "yes" } else { "no" };
    say!(out, "regular: {}", yn(c.regular));
    say!(out, "intra-regular: {}", yn(c.intra_regular));
    say!(out, "duo: {}", yn(c.duo));
    say!(out, "interior-simple: {}", yn(c.interior_simple));
    say!(out, "interior ideals form a chain: {}", yn(c.chain));
    say!(out, "zero-degenerate: {}", yn(degenerate));
    say!(out, "interior ideals:");
    for p in &ps {
        say!(out, "  {}", render::profile_line(&s, p));
    }
    say!(out, "green:");
    for p in &parts {
        say!(out, "  {}", render::partition_line(&s, p));
    }
    Ok(Outcome::Clean)
}

fn ideals(
    out: &mut String,
    path: &Path,
    kind: IdealKind,
    as_json: bool,
) -> Result<Outcome, CliError> {
    let s = load(path)?;
    let fam = enumerate_ideals(&s, kind);
    let ps = (kind == IdealKind::Interior).then(|| profiles(&s));
    if as_json {
        print_json(out, &render::ideals_json(&s, kind, &fam, ps.as_deref()));
        return Ok(Outcome::Clean);
    }
    match ps {
        Some(ps) => ps
            .iter()
            .for_each(|p| say!(out, "{}", render::profile_line(&s, p))),
        None => fam.iter().for_each(|e| say!(out, "{}", s.fmt_set(e))),
    }
    Ok(Outcome::Clean)
}

fn green(out: &mut String, path: &Path, as_json: bool) -> Result<Outcome, CliError> {
    let s = load(path)?;
    let parts: Vec<_> = Relation::ALL
        .iter()
        .map(|&r| green_partition(&s, r))
        .collect();
    if as_json {
        print_json(out, &render::partitions_json(&s, &parts));
    } else {
        parts
            .iter()
            .for_each(|p| say!(out, "{}", render::partition_line(&s, p)));
    }
    Ok(Outcome::Clean)
}

fn enumerate_order(
    order: usize,
    iso: bool,
    limit: Option<usize>,
) -> Result<Vec<Semigroup>, CliError> {
    let base = if iso {
        EnumerationConfig::up_to_iso(order)
    } else {
        EnumerationConfig::labeled(order)
    };
    Ok(enumerate_semigroups(EnumerationConfig { limit, ..base })?.collect())
}

fn verify(out: &mut String, args: &VerifyArgs) -> Result<Outcome, CliError> {
    let ts = TheoremId::parse_list(&args.theorems)?;
    let (mut corpus, dedup) = match (&args.file, args.order, &args.catalog) {
        (Some(f), None, None) => (vec![load(f)?], Dedup::Labeled),
        (None, Some(n), None) => {
            let dedup = if args.up_to_iso {
                Dedup::Iso
            } else {
                Dedup::Labeled
            };
            (enumerate_order(n, args.up_to_iso, args.limit)?, dedup)
        }
        (None, None, Some(c)) => {
            let text = read(c)?;
            let corpus = parse_catalog(&text).map_err(|source| CliError::Parse {
                path: c.display().to_string(),
                source,
            })?;
            (corpus, Dedup::Labeled)
        }
        _ => {
            return Err(CliError::Usage(
                "give exactly one of FILE, --order or --catalog".into(),
            ))
        }
    };
    if let Some(k) = args.limit {
        corpus.truncate(k);
    }
    let report: SuiteReport = run_suite(&corpus, &ts, dedup);
    if args.json {
        say!(out, "{}", report.to_json());
    } else {
        out.push_str(&render::suite_text(&report));
    }
    Ok(if report.unexplained_fails() > 0 {
        Outcome::Refuted
    } else {
        Outcome::Clean
    })
}

fn enumerate(
    out: &mut String,
    order: usize,
    iso: bool,
    limit: Option<usize>,
    as_json: bool,
) -> Result<Outcome, CliError> {
    let all = enumerate_order(order, iso, limit)?;
    if as_json {
        all.iter().for_each(|s| say!(out, "{}", to_json_line(s)));
    } else {
        out.push_str(&to_catalog(&all));
    }
    Ok(Outcome::Clean)
}

fn counterexample(
    out: &mut String,
    t: TheoremId,
    max_order: usize,
    as_json: bool,
) -> Result<Outcome, CliError> {
    let found = find_counterexample(t, max_order)?;
    match (&found, as_json) {
        (Some(v), true) => print_json(out, &render::verdict_json(v)),
        (Some(v), false) => out.push_str(&render::verdict_text(v)),
        (None, true) => print_json(
            out,
            &json!({"theorem": t.as_str(), "maxOrder": max_order, "found": null}),
        ),
        (None, false) => say!(out, "{t}: no counterexample up to order {max_order}"),
    }
    Ok(if found.is_some() {
        Outcome::Refuted
    } else {
        Outcome::Clean
    })
}

fn run(cli: Cli, out: &mut String) -> Result<Outcome, CliError> {
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(format!("--jobs: {e}")))?;
    }
    match cli.command {
        Command::Validate { file, json } => validate(out, &file, json),
        Command::Analyze { file, json } => analyze(out, &file, json),
        Command::Ideals { file, kind, json } => ideals(out, &file, kind, json),
        Command::Green { file, json } => green(out, &file, json),
        Command::Verify(args) => verify(out, &args),
        Command::Enumerate {
            order,
            up_to_iso,
            limit,
            json,
        } => enumerate(out, order, up_to_iso, limit, json),
        Command::Counterexample {
            theorem,
            max_order,
            json,
        } => counterexample(out, theorem, max_order, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let timing = cli.timing;
    let start = Instant::now();
    let mut out = String::new();
    let result = run(cli, &mut out);
    let mut stdout = std::io::stdout().lock();
    // A closed pipe (`semideal enumerate ... | head`) is not an error.
    if let Err(e) = stdout
        .write_all(out.as_bytes())
        .and_then(|()| stdout.flush())
    {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
            return ExitCode::from(1);
        }
    }
    if timing {
        eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(Outcome::Clean) => ExitCode::SUCCESS,
        Ok(Outcome::Refuted) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
