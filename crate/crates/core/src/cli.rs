//! The `harmonia` command line: argument parsing, dispatch, and
//! deterministic output records.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 computation rejected
//! (preconditions, caps, budgets), 3 self-test failure.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cone::HarmonicCone;
use crate::crystal::{cal_e, enumerate_zero_weight_tableaux, h_value, n_exponents, pplus_exponents};
use crate::error::Error;
use crate::kostka::KostkaFoulkes;
use crate::root_system::{ReducedWord, RootDatum, RootType, Weight, WordStyle};
use crate::selftest::{self, Depth};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REJECTED: i32 = 2;
pub const EXIT_SELFTEST: i32 = 3;

/// The JSON envelope of every command.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub version: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "harmonia",
    version,
    about = "Kostka–Foulkes polynomials, type-A crystals and the harmonic cone"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct TypeRank {
    /// Cartan type (A–G).
    #[arg(short = 't', long = "type", default_value = "A")]
    root_type: RootType,

    #[arg(short = 'r', long)]
    rank: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// K_{λμ}(q) from the alternating Weyl sum.
    Kostka {
        #[command(flatten)]
        tr: TypeRank,
        /// Highest weight, comma-separated fundamental coordinates.
        #[arg(long, value_parser = parse_coords, allow_hyphen_values = true)]
        lambda: List<i64>,
        /// Weight, comma-separated fundamental coordinates (default 0).
        #[arg(long, value_parser = parse_coords, allow_hyphen_values = true)]
        mu: Option<List<i64>>,
    },
    /// Generalized exponents (ℕ-exponents) or P⁺-exponents of λ.
    Exponents {
        #[command(flatten)]
        tr: TypeRank,
        #[arg(long, value_parser = parse_coords, allow_hyphen_values = true)]
        lambda: List<i64>,
        #[arg(long, value_enum, default_value_t = ExponentMode::NExponents)]
        mode: ExponentMode,
    },
    /// The harmonic cone in Lusztig coordinates.
    Cone {
        #[command(flatten)]
        tr: TypeRank,
        /// Reduced word family (default: standard in type A, any otherwise).
        #[arg(long, value_enum)]
        word_style: Option<WordStyleArg>,
        /// Explicit reduced word, comma-separated 1-based letters.
        #[arg(long, value_parser = parse_letters)]
        word: Option<List<usize>>,
        /// Maximum number of lattice points an enumeration may visit.
        #[arg(long, global = true, default_value_t = crate::cone::DEFAULT_BUDGET as u64)]
        budget: u64,
        #[command(subcommand)]
        action: ConeAction,
    },
    /// Zero-weight tableaux of a type-A weight with their crystal data.
    Tableaux {
        #[command(flatten)]
        tr: TypeRank,
        #[arg(long, value_parser = parse_coords, allow_hyphen_values = true)]
        lambda: List<i64>,
    },
    /// Runs the cross-module identity suite.
    Selftest {
        #[arg(long, value_enum, default_value_t = DepthArg::Quick)]
        depth: DepthArg,
    },
}

#[derive(Debug, Subcommand)]
enum ConeAction {
    /// All cone points with height(Ω) ≤ bound.
    Enumerate {
        #[arg(long)]
        bound: i64,
    },
    /// Generators of the cone within the bound.
    Hilbert {
        #[arg(long)]
        bound: i64,
    },
    /// Membership of one point, with per-index slack.
    Check {
        #[arg(long, value_parser = parse_coords, allow_hyphen_values = true)]
        point: List<i64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExponentMode {
    NExponents,
    PplusExponents,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum WordStyleArg {
    Standard,
    Any,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DepthArg {
    Quick,
    Full,
}

/// A comma-separated list such as `1,2,1`.
#[derive(Clone, Debug)]
struct List<T>(Vec<T>);

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<List<T>, String>
where
    T::Err: std::fmt::Display,
{
    s.split(',')
        .map(|t| t.trim().parse::<T>().map_err(|e| format!("bad entry {t:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(List)
}

fn parse_coords(s: &str) -> Result<List<i64>, String> {
    parse_list(s)
}

fn parse_letters(s: &str) -> Result<List<usize>, String> {
    parse_list(s)
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidType { .. }
        | Error::DimensionMismatch { .. }
        | Error::InvalidLusztigDatum { .. }
        | Error::NotReduced { .. }
        | Error::OutOfRange(_) => EXIT_USAGE,
        _ => EXIT_REJECTED,
    }
}

struct Outcome {
    record: OutputRecord,
    table: String,
    code: i32,
}

fn record(command: &str, inputs: Value, result: Value) -> OutputRecord {
    OutputRecord {
        command: command.to_string(),
        inputs,
        result,
        version: env!("CARGO_PKG_VERSION").to_string(),
    }
}

fn datum(tr: &TypeRank) -> Result<RootDatum, Error> {
    RootDatum::new(tr.root_type, tr.rank)
}

fn dominant_input(d: &RootDatum, coords: &[i64]) -> Result<Weight, Error> {
    let w = Weight::fundamental(coords.to_vec());
    d.to_fundamental(&w)?;
    Ok(w)
}

fn cmd_kostka(tr: &TypeRank, lambda: &[i64], mu: Option<&[i64]>) -> Result<Outcome, Error> {
    let d = datum(tr)?;
    let mu: Vec<i64> = mu.map(<[i64]>::to_vec).unwrap_or_else(|| vec![0; d.rank()]);
    let l = dominant_input(&d, lambda)?;
    let m = dominant_input(&d, &mu)?;
    let p = KostkaFoulkes::new(&d)?.polynomial(&l, &m)?;
    let pretty = p.to_string();
    let table = format!(
        "K_(λ,μ)(q) for {}, λ = {l}, μ = {m}\n{pretty}\nvalue at q=1: {}\n",
        d.label(),
        p.eval(1)
    );
    Ok(Outcome {
        record: record(
            "kostka",
            json!({"type": d.root_type().to_string(), "rank": d.rank(), "lambda": lambda, "mu": mu}),
            json!({"polynomial": p, "pretty": pretty, "value_at_one": p.eval(1)}),
        ),
        table,
        code: EXIT_OK,
    })
}

fn cmd_exponents(tr: &TypeRank, lambda: &[i64], mode: ExponentMode) -> Result<Outcome, Error> {
    let d = datum(tr)?;
    let l = dominant_input(&d, lambda)?;
    let inputs = json!({
        "type": d.root_type().to_string(),
        "rank": d.rank(),
        "lambda": lambda,
        "mode": match mode {
            ExponentMode::NExponents => "n-exponents",
            ExponentMode::PplusExponents => "pplus-exponents",
        },
    });
    match mode {
        ExponentMode::NExponents => {
            let ex = KostkaFoulkes::new(&d)?.generalized_exponents(&l)?;
            let table = format!("exponents of {l} ({}): {:?}\n", d.label(), ex.as_slice());
            Ok(Outcome {
                record: record("exponents", inputs, json!({"exponents": ex})),
                table,
                code: EXIT_OK,
            })
        }
        ExponentMode::PplusExponents => {
            let p = pplus_exponents(&d, &l).map_err(|e| match e {
                Error::RequiresTypeA { label, rank, .. } => Error::RequiresTypeA {
                    operation: "P⁺-exponents (crystal computations are implemented in type A only)",
                    label,
                    rank,
                },
                other => other,
            })?;
            let listed: Vec<Value> = p
                .weights()
                .iter()
                .map(|w| json!({"weight": w.coords(), "pretty": w.to_string(), "h": h_value(w.coords())}))
                .collect();
            let mut grouped = Vec::new();
            let mut table = format!("P⁺-exponents of {l} ({}):\n", d.label());
            let counts = p.counts();
            for w in p.sorted().iter().fold(Vec::<Weight>::new(), |mut acc, w| {
                if acc.last() != Some(w) {
                    acc.push(w.clone());
                }
                acc
            }) {
                let c = counts[w.coords()];
                table.push_str(&format!("  {w}  ×{c}\n"));
                grouped.push(json!({"weight": w.coords(), "pretty": w.to_string(), "multiplicity": c}));
            }
            Ok(Outcome {
                record: record(
                    "exponents",
                    inputs,
                    json!({"weights": listed, "multiplicities": grouped, "total": p.len()}),
                ),
                table,
                code: EXIT_OK,
            })
        }
    }
}

fn cone_word(
    d: &RootDatum,
    style: Option<WordStyleArg>,
    word: Option<&[usize]>,
) -> Result<ReducedWord, Error> {
    if let Some(w) = word {
        return ReducedWord::new(d, w.to_vec());
    }
    let style = match style {
        Some(WordStyleArg::Standard) => WordStyle::TypeAStandard,
        Some(WordStyleArg::Any) => WordStyle::Any,
        None if d.is_type_a() => WordStyle::TypeAStandard,
        None => WordStyle::Any,
    };
    d.longest_word(style)
}

fn cmd_cone(
    tr: &TypeRank,
    style: Option<WordStyleArg>,
    word: Option<&[usize]>,
    budget: u64,
    action: &ConeAction,
) -> Result<Outcome, Error> {
    let d = datum(tr)?;
    let w = cone_word(&d, style, word)?;
    let cone = HarmonicCone::new(&d, &w)?.with_budget(budget as u128);
    let mut inputs = json!({
        "type": d.root_type().to_string(),
        "rank": d.rank(),
        "word": w.letters(),
        "budget": budget,
    });
    let mut table = format!("harmonic cone of {} on word {w}\n", d.label());
    let (sub, result) = match action {
        ConeAction::Enumerate { bound } => {
            inputs["bound"] = json!(bound);
            let pts = cone.enumerate(*bound)?;
            table.push_str(&format!("{} points with height(Ω) ≤ {bound}\n", pts.len()));
            for p in &pts {
                table.push_str(&format!(
                    "  ψ={:?}  Ω={}  𝓔={}\n",
                    p.psi,
                    Weight::root(p.omega.clone()),
                    Weight::fundamental(p.epsilon.clone())
                ));
            }
            ("enumerate", json!({"count": pts.len(), "points": pts}))
        }
        ConeAction::Hilbert { bound } => {
            inputs["bound"] = json!(bound);
            let hb = cone.hilbert_basis(*bound)?;
            table.push_str(&format!(
                "{} generators within height {bound} (complete: {})\n",
                hb.generators.len(),
                hb.complete
            ));
            for g in &hb.generators {
                table.push_str(&format!("  ψ={:?}  Ω={}\n", g.psi, Weight::root(g.omega.clone())));
            }
            ("hilbert", serde_json::to_value(&hb).expect("serializable"))
        }
        ConeAction::Check { point } => {
            let point = &point.0;
            inputs["point"] = json!(point);
            let p = cone.point(point)?;
            let slack = cone.slack(point)?;
            table.push_str(&format!(
                "ψ={:?}: {}\n  Ω = {}\n  ε = {:?}\n  slack = {:?}\n",
                p.psi,
                if p.in_cone { "in cone" } else { "not in cone" },
                Weight::root(p.omega.clone()),
                p.epsilon,
                slack
            ));
            (
                "check",
                json!({
                    "psi": p.psi,
                    "omega": p.omega,
                    "epsilon": p.epsilon,
                    "epsilon_bar": p.epsilon_bar,
                    "in_cone": p.in_cone,
                    "slack": slack,
                }),
            )
        }
    };
    Ok(Outcome {
        record: record(&format!("cone {sub}"), inputs, result),
        table,
        code: EXIT_OK,
    })
}

fn cmd_tableaux(tr: &TypeRank, lambda: &[i64]) -> Result<Outcome, Error> {
    let d = datum(tr)?;
    let l = dominant_input(&d, lambda)?;
    let tabs = enumerate_zero_weight_tableaux(&d, &l)?;
    let mut table = format!("zero-weight tableaux of {l} ({}): {}\n", d.label(), tabs.len());
    let mut rows = Vec::new();
    for t in &tabs {
        let e = cal_e(&d, t)?;
        let h = h_value(e.coords());
        table.push_str(&format!("  {t}  𝓔 = {e}  h = {h}\n"));
        rows.push(json!({"rows": t, "epsilon": e.coords(), "pretty": e.to_string(), "h": h}));
    }
    let ex = n_exponents(&d, &l)?;
    Ok(Outcome {
        record: record(
            "tableaux",
            json!({"type": d.root_type().to_string(), "rank": d.rank(), "lambda": lambda}),
            json!({"count": tabs.len(), "tableaux": rows, "n_exponents": ex}),
        ),
        table,
        code: EXIT_OK,
    })
}

fn cmd_selftest(depth: DepthArg) -> Outcome {
    let depth = match depth {
        DepthArg::Quick => Depth::Quick,
        DepthArg::Full => Depth::Full,
    };
    let report = selftest::run(depth);
    let mut table = String::new();
    for c in &report.checks {
        table.push_str(&format!(
            "{} {}: {}\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        ));
    }
    let code = if report.passed() { EXIT_OK } else { EXIT_SELFTEST };
    Outcome {
        record: record(
            "selftest",
            json!({"depth": depth}),
            json!({"passed": report.passed(), "checks": report.checks}),
        ),
        table,
        code,
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };

    let outcome = match &cli.command {
        Command::Kostka { tr, lambda, mu } => cmd_kostka(tr, &lambda.0, mu.as_ref().map(|m| m.0.as_slice())),
        Command::Exponents { tr, lambda, mode } => cmd_exponents(tr, &lambda.0, *mode),
        Command::Cone {
            tr,
            word_style,
            word,
            budget,
            action,
        } => cmd_cone(
            tr,
            *word_style,
            word.as_ref().map(|w| w.0.as_slice()),
            *budget,
            action,
        ),
        Command::Tableaux { tr, lambda } => cmd_tableaux(tr, &lambda.0),
        Command::Selftest { depth } => Ok(cmd_selftest(*depth)),
    };

    match outcome {
        Ok(o) => {
            let written = match cli.format {
                Format::Json => {
                    let s = serde_json::to_string_pretty(&o.record).expect("serializable record");
                    writeln!(out, "{s}")
                }
                Format::Table => write!(out, "{}", o.table),
            };
            match written {
                // a reader that stops early (`| head`) is not a failure
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => EXIT_USAGE,
                _ => o.code,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
