//! `bassline`: batch front end for the classifier toolkit.
//!
//! Exit status: 0 on success, 1 when a validation or check fails, 2 on
//! parse or I/O errors.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use bassline::bass::{enumerate_n_bass, validate_bass};
use bassline::classify::{
    canonicalize, classify_top_dimension, diagram_check, CanonicalMode, ClassificationTable,
};
use bassline::dot::emit_dot;
use bassline::format::{
    function_to_json, function_value, parse_function, parse_poset, parse_profile, parse_sequence,
    sequence_to_json, set_names, Role,
};
use bassline::sequence::{fct_from_seq, seq_from_fct, smallest_ke_pair};
use bassline::{BassFunction, Error, SpecFunction, SpectralPoset, WitnessGenerator};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "bassline", version, about = "Classify subcategories of finite spectral posets")]
struct Cli {
    /// Write output to FILE instead of standard output.
    #[arg(short, long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Emit JSON instead of text where both exist.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a poset file, and optionally a function against it.
    Validate {
        poset: PathBuf,
        #[arg(long = "fn", value_name = "FILE")]
        function: Option<PathBuf>,
    },
    /// List all n-Bass functions.
    Enumerate {
        poset: PathBuf,
        #[arg(long)]
        level: u32,
    },
    /// Classifier counts for levels 0, 1 and 2.
    Classify { poset: PathBuf },
    /// Least 2-Bass function above a function with values in {0,1,2,inf}.
    Canonicalize {
        poset: PathBuf,
        #[arg(long = "fn", value_name = "FILE")]
        function: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Brute)]
        mode: Mode,
        #[command(flatten)]
        generator: GeneratorArgs,
    },
    /// Bass sequence of a Bass function.
    Seq {
        poset: PathBuf,
        #[arg(long = "fn", value_name = "FILE")]
        function: PathBuf,
    },
    /// Bass function of a Bass sequence.
    Fct {
        poset: PathBuf,
        #[arg(long = "seq", value_name = "FILE")]
        sequence: PathBuf,
    },
    /// Least 2-Bass pair with the given first component.
    SmallestKe {
        poset: PathBuf,
        /// Comma-separated element ids; empty for the empty set.
        #[arg(long, value_name = "ELEMS", allow_hyphen_values = true)]
        set: String,
    },
    /// Top-level classifiers paired with their Assh parts.
    TopClasses { poset: PathBuf },
    /// Verify every correspondence of the classification diagram.
    DiagramCheck {
        poset: PathBuf,
        #[command(flatten)]
        generator: GeneratorArgs,
    },
    /// Graphviz rendering of the Hasse diagram.
    Dot {
        poset: PathBuf,
        #[arg(long = "fn", value_name = "FILE")]
        function: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Brute,
    Witness,
}

#[derive(Clone, Copy, ValueEnum)]
enum Standard {
    S1,
    S2,
}

#[derive(clap::Args)]
struct GeneratorArgs {
    /// Standard witness generator.
    #[arg(long, value_enum, default_value_t = Standard::S2)]
    generator: Standard,
    /// Profile files; when given they replace the standard generator.
    #[arg(long = "profile", value_name = "FILE")]
    profiles: Vec<PathBuf>,
}

enum Failure {
    /// A check ran and failed; the report is still printed.
    Check(String),
    /// Bad input or I/O.
    Input(String),
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Self {
        Failure::Input(err.to_string())
    }
}

type Run<T> = Result<T, Failure>;

/// Errors from reading files are input errors; the rest are check failures.
fn input(err: Error) -> Failure {
    Failure::Input(err.to_string())
}

fn check(err: Error) -> Failure {
    Failure::Check(err.to_string())
}

fn read(path: &Path) -> Run<String> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_poset(path: &Path) -> Run<Arc<SpectralPoset>> {
    let text = read(path)?;
    parse_poset(&text)
        .map(Arc::new)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_function(poset: &Arc<SpectralPoset>, path: &Path) -> Run<SpecFunction> {
    parse_function(poset, &read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_bass(poset: &Arc<SpectralPoset>, path: &Path) -> Run<BassFunction> {
    BassFunction::new(load_function(poset, path)?).map_err(check)
}

fn load_generator(poset: &Arc<SpectralPoset>, args: &GeneratorArgs) -> Run<WitnessGenerator> {
    if args.profiles.is_empty() {
        return Ok(match args.generator {
            Standard::S1 => WitnessGenerator::S1,
            Standard::S2 => WitnessGenerator::S2,
        });
    }
    let profiles = args
        .profiles
        .iter()
        .map(|path| {
            let text = read(path)?;
            parse_profile(poset, &text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        })
        .collect::<Run<Vec<_>>>()?;
    Ok(WitnessGenerator::Custom(profiles))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

/// Output text plus whether the command's check passed.
struct Output {
    text: String,
    passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

fn run(cli: &Cli) -> Run<Output> {
    let json = cli.json;
    match &cli.command {
        Command::Validate { poset, function } => {
            let poset = load_poset(poset)?;
            match function {
                None => {
                    let report = poset.structure_report();
                    let text = if json {
                        pretty(&json!({ "poset": poset.name(), "structure": report }))
                    } else {
                        let mut s = format!("{poset}\n");
                        let _ = writeln!(s, "height: {}", report.poset_height);
                        let _ = writeln!(s, "local: {}", report.is_local);
                        let _ = writeln!(s, "catenary: {}", report.is_catenary);
                        let _ = writeln!(s, "graded below: {}", report.is_graded_below);
                        let _ = writeln!(s, "minimal: {}", report.minimal.join(", "));
                        let _ = writeln!(s, "maximal: {}", report.maximal.join(", "));
                        let _ = writeln!(s, "assh: {}", report.assh.join(", "));
                        s
                    };
                    Ok(Output::ok(text))
                }
                Some(path) => {
                    let f = load_function(&poset, path)?;
                    let report = validate_bass(&f);
                    let text = if json {
                        pretty(&serde_json::to_value(&report).expect("serializable"))
                    } else {
                        format!("{f}\n{report}\n")
                    };
                    Ok(Output {
                        text,
                        passed: report.ok,
                    })
                }
            }
        }
        Command::Enumerate { poset, level } => {
            let poset = load_poset(poset)?;
            let fs = enumerate_n_bass(&poset, *level);
            let text = if json {
                let list: Vec<Value> = fs.iter().map(|f| function_value(f, None)["values"].clone()).collect();
                pretty(&json!({
                    "poset": poset.name(),
                    "level": level,
                    "count": fs.len(),
                    "functions": list,
                }))
            } else {
                let mut s = format!("count: {}\n", fs.len());
                for f in &fs {
                    let _ = writeln!(s, "{f}");
                }
                s
            };
            Ok(Output::ok(text))
        }
        Command::Classify { poset } => {
            let poset = load_poset(poset)?;
            let table = ClassificationTable::build(&poset);
            let text = if json {
                let c = table.counts();
                pretty(&json!({
                    "poset": poset.name(),
                    "counts": { "serre": c[0], "torf": c[1], "ke": c[2] },
                    "ke_equals_torf": table.ke_equals_torf,
                }))
            } else {
                format!("{table}\n")
            };
            Ok(Output::ok(text))
        }
        Command::Canonicalize {
            poset,
            function,
            mode,
            generator,
        } => {
            let poset = load_poset(poset)?;
            let h = load_function(&poset, function)?;
            let gen = load_generator(&poset, generator)?;
            let mode = match mode {
                Mode::Brute => CanonicalMode::Brute,
                Mode::Witness => CanonicalMode::Witness,
            };
            let f = canonicalize(&h, mode, &gen).map_err(check)?;
            Ok(Output::ok(function_to_json(&f, Some(Role::Function))))
        }
        Command::Seq { poset, function } => {
            let poset = load_poset(poset)?;
            let f = load_bass(&poset, function)?;
            Ok(Output::ok(sequence_to_json(&seq_from_fct(&f))))
        }
        Command::Fct { poset, sequence } => {
            let poset = load_poset(poset)?;
            let s = parse_sequence(&poset, &read(sequence)?).map_err(input)?;
            let f = fct_from_seq(&s).map_err(check)?;
            Ok(Output::ok(function_to_json(&f, Some(Role::Function))))
        }
        Command::SmallestKe { poset, set } => {
            let poset = load_poset(poset)?;
            let ids: Vec<&str> = set.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            let phi = poset.set(&ids).map_err(input)?;
            let pair = smallest_ke_pair(&poset, &phi);
            let text = if json {
                pretty(&json!({
                    "poset": poset.name(),
                    "phi": set_names(&poset, &pair.phi),
                    "psi": set_names(&poset, &pair.psi),
                }))
            } else {
                format!(
                    "phi: {}\npsi: {}\n",
                    poset.format_set(&pair.phi),
                    poset.format_set(&pair.psi)
                )
            };
            Ok(Output::ok(text))
        }
        Command::TopClasses { poset } => {
            let poset = load_poset(poset)?;
            let top = classify_top_dimension(&poset).map_err(check)?;
            let passed = top.injective && top.bijective != Some(false);
            let text = if json {
                let pairs: Vec<Value> = top
                    .pairs
                    .iter()
                    .map(|(set, f)| {
                        json!({
                            "assh": set_names(&poset, set),
                            "values": function_value(f, None)["values"].clone(),
                        })
                    })
                    .collect();
                pretty(&json!({
                    "poset": poset.name(),
                    "count": top.pairs.len(),
                    "injective": top.injective,
                    "bijective": top.bijective,
                    "pairs": pairs,
                }))
            } else {
                let mut s = format!("count: {}\n", top.pairs.len());
                for (set, f) in &top.pairs {
                    let _ = writeln!(s, "{}  {f}", poset.format_set(set));
                }
                let _ = writeln!(s, "injective: {}", top.injective);
                let bij = top.bijective.map_or("n/a".to_owned(), |b| b.to_string());
                let _ = writeln!(s, "bijective: {bij}");
                s
            };
            Ok(Output { text, passed })
        }
        Command::DiagramCheck { poset, generator } => {
            let poset = load_poset(poset)?;
            let gen = load_generator(&poset, generator)?;
            let report = diagram_check(&poset, &gen).map_err(check)?;
            let text = if json {
                pretty(&serde_json::to_value(&report).expect("serializable"))
            } else {
                let mut s = format!("{} (catenary: {})\n", report.poset, report.catenary);
                for c in &report.checks {
                    let mark = if c.passed { "pass" } else { "FAIL" };
                    let _ = writeln!(s, "{mark} {}", c.name);
                    for w in &c.witnesses {
                        let _ = writeln!(s, "    {w}");
                    }
                }
                s
            };
            Ok(Output {
                passed: report.passed(),
                text,
            })
        }
        Command::Dot { poset, function } => {
            let poset = load_poset(poset)?;
            let f = function.as_deref().map(|p| load_function(&poset, p)).transpose()?;
            Ok(Output::ok(emit_dot(&poset, f.as_ref()).map_err(check)?))
        }
    }
}

fn emit(cli: &Cli, text: &str) -> io::Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("BASSLINE_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .parse()
        .map_err(|_| format!("BASSLINE_THREADS must be a positive integer, got `{raw}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = configure_threads() {
        eprintln!("bassline: {msg}");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&cli, &out.text) {
                eprintln!("bassline: {e}");
                return ExitCode::from(2);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Check(msg)) => {
            eprintln!("bassline: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("bassline: {msg}");
            ExitCode::from(2)
        }
    }
}
