use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use zwcalc::diagram::Diagram;
use zwcalc::format;
use zwcalc::interpret::interpret_with_limit;
use zwcalc::rules::{self, RewriteRule, VerificationReport, VERIFY_ENTRY_LIMIT};
use zwcalc::translate::{self, Direction};

/// Qudit ZW/ZX diagram engine: interpret terms, verify the rewrite rules,
/// translate between the calculi.
#[derive(Parser)]
#[command(name = "zwcalc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a diagram term to its matrix (shape header, then
    /// semicolon-separated re,im pairs per row).
    Interpret {
        /// Wire dimension applied to every single-dimension atom.
        #[arg(long)]
        dim: usize,
        /// Restrict the term to one calculus: "zw" or "zx".
        #[arg(long)]
        calculus: Option<String>,
        /// File containing one diagram term.
        file: PathBuf,
    },
    /// Numerically verify the rewrite-rule catalog; exits 1 on any failure.
    Verify {
        /// Comma-separated wire dimensions.
        #[arg(long, default_value = "2,3,4,5")]
        dims: String,
        /// Randomized trials per rule and dimension.
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Entrywise absolute tolerance.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Global seed; per-cell seeds derive from it deterministically.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Verify only these comma-separated rule names.
        #[arg(long)]
        rules: Option<String>,
        /// Also verify the derived equalities.
        #[arg(long)]
        lemmas: bool,
        /// Also verify the mixed-dimension binder/splitter rules.
        #[arg(long)]
        qufinite: bool,
    },
    /// Translate a term between the calculi and print the image term.
    Translate {
        #[arg(long)]
        dim: usize,
        /// "xw" (ZX into ZW) or "wx" (ZW into ZX).
        #[arg(long)]
        direction: String,
        file: PathBuf,
    },
    /// Send a ZX term through ZW and back; report semantic and structural
    /// agreement with the original.
    Roundtrip {
        #[arg(long)]
        dim: usize,
        file: PathBuf,
    },
    /// Deviation of the unsound W-W bialgebra shape at the given dimension.
    Counterexample {
        #[arg(long)]
        dim: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// `Err` is a usage-level failure (exit 2); `Ok` carries the exit code.
fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Interpret {
            dim,
            calculus,
            file,
        } => {
            let diagram = load_term(&file, dim)?;
            check_calculus(&diagram, calculus.as_deref())?;
            let matrix =
                interpret_with_limit(&diagram, VERIFY_ENTRY_LIMIT).map_err(|e| e.to_string())?;
            print!("{}", format::matrix_to_text(&matrix));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            dims,
            trials,
            tol,
            seed,
            rules: filter,
            lemmas,
            qufinite,
        } => {
            let dims = parse_dims(&dims)?;
            let mut selected: Vec<RewriteRule> = rules::catalog();
            if lemmas {
                selected.extend(rules::lemma_catalog());
            }
            if qufinite {
                selected.extend(zwcalc::qufinite::qufinite_catalog());
            }
            if let Some(names) = filter {
                let wanted: Vec<&str> = names.split(',').map(str::trim).collect();
                for name in &wanted {
                    if !selected.iter().any(|r| r.name == *name) {
                        return Err(format!("unknown rule name '{name}'"));
                    }
                }
                selected.retain(|r| wanted.contains(&r.name));
            }
            let mut reports: Vec<VerificationReport> = Vec::new();
            for rule in &selected {
                for &d in &dims {
                    let report = rules::verify(rule, d, trials, tol, seed);
                    println!("{report}");
                    reports.push(report);
                }
            }
            println!("{}", format::report_summary(&reports));
            if reports.iter().all(|r| r.pass) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Translate {
            dim,
            direction,
            file,
        } => {
            let direction = Direction::parse(&direction)
                .ok_or_else(|| format!("direction must be 'xw' or 'wx', got '{direction}'"))?;
            let diagram = load_term(&file, dim)?;
            let source_ok = match direction {
                Direction::Xw => diagram.is_zx(),
                Direction::Wx => diagram.is_zw(),
            };
            if !source_ok {
                return Err(format!(
                    "term is not a pure {} diagram",
                    match direction {
                        Direction::Xw => "zx",
                        Direction::Wx => "zw",
                    }
                ));
            }
            let image = translate::translate(&diagram, direction).map_err(|e| e.to_string())?;
            println!("{}", format::print(&image).map_err(|e| e.to_string())?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Roundtrip { dim, file } => {
            let diagram = load_term(&file, dim)?;
            if !diagram.is_zx() {
                return Err("roundtrip takes a zx term".to_string());
            }
            let report = translate::round_trip_zx(&diagram, 1e-9).map_err(|e| e.to_string())?;
            println!(
                "semantic: {} (max deviation {:.3e})",
                if report.semantic_pass { "PASS" } else { "FAIL" },
                report.max_deviation
            );
            println!(
                "structural: {}",
                if report.structural_pass {
                    "identical"
                } else {
                    "differs"
                }
            );
            Ok(if report.semantic_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Counterexample { dim } => {
            if dim < 2 {
                return Err("dimension must be at least 2".to_string());
            }
            let deviation = rules::bialgebra_counterexample(dim).map_err(|e| e.to_string())?;
            println!("w-w bialgebra deviation at d={dim}: {deviation:.6}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn load_term(file: &PathBuf, dim: usize) -> Result<Diagram, String> {
    let text =
        fs::read_to_string(file).map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    format::parse(text.trim(), dim).map_err(|e| e.to_string())
}

fn check_calculus(diagram: &Diagram, calculus: Option<&str>) -> Result<(), String> {
    match calculus {
        None => Ok(()),
        Some("zw") => diagram
            .is_zw()
            .then_some(())
            .ok_or_else(|| "term uses generators outside the zw calculus".to_string()),
        Some("zx") => diagram
            .is_zx()
            .then_some(())
            .ok_or_else(|| "term uses generators outside the zx calculus".to_string()),
        Some(other) => Err(format!("calculus must be 'zw' or 'zx', got '{other}'")),
    }
}

fn parse_dims(text: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .ok()
                .filter(|&d| d >= 2)
                .ok_or_else(|| format!("bad dimension '{s}' (need integers >= 2)"))
        })
        .collect()
}
