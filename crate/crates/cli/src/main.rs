use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use mpl2_core::autgroup::are_isomorphic;
use mpl2_core::classify::{classify, diagonal_t, diagonal_u, is_automorphism};
use mpl2_core::enumerate::{
    brute_force_catalog, enumerate_class, expected_count, table1, with_jobs, Catalog, SolutionClass,
};
use mpl2_core::isotope::{isotope_tables, square_free_isotope, IsotopePair};
use mpl2_core::retract::multipermutation_level;

mod input;

use input::{read_solution, Labeled};

#[derive(Parser)]
#[command(name = "mpl2", version, about = "Yang-Baxter solutions of multipermutation level at most 2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the braid relation
    Verify { file: PathBuf },
    /// Print every classification flag
    Classify { file: PathBuf },
    /// Build the (pi1, pi2)-isotope
    Isotope {
        file: PathBuf,
        #[arg(long)]
        pi1: String,
        #[arg(long)]
        pi2: String,
    },
    /// Split a 2-permutational solution into its square-free base and pair
    SfIsotope { file: PathBuf },
    /// Search for an isomorphism between two solutions
    IsoCheck { first: PathBuf, second: PathBuf },
    /// Enumerate a class of solutions up to isomorphism
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        class: SolutionClass,
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Exhaustive search over all row assignments
    Oracle {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        class: SolutionClass,
        #[arg(long)]
        allow_big: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
    /// Compare counts with the published table
    Table {
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

enum Failure {
    /// a check ran and failed; the report was printed
    Check,
    Usage(String),
}

type Outcome = Result<(), Failure>;

fn usage<E: ToString>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn print(value: &Value) -> Outcome {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(usage)?;
    writeln!(out).map_err(usage)
}

fn with_labels(mut value: Value, input: &Labeled) -> Value {
    if let (Some(map), Value::Object(obj)) = (input.mapping(), &mut value) {
        obj.insert("labels".into(), json!(map));
    }
    value
}

fn load(path: &Path) -> Result<Labeled, Failure> {
    read_solution(path).map_err(Failure::Usage)
}

fn verify(file: &Path) -> Outcome {
    let input = load(file)?;
    let violation = input.solution.braid_violation();
    print(&with_labels(
        json!({
            "n": input.solution.n(),
            "braid": violation.is_none(),
            "violation": violation.map(|(x, y, z)| [x, y, z]),
        }),
        &input,
    ))?;
    if violation.is_some() {
        return Err(Failure::Check);
    }
    Ok(())
}

fn classify_cmd(file: &Path) -> Outcome {
    let input = load(file)?;
    let report = classify(&input.solution);
    print(&with_labels(json!(report), &input))?;
    if !report.braid {
        return Err(Failure::Check);
    }
    Ok(())
}

fn isotope(file: &Path, pi1: &str, pi2: &str) -> Outcome {
    let input = load(file)?;
    let pair = IsotopePair::new(
        input.permutation(pi1).map_err(Failure::Usage)?,
        input.permutation(pi2).map_err(Failure::Usage)?,
    )
    .map_err(usage)?;
    let candidate = isotope_tables(&input.solution, &pair).map_err(usage)?;
    match candidate.braid_violation() {
        None => print(&with_labels(
            json!({"braid": true, "pair": pair, "solution": candidate}),
            &input,
        )),
        Some((x, y, z)) => {
            print(&with_labels(
                json!({"braid": false, "violation": [x, y, z], "pair": pair, "tables": candidate}),
                &input,
            ))?;
            Err(Failure::Check)
        }
    }
}

fn sf_isotope(file: &Path) -> Outcome {
    let input = load(file)?;
    let s = &input.solution;
    match square_free_isotope(s) {
        Ok((base, pair)) => print(&with_labels(json!({"base": base, "pair": pair}), &input)),
        Err(e) => {
            let u = diagonal_u(s).ok();
            let t = diagonal_t(s).ok();
            print(&with_labels(
                json!({
                    "error": e.to_string(),
                    "U": u.as_ref().map(|p| p.to_cycles()),
                    "T": t.as_ref().map(|p| p.to_cycles()),
                    "U_automorphism": u.as_ref().map(|p| is_automorphism(s, p)),
                    "T_automorphism": t.as_ref().map(|p| is_automorphism(s, p)),
                    "mpl": multipermutation_level(s, None),
                }),
                &input,
            ))?;
            Err(Failure::Check)
        }
    }
}

fn iso_check(first: &Path, second: &Path) -> Outcome {
    let a = load(first)?;
    let b = load(second)?;
    match are_isomorphic(&a.solution, &b.solution) {
        Some(phi) => print(&json!({
            "isomorphic": true,
            "map": phi.to_cycles(),
            "images": phi.images(),
        })),
        None => {
            print(&json!({"isomorphic": false, "result": "non-isomorphic"}))?;
            Err(Failure::Check)
        }
    }
}

/// Writes the catalog to `out` (or standard output when absent and not in
/// count-only mode) and prints a summary.
fn emit_catalog(catalog: &Catalog, count_only: bool, out: Option<&Path>, expected: Option<usize>) -> Outcome {
    if !count_only {
        match out {
            Some(path) => {
                let file = File::create(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
                catalog.write_jsonl(BufWriter::new(file)).map_err(usage)?;
            }
            None => {
                catalog.write_jsonl(BufWriter::new(io::stdout().lock())).map_err(usage)?;
                return match expected {
                    Some(e) if e != catalog.len() => {
                        eprintln!("count {} differs from the published {e}", catalog.len());
                        Err(Failure::Check)
                    }
                    _ => Ok(()),
                };
            }
        }
    }
    let matches = expected.map(|e| e == catalog.len());
    print(&json!({
        "n": catalog.n,
        "class": catalog.class,
        "count": catalog.len(),
        "expected": expected,
        "match": matches,
        "file": out.filter(|_| !count_only).map(|p| p.display().to_string()),
    }))?;
    if matches == Some(false) {
        return Err(Failure::Check);
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Verify { file } => verify(&file),
        Command::Classify { file } => classify_cmd(&file),
        Command::Isotope { file, pi1, pi2 } => isotope(&file, &pi1, &pi2),
        Command::SfIsotope { file } => sf_isotope(&file),
        Command::IsoCheck { first, second } => iso_check(&first, &second),
        Command::Enumerate {
            size,
            class,
            count_only,
            jobs,
            out,
        } => {
            let catalog = with_jobs(jobs, || enumerate_class(size, class)).map_err(usage)?;
            emit_catalog(&catalog, count_only, out.as_deref(), expected_count(class, size))
        }
        Command::Oracle {
            size,
            class,
            allow_big,
            jobs,
            out,
        } => {
            let catalog = with_jobs(jobs, || brute_force_catalog(size, class, allow_big)).map_err(usage)?;
            emit_catalog(&catalog, false, out.as_deref(), expected_count(class, size))
        }
        Command::Table { max_size, jobs } => {
            let report = with_jobs(jobs, || table1(max_size)).map_err(usage)?;
            print(&json!(report))?;
            if !report.pass {
                return Err(Failure::Check);
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
