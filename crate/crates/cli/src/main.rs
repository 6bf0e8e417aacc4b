//! Command-line front end: counting, hook inspection, standardization,
//! the split/merge bijection, uniform sampling and the brute-force
//! verification suite. Results go to standard output as canonical JSON;
//! exit code 0 means success or pass, 1 a verification failure (with a
//! witness in the JSON), 2 a usage or input error.

mod doc;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use shifted_hooks::{
    enumerate_ssyt, fiber_census, merge, roundtrip_check, sample_ssyt, split, uniformity_report,
    Bounds, CensusWitness, Diagram, OrderScheme, RoundTripMode, SeededRng, ShapeKind,
    StrictPartition,
};

#[derive(Parser)]
#[command(name = "shifted-hooks", version, about = "Shifted tableaux toolbox")]
struct Cli {
    /// Render results as aligned grids instead of JSON where applicable.
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads for verification commands (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count standard fillings of a shape via the hook-length formula.
    Count {
        #[arg(required = true)]
        parts: Vec<usize>,
        /// Use the ordinary (left-justified) diagram.
        #[arg(long)]
        ordinary: bool,
    },
    /// Print per-cell hook lengths of the shifted diagram.
    Hooks {
        #[arg(required = true)]
        parts: Vec<usize>,
    },
    /// Apply the standardization map to a tabloid document.
    Standardize {
        file: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Rowwise)]
        order: OrderArg,
    },
    /// Split a tabloid document into a standard tableau and a hook tabloid.
    Split { file: String },
    /// Merge a (standard tableau, hook tabloid) pair document back.
    Merge { file: String },
    /// Draw uniformly distributed shifted standard tableaux.
    Sample {
        #[arg(required = true)]
        parts: Vec<usize>,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: Option<u64>,
    },
    /// Brute-force verification suites.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Counting formula versus direct enumeration for all strict
    /// partitions up to a size.
    Counts {
        #[arg(long)]
        max_n: usize,
    },
    /// Fiber census of the standardization map over all fillings.
    Fibers {
        #[arg(required = true)]
        parts: Vec<usize>,
        #[arg(long, value_enum, default_value_t = OrderArg::Rowwise)]
        order: OrderArg,
    },
    /// Split/merge round trips.
    Roundtrip {
        #[arg(required = true)]
        parts: Vec<usize>,
        #[command(flatten)]
        mode: RoundtripArgs,
    },
    /// Chi-square uniformity of the sampler.
    Uniformity {
        #[arg(required = true)]
        parts: Vec<usize>,
        #[arg(long)]
        samples: u64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Args)]
struct RoundtripArgs {
    /// All fillings, plus all (tableau, hook tabloid) pairs.
    #[arg(long, conflicts_with_all = ["samples", "seed"])]
    exhaustive: bool,
    /// Number of seeded random fillings.
    #[arg(long, required_unless_present = "exhaustive")]
    samples: Option<u64>,
    /// Seed for sampled mode.
    #[arg(long, requires = "samples")]
    seed: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Rowwise,
    Columnwise,
}

impl OrderArg {
    fn scheme(self) -> OrderScheme {
        match self {
            OrderArg::Rowwise => OrderScheme::Rowwise,
            OrderArg::Columnwise => OrderScheme::Columnwise,
        }
    }
    fn name(self) -> &'static str {
        match self {
            OrderArg::Rowwise => "rowwise",
            OrderArg::Columnwise => "columnwise",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn bounds_from_env() -> Result<Bounds, String> {
    match std::env::var("SHIFTED_HOOKS_MAX_N") {
        Ok(v) => {
            let n: usize = v
                .parse()
                .map_err(|_| "SHIFTED_HOOKS_MAX_N must be an integer".to_string())?;
            Ok(Bounds::with_max_n(n))
        }
        Err(_) => Ok(Bounds::default()),
    }
}

fn strict(parts: &[usize]) -> Result<StrictPartition, String> {
    StrictPartition::new(parts.to_vec()).map_err(|e| e.to_string())
}

fn read_doc(path: &str) -> Result<Value, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    serde_json::from_str(&text).map_err(|e| format!("{path}: invalid JSON: {e}"))
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let pretty = cli.pretty;
    match cli.command {
        Command::Count { parts, ordinary } => {
            let kind = if ordinary {
                ShapeKind::Ordinary
            } else {
                ShapeKind::Shifted
            };
            let diagram = Diagram::new(parts, kind).map_err(|e| e.to_string())?;
            let count = diagram.count_standard().map_err(|e| e.to_string())?;
            if pretty {
                println!("{count}");
            } else {
                print!("{}", doc::emit(&json!({ "count": count.to_string() })));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hooks { parts } => {
            let shape = strict(&parts)?;
            let diagram = shape.diagram();
            let mut rows: Vec<Vec<usize>> = Vec::new();
            for i in 1..=shape.rows() {
                rows.push(
                    (shape.row_start(i)..=shape.row_end(i))
                        .map(|j| {
                            diagram
                                .hook_length(shifted_hooks::Cell::new(i, j))
                                .expect("cell of own diagram")
                        })
                        .collect(),
                );
            }
            if pretty {
                for (i, row) in rows.iter().enumerate() {
                    let pad = "  ".repeat(i);
                    let cells: Vec<String> = row.iter().map(|h| h.to_string()).collect();
                    println!("{pad}{}", cells.join(" "));
                }
            } else {
                print!(
                    "{}",
                    doc::emit(&json!({
                        "count": diagram.count_standard().map_err(|e| e.to_string())?.to_string(),
                        "hook_lengths": rows,
                        "product": diagram.hook_product().to_string(),
                        "shape": doc::parts_json(&shape),
                    }))
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Standardize { file, order } => {
            let t = doc::parse_tabloid(&read_doc(&file)?)?;
            let s = t.standardize(order.scheme());
            if pretty {
                print!("{}", doc::pretty_tabloid(&s));
            } else {
                print!("{}", doc::emit(&doc::tabloid_doc(&s)));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Split { file } => {
            let t = doc::parse_tabloid(&read_doc(&file)?)?;
            let (s, h) = split(&t).map_err(|e| e.to_string())?;
            if pretty {
                print!("{}\n{}", doc::pretty_tabloid(&s), doc::pretty_hook(&h));
            } else {
                print!("{}", doc::emit(&doc::split_doc(&s, &h)));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Merge { file } => {
            let (s, h) = doc::parse_pair(&read_doc(&file)?)?;
            if !s.is_standard() {
                return Err("the \"standard\" component must be a standard tableau".to_string());
            }
            if !h.is_total() || !h.is_valid() {
                return Err("the hook tabloid must be total and hook-valid".to_string());
            }
            let t = merge(&s, &h).map_err(|e| e.to_string())?;
            if pretty {
                print!("{}", doc::pretty_tabloid(&t));
            } else {
                print!("{}", doc::emit(&doc::tabloid_doc(&t)));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sample { parts, seed, count } => {
            let shape = strict(&parts)?;
            let mut rng = SeededRng::new(seed);
            match count {
                None => {
                    let s = sample_ssyt(&shape, &mut rng);
                    if pretty {
                        print!("{}", doc::pretty_tabloid(&s));
                    } else {
                        print!("{}", doc::emit(&doc::tabloid_doc(&s)));
                    }
                }
                Some(k) => {
                    let tableaux: Vec<_> = (0..k).map(|_| sample_ssyt(&shape, &mut rng)).collect();
                    if pretty {
                        for s in &tableaux {
                            println!("{}", doc::pretty_tabloid(s));
                        }
                    } else {
                        let samples: Vec<Value> = tableaux.iter().map(doc::tabloid_doc).collect();
                        print!(
                            "{}",
                            doc::emit(&json!({
                                "count": k,
                                "samples": samples,
                                "seed": seed,
                                "shape": doc::parts_json(&shape),
                            }))
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(v) => run_verify(v),
    }
}

fn run_verify(cmd: VerifyCommand) -> Result<ExitCode, String> {
    let bounds = bounds_from_env()?;
    match cmd {
        VerifyCommand::Counts { max_n } => {
            let mut checked = 0u64;
            for parts in strict_partitions_up_to(max_n) {
                let shape = strict(&parts)?;
                let formula = shape
                    .diagram()
                    .count_standard()
                    .map_err(|e| e.to_string())?;
                let enumerated = enumerate_ssyt(&shape, &bounds).map_err(|e| e.to_string())?;
                if formula.to_u64() != Some(enumerated.len() as u64) {
                    print!(
                        "{}",
                        doc::emit(&json!({
                            "status": "fail",
                            "witness": {
                                "enumerated": enumerated.len(),
                                "formula": formula.to_string(),
                                "shape": parts,
                            },
                        }))
                    );
                    return Ok(ExitCode::from(1));
                }
                checked += 1;
            }
            print!(
                "{}",
                doc::emit(&json!({"max_n": max_n, "shapes_checked": checked, "status": "pass"}))
            );
            Ok(ExitCode::SUCCESS)
        }
        VerifyCommand::Fibers { parts, order } => {
            let shape = strict(&parts)?;
            let census =
                fiber_census(&shape, order.scheme(), &bounds).map_err(|e| e.to_string())?;
            let base = vec![
                ("classes", json!(census.counts.len())),
                (
                    "expected_fiber",
                    Value::String(census.expected_fiber.to_string()),
                ),
                ("order", Value::String(order.name().to_string())),
                ("shape", doc::parts_json(&shape)),
                ("total", json!(census.total)),
            ];
            match census.witness() {
                None => {
                    let mut entries = base;
                    entries.push(("admissible", json!(true)));
                    print!("{}", doc::emit(&doc::sorted_object(entries)));
                    Ok(ExitCode::SUCCESS)
                }
                Some(w) => {
                    let witness = match w {
                        CensusWitness::WrongFiber { key, count } => json!({
                            "fiber_size": count,
                            "tableau": key,
                        }),
                        CensusWitness::NonstandardImage { key, count } => json!({
                            "fiber_size": count,
                            "nonstandard_image": key,
                        }),
                    };
                    let mut entries = base;
                    entries.push(("admissible", json!(false)));
                    entries.push(("witness", witness));
                    print!("{}", doc::emit(&doc::sorted_object(entries)));
                    Ok(ExitCode::from(1))
                }
            }
        }
        VerifyCommand::Roundtrip { parts, mode } => {
            let shape = strict(&parts)?;
            let mode = if mode.exhaustive {
                RoundTripMode::Exhaustive
            } else {
                RoundTripMode::Sampled {
                    samples: mode.samples.ok_or_else(|| {
                        "either --exhaustive or --samples is required".to_string()
                    })?,
                    seed: mode.seed.unwrap_or(0),
                }
            };
            let report = roundtrip_check(&shape, mode, &bounds).map_err(|e| e.to_string())?;
            let mode_json = match mode {
                RoundTripMode::Exhaustive => json!("exhaustive"),
                RoundTripMode::Sampled { samples, seed } => {
                    json!({"samples": samples, "seed": seed})
                }
            };
            let status = if report.passed() { "pass" } else { "fail" };
            print!(
                "{}",
                doc::emit(&json!({
                    "failures": report.failures,
                    "merge_split_cases": report.merge_split_cases,
                    "mode": mode_json,
                    "shape": doc::parts_json(&shape),
                    "split_merge_cases": report.split_merge_cases,
                    "status": status,
                }))
            );
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        VerifyCommand::Uniformity {
            parts,
            samples,
            seed,
        } => {
            let shape = strict(&parts)?;
            let mut rng = SeededRng::new(seed);
            let report = uniformity_report(&shape, samples, &mut rng).map_err(|e| e.to_string())?;
            let status = if report.passes() { "pass" } else { "fail" };
            print!(
                "{}",
                doc::emit(&json!({
                    "chi_square": report.chi_square,
                    "classes": report.class_count,
                    "degrees_of_freedom": report.degrees_of_freedom,
                    "observed_classes": report.observed_classes,
                    "p_value": report.p_value,
                    "samples": report.samples,
                    "seed": seed,
                    "shape": doc::parts_json(&shape),
                    "status": status,
                }))
            );
            Ok(if report.passes() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

/// All strict partitions with total at most `max_n`, parts decreasing.
fn strict_partitions_up_to(max_n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut stack = Vec::new();
        extend_strict(n, usize::MAX, &mut stack, &mut out);
    }
    out
}

fn extend_strict(remaining: usize, cap: usize, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if remaining == 0 {
        out.push(stack.clone());
        return;
    }
    let top = remaining.min(cap.saturating_sub(1));
    for part in (1..=top).rev() {
        stack.push(part);
        extend_strict(remaining - part, part, stack, out);
        stack.pop();
    }
}
