mod input;
mod output;

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use algrel::combinatorics::{sum_threshold_generator_count, sum_threshold_numerator};
use algrel::{
    betti_bounds, build_mvt, evaluate, hilbert_numerator, oracle, BoundSequence, Error,
    MvtOptions, ProbabilityModel, SystemSpec, DEFAULT_BUDGET,
};

use input::{SystemDocument, TankDocument};
use output::{Format, Report, Table, Value};

#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Resource(String),
    CrossCheck(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "validation error: {m}"),
            CliError::Resource(m) => write!(f, "resource error: {m}"),
            CliError::CrossCheck(m) => write!(f, "cross-check failure: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget { .. } => CliError::Resource(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "algrel",
    about = "Exact reliability and bounds for multi-state k-out-of-n systems via monomial ideals",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = CliFormat::Table)]
    format: CliFormat,
    /// Significant digits for probabilities.
    #[arg(long, global = true, default_value_t = 6)]
    precision: usize,
    /// Maximum number of lattice states enumerated by exhaustive scans.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Number of worker threads (default: available cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliFormat {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundaryKind {
    Lower,
    Upper,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal generators (minimal paths) of the j-reliability ideal.
    Generators {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        level: u32,
    },
    /// Graded (and optionally multigraded) Betti bounds with exactness flag.
    Betti {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        level: u32,
        #[arg(long)]
        multigraded: bool,
    },
    /// Dimension-grouped Hilbert-series numerator terms.
    Hilbert {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        level: u32,
    },
    /// Per-level reliability table: R(level >= j) and P(level = j).
    Reliability { file: PathBuf },
    /// Truncation-bound ladder, exact reliability and classic bounds.
    Bounds {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        level: u32,
    },
    /// Lower or upper boundary points of a level.
    Boundary {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        level: u32,
        #[arg(long, value_enum)]
        kind: BoundaryKind,
    },
    /// Minimal cuts to a level.
    Cuts {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        level: u32,
    },
    /// Brute-force cross-check of generators, reliabilities and numerators.
    Oracle { file: PathBuf },
    /// Storage sweep: generator counts and fill probabilities per level.
    TankSweep {
        file: PathBuf,
        /// Survival law "1-(C*j)^E" used instead of the document's
        /// survival_model.
        #[arg(long)]
        law: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    let format = match cli.format {
        CliFormat::Table => Format::Table,
        CliFormat::Csv => Format::Csv,
        CliFormat::Json => Format::Json,
    };
    match run(&cli.command, cli.budget) {
        Ok(report) => {
            print!("{}", report.render(format, cli.precision));
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("{err}");
            match err {
                CliError::Validation(_) => ExitCode::from(1),
                CliError::Resource(_) => ExitCode::from(2),
                CliError::CrossCheck(_) => ExitCode::from(3),
            }
        }
    }
}

fn read_system(path: &PathBuf) -> Result<(SystemSpec, ProbabilityModel), CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
    let doc = SystemDocument::parse(&text)?;
    let spec = doc.spec()?;
    let model = doc.model()?;
    model.matches(&spec)?;
    Ok((spec, model))
}

fn vector_table(name: &str, vectors: Vec<Vec<u32>>) -> Table {
    Table {
        name: name.to_string(),
        columns: vec!["index".into(), "exponents".into(), "degree".into()],
        rows: vectors
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                let degree: u32 = v.iter().sum();
                vec![Value::Int(i as i64), Value::Vector(v), Value::Int(degree as i64)]
            })
            .collect(),
    }
}

fn ladder_table(bounds: &BoundSequence) -> Table {
    Table {
        name: "ladder".to_string(),
        columns: vec!["t".into(), "kind".into(), "value".into()],
        rows: bounds
            .partial_sums
            .iter()
            .enumerate()
            .map(|(i, &s)| {
                let kind = if i % 2 == 0 { "upper" } else { "lower" };
                vec![Value::Int(i as i64 + 1), Value::Text(kind.into()), Value::Float(s)]
            })
            .collect(),
    }
}

fn run(command: &Command, budget: u64) -> Result<Report, CliError> {
    let mut report = Report::new();
    match command {
        Command::Generators { file, level } => {
            let (spec, _) = read_system(file)?;
            let ideal = spec.reliability_ideal(*level)?;
            report.scalar("level", Value::Int(*level as i64));
            report.scalar("count", Value::Int(ideal.num_generators() as i64));
            report.table(vector_table(
                "generators",
                ideal.generators().iter().map(|g| g.exponents().to_vec()).collect(),
            ));
        }
        Command::Betti { file, level, multigraded } => {
            let (spec, _) = read_system(file)?;
            let ideal = spec.reliability_ideal(*level)?;
            let options = MvtOptions { compatibility_check: true, ..MvtOptions::default() };
            let tree = build_mvt(&ideal, &options)?;
            let summary = betti_bounds(&tree, &options);
            report.scalar("level", Value::Int(*level as i64));
            report.scalar("exact", Value::Bool(summary.exact));
            let lower = summary.graded_lower();
            let rows = summary
                .graded_upper()
                .into_iter()
                .map(|((dim, degree), upper)| {
                    let low = lower.get(&(dim, degree)).copied().unwrap_or(0);
                    vec![
                        Value::Int(dim as i64),
                        Value::Int(degree as i64),
                        Value::Int(low as i64),
                        Value::Int(upper as i64),
                    ]
                })
                .collect();
            report.table(Table {
                name: "graded".to_string(),
                columns: vec!["dimension".into(), "degree".into(), "lower".into(), "upper".into()],
                rows,
            });
            if *multigraded {
                let lower = summary.lower();
                let rows = summary
                    .upper()
                    .iter()
                    .map(|((dim, mu), upper)| {
                        let low = lower.get(&(*dim, mu.clone())).copied().unwrap_or(0);
                        vec![
                            Value::Int(*dim as i64),
                            Value::Vector(mu.exponents().to_vec()),
                            Value::Int(low as i64),
                            Value::Int(*upper as i64),
                        ]
                    })
                    .collect();
                report.table(Table {
                    name: "multigraded".to_string(),
                    columns: vec![
                        "dimension".into(),
                        "multidegree".into(),
                        "lower".into(),
                        "upper".into(),
                    ],
                    rows,
                });
            }
        }
        Command::Hilbert { file, level } => {
            let (spec, _) = read_system(file)?;
            let ideal = spec.reliability_ideal(*level)?;
            let tree = build_mvt(&ideal, &MvtOptions::default())?;
            let numerator = hilbert_numerator(&tree);
            report.scalar("level", Value::Int(*level as i64));
            report.scalar("num_terms", Value::Int(numerator.num_terms() as i64));
            report.scalar("max_dimension", Value::Int(numerator.max_dimension() as i64));
            let rows = numerator
                .terms_by_dimension()
                .iter()
                .enumerate()
                .flat_map(|(d, terms)| {
                    terms.iter().map(move |t| {
                        vec![Value::Int(d as i64), Value::Vector(t.exponents().to_vec())]
                    })
                })
                .collect();
            report.table(Table {
                name: "terms".to_string(),
                columns: vec!["dimension".into(), "exponents".into()],
                rows,
            });
        }
        Command::Reliability { file } => {
            let (spec, model) = read_system(file)?;
            let table = algrel::level_reliabilities(&spec, &model)?;
            let rows = table
                .iter()
                .map(|row| {
                    vec![
                        Value::Int(row.level as i64),
                        Value::Float(row.r_at_least),
                        Value::Float(row.r_exact),
                    ]
                })
                .collect();
            report.table(Table {
                name: "levels".to_string(),
                columns: vec!["level".into(), "r_at_least".into(), "r_exact".into()],
                rows,
            });
        }
        Command::Bounds { file, level } => {
            let (spec, model) = read_system(file)?;
            let ideal = spec.reliability_ideal(*level)?;
            let tree = build_mvt(&ideal, &MvtOptions::default())?;
            let bounds = evaluate(&hilbert_numerator(&tree), &model)?;
            let classic = algrel::classic_lower_bounds(&spec, &model, *level, budget)?;
            report.scalar("level", Value::Int(*level as i64));
            report.scalar("exact", Value::Float(bounds.exact));
            report.scalar("path_bound", Value::Float(classic.path_bound));
            report.scalar("cut_bound", Value::Float(classic.cut_bound));
            report.table(ladder_table(&bounds));
        }
        Command::Boundary { file, level, kind } => {
            let (spec, _) = read_system(file)?;
            let points = match kind {
                BoundaryKind::Lower => spec.lower_boundary_points(*level)?,
                BoundaryKind::Upper => spec.upper_boundary_points(*level, budget)?,
            };
            report.scalar("level", Value::Int(*level as i64));
            report.scalar("count", Value::Int(points.len() as i64));
            report.table(vector_table("points", points));
        }
        Command::Cuts { file, level } => {
            let (spec, _) = read_system(file)?;
            let cuts = spec.minimal_cuts(*level, budget)?;
            report.scalar("level", Value::Int(*level as i64));
            report.scalar("count", Value::Int(cuts.len() as i64));
            report.table(vector_table("cuts", cuts));
        }
        Command::Oracle { file } => {
            let (spec, model) = read_system(file)?;
            report = oracle_report(&spec, &model, budget)?;
        }
        Command::TankSweep { file, law } => {
            let text = fs::read_to_string(file)
                .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", file.display())))?;
            let doc = TankDocument::parse(&text)?;
            report = tank_sweep(&doc, law.as_deref())?;
        }
    }
    Ok(report)
}

fn oracle_report(
    spec: &SystemSpec,
    model: &ProbabilityModel,
    budget: u64,
) -> Result<Report, CliError> {
    let mut report = Report::new();
    let mut rows = Vec::new();
    let mut failures = 0usize;
    let mut check = |rows: &mut Vec<Vec<Value>>, name: &str, level: u32, ok: bool| {
        if !ok {
            failures += 1;
        }
        rows.push(vec![
            Value::Text(name.into()),
            Value::Int(level as i64),
            Value::Text(if ok { "pass" } else { "fail" }.into()),
        ]);
    };
    for level in 1..=spec.max_level() {
        let ideal = spec.reliability_ideal(level)?;
        let direct = oracle::brute_force_generators(spec, level, budget)?;
        let gens: Vec<Vec<u32>> =
            ideal.generators().iter().map(|g| g.exponents().to_vec()).collect();
        check(&mut rows, "generators", level, direct == gens);

        if ideal.is_zero() {
            let direct_r = oracle::brute_force_reliability(spec, model, level, budget)?;
            check(&mut rows, "reliability", level, direct_r == 0.0);
            continue;
        }
        let tree = build_mvt(&ideal, &MvtOptions::default())?;
        let numerator = hilbert_numerator(&tree);
        let exact = evaluate(&numerator, model)?.exact;
        let direct_r = oracle::brute_force_reliability(spec, model, level, budget)?;
        check(&mut rows, "reliability", level, (exact - direct_r).abs() <= 1e-12);

        if ideal.num_generators() <= 18 {
            let ie = oracle::inclusion_exclusion_numerator(&ideal)?;
            check(&mut rows, "numerator", level, ie == numerator.coefficient_map());
        }
    }
    report.scalar("failures", Value::Int(failures as i64));
    report.table(Table {
        name: "checks".to_string(),
        columns: vec!["check".into(), "level".into(), "status".into()],
        rows,
    });
    if failures > 0 {
        return Err(CliError::CrossCheck(format!("{failures} oracle check(s) failed")));
    }
    Ok(report)
}

fn tank_sweep(doc: &TankDocument, law: Option<&str>) -> Result<Report, CliError> {
    let tables = doc.survival_tables(law)?;
    let n = tables.len();
    let k = doc.incoming_loads;
    let mut rows = Vec::new();
    for l in doc.level_range[0]..=doc.level_range[1] {
        let start = Instant::now();
        let m = l - doc.current_level_loads;
        let count = sum_threshold_generator_count(m, n, k).to_string();
        let probability = if (m as u64) * (n as u64) < k as u64 {
            0.0
        } else {
            let truncated: Vec<Vec<f64>> =
                tables.iter().map(|t| t[..=(m as usize)].to_vec()).collect();
            let model = ProbabilityModel::from_survival(truncated)?;
            let numerator = sum_threshold_numerator(m, n, k);
            evaluate(&numerator, &model)?.exact
        };
        let runtime = start.elapsed().as_secs_f64();
        rows.push(vec![
            Value::Int(l as i64),
            Value::Big(count),
            Value::Float(probability),
            Value::Float(runtime),
        ]);
    }
    let mut report = Report::new();
    report.table(Table {
        name: "sweep".to_string(),
        columns: vec![
            "level".into(),
            "num_generators".into(),
            "probability".into(),
            "runtime_seconds".into(),
        ],
        rows,
    });
    Ok(report)
}
