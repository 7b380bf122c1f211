//! Verification front end: runs the maximal, minimal, and toric suites and
//! emits machine-readable (JSON/CSV) or human-readable reports.

mod family;

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cliffspace::clifford::{self, QuadricFamily};
use cliffspace::linalg::{parse_rational, rat, rat_int};
use cliffspace::minimal::random_certified_family;
use cliffspace::report::{Report, Status};
use cliffspace::{maximal, minimal};

use rand::SeedableRng;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "cliffspace",
    about = "Exact verification suites for graded section algebras of quadric families",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    output_format: OutputFormat,

    /// Seed for the randomized checks (associativity triples, random
    /// certified families).
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Worker thread hint; 0 uses the default pool. Falls back to the
    /// CLIFFSPACE_THREADS environment variable. Output is identical for
    /// every thread count.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify the section algebra of the complete system of quadrics.
    Maximal {
        /// Dimension of the underlying space V.
        #[arg(long)]
        n: usize,
        /// Largest graded degree to verify (default: 8 for n ≤ 3, else 6).
        #[arg(long)]
        degree_cap: Option<usize>,
    },
    /// Certify a minimal family from a file and verify its section algebra.
    Minimal {
        /// Path to the quadric family file.
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        degree_cap: Option<usize>,
    },
    /// Verify one member of the toric deformation family.
    Toric {
        #[arg(long)]
        n: usize,
        /// Deformation parameter, an integer or a rational "p/q".
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long)]
        degree_cap: Option<usize>,
    },
    /// Run every suite at default caps.
    VerifyAll {
        #[arg(long)]
        degree_cap: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum OutputFormat {
    Json,
    Csv,
    Text,
}

/// Echo of the resolved run configuration, embedded in every report.
#[derive(Debug, Serialize)]
struct ConfigEcho {
    command: String,
    n: Option<usize>,
    degree_cap: usize,
    family_path: Option<String>,
    q: Option<String>,
    output_format: OutputFormat,
    seed: u64,
    threads: usize,
}

#[derive(Debug, Serialize)]
struct FullReport {
    schema_version: u32,
    command: String,
    config: ConfigEcho,
    records: Vec<cliffspace::report::CheckRecord>,
    notes: Vec<String>,
    elapsed_ms: u128,
}

fn default_cap(n: usize, requested: Option<usize>) -> usize {
    requested.unwrap_or(if n <= 3 { 8 } else { 6 }).max(1)
}

fn main() {
    let cli = Cli::parse();
    let threads = cli
        .threads
        .or_else(|| {
            std::env::var("CLIFFSPACE_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(0);

    let started = Instant::now();
    let (report, config) = cliffspace::par::with_threads(threads, || run(&cli, threads));
    let elapsed_ms = started.elapsed().as_millis();

    let full = FullReport {
        schema_version: SCHEMA_VERSION,
        command: config.command.clone(),
        config,
        records: report.records.clone(),
        notes: report.notes.clone(),
        elapsed_ms,
    };

    let mut stdout = std::io::stdout().lock();
    match cli.output_format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut stdout, &full).expect("write JSON");
            writeln!(stdout).ok();
        }
        OutputFormat::Csv => {
            let mut writer = csv::Writer::from_writer(stdout);
            writer
                .write_record(["name", "status", "expected", "observed", "anchor"])
                .expect("write CSV header");
            for r in &full.records {
                writer
                    .write_record([
                        r.name.as_str(),
                        &r.status.to_string(),
                        r.expected.as_str(),
                        r.observed.as_str(),
                        r.anchor.as_str(),
                    ])
                    .expect("write CSV row");
            }
            writer.flush().expect("flush CSV");
        }
        OutputFormat::Text => {
            writeln!(stdout, "== {} ==", full.command).ok();
            for note in &full.notes {
                writeln!(stdout, "note: {note}").ok();
            }
            for r in &full.records {
                writeln!(
                    stdout,
                    "[{}] {} — observed: {} / expected: {} [{}]",
                    r.status, r.name, r.observed, r.expected, r.anchor
                )
                .ok();
            }
            writeln!(
                stdout,
                "{} checks: {} pass, {} fail, {} inconclusive ({} ms)",
                full.records.len(),
                report.count(Status::Pass),
                report.count(Status::Fail),
                report.count(Status::Inconclusive),
                elapsed_ms
            )
            .ok();
        }
    }

    std::process::exit(if report.passed() { 0 } else { 1 });
}

fn run(cli: &Cli, threads: usize) -> (Report, ConfigEcho) {
    let mut echo = ConfigEcho {
        command: String::new(),
        n: None,
        degree_cap: 0,
        family_path: None,
        q: None,
        output_format: cli.output_format,
        seed: cli.seed,
        threads,
    };
    let report = match &cli.command {
        Command::Maximal { n, degree_cap } => {
            let cap = default_cap(*n, *degree_cap);
            echo.command = "maximal".into();
            echo.n = Some(*n);
            echo.degree_cap = cap;
            maximal::suite(*n, cap)
        }
        Command::Minimal { family, degree_cap } => {
            echo.command = "minimal".into();
            echo.family_path = Some(family.display().to_string());
            match family::parse_family_file(family) {
                Ok(f) => {
                    let cap = default_cap(f.n(), *degree_cap);
                    echo.n = Some(f.n());
                    echo.degree_cap = cap;
                    minimal::suite(&Arc::new(f), cap, cap.min(6))
                }
                Err(message) => {
                    echo.degree_cap = degree_cap.unwrap_or(6);
                    let mut r = Report::new("minimal");
                    r.push(
                        "family file",
                        Status::Fail,
                        message,
                        "a valid family file",
                        "plumbing",
                    );
                    r
                }
            }
        }
        Command::Toric { n, q, degree_cap } => {
            let cap = default_cap(*n, *degree_cap);
            echo.command = "toric".into();
            echo.n = Some(*n);
            echo.q = Some(q.clone());
            echo.degree_cap = cap;
            match parse_rational(q) {
                Ok(q) => minimal::toric_suite(*n, &q, cap),
                Err(e) => {
                    let mut r = Report::new("toric");
                    r.push(
                        "deformation parameter",
                        Status::Fail,
                        e.to_string(),
                        "an integer or rational p/q",
                        "plumbing",
                    );
                    r
                }
            }
        }
        Command::VerifyAll { degree_cap } => {
            echo.command = "verify-all".into();
            echo.degree_cap = degree_cap.unwrap_or(8);
            verify_all(*degree_cap, cli.seed)
        }
    };
    (report, echo)
}

/// Every suite at its default caps, merged in declaration order.
fn verify_all(degree_cap: Option<usize>, seed: u64) -> Report {
    let mut report = Report::new("verify-all");
    for n in [2usize, 3] {
        report.merge(maximal::suite(n, default_cap(n, degree_cap)));
    }
    // n = 4 is restricted to the relation checks and series identities
    report.merge(maximal::relation_and_syzygy_report(4));
    report.check(
        "maximal n=4 Euler identity through degree 6",
        maximal::euler_identity_check(4, 6),
        "product ≡ 1",
        "product ≡ 1",
        "eq:terms",
    );

    for n in [2usize, 3, 4] {
        let family = Arc::new(QuadricFamily::toric(n));
        let cap = default_cap(n, degree_cap);
        report.merge(minimal::suite(&family, cap, cap.min(5)));
    }
    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(seed);
    for idx in 0..3 {
        let family = Arc::new(random_certified_family(3, &mut rng));
        let mut sub = minimal::suite(&family, 6, 4);
        sub.command = format!("minimal random #{idx}");
        report.merge(sub);
    }

    for n in [2usize, 3] {
        for q in [rat_int(1), rat_int(-1), rat_int(5), rat(-1, 2)] {
            report.merge(minimal::toric_suite(n, &q, 6));
        }
    }

    let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(seed);
    let families: Vec<Arc<QuadricFamily>> = vec![
        Arc::new(QuadricFamily::universal(2)),
        Arc::new(QuadricFamily::universal(3)),
        Arc::new(QuadricFamily::universal(4)),
        Arc::new(QuadricFamily::toric(2)),
        Arc::new(QuadricFamily::toric(3)),
        Arc::new(QuadricFamily::toric(4)),
        Arc::new(random_certified_family(3, &mut rng)),
        Arc::new(QuadricFamily::zero_family(3, 2)),
    ];
    report.merge(clifford::laws::law_report(&families, seed, 208));
    report
}
