use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use griess_forge::algebra::commutant::Node;
use griess_forge::report::{self, Bundle, InvolutionTarget, Report, SCHEMA};

#[derive(Parser)]
#[command(name = "griess-forge", version, about = "Exact checks on Griess algebras of sqrt2-scaled root lattice VOAs")]
struct Cli {
    /// Also write markdown tables.
    #[arg(long, global = true)]
    md: bool,
    /// Skip the Leech shell enumeration and the 156-dimensional property run.
    #[arg(long, global = true)]
    skip_slow: bool,
    /// Directory for report files.
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Every suite.
    ReportAll,
    /// Invariants of a named lattice or a lattice file.
    Lattice {
        name: String,
        #[arg(long)]
        short_vectors: Option<i64>,
    },
    /// Fusion product of two minimal-model modules.
    Fusion { m: u32, r1: u32, s1: u32, r2: u32, s2: u32 },
    /// Commutant Griess algebra at an extended E6 node.
    Commutant { node: Node },
    /// Involution orders at a node or on the nine-vector E8 orbit.
    Involutions { target: String },
    /// Niemeier and Leech lattice chain.
    Leech {
        #[arg(long)]
        verify: bool,
    },
    /// SU(3) matrices and the E8 triple.
    Appendix {
        #[arg(long)]
        verify: bool,
    },
    /// The 3A-algebra.
    U3a {
        #[arg(long)]
        from_orbit: bool,
    },
}

fn configure_threads() -> Result<(), String> {
    if let Ok(v) = std::env::var("GRIESS_FORGE_THREADS") {
        let n: usize = v.parse().map_err(|_| format!("GRIESS_FORGE_THREADS must be a positive integer, got {v:?}"))?;
        if n == 0 {
            return Err("GRIESS_FORGE_THREADS must be positive".into());
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn print(r: &Report) {
    for c in &r.checks {
        println!("[{}] {}", r.suite, c.line());
    }
}

fn write(out: &PathBuf, stem: &str, json: &str, md: Option<String>) -> std::io::Result<()> {
    std::fs::create_dir_all(out)?;
    std::fs::write(out.join(format!("{stem}.json")), json)?;
    if let Some(m) = md {
        std::fs::write(out.join(format!("{stem}.md")), m)?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let bundle = match &cli.command {
        Command::ReportAll => report::report_all(cli.skip_slow),
        Command::Lattice { name, short_vectors } => {
            if report::named_lattice(name).is_err() {
                eprintln!("error: unknown lattice {name}");
                return ExitCode::from(2);
            }
            single(report::lattice_suite(name, *short_vectors))
        }
        Command::Fusion { m, r1, s1, r2, s2 } => {
            if griess_forge::minimal_models::ModuleLabel::new(*m, *r1, *s1).is_err() || griess_forge::minimal_models::ModuleLabel::new(*m, *r2, *s2).is_err() {
                eprintln!("error: invalid module labels");
                return ExitCode::from(2);
            }
            single(report::fusion_suite(*m, (*r1, *s1), (*r2, *s2)))
        }
        Command::Commutant { node } => single(report::commutant(*node)),
        Command::Involutions { target } => match target.parse::<InvolutionTarget>() {
            Ok(t) => single(report::involutions_suite(t)),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
        Command::Leech { verify } => single(report::leech_suite(*verify && !cli.skip_slow)),
        Command::Appendix { .. } => single(report::appendix_suite()),
        Command::U3a { from_orbit } => single(report::u3a_suite(*from_orbit)),
    };
    for r in &bundle.reports {
        print(r);
    }
    let stem = match &cli.command {
        Command::ReportAll => "report-all".to_string(),
        _ => bundle.reports[0].suite.clone(),
    };
    let json = serde_json::to_string_pretty(&bundle).expect("report serializes");
    let md = cli.md.then(|| bundle.reports.iter().map(Report::to_markdown).collect::<Vec<_>>().join("\n"));
    if let Err(e) = write(&cli.out, &stem, &json, md) {
        eprintln!("error: cannot write reports: {e}");
        return ExitCode::from(2);
    }
    let failed: usize = bundle.reports.iter().map(|r| r.failures().len()).sum();
    println!("{} checks, {} failed", bundle.reports.iter().map(|r| r.checks.len()).sum::<usize>(), failed);
    if bundle.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn single(r: Report) -> Bundle {
    Bundle { schema: SCHEMA, reports: vec![r] }
}
