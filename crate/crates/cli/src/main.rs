//! `s2kit`: run registry examples and property suites, print reports.
//!
//! Exit status: 0 when every claim passes (or is implied/informational),
//! 1 on any claim mismatch, 2 on bad input.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use s2kit::families::{f_family_report, parse_probes, FFamilyOptions, FFamilySpec};
use s2kit::field::FieldSpec;
use s2kit::registry::{Registry, RunConfig};
use s2kit::report::{Report, SCHEMA_VERSION};
use s2kit::semigroup::{parse_t_polys, semigroup_report, subalgebra_report, DEFAULT_MARGIN, DEFAULT_PRECISION};
use s2kit::suite::{run_suite, DEFAULT_TRIALS};
use s2kit::Error;
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "s2kit", version, about = "Verify worked examples of pullback rings, S2-ifications and trace ideals")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Coefficient field: `q` or `fp:<p>`. Overrides the registry field of
    /// examples that have one.
    #[arg(long, global = true)]
    field: Option<FieldSpec>,
    /// Degree bound for bounded certificates (default: per computation).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    degree_bound: Option<u32>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS, value_parser = at_least_one)]
    trials: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run registry examples by id, or `all`.
    Verify {
        #[arg(required = true)]
        ids: Vec<String>,
        /// Registry file to use instead of the built-in one.
        #[arg(long)]
        registry: Option<PathBuf>,
    },
    /// List registry ids.
    List {
        #[arg(long)]
        registry: Option<PathBuf>,
    },
    /// Run the seeded property suites.
    Suite,
    /// Report on the family of primes P_i = (x_j : j in F_i).
    Family {
        #[arg(long)]
        n: usize,
        /// Subsets separated by `;`, entries by `,`, e.g. `1,2,3,4;3,4,5,6;5,6,1,2`.
        #[arg(long)]
        sets: String,
        /// Homogeneous elements to test `A:B = sum a_i B` with.
        #[arg(long, value_delimiter = ';')]
        probes: Vec<String>,
    },
    /// Invariants of a numerical semigroup.
    Semigroup {
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
    },
    /// Value semigroup and conductor of a subalgebra of k[[t]].
    Subalgebra {
        /// Comma-separated polynomials in `t`, e.g. `t^2+t^3,t^4,t^6`.
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        prec: usize,
        #[arg(long, default_value_t = DEFAULT_MARGIN)]
        margin: usize,
    },
}

fn at_least_one(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn load_registry(path: &Option<PathBuf>) -> Result<Registry, Error> {
    match path {
        None => Ok(Registry::embedded()),
        Some(p) => {
            let src = std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?;
            Registry::from_json(&src)
        }
    }
}

fn parse_sets(src: &str) -> Result<Vec<Vec<usize>>, Error> {
    src.split(';')
        .map(|set| {
            set.split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad index `{x}` in `{set}`"))))
                .collect()
        })
        .collect()
}

fn run(cli: &Cli) -> Result<Option<Vec<Report>>, Error> {
    let g = &cli.global;
    let cfg = RunConfig { field: g.field, degree_bound: g.degree_bound, precision: None };
    let reports = match &cli.cmd {
        Command::Verify { ids, registry } => load_registry(registry)?.run(ids, &cfg)?,
        Command::List { registry } => {
            let reg = load_registry(registry)?;
            let mut out = String::new();
            for e in &reg.examples {
                out.push_str(&format!("{}\t{}\n", e.id, e.title));
            }
            emit(&out);
            return Ok(None);
        }
        Command::Suite => run_suite(g.seed, g.trials)?,
        Command::Family { n, sets, probes } => {
            let spec = FFamilySpec::new(*n, parse_sets(sets)?)?;
            let opts = FFamilyOptions { probes: parse_probes(&spec, probes)?, degree_bound: g.degree_bound };
            vec![f_family_report("family", &spec, g.field.unwrap_or_default(), &opts)?]
        }
        Command::Semigroup { gens } => vec![semigroup_report("semigroup", gens)?],
        Command::Subalgebra { gens, prec, margin } => vec![subalgebra_report(
            "subalgebra",
            &parse_t_polys(gens)?,
            g.field.unwrap_or_default(),
            *prec,
            *margin,
            &[],
            &[],
        )?],
    };
    Ok(Some(reports))
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.global.jobs {
        // only fails if a pool already exists, which cannot happen this early
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    let reports = match run(&cli) {
        Ok(Some(r)) => r,
        Ok(None) => return ExitCode::SUCCESS,
        Err(e @ Error::MethodDisagreement(_)) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let ok = reports.iter().all(|r| r.ok);
    let text = match cli.global.format {
        Format::Json => {
            let doc = json!({ "schema_version": SCHEMA_VERSION, "ok": ok, "reports": reports });
            serde_json::to_string_pretty(&doc).expect("reports serialize") + "\n"
        }
        Format::Table => {
            let mut out: String = reports.iter().map(|r| r.to_table() + "\n").collect();
            let failed: Vec<&str> = reports.iter().filter(|r| !r.ok).map(|r| r.id.as_str()).collect();
            if failed.is_empty() {
                out += &format!("all {} report(s) ok\n", reports.len());
            } else {
                out += &format!("FAILED: {}\n", failed.join(", "));
            }
            out
        }
    };
    emit(&text);
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
