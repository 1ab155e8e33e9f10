use std::path::PathBuf;
use std::process::ExitCode;
use std::thread;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use quintic_core::cache::load_or_solve;
use quintic_core::modsolver::{invariants, verify_pfih, verify_solution, SolutionBundle, DEFAULT_ORDER, SERIES_NAMES};
use quintic_core::numfield::format_rational;
use quintic_core::perioddom::{verify_group, verify_tau, DEFAULT_INSTANCES, DEFAULT_SEED};
use quintic_core::report::Report;
use quintic_core::series::{PuiseuxSeries, Sector};
use quintic_core::symca::verify_algebra;
use quintic_core::{gmconn, Error};

/// Exact expansions and verification suites for the mirror quintic with a
/// pair of Deligne conics.
#[derive(Parser, Debug)]
#[command(name = "quintic", version)]
struct Cli {
    /// Orientation sign of the inhomogeneous term (+1 or -1).
    #[arg(long, global = true, default_value_t = gmconn::EPSILON, value_parser = parse_epsilon, allow_negative_numbers = true)]
    epsilon: i32,

    /// Directory for cached solution bundles.
    #[arg(long, global = true, env = "QUINTIC_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the series of the moduli coordinates and potentials.
    Expand {
        /// Truncation order N in x = q^(1/10); series are exact through x^N.
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: u32,
        /// Comma-separated subset of s0..s8, Y, F.
        #[arg(long, value_delimiter = ',', default_value = "s0,s1,s2,s3,s4,s5,s6,s7,s8,Y,F")]
        vars: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print instanton numbers of one sector.
    Invariants {
        #[arg(long)]
        sector: Sector,
        #[arg(long)]
        max_degree: u32,
        /// Truncation order; defaults to the smallest order that suffices.
        #[arg(long)]
        order: Option<u32>,
    },
    /// Run verification suites and print one PASS/FAIL line per check.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, ValueEnum)]
enum Suite {
    Gm,
    Vf,
    Pf,
    Group,
    Tau,
    Series,
    Algebra,
    All,
}

const ALL_SUITES: [Suite; 7] = [
    Suite::Gm,
    Suite::Vf,
    Suite::Pf,
    Suite::Group,
    Suite::Tau,
    Suite::Series,
    Suite::Algebra,
];

fn parse_epsilon(s: &str) -> Result<i32, String> {
    match s {
        "1" | "+1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(format!("epsilon must be 1 or -1, got {s:?}")),
    }
}

fn bundle(cli: &Cli, order: u32) -> Result<SolutionBundle, Error> {
    // the integrator needs at least one order beyond the seeds
    let b = load_or_solve(cli.cache_dir.as_deref(), order.max(1), cli.epsilon)?;
    b.truncated(order)
}

fn frac_text(m: u32, ram: u32) -> String {
    format!("{m}/{ram}")
}

fn series_json(name: &str, s: &PuiseuxSeries) -> Value {
    let terms: Vec<Value> = s
        .terms()
        .map(|(m, c)| {
            json!({
                "exp": frac_text(m, s.ram()),
                "coeff": {"rat": format_rational(&c.rat), "irr": format_rational(&c.irr)},
            })
        })
        .collect();
    json!({"name": name, "trunc": frac_text(s.trunc(), s.ram()), "terms": terms})
}

fn expand(cli: &Cli, order: u32, vars: &[String], format: Format) -> Result<String, Error> {
    if let Some(bad) = vars.iter().find(|v| !SERIES_NAMES.contains(&v.as_str())) {
        return Err(Error::Input(format!("unknown series {bad:?}; expected one of {}", SERIES_NAMES.join(","))));
    }
    let b = bundle(cli, order)?;
    let get = |v: &String| b.series(v).expect("validated name");
    Ok(match format {
        Format::Text => vars.iter().map(|v| format!("{v} = {}\n", get(v))).collect(),
        Format::Json => {
            let series: Vec<Value> = vars.iter().map(|v| series_json(v, get(v))).collect();
            let doc = json!({"order": order, "epsilon": cli.epsilon, "series": series});
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json"))
        }
    })
}

fn required_order(sector: Sector, max_degree: u32) -> u32 {
    match sector {
        Sector::Closed => 10 * max_degree,
        Sector::Open => 5 * (max_degree - (1 - max_degree % 2)),
    }
}

fn run_suite(cli: &Cli, suite: Suite) -> Result<Report, Error> {
    match suite {
        Suite::Gm => gmconn::verify_gm(cli.epsilon),
        Suite::Vf => gmconn::verify_vector_field(&gmconn::build_connection(cli.epsilon)?),
        Suite::Pf => Ok(verify_pfih(15, 10)),
        Suite::Group => verify_group(DEFAULT_SEED, DEFAULT_INSTANCES),
        Suite::Tau => verify_tau(DEFAULT_SEED, DEFAULT_INSTANCES),
        Suite::Series => verify_solution(&bundle(cli, DEFAULT_ORDER)?),
        Suite::Algebra => Ok(verify_algebra(DEFAULT_SEED, DEFAULT_INSTANCES)),
        Suite::All => unreachable!("expanded by the caller"),
    }
}

fn suite_name(s: Suite) -> String {
    s.to_possible_value().expect("named").get_name().to_string()
}

/// Runs the suites concurrently and prints them in a fixed order.
fn verify(cli: &Cli, suite: Suite) -> Result<bool, Error> {
    let suites: Vec<Suite> = if suite == Suite::All { ALL_SUITES.to_vec() } else { vec![suite] };
    let results: Vec<Result<Report, Error>> = thread::scope(|scope| {
        let handles: Vec<_> = suites.iter().map(|&s| scope.spawn(move || run_suite(cli, s))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    let (mut total, mut failed) = (0, 0);
    for (s, r) in suites.iter().zip(results) {
        let r = r?;
        println!("# {}", suite_name(*s));
        print!("{r}");
        total += r.checks.len();
        failed += r.failures().count();
    }
    println!("# {total} checks, {failed} failed");
    Ok(failed == 0)
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Input(_) | Error::Parse { .. } | Error::Cache { .. } | Error::Precision { .. } | Error::Io(_) => 2,
        _ => 1,
    }
}

fn run(cli: &Cli) -> Result<bool, Error> {
    match &cli.command {
        Command::Expand { order, vars, format } => {
            print!("{}", expand(cli, *order, vars, *format)?);
            Ok(true)
        }
        Command::Invariants { sector, max_degree, order } => {
            if *max_degree == 0 {
                return Err(Error::Input("max degree must be at least 1".into()));
            }
            let order = order.unwrap_or_else(|| required_order(*sector, *max_degree));
            let table = invariants(&bundle(cli, order)?, *sector, *max_degree)?;
            print!("{table}");
            Ok(true)
        }
        Command::Verify { suite } => verify(cli, *suite),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
