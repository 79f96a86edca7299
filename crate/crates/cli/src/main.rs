use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use daha_wheel::compositions::{enumerate_box, BoxFilter, Composition};
use daha_wheel::macdonald::{
    e_by_route, e_generic, e_specialized, set_disk_cache, DiskCache, Route, CACHE_ENV,
};
use daha_wheel::polyrep::{poly_to_json, spec_poly_to_json};
use daha_wheel::scalars::ParamSpec;
use daha_wheel::verify::{configure_threads, run_suite, Suite, VerifyConfig};
use daha_wheel::wheel_ideal::{Direction, Report};
use daha_wheel::Error;

#[derive(Parser)]
#[command(
    name = "daha-wheel",
    version,
    about = "Exact DAHA, Macdonald polynomial and wheel-ideal computations"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Directory for cached polynomials (WHEEL_CACHE_DIR takes precedence)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Ignore any cache directory
    #[arg(long, global = true)]
    no_cache: bool,
    /// Write the result here instead of stdout; a timing log goes next to it
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Worker threads (default: all cores)
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Projection,
    Intertwiners,
    Both,
}

#[derive(Args)]
struct Point {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
}

impl Point {
    fn spec(&self) -> Result<Option<ParamSpec>, Error> {
        match (self.k, self.r) {
            (Some(k), Some(r)) => ParamSpec::new(self.n, k, r).map(Some),
            (None, None) => Ok(None),
            _ => Err(Error::InvalidParams("give both --k and --r".into())),
        }
    }

    fn params_json(&self) -> Value {
        json!({"n": self.n, "k": self.k, "r": self.r})
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute E_λ, generic or specialized
    ComputeE {
        #[command(flatten)]
        point: Point,
        /// Comma-separated weight, e.g. 1,0,-2
        #[arg(long, allow_hyphen_values = true)]
        lam: String,
        #[arg(long, value_enum, default_value_t = RouteArg::Projection)]
        route: RouteArg,
        /// Specialize at t^{k+1} q^{r-1} = 1 (needs --k and --r)
        #[arg(long)]
        spec: bool,
    },
    /// Run a verification suite
    Verify {
        #[arg(long)]
        suite: String,
        #[command(flatten)]
        point: Point,
        #[arg(long = "box", default_value_t = 2, allow_hyphen_values = true)]
        bound: i64,
        /// Random operator samples and duality pairs
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Index order forced by a zero step in multi-wheel chains
        #[arg(long, default_value = "ascending")]
        direction: Direction,
    },
    /// List the weights of a box passing a filter
    Enumerate {
        /// all, B, S, S', or S_m with m >= 1
        #[arg(long)]
        filter: BoxFilter,
        #[command(flatten)]
        point: Point,
        #[arg(long = "box", allow_hyphen_values = true)]
        bound: i64,
    },
}

/// Failure classes mapped to the exit-code contract.
enum Failure {
    /// a mathematical check failed
    Check(Value),
    /// bad invocation or I/O
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::PoleAtSpecialization { .. }
            | Error::WheelViolation(_)
            | Error::OrderViolation(_) => Failure::Check(json!({"error": e.to_string()})),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn parse_lambda(s: &str, n: usize) -> Result<Composition, Failure> {
    let v: Result<Vec<i64>, _> = s.split(',').map(|x| x.trim().parse::<i64>()).collect();
    let v = v.map_err(|e| Failure::Usage(format!("--lam {s:?}: {e}")))?;
    if v.len() != n {
        return Err(Failure::Usage(format!(
            "--lam has {} entries but n = {n}",
            v.len()
        )));
    }
    Ok(v)
}

fn check_box(bound: i64) -> Result<(), Failure> {
    if bound < 0 {
        return Err(Failure::Usage(format!(
            "--box must be nonnegative, got {bound}"
        )));
    }
    Ok(())
}

/// Rendered result plus whether every check passed.
struct Outcome {
    json: Value,
    text: String,
    ok: bool,
}

fn compute_e(point: &Point, lam: &str, route: RouteArg, spec: bool) -> Result<Outcome, Failure> {
    let lambda = parse_lambda(lam, point.n)?;
    let p = point.spec()?;
    let route_name = match route {
        RouteArg::Projection => "projection",
        RouteArg::Intertwiners => "intertwiners",
        RouteArg::Both => "both",
    };
    let mut doc = json!({"lambda": lambda, "route": route_name, "params": point.params_json()});
    let text;
    if spec {
        let p = p.ok_or_else(|| Failure::Usage("--spec needs --k and --r".into()))?;
        let f = match e_specialized(&lambda, &p) {
            Ok(f) => f,
            Err(e @ Error::PoleAtSpecialization { .. }) => {
                doc["error"] = json!(e.to_string());
                if let Error::PoleAtSpecialization { at } = &e {
                    doc["pole_terms"] = json!(at);
                }
                return Ok(Outcome {
                    text: e.to_string(),
                    json: doc,
                    ok: false,
                });
            }
            Err(e) => return Err(e.into()),
        };
        doc["poly"] = spec_poly_to_json(&f, &p);
        text = f.to_string();
        return Ok(Outcome {
            json: doc,
            text,
            ok: true,
        });
    }
    let mut ok = true;
    match route {
        RouteArg::Projection => {
            let f = e_generic(&lambda)?;
            doc["poly"] = poly_to_json(&f);
            text = f.to_string();
        }
        RouteArg::Intertwiners => {
            let f = e_by_route(&lambda, Route::Intertwiners)?;
            doc["poly"] = poly_to_json(&f);
            text = f.to_string();
        }
        RouteArg::Both => {
            let a = e_generic(&lambda)?;
            let b = e_by_route(&lambda, Route::Intertwiners)?;
            let agree = *a == b;
            doc["agree"] = json!(agree);
            if agree {
                doc["poly"] = poly_to_json(&a);
                text = format!("{a}\nagree: true");
            } else {
                doc["projection"] = poly_to_json(&a);
                doc["intertwiners"] = poly_to_json(&b);
                text = format!("projection: {a}\nintertwiners: {b}\nagree: false");
                ok = false;
            }
        }
    }
    Ok(Outcome {
        json: doc,
        text,
        ok,
    })
}

fn report_text(r: &Report) -> String {
    let mut s = format!(
        "n = {}{} box = {}: {} checks, {} failed\n",
        r.params.n,
        match (r.params.k, r.params.r) {
            (Some(k), Some(rr)) => format!(" k = {k} r = {rr}"),
            _ => String::new(),
        },
        r.bound,
        r.checks.len(),
        r.failures().count()
    );
    for c in r.failures() {
        s.push_str(&format!(
            "FAIL {} {:?} {}\n",
            c.name,
            c.lambda.as_deref().unwrap_or(&[]),
            c.witness.as_deref().unwrap_or("")
        ));
    }
    let c = &r.counts;
    if c.b.is_some() || c.s.is_some() || c.dim.is_some() {
        s.push_str(&format!(
            "counts: B = {:?}, S = {:?}, dim = {:?}\n",
            c.b, c.s, c.dim
        ));
    }
    s
}

fn verify(
    suite: &str,
    point: &Point,
    bound: i64,
    samples: usize,
    seed: u64,
    direction: Direction,
) -> Result<Outcome, Failure> {
    check_box(bound)?;
    let suite: Suite = suite.parse().map_err(Failure::Usage)?;
    let cfg = VerifyConfig {
        n: point.n,
        point: point.spec()?.map(|p| (p.k(), p.r())),
        bound,
        samples,
        seed,
        direction,
    };
    let reports = run_suite(suite, &cfg)?;
    let ok = reports.iter().all(Report::passed);
    let json = if reports.len() == 1 {
        reports[0].to_json()
    } else {
        Value::Array(reports.iter().map(Report::to_json).collect())
    };
    let text = reports
        .iter()
        .map(report_text)
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Outcome { json, text, ok })
}

fn enumerate(filter: BoxFilter, point: &Point, bound: i64) -> Result<Outcome, Failure> {
    check_box(bound)?;
    let p = match (point.spec()?, &filter) {
        (Some(p), _) => p,
        // the unfiltered box does not depend on the specialization
        (None, BoxFilter::All) => ParamSpec::new(point.n, 1, 2)?,
        (None, _) => return Err(Failure::Usage(format!("filter {filter} needs --k and --r"))),
    };
    let weights = enumerate_box(&p, bound, filter);
    let json = json!({
        "n": point.n, "k": point.k, "r": point.r, "M_box": bound,
        "filter": filter.to_string(), "count": weights.len(), "weights": weights,
    });
    let mut text: Vec<String> = weights.iter().map(|w| format!("{w:?}")).collect();
    text.push(format!("count: {}", weights.len()));
    Ok(Outcome {
        json,
        text: text.join("\n"),
        ok: true,
    })
}

fn setup_cache(g: &Global) {
    if g.no_cache {
        set_disk_cache(None);
        return;
    }
    let dir = std::env::var_os(CACHE_ENV)
        .map(PathBuf::from)
        .or_else(|| g.cache_dir.clone());
    set_disk_cache(dir.map(DiskCache::new));
}

fn emit(g: &Global, body: &str, log: &str) -> Result<(), Failure> {
    match &g.output {
        None => {
            let mut out = std::io::stdout().lock();
            writeln!(out, "{body}").map_err(|e| Failure::Usage(e.to_string()))?;
        }
        Some(path) => {
            std::fs::write(path, format!("{body}\n"))
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let mut side = path.clone().into_os_string();
            side.push(".log");
            std::fs::write(&side, log).map_err(|e| Failure::Usage(e.to_string()))?;
        }
    }
    Ok(())
}

fn epoch_secs() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.global.threads {
        configure_threads(t as usize);
    }
    setup_cache(&cli.global);
    let started = epoch_secs();
    let clock = Instant::now();
    let result = match &cli.cmd {
        Cmd::ComputeE {
            point,
            lam,
            route,
            spec,
        } => compute_e(point, lam, *route, *spec),
        Cmd::Verify {
            suite,
            point,
            bound,
            samples,
            seed,
            direction,
        } => verify(suite, point, *bound, *samples, *seed, *direction),
        Cmd::Enumerate {
            filter,
            point,
            bound,
        } => enumerate(*filter, point, *bound),
    };
    let log = format!(
        "started {started}\nelapsed_ms {}\n",
        clock.elapsed().as_millis()
    );
    let outcome = match result {
        Ok(o) => o,
        Err(Failure::Check(v)) => Outcome {
            text: v["error"].as_str().unwrap_or("").to_string(),
            json: v,
            ok: false,
        },
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let body = match cli.global.format {
        Format::Json => serde_json::to_string_pretty(&outcome.json).expect("json"),
        Format::Text => outcome.text,
    };
    if let Err(Failure::Usage(msg)) = emit(&cli.global, &body, &log) {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
