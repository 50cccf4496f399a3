use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use chvol::hyperbolic::{bergman_distance, HomogeneousPoint};
use chvol::render::{self, format_sig};
use chvol::verify::{self, Module, SuiteReport, VerifyConfig};
use chvol::volume::{
    cgb_volume, gunther_ball_volume, log_gunther_ball_volume, log_unitary_volume,
    orbifold_bound, symmetry_order_bound_for, unitary_volume, wang_radius, BoundOptions,
    BoundReport, LinearValue,
};
use chvol::Error;

/// Volume bounds for complex hyperbolic orbifolds and the su(n,1) geometry
/// behind them.
#[derive(Debug, Parser)]
#[command(name = "chvol", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct Common {
    /// Complex dimension
    #[arg(short = 'n', global = true)]
    n: Option<usize>,
    /// Seed for every random sweep
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Samples per randomized check
    #[arg(long, global = true, default_value_t = 1000)]
    trials: usize,
    /// Random starts for the Wang constant search
    #[arg(long, global = true, default_value_t = 200)]
    samples: usize,
    /// Root-finder tolerance
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Use half the computed Wang radius instead of the fixed r0 = 0.1385
    #[arg(long, global = true)]
    use_computed_radius: bool,
    /// Significant digits in decimal output
    #[arg(long, global = true, default_value_t = 6,
          value_parser = clap::value_parser!(u8).range(1..=15))]
    digits: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Markdown,
    Plain,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// The volume bound C(n)
    Bound,
    /// C(n) for a range of n
    Table {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Least positive zero of Wang's function
    WangRadius {
        #[arg(long, default_value_t = 1.0)]
        c1: f64,
        #[arg(long, default_value_t = 1.0)]
        c2: f64,
    },
    /// Volume of an r-ball in the d-sphere of curvature k
    BallVolume {
        #[arg(long)]
        d: u64,
        #[arg(long)]
        k: f64,
        #[arg(long)]
        r: f64,
    },
    /// Volume of U(n)
    UnitaryVolume,
    /// Isometry group order bound from a volume
    SymmetryBound {
        #[arg(long, allow_negative_numbers = true)]
        volume: f64,
    },
    /// Isometry group order bound from an Euler characteristic
    EulerBound {
        #[arg(long, allow_negative_numbers = true)]
        chi: i64,
    },
    /// Bergman distance between two points given as `a+bi,...` lists or
    /// JSON `[[re,im],...]`
    Distance {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Run the verification suite
    Verify {
        /// Restrict to one or more modules
        #[arg(long)]
        module: Vec<String>,
    },
}

enum Failure {
    Input(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent { .. } | Error::Numerical(_) => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

struct Output {
    text: String,
    pass: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn need_n(c: &Common) -> Result<usize, Failure> {
    match c.n {
        Some(0) => Err(Error::InvalidDimension(0).into()),
        Some(n) => Ok(n),
        None => Err(Failure::Input("this command needs -n".into())),
    }
}

fn bound_options(c: &Common) -> BoundOptions {
    BoundOptions {
        use_computed_radius: c.use_computed_radius,
        tol: c.tol,
    }
}

fn ok(text: String) -> Result<Output, Failure> {
    Ok(Output { text, pass: true })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let c = &cli.common;
    let digits = c.digits as usize;
    if !(c.tol > 0.0 && c.tol.is_finite()) {
        return Err(Failure::Input(format!("tol must be positive, got {}", c.tol)));
    }
    match &cli.command {
        Command::Bound => {
            let r = orbifold_bound(need_n(c)?, &bound_options(c))?;
            ok(match c.format {
                Format::Json => pretty(&r),
                Format::Plain => render::plain_report(&r, digits),
                Format::Csv => render::csv(std::slice::from_ref(&r), digits),
                Format::Markdown => render::markdown(std::slice::from_ref(&r), digits),
            })
        }
        Command::Table { from, to } => {
            if *from == 0 || from > to {
                return Err(Failure::Input(format!("need 1 <= from <= to, got {from}..{to}")));
            }
            let reports = table(*from, *to, &bound_options(c))?;
            ok(match c.format {
                Format::Json => pretty(&reports),
                Format::Plain => render::plain_table(&reports, digits),
                Format::Csv => render::csv(&reports, digits),
                Format::Markdown => render::markdown(&reports, digits),
            })
        }
        Command::WangRadius { c1, c2 } => {
            let r = wang_radius(*c1, *c2, c.tol)?;
            ok(record(
                c.format,
                digits,
                &[
                    ("C1", json!(r.c1)),
                    ("C2", json!(r.c2)),
                    ("tol", json!(r.tol)),
                    ("root", json!(r.root)),
                    ("half_root", json!(r.root / 2.0)),
                    ("residual", json!(r.residual)),
                    ("guard", json!(r.guard)),
                    ("guard_ok", json!(r.guard_ok)),
                ],
            ))
        }
        Command::BallVolume { d, k, r } => {
            let v = gunther_ball_volume(*d, *k, *r)?;
            let lv = log_gunther_ball_volume(*d, *k, *r)?;
            ok(record(
                c.format,
                digits,
                &[
                    ("d", json!(d)),
                    ("k", json!(k)),
                    ("r", json!(r)),
                    ("L", json!((r * k.sqrt()).min(std::f64::consts::PI))),
                    ("V", linear(LinearValue::from_log(lv), v)),
                    ("log_V", json!(lv)),
                ],
            ))
        }
        Command::UnitaryVolume => {
            let n = need_n(c)?;
            let v = unitary_volume(n)?;
            let lv = log_unitary_volume(n)?;
            ok(record(
                c.format,
                digits,
                &[("n", json!(n)), ("vol", linear(v, f64::NAN)), ("log_vol", json!(lv))],
            ))
        }
        Command::SymmetryBound { volume } => {
            let n = need_n(c)?;
            let r = orbifold_bound(n, &bound_options(c))?;
            let b = symmetry_order_bound_for(*volume, &r)?;
            ok(integer_record(
                c.format,
                digits,
                b,
                &[("n", json!(n)), ("volume", json!(volume)), ("log_C", json!(r.log_C))],
            ))
        }
        Command::EulerBound { chi } => {
            let n = need_n(c)?;
            let vol = cgb_volume(n, *chi)?;
            let r = orbifold_bound(n, &bound_options(c))?;
            let b = symmetry_order_bound_for(vol, &r)?;
            ok(integer_record(
                c.format,
                digits,
                b,
                &[("n", json!(n)), ("chi", json!(chi)), ("volume", json!(vol))],
            ))
        }
        Command::Distance { z, w } => {
            let z = point(z)?;
            let w = point(w)?;
            if let Some(n) = c.n {
                if z.n() != n || w.n() != n {
                    return Err(Failure::Input(format!(
                        "points have {} and {} coordinates; -n {n} needs {}",
                        z.n() + 1,
                        w.n() + 1,
                        n + 1
                    )));
                }
            }
            let d = bergman_distance(&z, &w)?;
            ok(match c.format {
                Format::Plain => format!("{}\n", format_sig(d, digits)),
                f => record(
                    f,
                    digits,
                    &[
                        ("n", json!(z.n())),
                        ("z", serde_json::to_value(&z).expect("finite point")),
                        ("w", serde_json::to_value(&w).expect("finite point")),
                        ("distance", json!(d)),
                    ],
                ),
            })
        }
        Command::Verify { module } => {
            let modules = if module.is_empty() {
                Module::ALL.to_vec()
            } else {
                module
                    .iter()
                    .map(|m| m.parse::<Module>())
                    .collect::<Result<Vec<_>, _>>()?
            };
            let cfg = VerifyConfig {
                n: need_n(c)?,
                seed: c.seed,
                trials: c.trials,
                samples: c.samples,
            };
            let rep = verify::run(&cfg, &modules)?;
            let text = match c.format {
                Format::Json => pretty(&rep),
                Format::Plain => verify_plain(&rep, digits),
                Format::Csv => verify_csv(&rep, digits),
                Format::Markdown => verify_markdown(&rep, digits),
            };
            Ok(Output {
                text,
                pass: rep.pass,
            })
        }
    }
}

/// Reports for `from..=to`, computed on worker threads and merged in order.
fn table(from: usize, to: usize, opts: &BoundOptions) -> Result<Vec<BoundReport>, Error> {
    let ns: Vec<usize> = (from..=to).collect();
    let workers = std::thread::available_parallelism().map_or(1, |p| p.get()).min(ns.len());
    let chunk = ns.len().div_ceil(workers);
    let parts: Vec<Result<Vec<BoundReport>, Error>> = std::thread::scope(|s| {
        let handles: Vec<_> = ns
            .chunks(chunk)
            .map(|c| s.spawn(move || c.iter().map(|&n| orbifold_bound(n, opts)).collect()))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut out = Vec::with_capacity(ns.len());
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

fn point(s: &str) -> Result<HomogeneousPoint, Failure> {
    let t = s.trim();
    let p = if t.starts_with('[') {
        HomogeneousPoint::from_json(t)?
    } else {
        t.parse::<HomogeneousPoint>()?
    };
    Ok(p)
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn linear(v: LinearValue, direct: f64) -> Value {
    match v {
        LinearValue::Value(_) if direct.is_finite() => json!(direct),
        other => serde_json::to_value(other).expect("serializable"),
    }
}

fn cell(v: &Value, digits: usize) -> String {
    match v {
        Value::Number(x) => match (x.as_i64(), x.as_u64(), x.as_f64()) {
            (Some(i), _, _) => i.to_string(),
            (_, Some(u), _) => u.to_string(),
            (_, _, Some(f)) => format_sig(f, digits),
            _ => x.to_string(),
        },
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn record(format: Format, digits: usize, fields: &[(&str, Value)]) -> String {
    match format {
        Format::Json => {
            let map: serde_json::Map<String, Value> =
                fields.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
            pretty(&Value::Object(map))
        }
        Format::Csv => {
            let keys: Vec<&str> = fields.iter().map(|f| f.0).collect();
            let vals: Vec<String> = fields.iter().map(|f| csv_cell(&cell(&f.1, digits))).collect();
            format!("{}\n{}\n", keys.join(","), vals.join(","))
        }
        Format::Markdown => {
            let keys: Vec<&str> = fields.iter().map(|f| f.0).collect();
            let vals: Vec<String> = fields.iter().map(|f| cell(&f.1, digits)).collect();
            format!(
                "| {} |\n|{}\n| {} |\n",
                keys.join(" | "),
                " --- |".repeat(keys.len()),
                vals.join(" | ")
            )
        }
        Format::Plain => fields
            .iter()
            .map(|(k, v)| format!("{k}: {}\n", cell(v, digits)))
            .collect(),
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Plain output is the bare integer; other formats carry the inputs too.
fn integer_record(format: Format, digits: usize, bound: u128, fields: &[(&str, Value)]) -> String {
    if format == Format::Plain {
        return format!("{bound}\n");
    }
    let mut all = fields.to_vec();
    // u128 does not fit a JSON number in general
    all.push((
        "bound",
        u64::try_from(bound).map_or_else(|_| json!(bound.to_string()), |b| json!(b)),
    ));
    record(format, digits, &all)
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn measured(c: &chvol::report::CheckRecord, digits: usize) -> String {
    match (c.max_residual, c.max_found) {
        (Some(r), _) => format!("residual={}", format_sig(r, digits)),
        (_, Some(f)) => format!("found={}", format_sig(f, digits)),
        _ => String::new(),
    }
}

fn verify_plain(rep: &SuiteReport, digits: usize) -> String {
    let mut out = format!("verification n={} seed={} trials={}\n", rep.n, rep.seed, rep.trials);
    for m in &rep.modules {
        out.push_str(&format!("[{}] {}\n", m.module, verdict(m.pass)));
        for c in &m.checks {
            let metric = c.metric.as_deref().map(|m| format!(" metric={m}")).unwrap_or_default();
            out.push_str(&format!(
                "  {} {} n={}{metric} trials={} {} bound={}\n",
                verdict(c.pass),
                c.check,
                c.n,
                c.trials,
                measured(c, digits),
                format_sig(c.bound, digits)
            ));
        }
    }
    if !rep.discrepancies.is_empty() {
        out.push_str("paper discrepancies:\n");
        for d in &rep.discrepancies {
            out.push_str(&format!(
                "  [{}] {}\n    printed: {}\n    computed: {}\n",
                d.module, d.location, d.printed, d.computed
            ));
        }
    }
    out.push_str(&format!("overall: {}\n", verdict(rep.pass)));
    out
}

fn verify_rows(rep: &SuiteReport, digits: usize) -> Vec<Vec<String>> {
    rep.modules
        .iter()
        .flat_map(|m| {
            m.checks.iter().map(move |c| {
                vec![
                    m.module.to_string(),
                    c.check.clone(),
                    c.n.to_string(),
                    c.metric.clone().unwrap_or_default(),
                    c.trials.to_string(),
                    c.max_residual.or(c.max_found).map_or(String::new(), |v| format_sig(v, digits)),
                    format_sig(c.bound, digits),
                    c.pass.to_string(),
                ]
            })
        })
        .collect()
}

const VERIFY_COLUMNS: [&str; 8] = ["module", "check", "n", "metric", "trials", "value", "bound", "pass"];

fn verify_csv(rep: &SuiteReport, digits: usize) -> String {
    let mut out = VERIFY_COLUMNS.join(",") + "\n";
    for r in verify_rows(rep, digits) {
        let cells: Vec<String> = r.iter().map(|s| csv_cell(s)).collect();
        out.push_str(&(cells.join(",") + "\n"));
    }
    out
}

fn verify_markdown(rep: &SuiteReport, digits: usize) -> String {
    let mut out = format!("| {} |\n|{}\n", VERIFY_COLUMNS.join(" | "), " --- |".repeat(VERIFY_COLUMNS.len()));
    for r in verify_rows(rep, digits) {
        let cells: Vec<String> = r.iter().map(|s| s.replace('|', "\\|")).collect();
        out.push_str(&format!("| {} |\n", cells.join(" | ")));
    }
    if !rep.discrepancies.is_empty() {
        out.push_str("\n### Paper discrepancies\n\n");
        for d in &rep.discrepancies {
            out.push_str(&format!(
                "- **{}** ({}): printed {}; computed {}\n",
                d.location, d.module, d.printed, d.computed
            ));
        }
    }
    out.push_str(&format!("\n**overall: {}**\n", verdict(rep.pass)));
    out
}
