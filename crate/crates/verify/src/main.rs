use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sgsf_basis::{evaluate, evaluate_scaled, parse_half, FamilyId, MultiIndex};
use sgsf_transforms::{analyze, synthesize, QuadPlan};
use sgsf_verify::io::{coeffs_json, read_coeffs, read_samples, write_table};
use sgsf_verify::{emit_report, parse_window, run_suite, Format, Suite, SuiteConfig, VerifyError};

/// Exit status for a run that completed with failing checks.
const EXIT_FAILED: u8 = 1;
/// Exit status for bad input or configuration.
const EXIT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "sgsf", version, about = "Special-function bases, their algebras and a verification battery")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one basis function at one point.
    ///
    /// VALUES are the quantum numbers in component order followed by the
    /// point in natural coordinates, e.g. `sgsf eval sph-y 3 -2 0.5 1.0`.
    /// Half-integers may be written `3/2` or `1.5`. Options go before the
    /// values, since anything after the family is read as a value.
    Eval {
        family: String,
        #[arg(long)]
        alpha: Option<f64>,
        /// Multiply by the orthonormalizing factor.
        #[arg(long)]
        scaled: bool,
        #[arg(allow_hyphen_values = true, required = true)]
        values: Vec<String>,
    },
    /// Quadrature nodes and weights of the plan for a window, as CSV.
    Nodes(PlanArgs),
    /// Project samples taken at the plan nodes onto the window.
    Analyze {
        #[command(flatten)]
        plan: PlanArgs,
        /// CSV with the coordinate columns then `re,im`, one row per node in
        /// the order `sgsf nodes` prints them.
        #[arg(long)]
        samples: PathBuf,
    },
    /// Evaluate a coefficient file at points, as CSV.
    Synthesize {
        #[arg(long)]
        coeffs: PathBuf,
        /// CSV with the coordinate columns.
        #[arg(long, conflicts_with = "plan")]
        points: Option<PathBuf>,
        /// Evaluate at the nodes of the plan for the coefficient window.
        #[arg(long)]
        plan: bool,
    },
    /// Run a verification suite and emit its report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct PlanArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    alpha: Option<f64>,
    /// Leading quantum-number bound, e.g. `j<=8` or `|m|<=16`.
    #[arg(long)]
    window: String,
    /// Gauss order on every axis instead of the exact orders.
    #[arg(long)]
    quad_order: Option<usize>,
}

impl PlanArgs {
    fn build(&self) -> Result<(FamilyId, sgsf_algebra::Window, QuadPlan), VerifyError> {
        let family = FamilyId::from_tag(&self.family, self.alpha)?;
        let window = parse_window(family, &self.window)?;
        let plan = match self.quad_order {
            Some(n) => QuadPlan::new(family, &vec![n; family.dimension()])?,
            None => QuadPlan::for_window(family, &window)?,
        };
        Ok((family, window, plan))
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    /// JSON run configuration; flags given here override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    family: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    #[arg(long)]
    algebra: Option<String>,
    #[arg(long)]
    window: Option<String>,
    #[arg(long)]
    quad_order: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    format: Option<String>,
    /// Record the wall-clock runtime in the report.
    #[arg(long)]
    timing: bool,
}

impl VerifyArgs {
    fn config(&self) -> Result<SuiteConfig, VerifyError> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| VerifyError::Io {
                    path: path.clone(),
                    message: e.to_string(),
                })?;
                serde_json::from_str(&text).map_err(|e| VerifyError::InvalidConfig(format!("{}: {e}", path.display())))?
            }
            None => SuiteConfig::default(),
        };
        if self.config.is_none() || self.suite != "all" {
            cfg.suite = self.suite.parse::<Suite>()?;
        }
        macro_rules! take {
            ($($f:ident),*) => { $( if self.$f.is_some() { cfg.$f = self.$f.clone(); } )* };
        }
        take!(family, alpha, algebra, window, quad_order, tol, jobs, out);
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        if let Some(t) = self.trials {
            cfg.trials = t;
        }
        if let Some(s) = self.samples {
            cfg.samples = s;
        }
        if let Some(f) = &self.format {
            cfg.format = f.parse::<Format>()?;
        }
        cfg.timing |= self.timing;
        Ok(cfg)
    }
}

fn eval(family: &str, alpha: Option<f64>, scaled: bool, values: &[String]) -> Result<String, VerifyError> {
    let family = FamilyId::from_tag(family, alpha)?;
    let (arity, dim) = (family.arity(), family.dimension());
    if values.len() != arity + dim {
        return Err(VerifyError::Input(format!(
            "{} takes {} quantum numbers ({}) and {} coordinates ({}), got {} values",
            family.tag(),
            arity,
            family.component_names().join(", "),
            dim,
            family.coordinate_names().join(", "),
            values.len()
        )));
    }
    let mut comps = Vec::with_capacity(arity);
    for v in &values[..arity] {
        let doubled = parse_half(v)?;
        comps.push(if family.doubled() {
            doubled
        } else if doubled % 2 == 0 {
            doubled / 2
        } else {
            return Err(VerifyError::Input(format!("{} quantum numbers are integers, got {v}", family.tag())));
        });
    }
    let point = values[arity..]
        .iter()
        .map(|s| s.parse::<f64>().map_err(|_| VerifyError::Input(format!("cannot read coordinate '{s}'"))))
        .collect::<Result<Vec<_>, _>>()?;
    let idx = MultiIndex::new(family, comps)?;
    let z = if scaled { evaluate_scaled(&idx, &point)? } else { evaluate(&idx, &point)? };
    Ok(format!("{:.14e} {:.14e}\n", z.re, z.im))
}

fn nodes(args: &PlanArgs) -> Result<String, VerifyError> {
    let (family, _, plan) = args.build()?;
    let rows = plan.points().iter().zip(plan.weights()).map(|(p, w)| (p.clone(), vec![*w]));
    write_table(family, &["weight"], rows)
}

/// Samples must sit on the plan nodes, in order, to round-off.
const NODE_MATCH: f64 = 1e-12;

fn analyze_cmd(args: &PlanArgs, samples: &std::path::Path) -> Result<String, VerifyError> {
    let (family, window, plan) = args.build()?;
    let table = read_samples(samples, family, true)?;
    if table.points.len() != plan.len() {
        return Err(VerifyError::Input(format!(
            "{} samples for a plan of {} nodes",
            table.points.len(),
            plan.len()
        )));
    }
    for (k, (p, q)) in table.points.iter().zip(plan.points()).enumerate() {
        if p.iter().zip(q).any(|(a, b)| (a - b).abs() > NODE_MATCH * b.abs().max(1.0)) {
            return Err(VerifyError::Input(format!("sample {k} at {p:?} is not plan node {q:?}")));
        }
    }
    // analyze samples the plan points in order, so the values can be handed
    // back by position
    let next = std::sync::atomic::AtomicUsize::new(0);
    let f = |_: &[f64]| table.values[next.fetch_add(1, std::sync::atomic::Ordering::Relaxed)];
    let a = analyze(f, family, &window, &plan)?;
    for w in &a.warnings {
        eprintln!("warning: {w}");
    }
    coeffs_json(&a.coeffs)
}

fn synthesize_cmd(coeffs: &std::path::Path, points: Option<&std::path::Path>, on_plan: bool) -> Result<String, VerifyError> {
    let v = read_coeffs(coeffs)?;
    let family = v.family();
    let pts = match (points, on_plan) {
        (Some(p), _) => read_samples(p, family, false)?.points,
        (None, true) => QuadPlan::for_window(family, v.window())?.points().to_vec(),
        (None, false) => return Err(VerifyError::Input("synthesize needs --points or --plan".into())),
    };
    let values = synthesize(&v, &pts)?;
    write_table(family, &["re", "im"], pts.into_iter().zip(values).map(|(p, z)| (p, vec![z.re, z.im])))
}

fn print(text: Result<String, VerifyError>) -> ExitCode {
    match text {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval { family, alpha, scaled, values } => print(eval(&family, alpha, scaled, &values)),
        Command::Nodes(args) => print(nodes(&args)),
        Command::Analyze { plan, samples } => print(analyze_cmd(&plan, &samples)),
        Command::Synthesize { coeffs, points, plan } => print(synthesize_cmd(&coeffs, points.as_deref(), plan)),
        Command::Verify(args) => {
            let run = args.config().and_then(|cfg| {
                let report = run_suite(&cfg)?;
                emit_report(&report, cfg.format)?;
                Ok(report.passed())
            });
            match run {
                Ok(true) => ExitCode::SUCCESS,
                Ok(false) => ExitCode::from(EXIT_FAILED),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(EXIT_ERROR)
                }
            }
        }
    }
}
