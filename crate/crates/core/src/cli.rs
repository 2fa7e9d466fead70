//! The `superyang` command-line driver.
//!
//! Every subcommand prints one summary line per check to standard output
//! and, with `--out`, writes the JSON report(s). Exit codes: 0 when every
//! check passes, 1 when a check fails, 2 on usage or configuration errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use crate::arith::{Rat, RationalFunction};
use crate::error::{Error, Result};
use crate::hw::{drinfeld_of_module, fundamental_report, hw_tensor_product_check};
use crate::rep::{
    central_series, check_defrel, check_rtt, compute_vplus, fundamental_module, fundamental_tensor, gl_check,
    osp_embed, reduce_rep, shift_rep, twist_rep, vector_rep, RepModule, TupleSelection,
};
use crate::report::Report;
use crate::superlin::{check_ybe, GradedSpace, Mutation};

#[derive(Parser, Debug)]
#[command(name = "superyang", version, about = "Exact checks for representations of the extended Yangian X(osp(1|2n))")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Yang-Baxter equation for the R-matrix.
    Ybe(Common),
    /// RTT relation on a module.
    Rtt(Common),
    /// Expanded defining relations on a module.
    Defrel(Common),
    /// Central series c(u) of a module.
    Central(Common),
    /// Embedding of U(osp(1|2n)) through the first-order generators.
    Osp(Common),
    /// Y(gl_n) relations for t_ij(-u), i, j <= n.
    Gl(Common),
    /// The subspace V+ killed by the first row and last column.
    Vplus(Common),
    /// Reduction to the algebra for n - 1 on V+, with its RTT check.
    Reduce(Common),
    /// Highest-weight data of xi_k in the shifted tensor power.
    Fundamental(Common),
    /// Drinfeld polynomials of a module with a unique highest vector.
    Drinfeld(Common),
    /// Highest-weight multiplicativity for a module and its shift.
    Tensor(Common),
    /// The full suite of checks for one n.
    All(Common),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Rank: the space is C^(1|2n).
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    /// 0 for the vector representation, k >= 1 for the tensor power of
    /// k vector representations with shifts 0, ..., k-1.
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    /// Use the submodule generated by xi_k instead of the whole tensor power.
    #[arg(long)]
    pub span: bool,
    /// Grid side for the cleared identities (defaults to a safe bound).
    #[arg(long)]
    pub grid: Option<usize>,
    /// Order of the u^-1 expansion printed for c(u).
    #[arg(long, default_value_t = 8)]
    pub order: usize,
    /// Number of (i,j,k,l) tuples for defrel, spread evenly; all if omitted.
    #[arg(long)]
    pub tuples: Option<usize>,
    /// Write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Apply t_ij(u) -> t_ij(u + a).
    #[arg(long, allow_hyphen_values = true)]
    pub shift: Option<Rat>,
    /// Apply t_ij(u) -> f(u) t_ij(u), f given as JSON {"num": [...], "den": [...]}.
    #[arg(long)]
    pub twist: Option<String>,
    /// Corrupt one sign convention to demonstrate that the checks notice.
    #[arg(long, value_enum)]
    pub mutate: Option<MutateArg>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum MutateArg {
    Wrap,
    Theta,
    Qsign,
}

impl From<MutateArg> for Mutation {
    fn from(m: MutateArg) -> Self {
        match m {
            MutateArg::Wrap => Mutation::Wrap,
            MutateArg::Theta => Mutation::Theta,
            MutateArg::Qsign => Mutation::QSign,
        }
    }
}

impl Common {
    fn space(&self) -> Result<GradedSpace> {
        Ok(GradedSpace::new(self.n)?.with_mutation(self.mutate.map(Into::into)))
    }

    fn twist_fn(&self) -> Result<Option<RationalFunction>> {
        self.twist
            .as_deref()
            .map(|t| serde_json::from_str(t).map_err(|e| Error::Parse(format!("--twist: {e}"))))
            .transpose()
    }

    /// The module named by `--k` and `--span`, before shift and twist.
    fn base_module(&self, span: bool) -> Result<RepModule> {
        let s = self.space()?;
        if self.k == 0 {
            return Ok(vector_rep(&s));
        }
        if self.k > self.n {
            return Err(Error::InvalidArgument(format!("k = {} exceeds n = {}", self.k, self.n)));
        }
        if span {
            fundamental_module(&s, self.k)
        } else {
            fundamental_tensor(&s, self.k)
        }
    }

    fn module_with(&self, span: bool) -> Result<RepModule> {
        let mut m = self.base_module(span)?;
        if let Some(a) = &self.shift {
            m = shift_rep(&m, a);
        }
        if let Some(f) = self.twist_fn()? {
            m = twist_rep(&m, &f)?;
        }
        Ok(m)
    }

    fn module(&self) -> Result<RepModule> {
        self.module_with(self.span)
    }

    fn selection(&self) -> TupleSelection {
        self.tuples.map_or(TupleSelection::All, TupleSelection::Sample)
    }
}

/// What a subcommand produced.
struct Outcome {
    lines: Vec<String>,
    json: Value,
    passed: bool,
}

impl Outcome {
    fn report(r: Report) -> Result<Self> {
        Ok(Outcome {
            lines: vec![r.summary()],
            passed: r.passed(),
            json: serde_json::to_value(&r)?,
        })
    }

    fn many(items: Vec<(String, bool, Value)>) -> Self {
        Outcome {
            passed: items.iter().all(|i| i.1),
            lines: items.iter().map(|i| i.0.clone()).collect(),
            json: Value::Array(items.into_iter().map(|i| i.2).collect()),
        }
    }
}

fn item<T: Serialize>(line: String, passed: bool, v: &T) -> Result<(String, bool, Value)> {
    Ok((line, passed, serde_json::to_value(v)?))
}

fn report_item(r: Report) -> Result<(String, bool, Value)> {
    item(r.summary(), r.passed(), &r)
}

fn central_report(m: &RepModule, order: usize) -> Result<Report> {
    let (c, mut r) = central_series(m)?;
    if let Some(c) = c {
        r.c_expansion = Some(c.series_expand(order)?);
    }
    Ok(r)
}

fn vplus_item(m: &RepModule) -> Result<(String, bool, Value)> {
    let basis = compute_vplus(m)?;
    let json = serde_json::json!({
        "check": "vplus",
        "n": m.n(),
        "module": m.recipe(),
        "dim": basis.len(),
        "basis": basis
            .iter()
            .map(|v| v.iter().map(|(i, x)| (*i, x.clone())).collect::<Vec<(u32, Rat)>>())
            .collect::<Vec<_>>(),
    });
    let line = format!("vplus    n={} [{}]: dim {}", m.n(), m.recipe().describe(), basis.len());
    Ok((line, true, json))
}

fn run_command(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Ybe(c) => Outcome::report(check_ybe(&c.space()?, c.grid.unwrap_or(8))?),
        Command::Rtt(c) => Outcome::report(check_rtt(&c.module()?, c.grid)?),
        Command::Defrel(c) => Outcome::report(check_defrel(&c.module()?, c.grid, c.selection())?),
        Command::Central(c) => {
            let r = central_report(&c.module()?, c.order)?;
            let mut out = Outcome::report(r.clone())?;
            if let Some(s) = &r.c_expansion {
                let terms: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
                out.lines.push(format!("  c(u) = {}  [u^-r coefficients: {}]", r.c_series.expect("set"), terms.join(", ")));
            }
            Ok(out)
        }
        Command::Osp(c) => Outcome::report(osp_embed(&c.module()?)?.1),
        Command::Gl(c) => Outcome::report(gl_check(&c.module()?, c.grid)?),
        Command::Vplus(c) => {
            let (line, ok, json) = vplus_item(&c.module()?)?;
            Ok(Outcome {
                lines: vec![line],
                json,
                passed: ok,
            })
        }
        Command::Reduce(c) => Outcome::report(reduce_rep(&c.module()?, c.grid)?.1),
        Command::Fundamental(c) => {
            if c.k == 0 {
                return Err(Error::InvalidArgument("fundamental needs --k >= 1".into()));
            }
            let (hw, highest) = fundamental_report(&c.space()?, c.k)?;
            let ok = hw.passed() && highest.passed();
            Ok(Outcome {
                lines: vec![highest.summary(), hw.summary()],
                json: serde_json::to_value(&hw)?,
                passed: ok,
            })
        }
        Command::Drinfeld(c) => {
            // a tensor power has several highest vectors; use the span of xi_k
            let hw = drinfeld_of_module(&c.module_with(c.k > 0)?)?;
            Ok(Outcome {
                lines: vec![hw.summary()],
                passed: hw.passed(),
                json: serde_json::to_value(&hw)?,
            })
        }
        Command::Tensor(c) => {
            let a = c.base_module(c.k > 0)?;
            let b = match &c.shift {
                Some(s) => shift_rep(&a, s),
                None => a.clone(),
            };
            Outcome::report(hw_tensor_product_check(&a, &b)?)
        }
        Command::All(c) => {
            if c.mutate.is_some() {
                return Err(Error::InvalidArgument("--mutate is not available for `all`".into()));
            }
            Ok(Outcome::many(run_all(c)?))
        }
    }
}

/// The suite behind `all --n N`.
fn run_all(c: &Common) -> Result<Vec<(String, bool, Value)>> {
    let s = GradedSpace::new(c.n)?;
    let v = vector_rep(&s);
    let mut items = vec![
        report_item(check_ybe(&s, c.grid.unwrap_or(8))?)?,
        report_item(check_rtt(&v, c.grid)?)?,
        report_item(check_defrel(&v, c.grid, c.selection())?)?,
        report_item(central_report(&v, c.order)?)?,
        report_item(osp_embed(&v)?.1)?,
        report_item(gl_check(&v, c.grid)?)?,
        vplus_item(&v)?,
    ];
    if c.n >= 2 {
        items.push(report_item(reduce_rep(&v, c.grid)?.1)?);
    }
    for k in 1..=c.n {
        let t = fundamental_tensor(&s, k)?;
        items.push(report_item(check_rtt(&t, c.grid)?)?);
        items.push(report_item(gl_check(&t, c.grid)?)?);
        items.push(report_item(central_report(&t, c.order)?)?);
        let (hw, highest) = fundamental_report(&s, k)?;
        items.push(report_item(highest)?);
        items.push(item(hw.summary(), hw.passed(), &hw)?);
        let m = fundamental_module(&s, k)?;
        let hw = drinfeld_of_module(&m)?;
        items.push(item(hw.summary(), hw.passed(), &hw)?);
        if c.n >= 2 {
            items.push(report_item(reduce_rep(&m, c.grid)?.1)?);
        }
    }
    Ok(items)
}

fn configure_threads() -> Result<()> {
    if let Ok(v) = std::env::var("SUPERYANG_THREADS") {
        let n: usize = v
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("SUPERYANG_THREADS={v} is not a number")))?;
        // a second call in the same process keeps the existing pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

fn is_usage_error(e: &Error) -> bool {
    matches!(e, Error::InvalidArgument(_) | Error::Parse(_) | Error::Io(_))
}

/// Runs the driver on `args` (including the program name) and returns the
/// exit code.
pub fn run(args: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = configure_threads().and_then(|_| run_command(&cli.command));
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return if is_usage_error(&e) { 2 } else { 1 };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    for l in &outcome.lines {
        let _ = writeln!(lock, "{l}");
    }
    let common = match &cli.command {
        Command::Ybe(c)
        | Command::Rtt(c)
        | Command::Defrel(c)
        | Command::Central(c)
        | Command::Osp(c)
        | Command::Gl(c)
        | Command::Vplus(c)
        | Command::Reduce(c)
        | Command::Fundamental(c)
        | Command::Drinfeld(c)
        | Command::Tensor(c)
        | Command::All(c) => c,
    };
    if let Some(path) = &common.out {
        let text = match serde_json::to_string_pretty(&outcome.json) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: {e}");
                return 1;
            }
        };
        if let Err(e) = std::fs::write(path, text + "\n") {
            eprintln!("error: cannot write {}: {e}", path.display());
            return 2;
        }
    }
    if outcome.passed {
        0
    } else {
        1
    }
}
