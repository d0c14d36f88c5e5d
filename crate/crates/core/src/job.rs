//! Command-line jobs: argument and config-file parsing into a [`JobSpec`],
//! execution, rendering and exit codes.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::classical::{groebner, leading_exponents, standard_basis};
use crate::error::{Error, Result};
use crate::hilbert::{self, Staircase};
use crate::hs_strat::{hs_at_point, hs_stratify, HsOptions};
use crate::modified::psb_mod_prime;
use crate::mora::{lead_mod, psb_mod};
use crate::param_poly::ParamPolynomial;
use crate::param_ring::ParamIdeal;
use crate::poly::{default_names, format_polynomial, parse_polynomial_list, taylor_shift, Coeff, MonomialOrder, OrderRef};
use crate::render;
use crate::stratify::{canonicalize, strat_exp1, strat_exp2, Engine, StratifyOptions, DEFAULT_MAX_DEPTH};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_ENGINE: i32 = 3;
pub const EXIT_SIZE: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommandKind {
    Sb,
    Psbmod,
    Stratify,
    HsStrat,
    HsAt,
    Bounds,
}

#[derive(Parser, Debug)]
#[command(name = "psb", version, about = "Parametric standard bases and Hilbert-Samuel stratification")]
pub struct Cli {
    /// TOML file with default settings; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads for the stratification queue.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Standard basis of an ideal of ℚ[x].
    Sb(VarArgs),
    /// Pseudo standard basis modulo an ideal of the parameter ring.
    Psbmod(ParamArgs),
    /// Stratification of parameter space.
    Stratify(ParamArgs),
    /// Stratification of affine space by the local Hilbert-Samuel function.
    HsStrat(HsArgs),
    /// Hilbert-Samuel function at one rational point.
    HsAt(HsAtArgs),
    /// Degree and counting bounds.
    Bounds(BoundsArgs),
}

#[derive(Args, Debug)]
struct VarArgs {
    /// Number of x variables (named x1..xn).
    #[arg(short = 'n', long)]
    nvars: Option<usize>,
    /// Explicit x variable names, comma separated.
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    /// deglex, lex, degrevlex, valuation, or matrix rows like "1,1;0,-1".
    #[arg(long, allow_hyphen_values = true)]
    order: Option<String>,
    /// Read polynomials from a file (comma or newline separated).
    #[arg(long)]
    file: Option<PathBuf>,
    /// Input polynomials.
    polys: Vec<String>,
}

#[derive(Args, Debug)]
struct ParamArgs {
    #[command(flatten)]
    vars: VarArgs,
    /// Number of parameters (named y1..ym).
    #[arg(short = 'm', long)]
    nparams: Option<usize>,
    /// Explicit parameter names, comma separated.
    #[arg(long, value_delimiter = ',')]
    params: Option<Vec<String>>,
    /// Global order on the parameters.
    #[arg(long, allow_hyphen_values = true)]
    y_order: Option<String>,
    /// Generators of Q, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// Inputs are polynomials in x; use f(x + y).
    #[arg(long)]
    shift: bool,
    /// mora or modified.
    #[arg(long)]
    engine: Option<String>,
    /// Stratification loop variant: 1 (plain) or 2 (pruned).
    #[arg(long)]
    variant: Option<u8>,
    /// Stratification depth limit.
    #[arg(long)]
    max_depth: Option<usize>,
}

#[derive(Args, Debug)]
struct HsArgs {
    #[command(flatten)]
    vars: VarArgs,
    /// mora or modified.
    #[arg(long)]
    engine: Option<String>,
    /// Largest r printed for HSf.
    #[arg(long)]
    r_max: Option<u64>,
    /// Largest staircase for the inclusion-exclusion polynomial.
    #[arg(long)]
    subset_cap: Option<usize>,
    /// Stratification depth limit.
    #[arg(long)]
    max_depth: Option<usize>,
}

#[derive(Args, Debug)]
struct HsAtArgs {
    #[command(flatten)]
    vars: VarArgs,
    /// Rational coordinates, comma separated.
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    /// Largest r printed for HSf.
    #[arg(long)]
    r_max: Option<u64>,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    /// Number of variables.
    #[arg(short = 'n', long)]
    nvars: u32,
    /// Degree of the input.
    #[arg(short = 'd', long)]
    degree: u32,
    /// Largest n*D(n,d) for which hf_count is computed.
    #[arg(long)]
    hf_cap: Option<u64>,
}

/// Settings accepted in the config file.
#[derive(Deserialize, Default, Debug)]
#[serde(deny_unknown_fields)]
struct Config {
    format: Option<Format>,
    workers: Option<usize>,
    engine: Option<String>,
    order: Option<String>,
    y_order: Option<String>,
    r_max: Option<u64>,
    subset_cap: Option<usize>,
    hf_cap: Option<u64>,
    max_depth: Option<usize>,
    variant: Option<u8>,
}

/// A validated job.
#[derive(Clone, Debug)]
pub struct JobSpec {
    pub command: CommandKind,
    pub x_names: Vec<String>,
    pub y_names: Vec<String>,
    pub x_order: OrderRef,
    pub y_order: OrderRef,
    pub engine: Engine,
    pub variant: u8,
    pub shift: bool,
    pub inputs: Vec<String>,
    pub q_generators: Vec<String>,
    pub point: Vec<Coeff>,
    pub format: Format,
    pub r_max: u64,
    pub workers: usize,
    pub max_depth: usize,
    pub subset_cap: usize,
    pub hf_cap: u64,
    pub bounds: (u32, u32),
}

/// Exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::UnknownVariable { .. }
        | Error::Dimension { .. }
        | Error::RankDeficient
        | Error::Input(_) => EXIT_PARSE,
        Error::SizeCap { .. } => EXIT_SIZE,
        _ => EXIT_ENGINE,
    }
}

fn load_config(path: Option<&Path>) -> Result<Config> {
    let Some(path) = path else { return Ok(Config::default()) };
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("config {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| Error::Input(format!("config {}: {e}", path.display())))
}

/// Parses an order name or a matrix given as `;`-separated rows.
pub fn parse_order(spec: &str, n: usize) -> Result<MonomialOrder> {
    match spec.trim() {
        "deglex" => Ok(MonomialOrder::deglex(n)),
        "lex" => Ok(MonomialOrder::lex(n)),
        "degrevlex" => Ok(MonomialOrder::degrevlex(n)),
        "valuation" | "local" => Ok(MonomialOrder::valuation_compatible(n)),
        m if m.contains(|c: char| c.is_ascii_digit()) => {
            let rows = m
                .split(';')
                .map(|r| {
                    r.split(',')
                        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse { pos: 0, msg: format!("bad matrix entry `{t}`") }))
                        .collect::<Result<Vec<i64>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            MonomialOrder::from_matrix(n, rows)
        }
        other => Err(Error::Input(format!("unknown order `{other}`"))),
    }
}

/// Largest k with `prefix`k appearing as an identifier in `texts`.
fn infer_count(prefix: char, texts: &[String]) -> usize {
    let mut best = 0;
    for t in texts {
        let b = t.as_bytes();
        let mut i = 0;
        while i < b.len() {
            if b[i].is_ascii_alphabetic() || b[i] == b'_' {
                let start = i;
                while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                    i += 1;
                }
                let id = &t[start..i];
                if let Some(rest) = id.strip_prefix(prefix) {
                    if let Ok(k) = rest.parse::<usize>() {
                        best = best.max(k);
                    }
                }
            } else {
                i += 1;
            }
        }
    }
    best
}

fn read_inputs(v: &VarArgs) -> Result<Vec<String>> {
    let mut out = v.polys.clone();
    if let Some(path) = &v.file {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        out.extend(text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(String::from));
    }
    if out.is_empty() {
        return Err(Error::Input("no input polynomials".into()));
    }
    Ok(out)
}

fn x_names(v: &VarArgs, inputs: &[String]) -> Result<Vec<String>> {
    match (&v.vars, v.nvars) {
        (Some(names), Some(n)) if names.len() != n => Err(Error::Input("--vars and -n disagree".into())),
        (Some(names), _) => Ok(names.clone()),
        (None, Some(n)) => Ok(default_names("x", n)),
        (None, None) => match infer_count('x', inputs) {
            0 => Err(Error::Input("cannot infer the variables; pass -n or --vars".into())),
            n => Ok(default_names("x", n)),
        },
    }
}

fn parse_engine(s: Option<&str>, default: Engine) -> Result<Engine> {
    s.map_or(Ok(default), str::parse)
}

fn is_degree_local(o: &MonomialOrder) -> bool {
    o.rows().first().is_some_and(|r| r.iter().all(|&w| w < 0) && r.iter().all(|&w| w == r[0]))
}

/// Builds a validated job from command-line arguments (program name
/// first) and the config file they name.
pub fn parse_job<I, T>(argv: I) -> std::result::Result<JobSpec, JobError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(JobError::Clap)?;
    build_job(cli).map_err(JobError::Engine)
}

fn build_job(cli: Cli) -> Result<JobSpec> {
    let cfg = load_config(cli.config.as_deref())?;
    let format = cli.format.or(cfg.format).unwrap_or_default();
    let workers = cli.workers.or(cfg.workers).unwrap_or(1).max(1);
    let mut spec = JobSpec {
        command: CommandKind::Bounds,
        x_names: Vec::new(),
        y_names: Vec::new(),
        x_order: MonomialOrder::deglex(0).into_ref(),
        y_order: MonomialOrder::deglex(0).into_ref(),
        engine: Engine::Mora,
        variant: cfg.variant.unwrap_or(2),
        shift: false,
        inputs: Vec::new(),
        q_generators: Vec::new(),
        point: Vec::new(),
        format,
        r_max: cfg.r_max.unwrap_or(crate::hs_strat::DEFAULT_R_MAX),
        workers,
        max_depth: cfg.max_depth.unwrap_or(DEFAULT_MAX_DEPTH),
        subset_cap: cfg.subset_cap.unwrap_or_else(hilbert::subset_cap),
        hf_cap: cfg.hf_cap.unwrap_or_else(hilbert::hf_cap),
        bounds: (0, 0),
    };
    let x_setup = |spec: &mut JobSpec, v: &VarArgs, default_order: &str| -> Result<()> {
        spec.inputs = read_inputs(v)?;
        spec.x_names = x_names(v, &spec.inputs)?;
        let order = v.order.as_deref().or(cfg.order.as_deref()).unwrap_or(default_order);
        spec.x_order = parse_order(order, spec.x_names.len())?.into_ref();
        Ok(())
    };
    match cli.command {
        Command::Sb(v) => {
            spec.command = CommandKind::Sb;
            x_setup(&mut spec, &v, "deglex")?;
        }
        Command::Psbmod(p) => {
            spec.command = CommandKind::Psbmod;
            param_setup(&mut spec, &cfg, p, &x_setup)?;
        }
        Command::Stratify(p) => {
            spec.command = CommandKind::Stratify;
            param_setup(&mut spec, &cfg, p, &x_setup)?;
        }
        Command::HsStrat(h) => {
            spec.command = CommandKind::HsStrat;
            x_setup(&mut spec, &h.vars, "valuation")?;
            spec.engine = parse_engine(h.engine.as_deref().or(cfg.engine.as_deref()), Engine::Modified)?;
            spec.r_max = h.r_max.unwrap_or(spec.r_max);
            spec.subset_cap = h.subset_cap.unwrap_or(spec.subset_cap);
            spec.max_depth = h.max_depth.unwrap_or(spec.max_depth);
            spec.y_order = MonomialOrder::deglex(spec.x_names.len()).into_ref();
            spec.y_names = spec.x_names.clone();
        }
        Command::HsAt(h) => {
            spec.command = CommandKind::HsAt;
            x_setup(&mut spec, &h.vars, "valuation")?;
            spec.r_max = h.r_max.unwrap_or(spec.r_max);
            spec.point = crate::poly::parse::split_list(&h.point)
                .into_iter()
                .map(|(t, off)| {
                    t.trim().parse::<Coeff>().map_err(|_| Error::Parse { pos: off, msg: format!("bad coordinate `{}`", t.trim()) })
                })
                .collect::<Result<_>>()?;
            if spec.point.len() != spec.x_names.len() {
                return Err(Error::Dimension { expected: spec.x_names.len(), found: spec.point.len() });
            }
        }
        Command::Bounds(b) => {
            spec.command = CommandKind::Bounds;
            if b.nvars == 0 || b.degree == 0 {
                return Err(Error::Input("n and d must be positive".into()));
            }
            spec.bounds = (b.nvars, b.degree);
            spec.hf_cap = b.hf_cap.unwrap_or(spec.hf_cap);
        }
    }
    if matches!(spec.command, CommandKind::HsStrat | CommandKind::HsAt) && !is_degree_local(&spec.x_order) {
        return Err(Error::Input("Hilbert-Samuel computations need a degree-anticompatible local order".into()));
    }
    validate(&spec)?;
    Ok(spec)
}

fn param_setup(
    spec: &mut JobSpec,
    cfg: &Config,
    p: ParamArgs,
    x_setup: &dyn Fn(&mut JobSpec, &VarArgs, &str) -> Result<()>,
) -> Result<()> {
    x_setup(spec, &p.vars, "valuation")?;
    spec.shift = p.shift;
    spec.engine = parse_engine(p.engine.as_deref().or(cfg.engine.as_deref()), Engine::Mora)?;
    spec.variant = p.variant.unwrap_or(spec.variant);
    if !matches!(spec.variant, 1 | 2) {
        return Err(Error::Input(format!("unknown variant {}", spec.variant)));
    }
    spec.max_depth = p.max_depth.unwrap_or(spec.max_depth);
    spec.q_generators = p.q.iter().map(|s| s.to_string()).collect();
    let mut texts = spec.inputs.clone();
    texts.extend(spec.q_generators.iter().cloned());
    spec.y_names = match (&p.params, p.nparams) {
        _ if p.shift => {
            if p.params.is_some() || p.nparams.is_some_and(|m| m != spec.x_names.len()) {
                return Err(Error::Input("--shift fixes the parameters to one per x variable".into()));
            }
            default_names("y", spec.x_names.len())
        }
        (Some(names), Some(m)) if names.len() != m => return Err(Error::Input("--params and -m disagree".into())),
        (Some(names), _) => names.clone(),
        (None, Some(m)) => default_names("y", m),
        (None, None) => default_names("y", infer_count('y', &texts)),
    };
    let y_order = p.y_order.as_deref().or(cfg.y_order.as_deref()).unwrap_or("deglex");
    let yo = parse_order(y_order, spec.y_names.len())?;
    if !yo.is_global() {
        return Err(Error::Input(format!("parameter order `{}` is not global", yo.name())));
    }
    spec.y_order = yo.into_ref();
    Ok(())
}

fn validate(spec: &JobSpec) -> Result<()> {
    match spec.command {
        CommandKind::Bounds => Ok(()),
        CommandKind::Sb | CommandKind::HsStrat | CommandKind::HsAt => x_polys(spec).map(|_| ()),
        CommandKind::Psbmod | CommandKind::Stratify => {
            param_polys(spec)?;
            q_ideal(spec).map(|_| ())
        }
    }
}

fn x_polys(spec: &JobSpec) -> Result<Vec<crate::poly::Polynomial>> {
    let mut out = Vec::new();
    for s in &spec.inputs {
        out.extend(parse_polynomial_list(s, &spec.x_names, &spec.x_order)?);
    }
    Ok(out)
}

fn param_polys(spec: &JobSpec) -> Result<Vec<ParamPolynomial>> {
    if spec.shift {
        return Ok(x_polys(spec)?.iter().map(|f| taylor_shift(f, &spec.x_order, &spec.y_order)).collect());
    }
    let (n, m) = (spec.x_names.len(), spec.y_names.len());
    let flat: OrderRef = MonomialOrder::deglex(n + m).into_ref();
    let mut names = spec.x_names.clone();
    names.extend(spec.y_names.iter().cloned());
    let x_idx: Vec<usize> = (0..n).collect();
    let y_idx: Vec<usize> = (n..n + m).collect();
    let mut out = Vec::new();
    for s in &spec.inputs {
        for f in parse_polynomial_list(s, &names, &flat)? {
            out.push(ParamPolynomial::from_flat(&f, &spec.x_order, &spec.y_order, &x_idx, &y_idx));
        }
    }
    Ok(out)
}

fn q_ideal(spec: &JobSpec) -> Result<ParamIdeal> {
    let mut gens = Vec::new();
    for s in &spec.q_generators {
        gens.extend(parse_polynomial_list(s, &spec.y_names, &spec.y_order)?);
    }
    ParamIdeal::new(&spec.y_order, gens)
}

fn exps(st: &[crate::poly::Exponent]) -> Vec<Vec<u32>> {
    st.iter().map(|e| e.as_slice().to_vec()).collect()
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

/// Runs a job and returns its rendered output.
pub fn run_job(spec: &JobSpec) -> Result<String> {
    let json = spec.format == Format::Json;
    let strat_opts = StratifyOptions { engine: spec.engine, workers: spec.workers, max_depth: spec.max_depth };
    match spec.command {
        CommandKind::Sb => {
            let f = x_polys(spec)?;
            let basis = if spec.x_order.is_global() { groebner(&f)? } else { standard_basis(&f)? };
            let basis: Vec<_> = basis.iter().map(|g| g.primitive()).collect();
            let text: Vec<String> = basis.iter().map(|g| format_polynomial(g, &spec.x_names)).collect();
            let leads = exps(&leading_exponents(&basis));
            Ok(if json {
                to_json(&json!({ "order": spec.x_order.name(), "basis": text, "leading_exponents": leads }))
            } else {
                text.join("\n") + "\n"
            })
        }
        CommandKind::Psbmod => {
            let g = param_polys(spec)?;
            let q = q_ideal(spec)?;
            let (basis, h) = match spec.engine {
                Engine::Mora => psb_mod(&g, &q)?,
                Engine::Modified => psb_mod_prime(&g, &q)?,
            };
            let leads: Vec<_> = basis.iter().filter_map(|b| lead_mod(b, &q)).map(|l| l.exp).collect();
            let st = Staircase::new(spec.x_names.len(), leads.clone());
            let btext: Vec<String> = basis.iter().map(|b| render::format_param(b, &spec.x_names, &spec.y_names)).collect();
            let htext: Vec<String> = h.iter().map(|p| format_polynomial(&p.primitive(), &spec.y_names)).collect();
            Ok(if json {
                to_json(&json!({
                    "basis": btext,
                    "h": htext,
                    "leading_exponents": exps(&leads),
                    "staircase_generators": exps(st.generators()),
                }))
            } else {
                let mut out = String::new();
                for (b, h) in btext.iter().zip(&htext) {
                    out.push_str(&format!("{b}    [lc mod Q: {h}]\n"));
                }
                out.push_str(&format!("staircase: {st:?}\n"));
                out
            })
        }
        CommandKind::Stratify => {
            let g = param_polys(spec)?;
            let r = if spec.variant == 1 { strat_exp1(&g, &spec.y_order, &strat_opts)? } else { strat_exp2(&g, &spec.y_order, &strat_opts)? };
            let r = canonicalize(r);
            Ok(if json {
                to_json(&render::stratification_json(&r, &spec.x_names, &spec.y_names))
            } else {
                let mut out = render::stratification_text(&r, &spec.y_names);
                let v: Vec<String> =
                    r.vanishing_ideal.canonical_generators().iter().map(|p| format_polynomial(p, &spec.y_names)).collect();
                out.push_str(&format!("vanishing ideal: <{}>\n", v.join(",")));
                out
            })
        }
        CommandKind::HsStrat => {
            let f = x_polys(spec)?;
            let opts = HsOptions { stratify: strat_opts, r_max: spec.r_max, subset_cap: spec.subset_cap };
            let r = hs_stratify(&f, &spec.x_order, &spec.y_order, &opts)?;
            Ok(if json { to_json(&render::hs_json(&r, &spec.x_names)) } else { render::hs_text(&r, &spec.x_names) })
        }
        CommandKind::HsAt => {
            let f = x_polys(spec)?;
            let st = crate::hs_strat::staircase_at_point(&f, &spec.point, &spec.x_order)?;
            let vals = hs_at_point(&f, &spec.point, spec.r_max, &spec.x_order)?;
            Ok(if json {
                let pt: Vec<String> = spec.point.iter().map(crate::poly::parse::format_coeff).collect();
                to_json(&json!({ "point": pt, "staircase_generators": exps(st.generators()), "hs_values": vals }))
            } else {
                let v: Vec<String> = vals.iter().map(|x| x.to_string()).collect();
                format!("staircase: {st:?}\nHSf(0..{}) = {}\n", spec.r_max, v.join(" "))
            })
        }
        CommandKind::Bounds => {
            let (n, d) = spec.bounds;
            let exact = hilbert::degree_bound_exact(n, d)?;
            let floor = hilbert::degree_bound(n, d)?;
            let counts = hilbert::hs_count_bounds_capped(n, d, spec.hf_cap)?;
            let exact_s = crate::poly::parse::format_coeff(&exact);
            let hf = counts.hf_count.as_ref().map(|v| v.to_string());
            Ok(if json {
                to_json(&json!({
                    "n": n,
                    "d": d,
                    "degree_bound": floor.to_string(),
                    "degree_bound_exact": exact_s,
                    "hp_count": counts.hp_count.to_string(),
                    "hf_count": hf,
                }))
            } else {
                let mut out = format!("D({n},{d}) = {floor}\n");
                if !exact.is_integer() {
                    out.push_str(&format!("D({n},{d}) exact = {exact_s}\n"));
                }
                out.push_str(&format!("hp_count = {}\n", counts.hp_count));
                out.push_str(&format!("hf_count = {}\n", hf.as_deref().unwrap_or("over cap")));
                out
            })
        }
    }
}

#[derive(Debug)]
pub enum JobError {
    Clap(clap::Error),
    Engine(Error),
}

/// Full command-line entry point; returns the exit status.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let spec = match parse_job(argv) {
        Ok(s) => s,
        Err(JobError::Clap(e)) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { EXIT_OK } else { EXIT_PARSE };
        }
        Err(JobError::Engine(e)) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code(&e);
        }
    };
    match run_job(&spec) {
        Ok(s) => {
            let _ = write!(out, "{s}");
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
