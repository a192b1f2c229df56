//! `sfgreen` command-line tool.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use sfgreen::green::{product_kernel, product_kernel_fixed, GreenKernelResult};
use sfgreen::lorentz::{advanced_kernel_weights, riesz_kernel, FAlpha, RieszParams};
use sfgreen::oracle::{
    discrete_green, discretize_t, interpolate, oracle_grid, relative_l2, resolvent_solve,
    tensor_resolvent, TensorGrids,
};
use sfgreen::radial::{apply_t, atom, eigenfunction_w_jet, SampledRadialFunction};
use sfgreen::spaceform::{ProductConfig, RadialGrid, Signature, SpaceForm};
use sfgreen::spectral::{
    forward_transform, inverse_transform_on_points, spectral_measure, SpectralTruncation,
    DEFAULT_J_MAX, DEFAULT_NODE_COUNT,
};
use sfgreen::{Error, Result};

const DEFAULT_GRID: usize = 2000;
const DEFAULT_TOL: f64 = 1e-6;

#[derive(Parser)]
#[command(name = "sfgreen", version, about = "Radial Green's functions on products of space forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral measure of T on the base or one factor.
    Spectrum(SpectrumArgs),
    /// Eigenfunction w(r, λ) and its eigen-relation residual.
    Eigen(EigenArgs),
    /// Forward transform of a ring bump and the inverse round trip.
    Transform(TransformArgs),
    /// Green's function kernels.
    Green {
        #[command(subcommand)]
        kind: GreenCommand,
    },
    /// Finite-difference oracle checks.
    Oracle {
        #[command(subcommand)]
        kind: OracleCommand,
    },
}

#[derive(Subcommand)]
enum GreenCommand {
    /// Product kernel K(r₀, r̄) on a Riemannian base.
    Riemannian(RiemannianArgs),
    /// f_α and the advanced weight on a Lorentzian base.
    Lorentzian(LorentzianArgs),
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Compare a closed form with its finite-difference oracle.
    Compare(CompareArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Quantity {
    Eigen,
    Green,
    Falpha,
}

#[derive(Args)]
struct Common {
    /// Product configuration (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    out: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SpectralArgs {
    /// Highest atom index (k > 0).
    #[arg(long, default_value_t = DEFAULT_J_MAX)]
    j_max: usize,
    /// Quadrature nodes on the continuous spectrum (k < 0).
    #[arg(long, default_value_t = DEFAULT_NODE_COUNT)]
    node_count: usize,
    /// Upper end of the continuous window (k < 0); default 1600|k|.
    #[arg(long)]
    lambda_max: Option<f64>,
}

impl SpectralArgs {
    fn truncation(&self) -> SpectralTruncation {
        SpectralTruncation { j_max: self.j_max, lambda_max: self.lambda_max, node_count: self.node_count }
    }
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    spectral: SpectralArgs,
    /// Factor index (0-based); the base when omitted.
    #[arg(long)]
    factor: Option<usize>,
}

#[derive(Args)]
struct EigenArgs {
    #[command(flatten)]
    common: Common,
    /// Spectral value λ (an atom k(n/2+j)² when k > 0).
    #[arg(long)]
    lambda: Option<f64>,
    /// Atom index j, instead of --lambda (k > 0).
    #[arg(long)]
    j: Option<usize>,
    /// Radii, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    r: Vec<f64>,
    #[arg(long)]
    factor: Option<usize>,
}

#[derive(Args)]
struct TransformArgs {
    #[command(flatten)]
    common: Common,
    #[command(flatten)]
    spectral: SpectralArgs,
    /// Ring radius c in f(r) = exp(-a (r² - c²)²).
    #[arg(long, default_value_t = 0.8)]
    center: f64,
    /// Bump sharpness a.
    #[arg(long, default_value_t = 5.0)]
    sharpness: f64,
    /// Radii for the round trip, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "0,0.4,0.8,1.2")]
    r: Vec<f64>,
    #[arg(long)]
    factor: Option<usize>,
}

#[derive(Args)]
struct RiemannianArgs {
    #[command(flatten)]
    common: Common,
    /// Base radii r₀, comma separated (one output row each).
    #[arg(long, value_delimiter = ',', required = true)]
    r0: Vec<f64>,
    /// Factor radii r₁..r_N, comma separated.
    #[arg(long, value_delimiter = ',')]
    rbar: Vec<f64>,
    /// Relative tolerance of the adaptive truncation.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Use the fixed truncation given by --j-max/--node-count/--lambda-max.
    #[arg(long)]
    fixed: bool,
    #[command(flatten)]
    spectral: SpectralArgs,
}

#[derive(Args)]
struct LorentzianArgs {
    #[command(flatten)]
    common: Common,
    /// Riesz parameter α (real part).
    #[arg(long)]
    alpha: f64,
    /// Imaginary part of α.
    #[arg(long, default_value_t = 0.0)]
    alpha_im: f64,
    #[arg(long)]
    r0: f64,
    /// Spectral values λ̄ of the factors, comma separated.
    #[arg(long, value_delimiter = ',')]
    lambda_bar: Vec<f64>,
    /// Atoms of the base used for f_α.
    #[arg(long, default_value_t = 512)]
    j_max: usize,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum)]
    what: Quantity,
    /// Oracle grid points.
    #[arg(long, default_value_t = DEFAULT_GRID)]
    grid: usize,
    /// Base radius of the pointwise comparison.
    #[arg(long, default_value_t = 1.0)]
    r0: f64,
    /// Factor radii (green with one factor).
    #[arg(long, value_delimiter = ',')]
    rbar: Vec<f64>,
    /// Riesz parameter for --what falpha; default n₀ + 4.
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, default_value_t = 512)]
    j_max: usize,
    /// Discrete modes of the factor (green with one factor).
    #[arg(long, default_value_t = 16)]
    modes: usize,
}

/// Rendered output: a JSON document or CSV text.
enum Output {
    Json(Value),
    Csv(String),
}

fn load_config(path: &PathBuf) -> Result<ProductConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::ConfigError(format!("cannot read {}: {e}", path.display())))?;
    ProductConfig::from_json(&text)
}

fn select(config: &ProductConfig, factor: Option<usize>) -> Result<SpaceForm> {
    match factor {
        None => Ok(config.base),
        Some(i) => config.factors.get(i).copied().ok_or_else(|| {
            Error::InvalidParameter(format!("factor {i} out of range ({} factors)", config.factors.len()))
        }),
    }
}

fn meta(command: &str, config: &ProductConfig, parameters: Value) -> Value {
    json!({
        "command": command,
        "version": env!("CARGO_PKG_VERSION"),
        "config": config,
        "parameters": parameters,
    })
}

fn document(meta: Value, result: Value) -> Value {
    json!({ "meta": meta, "result": result })
}

fn csv(meta: &Value, header: &[String], rows: &[Vec<f64>]) -> String {
    let mut s = format!("# {meta}\n{}\n", header.join(","));
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:?}")).collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn spectrum(a: &SpectrumArgs) -> Result<Output> {
    let config = load_config(&a.common.config)?;
    let m = select(&config, a.factor)?;
    let t = a.spectral.truncation();
    let rep = spectral_measure(&m, &t)?;
    let params = json!({
        "factor": a.factor,
        "j_max": t.j_max,
        "node_count": t.node_count,
        "lambda_max": t.resolved_lambda_max(m.k()),
    });
    let meta = meta("spectrum", &config, params);
    Ok(match a.common.out {
        Format::Json => Output::Json(document(meta, to_value(&rep))),
        Format::Csv => {
            let rows: Vec<Vec<f64>> = rep.lambdas().iter().zip(rep.masses()).map(|(&l, w)| vec![l, w]).collect();
            Output::Csv(csv(&meta, &["lambda".into(), "mass".into()], &rows))
        }
    })
}

fn eigen(a: &EigenArgs) -> Result<Output> {
    let config = load_config(&a.common.config)?;
    let m = select(&config, a.factor)?;
    let lambda = match (a.lambda, a.j) {
        (Some(l), None) => l,
        (None, Some(j)) if m.is_compact() => atom(&m, j),
        (None, Some(_)) => return Err(Error::DomainError("--j needs k > 0".into())),
        _ => return Err(Error::InvalidParameter("give exactly one of --lambda and --j".into())),
    };
    let mut rows = Vec::with_capacity(a.r.len());
    for &r in &a.r {
        let w = eigenfunction_w_jet(&m, lambda, r)?;
        let residual = if r > 0.0 && m.check_radius(r).is_ok() {
            apply_t(&m, |x| eigenfunction_w_jet(&m, lambda, x), r)? + lambda * w[0]
        } else {
            0.0
        };
        rows.push(vec![r, w[0], w[1], w[2], residual]);
    }
    let meta = meta("eigen", &config, json!({ "factor": a.factor, "lambda": lambda }));
    let header: Vec<String> = ["r", "w", "dw", "d2w", "residual"].iter().map(|s| s.to_string()).collect();
    Ok(match a.common.out {
        Format::Json => {
            let result: Vec<Value> = rows
                .iter()
                .map(|row| header.iter().cloned().zip(row.iter().map(|&v| json!(v))).collect())
                .collect();
            Output::Json(document(meta, json!({ "lambda": lambda, "samples": result })))
        }
        Format::Csv => Output::Csv(csv(&meta, &header, &rows)),
    })
}

fn transform(a: &TransformArgs) -> Result<Output> {
    if a.common.out == Format::Csv {
        return Err(Error::InvalidParameter("transform supports --out json only".into()));
    }
    if !(a.sharpness > 0.0) {
        return Err(Error::InvalidParameter("--sharpness must be > 0".into()));
    }
    let config = load_config(&a.common.config)?;
    let m = select(&config, a.factor)?;
    let t = a.spectral.truncation();
    let (c, s) = (a.center, a.sharpness);
    let bump = move |r: f64| (-s * (r * r - c * c).powi(2)).exp();
    let r_max = if m.is_compact() { m.diam() } else { (c * c + 30.0 / s.sqrt()).sqrt() };
    let grid = RadialGrid::composite(&m, r_max, 40, 10)?;
    let f = SampledRadialFunction::from_fn(grid, bump);
    let rep = spectral_measure(&m, &t)?;
    let coeffs = forward_transform(&m, &f, &rep)?;
    let back = inverse_transform_on_points(&m, &coeffs, &a.r)?;
    let round_trip: Vec<Value> = a
        .r
        .iter()
        .zip(&back)
        .map(|(&r, &v)| json!({ "r": r, "f": bump(r), "inverse": v, "abs_err": (v - bump(r)).abs() }))
        .collect();
    let params = json!({
        "factor": a.factor,
        "center": c,
        "sharpness": s,
        "j_max": t.j_max,
        "node_count": t.node_count,
        "lambda_max": t.resolved_lambda_max(m.k()),
        "grid": { "r_max": r_max, "panels": 40, "per_panel": 10 },
    });
    Ok(Output::Json(document(
        meta("transform", &config, params),
        json!({ "coefficients": to_value(&coeffs), "round_trip": round_trip }),
    )))
}

fn green_riemannian(a: &RiemannianArgs) -> Result<Output> {
    let config = load_config(&a.common.config)?;
    if config.base.signature != Signature::Riemannian {
        return Err(Error::InvalidParameter("green riemannian needs a Riemannian base".into()));
    }
    let t = a.spectral.truncation();
    let mut results: Vec<(f64, GreenKernelResult)> = Vec::with_capacity(a.r0.len());
    for &r0 in &a.r0 {
        let k = if a.fixed {
            let ts = vec![t; config.factors.len()];
            product_kernel_fixed(&config, r0, &a.rbar, &ts)?
        } else {
            product_kernel(&config, r0, &a.rbar, a.tol)?
        };
        results.push((r0, k));
    }
    let params = json!({
        "rbar": a.rbar,
        "tol": a.tol,
        "fixed": a.fixed,
        "j_max": t.j_max,
        "node_count": t.node_count,
        "lambda_max": t.lambda_max,
    });
    let meta = meta("green riemannian", &config, params);
    Ok(match a.common.out {
        Format::Json => {
            let rows: Vec<Value> = results
                .iter()
                .map(|(r0, k)| json!({ "r0": r0, "rbar": a.rbar, "kernel": to_value(k) }))
                .collect();
            Output::Json(document(meta, json!(rows)))
        }
        Format::Csv => {
            let mut header = vec!["r0".to_string()];
            header.extend((1..=a.rbar.len()).map(|i| format!("r{i}")));
            header.extend(["kernel".to_string(), "trunc_err".to_string()]);
            let rows: Vec<Vec<f64>> = results
                .iter()
                .map(|(r0, k)| {
                    let mut row = vec![*r0];
                    row.extend(&a.rbar);
                    row.extend([k.value, k.truncation_error]);
                    row
                })
                .collect();
            Output::Csv(csv(&meta, &header, &rows))
        }
    })
}

fn green_lorentzian(a: &LorentzianArgs) -> Result<Output> {
    if a.common.out == Format::Csv {
        return Err(Error::InvalidParameter("green lorentzian supports --out json only".into()));
    }
    let config = load_config(&a.common.config)?;
    let params = json!({
        "alpha": [a.alpha, a.alpha_im],
        "r0": a.r0,
        "lambda_bar": a.lambda_bar,
        "j_max": a.j_max,
    });
    let meta = meta("green lorentzian", &config, params);
    let shift = config.mass * config.mass + a.lambda_bar.iter().sum::<f64>();
    let weight = sfgreen::green::synthesis_weight(&config, &a.lambda_bar)?;
    let result = if a.alpha == 2.0 && a.alpha_im == 0.0 {
        let v = advanced_kernel_weights(&config, &a.lambda_bar, a.r0)?;
        json!({ "method": "variation_of_parameters", "lambda_shift": shift, "synthesis_weight": weight, "advanced_weight": v })
    } else {
        let p = RieszParams::new(num_complex::Complex64::new(a.alpha, a.alpha_im), config.base, shift)?;
        let f = FAlpha::new(&p, a.j_max)?.value(a.r0)?;
        let g = riesz_kernel(&p, a.r0)?;
        json!({
            "method": "spectral",
            "lambda_shift": shift,
            "synthesis_weight": weight,
            "f_alpha": [f.re, f.im],
            "g_alpha": [g.re, g.im],
            "weighted_f_alpha": [weight * f.re, weight * f.im],
        })
    };
    Ok(Output::Json(document(meta, result)))
}

fn report(quantity: &str, analytic: f64, oracle: f64) -> Value {
    json!({
        "quantity": quantity,
        "analytic": analytic,
        "oracle": oracle,
        "rel_err": ((analytic - oracle) / analytic).abs(),
    })
}

fn oracle_compare(a: &CompareArgs) -> Result<Output> {
    if a.common.out == Format::Csv {
        return Err(Error::InvalidParameter("oracle compare supports --out json only".into()));
    }
    let config = load_config(&a.common.config)?;
    let base = config.base;
    let m2 = config.mass * config.mass;
    let mut params = json!({ "what": a.what, "grid": a.grid, "r0": a.r0 });
    let entries: Vec<Value> = match a.what {
        Quantity::Eigen => {
            if !base.is_compact() {
                return Err(Error::DomainError("eigenvalue comparison needs k₀ > 0".into()));
            }
            let op = discretize_t(&base, &oracle_grid(&base, a.grid, None)?)?;
            op.eigenvalues(4)
                .iter()
                .enumerate()
                .map(|(j, &l)| report(&format!("eigenvalue_{j}"), atom(&base, j), l))
                .collect()
        }
        Quantity::Green if config.factors.is_empty() => {
            let grid = oracle_grid(&base, a.grid, None)?;
            let op = discretize_t(&base, &grid)?;
            let g = discrete_green(&op, m2)?;
            let green = sfgreen::green::RadialGreen::new(&base, m2)?;
            let exact = green.values(&grid.points)?;
            let mut l2 = report("green_l2", 1.0, 1.0);
            l2["rel_err"] = json!(relative_l2(&grid, &g.values, &exact, 0.1));
            l2["analytic"] = Value::Null;
            l2["oracle"] = Value::Null;
            vec![report("green_at_r0", green.value(a.r0)?, interpolate(&grid, &g.values, a.r0)?), l2]
        }
        Quantity::Green => {
            let grids = TensorGrids { base_points: a.grid, factor_points: a.grid, modes: a.modes, r_max: None };
            params["modes"] = json!(a.modes);
            params["rbar"] = json!(a.rbar);
            params["tol"] = json!(DEFAULT_TOL);
            let k = product_kernel(&config, a.r0, &a.rbar, DEFAULT_TOL)?;
            let o = tensor_resolvent(&config, &grids, a.r0, &a.rbar)?;
            vec![report("product_kernel", k.value, o)]
        }
        Quantity::Falpha => {
            let alpha = a.alpha.unwrap_or(base.n() + 4.0);
            params["alpha"] = json!(alpha);
            params["j_max"] = json!(a.j_max);
            let p = RieszParams::real(alpha, base, m2)?;
            let f = FAlpha::new(&p, a.j_max)?;
            let grid = oracle_grid(&base, a.grid, None)?;
            let op = discretize_t(&base, &grid)?;
            let src: Vec<f64> = grid.points.iter().map(|&r| Ok(riesz_kernel(&p, r)?.re)).collect::<Result<_>>()?;
            let o = resolvent_solve(&op, m2, &SampledRadialFunction::new(grid.clone(), src)?)?;
            let spectral: Vec<f64> = grid.points.iter().map(|&r| Ok(f.value(r)?.re)).collect::<Result<_>>()?;
            let mut l2 = report("f_alpha_l2", 1.0, 1.0);
            l2["rel_err"] = json!(relative_l2(&grid, &spectral, &o.values, 0.0));
            l2["analytic"] = Value::Null;
            l2["oracle"] = Value::Null;
            vec![report("f_alpha_at_r0", f.value(a.r0)?.re, interpolate(&grid, &o.values, a.r0)?), l2]
        }
    };
    Ok(Output::Json(document(meta("oracle compare", &config, params), json!(entries))))
}

fn run(cli: &Cli) -> Result<(Output, Option<PathBuf>)> {
    let (out, path) = match &cli.command {
        Command::Spectrum(a) => (spectrum(a)?, &a.common.output),
        Command::Eigen(a) => (eigen(a)?, &a.common.output),
        Command::Transform(a) => (transform(a)?, &a.common.output),
        Command::Green { kind: GreenCommand::Riemannian(a) } => (green_riemannian(a)?, &a.common.output),
        Command::Green { kind: GreenCommand::Lorentzian(a) } => (green_lorentzian(a)?, &a.common.output),
        Command::Oracle { kind: OracleCommand::Compare(a) } => (oracle_compare(a)?, &a.common.output),
    };
    Ok((out, path.clone()))
}

fn render(out: &Output) -> String {
    match out {
        Output::Json(v) => format!("{}\n", serde_json::to_string_pretty(v).expect("serializable")),
        Output::Csv(s) => s.clone(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, path)) => {
            let text = render(&out);
            let written = match path {
                Some(p) => std::fs::write(&p, text),
                None => std::io::stdout().write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("sfgreen: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            let doc = json!({ "error": e.kind(), "message": e.to_string() });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            ExitCode::from(if matches!(e, Error::ConfigError(_)) { 2 } else { 1 })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sfgreen::green::radial_green;

    fn config_file(name: &str, config: &ProductConfig) -> PathBuf {
        let path = std::env::temp_dir().join(format!("sfgreen-cli-{}-{name}.json", std::process::id()));
        std::fs::write(&path, config.to_json()).unwrap();
        path
    }

    fn run_args(args: &[&str]) -> Result<Output> {
        let cli = Cli::try_parse_from(std::iter::once("sfgreen").chain(args.iter().copied())).unwrap();
        run(&cli).map(|(out, _)| out)
    }

    fn unit_config(factors: Vec<SpaceForm>) -> ProductConfig {
        ProductConfig::new(SpaceForm::new(2, 1.0).unwrap(), factors, 1.0).unwrap()
    }

    #[test]
    fn spectrum_lists_atoms() {
        let path = config_file("spectrum", &unit_config(vec![]));
        let out = run_args(&["spectrum", "--config", path.to_str().unwrap(), "--j-max", "3"]).unwrap();
        let Output::Json(doc) = out else { panic!("expected json") };
        assert_eq!(doc["meta"]["command"], "spectrum");
        let text = doc["result"].to_string();
        for atom in ["1.0", "4.0", "9.0", "16.0"] {
            assert!(text.contains(atom), "{atom} missing in {text}");
        }
    }

    #[test]
    fn empty_product_is_base_green() {
        let path = config_file("green", &unit_config(vec![]));
        let out = run_args(&["green", "riemannian", "--config", path.to_str().unwrap(), "--r0", "0.7"]).unwrap();
        let Output::Json(doc) = out else { panic!("expected json") };
        let value = doc["result"][0]["kernel"]["value"].as_f64().unwrap();
        let exact = radial_green(&SpaceForm::new(2, 1.0).unwrap(), 1.0, 0.7).unwrap();
        assert!((value / exact - 1.0).abs() < 1e-12, "{value} vs {exact}");
    }

    #[test]
    fn csv_rows_parse_back() {
        let cfg = unit_config(vec![SpaceForm::new(2, 1.0).unwrap()]);
        let path = config_file("csv", &cfg);
        let args = ["green", "riemannian", "--config", path.to_str().unwrap(), "--r0", "1", "--rbar", "1", "--out", "csv"];
        let Output::Csv(text) = run_args(&args).unwrap() else { panic!("expected csv") };
        let mut lines = text.lines();
        let meta: Value = serde_json::from_str(lines.next().unwrap().trim_start_matches("# ")).unwrap();
        assert_eq!(meta["command"], "green riemannian");
        assert_eq!(lines.next().unwrap(), "r0,r1,kernel,trunc_err");
        let row: Vec<f64> = lines.next().unwrap().split(',').map(|c| c.parse().unwrap()).collect();
        let direct = product_kernel(&cfg, 1.0, &[1.0], DEFAULT_TOL).unwrap();
        assert_eq!(row[2], direct.value);
    }

    #[test]
    fn malformed_config_is_config_error() {
        let path = std::env::temp_dir().join(format!("sfgreen-cli-{}-bad.json", std::process::id()));
        std::fs::write(&path, "{ \"base\": ").unwrap();
        let err = run_args(&["spectrum", "--config", path.to_str().unwrap()]).err().unwrap();
        assert!(matches!(err, Error::ConfigError(_)));
        let missing = run_args(&["spectrum", "--config", "/nonexistent/sfgreen.json"]).err().unwrap();
        assert!(matches!(missing, Error::ConfigError(_)));
    }
}
