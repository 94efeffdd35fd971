//! Command-line front end.
//!
//! ```text
//! cpcenter <curve|solve|emit|bench|verify> <input>... [options]
//! ```
//!
//! Exit codes: 0 ok, 1 verification failure, 2 input error, 3 configuration
//! error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::Command as Process;
use std::time::Instant;

use clap::{Parser, ValueEnum};

use crate::cpc::{
    solve_cpc_lscp_e_with, solve_cpc_lscp_with, solve_p, solve_p1, trivial_tail, verify_curve, CurveSolution,
    EnumOptions, VerificationReport,
};
use crate::dataset_io::{
    parse_tsplib_with, parse_xy_table_named, render_curve_svg, write_curve_csv, write_curve_json, read_curve_json,
    SvgOptions, TsplibOptions,
};
use crate::geometry::{distance_matrix, unique_distance_ladder, DistanceMatrix, DistanceMode, PointSet};
use crate::mip_emit::{emit_cpc_mip, emit_cpc_mipub};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CommandKind {
    Curve,
    Solve,
    Emit,
    Bench,
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    Tsplib,
    Xy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Lscp,
    Lscpe,
    TrivialOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Mip,
    Mipub,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Real,
    Integer,
}

#[derive(Debug, Parser)]
#[command(name = "cpcenter", version, about = "Exact complete vertex p-center curves")]
struct Args {
    command: CommandKind,
    /// Instance file(s); `bench` accepts several.
    inputs: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "real")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "lscpe")]
    algorithm: Algorithm,
    #[arg(long, default_value_t = 3)]
    enum_max: usize,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long, value_enum, default_value = "mip")]
    variant: Variant,
    #[arg(long)]
    ub: Option<f64>,
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Curve JSON to write (`curve`) or to check (`verify`).
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
    /// LP file written by `emit`; stdout when absent.
    #[arg(long)]
    lp: Option<PathBuf>,
    #[arg(long, env = "CPCENTER_THREADS")]
    threads: Option<usize>,
    /// Read GEO/ATT/... TSPLIB coordinates as planar points.
    #[arg(long)]
    geo_override: bool,
    #[arg(long, value_enum, default_value = "auto")]
    format: InputFormat,
    /// `bench`: also run both algorithms in integer mode.
    #[arg(long)]
    both_modes: bool,
    /// `emit`: external solver command; `{model}` is replaced by the LP path.
    /// Its output must contain `objective=<value>`.
    #[arg(long)]
    solver_cmd: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub input: PathBuf,
    pub format: InputFormat,
    pub mode: DistanceMode,
    pub algorithm: Algorithm,
    pub enum_max: usize,
    pub csv: Option<PathBuf>,
    pub json: Option<PathBuf>,
    pub svg: Option<PathBuf>,
    pub threads: Option<usize>,
    pub geo_override: bool,
}

impl RunConfig {
    pub fn new(input: impl Into<PathBuf>) -> Self {
        Self {
            input: input.into(),
            format: InputFormat::Auto,
            mode: DistanceMode::Real,
            algorithm: Algorithm::Lscpe,
            enum_max: 3,
            csv: None,
            json: None,
            svg: None,
            threads: None,
            geo_override: false,
        }
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.algorithm == Algorithm::Lscpe && !(2..=4).contains(&self.enum_max) {
            return Err(CliError::Config(format!("--enum-max must be in 2..=4, got {}", self.enum_max)));
        }
        if self.threads == Some(0) {
            return Err(CliError::Config("--threads must be at least 1".into()));
        }
        Ok(())
    }

    fn enum_options(&self) -> EnumOptions {
        EnumOptions { threads: self.threads, ..EnumOptions::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Verification(String),
    Input(String),
    Config(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Input(_) => 2,
            CliError::Config(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Verification(s) | CliError::Input(s) | CliError::Config(s) => s,
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}

fn out_err(e: std::io::Error) -> CliError {
    CliError::Input(format!("writing output: {e}"))
}

fn detect_tsplib(path: &Path, text: &str) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("tsp")) || text.contains("NODE_COORD_SECTION")
}

pub fn load_instance(path: &Path, format: InputFormat, geo_override: bool) -> Result<PointSet, CliError> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let tsplib = match format {
        InputFormat::Tsplib => true,
        InputFormat::Xy => false,
        InputFormat::Auto => detect_tsplib(path, &text),
    };
    let parsed = if tsplib {
        parse_tsplib_with(&text, TsplibOptions { geo_as_planar: geo_override }).map(|ps| {
            if ps.name().is_empty() {
                PointSet::new(&ps.points().iter().map(|p| (p.x, p.y)).collect::<Vec<_>>(), stem.clone())
                    .expect("already validated")
            } else {
                ps
            }
        })
    } else {
        parse_xy_table_named(&text, &stem)
    };
    parsed.map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_matrix(cfg: &RunConfig) -> Result<DistanceMatrix, CliError> {
    let ps = load_instance(&cfg.input, cfg.format, cfg.geo_override)?;
    Ok(distance_matrix(&ps, cfg.mode))
}

fn run_algorithm(
    dm: &DistanceMatrix,
    algorithm: Algorithm,
    enum_max: usize,
    opts: &EnumOptions,
) -> Result<CurveSolution, CliError> {
    let ladder = unique_distance_ladder(dm);
    match algorithm {
        Algorithm::Lscp => Ok(solve_cpc_lscp_with(dm, &ladder)),
        Algorithm::Lscpe => solve_cpc_lscp_e_with(dm, &ladder, enum_max, opts).map_err(|e| match e {
            crate::error::CpcError::BudgetExceeded { .. } | crate::error::CpcError::UnsupportedP(_) => {
                CliError::Config(e.to_string())
            }
            other => CliError::Input(other.to_string()),
        }),
        Algorithm::TrivialOnly => unreachable!("handled by the caller"),
    }
}

fn write_artifact(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn fmt_z(z: f64, mode: DistanceMode) -> String {
    match mode {
        DistanceMode::Real => format!("{z:.6}"),
        DistanceMode::Integer => format!("{}", z as u64),
    }
}

fn join(f: &[usize]) -> String {
    f.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(" ")
}

fn print_report(out: &mut dyn Write, report: &VerificationReport) -> Result<(), CliError> {
    writeln!(out, "verification").map_err(out_err)?;
    write!(out, "{report}").map_err(out_err)
}

/// Solves the whole curve, verifies it, and writes the requested artifacts.
pub fn cmd_curve(cfg: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    cfg.validate()?;
    let dm = load_matrix(cfg)?;
    if cfg.algorithm == Algorithm::TrivialOnly {
        return trivial_only(cfg, &dm, out);
    }
    let started = Instant::now();
    let sol = run_algorithm(&dm, cfg.algorithm, cfg.enum_max, &cfg.enum_options())?;
    let elapsed = started.elapsed();
    let report = verify_curve(&sol.curve, &dm);
    let ladder = unique_distance_ladder(&dm);

    let w = |out: &mut dyn Write, k: &str, v: String| writeln!(out, "{k:<12} {v}").map_err(out_err);
    w(out, "instance", dm.name().to_string())?;
    w(out, "mode", dm.mode().to_string())?;
    w(out, "m", dm.len().to_string())?;
    w(out, "K", ladder.top().to_string())?;
    let algo = match cfg.algorithm {
        Algorithm::Lscpe => format!("lscpe (enum_max {})", cfg.enum_max),
        _ => "lscp".to_string(),
    };
    w(out, "algorithm", algo)?;
    w(out, "iterations", sol.stats.lscp_iterations.to_string())?;
    w(out, "enumerated", sol.stats.enumerated.to_string())?;
    w(out, "wall time", format!("{:.3} s", elapsed.as_secs_f64()))?;
    print_report(out, &report)?;
    if !report.passed() {
        return Err(CliError::Verification(format!("{}: curve failed verification; nothing written", dm.name())));
    }

    if let Some(path) = &cfg.csv {
        write_artifact(path, &write_curve_csv(&sol.curve).expect("verified curve is complete"))?;
    }
    if let Some(path) = &cfg.json {
        write_artifact(path, &write_curve_json(&sol.curve).expect("verified curve is complete"))?;
    }
    if let Some(path) = &cfg.svg {
        let svg = render_curve_svg(&sol.curve, &SvgOptions::default()).expect("verified curve is complete");
        write_artifact(path, &svg)?;
    }
    Ok(())
}

fn trivial_only(cfg: &RunConfig, dm: &DistanceMatrix, out: &mut dyn Write) -> Result<(), CliError> {
    if cfg.csv.is_some() || cfg.json.is_some() || cfg.svg.is_some() {
        return Err(CliError::Config("trivial-only yields a partial curve; curve outputs are unavailable".into()));
    }
    let m = dm.len();
    let mut rows = vec![(1, solve_p1(dm))];
    if let Ok(tail) = trivial_tail(dm) {
        if m >= 3 {
            rows.push((m - 1, tail.merged));
        }
        rows.push((m, tail.full));
    }
    let mut bad = Vec::new();
    for (p, sol) in &rows {
        let covers = (0..m).all(|i| sol.facilities.iter().any(|&j| dm.value(i, j) <= sol.level));
        if !covers || sol.facilities.len() > *p {
            bad.push(*p);
        }
        writeln!(out, "p = {p}  z = {}  facilities = {}", fmt_z(sol.radius, dm.mode()), join(&sol.facilities))
            .map_err(out_err)?;
    }
    if !bad.is_empty() {
        return Err(CliError::Verification(format!("certificate check failed for p in {bad:?}")));
    }
    Ok(())
}

/// Solves a single p by the cheapest exact route.
pub fn cmd_solve_p(cfg: &RunConfig, p: usize, out: &mut dyn Write) -> Result<(), CliError> {
    cfg.validate()?;
    let dm = load_matrix(cfg)?;
    let m = dm.len();
    if p == 0 || p > m {
        return Err(CliError::Config(format!("--p must be in 1..={m}, got {p}")));
    }
    let enum_max = if cfg.algorithm == Algorithm::Lscpe { cfg.enum_max } else { 1 };
    let started = Instant::now();
    let (rec, level, stats) = solve_p(&dm, p, enum_max, &cfg.enum_options()).map_err(|e| CliError::Config(e.to_string()))?;
    let elapsed = started.elapsed();

    let fac = rec.facilities.clone().unwrap_or_default();
    let ladder = unique_distance_ladder(&dm);
    let on_ladder = ladder.rank_of(level).is_some();
    let covers = fac.len() <= p && fac.iter().all(|&j| j < m) && (0..m).all(|i| fac.iter().any(|&j| dm.value(i, j) <= level));
    writeln!(out, "p           {p}").map_err(out_err)?;
    writeln!(out, "z           {}", fmt_z(rec.z, dm.mode())).map_err(out_err)?;
    writeln!(out, "facilities  {}", join(&fac)).map_err(out_err)?;
    writeln!(out, "source      {}", rec.source).map_err(out_err)?;
    writeln!(out, "iterations  {}", stats.lscp_iterations).map_err(out_err)?;
    writeln!(out, "wall time   {:.3} s", elapsed.as_secs_f64()).map_err(out_err)?;
    if !(on_ladder && covers) {
        return Err(CliError::Verification(format!("p = {p}: certificate does not cover at z")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct EmitRequest {
    pub p: usize,
    pub variant: Variant,
    pub ub: Option<f64>,
    pub lp: Option<PathBuf>,
    pub solver_cmd: Option<String>,
}

/// Writes the LP model for one p; optionally hands it to an external solver
/// and compares its objective with the native value.
pub fn cmd_emit(cfg: &RunConfig, req: &EmitRequest, out: &mut dyn Write) -> Result<(), CliError> {
    cfg.validate()?;
    let dm = load_matrix(cfg)?;
    let m = dm.len();
    if req.p == 0 || req.p > m {
        return Err(CliError::Config(format!("--p must be in 1..={m}, got {}", req.p)));
    }
    let opts = cfg.enum_options();
    let text = match req.variant {
        Variant::Mip => emit_cpc_mip(&dm, req.p),
        Variant::Mipub => {
            let ub = match req.ub {
                Some(u) => u,
                // p = 1 has no predecessor; the largest distance keeps every variable
                None if req.p == 1 => dm.to_radius(dm.max_value()),
                None => solve_p(&dm, req.p - 1, cfg.enum_max.clamp(1, 4), &opts)
                    .map_err(|e| CliError::Config(e.to_string()))?
                    .0
                    .z,
            };
            emit_cpc_mipub(&dm, req.p, ub)
        }
    }
    .map_err(|e| CliError::Config(e.to_string()))?;

    let model_path = match (&req.lp, &req.solver_cmd) {
        (Some(path), _) => {
            write_artifact(path, &text)?;
            Some(path.clone())
        }
        (None, Some(_)) => {
            let path = std::env::temp_dir().join(format!("cpcenter-{}-p{}.lp", std::process::id(), req.p));
            write_artifact(&path, &text)?;
            Some(path)
        }
        (None, None) => {
            out.write_all(text.as_bytes()).map_err(out_err)?;
            None
        }
    };

    if let (Some(template), Some(path)) = (&req.solver_cmd, model_path) {
        let objective = run_solver(template, &path)?;
        let native = solve_p(&dm, req.p, cfg.enum_max.clamp(1, 4), &opts)
            .map_err(|e| CliError::Config(e.to_string()))?
            .0
            .z;
        writeln!(out, "external objective {objective}").map_err(out_err)?;
        writeln!(out, "native z_{}        {native}", req.p).map_err(out_err)?;
        if (objective - native).abs() > 1e-6 * native.max(1.0) {
            return Err(CliError::Verification(format!(
                "external objective {objective} differs from native z_{} = {native}",
                req.p
            )));
        }
    }
    Ok(())
}

fn run_solver(template: &str, model: &Path) -> Result<f64, CliError> {
    let cmd = template.replace("{model}", &model.display().to_string());
    let output = Process::new("sh")
        .arg("-c")
        .arg(&cmd)
        .output()
        .map_err(|e| CliError::Config(format!("cannot run solver command: {e}")))?;
    if !output.status.success() {
        return Err(CliError::Config(format!("solver command exited with {}", output.status)));
    }
    parse_objective(&String::from_utf8_lossy(&output.stdout))
        .ok_or_else(|| CliError::Config("solver output has no `objective=<value>` line".into()))
}

/// First `objective=<value>` token in solver output.
pub fn parse_objective(text: &str) -> Option<f64> {
    text.split_whitespace()
        .filter_map(|tok| tok.strip_prefix("objective="))
        .find_map(|v| v.parse::<f64>().ok())
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub instance: String,
    pub mode: DistanceMode,
    pub m: usize,
    pub k: usize,
    pub lscp_iterations: usize,
    pub lscpe_iterations: usize,
    pub lscp_seconds: f64,
    pub lscpe_seconds: f64,
}

impl BenchRow {
    pub fn reduction_percent(&self) -> f64 {
        if self.lscp_iterations == 0 {
            0.0
        } else {
            100.0 * (1.0 - self.lscpe_iterations as f64 / self.lscp_iterations as f64)
        }
    }
}

/// Runs both algorithms on every instance and reports iteration counts.
pub fn cmd_bench(
    cfg: &RunConfig,
    inputs: &[PathBuf],
    both_modes: bool,
    out: &mut dyn Write,
) -> Result<Vec<BenchRow>, CliError> {
    if inputs.is_empty() {
        return Err(CliError::Config("bench needs at least one instance".into()));
    }
    let mut probe = cfg.clone();
    probe.algorithm = Algorithm::Lscpe;
    probe.validate()?;
    let modes: Vec<DistanceMode> =
        if both_modes { vec![DistanceMode::Real, DistanceMode::Integer] } else { vec![cfg.mode] };
    let opts = cfg.enum_options();
    let mut rows = Vec::new();
    let mut problems = Vec::new();
    writeln!(
        out,
        "{:<12} {:<8} {:>5} {:>7} {:>10} {:>10} {:>10} {:>10} {:>9}",
        "instance", "mode", "m", "K", "lscp it", "lscpe it", "lscp s", "lscpe s", "cut %"
    )
    .map_err(out_err)?;
    for path in inputs {
        let ps = load_instance(path, cfg.format, cfg.geo_override)?;
        for &mode in &modes {
            let dm = distance_matrix(&ps, mode);
            let t0 = Instant::now();
            let a = run_algorithm(&dm, Algorithm::Lscp, cfg.enum_max, &opts)?;
            let t1 = Instant::now();
            let b = run_algorithm(&dm, Algorithm::Lscpe, cfg.enum_max, &opts)?;
            let t2 = Instant::now();
            let row = BenchRow {
                instance: dm.name().to_string(),
                mode,
                m: dm.len(),
                k: unique_distance_ladder(&dm).top(),
                lscp_iterations: a.stats.lscp_iterations,
                lscpe_iterations: b.stats.lscp_iterations,
                lscp_seconds: (t1 - t0).as_secs_f64(),
                lscpe_seconds: (t2 - t1).as_secs_f64(),
            };
            writeln!(
                out,
                "{:<12} {:<8} {:>5} {:>7} {:>10} {:>10} {:>10.3} {:>10.3} {:>9.1}",
                row.instance,
                row.mode.to_string(),
                row.m,
                row.k,
                row.lscp_iterations,
                row.lscpe_iterations,
                row.lscp_seconds,
                row.lscpe_seconds,
                row.reduction_percent()
            )
            .map_err(out_err)?;
            for (name, sol) in [("lscp", &a), ("lscpe", &b)] {
                if !verify_curve(&sol.curve, &dm).passed() {
                    problems.push(format!("{} {mode}: {name} curve failed verification", row.instance));
                }
            }
            if a.levels != b.levels {
                problems.push(format!("{} {mode}: lscp and lscpe curves differ", row.instance));
            }
            if row.lscpe_iterations >= row.lscp_iterations {
                problems.push(format!(
                    "{} {mode}: lscpe used {} iterations, lscp {}",
                    row.instance, row.lscpe_iterations, row.lscp_iterations
                ));
            }
            rows.push(row);
        }
    }
    for p in &problems {
        writeln!(out, "FLAG {p}").map_err(out_err)?;
    }
    if problems.is_empty() {
        Ok(rows)
    } else {
        Err(CliError::Verification(format!("{} bench check(s) failed", problems.len())))
    }
}

/// Re-checks a curve JSON file against its instance.
pub fn cmd_verify(cfg: &RunConfig, curve_path: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let text = fs::read_to_string(curve_path).map_err(|e| io_err(curve_path, e))?;
    let curve = read_curve_json(&text).map_err(|e| CliError::Input(format!("{}: {e}", curve_path.display())))?;
    let ps = load_instance(&cfg.input, cfg.format, cfg.geo_override)?;
    let dm = distance_matrix(&ps, curve.mode);
    let report = verify_curve(&curve, &dm);
    writeln!(out, "{:<12} {}", "instance", curve.instance).map_err(out_err)?;
    writeln!(out, "{:<12} {}", "mode", curve.mode).map_err(out_err)?;
    print_report(out, &report)?;
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Verification(format!("{}: curve failed verification", curve_path.display())))
    }
}

fn dispatch(args: Args, out: &mut dyn Write) -> Result<(), CliError> {
    let single = |args: &Args| -> Result<PathBuf, CliError> {
        match args.inputs.as_slice() {
            [one] => Ok(one.clone()),
            [] => Err(CliError::Config("missing <input>".into())),
            _ => Err(CliError::Config("exactly one <input> expected".into())),
        }
    };
    let mut cfg = RunConfig {
        input: PathBuf::new(),
        format: args.format,
        mode: match args.mode {
            ModeArg::Real => DistanceMode::Real,
            ModeArg::Integer => DistanceMode::Integer,
        },
        algorithm: args.algorithm,
        enum_max: args.enum_max,
        csv: args.csv.clone(),
        json: args.json.clone(),
        svg: args.svg.clone(),
        threads: args.threads,
        geo_override: args.geo_override,
    };
    match args.command {
        CommandKind::Curve => {
            cfg.input = single(&args)?;
            cmd_curve(&cfg, out)
        }
        CommandKind::Solve => {
            cfg.input = single(&args)?;
            let p = args.p.ok_or_else(|| CliError::Config("solve needs --p".into()))?;
            cmd_solve_p(&cfg, p, out)
        }
        CommandKind::Emit => {
            cfg.input = single(&args)?;
            let p = args.p.ok_or_else(|| CliError::Config("emit needs --p".into()))?;
            let req = EmitRequest { p, variant: args.variant, ub: args.ub, lp: args.lp, solver_cmd: args.solver_cmd };
            cmd_emit(&cfg, &req, out)
        }
        CommandKind::Bench => cmd_bench(&cfg, &args.inputs, args.both_modes, out).map(|_| ()),
        CommandKind::Verify => {
            cfg.input = single(&args)?;
            let path = args.json.ok_or_else(|| CliError::Config("verify needs --json <curve file>".into()))?;
            cmd_verify(&cfg, &path, out)
        }
    }
}

/// Parses `argv`, runs the command and returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    3
                }
            };
        }
    };
    match dispatch(args, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn objective_parsing() {
        assert_eq!(parse_objective("status=optimal\nobjective=4.242641\n"), Some(4.242641));
        assert_eq!(parse_objective("x objective=7 y"), Some(7.0));
        assert_eq!(parse_objective("objective: 3"), None);
    }

    #[test]
    fn usage_errors_exit_3() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(run(["cpcenter", "bench"], &mut o, &mut e), 3);
        assert_eq!(run(["cpcenter", "frobnicate", "x"], &mut o, &mut e), 3);
        assert_eq!(run(["cpcenter", "curve"], &mut o, &mut e), 3);
        assert_eq!(run(["cpcenter", "--help"], &mut o, &mut e), 0);
    }

    #[test]
    fn missing_file_exits_2() {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        assert_eq!(run(["cpcenter", "curve", "/nonexistent/a.xy"], &mut o, &mut e), 2);
    }

    #[test]
    fn enum_max_validated() {
        let mut cfg = RunConfig::new("x.xy");
        cfg.enum_max = 5;
        assert!(matches!(cfg.validate(), Err(CliError::Config(_))));
        cfg.algorithm = Algorithm::Lscp;
        assert!(cfg.validate().is_ok());
    }
}
