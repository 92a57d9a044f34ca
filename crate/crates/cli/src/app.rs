//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use dartboard_core::bounds::{default_grid, BoundsEngine};
use dartboard_core::constructions::{
    concentric_construction, concentric_epsilon, reuleaux_3n, reuleaux_midpoint_construction,
    reuleaux_nine, small_n_construction, square_construction, triangle_construction,
    uniform_circle_construction, ConstructionParams, DEFAULT_EPSILON,
};
use dartboard_core::covers::{
    builtin_certificates, embed_in_region, optimize_covering, region_contains, ConvexRegion,
    CoveringCertificate, DEFAULT_GRID_H,
};
use dartboard_core::geom::{diameter, max_coverage, smallest_enclosing_circle};
use dartboard_core::search::{extremal_search, SearchConfig};
use dartboard_core::{CountMode, PointSet};
use serde_json::{json, Value};
use thiserror::Error;

use crate::certfile::CertificateJson;
use crate::plot::{render_svg, PlotError};
use crate::pointfile::{format_point_set, read_point_set, ParseError};
use crate::report::{bounds_csv, step_csv, table_csv};

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input: flags, files or parameters. Exit status 2.
    #[error("{0}")]
    Validation(String),
    /// Anything else. Exit status 1.
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<dartboard_core::Error> for CliError {
    fn from(e: dartboard_core::Error) -> Self {
        use dartboard_core::Error as E;
        match e {
            // The CLI only embeds into unit regions, so a wider set is bad input.
            E::EmbeddingFailure { diameter } if diameter > 1.0 + 1e-12 => {
                CliError::Validation(e.to_string())
            }
            E::ConstructionFailure { .. } | E::EmbeddingFailure { .. } => {
                CliError::Internal(e.to_string())
            }
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<PlotError> for CliError {
    fn from(e: PlotError) -> Self {
        CliError::Internal(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(
    name = "dartboard",
    version,
    about = "Disk coverage of unit-diameter point sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Point set file (`x,y` lines or JSON).
    #[arg(long = "in", value_name = "PATH")]
    input: PathBuf,
}

#[derive(Args, Debug)]
struct ModeArgs {
    #[arg(long, value_enum, default_value_t = ModeName::Exact)]
    mode: ModeName,
    /// Radius slack for the inflated and deflated modes.
    #[arg(long, default_value_t = 1e-6)]
    tau: f64,
}

impl ModeArgs {
    fn mode(&self) -> CountMode {
        match self.mode {
            ModeName::Exact => CountMode::Exact,
            ModeName::Inflated => CountMode::Inflated(self.tau),
            ModeName::Deflated => CountMode::Deflated(self.tau),
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum ModeName {
    Exact,
    Inflated,
    Deflated,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum ConstructionName {
    Triangle,
    UniformCircle,
    Reuleaux9,
    Reuleaux3n,
    Concentric,
    SmallN,
    Midpoints,
    Square,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum RegionName {
    Hexagon,
    Square,
}

impl RegionName {
    fn region(self) -> ConvexRegion {
        match self {
            RegionName::Hexagon => ConvexRegion::UNIT_HEXAGON,
            RegionName::Square => ConvexRegion::UNIT_SQUARE,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Largest number of points one radius-r disk covers.
    Maxcover {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        r: f64,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Largest pairwise distance.
    Diameter {
        #[command(flatten)]
        input: Input,
    },
    /// Smallest enclosing circle.
    Sec {
        #[command(flatten)]
        input: Input,
    },
    /// Writes a named extremal construction.
    Generate {
        #[arg(long, value_enum)]
        name: ConstructionName,
        /// Number of points; for reuleaux3n, the number per arc.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Verifies a certificate file, or every builtin covering without --in.
    VerifyCovering {
        #[arg(long = "in", value_name = "PATH")]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_GRID_H)]
        grid_h: f64,
        /// Writes the verified certificate(s) here.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Searches for a covering of a universal cover by k equal disks.
    OptimizeCovering {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        restarts: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Region to cover.
        #[arg(long, value_enum, default_value_t = RegionName::Hexagon)]
        name: RegionName,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Moves a diameter-1 set into a universal cover.
    Embed {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = RegionName::Hexagon)]
        name: RegionName,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Lower and upper bounds on N_n(r); CSV over the default grid without --r.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_GRID_H)]
        grid_h: f64,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Summary table at one sample point per row, as CSV.
    Table {
        #[arg(long, default_value_t = DEFAULT_GRID_H)]
        grid_h: f64,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Bounds on c(r) over the default grid, as SVG (or CSV for a .csv path).
    Plot {
        #[arg(long, default_value_t = DEFAULT_GRID_H)]
        grid_h: f64,
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
    },
    /// Annealing search for sets with small maximum coverage.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        iterations: Option<u32>,
        #[arg(long)]
        restarts: Option<u32>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (program name first), runs the command and returns the exit
/// status. JSON and CSV go to `stdout`; diagnostics go to stderr.
pub fn run<I, T>(args: I, stdout: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if e.use_stderr() {
                let _ = write!(std::io::stderr(), "{}", e.render());
            } else {
                let _ = write!(stdout, "{}", e.render());
            }
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(text) => match stdout.write_all(text.as_bytes()) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                1
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::Internal(format!("cannot write {}: {e}", path.display())))
}

fn to_line(value: Value) -> String {
    let mut s = value.to_string();
    s.push('\n');
    s
}

fn engine(grid_h: f64) -> CliResult<BoundsEngine> {
    if !(grid_h.is_finite() && grid_h > 0.0) {
        return Err(CliError::Validation(format!(
            "grid-h must be positive, got {grid_h}"
        )));
    }
    let certs = builtin_certificates()
        .into_iter()
        .map(|c| c.verified(grid_h))
        .collect();
    Ok(BoundsEngine::with_certificates(certs))
}

fn dispatch(command: Command) -> CliResult<String> {
    match command {
        Command::Maxcover { input, r, mode } => {
            let set = read_point_set(&input.input)?;
            let cov = max_coverage(&set, r, mode.mode())?;
            Ok(to_line(json!({
                "count": cov.count,
                "witness_center": [cov.witness.center.x, cov.witness.center.y],
                "r": r,
                "mode": format!("{:?}", mode.mode).to_lowercase(),
            })))
        }
        Command::Diameter { input } => {
            let set = read_point_set(&input.input)?;
            Ok(to_line(
                json!({ "n": set.len(), "diameter": diameter(&set) }),
            ))
        }
        Command::Sec { input } => {
            let set = read_point_set(&input.input)?;
            let disk = smallest_enclosing_circle(&set);
            Ok(to_line(json!({
                "center": [disk.center.x, disk.center.y],
                "radius": disk.radius,
            })))
        }
        Command::Generate {
            name,
            n,
            epsilon,
            out,
        } => generate(name, n, epsilon, out.as_deref()),
        Command::VerifyCovering { input, grid_h, out } => {
            verify(input.as_deref(), grid_h, out.as_deref())
        }
        Command::OptimizeCovering {
            k,
            restarts,
            seed,
            name,
            out,
        } => {
            let cert = optimize_covering(&name.region(), k, restarts, seed)?;
            let json =
                serde_json::to_string_pretty(&CertificateJson::from(&cert)).expect("serializable");
            if let Some(path) = out {
                write_file(&path, &json)?;
            }
            Ok(json + "\n")
        }
        Command::Embed { input, name, out } => {
            let set = read_point_set(&input.input)?;
            let region = name.region();
            let motion = embed_in_region(&region, &set)?;
            let moved = motion.apply_set(&set)?;
            let contained = moved.iter().all(|p| region_contains(&region, *p, 1e-9));
            if let Some(path) = &out {
                let header = [
                    format!("embedded in {name:?} by rotation {} rad", motion.rotation)
                        .to_lowercase(),
                ];
                write_file(path, &format_point_set(&moved, &header))?;
            }
            Ok(to_line(json!({
                "rotation": motion.rotation,
                "translation": [motion.translation.x, motion.translation.y],
                "contained": contained,
            })))
        }
        Command::Bounds { n, r, grid_h, out } => {
            let engine = engine(grid_h)?;
            match r {
                Some(r) => {
                    let rec = engine.record(n, r)?;
                    Ok(to_line(json!({
                        "n": rec.n,
                        "r": rec.r,
                        "lower": rec.lower,
                        "upper": rec.upper,
                        "lower_witness": rec.lower_witness,
                        "upper_witness": rec.upper_witness,
                    })))
                }
                None => {
                    let records = default_grid()
                        .into_iter()
                        .map(|r| engine.record(n, r))
                        .collect::<Result<Vec<_>, _>>()?;
                    let csv = bounds_csv(
                        &records,
                        &[format!(
                            "bounds n={n} grid=default certificates grid_h={grid_h}"
                        )],
                    );
                    emit_csv(csv, out.as_deref())
                }
            }
        }
        Command::Table { grid_h, out } => {
            let rows = engine(grid_h)?.table_reproduce();
            emit_csv(
                table_csv(
                    &rows,
                    &[format!("summary table, certificates grid_h={grid_h}")],
                ),
                out.as_deref(),
            )
        }
        Command::Plot { grid_h, out } => {
            let series = engine(grid_h)?.step_function_data(&default_grid())?;
            let is_csv = out
                .extension()
                .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
            let body = if is_csv {
                step_csv(&series, &["c(r) bounds on the default grid".to_string()])
            } else {
                render_svg(&series)?
            };
            write_file(&out, &body)?;
            let runs: Vec<[f64; 3]> = series
                .exact_runs()
                .into_iter()
                .map(|(a, b, v)| [a, b, v])
                .collect();
            Ok(to_line(json!({
                "out": out.display().to_string(),
                "points": series.points.len(),
                "exact_runs": runs,
            })))
        }
        Command::Search {
            n,
            r,
            seed,
            iterations,
            restarts,
            out,
        } => {
            let mut cfg = SearchConfig::new(n, r, seed);
            if let Some(it) = iterations {
                cfg.iterations = it;
            }
            if let Some(rs) = restarts {
                cfg.restarts = rs;
            }
            let res = extremal_search(&cfg)?;
            let summary = json!({
                "config": {
                    "n": cfg.n,
                    "r": cfg.r,
                    "iterations": cfg.iterations,
                    "restarts": cfg.restarts,
                    "seed": cfg.seed,
                    "initial_temperature": cfg.initial_temperature,
                    "cooling": cfg.cooling,
                    "move_scale": cfg.move_scale,
                },
                "objective": res.objective,
                "min_distance": res.min_distance,
                "best_restart": res.best_restart,
                "trace": res.trace,
            });
            match out {
                Some(path) => {
                    let header = [
                        format!(
                            "search n={n} r={r} seed={seed} iterations={} restarts={}",
                            cfg.iterations, cfg.restarts
                        ),
                        format!("objective {} (inflated tau=1e-6)", res.objective),
                    ];
                    write_file(&path, &format_point_set(&res.best, &header))?;
                    let sidecar = sidecar_path(&path);
                    write_file(
                        &sidecar,
                        &(serde_json::to_string_pretty(&summary).expect("serializable") + "\n"),
                    )?;
                    Ok(to_line(summary))
                }
                None => {
                    let mut summary = summary;
                    summary["points"] = res.best.iter().map(|p| json!([p.x, p.y])).collect();
                    Ok(to_line(summary))
                }
            }
        }
    }
}

/// `best.csv` gets `best.csv.json` beside it.
pub fn sidecar_path(path: &Path) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".json");
    PathBuf::from(name)
}

fn emit_csv(csv: String, out: Option<&Path>) -> CliResult<String> {
    match out {
        Some(path) => {
            write_file(path, &csv)?;
            Ok(to_line(json!({ "out": path.display().to_string() })))
        }
        None => Ok(csv),
    }
}

fn require_n(n: Option<usize>) -> CliResult<usize> {
    n.ok_or_else(|| CliError::Validation("--n is required for this construction".into()))
}

fn generate(
    name: ConstructionName,
    n: Option<usize>,
    epsilon: Option<f64>,
    out: Option<&Path>,
) -> CliResult<String> {
    let mut header = Vec::new();
    let set: PointSet = match name {
        ConstructionName::Triangle => triangle_construction(require_n(n)?)?,
        ConstructionName::UniformCircle => uniform_circle_construction(require_n(n)?)?,
        ConstructionName::SmallN => small_n_construction(require_n(n)?)?,
        ConstructionName::Midpoints => reuleaux_midpoint_construction(require_n(n)?)?,
        ConstructionName::Square => square_construction(require_n(n)?)?,
        ConstructionName::Reuleaux9 => {
            if n.is_some_and(|n| n != 9) {
                return Err(CliError::Validation("reuleaux9 always has 9 points".into()));
            }
            let eps = epsilon.unwrap_or(DEFAULT_EPSILON);
            header.push(format!("epsilon={eps}"));
            reuleaux_nine(eps)?
        }
        ConstructionName::Concentric => {
            let n = require_n(n)?;
            let eps = epsilon.unwrap_or_else(|| concentric_epsilon(n));
            header.push(format!("epsilon={eps}"));
            concentric_construction(n, eps)?
        }
        ConstructionName::Reuleaux3n => {
            let mut params = ConstructionParams::new(require_n(n)?);
            if let Some(eps) = epsilon {
                params.epsilon = eps;
            }
            let built = reuleaux_3n(params)?;
            let min_slack = built
                .chain_slacks
                .iter()
                .copied()
                .fold(f64::INFINITY, f64::min);
            header.push(format!(
                "per-arc n={} start epsilon={} used epsilon={} restarts={} delta={}",
                params.n, params.epsilon, built.epsilon, built.restarts, params.delta
            ));
            if min_slack.is_finite() {
                header.push(format!(
                    "checked: circumradius chain slack >= {min_slack:e} (required {})",
                    params.delta
                ));
            }
            built.points
        }
    };
    let d = diameter(&set);
    if d > 1.0 + 1e-12 {
        return Err(CliError::Internal(format!(
            "construction has diameter {d} > 1"
        )));
    }
    let label = format!("{name:?}").to_lowercase();
    header.insert(0, format!("construction {label} points={}", set.len()));
    header.push(format!("checked: diameter {d:.17} <= 1"));
    let text = format_point_set(&set, &header);
    match out {
        Some(path) => {
            write_file(path, &text)?;
            Ok(to_line(json!({
                "name": label,
                "points": set.len(),
                "diameter": d,
                "out": path.display().to_string(),
            })))
        }
        None => Ok(text),
    }
}

fn verify(input: Option<&Path>, grid_h: f64, out: Option<&Path>) -> CliResult<String> {
    if !(grid_h.is_finite() && grid_h > 0.0) {
        return Err(CliError::Validation(format!(
            "grid-h must be positive, got {grid_h}"
        )));
    }
    let certs: Vec<CoveringCertificate> = match input {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::Validation(format!("cannot read {}: {e}", path.display()))
            })?;
            let json: CertificateJson = serde_json::from_str(&text).map_err(|e| {
                CliError::Validation(format!("invalid certificate {}: {e}", path.display()))
            })?;
            vec![CoveringCertificate::try_from(json)?]
        }
        None => builtin_certificates(),
    };
    let verified: Vec<CertificateJson> = certs
        .into_iter()
        .map(|c| CertificateJson::from(&c.verified(grid_h)))
        .collect();
    let value = if input.is_some() {
        serde_json::to_value(&verified[0])
    } else {
        serde_json::to_value(&verified)
    }
    .expect("serializable");
    if let Some(path) = out {
        write_file(
            path,
            &(serde_json::to_string_pretty(&value).expect("serializable") + "\n"),
        )?;
    }
    Ok(to_line(value))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (u8, String) {
        let mut out = Vec::new();
        let code = run(
            std::iter::once("dartboard").chain(args.iter().copied()),
            &mut out,
        );
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["diameter", "--bogus"]).0, 2);
        assert_eq!(run_str(&["search", "--n", "9", "--r", "0.5"]).0, 2);
        assert_eq!(run_str(&[]).0, 2);
    }

    #[test]
    fn help_exits_0() {
        let (code, text) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(text.contains("maxcover") && text.contains("verify-covering"));
    }

    #[test]
    fn validation_errors_exit_2() {
        assert_eq!(run_str(&["generate", "--name", "triangle"]).0, 2);
        assert_eq!(
            run_str(&["generate", "--name", "reuleaux9", "--epsilon", "0.5"]).0,
            2
        );
        assert_eq!(run_str(&["bounds", "--n", "0", "--r", "0.5"]).0, 2);
        assert_eq!(run_str(&["optimize-covering", "--k", "0"]).0, 2);
    }

    #[test]
    fn generate_prints_points_without_out() {
        let (code, text) = run_str(&["generate", "--name", "triangle", "--n", "4"]);
        assert_eq!(code, 0);
        assert!(text.starts_with("# construction triangle points=4\n"));
        assert_eq!(crate::pointfile::parse_point_set(&text).unwrap().len(), 4);
    }

    #[test]
    fn sidecar_name() {
        assert_eq!(
            sidecar_path(Path::new("a/best.csv")),
            PathBuf::from("a/best.csv.json")
        );
    }
}
