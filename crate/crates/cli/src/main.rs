use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, Subcommand};
use hyperpauli::{Paravector, TransformKind, TransformSpec};
use hyperpauli_cli::commands::{self, KgVerify};
use hyperpauli_cli::identities::check_identities;
use hyperpauli_cli::{parse_four, parse_grid, parse_three, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "hyperpauli", version, about = "Hyperbolic Pauli algebra verification tool")]
struct Cli {
    /// Emit machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the ring, algebra, spin-group and unitary-group identity suites.
    CheckIdentities {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Replace every check's tolerance with this value.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Apply a rotor or boost to a paravector, x -> g x g†.
    Transform {
        #[arg(long, value_enum, required_unless_present = "spec")]
        kind: Option<KindArg>,
        /// Unit axis or boost direction, e.g. 0,0,1.
        #[arg(long, value_parser = parse_three, required_unless_present = "spec")]
        axis: Option<[f64; 3]>,
        /// Angle in radians (rotor) or rapidity (boost).
        #[arg(long, allow_hyphen_values = true, required_unless_present = "spec")]
        param: Option<f64>,
        /// Transform as JSON: {"kind":..,"axis":..,"param":..} or a raw algebra element.
        #[arg(long, conflicts_with_all = ["kind", "axis", "param"])]
        spec: Option<String>,
        #[arg(long, value_parser = parse_four, allow_hyphen_values = true)]
        x: [f64; 4],
    },
    /// Generator count, tangent dimension and closure residuals of U(n,H) or SU(n,H).
    GroupInfo {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        special: bool,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Lattice convergence study of the Klein-Gordon residual for a plane wave.
    KgVerify {
        #[arg(long, value_parser = grid_arg, default_value = "32x32")]
        grid: Grid,
        /// Spacing of the coarsest grid; defaults to the smallest commensurate box.
        #[arg(long)]
        h: Option<f64>,
        #[arg(long, value_parser = parse_four, allow_hyphen_values = true)]
        p: [f64; 4],
        #[arg(long)]
        m: f64,
        #[arg(long, default_value_t = 3)]
        refinements: usize,
        /// Also write the convergence table to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Check whether a plane-wave gauge field solves M²A = 0.
    Maxwell {
        #[arg(long, value_parser = parse_four, allow_hyphen_values = true)]
        k: [f64; 4],
        #[arg(long, value_parser = parse_four, allow_hyphen_values = true, default_value = "0,1,0,0")]
        eps: [f64; 4],
    },
}

#[derive(Clone, Debug)]
struct Grid(Vec<usize>);

fn grid_arg(s: &str) -> Result<Grid, String> {
    parse_grid(s).map(Grid)
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum KindArg {
    Rotor,
    Boost,
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var("HYPER_CLI_THREADS") {
        let n: usize = v.parse().with_context(|| format!("HYPER_CLI_THREADS={v} is not a count"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn emit<T: Serialize>(value: &T, json: bool, human: impl FnOnce(&T) -> String) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    } else {
        write!(out, "{}", human(value))?;
    }
    Ok(())
}

fn kg_human(k: &KgVerify) -> String {
    let mut s = k.to_csv();
    s.push_str(&format!(
        "# box length {}, analytic residual {:e}, {}\n",
        k.box_length,
        k.analytic_residual,
        if k.pass { "pass" } else { "FAIL" }
    ));
    s
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let json = cli.json;
    let pass = match cli.command {
        Command::CheckIdentities { seed, trials, tol } => {
            anyhow::ensure!(trials >= 1, "--trials must be at least 1");
            let report = check_identities(seed, trials, tol);
            emit(&report, json, |r| r.to_table())?;
            report.pass
        }
        Command::Transform { kind, axis, param, spec, x } => {
            let spec = match spec {
                Some(text) => serde_json::from_str::<TransformSpec>(&text).context("parsing --spec")?,
                None => TransformSpec::Generated {
                    kind: match kind.expect("required by clap") {
                        KindArg::Rotor => TransformKind::Rotor,
                        KindArg::Boost => TransformKind::Boost,
                    },
                    axis: axis.expect("required by clap"),
                    param: param.expect("required by clap"),
                },
            };
            let out = commands::transform(spec, Paravector::new(x))?;
            emit(&out, json, |o| {
                format!(
                    "x' = ({}, {}, {}, {})\nnorm in {}  norm out {}  drift {:e}  {}\n",
                    o.output.0[0],
                    o.output.0[1],
                    o.output.0[2],
                    o.output.0[3],
                    o.norm_in,
                    o.norm_out,
                    o.norm_drift,
                    if o.pass { "pass" } else { "FAIL" }
                )
            })?;
            out.pass
        }
        Command::GroupInfo { n, special, seed, trials } => {
            anyhow::ensure!(trials >= 1, "--trials must be at least 1");
            let info = commands::group_info(n, special, seed, trials)?;
            emit(&info, json, |g| {
                format!(
                    "{}U({},H): generators {}, real dimension {} (numeric rank {})\nclosure residual {:e}, det residual {:e}  {}\n",
                    if g.special { "S" } else { "" }, g.n, g.generator_count, g.real_dim, g.numeric_rank,
                    g.closure_residual, g.det_residual,
                    if g.pass { "pass" } else { "FAIL" }
                )
            })?;
            info.pass
        }
        Command::KgVerify { grid, h, p, m, refinements, csv } => {
            let result = commands::kg_verify(&grid.0, h, Paravector::new(p), m, refinements)?;
            if let Some(path) = csv {
                std::fs::write(&path, result.to_csv()).with_context(|| format!("writing {}", path.display()))?;
            }
            emit(&result, json, kg_human)?;
            result.pass
        }
        Command::Maxwell { k, eps } => {
            let out = commands::maxwell(Paravector::new(k), Paravector::new(eps))?;
            emit(&out, json, |o| {
                format!(
                    "k.k = {}  |M²A| = {:e}  {}\n",
                    o.k_squared,
                    o.residual,
                    if o.pass { "null wave, M²A = 0" } else { "M²A != 0" }
                )
            })?;
            out.pass
        }
    };
    Ok(pass)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            return ExitCode::from(code as u8);
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    let start = Instant::now();
    let result = run(cli);
    eprintln!("wall time: {:.3} s", start.elapsed().as_secs_f64());
    match result {
        Ok(true) => ExitCode::from(EXIT_PASS as u8),
        Ok(false) => ExitCode::from(EXIT_FAIL as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
