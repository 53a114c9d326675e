//! `specbounds`: eigenvalue-counting bounds, exact model-space spectra, and
//! heat-kernel bounds as CSV/SVG curve tables.
//!
//! Exit codes: 0 success, 2 usage, 3 numerical failure, 4 invariant
//! violation (a bound fell below the exact curve).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use specbounds_cli::commands::{
    cmd_bound, cmd_compare, cmd_eigmin, cmd_heat, quadrature_config, HeatTarget, SampleSpec,
};
use specbounds_cli::spaces::Space;
use specbounds_cli::svg::{render_line_chart, DEFAULT_HEIGHT, DEFAULT_WIDTH};
use specbounds_cli::table::{format_float, CurveTable};
use specbounds_cli::CliError;
use specbounds::heat::{ExpGrowthHypothesis, PolyGrowthHypothesis};

#[derive(Parser)]
#[command(
    name = "specbounds",
    version,
    about = "Volume-growth bounds on spectra and heat kernels of homogeneous spaces",
    long_about = None
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LambdaRange {
    /// Lower end of the spectral range
    #[arg(long)]
    lmin: f64,
    /// Upper end of the spectral range
    #[arg(long)]
    lmax: f64,
    /// Number of sample points
    #[arg(long, default_value_t = 200)]
    points: usize,
    /// Sample logarithmically instead of linearly
    #[arg(long)]
    log: bool,
}

#[derive(Args)]
struct OutputFiles {
    /// Write the curve table as CSV
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Write a line chart as SVG
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Override the quadrature absolute tolerance
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate the counting bound for a model space
    Bound {
        /// Model space: circle, s<d>, h2..h7, ch2..ch4, euclidean-<d>
        #[arg(long)]
        space: String,
        #[command(flatten)]
        range: LambdaRange,
        /// Bound form: "integral" (sharper) or "alpha"
        #[arg(long, default_value = "integral")]
        method: String,
        /// Angle parameter for the alpha form, in (0, pi/2)
        #[arg(long)]
        alpha: Option<f64>,
        #[command(flatten)]
        out: OutputFiles,
    },
    /// Tabulate exact counting next to the bound and check the ordering
    Compare {
        #[arg(long)]
        space: String,
        #[command(flatten)]
        range: LambdaRange,
        #[command(flatten)]
        out: OutputFiles,
    },
    /// Tabulate heat-kernel diagonals and their upper bounds over time
    Heat {
        /// Model space with exact diagonal: h3, h5, h7, or s2
        #[arg(long)]
        space: Option<String>,
        /// Polynomial growth constant c in V(r) >= c r^beta
        #[arg(long)]
        c: Option<f64>,
        /// Polynomial growth exponent beta
        #[arg(long)]
        beta: Option<f64>,
        /// Total volume for the polynomial bound (omit for infinite)
        #[arg(long)]
        vol: Option<f64>,
        /// Small-ball constant c0 in V(r) >= c0 r^dim for r <= r0
        #[arg(long)]
        c0: Option<f64>,
        /// Exponential growth constant c1 in V(r) >= c1 exp(c2 r)
        #[arg(long)]
        c1: Option<f64>,
        /// Exponential growth rate c2
        #[arg(long)]
        c2: Option<f64>,
        /// Dimension for the exponential bound
        #[arg(long)]
        dim: Option<u32>,
        /// Crossover radius r0 of the exponential hypothesis
        #[arg(long)]
        r0: Option<f64>,
        /// Spectral gap for the sharper exponential bound
        #[arg(long)]
        lambda_star: Option<f64>,
        /// Lower end of the time range
        #[arg(long)]
        tmin: f64,
        /// Upper end of the time range
        #[arg(long)]
        tmax: f64,
        #[arg(long, default_value_t = 200)]
        points: usize,
        #[arg(long)]
        log: bool,
        #[command(flatten)]
        out: OutputFiles,
    },
    /// Report lower bounds on sqrt(lambda_1) (and sqrt(lambda_k) with --k)
    Eigmin {
        /// Compact model space: circle or s<d>
        #[arg(long)]
        space: String,
        /// Also bound the k-th eigenvalue (eigenvalues sorted with multiplicity)
        #[arg(long)]
        k: Option<u64>,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
}

fn write_outputs(table: &CurveTable, out: &OutputFiles, title: &str) -> Result<(), CliError> {
    if let Some(path) = &out.csv {
        table.write_csv(path)?;
        println!("wrote {}", path.display());
    }
    if let Some(path) = &out.svg {
        std::fs::write(
            path,
            render_line_chart(table, title, DEFAULT_WIDTH, DEFAULT_HEIGHT),
        )?;
        println!("wrote {}", path.display());
    }
    if out.csv.is_none() && out.svg.is_none() {
        print!("{}", table.to_csv());
    }
    Ok(())
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Bound {
            space,
            range,
            method,
            alpha,
            out,
        } => {
            let space: Space = space.parse()?;
            let cfg = quadrature_config(out.tol)?;
            let alpha = match method.as_str() {
                "integral" => {
                    if alpha.is_some() {
                        return Err(CliError::Usage(
                            "--alpha only applies to --method alpha".into(),
                        ));
                    }
                    None
                }
                "alpha" => Some(alpha.ok_or_else(|| {
                    CliError::Usage("--method alpha needs an --alpha value".into())
                })?),
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown method '{other}' (expected integral or alpha)"
                    )))
                }
            };
            let spec = SampleSpec {
                min: range.lmin,
                max: range.lmax,
                points: range.points,
                log: range.log,
            };
            let table = cmd_bound(space, &spec, alpha, &cfg)?;
            write_outputs(&table, &out, &format!("counting bound on {space}"))?;
        }
        Command::Compare { space, range, out } => {
            let space: Space = space.parse()?;
            let cfg = quadrature_config(out.tol)?;
            let spec = SampleSpec {
                min: range.lmin,
                max: range.lmax,
                points: range.points,
                log: range.log,
            };
            let (table, summary) = cmd_compare(space, &spec, &cfg)?;
            write_outputs(&table, &out, &format!("exact vs bound on {space}"))?;
            println!(
                "rows: {}  min(bound - exact): {} at lambda = {}",
                summary.rows,
                format_float(summary.min_gap),
                format_float(summary.at_abscissa),
            );
            if summary.violated() {
                return Err(CliError::Invariant(format!(
                    "bound drops {} below exact at lambda = {}",
                    format_float(-summary.min_gap),
                    format_float(summary.at_abscissa),
                )));
            }
        }
        Command::Heat {
            space,
            c,
            beta,
            vol,
            c0,
            c1,
            c2,
            dim,
            r0,
            lambda_star,
            tmin,
            tmax,
            points,
            log,
            out,
        } => {
            let cfg = quadrature_config(out.tol)?;
            let target = match space {
                Some(name) => {
                    if c.is_some() || beta.is_some() || c0.is_some() || c1.is_some() {
                        return Err(CliError::Usage(
                            "--space and hypothesis flags are mutually exclusive".into(),
                        ));
                    }
                    HeatTarget::Space(name.parse()?)
                }
                None => {
                    let num = |e: specbounds::Error| CliError::Usage(e.to_string());
                    let poly = match (c, beta) {
                        (Some(c), Some(beta)) => Some(
                            PolyGrowthHypothesis::new(
                                c,
                                beta,
                                f64::INFINITY,
                                vol.unwrap_or(f64::INFINITY),
                            )
                            .map_err(num)?,
                        ),
                        (None, None) => None,
                        _ => {
                            return Err(CliError::Usage(
                                "polynomial hypothesis needs both --c and --beta".into(),
                            ))
                        }
                    };
                    let exp = match (c0, c1, c2, dim, r0) {
                        (Some(c0), Some(c1), Some(c2), Some(dim), Some(r0)) => Some(
                            ExpGrowthHypothesis::new(c0, c1, c2, dim, r0, lambda_star)
                                .map_err(num)?,
                        ),
                        (None, None, None, None, None) => None,
                        _ => {
                            return Err(CliError::Usage(
                                "exponential hypothesis needs --c0 --c1 --c2 --dim --r0".into(),
                            ))
                        }
                    };
                    HeatTarget::Hypotheses { poly, exp }
                }
            };
            let spec = SampleSpec {
                min: tmin,
                max: tmax,
                points,
                log,
            };
            let table = cmd_heat(&target, &spec, &cfg)?;
            write_outputs(&table, &out, "heat diagonal and bounds")?;
        }
        Command::Eigmin { space, k, json } => {
            let space: Space = space.parse()?;
            let report = cmd_eigmin(space, k)?;
            if json {
                print!("{}", report.render_json());
            } else {
                print!("{}", report.render_text());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("specbounds: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
