//! Command-line surface for the umbratrig library: evaluation tables,
//! identity verification, Lissajous/area figure data, transform and
//! diffusion runs.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a residual above
//! tolerance, 2 on flag or domain errors.

mod render;

use clap::{Args, Parser, Subcommand};
use render::{csv, emit, fmt_num, svg_polyline};
use std::path::PathBuf;
use std::process::ExitCode;
use umbratrig::{
    borel_transform, eval_real, g_alpha_integral, heat_spectral, j0_term, laguerre_heat_closed,
    lissajous_points, ll_heat_umbral, napier_term, run_identity_suite, sector_area,
    airy_heat_spectral, bessel_j0, coeff_sequence, EvalConfig, QuadratureSpec, SeriesFamily,
    SpectralDensity,
};

#[derive(Parser)]
#[command(
    name = "umbratrig",
    about = "Generalized trigonometric functions, umbral composition identities, transforms and diffusion solvers",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// Family name: lexp, lexpalpha, humbert, lcos, lsin, lcosh, lsinh,
    /// lcosalpha, lsinalpha, lcosab, lsinab, phf, phfch, phfsh, galpha
    #[arg(long)]
    family: String,
    /// Shape parameter for the alpha-indexed families
    #[arg(long)]
    alpha: Option<f64>,
    /// Second shape parameter for the two-index families
    #[arg(long)]
    beta: Option<f64>,
    /// Residue class for phf
    #[arg(long)]
    k: Option<u32>,
    /// Order for phf
    #[arg(long)]
    m: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one family at one point and print the value
    Eval {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// CSV table of a family over a uniform grid (columns x,value)
    Table {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_negative_numbers = true)]
        min: f64,
        #[arg(long, allow_negative_numbers = true)]
        max: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Lissajous curve data (columns x,lc,ls) or a single-polyline SVG
    Lissajous {
        #[arg(long)]
        xmax: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value = "csv")]
        format: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sector area swept by the (lc, ls) curve; prints A and 2A
    Area {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, default_value_t = 256)]
        panels: usize,
    },
    /// Run the identity residual suite; exit 1 if anything misses tolerance
    Verify {
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Argument grid as min:max:steps
        #[arg(long, default_value = "0:2:9")]
        grid: String,
    },
    /// Integral transforms: Borel-type for the series families,
    /// Beta-weighted for galpha
    Transform {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long)]
        nodes: Option<usize>,
    },
    /// Diffusion solvers: closed, spectral, umbral or airy
    Diffuse {
        #[arg(long)]
        solver: String,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        /// Evolution time
        #[arg(long, allow_negative_numbers = true)]
        tau: f64,
        /// Spectral density decay rate c in e^(-c t) (spectral solver)
        #[arg(long, default_value_t = 1.0)]
        decay: f64,
        /// Shape parameter (airy solver; also humbert spectral with beta)
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
        /// Monomial degree for the umbral solver's initial data; the
        /// Laguerre exponential when omitted
        #[arg(long)]
        degree: Option<usize>,
        /// Spectral atom as location:weight (repeatable, airy solver)
        #[arg(long)]
        atom: Vec<String>,
        #[arg(long)]
        nodes: Option<usize>,
        /// Umbral sequence order
        #[arg(long, default_value_t = 64)]
        order: usize,
    },
    /// Convergence tables for the limit sequences (columns
    /// n,term,abs_error_vs_limit)
    Limits {
        /// napier or j0
        #[arg(long)]
        kind: String,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        /// Comma-separated list of n values
        #[arg(long, default_value = "10,100,1000")]
        ns: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn parse_family(args: &FamilyArgs) -> Result<SeriesFamily, String> {
    let need_alpha = || {
        args.alpha
            .ok_or_else(|| format!("family {} needs --alpha", args.family))
    };
    let need_beta = || {
        args.beta
            .ok_or_else(|| format!("family {} needs --beta", args.family))
    };
    Ok(match args.family.as_str() {
        "lexp" => SeriesFamily::LaguerreExp,
        "lexpalpha" => SeriesFamily::LaguerreExpAlpha { alpha: need_alpha()? },
        "humbert" => SeriesFamily::HumbertExp {
            alpha: need_alpha()?,
            beta: need_beta()?,
        },
        "lcos" => SeriesFamily::LaguerreCos,
        "lsin" => SeriesFamily::LaguerreSin,
        "lcosh" => SeriesFamily::LaguerreCosh,
        "lsinh" => SeriesFamily::LaguerreSinh,
        "lcosalpha" => SeriesFamily::LaguerreCosAlpha { alpha: need_alpha()? },
        "lsinalpha" => SeriesFamily::LaguerreSinAlpha { alpha: need_alpha()? },
        "lcosab" => SeriesFamily::HumbertCos {
            alpha: need_alpha()?,
            beta: need_beta()?,
        },
        "lsinab" => SeriesFamily::HumbertSin {
            alpha: need_alpha()?,
            beta: need_beta()?,
        },
        "phf" => SeriesFamily::PseudoHyp {
            k: args.k.ok_or("family phf needs --k")?,
            m: args.m.ok_or("family phf needs --m")?,
        },
        "phfch" => SeriesFamily::PseudoHypCosh,
        "phfsh" => SeriesFamily::PseudoHypSinh,
        "galpha" => SeriesFamily::AiryG { alpha: need_alpha()? },
        other => return Err(format!("unknown family '{other}'")),
    })
}

/// EvalConfig with the UMBRATRIG_MAX_TERMS environment override applied.
fn env_config() -> Result<EvalConfig, String> {
    let mut cfg = EvalConfig::default();
    if let Ok(v) = std::env::var("UMBRATRIG_MAX_TERMS") {
        cfg.max_terms = v
            .parse()
            .map_err(|_| format!("UMBRATRIG_MAX_TERMS must be a positive integer, got '{v}'"))?;
    }
    Ok(cfg)
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid spec must be min:max:steps, got '{spec}'"));
    }
    let min: f64 = parts[0].parse().map_err(|_| "bad grid min".to_string())?;
    let max: f64 = parts[1].parse().map_err(|_| "bad grid max".to_string())?;
    let steps: usize = parts[2].parse().map_err(|_| "bad grid steps".to_string())?;
    if steps < 2 {
        return Err("grid needs at least 2 steps".into());
    }
    if min > max {
        return Err("grid min must not exceed max".into());
    }
    Ok((0..steps)
        .map(|i| min + (max - min) * i as f64 / (steps - 1) as f64)
        .collect())
}

fn parse_atoms(specs: &[String]) -> Result<Vec<(f64, f64)>, String> {
    specs
        .iter()
        .map(|s| {
            let (loc, w) = s
                .split_once(':')
                .ok_or_else(|| format!("atom must be location:weight, got '{s}'"))?;
            Ok((
                loc.parse().map_err(|_| format!("bad atom location in '{s}'"))?,
                w.parse().map_err(|_| format!("bad atom weight in '{s}'"))?,
            ))
        })
        .collect()
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Eval { family, x } => {
            let fam = parse_family(&family)?;
            let cfg = env_config()?;
            let v = eval_real(fam, x, &cfg).map_err(|e| e.to_string())?;
            println!("{}", fmt_num(v));
        }
        Command::Table {
            family,
            min,
            max,
            steps,
            output,
        } => {
            let fam = parse_family(&family)?;
            let cfg = env_config()?;
            if steps < 2 {
                return Err("table needs at least 2 steps".into());
            }
            if min > max {
                return Err("table min must not exceed max".into());
            }
            let mut rows = Vec::with_capacity(steps);
            for i in 0..steps {
                let x = min + (max - min) * i as f64 / (steps - 1) as f64;
                rows.push(vec![x, eval_real(fam, x, &cfg).map_err(|e| e.to_string())?]);
            }
            emit(output.as_deref(), &csv("x,value", &rows)).map_err(|e| e.to_string())?;
        }
        Command::Lissajous {
            xmax,
            steps,
            format,
            output,
        } => {
            let pts = lissajous_points(xmax, steps).map_err(|e| e.to_string())?;
            match format.as_str() {
                "csv" => {
                    let rows: Vec<Vec<f64>> = pts.iter().map(|p| vec![p.0, p.1, p.2]).collect();
                    emit(output.as_deref(), &csv("x,lc,ls", &rows)).map_err(|e| e.to_string())?;
                }
                "svg" => {
                    let plane: Vec<(f64, f64)> = pts.iter().map(|p| (p.1, p.2)).collect();
                    emit(output.as_deref(), &svg_polyline(&plane)).map_err(|e| e.to_string())?;
                }
                other => return Err(format!("lissajous format must be csv or svg, got '{other}'")),
            }
        }
        Command::Area { x, panels } => {
            let (a, doubled) = sector_area(x, panels).map_err(|e| e.to_string())?;
            println!("A = {}", fmt_num(a));
            println!("2A = {}", fmt_num(doubled));
        }
        Command::Verify { tol, grid } => {
            let xs = parse_grid(&grid)?;
            let cfg = env_config()?;
            let rows = run_identity_suite(&xs, tol, &cfg).map_err(|e| e.to_string())?;
            let width = rows.iter().map(|r| r.label.len()).max().unwrap_or(0);
            let mut all = true;
            for row in &rows {
                println!(
                    "{:width$}  {}  worst {}",
                    row.label,
                    if row.pass { "PASS" } else { "FAIL" },
                    fmt_num(row.worst),
                );
                all &= row.pass;
            }
            if !all {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Transform { family, x, nodes } => {
            let fam = parse_family(&family)?;
            let v = match fam {
                SeriesFamily::AiryG { alpha } => {
                    let quad = match nodes {
                        Some(n) => QuadratureSpec::GaussJacobi {
                            nodes: n,
                            exp_at_one: alpha - 1.0,
                            exp_at_zero: -1.0 / 3.0,
                        },
                        None => QuadratureSpec::default_jacobi(alpha),
                    };
                    g_alpha_integral(x, alpha, &quad).map_err(|e| e.to_string())?
                }
                _ => {
                    let quad = QuadratureSpec::GaussLaguerre {
                        nodes: nodes.unwrap_or(96),
                    };
                    borel_transform(fam, x, &quad).map_err(|e| e.to_string())?
                }
            };
            println!("{}", fmt_num(v));
        }
        Command::Diffuse {
            solver,
            x,
            tau,
            decay,
            alpha,
            beta,
            degree,
            atom,
            nodes,
            order,
        } => {
            let quad = QuadratureSpec::GaussLaguerre {
                nodes: nodes.unwrap_or(96),
            };
            let v = match solver.as_str() {
                "closed" => laguerre_heat_closed(x, tau).map_err(|e| e.to_string())?,
                "spectral" => {
                    if decay.is_nan() || decay <= 0.0 {
                        return Err(format!("spectral decay must be positive, got {decay}"));
                    }
                    let density = SpectralDensity::continuous(move |t| (-decay * t).exp());
                    let fam = match (alpha, beta) {
                        (Some(a), Some(b)) => SeriesFamily::HumbertExp { alpha: a, beta: b },
                        (None, None) => SeriesFamily::LaguerreExp,
                        _ => {
                            return Err(
                                "spectral solver needs both --alpha and --beta or neither".into()
                            )
                        }
                    };
                    heat_spectral(&density, fam, x, tau, &quad).map_err(|e| e.to_string())?
                }
                "umbral" => {
                    let coeffs = match degree {
                        Some(d) => {
                            let mut c = vec![0.0; d + 1];
                            c[d] = 1.0;
                            c
                        }
                        None => coeff_sequence(SeriesFamily::LaguerreExp, order as u64)
                            .map_err(|e| e.to_string())?,
                    };
                    ll_heat_umbral(&coeffs, x, tau, order).map_err(|e| e.to_string())?
                }
                "airy" => {
                    let a = alpha.ok_or("airy solver needs --alpha")?;
                    let atoms = parse_atoms(&atom)?;
                    if atoms.is_empty() {
                        return Err("airy solver needs at least one --atom location:weight".into());
                    }
                    let density =
                        SpectralDensity::from_atoms(atoms).map_err(|e| e.to_string())?;
                    airy_heat_spectral(&density, a, x, tau, &quad).map_err(|e| e.to_string())?
                }
                other => {
                    return Err(format!(
                        "solver must be closed, spectral, umbral or airy, got '{other}'"
                    ))
                }
            };
            println!("{}", fmt_num(v));
        }
        Command::Limits { kind, x, ns, output } => {
            let cfg = env_config()?;
            let ns: Vec<u32> = ns
                .split(',')
                .map(|s| s.trim().parse().map_err(|_| format!("bad n value '{s}'")))
                .collect::<Result<_, String>>()?;
            if ns.is_empty() {
                return Err("limits needs at least one n".into());
            }
            let (limit, term): (f64, Box<dyn Fn(u32) -> f64>) = match kind.as_str() {
                "napier" => (
                    eval_real(SeriesFamily::LaguerreExp, x, &cfg).map_err(|e| e.to_string())?,
                    Box::new(move |n| napier_term(x, n)),
                ),
                "j0" => (bessel_j0(x), Box::new(move |n| j0_term(x, n))),
                other => return Err(format!("limits kind must be napier or j0, got '{other}'")),
            };
            let rows: Vec<Vec<f64>> = ns
                .iter()
                .map(|&n| {
                    let t = term(n);
                    vec![n as f64, t, (t - limit).abs()]
                })
                .collect();
            emit(output.as_deref(), &csv("n,term,abs_error_vs_limit", &rows))
                .map_err(|e| e.to_string())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
