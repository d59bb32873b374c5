//! heunlab: determinantal surfaces, polynomial solutions, isomonodromic
//! flow, monodromy, and torus rotation numbers from one entry point.
//!
//! Output is machine-readable and byte-deterministic for fixed flags:
//! polynomials in canonical graded-lex JSON, floats in shortest
//! round-trip form, CSV with "," separators and "\n" line endings.

mod verify;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use heunlab_core::josephson::{self, TorusParams};
use heunlab_core::monodromy::{self, LinearSystem};
use heunlab_core::painleve::{self, FlowPath, FlowState};
use heunlab_core::polysol::{self, Surface, MEMBERSHIP_TOL};
use heunlab_core::ratpoly::{parse_rational, rat_to_f64, MPoly};
use heunlab_core::spectral::{self, Sign, SurfaceSpec};
use heunlab_core::{fmt_complex, parse_complex, Complex64};

#[derive(Parser)]
#[command(name = "heunlab", version, about = "Determinantal surfaces of the double confluent Heun family: exact identities, polynomial solutions, isomonodromic flow, monodromy, rotation numbers")]
struct Cli {
    /// Worker pool size for scan/verify (default: CPU count; env
    /// HEUNLAB_THREADS also applies).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit the surface polynomial of the (ℓ, ±) determinantal surface as JSON.
    Surface {
        #[arg(long)]
        ell: u32,
        #[arg(long, value_parser = parse_sign)]
        sign: Sign,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the spectral-curve polynomial Q_ℓ over (u, v) = (λ, μ²) as JSON.
    Spectral {
        #[arg(long)]
        ell: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the identity + solution + tangency + monodromy suite.
    Verify {
        #[arg(long = "ell-max", default_value_t = 6)]
        ell_max: u32,
    },
    /// Solve for the vector-polynomial solution on a (χ, s) surface slice.
    Polysolve {
        #[arg(long)]
        ell: u32,
        #[arg(long, value_parser = parse_sign)]
        sign: Sign,
        #[arg(long, value_parser = parse_complex_arg, allow_hyphen_values = true)]
        chi: Complex64,
        #[arg(long, value_parser = parse_complex_arg, allow_hyphen_values = true)]
        s: Complex64,
        /// Which root of the slice polynomial to take (sorted by re, im).
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[arg(long, default_value_t = MEMBERSHIP_TOL)]
        tol: f64,
    },
    /// Integrate the isomonodromic field from a surface point and write a CSV.
    Flow {
        #[arg(long)]
        ell: u32,
        #[arg(long, value_parser = parse_sign)]
        sign: Sign,
        #[arg(long, value_parser = parse_complex_arg, allow_hyphen_values = true)]
        chi0: Complex64,
        #[arg(long, value_parser = parse_complex_arg, allow_hyphen_values = true)]
        a0: Complex64,
        #[arg(long, value_parser = parse_complex_arg, allow_hyphen_values = true)]
        s0: Complex64,
        #[arg(long, value_parser = parse_complex_arg, allow_hyphen_values = true)]
        s1: Complex64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Intermediate waypoints "RE+IMi,RE+IMi,…" for pole avoidance.
        #[arg(long)]
        via: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Emit the tangency multiplier h with dP/dv = h·P as JSON.
    Multiplier {
        #[arg(long)]
        ell: u32,
        #[arg(long, value_parser = parse_sign)]
        sign: Sign,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monodromy trace/determinant/unipotence gap around the origin.
    Monodromy {
        #[arg(long, default_value = "mchoyn")]
        system: String,
        #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true, default_value = "1")]
        ell: f64,
        #[arg(long, value_parser = parse_complex_arg, allow_hyphen_values = true, default_value = "0")]
        chi: Complex64,
        #[arg(long, value_parser = parse_complex_arg, allow_hyphen_values = true, default_value = "0")]
        a: Complex64,
        #[arg(long, value_parser = parse_complex_arg, allow_hyphen_values = true, default_value = "1")]
        s: Complex64,
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Certified rotation number of the torus flow.
    Rho {
        #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
        omega: f64,
        #[arg(long = "B", value_parser = parse_real_arg, allow_hyphen_values = true)]
        b: f64,
        #[arg(long = "A", value_parser = parse_real_arg, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, default_value_t = 200)]
        periods: u32,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Rotation-number scan over a (B, A) grid, written as CSV.
    Scan {
        #[arg(long, value_parser = parse_real_arg, allow_hyphen_values = true)]
        omega: f64,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: String,
        #[arg(long = "A", allow_hyphen_values = true)]
        a: String,
        #[arg(long, default_value_t = 200)]
        periods: u32,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    Sign::parse(s).map_err(|e| e.to_string())
}

fn parse_complex_arg(s: &str) -> Result<Complex64, String> {
    parse_complex(s).map_err(|e| e.to_string())
}

/// Real-valued flag: plain float or an exact "p/q" rational.
fn parse_real_arg(s: &str) -> Result<f64, String> {
    if let Ok(v) = s.parse::<f64>() {
        return Ok(v);
    }
    parse_rational(s)
        .map(|r| rat_to_f64(&r))
        .map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        bail!("range must be lo:hi:step, got `{s}`");
    }
    let lo: f64 = parts[0].parse().context("bad range lo")?;
    let hi: f64 = parts[1].parse().context("bad range hi")?;
    let step: f64 = parts[2].parse().context("bad range step")?;
    Ok(josephson::grid_values(lo, hi, step)?)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            std::io::stdout().flush().ok();
            Ok(())
        }
    }
}

fn poly_json_text(p: &MPoly) -> Result<String> {
    let mut text = serde_json::to_string_pretty(&p.to_json())?;
    text.push('\n');
    Ok(text)
}

fn init_pool(threads: Option<usize>) {
    let n = threads.or_else(|| {
        std::env::var("HEUNLAB_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(n) = n {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .ok();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_pool(cli.threads);
    match run(cli.cmd) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode> {
    match cmd {
        Cmd::Surface { ell, sign, out } => {
            let p = spectral::build_p(ell, sign)?;
            emit(&out, &poly_json_text(&p)?)?;
        }
        Cmd::Spectral { ell, out } => {
            let q = spectral::q_to_uv(&spectral::build_q(ell)?)?;
            emit(&out, &poly_json_text(&q)?)?;
        }
        Cmd::Verify { ell_max } => {
            let all_pass = verify::run_suite(ell_max)?;
            return Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
        Cmd::Polysolve {
            ell,
            sign,
            chi,
            s,
            index,
            tol,
        } => {
            let surface = Surface::new(SurfaceSpec::new(ell, sign)?)?;
            let points = surface.sample(chi, s, tol)?;
            if points.is_empty() {
                bail!("no surface points on this (chi, s) slice");
            }
            if index >= points.len() {
                bail!("index {index} out of range: slice has {} roots", points.len());
            }
            let point = points[index];
            let sol = polysol::solve_polynomial_solution(&surface, &point, tol)?;
            let residual =
                polysol::verify_solution(&point, &sol, &polysol::unit_circle_samples(8))?;
            let json = serde_json::json!({
                "ell": ell,
                "sign": sign.to_string(),
                "chi": fmt_complex(chi),
                "s": fmt_complex(s),
                "index": index,
                "roots_on_slice": points.len(),
                "a": fmt_complex(point.a),
                "coeffs": sol.coeffs.iter().map(|c| fmt_complex(*c)).collect::<Vec<_>>(),
                "degree": sol.degree(),
                "pivot_ratio": sol.pivot_ratio,
                "residual": residual,
            });
            println!("{}", serde_json::to_string_pretty(&json)?);
        }
        Cmd::Flow {
            ell,
            sign,
            chi0,
            a0,
            s0,
            s1,
            tol,
            via,
            out,
        } => {
            let surface = Surface::new(SurfaceSpec::new(ell, sign)?)?;
            let start = FlowState {
                chi: chi0,
                a: a0,
                s: s0,
                ell: Complex64::new(ell as f64, 0.0),
            };
            let path = match via {
                None => FlowPath::Radial,
                Some(points) => FlowPath::Polyline(
                    points
                        .split(',')
                        .map(|p| parse_complex(p).map_err(anyhow::Error::from))
                        .collect::<Result<Vec<_>>>()?,
                ),
            };
            let traj = painleve::flow(start, s1, &path, tol)?;
            let mut text = String::from("s_re,s_im,chi_re,chi_im,a_re,a_im,membership_residual\n");
            for st in traj.states() {
                let resid = surface.membership_residual(st.chi, st.a, st.s)?;
                text.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    st.s.re, st.s.im, st.chi.re, st.chi.im, st.a.re, st.a.im, resid
                ));
            }
            fs::write(&out, text).with_context(|| format!("writing {}", out.display()))?;
        }
        Cmd::Multiplier { ell, sign, out } => {
            let h = painleve::multiplier(SurfaceSpec::new(ell, sign)?)?;
            emit(&out, &poly_json_text(&h)?)?;
        }
        Cmd::Monodromy {
            system,
            ell,
            chi,
            a,
            s,
            radius,
            tol,
        } => {
            let ell_c = Complex64::new(ell, 0.0);
            let sys = match system.as_str() {
                "mchoyn" | "extended" => LinearSystem::Extended {
                    ell: ell_c,
                    chi,
                    a,
                    s,
                },
                "tty" => LinearSystem::Tty { ell: ell_c, a, s },
                "psisys" => LinearSystem::PsiSys,
                other => bail!("unknown system `{other}` (mchoyn, tty, psisys)"),
            };
            let res = monodromy::monodromy_matrix(&sys, radius, tol)?;
            let json = serde_json::json!({
                "system": system,
                "radius": radius,
                "trace": fmt_complex(res.trace),
                "det": fmt_complex(res.det),
                "unipotence_gap": res.unipotence_gap,
            });
            println!("{}", serde_json::to_string_pretty(&json)?);
        }
        Cmd::Rho {
            omega,
            b,
            a,
            periods,
            tol,
        } => {
            let params = TorusParams::new(b, a, omega)?;
            let est = josephson::rotation_number(&params, periods, tol)?;
            let json = serde_json::json!({
                "omega": omega,
                "B": b,
                "A": a,
                "periods": periods,
                "rho": est.rho,
                "bound": est.bound,
                "locked": est.locked(),
            });
            println!("{}", serde_json::to_string_pretty(&json)?);
        }
        Cmd::Scan {
            omega,
            b,
            a,
            periods,
            tol,
            out,
        } => {
            let bs = parse_range(&b)?;
            let as_ = parse_range(&a)?;
            let cells = josephson::scan(&bs, &as_, omega, periods, tol)?;
            let mut text = String::from("B,A,rho,bound,locked\n");
            for c in cells {
                text.push_str(&format!(
                    "{},{},{},{},{}\n",
                    c.b,
                    c.a,
                    c.rho,
                    c.bound,
                    if c.locked { 1 } else { 0 }
                ));
            }
            fs::write(&out, text).with_context(|| format!("writing {}", out.display()))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
