//! Dynamics on the 2-torus: dθ/dτ = a·cosθ + ℓ + s·cosτ with
//! (ℓ, a, s) = (B/ω, 1/ω, A/ω). Rotation numbers with certified
//! two-sided bounds, phase-lock scans over the (B, A) plane, growth-point
//! localization on the B-axis, and the Riccati change of variables.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numeric::ode::{integrate, OdeOptions};

const TAU_PERIOD: f64 = 2.0 * std::f64::consts::PI;
/// θ₀ values used to bracket the rotation number.
const N_BRACKET: usize = 8;

/// Parameters of the torus flow in the (B, A, ω) chart.
#[derive(Clone, Copy, Debug)]
pub struct TorusParams {
    pub b: f64,
    pub a: f64,
    pub omega: f64,
}

impl TorusParams {
    pub fn new(b: f64, a: f64, omega: f64) -> Result<Self> {
        if !(omega > 0.0) {
            return Err(Error::InvalidParameter(format!("omega must be > 0, got {omega}")));
        }
        Ok(TorusParams { b, a, omega })
    }

    /// Constant rotation term ℓ = B/ω.
    pub fn ell(&self) -> f64 {
        self.b / self.omega
    }

    /// cosθ coupling a = 1/ω.
    pub fn coupling(&self) -> f64 {
        1.0 / self.omega
    }

    /// cosτ forcing s = A/ω.
    pub fn forcing(&self) -> f64 {
        self.a / self.omega
    }
}

/// Rotation-number estimate with a certified half-width.
#[derive(Clone, Copy, Debug)]
pub struct RotationEstimate {
    pub rho: f64,
    /// Bracket spread over the tested θ₀ plus the integrator contribution.
    pub bound: f64,
    pub n_periods: u32,
}

impl RotationEstimate {
    /// Integer-plateau flag: the estimate is within its bound of an integer.
    pub fn locked(&self) -> bool {
        (self.rho - self.rho.round()).abs() < self.bound
    }
}

/// Lift of θ after one τ-period.
pub fn poincare_map(params: &TorusParams, theta0: f64, tol: f64) -> Result<f64> {
    let lifts = lift_after(params, &[theta0], 1, tol)?;
    Ok(lifts.0[0])
}

/// Lifts after `n_periods` for a batch of initial angles, integrated
/// simultaneously. Returns the final lifts and the accepted-step count.
fn lift_after(
    params: &TorusParams,
    theta0: &[f64],
    n_periods: u32,
    tol: f64,
) -> Result<(Vec<f64>, usize)> {
    let opts = OdeOptions {
        rtol: tol,
        atol: tol,
        h_init: Some(0.1),
        min_step: 1e-12,
        max_steps: 40_000_000,
        ..Default::default()
    };
    let f = |tau: f64, y: &[f64], dy: &mut [f64]| {
        let drive = params.ell() + params.forcing() * tau.cos();
        let a = params.coupling();
        for (yi, di) in y.iter().zip(dy.iter_mut()) {
            *di = a * yi.cos() + drive;
        }
    };
    let sol = integrate(f, 0.0, TAU_PERIOD * n_periods as f64, theta0, &opts)?;
    Ok((sol.y_end, sol.n_accepted))
}

/// Rotation number with a two-sided bound: (lift − θ₀)/(2πN) bracketed
/// over 8 starting angles; the bound is the bracket spread over 2πN plus
/// a per-step integrator-tolerance contribution.
pub fn rotation_number(
    params: &TorusParams,
    n_periods: u32,
    tol: f64,
) -> Result<RotationEstimate> {
    if n_periods < 1 {
        return Err(Error::InvalidParameter("n_periods must be >= 1".into()));
    }
    let theta0: Vec<f64> = (0..N_BRACKET)
        .map(|k| TAU_PERIOD * k as f64 / N_BRACKET as f64)
        .collect();
    let (lifts, steps) = lift_after(params, &theta0, n_periods, tol)?;
    let span = TAU_PERIOD * n_periods as f64;
    let rates: Vec<f64> = lifts
        .iter()
        .zip(&theta0)
        .map(|(l, t0)| (l - t0) / span)
        .collect();
    let lo = rates.iter().cloned().fold(f64::MAX, f64::min);
    let hi = rates.iter().cloned().fold(f64::MIN, f64::max);
    let tol_contribution = steps as f64 * tol / span;
    Ok(RotationEstimate {
        rho: 0.5 * (lo + hi),
        bound: (hi - lo) + tol_contribution,
        n_periods,
    })
}

/// Closed-form A = 0 rotation number: √(max(B²−1, 0))/ω.
pub fn rho_a0_closed_form(b: f64, omega: f64) -> f64 {
    (b * b - 1.0).max(0.0).sqrt() / omega
}

/// One cell of a (B, A) scan.
#[derive(Clone, Copy, Debug)]
pub struct ScanCell {
    pub b: f64,
    pub a: f64,
    pub rho: f64,
    pub bound: f64,
    pub locked: bool,
}

/// Rotation-number scan over the grid, B-major, cells evaluated in
/// parallel and merged in grid order.
pub fn scan(
    b_values: &[f64],
    a_values: &[f64],
    omega: f64,
    n_periods: u32,
    tol: f64,
) -> Result<Vec<ScanCell>> {
    let cells: Vec<(f64, f64)> = b_values
        .iter()
        .flat_map(|&b| a_values.iter().map(move |&a| (b, a)))
        .collect();
    cells
        .par_iter()
        .map(|&(b, a)| {
            let params = TorusParams::new(b, a, omega)?;
            let est = rotation_number(&params, n_periods, tol)?;
            Ok(ScanCell {
                b,
                a,
                rho: est.rho,
                bound: est.bound,
                locked: est.locked(),
            })
        })
        .collect()
}

/// Parses and materializes a "lo:hi:step" range, inclusive of the upper
/// endpoint up to a half-step slack.
pub fn grid_values(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || hi < lo {
        return Err(Error::InvalidParameter(format!("bad range {lo}:{hi}:{step}")));
    }
    let n = ((hi - lo) / step + 0.5).floor() as usize;
    Ok((0..=n).map(|k| lo + k as f64 * step).collect())
}

/// Abscissa of the boundary of the rotation-number-r level set on the
/// B-axis, located by bisection and resolved to `tol_b`.
pub fn growth_point(r: i32, omega: f64, tol_b: f64) -> Result<f64> {
    if r == 0 {
        return Err(Error::InvalidParameter("growth points need r != 0".into()));
    }
    let target = r.abs() as f64;
    let n_periods = 300;
    let tol = 1e-8;
    let rho_at = |b: f64| -> Result<f64> {
        let params = TorusParams::new(b, 0.0, omega)?;
        Ok(rotation_number(&params, n_periods, tol)?.rho)
    };
    let mut lo = 1.0 + 1e-9;
    let mut hi = target * omega + 2.0;
    let f_lo = rho_at(lo)? - target;
    let f_hi = rho_at(hi)? - target;
    if f_lo >= 0.0 || f_hi <= 0.0 {
        return Err(Error::BracketFailure(format!(
            "rho({lo}) - r = {f_lo}, rho({hi}) - r = {f_hi}"
        )));
    }
    while hi - lo > tol_b {
        let mid = 0.5 * (lo + hi);
        if rho_at(mid)? - target < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let b_star = 0.5 * (lo + hi);
    Ok(if r > 0 { b_star } else { -b_star })
}

/// Integrates the torus flow and its Riccati image Φ' over z = e^{iτ} in
/// parallel and returns max |Φ − e^{iθ}| over the accepted steps.
pub fn riccati_consistency(params: &TorusParams, tol: f64) -> Result<f64> {
    let (ell, a, s) = (params.ell(), params.coupling(), params.forcing());
    let opts = OdeOptions {
        rtol: tol,
        atol: tol * 1e-2,
        dense: true,
        min_step: 1e-13,
        ..Default::default()
    };
    let i = Complex64::new(0.0, 1.0);
    let f = |tau: f64, y: &[Complex64], dy: &mut [Complex64]| {
        let theta = y[0];
        let phi = y[1];
        dy[0] = a * theta.cos() + ell + s * Complex64::new(tau.cos(), 0.0);
        // dΦ/dτ = iz·dΦ/dz with z = e^{iτ}:
        // i((ℓ + (s/2)(z + 1/z))Φ + (a/2)(Φ² + 1)).
        let z = (i * tau).exp();
        dy[1] = i * ((ell + (s / 2.0) * (z + 1.0 / z)) * phi + (a / 2.0) * (phi * phi + 1.0));
    };
    let theta0 = Complex64::new(0.3, 0.0);
    let y0 = [theta0, (i * theta0).exp()];
    let sol = integrate(f, 0.0, TAU_PERIOD, &y0, &opts)?;
    let mut worst = 0.0f64;
    for step in &sol.steps {
        let t = step.t0 + step.h;
        let y = step.eval(t);
        worst = worst.max((y[1] - (i * y[0]).exp()).norm());
    }
    Ok(worst)
}
