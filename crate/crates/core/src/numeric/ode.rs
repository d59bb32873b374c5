//! Adaptive Dormand–Prince 5(4) integrator with 4th-order dense output,
//! generic over real or complex state components.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Scalar component of an ODE state vector.
pub trait OdeScalar:
    Copy
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<f64, Output = Self>
{
    fn zero() -> Self;
    fn magnitude(self) -> f64;
}

impl OdeScalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(self) -> f64 {
        self.abs()
    }
}

impl OdeScalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(self) -> f64 {
        self.norm()
    }
}

// Dormand–Prince 5(4) tableau.
const A: [[f64; 6]; 6] = [
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
const C: [f64; 6] = [1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];
const D: [f64; 7] = [
    -12715105075.0 / 11282082432.0,
    0.0,
    87487479700.0 / 32700410799.0,
    -10690763975.0 / 1880347072.0,
    701980252875.0 / 199316789632.0,
    -1453857185.0 / 822651844.0,
    69997945.0 / 29380423.0,
];

#[derive(Clone, Copy, Debug)]
pub struct OdeOptions {
    pub rtol: f64,
    pub atol: f64,
    pub h_init: Option<f64>,
    pub max_steps: usize,
    /// Steps below this magnitude abort the integration.
    pub min_step: f64,
    pub dense: bool,
}

impl Default for OdeOptions {
    fn default() -> Self {
        OdeOptions {
            rtol: 1e-10,
            atol: 1e-12,
            h_init: None,
            max_steps: 2_000_000,
            min_step: 1e-14,
            dense: false,
        }
    }
}

/// One accepted step with its dense-output coefficients.
#[derive(Clone, Debug)]
pub struct DenseStep<T> {
    pub t0: f64,
    pub h: f64,
    pub err_estimate: f64,
    cont: [Vec<T>; 5],
}

impl<T: OdeScalar> DenseStep<T> {
    /// 4th-order interpolant on `t ∈ [t0, t0+h]`.
    pub fn eval(&self, t: f64) -> Vec<T> {
        let theta = (t - self.t0) / self.h;
        let th1 = 1.0 - theta;
        (0..self.cont[0].len())
            .map(|i| {
                let inner = self.cont[3][i] + self.cont[4][i] * th1;
                let mid = self.cont[2][i] + inner * theta;
                self.cont[0][i] + (self.cont[1][i] + mid * th1) * theta
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct OdeSolution<T> {
    pub t_end: f64,
    pub y_end: Vec<T>,
    pub steps: Vec<DenseStep<T>>,
    pub n_accepted: usize,
    pub n_rejected: usize,
    pub n_rhs_evals: usize,
}

impl<T: OdeScalar> OdeSolution<T> {
    /// Dense evaluation anywhere inside the integration span.
    pub fn eval(&self, t: f64) -> Option<Vec<T>> {
        let step = self.steps.iter().find(|s| {
            let (lo, hi) = if s.h >= 0.0 {
                (s.t0, s.t0 + s.h)
            } else {
                (s.t0 + s.h, s.t0)
            };
            t >= lo - 1e-12 && t <= hi + 1e-12
        })?;
        Some(step.eval(t))
    }
}

/// Integrates `y' = f(t, y)` from `t0` to `t1` (either direction).
pub fn integrate<T, F>(
    mut f: F,
    t0: f64,
    t1: f64,
    y0: &[T],
    opts: &OdeOptions,
) -> Result<OdeSolution<T>>
where
    T: OdeScalar,
    F: FnMut(f64, &[T], &mut [T]),
{
    let n = y0.len();
    let span = t1 - t0;
    if span == 0.0 {
        return Ok(OdeSolution {
            t_end: t1,
            y_end: y0.to_vec(),
            steps: vec![],
            n_accepted: 0,
            n_rejected: 0,
            n_rhs_evals: 0,
        });
    }
    let dir = span.signum();
    let mut h = opts.h_init.unwrap_or(span.abs() / 100.0).min(span.abs()) * dir;
    let mut t = t0;
    let mut y = y0.to_vec();
    let mut k = vec![vec![T::zero(); n]; 7];
    let mut stage = vec![T::zero(); n];
    let mut y_new = vec![T::zero(); n];
    f(t, &y, &mut k[0]);
    let mut evals = 1usize;
    let mut accepted = 0usize;
    let mut rejected = 0usize;
    let mut steps = Vec::new();
    while (t1 - t) * dir > 1e-14 * span.abs() {
        if h.abs() < opts.min_step {
            return Err(Error::StepUnderflow {
                last_s: Complex64::new(t, 0.0),
            });
        }
        if accepted + rejected > opts.max_steps {
            return Err(Error::TooManySteps);
        }
        if (t + h - t1) * dir > 0.0 {
            h = t1 - t;
        }
        for s in 0..6 {
            for i in 0..n {
                let mut acc = T::zero();
                for (j, kj) in k.iter().enumerate().take(s + 1) {
                    let a = A[s][j];
                    if a != 0.0 {
                        acc = acc + kj[i] * a;
                    }
                }
                stage[i] = y[i] + acc * h;
            }
            f(t + C[s] * h, &stage, &mut k[s + 1]);
            evals += 1;
        }
        // k[6] was produced with the 5th-order weights, so stage == y_new.
        y_new.copy_from_slice(&stage);
        let mut err_acc = 0.0f64;
        for i in 0..n {
            let mut e = T::zero();
            for (j, kj) in k.iter().enumerate() {
                if E[j] != 0.0 {
                    e = e + kj[i] * E[j];
                }
            }
            let scale = opts.atol + opts.rtol * y[i].magnitude().max(y_new[i].magnitude());
            let r = (e * h).magnitude() / scale;
            err_acc += r * r;
        }
        let err = (err_acc / n as f64).sqrt();
        if err <= 1.0 {
            if opts.dense {
                let mut cont = [
                    vec![T::zero(); n],
                    vec![T::zero(); n],
                    vec![T::zero(); n],
                    vec![T::zero(); n],
                    vec![T::zero(); n],
                ];
                for i in 0..n {
                    let ydiff = y_new[i] - y[i];
                    let bspl = k[0][i] * h - ydiff;
                    cont[0][i] = y[i];
                    cont[1][i] = ydiff;
                    cont[2][i] = bspl;
                    cont[3][i] = ydiff - k[6][i] * h - bspl;
                    let mut dsum = T::zero();
                    for (j, kj) in k.iter().enumerate() {
                        if D[j] != 0.0 {
                            dsum = dsum + kj[i] * D[j];
                        }
                    }
                    cont[4][i] = dsum * h;
                }
                steps.push(DenseStep {
                    t0: t,
                    h,
                    err_estimate: err,
                    cont,
                });
            }
            t += h;
            y.copy_from_slice(&y_new);
            k.swap(0, 6); // FSAL
            accepted += 1;
            let factor = if err == 0.0 {
                5.0
            } else {
                (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
            };
            h *= factor;
        } else {
            rejected += 1;
            h *= (0.9 * err.powf(-0.2)).clamp(0.1, 0.9);
        }
    }
    Ok(OdeSolution {
        t_end: t,
        y_end: y,
        steps,
        n_accepted: accepted,
        n_rejected: rejected,
        n_rhs_evals: evals,
    })
}
