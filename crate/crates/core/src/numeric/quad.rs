//! Quadrature: adaptive Simpson along complex paths and the periodic
//! trapezoid rule on circles.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// One piece of an integration path in the complex plane.
#[derive(Clone, Copy, Debug)]
pub enum PathPiece {
    /// Straight segment from `a` to `b`.
    Segment { a: Complex64, b: Complex64 },
    /// Circular arc `center + radius·e^{iθ}`, θ from `th0` to `th1`.
    Arc {
        center: Complex64,
        radius: f64,
        th0: f64,
        th1: f64,
    },
}

impl PathPiece {
    pub fn start(&self) -> Complex64 {
        match *self {
            PathPiece::Segment { a, .. } => a,
            PathPiece::Arc {
                center,
                radius,
                th0,
                ..
            } => center + Complex64::from_polar(radius, th0),
        }
    }

    pub fn end(&self) -> Complex64 {
        match *self {
            PathPiece::Segment { b, .. } => b,
            PathPiece::Arc {
                center,
                radius,
                th1,
                ..
            } => center + Complex64::from_polar(radius, th1),
        }
    }

    /// Position and d(position)/dt for t in [0, 1].
    fn param(&self, t: f64) -> (Complex64, Complex64) {
        match *self {
            PathPiece::Segment { a, b } => (a + (b - a) * t, b - a),
            PathPiece::Arc {
                center,
                radius,
                th0,
                th1,
            } => {
                let th = th0 + (th1 - th0) * t;
                let z = Complex64::from_polar(radius, th);
                (center + z, z * Complex64::new(0.0, th1 - th0))
            }
        }
    }
}

fn simpson_slice<F>(f: &mut F, piece: &PathPiece, t0: f64, t2: f64) -> Complex64
where
    F: FnMut(Complex64) -> Complex64,
{
    let t1 = 0.5 * (t0 + t2);
    let eval = |f: &mut F, t: f64| {
        let (z, dz) = piece.param(t);
        f(z) * dz
    };
    (eval(f, t0) + eval(f, t1) * 4.0 + eval(f, t2)) * ((t2 - t0) / 6.0)
}

fn adaptive<F>(
    f: &mut F,
    piece: &PathPiece,
    t0: f64,
    t2: f64,
    whole: Complex64,
    tol: f64,
    depth: usize,
) -> Result<Complex64>
where
    F: FnMut(Complex64) -> Complex64,
{
    let t1 = 0.5 * (t0 + t2);
    let left = simpson_slice(f, piece, t0, t1);
    let right = simpson_slice(f, piece, t1, t2);
    let err = (left + right - whole).norm();
    if err < 15.0 * tol {
        return Ok(left + right + (left + right - whole) / 15.0);
    }
    if depth == 0 {
        return Err(Error::QuadratureFailure(err));
    }
    let a = adaptive(f, piece, t0, t1, left, tol / 2.0, depth - 1)?;
    let b = adaptive(f, piece, t1, t2, right, tol / 2.0, depth - 1)?;
    Ok(a + b)
}

/// ∫ f(z) dz along the path, adaptive Simpson per piece.
pub fn integrate_path<F>(mut f: F, path: &[PathPiece], tol: f64) -> Result<Complex64>
where
    F: FnMut(Complex64) -> Complex64,
{
    let mut acc = Complex64::new(0.0, 0.0);
    for piece in path {
        let whole = simpson_slice(&mut f, piece, 0.0, 1.0);
        acc += adaptive(&mut f, piece, 0.0, 1.0, whole, tol, 40)?;
    }
    Ok(acc)
}

/// ∮ f(ζ) dζ over |ζ − center| = radius with `n` equispaced nodes.
/// Spectrally accurate for integrands analytic near the circle.
pub fn trapezoid_circle<F>(mut f: F, center: Complex64, radius: f64, n: usize) -> Complex64
where
    F: FnMut(Complex64) -> Complex64,
{
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let th = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
        let z = Complex64::from_polar(radius, th);
        acc += f(center + z) * z;
    }
    acc * Complex64::new(0.0, 2.0 * std::f64::consts::PI / n as f64)
}
