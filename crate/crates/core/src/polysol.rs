//! Vector-polynomial solutions of the extended system at points of the
//! determinantal surfaces.
//!
//! A point (χ, a, s) lies on the surface exactly when the coefficient
//! matrix G_{1,ℓ} ± G_{2,ℓ} is singular; the coefficient vector
//! (c₀, …, c_ℓ) of Y₂ spans its kernel, and Y₁(z) = ±z^ℓ Y₂(1/z) closes
//! the pair. The χ = 0 slice specializes to the scalar Heun equation.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::monodromy::LinearSystem;
use crate::numeric::cpoly::CPoly;
use crate::numeric::linalg::full_pivot_eliminate;
use crate::ratpoly::MPoly;
use crate::spectral::{build_p, Sign, SurfaceSpec};

/// Relative surface-membership threshold: |𝒫| divided by the sum of
/// absolute monomial values at the point.
pub const MEMBERSHIP_TOL: f64 = 1e-8;
/// Relative pivot threshold for kernel extraction.
pub const PIVOT_REL_TOL: f64 = 1e-8;

/// A determinantal surface with its defining polynomial cached.
#[derive(Clone, Debug)]
pub struct Surface {
    pub spec: SurfaceSpec,
    poly: MPoly,
}

impl Surface {
    pub fn new(spec: SurfaceSpec) -> Result<Self> {
        let poly = build_p(spec.ell, spec.sign)?;
        Ok(Surface { spec, poly })
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    /// |𝒫(χ,a,s)| normalized by the sum of absolute monomial magnitudes.
    pub fn membership_residual(
        &self,
        chi: Complex64,
        a: Complex64,
        s: Complex64,
    ) -> Result<f64> {
        let point = [("chi", chi), ("a", a), ("s", s)];
        let val = self.poly.eval(&point)?.norm();
        let scale = self.poly.eval_scale(&point)?.max(f64::MIN_POSITIVE);
        Ok(val / scale)
    }

    /// Builds a membership-checked surface point.
    pub fn point(&self, chi: Complex64, a: Complex64, s: Complex64) -> Result<SurfacePoint> {
        self.point_with_tol(chi, a, s, MEMBERSHIP_TOL)
    }

    pub fn point_with_tol(
        &self,
        chi: Complex64,
        a: Complex64,
        s: Complex64,
        tol: f64,
    ) -> Result<SurfacePoint> {
        if s.norm() == 0.0 {
            return Err(Error::InvalidParameter("surface points need s != 0".into()));
        }
        let residual = self.membership_residual(chi, a, s)?;
        if residual > tol {
            return Err(Error::NotOnSurface { residual });
        }
        Ok(SurfacePoint {
            chi,
            a,
            s,
            spec: self.spec,
        })
    }

    /// All points of the (χ, s) slice: complex roots a of 𝒫(χ, ·, s),
    /// by simultaneous root iteration plus Newton polishing. A vanishing
    /// leading coefficient just lowers the root count.
    pub fn sample(&self, chi: Complex64, s: Complex64, tol: f64) -> Result<Vec<SurfacePoint>> {
        if s.norm() == 0.0 {
            return Err(Error::InvalidParameter("sampling needs s != 0".into()));
        }
        let coeff_polys = self.poly.coeffs_in("a")?;
        let point = [("chi", chi), ("a", Complex64::new(0.0, 0.0)), ("s", s)];
        let coeffs: Vec<Complex64> = coeff_polys
            .iter()
            .map(|p| p.eval(&point))
            .collect::<Result<_>>()?;
        let slice = CPoly::new(coeffs);
        if slice.is_zero() {
            return Err(Error::DegenerateSlice);
        }
        let mut roots = slice.roots(200)?;
        roots.sort_by(|p, q| {
            p.re.partial_cmp(&q.re)
                .unwrap()
                .then(p.im.partial_cmp(&q.im).unwrap())
        });
        Ok(roots
            .into_iter()
            .filter_map(|a| self.point_with_tol(chi, a, s, tol).ok())
            .collect())
    }
}

/// A membership-checked point of one determinantal surface.
#[derive(Clone, Copy, Debug)]
pub struct SurfacePoint {
    pub chi: Complex64,
    pub a: Complex64,
    pub s: Complex64,
    pub spec: SurfaceSpec,
}

impl SurfacePoint {
    /// The linear system this point parametrizes.
    pub fn system(&self) -> LinearSystem {
        LinearSystem::Extended {
            ell: Complex64::new(self.spec.ell as f64, 0.0),
            chi: self.chi,
            a: self.a,
            s: self.s,
        }
    }
}

/// Coefficients c₀..c_ℓ of Y₂, normalized so the largest-magnitude entry
/// is 1. Y₁(z) = ±z^ℓ Y₂(1/z) by the sign of the surface.
#[derive(Clone, Debug)]
pub struct PolySolution {
    pub coeffs: Vec<Complex64>,
    pub sign: Sign,
    /// Smallest pivot over largest pivot from the kernel elimination.
    pub pivot_ratio: f64,
}

impl PolySolution {
    pub fn y2(&self) -> CPoly {
        CPoly::new(self.coeffs.clone())
    }

    /// Coefficients of Y₁: ±c_{ℓ−j} at z^j.
    pub fn y1_coeffs(&self) -> Vec<Complex64> {
        let sgn = match self.sign {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        };
        self.coeffs.iter().rev().map(|c| c * sgn).collect()
    }

    pub fn y1(&self) -> CPoly {
        CPoly::new(self.y1_coeffs())
    }

    /// Degree of the vector solution: max of the component degrees, with
    /// roundoff-level coefficients ignored.
    pub fn degree(&self) -> usize {
        numeric_degree(&self.y1_coeffs())
            .unwrap_or(0)
            .max(numeric_degree(&self.coeffs).unwrap_or(0))
    }
}

/// Largest index whose coefficient is above roundoff relative to the
/// largest coefficient.
pub fn numeric_degree(coeffs: &[Complex64]) -> Option<usize> {
    let max = coeffs.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    if max == 0.0 {
        return None;
    }
    coeffs
        .iter()
        .rposition(|c| c.norm() > 1e-12 * max)
}

/// Numeric evaluation of G_{1,ℓ} ± G_{2,ℓ} at (χ, a, s).
pub fn assemble_g(
    spec: SurfaceSpec,
    chi: Complex64,
    a: Complex64,
    s: Complex64,
) -> Vec<Vec<Complex64>> {
    let n = spec.ell as usize + 1;
    let sgn = match spec.sign {
        Sign::Plus => Complex64::new(1.0, 0.0),
        Sign::Minus => Complex64::new(-1.0, 0.0),
    };
    let mut m = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n - 1 {
        m[i][i] += s / 2.0;
        m[i][i + 1] += chi * a - Complex64::new(i as f64 + 1.0, 0.0);
    }
    m[n - 1][n - 1] += Complex64::new(0.5, 0.0);
    for i in 1..=n - 1 {
        m[i - 1][n - 1 - i] += sgn * a / 2.0;
        m[i - 1][n - i] += sgn * chi * s;
    }
    m[n - 1][0] += sgn * chi;
    m
}

/// Kernel vector of the coefficient matrix at a surface point, by
/// full-pivot elimination with a relative pivot threshold. Fails with
/// `NotOnSurface` off the surface and `AmbiguousKernel` when two pivots
/// are negligible.
pub fn solve_polynomial_solution(
    surface: &Surface,
    point: &SurfacePoint,
    tol: f64,
) -> Result<PolySolution> {
    let residual = surface.membership_residual(point.chi, point.a, point.s)?;
    if residual > tol {
        return Err(Error::NotOnSurface { residual });
    }
    let g = assemble_g(surface.spec, point.chi, point.a, point.s);
    let elim = full_pivot_eliminate(&g, PIVOT_REL_TOL)?;
    let n = elim.pivots.len();
    let largest = elim.pivots[0].max(f64::MIN_POSITIVE);
    if n >= 2 && elim.pivots[n - 2] <= PIVOT_REL_TOL * largest {
        return Err(Error::AmbiguousKernel(
            elim.pivots[n - 2] / largest,
            elim.pivots[n - 1] / largest,
        ));
    }
    let kernel = elim.kernel.ok_or(Error::NotOnSurface { residual })?;
    Ok(PolySolution {
        coeffs: kernel,
        sign: surface.spec.sign,
        pivot_ratio: elim.pivots[n - 1] / largest,
    })
}

/// The ℓ = 0 case degenerates to the plane test χ = ±1/2; the solution is
/// the constant vector (1, ∓1).
pub fn solve_l0(chi: Complex64, tol: f64) -> Result<(Complex64, Complex64)> {
    let half = Complex64::new(0.5, 0.0);
    if (chi - half).norm() <= tol {
        Ok((Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)))
    } else if (chi + half).norm() <= tol {
        Ok((Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)))
    } else {
        Err(Error::NotOnSurface {
            residual: (chi - half).norm().min((chi + half).norm()),
        })
    }
}

/// Maximum relative residual of the full extended system at the samples,
/// with derivatives taken analytically from the coefficient lists.
pub fn verify_solution(
    point: &SurfacePoint,
    sol: &PolySolution,
    z_samples: &[Complex64],
) -> Result<f64> {
    let y1 = sol.y1();
    let y2 = sol.y2();
    let dy1 = y1.derivative();
    let dy2 = y2.derivative();
    let sys = point.system();
    residual_on_samples(&sys, &y1, &y2, &dy1, &dy2, z_samples)
}

fn residual_on_samples(
    sys: &LinearSystem,
    y1: &CPoly,
    y2: &CPoly,
    dy1: &CPoly,
    dy2: &CPoly,
    z_samples: &[Complex64],
) -> Result<f64> {
    let mut worst = 0.0f64;
    for &z in z_samples {
        if z.norm() == 0.0 {
            return Err(Error::InvalidParameter("samples must avoid z = 0".into()));
        }
        let a = sys.coeff_at(z);
        let y = [y1.eval(z), y2.eval(z)];
        let dy = [dy1.eval(z), dy2.eval(z)];
        for i in 0..2 {
            let rhs = a[i][0] * y[0] + a[i][1] * y[1];
            let resid = (dy[i] - rhs).norm();
            let scale = a[i][0].norm() * y[0].norm()
                + a[i][1].norm() * y[1].norm()
                + dy[i].norm()
                + 1e-300;
            worst = worst.max(resid / scale);
        }
    }
    Ok(worst)
}

/// Residual of the scalar conjugate Heun form
/// z²E'' + ((−ℓ+1)z + μ(1−z²))E' + (λ + μ(ℓ−1)z)E at the samples.
pub fn heun_residual(
    ell: f64,
    lambda: Complex64,
    mu: Complex64,
    e_coeffs: &[Complex64],
    z_samples: &[Complex64],
) -> Result<f64> {
    let e = CPoly::new(e_coeffs.to_vec());
    if e.is_zero() {
        return Err(Error::ZeroSolution);
    }
    let de = e.derivative();
    let dde = de.derivative();
    let mut worst = 0.0f64;
    for &z in z_samples {
        let t2 = z * z * dde.eval(z);
        let c1 = (1.0 - ell) * z + mu * (1.0 - z * z);
        let t1 = c1 * de.eval(z);
        let c0 = lambda + mu * (ell - 1.0) * z;
        let t0 = c0 * e.eval(z);
        let resid = (t2 + t1 + t0).norm();
        let scale = t2.norm() + t1.norm() + t0.norm() + 1e-300;
        worst = worst.max(resid / scale);
    }
    Ok(worst)
}

/// Lifts a scalar Heun solution E to the vector pair (Y₁, Y₂ = E) with
/// Y₁ = (2z/a)(E' − μE), and reports the residual of the χ = 0 system at
/// the samples. The index ℓ is the vector degree, deg E + 1.
pub fn system_from_heun(
    e_coeffs: &[Complex64],
    a: Complex64,
    mu: Complex64,
    z_samples: &[Complex64],
) -> Result<(Vec<Complex64>, Vec<Complex64>, f64)> {
    if a.norm() == 0.0 {
        return Err(Error::InvalidParameter("lift needs a != 0".into()));
    }
    let deg = numeric_degree(e_coeffs).ok_or(Error::ZeroSolution)?;
    let e = CPoly::new(e_coeffs[..=deg].to_vec());
    let de = e.derivative();
    // (E' − μE) then shift by one power of z and scale by 2/a.
    let mut inner = vec![Complex64::new(0.0, 0.0); deg + 1];
    for (k, c) in de.coeffs.iter().enumerate() {
        inner[k] += c;
    }
    for (k, c) in e.coeffs.iter().enumerate() {
        inner[k] -= mu * c;
    }
    let mut y1 = vec![Complex64::new(0.0, 0.0)];
    y1.extend(inner.iter().map(|c| 2.0 * c / a));
    let ell = Complex64::new((deg + 1) as f64, 0.0);
    let sys = LinearSystem::Extended {
        ell,
        chi: Complex64::new(0.0, 0.0),
        a,
        s: 2.0 * mu,
    };
    let y1p = CPoly::new(y1.clone());
    let y2p = CPoly::new(e_coeffs.to_vec());
    let res = residual_on_samples(
        &sys,
        &y1p,
        &y2p,
        &y1p.derivative(),
        &y2p.derivative(),
        z_samples,
    )?;
    Ok((y1, e_coeffs.to_vec(), res))
}

/// Unit-circle sample points used by the verification suites.
pub fn unit_circle_samples(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect()
}
