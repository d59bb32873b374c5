//! Univariate polynomials with complex coefficients and simultaneous
//! (Aberth–Ehrlich) root iteration.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Coefficients in ascending order: `c[0] + c[1] z + … + c[n] z^n`.
#[derive(Clone, Debug)]
pub struct CPoly {
    pub coeffs: Vec<Complex64>,
}

impl CPoly {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        let mut p = CPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self
            .coeffs
            .last()
            .map(|c| c.norm() == 0.0)
            .unwrap_or(false)
        {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    pub fn derivative(&self) -> CPoly {
        if self.coeffs.len() <= 1 {
            return CPoly::new(vec![]);
        }
        CPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        )
    }

    /// All complex roots by Aberth–Ehrlich simultaneous iteration from a
    /// scaled circular start, each refined by two Newton polishing steps.
    /// Multiple roots converge to clusters of limited accuracy, which is
    /// all downstream multiplicity bucketing requires.
    pub fn roots(&self, max_iters: usize) -> Result<Vec<Complex64>> {
        let n = match self.degree() {
            None => return Err(Error::DegenerateSlice),
            Some(0) => return Ok(vec![]),
            Some(n) => n,
        };
        let lead = self.coeffs[n];
        // Cauchy-style radius bound.
        let radius = 1.0
            + self.coeffs[..n]
                .iter()
                .map(|c| (c / lead).norm())
                .fold(0.0f64, f64::max);
        let deriv = self.derivative();
        let mut z: Vec<Complex64> = (0..n)
            .map(|k| {
                let th = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64;
                Complex64::from_polar(radius * 0.7, th)
            })
            .collect();
        let mut converged = false;
        for _ in 0..max_iters {
            let mut max_step = 0.0f64;
            let snapshot = z.clone();
            for i in 0..n {
                let zi = snapshot[i];
                let p = self.eval(zi);
                let dp = deriv.eval(zi);
                if p.norm() == 0.0 {
                    continue;
                }
                let newton = if dp.norm() > 0.0 {
                    p / dp
                } else {
                    Complex64::new(1e-3, 1e-3)
                };
                let mut repel = Complex64::new(0.0, 0.0);
                for (j, zj) in snapshot.iter().enumerate() {
                    if j != i {
                        let d = zi - zj;
                        if d.norm() > 1e-300 {
                            repel += 1.0 / d;
                        }
                    }
                }
                let denom = Complex64::new(1.0, 0.0) - newton * repel;
                let step = if denom.norm() > 1e-300 {
                    newton / denom
                } else {
                    newton
                };
                z[i] = zi - step;
                max_step = max_step.max(step.norm() / (1.0 + zi.norm()));
            }
            if max_step < 1e-14 {
                converged = true;
                break;
            }
        }
        if !converged {
            // Clustered multiple roots stall the global criterion; accept
            // if every residual is small at the scale of the polynomial.
            let scale = self.coeffs.iter().map(|c| c.norm()).sum::<f64>();
            let ok = z.iter().all(|&zi| {
                self.eval(zi).norm() <= 1e-8 * scale * (1.0 + zi.norm()).powi(n as i32)
            });
            if !ok {
                return Err(Error::RootsDiverged);
            }
        }
        for zi in z.iter_mut() {
            for _ in 0..2 {
                let dp = deriv.eval(*zi);
                if dp.norm() > 0.0 {
                    let corr = self.eval(*zi) / dp;
                    if corr.norm() < 1.0 {
                        *zi -= corr;
                    }
                }
            }
        }
        Ok(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn linear_and_quadratic_roots() {
        // z − 3
        let p = CPoly::new(vec![c(-3.0, 0.0), c(1.0, 0.0)]);
        let r = p.roots(100).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r[0] - c(3.0, 0.0)).norm() < 1e-12);
        // z² + 1
        let p = CPoly::new(vec![c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let mut r = p.roots(100).unwrap();
        r.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap());
        assert!((r[0] - c(0.0, -1.0)).norm() < 1e-12);
        assert!((r[1] - c(0.0, 1.0)).norm() < 1e-12);
    }

    #[test]
    fn random_degree_eight_recomposition() {
        // Product of known roots: residual at each recovered root is tiny.
        let roots = [
            c(1.0, 0.5),
            c(-2.0, 0.0),
            c(0.3, -0.7),
            c(0.0, 2.0),
            c(-0.5, -0.5),
            c(1.5, 0.0),
            c(-1.0, 1.0),
            c(0.8, 0.1),
        ];
        let mut coeffs = vec![c(1.0, 0.0)];
        for r in roots {
            let mut next = vec![c(0.0, 0.0); coeffs.len() + 1];
            for (k, ck) in coeffs.iter().enumerate() {
                next[k + 1] += ck;
                next[k] -= ck * r;
            }
            coeffs = next;
        }
        let p = CPoly::new(coeffs);
        let found = p.roots(300).unwrap();
        assert_eq!(found.len(), 8);
        for f in &found {
            let nearest = roots.iter().map(|r| (f - r).norm()).fold(f64::MAX, f64::min);
            assert!(nearest < 1e-9, "root {f} off by {nearest}");
        }
    }

    #[test]
    fn zero_polynomial_is_degenerate() {
        assert!(CPoly::new(vec![]).roots(10).is_err());
    }
}
