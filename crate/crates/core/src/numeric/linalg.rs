//! Dense complex linear algebra: full-pivot elimination with pivot
//! tracking, used for kernel extraction from small square matrices.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Result of a full-pivot elimination on a square matrix.
#[derive(Clone, Debug)]
pub struct Elimination {
    /// Pivot magnitudes in elimination order (non-increasing in practice).
    pub pivots: Vec<f64>,
    /// Kernel vector when the matrix is numerically rank-deficient by one,
    /// normalized so the largest-magnitude entry is 1.
    pub kernel: Option<Vec<Complex64>>,
}

/// Full-pivot Gaussian elimination. `rel_tol` is the relative pivot
/// threshold: pivots below `rel_tol * |largest pivot|` count as zero.
/// Returns the pivot magnitudes and, when exactly one pivot is negligible,
/// the one-dimensional kernel.
pub fn full_pivot_eliminate(matrix: &[Vec<Complex64>], rel_tol: f64) -> Result<Elimination> {
    let n = matrix.len();
    if n == 0 || matrix.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidParameter("kernel needs a square matrix".into()));
    }
    let mut a: Vec<Vec<Complex64>> = matrix.to_vec();
    // col_perm[k] = original column index in slot k.
    let mut col_perm: Vec<usize> = (0..n).collect();
    let mut pivots = Vec::with_capacity(n);
    let mut rank = 0usize;
    for k in 0..n {
        let mut best = (k, k, 0.0f64);
        for i in k..n {
            for j in k..n {
                let m = a[i][j].norm();
                if m > best.2 {
                    best = (i, j, m);
                }
            }
        }
        let (pi, pj, pmag) = best;
        pivots.push(pmag);
        let largest = pivots[0].max(f64::MIN_POSITIVE);
        if pmag <= rel_tol * largest {
            break;
        }
        rank = k + 1;
        a.swap(k, pi);
        if pj != k {
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            col_perm.swap(k, pj);
        }
        let piv = a[k][k];
        for i in k + 1..n {
            let f = a[i][k] / piv;
            if f.norm() == 0.0 {
                continue;
            }
            for j in k..n {
                let akj = a[k][j];
                a[i][j] -= f * akj;
            }
        }
    }
    while pivots.len() < n {
        pivots.push(0.0);
    }
    let kernel = if rank == n - 1 {
        // Back-substitute with x[perm[n-1]] = 1.
        let mut x = vec![Complex64::new(0.0, 0.0); n];
        x[n - 1] = Complex64::new(1.0, 0.0);
        for k in (0..n - 1).rev() {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in k + 1..n {
                acc += a[k][j] * x[j];
            }
            x[k] = -acc / a[k][k];
        }
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (slot, &orig) in col_perm.iter().enumerate() {
            out[orig] = x[slot];
        }
        let max = out.iter().map(|z| z.norm()).fold(0.0f64, f64::max);
        for z in out.iter_mut() {
            *z /= max;
        }
        Some(out)
    } else {
        None
    };
    Ok(Elimination { pivots, kernel })
}

/// Frobenius norm of the difference from the identity.
pub fn gap_from_identity(m: &[[Complex64; 2]; 2]) -> f64 {
    let one = Complex64::new(1.0, 0.0);
    ((m[0][0] - one).norm_sqr()
        + m[0][1].norm_sqr()
        + m[1][0].norm_sqr()
        + (m[1][1] - one).norm_sqr())
    .sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        // [[2/3, 1/3],[1, 1/2]] has kernel (1, −2).
        let m = vec![
            vec![c(2.0 / 3.0, 0.0), c(1.0 / 3.0, 0.0)],
            vec![c(1.0, 0.0), c(0.5, 0.0)],
        ];
        let e = full_pivot_eliminate(&m, 1e-8).unwrap();
        let k = e.kernel.unwrap();
        let ratio = k[1] / k[0];
        assert!((ratio - c(-2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn full_rank_has_no_kernel() {
        let m = vec![vec![c(1.0, 0.0), c(0.0, 0.0)], vec![c(0.0, 0.0), c(2.0, 0.0)]];
        let e = full_pivot_eliminate(&m, 1e-8).unwrap();
        assert!(e.kernel.is_none());
        assert!(e.pivots[1] > 0.5);
    }

    #[test]
    fn rank_deficiency_by_two() {
        let m = vec![
            vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
            vec![c(2.0, 0.0), c(2.0, 0.0), c(0.0, 0.0)],
        ];
        let e = full_pivot_eliminate(&m, 1e-10).unwrap();
        assert!(e.kernel.is_none());
        assert!(e.pivots[1] <= 1e-10 * e.pivots[0]);
    }
}
