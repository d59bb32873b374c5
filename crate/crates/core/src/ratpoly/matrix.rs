//! Dense matrices of polynomials and fraction-free determinants.

use super::MPoly;
use crate::error::{Error, Result};

/// Row-major matrix of [`MPoly`] entries over a shared variable list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<MPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InternalInconsistency(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        if let Some(first) = entries.first() {
            for e in &entries {
                if e.vars() != first.vars() {
                    return Err(Error::VarMismatch(
                        first.vars().to_vec(),
                        e.vars().to_vec(),
                    ));
                }
            }
        }
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(n: usize, m: usize, vars: &[&str]) -> Self {
        PolyMatrix {
            rows: n,
            cols: m,
            entries: vec![MPoly::zero(vars); n * m],
        }
    }

    pub fn identity(n: usize, vars: &[&str]) -> Self {
        let mut m = Self::zero(n, n, vars);
        for i in 0..n {
            *m.at_mut(i, i) = MPoly::one(vars);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &MPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut MPoly {
        &mut self.entries[i * self.cols + j]
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::InternalInconsistency(
                "matrix shape mismatch in add".into(),
            ));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        PolyMatrix::new(self.rows, self.cols, entries)
    }

    pub fn sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.add(&other.scale_neg())
    }

    fn scale_neg(&self) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.neg()).collect(),
        }
    }

    pub fn matmul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::InternalInconsistency(
                "matrix shape mismatch in matmul".into(),
            ));
        }
        let vars: Vec<&str> = self.entries[0].vars().iter().map(|s| s.as_str()).collect();
        let mut out = PolyMatrix::zero(self.rows, other.cols, &vars);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = MPoly::zero(&vars);
                for k in 0..self.cols {
                    acc = acc.add(&self.at(i, k).mul(other.at(k, j))?)?;
                }
                *out.at_mut(i, j) = acc;
            }
        }
        Ok(out)
    }
}

/// Exact determinant by fraction-free Bareiss elimination with exact
/// polynomial division. Row pivoting only; a fully zero pivot column means
/// the determinant is zero.
pub fn det(m: &PolyMatrix) -> Result<MPoly> {
    if m.rows != m.cols {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let vars: Vec<&str> = if let Some(e) = m.entries.first() {
        e.vars().iter().map(|s| s.as_str()).collect()
    } else {
        return Ok(MPoly::one(&[]));
    };
    if n == 1 {
        return Ok(m.at(0, 0).clone());
    }
    let mut w: Vec<Vec<MPoly>> = (0..n)
        .map(|i| (0..n).map(|j| m.at(i, j).clone()).collect())
        .collect();
    let mut sign = false;
    let mut prev = MPoly::one(&vars);
    for k in 0..n - 1 {
        if w[k][k].is_zero() {
            let swap = (k + 1..n).find(|&i| !w[i][k].is_zero());
            match swap {
                Some(i) => {
                    w.swap(k, i);
                    sign = !sign;
                }
                None => return Ok(MPoly::zero(&vars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = w[k][k]
                    .mul(&w[i][j])?
                    .sub(&w[i][k].mul(&w[k][j])?)?;
                w[i][j] = num.div_exact(&prev).map_err(|_| {
                    Error::InternalInconsistency("Bareiss exact division failed".into())
                })?;
            }
            w[i][k] = MPoly::zero(&vars);
        }
        prev = w[k][k].clone();
    }
    let d = w[n - 1][n - 1].clone();
    Ok(if sign { d.neg() } else { d })
}

/// Naive cofactor expansion along the first row. Exponential; retained as
/// an independent oracle for small matrices.
pub fn det_cofactor(m: &PolyMatrix) -> Result<MPoly> {
    if m.rows != m.cols {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let vars: Vec<&str> = m.entries[0].vars().iter().map(|s| s.as_str()).collect();
    if n == 1 {
        return Ok(m.at(0, 0).clone());
    }
    let mut acc = MPoly::zero(&vars);
    for j in 0..n {
        if m.at(0, j).is_zero() {
            continue;
        }
        let minor_entries: Vec<MPoly> = (1..n)
            .flat_map(|i| (0..n).filter(|&c| c != j).map(move |c| (i, c)))
            .map(|(i, c)| m.at(i, c).clone())
            .collect();
        let minor = PolyMatrix::new(n - 1, n - 1, minor_entries)?;
        let term = m.at(0, j).mul(&det_cofactor(&minor)?)?;
        acc = if j % 2 == 0 {
            acc.add(&term)?
        } else {
            acc.sub(&term)?
        };
    }
    Ok(acc)
}
