//! Sparse multivariate polynomials over the rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{rat_to_f64, Rational};
use crate::error::{Error, Result};

/// Exponent tuple, one entry per variable of the owning polynomial.
///
/// Ordered by graded lexicographic order: total degree first, then
/// lexicographically with earlier variables weighing more.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise divisibility (self | other is false; checks other/self).
    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients over a
/// fixed ordered variable list. No zero coefficients are stored; terms are
/// kept in graded-lex order, which makes equality, division and
/// serialization deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero(vars: &[&str]) -> Self {
        MPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: Rational) -> Self {
        let mut p = MPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; p.vars.len()]), c);
        }
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, Rational::from_integer(1.into()))
    }

    /// The polynomial `var` over the given variable list.
    pub fn var(vars: &[&str], name: &str) -> Result<Self> {
        let mut p = MPoly::zero(vars);
        let idx = p.var_index(name)?;
        let mut exp = vec![0; p.vars.len()];
        exp[idx] = 1;
        p.terms
            .insert(Monomial(exp), Rational::from_integer(1.into()));
        Ok(p)
    }

    pub fn from_terms(vars: &[&str], terms: Vec<(Vec<u32>, Rational)>) -> Result<Self> {
        let mut p = MPoly::zero(vars);
        for (exp, c) in terms {
            if exp.len() != p.vars.len() {
                return Err(Error::InternalInconsistency(format!(
                    "exponent tuple length {} != {} variables",
                    exp.len(),
                    p.vars.len()
                )));
            }
            p.add_term(Monomial(exp), c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex descending order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exp: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(exp.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.total_degree())
    }

    pub fn degree_in(&self, var: &str) -> Result<u32> {
        let idx = self.var_index(var)?;
        Ok(self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0))
    }

    /// Leading (graded-lex largest) monomial and coefficient.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_same_vars(&self, other: &MPoly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VarMismatch(self.vars.clone(), other.vars.clone()));
        }
        Ok(())
    }

    pub fn add(&self, other: &MPoly) -> Result<MPoly> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MPoly) -> Result<MPoly> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> MPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> MPoly {
        if k.is_zero() {
            return MPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= k.clone();
        }
        out
    }

    pub fn mul(&self, other: &MPoly) -> Result<MPoly> {
        self.check_same_vars(other)?;
        let mut out = MPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> MPoly {
        let mut out = MPoly::one(&self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>());
        for _ in 0..n {
            out = out.mul(self).expect("same vars");
        }
        out
    }

    /// Exact partial derivative with respect to `var`.
    pub fn diff(&self, var: &str) -> Result<MPoly> {
        let idx = self.var_index(var)?;
        let mut out = MPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut exp = m.0.clone();
            exp[idx] = e - 1;
            out.add_term(Monomial(exp), c * Rational::from_integer(e.into()));
        }
        Ok(out)
    }

    /// Substitutes polynomials for variables. Every variable of `self` must
    /// either appear in `bindings` or exist in `target_vars` (where it maps
    /// to itself). All bound polynomials must live over `target_vars`.
    pub fn subst(&self, bindings: &[(&str, MPoly)], target_vars: &[&str]) -> Result<MPoly> {
        for (name, _) in bindings {
            self.var_index(name)?;
        }
        let target: Vec<String> = target_vars.iter().map(|s| s.to_string()).collect();
        let mut images: Vec<MPoly> = Vec::with_capacity(self.vars.len());
        for v in &self.vars {
            if let Some((_, p)) = bindings.iter().find(|(name, _)| name == v) {
                if p.vars != target {
                    return Err(Error::VarMismatch(p.vars.clone(), target.clone()));
                }
                images.push(p.clone());
            } else {
                images.push(MPoly::var(target_vars, v)?);
            }
        }
        // Memoized powers of each image, filled on demand.
        let mut powers: Vec<Vec<MPoly>> = images
            .iter()
            .map(|p| vec![MPoly::one(target_vars), p.clone()])
            .collect();
        let mut out = MPoly::zero(target_vars);
        for (m, c) in &self.terms {
            let mut term = MPoly::constant(target_vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i])?;
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e as usize])?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Complex evaluation. Coefficients are rounded to f64 independently,
    /// then terms accumulated in canonical order.
    pub fn eval(&self, point: &[(&str, Complex64)]) -> Result<Complex64> {
        let vals = self.point_values(point)?;
        let pows = self.power_tables(&vals);
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in self.terms.iter() {
            let mut t = Complex64::new(rat_to_f64(c), 0.0);
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= pows[i][e as usize];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Sum of absolute monomial magnitudes at the point; the natural scale
    /// for relative residuals of `eval`.
    pub fn eval_scale(&self, point: &[(&str, Complex64)]) -> Result<f64> {
        let vals = self.point_values(point)?;
        let pows = self.power_tables(&vals);
        let mut acc = 0.0f64;
        for (m, c) in self.terms.iter() {
            let mut t = rat_to_f64(&c.abs());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t *= pows[i][e as usize].norm();
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    fn point_values(&self, point: &[(&str, Complex64)]) -> Result<Vec<Complex64>> {
        self.vars
            .iter()
            .map(|v| {
                point
                    .iter()
                    .find(|(name, _)| name == v)
                    .map(|(_, z)| *z)
                    .ok_or_else(|| Error::UnboundVariable(v.clone()))
            })
            .collect()
    }

    fn power_tables(&self, vals: &[Complex64]) -> Vec<Vec<Complex64>> {
        let max_exp: Vec<u32> = (0..self.vars.len())
            .map(|i| self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0))
            .collect();
        vals.iter()
            .zip(&max_exp)
            .map(|(&z, &e)| {
                let mut t = Vec::with_capacity(e as usize + 1);
                t.push(Complex64::new(1.0, 0.0));
                for k in 1..=e as usize {
                    let prev = t[k - 1];
                    t.push(prev * z);
                }
                t
            })
            .collect()
    }

    /// Exact quotient `self / divisor` if the division leaves no remainder.
    /// Multivariate division under graded-lex order, leading-term reduction
    /// only: for an exact multiple the leading term of every partial
    /// remainder is divisible by the divisor's leading term, so the first
    /// non-divisible leading term proves non-divisibility.
    pub fn div_exact(&self, divisor: &MPoly) -> Result<MPoly> {
        self.check_same_vars(divisor)?;
        if divisor.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let (lm_d, lc_d) = divisor.leading_term().expect("nonzero divisor");
        let lm_d = lm_d.clone();
        let lc_d = lc_d.clone();
        let mut rem = self.clone();
        let mut quot = MPoly::zero(&self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>());
        while let Some((lm_r, lc_r)) = rem.leading_term() {
            if !lm_d.divides(lm_r) {
                return Err(Error::NotDivisible);
            }
            let qm = lm_r.div(&lm_d);
            let qc = lc_r / &lc_d;
            // rem -= (qc * qm) * divisor
            for (m, c) in &divisor.terms {
                rem.add_term(qm.mul(m), -(&qc * c));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `var`;
    /// entry `i` is the coefficient of `var^i`, an MPoly over the same
    /// variable list with zero exponent in `var`.
    pub fn coeffs_in(&self, var: &str) -> Result<Vec<MPoly>> {
        let idx = self.var_index(var)?;
        let deg = self.degree_in(var)? as usize;
        let mut out = vec![
            MPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
            deg + 1
        ];
        for (m, c) in &self.terms {
            let e = m.0[idx] as usize;
            let mut exp = m.0.clone();
            exp[idx] = 0;
            out[e].add_term(Monomial(exp), c.clone());
        }
        Ok(out)
    }

    /// Determinant of the Sylvester matrix of `self` and `other` in `var`.
    pub fn resultant(&self, other: &MPoly, var: &str) -> Result<MPoly> {
        self.check_same_vars(other)?;
        let n = self.degree_in(var)? as usize;
        let m = other.degree_in(var)? as usize;
        if n == 0 || m == 0 {
            return Err(Error::DegreeZeroInVar(var.to_string()));
        }
        let a = self.coeffs_in(var)?;
        let b = other.coeffs_in(var)?;
        let size = n + m;
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let zero = MPoly::zero(&vars);
        let mut entries = vec![zero; size * size];
        // m rows of a-coefficients (descending), then n rows of b-coefficients.
        for row in 0..m {
            for (k, ak) in a.iter().rev().enumerate() {
                entries[row * size + row + k] = ak.clone();
            }
        }
        for row in 0..n {
            for (k, bk) in b.iter().rev().enumerate() {
                entries[(m + row) * size + row + k] = bk.clone();
            }
        }
        let mat = super::PolyMatrix::new(size, size, entries)?;
        super::det(&mat)
    }

    /// Canonical JSON form: `{"vars":[...],"terms":[{num,den,exp},...]}`
    /// with terms in graded-lex descending order.
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.vars.clone(),
            terms: self
                .terms_desc()
                .map(|(m, c)| TermJson {
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                    exp: m.0.clone(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<MPoly> {
        let vars: Vec<&str> = json.vars.iter().map(|s| s.as_str()).collect();
        let mut terms = Vec::with_capacity(json.terms.len());
        for t in &json.terms {
            let num = t
                .num
                .parse()
                .map_err(|_| Error::Parse(format!("bad num `{}`", t.num)))?;
            let den = t
                .den
                .parse()
                .map_err(|_| Error::Parse(format!("bad den `{}`", t.den)))?;
            terms.push((t.exp.clone(), Rational::new(num, den)));
        }
        MPoly::from_terms(&vars, terms)
    }
}

/// Interchange form of a polynomial; the wire contract for every CLI
/// command that emits polynomials.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermJson {
    pub num: String,
    pub den: String,
    pub exp: Vec<u32>,
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms_desc() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = m.total_degree() == 0;
            if !mag.is_one() || is_const {
                write!(f, "{mag}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first_var = true;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, "*")?;
                }
                first_var = false;
                write!(f, "{}", self.vars[i])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
            continue;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::{rat, rat_int};

    fn xy() -> [&'static str; 2] {
        ["x", "y"]
    }

    fn x() -> MPoly {
        MPoly::var(&xy(), "x").unwrap()
    }

    fn y() -> MPoly {
        MPoly::var(&xy(), "y").unwrap()
    }

    fn c(n: i64, d: i64) -> MPoly {
        MPoly::constant(&xy(), rat(n, d))
    }

    #[test]
    fn difference_of_squares() {
        let p = x().add(&c(1, 1)).unwrap();
        let q = x().sub(&c(1, 1)).unwrap();
        let prod = p.mul(&q).unwrap();
        let expect = x().mul(&x()).unwrap().sub(&c(1, 1)).unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn additive_identity() {
        let p = x().mul(&y()).unwrap().add(&c(2, 3)).unwrap();
        assert_eq!(p.add(&MPoly::zero(&xy())).unwrap(), p);
    }

    #[test]
    fn two_by_two_spectral_entry() {
        // λ(λ−1) − μ² over (λ, μ), the hand-expanded 2x2 case.
        let vars = ["lambda", "mu"];
        let l = MPoly::var(&vars, "lambda").unwrap();
        let m = MPoly::var(&vars, "mu").unwrap();
        let got = l
            .mul(&l.sub(&MPoly::one(&vars)).unwrap())
            .unwrap()
            .sub(&m.mul(&m).unwrap())
            .unwrap();
        let expect = MPoly::from_terms(
            &vars,
            vec![
                (vec![2, 0], rat_int(1)),
                (vec![1, 0], rat_int(-1)),
                (vec![0, 2], rat_int(-1)),
            ],
        )
        .unwrap();
        assert_eq!(got, expect);
    }

    #[test]
    fn diff_basic() {
        let vars = ["chi", "a", "s"];
        // ∂a(a²χ) = 2aχ
        let p = MPoly::from_terms(&vars, vec![(vec![1, 2, 0], rat_int(1))]).unwrap();
        let d = p.diff("a").unwrap();
        assert_eq!(
            d,
            MPoly::from_terms(&vars, vec![(vec![1, 1, 0], rat_int(2))]).unwrap()
        );
        // ∂s of a constant is 0
        assert!(MPoly::constant(&vars, rat(5, 7)).diff("s").unwrap().is_zero());
        // ∂χ((a+s)(1−4χ²)+4χ) = −8χ(a+s)+4
        let p = MPoly::from_terms(
            &vars,
            vec![
                (vec![0, 1, 0], rat_int(1)),
                (vec![0, 0, 1], rat_int(1)),
                (vec![2, 1, 0], rat_int(-4)),
                (vec![2, 0, 1], rat_int(-4)),
                (vec![1, 0, 0], rat_int(4)),
            ],
        )
        .unwrap();
        let d = p.diff("chi").unwrap();
        let expect = MPoly::from_terms(
            &vars,
            vec![
                (vec![1, 1, 0], rat_int(-8)),
                (vec![1, 0, 1], rat_int(-8)),
                (vec![0, 0, 0], rat_int(4)),
            ],
        )
        .unwrap();
        assert_eq!(d, expect);
    }

    #[test]
    fn diff_unknown_var() {
        assert!(x().diff("z").is_err());
    }

    #[test]
    fn subst_simple() {
        // (χa−1) with χ→0 → −1
        let vars = ["chi", "a"];
        let p = MPoly::from_terms(
            &vars,
            vec![(vec![1, 1], rat_int(1)), (vec![0, 0], rat_int(-1))],
        )
        .unwrap();
        let zero = MPoly::zero(&["a"]);
        let got = p.subst(&[("chi", zero)], &["a"]).unwrap();
        assert_eq!(got, MPoly::constant(&["a"], rat_int(-1)));
    }

    #[test]
    fn subst_lambda_to_r2_minus_mu2() {
        // Q1 = λ (1x1 determinant of H_1+λId), λ → r²−μ² over (mu, r).
        let q1 = MPoly::var(&["lambda", "mu"], "lambda").unwrap();
        let tv = ["mu", "r"];
        let r = MPoly::var(&tv, "r").unwrap();
        let mu = MPoly::var(&tv, "mu").unwrap();
        let image = r.mul(&r).unwrap().sub(&mu.mul(&mu).unwrap()).unwrap();
        // mu maps to itself in the target list.
        let got = q1
            .subst(&[("lambda", image.clone()), ("mu", mu)], &tv)
            .unwrap();
        assert_eq!(got, image);
    }

    #[test]
    fn eval_constant_term_and_surface_zero() {
        let vars = ["chi", "a", "s"];
        // 4*P_{1,+} = (a+s)(1−4χ²)+4χ vanishes at (1, 1/3, 1)
        let p = MPoly::from_terms(
            &vars,
            vec![
                (vec![0, 1, 0], rat_int(1)),
                (vec![0, 0, 1], rat_int(1)),
                (vec![2, 1, 0], rat_int(-4)),
                (vec![2, 0, 1], rat_int(-4)),
                (vec![1, 0, 0], rat_int(4)),
            ],
        )
        .unwrap();
        let z = p
            .eval(&[
                ("chi", Complex64::new(1.0, 0.0)),
                ("a", Complex64::new(1.0 / 3.0, 0.0)),
                ("s", Complex64::new(1.0, 0.0)),
            ])
            .unwrap();
        assert!(z.norm() < 1e-15);
        // all-zero point yields the constant term
        let q = p.add(&MPoly::constant(&vars, rat(7, 2))).unwrap();
        let z0 = Complex64::new(0.0, 0.0);
        let v = q.eval(&[("chi", z0), ("a", z0), ("s", z0)]).unwrap();
        assert_eq!(v, Complex64::new(3.5, 0.0));
    }

    #[test]
    fn eval_unbound_errors() {
        assert!(x().eval(&[("y", Complex64::new(1.0, 0.0))]).is_err());
    }

    #[test]
    fn div_exact_quotient_and_failure() {
        let p = x().mul(&x()).unwrap().sub(&c(1, 1)).unwrap(); // x²−1
        let q = x().sub(&c(1, 1)).unwrap(); // x−1
        let h = p.div_exact(&q).unwrap();
        assert_eq!(h, x().add(&c(1, 1)).unwrap());
        let bad = x().mul(&x()).unwrap().add(&c(1, 1)).unwrap(); // x²+1
        assert!(matches!(
            bad.div_exact(&x().add(&c(1, 1)).unwrap()),
            Err(Error::NotDivisible)
        ));
        assert!(matches!(
            p.div_exact(&MPoly::zero(&xy())),
            Err(Error::ZeroDivisor)
        ));
    }

    #[test]
    fn resultant_linear_and_quadratic() {
        // Res_x(x−c, x−d) = c−d up to sign, over vars (x, c, d)
        let vars = ["x", "c", "d"];
        let xx = MPoly::var(&vars, "x").unwrap();
        let cc = MPoly::var(&vars, "c").unwrap();
        let dd = MPoly::var(&vars, "d").unwrap();
        let r = xx
            .sub(&cc)
            .unwrap()
            .resultant(&xx.sub(&dd).unwrap(), "x")
            .unwrap();
        let diff = cc.sub(&dd).unwrap();
        assert!(r == diff || r == diff.neg());

        // Res_x(x²−u, 2x) = ±4u over vars (x, u)
        let vars = ["x", "u"];
        let xx = MPoly::var(&vars, "x").unwrap();
        let uu = MPoly::var(&vars, "u").unwrap();
        let p = xx.mul(&xx).unwrap().sub(&uu).unwrap();
        let two_x = xx.scale(&rat_int(2));
        let r = p.resultant(&two_x, "x").unwrap();
        let four_u = uu.scale(&rat_int(4));
        assert!(r == four_u || r == four_u.neg());

        // degree-zero input rejected
        assert!(p.resultant(&MPoly::one(&vars), "x").is_err());
    }

    #[test]
    fn json_round_trip_is_canonical() {
        let p = MPoly::from_terms(
            &["x", "y"],
            vec![
                (vec![2, 0], rat(1, 3)),
                (vec![0, 1], rat_int(-2)),
                (vec![1, 1], rat(5, 7)),
            ],
        )
        .unwrap();
        let j = p.to_json();
        // graded-lex descending: x*y (deg 2, x first) then x² ... careful:
        // x² and x*y both have degree 2; x² = (2,0) > (1,1) lexicographically.
        assert_eq!(j.terms[0].exp, vec![2, 0]);
        assert_eq!(j.terms[1].exp, vec![1, 1]);
        assert_eq!(j.terms[2].exp, vec![0, 1]);
        let back = MPoly::from_json(&j).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn display_reads_naturally() {
        let p = MPoly::from_terms(
            &["x", "y"],
            vec![(vec![2, 0], rat_int(-1)), (vec![0, 0], rat(1, 2))],
        )
        .unwrap();
        assert_eq!(p.to_string(), "-x^2 + 1/2");
    }
}
