//! Floating-point building blocks: complex formatting, univariate complex
//! polynomials with root finding, dense kernel extraction, an adaptive
//! embedded Runge–Kutta integrator, and quadrature rules.

pub mod cpoly;
pub mod linalg;
pub mod ode;
pub mod quad;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Formats a complex number as `RE+IMi` / `RE-IMi` with shortest
/// round-trip decimal fields.
pub fn fmt_complex(z: Complex64) -> String {
    let re = if z.re == 0.0 { 0.0 } else { z.re };
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    if im < 0.0 {
        format!("{}-{}i", re, -im)
    } else {
        format!("{}+{}i", re, im)
    }
}

/// Parses `RE`, `RE+IMi`, `RE-IMi` (exponent forms allowed in both fields).
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty complex literal".into()));
    }
    if let Some(body) = s.strip_suffix('i').or_else(|| s.strip_suffix('I')) {
        // Split at the last +/- that is not part of an exponent and not leading.
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let c = bytes[k] as char;
            if (c == '+' || c == '-') && !matches!(bytes[k - 1] as char, 'e' | 'E') {
                split = Some(k);
                break;
            }
        }
        let k = split.ok_or_else(|| {
            Error::Parse(format!("`{s}`: expected RE+IMi with an explicit real part"))
        })?;
        let re: f64 = body[..k]
            .parse()
            .map_err(|_| Error::Parse(format!("bad real part in `{s}`")))?;
        let im_str = &body[k..];
        let im: f64 = if im_str == "+" || im_str == "-" {
            if im_str == "+" {
                1.0
            } else {
                -1.0
            }
        } else {
            im_str
                .parse()
                .map_err(|_| Error::Parse(format!("bad imaginary part in `{s}`")))?
        };
        Ok(Complex64::new(re, im))
    } else {
        let re: f64 = s
            .parse()
            .map_err(|_| Error::Parse(format!("bad real literal `{s}`")))?;
        Ok(Complex64::new(re, 0.0))
    }
}
