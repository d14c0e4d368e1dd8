//! Gauss hypergeometric function 2F1(a, b; c; x) on the unit interval.
//!
//! The series converges for x in [0, 1); at x = 1 the value is finite only
//! when c - a - b > 0, where the Gauss summation formula applies. Close to
//! x = 1 the Euler linear transformation
//!
//! ```text
//! 2F1(a, b; c; x) = (1 - x)^(c-a-b) 2F1(c-a, c-b; c; x)
//! ```
//!
//! is applied before summation; for c - a - b <= 0 (the radial-kernel
//! regime, where the value blows up on the diagonal) callers should instead
//! evaluate the bounded product through [`crate::specialfn::kernel`].

use crate::error::{Error, Result};
use crate::specialfn::gamma::gamma;

/// Argument above which the linear transformation is preferred.
pub const X_SWITCH: f64 = 0.95;

/// Relative tolerance targeted by the series summation.
pub const SERIES_REL_TOL: f64 = 1e-14;

/// Hard cap on series terms; only near-unit arguments with polynomially
/// decaying terms get anywhere close to this.
pub const SERIES_MAX_TERMS: usize = 4_000_000;

/// Gauss parameters (a, b; c) and argument x in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeometricParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub x: f64,
}

impl HypergeometricParams {
    pub fn new(a: f64, b: f64, c: f64, x: f64) -> Result<Self> {
        let p = Self { a, b, c, x };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.a.is_finite() && self.b.is_finite() && self.c.is_finite() && self.x.is_finite())
        {
            return Err(Error::Domain("2F1 parameters must be finite".into()));
        }
        if self.c <= 0.0 && self.c == self.c.floor() {
            return Err(Error::Domain(format!(
                "2F1 pole: c = {} is zero or a negative integer",
                self.c
            )));
        }
        if !(0.0..=1.0).contains(&self.x) {
            return Err(Error::Domain(format!(
                "2F1 argument x = {} outside [0, 1]",
                self.x
            )));
        }
        if self.x == 1.0 && self.c - self.a - self.b <= 0.0 {
            return Err(Error::Domain(format!(
                "2F1 at x = 1 requires c - a - b > 0 (got {})",
                self.c - self.a - self.b
            )));
        }
        Ok(())
    }
}

/// 2F1(a, b; c; x) for x in [0, 1].
pub fn gauss_2f1(params: HypergeometricParams) -> Result<f64> {
    params.validate()?;
    let HypergeometricParams { a, b, c, x } = params;
    if x == 0.0 {
        return Ok(1.0);
    }
    if x == 1.0 {
        return Ok(gauss_value_at_one(a, b, c));
    }
    if x <= X_SWITCH {
        return series(a, b, c, x, SERIES_REL_TOL, SERIES_MAX_TERMS);
    }
    let cab = c - a - b;
    if cab > 0.0 {
        // Linear transformation, then sum the transformed series.
        let f = series(c - a, c - b, c, x, SERIES_REL_TOL, SERIES_MAX_TERMS)?;
        Ok((1.0 - x).powf(cab) * f)
    } else {
        // Kernel regime: finite for x < 1 but large; sum directly and let
        // the stopping rule certify or reject.
        series(a, b, c, x, SERIES_REL_TOL, SERIES_MAX_TERMS)
    }
}

/// Gauss summation 2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)).
///
/// Caller guarantees c - a - b > 0.
pub fn gauss_value_at_one(a: f64, b: f64, c: f64) -> f64 {
    gamma(c) * gamma(c - a - b) / (gamma(c - a) * gamma(c - b))
}

/// Series summation that errors out unless the tail bound certifies `rel_tol`.
pub fn series(a: f64, b: f64, c: f64, x: f64, rel_tol: f64, max_terms: usize) -> Result<f64> {
    let (value, bound) = series_with_bound(a, b, c, x, rel_tol, max_terms)?;
    if bound > rel_tol * value.abs().max(f64::MIN_POSITIVE) {
        return Err(Error::NonConvergence(format!(
            "2F1 series tail bound {bound:e} above tolerance within {max_terms} terms \
             (a={a}, b={b}, c={c}, x={x})"
        )));
    }
    Ok(value)
}

/// Power-series summation with a certified stopping rule.
///
/// Terms follow t_{n+1} = t_n (a+n)(b+n) / ((c+n)(n+1)) x. Two tail bounds
/// apply once the term ratio settles below one:
///   - geometric: |t| r / (1 - r) with r the current ratio magnitude;
///   - polynomial: |t| (n+1) / (excess - 1) with excess = c + 1 - a - b,
///     valid when excess > 1 since |t_m| decays like (n/m)^excess past n.
///
/// Returns the partial sum and the absolute tail bound achieved, stopping
/// early as soon as the bound drops below `rel_tol` relative to the sum.
pub(crate) fn series_with_bound(
    a: f64,
    b: f64,
    c: f64,
    x: f64,
    rel_tol: f64,
    max_terms: usize,
) -> Result<(f64, f64)> {
    let excess = c + 1.0 - a - b;
    let asymptotic_after = 4.0 * (1.0 + a.abs().max(b.abs()).max(c.abs()));
    let mut sum = 1.0f64;
    let mut term = 1.0f64;
    let mut comp = 0.0f64; // Kahan compensation
    let mut bound = f64::INFINITY;
    for n in 0..max_terms {
        let nf = n as f64;
        let ratio = (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * x;
        term *= ratio;
        if term == 0.0 {
            // Terminating series (negative-integer parameter).
            return Ok((sum, 0.0));
        }
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if !sum.is_finite() {
            return Err(Error::NonConvergence(format!(
                "2F1 series overflowed at term {n} (a={a}, b={b}, c={c}, x={x})"
            )));
        }
        let r = ratio.abs();
        if r < 1.0 && nf > asymptotic_after {
            bound = term.abs() * r / (1.0 - r);
            if excess > 1.0 {
                bound = bound.min(2.0 * term.abs() * (nf + 1.0) / (excess - 1.0));
            }
            if bound <= rel_tol * sum.abs() {
                return Ok((sum, bound));
            }
        }
    }
    Ok((sum, bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f21(a: f64, b: f64, c: f64, x: f64) -> f64 {
        gauss_2f1(HypergeometricParams::new(a, b, c, x).unwrap()).unwrap()
    }

    #[test]
    fn value_at_zero_is_one() {
        assert_eq!(f21(0.7, 1.3, 2.1, 0.0), 1.0);
    }

    #[test]
    fn gauss_summation_at_one() {
        // 2F1(1/2, 1/2; 2; 1) = Gamma(2) Gamma(1) / Gamma(3/2)^2 = 4/pi.
        let got = f21(0.5, 0.5, 2.0, 1.0);
        let want = 4.0 / std::f64::consts::PI;
        assert!(((got - want) / want).abs() < 1e-13, "got {got}, want {want}");
    }

    #[test]
    fn log_closed_form() {
        // 2F1(1, 1; 2; x) = -ln(1-x)/x.
        let x = 0.5;
        let got = f21(1.0, 1.0, 2.0, x);
        let want = -(1.0 - x).ln() / x;
        assert!(((got - want) / want).abs() < 1e-13);
        assert!((got - 2.0 * std::f64::consts::LN_2).abs() < 1e-13);
    }

    #[test]
    fn binomial_closed_form_near_one() {
        // 2F1(a, b; b; x) = (1-x)^(-a); exercises the c - a - b < 0 branch.
        for &x in &[0.96, 0.99, 0.999] {
            let got = f21(0.75, 1.5, 1.5, x);
            let want = (1.0f64 - x).powf(-0.75);
            assert!(
                ((got - want) / want).abs() < 1e-11,
                "x = {x}: got {got}, want {want}"
            );
        }
    }

    #[test]
    fn euler_transform_branch_matches_direct_series() {
        // c - a - b = 1.2 > 0: the x > 0.95 branch takes the transform.
        let (a, b, c) = (0.4, 0.7, 2.3);
        let x = 0.97;
        let via_transform = f21(a, b, c, x);
        let direct = series(a, b, c, x, 1e-13, SERIES_MAX_TERMS).unwrap();
        assert!(((via_transform - direct) / direct).abs() < 1e-10);
    }

    #[test]
    fn domain_errors() {
        assert!(HypergeometricParams::new(1.0, 1.0, 0.0, 0.5).is_err());
        assert!(HypergeometricParams::new(1.0, 1.0, -3.0, 0.5).is_err());
        assert!(HypergeometricParams::new(1.0, 1.0, 2.0, 1.2).is_err());
        assert!(HypergeometricParams::new(1.0, 1.0, 2.0, -0.1).is_err());
        // x = 1 needs c > a + b.
        assert!(HypergeometricParams::new(1.0, 1.5, 2.0, 1.0).is_err());
    }
}
