//! Fractional s-perimeter of balls,
//! P_s(B_R) = int_{B_R} int_{B_R^c} |x - y|^-(N+s) dx dy,
//! homogeneous of degree N - s in R.
//!
//! In one dimension the inner integral is elementary,
//! int_{|y|>R} |x-y|^-(1+s) dy = [(R-x)^-s + (R+x)^-s] / s,
//! and the outer integral runs in distance coordinates from the boundary.
//! For N >= 2 the double integral reduces to radial coordinates through the
//! angular kernel at exponent N + s:
//!
//! ```text
//! P_s(B_R) = N omega_N W_N  int_0^R int_R^oo Theta^(N+s)(r, rho)
//!            rho^(N-1) r^(N-1) drho dr,   W_N = sqrt(pi) Gamma((N-1)/2) / Gamma(N/2),
//! ```
//!
//! with geometric ladders toward the interface r = rho = R on both axes and
//! the diagonal distance rho - r carried exactly as a sum of ladder offsets.

use crate::error::{Error, Result};
use crate::quad;
use crate::specialfn::gamma::gamma;
use crate::specialfn::kernel::theta_beta_gap;
use crate::specialfn::unit_ball_volume;

/// Relative tolerance targeted by the 1D quadrature; the pipeline constant
/// H(N, s, p) consumes this value.
const PERIM_REL_TOL_1D: f64 = 1e-10;

/// Relative tolerance targeted by the radial-kernel quadrature for N >= 2.
const PERIM_REL_TOL_ND: f64 = 1e-7;

/// Fractional s-perimeter of the ball of radius `r_ball` in dimension `n`.
pub fn frac_perimeter(n: u32, s: f64, r_ball: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::Domain("perimeter dimension N must be >= 1".into()));
    }
    if !(0.0 < s && s < 1.0) {
        return Err(Error::Domain(format!(
            "perimeter requires s in (0,1), got {s}"
        )));
    }
    if !(r_ball > 0.0 && r_ball.is_finite()) {
        return Err(Error::Domain(format!(
            "perimeter requires R > 0, got {r_ball}"
        )));
    }
    if n == 1 {
        perimeter_1d(s, r_ball)
    } else {
        perimeter_radial(n, s, r_ball)
    }
}

fn perimeter_1d(s: f64, r: f64) -> Result<f64> {
    // By symmetry both inner terms integrate to the same value:
    // P = (2/s) int_0^{2R} d^-s dd, d the distance to one boundary point.
    let v = quad::singular_ladder(&|d: f64| d.powf(-s), 2.0 * r, PERIM_REL_TOL_1D)?;
    Ok(2.0 / s * v)
}

fn perimeter_radial(n: u32, s: f64, r_ball: f64) -> Result<f64> {
    let nf = n as f64;
    let beta = nf + s;
    let wallis = std::f64::consts::PI.sqrt() * gamma((nf - 1.0) / 2.0) / gamma(nf / 2.0);
    let prefactor = nf * unit_ball_volume(n) * wallis;

    // Inner integral over rho in (R, oo) at fixed r = R - d_out, with the
    // diagonal distance rho - r = e + d_out carried exactly.
    let inner = |d_out: f64| -> Result<f64> {
        let r = r_ball - d_out;
        // rho in (R, 2R): peaked at rho = R with scale d_out.
        let near = quad::singular_ladder(
            &|e: f64| {
                let rho = r_ball + e;
                theta_beta_gap(n, beta, r, rho, e + d_out, 0.0)
                    .map(|t| t * rho.powf(nf - 1.0))
                    .unwrap_or(0.0)
            },
            r_ball,
            PERIM_REL_TOL_ND,
        )?;
        // rho in (2R, oo): u = 1/rho; the integrand behaves like u^(s-1)
        // at u = 0, an integrable endpoint singularity.
        let far = quad::singular_ladder(
            &|u: f64| {
                let rho = 1.0 / u;
                theta_beta_gap(n, beta, r, rho, rho - r, 0.0)
                    .map(|t| t * rho.powf(nf - 1.0) / (u * u))
                    .unwrap_or(0.0)
            },
            0.5 / r_ball,
            PERIM_REL_TOL_ND,
        )?;
        Ok(near + far)
    };

    let inner_err: std::cell::RefCell<Option<Error>> = std::cell::RefCell::new(None);
    let outer = quad::singular_ladder(
        &|d_out: f64| {
            let r = r_ball - d_out;
            if r <= 0.0 {
                return 0.0;
            }
            match inner(d_out) {
                Ok(v) => r.powf(nf - 1.0) * v,
                Err(e) => {
                    inner_err.borrow_mut().get_or_insert(e);
                    0.0
                }
            }
        },
        r_ball,
        PERIM_REL_TOL_ND,
    )?;
    if let Some(e) = inner_err.into_inner() {
        return Err(e);
    }
    Ok(prefactor * outer)
}
