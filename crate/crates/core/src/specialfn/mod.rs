//! Special functions and constants behind the nonlocal operators: the Gauss
//! hypergeometric function, the gamma function, the operator normalization
//! constant, the radial interaction kernel and the fractional perimeter.

pub mod gamma;
pub mod hyp2f1;
pub mod kernel;
pub mod perimeter;

pub use gamma::{gamma as gamma_fn, ln_gamma};
pub use hyp2f1::{gauss_2f1, HypergeometricParams};
pub use kernel::{alpha_n, radial_kernel_theta, theta_diag_product, KernelParams};
pub use perimeter::frac_perimeter;

use crate::error::{Error, Result};
use gamma::gamma;

/// Volume of the unit ball in R^N: omega_N = pi^(N/2) / Gamma(N/2 + 1).
///
/// Evaluated with the half-integer gamma recursion so that the small
/// dimensions come out exact (omega_1 = 2, omega_2 = pi).
pub fn unit_ball_volume(n: u32) -> f64 {
    const SQRT_PI: f64 = 1.7724538509055160273;
    let odd = n % 2 == 1;
    // Gamma(n/2 + 1) from Gamma(1/2) = sqrt(pi) or Gamma(1) = 1.
    let mut g = if odd { SQRT_PI } else { 1.0 };
    let mut x = if odd { 0.5 } else { 1.0 };
    let target = n as f64 / 2.0 + 1.0;
    while x < target - 0.25 {
        g *= x;
        x += 1.0;
    }
    let pi = std::f64::consts::PI;
    let pi_pow = if odd {
        SQRT_PI * pi.powi((n as i32 - 1) / 2)
    } else {
        pi.powi(n as i32 / 2)
    };
    pi_pow / g
}

/// Normalization constant of the fractional p-Laplacian,
///
/// ```text
/// gamma(N, s, p) = s p 2^(2s-2) (1-s) / pi^((N-1)/2)
///                  * Gamma((N + sp)/2) / (Gamma((p+1)/2) Gamma(2-s)).
/// ```
///
/// At p = 2 this reduces to the classical fractional-Laplacian constant
/// 4^s s Gamma((N+2s)/2) / (pi^(N/2) Gamma(1-s)).
pub fn gamma_norm_const(n: u32, s: f64, p: f64) -> Result<f64> {
    if n < 1 {
        return Err(Error::Domain("dimension N must be >= 1".into()));
    }
    if !(0.0 < s && s < 1.0) {
        return Err(Error::Domain(format!("require s in (0,1), got {s}")));
    }
    if p < 2.0 {
        return Err(Error::Domain(format!("require p >= 2, got {p}")));
    }
    let nf = n as f64;
    let sp = s * p;
    Ok(sp * 2f64.powf(2.0 * s - 2.0) * (1.0 - s) / std::f64::consts::PI.powf((nf - 1.0) / 2.0)
        * gamma((nf + sp) / 2.0)
        / (gamma((p + 1.0) / 2.0) * gamma(2.0 - s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_ball_volumes() {
        assert!((unit_ball_volume(1) - 2.0).abs() < 1e-15);
        assert!((unit_ball_volume(2) - std::f64::consts::PI).abs() < 1e-14);
        assert!((unit_ball_volume(3) - 4.0 * std::f64::consts::PI / 3.0).abs() < 1e-14);
    }

    #[test]
    fn norm_const_linear_case() {
        // gamma(1, 1/2, 2) = 1/pi.
        let got = gamma_norm_const(1, 0.5, 2.0).unwrap();
        assert!((got - 1.0 / std::f64::consts::PI).abs() < 1e-15, "got {got}");
    }

    #[test]
    fn norm_const_matches_classical_at_p2() {
        // Classical constant 4^s s Gamma((N+2s)/2) / (pi^(N/2) Gamma(1-s));
        // equality follows from Gamma(2-s) = (1-s) Gamma(1-s).
        for &(n, s) in &[(1u32, 0.5), (2, 0.5), (1, 0.25), (3, 0.8), (5, 0.1)] {
            let ours = gamma_norm_const(n, s, 2.0).unwrap();
            let nf = n as f64;
            let classical = 4f64.powf(s) * s * gamma((nf + 2.0 * s) / 2.0)
                / (std::f64::consts::PI.powf(nf / 2.0) * gamma(1.0 - s));
            assert!(
                ((ours - classical) / classical).abs() < 1e-13,
                "N={n}, s={s}: {ours} vs {classical}"
            );
        }
    }

    #[test]
    fn norm_const_positive() {
        for &(n, s, p) in &[(1u32, 0.1, 2.0), (2, 0.9, 7.0), (4, 0.5, 3.5)] {
            assert!(gamma_norm_const(n, s, p).unwrap() > 0.0);
        }
    }

    #[test]
    fn norm_const_rejects_out_of_range() {
        assert!(gamma_norm_const(1, 1.2, 2.0).is_err());
        assert!(gamma_norm_const(1, 0.5, 1.5).is_err());
        assert!(gamma_norm_const(0, 0.5, 2.0).is_err());
    }
}
