//! Radial interaction kernel Theta_{N,s,p}(r, rho).
//!
//! Theta is the angular average of |r x' - rho y'|^-(N+sp) over unit
//! directions x', y', normalized so that for r < rho
//!
//! ```text
//! Theta(r, rho) = alpha_N rho^-(N+sp) 2F1((N+sp)/2, sp/2 + 1; N/2; r^2/rho^2),
//! alpha_N = 2 pi^((N-1)/2) / Gamma((N-1)/2),
//! ```
//!
//! hence Theta(r, rho) ~ alpha_N rho^-(N+sp) as rho -> infinity. In one
//! dimension the angular constant degenerates (Gamma(0) pole) and the sphere
//! is the two-point set {-1, +1}: the kernel is the plain two-point average
//! (1/2) [ |r-rho|^-(1+sp) + (r+rho)^-(1+sp) ].
//!
//! On the diagonal Theta blows up like |r - rho|^-(1+sp); the bounded
//! product Theta |r - rho|^(1+sp) is available separately and is what the
//! near-diagonal regime should evaluate to avoid overflow.

use crate::error::{Error, Result};
use crate::specialfn::gamma::gamma;
use crate::specialfn::hyp2f1::{self, series, SERIES_MAX_TERMS, X_SWITCH};

/// Tolerance of the transformed series in the near-diagonal product; the
/// polynomial tail bound caps what is certifiable as x -> 1.
const PRODUCT_REL_TOL: f64 = 1e-9;

/// Below this distance from x = 1 the transformed series is replaced by its
/// two-term expansion around 1 (both coefficients are Gauss closed forms);
/// the truncation error is O((1-x)^(1 + beta - N)).
const EXPANSION_CUT: f64 = 1e-7;

/// Angular constant alpha_N; zero for N = 1 where the formula degenerates
/// (the reciprocal of the Gamma pole).
pub fn alpha_n(n: u32) -> f64 {
    if n == 1 {
        return 0.0;
    }
    let nf = n as f64;
    2.0 * std::f64::consts::PI.powf((nf - 1.0) / 2.0) / gamma((nf - 1.0) / 2.0)
}

/// Dimension and exponent data for one kernel family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams {
    pub n: u32,
    pub s: f64,
    pub p: f64,
    /// Angular constant alpha_N (zero in the degenerate N = 1 case).
    pub alpha_n: f64,
    /// Evaluations with |r - rho| at or below this floor are rejected.
    pub diag_floor: f64,
}

impl KernelParams {
    pub fn new(n: u32, s: f64, p: f64) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain("kernel dimension N must be >= 1".into()));
        }
        if !(0.0 < s && s < 1.0) {
            return Err(Error::Domain(format!("kernel requires s in (0,1), got {s}")));
        }
        if p < 2.0 {
            return Err(Error::Domain(format!("kernel requires p >= 2, got {p}")));
        }
        Ok(Self {
            n,
            s,
            p,
            alpha_n: alpha_n(n),
            diag_floor: 0.0,
        })
    }

    pub fn with_diag_floor(mut self, floor: f64) -> Self {
        self.diag_floor = floor;
        self
    }

    /// Kernel exponent N + sp.
    pub fn beta(&self) -> f64 {
        self.n as f64 + self.s * self.p
    }
}

/// Theta_{N,s,p}(r, rho) off the diagonal.
pub fn radial_kernel_theta(kp: &KernelParams, r: f64, rho: f64) -> Result<f64> {
    theta_beta(kp.n, kp.beta(), r, rho, kp.diag_floor)
}

/// The bounded product Theta_{N,s,p}(r, rho) |r - rho|^(1+sp).
///
/// Well defined on the diagonal itself (the transformed series converges at
/// x = 1 because its parameter excess is 1 + sp > 0).
pub fn theta_diag_product(kp: &KernelParams, r: f64, rho: f64) -> Result<f64> {
    theta_product_beta(kp.n, kp.beta(), r, rho)
}

/// Theta for a general exponent beta = N + (fractional order); shared by the
/// p-kernel and the perimeter kernel (beta = N + s).
pub(crate) fn theta_beta(n: u32, beta: f64, r: f64, rho: f64, floor: f64) -> Result<f64> {
    if r < 0.0 || rho < 0.0 {
        return Err(Error::Domain("kernel radii must be nonnegative".into()));
    }
    let (lo, hi) = if r < rho { (r, rho) } else { (rho, r) };
    theta_beta_gap(n, beta, lo, hi, hi - lo, floor)
}

/// Theta with the diagonal distance supplied exactly by the caller; this is
/// what quadratures use when lo and hi are both within rounding distance of
/// a common point and the subtraction would cancel.
pub(crate) fn theta_beta_gap(
    n: u32,
    beta: f64,
    lo: f64,
    hi: f64,
    gap: f64,
    floor: f64,
) -> Result<f64> {
    let sigma = beta - n as f64 + 1.0; // diagonal blow-up exponent 1 + sp
    // Overflow guard: gap^-sigma must stay inside f64 range.
    let overflow_floor = 10f64.powf(-300.0 / sigma);
    let eff_floor = floor.max(overflow_floor.min(1e-30));
    if gap <= eff_floor {
        return Err(Error::DiagonalSingularity {
            gap,
            floor: eff_floor,
        });
    }
    if n == 1 {
        return Ok(0.5 * (gap.powf(-beta) + (lo + hi).powf(-beta)));
    }
    let one_minus_x = (gap * (hi + lo) / hi / hi).min(1.0);
    if one_minus_x > 1.0 - X_SWITCH {
        let nf = n as f64;
        let x = (lo / hi) * (lo / hi);
        let f = series(
            beta / 2.0,
            (beta - nf) / 2.0 + 1.0,
            nf / 2.0,
            x,
            1e-13,
            SERIES_MAX_TERMS,
        )?;
        Ok(alpha_n(n) * hi.powf(-beta) * f)
    } else {
        let prod = product_core(n, beta, lo, hi, one_minus_x)?;
        Ok(prod * gap.powf(-sigma))
    }
}

/// Theta * |r - rho|^sigma with sigma = beta - N + 1, for a general exponent.
pub(crate) fn theta_product_beta(n: u32, beta: f64, r: f64, rho: f64) -> Result<f64> {
    if r < 0.0 || rho < 0.0 {
        return Err(Error::Domain("kernel radii must be nonnegative".into()));
    }
    if r == 0.0 && rho == 0.0 {
        return Err(Error::Domain("kernel product undefined at r = rho = 0".into()));
    }
    let (lo, hi) = if r < rho { (r, rho) } else { (rho, r) };
    if n == 1 {
        let ratio = (hi - lo) / (hi + lo);
        return Ok(0.5 * (1.0 + ratio.powf(beta)));
    }
    let one_minus_x = ((hi - lo) * (hi + lo) / hi / hi).min(1.0);
    product_core(n, beta, lo, hi, one_minus_x)
}

/// The bounded near-diagonal factor. With (a, b; c) the explicit kernel
/// parameters, the Euler transform gives
/// Theta = alpha_N hi^-beta (1-x)^-sigma Ft(x), Ft = 2F1(c-a, c-b; c; x);
/// the (1-x) power cancels against the |r - rho| factor, leaving
/// alpha_N hi^(2 + (beta-N) - N) (hi+lo)^-sigma Ft(x).
fn product_core(n: u32, beta: f64, lo: f64, hi: f64, one_minus_x: f64) -> Result<f64> {
    let nf = n as f64;
    let sigma = beta - nf + 1.0;
    let a = beta / 2.0;
    let b = (beta - nf) / 2.0 + 1.0;
    let c = nf / 2.0;
    let ft = if one_minus_x < EXPANSION_CUT {
        // Ft(x) = Ft(1) - Ft'(1)(1-x) + O((1-x)^(beta - N + 1)); both
        // coefficients come from the Gauss summation formula.
        let ft1 = hyp2f1::gauss_value_at_one(c - a, c - b, c);
        let dft1 =
            (c - a) * (c - b) / c * hyp2f1::gauss_value_at_one(c - a + 1.0, c - b + 1.0, c + 1.0);
        ft1 - dft1 * one_minus_x
    } else {
        let x = 1.0 - one_minus_x;
        series(c - a, c - b, c, x, PRODUCT_REL_TOL, SERIES_MAX_TERMS)?
    };
    Ok(alpha_n(n) * hi.powf(2.0 + (beta - nf) - nf) / (hi + lo).powf(sigma) * ft)
}
