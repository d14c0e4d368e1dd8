//! Rearrangements and mass-concentration order on sampled profiles.
//!
//! The decreasing rearrangement of a grid function is obtained by sorting
//! the absolute cell values; this is exact for piecewise-constant data and
//! keeps equimeasurability and every L^p sum exact at the discrete level.
//! The Schwarz profile places the sorted values symmetrically about the
//! origin of the measure-preserving interval, largest values innermost.

use crate::error::{Error, Result};
use crate::grid::GridFunction;

/// Distribution function mu_f(t): total length of cells where |f| > t.
pub fn distribution_function(f: &GridFunction, t: f64) -> f64 {
    debug_assert!(t >= 0.0);
    let count = f.values().iter().filter(|v| v.abs() > t).count();
    count as f64 * f.h()
}

/// Absolute cell values sorted in non-increasing order.
fn sorted_desc(f: &GridFunction) -> Vec<f64> {
    let mut v: Vec<f64> = f.values().iter().map(|x| x.abs()).collect();
    v.sort_by(|a, b| b.partial_cmp(a).unwrap());
    v
}

/// One-dimensional decreasing rearrangement f*, returned on (0, |Omega|)
/// with the same cell width.
pub fn decreasing_rearrangement(f: &GridFunction) -> GridFunction {
    GridFunction::new(0.0, f.measure(), sorted_desc(f)).expect("valid grid")
}

/// Schwarz (radially decreasing) rearrangement f# on the symmetric interval
/// Omega# = (-|Omega|/2, |Omega|/2).
///
/// Cells are filled outward from the origin, right cell before left cell at
/// each distance, so the sorted values are placed as a permutation: the
/// result is exactly equimeasurable with f and radially non-increasing on
/// each side. Ties keep the sort order.
pub fn schwarz_profile(f: &GridFunction) -> GridFunction {
    let sorted = sorted_desc(f);
    let n = sorted.len();
    let half = f.measure() / 2.0;
    let mut values = vec![0.0; n];
    // Cell indices ordered by |center| ascending, right before left.
    let order: Vec<usize> = if n % 2 == 0 {
        let mut o = Vec::with_capacity(n);
        for k in 0..n / 2 {
            o.push(n / 2 + k);
            o.push(n / 2 - 1 - k);
        }
        o
    } else {
        let mid = n / 2;
        let mut o = vec![mid];
        for k in 1..=n / 2 {
            o.push(mid + k);
            o.push(mid - k);
        }
        o
    };
    for (rank, &cell) in order.iter().enumerate() {
        values[cell] = sorted[rank];
    }
    GridFunction::new(-half, half, values).expect("valid grid")
}

/// The map r -> integral of f over B_r, sampled on a set of radii.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcentrationCurve {
    pub radii: Vec<f64>,
    pub masses: Vec<f64>,
}

/// Concentration curve of `f` (as a radial profile on a symmetric interval):
/// masses[i] = integral of f over (-r_i, r_i), by exact cell overlap. Radii
/// beyond the domain are clamped; the exterior contributes zero.
pub fn concentration_function(f: &GridFunction, radii: &[f64]) -> ConcentrationCurve {
    let masses = radii
        .iter()
        .map(|&r| {
            debug_assert!(r >= 0.0);
            f.integral_over(-r, r)
        })
        .collect();
    ConcentrationCurve {
        radii: radii.to_vec(),
        masses,
    }
}

/// All distinct cell-edge radii of a grid, 0 included.
pub fn boundary_radii(f: &GridFunction) -> Vec<f64> {
    let n = f.n_cells();
    let (left, _) = f.domain();
    let h = f.h();
    let mut radii: Vec<f64> = (0..=n).map(|i| (left + i as f64 * h).abs()).collect();
    radii.push(0.0);
    radii.sort_by(|a, b| a.partial_cmp(b).unwrap());
    radii.dedup_by(|a, b| (*a - *b).abs() < 1e-14 * (1.0 + b.abs()));
    radii
}

/// Outcome of a mass-concentration comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConcentrationOrder {
    /// f is less concentrated than g (f < g in the mass order).
    LessOrEqual,
    /// f is more concentrated than g.
    GreaterOrEqual,
    Equal,
    Incomparable,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComparisonOutcome {
    pub order: ConcentrationOrder,
    /// Worst signed deviation against the returned relation; at most `tol`
    /// for any verdict other than `Incomparable`.
    pub worst_violation: f64,
}

/// Compare the mass concentrations of two nonnegative radial profiles on
/// intervals of equal measure, on the union of their cell-boundary radii.
pub fn concentration_compare(
    f: &GridFunction,
    g: &GridFunction,
    tol: f64,
) -> Result<ComparisonOutcome> {
    let hmax = f.h().max(g.h());
    if (f.measure() - g.measure()).abs() > hmax {
        return Err(Error::MeasureMismatch {
            left: f.measure(),
            right: g.measure(),
        });
    }
    let mut radii = boundary_radii(f);
    radii.extend(boundary_radii(g));
    radii.sort_by(|a, b| a.partial_cmp(b).unwrap());
    radii.dedup();
    let cf = concentration_function(f, &radii);
    let cg = concentration_function(g, &radii);
    let mut max_d = f64::NEG_INFINITY;
    let mut min_d = f64::INFINITY;
    for (a, b) in cf.masses.iter().zip(&cg.masses) {
        let d = a - b;
        max_d = max_d.max(d);
        min_d = min_d.min(d);
    }
    let order = if max_d <= tol && -min_d <= tol {
        ConcentrationOrder::Equal
    } else if max_d <= tol {
        ConcentrationOrder::LessOrEqual
    } else if -min_d <= tol {
        ConcentrationOrder::GreaterOrEqual
    } else {
        ConcentrationOrder::Incomparable
    };
    let worst_violation = match order {
        ConcentrationOrder::LessOrEqual => max_d,
        ConcentrationOrder::GreaterOrEqual => -min_d,
        ConcentrationOrder::Equal | ConcentrationOrder::Incomparable => max_d.max(-min_d),
    };
    Ok(ComparisonOutcome {
        order,
        worst_violation,
    })
}

/// Truncation band parameters (t, t + h).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationParams {
    pub t: f64,
    pub h: f64,
}

impl TruncationParams {
    pub fn new(t: f64, h: f64) -> Result<Self> {
        if !(t >= 0.0 && t.is_finite() && h > 0.0 && h.is_finite()) {
            return Err(Error::Domain(format!(
                "truncation needs t >= 0 and h > 0, got t={t}, h={h}"
            )));
        }
        Ok(Self { t, h })
    }
}

/// The clamp of theta to the band [t, t+h], shifted to start at zero;
/// 1-Lipschitz in theta.
pub fn truncation_g(tp: TruncationParams, theta: f64) -> f64 {
    if theta > tp.t + tp.h {
        tp.h
    } else if theta > tp.t {
        theta - tp.t
    } else {
        0.0
    }
}

/// The supermodular interaction of the truncation test function:
///
/// ```text
/// F(u, v) = u^p + v^p - |u-v|^(p-2) (u-v) (G_{t,h}(u) - G_{t,h}(v)),
/// ```
///
/// continuous, F(0,0) = 0, nonnegative, and supermodular for p >= 2.
pub fn riesz_f(p: f64, tp: TruncationParams, u: f64, v: f64) -> f64 {
    debug_assert!(p >= 2.0 && u >= 0.0 && v >= 0.0);
    let d = u - v;
    let dg = truncation_g(tp, u) - truncation_g(tp, v);
    let core = if d == 0.0 {
        0.0
    } else {
        d.abs().powf(p - 2.0) * d * dg
    };
    u.powf(p) + v.powf(p) - core
}

/// Lorentz quasi-norm ||f||_{p,q} computed from the decreasing
/// rearrangement's exact running average (prefix sums), with composite
/// midpoint quadrature in sigma for finite q and an exact per-cell supremum
/// for q = infinity.
pub fn lorentz_norm(f: &GridFunction, p: f64, q: f64) -> Result<f64> {
    if !(p > 1.0) {
        return Err(Error::Domain(format!("Lorentz norm needs p > 1, got {p}")));
    }
    if !(q > 0.0) {
        return Err(Error::Domain(format!("Lorentz norm needs q > 0, got {q}")));
    }
    let star = decreasing_rearrangement(f);
    let h = star.h();
    let vals = star.values();
    let n = vals.len();
    // prefix[k] = integral of f* over (0, k h).
    let mut prefix = vec![0.0; n + 1];
    for k in 0..n {
        prefix[k + 1] = prefix[k] + vals[k] * h;
    }
    let running_avg = |sigma: f64| -> f64 {
        debug_assert!(sigma > 0.0);
        let k = ((sigma / h) as usize).min(n - 1);
        let base = prefix[k] + (sigma - k as f64 * h).max(0.0) * vals[k];
        base / sigma
    };
    if q.is_infinite() {
        // sup of phi(sigma) = running_avg(sigma) sigma^(1/p); on each cell
        // phi(sigma) = sigma^(1/p - 1) (B + v sigma) with at most one interior
        // critical point sigma* = (p-1) B / v.
        let mut sup = 0.0f64;
        for k in 0..n {
            let (lo, hi) = (k as f64 * h, (k + 1) as f64 * h);
            let b = prefix[k] - lo * vals[k];
            let v = vals[k];
            let phi = |sigma: f64| sigma.powf(1.0 / p - 1.0) * (b + v * sigma);
            if hi > 0.0 {
                sup = sup.max(phi(hi));
            }
            if lo > 0.0 {
                sup = sup.max(phi(lo));
            }
            if v != 0.0 {
                let crit = (p - 1.0) * b / v;
                if crit > lo && crit < hi {
                    sup = sup.max(phi(crit));
                }
            }
        }
        return Ok(sup);
    }
    // Finite q: composite midpoint on a refinement of each rearrangement
    // cell; the integrand (avg(sigma) sigma^(1/p))^q / sigma is smooth per
    // cell away from zero, so the first cell gets extra geometric panels.
    const SUBDIV: usize = 32;
    let mut total = 0.0f64;
    let mut integrate_panel = |lo: f64, hi: f64| {
        let w = (hi - lo) / SUBDIV as f64;
        let mut acc = 0.0;
        for j in 0..SUBDIV {
            let sigma = lo + (j as f64 + 0.5) * w;
            let phi = running_avg(sigma) * sigma.powf(1.0 / p);
            acc += phi.powf(q) / sigma;
        }
        total += acc * w;
    };
    // Geometric refinement of (0, h): the integrand behaves like
    // C sigma^(q/p - 1) there.
    let mut lo = h;
    for _ in 0..48 {
        let next = lo / 2.0;
        integrate_panel(next, lo);
        lo = next;
    }
    for k in 1..n {
        integrate_panel(k as f64 * h, (k + 1) as f64 * h);
    }
    Ok(total.powf(1.0 / q))
}

/// Integral mean U(r) = r^-N int_0^r u(rho) rho^(N-1) drho of a radial
/// profile, by exact per-cell integration of rho^(N-1). The profile is
/// either given on (0, R) directly or as an even function on a symmetric
/// interval, in which case mirror cells are averaged.
pub fn integral_mean(profile: &GridFunction, n_dim: u32, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("integral mean needs r > 0, got {r}")));
    }
    let radial = radial_profile(profile)?;
    let nf = n_dim as f64;
    let h = radial.h();
    let vals = radial.values();
    let mut acc = 0.0;
    for (i, &v) in vals.iter().enumerate() {
        let lo = i as f64 * h;
        let hi = ((i + 1) as f64 * h).min(r);
        if hi <= lo {
            break;
        }
        acc += v * (hi.powf(nf) - lo.powf(nf)) / nf;
    }
    Ok(acc / r.powf(nf))
}

/// Radial profile on (0, R) of a function: identity for grids already on
/// (0, R); mirror-cell average for symmetric grids with an even cell count.
pub fn radial_profile(f: &GridFunction) -> Result<GridFunction> {
    let (left, right) = f.domain();
    if left >= 0.0 {
        return Ok(f.clone());
    }
    if !f.is_symmetric_domain() {
        return Err(Error::Domain(
            "radial profile needs a (0, R) grid or a symmetric interval".into(),
        ));
    }
    let n = f.n_cells();
    if n % 2 != 0 {
        return Err(Error::Domain(
            "radial profile of a symmetric grid needs an even cell count".into(),
        ));
    }
    let vals = f.values();
    let half: Vec<f64> = (0..n / 2)
        .map(|k| 0.5 * (vals[n / 2 + k] + vals[n / 2 - 1 - k]))
        .collect();
    GridFunction::new(0.0, right, half)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(vals: &[f64], h: f64) -> GridFunction {
        GridFunction::new(0.0, h * vals.len() as f64, vals.to_vec()).unwrap()
    }

    #[test]
    fn distribution_counts_cells() {
        let f = grid(&[3.0, 1.0, 2.0], 0.5);
        assert_eq!(distribution_function(&f, 1.5), 1.0);
        let z = GridFunction::constant(-1.0, 1.0, 10, 0.0).unwrap();
        assert_eq!(distribution_function(&z, 0.0), 0.0);
    }

    #[test]
    fn distribution_of_abs_x() {
        let f = GridFunction::sample(-1.0, 1.0, 2000, |x| x.abs()).unwrap();
        let mu = distribution_function(&f, 0.5);
        assert!((mu - 1.0).abs() <= f.h(), "mu = {mu}");
    }

    #[test]
    fn rearrangement_sorts() {
        let f = grid(&[3.0, 1.0, 2.0], 0.5);
        assert_eq!(decreasing_rearrangement(&f).values(), &[3.0, 2.0, 1.0]);
        // A non-increasing nonnegative profile is a fixed point.
        let g = grid(&[5.0, 4.0, 2.0, 1.0], 0.25);
        assert_eq!(decreasing_rearrangement(&g).values(), g.values());
    }

    #[test]
    fn rearrangement_of_abs_x_profile() {
        // f = |x| on (-1,1): f*(sigma) = 1 - sigma/2 on (0, 2).
        let f = GridFunction::sample(-1.0, 1.0, 512, |x| x.abs()).unwrap();
        let star = decreasing_rearrangement(&f);
        let h = star.h();
        for (i, &v) in star.values().iter().enumerate() {
            let sigma = (i as f64 + 0.5) * h;
            assert!(
                (v - (1.0 - sigma / 2.0)).abs() <= h,
                "sigma={sigma}: {v}"
            );
        }
    }

    #[test]
    fn schwarz_of_abs_x_is_tent() {
        // Paper example: f = |x| on (-1,1) has f#(x) = 1 - |x|.
        let f = GridFunction::sample(-1.0, 1.0, 256, |x| x.abs()).unwrap();
        let sharp = schwarz_profile(&f);
        for (i, &v) in sharp.values().iter().enumerate() {
            let x = sharp.center(i);
            assert!(
                (v - (1.0 - x.abs())).abs() < 1e-12,
                "x={x}: {v} vs {}",
                1.0 - x.abs()
            );
        }
    }

    #[test]
    fn schwarz_constant_fixed_point() {
        let f = GridFunction::constant(0.0, 2.0, 33, 0.7).unwrap();
        let sharp = schwarz_profile(&f);
        assert_eq!(sharp.domain(), (-1.0, 1.0));
        assert!(sharp.values().iter().all(|&v| v == 0.7));
    }

    #[test]
    fn schwarz_of_positive_ramp() {
        // f = x chi_{x>0} on (-1,1): f* = (1-sigma)_+, f# = (1-2|x|)_+.
        let f = GridFunction::sample(-1.0, 1.0, 400, |x| if x > 0.0 { x } else { 0.0 }).unwrap();
        let sharp = schwarz_profile(&f);
        let h = sharp.h();
        for (i, &v) in sharp.values().iter().enumerate() {
            let x = sharp.center(i);
            let want = (1.0 - 2.0 * x.abs()).max(0.0);
            assert!((v - want).abs() <= 2.0 * h, "x={x}: {v} vs {want}");
        }
    }

    #[test]
    fn concentration_examples() {
        let ones = GridFunction::constant(-1.0, 1.0, 64, 1.0).unwrap();
        let c = concentration_function(&ones, &[0.0, 0.5]);
        assert_eq!(c.masses[0], 0.0);
        assert!((c.masses[1] - 1.0).abs() < 1e-14);

        let tent = GridFunction::sample(-1.0, 1.0, 512, |x| 1.0 - x.abs()).unwrap();
        for &r in &[0.25, 0.5, 0.75, 1.0] {
            let m = concentration_function(&tent, &[r]).masses[0];
            assert!((m - (2.0 * r - r * r)).abs() < 1e-12, "r={r}: {m}");
        }
    }

    #[test]
    fn compare_reflexive_and_examples() {
        let tent = GridFunction::sample(-1.0, 1.0, 128, |x| 1.0 - x.abs()).unwrap();
        let out = concentration_compare(&tent, &tent, 0.0).unwrap();
        assert_eq!(out.order, ConcentrationOrder::Equal);
        assert_eq!(out.worst_violation, 0.0);

        // f = 2 chi_{|x|<1/2} is more concentrated than g = 1.
        let f = GridFunction::sample(-1.0, 1.0, 64, |x| if x.abs() < 0.5 { 2.0 } else { 0.0 })
            .unwrap();
        let g = GridFunction::constant(-1.0, 1.0, 64, 1.0).unwrap();
        let out = concentration_compare(&f, &g, 1e-12).unwrap();
        assert_eq!(out.order, ConcentrationOrder::GreaterOrEqual);

        // Indicator of an inner interval vs an annulus of equal mass.
        let a = GridFunction::sample(-1.0, 1.0, 64, |x| if x.abs() < 0.25 { 1.0 } else { 0.0 })
            .unwrap();
        let b = GridFunction::sample(-1.0, 1.0, 64, |x| {
            if x.abs() > 0.25 && x.abs() < 0.5 {
                1.0
            } else {
                0.0
            }
        })
        .unwrap();
        let out = concentration_compare(&b, &a, 1e-12).unwrap();
        assert_eq!(out.order, ConcentrationOrder::LessOrEqual);
    }

    #[test]
    fn compare_rejects_measure_mismatch() {
        let f = GridFunction::constant(-1.0, 1.0, 32, 1.0).unwrap();
        let g = GridFunction::constant(-2.0, 2.0, 32, 1.0).unwrap();
        assert!(matches!(
            concentration_compare(&f, &g, 0.0),
            Err(Error::MeasureMismatch { .. })
        ));
    }

    #[test]
    fn truncation_branches() {
        let tp = TruncationParams::new(1.0, 2.0).unwrap();
        assert_eq!(truncation_g(tp, 0.5), 0.0);
        assert_eq!(truncation_g(tp, 2.0), 1.0);
        assert_eq!(truncation_g(tp, 5.0), 2.0);
    }

    #[test]
    fn riesz_f_examples() {
        let tp = TruncationParams::new(1.0, 1.0).unwrap();
        assert_eq!(riesz_f(2.0, tp, 0.0, 0.0), 0.0);
        // Equal arguments kill the interaction term.
        let c = 1.3f64;
        assert!((riesz_f(3.0, tp, c, c) - 2.0 * c.powi(3)).abs() < 1e-15);
        // (p=3, t=1, h=1, u=2, v=1): 8 + 1 - 1*(1)*(1-0) = 8.
        assert_eq!(riesz_f(3.0, tp, 2.0, 1.0), 8.0);
    }

    #[test]
    fn lorentz_norm_examples() {
        // Indicator profile chi_(0,a): q = infinity gives a^(1/p).
        let n = 64;
        let a = 0.5; // aligned with the grid
        let f = GridFunction::sample(0.0, 2.0, n, |x| if x < a { 1.0 } else { 0.0 }).unwrap();
        for &p in &[1.5, 2.0, 4.0] {
            let got = lorentz_norm(&f, p, f64::INFINITY).unwrap();
            let want = a.powf(1.0 / p);
            assert!((got - want).abs() < 1e-12, "p={p}: {got} vs {want}");
        }
        // Zero function.
        let z = GridFunction::constant(-1.0, 1.0, 16, 0.0).unwrap();
        assert_eq!(lorentz_norm(&z, 2.0, 2.0).unwrap(), 0.0);
        assert_eq!(lorentz_norm(&z, 3.0, f64::INFINITY).unwrap(), 0.0);
    }

    #[test]
    fn integral_mean_examples() {
        // Constant profile: U(r) = c / N.
        for n_dim in [1u32, 2, 3] {
            let f = GridFunction::constant(0.0, 1.0, 50, 2.5).unwrap();
            let u = integral_mean(&f, n_dim, 0.8).unwrap();
            assert!((u - 2.5 / n_dim as f64).abs() < 1e-13, "N={n_dim}: {u}");
        }
        // f = 1 - rho, N = 1: U(r) = 1 - r/2 (exact for the midpoint samples).
        let f = GridFunction::sample(0.0, 1.0, 128, |x| 1.0 - x).unwrap();
        for &r in &[0.25, 0.5, 1.0] {
            let u = integral_mean(&f, 1, r).unwrap();
            assert!((u - (1.0 - r / 2.0)).abs() < 1e-12, "r={r}: {u}");
        }
        // r -> 0+ approaches f(0)/N.
        let g = GridFunction::sample(0.0, 1.0, 4096, |x| 1.0 - x * x).unwrap();
        let u = integral_mean(&g, 3, 2.0 / 4096.0).unwrap();
        assert!((u - 1.0 / 3.0).abs() < 1e-3, "{u}");
    }
}
