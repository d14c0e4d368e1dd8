//! The symmetrized linear problem and the mass-concentration comparison
//! pipeline.
//!
//! Given the solution u of the nonlinear problem with source f, the pipeline
//! rearranges u and f, builds the radial datum
//!
//! ```text
//! g(r) = H r^((N-s)(p-2)/(p-1)) [ (N-s)(p-2)/(p-1) r^-N M(r)^(1/(p-1))
//!        + N omega_N / (p-1) M(r)^((2-p)/(p-1)) f#(r) ],
//! M(r) = int_{B_r} f#,
//! H = gamma(N,s,2)/(N omega_N) P_s(B_1)^((p-2)/(p-1)) / gamma(N,s,p)^(1/(p-1)),
//! ```
//!
//! solves the linear fractional problem with datum g on the symmetrized
//! interval, and compares mass concentrations of u# and v. At p = 2 the
//! datum reduces to g = f# cellwise and H = 1/(N omega_N).

use crate::error::{Error, Result};
use crate::grid::GridFunction;
use crate::nonlocal::{
    solve_linear_on, solve_nonlinear_on, DiscreteOperator, ProblemSpec, SolveInfo, SolverConfig,
};
use crate::rearrange::{boundary_radii, concentration_function, schwarz_profile};
use crate::specialfn::{frac_perimeter, gamma_norm_const, unit_ball_volume};
use std::io::Write;

/// The constant H(N, s, p) in front of the symmetrized datum.
pub fn h_const(n: u32, s: f64, p: f64) -> Result<f64> {
    if p == 2.0 {
        // The perimeter power vanishes and the gamma ratio cancels.
        return Ok(1.0 / (n as f64 * unit_ball_volume(n)));
    }
    let g2 = gamma_norm_const(n, s, 2.0)?;
    let gp = gamma_norm_const(n, s, p)?;
    let perim = frac_perimeter(n, s, 1.0)?;
    Ok(g2 / (n as f64 * unit_ball_volume(n)) * perim.powf((p - 2.0) / (p - 1.0))
        / gp.powf(1.0 / (p - 1.0)))
}

/// Radial datum of the symmetrized problem plus the constants behind it.
#[derive(Debug, Clone)]
pub struct SymmetrizedDatum {
    pub g: GridFunction,
    pub h_const: f64,
    /// P_s(B_1) entering the constant.
    pub perimeter: f64,
    /// Cells on which the running mass of f# vanishes and the zero-mass
    /// convention g = 0 was applied.
    pub zero_mass_cells: usize,
}

/// Build g from a rearranged profile f# on the symmetric interval.
///
/// Cell values are the formula at cell centers, except that for p > 2 the
/// innermost cells carry the exact average of the leading central power
/// C r^-alpha, alpha = s(p-2)/(p-1), preserving the L1 mass of the
/// integrable singularity at the origin. Where the running mass vanishes,
/// both bracket terms are zero (f# vanishes there too) and g = 0.
pub fn build_g(f_sharp: &GridFunction, n: u32, s: f64, p: f64) -> Result<SymmetrizedDatum> {
    if !f_sharp.is_symmetric_domain() {
        return Err(Error::Domain(
            "build_g expects a rearranged profile on a symmetric interval".into(),
        ));
    }
    if f_sharp.values().iter().any(|&v| v < 0.0) {
        return Err(Error::Domain("build_g expects a nonnegative profile".into()));
    }
    let perimeter = frac_perimeter(n, s, 1.0)?;
    let hc = h_const(n, s, p)?;
    if p == 2.0 {
        return Ok(SymmetrizedDatum {
            g: f_sharp.clone(),
            h_const: hc,
            perimeter,
            zero_mass_cells: 0,
        });
    }
    let nf = n as f64;
    let omega = unit_ball_volume(n);
    let ncells = f_sharp.n_cells();
    let h = f_sharp.h();
    let e1 = (nf - s) * (p - 2.0) / (p - 1.0);
    let alpha = s * (p - 2.0) / (p - 1.0);
    let f0 = f_sharp.values().iter().cloned().fold(0.0f64, f64::max);
    let radii: Vec<f64> = (0..ncells).map(|i| f_sharp.center(i).abs()).collect();
    let masses = concentration_function(f_sharp, &radii).masses;
    let mut zero_mass_cells = 0usize;
    let mut values = vec![0.0f64; ncells];
    for i in 0..ncells {
        let r = radii[i];
        let mass = masses[i];
        let (lo, hi) = f_sharp.cell_bounds(i);
        let touches_origin = lo.abs() < 0.5 * h || hi.abs() < 0.5 * h || (lo < 0.0 && hi > 0.0);
        if touches_origin && f0 > 0.0 {
            // Exact cell average of the leading power C r^-alpha.
            let c = hc * (omega * f0).powf(1.0 / (p - 1.0)) * ((nf - s) * (p - 2.0) + nf)
                / (p - 1.0);
            let width = hi - lo;
            let avg = if lo < 0.0 && hi > 0.0 {
                // Straddling cell: average |x|^-alpha over (lo, hi).
                (hi.powf(1.0 - alpha) + (-lo).powf(1.0 - alpha)) / ((1.0 - alpha) * width)
            } else {
                let a = lo.abs().min(hi.abs());
                let b = lo.abs().max(hi.abs());
                (b.powf(1.0 - alpha) - a.powf(1.0 - alpha)) / ((1.0 - alpha) * width)
            };
            values[i] = c * avg;
            continue;
        }
        if mass <= 0.0 {
            zero_mass_cells += 1;
            continue;
        }
        let term1 = e1 * r.powf(-nf) * mass.powf(1.0 / (p - 1.0));
        let term2 = nf * omega / (p - 1.0) * mass.powf((2.0 - p) / (p - 1.0)) * f_sharp.values()[i];
        values[i] = hc * r.powf(e1) * (term1 + term2);
    }
    let (l, rgt) = f_sharp.domain();
    Ok(SymmetrizedDatum {
        g: GridFunction::new(l, rgt, values)?,
        h_const: hc,
        perimeter,
        zero_mass_cells,
    })
}

/// |t|^q with fast paths for the exponents in use.
#[inline]
fn abs_power(t: f64, q: f64) -> f64 {
    if q == 1.0 {
        t.abs()
    } else if q == 2.0 {
        t * t
    } else if q == 3.0 {
        let a = t.abs();
        a * a * a
    } else {
        t.abs().powf(q)
    }
}

/// Per-radius slack of the proven level-set inequality: for each radius,
///
/// ```text
/// slack(r) = int_{B_r} f#  -  gamma int_{B_r} int_{B_r^c}
///            |u#(x) - u#(y)|^(p-1) / |x-y|^(1+sp) dy dx,
/// ```
///
/// with the double integral discretized by the operator's own weights
/// (first-neighbor corrected, exterior tail in closed form). Radii should be
/// cell edges of the symmetrized grid so cells split cleanly.
pub fn key_inequality_check(
    u: &GridFunction,
    f: &GridFunction,
    spec: &ProblemSpec,
    radii: &[f64],
) -> Result<Vec<f64>> {
    let u_sharp = schwarz_profile(u);
    let f_sharp = schwarz_profile(f);
    let gamma = gamma_norm_const(spec.n_dim, spec.s, spec.p)?;
    let (l, r) = u_sharp.domain();
    let op = DiscreteOperator::assemble(l, r, u_sharp.n_cells(), spec.s, spec.p)?;
    let h = op.h();
    let pm1 = spec.p - 1.0;
    let uv = u_sharp.values();
    let n = uv.len();
    let rhs = concentration_function(&f_sharp, radii).masses;
    let mut slacks = Vec::with_capacity(radii.len());
    for (k, &rad) in radii.iter().enumerate() {
        let mut lhs = 0.0f64;
        for i in 0..n {
            let (clo, chi) = u_sharp.cell_bounds(i);
            let inside = clo >= -rad - 1e-14 && chi <= rad + 1e-14;
            if !inside {
                continue;
            }
            let mut acc = op.tail(i) * abs_power(uv[i], pm1);
            for j in 0..n {
                if j == i {
                    continue;
                }
                // With edge radii a cell is in B_r^c iff it is not inside.
                let (dlo, dhi) = u_sharp.cell_bounds(j);
                let j_inside = dlo >= -rad - 1e-14 && dhi <= rad + 1e-14;
                if j_inside {
                    continue;
                }
                acc += op.weight(i.abs_diff(j)) * abs_power(uv[i] - uv[j], pm1);
            }
            lhs += acc;
        }
        lhs *= gamma * h;
        slacks.push(rhs[k] - lhs);
    }
    Ok(slacks)
}

/// Solver traces of the two solves behind a comparison.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SolverDiagnostics {
    pub nonlinear: Option<SolveInfo>,
    pub linear: Option<SolveInfo>,
}

/// Per-radius mass concentrations of the rearranged solution and of the
/// symmetrized solution, with the worst signed violation of u# < v.
#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub radii: Vec<f64>,
    pub conc_u_sharp: Vec<f64>,
    pub conc_v: Vec<f64>,
    /// max over radii of conc_u_sharp - conc_v; the comparison holds when
    /// this does not exceed `tolerance_used`.
    pub worst_violation: f64,
    /// Discretization allowance h^min(1,2s) ||f||_1^(1/(p-1)) (zero for
    /// report-only comparisons).
    pub tolerance_used: f64,
    pub diagnostics: SolverDiagnostics,
}

impl ComparisonReport {
    fn from_curves(
        radii: Vec<f64>,
        conc_u_sharp: Vec<f64>,
        conc_v: Vec<f64>,
        tolerance_used: f64,
        diagnostics: SolverDiagnostics,
    ) -> Self {
        let worst_violation = conc_u_sharp
            .iter()
            .zip(&conc_v)
            .map(|(a, b)| a - b)
            .fold(f64::NEG_INFINITY, f64::max);
        Self {
            radii,
            conc_u_sharp,
            conc_v,
            worst_violation,
            tolerance_used,
            diagnostics,
        }
    }

    pub fn passes(&self) -> bool {
        self.worst_violation <= self.tolerance_used
    }

    /// Pointwise slack conc_v - conc_u_sharp per radius.
    pub fn slacks(&self) -> Vec<f64> {
        self.conc_v
            .iter()
            .zip(&self.conc_u_sharp)
            .map(|(v, u)| v - u)
            .collect()
    }

    /// CSV with columns `r,conc_u_sharp,conc_v,slack` and a trailing summary
    /// line with the worst violation and the tolerance.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "r,conc_u_sharp,conc_v,slack")?;
        for i in 0..self.radii.len() {
            writeln!(
                w,
                "{:.16e},{:.16e},{:.16e},{:.16e}",
                self.radii[i],
                self.conc_u_sharp[i],
                self.conc_v[i],
                self.conc_v[i] - self.conc_u_sharp[i]
            )?;
        }
        writeln!(
            w,
            "# worst_violation={:.16e} tolerance={:.16e}",
            self.worst_violation, self.tolerance_used
        )?;
        Ok(())
    }

    pub fn write_csv_file<P: AsRef<std::path::Path>>(&self, path: P) -> Result<()> {
        let f = std::fs::File::create(path)?;
        self.write_csv(std::io::BufWriter::new(f))
    }
}

/// Full theorem-verification pipeline:
/// solve the nonlinear problem, rearrange, build g, solve the linear radial
/// problem, and compare mass concentrations on the cell-edge radii.
pub fn verify_theorem(
    spec: &ProblemSpec,
    cfg: &SolverConfig,
    n_cells: usize,
) -> Result<ComparisonReport> {
    let (u, v, _g, diagnostics) = run_pipeline(spec, cfg, n_cells, false)?;
    let u_sharp = schwarz_profile(&u);
    let radii = boundary_radii(&u_sharp);
    let conc_u = concentration_function(&u_sharp, &radii).masses;
    let conc_v = concentration_function(&v, &radii).masses;
    let tol = theorem_tolerance(spec, n_cells);
    Ok(ComparisonReport::from_curves(
        radii,
        conc_u,
        conc_v,
        tol,
        diagnostics,
    ))
}

/// Default pass tolerance h^min(1, 2s) ||f||_1^(1/(p-1)).
pub fn theorem_tolerance(spec: &ProblemSpec, n_cells: usize) -> f64 {
    let h = spec.f.measure() / n_cells as f64;
    h.powf(1.0f64.min(2.0 * spec.s)) * spec.f.l1_norm().powf(1.0 / (spec.p - 1.0))
}

/// Shared solve + symmetrize stages. Returns (u, v, datum, diagnostics).
/// `flip_g_sign` is a fault-injection hook used to prove the comparison
/// check actually bites.
pub fn run_pipeline(
    spec: &ProblemSpec,
    cfg: &SolverConfig,
    n_cells: usize,
    flip_g_sign: bool,
) -> Result<(GridFunction, GridFunction, SymmetrizedDatum, SolverDiagnostics)> {
    let f = if spec.f.n_cells() == n_cells {
        spec.f.clone()
    } else {
        spec.f.resample(n_cells)?
    };
    let (left, right) = f.domain();
    let mut diagnostics = SolverDiagnostics::default();

    // Stage 1: the solution u of the problem with source f.
    let gamma_p = gamma_norm_const(spec.n_dim, spec.s, spec.p)?;
    let op = DiscreteOperator::assemble(left, right, n_cells, spec.s, spec.p)?;
    let u = if spec.p == 2.0 {
        let gamma2 = gamma_norm_const(spec.n_dim, spec.s, 2.0)?;
        let (u, info) = solve_linear_on(&op, gamma2, &f)?;
        diagnostics.linear = Some(info);
        u
    } else {
        let (u, info) = solve_nonlinear_on(&op, gamma_p, &f, cfg)?;
        diagnostics.nonlinear = Some(info);
        u
    };

    // Stage 2: rearrangements and the symmetrized datum.
    let f_sharp = schwarz_profile(&f);
    let mut datum = build_g(&f_sharp, spec.n_dim, spec.s, spec.p)?;
    if flip_g_sign {
        datum.g = datum.g.map(|v| -v);
    }

    // Stage 3: the linear radial problem on the symmetrized interval.
    let gamma2 = gamma_norm_const(spec.n_dim, spec.s, 2.0)?;
    let (sl, sr) = datum.g.domain();
    let op2 = DiscreteOperator::assemble(sl, sr, n_cells, spec.s, 2.0)?;
    let (v, vinfo) = solve_linear_on(&op2, gamma2, &datum.g)?;
    diagnostics.linear = Some(vinfo);
    Ok((u, v, datum, diagnostics))
}

/// Mass-concentration comparison of the (p-1)-th powers of u# and of the
/// nonlinear radial solution; recorded as evidence, never asserted.
pub fn power_comparison(
    u: &GridFunction,
    v_nl: &GridFunction,
    p: f64,
) -> Result<ComparisonReport> {
    let u_sharp = schwarz_profile(u);
    let pm1 = p - 1.0;
    let up = u_sharp.map(|t| abs_power(t, pm1));
    let vp = v_nl.map(|t| abs_power(t, pm1));
    let hmax = up.h().max(vp.h());
    if (up.measure() - vp.measure()).abs() > hmax {
        return Err(Error::MeasureMismatch {
            left: up.measure(),
            right: vp.measure(),
        });
    }
    let mut radii = boundary_radii(&up);
    radii.extend(boundary_radii(&vp));
    radii.sort_by(|a, b| a.partial_cmp(b).unwrap());
    radii.dedup();
    let conc_u = concentration_function(&up, &radii).masses;
    let conc_v = concentration_function(&vp, &radii).masses;
    Ok(ComparisonReport::from_curves(
        radii,
        conc_u,
        conc_v,
        0.0,
        SolverDiagnostics::default(),
    ))
}
