use fracsym_core::*;
use std::time::Instant;

fn main() {
    // Nonlinear solver behavior for p=3, f=|x|, various tolerances.
    for (n, tol) in [(128usize, 1e-8), (256, 1e-8), (256, 1e-10), (512, 1e-8)] {
        let f = GridFunction::sample(-1.0, 1.0, n, |x| x.abs()).unwrap();
        let spec = ProblemSpec::new(1, 0.5, 3.0, f, 2.0).unwrap();
        let cfg = SolverConfig { grad_tol: tol, ..Default::default() };
        let t0 = Instant::now();
        match solve_nonlinear(&spec, &cfg, n) {
            Ok((u, info)) => println!(
                "n={n:4} tol={tol:.0e}: iters={:6} res={:.2e} sup_u={:.6} min_u={:+.2e}  [{:.2?}]",
                info.iterations, info.residual, u.sup_norm(),
                u.values().iter().cloned().fold(f64::INFINITY, f64::min), t0.elapsed()
            ),
            Err(e) => println!("n={n} tol={tol:.0e}: FAILED {e}  [{:.2?}]", t0.elapsed()),
        }
    }
    // Scaling law: u(8f) vs 2*sqrt2*u(f), p=3.
    let n = 256;
    let f = GridFunction::sample(-1.0, 1.0, n, |x| x.abs()).unwrap();
    let f8 = f.map(|v| 8.0 * v);
    let cfg = SolverConfig { grad_tol: 1e-11, max_iters: 200_000, ..Default::default() };
    let s1 = ProblemSpec::new(1, 0.5, 3.0, f, 2.0).unwrap();
    let s8 = ProblemSpec::new(1, 0.5, 3.0, f8, 2.0).unwrap();
    let (u1, i1) = solve_nonlinear(&s1, &cfg, n).unwrap();
    let (u8v, i8) = solve_nonlinear(&s8, &cfg, n).unwrap();
    let factor = 8f64.powf(0.5);
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let want = factor * u1.values()[i];
        worst = worst.max((u8v.values()[i] - want).abs() / (1.0 + want.abs()));
    }
    println!("scaling: iters {} / {}, worst rel dev = {:.2e}", i1.iterations, i8.iterations, worst);
}
