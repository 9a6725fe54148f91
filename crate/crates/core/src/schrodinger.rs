//! Finite-difference spectra of the one-dimensional parts of the example
//! Hamiltonian, `H = H_x + H_y`, used as a numerical cross-check of the
//! algebraic levels.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ratcore::{to_f64, Rational};
use crate::spectra::RepresentationCandidate;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PotentialKind {
    /// `−d²/dy² + y²/4`.
    HarmonicY,
    /// `−d²/dx² + x²/4 + l(l+1)/x² + 4/(1+2l+x²) − 8(1+2l)/(1+2l+x²)² + c`.
    ExtendedOscillatorX,
}

/// Offset `c` that puts the lowest `H_x` level at `l + 1`.
pub const DEFAULT_X_OFFSET: f64 = -0.5;

#[derive(Clone, Debug, PartialEq)]
pub struct PotentialSpec {
    pub kind: PotentialKind,
    pub l: Rational,
    /// Dirichlet ends.
    pub domain: (f64, f64),
    pub offset: f64,
}

impl PotentialSpec {
    pub fn harmonic_y() -> Self {
        PotentialSpec { kind: PotentialKind::HarmonicY, l: Rational::from_integer(0.into()), domain: (-25.0, 25.0), offset: 0.0 }
    }

    pub fn extended_x(l: Rational) -> Self {
        PotentialSpec { kind: PotentialKind::ExtendedOscillatorX, l, domain: (1e-3, 25.0), offset: DEFAULT_X_OFFSET }
    }

    pub fn with_domain(mut self, lo: f64, hi: f64) -> Self {
        self.domain = (lo, hi);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.domain;
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::Invalid(format!("bad domain ({}, {})", lo, hi)));
        }
        if self.kind == PotentialKind::ExtendedOscillatorX {
            if to_f64(&self.l) < 0.0 {
                return Err(Error::Invalid(format!("l = {} must be nonnegative", self.l)));
            }
            if lo <= 0.0 {
                return Err(Error::Invalid(String::from("x domain must lie in (0, inf)")));
            }
        }
        Ok(())
    }

    pub fn potential(&self, q: f64) -> f64 {
        match self.kind {
            PotentialKind::HarmonicY => q * q / 4.0 + self.offset,
            PotentialKind::ExtendedOscillatorX => {
                let l = to_f64(&self.l);
                let g = 1.0 + 2.0 * l + q * q;
                q * q / 4.0 + l * (l + 1.0) / (q * q) + 4.0 / g - 8.0 * (1.0 + 2.0 * l) / (g * g) + self.offset
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Eigenvalue {
    /// Richardson-extrapolated value.
    pub value: f64,
    pub error_estimate: f64,
}

struct Tridiagonal {
    diag: Vec<f64>,
    off: f64,
}

fn discretize(pot: &PotentialSpec, n: usize) -> Tridiagonal {
    let (a, b) = pot.domain;
    let h = (b - a) / (n + 1) as f64;
    let k = 1.0 / (h * h);
    let diag = (1..=n).map(|i| 2.0 * k + pot.potential(a + i as f64 * h)).collect();
    Tridiagonal { diag, off: -k }
}

impl Tridiagonal {
    /// Number of eigenvalues below `x`.
    fn count_below(&self, x: f64) -> usize {
        let e2 = self.off * self.off;
        let mut q = 1.0;
        let mut count = 0;
        for (i, d) in self.diag.iter().enumerate() {
            q = d - x - if i == 0 { 0.0 } else { e2 / q };
            if q == 0.0 {
                q = -f64::EPSILON * (1.0 + libm::fabs(*d));
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn bounds(&self) -> (f64, f64) {
        let r = 2.0 * libm::fabs(self.off);
        let lo = self.diag.iter().fold(f64::INFINITY, |m, d| m.min(d - r));
        let hi = self.diag.iter().fold(f64::NEG_INFINITY, |m, d| m.max(d + r));
        (lo, hi)
    }

    /// The `k`-th smallest eigenvalue (0-based) by bisection.
    fn eigenvalue(&self, k: usize) -> f64 {
        let (mut lo, mut hi) = self.bounds();
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Eigenvector for an eigenvalue estimate by inverse iteration.
    fn eigenvector(&self, lambda: f64) -> Vec<f64> {
        let n = self.diag.len();
        let shift = lambda + 1e-10 * (1.0 + libm::fabs(lambda));
        let mut x = vec![1.0; n];
        for _ in 0..4 {
            x = self.solve_shifted(shift, &x);
            let m = x.iter().fold(0.0f64, |m, v| m.max(libm::fabs(*v)));
            if m > 0.0 {
                x.iter_mut().for_each(|v| *v /= m);
            }
        }
        x
    }

    /// Solves `(T − σ) x = r` with the Thomas algorithm.
    fn solve_shifted(&self, sigma: f64, r: &[f64]) -> Vec<f64> {
        let n = self.diag.len();
        let e = self.off;
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        let mut piv = self.diag[0] - sigma;
        if piv == 0.0 {
            piv = f64::EPSILON;
        }
        c[0] = e / piv;
        d[0] = r[0] / piv;
        for i in 1..n {
            let mut m = self.diag[i] - sigma - e * c[i - 1];
            if m == 0.0 {
                m = f64::EPSILON;
            }
            c[i] = e / m;
            d[i] = (r[i] - e * d[i - 1]) / m;
        }
        let mut x = vec![0.0; n];
        x[n - 1] = d[n - 1];
        for i in (0..n - 1).rev() {
            x[i] = d[i] - c[i] * x[i + 1];
        }
        x
    }
}

const DECAY_RATIO: f64 = 1e-6;

/// Lowest `n_levels` eigenvalues of `−d²/dq² + V(q)` with Dirichlet ends,
/// on `n_points` and `2·n_points + 1` interior points, Richardson
/// extrapolated. Fails if an eigenfunction has not decayed at the outer
/// boundary.
pub fn eigenvalues_1d(pot: &PotentialSpec, n_points: usize, n_levels: usize) -> Result<Vec<Eigenvalue>> {
    pot.validate()?;
    if n_points < 500 {
        return Err(Error::Invalid(format!("n_points = {} is below 500", n_points)));
    }
    if n_levels > n_points {
        return Err(Error::Invalid(format!("{} levels requested from {} points", n_levels, n_points)));
    }
    let coarse = discretize(pot, n_points);
    let fine = discretize(pot, 2 * n_points + 1);
    let mut out = Vec::with_capacity(n_levels);
    for k in 0..n_levels {
        let lc = coarse.eigenvalue(k);
        let lf = fine.eigenvalue(k);
        let v = fine.eigenvector(lf);
        let peak = v.iter().fold(0.0f64, |m, x| m.max(libm::fabs(*x)));
        let right = libm::fabs(v[v.len() - 1]);
        let ratio = match pot.kind {
            PotentialKind::HarmonicY => right.max(libm::fabs(v[0])) / peak,
            PotentialKind::ExtendedOscillatorX => right / peak,
        };
        if !(ratio < DECAY_RATIO) {
            return Err(Error::BoundaryDecay { level: k, ratio });
        }
        out.push(Eigenvalue { value: (4.0 * lf - lc) / 3.0, error_estimate: libm::fabs(lf - lc) / 3.0 });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Level {
    pub energy: f64,
    pub multiplicity: usize,
    /// Largest distance of a member from `energy`.
    pub spread: f64,
    /// Largest summed discretization error estimate of a member.
    pub error_estimate: f64,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct SpectrumTable {
    pub levels: Vec<Level>,
}

impl SpectrumTable {
    pub fn nearest(&self, e: f64) -> Option<&Level> {
        self.levels
            .iter()
            .min_by(|a, b| libm::fabs(a.energy - e).total_cmp(&libm::fabs(b.energy - e)))
    }
}

/// All sums `x + y ≤ e_max`, merged into levels when consecutive sums are
/// within `cluster_tol`.
pub fn combined_spectrum(x_levels: &[f64], y_levels: &[f64], e_max: f64, cluster_tol: f64) -> SpectrumTable {
    let lift = |v: &[f64]| v.iter().map(|&value| Eigenvalue { value, error_estimate: 0.0 }).collect::<Vec<_>>();
    combined_spectrum_estimated(&lift(x_levels), &lift(y_levels), e_max, cluster_tol)
}

/// [`combined_spectrum`] carrying the error estimates of the 1D levels.
pub fn combined_spectrum_estimated(x: &[Eigenvalue], y: &[Eigenvalue], e_max: f64, cluster_tol: f64) -> SpectrumTable {
    let mut sums: Vec<(f64, f64)> = x
        .iter()
        .flat_map(|a| y.iter().map(move |b| (a.value + b.value, a.error_estimate + b.error_estimate)))
        .filter(|s| s.0 <= e_max)
        .collect();
    sums.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut groups: Vec<Vec<(f64, f64)>> = Vec::new();
    for s in sums {
        match groups.last_mut() {
            Some(g) if s.0 - g[g.len() - 1].0 <= cluster_tol => g.push(s),
            _ => groups.push(vec![s]),
        }
    }
    let levels = groups
        .into_iter()
        .map(|g| {
            let energy = g.iter().map(|s| s.0).sum::<f64>() / g.len() as f64;
            let spread = g.iter().fold(0.0f64, |m, v| m.max(libm::fabs(v.0 - energy)));
            let error_estimate = g.iter().fold(0.0f64, |m, v| m.max(v.1));
            Level { energy, multiplicity: g.len(), spread, error_estimate }
        })
        .collect();
    SpectrumTable { levels }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonRow {
    pub p: usize,
    pub algebraic_energy: f64,
    pub expected_multiplicity: usize,
    /// Nearest numerical level within `tol`, if any.
    pub numerical: Option<Level>,
    /// A level within `tol` with multiplicity at least `p + 1`.
    pub pass: bool,
    /// The matched level is more degenerate than one representation
    /// accounts for.
    pub excess: bool,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Comparison {
    pub rows: Vec<ComparisonRow>,
}

impl Comparison {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

/// Matches each candidate energy against the numerical levels: a row passes
/// when a level lies within `tol` with multiplicity at least `p + 1`.
pub fn compare_with_algebraic(table: &SpectrumTable, candidates: &[RepresentationCandidate], tol: f64) -> Comparison {
    let rows = candidates
        .iter()
        .map(|c| {
            let e = c.energy.approx();
            let numerical = table.nearest(e).filter(|lv| libm::fabs(lv.energy - e) <= tol).cloned();
            let pass = numerical.as_ref().is_some_and(|lv| lv.multiplicity >= c.p + 1);
            let excess = numerical.as_ref().is_some_and(|lv| lv.multiplicity > c.p + 1);
            ComparisonRow { p: c.p, algebraic_energy: e, expected_multiplicity: c.p + 1, numerical, pass, excess }
        })
        .collect();
    Comparison { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clustering() {
        let t = combined_spectrum(&[1.0], &[2.0], 10.0, 1e-9);
        assert_eq!(t.levels, vec![Level { energy: 3.0, multiplicity: 1, spread: 0.0, error_estimate: 0.0 }]);
        let t = combined_spectrum(&[0.0, 2.0], &[0.0, 1.0, 2.0], 10.0, 1e-9);
        let m: Vec<usize> = t.levels.iter().map(|l| l.multiplicity).collect();
        assert_eq!(m, vec![1, 1, 2, 1, 1]);
        assert_eq!(t.levels[2].energy, 2.0);
    }

    #[test]
    fn sturm_count_on_diagonal() {
        let t = Tridiagonal { diag: vec![1.0, 2.0, 3.0], off: 0.0 };
        assert_eq!(t.count_below(2.5), 2);
        assert!((t.eigenvalue(1) - 2.0).abs() < 1e-12);
    }
}
