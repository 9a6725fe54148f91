use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

use super::matrix::{anticommutator as ac, Matrix};
use super::FockRep;

/// Least-squares estimate of `c₁ … c₁₁` and the Casimir value.
#[derive(Clone, Debug, PartialEq)]
pub struct CasimirFit {
    pub c: [f64; 11],
    pub casimir_value: f64,
    /// `‖Mx − r‖₂ / ‖r‖₂` of the fitted system.
    pub relative_residual: f64,
}

const UNKNOWNS: usize = 12;

/// Fits `C² + Σ cᵢ Tᵢ = k·1` entrywise on the matrices of `rep`. The
/// system has `dim²` equations in 12 unknowns and needs `dim ≥ 7`.
pub fn fit_casimir_coefficients(rep: &FockRep) -> Result<CasimirFit> {
    let (a, b, c) = (&rep.mat_a, &rep.mat_b, &rep.mat_c);
    let n = rep.dim();
    let b2 = b.pow(2);
    let terms: [Matrix; UNKNOWNS] = [
        ac(&a.pow(3), b),
        ac(&a.pow(2), b),
        ac(a, &b2),
        ac(a, b),
        b2.clone(),
        b.clone(),
        a.pow(5),
        a.pow(4),
        a.pow(3),
        a.pow(2),
        a.clone(),
        Matrix::identity(n).scale(-1.0),
    ];
    let rhs_m = c.pow(2).scale(-1.0);
    let rows = n * n;
    let mut m: Vec<Vec<f64>> = (0..rows).map(|r| terms.iter().map(|t| t.data()[r]).collect()).collect();
    let mut r: Vec<f64> = rhs_m.data().to_vec();
    let rhs_norm = libm::sqrt(r.iter().map(|v| v * v).sum());

    let mut scale = [1.0; UNKNOWNS];
    for (j, s) in scale.iter_mut().enumerate() {
        let norm = libm::sqrt(m.iter().map(|row| row[j] * row[j]).sum());
        if norm > 0.0 {
            *s = norm;
            for row in m.iter_mut() {
                row[j] /= norm;
            }
        }
    }
    let orig = m.clone();
    let rank = householder(&mut m, &mut r);
    if rank < UNKNOWNS {
        return Err(Error::RankDeficient { rank, needed: UNKNOWNS });
    }
    let mut x = vec![0.0; UNKNOWNS];
    for k in (0..UNKNOWNS).rev() {
        let s: f64 = (k + 1..UNKNOWNS).map(|j| m[k][j] * x[j]).sum();
        x[k] = (r[k] - s) / m[k][k];
    }
    let res: f64 = orig
        .iter()
        .zip(rhs_m.data())
        .map(|(row, t)| {
            let v: f64 = row.iter().zip(&x).map(|(a, b)| a * b).sum::<f64>() - t;
            v * v
        })
        .sum();
    for (xi, s) in x.iter_mut().zip(&scale) {
        *xi /= s;
    }
    Ok(CasimirFit {
        c: core::array::from_fn(|i| x[i]),
        casimir_value: x[11],
        relative_residual: libm::sqrt(res) / rhs_norm.max(f64::MIN_POSITIVE),
    })
}

/// In-place Householder QR of the tall matrix `m`, applied to `r` too.
/// Returns the numerical rank.
fn householder(m: &mut [Vec<f64>], r: &mut [f64]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |v| v.len());
    let mut diag_max: f64 = 0.0;
    let mut diags = Vec::with_capacity(cols);
    for k in 0..cols.min(rows) {
        let norm = libm::sqrt((k..rows).map(|i| m[i][k] * m[i][k]).sum());
        if norm == 0.0 {
            diags.push(0.0);
            continue;
        }
        let alpha = if m[k][k] > 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = (k..rows).map(|i| m[i][k]).collect();
        v[0] -= alpha;
        let vn: f64 = v.iter().map(|x| x * x).sum();
        if vn > 0.0 {
            for j in k..cols {
                let d: f64 = (k..rows).map(|i| v[i - k] * m[i][j]).sum::<f64>() * 2.0 / vn;
                for i in k..rows {
                    m[i][j] -= d * v[i - k];
                }
            }
            let d: f64 = (k..rows).map(|i| v[i - k] * r[i]).sum::<f64>() * 2.0 / vn;
            for i in k..rows {
                r[i] -= d * v[i - k];
            }
        }
        diag_max = diag_max.max(libm::fabs(m[k][k]));
        diags.push(libm::fabs(m[k][k]));
    }
    diags.iter().filter(|d| **d > 1e-10 * diag_max).count()
}
