//! Finite-dimensional representations: the constraints `Φ(0) = Φ(p+1) = 0`,
//! explicit matrices, and numerical verification of the algebra.

mod fit;
mod matrix;
mod verify;

use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::algebra::{AlgebraSpec, Mode, H};
use crate::error::{Error, Result};
use crate::oscillator::{oracle_weights, phi_closed, realize, rho2_value, CaseKind, Realization, StructureFunction, N, U};
use crate::ratcore::{
    count_roots_open, int, real_roots, resultant, root_bound, to_f64, MultiPoly, PolyOverPoly, Rational, RealRoot,
    UniPoly,
};

pub use fit::{fit_casimir_coefficients, CasimirFit};
pub use matrix::{anticommutator, commutator, Matrix};
pub use verify::{verify_algebra, verify_identities, Residual, VerificationReport};

/// A solution `(E, u)` of `Φ(0) = Φ(p+1) = 0`.
#[derive(Clone, Debug)]
pub struct RepresentationCandidate {
    pub p: usize,
    pub energy: RealRoot,
    pub u: RealRoot,
    /// `Φ(x) > 0` at `x = 1..p` (and `ρ² > 0` on the lattice in Case 2).
    pub lattice_positive: bool,
    /// No zero of `Φ` on the open interval `(0, p+1)` and `Φ > 0` there.
    pub interval_positive: bool,
}

impl RepresentationCandidate {
    pub fn dim(&self) -> usize {
        self.p + 1
    }

    /// Both coordinates known exactly.
    pub fn is_exact(&self) -> bool {
        self.energy.exact.is_some() && self.u.exact.is_some()
    }
}

/// A common factor of `Φ(0)` and `Φ(p+1)`: every point on its zero set
/// solves the constraints.
#[derive(Clone, Debug)]
pub struct DegenerateFamily {
    pub p: usize,
    /// Polynomial in `u` and `H`.
    pub factor: MultiPoly,
}

#[derive(Clone, Debug, Default)]
pub struct ConstraintSolution {
    pub candidates: Vec<RepresentationCandidate>,
    pub families: Vec<DegenerateFamily>,
}

pub fn default_window() -> (Rational, Rational) {
    (int(-1000), int(1000))
}

fn check_vars(p: &MultiPoly) -> Result<()> {
    match p.used_vars().into_iter().find(|v| v != U && v != H && v != N) {
        Some(v) => Err(Error::NotNumeric(v)),
        None => Ok(()),
    }
}

/// `|p(v)| / Σ |term(v)|`, used to accept approximate roots.
fn relative_value(p: &MultiPoly, values: &[(&str, f64)]) -> f64 {
    let vars = p.vars();
    let (mut val, mut scale) = (0.0, 0.0);
    for (e, c) in p.terms() {
        let mut t = to_f64(c);
        for (j, &k) in e.iter().enumerate() {
            if k > 0 {
                let x = values.iter().find(|(n, _)| *n == vars[j]).map_or(0.0, |v| v.1);
                t *= libm::pow(x, k as f64);
            }
        }
        val += t;
        scale += libm::fabs(t);
    }
    if scale == 0.0 {
        0.0
    } else {
        libm::fabs(val) / scale
    }
}

fn positivity(sf: &StructureFunction, spec: &AlgebraSpec, p: usize, e: &Rational, u: &Rational) -> Result<(bool, bool)> {
    let vals = [(U, u.clone()), (H, e.clone())];
    let mut lattice = true;
    for x in 1..=p as i64 {
        if !sf.eval(x, &vals)?.is_positive() {
            lattice = false;
        }
        if sf.case == CaseKind::Case2 {
            let spec_e = spec.at_energy_value(e);
            match rho2_value(&spec_e, u, x - 1) {
                Ok(r) if r.is_positive() => {}
                _ => lattice = false,
            }
        }
    }
    let interval = if p == 0 {
        lattice
    } else {
        let phi_x = sf.at(&vals).to_unipoly(N)?;
        let (a, b) = (Rational::zero(), int(p as i64 + 1));
        phi_x.is_zero() || (count_roots_open(&phi_x, &a, &b)? == 0 && phi_x.eval(&(b / int(2))).is_positive())
    };
    Ok((lattice, interval && !sf.at(&vals).is_zero()))
}

/// Solves `Φ(0) = Φ(p+1) = 0` for `(E, u)` with `K = K(H)`, for every
/// `p ≤ p_max`, keeping energies inside `window`.
pub fn solve_constraints(
    spec: &AlgebraSpec,
    k_of_h: &MultiPoly,
    p_max: usize,
    window: (&Rational, &Rational),
) -> Result<ConstraintSolution> {
    if spec.mode != Mode::Quantum {
        return Err(Error::WrongMode("quantum"));
    }
    let sf = phi_closed(spec, k_of_h, &MultiPoly::var(U))?;
    check_vars(&sf.phi)?;
    let mut out = ConstraintSolution::default();
    let f0m = sf.phi.subs(&[(N, MultiPoly::zero())]);
    let f0 = PolyOverPoly::from_multi(&f0m, U, H)?;
    for p in 0..=p_max {
        let fpm = sf.phi.subs(&[(N, MultiPoly::from_int(p as i64 + 1))]);
        let fp = PolyOverPoly::from_multi(&fpm, U, H)?;
        let g = f0.gcd(&fp);
        let nontrivial = g.degree().is_some_and(|d| d > 0) || g.coeffs().first().is_some_and(|c| c.degree().is_some_and(|d| d > 0));
        let (c0, cp) = if nontrivial {
            out.families.push(DegenerateFamily { p, factor: g.to_multi(U, H) });
            (f0.div_exact(&g).ok_or(Error::InexactDivision)?, fp.div_exact(&g).ok_or(Error::InexactDivision)?)
        } else {
            (f0.clone(), fp.clone())
        };
        if c0.is_zero() || cp.is_zero() {
            continue;
        }
        let res = resultant(&c0, &cp)?;
        if res.is_zero() || res.degree() == Some(0) {
            continue;
        }
        for e in real_roots(&res, window.0, window.1)? {
            for u in u_roots_at(&c0, &cp, &e)? {
                let (ev, uv) = (e.value(), u.value());
                let ok = if e.exact.is_some() && u.exact.is_some() {
                    let v = [(U, uv.clone()), (H, ev.clone())];
                    f0m.eval(&v)?.is_zero() && fpm.eval(&v)?.is_zero()
                } else {
                    let v = [(U, to_f64(&uv)), (H, to_f64(&ev))];
                    relative_value(&f0m, &v) < 1e-6 && relative_value(&fpm, &v) < 1e-6
                };
                if !ok {
                    continue;
                }
                let (lattice_positive, interval_positive) = positivity(&sf, spec, p, &ev, &uv)?;
                let dup = out.candidates.iter().any(|c| c.p == p && c.energy == e && c.u == u);
                if !dup {
                    out.candidates.push(RepresentationCandidate {
                        p,
                        energy: e.clone(),
                        u,
                        lattice_positive,
                        interval_positive,
                    });
                }
            }
        }
    }
    Ok(out)
}

fn u_roots_at(c0: &PolyOverPoly, cp: &PolyOverPoly, e: &RealRoot) -> Result<Vec<RealRoot>> {
    let ev = e.value();
    let (a, b) = (c0.eval_inner(&ev), cp.eval_inner(&ev));
    let target: UniPoly = if e.exact.is_some() {
        a.gcd(&b)
    } else {
        // Only an approximate E: take roots of the lower-degree factor and
        // let the caller filter by residual.
        if a.degree() <= b.degree() && !a.is_zero() {
            a
        } else {
            b
        }
    };
    if target.is_zero() || target.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let bound = root_bound(&target);
    real_roots(&target, &-bound.clone(), &bound)
}

/// Matrices of a `(p+1)`-dimensional representation.
#[derive(Clone, Debug)]
pub struct FockRep {
    pub p: usize,
    pub energy: Rational,
    pub u: Rational,
    pub mat_n: Matrix,
    pub mat_a: Matrix,
    pub mat_b: Matrix,
    pub mat_c: Matrix,
    pub casimir_value: f64,
    /// `Φ(1) … Φ(p)`.
    pub phi: Vec<Rational>,
    /// `Φ(n) ρ²(n−1)` for `n = 1..p`: the product of the two off-diagonal
    /// entries of `B`.
    pub weights: Vec<Rational>,
    /// `false` for the gauge-fixed builder, whose `B` is not symmetric.
    pub hermitian: bool,
}

impl FockRep {
    pub fn dim(&self) -> usize {
        self.p + 1
    }
}

fn sqrt_rational(r: &Rational) -> f64 {
    libm::sqrt(to_f64(r))
}

fn assemble(p: usize, a: &[Rational], b: &[Rational], upper: &[f64], lower: &[f64]) -> (Matrix, Matrix, Matrix, Matrix) {
    let dim = p + 1;
    let mat_n = Matrix::diag(&(0..dim).map(|i| i as f64).collect::<Vec<_>>());
    let mat_a = Matrix::diag(&a.iter().map(to_f64).collect::<Vec<_>>());
    let mut mat_b = Matrix::diag(&b.iter().map(to_f64).collect::<Vec<_>>());
    for n in 1..dim {
        mat_b[(n - 1, n)] = upper[n - 1];
        mat_b[(n, n - 1)] = lower[n - 1];
    }
    let mat_c = commutator(&mat_a, &mat_b);
    (mat_n, mat_a, mat_b, mat_c)
}

/// Builds the unitary representation for a candidate. `sf` must come from
/// [`phi_closed`] with `u` symbolic, as in [`solve_constraints`].
pub fn build_rep(real: &Realization, sf: &StructureFunction, cand: &RepresentationCandidate) -> Result<FockRep> {
    let (e, u) = (cand.energy.value(), cand.u.value());
    let extra = [(H, e.clone())];
    let vals = [(U, u.clone()), (H, e.clone())];
    let p = cand.p;
    let mut a = Vec::with_capacity(p + 1);
    let mut b = Vec::with_capacity(p + 1);
    for n in 0..=p as i64 {
        let (an, bn) = real_ab(real, n, &u, &extra)?;
        a.push(an);
        b.push(bn);
    }
    let mut phi = Vec::with_capacity(p);
    let mut weights = Vec::with_capacity(p);
    for n in 1..=p {
        let ph = sf.eval(n as i64, &vals)?;
        let r2 = sf.rho2.eval(&[(N, int(n as i64 - 1)), (U, u.clone()), (H, e.clone())])?;
        let y = &ph * &r2;
        if !ph.is_positive() || !y.is_positive() {
            return Err(Error::NonUnitary { n, value: y.to_string() });
        }
        phi.push(ph);
        weights.push(y);
    }
    let off: Vec<f64> = weights.iter().map(sqrt_rational).collect();
    let (mat_n, mat_a, mat_b, mat_c) = assemble(p, &a, &b, &off, &off);
    let casimir_value = to_f64(&sf.casimir.eval(&extra)?);
    Ok(FockRep { p, energy: e, u, mat_n, mat_a, mat_b, mat_c, casimir_value, phi, weights, hermitian: true })
}

fn real_ab(real: &Realization, n: i64, u: &Rational, extra: &[(&str, Rational)]) -> Result<(Rational, Rational)> {
    let mut vals = extra.to_vec();
    vals.push((N, int(n)));
    vals.push((U, u.clone()));
    Ok((real.a_of_n.eval(&vals)?, real.b_of_n.eval(&vals)?))
}

/// `(K, ζ)` making `Φ(0) ρ²(−1)` and `Φ(p+1) ρ²(p)` vanish for a numeric
/// spec and offset `u`. Both weights are affine in `K` and `ζ`.
pub fn truncating_constants(spec: &AlgebraSpec, u: &Rational, p: usize) -> Result<(AlgebraSpec, Rational)> {
    let with_zeta = |z: &Rational| {
        let mut s = spec.clone();
        s.zeta = MultiPoly::constant(z.clone());
        s
    };
    let (zero, one) = (Rational::zero(), int(1));
    let ends = [0i64, p as i64 + 1];
    let y = |s: &AlgebraSpec, k: &Rational| -> Result<Vec<Rational>> {
        ends.iter().map(|&n| Ok(oracle_weights(s, k, u, n)?.0)).collect()
    };
    let base = y(&with_zeta(&zero), &zero)?;
    let dk = y(&with_zeta(&zero), &one)?;
    let dz = y(&with_zeta(&one), &zero)?;
    let m = [[&dk[0] - &base[0], &dz[0] - &base[0]], [&dk[1] - &base[1], &dz[1] - &base[1]]];
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    if det.is_zero() {
        return Err(Error::Singular("truncation constants"));
    }
    let (r0, r1) = (-&base[0], -&base[1]);
    let k = (&r0 * &m[1][1] - &m[0][1] * &r1) / &det;
    let z = (&m[0][0] * &r1 - &m[1][0] * &r0) / &det;
    Ok((with_zeta(&z), k))
}

/// A representation whose off-diagonal entries `√|y|` and `y/√|y|` multiply
/// to `y(n) = Φ(n) ρ²(n−1)`, taken from the pointwise oracle. Works whatever the sign
/// of the weights, so it exercises the algebra on specs with no unitary
/// representation. `spec` must already truncate at `p` (see
/// [`truncating_constants`]).
pub fn gauge_rep(spec: &AlgebraSpec, k: &Rational, u: &Rational, p: usize) -> Result<FockRep> {
    let real = realize(spec)?;
    let mut a = Vec::with_capacity(p + 1);
    let mut b = Vec::with_capacity(p + 1);
    for n in 0..=p as i64 {
        let (an, bn, _) = real.values_at(n, u, &[])?;
        a.push(an);
        b.push(bn);
    }
    for n in [0i64, p as i64 + 1] {
        let y = oracle_weights(spec, k, u, n)?.0;
        if !y.is_zero() {
            return Err(Error::Invalid(alloc::format!("weight at n = {} is {}, not 0", n, y)));
        }
    }
    let mut phi = Vec::with_capacity(p);
    let mut weights = Vec::with_capacity(p);
    for n in 1..=p as i64 {
        let y = oracle_weights(spec, k, u, n)?.0;
        phi.push(&y / &rho2_value(spec, u, n - 1)?);
        weights.push(y);
    }
    let upper: Vec<f64> = weights.iter().map(|y| libm::sqrt(libm::fabs(to_f64(y)))).collect();
    let lower: Vec<f64> = weights.iter().zip(&upper).map(|(y, s)| to_f64(y) / s).collect();
    let (mat_n, mat_a, mat_b, mat_c) = assemble(p, &a, &b, &upper, &lower);
    Ok(FockRep {
        p,
        energy: Rational::zero(),
        u: u.clone(),
        mat_n,
        mat_a,
        mat_b,
        mat_c,
        casimir_value: to_f64(k),
        phi,
        weights,
        hermitian: false,
    })
}
