//! Deformed-oscillator realizations `A = A(N)`, `B = b(N) + b†ρ(N) + ρ(N)b`
//! of the quantum algebra, and the structure function `Φ`.
//!
//! Internally everything is a function of `s = N + u`; the public fields are
//! expressed in `N` and `u`.

mod case2_terms;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::algebra::{casimir_coefficients, quantum_casimir_correction, AlgebraSpec, Mode};
use crate::error::{Error, Result};
use crate::ratcore::{int, rat, sqrt_exact, MultiPoly, Rational, RationalFunction};

pub const N: &str = "N";
pub const U: &str = "u";
const S: &str = "s";

/// `3932160 = 2^18 · 15`, the normalization in the Case 2 gauge.
const CASE2_NORM: i64 = 3_932_160;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseKind {
    /// `β = 0`, `δ ≠ 0`.
    Case1,
    /// `β ≠ 0`.
    Case2,
    Unsupported,
}

pub fn detect_case(spec: &AlgebraSpec) -> CaseKind {
    if !spec.beta.is_zero() {
        CaseKind::Case2
    } else if spec.delta.is_zero() {
        CaseKind::Unsupported
    } else {
        CaseKind::Case1
    }
}

#[derive(Clone, Debug)]
pub struct Realization {
    pub case: CaseKind,
    pub a_of_n: RationalFunction,
    pub b_of_n: RationalFunction,
    pub rho2_of_n: RationalFunction,
    /// Symbolic checks run before the realization was accepted.
    pub checks: Vec<(String, bool)>,
    a_s: MultiPoly,
    b_s: RationalFunction,
    rho2_s: RationalFunction,
}

fn s_var() -> MultiPoly {
    MultiPoly::var(S)
}

fn s_plus(k: i64) -> MultiPoly {
    &s_var() + &MultiPoly::from_int(k)
}

fn to_n(p: &MultiPoly, u: &MultiPoly) -> MultiPoly {
    p.subs(&[(S, &MultiPoly::var(N) + u)])
}

fn rf_to_n(f: &RationalFunction, u: &MultiPoly) -> Result<RationalFunction> {
    f.subs(&[(S, &MultiPoly::var(N) + u)])
}

fn shift_rf(f: &RationalFunction, k: i64) -> Result<RationalFunction> {
    f.subs(&[(S, s_plus(k))])
}

fn shift(p: &MultiPoly, k: i64) -> MultiPoly {
    p.subs(&[(S, s_plus(k))])
}

fn sqrt_delta(spec: &AlgebraSpec) -> Result<Rational> {
    let d = spec
        .delta
        .as_constant()
        .ok_or_else(|| Error::NonRationalSqrt(format!("{}", spec.delta)))?;
    if !d.is_positive() {
        return Err(Error::NonRationalSqrt(format!("{}", d)));
    }
    sqrt_exact(&d).ok_or_else(|| Error::NonRationalSqrt(format!("{}", d)))
}

/// `A(s)` for the given case.
fn a_in_s(spec: &AlgebraSpec, case: CaseKind) -> Result<MultiPoly> {
    let s = s_var();
    match case {
        CaseKind::Case1 => Ok(s.scale(&sqrt_delta(spec)?)),
        CaseKind::Case2 => {
            let b = &spec.beta;
            let x = &s.pow(2) - &MultiPoly::constant(rat(1, 4));
            Ok(&x.scale(&(b / int(2))) - &spec.delta.scale(&(int(2) * b).recip()))
        }
        CaseKind::Unsupported => Err(Error::Unsupported),
    }
}

/// The Case 2 `b(s)` in its expanded printed form, with pole at `s² = c`.
fn case2_b(spec: &AlgebraSpec, c: &Rational) -> Result<RationalFunction> {
    let b = &spec.beta;
    let t = &spec.tau;
    let (al, ga, de, ep) = (&spec.alpha, &spec.gamma, &spec.delta, &spec.epsilon);
    let x = &s_var().pow(2) - &MultiPoly::constant(rat(1, 4));
    let k = |r: Rational| MultiPoly::constant(r);
    let b2 = b * b;
    let b3 = &b2 * b;
    let b5 = &b3 * &b2;
    let poly = [
        x.pow(2).scale(&(-(b * t) / int(8))),
        &x * &(&al.scale(&(int(-2) * b)) + &de.scale(&(int(3) * t))).scale(&(int(8) * b).recip()),
        (&(&ga.scale(&(int(-4) * &b2)) + &(al * de).scale(&(int(4) * b))) - &(de * de).scale(&(int(3) * t)))
            .scale(&(int(8) * &b3).recip()),
    ]
    .iter()
    .fold(MultiPoly::zero(), |acc, p| &acc + p);
    let resid = &(&(&(ga * de).scale(&(int(-4) * &b2)) + &(al * &(de * de)).scale(&(int(2) * b)))
        + &ep.scale(&(int(8) * &b3)))
        - &de.pow(3).scale(t);
    let resid = resid.scale(&(-(int(8) * &b5).recip()));
    let pole = &s_var().pow(2) - &k(c.clone());
    Ok(&RationalFunction::from_poly(poly) + &RationalFunction::new(resid, pole)?)
}

fn diagonal_relation(spec: &AlgebraSpec, a: &MultiPoly, b: &RationalFunction) -> RationalFunction {
    let poly = [
        a.pow(3).scale(&spec.tau),
        &spec.alpha * &a.pow(2),
        &spec.gamma * a,
        spec.epsilon.clone(),
    ]
    .iter()
    .fold(MultiPoly::zero(), |acc, p| &acc + p);
    let lin = &a.scale(&(int(2) * &spec.beta)) + &spec.delta;
    &RationalFunction::from_poly(poly) + &(&RationalFunction::from_poly(lin) * b)
}

fn case2_rho2() -> Result<RationalFunction> {
    let s = s_var();
    let den = [&s * &s_plus(1), (&s.scale(&int(2)) + &MultiPoly::one()).pow(2)]
        .iter()
        .fold(MultiPoly::from_int(CASE2_NORM), |acc, p| &acc * p);
    RationalFunction::new(MultiPoly::one(), den)
}

/// Builds the realization for a quantum spec and checks the difference
/// equations it has to satisfy.
pub fn realize(spec: &AlgebraSpec) -> Result<Realization> {
    if spec.mode != Mode::Quantum {
        return Err(Error::WrongMode("quantum"));
    }
    let case = detect_case(spec);
    let a = a_in_s(spec, case)?;
    let mut checks: Vec<(String, bool)> = Vec::new();
    let (b, rho2) = match case {
        CaseKind::Case1 => {
            let num = [a.pow(3).scale(&spec.tau), &spec.alpha * &a.pow(2), &spec.gamma * &a, spec.epsilon.clone()]
                .iter()
                .fold(MultiPoly::zero(), |acc, p| &acc - p);
            let b = RationalFunction::new(num, spec.delta.clone())?;
            (b, RationalFunction::constant(rat(1, 2)))
        }
        CaseKind::Case2 => {
            let mut chosen = None;
            for (label, c) in [("1/2", rat(1, 2)), ("1/4", rat(1, 4))] {
                let b = case2_b(spec, &c)?;
                let ok = diagonal_relation(spec, &a, &b).is_zero();
                checks.push((format!("b(N) with pole at (N+u)^2 = {}: diagonal relation", label), ok));
                if ok {
                    chosen = Some(b);
                    break;
                }
            }
            let b = chosen.ok_or_else(|| Error::RealizationCheck("no b(N) denominator satisfies the diagonal relation".into()))?;
            (b, case2_rho2()?)
        }
        CaseKind::Unsupported => return Err(Error::Unsupported),
    };
    for (name, ok) in difference_checks(spec, &a, &b)? {
        checks.push((name, ok));
    }
    if let Some((name, _)) = checks.iter().rev().find(|(n, ok)| !ok && !n.starts_with("b(N) with pole")) {
        return Err(Error::RealizationCheck(name.clone()));
    }
    let u = MultiPoly::var(U);
    Ok(Realization {
        case,
        a_of_n: RationalFunction::from_poly(to_n(&a, &u)),
        b_of_n: rf_to_n(&b, &u)?,
        rho2_of_n: rf_to_n(&rho2, &u)?,
        checks,
        a_s: a,
        b_s: b,
        rho2_s: rho2,
    })
}

fn difference_checks(spec: &AlgebraSpec, a: &MultiPoly, b: &RationalFunction) -> Result<Vec<(String, bool)>> {
    let d = spec.derived_or_closed();
    let c = casimir_coefficients(spec);
    let beta = MultiPoly::constant(spec.beta.clone());
    let (a0, a1, a2) = (a.clone(), shift(a, 1), shift(a, 2));
    let (da0, da1) = (&a1 - &a0, &a2 - &a1);
    let b0 = b.clone();
    let b1 = shift_rf(b, 1)?;
    let rf = |p: MultiPoly| RationalFunction::from_poly(p);
    let mut out = Vec::new();

    let e1 = &(&da0.pow(2) - &(&beta * &(&a1 + &a0))) - &spec.delta;
    out.push((String::from("(dA)^2 = beta (A(N+1) + A(N)) + delta"), e1.is_zero()));

    out.push((String::from("diagonal relation"), diagonal_relation(spec, a, b).is_zero()));

    let e3 = &(&da0 - &da1) + &beta;
    out.push((String::from("dA(N) - dA(N+1) = -beta"), e3.is_zero()));

    let lhs = &rf(da0.clone()) * &(&b1 - &b0);
    let rhs = [
        &rf(-&beta) * &(&b0 + &b1),
        rf(d.eta.clone()),
        rf(&d.omega * &(&a0.pow(2) + &a1.pow(2))),
        rf(&d.sigma * &(&a0 + &a1)),
    ]
    .into_iter()
    .fold(RationalFunction::from_poly(MultiPoly::zero()), |acc, p| &acc + &p);
    out.push((String::from("dA(N) (b(N+1) - b(N)) relation"), (&lhs - &rhs).is_zero()));

    let e5 = &(&(&beta * &(&a2 + &a0)).scale(&int(-1)) + &c.c[4]) + &(&da1 * &da0);
    out.push((String::from("-beta (A(N+2) + A(N)) + beta^2 - delta + dA(N+1) dA(N) = 0"), e5.is_zero()));

    let s0 = &a0 + &a1;
    let poly = [
        &c.c[0] * &(&a0.pow(3) + &a1.pow(3)),
        &c.c[1] * &(&a0.pow(2) + &a1.pow(2)),
        &c.c[3] * &s0,
        c.c[5].clone(),
    ]
    .iter()
    .fold(MultiPoly::zero(), |acc, p| &acc + p);
    let e6 = &(&rf(poly) + &(&rf(&c.c[2] * &s0) * &(&b0 + &b1))) + &(&rf(c.c[4].clone()) * &(&b0 + &b1));
    out.push((String::from("Casimir off-diagonal relation"), e6.is_zero()));
    Ok(out)
}

impl Realization {
    /// `A(s)`, with `s = N + u`.
    pub fn a_in_s(&self) -> &MultiPoly {
        &self.a_s
    }

    pub fn b_in_s(&self) -> &RationalFunction {
        &self.b_s
    }

    pub fn rho2_in_s(&self) -> &RationalFunction {
        &self.rho2_s
    }

    /// `(A(n), b(n), ρ²(n))` at `s = n + u`; `extra` binds any remaining
    /// symbols such as `H`.
    pub fn values_at(&self, n: i64, u: &Rational, extra: &[(&str, Rational)]) -> Result<(Rational, Rational, Rational)> {
        let mut vals: Vec<(&str, Rational)> = extra.to_vec();
        vals.push((S, int(n) + u));
        Ok((self.a_s.eval(&vals)?, self.b_s.eval(&vals)?, self.rho2_s.eval(&vals)?))
    }
}

/// `Φ(N)` together with the gauge `ρ²(N)` and the Casimir value it was
/// built for.
#[derive(Clone, Debug)]
pub struct StructureFunction {
    pub case: CaseKind,
    /// Polynomial in `N`; may also involve `u`, `H` or other symbols.
    pub phi: MultiPoly,
    pub rho2: RationalFunction,
    pub casimir: MultiPoly,
}

impl StructureFunction {
    pub fn degree(&self) -> u32 {
        self.phi.degree_in(N)
    }

    /// `Φ(n)` with the given symbol values.
    pub fn eval(&self, n: i64, values: &[(&str, Rational)]) -> Result<Rational> {
        let mut v = values.to_vec();
        v.push((N, int(n)));
        self.phi.eval(&v)
    }

    /// `Φ` as a polynomial in `N` with the other symbols substituted.
    pub fn at(&self, values: &[(&str, Rational)]) -> MultiPoly {
        self.phi.subs_values(values)
    }
}

/// `K − Σ Δc_k A^k`: the Casimir value seen by closed forms that were derived
/// with the uncorrected `c₈ … c₁₁`.
fn effective_casimir(spec: &AlgebraSpec, k: &MultiPoly, a: &MultiPoly) -> MultiPoly {
    let dc = quantum_casimir_correction(spec);
    let mut out = k.clone();
    for (i, pw) in [(7usize, 4u32), (8, 3), (9, 2), (10, 1)] {
        if !dc.c[i].is_zero() {
            out = &out - &(&dc.c[i] * &a.pow(pw));
        }
    }
    out
}

/// Closed-form structure function: the degree-6 polynomial for Case 1, the
/// degree-12 one for Case 2. `u` may be a symbol or a number.
pub fn phi_closed(spec: &AlgebraSpec, k: &MultiPoly, u: &MultiPoly) -> Result<StructureFunction> {
    if spec.mode != Mode::Quantum {
        return Err(Error::WrongMode("quantum"));
    }
    let case = detect_case(spec);
    let a = a_in_s(spec, case)?;
    let keff = effective_casimir(spec, k, &a);
    let (phi_s, rho2) = match case {
        CaseKind::Case1 => (case1_phi(spec, &sqrt_delta(spec)?, &keff), RationalFunction::constant(rat(1, 2))),
        CaseKind::Case2 => {
            let (p0, p1) = case2_parts(spec);
            (&p0 + &(&p1 * &keff), case2_rho2()?)
        }
        CaseKind::Unsupported => return Err(Error::Unsupported),
    };
    Ok(StructureFunction {
        case,
        phi: to_n(&phi_s, u),
        rho2: rf_to_n(&rho2, u)?,
        casimir: k.clone(),
    })
}

fn case1_phi(spec: &AlgebraSpec, d: &Rational, keff: &MultiPoly) -> MultiPoly {
    let (al, ga, ep) = (&spec.alpha, &spec.gamma, &spec.epsilon);
    let (mu, nu, xi, ze) = (&spec.mu, &spec.nu, &spec.xi, &spec.zeta);
    let t = &spec.tau;
    let l = &spec.lambda;
    let d2 = d * d;
    let d3 = &d2 * d;
    let d4 = &d2 * &d2;
    let t2 = t * t;
    let q = |n: i64, m: i64| rat(n, m);
    let k = |r: Rational| MultiPoly::constant(r);
    let aa = al * al;
    let gg = ga * ga;
    let ag = al * ga;
    let ge = ga * ep;
    let ae = al * ep;
    let sum = |v: Vec<MultiPoly>| v.iter().fold(MultiPoly::zero(), |acc, p| &acc + p);

    let k0 = sum(alloc::vec![
        keff.scale(&-(int(2) * &d2).recip()),
        ge.scale(&-(int(2) * &d3).recip()),
        (ep * ep).scale(&(int(2) * &d4).recip()),
        ze.scale(&-(int(2) * d).recip()),
        ep.scale(&(t / (int(4) * d))),
    ]);
    let k1 = sum(alloc::vec![
        gg.scale(&-(int(2) * &d2).recip()),
        ag.scale(&(int(2) * d).recip()),
        ge.scale(&d3.recip()),
        ae.scale(&-d2.recip()),
        ze.scale(&d.recip()),
        k(-(&d3 * l) / int(30)),
        nu.scale(&(d / int(6))),
        xi.scale(&q(-1, 2)),
        ga.scale(&(t / int(4))),
        al.scale(&-(d * t / int(4))),
    ]);
    let k2 = sum(alloc::vec![
        aa.scale(&q(1, 2)),
        gg.scale(&(int(2) * &d2).recip()),
        ag.scale(&-(int(3) / (int(2) * d))),
        ae.scale(&d2.recip()),
        mu.scale(&(&d2 / int(4))),
        nu.scale(&-(d / int(2))),
        xi.scale(&q(1, 2)),
        ga.scale(&(int(3) * t / int(4))),
        al.scale(&(d * t / int(4))),
        ep.scale(&-(int(3) * t / (int(2) * d))),
        k(-(int(3) * &d2 * &t2) / int(8)),
    ]);
    let k3 = sum(alloc::vec![
        aa.scale(&int(-1)),
        ag.scale(&d.recip()),
        k(&d3 * l / int(3)),
        mu.scale(&-(&d2 / int(2))),
        nu.scale(&(d / int(3))),
        ga.scale(&(int(-2) * t)),
        al.scale(&(int(3) * d * t / int(2))),
        ep.scale(&(t / d)),
        k(&d2 * &t2 / int(4)),
    ]);
    let k4 = sum(alloc::vec![
        aa.scale(&q(1, 2)),
        k(-(&d3 * l) / int(2)),
        mu.scale(&(&d2 / int(4))),
        ga.scale(t),
        al.scale(&-(int(5) * d * t / int(2))),
        k(-(int(9) * &d2 * &t2) / int(8)),
    ]);
    let k5 = sum(alloc::vec![
        k(&d3 * l / int(5)),
        al.scale(&(d * t)),
        k(-(int(3) * &d2 * &t2) / int(2)),
    ]);
    let k6 = k(&d2 * &t2 / int(2));
    let s = s_var();
    [k0, k1, k2, k3, k4, k5, k6]
        .iter()
        .enumerate()
        .fold(MultiPoly::zero(), |acc, (i, c)| &acc + &(c * &s.pow(i as u32)))
}

/// The degree-12 polynomial split as `P₀(s) + P₁(s)·K`.
fn case2_parts(spec: &AlgebraSpec) -> (MultiPoly, MultiPoly) {
    let k = |r: &Rational| MultiPoly::constant(r.clone());
    let consts: [MultiPoly; 11] = [
        spec.alpha.clone(),
        k(&spec.beta),
        spec.gamma.clone(),
        spec.delta.clone(),
        spec.epsilon.clone(),
        spec.zeta.clone(),
        k(&spec.lambda),
        spec.mu.clone(),
        spec.nu.clone(),
        spec.xi.clone(),
        k(&spec.tau),
    ];
    let mut powers: Vec<Vec<MultiPoly>> = consts.iter().map(|c| alloc::vec![MultiPoly::one(), c.clone()]).collect();
    let mut parts: [Vec<MultiPoly>; 2] = [
        alloc::vec![MultiPoly::zero(); 13],
        alloc::vec![MultiPoly::zero(); 13],
    ];
    for (sp, coef, e) in case2_terms::TERMS {
        let mut m = MultiPoly::from_int(*coef);
        for (j, &pw) in e[1..].iter().enumerate() {
            if pw == 0 {
                continue;
            }
            let pv = &mut powers[j];
            while pv.len() <= pw as usize {
                let next = &pv[pv.len() - 1] * &consts[j];
                pv.push(next);
            }
            m = &m * &pv[pw as usize];
        }
        let slot = &mut parts[e[0] as usize][*sp as usize];
        *slot = &*slot + &m;
    }
    let s = s_var();
    let assemble = |v: &[MultiPoly]| {
        v.iter()
            .enumerate()
            .fold(MultiPoly::zero(), |acc, (i, c)| &acc + &(c * &s.pow(i as u32)))
    };
    (assemble(&parts[0]), assemble(&parts[1]))
}

/// Numeric structure constants, in the order used by the oracle.
struct Numeric {
    tau: Rational,
    alpha: Rational,
    beta: Rational,
    gamma: Rational,
    delta: Rational,
    epsilon: Rational,
    lambda: Rational,
    mu: Rational,
    nu: Rational,
    xi: Rational,
    zeta: Rational,
}

fn numeric(spec: &AlgebraSpec) -> Result<Numeric> {
    let g = |p: &MultiPoly| p.as_constant().ok_or_else(|| Error::NotNumeric(p.used_vars().join(",")));
    Ok(Numeric {
        tau: spec.tau.clone(),
        alpha: g(&spec.alpha)?,
        beta: spec.beta.clone(),
        gamma: g(&spec.gamma)?,
        delta: g(&spec.delta)?,
        epsilon: g(&spec.epsilon)?,
        lambda: spec.lambda.clone(),
        mu: g(&spec.mu)?,
        nu: g(&spec.nu)?,
        xi: g(&spec.xi)?,
        zeta: g(&spec.zeta)?,
    })
}

/// `(y(n), y(n+1))` with `y(N) = Φ(N) ρ²(N−1)`, from the pointwise linear
/// system given by the third relation and the Casimir.
pub fn oracle_weights(spec: &AlgebraSpec, k: &Rational, u: &Rational, n: i64) -> Result<(Rational, Rational)> {
    if spec.mode != Mode::Quantum {
        return Err(Error::WrongMode("quantum"));
    }
    let v = numeric(spec)?;
    let case = detect_case(spec);
    let sd = match case {
        CaseKind::Case1 => sqrt_delta(spec)?,
        CaseKind::Case2 => Rational::zero(),
        CaseKind::Unsupported => return Err(Error::Unsupported),
    };
    let a_of = |s: &Rational| -> Rational {
        match case {
            CaseKind::Case1 => &sd * s,
            _ => &v.beta / int(2) * (s * s - rat(1, 4)) - &v.delta / (int(2) * &v.beta),
        }
    };
    let c: Vec<Rational> = casimir_coefficients(spec).eval(&[])?.to_vec();
    let d = spec.derived_or_closed();
    let eta = d.eta.as_constant().ok_or(Error::NotNumeric(String::from("eta")))?;
    let sigma = d.sigma.as_constant().ok_or(Error::NotNumeric(String::from("sigma")))?;
    let omega = d.omega.as_constant().ok_or(Error::NotNumeric(String::from("omega")))?;
    let rho = d.rho.as_constant().ok_or(Error::NotNumeric(String::from("rho")))?;

    let s = int(n) + u;
    let a0 = a_of(&s);
    let am = a_of(&(&s - int(1)));
    let ap = a_of(&(&s + int(1)));
    let den = int(2) * &v.beta * &a0 + &v.delta;
    if den.is_zero() {
        return Err(Error::Singular("b(N) denominator"));
    }
    let b = -(&v.tau * a0.pow(3) + &v.alpha * a0.pow(2) + &v.gamma * &a0 + &v.epsilon) / den;
    let (dm, d0) = (&a0 - &am, &ap - &a0);
    let a2 = a0.pow(2);
    let r3 = &rho * &b * &b + &v.lambda * a0.pow(4) + &v.mu * a0.pow(3) + &v.nu * &a2 + &v.xi * &a0 + &v.zeta
        + int(2) * &omega * &a2 * &b
        + int(2) * &sigma * &a0 * &b
        + &eta * &b;
    let r4 = int(2) * &c[0] * a0.pow(3) * &b
        + int(2) * &c[1] * &a2 * &b
        + int(2) * &c[2] * &a0 * &b * &b
        + int(2) * &c[3] * &a0 * &b
        + &c[4] * &b * &b
        + &c[5] * &b
        + &c[6] * a0.pow(5)
        + &c[7] * a0.pow(4)
        + &c[8] * a0.pow(3)
        + &c[9] * &a2
        + &c[10] * &a0;
    let m11 = -(int(2) * &dm) + &v.beta;
    let m12 = int(2) * &d0 + &v.beta;
    let diag = int(2) * &c[2] * &a0 + &c[4];
    let m21 = -(&dm * &dm) + &diag;
    let m22 = -(&d0 * &d0) + &diag;
    let det = &m11 * &m22 - &m12 * &m21;
    if det.is_zero() {
        return Err(Error::Singular("structure-function oracle"));
    }
    let rhs2 = k - r4;
    let y0 = (&r3 * &m22 - &m12 * &rhs2) / &det;
    let y1 = (&m11 * &rhs2 - &m21 * &r3) / &det;
    Ok((y0, y1))
}

/// `ρ²(N)` at integer `n` for numeric `u`.
pub fn rho2_value(spec: &AlgebraSpec, u: &Rational, n: i64) -> Result<Rational> {
    match detect_case(spec) {
        CaseKind::Case1 => Ok(rat(1, 2)),
        CaseKind::Case2 => {
            let s = int(n) + u;
            let den = int(CASE2_NORM) * spec.beta.pow(10) * &s * (&s + int(1)) * (int(2) * &s + int(1)).pow(2);
            if den.is_zero() {
                return Err(Error::VanishingRho(n));
            }
            Ok(den.recip())
        }
        CaseKind::Unsupported => Err(Error::Unsupported),
    }
}

/// `Φ(n)` from the pointwise linear system, independent of both closed forms.
pub fn phi_oracle(spec: &AlgebraSpec, k: &Rational, u: &Rational, n: i64) -> Result<Rational> {
    let (y0, _) = oracle_weights(spec, k, u, n)?;
    let r = rho2_value(spec, u, n - 1)?;
    Ok(y0 / r)
}

impl core::fmt::Display for CaseKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            CaseKind::Case1 => "case1",
            CaseKind::Case2 => "case2",
            CaseKind::Unsupported => "unsupported",
        })
    }
}
