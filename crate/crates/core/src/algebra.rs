//! Structure constants of a quartic algebra, their Jacobi closure and the
//! Casimir coefficients in the classical and quantum settings.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ratcore::{int, rat, MultiPoly, Rational};

/// Name of the Hamiltonian indeterminate.
pub const H: &str = "H";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Classical,
    Quantum,
}

/// The structure constants that may depend on `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HConst {
    Alpha,
    Gamma,
    Delta,
    Epsilon,
    Mu,
    Nu,
    Xi,
    Zeta,
}

impl HConst {
    pub const ALL: [HConst; 8] = [
        HConst::Alpha,
        HConst::Gamma,
        HConst::Delta,
        HConst::Epsilon,
        HConst::Mu,
        HConst::Nu,
        HConst::Xi,
        HConst::Zeta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HConst::Alpha => "alpha",
            HConst::Gamma => "gamma",
            HConst::Delta => "delta",
            HConst::Epsilon => "epsilon",
            HConst::Mu => "mu",
            HConst::Nu => "nu",
            HConst::Xi => "xi",
            HConst::Zeta => "zeta",
        }
    }

    /// Largest admissible degree in `H`.
    pub fn cap(self) -> u32 {
        match self {
            HConst::Alpha => 1,
            HConst::Gamma => 2,
            HConst::Delta => 1,
            HConst::Epsilon => 3,
            HConst::Mu => 1,
            HConst::Nu => 2,
            HConst::Xi => 3,
            HConst::Zeta => 4,
        }
    }
}

/// Constants fixed by the Jacobi identity.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivedConstants {
    pub omega: MultiPoly,
    pub sigma: MultiPoly,
    pub rho: MultiPoly,
    pub eta: MultiPoly,
}

/// `[A,B] = C`, `[A,C] = τA³ + αA² + β{A,B} + γA + δB + ε` and
/// `[B,C] = λA⁴ + μA³ + νA² + ξA + ρB² + ηB + ω{A²,B} + σ{A,B} + ζ`
/// (Poisson brackets and doubled products in the classical case).
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraSpec {
    pub mode: Mode,
    pub tau: Rational,
    pub lambda: Rational,
    pub beta: Rational,
    pub alpha: MultiPoly,
    pub gamma: MultiPoly,
    pub delta: MultiPoly,
    pub epsilon: MultiPoly,
    pub mu: MultiPoly,
    pub nu: MultiPoly,
    pub xi: MultiPoly,
    pub zeta: MultiPoly,
    pub derived: Option<DerivedConstants>,
}

impl AlgebraSpec {
    pub fn zero(mode: Mode) -> Self {
        AlgebraSpec {
            mode,
            tau: Rational::zero(),
            lambda: Rational::zero(),
            beta: Rational::zero(),
            alpha: MultiPoly::zero(),
            gamma: MultiPoly::zero(),
            delta: MultiPoly::zero(),
            epsilon: MultiPoly::zero(),
            mu: MultiPoly::zero(),
            nu: MultiPoly::zero(),
            xi: MultiPoly::zero(),
            zeta: MultiPoly::zero(),
            derived: None,
        }
    }

    pub fn get(&self, c: HConst) -> &MultiPoly {
        match c {
            HConst::Alpha => &self.alpha,
            HConst::Gamma => &self.gamma,
            HConst::Delta => &self.delta,
            HConst::Epsilon => &self.epsilon,
            HConst::Mu => &self.mu,
            HConst::Nu => &self.nu,
            HConst::Xi => &self.xi,
            HConst::Zeta => &self.zeta,
        }
    }

    pub fn get_mut(&mut self, c: HConst) -> &mut MultiPoly {
        match c {
            HConst::Alpha => &mut self.alpha,
            HConst::Gamma => &mut self.gamma,
            HConst::Delta => &mut self.delta,
            HConst::Epsilon => &mut self.epsilon,
            HConst::Mu => &mut self.mu,
            HConst::Nu => &mut self.nu,
            HConst::Xi => &mut self.xi,
            HConst::Zeta => &mut self.zeta,
        }
    }

    pub fn with(mut self, c: HConst, p: MultiPoly) -> Self {
        *self.get_mut(c) = p;
        self
    }

    /// Checks the degree caps in `H`.
    pub fn validate(&self) -> Result<()> {
        for c in HConst::ALL {
            let d = self.get(c).degree_in(H);
            if d > c.cap() {
                return Err(Error::DegreeCap { name: c.name(), degree: d, cap: c.cap() });
            }
        }
        Ok(())
    }

    /// Substitutes `H ↦ e` in every constant.
    pub fn at_energy(&self, e: &MultiPoly) -> Self {
        self.map_polys(|p| p.subs(&[(H, e.clone())]))
    }

    pub fn at_energy_value(&self, e: &Rational) -> Self {
        self.at_energy(&MultiPoly::constant(e.clone()))
    }

    /// Applies `f` to all polynomial constants, derived ones included.
    pub fn map_polys(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> Self {
        let mut s = self.clone();
        for c in HConst::ALL {
            *s.get_mut(c) = f(self.get(c));
        }
        s.derived = self.derived.as_ref().map(|d| DerivedConstants {
            omega: f(&d.omega),
            sigma: f(&d.sigma),
            rho: f(&d.rho),
            eta: f(&d.eta),
        });
        s
    }

    /// True when no constant depends on any indeterminate.
    pub fn is_numeric(&self) -> bool {
        HConst::ALL.iter().all(|&c| self.get(c).is_constant())
    }

    /// Indeterminates used by the constants.
    pub fn symbols(&self) -> Vec<String> {
        let mut v: Vec<String> = Vec::new();
        for c in HConst::ALL {
            for s in self.get(c).used_vars() {
                if !v.contains(&s) {
                    v.push(s);
                }
            }
        }
        v
    }

    /// The derived constants if set, otherwise the Jacobi closure.
    pub fn derived_or_closed(&self) -> DerivedConstants {
        self.derived.clone().unwrap_or_else(|| closure_constants(self))
    }
}

fn c(r: Rational) -> MultiPoly {
    MultiPoly::constant(r)
}

/// Values of ω, σ, ρ, η forced by the Jacobi identity in the spec's mode.
pub fn closure_constants(spec: &AlgebraSpec) -> DerivedConstants {
    let tau = &spec.tau;
    let beta = &spec.beta;
    let omega = c(rat(-3, 2) * tau);
    let rho = c(-beta.clone());
    match spec.mode {
        Mode::Classical => DerivedConstants {
            omega,
            sigma: -&spec.alpha,
            rho,
            eta: -&spec.gamma,
        },
        Mode::Quantum => DerivedConstants {
            omega,
            sigma: &c(beta * tau / int(2)) - &spec.alpha,
            rho,
            eta: &spec.delta.scale(&(tau / int(2))) - &spec.gamma,
        },
    }
}

pub fn close_jacobi(spec: &AlgebraSpec) -> AlgebraSpec {
    let mut s = spec.clone();
    s.derived = Some(closure_constants(spec));
    s
}

/// `c₁ … c₁₁` of `K = C² + c₁{A³,B} + c₂{A²,B} + c₃{A,B²} + c₄{A,B} + c₅B²
/// + c₆B + c₇A⁵ + c₈A⁴ + c₉A³ + c₁₀A² + c₁₁A` (anticommutators read as
/// doubled products classically).
#[derive(Clone, Debug, PartialEq)]
pub struct CasimirCoefficients {
    pub c: [MultiPoly; 11],
}

impl CasimirCoefficients {
    /// `c_i` with the usual 1-based index.
    pub fn get(&self, i: usize) -> &MultiPoly {
        &self.c[i - 1]
    }

    pub fn eval(&self, values: &[(&str, Rational)]) -> Result<[Rational; 11]> {
        let mut out: [Rational; 11] = Default::default();
        for (o, p) in out.iter_mut().zip(&self.c) {
            *o = p.eval(values)?;
        }
        Ok(out)
    }

    pub fn map(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> Self {
        CasimirCoefficients { c: core::array::from_fn(|i| f(&self.c[i])) }
    }
}

pub fn casimir_coefficients(spec: &AlgebraSpec) -> CasimirCoefficients {
    match spec.mode {
        Mode::Classical => classical_coefficients(spec),
        Mode::Quantum => {
            let base = printed_quantum_coefficients(spec);
            let corr = quantum_casimir_correction(spec);
            CasimirCoefficients { c: core::array::from_fn(|i| &base.c[i] + &corr.c[i]) }
        }
    }
}

fn classical_coefficients(s: &AlgebraSpec) -> CasimirCoefficients {
    CasimirCoefficients {
        c: [
            c(-s.tau.clone()),
            -&s.alpha,
            c(-s.beta.clone()),
            -&s.gamma,
            -&s.delta,
            s.epsilon.scale(&int(-2)),
            c(rat(2, 5) * &s.lambda),
            s.mu.scale(&rat(1, 2)),
            s.nu.scale(&rat(2, 3)),
            s.xi.clone(),
            s.zeta.scale(&int(2)),
        ],
    }
}

/// The quantum coefficients in their commonly quoted closed form. `c₈ … c₁₁`
/// of this form miss terms in `λ` and `τ²`; see [`quantum_casimir_correction`].
pub fn printed_quantum_coefficients(s: &AlgebraSpec) -> CasimirCoefficients {
    let t = &s.tau;
    let b = &s.beta;
    let l = &s.lambda;
    let (a, g, d, e) = (&s.alpha, &s.gamma, &s.delta, &s.epsilon);
    let (m, n, x, z) = (&s.mu, &s.nu, &s.xi, &s.zeta);
    let b2 = b * b;
    let t2 = t * t;
    let c1 = c(-t.clone());
    let c2 = &c(rat(3, 2) * b * t) - a;
    let c3 = c(-b.clone());
    let c4 = &(&a.scale(b) - &c(&b2 * t / int(2))) - g;
    let c5 = &c(b2.clone()) - d;
    let c6 = &(&e.scale(&int(-2)) + &g.scale(b)) - &d.scale(&(b * t / int(2)));
    let c7 = c(rat(2, 5) * l);
    let c8 = &c(-(b * l) - rat(9, 4) * &t2) + &m.scale(&rat(1, 2));
    let c9 = [
        c(rat(8, 15) * &b2 * l + rat(3, 2) * -(b * &t2)),
        d.scale(&(rat(2, 3) * l)),
        m.scale(&(rat(2, 3) * b)),
        n.scale(&rat(2, 3)),
        a.scale(&(int(3) * t)),
    ];
    let c10 = [
        a * a,
        c(rat(-2, 15) * &b2 * b * l),
        d.scale(&(b * l / int(3))),
        m.scale(&(-(&b2) / int(6))),
        d * &m.scale(&rat(1, 2)),
        n.scale(&(b / int(3))),
        x.clone(),
        a.scale(&-(b * t)),
        g.scale(&(rat(3, 2) * t)),
        c(&b2 * &t2 / int(4)),
        d.scale(&(rat(-3, 4) * &t2)),
    ];
    let c11 = [
        a * g,
        z.scale(&int(2)),
        d.scale(&(rat(-2, 15) * &b2 * l)),
        (d * d).scale(&(-l / int(15))),
        (d * m).scale(&(-b / int(6))),
        (d * n).scale(&rat(1, 3)),
        g.scale(&(-(b * t) / int(2))),
        (a * d).scale(&(-t / int(2))),
        d.scale(&(b * &t2 / int(4))),
    ];
    let sum = |v: &[MultiPoly]| v.iter().fold(MultiPoly::zero(), |acc, p| &acc + p);
    CasimirCoefficients {
        c: [c1, c2, c3, c4, c5, c6, c7, c8, sum(&c9), sum(&c10), sum(&c11)],
    }
}

/// Difference between the coefficients that make `K` central and
/// [`printed_quantum_coefficients`]. Only `c₈ … c₁₁` change.
pub fn quantum_casimir_correction(s: &AlgebraSpec) -> CasimirCoefficients {
    let b = &s.beta;
    let l = &s.lambda;
    let t = &s.tau;
    let b2 = b * b;
    let mut out: [MultiPoly; 11] = Default::default();
    out[7] = c(int(2) * b * l + rat(9, 2) * t * t);
    out[8] = c(rat(-16, 15) * &b2 * l);
    out[9] = &c(rat(4, 15) * &b2 * b * l) - &s.delta.scale(&(rat(4, 5) * b * l));
    out[10] = s.delta.scale(&(rat(4, 15) * &b2 * l));
    CasimirCoefficients { c: out }
}

/// Commutative image of the right-hand side of `[A,C]` in `A, B, C, H`.
pub fn ac_relation(spec: &AlgebraSpec) -> MultiPoly {
    let (a, b) = (MultiPoly::var("A"), MultiPoly::var("B"));
    let terms = [
        a.pow(3).scale(&spec.tau),
        &spec.alpha * &a.pow(2),
        (&a * &b).scale(&(int(2) * &spec.beta)),
        &spec.gamma * &a,
        &spec.delta * &b,
        spec.epsilon.clone(),
    ];
    terms.iter().fold(MultiPoly::with_vars(&["A", "B", "C"]), |acc, p| &acc + p)
}

/// Commutative image of the right-hand side of `[B,C]`, using the spec's
/// derived constants (or the closure if unset).
pub fn bc_relation(spec: &AlgebraSpec) -> MultiPoly {
    let d = spec.derived_or_closed();
    let (a, b) = (MultiPoly::var("A"), MultiPoly::var("B"));
    let terms = [
        a.pow(4).scale(&spec.lambda),
        &spec.mu * &a.pow(3),
        &spec.nu * &a.pow(2),
        &spec.xi * &a,
        &d.rho * &b.pow(2),
        &d.eta * &b,
        (&d.omega * &(&a.pow(2) * &b)).scale(&int(2)),
        (&d.sigma * &(&a * &b)).scale(&int(2)),
        spec.zeta.clone(),
    ];
    terms.iter().fold(MultiPoly::with_vars(&["A", "B", "C"]), |acc, p| &acc + p)
}

#[derive(Clone, Debug, Default)]
pub struct ReductionReport {
    pub checks: Vec<(String, bool)>,
}

impl ReductionReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Sends `τ, λ → 0`, then `μ → 0`, then `ν → 0`, and checks that the
/// relations and Casimir coefficients lose the corresponding terms.
pub fn reduction_check(spec: &AlgebraSpec) -> ReductionReport {
    let mut r = ReductionReport::default();
    let mut push = |name: &str, ok: bool| r.checks.push((String::from(name), ok));
    let a = MultiPoly::var("A");
    let b = MultiPoly::var("B");
    let no_term = |p: &MultiPoly, m: &MultiPoly| -> bool {
        let (ea, eb) = (m.degree_in("A"), m.degree_in("B"));
        p.coefficient_of("A", ea).coefficient_of("B", eb).is_zero()
    };

    let mut cubic = spec.clone();
    cubic.tau = Rational::zero();
    cubic.lambda = Rational::zero();
    cubic.derived = None;
    let cubic = close_jacobi(&cubic);
    let cc = casimir_coefficients(&cubic);
    let d = cubic.derived_or_closed();
    let bc = bc_relation(&cubic);
    let ac = ac_relation(&cubic);
    push("cubic: c7 = 0", cc.get(7).is_zero());
    push("cubic: c1 = 0", cc.get(1).is_zero());
    push("cubic: omega = 0", d.omega.is_zero());
    push("cubic: no A^4 in [B,C]", no_term(&bc, &a.pow(4)));
    push("cubic: no {A^2,B} in [B,C]", no_term(&bc, &(&a.pow(2) * &b)));
    push("cubic: no A^3 in [A,C]", no_term(&ac, &a.pow(3)));
    if spec.mode == Mode::Quantum {
        push("cubic: sigma = -alpha", d.sigma == -&cubic.alpha);
        push("cubic: eta = -gamma", d.eta == -&cubic.gamma);
    }

    let mut quad = cubic.clone();
    quad.mu = MultiPoly::zero();
    let quad = close_jacobi(&quad);
    let qc = casimir_coefficients(&quad);
    let bc = bc_relation(&quad);
    push("quadratic: c8 = 0", qc.get(8).is_zero());
    push("quadratic: no A^3 in [B,C]", no_term(&bc, &a.pow(3)));

    let mut qr3 = quad.clone();
    qr3.nu = MultiPoly::zero();
    let qr3 = close_jacobi(&qr3);
    let rc = casimir_coefficients(&qr3);
    let bc = bc_relation(&qr3);
    push("QR(3): c9 = 0", rc.get(9).is_zero());
    push("QR(3): no A^2 in [B,C]", no_term(&bc, &a.pow(2)));
    push("QR(3): [B,C] of degree <= 2 in A, B", ab_degree(&bc) <= 2);
    r
}

fn ab_degree(p: &MultiPoly) -> u32 {
    let idx: Vec<usize> = p
        .vars()
        .iter()
        .enumerate()
        .filter(|(_, v)| *v == "A" || *v == "B")
        .map(|(i, _)| i)
        .collect();
    p.terms().map(|(e, _)| idx.iter().map(|&i| e[i]).sum()).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hpoly(c: &[Rational]) -> MultiPoly {
        MultiPoly::from_terms(&[H], c.iter().enumerate().map(|(k, v)| (alloc::vec![k as u32], v.clone())))
    }

    #[test]
    fn closure_examples() {
        let mut s = AlgebraSpec::zero(Mode::Quantum);
        s.tau = int(2);
        s.beta = int(4);
        s.delta = MultiPoly::from_int(6);
        s.alpha = MultiPoly::from_int(1);
        s.gamma = MultiPoly::from_int(5);
        let d = closure_constants(&s);
        assert_eq!(d.omega, MultiPoly::from_int(-3));
        assert_eq!(d.sigma, MultiPoly::from_int(3));
        assert_eq!(d.rho, MultiPoly::from_int(-4));
        assert_eq!(d.eta, MultiPoly::from_int(1));
        s.mode = Mode::Classical;
        let d = closure_constants(&s);
        assert_eq!(d.sigma, MultiPoly::from_int(-1));
        assert_eq!(d.eta, MultiPoly::from_int(-5));
        let once = close_jacobi(&s);
        assert_eq!(close_jacobi(&once), once);
    }

    #[test]
    fn quantum_coefficients_small_cases() {
        let mut s = AlgebraSpec::zero(Mode::Quantum);
        s.delta = MultiPoly::from_int(7);
        let c = casimir_coefficients(&s);
        for i in 1..=11 {
            let expect = if i == 5 { MultiPoly::from_int(-7) } else { MultiPoly::zero() };
            assert_eq!(c.get(i), &expect, "c{}", i);
        }
        let mut s = AlgebraSpec::zero(Mode::Quantum);
        s.tau = int(2);
        s.beta = int(1);
        let got: Vec<Rational> = casimir_coefficients(&s).eval(&[]).unwrap().to_vec();
        let expect: Vec<Rational> =
            [-2, 3, -1, -1, 1, 0, 0, 9, -6, 1, 0].iter().map(|&v| int(v)).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn degree_caps() {
        let mut s = AlgebraSpec::zero(Mode::Quantum);
        s.zeta = hpoly(&[int(1), int(0), int(0), int(0), int(1)]);
        assert!(s.validate().is_ok());
        s.alpha = hpoly(&[int(0), int(0), int(1)]);
        assert!(matches!(s.validate(), Err(Error::DegreeCap { name: "alpha", .. })));
    }

    #[test]
    fn reductions_on_generic_spec() {
        let mut s = AlgebraSpec::zero(Mode::Quantum);
        s.tau = int(3);
        s.lambda = rat(-5, 4);
        s.beta = rat(2, 3);
        for (i, k) in HConst::ALL.iter().enumerate() {
            *s.get_mut(*k) = &MultiPoly::var(k.name()) + &MultiPoly::from_int(i as i64);
        }
        let r = reduction_check(&s);
        assert!(r.all_pass(), "{:?}", r.checks);
        s.mode = Mode::Classical;
        assert!(reduction_check(&s).all_pass());
    }
}
