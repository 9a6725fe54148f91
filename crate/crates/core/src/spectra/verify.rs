use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{casimir_coefficients, AlgebraSpec};
use crate::error::{Error, Result};
use crate::ratcore::{to_f64, MultiPoly};

use super::matrix::{anticommutator as ac, commutator as cm, Matrix};
use super::FockRep;

#[derive(Clone, Debug, PartialEq)]
pub struct Residual {
    pub name: String,
    pub residual: f64,
    pub pass: bool,
}

/// Residuals `‖L − R‖∞ / (1 + ‖R‖∞)` of matrix relations.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub tol: f64,
    pub entries: Vec<Residual>,
}

impl VerificationReport {
    pub fn new(tol: f64) -> Self {
        VerificationReport { tol, entries: Vec::new() }
    }

    fn push_raw(&mut self, name: String, residual: f64) {
        let pass = residual.is_finite() && residual < self.tol;
        self.entries.push(Residual { name, residual, pass });
    }

    fn push(&mut self, name: String, lhs: &Matrix, rhs: &Matrix) {
        let r = (lhs - rhs).norm_inf() / (1.0 + rhs.norm_inf());
        self.push_raw(name, r);
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn max_residual(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, e| if e.residual.is_nan() { f64::NAN } else { m.max(e.residual) })
    }

    pub fn get(&self, name: &str) -> Option<&Residual> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }
}

/// Structure constants, Jacobi-derived constants and Casimir coefficients
/// as floats at the representation's energy.
struct Consts {
    tau: f64,
    alpha: f64,
    beta: f64,
    gamma: f64,
    delta: f64,
    eps: f64,
    lambda: f64,
    mu: f64,
    nu: f64,
    xi: f64,
    zeta: f64,
    omega: f64,
    sigma: f64,
    rho: f64,
    eta: f64,
    c: [f64; 11],
}

fn num(p: &MultiPoly, name: &str) -> Result<f64> {
    p.as_constant().map(|r| to_f64(&r)).ok_or_else(|| Error::NotNumeric(String::from(name)))
}

fn consts(rep: &FockRep, spec: &AlgebraSpec) -> Result<Consts> {
    let s = spec.at_energy_value(&rep.energy);
    let d = s.derived_or_closed();
    let cc = casimir_coefficients(&s);
    let mut c = [0.0; 11];
    for (i, ci) in cc.c.iter().enumerate() {
        c[i] = num(ci, "casimir coefficient")?;
    }
    Ok(Consts {
        tau: to_f64(&s.tau),
        alpha: num(&s.alpha, "alpha")?,
        beta: to_f64(&s.beta),
        gamma: num(&s.gamma, "gamma")?,
        delta: num(&s.delta, "delta")?,
        eps: num(&s.epsilon, "epsilon")?,
        lambda: to_f64(&s.lambda),
        mu: num(&s.mu, "mu")?,
        nu: num(&s.nu, "nu")?,
        xi: num(&s.xi, "xi")?,
        zeta: num(&s.zeta, "zeta")?,
        omega: num(&d.omega, "omega")?,
        sigma: num(&d.sigma, "sigma")?,
        rho: num(&d.rho, "rho")?,
        eta: num(&d.eta, "eta")?,
        c,
    })
}

/// Linear combination `Σ kᵢ Mᵢ`.
fn lc(n: usize, terms: &[(f64, &Matrix)]) -> Matrix {
    terms.iter().fold(Matrix::zeros(n, n), |acc, (k, m)| &acc + &m.scale(*k))
}

struct Gens {
    a: Matrix,
    b: Matrix,
    c: Matrix,
    i: Matrix,
}

impl Gens {
    fn new(rep: &FockRep) -> Self {
        Gens { a: rep.mat_a.clone(), b: rep.mat_b.clone(), c: rep.mat_c.clone(), i: Matrix::identity(rep.dim()) }
    }

    fn ac_rhs(&self, k: &Consts) -> Matrix {
        let a = &self.a;
        lc(
            a.rows(),
            &[
                (k.tau, &a.pow(3)),
                (k.alpha, &a.pow(2)),
                (k.beta, &ac(a, &self.b)),
                (k.gamma, a),
                (k.delta, &self.b),
                (k.eps, &self.i),
            ],
        )
    }

    fn bc_rhs(&self, k: &Consts) -> Matrix {
        let (a, b) = (&self.a, &self.b);
        lc(
            a.rows(),
            &[
                (k.lambda, &a.pow(4)),
                (k.mu, &a.pow(3)),
                (k.nu, &a.pow(2)),
                (k.xi, a),
                (k.rho, &b.pow(2)),
                (k.eta, b),
                (k.omega, &ac(&a.pow(2), b)),
                (k.sigma, &ac(a, b)),
                (k.zeta, &self.i),
            ],
        )
    }

    fn casimir(&self, k: &Consts) -> Matrix {
        let (a, b) = (&self.a, &self.b);
        let c = &k.c;
        lc(
            a.rows(),
            &[
                (1.0, &self.c.pow(2)),
                (c[0], &ac(&a.pow(3), b)),
                (c[1], &ac(&a.pow(2), b)),
                (c[2], &ac(a, &b.pow(2))),
                (c[3], &ac(a, b)),
                (c[4], &b.pow(2)),
                (c[5], b),
                (c[6], &a.pow(5)),
                (c[7], &a.pow(4)),
                (c[8], &a.pow(3)),
                (c[9], &a.pow(2)),
                (c[10], a),
            ],
        )
    }
}

/// The three defining relations, scalar-ness of the Casimir and the Jacobi
/// identity, evaluated on the matrices.
pub fn verify_algebra(rep: &FockRep, spec: &AlgebraSpec, tol: f64) -> Result<VerificationReport> {
    let k = consts(rep, spec)?;
    let g = Gens::new(rep);
    let mut r = VerificationReport::new(tol);
    r.push(String::from("[A,B] = C"), &cm(&g.a, &g.b), &g.c);
    let acr = g.ac_rhs(&k);
    let bcr = g.bc_rhs(&k);
    r.push(String::from("[A,C]"), &cm(&g.a, &g.c), &acr);
    r.push(String::from("[B,C]"), &cm(&g.b, &g.c), &bcr);
    r.push(String::from("K scalar"), &g.casimir(&k), &g.i.scale(rep.casimir_value));
    r.push(
        String::from("Jacobi"),
        &cm(&g.a, &cm(&g.b, &g.c)),
        &cm(&g.b, &cm(&g.a, &g.c)),
    );
    Ok(r)
}

/// The 29 operator identities used to derive the Casimir, plus the
/// expansions of `[K,A]` and `[K,B]`, which must vanish.
///
/// A reference `(k)` inside an identity stands for the left-hand side of
/// identity `k`. Identities 8, 10, 13, 16, 20 and 25 are checked in their
/// corrected form.
pub fn verify_identities(rep: &FockRep, spec: &AlgebraSpec, tol: f64) -> Result<VerificationReport> {
    let k = consts(rep, spec)?;
    let g = Gens::new(rep);
    let (a, b, c) = (&g.a, &g.b, &g.c);
    let n = a.rows();
    let a2 = a.pow(2);
    let a3 = a.pow(3);
    let a4 = a.pow(4);
    let a5 = a.pow(5);
    let b2 = b.pow(2);
    let ab = ac(a, b);
    let a2b = ac(&a2, b);
    let a3b = ac(&a3, b);
    let ab2 = ac(a, &b2);
    let ca = ac(c, a);
    let ca2 = ac(c, &a2);
    let ca3 = ac(c, &a3);
    let ca4 = ac(c, &a4);
    let cb = ac(c, b);
    let cb2 = ac(c, &b2);
    let c_ab = ac(c, &ab);
    let c_a2b = ac(c, &a2b);
    let (eta, sigma) = (k.eta, k.sigma);

    let mut lhs: Vec<Matrix> = Vec::with_capacity(30);
    lhs.push(Matrix::zeros(0, 0));
    lhs.push(cm(a, b));
    lhs.push(cm(&a2, b));
    lhs.push(cm(&a3, b));
    lhs.push(cm(&a4, b));
    lhs.push(&(a * c) * a);
    lhs[5] = lhs[5].scale(2.0);
    lhs.push(&(&(&a2 * c) * a) + &(&(a * c) * &a2));
    lhs.push(cm(b, &ab));
    lhs.push(cm(&ab, a));
    lhs.push(cm(&ab, &a2));
    lhs.push(cm(&ab, &a3));
    lhs.push(&(&(&a3 * c) * a) + &(&(a * c) * &a3));
    lhs.push(cm(&a5, b));
    lhs.push((&(&a2 * c) * &a2).scale(2.0));
    lhs.push(cm(&a2b, a));
    lhs.push(cm(&a3b, a));
    lhs.push(cm(&b2, a));
    lhs.push(ac(a, &ac(b, c)));
    lhs.push(cm(&a3b, b));
    lhs.push(cm(&a2b, b));
    lhs.push(ac(b, &ca2));
    lhs.push(cm(&a2, &b2));
    lhs.push(cm(&a2, &ab));
    lhs.push(cm(&a2, &a2b));
    lhs.push(ac(b, &ca));
    lhs.push(cm(&c.pow(2), a));
    lhs.push(cm(&ab2, a));
    lhs.push(cm(&c.pow(2), b));
    lhs.push(cm(&ab2, b));
    lhs.push(cm(&ab, b));
    let l = &lhs;

    let mut rhs: Vec<Matrix> = alloc::vec![Matrix::zeros(0, 0); 30];
    rhs[1] = c.clone();
    rhs[2] = ca.clone();
    rhs[3] = lc(n, &[(1.0, &ca2), (0.5, &l[5])]);
    rhs[4] = lc(n, &[(1.0, &ca3), (1.0, &l[6])]);
    rhs[5] = lc(n, &[(1.0, &ca2), (-k.beta, &ca), (-k.delta, c)]);
    rhs[6] = lc(n, &[(1.0, &ca3), (-2.0 * k.beta, &ca2), (k.beta * k.beta - k.delta, &ca), (k.beta * k.delta, c)]);
    rhs[7] = cb.scale(-1.0);
    rhs[8] = ca.scale(-1.0);
    rhs[9] = lc(n, &[(-1.0, &ca2), (-1.0, &l[5])]);
    rhs[10] = lc(
        n,
        &[(-1.5, &ca3), (-1.5, &l[6]), (0.5 * k.beta, &ca2), (0.5 * k.beta, &l[5]), (0.5 * k.delta, &ca)],
    );
    rhs[11] = lc(n, &[(1.0, &ca4), (-k.delta, &l[3]), (k.beta, &l[10])]);
    rhs[12] = lc(n, &[(1.0, &ca4), (1.0, &l[11]), (0.5, &l[13])]);
    rhs[13] = lc(n, &[(1.0, &l[11]), (-k.beta, &l[6]), (-0.5 * k.delta, &l[5])]);
    rhs[14] = ca2.scale(-1.0);
    rhs[15] = ca3.scale(-1.0);
    rhs[16] = cb.scale(-1.0);
    rhs[17] = lc(n, &[(1.0, &c_ab), (k.tau, &l[3]), (k.alpha, &l[2]), (-k.beta, &l[7]), (k.gamma, c)]);
    rhs[18] = lc(n, &[(1.5, &l[20]), (-0.5 * k.beta, &l[24]), (-0.5 * k.delta, &cb)]);
    rhs[19] = l[24].clone();
    rhs[20] = lc(
        n,
        &[(1.0, &c_a2b), (k.beta, &l[21]), (-eta, &l[2]), (1.5 * k.tau, &l[23]), (-sigma, &l[22])],
    );
    rhs[21] = lc(n, &[(1.0, &c_ab), (k.tau, &l[3]), (k.alpha, &l[2]), (-k.beta, &l[7]), (k.gamma, &l[1])]);
    rhs[22] = lc(n, &[(1.0, &ca2), (1.0, &l[5])]);
    rhs[23] = lc(n, &[(1.0, &ca3), (1.0, &l[6])]);
    rhs[24] = lc(n, &[(1.0, &c_ab), (k.beta, &cb), (-eta, &l[1]), (-1.5 * k.tau, &l[14]), (sigma, &l[8])]);
    rhs[25] = lc(
        n,
        &[(-k.tau, &ca3), (-k.alpha, &ca2), (-k.beta, &c_ab), (-k.gamma, &ca), (-k.delta, &cb), (-2.0 * k.eps, c)],
    );
    rhs[26] = l[17].scale(-1.0);
    rhs[27] = lc(
        n,
        &[
            (-k.lambda, &ca4),
            (-k.mu, &ca3),
            (-k.nu, &ca2),
            (-k.xi, &ca),
            (k.beta, &cb2),
            (-eta, &cb),
            (1.5 * k.tau, &c_a2b),
            (-sigma, &c_ab),
            (-2.0 * k.zeta, c),
        ],
    );
    rhs[28] = cb2.clone();
    rhs[29] = cb.clone();

    let mut r = VerificationReport::new(tol);
    for i in 1..=29 {
        r.push(format!("identity {}", i), &l[i], &rhs[i]);
    }
    let cc = &k.c;
    let ka: [(f64, usize); 7] = [(1.0, 25), (cc[0], 15), (cc[1], 14), (cc[2], 26), (cc[3], 8), (cc[4], 16), (-cc[5], 1)];
    let kb: [(f64, usize); 10] = [
        (1.0, 27),
        (cc[0], 18),
        (cc[1], 19),
        (cc[2], 28),
        (cc[3], 29),
        (cc[6], 12),
        (cc[7], 4),
        (cc[8], 3),
        (cc[9], 2),
        (cc[10], 1),
    ];
    for (name, terms) in [("[K,A] expansion", &ka[..]), ("[K,B] expansion", &kb[..])] {
        let sum = lc(n, &terms.iter().map(|(w, i)| (*w, &rhs[*i])).collect::<Vec<_>>());
        let scale: f64 = terms.iter().map(|(w, i)| libm::fabs(*w) * rhs[*i].norm_inf()).sum();
        r.push_raw(String::from(name), sum.norm_inf() / (1.0 + scale));
    }
    Ok(r)
}
