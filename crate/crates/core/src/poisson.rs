//! Poisson brackets on polynomials in `A, B, C` and the exact classical
//! Casimir solve.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::algebra::{ac_relation, bc_relation, AlgebraSpec, CasimirCoefficients, Mode};
use crate::error::{Error, Result};
use crate::ratcore::{int, MultiPoly};

/// Polynomial in `A, B, C` whose coefficients may involve `H` and other
/// parameters.
pub type PhasePoly = MultiPoly;

const GENS: [&str; 3] = ["A", "B", "C"];

fn generator_brackets(spec: &AlgebraSpec) -> [(usize, usize, MultiPoly); 3] {
    [
        (0, 1, MultiPoly::var("C")),
        (0, 2, ac_relation(spec)),
        (1, 2, bc_relation(spec)),
    ]
}

/// `{p, q}` extended from the generator brackets as a biderivation.
pub fn bracket(p: &PhasePoly, q: &PhasePoly, spec: &AlgebraSpec) -> Result<PhasePoly> {
    if spec.mode != Mode::Classical {
        return Err(Error::WrongMode("classical"));
    }
    Ok(bracket_with(p, q, &generator_brackets(spec)))
}

fn bracket_with(p: &PhasePoly, q: &PhasePoly, gb: &[(usize, usize, MultiPoly); 3]) -> PhasePoly {
    let dp: Vec<MultiPoly> = GENS.iter().map(|g| p.derivative(g)).collect();
    let dq: Vec<MultiPoly> = GENS.iter().map(|g| q.derivative(g)).collect();
    let mut out = MultiPoly::zero();
    for (i, j, br) in gb {
        let w = &(&dp[*i] * &dq[*j]) - &(&dp[*j] * &dq[*i]);
        if !w.is_zero() {
            out = &out + &(&w * br);
        }
    }
    out
}

/// `{A,{B,C}} − {B,{A,C}}`; zero exactly when the derived constants satisfy
/// the closure relations.
pub fn jacobi_residual(spec: &AlgebraSpec) -> Result<PhasePoly> {
    if spec.mode != Mode::Classical {
        return Err(Error::WrongMode("classical"));
    }
    let gb = generator_brackets(spec);
    let (a, b) = (MultiPoly::var("A"), MultiPoly::var("B"));
    let l = bracket_with(&a, &gb[2].2, &gb);
    let r = bracket_with(&b, &gb[1].2, &gb);
    Ok(&l - &r)
}

/// The eleven monomials multiplying `c₁ … c₁₁` in the classical Casimir.
pub fn casimir_terms() -> [PhasePoly; 11] {
    let (a, b) = (MultiPoly::var("A"), MultiPoly::var("B"));
    let two = int(2);
    [
        (&a.pow(3) * &b).scale(&two),
        (&a.pow(2) * &b).scale(&two),
        (&a * &b.pow(2)).scale(&two),
        (&a * &b).scale(&two),
        b.pow(2),
        b.clone(),
        a.pow(5),
        a.pow(4),
        a.pow(3),
        a.pow(2),
        a,
    ]
}

pub fn casimir_polynomial(c: &CasimirCoefficients) -> PhasePoly {
    let mut k = MultiPoly::var("C").pow(2);
    for (ci, t) in c.c.iter().zip(casimir_terms().iter()) {
        k = &k + &(ci * t);
    }
    k
}

fn split_phase(p: &PhasePoly) -> BTreeMap<[u32; 3], MultiPoly> {
    let mut out: BTreeMap<[u32; 3], MultiPoly> = BTreeMap::new();
    for ca in p.coefficients_in("A").iter().enumerate() {
        for cb in ca.1.coefficients_in("B").iter().enumerate() {
            for cc in cb.1.coefficients_in("C").iter().enumerate() {
                if !cc.1.is_zero() {
                    out.insert([ca.0 as u32, cb.0 as u32, cc.0 as u32], cc.1.clone());
                }
            }
        }
    }
    out
}

/// Solves `{K,A} = {K,B} = 0` for `c₁ … c₁₁` by fraction-free elimination
/// over the polynomial coefficients.
pub fn solve_casimir(spec: &AlgebraSpec) -> Result<CasimirCoefficients> {
    if spec.mode != Mode::Classical {
        return Err(Error::WrongMode("classical"));
    }
    let gb = generator_brackets(spec);
    let terms = casimir_terms();
    let c2 = MultiPoly::var("C").pow(2);
    let mut rows: Vec<Vec<MultiPoly>> = Vec::new();
    for g in ["A", "B"] {
        let gen = MultiPoly::var(g);
        let base = split_phase(&bracket_with(&c2, &gen, &gb));
        let cols: Vec<_> = terms
            .iter()
            .map(|t| split_phase(&bracket_with(t, &gen, &gb)))
            .collect();
        let mut keys: Vec<[u32; 3]> = base.keys().copied().collect();
        for c in &cols {
            keys.extend(c.keys().copied());
        }
        keys.sort();
        keys.dedup();
        for k in keys {
            let mut row: Vec<MultiPoly> = cols
                .iter()
                .map(|c| c.get(&k).cloned().unwrap_or_default())
                .collect();
            row.push(-&base.get(&k).cloned().unwrap_or_default());
            rows.push(row);
        }
    }
    let x = solve_fraction_free(rows, 11)?;
    Ok(CasimirCoefficients { c: core::array::from_fn(|i| x[i].clone()) })
}

/// Bareiss elimination of an augmented system with `n` unknowns whose
/// solution is known to be polynomial.
pub(crate) fn solve_fraction_free(mut a: Vec<Vec<MultiPoly>>, n: usize) -> Result<Vec<MultiPoly>> {
    let m = a.len();
    let mut prev = MultiPoly::one();
    for k in 0..n {
        let piv = (k..m)
            .filter(|&i| !a[i][k].is_zero())
            .min_by_key(|&i| a[i][k].num_terms())
            .ok_or(Error::Singular("casimir system"))?;
        a.swap(k, piv);
        for i in k + 1..m {
            for j in k + 1..=n {
                let t = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.div_exact(&prev).ok_or(Error::InexactDivision)?;
            }
            a[i][k] = MultiPoly::zero();
        }
        prev = a[k][k].clone();
    }
    if a[n..].iter().any(|r| !r[n].is_zero()) {
        return Err(Error::Inconsistent);
    }
    let mut x: Vec<MultiPoly> = alloc::vec![MultiPoly::zero(); n];
    for k in (0..n).rev() {
        let mut r = a[k][n].clone();
        for j in k + 1..n {
            r = &r - &(&a[k][j] * &x[j]);
        }
        x[k] = r.div_exact(&a[k][k]).ok_or(Error::InexactDivision)?;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{casimir_coefficients, close_jacobi};
    use crate::ratcore::rat;

    fn spec() -> AlgebraSpec {
        AlgebraSpec::zero(Mode::Classical)
    }

    #[test]
    fn generator_examples() {
        let s = close_jacobi(&spec());
        let (a, b, c) = (MultiPoly::var("A"), MultiPoly::var("B"), MultiPoly::var("C"));
        assert_eq!(bracket(&a, &b, &s).unwrap(), c);
        assert_eq!(bracket(&a.pow(2), &b, &s).unwrap(), (&a * &c).scale(&int(2)));
        let mut l = spec();
        l.lambda = int(1);
        assert_eq!(bracket(&b, &c, &close_jacobi(&l)).unwrap(), a.pow(4));
        let mut q = spec();
        q.mode = Mode::Quantum;
        assert!(bracket(&a, &b, &q).is_err());
    }

    #[test]
    fn jacobi_zero_and_perturbed() {
        let mut s = spec();
        s.tau = int(2);
        s.beta = rat(1, 3);
        s.alpha = MultiPoly::var("H");
        s.gamma = MultiPoly::from_int(5);
        let closed = close_jacobi(&s);
        assert!(jacobi_residual(&closed).unwrap().is_zero());
        let mut bad = closed.clone();
        let d = bad.derived.as_mut().unwrap();
        d.omega = &d.omega + &MultiPoly::one();
        assert!(!jacobi_residual(&bad).unwrap().is_zero());
        assert!(jacobi_residual(&close_jacobi(&spec())).unwrap().is_zero());
    }

    #[test]
    fn casimir_delta_only() {
        let mut s = spec();
        s.delta = MultiPoly::from_int(3);
        let c = solve_casimir(&close_jacobi(&s)).unwrap();
        assert_eq!(c, casimir_coefficients(&s));
        assert_eq!(c.get(5), &MultiPoly::from_int(-3));
    }
}
