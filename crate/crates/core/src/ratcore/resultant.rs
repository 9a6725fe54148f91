use alloc::vec;
use alloc::vec::Vec;

use super::multipoly::MultiPoly;
use super::rational::Rational;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Polynomial in an outer indeterminate whose coefficients are univariate
/// polynomials in an inner one. Used as `Q[E][u]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyOverPoly {
    coeffs: Vec<UniPoly>,
}

impl PolyOverPoly {
    pub fn new(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        PolyOverPoly { coeffs }
    }

    /// Splits a polynomial in `outer` and `inner` into this form.
    pub fn from_multi(p: &MultiPoly, outer: &str, inner: &str) -> Result<Self> {
        let cs = p.coefficients_in(outer);
        let coeffs = cs
            .iter()
            .map(|c| c.to_unipoly(inner))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn to_multi(&self, outer: &str, inner: &str) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        let o = MultiPoly::var(outer);
        for (k, c) in self.coeffs.iter().enumerate() {
            acc = &acc + &(&MultiPoly::from_unipoly(c, inner) * &o.pow(k as u32));
        }
        acc
    }

    pub fn zero() -> Self {
        PolyOverPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> &UniPoly {
        self.coeffs.last().expect("nonzero")
    }

    /// Specializes the inner indeterminate.
    pub fn eval_inner(&self, e: &Rational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c.eval(e)).collect())
    }

    /// Monic gcd of the coefficients (the content in `Q[E]`).
    pub fn content(&self) -> UniPoly {
        self.coeffs
            .iter()
            .fold(UniPoly::zero(), |g, c| g.gcd(c))
    }

    fn scale_down(&self, c: &UniPoly) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|x| x.div_exact(c).expect("content divides"))
                .collect(),
        )
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale_down(&self.content())
    }

    fn mul_inner(&self, c: &UniPoly) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Pseudo-remainder: `lc(d)^k · self = q·d + r` with `deg r < deg d`.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("nonzero divisor");
        let mut r = self.clone();
        let ld = d.lead().clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.lead().clone();
            let mut next = r.mul_inner(&ld).coeffs;
            for (j, c) in d.coeffs.iter().enumerate() {
                next[dr - dd + j] = &next[dr - dd + j] - &(&lr * c);
            }
            next.pop();
            r = Self::new(next);
        }
        r
    }

    /// Exact quotient in `Q[E][u]`; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let mut r = self.clone();
        let ld = d.lead().clone();
        let mut q = vec![UniPoly::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                return None;
            }
            let c = r.lead().div_exact(&ld)?;
            let mut next = r.coeffs.clone();
            for (j, x) in d.coeffs.iter().enumerate() {
                next[dr - dd + j] = &next[dr - dd + j] - &(&c * x);
            }
            debug_assert!(next[dr].is_zero());
            q[dr - dd] = c;
            r = Self::new(next);
        }
        Some(Self::new(q))
    }

    /// Gcd over `Q[E][u]`, made primitive with a monic content factor.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.primitive_part().mul_inner(&o.content());
        }
        if o.is_zero() {
            return self.primitive_part().mul_inner(&self.content());
        }
        let c = self.content().gcd(&o.content());
        let (mut a, mut b) = (self.primitive_part(), o.primitive_part());
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.mul_inner(&c)
    }
}

/// Sylvester resultant in the outer indeterminate, computed by
/// fraction-free (Bareiss) elimination over `Q[E]`.
pub fn resultant(p: &PolyOverPoly, q: &PolyOverPoly) -> Result<UniPoly> {
    match (p.degree(), q.degree()) {
        (None, None) => Err(Error::BothZero),
        (None, _) | (_, None) => Ok(UniPoly::zero()),
        (Some(0), Some(n)) => Ok(p.coeffs[0].pow(n as u32)),
        (Some(m), Some(0)) => Ok(q.coeffs[0].pow(m as u32)),
        (Some(m), Some(n)) => {
            let size = m + n;
            let mut a = vec![vec![UniPoly::zero(); size]; size];
            for i in 0..n {
                for (j, c) in p.coeffs.iter().rev().enumerate() {
                    a[i][i + j] = c.clone();
                }
            }
            for i in 0..m {
                for (j, c) in q.coeffs.iter().rev().enumerate() {
                    a[n + i][i + j] = c.clone();
                }
            }
            Ok(bareiss_det(a))
        }
    }
}

pub(crate) fn bareiss_det(mut a: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = a.len();
    let mut sign = false;
    let mut prev = UniPoly::one();
    for k in 0..n {
        let Some(piv) = (k..n)
            .filter(|&i| !a[i][k].is_zero())
            .min_by_key(|&i| a[i][k].degree())
        else {
            return UniPoly::zero();
        };
        if piv != k {
            a.swap(piv, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = UniPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(c0: &[i64], c1: &[i64]) -> PolyOverPoly {
        PolyOverPoly::new(vec![UniPoly::from_ints(c0), UniPoly::from_ints(c1)])
    }

    #[test]
    fn linear_resultants() {
        // u - 1 and u - E
        let p = lin(&[-1], &[1]);
        let q = lin(&[0, -1], &[1]);
        let r = resultant(&p, &q).unwrap();
        assert!(r == UniPoly::from_ints(&[-1, 1]) || r == UniPoly::from_ints(&[1, -1]));
        assert!(resultant(&lin(&[0], &[1]), &lin(&[0], &[1])).unwrap().is_zero());
        assert!(resultant(&PolyOverPoly::zero(), &PolyOverPoly::zero()).is_err());
    }

    #[test]
    fn quadratic_against_direct_formula() {
        // res_u(u^2 + E, u - 2) = 4 + E
        let p = PolyOverPoly::new(vec![UniPoly::from_ints(&[0, 1]), UniPoly::zero(), UniPoly::one()]);
        let q = lin(&[-2], &[1]);
        let r = resultant(&p, &q).unwrap();
        assert_eq!(r, UniPoly::from_ints(&[4, 1]));
    }

    #[test]
    fn gcd_with_content() {
        // (E-1)(u-E)(u+1) and (E-1)(u-E)(u+2)
        let g0 = lin(&[0, -1], &[1]);
        let c = UniPoly::from_ints(&[-1, 1]);
        let a = mul(&mul(&g0, &lin(&[1], &[1])), &PolyOverPoly::new(vec![c.clone()]));
        let b = mul(&mul(&g0, &lin(&[2], &[1])), &PolyOverPoly::new(vec![c.clone()]));
        let g = a.gcd(&b);
        let expect = mul(&g0, &PolyOverPoly::new(vec![c]));
        assert!(g.div_exact(&expect).is_some() && expect.div_exact(&g).is_some());
        let cof = a.div_exact(&g).unwrap();
        assert_eq!(cof.degree(), Some(1));
        assert!(resultant(&cof, &b.div_exact(&g).unwrap()).unwrap().degree() == Some(0));
    }

    fn mul(a: &PolyOverPoly, b: &PolyOverPoly) -> PolyOverPoly {
        let mut v = vec![UniPoly::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + &(x * y);
            }
        }
        PolyOverPoly::new(v)
    }
}
