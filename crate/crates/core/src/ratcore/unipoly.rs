use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{gcd_of_numers, lcm_of_denoms, Rational};

/// Dense univariate polynomial with coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| super::int(v)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `x - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + super::to_f64(c);
        }
        acc
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let inv = d.lead().recip();
        let mut q = vec![Rational::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &rem[k + dd] * &inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (Self::new(q), Self::new(rem))
    }

    /// Exact quotient, `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().recip())
    }

    /// Positive rational multiple with coprime integer coefficients. Signs of
    /// values are preserved, which is all root isolation needs.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = lcm_of_denoms(self.coeffs.iter());
        let scaled: Vec<Rational> = self
            .coeffs
            .iter()
            .map(|c| c * Rational::from_integer(l.clone()))
            .collect();
        let g = gcd_of_numers(scaled.iter()).abs();
        let g = Rational::from_integer(g);
        Self::new(scaled.into_iter().map(|c| c / &g).collect())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1.primitive();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's square-free decomposition: pairs `(f_k, k)` with
    /// `self = c · Π f_k^k`, each `f_k` monic, square-free and nonconstant.
    pub fn square_free(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let mut c = df.div_exact(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut k = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), k));
            }
            b = b.div_exact(&a).expect("gcd divides");
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_exact(&a).expect("gcd divides");
            d = &c - &b.derivative();
            k += 1;
        }
        out
    }

    /// `self(q(x))`.
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Self::constant(c.clone());
        }
        acc
    }

    /// `self(x + a)`.
    pub fn shift(&self, a: &Rational) -> Self {
        self.compose(&Self::new(vec![a.clone(), Rational::one()]))
    }

    pub fn to_string_in(&self, var: &str) -> String {
        let mut s = String::new();
        if self.is_zero() {
            s.push('0');
            return s;
        }
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let unit = a.is_one() && k > 0;
            if !unit {
                s.push_str(&alloc::format!("{}", a));
            }
            if k > 0 {
                if !unit {
                    s.push('*');
                }
                s.push_str(var);
                if k > 1 {
                    s.push_str(&alloc::format!("^{}", k));
                }
            }
        }
        s
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::new(v)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
pub(crate) use owned_ops;
owned_ops!(UniPoly);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::{int, rat};

    #[test]
    fn difference_of_squares() {
        let a = UniPoly::from_ints(&[1, 1]);
        let b = UniPoly::from_ints(&[-1, 1]);
        assert_eq!(&a * &b, UniPoly::from_ints(&[-1, 0, 1]));
        let c = UniPoly::from_ints(&[3, 2]);
        assert_eq!(&c * &c, UniPoly::from_ints(&[9, 12, 4]));
    }

    #[test]
    fn division() {
        let p = UniPoly::from_ints(&[-1, 0, 0, 1]);
        let d = UniPoly::from_ints(&[-1, 1]);
        let (q, r) = p.div_rem(&d);
        assert_eq!(q, UniPoly::from_ints(&[1, 1, 1]));
        assert!(r.is_zero());
        let (q, r) = UniPoly::from_ints(&[1, 0, 1]).div_rem(&UniPoly::from_ints(&[0, 2]));
        assert_eq!(q, UniPoly::new(vec![int(0), rat(1, 2)]));
        assert_eq!(r, UniPoly::from_ints(&[1]));
    }

    #[test]
    fn gcd_and_square_free() {
        let x1 = UniPoly::from_ints(&[-1, 1]);
        let x2 = UniPoly::from_ints(&[2, 1]);
        let p = &(&x1.pow(3) * &x2) * &UniPoly::from_ints(&[5]);
        let g = p.gcd(&x1.pow(2));
        assert_eq!(g, x1.pow(2));
        let sf = p.square_free();
        assert_eq!(sf, vec![(x2, 1), (x1, 3)]);
    }

    #[test]
    fn shift_and_display() {
        let p = UniPoly::from_ints(&[-1, 0, 1]);
        assert_eq!(p.shift(&int(1)), UniPoly::from_ints(&[0, 2, 1]));
        assert_eq!(p.to_string_in("N"), "N^2 - 1");
        assert_eq!(UniPoly::new(vec![rat(1, 2), int(-3)]).to_string_in("E"), "-3*E + 1/2");
    }
}
