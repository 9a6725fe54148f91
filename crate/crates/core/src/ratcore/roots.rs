use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{simplest_between, to_f64, Rational};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Isolating interval `(lo, hi]` of a real root, or a point interval when
/// the root is known exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct RealRoot {
    pub lo: Rational,
    pub hi: Rational,
    pub multiplicity: usize,
    pub exact: Option<Rational>,
}

impl RealRoot {
    fn exact(r: Rational, multiplicity: usize) -> Self {
        RealRoot { lo: r.clone(), hi: r.clone(), multiplicity, exact: Some(r) }
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    /// The exact value when known, otherwise the interval midpoint.
    pub fn value(&self) -> Rational {
        self.exact.clone().unwrap_or_else(|| self.midpoint())
    }

    pub fn approx(&self) -> f64 {
        to_f64(&self.value())
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

pub const DEFAULT_WIDTH_EXP: u32 = 12;

fn default_width() -> Rational {
    Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), DEFAULT_WIDTH_EXP as usize))
}

/// Real roots of `p` in the closed interval `[lo, hi]`, isolated to width
/// `10^-12`.
pub fn real_roots(p: &UniPoly, lo: &Rational, hi: &Rational) -> Result<Vec<RealRoot>> {
    real_roots_with_width(p, lo, hi, &default_width())
}

pub fn real_roots_with_width(
    p: &UniPoly,
    lo: &Rational,
    hi: &Rational,
    width: &Rational,
) -> Result<Vec<RealRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if lo > hi {
        return Err(Error::Invalid(alloc::format!("empty interval [{}, {}]", lo, hi)));
    }
    let mut out = Vec::new();
    for (f, k) in p.square_free() {
        isolate_square_free(&f, k, lo, hi, width, &mut out);
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(out)
}

/// Cauchy bound: every complex root has modulus below the returned value.
pub fn root_bound(p: &UniPoly) -> Rational {
    let lead = p.lead().abs();
    let n = p.degree().unwrap_or(0);
    let m = p.coeffs()[..n]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    m + Rational::one()
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`.
pub fn count_roots_open(p: &UniPoly, a: &Rational, b: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if a >= b {
        return Ok(0);
    }
    let sf = square_free_part(p);
    let seq = sturm_sequence(&sf);
    let mut n = variations(&seq, a) - variations(&seq, b);
    if sf.eval(b).is_zero() {
        n -= 1;
    }
    Ok(n)
}

fn square_free_part(p: &UniPoly) -> UniPoly {
    if p.degree().unwrap_or(0) == 0 {
        return p.clone();
    }
    p.div_exact(&p.gcd(&p.derivative())).expect("gcd divides")
}

pub(crate) fn sturm_sequence(f: &UniPoly) -> Vec<UniPoly> {
    let mut seq = alloc::vec![f.primitive()];
    let d = f.derivative().primitive();
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        if r.is_zero() {
            break;
        }
        seq.push((-&r).primitive());
    }
    seq
}

fn sign(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(seq: &[UniPoly], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for p in seq {
        let s = sign(&p.eval(x));
        if s != 0 {
            if last != 0 && s != last {
                n += 1;
            }
            last = s;
        }
    }
    n
}

fn isolate_square_free(
    f: &UniPoly,
    mult: usize,
    lo: &Rational,
    hi: &Rational,
    width: &Rational,
    out: &mut Vec<RealRoot>,
) {
    if f.degree() == Some(1) {
        let r = -f.coeff(0) / f.coeff(1);
        if &r >= lo && &r <= hi {
            out.push(RealRoot::exact(r, mult));
        }
        return;
    }
    if f.eval(lo).is_zero() {
        out.push(RealRoot::exact(lo.clone(), mult));
    }
    if lo == hi {
        return;
    }
    let seq = sturm_sequence(f);
    let two = Rational::from_integer(BigInt::from(2));
    let mut stack = alloc::vec![(lo.clone(), hi.clone(), variations(&seq, lo), variations(&seq, hi))];
    while let Some((a, b, va, vb)) = stack.pop() {
        let n = va - vb;
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(refine(f, a, b, mult, width));
            continue;
        }
        let m = (&a + &b) / &two;
        let vm = variations(&seq, &m);
        stack.push((a, m.clone(), va, vm));
        stack.push((m, b, vm, vb));
    }
}

fn refine(f: &UniPoly, mut a: Rational, mut b: Rational, mult: usize, width: &Rational) -> RealRoot {
    if f.eval(&b).is_zero() {
        return RealRoot::exact(b, mult);
    }
    let two = Rational::from_integer(BigInt::from(2));
    let sb = sign(&f.eval(&b));
    while &(&b - &a) > width {
        let m = (&a + &b) / &two;
        let sm = sign(&f.eval(&m));
        if sm == 0 {
            return RealRoot::exact(m, mult);
        }
        if sm == sb {
            b = m;
        } else {
            a = m;
        }
    }
    let q = simplest_between(&a, &b);
    if q > a && f.eval(&q).is_zero() {
        return RealRoot::exact(q, mult);
    }
    RealRoot { lo: a, hi: b, multiplicity: mult, exact: None }
}
