use alloc::string::String;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"3"`, `"-5/2"` or `"0.25"` style literals. The Unicode minus is
/// accepted too.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let t: String = s.trim().replace('\u{2212}', "-");
    if t.is_empty() {
        return None;
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((ip, fp)) = t.split_once('.') {
        let neg = ip.starts_with('-');
        let ip = ip.trim_start_matches(['-', '+']);
        if fp.is_empty() || !fp.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let whole: BigInt = if ip.is_empty() { BigInt::zero() } else { ip.parse().ok()? };
        let frac: BigInt = fp.parse().ok()?;
        let scale = num_traits::pow(BigInt::from(10), fp.len());
        let v = Rational::new(whole * &scale + frac, scale);
        return Some(if neg { -v } else { v });
    }
    let n: BigInt = t.parse().ok()?;
    Some(Rational::from_integer(n))
}

/// Exact square root when `r` is the square of a rational.
pub fn sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// The rational with the smallest denominator in the closed interval
/// `[lo, hi]`, found by walking the continued fractions of both ends.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo <= hi);
    if lo.is_positive() {
        simplest_positive(lo, hi)
    } else if hi.is_negative() {
        -simplest_positive(&-hi, &-lo)
    } else {
        Rational::zero()
    }
}

fn simplest_positive(lo: &Rational, hi: &Rational) -> Rational {
    let fl = lo.floor();
    if fl == *lo {
        return fl;
    }
    if fl.clone() + Rational::one() <= *hi {
        return fl + Rational::one();
    }
    let rest_lo = (hi - &fl).recip();
    let rest_hi = (lo - &fl).recip();
    fl + simplest_positive(&rest_lo, &rest_hi).recip()
}

pub(crate) fn lcm_of_denoms<'a>(it: impl Iterator<Item = &'a Rational>) -> BigInt {
    it.fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

pub(crate) fn gcd_of_numers<'a>(it: impl Iterator<Item = &'a Rational>) -> BigInt {
    it.fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()))
}
