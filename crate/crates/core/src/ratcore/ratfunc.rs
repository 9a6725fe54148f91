use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::multipoly::MultiPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Quotient of two polynomials, kept with a denominator whose leading
/// coefficient is one. No polynomial gcd is taken; equality is decided by
/// cross multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let lc = den.leading_coefficient().recip();
        let (num, den) = (num.scale(&lc), den.scale(&lc));
        if let Some(q) = num.div_exact(&den) {
            return Ok(Self::from_poly(q));
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RationalFunction { num: p, den: MultiPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.as_constant().is_some()
    }

    pub fn as_polynomial(&self) -> Option<MultiPoly> {
        self.den.as_constant().map(|c| self.num.scale(&c.recip()))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        RationalFunction { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn subs(&self, bindings: &[(&str, MultiPoly)]) -> Result<Self> {
        Self::new(self.num.subs(bindings), self.den.subs(bindings))
    }

    pub fn eval(&self, values: &[(&str, Rational)]) -> Result<Rational> {
        let d = self.den.eval(values)?;
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.eval(values)? / d)
    }

    pub fn identically_equal(&self, o: &Self) -> bool {
        (&self.num * &o.den - &o.num * &self.den).is_zero()
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, o: &Self) -> bool {
        self.identically_equal(o)
    }
}

impl From<MultiPoly> for RationalFunction {
    fn from(p: MultiPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

fn build(num: MultiPoly, den: MultiPoly) -> RationalFunction {
    RationalFunction::new(num, den).expect("nonzero denominator")
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return build(&self.num + &o.num, self.den.clone());
        }
        build(&self.num * &o.den + &o.num * &self.den, &self.den * &o.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        build(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, o: &RationalFunction) -> RationalFunction {
        assert!(!o.num.is_zero(), "division by zero rational function");
        build(&self.num * &o.den, &self.den * &o.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: Self) -> Self {
        &self + &o
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: Self) -> Self {
        &self - &o
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: Self) -> Self {
        &self * &o
    }
}

impl Div for RationalFunction {
    type Output = RationalFunction;
    fn div(self, o: Self) -> Self {
        &self / &o
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> Self {
        -&self
    }
}
