use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::unipoly::{owned_ops, UniPoly};
use crate::error::{Error, Result};

type Vars = Arc<Vec<String>>;

/// Sparse polynomial over named indeterminates.
///
/// Arithmetic through the operator traits merges indeterminate lists, so
/// `x + y` is well defined whatever lists the operands carry. [`poly_arith`]
/// is the strict form that insists on equal lists.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Vec<u32>, Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(p: &MultiPoly, q: &MultiPoly, op: PolyOp) -> Result<MultiPoly> {
    if p.vars != q.vars {
        return Err(Error::ArityMismatch {
            left: p.vars.join(","),
            right: q.vars.join(","),
        });
    }
    Ok(match op {
        PolyOp::Add => p + q,
        PolyOp::Sub => p - q,
        PolyOp::Mul => p * q,
    })
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::zero_in(Arc::new(Vec::new()))
    }

    fn zero_in(vars: Vars) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn with_vars(names: &[&str]) -> Self {
        Self::zero_in(Arc::new(names.iter().map(|s| s.to_string()).collect()))
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(super::int(n))
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The polynomial consisting of the single indeterminate `name`.
    pub fn var(name: &str) -> Self {
        let mut p = Self::with_vars(&[name]);
        p.terms.insert(vec![1], Rational::one());
        p
    }

    /// Builds `Σ c · Π x_i^{e_i}` over the given indeterminates.
    pub fn from_terms(names: &[&str], terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::with_vars(names);
        for (e, c) in terms {
            assert_eq!(e.len(), names.len(), "exponent arity");
            p.add_term(e, c);
        }
        p
    }

    pub fn from_unipoly(u: &UniPoly, name: &str) -> Self {
        Self::from_terms(
            &[name],
            u.coeffs().iter().enumerate().map(|(k, c)| (vec![k as u32], c.clone())),
        )
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value of a polynomial without indeterminates (in use).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.iter().all(|&k| k == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Names of indeterminates with a nonzero exponent somewhere.
    pub fn used_vars(&self) -> Vec<String> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|e| e[*i] > 0))
            .map(|(_, v)| v.clone())
            .collect()
    }

    pub fn depends_on(&self, name: &str) -> bool {
        self.degree_in(name) > 0
    }

    /// Drops indeterminates that do not occur.
    pub fn trim(&self) -> Self {
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect();
        if keep.len() == self.vars.len() {
            return self.clone();
        }
        let vars: Vec<String> = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let mut p = Self::zero_in(Arc::new(vars));
        for (e, c) in &self.terms {
            p.terms.insert(keep.iter().map(|&i| e[i]).collect(), c.clone());
        }
        p
    }

    /// Re-expresses `self` over `target`, which must contain every used
    /// indeterminate of `self`.
    fn embed(&self, target: &Vars) -> Self {
        if Arc::ptr_eq(&self.vars, target) || *self.vars == **target {
            return MultiPoly { vars: target.clone(), terms: self.terms.clone() };
        }
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v))
            .collect();
        let mut p = Self::zero_in(target.clone());
        for (e, c) in &self.terms {
            let mut ne = vec![0u32; target.len()];
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    ne[map[i].expect("indeterminate missing from target")] = k;
                }
            }
            p.terms.insert(ne, c.clone());
        }
        p
    }

    fn merged_vars(a: &Vars, b: &Vars) -> Vars {
        if Arc::ptr_eq(a, b) || a == b {
            return a.clone();
        }
        if b.iter().all(|v| a.contains(v)) {
            return a.clone();
        }
        if a.iter().all(|v| b.contains(v)) {
            return b.clone();
        }
        let mut v: Vec<String> = (**a).clone();
        for x in b.iter() {
            if !v.contains(x) {
                v.push(x.clone());
            }
        }
        Arc::new(v)
    }

    fn unify(a: &Self, b: &Self) -> (Self, Self) {
        let vars = Self::merged_vars(&a.vars, &b.vars);
        (a.embed(&vars), b.embed(&vars))
    }

    /// Extends the indeterminate list (useful before strict arithmetic).
    pub fn extend_vars(&self, names: &[&str]) -> Self {
        let extra: Vars = Arc::new(names.iter().map(|s| s.to_string()).collect());
        self.embed(&Self::merged_vars(&self.vars, &extra))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero_in(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one().embed(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = &r * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        r
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        match self.index_of(name) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Coefficients of `name^k`, ascending in `k`, as polynomials in the
    /// remaining indeterminates.
    pub fn coefficients_in(&self, name: &str) -> Vec<MultiPoly> {
        let Some(i) = self.index_of(name) else {
            return vec![self.clone()];
        };
        let rest: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let rest = Arc::new(rest);
        let deg = self.degree_in(name) as usize;
        let mut out = vec![Self::zero_in(rest.clone()); deg + 1];
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne.remove(i) as usize;
            out[k].terms.insert(ne, c.clone());
        }
        out
    }

    pub fn coefficient_of(&self, name: &str, k: u32) -> MultiPoly {
        self.coefficients_in(name)
            .into_iter()
            .nth(k as usize)
            .unwrap_or_else(Self::zero)
    }

    pub fn derivative(&self, name: &str) -> Self {
        let mut p = Self::zero_in(self.vars.clone());
        let Some(i) = self.index_of(name) else {
            return p;
        };
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            p.add_term(ne, c * super::int(e[i] as i64));
        }
        p
    }

    /// Strict substitution: every bound name must be an indeterminate of
    /// `self`.
    pub fn substitute(&self, bindings: &[(&str, MultiPoly)]) -> Result<Self> {
        for (n, _) in bindings {
            if self.index_of(n).is_none() {
                return Err(Error::UnknownSymbol(n.to_string()));
            }
        }
        Ok(self.subs(bindings))
    }

    /// Substitution that ignores names absent from `self`.
    pub fn subs(&self, bindings: &[(&str, MultiPoly)]) -> Self {
        let bound: Vec<(usize, &MultiPoly)> = bindings
            .iter()
            .filter_map(|(n, v)| self.index_of(n).map(|i| (i, v)))
            .collect();
        if bound.is_empty() {
            return self.clone();
        }
        let kept: Vec<usize> = (0..self.vars.len())
            .filter(|i| !bound.iter().any(|(b, _)| b == i))
            .collect();
        let mut target: Vars = Arc::new(kept.iter().map(|&i| self.vars[i].clone()).collect());
        for (_, v) in &bound {
            target = Self::merged_vars(&target, &v.vars);
        }
        let pos: Vec<usize> = kept
            .iter()
            .map(|&i| target.iter().position(|t| *t == self.vars[i]).unwrap())
            .collect();
        let images: Vec<MultiPoly> = bound.iter().map(|(_, v)| v.embed(&target)).collect();
        let mut powers: Vec<Vec<MultiPoly>> = vec![Vec::new(); bound.len()];
        let mut out = Self::zero_in(target.clone());
        for (e, c) in &self.terms {
            let mut mono = vec![0u32; target.len()];
            for (j, &i) in kept.iter().enumerate() {
                mono[pos[j]] = e[i];
            }
            let mut term = Self::zero_in(target.clone());
            term.terms.insert(mono, c.clone());
            for (bi, (i, _)) in bound.iter().enumerate() {
                let k = e[*i] as usize;
                if k == 0 {
                    continue;
                }
                let pw = &mut powers[bi];
                if pw.is_empty() {
                    pw.push(Self::one().embed(&target));
                }
                while pw.len() <= k {
                    let next = &pw[pw.len() - 1] * &images[bi];
                    pw.push(next);
                }
                term = &term * &pw[k];
            }
            out = &out + &term;
        }
        out
    }

    /// Substitutes rational values for the given names.
    pub fn subs_values(&self, values: &[(&str, Rational)]) -> Self {
        let b: Vec<(&str, MultiPoly)> = values
            .iter()
            .map(|(n, v)| (*n, MultiPoly::constant(v.clone())))
            .collect();
        self.subs(&b)
    }

    /// Full evaluation; fails if some indeterminate in use stays unbound.
    pub fn eval(&self, values: &[(&str, Rational)]) -> Result<Rational> {
        let r = self.subs_values(values);
        r.as_constant()
            .ok_or_else(|| Error::NotNumeric(r.used_vars().join(",")))
    }

    pub fn to_unipoly(&self, name: &str) -> Result<UniPoly> {
        let i = self.index_of(name);
        let mut c = vec![Rational::zero(); self.degree_in(name) as usize + 1];
        for (e, v) in &self.terms {
            for (j, &k) in e.iter().enumerate() {
                if Some(j) != i && k > 0 {
                    return Err(Error::NotNumeric(self.vars[j].clone()));
                }
            }
            let k = i.map(|i| e[i]).unwrap_or(0) as usize;
            c[k] = v.clone();
        }
        Ok(UniPoly::new(c))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        let mut p = Self::zero_in(self.vars.clone());
        for (e, c) in &self.terms {
            p.add_term(e.clone(), f(c));
        }
        p
    }

    /// Leading term in lexicographic order of exponent vectors.
    fn leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    /// Exact quotient over Q, `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (mut r, d) = Self::unify(self, d);
        let (de, dc) = d.leading().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut q = Self::zero_in(r.vars.clone());
        while let Some((e, c)) = r.leading().map(|(e, c)| (e.clone(), c.clone())) {
            if e.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = e.iter().zip(&de).map(|(a, b)| a - b).collect();
            let qc = c / &dc;
            let mut t = Self::zero_in(r.vars.clone());
            t.terms.insert(qe.clone(), qc.clone());
            r = &r - &(&t * &d);
            q.add_term(qe, qc);
        }
        Some(q)
    }

    pub fn to_string_with(&self, order_desc: bool) -> String {
        let mut s = String::new();
        let it: Vec<(&Vec<u32>, &Rational)> = if order_desc {
            self.terms.iter().rev().collect()
        } else {
            self.terms.iter().collect()
        };
        for (e, c) in it {
            let neg = c.is_negative();
            let a = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut parts: Vec<String> = Vec::new();
            if !a.is_one() || e.iter().all(|&k| k == 0) {
                parts.push(alloc::format!("{}", a));
            }
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => parts.push(self.vars[i].clone()),
                    _ => parts.push(alloc::format!("{}^{}", self.vars[i], k)),
                }
            }
            s.push_str(&parts.join("*"));
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

impl Default for MultiPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, o: &Self) -> bool {
        if self.vars == o.vars {
            return self.terms == o.terms;
        }
        (self - o).is_zero()
    }
}

impl Eq for MultiPoly {}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<&Rational> for MultiPoly {
    fn from(c: &Rational) -> Self {
        Self::constant(c.clone())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(true))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        let (mut a, b) = MultiPoly::unify(self, o);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        let (mut a, b) = MultiPoly::unify(self, o);
        for (e, c) in b.terms {
            a.add_term(e, -c);
        }
        a
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        let (a, b) = MultiPoly::unify(self, o);
        let mut p = MultiPoly::zero_in(a.vars.clone());
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                p.add_term(e, ca * cb);
            }
        }
        p
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

owned_ops!(MultiPoly);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratcore::{int, rat};

    fn n() -> MultiPoly {
        MultiPoly::var("N")
    }

    #[test]
    fn strict_arith() {
        let one = MultiPoly::one().extend_vars(&["N"]);
        let a = poly_arith(&n(), &one, PolyOp::Add).unwrap();
        let b = poly_arith(&n(), &one, PolyOp::Sub).unwrap();
        let p = poly_arith(&a, &b, PolyOp::Mul).unwrap();
        assert_eq!(p, &n().pow(2) - &MultiPoly::one());
        assert!(poly_arith(&n(), &MultiPoly::var("x"), PolyOp::Add).is_err());
        assert_eq!(poly_arith(&p, &MultiPoly::with_vars(&["N"]), PolyOp::Add).unwrap(), p);
    }

    #[test]
    fn substitution() {
        let p = &n().pow(2) - &MultiPoly::one();
        let x1 = &MultiPoly::var("x") + &MultiPoly::one();
        let q = p.substitute(&[("N", x1)]).unwrap();
        let x = MultiPoly::var("x");
        assert_eq!(q, &x.pow(2) + &x.scale(&int(2)));
        assert!(p.substitute(&[("y", MultiPoly::one())]).is_err());
        assert_eq!(p.eval(&[("N", int(3))]).unwrap(), int(8));
        assert!(p.eval(&[]).is_err());
    }

    #[test]
    fn division_and_coefficients() {
        let x = MultiPoly::var("x");
        let y = MultiPoly::var("y");
        let a = &(&x + &y) * &(&x - &y.scale(&rat(1, 2)));
        assert_eq!(a.div_exact(&(&x + &y)).unwrap(), &x - &y.scale(&rat(1, 2)));
        assert!(a.div_exact(&(&x + &MultiPoly::one())).is_none());
        let c = a.coefficients_in("x");
        assert_eq!(c.len(), 3);
        assert_eq!(c[2], MultiPoly::one());
        assert_eq!(c[1], y.scale(&rat(1, 2)));
        assert_eq!(a.derivative("y"), &x.scale(&rat(1, 2)) - &y);
    }

    #[test]
    fn display() {
        let x = MultiPoly::var("x");
        let p = &(&x.pow(2).scale(&int(3)) * &MultiPoly::var("u")) - &MultiPoly::constant(rat(1, 2));
        assert_eq!(p.to_string(), "3*x^2*u - 1/2");
        assert_eq!(MultiPoly::zero().to_string(), "0");
    }
}
