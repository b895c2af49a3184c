use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::var::{Monomial, Var};
use crate::error::{Error, Result};
use crate::Int;

/// Polynomial in the variables `x_i, y_j, z` (and auxiliaries) with integer
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BasePoly {
    terms: BTreeMap<Monomial, Int>,
}

impl BasePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<Int>) -> Self {
        Self::term(Monomial::one(), c.into())
    }

    pub fn term(m: Monomial, c: Int) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn var(v: Var) -> Self {
        Self::term(Monomial::var(v), Int::one())
    }

    pub fn x(i: i32) -> Self {
        Self::var(Var::X(i))
    }

    pub fn y(i: i32) -> Self {
        Self::var(Var::Y(i))
    }

    pub fn z() -> Self {
        Self::var(Var::Z)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Int)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Int)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Int {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> Int {
        self.coeff(&Monomial::one())
    }

    /// Constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Int> {
        match self.terms.len() {
            0 => Some(Int::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Int) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &BasePoly, k: &Int) {
        if k.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * k);
        }
    }

    pub fn add_product(&mut self, a: &BasePoly, b: &BasePoly) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.mul(mb), ca * cb);
            }
        }
    }

    pub fn scale(&self, k: &Int) -> BasePoly {
        if k.is_zero() {
            return Self::zero();
        }
        BasePoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> BasePoly {
        BasePoly {
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    /// Maximal total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn homogeneous_part(&self, d: u32) -> BasePoly {
        BasePoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().map(|(v, _)| v))
            .collect()
    }

    pub fn contains_var(&self, pred: impl Fn(Var) -> bool) -> bool {
        self.terms.keys().any(|m| m.factors().any(|(v, _)| pred(v)))
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Rename variables (a ring endomorphism sending variables to variables).
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> BasePoly {
        let mut out = BasePoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.rename(&f), c.clone());
        }
        out
    }

    /// Ring homomorphism given by images of variables; `None` keeps the variable.
    pub fn substitute(&self, image: &dyn Fn(Var) -> Option<BasePoly>) -> BasePoly {
        let mut cache: BTreeMap<(Var, u32), BasePoly> = BTreeMap::new();
        let mut out = BasePoly::zero();
        for (m, c) in &self.terms {
            let mut acc = BasePoly::constant(c.clone());
            for (v, e) in m.factors() {
                let factor = cache.entry((v, e)).or_insert_with(|| match image(v) {
                    Some(p) => p.pow(e),
                    None => BasePoly::term(Monomial::power(v, e), Int::one()),
                });
                acc = &acc * &*factor;
            }
            out += acc;
        }
        out
    }

    pub fn swap_vars(&self, a: Var, b: Var) -> BasePoly {
        self.rename(|v| {
            if v == a {
                b
            } else if v == b {
                a
            } else {
                v
            }
        })
    }

    /// `(f - f|_{a<->b}) / (a - b)`.
    pub fn divided_difference(&self, a: Var, b: Var) -> BasePoly {
        let mut out = BasePoly::zero();
        for (m, c) in &self.terms {
            let (p, rest) = m.split_off(a);
            let (q, rest) = rest.split_off(b);
            if p == q {
                continue;
            }
            let (lo, d, coef) = if p > q {
                (q, p - q, c.clone())
            } else {
                (p, q - p, -c.clone())
            };
            let base = rest.mul(&Monomial::from_pairs([(a, lo), (b, lo)]));
            for k in 0..d {
                let mono = base.mul(&Monomial::from_pairs([(a, d - 1 - k), (b, k)]));
                out.add_term(mono, coef.clone());
            }
        }
        out
    }

    /// Exact quotient by `a - b`; fails if the division leaves a remainder.
    pub fn div_by_difference(&self, a: Var, b: Var) -> Result<BasePoly> {
        let at_b = self.substitute(&|v| (v == a).then(|| BasePoly::var(b)));
        if !at_b.is_zero() {
            return Err(Error::NotDivisible(format!("{self} by {a}-{b}")));
        }
        // Synthetic division in the variable `a`.
        let mut by_power: BTreeMap<u32, BasePoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(a);
            by_power.entry(e).or_default().add_term(rest, c.clone());
        }
        let top = by_power.keys().next_back().copied().unwrap_or(0);
        let mut quotient = BasePoly::zero();
        let mut carry = BasePoly::zero();
        let bpoly = BasePoly::var(b);
        for e in (1..=top).rev() {
            let coeff_e = by_power.remove(&e).unwrap_or_default() + &carry;
            quotient += coeff_e.mul_monomial(&Monomial::power(a, e - 1));
            carry = &coeff_e * &bpoly;
        }
        Ok(quotient)
    }

    pub fn pow(&self, e: u32) -> BasePoly {
        let mut out = BasePoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn evaluate(&self, value: &dyn Fn(Var) -> Int) -> Int {
        let mut total = Int::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.factors() {
                let x = value(v);
                for _ in 0..e {
                    t *= &x;
                }
            }
            total += t;
        }
        total
    }

    /// Exact division by a nonzero polynomial, using the leading monomial in
    /// the canonical (lex) order. Fails on a nonzero remainder.
    pub fn exact_div(&self, divisor: &BasePoly) -> Result<BasePoly> {
        let lead_of = |p: &BasePoly| -> Option<(Monomial, Int)> {
            p.terms
                .iter()
                .max_by(|a, b| lex_cmp(a.0, b.0))
                .map(|(m, c)| (m.clone(), c.clone()))
        };
        let (dm, dc) = lead_of(divisor).ok_or_else(|| Error::domain("division by zero"))?;
        let mut rem = self.clone();
        let mut quotient = BasePoly::zero();
        while let Some((rm, rc)) = lead_of(&rem) {
            let q_mono = monomial_quotient(&rm, &dm)
                .ok_or_else(|| Error::NotDivisible(format!("{self} by {divisor}")))?;
            if !(&rc % &dc).is_zero() {
                return Err(Error::NotDivisible(format!("{self} by {divisor}")));
            }
            let q_coef = &rc / &dc;
            let step = BasePoly::term(q_mono, q_coef);
            rem -= &(&step * divisor);
            quotient += step;
        }
        Ok(quotient)
    }
}

fn lex_cmp(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    let fa: Vec<_> = a.factors().collect();
    let fb: Vec<_> = b.factors().collect();
    // Pure lexicographic order with smaller variables dominant.
    for i in 0..fa.len().max(fb.len()) {
        match (fa.get(i), fb.get(i)) {
            (Some(&(va, ea)), Some(&(vb, eb))) => {
                if va != vb {
                    return vb.cmp(&va);
                }
                if ea != eb {
                    return ea.cmp(&eb);
                }
            }
            (Some(_), None) => return std::cmp::Ordering::Greater,
            (None, Some(_)) => return std::cmp::Ordering::Less,
            (None, None) => break,
        }
    }
    std::cmp::Ordering::Equal
}

fn monomial_quotient(num: &Monomial, den: &Monomial) -> Option<Monomial> {
    let mut pairs = Vec::new();
    for (v, e) in num.factors() {
        let d = den.exponent(v);
        if d > e {
            return None;
        }
        pairs.push((v, e - d));
    }
    if den.factors().any(|(v, _)| num.exponent(v) == 0) {
        return None;
    }
    Some(Monomial::from_pairs(pairs))
}

impl crate::ring::Ring for BasePoly {
    fn zero() -> Self {
        BasePoly::zero()
    }
    fn one() -> Self {
        BasePoly::one()
    }
    fn is_zero(&self) -> bool {
        BasePoly::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl From<i64> for BasePoly {
    fn from(c: i64) -> Self {
        BasePoly::constant(c)
    }
}

impl From<Var> for BasePoly {
    fn from(v: Var) -> Self {
        BasePoly::var(v)
    }
}

impl AddAssign<&BasePoly> for BasePoly {
    fn add_assign(&mut self, rhs: &BasePoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for BasePoly {
    fn add_assign(&mut self, rhs: BasePoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&BasePoly> for BasePoly {
    fn sub_assign(&mut self, rhs: &BasePoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl SubAssign for BasePoly {
    fn sub_assign(&mut self, rhs: BasePoly) {
        *self -= &rhs;
    }
}

impl Add<&BasePoly> for &BasePoly {
    type Output = BasePoly;
    fn add(self, rhs: &BasePoly) -> BasePoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add<&BasePoly> for BasePoly {
    type Output = BasePoly;
    fn add(mut self, rhs: &BasePoly) -> BasePoly {
        self += rhs;
        self
    }
}

impl Add for BasePoly {
    type Output = BasePoly;
    fn add(mut self, rhs: BasePoly) -> BasePoly {
        self += rhs;
        self
    }
}

impl Sub<&BasePoly> for &BasePoly {
    type Output = BasePoly;
    fn sub(self, rhs: &BasePoly) -> BasePoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for BasePoly {
    type Output = BasePoly;
    fn sub(mut self, rhs: BasePoly) -> BasePoly {
        self -= &rhs;
        self
    }
}

impl Neg for &BasePoly {
    type Output = BasePoly;
    fn neg(self) -> BasePoly {
        BasePoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for BasePoly {
    type Output = BasePoly;
    fn neg(self) -> BasePoly {
        -&self
    }
}

impl Mul<&BasePoly> for &BasePoly {
    type Output = BasePoly;
    fn mul(self, rhs: &BasePoly) -> BasePoly {
        let mut out = BasePoly::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Mul for BasePoly {
    type Output = BasePoly;
    fn mul(self, rhs: BasePoly) -> BasePoly {
        &self * &rhs
    }
}

impl fmt::Display for BasePoly {
    /// Text form accepted by the expression parser, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: i32) -> BasePoly {
        BasePoly::x(i)
    }

    #[test]
    fn divided_difference_matches_definition() {
        let f = &(&x(1).pow(3) * &x(2)) + &(&x(2) * &BasePoly::y(1));
        let got = f.divided_difference(Var::X(1), Var::X(2));
        let num = &f - &f.swap_vars(Var::X(1), Var::X(2));
        let back = &got * &(&x(1) - &x(2));
        assert_eq!(back, num);
    }

    #[test]
    fn division_by_linear_factor() {
        let f = &(&x(1) - &x(2)) * &(&x(1).pow(2) + &BasePoly::z());
        let q = f.div_by_difference(Var::X(1), Var::X(2)).unwrap();
        assert_eq!(q, &x(1).pow(2) + &BasePoly::z());
        assert!(x(1).div_by_difference(Var::X(1), Var::X(2)).is_err());
    }

    #[test]
    fn exact_division_general() {
        let a = &x(1) + &(&BasePoly::y(2) * &BasePoly::z());
        let b = &(&x(2) * &x(2)) - &BasePoly::constant(3);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert!((&prod + &BasePoly::one()).exact_div(&a).is_err());
    }

    #[test]
    fn display_is_readable() {
        let p = &(&x(-1) * &BasePoly::y(2)) - &BasePoly::constant(2);
        assert_eq!(p.to_string(), "x_-1*y2 - 2");
    }
}
