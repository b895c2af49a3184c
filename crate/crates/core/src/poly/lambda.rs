use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use super::base::BasePoly;
use super::partition::Partition;
use super::var::{Monomial, Var};
use crate::ring::{determinant, Ring};
use crate::Int;

/// Element `Σ_λ p_λ(x,y,z) S_λ(c)` of `Λ[x,y,z]`, in the Schur basis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LambdaPoly {
    terms: BTreeMap<Partition, BasePoly>,
}

/// Element of `Λ[x,y,z]` written in c-monomials: a multiset of indices
/// (stored as a partition) for each product `c_{k1} c_{k2} ...`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CPoly {
    terms: BTreeMap<Partition, BasePoly>,
}

type Expansion = Arc<Vec<(Partition, Int)>>;

fn schur_product_cache() -> &'static RwLock<HashMap<(Partition, Partition), Expansion>> {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, Partition), Expansion>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn monomial_cache() -> &'static RwLock<HashMap<Partition, Expansion>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, Expansion>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn jacobi_trudi_cache() -> &'static RwLock<HashMap<Partition, Expansion>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, Expansion>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached<K: Clone + Eq + std::hash::Hash>(
    cache: &RwLock<HashMap<K, Expansion>>,
    key: K,
    compute: impl FnOnce() -> Vec<(Partition, Int)>,
) -> Expansion {
    if let Some(hit) = cache.read().expect("cache poisoned").get(&key) {
        return hit.clone();
    }
    let value = Arc::new(compute());
    cache
        .write()
        .expect("cache poisoned")
        .entry(key)
        .or_insert(value)
        .clone()
}

/// Expansion of `S_μ(c)` into c-monomials, `det(c_{μ_i - i + j})`.
pub fn jacobi_trudi(mu: &Partition) -> Expansion {
    cached(jacobi_trudi_cache(), mu.clone(), || {
        let n = mu.len();
        let matrix: Vec<Vec<CPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let idx = mu.part(i) as i64 - i as i64 + j as i64;
                        CPoly::c_index(idx)
                    })
                    .collect()
            })
            .collect();
        determinant(&matrix)
            .terms
            .into_iter()
            .map(|(m, c)| (m, c.constant_term()))
            .collect()
    })
}

/// Expansion of `S_a S_b` in the Schur basis (Littlewood–Richardson numbers),
/// computed by expanding the smaller factor into c-monomials and applying Pieri.
pub fn schur_product(a: &Partition, b: &Partition) -> Expansion {
    let (big, small) = if (b.weight(), b.len()) > (a.weight(), a.len()) {
        (b, a)
    } else {
        (a, b)
    };
    cached(schur_product_cache(), (big.clone(), small.clone()), || {
        let mut acc: BTreeMap<Partition, Int> = BTreeMap::new();
        for (mono, coef) in jacobi_trudi(small).iter() {
            for (nu, k) in pieri_chain(big, mono.parts()) {
                *acc.entry(nu).or_default() += coef * k;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    })
}

/// Schur expansion of the c-monomial `c_{k1} c_{k2} ⋯` (indices as a multiset).
pub fn c_monomial_to_schur(mono: &Partition) -> Expansion {
    cached(monomial_cache(), mono.clone(), || {
        pieri_chain(&Partition::empty(), mono.parts())
    })
}

/// `S_start · c_{k1} · c_{k2} ⋯` in the Schur basis by iterated Pieri.
pub fn pieri_chain(start: &Partition, ks: &[u32]) -> Vec<(Partition, Int)> {
    let mut cur: BTreeMap<Partition, Int> = BTreeMap::from([(start.clone(), Int::one())]);
    for &k in ks {
        let mut next: BTreeMap<Partition, Int> = BTreeMap::new();
        for (lam, c) in &cur {
            for nu in lam.pieri(k) {
                *next.entry(nu).or_default() += c;
            }
        }
        cur = next;
    }
    cur.into_iter().collect()
}

impl LambdaPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_base(BasePoly::one())
    }

    pub fn from_base(p: BasePoly) -> Self {
        Self::term(Partition::empty(), p)
    }

    pub fn schur(lam: Partition) -> Self {
        Self::term(lam, BasePoly::one())
    }

    /// The generator `c_k = S_(k)`; `c_0 = 1` and negative indices give zero.
    pub fn c(k: i64) -> Self {
        match k {
            k if k < 0 => Self::zero(),
            k => Self::schur(Partition::row(k as u32)),
        }
    }

    pub fn term(lam: Partition, p: BasePoly) -> Self {
        let mut out = Self::zero();
        out.add_term(lam, p);
        out
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &BasePoly)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Partition, BasePoly)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, lam: &Partition) -> BasePoly {
        self.terms.get(lam).cloned().unwrap_or_default()
    }

    /// The c-free part (coefficient of `S_∅`).
    pub fn base_part(&self) -> BasePoly {
        self.coeff(&Partition::empty())
    }

    /// The polynomial as an element of `Z[x,y,z]` if it involves no `c`.
    pub fn as_base(&self) -> Option<BasePoly> {
        self.terms
            .keys()
            .all(Partition::is_empty)
            .then(|| self.base_part())
    }

    pub fn add_term(&mut self, lam: Partition, p: BasePoly) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(lam) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(p);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += p;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled_schur(&mut self, expansion: &[(Partition, Int)], coef: &BasePoly) {
        for (nu, k) in expansion {
            self.add_term(nu.clone(), coef.scale(k));
        }
    }

    /// Apply a map to every coefficient (must be additive for meaningful results).
    pub fn map_coeffs(&self, f: impl Fn(&BasePoly) -> BasePoly) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (lam, p) in &self.terms {
            out.add_term(lam.clone(), f(p));
        }
        out
    }

    pub fn map_shapes(&self, f: impl Fn(&Partition) -> Partition) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (lam, p) in &self.terms {
            out.add_term(f(lam), p.clone());
        }
        out
    }

    pub fn scale(&self, p: &BasePoly) -> LambdaPoly {
        self.map_coeffs(|q| q * p)
    }

    pub fn rename(&self, f: impl Fn(Var) -> Var) -> LambdaPoly {
        self.map_coeffs(|p| p.rename(&f))
    }

    /// Substitute base variables only; `c` is untouched.
    pub fn substitute_vars(&self, image: &dyn Fn(Var) -> Option<BasePoly>) -> LambdaPoly {
        self.map_coeffs(|p| p.substitute(image))
    }

    /// Total degrees `|λ| + deg(m)` appearing.
    pub fn degrees(&self) -> std::collections::BTreeSet<u32> {
        self.terms
            .iter()
            .flat_map(|(lam, p)| p.terms().map(move |(m, _)| lam.weight() + m.degree()))
            .collect()
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.degrees().iter().all(|&e| e == d)
    }

    pub fn degree(&self) -> Option<u32> {
        self.degrees().into_iter().next_back()
    }

    pub fn homogeneous_part(&self, d: u32) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (lam, p) in &self.terms {
            if lam.weight() <= d {
                out.add_term(lam.clone(), p.homogeneous_part(d - lam.weight()));
            }
        }
        out
    }

    pub fn variables(&self) -> std::collections::BTreeSet<Var> {
        self.terms.values().flat_map(BasePoly::variables).collect()
    }

    pub fn contains_var(&self, pred: impl Fn(Var) -> bool + Copy) -> bool {
        self.terms.values().any(|p| p.contains_var(pred))
    }

    pub fn to_cpoly(&self) -> CPoly {
        let mut out = CPoly::default();
        for (lam, p) in &self.terms {
            for (mono, k) in jacobi_trudi(lam).iter() {
                out.add_term(mono.clone(), p.scale(k));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> LambdaPoly {
        let mut out = LambdaPoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }
}

impl CPoly {
    /// `c_k` with `c_0 = 1`, zero for negative `k`.
    pub fn c_index(k: i64) -> CPoly {
        let mut out = CPoly::default();
        if k >= 0 {
            out.add_term(Partition::row(k as u32), BasePoly::one());
        }
        out
    }

    pub fn from_base(p: BasePoly) -> CPoly {
        let mut out = CPoly::default();
        out.add_term(Partition::empty(), p);
        out
    }

    pub fn add_term(&mut self, mono: Partition, p: BasePoly) {
        if p.is_zero() {
            return;
        }
        let slot = self.terms.entry(mono.clone()).or_default();
        *slot += p;
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BasePoly)> {
        self.terms.iter()
    }

    pub fn scale(&self, p: &BasePoly) -> CPoly {
        let mut out = CPoly::default();
        for (m, q) in &self.terms {
            out.add_term(m.clone(), q * p);
        }
        out
    }

    pub fn to_lambda(&self) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (mono, p) in &self.terms {
            out.add_scaled_schur(&c_monomial_to_schur(mono), p);
        }
        out
    }
}

impl Ring for CPoly {
    fn zero() -> Self {
        CPoly::default()
    }
    fn one() -> Self {
        CPoly::from_base(BasePoly::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, p) in &rhs.terms {
            out.add_term(m.clone(), p.clone());
        }
        out
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = CPoly::default();
        for (ma, pa) in &self.terms {
            for (mb, pb) in &rhs.terms {
                let mut parts = ma.parts().to_vec();
                parts.extend_from_slice(mb.parts());
                out.add_term(Partition::from_multiset(parts), pa * pb);
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        CPoly {
            terms: self.terms.iter().map(|(m, p)| (m.clone(), -p)).collect(),
        }
    }
}

impl Ring for LambdaPoly {
    fn zero() -> Self {
        LambdaPoly::zero()
    }
    fn one() -> Self {
        LambdaPoly::one()
    }
    fn is_zero(&self) -> bool {
        LambdaPoly::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl From<BasePoly> for LambdaPoly {
    fn from(p: BasePoly) -> Self {
        LambdaPoly::from_base(p)
    }
}

impl From<i64> for LambdaPoly {
    fn from(c: i64) -> Self {
        LambdaPoly::from_base(BasePoly::constant(c))
    }
}

impl AddAssign<&LambdaPoly> for LambdaPoly {
    fn add_assign(&mut self, rhs: &LambdaPoly) {
        for (lam, p) in &rhs.terms {
            self.add_term(lam.clone(), p.clone());
        }
    }
}

impl AddAssign for LambdaPoly {
    fn add_assign(&mut self, rhs: LambdaPoly) {
        for (lam, p) in rhs.terms {
            self.add_term(lam, p);
        }
    }
}

impl SubAssign<&LambdaPoly> for LambdaPoly {
    fn sub_assign(&mut self, rhs: &LambdaPoly) {
        for (lam, p) in &rhs.terms {
            self.add_term(lam.clone(), -p);
        }
    }
}

impl Add<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: &LambdaPoly) -> LambdaPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LambdaPoly {
    type Output = LambdaPoly;
    fn add(mut self, rhs: LambdaPoly) -> LambdaPoly {
        self += rhs;
        self
    }
}

impl Sub<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: &LambdaPoly) -> LambdaPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LambdaPoly {
    type Output = LambdaPoly;
    fn sub(mut self, rhs: LambdaPoly) -> LambdaPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        self.map_coeffs(|p| -p)
    }
}

impl Neg for LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        -&self
    }
}

impl Mul<&LambdaPoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: &LambdaPoly) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (la, pa) in &self.terms {
            for (lb, pb) in &rhs.terms {
                let coef = pa * pb;
                if coef.is_zero() {
                    continue;
                }
                if la.is_empty() {
                    out.add_term(lb.clone(), coef);
                } else if lb.is_empty() {
                    out.add_term(la.clone(), coef);
                } else {
                    out.add_scaled_schur(&schur_product(la, lb), &coef);
                }
            }
        }
        out
    }
}

impl Mul for LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: LambdaPoly) -> LambdaPoly {
        &self * &rhs
    }
}

impl Mul<&BasePoly> for &LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: &BasePoly) -> LambdaPoly {
        self.scale(rhs)
    }
}

impl fmt::Display for LambdaPoly {
    /// Text form accepted by the expression parser: `(p)*S[2,1] + ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (lam, p)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if lam.is_empty() {
                write!(f, "({p})")?;
            } else if *p == BasePoly::one() {
                write!(f, "S{lam}")?;
            } else {
                write!(f, "({p})*S{lam}")?;
            }
        }
        Ok(())
    }
}

/// Convenience: a monomial term `k · m · S_λ`.
pub fn lambda_term(lam: Partition, m: Monomial, k: i64) -> LambdaPoly {
    LambdaPoly::term(lam, BasePoly::term(m, Int::from(k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn s(v: &[u32]) -> LambdaPoly {
        LambdaPoly::schur(p(v))
    }

    #[test]
    fn small_products() {
        assert_eq!(&s(&[1]) * &s(&[1]), &s(&[2]) + &s(&[1, 1]));
        assert_eq!(&LambdaPoly::c(2) * &LambdaPoly::c(1), &s(&[3]) + &s(&[2, 1]));
        let f = &s(&[2, 1]) * &LambdaPoly::from_base(BasePoly::x(1));
        assert_eq!(&f * &LambdaPoly::one(), f);
    }

    #[test]
    fn jacobi_trudi_roundtrip() {
        for n in 0..=6 {
            for lam in Partition::all_of(n) {
                let back = LambdaPoly::schur(lam.clone()).to_cpoly().to_lambda();
                assert_eq!(back, LambdaPoly::schur(lam));
            }
        }
    }

    #[test]
    fn littlewood_richardson_sample() {
        // s21 * s21 = s42 + s411 + s33 + 2 s321 + s3111 + s222 + s2211
        let got = &s(&[2, 1]) * &s(&[2, 1]);
        let mut want = LambdaPoly::zero();
        for (v, k) in [
            (&[4, 2][..], 1),
            (&[4, 1, 1], 1),
            (&[3, 3], 1),
            (&[3, 2, 1], 2),
            (&[3, 1, 1, 1], 1),
            (&[2, 2, 2], 1),
            (&[2, 2, 1, 1], 1),
        ] {
            want += LambdaPoly::term(p(v), BasePoly::constant(k));
        }
        assert_eq!(got, want);
    }

    #[test]
    fn additive_inverse_and_like_terms() {
        let a = &s(&[1]) + &(-&s(&[1]));
        assert!(a.is_zero());
        let b = &s(&[1]).scale(&BasePoly::x(1)) + &s(&[1]).scale(&BasePoly::y(0));
        assert_eq!(b, s(&[1]).scale(&(&BasePoly::x(1) + &BasePoly::y(0))));
    }
}
