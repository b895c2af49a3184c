use super::base::BasePoly;
use super::lambda::LambdaPoly;
use super::partition::Partition;
use super::var::Var;
use crate::error::{Error, Result};
use crate::ring::{determinant, Ring};
use crate::Int;

/// Truncated multiplicative series `1 + g_1 + g_2 + ⋯ + g_D`, where `g_k` is
/// meant to be homogeneous of degree `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChernSeries<T> {
    components: Vec<T>,
}

impl<T: Ring> ChernSeries<T> {
    pub fn one(bound: usize) -> Self {
        let mut components = vec![T::zero(); bound + 1];
        components[0] = T::one();
        ChernSeries { components }
    }

    /// Components `[g_0, …, g_D]`; `g_0` must be one.
    pub fn from_components(components: Vec<T>) -> Result<Self> {
        match components.first() {
            Some(g0) if *g0 == T::one() => Ok(ChernSeries { components }),
            _ => Err(Error::domain("a Chern series must start with 1")),
        }
    }

    /// `1 + t·a` for a degree-one element `a`.
    pub fn linear(a: T, bound: usize) -> Self {
        let mut s = Self::one(bound);
        if bound >= 1 {
            s.components[1] = a;
        }
        s
    }

    pub fn bound(&self) -> usize {
        self.components.len() - 1
    }

    pub fn components(&self) -> &[T] {
        &self.components
    }

    /// Component `k`: zero for negative `k`, an error beyond the bound.
    pub fn get(&self, k: i64) -> Result<T> {
        if k < 0 {
            return Ok(T::zero());
        }
        self.components
            .get(k as usize)
            .cloned()
            .ok_or(Error::DegreeBound { needed: k as usize, bound: self.bound() })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let bound = self.bound().min(other.bound());
        let mut out = vec![T::zero(); bound + 1];
        for (i, a) in self.components.iter().enumerate().take(bound + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.components.iter().enumerate().take(bound + 1 - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        ChernSeries { components: out }
    }

    pub fn inverse(&self) -> Self {
        let bound = self.bound();
        let mut out = vec![T::zero(); bound + 1];
        out[0] = T::one();
        for k in 1..=bound {
            let mut acc = T::zero();
            for i in 1..=k {
                acc = acc.add_ref(&self.components[i].mul_ref(&out[k - i]));
            }
            out[k] = acc.neg_ref();
        }
        ChernSeries { components: out }
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> ChernSeries<U> {
        ChernSeries { components: self.components.iter().map(f).collect() }
    }

    pub fn truncate(&self, bound: usize) -> Self {
        let mut components = self.components.clone();
        components.truncate(bound + 1);
        ChernSeries { components }
    }

    /// `(1 + a)^{-1}` truncated.
    pub fn inverse_linear(a: T, bound: usize) -> Self {
        Self::linear(a, bound).inverse()
    }
}

impl ChernSeries<LambdaPoly> {
    /// The generic series `c = 1 + c_1 + c_2 + ⋯`.
    pub fn generic(bound: usize) -> Self {
        ChernSeries {
            components: (0..=bound as i64).map(LambdaPoly::c).collect(),
        }
    }
}

impl ChernSeries<BasePoly> {
    pub fn lift(&self) -> ChernSeries<LambdaPoly> {
        self.map(|p| LambdaPoly::from_base(p.clone()))
    }
}

/// Product of `(1 + sign·v)` (or its inverse) over variables.
pub fn linear_factors(vars: &[Var], sign: i64, invert: bool, bound: usize) -> ChernSeries<BasePoly> {
    let mut acc = ChernSeries::one(bound);
    for &v in vars {
        let f = ChernSeries::linear(BasePoly::var(v).scale(&Int::from(sign)), bound);
        acc = acc.mul(&if invert { f.inverse() } else { f });
    }
    acc
}

/// `a(p,q) = ∏_{i=p+1}^{0}(1-x_i) ∏_{j=1}^{q}(1+y_j) / ∏_{i=1}^{p}(1-x_i) ∏_{j=q+1}^{0}(1+y_j)`.
pub fn series_a(p: i32, q: i32, bound: usize) -> ChernSeries<BasePoly> {
    let xs = |r: std::ops::RangeInclusive<i32>| r.map(Var::X).collect::<Vec<_>>();
    let ys = |r: std::ops::RangeInclusive<i32>| r.map(Var::Y).collect::<Vec<_>>();
    let x_part = if p >= 0 {
        linear_factors(&xs(1..=p), -1, true, bound)
    } else {
        linear_factors(&xs(p + 1..=0), -1, false, bound)
    };
    let y_part = if q >= 0 {
        linear_factors(&ys(1..=q), 1, false, bound)
    } else {
        linear_factors(&ys(q + 1..=0), 1, true, bound)
    };
    x_part.mul(&y_part)
}

/// Schur determinant `Det(c(k)_{λ_k − μ_l + l − k})` over the given series,
/// one per row; `μ` may be empty.
pub fn schur_det<T: Ring>(series: &[&ChernSeries<T>], lam: &Partition, mu: &Partition) -> Result<T> {
    let n = series.len();
    if lam.len() > n {
        return Err(Error::domain(format!(
            "partition {lam} has more than {n} rows"
        )));
    }
    if !lam.contains(mu) {
        return Ok(T::zero());
    }
    let mut matrix = Vec::with_capacity(n);
    for (k, s) in series.iter().enumerate() {
        let mut row = Vec::with_capacity(n);
        for l in 0..n {
            let idx = lam.part(k) as i64 - mu.part(l) as i64 + l as i64 - k as i64;
            row.push(s.get(idx)?);
        }
        matrix.push(row);
    }
    Ok(determinant(&matrix))
}

/// `S_λ` evaluated at a single series.
pub fn schur_of_series<T: Ring>(series: &ChernSeries<T>, lam: &Partition, mu: &Partition) -> Result<T> {
    let rows = vec![series; lam.len()];
    schur_det(&rows, lam, mu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn series_a_small_cases() {
        assert_eq!(series_a(0, 0, 3), ChernSeries::one(3));
        let s = series_a(0, 1, 2);
        assert_eq!(s.components()[1], BasePoly::y(1));
        assert!(s.components()[2].is_zero());
        let s = series_a(1, 0, 2);
        assert_eq!(s.components()[1], BasePoly::x(1));
        assert_eq!(s.components()[2], BasePoly::x(1).pow(2));
    }

    #[test]
    fn inverse_is_inverse() {
        for (p_, q) in [(2, -1), (-2, 3), (1, 1)] {
            let s = series_a(p_, q, 5);
            assert_eq!(s.mul(&s.inverse()), ChernSeries::one(5));
        }
    }

    #[test]
    fn determinant_matches_basis() {
        let c = ChernSeries::generic(8);
        for n in 0..=6 {
            for lam in Partition::all_of(n) {
                let det = schur_of_series(&c, &lam, &Partition::empty()).unwrap();
                assert_eq!(det, LambdaPoly::schur(lam));
            }
        }
    }

    #[test]
    fn schur_det_examples() {
        let c = ChernSeries::generic(4);
        let got = schur_det(&[&c, &c], &p(&[1, 1]), &Partition::empty()).unwrap();
        assert_eq!(got, LambdaPoly::schur(p(&[1, 1])));
        let shifted = c.mul(&series_a(0, 1, 4).lift());
        let got = schur_det(&[&shifted], &p(&[2]), &Partition::empty()).unwrap();
        let want = &LambdaPoly::c(2) + &LambdaPoly::c(1).scale(&BasePoly::y(1));
        assert_eq!(got.homogeneous_part(2), want);
        assert!(schur_det(&[&c], &p(&[1, 1]), &Partition::empty()).is_err());
    }

    #[test]
    fn elementary_in_two_variables() {
        let g = linear_factors(&[Var::X(1), Var::X(2)], 1, false, 3);
        // c_k plays the role of h_k, so S_(2) picks out e_2 of the variables.
        let e2 = schur_of_series(&g, &p(&[2]), &Partition::empty()).unwrap();
        assert_eq!(e2, &BasePoly::x(1) * &BasePoly::x(2));
        let h2 = schur_of_series(&g, &p(&[1, 1]), &Partition::empty()).unwrap();
        let x1x2 = &BasePoly::x(1) * &BasePoly::x(2);
        assert_eq!(h2, &(&BasePoly::x(1).pow(2) + &x1x2) + &BasePoly::x(2).pow(2));
    }
}
