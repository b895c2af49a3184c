//! Minimal commutative-ring abstraction shared by the polynomial types, plus
//! determinants and pfaffians over any such ring.

use std::collections::HashMap;
use std::fmt::Debug;

use crate::Int;
use num_traits::{One, Zero};

pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn from_int(n: i64) -> Self {
        let mut acc = Self::zero();
        let one = if n < 0 { Self::one().neg_ref() } else { Self::one() };
        for _ in 0..n.unsigned_abs() {
            acc = acc.add_ref(&one);
        }
        acc
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }
}

impl Ring for Int {
    fn zero() -> Self {
        <Int as Zero>::zero()
    }
    fn one() -> Self {
        <Int as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
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
    fn from_int(n: i64) -> Self {
        Int::from(n)
    }
}

/// Determinant by Laplace expansion along rows, memoised on the set of
/// remaining columns. Exact for any commutative ring; `n <= 16`.
pub fn determinant<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    assert!(n <= 16, "determinant: matrix too large");
    assert!(m.iter().all(|row| row.len() == n), "determinant: not square");
    // minors[mask] = det of the bottom |mask| rows restricted to columns in mask
    let mut minors: HashMap<u32, R> = HashMap::new();
    minors.insert(0, R::one());
    for k in (0..n).rev() {
        let size = n - k;
        let mut next: HashMap<u32, R> = HashMap::new();
        for (&mask, sub) in &minors {
            if mask.count_ones() as usize != size - 1 || sub.is_zero() {
                continue;
            }
            for col in 0..n {
                if mask & (1 << col) != 0 || m[k][col].is_zero() {
                    continue;
                }
                // sign: number of columns in the minor to the left of `col`
                let left = (mask & ((1u32 << col) - 1)).count_ones();
                let term = m[k][col].mul_ref(sub);
                let entry = next.entry(mask | (1 << col)).or_insert_with(R::zero);
                *entry = if left.is_multiple_of(2) {
                    entry.add_ref(&term)
                } else {
                    entry.sub_ref(&term)
                };
            }
        }
        minors = next;
    }
    minors.remove(&((1u32 << n) - 1)).unwrap_or_else(R::zero)
}

/// Pfaffian of the alternating matrix whose strict upper triangle is given by
/// `upper(i, j)` for `i < j`. Expansion along the first row:
/// `Pf(A) = sum_j (-1)^j a_{1j} Pf(A_{1j})` with 1-based `j`.
pub fn pfaffian<R: Ring>(n: usize, upper: &dyn Fn(usize, usize) -> R) -> R {
    assert!(n.is_multiple_of(2), "pfaffian of odd-size matrix");
    let mut cache: HashMap<(usize, usize), R> = HashMap::new();
    let mut entry = |i: usize, j: usize| -> R {
        cache.entry((i, j)).or_insert_with(|| upper(i, j)).clone()
    };
    let idx: Vec<usize> = (0..n).collect();
    pf_rec(&idx, &mut entry)
}

fn pf_rec<R: Ring>(idx: &[usize], entry: &mut dyn FnMut(usize, usize) -> R) -> R {
    if idx.is_empty() {
        return R::one();
    }
    let first = idx[0];
    let mut acc = R::zero();
    for pos in 1..idx.len() {
        let a = entry(first, idx[pos]);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..]
            .iter()
            .enumerate()
            .filter(|&(p, _)| p + 1 != pos)
            .map(|(_, &v)| v)
            .collect();
        let term = a.mul_ref(&pf_rec(&rest, entry));
        // 1-based column index is pos + 1; sign (-1)^(pos+1) with pos = 1 positive
        acc = if pos % 2 == 1 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    fn leibniz(m: &[Vec<Int>]) -> Int {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.len();
        let mut acc = int(0);
        for p in perms(n) {
            let inv = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let mut t = int(1);
            for (i, &pi) in p.iter().enumerate() {
                t = &t * &m[i][pi];
            }
            acc = if inv % 2 == 0 { acc + t } else { acc - t };
        }
        acc
    }

    #[test]
    fn determinant_matches_leibniz() {
        let m: Vec<Vec<Int>> = (0..5)
            .map(|i| (0..5).map(|j| int(((i * 7 + j * 3) % 11) as i64 - 5)).collect())
            .collect();
        assert_eq!(determinant(&m), leibniz(&m));
        assert_eq!(determinant::<Int>(&[]), int(1));
    }

    #[test]
    fn pfaffian_squares_to_determinant() {
        let n = 6;
        let up = |i: usize, j: usize| int(((i * 5 + j * 2 + i * j) % 7) as i64 - 3);
        let pf = pfaffian(n, &up);
        let m: Vec<Vec<Int>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.cmp(&j) {
                        std::cmp::Ordering::Less => up(i, j),
                        std::cmp::Ordering::Greater => -up(j, i),
                        std::cmp::Ordering::Equal => int(0),
                    })
                    .collect()
            })
            .collect();
        assert_eq!(&pf * &pf, determinant(&m));
        assert_eq!(pfaffian(2, &up), up(0, 1));
    }
}
