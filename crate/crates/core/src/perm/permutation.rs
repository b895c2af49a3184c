use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of the integers fixing all but finitely many points.
///
/// Stored on its minimal window: `images[i] = w(start + i)`, with the first
/// and last window positions not fixed. The identity has an empty window.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    start: i32,
    images: Vec<i32>,
}

impl Permutation {
    pub fn identity() -> Self {
        Self::default()
    }

    /// Build from the images of the consecutive positions `start, start+1, …`.
    pub fn from_window(start: i32, images: Vec<i32>) -> Result<Self> {
        let n = images.len() as i32;
        let mut seen = vec![false; images.len()];
        for &v in &images {
            let idx = v - start;
            if !(0..n).contains(&idx) || seen[idx as usize] {
                return Err(Error::domain(format!(
                    "{images:?} is not a permutation of [{start},{}]",
                    start + n - 1
                )));
            }
            seen[idx as usize] = true;
        }
        Ok(Self::trimmed(start, images))
    }

    fn trimmed(mut start: i32, mut images: Vec<i32>) -> Self {
        while images.last().is_some_and(|&v| v == start + images.len() as i32 - 1) {
            images.pop();
        }
        let lead = images
            .iter()
            .enumerate()
            .take_while(|&(i, &v)| v == start + i as i32)
            .count();
        images.drain(..lead);
        start += lead as i32;
        if images.is_empty() {
            start = 0;
        }
        Permutation { start, images }
    }

    /// The simple transposition `s_i` exchanging `i` and `i+1`.
    pub fn simple(i: i32) -> Self {
        Permutation { start: i, images: vec![i + 1, i] }
    }

    /// The transposition exchanging `i` and `j`.
    pub fn transposition(i: i32, j: i32) -> Self {
        let (a, b) = (i.min(j), i.max(j));
        if a == b {
            return Self::identity();
        }
        let mut images: Vec<i32> = (a..=b).collect();
        images[0] = b;
        images[(b - a) as usize] = a;
        Permutation { start: a, images }
    }

    /// Longest element of the interval `[lo, hi]`.
    pub fn longest(lo: i32, hi: i32) -> Self {
        Self::trimmed(lo, (lo..=hi).rev().collect())
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, a: i32) -> i32 {
        let idx = a - self.start;
        if idx >= 0 && (idx as usize) < self.images.len() {
            self.images[idx as usize]
        } else {
            a
        }
    }

    /// Smallest and largest moved points.
    pub fn support(&self) -> Option<(i32, i32)> {
        (!self.is_identity()).then(|| (self.start, self.start + self.images.len() as i32 - 1))
    }

    pub fn start(&self) -> i32 {
        self.start
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// Images of the positions `lo..=hi`.
    pub fn window(&self, lo: i32, hi: i32) -> Vec<i32> {
        (lo..=hi).map(|a| self.apply(a)).collect()
    }

    /// Whether every moved point lies in `[lo, hi]`.
    pub fn fits(&self, lo: i32, hi: i32) -> bool {
        self.support().is_none_or(|(a, b)| lo <= a && b <= hi)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[(v - self.start) as usize] = self.start + i as i32;
        }
        Permutation { start: self.start, images: inv }
    }

    /// Composition `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let (lo, hi) = hull(self.support(), other.support());
        match (lo, hi) {
            (Some(lo), Some(hi)) => {
                Self::trimmed(lo, (lo..=hi).map(|a| self.apply(other.apply(a))).collect())
            }
            _ => Self::identity(),
        }
    }

    /// `w·s_i` (swap the entries at positions `i`, `i+1`).
    pub fn mul_simple_right(&self, i: i32) -> Permutation {
        self.compose(&Self::simple(i))
    }

    /// `s_i·w` (swap the values `i`, `i+1`).
    pub fn mul_simple_left(&self, i: i32) -> Permutation {
        Self::simple(i).compose(self)
    }

    pub fn length(&self) -> usize {
        let v = &self.images;
        let mut n = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    n += 1;
                }
            }
        }
        n
    }

    /// Right descents: `i` with `w(i) > w(i+1)`, i.e. `ℓ(w s_i) < ℓ(w)`.
    pub fn right_descents(&self) -> Vec<i32> {
        match self.support() {
            None => Vec::new(),
            Some((lo, hi)) => (lo..hi).filter(|&i| self.apply(i) > self.apply(i + 1)).collect(),
        }
    }

    /// Left descents: `i` with `ℓ(s_i w) < ℓ(w)`.
    pub fn left_descents(&self) -> Vec<i32> {
        self.inverse().right_descents()
    }

    pub fn has_right_descent(&self, i: i32) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    pub fn has_left_descent(&self, i: i32) -> bool {
        let inv = self.inverse();
        inv.apply(i) > inv.apply(i + 1)
    }

    /// Reduced word `[i_1, …, i_ℓ]` with `w = s_{i_1} ⋯ s_{i_ℓ}`, built by
    /// repeatedly removing the smallest right descent.
    pub fn reduced_word(&self) -> Vec<i32> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(&i) = w.right_descents().first() {
            word.push(i);
            w = w.mul_simple_right(i);
        }
        word.reverse();
        word
    }

    pub fn from_word(word: &[i32]) -> Permutation {
        word.iter()
            .fold(Self::identity(), |acc, &i| acc.mul_simple_right(i))
    }

    /// `γ^m`: add `m` to every position and value.
    pub fn gamma(&self, m: i32) -> Permutation {
        if self.is_identity() {
            return self.clone();
        }
        Permutation {
            start: self.start + m,
            images: self.images.iter().map(|v| v + m).collect(),
        }
    }

    /// `ω(w)(a) = 1 - w(1 - a)`.
    pub fn omega(&self) -> Permutation {
        match self.support() {
            None => self.clone(),
            Some((lo, hi)) => Self::trimmed(1 - hi, (lo..=hi).rev().map(|a| 1 - self.apply(a)).collect()),
        }
    }

    /// `k_w(p,q) = #{a ≤ p : w(a) > q}`.
    pub fn k_rank(&self, p: i32, q: i32) -> usize {
        let trivial = (p - q).max(0) as usize;
        let Some((lo, hi)) = self.support() else {
            return trivial;
        };
        // Points below the window are fixed; count the fixed ones in (q, p]
        // that lie outside the window, plus the window itself.
        let mut count = 0;
        for a in (q + 1)..=p {
            if a < lo || a > hi {
                count += 1;
            }
        }
        for a in lo..=hi.min(p) {
            if self.apply(a) > q {
                count += 1;
            }
        }
        count
    }

    /// Avoids the pattern 2 1 4 3.
    pub fn is_vexillary(&self) -> bool {
        let v = &self.images;
        let n = v.len();
        for a in 0..n {
            for b in a + 1..n {
                if v[b] >= v[a] {
                    continue;
                }
                for c in b + 1..n {
                    if v[c] <= v[a] {
                        continue;
                    }
                    for d in c + 1..n {
                        if v[a] < v[d] && v[d] < v[c] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// In `S_+`: every moved point is positive.
    pub fn in_s_plus(&self) -> bool {
        self.support().is_none_or(|(lo, _)| lo >= 1)
    }

    /// In `S_-`: every moved point is at most zero.
    pub fn in_s_minus(&self) -> bool {
        self.support().is_none_or(|(_, hi)| hi <= 0)
    }

    /// In `S_{≠0} = S_- × S_+`: `w` preserves the nonpositive integers.
    pub fn in_s_nonzero(&self) -> bool {
        match self.support() {
            None => true,
            Some((lo, hi)) => (lo..=hi.min(0)).all(|a| self.apply(a) <= 0),
        }
    }

    /// Split `w ∈ S_{≠0}` as `(u, v)` with `u ∈ S_-`, `v ∈ S_+`, `w = u·v`.
    pub fn split_nonzero(&self) -> Option<(Permutation, Permutation)> {
        if !self.in_s_nonzero() {
            return None;
        }
        let Some((lo, hi)) = self.support() else {
            return Some((Self::identity(), Self::identity()));
        };
        let neg = if lo <= 0 {
            Self::trimmed(lo, (lo..=0).map(|a| self.apply(a)).collect())
        } else {
            Self::identity()
        };
        let pos = if hi >= 1 {
            Self::trimmed(1, (1..=hi).map(|a| self.apply(a)).collect())
        } else {
            Self::identity()
        };
        Some((neg, pos))
    }

    /// Right covers `w·t_{ij}` in Bruhat order with `lo ≤ i < j ≤ hi`.
    pub fn right_covers(&self, lo: i32, hi: i32) -> Vec<BruhatCover> {
        let mut out = Vec::new();
        for i in lo..=hi {
            let wi = self.apply(i);
            // Scan right, tracking the smallest value above w(i) seen so far.
            let mut ceiling = i32::MAX;
            for j in (i + 1)..=hi {
                let wj = self.apply(j);
                if wj > wi && wj < ceiling {
                    out.push(BruhatCover {
                        i,
                        j,
                        result: self.compose(&Self::transposition(i, j)),
                    });
                    ceiling = wj;
                }
            }
        }
        out
    }

    /// Bruhat order via rank functions: `self ≤ other` iff `k_self ≤ k_other`.
    pub fn bruhat_le(&self, other: &Permutation) -> bool {
        let (Some(lo), Some(hi)) = hull(self.support(), other.support()) else {
            return true;
        };
        if other.is_identity() {
            return self.is_identity();
        }
        (lo - 1..=hi).all(|p| (lo - 1..=hi).all(|q| self.k_rank(p, q) <= other.k_rank(p, q)))
    }

    /// Every permutation of `[lo, hi]` (including the identity), in
    /// lexicographic order of one-line notation.
    pub fn all_in_window(lo: i32, hi: i32) -> Vec<Permutation> {
        let mut cur: Vec<i32> = (lo..=hi).collect();
        let mut out = vec![Self::trimmed(lo, cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Self::trimmed(lo, cur.clone()));
        }
        out
    }

    /// One-line notation on the minimal window, as printed in the literature.
    pub fn one_line(&self) -> String {
        if self.is_identity() {
            return "id".into();
        }
        self.images
            .iter()
            .map(i32::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// `w_λ`: `i ↦ i + λ_{1-i}` for `i ≤ 0`, `i ↦ i - λ'_i` for `i > 0`.
    pub fn w_lambda(lam: &crate::poly::Partition) -> Permutation {
        if lam.is_empty() {
            return Self::identity();
        }
        let conj = lam.conjugate();
        let lo = 1 - lam.len() as i32;
        let hi = lam.part(0) as i32;
        let images = (lo..=hi)
            .map(|i| {
                if i <= 0 {
                    i + lam.part((-i) as usize) as i32
                } else {
                    i - conj.part((i - 1) as usize) as i32
                }
            })
            .collect();
        Self::trimmed(lo, images)
    }
}

/// A Bruhat cover `w → w·t_{ij}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruhatCover {
    pub i: i32,
    pub j: i32,
    pub result: Permutation,
}

fn hull(a: Option<(i32, i32)>, b: Option<(i32, i32)>) -> (Option<i32>, Option<i32>) {
    match (a, b) {
        (None, None) => (None, None),
        (Some((l, h)), None) | (None, Some((l, h))) => (Some(l), Some(h)),
        (Some((l1, h1)), Some((l2, h2))) => (Some(l1.min(l2)), Some(h1.max(h2))),
    }
}

fn next_permutation(v: &mut [i32]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    /// Machine format `w@p:v1,…,vn` with `p` the first window position.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let vals: Vec<String> = self.images.iter().map(i32::to_string).collect();
        write!(f, "w@{}:{}", self.start, vals.join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `id` or `w@p:v1,…,vn` where `w(p+i-1) = v_i`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let offset = s.len() - s.trim_start().len();
        if t == "id" {
            return Ok(Self::identity());
        }
        let rest = t
            .strip_prefix("w@")
            .ok_or_else(|| Error::parse(offset, "expected `w@p:v1,...,vn` or `id`"))?;
        let colon = rest
            .find(':')
            .ok_or_else(|| Error::parse(offset + 2 + rest.len(), "expected `:` after window start"))?;
        let start: i32 = rest[..colon]
            .trim()
            .parse()
            .map_err(|_| Error::parse(offset + 2, "window start must be an integer"))?;
        let mut images = Vec::new();
        let mut pos = offset + 2 + colon + 1;
        let body = &rest[colon + 1..];
        if !body.trim().is_empty() {
            for piece in body.split(',') {
                let v: i32 = piece
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(pos, format!("`{}` is not an integer", piece.trim())))?;
                images.push(v);
                pos += piece.len() + 1;
            }
        }
        Permutation::from_window(start, images).map_err(|e| match e {
            Error::Domain(msg) => Error::parse(offset, msg),
            other => other,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(Permutation::identity().length(), 0);
        assert_eq!(Permutation::simple(0).length(), 1);
        assert_eq!(w("w@0:3,2,1,0").length(), 6);
    }

    #[test]
    fn reduced_words() {
        assert!(Permutation::identity().reduced_word().is_empty());
        assert_eq!(Permutation::simple(-1).reduced_word(), vec![-1]);
        assert_eq!(w("w@1:2,3,1").reduced_word(), vec![1, 2]);
        for u in Permutation::all_in_window(-1, 2) {
            let word = u.reduced_word();
            assert_eq!(word.len(), u.length());
            assert_eq!(Permutation::from_word(&word), u);
        }
    }

    #[test]
    fn gamma_and_omega() {
        assert_eq!(Permutation::simple(0).gamma(1), Permutation::simple(1));
        assert_eq!(w("w@1:2,1").gamma(2), w("w@3:4,3"));
        assert_eq!(Permutation::simple(1).omega(), Permutation::simple(-1));
        assert_eq!(w("w@1:2,1").omega(), w("w@-1:0,-1"));
        let u = w("w@-1:1,3,4,0,2,-1");
        assert_eq!(u.omega().omega(), u);
        assert_eq!(u.gamma(3).gamma(-3), u);
    }

    #[test]
    fn parse_and_trim() {
        let u = w("w@0:0,1,2,3");
        assert!(u.is_identity());
        let v = w("w@0:1,0,2,3");
        assert_eq!(v, Permutation::simple(0));
        assert_eq!(v.to_string(), "w@0:1,0");
        assert_eq!(w(&v.to_string()), v);
        let err = "w@0:1,x".parse::<Permutation>().unwrap_err();
        assert!(matches!(err, Error::Parse { pos: 6, .. }), "{err:?}");
        assert!("w@0:1,1".parse::<Permutation>().is_err());
    }

    #[test]
    fn vexillary_examples() {
        assert!(!w("w@1:2,1,4,3").is_vexillary());
        assert!(w("w@-1:1,3,4,0,2,-1").is_vexillary());
        assert!(Permutation::identity().is_vexillary());
    }

    #[test]
    fn rank_function() {
        assert_eq!(Permutation::identity().k_rank(2, 5), 0);
        assert_eq!(Permutation::simple(0).k_rank(0, 0), 1);
        assert_eq!(w("w@-1:1,3,4,0,2,-1").k_rank(1, 2), 2);
        assert_eq!(Permutation::identity().k_rank(3, 1), 2);
    }

    #[test]
    fn w_lambda_examples() {
        use crate::poly::Partition;
        assert!(Permutation::w_lambda(&Partition::empty()).is_identity());
        assert_eq!(Permutation::w_lambda(&Partition::row(1)), Permutation::simple(0));
        let u = Permutation::w_lambda(&Partition::new(vec![2, 1]).unwrap());
        assert_eq!(u, w("w@-1:0,2,-1,1"));
    }

    #[test]
    fn covers_raise_length_by_one() {
        let u = w("w@1:2,1");
        for cov in u.right_covers(0, 3) {
            assert_eq!(cov.result.length(), u.length() + 1);
        }
        let brute: Vec<_> = (0..=3)
            .flat_map(|i| ((i + 1)..=3).map(move |j| (i, j)))
            .filter(|&(i, j)| u.compose(&Permutation::transposition(i, j)).length() == u.length() + 1)
            .collect();
        let got: Vec<_> = u.right_covers(0, 3).iter().map(|c| (c.i, c.j)).collect();
        assert_eq!(got, brute);
    }

    #[test]
    fn bruhat_order() {
        let id = Permutation::identity();
        let s1 = Permutation::simple(1);
        assert!(id.bruhat_le(&s1));
        assert!(!s1.bruhat_le(&id));
        assert!(s1.bruhat_le(&w("w@1:3,2,1")));
        assert!(!Permutation::simple(0).bruhat_le(&w("w@1:3,2,1")));
    }

    #[test]
    fn window_enumeration() {
        assert_eq!(Permutation::all_in_window(0, 3).len(), 24);
    }

    #[test]
    fn nonzero_split() {
        let u = w("w@-1:0,-1,2,1");
        let (neg, pos) = u.split_nonzero().unwrap();
        assert_eq!(neg, Permutation::simple(-1));
        assert_eq!(pos, Permutation::simple(1));
        assert_eq!(neg.compose(&pos), u);
        assert!(Permutation::simple(0).split_nonzero().is_none());
    }
}
