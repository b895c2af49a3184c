use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{parse_triple_fields, Permutation};
use crate::poly::StrictPartition;

/// Type C triple `(k, p, q)`: `k` strictly increasing, `p`, `q` weakly
/// decreasing, all positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TripleC {
    k: Vec<u32>,
    p: Vec<u32>,
    q: Vec<u32>,
}

impl TripleC {
    pub fn new(k: Vec<u32>, p: Vec<u32>, q: Vec<u32>) -> Result<Self> {
        let s = k.len();
        if s == 0 || p.len() != s || q.len() != s {
            return Err(Error::domain("k, p, q must be nonempty and of equal length"));
        }
        if k.iter().chain(&p).chain(&q).any(|&v| v == 0) {
            return Err(Error::domain("type C triples have positive entries"));
        }
        for i in 0..s - 1 {
            if k[i] >= k[i + 1] {
                return Err(Error::domain("k must be strictly increasing"));
            }
            if p[i] < p[i + 1] || q[i] < q[i + 1] {
                return Err(Error::domain("p and q must be weakly decreasing"));
            }
            let drop = (p[i] - p[i + 1]) + (q[i] - q[i + 1]);
            if drop <= k[i + 1] - k[i] {
                return Err(Error::domain(format!(
                    "condition fails at i={}: (p_i-p_i+1)+(q_i-q_i+1) = {drop} <= {}",
                    i + 1,
                    k[i + 1] - k[i]
                )));
            }
        }
        Ok(TripleC { k, p, q })
    }

    pub fn k(&self) -> &[u32] {
        &self.k
    }
    pub fn p(&self) -> &[u32] {
        &self.p
    }
    pub fn q(&self) -> &[u32] {
        &self.q
    }

    pub fn rows(&self) -> u32 {
        *self.k.last().unwrap()
    }

    /// Index `i` (0-based) with `k_i ≥ row` minimal, for `1 ≤ row ≤ k_s`.
    pub fn governing(&self, row: u32) -> usize {
        self.k.iter().position(|&ki| ki >= row).expect("row within k_s")
    }

    /// `λ_r = p_i + q_i − 1 + k_i − r`.
    pub fn partition(&self) -> StrictPartition {
        let parts = (1..=self.rows())
            .map(|r| {
                let i = self.governing(r);
                self.p[i] + self.q[i] - 1 + self.k[i] - r
            })
            .collect();
        StrictPartition::new(parts).expect("condition on the triple keeps parts distinct")
    }

    /// The signed permutation of minimal length meeting the rank conditions,
    /// searched on `{1..n}` for `n` up to `max_n`.
    pub fn to_signed_permutation(&self, max_n: usize) -> Result<SignedPermutation> {
        for n in 1..=max_n {
            let best = SignedPermutation::all(n)
                .filter(|w| self.rank_conditions_hold(w))
                .min_by_key(|w| w.length());
            if let Some(w) = best {
                return Ok(w.trim());
            }
        }
        Err(Error::domain(format!("no signed permutation on 1..{max_n} realizes {self}")))
    }

    pub fn rank_conditions_hold(&self, w: &SignedPermutation) -> bool {
        (0..self.k.len()).all(|i| w.rank(self.p[i], self.q[i]) == self.k[i] as usize)
    }
}

impl fmt::Display for TripleC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "k={};p={};q={}", join(&self.k), join(&self.p), join(&self.q))
    }
}

impl FromStr for TripleC {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (k, p, q) = parse_triple_fields(s.trim())?;
        let positive = |v: Vec<i64>| -> Result<Vec<u32>> {
            v.into_iter()
                .map(|x| u32::try_from(x).map_err(|_| Error::domain("type C triples have positive entries")))
                .collect()
        };
        TripleC::new(positive(k)?, positive(p)?, positive(q)?)
    }
}

/// Signed permutation of `{±1, …, ±n}`, stored by the images of `1..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::domain(format!("{images:?} is not a signed permutation")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { images })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { images: (1..=n as i32).collect() }
    }

    /// Embedding of a permutation of positive integers (no sign changes).
    pub fn from_positive(w: &Permutation) -> Result<Self> {
        if !w.in_s_plus() {
            return Err(Error::domain(format!("{w} moves nonpositive integers")));
        }
        let n = w.support().map_or(0, |(_, hi)| hi);
        Ok(SignedPermutation { images: (1..=n).map(|a| w.apply(a)).collect() })
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn apply(&self, a: i32) -> i32 {
        let n = self.images.len() as i32;
        match a {
            0 => 0,
            a if a.abs() > n => a,
            a if a > 0 => self.images[a as usize - 1],
            a => -self.images[(-a) as usize - 1],
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            let a = i as i32 + 1;
            images[v.unsigned_abs() as usize - 1] = if v > 0 { a } else { -a };
        }
        SignedPermutation { images }
    }

    /// Coxeter length with generators `s_0` (sign of 1) and `s_i = (i, i+1)`.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut len = w.iter().filter(|&&v| v < 0).count();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                len += usize::from(w[i] > w[j]) + usize::from(w[i] + w[j] < 0);
            }
        }
        len
    }

    /// `#{a ≥ p : −w(a) ≥ q}`.
    pub fn rank(&self, p: u32, q: u32) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i as u32 + 1 >= p && -v >= q as i32)
            .count()
    }

    /// Drop trailing fixed points.
    pub fn trim(&self) -> Self {
        let mut images = self.images.clone();
        while images.last().is_some_and(|&v| v == images.len() as i32) {
            images.pop();
        }
        SignedPermutation { images }
    }

    /// All `2^n n!` signed permutations of `{1..n}`.
    pub fn all(n: usize) -> impl Iterator<Item = SignedPermutation> {
        let perms = Permutation::all_in_window(1, n as i32);
        perms.into_iter().flat_map(move |w| {
            (0u32..1 << n).map(move |signs| SignedPermutation {
                images: (1..=n as i32)
                    .map(|a| {
                        let v = w.apply(a);
                        if signs >> (a - 1) & 1 == 1 { -v } else { v }
                    })
                    .collect(),
            })
        })
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .images
            .iter()
            .map(|&v| if v < 0 { format!("{}\u{0305}", -v) } else { v.to_string() })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}
