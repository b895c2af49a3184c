use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Integer partition, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self::trimmed(parts))
    }

    /// Sort the parts into decreasing order (used for multisets of indices).
    pub fn from_multiset(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::trimmed(parts)
    }

    fn trimmed(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn row(n: u32) -> Self {
        Self::trimmed(vec![n])
    }

    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    /// All `nu ⊇ self` such that `nu/self` is a horizontal strip of size `k`.
    pub fn pieri(&self, k: u32) -> Vec<Partition> {
        let n = self.len();
        let mut out = Vec::new();
        let mut cur = self.0.clone();
        cur.push(0);
        // Row i may grow up to parts[i-1] (row 0 is unbounded).
        fn go(i: usize, left: u32, base: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == cur.len() {
                if left == 0 {
                    out.push(Partition::trimmed(cur.clone()));
                }
                return;
            }
            let cap = if i == 0 { left } else { (base[i - 1] - base[i]).min(left) };
            for add in (0..=cap).rev() {
                cur[i] = base[i] + add;
                go(i + 1, left - add, base, cur, out);
            }
            cur[i] = base[i];
        }
        let base = cur.clone();
        go(0, k, &base, &mut cur, &mut out);
        debug_assert!(out.iter().all(|p| p.len() <= n + 1));
        out
    }

    /// All `mu ⊆ self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.len());
        fn go(lam: &[u32], i: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == lam.len() {
                out.push(Partition::trimmed(cur.clone()));
                return;
            }
            for v in 0..=lam[i].min(cap) {
                cur.push(v);
                go(lam, i + 1, v, cur, out);
                cur.pop();
            }
        }
        go(&self.0, 0, u32::MAX, &mut cur, &mut out);
        out
    }

    /// All `mu ⊆ self` with `self/mu` a nonempty border strip (no 2×2 square),
    /// together with its shape statistics.
    pub fn border_strips(&self) -> Vec<(Partition, StripShape)> {
        self.subpartitions()
            .into_iter()
            .filter(|mu| mu != self)
            .filter_map(|mu| StripShape::of(self, &mu).map(|s| (mu, s)))
            .collect()
    }

    /// Every partition of `n`, in decreasing lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        fn go(left: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=left.min(cap)).rev() {
                cur.push(p);
                go(left - p, p, cur, out);
                cur.pop();
            }
        }
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }
}

/// Statistics of a skew shape with no 2×2 square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StripShape {
    /// Pairs of cells adjacent within a row.
    pub horizontal: u32,
    /// Pairs of cells adjacent within a column.
    pub vertical: u32,
    /// Connected components.
    pub components: u32,
}

impl StripShape {
    pub fn of(lam: &Partition, mu: &Partition) -> Option<StripShape> {
        if !lam.contains(mu) {
            return None;
        }
        let rows = lam.len();
        let mut horizontal = 0;
        let mut vertical = 0;
        for i in 0..rows {
            let (l, m) = (lam.part(i), mu.part(i));
            if l > m {
                horizontal += l - m - 1;
            }
            let below = lam.part(i + 1);
            // Column overlap of rows i and i+1 inside the skew shape.
            let overlap = below.saturating_sub(m);
            if overlap > 1 {
                return None;
            }
            vertical += overlap;
        }
        let cells = lam.weight() - mu.weight();
        Some(StripShape {
            horizontal,
            vertical,
            components: cells - horizontal - vertical,
        })
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Partition with distinct parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition(Partition);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let p = Partition::new(parts)?;
        if !p.is_strict() {
            return Err(Error::domain(format!("{p} is not strict")));
        }
        Ok(StrictPartition(p))
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn parts(&self) -> &[u32] {
        self.0.parts()
    }

    pub fn weight(&self) -> u32 {
        self.0.weight()
    }

    /// Strict partitions of `n`.
    pub fn all_of(n: u32) -> Vec<StrictPartition> {
        Partition::all_of(n)
            .into_iter()
            .filter(Partition::is_strict)
            .map(StrictPartition)
            .collect()
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Parts of `[2,1]`, `2,1` or `()`; positions in errors are byte offsets.
fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .or_else(|| t.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
        .unwrap_or(t);
    let base = s.len() - s.trim_start().len() + (t.len() - inner.len()).min(1);
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut pos = base;
    let mut out = Vec::new();
    for piece in inner.split(',') {
        let n = piece
            .trim()
            .parse::<u32>()
            .map_err(|_| Error::parse(pos, format!("expected a part, found {:?}", piece.trim())))?;
        out.push(n);
        pos += piece.len() + 1;
    }
    Ok(out)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_parts(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(p(&[1]).pieri(1), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(Partition::empty().pieri(2), vec![p(&[2])]);
        let mut got = p(&[2, 1]).pieri(2);
        got.sort();
        let mut want = vec![p(&[4, 1]), p(&[3, 2]), p(&[3, 1, 1]), p(&[2, 2, 1])];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[4, 2]).conjugate(), p(&[2, 2, 1, 1]));
        assert_eq!(p(&[3, 3, 2, 1, 1]).conjugate().conjugate(), p(&[3, 3, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(StrictPartition::all_of(6).len(), 4);
    }

    #[test]
    fn border_strips_of_42() {
        let strips = p(&[4, 2]).border_strips();
        assert_eq!(strips.len(), 10);
        let find = |v: &[u32]| strips.iter().find(|(m, _)| *m == p(v)).unwrap().1;
        let s = find(&[1, 1]);
        assert_eq!((s.horizontal, s.vertical, s.components), (2, 1, 1));
        let s = find(&[3, 1]);
        assert_eq!(s.components, 2);
        assert!(StripShape::of(&p(&[2, 2]), &Partition::empty()).is_none());
    }

    #[test]
    fn rejects_increasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(StrictPartition::new(vec![2, 2]).is_err());
        assert_eq!(Partition::new(vec![3, 0, 0]).unwrap(), p(&[3]));
    }

    #[test]
    fn parsing() {
        assert_eq!("[2,1]".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("3, 1, 1".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[2,2]".parse::<StrictPartition>().is_err());
        assert_eq!("[2,x]".parse::<Partition>().unwrap_err(), Error::parse(3, "expected a part, found \"x\""));
    }
}
