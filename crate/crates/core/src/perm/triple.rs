use std::fmt;
use std::str::FromStr;

use super::permutation::Permutation;
use crate::error::{Error, Result};
use crate::poly::Partition;

/// Type A triple `τ = (k•, p•, q•)` indexing a vexillary permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TripleA {
    k: Vec<u32>,
    p: Vec<i32>,
    q: Vec<i32>,
}

impl TripleA {
    pub fn new(k: Vec<u32>, p: Vec<i32>, q: Vec<i32>) -> Result<Self> {
        if k.len() != p.len() || k.len() != q.len() {
            return Err(Error::domain("triple sequences must have equal length"));
        }
        if k.first().is_some_and(|&k1| k1 == 0) || k.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain(format!("k = {k:?} must be positive and strictly increasing")));
        }
        if p.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::domain(format!("p = {p:?} must be weakly increasing")));
        }
        if q.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("q = {q:?} must be weakly decreasing")));
        }
        let t = TripleA { k, p, q };
        let l = t.l();
        if l.windows(2).any(|w| w[0] <= w[1]) || l.last().is_some_and(|&x| x <= 0) {
            return Err(Error::domain(format!("l = {l:?} must be strictly decreasing and positive")));
        }
        Ok(t)
    }

    pub fn empty() -> Self {
        TripleA { k: vec![], p: vec![], q: vec![] }
    }

    pub fn k(&self) -> &[u32] {
        &self.k
    }

    pub fn p(&self) -> &[i32] {
        &self.p
    }

    pub fn q(&self) -> &[i32] {
        &self.q
    }

    pub fn len(&self) -> usize {
        self.k.len()
    }

    pub fn is_empty(&self) -> bool {
        self.k.is_empty()
    }

    /// `l_i = q_i - p_i + k_i`.
    pub fn l(&self) -> Vec<i32> {
        (0..self.len())
            .map(|i| self.q[i] - self.p[i] + self.k[i] as i32)
            .collect()
    }

    /// Index `i` (0-based) of the condition governing row `k` (1-based):
    /// minimal with `k_i ≥ k`.
    pub fn governing(&self, row: u32) -> usize {
        self.k.iter().position(|&ki| ki >= row).expect("row within k_s")
    }

    /// `λ(τ)`: corners at `(k_i, l_i)`.
    pub fn partition(&self) -> Partition {
        let l = self.l();
        let rows = self.k.last().copied().unwrap_or(0);
        let parts = (1..=rows).map(|r| l[self.governing(r)] as u32).collect();
        Partition::new(parts).expect("condition (*) gives a partition")
    }

    /// `τ'`: `k' = reversed l`, `p' = reversed q`, `q' = reversed p`.
    pub fn conjugate(&self) -> TripleA {
        let rev = |v: &[i32]| v.iter().rev().copied().collect::<Vec<_>>();
        TripleA {
            k: self.l().iter().rev().map(|&x| x as u32).collect(),
            p: rev(&self.q),
            q: rev(&self.p),
        }
    }

    /// `ω(τ) = (k, -q, -p)`; note `w(ω(τ)) = ω(w(τ))^{-1}`.
    pub fn opposite(&self) -> TripleA {
        TripleA {
            k: self.k.clone(),
            p: self.q.iter().map(|v| -v).collect(),
            q: self.p.iter().map(|v| -v).collect(),
        }
    }

    pub fn gamma(&self, m: i32) -> TripleA {
        TripleA {
            k: self.k.clone(),
            p: self.p.iter().map(|v| v + m).collect(),
            q: self.q.iter().map(|v| v + m).collect(),
        }
    }

    /// The smallest rank function compatible with the conditions:
    /// `K(p,q) = max(0, p-q, max_i k_i - (p_i-p)_+ - (q-q_i)_+)`.
    fn rank_bound(&self, p: i32, q: i32) -> i32 {
        let mut best = (p - q).max(0);
        for i in 0..self.len() {
            let v = self.k[i] as i32 - (self.p[i] - p).max(0) - (q - self.q[i]).max(0);
            best = best.max(v);
        }
        best
    }

    /// `w(τ)`: the minimal-length permutation with `k_w(p_i,q_i) = k_i`.
    pub fn to_permutation(&self) -> Result<Permutation> {
        if self.is_empty() {
            return Ok(Permutation::identity());
        }
        let ks = *self.k.last().unwrap() as i32;
        let lo = self.p.iter().chain(&self.q).min().unwrap() - ks - 2;
        let hi = self.p.iter().chain(&self.q).max().unwrap() + ks + 2;
        let mut images = Vec::with_capacity((hi - lo + 1) as usize);
        for a in lo..=hi {
            let hits: Vec<i32> = (lo..=hi)
                .filter(|&b| {
                    self.rank_bound(a, b - 1) - self.rank_bound(a - 1, b - 1) - self.rank_bound(a, b)
                        + self.rank_bound(a - 1, b)
                        == 1
                })
                .collect();
            match hits.as_slice() {
                [b] => images.push(*b),
                _ => return Err(Error::Inconsistent(format!("rank bound of {self} is not a permutation"))),
            }
        }
        let w = Permutation::from_window(lo, images)
            .map_err(|e| Error::Inconsistent(format!("{self}: {e}")))?;
        for i in 0..self.len() {
            if w.k_rank(self.p[i], self.q[i]) != self.k[i] as usize {
                return Err(Error::Inconsistent(format!("{self}: rank condition {i} fails")));
            }
        }
        if w.length() != self.partition().weight() as usize {
            return Err(Error::Inconsistent(format!("{self}: length differs from |λ|")));
        }
        Ok(w)
    }

    /// The triple of a vexillary permutation, from the conditions of its rank
    /// function not implied by any other condition.
    pub fn from_permutation(w: &Permutation) -> Result<TripleA> {
        if !w.is_vexillary() {
            return Err(Error::domain(format!("{w} is not vexillary")));
        }
        let Some((lo, hi)) = w.support() else {
            return Ok(TripleA::empty());
        };
        let mut conds: Vec<(i32, i32, i32)> = Vec::new();
        for p in lo - 1..=hi {
            for q in lo - 1..=hi {
                let k = w.k_rank(p, q) as i32;
                if k > (p - q).max(0) {
                    conds.push((p, q, k));
                }
            }
        }
        let implies = |a: &(i32, i32, i32), b: &(i32, i32, i32)| {
            a.2 - (a.0 - b.0).max(0) - (b.1 - a.1).max(0) >= b.2
        };
        let mut essential: Vec<(i32, i32, i32)> = conds
            .iter()
            .filter(|c| !conds.iter().any(|d| d != *c && implies(d, c)))
            .copied()
            .collect();
        essential.sort_by_key(|c| c.2);
        let triple = TripleA::new(
            essential.iter().map(|c| c.2 as u32).collect(),
            essential.iter().map(|c| c.0).collect(),
            essential.iter().map(|c| c.1).collect(),
        )?;
        if triple.to_permutation()? != *w {
            return Err(Error::Inconsistent(format!("essential conditions of {w} do not roundtrip")));
        }
        Ok(triple)
    }

    /// The triple of `w_λ`: `p_i = 0` and `q_i = l_i - k_i` at the corners.
    pub fn of_partition(lam: &Partition) -> TripleA {
        let mut k = Vec::new();
        let mut q = Vec::new();
        for r in 0..lam.len() {
            if lam.part(r) != lam.part(r + 1) {
                k.push(r as u32 + 1);
                q.push(lam.part(r) as i32 - r as i32 - 1);
            }
        }
        let p = vec![0; k.len()];
        TripleA::new(k, p, q).expect("corners of a partition form a triple")
    }
}

impl fmt::Display for TripleA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<String>| v.join(",");
        write!(
            f,
            "k={};p={};q={}",
            join(self.k.iter().map(|x| x.to_string()).collect()),
            join(self.p.iter().map(|x| x.to_string()).collect()),
            join(self.q.iter().map(|x| x.to_string()).collect()),
        )
    }
}

/// Parse `k=…;p=…;q=…` into the three integer lists.
pub(crate) fn parse_triple_fields(s: &str) -> Result<(Vec<i64>, Vec<i64>, Vec<i64>)> {
    let mut fields: [Option<Vec<i64>>; 3] = [None, None, None];
    let mut pos = 0;
    for part in s.split(';') {
        let (name, body) = part
            .split_once('=')
            .ok_or_else(|| Error::parse(pos, "expected `name=values`"))?;
        let slot = match name.trim() {
            "k" => 0,
            "p" => 1,
            "q" => 2,
            other => return Err(Error::parse(pos, format!("unknown field `{other}`"))),
        };
        let mut vals = Vec::new();
        let mut vpos = pos + name.len() + 1;
        if !body.trim().is_empty() {
            for piece in body.split(',') {
                vals.push(
                    piece
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(vpos, format!("`{}` is not an integer", piece.trim())))?,
                );
                vpos += piece.len() + 1;
            }
        }
        fields[slot] = Some(vals);
        pos += part.len() + 1;
    }
    let [k, p, q] = fields;
    match (k, p, q) {
        (Some(k), Some(p), Some(q)) => Ok((k, p, q)),
        _ => Err(Error::parse(s.len(), "triple needs k, p and q")),
    }
}

impl FromStr for TripleA {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (k, p, q) = parse_triple_fields(s.trim())?;
        if k.iter().any(|&v| v <= 0) {
            return Err(Error::domain("k entries must be positive"));
        }
        TripleA::new(
            k.into_iter().map(|v| v as u32).collect(),
            p.into_iter().map(|v| v as i32).collect(),
            q.into_iter().map(|v| v as i32).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> TripleA {
        "k=2,3,5;p=1,1,3;q=2,0,-1".parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let t = example();
        assert_eq!(t.partition(), Partition::new(vec![3, 3, 2, 1, 1]).unwrap());
        let w = t.to_permutation().unwrap();
        assert_eq!(w, Permutation::from_window(-1, vec![1, 3, 4, 0, 2, -1]).unwrap());
        assert_eq!(TripleA::from_permutation(&w).unwrap(), t);
    }

    #[test]
    fn conjugate_and_opposite() {
        let t = example();
        let w = t.to_permutation().unwrap();
        assert_eq!(t.conjugate().to_permutation().unwrap(), w.inverse());
        assert_eq!(t.conjugate().partition(), t.partition().conjugate());
        // The opposite triple describes ω(w)^{-1}; ω(w) itself is its conjugate.
        assert_eq!(t.opposite().to_permutation().unwrap(), w.omega().inverse());
        assert_eq!(t.opposite().conjugate().to_permutation().unwrap(), w.omega());
        assert_eq!(t.opposite().partition(), t.partition());
        assert_eq!(t.gamma(2).to_permutation().unwrap(), w.gamma(2));
    }

    #[test]
    fn small_cases() {
        assert!(TripleA::empty().to_permutation().unwrap().is_identity());
        assert_eq!(TripleA::empty().partition(), Partition::empty());
        let s0 = TripleA::from_permutation(&Permutation::simple(0)).unwrap();
        assert_eq!(s0, TripleA::new(vec![1], vec![0], vec![0]).unwrap());
        let t: TripleA = "k=1;p=0;q=3".parse().unwrap();
        assert_eq!(t.partition(), Partition::row(4));
    }

    #[test]
    fn w_lambda_triples() {
        let lam = Partition::new(vec![2, 1]).unwrap();
        let t = TripleA::of_partition(&lam);
        assert!(t.p().iter().all(|&p| p == 0));
        assert_eq!(t.to_permutation().unwrap(), Permutation::w_lambda(&lam));
        let back = TripleA::from_permutation(&Permutation::w_lambda(&lam)).unwrap();
        assert!(back.p().iter().all(|&p| p == 0));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(TripleA::from_permutation(&Permutation::from_window(1, vec![2, 1, 4, 3]).unwrap()).is_err());
        assert!(TripleA::new(vec![1, 1], vec![0, 0], vec![0, 0]).is_err());
        assert!("k=1;p=0".parse::<TripleA>().is_err());
    }
}
