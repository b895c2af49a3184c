use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A degree-one variable. The derived order (all `x` by index, then all `y`
/// by index, then `z`, then auxiliary families) is the canonical variable
/// order used everywhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X(i32),
    Y(i32),
    Z,
    /// Auxiliary families (`t`, `u`, `v`, ...) used by identity checks.
    Aux(char, i32),
}

impl Var {
    pub fn index(self) -> Option<i32> {
        match self {
            Var::X(i) | Var::Y(i) | Var::Aux(_, i) => Some(i),
            Var::Z => None,
        }
    }

    /// Parse a canonical variable name: `x3`, `x-2`, `y0`, `z`, `t5`.
    pub fn from_name(name: &str) -> Option<Var> {
        let mut chars = name.chars();
        let head = chars.next()?;
        let rest = chars.as_str();
        if head == 'z' {
            return rest.is_empty().then_some(Var::Z);
        }
        if !head.is_ascii_lowercase() || head == 'c' {
            return None;
        }
        let idx: i32 = rest.parse().ok()?;
        Some(match head {
            'x' => Var::X(idx),
            'y' => Var::Y(idx),
            other => Var::Aux(other, idx),
        })
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::Z => write!(f, "z"),
            Var::Aux(c, i) => write!(f, "{c}{i}"),
        }
    }
}

/// Product of variables with positive exponents, sorted by variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[(Var, u32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var) -> Self {
        Self::power(v, 1)
    }

    pub fn power(v: Var, e: u32) -> Self {
        let mut m = SmallVec::new();
        if e > 0 {
            m.push((v, e));
        }
        Monomial(m)
    }

    /// Build from arbitrary `(var, exp)` pairs; repeated variables are merged.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        pairs
            .into_iter()
            .fold(Monomial::one(), |acc, (v, e)| acc.mul(&Monomial::power(v, e)))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|(w, _)| *w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn factors(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Remove every occurrence of `v`, returning its exponent and the rest.
    pub fn split_off(&self, v: Var) -> (u32, Monomial) {
        let mut rest = self.0.clone();
        let mut e = 0;
        rest.retain(|(w, k)| {
            if *w == v {
                e = *k;
                false
            } else {
                true
            }
        });
        (e, Monomial(rest))
    }

    /// Rename variables; the map need not be injective.
    pub fn rename(&self, f: impl Fn(Var) -> Var) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| (f(v), e)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (n, (v, e)) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, "*")?;
            }
            write_var(f, *v)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Variable name in the expression syntax: negative indices need `_`.
pub(crate) fn write_var(f: &mut impl fmt::Write, v: Var) -> fmt::Result {
    match v.index() {
        Some(i) if i < 0 => {
            let head = match v {
                Var::X(_) => 'x',
                Var::Y(_) => 'y',
                Var::Aux(c, _) => c,
                Var::Z => unreachable!(),
            };
            write!(f, "{head}_{i}")
        }
        _ => write!(f, "{v}"),
    }
}
