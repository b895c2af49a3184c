//! The ring `Γ = Z[z,c]/(C_11, C_22, …)` and its pfaffian basis `Q_μ`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::parse::{parse_into, Target};
use crate::poly::{BasePoly, CPoly, LambdaPoly, Monomial, Partition, StrictPartition, Var};
use crate::ring::{pfaffian, Ring};
use crate::Int;

/// Element of `Z[z,c]`, with `z` carried inside the coefficients.
pub type CMonomialPoly = CPoly;

pub(crate) fn binom(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Coefficient `(−1)^j (C(j,i) + C(j−1,i))` of the relation sums.
pub(crate) fn relation_coeff(i: i64, j: i64) -> i64 {
    let sign = if j % 2 == 0 { 1 } else { -1 };
    sign * (binom(j, i) + binom(j - 1, i))
}

/// `C_pq = Σ_{0≤i≤j≤q} (−1)^j (C(j,i)+C(j−1,i)) z^i c_{p+j−i} c_{q−j}`.
pub fn c_relation(p: i64, q: i64) -> Result<CMonomialPoly> {
    if q < 0 || p < q {
        return Err(Error::domain(format!("C_pq needs p >= q >= 0, got p={p}, q={q}")));
    }
    let mut out = CPoly::zero();
    for j in 0..=q {
        for i in 0..=j {
            let k = relation_coeff(i, j);
            if k == 0 {
                continue;
            }
            let zi = BasePoly::term(Monomial::power(Var::Z, i as u32), Int::from(k));
            let term = CPoly::c_index(p + j - i).mul_ref(&CPoly::c_index(q - j)).scale(&zi);
            out = out.add_ref(&term);
        }
    }
    Ok(out)
}

fn q_cache() -> &'static RwLock<HashMap<StrictPartition, CPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<StrictPartition, CPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Q_λ(c)`: pfaffian of `[C_{λ_i λ_j}]`, padding `λ` with a zero part.
pub fn q_pfaffian(lam: &StrictPartition) -> CMonomialPoly {
    if let Some(hit) = q_cache().read().unwrap().get(lam) {
        return hit.clone();
    }
    let mut parts: Vec<i64> = lam.parts().iter().map(|&p| p as i64).collect();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let out = pfaffian(parts.len(), &|i, j| {
        c_relation(parts[i], parts[j]).expect("strict parts decrease")
    });
    q_cache().write().unwrap().insert(lam.clone(), out.clone());
    out
}

/// `Q_(k, k−1, …, 1)`, the class of the symmetric locus.
pub fn symmetric_locus_class(k: u32) -> Result<CMonomialPoly> {
    if k == 0 {
        return Err(Error::domain("the staircase needs k >= 1"));
    }
    let lam = StrictPartition::new((1..=k).rev().collect())?;
    Ok(q_pfaffian(&lam))
}

/// Element `Σ_μ p_μ Q_μ` of `Γ[x,y]`; coefficients are polynomials in `x`, `y`, `z`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GammaPoly {
    terms: BTreeMap<StrictPartition, BasePoly>,
}

impl GammaPoly {
    pub fn q(mu: StrictPartition) -> Self {
        Self::term(mu, BasePoly::one())
    }

    pub fn term(mu: StrictPartition, p: BasePoly) -> Self {
        let mut out = Self::default();
        out.add_term(mu, p);
        out
    }

    pub fn from_base(p: BasePoly) -> Self {
        Self::term(StrictPartition::empty(), p)
    }

    pub fn add_term(&mut self, mu: StrictPartition, p: BasePoly) {
        if p.is_zero() {
            return;
        }
        let slot = self.terms.entry(mu.clone()).or_default();
        *slot += p;
        if slot.is_zero() {
            self.terms.remove(&mu);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&StrictPartition, &BasePoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mu: &StrictPartition) -> BasePoly {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    pub fn map_coeffs(&self, f: impl Fn(&BasePoly) -> BasePoly) -> GammaPoly {
        let mut out = GammaPoly::default();
        for (mu, p) in &self.terms {
            out.add_term(mu.clone(), f(p));
        }
        out
    }

    pub fn scale(&self, p: &BasePoly) -> GammaPoly {
        self.map_coeffs(|q| q * p)
    }

    pub fn rename(&self, f: impl Fn(Var) -> Var) -> GammaPoly {
        self.map_coeffs(|p| p.rename(&f))
    }

    /// Total degree, counting `|μ|` plus the coefficient degree.
    pub fn degree(&self) -> Option<u32> {
        self.terms
            .iter()
            .filter_map(|(mu, p)| p.degree().map(|d| d + mu.weight()))
            .max()
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms
            .iter()
            .all(|(mu, p)| mu.weight() <= d && p.is_homogeneous_of(d - mu.weight()))
    }

    /// Back to `Z[z,c][x,y]` by expanding each `Q_μ`.
    pub fn lift(&self) -> CMonomialPoly {
        let mut out = CPoly::zero();
        for (mu, p) in &self.terms {
            out = out.add_ref(&q_pfaffian(mu).scale(p));
        }
        out
    }
}

impl Ring for GammaPoly {
    fn zero() -> Self {
        GammaPoly::default()
    }
    fn one() -> Self {
        GammaPoly::from_base(BasePoly::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (mu, p) in &rhs.terms {
            out.add_term(mu.clone(), p.clone());
        }
        out
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }
    fn neg_ref(&self) -> Self {
        self.map_coeffs(|p| -p)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = GammaPoly::zero();
        for (a, p) in &self.terms {
            for (b, q) in &rhs.terms {
                let prod = q_pfaffian(a).mul_ref(&q_pfaffian(b));
                let nf = normal_form(&prod).expect("pfaffian basis spans every degree");
                out = out.add_ref(&nf.scale(&(p * q)));
            }
        }
        out
    }
}

impl fmt::Display for GammaPoly {
    /// Text form accepted by the expression parser: `(p)*Q[2,1] + ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (mu, p)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if mu.parts().is_empty() {
                write!(f, "({p})")?;
            } else if *p == BasePoly::one() {
                write!(f, "Q{mu}")?;
            } else {
                write!(f, "({p})*Q{mu}")?;
            }
        }
        Ok(())
    }
}

impl Target for GammaPoly {
    fn from_integer(n: Int) -> Self {
        GammaPoly::from_base(BasePoly::constant(n))
    }
    fn from_var(v: Var) -> Self {
        GammaPoly::from_base(BasePoly::var(v))
    }
    fn generator(k: u32) -> Result<Self> {
        Ok(GammaPoly::q(StrictPartition::new(vec![k])?))
    }
    fn schur(parts: &[u32]) -> Result<Self> {
        normal_form(&LambdaPoly::schur(Partition::new(parts.to_vec())?).to_cpoly())
    }
    fn pfaffian(parts: &[u32]) -> Result<Self> {
        Ok(GammaPoly::q(StrictPartition::new(parts.to_vec())?))
    }
}

/// Parse an expression in `Γ[x,y]`: `c_k`, `Q[...]`, and `S[...]` (reduced).
pub fn parse_gamma(src: &str) -> Result<GammaPoly> {
    parse_into(src)
}

/// Rank data for one graded piece of `Z[z,c]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisReport {
    pub degree: u32,
    /// Number of monomials `z^a c^m` of degree `d`.
    pub monomials: usize,
    pub ideal_rank: usize,
    pub basis_size: usize,
    pub independent: bool,
    pub spanning: bool,
    /// Every monomial has an integral expansion in the basis.
    pub integral: bool,
}

impl BasisReport {
    pub fn passed(&self) -> bool {
        self.independent && self.spanning && self.integral
    }
}

type Coord = (u32, Partition);
type Expansion = Vec<(u32, StrictPartition, Int)>;

struct DegreeTable {
    report: BasisReport,
    reduce: HashMap<Coord, Expansion>,
}

fn tables() -> &'static RwLock<HashMap<u32, Arc<DegreeTable>>> {
    static TABLES: OnceLock<RwLock<HashMap<u32, Arc<DegreeTable>>>> = OnceLock::new();
    TABLES.get_or_init(Default::default)
}

fn table(d: u32) -> Arc<DegreeTable> {
    if let Some(t) = tables().read().unwrap().get(&d) {
        return t.clone();
    }
    let t = Arc::new(build_table(d));
    tables().write().unwrap().insert(d, t.clone());
    t
}

/// Exact rank check of `{z^a Q_μ}` against the ideal in degree `d`.
pub fn basis_report(d: u32) -> BasisReport {
    table(d).report.clone()
}

/// Coordinates of a `Z[z,c]` element (no `x`, `y`) shifted by `z^shift`.
fn coordinates(f: &CPoly, shift: u32) -> Vec<(Coord, Int)> {
    let mut out = Vec::new();
    for (mono, p) in f.terms() {
        for (m, k) in p.terms() {
            let a = m.exponent(Var::Z);
            debug_assert_eq!(a, m.degree(), "relations live in Z[z,c]");
            out.push(((a + shift, mono.clone()), k.clone()));
        }
    }
    out
}

fn build_table(d: u32) -> DegreeTable {
    let coords: Vec<Coord> = (0..=d)
        .flat_map(|a| Partition::all_of(d - a).into_iter().map(move |m| (a, m)))
        .collect();
    let index: HashMap<&Coord, usize> = coords.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let n = coords.len();

    let mut columns: Vec<Vec<(Coord, Int)>> = Vec::new();
    for k in 1..=d / 2 {
        let rel = c_relation(k as i64, k as i64).expect("p = q");
        for a in 0..=d - 2 * k {
            for m in Partition::all_of(d - 2 * k - a) {
                let mut mono = CPoly::zero();
                mono.add_term(m, BasePoly::one());
                columns.push(coordinates(&rel.mul_ref(&mono), a));
            }
        }
    }
    let ideal_cols = columns.len();
    let mut basis: Vec<(u32, StrictPartition)> = Vec::new();
    for a in 0..=d {
        for mu in StrictPartition::all_of(d - a) {
            columns.push(coordinates(&q_pfaffian(&mu), a));
            basis.push((a, mu));
        }
    }
    let width = columns.len() + n;

    // Rows indexed by coordinates; the identity block records row operations.
    let mut rows: Vec<Vec<Int>> = vec![vec![Int::from(0); width]; n];
    for (col, entries) in columns.iter().enumerate() {
        for (coord, k) in entries {
            let r = index[coord];
            rows[r][col] += k;
        }
    }
    for (r, row) in rows.iter_mut().enumerate() {
        row[columns.len() + r] = Int::from(1);
    }

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next = 0;
    for col in 0..columns.len() {
        let Some(found) = (next..n).find(|&r| !is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(next, found);
        let pivot_row = rows[next].clone();
        let pv = pivot_row[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || is_zero(&row[col]) {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &pv - &f * p;
            }
            normalize_row(row);
        }
        pivots.push((next, col));
        next += 1;
    }

    let ideal_rank = pivots.iter().filter(|&&(_, c)| c < ideal_cols).count();
    let basis_pivots: Vec<(usize, usize)> =
        pivots.iter().copied().filter(|&(_, c)| c >= ideal_cols).collect();
    let independent = basis_pivots.len() == basis.len();
    let spanning = pivots.len() == n;

    let mut reduce: HashMap<Coord, Expansion> = HashMap::new();
    let mut integral = true;
    if independent && spanning {
        for (j, coord) in coords.iter().enumerate() {
            let mut exp = Vec::new();
            for &(r, c) in &basis_pivots {
                let num = &rows[r][columns.len() + j];
                if is_zero(num) {
                    continue;
                }
                let den = &rows[r][c];
                if !is_zero(&(num % den)) {
                    integral = false;
                    continue;
                }
                let (a, mu) = &basis[c - ideal_cols];
                exp.push((*a, mu.clone(), num / den));
            }
            reduce.insert(coord.clone(), exp);
        }
    }

    DegreeTable {
        report: BasisReport {
            degree: d,
            monomials: n,
            ideal_rank,
            basis_size: basis.len(),
            independent,
            spanning,
            integral,
        },
        reduce,
    }
}

fn is_zero(n: &Int) -> bool {
    *n == Int::from(0)
}

fn normalize_row(row: &mut [Int]) {
    let g = row
        .iter()
        .filter(|x| !is_zero(x))
        .fold(Int::from(0), |g, x| if is_zero(&g) { x.clone() } else { g.gcd(x) });
    let g = if g < Int::from(0) { -g } else { g };
    if !is_zero(&g) && g != Int::from(1) {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Unique expansion in the basis `{z^a Q_μ}` with coefficients in `Z[x,y]`.
pub fn normal_form(f: &CMonomialPoly) -> Result<GammaPoly> {
    let mut out = GammaPoly::zero();
    for (mono, p) in f.terms() {
        for (m, k) in p.terms() {
            let a = m.exponent(Var::Z);
            let rest = Monomial::from_pairs(m.factors().filter(|&(v, _)| v != Var::Z));
            let d = a + mono.weight();
            let t = table(d);
            if !t.report.passed() {
                return Err(Error::Inconsistent(format!(
                    "pfaffian basis fails in degree {d}: {:?}",
                    t.report
                )));
            }
            for (b, mu, n) in &t.reduce[&(a, mono.clone())] {
                let coeff = BasePoly::term(rest.mul(&Monomial::power(Var::Z, *b)), k * n);
                out.add_term(mu.clone(), coeff);
            }
        }
    }
    Ok(out)
}

/// As [`normal_form`], refusing inputs above the degree bound.
pub fn normal_form_bounded(f: &CMonomialPoly, bound: u32) -> Result<GammaPoly> {
    for (mono, p) in f.terms() {
        for (m, _) in p.terms() {
            let d = m.exponent(Var::Z) + mono.weight();
            if d > bound {
                return Err(Error::DegreeBound { needed: d as usize, bound: bound as usize });
            }
        }
    }
    normal_form(f)
}
