//! Construction of `𝔖_w`, `𝐒_w`, Stanley polynomials and their relatives.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use super::operators::del_x;
use crate::perm::{Permutation, TripleA};
use crate::poly::series::schur_det;
use crate::poly::{series_a, BasePoly, ChernSeries, LambdaPoly, Partition, Var};
use crate::ring::Ring;

type Memo = RwLock<HashMap<Permutation, LambdaPoly>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn lookup(w: &Permutation) -> Option<LambdaPoly> {
    memo().read().expect("memo poisoned").get(w).cloned()
}

fn remember(w: &Permutation, f: &LambdaPoly) {
    memo()
        .write()
        .expect("memo poisoned")
        .entry(w.clone())
        .or_insert_with(|| f.clone());
}

/// The enriched Schubert polynomial `𝔖_w`.
///
/// Seeded at the longest element of the support window by the vexillary
/// formula, then lowered by `∂_i^x` along a reduced word.
pub fn schubert(w: &Permutation) -> LambdaPoly {
    let Some((lo, hi)) = w.support() else {
        return LambdaPoly::one();
    };
    if let Some(hit) = lookup(w) {
        return hit;
    }
    let mut u = Permutation::longest(lo, hi);
    let mut f = match lookup(&u) {
        Some(hit) => hit,
        None => {
            let tau = TripleA::from_permutation(&u).expect("longest elements are vexillary");
            let seed = schubert_vexillary(&tau);
            remember(&u, &seed);
            seed
        }
    };
    for i in u.inverse().compose(w).reduced_word() {
        u = u.mul_simple_right(i);
        f = match lookup(&u) {
            Some(hit) => hit,
            None => {
                let g = del_x(i, &f);
                remember(&u, &g);
                g
            }
        };
    }
    f
}

/// Row series `a(k) = a(p_i, q_i)`, `i` minimal with `k_i ≥ k`.
fn row_series(tau: &TripleA, bound: usize) -> Vec<ChernSeries<BasePoly>> {
    let rows = tau.k().last().copied().unwrap_or(0);
    (1..=rows)
        .map(|k| {
            let i = tau.governing(k);
            series_a(tau.p()[i], tau.q()[i], bound)
        })
        .collect()
}

/// `𝔖_{w(τ)} = Σ_μ S_{λ/μ}(a(1), …, a(k_s)) S_μ(c)`.
pub fn schubert_vexillary(tau: &TripleA) -> LambdaPoly {
    let lam = tau.partition();
    let rows = row_series(tau, lam.weight() as usize);
    let refs: Vec<&ChernSeries<BasePoly>> = rows.iter().collect();
    let mut out = LambdaPoly::zero();
    for mu in lam.subpartitions() {
        let coef = schur_det(&refs, &lam, &mu).expect("one series per row");
        out.add_term(mu, coef);
    }
    out
}

/// `𝔖_{w(τ)} = Det(c(k)_{λ_k + l - k})` with `c(k) = c·a(k)`, expanded over `Λ[x,y]`.
pub fn schubert_vexillary_determinant(tau: &TripleA) -> LambdaPoly {
    let lam = tau.partition();
    let bound = lam.weight() as usize;
    let generic = ChernSeries::<LambdaPoly>::generic(bound);
    let rows: Vec<ChernSeries<LambdaPoly>> = row_series(tau, bound)
        .iter()
        .map(|a| generic.mul(&a.lift()))
        .collect();
    let refs: Vec<&ChernSeries<LambdaPoly>> = rows.iter().collect();
    schur_det(&refs, &lam, &Partition::empty()).expect("one series per row")
}

/// Multivariate Schur polynomial: `𝔖_{w_λ}`.
pub fn multivariate_schur(lam: &Partition) -> LambdaPoly {
    schubert_vexillary(&TripleA::of_partition(lam))
}

/// `x_i ↦ x_i - z`.
pub fn twist_variables(f: &LambdaPoly) -> LambdaPoly {
    f.substitute_vars(&|v| match v {
        Var::X(i) => Some(&BasePoly::x(i) - &BasePoly::z()),
        _ => None,
    })
}

/// The twisted polynomial `𝐒_w = 𝔖_w(c, x - z, y)`.
pub fn twisted(w: &Permutation) -> LambdaPoly {
    twist_variables(&schubert(w))
}

/// `F_w`: all `x`, `y` (and `z`) set to zero.
pub fn stanley(w: &Permutation) -> LambdaPoly {
    let f = schubert(w);
    let mut out = LambdaPoly::zero();
    for (lam, p) in f.terms() {
        out.add_term(lam.clone(), BasePoly::constant(p.constant_term()));
    }
    out
}

/// Every reduced word of `w`, as sequences `i_1 … i_l` with `w = s_{i_1} ⋯ s_{i_l}`.
pub fn reduced_words(w: &Permutation) -> Vec<Vec<i32>> {
    fn go(w: &Permutation, memo: &mut HashMap<Permutation, Vec<Vec<i32>>>) -> Vec<Vec<i32>> {
        if w.is_identity() {
            return vec![Vec::new()];
        }
        if let Some(hit) = memo.get(w) {
            return hit.clone();
        }
        let mut out = Vec::new();
        for i in w.right_descents() {
            for mut word in go(&w.mul_simple_right(i), memo) {
                word.push(i);
                out.push(word);
            }
        }
        memo.insert(w.clone(), out.clone());
        out
    }
    go(w, &mut HashMap::new())
}

/// Coefficients `j_λ^w`: fillings of `λ` strictly increasing along rows and
/// columns whose reading word (rows top to bottom, each right to left) is a
/// reduced word of `w`.
pub fn fgrs_coefficients(w: &Permutation) -> BTreeMap<Partition, u64> {
    let words = reduced_words(w);
    let mut out = BTreeMap::new();
    for lam in Partition::all_of(w.length() as u32) {
        let count = words.iter().filter(|word| fills_shape(word, &lam)).count() as u64;
        if count > 0 {
            out.insert(lam, count);
        }
    }
    out
}

fn fills_shape(word: &[i32], lam: &Partition) -> bool {
    let mut rows: Vec<Vec<i32>> = Vec::with_capacity(lam.len());
    let mut rest = word;
    for &len in lam.parts() {
        let (seg, tail) = rest.split_at(len as usize);
        rest = tail;
        let row: Vec<i32> = seg.iter().rev().copied().collect();
        if row.windows(2).any(|p| p[0] >= p[1]) {
            return false;
        }
        if let Some(above) = rows.last() {
            if row.iter().zip(above).any(|(b, a)| b <= a) {
                return false;
            }
        }
        rows.push(row);
    }
    true
}

/// `Σ_λ j_λ^w S_λ`.
pub fn fgrs_sum(w: &Permutation) -> LambdaPoly {
    let mut out = LambdaPoly::zero();
    for (lam, n) in fgrs_coefficients(w) {
        out.add_term(lam, BasePoly::constant(n));
    }
    out
}

/// Classical double Schubert polynomial `𝔖_w(x; y)` for `w ∈ S_{≠0}`.
pub fn classical_double(w: &Permutation) -> Option<BasePoly> {
    let (neg, pos) = w.split_nonzero()?;
    let plus = classical_plus(&pos);
    let minus = classical_plus(&neg.omega()).substitute(&|v| match v {
        Var::X(i) => Some(-BasePoly::x(1 - i)),
        Var::Y(i) => Some(-BasePoly::y(1 - i)),
        _ => None,
    });
    Some(&plus * &minus)
}

/// Lascoux–Schützenberger double Schubert polynomial for `w ∈ S_+`.
fn classical_plus(w: &Permutation) -> BasePoly {
    let Some((_, n)) = w.support() else {
        return BasePoly::one();
    };
    let mut f = BasePoly::one();
    for i in 1..n {
        for j in 1..=(n - i) {
            f = &f * &(&BasePoly::x(i) - &BasePoly::y(j));
        }
    }
    let top = Permutation::longest(1, n);
    for i in top.inverse().compose(w).reduced_word() {
        f = f.divided_difference(Var::X(i), Var::X(i + 1));
    }
    f
}

/// `γ^m(S_λ)` by enumerating tableaux on `λ/μ` in `1' < 1 < ⋯ < m' < m`:
/// each `k` fills a horizontal strip weighted `x_k`, each `k'` a vertical
/// strip weighted `y_k`.
pub fn gamma_schur_tableaux(lam: &Partition, m: u32) -> LambdaPoly {
    let mut layer: BTreeMap<Partition, BasePoly> = BTreeMap::new();
    layer.insert(lam.clone(), BasePoly::one());
    for k in (1..=m as i32).rev() {
        layer = remove_strips(&layer, &BasePoly::x(k), false);
        layer = remove_strips(&layer, &BasePoly::y(k), true);
    }
    let mut out = LambdaPoly::zero();
    for (mu, p) in layer {
        out.add_term(mu, p);
    }
    out
}

fn remove_strips(
    layer: &BTreeMap<Partition, BasePoly>,
    weight: &BasePoly,
    vertical: bool,
) -> BTreeMap<Partition, BasePoly> {
    let mut out: BTreeMap<Partition, BasePoly> = BTreeMap::new();
    for (lam, p) in layer {
        let shape = if vertical { lam.conjugate() } else { lam.clone() };
        for nu in horizontal_strip_removals(&shape) {
            let size = shape.weight() - nu.weight();
            let nu = if vertical { nu.conjugate() } else { nu };
            let term = p * &weight.pow(size);
            let slot = out.entry(nu).or_insert_with(BasePoly::zero);
            *slot = slot.add_ref(&term);
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// All `ν ⊆ λ` with `λ/ν` a horizontal strip: `λ_{i+1} ≤ ν_i ≤ λ_i`.
fn horizontal_strip_removals(lam: &Partition) -> Vec<Partition> {
    let parts = lam.parts();
    let mut out = vec![Vec::new()];
    for (i, &top) in parts.iter().enumerate() {
        let floor = parts.get(i + 1).copied().unwrap_or(0);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (floor..=top).map(move |v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(Partition::from_multiset).collect()
}
