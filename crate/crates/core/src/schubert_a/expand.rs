//! Expansions in the Schubert basis: interpolation, structure constants,
//! Monk's rule and the transition recursion.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::construct::{schubert, schubert_vexillary};
use super::operators::del_x;
use crate::perm::{Permutation, TripleA};
use crate::poly::{BasePoly, LambdaPoly, Var};
use crate::ring::Ring;

/// A finite combination `Σ a_w 𝔖_w` with coefficients in `Z[x,y,z]`.
pub type SchubertExpansion = BTreeMap<Permutation, BasePoly>;

fn accumulate(out: &mut SchubertExpansion, w: Permutation, a: BasePoly) {
    let slot = out.entry(w).or_insert_with(BasePoly::zero);
    *slot = slot.add_ref(&a);
}

fn prune(mut e: SchubertExpansion) -> SchubertExpansion {
    e.retain(|_, a| !a.is_zero());
    e
}

/// Evaluate `Σ a_w 𝔖_w`.
pub fn assemble(e: &SchubertExpansion) -> LambdaPoly {
    let mut out = LambdaPoly::zero();
    for (w, a) in e {
        out += schubert(w).scale(a);
    }
    out
}

/// Indices `i` for which `∂_i^x f` can be nonzero.
fn active_indices(f: &LambdaPoly) -> BTreeSet<i32> {
    let mut out = BTreeSet::new();
    for v in f.variables() {
        if let Var::X(a) = v {
            out.insert(a - 1);
            out.insert(a);
        }
    }
    if f.terms().any(|(lam, _)| !lam.is_empty()) {
        out.insert(0);
    }
    out
}

/// Coefficients `a_w(y) = η(∂_w^x f)` of `f = Σ a_w 𝔖_w`.
pub fn interpolate(f: &LambdaPoly) -> SchubertExpansion {
    let mut out = SchubertExpansion::new();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([(Permutation::identity(), f.clone())]);
    seen.insert(Permutation::identity());
    while let Some((w, g)) = queue.pop_front() {
        accumulate(&mut out, w.clone(), g.eta());
        for i in active_indices(&g) {
            if w.has_left_descent(i) {
                continue;
            }
            let child = w.mul_simple_left(i);
            if !seen.insert(child.clone()) {
                continue;
            }
            let h = del_x(i, &g);
            if !h.is_zero() {
                queue.push_back((child, h));
            }
        }
    }
    prune(out)
}

/// Structure constants `c_{uv}^w` of `𝔖_u 𝔖_v = Σ c_{uv}^w 𝔖_w`.
pub fn product_structure(u: &Permutation, v: &Permutation) -> SchubertExpansion {
    interpolate(&(&schubert(u) * &schubert(v)))
}

/// A window large enough to hold every cover relevant to a degree-one
/// multiplication of `w` at position `k`.
fn monk_window(w: &Permutation, k: i32) -> (i32, i32) {
    let (lo, hi) = w.support().unwrap_or((k, k + 1));
    (lo.min(k) - 1, hi.max(k + 1) + 1)
}

/// `𝔖_{s_k} 𝔖_w = Σ_{i≤k<j, w↗wt_{ij}} 𝔖_{wt_{ij}} + Σ_{i≤k} (y_i − y_{w(i)}) 𝔖_w`.
pub fn monk(k: i32, w: &Permutation) -> SchubertExpansion {
    let (lo, hi) = monk_window(w, k);
    let mut out = SchubertExpansion::new();
    for cover in w.right_covers(lo, hi) {
        if cover.i <= k && k < cover.j {
            accumulate(&mut out, cover.result, BasePoly::one());
        }
    }
    let mut diag = BasePoly::zero();
    for i in lo..=k {
        diag = &(&diag + &BasePoly::y(i)) - &BasePoly::y(w.apply(i));
    }
    accumulate(&mut out, w.clone(), diag);
    prune(out)
}

/// `(x_k + y_{w(k)}) 𝔖_w = Σ_{k<j} 𝔖_{wt_{kj}} − Σ_{i<k} 𝔖_{wt_{ik}}`, both over covers.
pub fn monk_linear(k: i32, w: &Permutation) -> SchubertExpansion {
    let (lo, hi) = monk_window(w, k);
    let mut out = SchubertExpansion::new();
    for cover in w.right_covers(lo, hi) {
        if cover.i == k {
            accumulate(&mut out, cover.result, BasePoly::one());
        } else if cover.j == k {
            accumulate(&mut out, cover.result, -BasePoly::one());
        }
    }
    prune(out)
}

/// One step of the transition recursion:
/// `𝔖_w = (x_r + y_{w(s)}) 𝔖_v + Σ_{i<r, v↗vt_{ir}} 𝔖_{vt_{ir}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionStep {
    /// Last descent of `w`.
    pub r: i32,
    /// Largest `s > r` with `w(s) < w(r)`.
    pub s: i32,
    /// `v = w t_{rs}`.
    pub v: Permutation,
    /// `x_r + y_{w(s)}`.
    pub factor: BasePoly,
    /// The covers `v t_{ir}` with `i < r`.
    pub covers: Vec<Permutation>,
}

impl TransitionStep {
    pub fn expansion(&self) -> SchubertExpansion {
        let mut out = SchubertExpansion::new();
        accumulate(&mut out, self.v.clone(), self.factor.clone());
        for c in &self.covers {
            accumulate(&mut out, c.clone(), BasePoly::one());
        }
        prune(out)
    }
}

/// The transition step for `w ≠ id`.
pub fn transition(w: &Permutation) -> Option<TransitionStep> {
    let (lo, hi) = w.support()?;
    let r = *w.right_descents().last()?;
    let s = (r + 1..=hi).rev().find(|&j| w.apply(j) < w.apply(r))?;
    let v = w.compose(&Permutation::transposition(r, s));
    let factor = &BasePoly::x(r) + &BasePoly::y(w.apply(s));
    let covers = v
        .right_covers(lo - 1, r)
        .into_iter()
        .filter(|c| c.j == r)
        .map(|c| c.result)
        .collect();
    Some(TransitionStep { r, s, v, factor, covers })
}

/// Dominant: 132-avoiding on its window.
pub fn is_dominant(w: &Permutation) -> bool {
    let vals = w.images();
    let n = vals.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if vals[a] < vals[c] && vals[c] < vals[b] {
                    return false;
                }
            }
        }
    }
    true
}

/// Result of iterating the transition recursion down to dominant leaves.
#[derive(Clone, Debug)]
pub struct TransitionTree {
    /// `𝔖_w = Σ coefficient · 𝔖_leaf`; every key is dominant unless `capped`.
    pub leaves: SchubertExpansion,
    /// Largest depth reached.
    pub depth: usize,
    /// Whether unexpanded non-dominant terms remain because of the depth cap.
    pub capped: bool,
}

impl TransitionTree {
    /// Evaluate the expansion: dominant leaves through the vexillary formula,
    /// terms left over by the depth cap through [`schubert`].
    pub fn assemble(&self) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (w, a) in &self.leaves {
            let value = if is_dominant(w) {
                let tau = TripleA::from_permutation(w).expect("dominant permutations are vexillary");
                schubert_vexillary(&tau)
            } else {
                schubert(w)
            };
            out += value.scale(a);
        }
        out
    }

    /// Terms that are not dominant.
    pub fn unexpanded(&self) -> impl Iterator<Item = &Permutation> {
        self.leaves.keys().filter(|w| !is_dominant(w))
    }
}

/// Iterate the transition recursion on every non-dominant term, at most
/// `max_depth` times.
pub fn transition_tree(w: &Permutation, max_depth: usize) -> TransitionTree {
    let mut frontier = SchubertExpansion::new();
    accumulate(&mut frontier, w.clone(), BasePoly::one());
    let mut depth = 0;
    loop {
        let pending: Vec<Permutation> = frontier.keys().filter(|u| !is_dominant(u)).cloned().collect();
        if pending.is_empty() {
            return TransitionTree { leaves: frontier, depth, capped: false };
        }
        if depth == max_depth {
            return TransitionTree { leaves: frontier, depth, capped: true };
        }
        depth += 1;
        for u in pending {
            let a = frontier.remove(&u).expect("pending key present");
            let step = transition(&u).expect("non-dominant permutations are not the identity");
            for (t, b) in step.expansion() {
                accumulate(&mut frontier, t, &a * &b);
            }
        }
        frontier = prune(frontier);
    }
}
