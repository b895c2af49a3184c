//! Identities satisfied by `𝔖_w` and `𝐒_w`, phrased as executable checks.
//!
//! Each check returns whether both sides agree exactly.

use std::collections::BTreeSet;

use super::construct::{classical_double, schubert, stanley, twisted};
use super::operators::del_x;
use crate::error::Result;
use crate::perm::Permutation;
use crate::poly::maps::theta_series;
use crate::poly::series::linear_factors;
use crate::poly::{BasePoly, ChernSeries, LambdaPoly, Var};

/// Chern series `φ_v(c) = ∏_{i ≤ 0, i ∈ v(Z>0)} (1+y_i) / ∏_{j > 0, j ∈ v(Z≤0)} (1+y_j)`.
pub fn localization_series(v: &Permutation, bound: usize) -> ChernSeries<BasePoly> {
    let (mut gained, mut lost) = (Vec::new(), Vec::new());
    if let Some((lo, hi)) = v.support() {
        for a in lo..=hi {
            let b = v.apply(a);
            if a > 0 && b <= 0 {
                gained.push(Var::Y(b));
            } else if a <= 0 && b > 0 {
                lost.push(Var::Y(b));
            }
        }
    }
    linear_factors(&gained, 1, false, bound).mul(&linear_factors(&lost, 1, true, bound))
}

/// `φ_v(f) ∈ Z[y]`: `x_i ↦ -y_{v(i)}` and `c ↦ φ_v(c)`.
pub fn localize(v: &Permutation, f: &LambdaPoly) -> Result<BasePoly> {
    let bound = f.terms().map(|(l, _)| l.weight() as usize).max().unwrap_or(0);
    let series = localization_series(v, bound);
    f.specialize(&series, &|var| match var {
        Var::X(i) => Some(-BasePoly::y(v.apply(i))),
        _ => None,
    })
}

/// `A_i(g)(v) = (g(v·s_i) − g(v)) / (y_{v(i)} − y_{v(i+1)})`, exact in `Z[y]`.
pub fn a_operator(
    i: i32,
    v: &Permutation,
    g: &dyn Fn(&Permutation) -> Result<BasePoly>,
) -> Result<BasePoly> {
    let numerator = &g(&v.mul_simple_right(i))? - &g(v)?;
    numerator.div_by_difference(Var::Y(v.apply(i)), Var::Y(v.apply(i + 1)))
}

/// `A_i ∘ Φ = Φ ∘ ∂_i^x` at each sampled `v`.
pub fn phi_compat_check(i: i32, f: &LambdaPoly, sample: &[Permutation]) -> Result<bool> {
    let lowered = del_x(i, f);
    for v in sample {
        let lhs = a_operator(i, v, &|u| localize(u, f))?;
        if lhs != localize(v, &lowered)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All length-additive factorizations `w = v·u`, as pairs `(v, u)`.
pub fn factorizations(w: &Permutation) -> Vec<(Permutation, Permutation)> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![(w.clone(), Permutation::identity())];
    let mut out = Vec::new();
    while let Some((v, u)) = stack.pop() {
        if !seen.insert(u.clone()) {
            continue;
        }
        for i in v.right_descents() {
            stack.push((v.mul_simple_right(i), u.mul_simple_left(i)));
        }
        out.push((v, u));
    }
    out
}

fn aux_series(letter: char, n: usize, bound: usize) -> ChernSeries<BasePoly> {
    let vars: Vec<Var> = (1..=n as i32).map(|i| Var::Aux(letter, i)).collect();
    linear_factors(&vars, 1, false, bound)
}

fn rename_y(f: &LambdaPoly, letter: char) -> LambdaPoly {
    f.rename(|v| match v {
        Var::Y(i) => Var::Aux(letter, i),
        other => other,
    })
}

/// `𝔖_w(b, −s, y)` with `b` a series of base polynomials and `s` the letter `from`,
/// then `y` renamed to the letter `to` (`None` keeps `y`).
fn specialized(w: &Permutation, b: &ChernSeries<BasePoly>, from: char, to: Option<char>) -> Result<BasePoly> {
    let f = schubert(w);
    let f = match to {
        Some(letter) => rename_y(&f, letter),
        None => f,
    };
    f.specialize(b, &|v| match v {
        Var::X(i) => Some(-BasePoly::var(Var::Aux(from, i))),
        _ => None,
    })
}

/// `𝔖_w(a·b, x, y) = Σ_{v·u ≐ w} 𝔖_u(a, x, t) 𝔖_v(b, −t, y)` with `a = c` generic
/// and `b = ∏_{i ≤ ℓ(w)} (1 + u_i)`.
pub fn decompose_check(w: &Permutation) -> Result<bool> {
    let n = w.length();
    let b = aux_series('u', n, n);
    let lhs = schubert(w).twist_c(&b)?;
    let mut rhs = LambdaPoly::zero();
    for (v, u) in factorizations(w) {
        let left = rename_y(&schubert(&u), 't');
        let right = specialized(&v, &b, 't', None)?;
        rhs += left.scale(&right);
    }
    Ok(lhs == rhs)
}

/// Three-factor form: `𝔖_w(a·c·b, x, y) = Σ_{v·t·u ≐ w} 𝔖_u(a,x,s) 𝔖_t(c,−s,t) 𝔖_v(b,−t,y)`,
/// with `c = ∏(1 + u_i)`, `b = ∏(1 + r_i)`.
pub fn decompose_triple_check(w: &Permutation) -> Result<bool> {
    let n = w.length();
    let middle = aux_series('u', n, n);
    let outer = aux_series('r', n, n);
    let lhs = schubert(w).twist_c(&middle.mul(&outer))?;
    let mut rhs = LambdaPoly::zero();
    for (vt, u) in factorizations(w) {
        let left = rename_y(&schubert(&u), 's');
        for (v, t) in factorizations(&vt) {
            let mid = specialized(&t, &middle, 's', Some('t'))?;
            let right = specialized(&v, &outer, 't', None)?;
            rhs += left.scale(&(&mid * &right));
        }
    }
    Ok(lhs == rhs)
}

/// Single Schubert polynomial `𝔖_w(x)` for `w ∈ S_{≠0}`.
fn classical_single(w: &Permutation) -> Option<BasePoly> {
    classical_double(w).map(|p| p.substitute(&|v| matches!(v, Var::Y(_)).then(BasePoly::zero)))
}

/// `Σ_{v⁻¹·t·u ≐ w, u,v ∈ S_{≠0}} 𝔖_u(x) 𝔖_v(y) F_t`.
pub fn specialization_sum(w: &Permutation) -> LambdaPoly {
    let mut out = LambdaPoly::zero();
    for (vt, u) in factorizations(w) {
        let Some(su) = classical_single(&u) else { continue };
        for (v_inv, t) in factorizations(&vt) {
            let Some(sv) = classical_single(&v_inv.inverse()) else { continue };
            let sv = sv.rename(|var| match var {
                Var::X(i) => Var::Y(i),
                other => other,
            });
            out += stanley(&t).scale(&(&su * &sv));
        }
    }
    out
}

/// `𝔖_w(0,x,y) = 𝔖_w(x,−y)` for `w ∈ S_{≠0}`, and `0` otherwise.
pub fn c_zero_check(w: &Permutation) -> bool {
    let lhs = schubert(w).c_to_zero();
    match classical_double(w) {
        Some(p) => lhs == negate_y(&p),
        None => lhs.is_zero(),
    }
}

/// `𝐒_w(0,x,y) = 𝔖_w(x, z−y)` for `w ∈ S_{≠0}`, and `0` otherwise.
pub fn twisted_c_zero_check(w: &Permutation) -> bool {
    let lhs = twisted(w).c_to_zero();
    match classical_double(w) {
        Some(p) => {
            lhs == p.substitute(&|v| match v {
                Var::Y(j) => Some(&BasePoly::z() - &BasePoly::y(j)),
                _ => None,
            })
        }
        None => lhs.is_zero(),
    }
}

fn negate_y(p: &BasePoly) -> BasePoly {
    p.substitute(&|v| match v {
        Var::Y(j) => Some(-BasePoly::y(j)),
        _ => None,
    })
}

/// Smallest `m ≥ 1` with `γ^m(w) ∈ S_+`.
pub fn smallest_positive_shift(w: &Permutation) -> i32 {
    match w.support() {
        Some((lo, _)) => (1 - lo).max(1),
        None => 1,
    }
}

/// `γ^m(𝔖_w)(0,x,y) = 𝔖_{γ^m(w)}(x,−y)` for the given `m` (requires `γ^m(w) ∈ S_+`).
pub fn shifted_classical_check(w: &Permutation, m: i32) -> bool {
    let shifted = w.gamma(m);
    if !shifted.in_s_plus() {
        return false;
    }
    let expected = negate_y(&classical_double(&shifted).expect("S_+ lies in S_≠0"));
    schubert(w).gamma(m).c_to_zero() == expected
}

/// `𝔖_{γ^m(w)} = γ^m(𝔖_w)`.
pub fn back_stability_check(w: &Permutation, m: i32) -> bool {
    schubert(&w.gamma(m)) == schubert(w).gamma(m)
}

fn swap_xy(f: &LambdaPoly) -> LambdaPoly {
    f.rename(|v| match v {
        Var::X(i) => Var::Y(i),
        Var::Y(i) => Var::X(i),
        other => other,
    })
}

/// `𝔖_{w⁻¹}(c,x,y) = 𝔖_w(ω(c), y, x)`.
pub fn duality_check(w: &Permutation) -> bool {
    schubert(&w.inverse()) == swap_xy(&schubert(w).omega(false))
}

/// `𝐒_{w⁻¹}(c,x,y) = 𝐒_w(ω̃(c), y, x)`.
pub fn twisted_duality_check(w: &Permutation) -> bool {
    twisted(&w.inverse()) == swap_xy(&twisted(w).tomega(false))
}

/// `𝔖_{ω(w)} = ω(𝔖_w)` and `𝐒_{ω(w)} = ω̃(𝐒_w)`, with the action on variables.
pub fn omega_check(w: &Permutation) -> bool {
    let plain = schubert(&w.omega()) == schubert(w).omega(true);
    let tilde = twisted(&w.omega()) == twisted(w).tomega(true);
    plain && tilde
}

/// `𝐒_w(c,x,y) = 𝔖_w(θ_z(c), x, y − z)`.
pub fn theta_form_check(w: &Permutation) -> Result<bool> {
    let f = schubert(w);
    let bound = w.length();
    let rhs = f.substitute(&theta_series(&BasePoly::z(), bound), &|v| match v {
        Var::Y(j) => Some(&BasePoly::y(j) - &BasePoly::z()),
        _ => None,
    })?;
    Ok(rhs == twisted(w))
}

/// `𝐒_w(c, x+v, y, z+v) = 𝐒_w` and `𝐒_w(θ_{-v}(c), x, y+v, z+v) = 𝐒_w` for a fresh `v`.
pub fn invariance_check(w: &Permutation) -> Result<bool> {
    Ok(invariance_shift_check(w) && invariance_theta_check(w, -1)?)
}

fn invariance_shift_check(w: &Permutation) -> bool {
    let s = twisted(w);
    let v = BasePoly::var(Var::Aux('v', 0));
    let shifted = s.substitute_vars(&|var| match var {
        Var::X(i) => Some(&BasePoly::x(i) + &v),
        Var::Z => Some(&BasePoly::z() + &v),
        _ => None,
    });
    shifted == s
}

/// `𝐒_w(θ_{sign·v}(c), x, y+v, z+v) = 𝐒_w`; holds for `sign = -1`.
pub fn invariance_theta_check(w: &Permutation, sign: i64) -> Result<bool> {
    let s = twisted(w);
    let v = BasePoly::var(Var::Aux('v', 0));
    let series = theta_series(&v.scale(&crate::Int::from(sign)), w.length());
    let theta = s.substitute(&series, &|var| match var {
        Var::Y(j) => Some(&BasePoly::y(j) + &v),
        Var::Z => Some(&BasePoly::z() + &v),
        _ => None,
    })?;
    Ok(theta == s)
}

/// Split case: `c ↦ ∏_{i=1}^n (1 + z − x_i)/(1 + y_i)` applied to `𝐒_w` gives a
/// homogeneous polynomial of degree `ℓ(w)` in `Z[x,y,z]`.
pub fn split_case_check(w: &Permutation, n: i32) -> Result<bool> {
    let bound = w.length();
    let mut series = ChernSeries::one(bound);
    for i in 1..=n {
        let num = ChernSeries::linear(&BasePoly::z() - &BasePoly::x(i), bound);
        let den = ChernSeries::inverse_linear(BasePoly::y(i), bound);
        series = series.mul(&num).mul(&den);
    }
    let value = twisted(w).specialize(&series, &|_| None)?;
    Ok(value.is_zero() || value.is_homogeneous_of(bound as u32))
}

/// Whether `p ∈ Z_{≥0}[…, y_i − y_{i+1}, …]`: `p` is unchanged by `y ↦ y + v`
/// and has nonnegative coefficients after `y_i ↦ Σ_{i ≤ j < M} d_j`, `y_M ↦ 0`.
pub fn positive_in_y_differences(p: &BasePoly) -> bool {
    if p.contains_var(|v| !matches!(v, Var::Y(_))) {
        return false;
    }
    let v = BasePoly::var(Var::Aux('v', 0));
    let shifted = p.substitute(&|var| match var {
        Var::Y(j) => Some(&BasePoly::y(j) + &v),
        _ => None,
    });
    if shifted != *p {
        return false;
    }
    let top = p
        .variables()
        .into_iter()
        .filter_map(|var| match var {
            Var::Y(j) => Some(j),
            _ => None,
        })
        .max()
        .unwrap_or(0)
        + 1;
    let in_gaps = p.substitute(&|var| match var {
        Var::Y(j) => {
            let mut acc = BasePoly::zero();
            for k in j..top {
                acc = &acc + &BasePoly::var(Var::Aux('d', k));
            }
            Some(acc)
        }
        _ => None,
    });
    in_gaps.all_coeffs_nonnegative()
}

/// Irreducibility of a homogeneous element of `Λ = Z[c]` of degree at most 4,
/// by exhausting the possible degrees of a factor. `None` above degree 4.
pub fn irreducible_in_lambda(f: &LambdaPoly) -> Option<bool> {
    let n = f.degree()?;
    if n > 4 || f.contains_var(|_| true) {
        return None;
    }
    if n <= 1 {
        return Some(true);
    }
    let c = f.to_cpoly();
    let monos: Vec<&crate::poly::Partition> = c.terms().map(|(m, _)| m).collect();
    // A degree-one factor is a multiple of c_1; by symmetry so is a cofactor of degree n − 1.
    if monos.iter().all(|m| m.parts().contains(&1)) {
        return Some(false);
    }
    if n < 4 {
        return Some(true);
    }
    // Degree 2 × 2: both factors lie in span{c_2, c_1²}, so f is a binary
    // quadratic form in (c_2, c_1²); it splits over Q iff its discriminant is a square.
    let coeff = |parts: &[u32]| -> crate::Int {
        let key = crate::poly::Partition::from_multiset(parts.to_vec());
        c.terms()
            .find(|(m, _)| **m == key)
            .map(|(_, p)| p.constant_term())
            .unwrap_or_default()
    };
    let in_span = monos.iter().all(|m| m.parts().iter().all(|&k| k <= 2));
    if !in_span {
        return Some(true);
    }
    let (a, b, d) = (coeff(&[2, 2]), coeff(&[2, 1, 1]), coeff(&[1, 1, 1, 1]));
    let disc = &b * &b - crate::Int::from(4) * &a * &d;
    Some(!is_square(&disc))
}

fn is_square(n: &crate::Int) -> bool {
    use num_traits::Signed;
    if n.is_negative() {
        return false;
    }
    if *n == crate::Int::from(0) {
        return true;
    }
    // Newton iteration from above.
    let two = crate::Int::from(2);
    let mut r = n.clone();
    loop {
        let next = (&r + n / &r) / &two;
        if next >= r {
            break;
        }
        r = next;
    }
    &r * &r == *n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_base, parse_lambda};

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn localization_examples() {
        let s0 = Permutation::simple(0);
        assert!(localize(&Permutation::identity(), &parse_lambda("c1").unwrap()).unwrap().is_zero());
        assert_eq!(localize(&s0, &parse_lambda("c1").unwrap()).unwrap(), parse_base("y0 - y1").unwrap());
        assert_eq!(localize(&s0, &schubert(&s0)).unwrap(), parse_base("y0 - y1").unwrap());
    }

    #[test]
    fn a_operator_intertwines() {
        let sample: Vec<Permutation> = Permutation::all_in_window(-1, 1);
        for w in Permutation::all_in_window(-1, 2).into_iter().filter(|w| w.length() <= 2) {
            for i in -1..=1 {
                assert!(phi_compat_check(i, &schubert(&w), &sample).unwrap(), "{w} i={i}");
            }
        }
    }

    #[test]
    fn decomposition_small() {
        for w in ["id", "w@0:1,0", "w@1:2,1,4,3", "w@0:2,0,1"] {
            let w = perm(w);
            assert!(decompose_check(&w).unwrap(), "{w}");
            assert!(decompose_triple_check(&w).unwrap(), "{w}");
        }
    }

    #[test]
    fn specialization_formula() {
        for w in Permutation::all_in_window(-1, 2) {
            assert_eq!(specialization_sum(&w), schubert(&w), "{w}");
        }
    }

    #[test]
    fn identities_on_small_window() {
        for w in Permutation::all_in_window(0, 2) {
            assert!(c_zero_check(&w), "{w}");
            assert!(twisted_c_zero_check(&w), "{w}");
            assert!(duality_check(&w), "{w}");
            assert!(twisted_duality_check(&w), "{w}");
            assert!(omega_check(&w), "{w}");
            assert!(theta_form_check(&w).unwrap(), "{w}");
            assert!(invariance_check(&w).unwrap(), "{w}");
            assert!(back_stability_check(&w, -1) && back_stability_check(&w, 2), "{w}");
            let m = smallest_positive_shift(&w);
            assert!(shifted_classical_check(&w, m) && shifted_classical_check(&w, m + 1), "{w}");
            assert!(split_case_check(&w, 3).unwrap(), "{w}");
        }
    }

    #[test]
    fn theta_invariance_sign() {
        let w = perm("w@0:1,2,0");
        assert!(invariance_theta_check(&w, -1).unwrap());
        assert!(!invariance_theta_check(&w, 1).unwrap());
    }

    #[test]
    fn positivity_detector() {
        assert!(positive_in_y_differences(&parse_base("y1 - y2").unwrap()));
        assert!(positive_in_y_differences(&parse_base("(y0 - y2)(y1-y2)").unwrap()));
        assert!(!positive_in_y_differences(&parse_base("y2 - y1").unwrap()));
        assert!(!positive_in_y_differences(&parse_base("y1").unwrap()));
    }

    #[test]
    fn irreducibility_detector() {
        assert_eq!(irreducible_in_lambda(&parse_lambda("c1^2").unwrap()), Some(false));
        assert_eq!(irreducible_in_lambda(&parse_lambda("S[2,1]").unwrap()), Some(true));
        assert_eq!(irreducible_in_lambda(&parse_lambda("S[2,2]").unwrap()), Some(true));
        assert_eq!(irreducible_in_lambda(&parse_lambda("(c2 + c1^2)(c2 - 2 c1^2)").unwrap()), Some(false));
        assert_eq!(irreducible_in_lambda(&parse_lambda("c2^2 + c1^4").unwrap()), Some(true));
    }
}
