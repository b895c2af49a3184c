//! Vexillary type C Schubert polynomials and the comparison with type A.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::series::linear_factors;
use crate::poly::{BasePoly, CPoly, ChernSeries, LambdaPoly, StrictPartition, Var};
use crate::ring::{pfaffian, Ring};
use crate::schubert_a::twisted;
use crate::Int;

use super::gamma::{normal_form, relation_coeff, CMonomialPoly, GammaPoly};
use super::triple::TripleC;

/// The generic series `1 + c_1 + ⋯ + c_D` over `Z[z,c][x,y]`.
pub fn generic_series(bound: usize) -> ChernSeries<CPoly> {
    ChernSeries::from_components((0..=bound as i64).map(CPoly::c_index).collect())
        .expect("c_0 = 1")
}

/// `Pf_λ(c(1), …, c(r))` with `(k,l)` entry
/// `Σ_{0≤i≤j≤λ_l} (−1)^j (C(j,i)+C(j−1,i)) z^i c(k)_{λ_k+j−i} c(l)_{λ_l−j}`.
pub fn pf_lambda(series: &[ChernSeries<CPoly>], lam: &StrictPartition) -> Result<CMonomialPoly> {
    let r = lam.parts().len();
    if series.len() < r {
        return Err(Error::domain(format!("{lam} needs {r} series, got {}", series.len())));
    }
    let mut parts: Vec<i64> = lam.parts().iter().map(|&p| p as i64).collect();
    if r % 2 == 1 {
        parts.push(0);
    }
    let need = parts.iter().take(2).sum::<i64>() as usize;
    if let Some(s) = series[..r].iter().find(|s| s.bound() < need) {
        return Err(Error::DegreeBound { needed: need, bound: s.bound() });
    }
    let one = ChernSeries::one(0);
    let row = |k: usize| if k < r { &series[k] } else { &one };
    let entry = |k: usize, l: usize| -> CPoly {
        let (a, b) = (parts[k], parts[l]);
        let mut acc = CPoly::zero();
        for j in 0..=b {
            for i in 0..=j {
                let n = relation_coeff(i, j);
                let left = row(k).get(a + j - i).expect("bound checked");
                let right = row(l).get(b - j).expect("bound checked");
                if n == 0 || left.is_zero() || right.is_zero() {
                    continue;
                }
                let zi = BasePoly::term(crate::poly::Monomial::power(Var::Z, i as u32), Int::from(n));
                acc = acc.add_ref(&left.mul_ref(&right).scale(&zi));
            }
        }
        acc
    };
    Ok(pfaffian(parts.len(), &entry))
}

/// `c(k) = c · ∏_{a<p_i}(1+x_a) · ∏_{b<q_i}(1+y_b)` for each row `k` of the triple.
pub fn row_series(tau: &TripleC, bound: usize) -> Vec<ChernSeries<CPoly>> {
    let c = generic_series(bound);
    (1..=tau.rows())
        .map(|row| {
            let i = tau.governing(row);
            let xs: Vec<Var> = (1..tau.p()[i] as i32).map(Var::X).collect();
            let ys: Vec<Var> = (1..tau.q()[i] as i32).map(Var::Y).collect();
            let a = linear_factors(&xs, 1, false, bound).mul(&linear_factors(&ys, 1, false, bound));
            c.mul(&a.map(|p| CPoly::from_base(p.clone())))
        })
        .collect()
}

/// `𝐒^C_{w(τ)} = Pf_{λ(τ)}(c(1), …, c(k_s))` in normal form.
pub fn schubert_c_vexillary(tau: &TripleC) -> Result<GammaPoly> {
    let lam = tau.partition();
    let bound = lam.parts().iter().take(2).sum::<u32>() as usize;
    let pf = pf_lambda(&row_series(tau, bound), &lam)?;
    normal_form(&pf)
}

/// The map `Λ[x_+, y_+, z] → Γ[x_+, y_+]` fixing `c`, `x`, `y`.
pub fn project_a_to_c(f: &LambdaPoly) -> Result<GammaPoly> {
    if let Some(v) = f.variables().into_iter().find(|v| match v {
        Var::X(i) | Var::Y(i) => *i <= 0,
        Var::Z => false,
        Var::Aux(..) => true,
    }) {
        return Err(Error::domain(format!("{v} has no image in Γ[x+, y+]")));
    }
    normal_form(&f.to_cpoly())
}

/// `c` and `ω̃(c)` have the same image: compare the projections of `f` and of
/// `f` with `ω̃` applied to `c` only.
pub fn tomega_collapse_check(f: &LambdaPoly) -> Result<bool> {
    Ok(project_a_to_c(f)? == project_a_to_c(&f.tomega(false))?)
}

/// Image of the twisted type A polynomial of `w ∈ S_+`.
pub fn projected_schubert(w: &Permutation) -> Result<GammaPoly> {
    if !w.in_s_plus() {
        return Err(Error::domain(format!("{w} is not in S+")));
    }
    project_a_to_c(&twisted(w))
}

/// Divided difference in `x_i, x_{i+1}` (or `y`) applied to the coefficients.
pub fn divided_difference(f: &GammaPoly, a: Var, b: Var) -> GammaPoly {
    f.map_coeffs(|p| p.divided_difference(a, b))
}

/// For `i ≥ 1`: `∂_i^x` sends the image of `w` to that of `w·s_i` on a
/// descent and to zero otherwise; likewise `∂_i^y` with `s_i·w`.
pub fn descent_recursion_check(w: &Permutation, i: i32) -> Result<bool> {
    if i < 1 {
        return Err(Error::domain("only operators with i >= 1 descend to Γ[x+, y+]"));
    }
    let f = projected_schubert(w)?;
    let dx = divided_difference(&f, Var::X(i), Var::X(i + 1));
    let want_x = if w.has_right_descent(i) {
        projected_schubert(&w.mul_simple_right(i))?
    } else {
        GammaPoly::zero()
    };
    let dy = divided_difference(&f, Var::Y(i), Var::Y(i + 1));
    let want_y = if w.has_left_descent(i) {
        projected_schubert(&w.mul_simple_left(i))?
    } else {
        GammaPoly::zero()
    };
    Ok(dx == want_x && dy == want_y)
}

/// Image of `w⁻¹` equals the image of `w` with `x` and `y` exchanged.
pub fn inverse_symmetry_check(w: &Permutation) -> Result<bool> {
    let swap = |v: Var| match v {
        Var::X(i) => Var::Y(i),
        Var::Y(i) => Var::X(i),
        other => other,
    };
    Ok(projected_schubert(&w.inverse())? == projected_schubert(w)?.rename(swap))
}

/// The worked value for `w = 3 2 1`:
/// `c_3 + Q_21 + (x1+y1+ᾱ12+ᾱ21) c_2 + (y1+ᾱ12)(x1+ᾱ21) c_1 + ᾱ11 ᾱ12 ᾱ21`,
/// with `ᾱ_ij = x_i + y_j − z`.
pub fn example_321() -> GammaPoly {
    let abar = |i: i32, j: i32| &(&BasePoly::x(i) + &BasePoly::y(j)) - &BasePoly::z();
    let sp = |v: &[u32]| StrictPartition::new(v.to_vec()).expect("strict");
    let (x1, y1) = (BasePoly::x(1), BasePoly::y(1));
    let mut out = GammaPoly::q(sp(&[3]));
    out.add_term(sp(&[2, 1]), BasePoly::one());
    out.add_term(sp(&[2]), &(&(&x1 + &y1) + &abar(1, 2)) + &abar(2, 1));
    out.add_term(sp(&[1]), &(&y1 + &abar(1, 2)) * &(&x1 + &abar(2, 1)));
    out.add_term(StrictPartition::empty(), &(&abar(1, 1) * &abar(1, 2)) * &abar(2, 1));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::type_c::gamma::q_pfaffian;

    fn sp(v: &[u32]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    fn w(v: &[i32]) -> Permutation {
        Permutation::from_window(1, v.to_vec()).unwrap()
    }

    #[test]
    fn generic_entries_give_q() {
        for n in 1..=6 {
            for lam in StrictPartition::all_of(n) {
                let series = vec![generic_series(12); lam.parts().len()];
                assert_eq!(pf_lambda(&series, &lam).unwrap(), q_pfaffian(&lam), "{lam}");
            }
        }
    }

    #[test]
    fn single_row_and_padding() {
        let tau: TripleC = "k=1;p=2;q=2".parse().unwrap();
        let series = row_series(&tau, 3);
        let got = pf_lambda(&series, &sp(&[3])).unwrap();
        assert_eq!(got, series[0].get(3).unwrap());
        // An explicit trailing zero row changes nothing.
        let mut padded = series.clone();
        padded.push(generic_series(3));
        assert_eq!(pf_lambda(&padded, &sp(&[3])).unwrap(), got);
        assert!(pf_lambda(&[], &sp(&[1])).is_err());
    }

    #[test]
    fn smallest_triple() {
        let tau: TripleC = "k=1;p=1;q=1".parse().unwrap();
        assert_eq!(schubert_c_vexillary(&tau).unwrap(), GammaPoly::q(sp(&[1])));
    }

    #[test]
    fn staircase_triple_is_symmetric_locus() {
        let tau: TripleC = "k=2;p=1;q=1".parse().unwrap();
        assert_eq!(schubert_c_vexillary(&tau).unwrap(), GammaPoly::q(sp(&[2, 1])));
    }

    #[test]
    fn two_row_triple_by_hand() {
        // λ = (3,2), both rows c·(1+x1).
        let tau: TripleC = "k=2;p=2;q=1".parse().unwrap();
        assert_eq!(tau.partition(), sp(&[3, 2]));
        let got = schubert_c_vexillary(&tau).unwrap();
        assert!(got.is_homogeneous_of(5));
        assert_eq!(got.coeff(&sp(&[3, 2])), BasePoly::one());
    }

    #[test]
    fn vexillary_results_are_homogeneous() {
        for s in ["k=1;p=2;q=1", "k=1;p=1;q=3", "k=1,2;p=3,1;q=1,1", "k=1,3;p=3,1;q=3,1"] {
            let tau: TripleC = s.parse().unwrap();
            let f = schubert_c_vexillary(&tau).unwrap();
            assert!(f.is_homogeneous_of(tau.partition().weight()), "{s}: {f}");
            assert_eq!(f.coeff(&tau.partition()), BasePoly::one());
        }
    }

    #[test]
    fn projection_of_321() {
        let got = projected_schubert(&w(&[3, 2, 1])).unwrap();
        assert_eq!(got, example_321());
    }

    #[test]
    fn projection_rejects_nonpositive_indices() {
        assert!(project_a_to_c(&LambdaPoly::from_base(BasePoly::x(0))).is_err());
        assert!(projected_schubert(&Permutation::simple(0)).is_err());
        let c1sq = LambdaPoly::c(1).pow(2);
        let got = project_a_to_c(&c1sq).unwrap();
        assert_eq!(got.coeff(&sp(&[2])), BasePoly::from(2));
        assert_eq!(got.coeff(&sp(&[1])), BasePoly::z());
    }

    #[test]
    fn tomega_collapses() {
        for v in [&[2, 1][..], &[1, 3, 2], &[3, 2, 1], &[2, 3, 1]] {
            assert!(tomega_collapse_check(&twisted(&w(v))).unwrap(), "{v:?}");
        }
        assert!(tomega_collapse_check(&LambdaPoly::c(2).pow(2)).unwrap());
    }

    #[test]
    fn recursions_and_symmetry_on_s3() {
        for u in Permutation::all_in_window(1, 3) {
            for i in 1..=3 {
                assert!(descent_recursion_check(&u, i).unwrap(), "{u} at {i}");
            }
            assert!(inverse_symmetry_check(&u).unwrap(), "{u}");
        }
    }
}
