use proptest::prelude::*;

use schubert::perm::Permutation;
use schubert::poly::{BasePoly, LambdaPoly, Monomial, Partition, Var};
use schubert::ring::Ring;
use schubert::Int;

const VARS: [Var; 9] = [
    Var::X(-1),
    Var::X(0),
    Var::X(1),
    Var::X(2),
    Var::Y(-1),
    Var::Y(0),
    Var::Y(1),
    Var::Y(2),
    Var::Z,
];

fn shape(max: u32) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = Partition::all_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn term() -> impl Strategy<Value = LambdaPoly> {
    (shape(3), prop::collection::vec((0..VARS.len(), 1..=2u32), 0..3), -3i64..=3).prop_map(
        |(lam, vars, k)| {
            let mono = Monomial::from_pairs(vars.into_iter().map(|(v, e)| (VARS[v], e)));
            LambdaPoly::term(lam, BasePoly::term(mono, Int::from(k)))
        },
    )
}

fn element() -> impl Strategy<Value = LambdaPoly> {
    prop::collection::vec(term(), 0..4).prop_map(|ts| ts.iter().fold(LambdaPoly::zero(), |a, t| &a + t))
}

fn permutation() -> impl Strategy<Value = Permutation> {
    Just((-2..=3).collect::<Vec<i32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_window(-2, v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(f in element(), g in element(), h in element()) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &LambdaPoly::one(), f.clone());
        prop_assert!((&f - &f).is_zero());
    }

    // Oracle: Jacobi-Trudi expansions multiply as plain c-monomials.
    #[test]
    fn schur_products_match_c_monomials(a in shape(4), b in shape(4)) {
        let (sa, sb) = (LambdaPoly::schur(a), LambdaPoly::schur(b));
        let product = &sa * &sb;
        prop_assert_eq!(product.to_cpoly(), sa.to_cpoly().mul_ref(&sb.to_cpoly()));
        prop_assert_eq!(product.to_cpoly().to_lambda(), product);
    }

    #[test]
    fn omega_is_an_involutive_homomorphism(f in element(), g in element(), on_vars in any::<bool>()) {
        prop_assert_eq!(f.omega(on_vars).omega(on_vars), f.clone());
        prop_assert_eq!((&f * &g).omega(on_vars), &f.omega(on_vars) * &g.omega(on_vars));
    }

    #[test]
    fn theta_composes_additively(f in element(), g in element(), a in -2i64..=2, b in -2i64..=2) {
        let (u, v) = (BasePoly::z().scale(&Int::from(a)), BasePoly::from(b));
        prop_assert_eq!(f.theta(&BasePoly::zero()), f.clone());
        prop_assert_eq!(f.theta(&u).theta(&v), f.theta(&(&u + &v)));
        prop_assert_eq!((&f * &g).theta(&u), &f.theta(&u) * &g.theta(&u));
    }

    #[test]
    fn tilde_omega_is_an_involution(f in element()) {
        prop_assert_eq!(f.tomega(true).tomega(true), f);
    }

    #[test]
    fn gamma_is_a_group_action(f in element(), g in element(), m in -2i32..=2, n in -2i32..=2) {
        prop_assert_eq!(f.gamma(m).gamma(n), f.gamma(m + n));
        prop_assert_eq!((&f * &g).gamma(m), &f.gamma(m) * &g.gamma(m));
    }

    #[test]
    fn permutation_laws(w in permutation(), u in permutation(), m in -3i32..=3, i in -3i32..=3) {
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(Permutation::from_word(&word), w.clone());
        prop_assert_eq!(w.inverse().length(), w.length());
        prop_assert!(w.compose(&w.inverse()).is_identity());
        prop_assert_eq!(w.compose(&u).inverse(), u.inverse().compose(&w.inverse()));
        prop_assert_eq!(w.gamma(m).length(), w.length());
        prop_assert_eq!(w.gamma(m).gamma(-m), w.clone());
        prop_assert_eq!(w.omega().omega(), w.clone());
        prop_assert_eq!(w.omega().length(), w.length());
        let up = w.mul_simple_right(i);
        if w.has_right_descent(i) {
            prop_assert_eq!(up.length() + 1, w.length());
            prop_assert!(up.bruhat_le(&w));
        } else {
            prop_assert_eq!(up.length(), w.length() + 1);
            prop_assert!(w.bruhat_le(&up));
        }
        prop_assert!(Permutation::identity().bruhat_le(&w));
    }

    #[test]
    fn text_forms_roundtrip(f in element(), w in permutation()) {
        prop_assert_eq!(schubert::parse::parse_lambda(&f.to_string()).unwrap(), f);
        prop_assert_eq!(w.to_string().parse::<Permutation>().unwrap(), w);
    }
}
