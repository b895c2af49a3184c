//! Ring homomorphisms of `Λ[x,y,z]`: substitutions, `γ^m`, `ω`, `θ_v`, `ω̃`, `η`.

use std::collections::HashMap;

use super::base::BasePoly;
use super::lambda::{jacobi_trudi, CPoly, LambdaPoly};
use super::partition::Partition;
use super::series::{schur_of_series, series_a, ChernSeries};
use super::var::Var;
use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::Int;

fn binomial(n: i64, k: i64) -> Int {
    if k < 0 || n < 0 || k > n {
        return Int::from(0);
    }
    let mut acc = Int::from(1);
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

impl LambdaPoly {
    fn max_shape_weight(&self) -> usize {
        self.terms().map(|(l, _)| l.weight() as usize).max().unwrap_or(0)
    }

    fn check_bound(&self, bound: usize) -> Result<()> {
        let needed = self.max_shape_weight();
        if bound < needed {
            return Err(Error::DegreeBound { needed, bound });
        }
        Ok(())
    }

    /// The ring homomorphism sending `c` to `c_image` and each variable to
    /// its image (`None` fixes it).
    pub fn substitute(
        &self,
        c_image: &ChernSeries<LambdaPoly>,
        vars: &dyn Fn(Var) -> Option<BasePoly>,
    ) -> Result<LambdaPoly> {
        self.check_bound(c_image.bound())?;
        let images: Vec<CPoly> = c_image.components().iter().map(LambdaPoly::to_cpoly).collect();
        let mut memo: HashMap<Partition, CPoly> = HashMap::new();
        let mut out = CPoly::zero();
        for (lam, p) in self.terms() {
            let coef = p.substitute(vars);
            if coef.is_zero() {
                continue;
            }
            let mut s_image = CPoly::zero();
            for (mono, k) in jacobi_trudi(lam).iter() {
                let img = monomial_image(mono, &images, &mut memo);
                s_image = s_image.add_ref(&img.scale(&BasePoly::constant(k.clone())));
            }
            out = out.add_ref(&s_image.scale(&coef));
        }
        Ok(out.to_lambda())
    }

    /// Homomorphism into `Z[x,y,z]` sending `c` to a series of base polynomials.
    pub fn specialize(
        &self,
        c_image: &ChernSeries<BasePoly>,
        vars: &dyn Fn(Var) -> Option<BasePoly>,
    ) -> Result<BasePoly> {
        self.check_bound(c_image.bound())?;
        let mut out = BasePoly::zero();
        for (lam, p) in self.terms() {
            let coef = p.substitute(vars);
            if coef.is_zero() {
                continue;
            }
            let s = schur_of_series(c_image, lam, &Partition::empty())?;
            out.add_product(&coef, &s);
        }
        Ok(out)
    }

    /// Set `c = 0`, i.e. keep only the coefficient of `S_∅`.
    pub fn c_to_zero(&self) -> BasePoly {
        self.base_part()
    }

    /// Replace `c` by `c·g`: `S_λ(c·g) = Σ_μ S_{λ/μ}(g) S_μ(c)`.
    pub fn twist_c(&self, g: &ChernSeries<BasePoly>) -> Result<LambdaPoly> {
        self.check_bound(g.bound())?;
        let mut out = LambdaPoly::zero();
        for (lam, p) in self.terms() {
            for mu in lam.subpartitions() {
                let skew = schur_of_series(g, lam, &mu)?;
                if !skew.is_zero() {
                    out.add_term(mu, &skew * p);
                }
            }
        }
        Ok(out)
    }

    /// `γ^m`: shift indices of `x`, `y` by `m` and twist `c` by `a(m,m)`.
    pub fn gamma(&self, m: i32) -> LambdaPoly {
        if m == 0 {
            return self.clone();
        }
        let shifted = self.rename(|v| shift_var(v, m));
        let g = series_a(m, m, self.max_shape_weight());
        shifted.twist_c(&g).expect("bound chosen from input")
    }

    /// `ω`: `S_λ ↦ S_λ'`; with `on_vars`, also `x_i ↦ -x_{1-i}`, `y_i ↦ -y_{1-i}`.
    pub fn omega(&self, on_vars: bool) -> LambdaPoly {
        let conj = self.map_shapes(Partition::conjugate);
        if !on_vars {
            return conj;
        }
        conj.substitute_vars(&|v| match v {
            Var::X(i) => Some(-BasePoly::x(1 - i)),
            Var::Y(i) => Some(-BasePoly::y(1 - i)),
            _ => None,
        })
    }

    /// `θ_v`: `c_k ↦ Σ_i C(k-1,i-1) v^{k-i} c_i`, fixing all variables.
    pub fn theta(&self, v: &BasePoly) -> LambdaPoly {
        let bound = self.max_shape_weight();
        self.substitute(&theta_series(v, bound), &|_| None)
            .expect("bound chosen from input")
    }

    /// `ω̃ = ω ∘ θ_{-z}` on `c`; with `on_vars`, `x_i ↦ z - x_{1-i}`, `y_j ↦ z - y_{1-j}`.
    pub fn tomega(&self, on_vars: bool) -> LambdaPoly {
        let bound = self.max_shape_weight();
        let image = theta_series(&-BasePoly::z(), bound);
        let image = ChernSeries::from_components(
            image.components().iter().map(|g| g.omega(false)).collect(),
        )
        .expect("constant term is one");
        let vars = |v: Var| match v {
            Var::X(i) if on_vars => Some(&BasePoly::z() - &BasePoly::x(1 - i)),
            Var::Y(i) if on_vars => Some(&BasePoly::z() - &BasePoly::y(1 - i)),
            _ => None,
        };
        self.substitute(&image, &vars).expect("bound chosen from input")
    }

    /// `η`: `c ↦ 0`, `x_i ↦ -y_i`.
    pub fn eta(&self) -> BasePoly {
        self.base_part().substitute(&|v| match v {
            Var::X(i) => Some(-BasePoly::y(i)),
            _ => None,
        })
    }
}

fn monomial_image(mono: &Partition, images: &[CPoly], memo: &mut HashMap<Partition, CPoly>) -> CPoly {
    if let Some(hit) = memo.get(mono) {
        return hit.clone();
    }
    let parts = mono.parts();
    let value = match parts.split_last() {
        None => CPoly::one(),
        Some((&last, rest)) => {
            let head = monomial_image(&Partition::from_multiset(rest.to_vec()), images, memo);
            head.mul_ref(&images[last as usize])
        }
    };
    memo.insert(mono.clone(), value.clone());
    value
}

/// The series `θ_v(c)` in the Schur basis.
pub fn theta_series(v: &BasePoly, bound: usize) -> ChernSeries<LambdaPoly> {
    let comps = (0..=bound as i64)
        .map(|k| {
            if k == 0 {
                return LambdaPoly::one();
            }
            let mut acc = LambdaPoly::zero();
            for i in 1..=k {
                let coef = v.pow((k - i) as u32).scale(&binomial(k - 1, i - 1));
                acc += LambdaPoly::c(i).scale(&coef);
            }
            acc
        })
        .collect();
    ChernSeries::from_components(comps).expect("constant term is one")
}

pub fn shift_var(v: Var, m: i32) -> Var {
    match v {
        Var::X(i) => Var::X(i + m),
        Var::Y(i) => Var::Y(i + m),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn s(v: &[u32]) -> LambdaPoly {
        LambdaPoly::schur(p(v))
    }

    #[test]
    fn omega_examples() {
        assert_eq!(s(&[2, 1]).omega(false), s(&[2, 1]));
        assert_eq!(LambdaPoly::c(2).omega(false), s(&[1, 1]));
        let f = s(&[3]).scale(&BasePoly::x(1));
        assert_eq!(f.omega(true), s(&[1, 1, 1]).scale(&-BasePoly::x(0)));
    }

    #[test]
    fn theta_examples() {
        let z = BasePoly::z();
        assert_eq!(LambdaPoly::c(1).theta(&z), LambdaPoly::c(1));
        assert_eq!(
            LambdaPoly::c(2).theta(&z),
            &LambdaPoly::c(2) + &LambdaPoly::c(1).scale(&z)
        );
        let u = BasePoly::var(Var::Aux('u', 1));
        let v = BasePoly::var(Var::Aux('v', 1));
        let c3 = LambdaPoly::c(3);
        assert_eq!(c3.theta(&v).theta(&u), c3.theta(&(&u + &v)));
    }

    #[test]
    fn tomega_examples() {
        assert_eq!(LambdaPoly::c(1).tomega(false), LambdaPoly::c(1));
        let want = &s(&[1, 1]) - &s(&[1]).scale(&BasePoly::z());
        assert_eq!(LambdaPoly::c(2).tomega(false), want);
        assert_eq!(LambdaPoly::c(2).tomega(false).tomega(false), LambdaPoly::c(2));
    }

    #[test]
    fn gamma_examples() {
        let c1 = LambdaPoly::c(1);
        let want = &c1 + &LambdaPoly::from_base(&BasePoly::x(1) + &BasePoly::y(1));
        assert_eq!(c1.gamma(1), want);
        let f = &s(&[2, 1]).scale(&BasePoly::x(0)) + &s(&[1, 1]);
        assert_eq!(f.gamma(2).gamma(-2), f);
        assert_eq!(f.gamma(1).gamma(1), f.gamma(2));
    }

    #[test]
    fn eta_examples() {
        assert!(LambdaPoly::c(1).eta().is_zero());
        assert_eq!(LambdaPoly::from_base(BasePoly::x(1)).eta(), -BasePoly::y(1));
        let s1 = &LambdaPoly::c(1) + &LambdaPoly::from_base(&BasePoly::x(1) + &BasePoly::y(1));
        assert!(s1.eta().is_zero());
    }

    #[test]
    fn specialize_examples() {
        let one = ChernSeries::<BasePoly>::one(3);
        assert!(LambdaPoly::c(1).specialize(&one, &|_| None).unwrap().is_zero());
        let g = super::super::series::linear_factors(&[Var::X(1), Var::X(2)], 1, false, 2);
        let e2 = s(&[2]).specialize(&g, &|_| None).unwrap();
        assert_eq!(e2, &BasePoly::x(1) * &BasePoly::x(2));
        let short = ChernSeries::<BasePoly>::one(1);
        assert!(s(&[1, 1]).specialize(&short, &|_| None).is_err());
    }
}
