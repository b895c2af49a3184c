//! Difference operators `∂_i^x`, `∂_i^y` and the automorphisms `s_i` on `Λ[x,y,z]`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::poly::partition::StripShape;
use crate::poly::{BasePoly, LambdaPoly, Partition, Var};

/// Which family of variables an operator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    X,
    Y,
}

impl Family {
    pub fn var(self, i: i32) -> Var {
        match self {
            Family::X => Var::X(i),
            Family::Y => Var::Y(i),
        }
    }
}

/// Operator flavour: the twisted `∂_0^x` shifts `x_0, x_1` by `-z` in the
/// border-strip coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DiffOp {
    pub family: Family,
    pub twisted: bool,
}

impl DiffOp {
    pub const X: DiffOp = DiffOp { family: Family::X, twisted: false };
    pub const Y: DiffOp = DiffOp { family: Family::Y, twisted: false };
    pub const X_TWISTED: DiffOp = DiffOp { family: Family::X, twisted: true };

    /// `∂_i(f) = (f - s_i f) / (v_i - v_{i+1})`.
    pub fn apply(self, i: i32, f: &LambdaPoly) -> LambdaPoly {
        let (a, b) = (self.family.var(i), self.family.var(i + 1));
        let mut out = LambdaPoly::zero();
        for (lam, p) in f.terms() {
            out.add_term(lam.clone(), p.divided_difference(a, b));
            if i == 0 && !lam.is_empty() {
                let sp = p.swap_vars(a, b);
                for (mu, coef) in self.strip_expansion(lam).iter() {
                    out.add_term(mu.clone(), &sp * coef);
                }
            }
        }
        out
    }

    /// `s_i(f) = f - (v_i - v_{i+1}) ∂_i(f)`.
    pub fn reflect(self, i: i32, f: &LambdaPoly) -> LambdaPoly {
        let (a, b) = (self.family.var(i), self.family.var(i + 1));
        if i != 0 {
            return f.map_coeffs(|p| p.swap_vars(a, b));
        }
        let diff = &BasePoly::var(a) - &BasePoly::var(b);
        f - &self.apply(i, f).scale(&diff)
    }

    /// Apply `∂_{i_1} ∘ ⋯ ∘ ∂_{i_l}` (rightmost first).
    pub fn apply_word(self, word: &[i32], f: &LambdaPoly) -> LambdaPoly {
        word.iter().rev().fold(f.clone(), |g, &i| self.apply(i, &g))
    }

    /// `∂_0(S_λ)` as a list of `(μ, coefficient)` over border strips `λ/μ`.
    fn strip_expansion(self, lam: &Partition) -> Arc<Vec<(Partition, BasePoly)>> {
        type Cache = RwLock<HashMap<(DiffOp, Partition), Arc<Vec<(Partition, BasePoly)>>>>;
        static CACHE: OnceLock<Cache> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let key = (self, lam.clone());
        if let Some(hit) = cache.read().expect("cache poisoned").get(&key) {
            return hit.clone();
        }
        let value: Vec<(Partition, BasePoly)> = lam
            .border_strips()
            .into_iter()
            .map(|(mu, shape)| (mu, self.strip_coefficient(shape)))
            .collect();
        let value = Arc::new(value);
        cache
            .write()
            .expect("cache poisoned")
            .entry(key)
            .or_insert(value)
            .clone()
    }

    fn strip_coefficient(self, shape: StripShape) -> BasePoly {
        let (v0, v1) = (BasePoly::var(self.family.var(0)), BasePoly::var(self.family.var(1)));
        let (v0, v1) = if self.twisted {
            (&v0 - &BasePoly::z(), &v1 - &BasePoly::z())
        } else {
            (v0, v1)
        };
        // The y-family formula is the conjugate of the x-family one.
        let (along_row, along_column) = match self.family {
            Family::X => (shape.horizontal, shape.vertical),
            Family::Y => (shape.vertical, shape.horizontal),
        };
        let gap = &v1 - &v0;
        &(&v1.pow(along_row) * &(-&v0).pow(along_column)) * &gap.pow(shape.components - 1)
    }
}

pub fn del_x(i: i32, f: &LambdaPoly) -> LambdaPoly {
    DiffOp::X.apply(i, f)
}

pub fn del_y(i: i32, f: &LambdaPoly) -> LambdaPoly {
    DiffOp::Y.apply(i, f)
}

pub fn del_x_twisted(i: i32, f: &LambdaPoly) -> LambdaPoly {
    DiffOp::X_TWISTED.apply(i, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_lambda;

    fn lp(s: &str) -> LambdaPoly {
        parse_lambda(s).unwrap()
    }

    #[test]
    fn del0_on_s42() {
        let got = del_x(0, &lp("S[4,2]"));
        let want = lp(
            "S[4,1] + S[3,2] + x1*S[4] + x1*S[2,2] + (x1-x0)*S[3,1] + x1*(x1-x0)*S[3] \
             + x1*(x1-x0)*S[2,1] + x1^2*(x1-x0)*S[2] + (-x0)*x1^2*S[1,1] + (-x0)*x1^3*S[1]",
        );
        assert_eq!(got, want);
    }

    #[test]
    fn del0_on_generators() {
        assert_eq!(del_x(0, &lp("c2")), lp("c1 + x1"));
        assert_eq!(del_x(1, &lp("x1")), lp("1"));
        assert_eq!(del_y(1, &lp("y1")), lp("1"));
        assert_eq!(del_y(0, &lp("c2")), lp("c1 - y0"));
        assert_eq!(del_y(0, &lp("c1")), lp("1"));
    }

    #[test]
    fn reflection_matches_series_action() {
        // s_0^x(c) = c (1 - x_0)/(1 - x_1), checked in degree 2.
        let got = DiffOp::X.reflect(0, &lp("c2"));
        assert_eq!(got, lp("c2 + (x1 - x0)*c1 + x1^2 - x0*x1"));
        let got = DiffOp::Y.reflect(0, &lp("c1"));
        assert_eq!(got, lp("c1 + y1 - y0"));
    }

    #[test]
    fn twisted_shift() {
        let got = del_x_twisted(0, &lp("c2"));
        assert_eq!(got, lp("c1 + x1 - z"));
    }
}
