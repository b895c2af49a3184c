//! Invariant suites run by `schubert check`: randomized operator laws driven by
//! a seeded generator, plus exhaustive identity checks on small windows.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::perm::{Permutation, TripleA};
use crate::poly::{BasePoly, LambdaPoly, Monomial, Partition, StrictPartition, Var};
use crate::ring::Ring;
use crate::schubert_a::identities::*;
use crate::schubert_a::*;
use crate::table::verify_table;
use crate::type_c;
use crate::Int;

pub const SUITES: &[&str] = &[
    "nilpotence",
    "braid",
    "commuting",
    "leibniz",
    "equivariance",
    "diffop",
    "identities",
    "decomposition",
    "positivity",
    "stanley",
    "vexillary",
    "localization",
    "interpolation",
    "table",
    "atoc",
];

#[derive(Clone, Copy, Debug)]
pub struct CheckConfig {
    pub seed: u64,
    /// Degree bound for random inputs.
    pub degree: u32,
    /// Random instances per law.
    pub instances: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { seed: 0, degree: 5, instances: 200 }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport { name: name.into(), ..Default::default() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn record_result(&mut self, ok: Result<bool>, what: impl FnOnce() -> String) {
        match ok {
            Ok(ok) => self.record(ok, what),
            Err(e) => self.record(false, || format!("{}: {e}", what())),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Run one suite, or every suite for `"all"`.
pub fn run(name: &str, cfg: &CheckConfig) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        return SUITES.iter().map(|s| run_one(s, cfg)).collect();
    }
    Ok(vec![run_one(name, cfg)?])
}

fn run_one(name: &str, cfg: &CheckConfig) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut r = SuiteReport::new(name);
    match name {
        "nilpotence" => nilpotence(&mut r, &mut rng, cfg),
        "braid" => braid(&mut r, &mut rng, cfg),
        "commuting" => commuting(&mut r, &mut rng, cfg),
        "leibniz" => leibniz(&mut r, &mut rng, cfg),
        "equivariance" => equivariance(&mut r, &mut rng, cfg),
        "diffop" => diffop(&mut r),
        "identities" => identities(&mut r),
        "decomposition" => decomposition(&mut r),
        "positivity" => positivity(&mut r),
        "stanley" => stanley_suite(&mut r),
        "vexillary" => vexillary(&mut r),
        "localization" => localization(&mut r),
        "interpolation" => interpolation(&mut r, &mut rng, cfg),
        "table" => table(&mut r)?,
        "atoc" => atoc(&mut r),
        other => {
            return Err(Error::domain(format!(
                "unknown suite {other:?}; expected one of {} or all",
                SUITES.join(", ")
            )))
        }
    }
    Ok(r)
}

const OPS: [DiffOp; 3] = [DiffOp::X, DiffOp::Y, DiffOp::X_TWISTED];

fn op_name(op: DiffOp) -> &'static str {
    match (op.family, op.twisted) {
        (Family::X, false) => "x",
        (Family::X, true) => "x~",
        (Family::Y, _) => "y",
    }
}

/// Random element of `Λ[x,y,z]` of degree at most `degree`, in `x_{-2..3}`,
/// `y_{-2..3}` and `z`.
pub fn random_lambda(rng: &mut impl Rng, degree: u32) -> LambdaPoly {
    random_lambda_in(rng, degree, -2..=3, &[])
}

/// Variables an operator at `i..=j` can see; half of all variable draws
/// come from here so that random inputs are rarely killed outright.
fn focus(op: DiffOp, i: i32, j: i32) -> Vec<Var> {
    (i..=j + 1)
        .map(|k| match op.family {
            Family::X => Var::X(k),
            Family::Y => Var::Y(k),
        })
        .collect()
}

fn random_lambda_in(
    rng: &mut impl Rng,
    degree: u32,
    indices: std::ops::RangeInclusive<i32>,
    focus: &[Var],
) -> LambdaPoly {
    let mut vars: Vec<Var> = indices.clone().map(Var::X).chain(indices.map(Var::Y)).collect();
    vars.push(Var::Z);
    let mut out = LambdaPoly::zero();
    for _ in 0..rng.gen_range(2..=5) {
        let d = rng.gen_range(degree.min(1)..=degree);
        let k = rng.gen_range(0..=d);
        let shapes = Partition::all_of(k);
        let lam = shapes.choose(rng).expect("nonempty").clone();
        let mono = Monomial::from_pairs((0..d - k).map(|_| {
            let pool = if !focus.is_empty() && rng.gen_bool(0.5) { focus } else { &vars[..] };
            (*pool.choose(rng).expect("nonempty"), 1)
        }));
        let mut c = rng.gen_range(-3i64..=3);
        if c == 0 {
            c = 1;
        }
        out.add_term(lam, BasePoly::term(mono, Int::from(c)));
    }
    out
}

fn nilpotence(r: &mut SuiteReport, rng: &mut ChaCha8Rng, cfg: &CheckConfig) {
    for _ in 0..cfg.instances {
        let op = *OPS.choose(rng).unwrap();
        let i = rng.gen_range(-2..=2);
        let f = random_lambda_in(rng, cfg.degree, -2..=3, &focus(op, i, i));
        let ok = op.apply(i, &op.apply(i, &f)).is_zero();
        r.record(ok, || format!("∂{}_{i}∂{}_{i} ≠ 0 on {f}", op_name(op), op_name(op)));
    }
}

fn braid(r: &mut SuiteReport, rng: &mut ChaCha8Rng, cfg: &CheckConfig) {
    for _ in 0..cfg.instances {
        let op = *OPS.choose(rng).unwrap();
        let i = rng.gen_range(-2..=1);
        let f = random_lambda_in(rng, cfg.degree, -2..=3, &focus(op, i, i + 1));
        let lhs = op.apply_word(&[i, i + 1, i], &f);
        let rhs = op.apply_word(&[i + 1, i, i + 1], &f);
        r.record(lhs == rhs, || format!("braid {}_{i} fails on {f}", op_name(op)));
    }
}

fn commuting(r: &mut SuiteReport, rng: &mut ChaCha8Rng, cfg: &CheckConfig) {
    for _ in 0..cfg.instances {
        let a = *OPS.choose(rng).unwrap();
        let i = rng.gen_range(-2..=2);
        // Same family: far apart; x against y: any pair.
        let (b, j) = if rng.gen_bool(0.5) {
            let j = *[i - 3, i - 2, i + 2, i + 3].choose(rng).unwrap();
            (a, j)
        } else {
            let b = if a.family == Family::Y { DiffOp::X } else { DiffOp::Y };
            (b, rng.gen_range(-2..=2))
        };
        let mut vars = focus(a, i, i);
        vars.extend(focus(b, j, j));
        let f = random_lambda_in(rng, cfg.degree, -2..=3, &vars);
        let lhs = a.apply(i, &b.apply(j, &f));
        let rhs = b.apply(j, &a.apply(i, &f));
        r.record(lhs == rhs, || {
            format!("∂{}_{i} and ∂{}_{j} do not commute on {f}", op_name(a), op_name(b))
        });
    }
}

fn leibniz(r: &mut SuiteReport, rng: &mut ChaCha8Rng, cfg: &CheckConfig) {
    for _ in 0..cfg.instances {
        let op = *OPS.choose(rng).unwrap();
        let i = rng.gen_range(-2..=2);
        let df = rng.gen_range(0..=cfg.degree);
        let f = random_lambda_in(rng, df, -2..=3, &focus(op, i, i));
        let g = random_lambda_in(rng, cfg.degree - df, -2..=3, &focus(op, i, i));
        let lhs = op.apply(i, &(&f * &g));
        let rhs = &(&op.apply(i, &f) * &g) + &(&op.reflect(i, &f) * &op.apply(i, &g));
        r.record(lhs == rhs, || format!("Leibniz {}_{i} fails on {f} · {g}", op_name(op)));
    }
}

fn equivariance(r: &mut SuiteReport, rng: &mut ChaCha8Rng, cfg: &CheckConfig) {
    for _ in 0..cfg.instances {
        let op = *[DiffOp::X, DiffOp::Y].choose(rng).unwrap();
        let i = rng.gen_range(-2..=2);
        let f = random_lambda_in(rng, cfg.degree, -2..=3, &focus(op, i, i));
        let m = rng.gen_range(-2..=2);
        let lhs = op.apply(i, &f).gamma(m);
        let rhs = op.apply(i + m, &f.gamma(m));
        r.record(lhs == rhs, || format!("γ^{m}∂{}_{i} ≠ ∂{}_{} γ^{m} on {f}", op_name(op), op_name(op), i + m));
    }
}

fn window(lo: i32, hi: i32) -> Vec<Permutation> {
    Permutation::all_in_window(lo, hi)
}

fn diffop(r: &mut SuiteReport) {
    for w in window(0, 3) {
        let (s, t) = (schubert(&w), twisted(&w));
        for i in -1..=3 {
            let want = |yes: bool, v: Permutation, f: fn(&Permutation) -> LambdaPoly| {
                if yes { f(&v) } else { LambdaPoly::zero() }
            };
            let dx = want(w.has_right_descent(i), w.mul_simple_right(i), schubert);
            r.record(del_x(i, &s) == dx, || format!("∂x_{i} 𝔖_{w}"));
            let dy = want(w.has_left_descent(i), w.mul_simple_left(i), schubert);
            r.record(del_y(i, &s) == dy, || format!("∂y_{i} 𝔖_{w}"));
            let dt = want(w.has_right_descent(i), w.mul_simple_right(i), twisted);
            r.record(del_x_twisted(i, &t) == dt, || format!("∂x~_{i} 𝐒_{w}"));
        }
    }
}

fn identities(r: &mut SuiteReport) {
    for w in window(0, 3) {
        for m in -2..=2 {
            r.record(back_stability_check(&w, m), || format!("back-stability {w}, m={m}"));
        }
        r.record(duality_check(&w), || format!("duality {w}"));
        r.record(twisted_duality_check(&w), || format!("twisted duality {w}"));
        r.record(omega_check(&w), || format!("ω-equivariance {w}"));
        r.record(c_zero_check(&w), || format!("c=0 specialization {w}"));
        r.record(twisted_c_zero_check(&w), || format!("twisted c=0 specialization {w}"));
        let m0 = smallest_positive_shift(&w);
        for m in [m0, m0 + 1] {
            r.record(shifted_classical_check(&w, m), || format!("shifted classical specialization {w}, m={m}"));
        }
        r.record_result(invariance_check(&w), || format!("invariance {w}"));
        r.record_result(theta_form_check(&w), || format!("θ form {w}"));
        r.record_result(split_case_check(&w, 3), || format!("split case {w}"));
    }
}

/// Every `w` of length at most 4 on the window `[-1, 3]`.
fn decomposition(r: &mut SuiteReport) {
    for w in window(-1, 3).into_iter().filter(|w| w.length() <= 4) {
        r.record_result(decompose_check(&w), || format!("decomposition {w}"));
    }
}

fn shift_y(p: &BasePoly, m: i32) -> BasePoly {
    p.rename(|v| match v {
        Var::Y(i) => Var::Y(i + m),
        other => other,
    })
}

fn positivity(r: &mut SuiteReport) {
    let perms = window(0, 3);
    for u in &perms {
        for v in &perms {
            let e = product_structure(u, v);
            for (w, c) in &e {
                r.record(positive_in_y_differences(c), || format!("c^{w}_{u},{v} = {c} not positive"));
                r.record(u.bruhat_le(w) && v.bruhat_le(w), || format!("c^{w}_{u},{v} ≠ 0 outside Bruhat interval"));
            }
            if u <= v {
                for m in [-1, 1] {
                    let shifted = product_structure(&u.gamma(m), &v.gamma(m));
                    let expected: SchubertExpansion =
                        e.iter().map(|(w, c)| (w.gamma(m), shift_y(c, m))).collect();
                    r.record(shifted == expected, || format!("γ^{m} equivariance for {u}·{v}"));
                }
            }
        }
    }
}

fn stanley_suite(r: &mut SuiteReport) {
    for w in window(0, 3) {
        let f = stanley(&w);
        r.record(fgrs_sum(&w) == f, || format!("FGRS sum ≠ F for {w}"));
        for m in [-2, -1, 1, 2] {
            r.record(stanley(&w.gamma(m)) == f, || format!("F not γ^{m}-invariant at {w}"));
        }
        if w.is_vexillary() {
            let tau = TripleA::from_permutation(&w).expect("vexillary");
            r.record(f == LambdaPoly::schur(tau.partition()), || format!("F_{w} ≠ S_λ(τ)"));
        }
    }
}

/// Vexillary permutations on windows of size at most 5.
fn vexillary(r: &mut SuiteReport) {
    for w in window(0, 4).into_iter().filter(Permutation::is_vexillary) {
        let tau = match TripleA::from_permutation(&w) {
            Ok(t) => t,
            Err(e) => {
                r.record(false, || format!("triple of {w}: {e}"));
                continue;
            }
        };
        let skew = schubert_vexillary(&tau);
        r.record(skew == schubert(&w), || format!("vexillary formula ≠ operator construction at {w}"));
        r.record(skew == schubert_vexillary_determinant(&tau), || format!("skew ≠ determinant at {w}"));
        let lam = tau.partition();
        if lam.weight() <= 4 {
            let irreducible = irreducible_in_lambda(&LambdaPoly::schur(lam.clone()));
            r.record(irreducible == Some(true), || format!("S_{lam} factors"));
        }
    }
}

/// `A_i ∘ Φ = Φ ∘ ∂_i` and the vanishing of `φ_v(𝔖_w)` for `ℓ(v) < ℓ(w)`, on the window `[-1, 2]`.
fn localization(r: &mut SuiteReport) {
    let perms: Vec<Permutation> = window(-1, 2).into_iter().filter(|v| v.length() <= 3).collect();
    for w in &perms {
        let f = schubert(w);
        for i in -1..=1 {
            r.record_result(phi_compat_check(i, &f, &perms), || format!("A_{i}Φ ≠ Φ∂_{i} on 𝔖_{w}"));
        }
        for v in perms.iter().filter(|v| v.length() < w.length()) {
            let ok = localize(v, &f).map(|p| p.is_zero());
            r.record_result(ok, || format!("φ_{v}(𝔖_{w}) ≠ 0"));
        }
    }
}

fn interpolation(r: &mut SuiteReport, rng: &mut ChaCha8Rng, cfg: &CheckConfig) {
    for _ in 0..cfg.instances {
        let f = random_lambda_in(rng, cfg.degree.min(4), -1..=2, &[]);
        r.record(assemble(&interpolate(&f)) == f, || format!("interpolation roundtrip fails on {f}"));
    }
}

fn table(r: &mut SuiteReport) -> Result<()> {
    for outcome in verify_table()? {
        let w = outcome.row.w.clone();
        r.record(outcome.passed(), || format!("table row {w}"));
    }
    Ok(())
}

fn atoc(r: &mut SuiteReport) {
    for d in 0..=10 {
        let rep = type_c::basis_report(d);
        r.record(rep.passed(), || format!("pfaffian basis in degree {d}: {rep:?}"));
    }
    let sp = |v: &[u32]| StrictPartition::new(v.to_vec()).expect("strict");
    let c = |k| crate::poly::CPoly::c_index(k);
    let two = BasePoly::from(2);
    let c11 = type_c::GammaPoly::term(sp(&[2]), two.clone())
        .add_ref(&type_c::GammaPoly::term(sp(&[1]), BasePoly::z()));
    r.record(type_c::normal_form(&c(1).mul_ref(&c(1))).ok() == Some(c11), || "c1² normal form".into());
    let c21 = type_c::GammaPoly::q(sp(&[2, 1]))
        .add_ref(&type_c::GammaPoly::term(sp(&[3]), two))
        .add_ref(&type_c::GammaPoly::term(sp(&[2]), BasePoly::z()));
    r.record(type_c::normal_form(&c(2).mul_ref(&c(1))).ok() == Some(c21), || "c2c1 normal form".into());
    let w321 = Permutation::from_window(1, vec![3, 2, 1]).expect("permutation");
    r.record(type_c::projected_schubert(&w321).ok() == Some(type_c::example_321()), || {
        "image of 𝐒_321".into()
    });
    for w in window(1, 4) {
        for i in 1..=4 {
            r.record_result(type_c::descent_recursion_check(&w, i), || format!("∂_{i} recursion at {w}"));
        }
        r.record_result(type_c::inverse_symmetry_check(&w), || format!("w⁻¹ symmetry at {w}"));
        if w.length() <= 3 {
            r.record_result(type_c::tomega_collapse_check(&twisted(&w)), || format!("ω̃ collapse at {w}"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> CheckConfig {
        CheckConfig { seed: 11, degree: 4, instances: 25 }
    }

    #[test]
    fn randomized_laws_hold() {
        for name in ["nilpotence", "braid", "commuting", "leibniz", "equivariance"] {
            let r = &run(name, &quick()).unwrap()[0];
            assert!(r.passed(), "{name}: {:?}", &r.failures[..r.failures.len().min(3)]);
            assert_eq!(r.instances, 25);
        }
    }

    #[test]
    fn same_seed_same_inputs() {
        let mut a = ChaCha8Rng::seed_from_u64(3);
        let mut b = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            assert_eq!(random_lambda(&mut a, 5), random_lambda(&mut b, 5));
        }
    }

    #[test]
    fn random_inputs_are_not_killed_trivially() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut live = 0;
        for _ in 0..200 {
            let i = rng.gen_range(-2..=2);
            let f = random_lambda_in(&mut rng, 5, -2..=3, &focus(DiffOp::X, i, i));
            live += usize::from(!DiffOp::X.apply(i, &f).is_zero());
        }
        assert!(live > 150, "only {live}/200 inputs survive one operator");
    }

    #[test]
    fn unknown_suite() {
        assert!(run("nope", &quick()).is_err());
    }
}
