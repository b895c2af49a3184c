//! One pass/fail line per acceptance criterion, each with a time budget.
//! Runs without the libtest harness so the lines appear in order.

use std::time::{Duration, Instant};

use schubert::checks::{self, CheckConfig, SuiteReport};
use schubert::parse::{parse_base, parse_lambda};
use schubert::perm::{Permutation, TripleA};
use schubert::poly::{BasePoly, LambdaPoly, Partition, StrictPartition};
use schubert::schubert_a::identities::split_case_check;
use schubert::schubert_a::*;
use schubert::table::verify_table;
use schubert::type_c::{self, GammaPoly};

type Outcome = Result<String, String>;

fn perm(s: &str) -> Permutation {
    s.parse().expect("permutation literal")
}

fn lp(s: &str) -> LambdaPoly {
    parse_lambda(s).expect("polynomial literal")
}

fn expect(failures: &mut Vec<String>, ok: bool, what: &str) {
    if !ok {
        failures.push(what.to_string());
    }
}

fn suites(names: &[&str], cfg: &CheckConfig) -> Outcome {
    let mut reports: Vec<SuiteReport> = Vec::new();
    for name in names {
        reports.extend(checks::run(name, cfg).map_err(|e| e.to_string())?);
    }
    let summary: Vec<String> = reports.iter().map(|r| format!("{} {}", r.name, r.instances)).collect();
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{}: {} failures, first: {}", r.name, r.failures.len(), r.failures[0]))
        .collect();
    if failed.is_empty() {
        Ok(summary.join(", "))
    } else {
        Err(failed.join("; "))
    }
}

fn table() -> Outcome {
    let rows = verify_table().map_err(|e| e.to_string())?;
    let passed = rows.iter().filter(|r| r.passed()).count();
    if rows.len() == 24 && passed == 24 {
        Ok("24/24 rows".into())
    } else {
        Err(format!("{passed}/{} rows", rows.len()))
    }
}

fn worked_examples() -> Outcome {
    let mut bad = Vec::new();
    let f = &mut bad;
    expect(f, schubert(&Permutation::identity()) == LambdaPoly::one(), "identity");
    // s_k: c1 plus or minus a sum of alpha_ii = x_i + y_i.
    for k in -2..=2i32 {
        let alphas: Vec<String> = if k > 0 {
            (1..=k).map(|i| format!(" + x{i} + y{i}")).collect()
        } else {
            (k + 1..=0).map(|i| format!(" - x_{i} - y_{i}")).collect()
        };
        let want = lp(&format!("c1{}", alphas.concat()));
        expect(f, schubert(&Permutation::simple(k)) == want, &format!("s_{k}"));
    }
    let a = |i: i32| format!("(x{i}+y{i})");
    let want = format!(
        "c1^2 + (2{a1}+{a2}+{a3})c1 + {a1}({a1}+{a2}+{a3})",
        a1 = a(1),
        a2 = a(2),
        a3 = a(3)
    );
    expect(f, schubert(&perm("w@1:2,1,4,3")) == lp(&want), "2143");
    let d0 = del_x(0, &lp("S[4,2]"));
    let want = lp(
        "S[4,1] + S[3,2] + x1*S[4] + x1*S[2,2] + (x1-x0)*S[3,1] + x1*(x1-x0)*S[3] \
         + x1*(x1-x0)*S[2,1] + x1^2*(x1-x0)*S[2] + (-x0)*x1^2*S[1,1] + (-x0)*x1^3*S[1]",
    );
    expect(f, d0 == want, "∂0 S(4,2)");
    let tau: TripleA = "k=2,3,5;p=1,1,3;q=2,0,-1".parse().map_err(|e| format!("{e}"))?;
    let w = perm("w@-1:1,3,4,0,2,-1");
    expect(f, tau.partition() == Partition::new(vec![3, 3, 2, 1, 1]).unwrap(), "λ(τ)");
    expect(f, tau.to_permutation().ok() == Some(w.clone()), "w(τ)");
    expect(f, TripleA::from_permutation(&w).ok() == Some(tau), "τ(w)");
    let p = |v: Vec<u32>| Partition::new(v).unwrap();
    expect(f, multivariate_schur(&p(vec![1])) == lp("c1"), "multivariate (1)");
    expect(f, multivariate_schur(&p(vec![2])) == lp("c2 + y1 c1"), "multivariate (2)");
    expect(f, multivariate_schur(&p(vec![1, 1])) == lp("c1^2 - c2 - y0 c1"), "multivariate (1,1)");
    let mut x1 = SchubertExpansion::new();
    x1.insert(Permutation::simple(1), BasePoly::one());
    x1.insert(Permutation::simple(0), -BasePoly::one());
    x1.insert(Permutation::identity(), -BasePoly::y(1));
    expect(f, interpolate(&lp("x1")) == x1, "x1 interpolation");
    for k in -2..=2 {
        expect(f, stanley(&Permutation::simple(k)) == lp("c1"), &format!("F s_{k}"));
    }
    expect(f, stanley(&perm("w@1:3,1,2")) == lp("c2"), "F 312");
    expect(f, stanley(&perm("w@1:2,3,1")) == lp("c1^2 - c2"), "F 231");
    expect(f, stanley(&perm("w@1:3,2,1")) == lp("c2 c1 - c3"), "F 321");
    expect(f, stanley(&perm("w@1:2,1,4,3")) == lp("c1^2"), "F 2143");
    let s1 = Permutation::simple(1);
    let mut prod = SchubertExpansion::new();
    prod.insert(perm("w@1:3,1,2"), BasePoly::one());
    prod.insert(perm("w@0:1,2,0"), BasePoly::one());
    prod.insert(s1.clone(), parse_base("y1 - y2").unwrap());
    expect(f, product_structure(&s1, &s1) == prod, "𝔖21·𝔖21");
    let mut trans = SchubertExpansion::new();
    trans.insert(perm("w@0:1,0,2,3"), parse_base("x2 + y2").unwrap());
    trans.insert(perm("w@0:1,2,0,3"), BasePoly::one());
    trans.insert(perm("w@0:2,0,1,3"), BasePoly::one());
    let step = transition(&perm("w@0:1,0,3,2")).ok_or("no transition for 1032")?;
    expect(f, step.expansion() == trans, "1032 transition");
    expect(f, assemble(&trans) == lp("c1^2 + (x1+y1+x2+y2)c1"), "1032 value");
    if bad.is_empty() {
        Ok("all exact".into())
    } else {
        Err(bad.join(", "))
    }
}

fn operators() -> Outcome {
    let cfg = CheckConfig { seed: 7, degree: 5, instances: 200 };
    suites(&["nilpotence", "braid", "commuting", "leibniz", "equivariance", "diffop"], &cfg)
}

fn identities() -> Outcome {
    suites(&["identities", "decomposition"], &CheckConfig::default())
}

fn atoc() -> Outcome {
    let mut bad = Vec::new();
    let f = &mut bad;
    for d in 0..=10 {
        expect(f, type_c::basis_report(d).passed(), &format!("basis degree {d}"));
    }
    let sp = |v: &[u32]| StrictPartition::new(v.to_vec()).unwrap();
    let mut c11 = GammaPoly::q(sp(&[2])).scale(&BasePoly::from(2));
    c11.add_term(sp(&[1]), BasePoly::z());
    let mut c21 = GammaPoly::q(sp(&[2, 1]));
    c21.add_term(sp(&[3]), BasePoly::from(2));
    c21.add_term(sp(&[2]), BasePoly::z());
    expect(f, type_c::parse_gamma("c1^2").ok() == Some(c11), "c1²");
    expect(f, type_c::parse_gamma("c2 c1").ok() == Some(c21), "c2c1");
    expect(
        f,
        type_c::projected_schubert(&perm("w@1:3,2,1")).ok() == Some(type_c::example_321()),
        "image of 321 (product reading)",
    );
    for w in Permutation::all_in_window(1, 4) {
        for i in 1..=4 {
            expect(f, type_c::descent_recursion_check(&w, i) == Ok(true), &format!("∂{i} at {w}"));
        }
        expect(f, type_c::inverse_symmetry_check(&w) == Ok(true), &format!("symmetry at {w}"));
    }
    if bad.is_empty() {
        Ok("ranks ≤ 10, normal forms, 321, S4 recursions and symmetry".into())
    } else {
        Err(bad.join(", "))
    }
}

fn split_case() -> Outcome {
    let mut bad = Vec::new();
    for w in Permutation::all_in_window(0, 3) {
        for n in [2, 3, 4] {
            if split_case_check(&w, n) != Ok(true) {
                bad.push(format!("{w} n={n}"));
            }
        }
    }
    if bad.is_empty() {
        Ok("split specialization homogeneous on [0,3], n = 2..4; no geometric claim".into())
    } else {
        Err(bad.join(", "))
    }
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "table reproduction", budget: secs(30), run: table },
        Criterion { id: 2, name: "worked examples", budget: secs(30), run: worked_examples },
        Criterion { id: 3, name: "operator calculus", budget: secs(120), run: operators },
        Criterion { id: 4, name: "identity suites", budget: secs(300), run: identities },
        Criterion {
            id: 5,
            name: "positivity and structure",
            budget: secs(300),
            run: || suites(&["positivity"], &CheckConfig::default()),
        },
        Criterion {
            id: 6,
            name: "Stanley and FGRS",
            budget: secs(60),
            run: || suites(&["stanley"], &CheckConfig::default()),
        },
        Criterion {
            id: 7,
            name: "vexillary formulas",
            budget: secs(300),
            run: || suites(&["vexillary"], &CheckConfig::default()),
        },
        Criterion {
            id: 8,
            name: "localization",
            budget: secs(120),
            run: || suites(&["localization"], &CheckConfig::default()),
        },
        Criterion { id: 9, name: "type C", budget: secs(300), run: atoc },
        Criterion { id: 10, name: "split-case specialization", budget: secs(60), run: split_case },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let took = start.elapsed();
        let (verdict, detail) = match (&outcome, took <= c.budget) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("over budget; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {:>2} {:<26} {verdict}  {:>7.2}s / {}s  {detail}",
            c.id,
            c.name,
            took.as_secs_f64(),
            c.budget.as_secs()
        );
    }
    println!("{}/{} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
