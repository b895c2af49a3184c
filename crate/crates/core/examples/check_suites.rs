//! Run a few invariant suites with a fixed seed.

use schubert::checks::{run, CheckConfig};

fn main() -> schubert::Result<()> {
    let cfg = CheckConfig { seed: 7, degree: 4, instances: 50 };
    for name in ["braid", "leibniz", "stanley", "atoc"] {
        for r in run(name, &cfg)? {
            println!("{:<10} {:>5} instances  {}", r.name, r.instances, if r.passed() { "pass" } else { "FAIL" });
        }
    }
    Ok(())
}
