//! Structure constants, Monk's rule and one transition step.

use schubert::emit::Emit;
use schubert::perm::Permutation;
use schubert::schubert_a::{assemble, monk, product_structure, transition};

fn main() -> schubert::Result<()> {
    let s1 = Permutation::simple(1);
    println!("S_21 * S_21 = {}", product_structure(&s1, &s1).to_text());
    let w: Permutation = "w@1:1,3,2".parse()?;
    println!("S_s2 * S_132 = {}", monk(2, &w).to_text());

    let w: Permutation = "w@0:1,0,3,2".parse()?;
    if let Some(step) = transition(&w) {
        println!("r = {}, s = {}, factor = {}", step.r, step.s, step.factor);
        println!("S_1032 = {}", assemble(&step.expansion()));
    }
    Ok(())
}
