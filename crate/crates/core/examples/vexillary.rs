//! Triples, their partitions and permutations, and the determinantal formula.

use schubert::perm::TripleA;
use schubert::schubert_a::{schubert, schubert_vexillary, schubert_vexillary_determinant};

fn main() -> schubert::Result<()> {
    let tau: TripleA = "k=2,3,5;p=1,1,3;q=2,0,-1".parse()?;
    let w = tau.to_permutation()?;
    println!("tau = {tau}\nlambda = {}\nw = {}", tau.partition(), w.one_line());
    let f = schubert_vexillary(&tau);
    assert_eq!(f, schubert_vexillary_determinant(&tau));
    assert_eq!(f, schubert(&w));
    println!("{} terms in the Schur basis", f.len());
    Ok(())
}
