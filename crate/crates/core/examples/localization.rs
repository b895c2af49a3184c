//! Localizations of Schubert polynomials at permutations of [0,2].

use schubert::perm::Permutation;
use schubert::schubert_a::identities::localize;
use schubert::schubert_a::schubert;

fn main() -> schubert::Result<()> {
    let w: Permutation = "w@0:1,0".parse()?;
    let f = schubert(&w);
    for v in Permutation::all_in_window(0, 2) {
        println!("phi_{v}(S_{w}) = {}", localize(&v, &f)?);
    }
    Ok(())
}
