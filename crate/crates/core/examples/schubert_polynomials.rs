//! Enriched and twisted Schubert polynomials of a few permutations.

use schubert::emit::{Emit, Format};
use schubert::perm::Permutation;
use schubert::schubert_a::{schubert, twisted};

fn main() -> schubert::Result<()> {
    for text in ["w@1:2,1", "w@0:1,0", "w@1:2,1,4,3", "w@0:3,2,1,0"] {
        let w: Permutation = text.parse()?;
        println!("S_{w} = {}", schubert(&w).render(Format::Latex));
    }
    let w: Permutation = "w@1:2,1".parse()?;
    println!("twisted S_{w} = {}", twisted(&w).to_text());
    Ok(())
}
