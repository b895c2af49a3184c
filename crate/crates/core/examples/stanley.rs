//! Stanley polynomials and their tableau coefficients.

use schubert::perm::Permutation;
use schubert::schubert_a::{fgrs_coefficients, stanley};

fn main() -> schubert::Result<()> {
    for text in ["w@1:3,1,2", "w@1:2,3,1", "w@1:3,2,1", "w@1:2,1,4,3", "w@0:3,1,2,0"] {
        let w: Permutation = text.parse()?;
        let coeffs: Vec<String> = fgrs_coefficients(&w).iter().map(|(l, j)| format!("{j}*S{l}")).collect();
        println!("F_{w} = {}   [{}]", stanley(&w), coeffs.join(" + "));
    }
    Ok(())
}
