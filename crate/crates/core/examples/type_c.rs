//! Normal forms in the type C coefficient ring and the image of type A.

use schubert::emit::{Emit, Format};
use schubert::perm::Permutation;
use schubert::type_c::{basis_report, normal_form, parse_gamma, projected_schubert, q_pfaffian, schubert_c_vexillary, TripleC};

fn main() -> schubert::Result<()> {
    for text in ["c1^2", "c2 c1", "c3 c1 + z c2^2"] {
        println!("{text} = {}", parse_gamma(text)?.render(Format::Latex));
    }
    let q = q_pfaffian(&"[3,1]".parse()?);
    println!("Q[3,1] = {}", q.to_text());
    assert_eq!(normal_form(&q)?.to_text(), "Q[3,1]");
    for d in [4, 8] {
        let r = basis_report(d);
        println!("degree {d}: rank {} / {} monomials", r.basis_size + r.ideal_rank, r.monomials);
    }
    let tau: TripleC = "k=1,2;p=3,1;q=1,1".parse()?;
    println!("S^C for {tau}: {}", schubert_c_vexillary(&tau)?.to_text());
    let w: Permutation = "w@1:3,2,1".parse()?;
    println!("image of S_321: {}", projected_schubert(&w)?.render(Format::Latex));
    Ok(())
}
