//! Expand polynomials in the Schubert basis and reassemble them.

use schubert::emit::Emit;
use schubert::parse::parse_lambda;
use schubert::schubert_a::{assemble, interpolate};

fn main() -> schubert::Result<()> {
    for text in ["x1", "c1^2", "x1 y2 + S[1,1]"] {
        let f = parse_lambda(text)?;
        let e = interpolate(&f);
        println!("{text} = {}", e.to_text());
        assert_eq!(assemble(&e), f);
    }
    Ok(())
}
