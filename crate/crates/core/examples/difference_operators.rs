//! Divided differences, including the border-strip action of the operator at 0.

use schubert::parse::parse_lambda;
use schubert::schubert_a::{del_x, del_y, schubert};

fn main() -> schubert::Result<()> {
    let f = parse_lambda("S[4,2]")?;
    println!("d0 S[4,2] = {}", del_x(0, &f));

    let w = "w@0:2,3,0,1".parse()?;
    let s = schubert(&w);
    for i in -1..=3 {
        println!("dx_{i} S_w = {}   dy_{i} S_w = {}", del_x(i, &s), del_y(i, &s));
    }
    Ok(())
}
