//! Recompute the 24 reference polynomials on the window [0,3].

fn main() -> schubert::Result<()> {
    let rows = schubert::table::verify_table()?;
    for r in &rows {
        println!("{:<10} {}", r.row.label, if r.passed() { "pass" } else { "FAIL" });
    }
    let passed = rows.iter().filter(|r| r.passed()).count();
    println!("{passed}/{}", rows.len());
    Ok(())
}
