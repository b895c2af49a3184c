//! The reference table of `𝔖_w` for all permutations of `[0,3]`.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::parse::parse_lambda;
use crate::perm::Permutation;
use crate::poly::LambdaPoly;
use crate::schubert_a::schubert;

const FIXTURE: &str = include_str!("../data/table_a.json");

#[derive(Clone, Debug)]
pub struct TableRow {
    pub w: Permutation,
    /// One-line notation as printed in the fixture.
    pub label: String,
    pub expected: LambdaPoly,
}

#[derive(Clone, Debug)]
pub struct RowOutcome {
    pub row: TableRow,
    pub computed: LambdaPoly,
}

impl RowOutcome {
    pub fn passed(&self) -> bool {
        self.row.expected == self.computed
    }
}

/// Rows of the embedded fixture.
pub fn reference_rows() -> Result<Vec<TableRow>> {
    rows_from_json(FIXTURE)
}

/// Parse a fixture document `{"window":[lo,hi],"rows":[{"w":"1 0 3 2","expected":"…"}]}`.
pub fn rows_from_json(text: &str) -> Result<Vec<TableRow>> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::parse(e.column(), e.to_string()))?;
    let lo = doc["window"][0]
        .as_i64()
        .ok_or_else(|| Error::domain("fixture: missing window"))? as i32;
    let rows = doc["rows"]
        .as_array()
        .ok_or_else(|| Error::domain("fixture: missing rows"))?;
    rows.iter()
        .map(|row| {
            let label = row["w"].as_str().ok_or_else(|| Error::domain("fixture: row without w"))?;
            let images = label
                .split_whitespace()
                .map(|t| t.parse::<i32>().map_err(|_| Error::domain(format!("fixture: bad entry {t}"))))
                .collect::<Result<Vec<_>>>()?;
            let expected = row["expected"]
                .as_str()
                .ok_or_else(|| Error::domain("fixture: row without expected"))?;
            Ok(TableRow {
                w: Permutation::from_window(lo, images)?,
                label: label.to_string(),
                expected: parse_lambda(expected)?,
            })
        })
        .collect()
}

pub fn verify_rows(rows: Vec<TableRow>) -> Vec<RowOutcome> {
    rows.into_iter()
        .map(|row| {
            let computed = schubert(&row.w);
            RowOutcome { row, computed }
        })
        .collect()
}

pub fn verify_table() -> Result<Vec<RowOutcome>> {
    Ok(verify_rows(reference_rows()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_has_every_permutation() {
        let rows = reference_rows().unwrap();
        assert_eq!(rows.len(), 24);
        let mut ws: Vec<_> = rows.iter().map(|r| r.w.clone()).collect();
        ws.sort();
        let mut all = Permutation::all_in_window(0, 3);
        all.sort();
        assert_eq!(ws, all);
        for r in &rows {
            assert!(r.expected.is_homogeneous_of(r.w.length() as u32), "{}", r.label);
        }
    }

    #[test]
    fn every_row_matches() {
        for outcome in verify_table().unwrap() {
            assert!(outcome.passed(), "{}: got {}", outcome.row.label, outcome.computed);
        }
    }

    #[test]
    fn corrupted_row_is_reported() {
        let mut rows = reference_rows().unwrap();
        rows.truncate(3);
        rows[2].expected = parse_lambda("x1 + y2 + S[1]").unwrap();
        let outcome = verify_rows(rows);
        assert!(outcome[0].passed() && outcome[1].passed());
        assert!(!outcome[2].passed());
    }
}
