//! Canonical JSON, LaTeX and text forms of polynomials, and JSON parsing back.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::poly::{BasePoly, CPoly, LambdaPoly, Monomial, Partition, StrictPartition, Var};
use crate::perm::Permutation;
use crate::schubert_a::SchubertExpansion;
use crate::type_c::GammaPoly;
use crate::Int;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Latex,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            "text" => Ok(Format::Text),
            other => Err(Error::parse(0, format!("unknown format {other:?}"))),
        }
    }
}

pub trait Emit {
    fn to_json(&self) -> Value;
    fn to_latex(&self) -> String;
    fn to_text(&self) -> String;

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json().to_string(),
            Format::Latex => self.to_latex(),
            Format::Text => self.to_text(),
        }
    }
}

fn int_json(n: &Int) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<Int> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Int::from)
            .ok_or_else(|| Error::parse(0, format!("coefficient {n} is not an integer"))),
        Value::String(s) => s
            .parse::<Int>()
            .map_err(|_| Error::parse(0, format!("coefficient {s:?} is not an integer"))),
        other => Err(Error::parse(0, format!("expected an integer, got {other}"))),
    }
}

fn parts_from_json(v: &Value) -> Result<Vec<u32>> {
    v.as_array()
        .ok_or_else(|| Error::parse(0, "expected a list of parts"))?
        .iter()
        .map(|p| {
            p.as_u64()
                .and_then(|p| u32::try_from(p).ok())
                .ok_or_else(|| Error::parse(0, format!("bad part {p}")))
        })
        .collect()
}

fn latex_var(v: Var) -> String {
    match v {
        Var::X(i) => format!("x_{{{i}}}"),
        Var::Y(i) => format!("y_{{{i}}}"),
        Var::Z => "z".into(),
        Var::Aux(c, i) => format!("{c}_{{{i}}}"),
    }
}

fn latex_monomial(m: &Monomial) -> String {
    let mut out = String::new();
    for (v, e) in m.factors() {
        out += &latex_var(v);
        if e > 1 {
            let _ = write!(out, "^{{{e}}}");
        }
    }
    out
}

fn latex_parts(parts: &[u32]) -> String {
    parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// `(coeff)·symbol` terms joined with signs; `symbol` is empty for the constant.
fn latex_sum(terms: Vec<(String, &BasePoly)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (symbol, p)) in terms.into_iter().enumerate() {
        let single = p.len() == 1;
        let body = if symbol.is_empty() {
            p.to_latex()
        } else if *p == BasePoly::one() {
            symbol
        } else if *p == -BasePoly::one() {
            format!("-{symbol}")
        } else if single {
            format!("{} {symbol}", p.to_latex())
        } else {
            format!("\\left( {} \\right) {symbol}", p.to_latex())
        };
        match body.strip_prefix('-') {
            Some(rest) if n > 0 => {
                out += " - ";
                out += rest;
            }
            _ if n > 0 => {
                out += " + ";
                out += &body;
            }
            _ => out += &body,
        }
    }
    out
}

impl Emit for BasePoly {
    /// `[{"m": {"x1": 1}, "c": -4}, …]`.
    fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(m, c)| {
                    let mono: Map<String, Value> =
                        m.factors().map(|(v, e)| (v.to_string(), json!(e))).collect();
                    json!({ "m": mono, "c": int_json(c) })
                })
                .collect(),
        )
    }

    fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        // Highest degree first, x before y within a degree.
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| a.0.cmp(b.0)));
        let mut out = String::new();
        for (n, (m, c)) in terms.into_iter().enumerate() {
            let neg = *c < Int::from(0);
            let abs = if neg { -c } else { c.clone() };
            match (n, neg) {
                (0, true) => out += "-",
                (0, false) => {}
                (_, true) => out += " - ",
                (_, false) => out += " + ",
            }
            if m.is_one() {
                let _ = write!(out, "{abs}");
            } else if abs == Int::from(1) {
                out += &latex_monomial(m);
            } else {
                let _ = write!(out, "{abs}{}", latex_monomial(m));
            }
        }
        out
    }

    fn to_text(&self) -> String {
        self.to_string()
    }
}

impl Emit for LambdaPoly {
    /// `[{"lambda": [2,1], "coeff": <BasePoly>}, …]`.
    fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(lam, p)| json!({ "lambda": lam.parts(), "coeff": p.to_json() }))
                .collect(),
        )
    }

    fn to_latex(&self) -> String {
        let terms = self
            .terms()
            .rev()
            .map(|(lam, p)| {
                let symbol = if lam.is_empty() {
                    String::new()
                } else {
                    format!("S_{{{{{}}}}}", latex_parts(lam.parts()))
                };
                (symbol, p)
            })
            .collect();
        latex_sum(terms)
    }

    fn to_text(&self) -> String {
        self.to_string()
    }
}

impl Emit for GammaPoly {
    /// `[{"mu_strict": [2,1], "coeff": <BasePoly with "z" exponents>}, …]`.
    fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(mu, p)| json!({ "mu_strict": mu.parts(), "coeff": p.to_json() }))
                .collect(),
        )
    }

    fn to_latex(&self) -> String {
        let terms = self
            .terms()
            .rev()
            .map(|(mu, p)| {
                let symbol = if mu.parts().is_empty() {
                    String::new()
                } else {
                    format!("Q_{{{{{}}}}}", latex_parts(mu.parts()))
                };
                (symbol, p)
            })
            .collect();
        latex_sum(terms)
    }

    fn to_text(&self) -> String {
        self.to_string()
    }
}

fn c_symbol(parts: &[u32], latex: bool) -> String {
    let names: Vec<String> = parts
        .iter()
        .map(|k| if latex { format!("c_{{{k}}}") } else { format!("c{k}") })
        .collect();
    names.join(if latex { "" } else { "*" })
}

impl Emit for CPoly {
    /// `[{"c_monomial": [2,1], "coeff": <BasePoly>}, …]` for `c_2 c_1`.
    fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(m, p)| json!({ "c_monomial": m.parts(), "coeff": p.to_json() }))
                .collect(),
        )
    }

    fn to_latex(&self) -> String {
        let terms: Vec<_> = self.terms().map(|(m, p)| (c_symbol(m.parts(), true), p)).collect();
        latex_sum(terms.into_iter().rev().collect())
    }

    fn to_text(&self) -> String {
        let mut terms: Vec<String> = Vec::new();
        for (m, p) in self.terms() {
            let sym = c_symbol(m.parts(), false);
            terms.push(match (sym.is_empty(), *p == BasePoly::one()) {
                (true, _) => format!("({p})"),
                (false, true) => sym,
                (false, false) => format!("({p})*{sym}"),
            });
        }
        if terms.is_empty() {
            return "0".into();
        }
        terms.reverse();
        terms.join(" + ")
    }
}

impl Emit for SchubertExpansion {
    /// `[{"w": "w@0:1,0", "coeff": <BasePoly>}, …]` in permutation order.
    fn to_json(&self) -> Value {
        Value::Array(
            self.iter()
                .map(|(w, p)| json!({ "w": w.to_string(), "coeff": p.to_json() }))
                .collect(),
        )
    }

    /// Permutations in one-line notation on a common window `[lo, hi]`; a
    /// trailing `% window lo:n` comment records the start when it is not 1.
    fn to_latex(&self) -> String {
        let (lo, hi) = self
            .keys()
            .filter_map(Permutation::support)
            .fold((1, 1), |(lo, hi), (a, b)| (lo.min(a), hi.max(b)));
        let syms: Vec<(String, &BasePoly)> = self
            .iter()
            .map(|(w, p)| {
                let sym = if w.is_identity() {
                    String::new()
                } else {
                    let vals: Vec<String> = w.window(lo, hi).iter().map(i32::to_string).collect();
                    format!("\\mathfrak{{S}}_{{{}}}", vals.join("\\,"))
                };
                (sym, p)
            })
            .collect();
        let mut out = latex_sum(syms);
        if lo != 1 && !self.is_empty() {
            let _ = write!(out, " % window {lo}:{}", hi - lo + 1);
        }
        out
    }

    fn to_text(&self) -> String {
        if self.is_empty() {
            return "0".into();
        }
        self.iter()
            .map(|(w, p)| format!("({p})*{w}"))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

pub fn expansion_from_json(v: &Value) -> Result<SchubertExpansion> {
    let terms = v.as_array().ok_or_else(|| Error::parse(0, "expansion must be a list"))?;
    let mut out = SchubertExpansion::new();
    for t in terms {
        let w = t
            .get("w")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::parse(0, "term needs a \"w\" string"))?
            .parse()?;
        let c = base_from_json(t.get("coeff").ok_or_else(|| Error::parse(0, "term needs \"coeff\""))?)?;
        let slot = out.entry(w).or_insert_with(BasePoly::zero);
        *slot += c;
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

pub fn cpoly_from_json(v: &Value) -> Result<CPoly> {
    let mut out = CPoly::default();
    for (parts, coeff) in keyed_terms(v, "c_monomial")? {
        out.add_term(Partition::from_multiset(parts), base_from_json(coeff)?);
    }
    Ok(out)
}

pub fn base_from_json(v: &Value) -> Result<BasePoly> {
    let terms = v.as_array().ok_or_else(|| Error::parse(0, "polynomial must be a list"))?;
    let mut out = BasePoly::zero();
    for t in terms {
        let mono = t
            .get("m")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::parse(0, "term needs an \"m\" object"))?;
        let mut pairs = Vec::new();
        for (name, e) in mono {
            let v = Var::from_name(name)
                .ok_or_else(|| Error::parse(0, format!("unknown variable {name:?}")))?;
            let e = e
                .as_u64()
                .and_then(|e| u32::try_from(e).ok())
                .ok_or_else(|| Error::parse(0, format!("bad exponent for {name}")))?;
            pairs.push((v, e));
        }
        let c = int_from_json(t.get("c").ok_or_else(|| Error::parse(0, "term needs \"c\""))?)?;
        out.add_term(Monomial::from_pairs(pairs), c);
    }
    Ok(out)
}

fn keyed_terms<'a>(v: &'a Value, key: &str) -> Result<Vec<(Vec<u32>, &'a Value)>> {
    let terms = v.as_array().ok_or_else(|| Error::parse(0, "polynomial must be a list"))?;
    terms
        .iter()
        .map(|t| {
            let parts = parts_from_json(
                t.get(key).ok_or_else(|| Error::parse(0, format!("term needs {key:?}")))?,
            )?;
            let coeff = t.get("coeff").ok_or_else(|| Error::parse(0, "term needs \"coeff\""))?;
            Ok((parts, coeff))
        })
        .collect()
}

pub fn lambda_from_json(v: &Value) -> Result<LambdaPoly> {
    let mut out = LambdaPoly::zero();
    for (parts, coeff) in keyed_terms(v, "lambda")? {
        out.add_term(Partition::new(parts)?, base_from_json(coeff)?);
    }
    Ok(out)
}

pub fn gamma_from_json(v: &Value) -> Result<GammaPoly> {
    let mut out = GammaPoly::default();
    for (parts, coeff) in keyed_terms(v, "mu_strict")? {
        out.add_term(StrictPartition::new(parts)?, base_from_json(coeff)?);
    }
    Ok(out)
}

/// Parse a JSON document, reporting the byte offset of syntax errors.
pub fn parse_json(src: &str) -> Result<Value> {
    serde_json::from_str(src).map_err(|e| {
        let offset = src
            .lines()
            .take(e.line().saturating_sub(1))
            .map(|l| l.len() + 1)
            .sum::<usize>()
            + e.column().saturating_sub(1);
        Error::parse(offset, e.to_string())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_lambda;
    use crate::type_c::parse_gamma;

    #[test]
    fn lambda_roundtrip_and_shape() {
        let f = parse_lambda("(x1 + y_-2^3) S[2,1] - 4 z + 123456789012345678901234567890 c1").unwrap();
        let v = f.to_json();
        assert_eq!(lambda_from_json(&v).unwrap(), f);
        let text = v.to_string();
        assert!(text.contains("\"lambda\":[2,1]"));
        assert!(text.contains("\"y-2\":3"));
        assert!(text.contains("\"123456789012345678901234567890\""));
        assert_eq!(lambda_from_json(&parse_json(&text).unwrap()).unwrap(), f);
    }

    #[test]
    fn gamma_roundtrip() {
        let g = parse_gamma("z Q[2,1] + (x1 - z)^2 c3 + 5").unwrap();
        let v = g.to_json();
        assert!(v.to_string().contains("\"mu_strict\":[2,1]"));
        assert_eq!(gamma_from_json(&v).unwrap(), g);
    }

    #[test]
    fn latex_forms() {
        let f = parse_lambda("(x1 + y1) S[1] + S[1,1] + x_-1 x2").unwrap();
        assert_eq!(f.to_latex(), "S_{{1,1}} + \\left( x_{1} + y_{1} \\right) S_{{1}} + x_{-1}x_{2}");
        assert_eq!(parse_lambda("-S[2] + 2x1^2 S[1]").unwrap().to_latex(), "-S_{{2}} + 2x_{1}^{2} S_{{1}}");
        assert_eq!(parse_lambda("S[2] - (x1 + y1) S[1]").unwrap().to_latex(), "S_{{2}} + \\left( -x_{1} - y_{1} \\right) S_{{1}}");
        assert_eq!(LambdaPoly::zero().to_latex(), "0");
        let g = parse_gamma("c1^2").unwrap();
        assert_eq!(g.to_latex(), "2 Q_{{2}} + z Q_{{1}}");
    }

    #[test]
    fn malformed_json_is_a_parse_error() {
        assert!(matches!(parse_json("[{\"lambda\": [1],"), Err(Error::Parse { .. })));
        let bad = parse_json("[{\"lambda\": [1], \"coeff\": [{\"m\": {\"w3\": 1}, \"c\": 1}]}]").unwrap();
        assert!(lambda_from_json(&bad).is_ok());
        let bad = parse_json("[{\"lambda\": [1], \"coeff\": [{\"m\": {\"c3\": 1}, \"c\": 1}]}]").unwrap();
        assert!(lambda_from_json(&bad).is_err());
        assert_eq!(Format::from_str("latex").unwrap(), Format::Latex);
        assert!(Format::from_str("yaml").is_err());
    }

    #[test]
    fn expansions_and_c_monomials() {
        use crate::schubert_a::product_structure;
        let w: crate::perm::Permutation = "w@1:2,1".parse().unwrap();
        let e = product_structure(&w, &w);
        assert_eq!(expansion_from_json(&e.to_json()).unwrap(), e);
        assert!(e.to_latex().contains("\\mathfrak{S}_{"));
        let q = crate::type_c::q_pfaffian(&"[2,1]".parse().unwrap());
        assert_eq!(cpoly_from_json(&q.to_json()).unwrap(), q);
        assert!(q.to_text().contains("c2*c1"));
        assert_eq!(CPoly::c_index(1).to_latex(), "c_{1}");
    }
}
