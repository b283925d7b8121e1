//! Text and JSON forms of decompositions and series.

use std::str::FromStr;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::charseries::CharSeries;
use crate::error::{Error, Result};
use crate::hall_ops::SpDecomposition;
use crate::partitions::Partition;
use crate::symfunc::Q;
use crate::torelli_chars::CharacterTable;

/// Parses `2 <1^4> + <2^2,1^2>`; `0` is the zero module.
pub fn parse_decomposition(text: &str) -> Result<SpDecomposition> {
    let text = text.trim();
    let mut out = SpDecomposition::new();
    if text == "0" || text.is_empty() {
        return Ok(out);
    }
    for raw in text.split('+') {
        let raw = raw.trim();
        let open = raw
            .find('<')
            .ok_or_else(|| Error::Parse(format!("missing '<' in term {raw:?}")))?;
        if !raw.ends_with('>') {
            return Err(Error::Parse(format!("missing '>' in term {raw:?}")));
        }
        let mult = raw[..open].trim();
        let mult = if mult.is_empty() {
            Q::one()
        } else {
            Q::from_str(mult).map_err(|_| Error::Parse(format!("bad multiplicity {mult:?}")))?
        };
        let lam: Partition = raw[open + 1..raw.len() - 1].trim().parse()?;
        out.add(lam, mult);
    }
    Ok(out)
}

fn number(c: &Q) -> Value {
    if c.is_integer() {
        match c.to_integer().to_string().parse::<i64>() {
            Ok(v) => json!(v),
            Err(_) => json!(c.to_string()),
        }
    } else {
        json!(c.to_string())
    }
}

pub fn decomposition_json(d: &SpDecomposition) -> Value {
    let terms: Vec<Value> = d
        .terms()
        .map(|(lam, m)| json!({ "partition": lam.parts(), "mult": number(m) }))
        .collect();
    Value::Array(terms)
}

pub fn table_text(table: &CharacterTable) -> String {
    let mut out = String::new();
    for (n, d) in &table.degrees {
        out.push_str(&format!("n={n}: {d}\n"));
    }
    out
}

pub fn table_json(table: &CharacterTable) -> Value {
    let rows: Vec<Value> = table
        .degrees
        .iter()
        .map(|(n, d)| {
            json!({
                "object": table.object.tag(),
                "degree": n,
                "terms": decomposition_json(d),
                "caps": { "sym": table.sym_cap, "t": table.t_cap },
            })
        })
        .collect();
    Value::Array(rows)
}

/// A pure t-series as `1 + t^2 + 2 t^4`.
pub fn scalar_series_text(f: &CharSeries) -> String {
    let mut parts = Vec::new();
    for (j, c) in f.scalars().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let power = match j {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{j}"),
        };
        let coeff = if c.is_one() && j > 0 { String::new() } else { c.to_string() };
        parts.push(match (coeff.is_empty(), power.is_empty()) {
            (true, _) => power,
            (false, true) => coeff,
            (false, false) => format!("{coeff} {power}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    }
}

pub fn scalar_series_json(f: &CharSeries) -> Value {
    Value::Array(f.scalars().iter().map(number).collect())
}

/// Schur expansion of each t-coefficient, as `n=0: s(0) + s(1)`.
pub fn schur_series_text(f: &CharSeries) -> String {
    let mut out = String::new();
    for (j, c) in f.coeffs().iter().enumerate() {
        let terms: Vec<String> = c
            .to_schur_basis()
            .into_iter()
            .map(|(lam, m)| if m.is_one() { format!("s({lam})") } else { format!("{m} s({lam})") })
            .collect();
        let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        out.push_str(&format!("n={j}: {body}\n"));
    }
    out
}

pub fn schur_series_json(f: &CharSeries) -> Value {
    let rows: Vec<Value> = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, c)| {
            let terms: Vec<Value> = c
                .to_schur_basis()
                .into_iter()
                .map(|(lam, m)| json!({ "partition": lam.parts(), "coeff": number(&m) }))
                .collect();
            json!({ "degree": j, "terms": terms, "caps": { "sym": f.sym_cap(), "t": f.t_cap() } })
        })
        .collect();
    Value::Array(rows)
}
