//! JSON file formats for tables and Gram data.
//!
//! Tables: `{"flavor": "two" | "odd:<p>" | "quadratic", "entries": [{"k": 3, "r": 1, "s": "inf"}]}`.
//! Gram data: `{"orders": [4, 2], "gram": [["1/4", "0"], ["0", "1/2"]], "qvals": ["1/8", "1/4"]}`,
//! with `qvals` optional.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use linkform::arith::is_prime;
use linkform::oracle::{GramPairing, GramQuadratic};
use linkform::tables::{Signature, Table};
use linkform::{AnyTable, Flavor, OddTable, Sign, SigTable, Z8Bar};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    flavor: String,
    entries: Vec<EntryFile>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryFile {
    k: u32,
    r: u32,
    s: Value,
}

fn parse_flavor(text: &str) -> Result<Flavor, String> {
    match text {
        "two" => Ok(Flavor::Two),
        "quadratic" => Ok(Flavor::Quadratic),
        _ => {
            let p = text
                .strip_prefix("odd:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| format!("unknown flavor \"{text}\" (expected two, odd:<p> or quadratic)"))?;
            if p == 2 || !is_prime(p) {
                return Err(format!("flavor odd:{p} needs an odd prime"));
            }
            Ok(Flavor::Odd(p))
        }
    }
}

fn z8bar_value(v: &Value) -> Result<Z8Bar, String> {
    match v {
        Value::String(s) if s == "inf" => Ok(Z8Bar::Infinity),
        Value::Number(n) => n.as_i64().map(Z8Bar::new).ok_or_else(|| format!("signature {n} is not an integer")),
        other => Err(format!("signature must be an integer or \"inf\", found {other}")),
    }
}

fn sign_value(v: &Value) -> Result<Sign, String> {
    v.as_i64()
        .and_then(|x| i8::try_from(x).ok())
        .and_then(Sign::from_i8)
        .ok_or_else(|| format!("odd signature must be 1 or -1, found {v}"))
}

pub fn parse_table(text: &str) -> Result<AnyTable, String> {
    let file: TableFile = serde_json::from_str(text).map_err(|e| format!("malformed table file: {e}"))?;
    let flavor = parse_flavor(&file.flavor)?;
    let mut seen = BTreeSet::new();
    for e in &file.entries {
        if !seen.insert(e.k) {
            return Err(format!("duplicate entry for k = {}", e.k));
        }
        if e.k < flavor.domain_min() {
            return Err(format!("index {} is below the domain of a {flavor} table", e.k));
        }
    }
    match flavor {
        Flavor::Odd(p) => {
            let mut t = OddTable::odd(p);
            for e in &file.entries {
                t.set(e.k, e.r, sign_value(&e.s)?).map_err(|e| e.to_string())?;
            }
            Ok(AnyTable::Odd(t))
        }
        _ => {
            let mut t = if flavor == Flavor::Quadratic { SigTable::quadratic() } else { SigTable::two() };
            for e in &file.entries {
                t.set(e.k, e.r, z8bar_value(&e.s)?).map_err(|e| e.to_string())?;
            }
            Ok(AnyTable::Sig(t))
        }
    }
}

fn z8bar_json(s: Z8Bar) -> Value {
    match s {
        Z8Bar::Infinity => json!("inf"),
        Z8Bar::Finite(v) => json!(v),
    }
}

fn entries_json<S: Signature>(t: &Table<S>, sig: impl Fn(S) -> Value, provenance: Option<Provenance>) -> Vec<Value> {
    let mut indices: BTreeSet<u32> = t.entries().map(|(k, _, _)| k).collect();
    if t.flavor() == Flavor::Quadratic {
        indices.insert(0);
    }
    indices
        .into_iter()
        .map(|k| {
            let (r, s) = t.get(k);
            let mut e = json!({"k": k, "r": r, "s": sig(s)});
            if let Some(p) = provenance {
                e["provenance"] = json!(p(k));
            }
            e
        })
        .collect()
}

/// Where the signature at an index came from, e.g. `"closed-form"` or `"oracle"`.
pub type Provenance<'a> = &'a dyn Fn(u32) -> &'static str;

/// A table in the file format, optionally tagging each signature with its provenance.
pub fn table_json(t: &AnyTable, provenance: Option<Provenance>) -> Value {
    match t {
        AnyTable::Sig(s) => json!({"flavor": s.flavor().to_string(), "entries": entries_json(s, z8bar_json, provenance)}),
        AnyTable::Odd(o) => {
            json!({"flavor": o.flavor().to_string(), "entries": entries_json(o, |s| json!(s.as_i8()), provenance)})
        }
    }
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct GramFile {
    orders: Vec<u64>,
    gram: Vec<Vec<String>>,
    #[serde(default)]
    qvals: Option<Vec<String>>,
}

/// A rational `p/q` or integer `p`.
pub fn parse_rational(text: &str) -> Result<(i64, u64), String> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: i64 = num.parse().map_err(|_| format!("bad rational \"{text}\""))?;
    let den: u64 = den.parse().map_err(|_| format!("bad rational \"{text}\""))?;
    if den == 0 {
        return Err(format!("bad rational \"{text}\": zero denominator"));
    }
    Ok((num, den))
}

pub enum GramData {
    Pairing(GramPairing),
    Quadratic(GramQuadratic),
}

pub fn parse_gram(text: &str) -> Result<GramData, String> {
    let file: GramFile = serde_json::from_str(text).map_err(|e| format!("malformed gram file: {e}"))?;
    let rows: Vec<Vec<(i64, u64)>> = file
        .gram
        .iter()
        .map(|row| row.iter().map(|s| parse_rational(s)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    let base = GramPairing::from_rationals(file.orders, &rows).map_err(|e| e.to_string())?;
    match file.qvals {
        None => Ok(GramData::Pairing(base)),
        Some(q) => {
            let q: Vec<(i64, u64)> = q.iter().map(|s| parse_rational(s)).collect::<Result<_, _>>()?;
            Ok(GramData::Quadratic(GramQuadratic::from_rationals(base, &q).map_err(|e| e.to_string())?))
        }
    }
}
