//! Canonical JSON encoding of a spec:
//! `{"B":[..],"D":[..],"n":..,"sigma":{"<d>":1|-1}}`.
//!
//! Keys are sorted, arrays ascending, no whitespace. A top-level
//! `"schema":1` is accepted on input and never emitted.

use std::collections::BTreeMap;

use imcg_core::GraphSpec;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    #[serde(default)]
    schema: Option<u64>,
    n: u64,
    #[serde(rename = "B", default)]
    b: Vec<u64>,
    #[serde(rename = "D", default)]
    d: Vec<u64>,
    #[serde(default)]
    sigma: BTreeMap<String, i64>,
}

pub fn parse_spec(text: &str) -> Result<GraphSpec> {
    let file: SpecFile = serde_json::from_str(text)?;
    if let Some(v) = file.schema.filter(|&v| v != 1) {
        return Err(Error::Schema(v));
    }
    let mut sigma = BTreeMap::new();
    for (key, value) in &file.sigma {
        let divisor: u64 = key
            .parse()
            .ok()
            .filter(|d: &u64| *d > 0 && key == &d.to_string())
            .ok_or_else(|| Error::SigmaKey(key.clone()))?;
        if value.abs() != 1 {
            return Err(Error::SigmaValue {
                divisor,
                value: *value,
            });
        }
        sigma.insert(divisor, *value);
    }
    let mut d = file.d.clone();
    d.sort_unstable();
    let keys: Vec<u64> = sigma.keys().copied().collect();
    if d != keys {
        return Err(imcg_core::Error::SigmaDomainMismatch.into());
    }
    let directed: Vec<(u64, i64)> = sigma.into_iter().collect();
    Ok(GraphSpec::build(file.n, &file.b, &directed)?)
}

pub fn spec_value(spec: &GraphSpec) -> Value {
    let sigma: serde_json::Map<String, Value> = spec
        .sigma()
        .iter()
        .map(|(d, s)| (d.to_string(), json!(s.value())))
        .collect();
    json!({
        "B": spec.undirected(),
        "D": spec.directed().collect::<Vec<_>>(),
        "n": spec.n(),
        "sigma": sigma,
    })
}

pub fn spec_to_json(spec: &GraphSpec) -> String {
    spec_value(spec).to_string()
}
