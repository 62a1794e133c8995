//! JSON cache of enumeration results keyed by (i, j, code version).

use anyhow::{Context, Result};
use atlas_arith::{Integer, Partition};
use atlas_components::ComponentRecord;
use atlas_forests::{FieldLabel, Forest, Weight};
use serde_json::{json, Value};
use std::path::Path;
use std::str::FromStr;

/// Bumped when the record schema or labeling rules change.
const SCHEMA: u32 = 1;

fn version() -> String {
    format!("{}-s{}", env!("CARGO_PKG_VERSION"), SCHEMA)
}

fn file_name(i: usize, j: usize) -> String {
    format!("enum-i{i}-j{j}-{}.json", version())
}

pub fn store(dir: &Path, i: usize, j: usize, records: &[ComponentRecord]) -> Result<()> {
    std::fs::create_dir_all(dir).context("creating cache directory")?;
    let rows: Vec<Value> = records
        .iter()
        .map(|r| {
            json!({
                "i": r.i,
                "j": r.j,
                "k": r.k,
                "forest": r.forest.encode(),
                "weight_nodes": r.weight.0,
                "weight": r.weight_finals,
                "c": r.degree_coeff.to_string(),
                "mu": r.multiplicity.to_string(),
                "jordan": r.jordan.parts(),
                "field": r.field.to_string(),
                "galois_orbit": r.galois_orbit,
                "flags": r.flags,
            })
        })
        .collect();
    let payload = json!({ "version": version(), "i": i, "j": j, "records": rows });
    let path = dir.join(file_name(i, j));
    std::fs::write(&path, serde_json::to_string_pretty(&payload)?)
        .with_context(|| format!("writing {path:?}"))?;
    Ok(())
}

pub fn load(dir: &Path, i: usize, j: usize) -> Result<Option<Vec<ComponentRecord>>> {
    let path = dir.join(file_name(i, j));
    let Ok(text) = std::fs::read_to_string(&path) else {
        return Ok(None);
    };
    let value: Value = serde_json::from_str(&text).with_context(|| format!("parsing {path:?}"))?;
    if value["version"].as_str() != Some(version().as_str()) {
        return Ok(None);
    }
    let mut out = Vec::new();
    for row in value["records"].as_array().context("records array")? {
        let forest = Forest::decode(row["forest"].as_str().context("forest")?)
            .map_err(anyhow::Error::msg)?;
        let weight = Weight(
            row["weight_nodes"]
                .as_array()
                .context("weight_nodes")?
                .iter()
                .map(|v| v.as_u64().unwrap_or(0))
                .collect(),
        );
        let jordan = Partition::new(
            row["jordan"]
                .as_array()
                .context("jordan")?
                .iter()
                .map(|v| v.as_u64().unwrap_or(0) as u32)
                .collect(),
        );
        out.push(ComponentRecord {
            i: row["i"].as_u64().context("i")? as usize,
            j: row["j"].as_u64().context("j")? as usize,
            k: row["k"].as_u64().context("k")? as usize,
            forest,
            weight,
            weight_finals: row["weight"]
                .as_array()
                .context("weight")?
                .iter()
                .map(|v| v.as_u64().unwrap_or(0))
                .collect(),
            degree_coeff: Integer::from_str(row["c"].as_str().context("c")?)?,
            multiplicity: Integer::from_str(row["mu"].as_str().context("mu")?)?,
            jordan,
            field: FieldLabel::from_str(row["field"].as_str().context("field")?)
                .map_err(anyhow::Error::msg)?,
            galois_orbit: row["galois_orbit"].as_u64().context("orbit")? as usize,
            flags: row["flags"]
                .as_array()
                .map(|a| a.iter().filter_map(|v| v.as_str().map(String::from)).collect())
                .unwrap_or_default(),
        });
    }
    Ok(Some(out))
}
