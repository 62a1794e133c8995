//! The series command: resolve a component label and render its level-m
//! member.

use crate::output::Format;
use crate::tables::{reference_rows, RefRow};
use anyhow::{bail, Context, Result};
use atlas_components::{enumerate_components, param_vector, series_degree, ComponentRecord};
use atlas_forests::{Forest, ForestShape};
use num_traits::ToPrimitive;
use serde_json::json;

/// A label is either a table label like "C515" / "C6110" / "C618a", or the
/// canonical dotted form "i.j.k".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Label {
    Table { i: usize, j: usize, k: usize, variant: Option<char> },
    Canonical { i: usize, j: usize, k: usize },
}

pub fn parse_label(s: &str) -> Result<Label> {
    if let Some(rest) = s.strip_prefix('C') {
        let variant = rest.chars().last().filter(|c| c.is_ascii_alphabetic());
        let digits = if variant.is_some() { &rest[..rest.len() - 1] } else { rest };
        let ds: Vec<u32> = digits
            .chars()
            .map(|c| c.to_digit(10).context("digit expected in label"))
            .collect::<Result<_>>()?;
        if ds.len() < 3 {
            bail!("label {s} needs at least three digits");
        }
        let i = ds[0] as usize;
        let j = ds[1] as usize;
        let k = ds[2..].iter().fold(0usize, |acc, &d| acc * 10 + d as usize);
        return Ok(Label::Table { i, j, k, variant });
    }
    let parts: Vec<&str> = s.split('.').collect();
    if parts.len() == 3 {
        return Ok(Label::Canonical {
            i: parts[0].parse()?,
            j: parts[1].parse()?,
            k: parts[2].parse()?,
        });
    }
    bail!("unrecognized label {s} (expected C<i><j><k>[a|b] or i.j.k)")
}

fn table_row(i: usize, j: usize, k: usize, variant: Option<char>) -> Result<&'static RefRow> {
    let wanted_label = match variant {
        Some(v) => format!("C{i}{j}{k}{v}"),
        None => format!("C{i}{j}{k}"),
    };
    reference_rows(i, Some(j))
        .into_iter()
        .find(|r| r.label == wanted_label)
        .with_context(|| format!("label {wanted_label} is not in the embedded tables"))
}

/// Find the computed record matching a table row (by forest, invariants,
/// and for split rows the variant order within the Galois pair).
fn resolve_record(row: &RefRow, variant: Option<char>) -> Result<ComponentRecord> {
    let records = enumerate_components(row.i, row.j)?;
    let forest = Forest::decode(row.forest).map_err(anyhow::Error::msg)?;
    let mut hits: Vec<ComponentRecord> = records
        .into_iter()
        .filter(|r| {
            r.forest == forest
                && r.degree_coeff.to_i64() == Some(row.c)
                && r.multiplicity.to_i64() == Some(row.mu)
                && r.jordan.parts() == row.jordan
        })
        .collect();
    if hits.is_empty() {
        bail!("no computed record matches {}", row.label);
    }
    hits.sort_by(|a, b| a.weight.cmp(&b.weight));
    let idx = match variant {
        Some('a') | None => 0,
        Some('b') => 1,
        Some(v) => bail!("unknown variant {v}"),
    };
    hits.into_iter()
        .nth(idx)
        .with_context(|| format!("variant index {idx} out of range for {}", row.label))
}

pub fn run_series(label: &str, m: usize, format: Format) -> Result<(String, bool)> {
    let parsed = parse_label(label)?;
    let (record, paper_label) = match parsed {
        Label::Table { i, j, k, variant } => {
            let row = table_row(i, j, k, variant)?;
            (resolve_record(row, variant)?, Some(row.label.to_string()))
        }
        Label::Canonical { i, j, k } => {
            let records = enumerate_components(i, j)?;
            let r = records
                .into_iter()
                .find(|r| r.k == k)
                .with_context(|| format!("no record {i}.{j}.{k}"))?;
            (r, None)
        }
    };
    let min_m = record.i + record.j;
    if m < min_m {
        // A vanishing member is a meaningful answer, not an error.
        let payload = json!({
            "label": record.label(),
            "paper_label": paper_label,
            "m": m,
            "vanishes": true,
            "note": format!("the series member vanishes for m < {min_m}"),
        });
        return Ok((render(payload, format), true));
    }
    let degree = series_degree(&record.degree_coeff, record.i, record.j, m);
    let shape = ForestShape::new(&record.forest);
    let pv = param_vector(&shape, &record.weight)?;
    let lambda: Vec<String> = pv.lambda.iter().map(|p| p.to_string()).collect();
    let payload = json!({
        "label": record.label(),
        "paper_label": paper_label,
        "forest": record.forest.encode(),
        "weight": record.weight_finals,
        "i": record.i,
        "j": record.j,
        "m": m,
        "vanishes": false,
        "degree": degree.to_string(),
        "degree_coefficient": record.degree_coeff.to_string(),
        "multiplicity": record.multiplicity.to_string(),
        "jordan": record.jordan.parts(),
        "field": record.field.to_string(),
        "minimal_coordinates": lambda,
        "extension_note": format!(
            "level-{m} points are coefficient convolutions of the minimal coordinates with a generic degree-{} vector",
            m - min_m
        ),
    });
    Ok((render(payload, format), true))
}

fn render(payload: serde_json::Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&payload).expect("serializable") + "\n",
        _ => {
            let mut out = String::new();
            if let Some(obj) = payload.as_object() {
                for (k, v) in obj {
                    match v {
                        serde_json::Value::Array(a) => {
                            out.push_str(&format!("{k}:\n"));
                            for item in a {
                                out.push_str(&format!(
                                    "  {}\n",
                                    item.as_str().map(String::from).unwrap_or_else(|| item.to_string())
                                ));
                            }
                        }
                        other => out.push_str(&format!(
                            "{k}: {}\n",
                            other.as_str().map(String::from).unwrap_or_else(|| other.to_string())
                        )),
                    }
                }
            }
            out
        }
    }
}
