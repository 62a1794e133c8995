//! Rendering of record tables and reports in the three output formats.

use atlas_components::ComponentRecord;
use clap::ValueEnum;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

/// JSON object for one record, following the documented schema.
pub fn record_json(r: &ComponentRecord, paper_label: Option<&str>) -> Value {
    json!({
        "label": r.label(),
        "paper_label": paper_label,
        "forest": r.forest.encode(),
        "weight": r.weight_finals,
        "weight_nodes": r.weight.0,
        "i": r.i,
        "j": r.j,
        "k": r.k,
        "c": r.degree_coeff.to_u64(),
        "mu": r.multiplicity.to_u64(),
        "jordan": r.jordan.parts(),
        "field": r.field.to_string(),
        "galois_orbit": r.galois_orbit,
        "flags": r.flags,
    })
}

pub fn records_table(records: &[(ComponentRecord, Option<String>)], format: Format) -> String {
    records_table_at(records, format, None)
}

/// Table with an optional series-degree column at level m.
pub fn records_table_at(
    records: &[(ComponentRecord, Option<String>)],
    format: Format,
    m: Option<usize>,
) -> String {
    match format {
        Format::Json => {
            let rows: Vec<Value> = records
                .iter()
                .map(|(r, pl)| record_json(r, pl.as_deref()))
                .collect();
            serde_json::to_string_pretty(&rows).expect("serializable") + "\n"
        }
        Format::Csv => {
            let degree_col = m.map(|mm| format!(",degree_at_{mm}")).unwrap_or_default();
            let mut out = format!(
                "label,paper_label,i,j,k,c,mu,jordan,forest,weight,field,galois_orbit,flags{degree_col}\n",
            );
            for (r, pl) in records {
                let extra = m
                    .map(|mm| format!(",{}", r.degree_at(mm)))
                    .unwrap_or_default();
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},\"{}\",\"{}\",{},{},{}{extra}\n",
                    r.label(),
                    pl.clone().unwrap_or_default(),
                    r.i,
                    r.j,
                    r.k,
                    r.degree_coeff,
                    r.multiplicity,
                    r.jordan,
                    r.forest.encode(),
                    fmt_weight(&r.weight_finals),
                    r.field,
                    r.galois_orbit,
                    r.flags.join("|"),
                ));
            }
            out
        }
        Format::Markdown => {
            let degree_head = m.map(|mm| format!(" degree(m={mm}) |")).unwrap_or_default();
            let degree_sep = if m.is_some() { "---|" } else { "" };
            let mut out = format!(
                "| label | paper | j | c | mu | jordan | forest | weight | field | orbit |{degree_head}\n\
                 |---|---|---|---|---|---|---|---|---|---|{degree_sep}\n",
            );
            for (r, pl) in records {
                let extra = m
                    .map(|mm| format!(" {} |", r.degree_at(mm)))
                    .unwrap_or_default();
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} | `{}` | {} | {} | {} |{extra}\n",
                    r.label(),
                    pl.clone().unwrap_or_else(|| "-".into()),
                    r.j,
                    r.degree_coeff,
                    r.multiplicity,
                    r.jordan,
                    r.forest.encode(),
                    fmt_weight(&r.weight_finals),
                    r.field,
                    r.galois_orbit,
                ));
            }
            out
        }
    }
}

pub fn fmt_weight(finals: &[u64]) -> String {
    let body: Vec<String> = finals.iter().map(|v| v.to_string()).collect();
    format!("({})", body.join(","))
}
