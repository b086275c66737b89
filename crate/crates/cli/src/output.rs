//! Writers for JSON lines and CSV.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde_json::Value;

use edgeposet::sweep::mask_to_set;
use edgeposet::ActionReport;

use crate::CliError;

pub fn open(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    match path {
        Some(p) => {
            let f = File::create(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?;
            Ok(Box::new(BufWriter::new(f)))
        }
        None => Ok(Box::new(io::stdout().lock())),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

/// Nested objects become dotted column names; arrays become
/// space-separated cells, with `|` between inner arrays.
pub fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(items) if items.iter().any(Value::is_array) => {
            let cell = items.iter().map(scalar).collect::<Vec<_>>().join("|");
            out.push((prefix.to_string(), cell));
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

pub fn write_csv(w: &mut dyn Write, rows: &[Vec<(String, String)>]) -> Result<(), CliError> {
    let mut csv = csv::Writer::from_writer(w);
    if let Some(first) = rows.first() {
        csv.write_record(first.iter().map(|(k, _)| k))?;
    }
    for row in rows {
        csv.write_record(row.iter().map(|(_, v)| v))?;
    }
    csv.flush()?;
    Ok(())
}

pub fn write_json_line(w: &mut dyn Write, v: &Value) -> Result<(), CliError> {
    writeln!(w, "{v}")?;
    Ok(())
}

fn ranks(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn opt(b: Option<bool>) -> String {
    b.map(|b| b.to_string()).unwrap_or_default()
}

/// Fixed columns, so every record of a sweep shares one header.
pub fn action_row(r: &ActionReport) -> Vec<(String, String)> {
    let witness = match (&r.witness_sets, r.witness) {
        (Some(sets), _) => sets.iter().map(|s| ranks(s)).collect::<Vec<_>>().join("|"),
        (None, Some(w)) => format!("{} {} {}", w.x, w.y, w.z),
        (None, None) => String::new(),
    };
    let mut row = vec![
        ("group", r.group.clone()),
        ("degree", r.degree.to_string()),
        ("order", r.order.to_string()),
        ("cct", r.cct.to_string()),
        ("cct_direct", r.cct_methods.direct.to_string()),
        ("cct_dual", r.cct_methods.dual.to_string()),
        ("cct_q_bijective", r.cct_methods.q_bijective.to_string()),
        ("cct_rank_counts", r.cct_methods.rank_counts.to_string()),
        ("witness", witness),
        ("quotient_ranks", ranks(&r.quotient_ranks)),
        ("edge_quotient_ranks", ranks(&r.edge_quotient_ranks)),
        ("quotient_edge_ranks", ranks(&r.quotient_edge_ranks)),
        ("h_quotient_ranks", ranks(&r.h_quotient_ranks)),
        ("q_bijective", r.q_bijective.to_string()),
        ("q_is_isomorphism", r.q_is_isomorphism.to_string()),
        ("symmetric", r.peck.symmetric.to_string()),
        ("unimodal", r.peck.unimodal.to_string()),
        ("unitary_peck", opt(r.peck.unitary_peck)),
        ("strongly_sperner", opt(r.peck.strongly_sperner)),
        ("peck", r.peck.peck.to_string()),
    ];
    if let Some(ms) = r.millis {
        row.push(("millis", format!("{ms:.3}")));
    }
    row.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// `{1,3}` for the subset `{0, 2}`.
pub fn set_label(mask: usize) -> String {
    let items: Vec<String> = mask_to_set(mask).iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}
