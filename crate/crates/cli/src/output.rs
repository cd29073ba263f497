use std::collections::BTreeSet;

use k3hilb::decomp::{row_order, DecompositionTable};
use serde::Serialize;

use crate::commands::HodgeRow;
use crate::error::CliResult;

pub fn json<T: Serialize>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Row label in the style `(2,1,0,...)`: at least three entries.
pub fn weight_label(parts: &[i64]) -> String {
    let mut shown = parts.to_vec();
    if shown.len() < 3 {
        shown.resize(3, 0);
    }
    let inner: Vec<String> = shown.iter().map(i64::to_string).collect();
    format!("({},...)", inner.join(","))
}

pub fn column_label(t: &DecompositionTable) -> String {
    format!("H^{{{},{}}}", t.degree, t.n)
}

fn rows(tables: &[DecompositionTable]) -> Vec<Vec<i64>> {
    let set: BTreeSet<Vec<i64>> = tables
        .iter()
        .flat_map(|t| t.trimmed_entries().into_keys())
        .collect();
    let mut rows: Vec<Vec<i64>> = set.into_iter().collect();
    rows.sort_by(|a, b| row_order(a, b));
    rows
}

fn csv_string(records: Vec<Vec<String>>) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.write_record(&r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn table_csv(tables: &[DecompositionTable]) -> CliResult<String> {
    let mut records = Vec::new();
    let mut header = vec!["weight".to_string()];
    header.extend(tables.iter().map(column_label));
    records.push(header);
    for row in rows(tables) {
        let mut rec = vec![weight_label(&row)];
        rec.extend(tables.iter().map(|t| t.mult(&row).to_string()));
        records.push(rec);
    }
    csv_string(records)
}

pub fn table_text(tables: &[DecompositionTable]) -> String {
    let rows = rows(tables);
    let labels: Vec<String> = rows.iter().map(|r| weight_label(r)).collect();
    let first = labels.iter().map(String::len).max().unwrap_or(0).max("weight".len());
    let heads: Vec<String> = tables.iter().map(column_label).collect();
    let mut out = format!("{:<first$}", "weight");
    for h in &heads {
        out.push_str(&format!("  {h}"));
    }
    out.push('\n');
    for (row, label) in rows.iter().zip(&labels) {
        out.push_str(&format!("{label:<first$}"));
        for (t, h) in tables.iter().zip(&heads) {
            let m = t.mult(row);
            let cell = if m == 0 { String::new() } else { m.to_string() };
            out.push_str(&format!("  {cell:>w$}", w = h.len()));
        }
        out.push('\n');
    }
    out
}

pub fn hodge_csv(rows: &[HodgeRow]) -> CliResult<String> {
    let mut records = vec![vec!["n".to_string(), "degree".into(), "count".into()]];
    for r in rows {
        records.push(vec![r.n.to_string(), r.degree.to_string(), r.count.to_string()]);
    }
    csv_string(records)
}

pub fn betti_csv(degrees: &[usize], betti: &[String]) -> CliResult<String> {
    let mut records = vec![vec!["degree".to_string(), "betti".into()]];
    for (d, b) in degrees.iter().zip(betti) {
        records.push(vec![d.to_string(), b.clone()]);
    }
    csv_string(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(weight_label(&[]), "(0,0,0,...)");
        assert_eq!(weight_label(&[2, 1]), "(2,1,0,...)");
        assert_eq!(weight_label(&[1, 1, 1, 1]), "(1,1,1,1,...)");
    }
}
