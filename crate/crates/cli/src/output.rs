use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Json,
    Tsv,
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        Value::Bool(b) => b.to_string(),
        other => other.to_string(),
    }
}

/// TSV with a header row from the first record's keys; nested values are
/// written as compact JSON.
fn tsv(rows: &[Value]) -> String {
    let Some(Value::Object(first)) = rows.first() else {
        return String::new();
    };
    let keys: Vec<&String> = first.keys().collect();
    let mut out = keys.iter().map(|k| k.as_str()).collect::<Vec<_>>().join("\t");
    out.push('\n');
    for row in rows {
        let line: Vec<String> = keys.iter().map(|k| row.get(k.as_str()).map_or(String::new(), cell)).collect();
        out.push_str(&line.join("\t"));
        out.push('\n');
    }
    out
}

/// Renders one record (`many == false`) or a list of records.
pub fn render<T: Serialize>(rows: &[T], many: bool, format: TableFormat) -> String {
    let values: Vec<Value> = rows
        .iter()
        .map(|r| serde_json::to_value(r).expect("records serialize"))
        .collect();
    match format {
        TableFormat::Json if many => format!("{}\n", Value::Array(values)),
        TableFormat::Json => format!("{}\n", values.first().cloned().unwrap_or(Value::Null)),
        TableFormat::Tsv => tsv(&values),
    }
}

pub fn emit(bytes: &[u8], out: Option<&Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, bytes),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()
        }
    }
}
