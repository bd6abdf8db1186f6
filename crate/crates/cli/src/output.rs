//! Rendering of command results as JSON, CSV or plain text.

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
            s.push('\n');
            s
        }
        Format::Csv => csv(value),
        Format::Text => text(value),
    }
}

/// Flatten nested objects and arrays into dotted keys, in document order.
pub fn flatten(value: &Value) -> Vec<(String, String)> {
    let mut out = Vec::new();
    walk(value, String::new(), &mut out);
    out
}

fn walk(value: &Value, prefix: String, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                walk(v, key(k), out);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (i, v) in items.iter().enumerate() {
                walk(v, key(&i.to_string()), out);
            }
        }
        Value::Array(_) => out.push((prefix, String::new())),
        Value::String(s) => out.push((prefix, s.clone())),
        Value::Null => out.push((prefix, String::new())),
        other => out.push((prefix, other.to_string())),
    }
}

/// Rows of a result: the elements of a top-level array, or the value itself.
fn rows(value: &Value) -> Vec<Vec<(String, String)>> {
    match value {
        Value::Array(items) => items.iter().map(flatten).collect(),
        other => vec![flatten(other)],
    }
}

fn csv(value: &Value) -> String {
    let rows = rows(value);
    let mut header: Vec<String> = Vec::new();
    for row in &rows {
        for (k, _) in row {
            if !header.contains(k) {
                header.push(k.clone());
            }
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    if !header.is_empty() {
        let names: Vec<&str> = header.iter().map(|h| if h.is_empty() { "value" } else { h.as_str() }).collect();
        w.write_record(&names).expect("in-memory write");
    }
    for row in &rows {
        let record: Vec<&str> = header
            .iter()
            .map(|h| row.iter().find(|(k, _)| k == h).map(|(_, v)| v.as_str()).unwrap_or(""))
            .collect();
        w.write_record(&record).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8 output")
}

fn text(value: &Value) -> String {
    let mut out = String::new();
    for (i, row) in rows(value).iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for (k, v) in row {
            if k.is_empty() {
                out.push_str(&format!("{v}\n"));
            } else {
                out.push_str(&format!("{k}: {v}\n"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn csv_of_character() {
        let v = json!([{ "weight": [1, 0], "coeff": 1 }, { "weight": [-1, 1], "coeff": 2 }]);
        assert_eq!(render(&v, Format::Csv), "weight.0,weight.1,coeff\n1,0,1\n-1,1,2\n");
    }

    #[test]
    fn text_of_object() {
        let v = json!({ "dimension": 1 });
        assert_eq!(render(&v, Format::Text), "dimension: 1\n");
        assert_eq!(render(&v, Format::Json), "{\n  \"dimension\": 1\n}\n");
    }
}
