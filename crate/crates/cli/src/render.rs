use serde_json::Value;

use crate::args::Format;

/// JSON keys come out sorted because `serde_json::Map` is ordered.
pub fn render(report: &Value, format: Format) -> String {
    match format {
        Format::Json => report.to_string(),
        Format::Text => text(report),
    }
}

fn text(report: &Value) -> String {
    match report {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            map.iter().map(|(k, v)| format!("{k:width$}  {}", scalar(v))).collect::<Vec<_>>().join("\n")
        }
        other => scalar(other),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}
