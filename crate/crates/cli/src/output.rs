use std::io::Write;

use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

/// One result. Machine mode prints it as a single JSON object; human mode
/// as `key: value` lines.
#[derive(Clone, Debug)]
pub struct Record {
    fields: Map<String, Value>,
}

impl Record {
    pub fn new(command: &str) -> Self {
        let mut fields = Map::new();
        fields.insert("schema_version".into(), Value::from(SCHEMA_VERSION));
        fields.insert("command".into(), Value::from(command));
        Record { fields }
    }

    pub fn put(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.insert(key.into(), value.into());
        self
    }

    /// Exact numbers that may not fit a JSON integer go out as strings.
    pub fn exact(self, key: &str, value: impl ToString) -> Self {
        self.put(key, value.to_string())
    }

    pub fn list<T: ToString>(self, key: &str, items: impl IntoIterator<Item = T>) -> Self {
        let v: Vec<Value> = items.into_iter().map(|x| Value::from(x.to_string())).collect();
        self.put(key, v)
    }

    pub fn write(&self, machine: bool, out: &mut impl Write) -> std::io::Result<()> {
        if machine {
            return writeln!(out, "{}", Value::Object(self.fields.clone()));
        }
        for (k, v) in &self.fields {
            if k == "schema_version" || k == "command" {
                continue;
            }
            match v {
                Value::Array(items) if items.iter().all(|i| i.is_string()) && !items.is_empty() => {
                    for i in items {
                        writeln!(out, "{k}: {}", i.as_str().unwrap_or_default())?;
                    }
                }
                _ => writeln!(out, "{k}: {}", human(v))?,
            }
        }
        Ok(())
    }
}

fn human(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.is_empty() => "none".into(),
        Value::Array(items) => items.iter().map(human).collect::<Vec<_>>().join(","),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes() {
        let r = Record::new("ample").put("ample", true).exact("threshold", 5).list("eq", ["x0", "x1"]);
        let mut m = Vec::new();
        r.write(true, &mut m).unwrap();
        assert_eq!(
            String::from_utf8(m).unwrap(),
            "{\"schema_version\":1,\"command\":\"ample\",\"ample\":true,\"threshold\":\"5\",\"eq\":[\"x0\",\"x1\"]}\n"
        );
        let mut h = Vec::new();
        r.write(false, &mut h).unwrap();
        assert_eq!(String::from_utf8(h).unwrap(), "ample: true\nthreshold: 5\neq: x0\neq: x1\n");
    }
}
