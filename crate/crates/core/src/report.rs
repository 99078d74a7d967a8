//! Command reports in two renderings: JSON for machines, aligned text for people.

use std::fmt::Write as _;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::groupring::RingElemP;
use crate::parse::format_ring_element;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// Field order is the key order of the JSON output.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub element: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_unit: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inverse: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inverse_support_size: Option<usize>,
    pub checks: Vec<Check>,
    /// Extra named values, printed in insertion order.
    #[serde(skip_serializing_if = "Vec::is_empty", serialize_with = "ordered_map")]
    pub values: Vec<(String, Value)>,
}

fn ordered_map<S: Serializer>(values: &[(String, Value)], s: S) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(values.len()))?;
    for (k, v) in values {
        map.serialize_entry(k, v)?;
    }
    map.end()
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            ..Report::default()
        }
    }

    pub fn set_element(&mut self, alpha: &RingElemP) {
        self.element = Some(format_ring_element(alpha));
        self.support_size = Some(alpha.support_size());
    }

    pub fn set_inverse(&mut self, inv: &RingElemP) {
        self.inverse = Some(format_ring_element(inv));
        self.inverse_support_size = Some(inv.support_size());
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn value(&mut self, key: &str, value: impl Into<Value>) {
        self.values.push((key.to_string(), value.into()));
    }

    /// A list value; the text rendering prints one line per item.
    pub fn list<T: ToString>(&mut self, key: &str, items: impl IntoIterator<Item = T>) {
        let items = items
            .into_iter()
            .map(|i| Value::String(i.to_string()))
            .collect();
        self.values.push((key.to_string(), Value::Array(items)));
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |key: &str, value: &dyn std::fmt::Display| {
            writeln!(out, "{key}: {value}").unwrap();
        };
        if let Some(e) = &self.element {
            line("element", e);
        }
        match (self.support_size, self.inverse_support_size) {
            (Some(s), Some(t)) => line("support sizes", &format!("{s}/{t}")),
            (Some(s), None) => line("support size", &s),
            _ => {}
        }
        if let Some(u) = self.is_unit {
            line("unit", &if u { "yes" } else { "no" });
        }
        if let Some(inv) = &self.inverse {
            line("inverse", inv);
        }
        for (k, v) in &self.values {
            match v {
                Value::Array(items) => items.iter().for_each(|i| line(k, &plain(i))),
                v => line(k, &plain(v)),
            }
        }
        for c in &self.checks {
            let mark = if c.passed { "ok" } else { "FAILED" };
            match &c.detail {
                Some(d) => writeln!(out, "[{mark}] {}: {d}", c.name).unwrap(),
                None => writeln!(out, "[{mark}] {}", c.name).unwrap(),
            }
        }
        out
    }
}
