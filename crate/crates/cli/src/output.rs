use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use latfield::QuadraticInteger;

pub const FORMAT_VERSION: u32 = 1;

/// What a command produced: the text rendering and the JSON payload.
pub struct Report {
    pub command: &'static str,
    pub inputs: Value,
    pub result: Value,
    pub text: String,
    /// Non-zero when the command ran but its checks failed.
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: &'static str, inputs: Value, result: Value, text: String) -> Self {
        Report {
            command,
            inputs,
            result,
            text,
            exit_code: 0,
        }
    }

    pub fn envelope(&self) -> Value {
        json!({
            "command": self.command,
            "format_version": FORMAT_VERSION,
            "inputs": self.inputs,
            "result": self.result,
        })
    }
}

/// Integers that fit in `i64` become JSON numbers, larger ones strings.
pub fn big(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

pub fn element(z: &QuadraticInteger) -> Value {
    json!({ "ring": z.ring().name(), "a": big(z.a()), "b": big(z.b()) })
}

/// Left-aligned columns separated by two spaces.
pub fn table(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut widths = vec![0; cols];
    for row in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |row: &[String]| {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        cells.join("  ").trim_end().to_string()
    };
    let mut out = vec![line(header)];
    out.extend(rows.iter().map(|r| line(r)));
    out.join("\n")
}
