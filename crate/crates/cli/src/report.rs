use std::io::Write;
use std::time::Instant;

use serde_json::{json, Map, Value};
use whsg::{SymbolTable, Verdict, Witness};

/// The JSON report printed by every run. Words are arrays of symbol names.
pub struct Report {
    pub answer: &'static str,
    pub witnesses: Map<String, Value>,
    pub reason: String,
}

impl Report {
    pub fn new(answer: &'static str, reason: impl Into<String>) -> Self {
        Report { answer, witnesses: Map::new(), reason: reason.into() }
    }

    pub fn boolean(b: bool, reason: &str) -> Self {
        Report::new(if b { "true" } else { "false" }, reason)
    }

    pub fn verdict(symbols: &SymbolTable, v: &Verdict) -> Self {
        let mut r = Report::new(if v.answer { "yes" } else { "no" }, v.reason.clone());
        for (label, w) in &v.witnesses {
            let value = match w {
                Witness::Word(w) => json!(symbols.render(w)),
                Witness::Text(t) => json!(t),
            };
            r.witness(label, value);
        }
        r
    }

    /// Report of a run that did not get to the procedure.
    pub fn error(reason: &str) -> Self {
        Report::new("error", reason)
    }

    pub fn witness(&mut self, label: &str, value: Value) {
        self.witnesses.insert(label.to_string(), value);
    }

    pub fn word(&mut self, symbols: &SymbolTable, label: &str, w: &[whsg::Symbol]) {
        self.witness(label, json!(symbols.render(w)));
    }

    pub fn print(self, start: Instant) {
        let out = json!({
            "answer": self.answer,
            "witnesses": self.witnesses,
            "reason": self.reason,
            "elapsed_ms": start.elapsed().as_millis() as u64,
        });
        // a closed pipe is the reader's choice, not a failure
        let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(&out).expect("report serializes"));
    }
}
