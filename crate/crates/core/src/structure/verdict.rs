use std::collections::BTreeMap;

use crate::lang::Word;

/// A witness attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Word(Word),
    Text(String),
}

/// Uniform result of a decision procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub answer: bool,
    pub witnesses: BTreeMap<String, Witness>,
    pub reason: String,
    /// Step of the algorithm at which a check failed, when it did.
    pub failed_step: Option<u32>,
}

impl Verdict {
    pub fn yes(reason: impl Into<String>) -> Self {
        Verdict {
            answer: true,
            witnesses: BTreeMap::new(),
            reason: reason.into(),
            failed_step: None,
        }
    }

    pub fn no(reason: impl Into<String>) -> Self {
        Verdict {
            answer: false,
            witnesses: BTreeMap::new(),
            reason: reason.into(),
            failed_step: None,
        }
    }

    /// A negative verdict from a failed check at `step`.
    pub fn failed(step: u32, reason: impl Into<String>) -> Self {
        Verdict {
            failed_step: Some(step),
            ..Verdict::no(format!("step {step}: {}", reason.into()))
        }
    }

    pub fn with_word(mut self, label: impl Into<String>, w: Word) -> Self {
        self.witnesses.insert(label.into(), Witness::Word(w));
        self
    }

    pub fn with_text(mut self, label: impl Into<String>, t: impl Into<String>) -> Self {
        self.witnesses.insert(label.into(), Witness::Text(t.into()));
        self
    }

    pub fn word(&self, label: &str) -> Option<&Word> {
        match self.witnesses.get(label) {
            Some(Witness::Word(w)) => Some(w),
            _ => None,
        }
    }
}
