//! Claim-by-claim verification reports.
//!
//! A claim pairs a computed value with an optional expected value. Claims
//! with an expected value pass or fail by exact JSON equality; claims
//! without one are informational. Conclusions that rest on a theorem and are
//! not recomputed are marked `implied`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::field::FieldSpec;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Implied,
    Informational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Claim {
    pub claim: String,
    pub anchor: String,
    pub expected: Option<Value>,
    pub computed: Value,
    /// Degree bound or truncation window the value was certified on.
    pub bound: Option<String>,
    pub status: Status,
}

impl Claim {
    fn settle(&mut self) {
        if self.status == Status::Implied {
            return;
        }
        self.status = match &self.expected {
            None => Status::Informational,
            Some(e) if *e == self.computed => Status::Pass,
            Some(_) => Status::Fail,
        };
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub implied: usize,
    pub informational: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub id: String,
    pub title: String,
    pub field: FieldSpec,
    pub claims: Vec<Claim>,
    pub summary: Summary,
    pub ok: bool,
}

impl Report {
    pub fn new(id: impl Into<String>, title: impl Into<String>, field: FieldSpec) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            id: id.into(),
            title: title.into(),
            field,
            claims: Vec::new(),
            summary: Summary::default(),
            ok: true,
        }
    }

    fn push(&mut self, mut c: Claim) {
        c.settle();
        match self.claims.iter_mut().find(|x| x.claim == c.claim) {
            Some(slot) => *slot = c,
            None => self.claims.push(c),
        }
        self.refresh();
    }

    fn refresh(&mut self) {
        let mut s = Summary::default();
        for c in &self.claims {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Implied => s.implied += 1,
                Status::Informational => s.informational += 1,
            }
        }
        self.ok = s.fail == 0;
        self.summary = s;
    }

    /// A claim with an expected value.
    pub fn check(&mut self, claim: &str, anchor: &str, expected: impl Serialize, computed: impl Serialize) {
        self.check_bounded(claim, anchor, expected, computed, None);
    }

    pub fn check_bounded(
        &mut self,
        claim: &str,
        anchor: &str,
        expected: impl Serialize,
        computed: impl Serialize,
        bound: Option<String>,
    ) {
        self.push(Claim {
            claim: claim.into(),
            anchor: anchor.into(),
            expected: Some(to_value(expected)),
            computed: to_value(computed),
            bound,
            status: Status::Informational,
        });
    }

    /// A computed value with no built-in expectation.
    pub fn record(&mut self, claim: &str, anchor: &str, computed: impl Serialize) {
        self.record_bounded(claim, anchor, computed, None);
    }

    pub fn record_bounded(&mut self, claim: &str, anchor: &str, computed: impl Serialize, bound: Option<String>) {
        self.push(Claim {
            claim: claim.into(),
            anchor: anchor.into(),
            expected: None,
            computed: to_value(computed),
            bound,
            status: Status::Informational,
        });
    }

    /// A conclusion that follows from verified hypotheses but is not recomputed.
    pub fn implied(&mut self, claim: &str, anchor: &str, note: &str) {
        self.push(Claim {
            claim: claim.into(),
            anchor: anchor.into(),
            expected: None,
            computed: Value::String(note.into()),
            bound: None,
            status: Status::Implied,
        });
    }

    /// Sets the expected value (and anchor) of an existing claim. A claim that
    /// was never computed is added as a failure.
    pub fn expect(&mut self, claim: &str, anchor: &str, expected: Value) {
        match self.claims.iter_mut().find(|c| c.claim == claim) {
            Some(c) => {
                c.expected = Some(expected);
                c.anchor = anchor.into();
                c.settle();
            }
            None => self.claims.push(Claim {
                claim: claim.into(),
                anchor: anchor.into(),
                expected: Some(expected),
                computed: Value::String("not computed".into()),
                bound: None,
                status: Status::Fail,
            }),
        }
        self.refresh();
    }

    pub fn claim(&self, claim: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.claim == claim)
    }

    /// Claims from `other`, each id prefixed with `prefix.`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.claims {
            c.claim = format!("{prefix}.{}", c.claim);
            self.push(c);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_table(&self) -> String {
        let mut rows: Vec<[String; 5]> = vec![[
            "claim".into(),
            "status".into(),
            "expected".into(),
            "computed".into(),
            "bound".into(),
        ]];
        for c in &self.claims {
            rows.push([
                c.claim.clone(),
                status_word(c.status).into(),
                c.expected.as_ref().map_or_else(|| "-".into(), compact),
                compact(&c.computed),
                c.bound.clone().unwrap_or_else(|| "-".into()),
            ]);
        }
        let mut width = [0usize; 5];
        for r in &rows {
            for (w, cell) in width.iter_mut().zip(r) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let _ = writeln!(out, "{} [{}] ({})", self.id, self.field, self.title);
        for r in &rows {
            let line: Vec<String> = r
                .iter()
                .zip(width)
                .map(|(cell, w)| format!("{cell}{}", " ".repeat(w - cell.chars().count())))
                .collect();
            let _ = writeln!(out, "  {}", line.join("  ").trim_end());
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "  {} pass, {} fail, {} implied, {} informational",
            s.pass, s.fail, s.implied, s.informational
        );
        out
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Implied => "implied",
        Status::Informational => "info",
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// The value of a computation that may be refused: the value itself, or the
/// error message as a string.
pub fn outcome<T: Serialize>(r: crate::error::Result<T>) -> Value {
    match r {
        Ok(v) => to_value(v),
        Err(e) => Value::String(e.to_string()),
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("claim values serialize")
}
