use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::context::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub graph6: String,
    pub params: BTreeMap<String, Value>,
}

impl Instance {
    pub fn new(graph6: impl Into<String>) -> Instance {
        Instance {
            graph6: graph6.into(),
            params: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Instance {
        self.params.insert(key.to_string(), value.into());
        self
    }

    /// Sort key: graph6 first, then the parameters as compact JSON.
    pub fn key(&self) -> (String, String) {
        (
            self.graph6.clone(),
            serde_json::to_string(&self.params).expect("params serialize"),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub claim: String,
    pub instance: Instance,
    pub expected: Value,
    pub computed: Value,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub seed: u64,
    pub limits: Limits,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub meta: Meta,
    pub records: Vec<Record>,
}

impl Report {
    pub fn new(meta: Meta, mut records: Vec<Record>) -> Report {
        records.sort_by(|a, b| {
            (&a.claim, a.instance.key()).cmp(&(&b.claim, b.instance.key()))
        });
        Report { meta, records }
    }

    /// Pretty JSON with object keys sorted, newline terminated.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut out = serde_json::to_string_pretty(&value).expect("value serializes");
        out.push('\n');
        out
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.records.iter().filter(|r| r.verdict == verdict).count()
    }

    pub fn to_markdown(&self) -> String {
        render_markdown(self)
    }
}

/// Markdown summary derived only from the report contents.
pub fn render_markdown(report: &Report) -> String {
    let mut per_claim: BTreeMap<&str, [usize; 3]> = BTreeMap::new();
    for r in &report.records {
        let slot = per_claim.entry(&r.claim).or_default();
        slot[r.verdict as usize] += 1;
    }
    let mut md = String::new();
    let m = &report.meta;
    writeln!(md, "# Claim verification report\n").unwrap();
    writeln!(
        md,
        "version {}, seed {}, max_n {}, max_k {}, budget {}, samples {}\n",
        m.version, m.seed, m.limits.max_n, m.limits.max_k, m.limits.budget, m.limits.samples
    )
    .unwrap();
    writeln!(md, "| claim | PASS | FAIL | SKIP |").unwrap();
    writeln!(md, "|---|---:|---:|---:|").unwrap();
    for (claim, [p, f, s]) in &per_claim {
        writeln!(md, "| {claim} | {p} | {f} | {s} |").unwrap();
    }
    let notable: Vec<&Record> = report
        .records
        .iter()
        .filter(|r| r.verdict != Verdict::Pass)
        .collect();
    if !notable.is_empty() {
        writeln!(md, "\n## FAIL and SKIP records\n").unwrap();
        writeln!(md, "| claim | graph6 | params | expected | computed | verdict | reason |").unwrap();
        writeln!(md, "|---|---|---|---|---|---|---|").unwrap();
        for r in notable {
            writeln!(
                md,
                "| {} | `{}` | `{}` | {} | {} | {:?} | {} |",
                r.claim,
                r.instance.graph6.replace('|', "\\|").replace('`', "'"),
                serde_json::to_string(&r.instance.params).unwrap(),
                r.expected,
                r.computed,
                r.verdict,
                r.reason.as_deref().unwrap_or("").replace('|', "\\|")
            )
            .unwrap();
        }
    }
    md
}
