//! Residual reports. Both renderings depend only on the report value, so
//! identical inputs give identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use alia_core::Residual;
use serde::Serialize;

/// Grid used per parameter by `certify`.
pub const GRID: [i64; 5] = [0, 1, 2, 3, 5];

/// Degree bound in each parameter that the grid certifies.
pub const DEGREE_BOUND: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failing {
    pub law: String,
    pub part: String,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub law: String,
    pub part: String,
    /// 1-based basis indices.
    pub index: Vec<usize>,
    pub value: String,
}

/// A law verdict with every nonzero residual coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub passed: bool,
    pub failing: Vec<Failing>,
    pub entries: Vec<ReportEntry>,
}

impl Outcome {
    pub fn from_residual(res: &Residual) -> Self {
        let mut failing: Vec<Failing> = Vec::new();
        for e in &res.entries {
            let (law, part) = (e.law.name(), e.part);
            match failing.iter_mut().find(|f| f.law == law && f.part == part) {
                Some(f) => f.count += 1,
                None => failing.push(Failing {
                    law: law.to_string(),
                    part: part.to_string(),
                    count: 1,
                }),
            }
        }
        Outcome {
            passed: res.passed(),
            failing,
            entries: res
                .entries
                .iter()
                .map(|e| ReportEntry {
                    law: e.law.name().to_string(),
                    part: e.part.to_string(),
                    index: e.index.iter().map(|i| i + 1).collect(),
                    value: e.value.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Point {
    pub bindings: BTreeMap<String, String>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certification {
    pub params: Vec<String>,
    pub grid: Vec<String>,
    pub degree_bound: usize,
    pub points: Vec<Point>,
    pub certified: bool,
    /// First grid point where the law fails.
    pub witness: Option<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub law: String,
    pub inputs: Vec<String>,
    pub bindings: BTreeMap<String, String>,
    pub overrides: BTreeMap<String, String>,
    pub rep: Option<String>,
    pub verdict: String,
    /// Residual of the checked point, or of the witness point.
    pub outcome: Outcome,
    pub certification: Option<Certification>,
}

fn join(m: &BTreeMap<String, String>) -> String {
    m.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.command, self.law);
        for path in &self.inputs {
            let _ = writeln!(out, "input     {path}");
        }
        if !self.bindings.is_empty() {
            let _ = writeln!(out, "set       {}", join(&self.bindings));
        }
        if !self.overrides.is_empty() {
            let _ = writeln!(out, "override  {}", join(&self.overrides));
        }
        if let Some(rep) = &self.rep {
            let _ = writeln!(out, "rep       {rep}");
        }
        if let Some(c) = &self.certification {
            let _ = writeln!(
                out,
                "grid      {} in {{{}}}, degree bound {}",
                c.params.join(", "),
                c.grid.join(","),
                c.degree_bound
            );
            for p in &c.points {
                let verdict = if p.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "point     {} {verdict}", join(&p.bindings));
            }
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "witness   {}", join(w));
            }
        }
        let _ = writeln!(out, "verdict   {}", self.verdict);
        for f in &self.outcome.failing {
            let _ = writeln!(out, "failing   {}/{}: {} nonzero", f.law, f.part, f.count);
        }
        for e in &self.outcome.entries {
            let idx: Vec<String> = e.index.iter().map(|i| i.to_string()).collect();
            let _ = writeln!(
                out,
                "residual  {}/{} ({}) = {}",
                e.law,
                e.part,
                idx.join(","),
                e.value
            );
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
