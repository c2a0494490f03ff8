//! Report types shared by every command, plus the text renderer.

use std::fmt;

use adjsq::rational::parse_q;
use adjsq::Q;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational that serializes as the string `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rat(pub Q);

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s)
            .map(Rat)
            .ok_or_else(|| serde::de::Error::custom(format!("not a rational: {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimRow {
    pub quantity: String,
    pub value: u64,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstituentRow {
    pub tag: String,
    /// Dynkin labels of the highest weight, when it is identified.
    pub labels: Option<Vec<i64>>,
    pub dim: u64,
    pub multiplicity: u64,
    pub casimir: Option<Rat>,
    pub split_eigenvalue: Option<Rat>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRow {
    pub labels: Vec<i64>,
    pub dim: u64,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableResult {
    pub part: String,
    pub parent_dim: u64,
    pub rows: Vec<ConstituentRow>,
    pub oracle: Option<Vec<OracleRow>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Results {
    Dims { rows: Vec<DimRow> },
    Table(TableResult),
    Verify { suites: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn eq(name: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check { name: name.into(), pass: expected == actual, expected, actual }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub algebra: Option<String>,
    pub results: Results,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("$ {}\n", self.command);
        if let Some(a) = &self.algebra {
            out += &format!("algebra: {a}\n");
        }
        match &self.results {
            Results::Dims { rows } => {
                let body = rows.iter().map(|r| vec![r.quantity.clone(), r.value.to_string(), r.source.clone()]);
                out += &table(&["quantity", "dim", "source"], body);
            }
            Results::Table(t) => {
                out += &format!("{} part, dimension {}\n", t.part, t.parent_dim);
                let opt = |x: &Option<Rat>| x.as_ref().map_or("?".into(), |r| adjsq::rational::fmt_q(&r.0));
                let body = t.rows.iter().map(|r| {
                    vec![
                        r.tag.clone(),
                        r.labels.as_ref().map_or("?".into(), |l| format!("{l:?}")),
                        r.dim.to_string(),
                        r.multiplicity.to_string(),
                        opt(&r.casimir),
                        opt(&r.split_eigenvalue),
                    ]
                });
                out += &table(&["tag", "labels", "dim", "mult", "casimir", "split eig"], body);
                for r in &t.rows {
                    if let Some(n) = &r.note {
                        out += &format!("note ({}): {n}\n", r.tag);
                    }
                }
                if let Some(o) = &t.oracle {
                    out += "oracle:\n";
                    let body = o.iter().map(|r| vec![format!("{:?}", r.labels), r.dim.to_string(), r.multiplicity.to_string()]);
                    out += &table(&["labels", "dim", "mult"], body);
                }
            }
            Results::Verify { suites } => out += &format!("suites: {}\n", suites.join(", ")),
        }
        if !self.checks.is_empty() {
            let body = self.checks.iter().map(|c| {
                vec![if c.pass { "ok" } else { "FAIL" }.into(), c.name.clone(), c.expected.clone(), c.actual.clone()]
            });
            out += &table(&["", "check", "expected", "actual"], body);
            let failed = self.checks.iter().filter(|c| !c.pass).count();
            out += &format!("{} checks, {failed} failed\n", self.checks.len());
        }
        for w in &self.warnings {
            out += &format!("warning: {w}\n");
        }
        out += &format!("elapsed: {} ms\n", self.elapsed_ms);
        out
    }
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> String {
    let mut all: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
    all.extend(rows);
    let mut width = vec![0; header.len()];
    for r in &all {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for r in &all {
        let line: Vec<String> = r.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        out += line.join("  ").trim_end();
        out.push('\n');
    }
    out
}
