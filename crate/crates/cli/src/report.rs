//! Output documents. Rationals are always `"p/q"` strings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use plucker_core::symfunc::CheckReport;
use plucker_core::GradedElement;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub command: String,
    pub base: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bundle: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rank: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<usize>,
    pub variant: String,
    pub seed: u64,
    pub trials: usize,
}

/// One term `coeff * monomial` of a base class.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub monomial: String,
    pub coeff: String,
}

pub fn terms_of(g: &GradedElement) -> Vec<Term> {
    g.sorted_terms()
        .into_iter()
        .map(|(_, e, q)| Term {
            monomial: g.monomial_name(e),
            coeff: q.to_string(),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Component {
    pub degree: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<Vec<u32>>,
    /// Keyed by method name.
    pub values: BTreeMap<String, Vec<Term>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub failure: Option<String>,
}

impl From<&CheckReport> for Check {
    fn from(r: &CheckReport) -> Self {
        Check {
            name: r.name.clone(),
            cases: r.cases,
            passed: r.passed(),
            failure: r.failure.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub params: Params,
    pub method: String,
    pub degree_components: Vec<Component>,
    pub value: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub checks: Vec<Check>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(headers: &[String], rows: &[Vec<String>]) -> String {
    let width = |s: &String| s.chars().count();
    let mut widths: Vec<usize> = headers.iter().map(width).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(width(cell));
        }
    }
    let mut out = String::new();
    for row in std::iter::once(headers).chain(rows.iter().map(|r| r.as_slice())) {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - width(c))))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_alignment() {
        let t = table(
            &["a".into(), "bb".into()],
            &[vec!["ccc".into(), "d".into()], vec!["θ".into(), "e".into()]],
        );
        assert_eq!(t, "a    bb\nccc  d\nθ    e\n");
    }
}
