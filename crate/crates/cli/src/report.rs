//! JSON report rendering, deterministic: rows sorted by name then by
//! the rendered parameter map.

use qdilog::identities::IdentityReport;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    pub name: String,
    pub params: BTreeMap<String, [f64; 2]>,
    pub lhs: [f64; 2],
    pub rhs: [f64; 2],
    pub abs_err: f64,
    pub rel_err: f64,
    pub pass: bool,
}

impl From<&IdentityReport> for ReportRow {
    fn from(r: &IdentityReport) -> Self {
        let mut params = BTreeMap::new();
        for (k, v) in &r.params {
            params.insert((*k).to_string(), [v.re, v.im]);
        }
        ReportRow {
            name: r.name.clone(),
            params,
            lhs: [r.lhs.re, r.lhs.im],
            rhs: [r.rhs.re, r.rhs.im],
            abs_err: r.abs_err,
            rel_err: r.rel_err,
            pass: r.pass,
        }
    }
}

pub fn render_sorted(reports: &[IdentityReport]) -> String {
    let mut rows: Vec<ReportRow> = reports.iter().map(ReportRow::from).collect();
    rows.sort_by(|a, b| {
        a.name
            .cmp(&b.name)
            .then_with(|| format!("{:?}", a.params).cmp(&format!("{:?}", b.params)))
    });
    serde_json::to_string_pretty(&rows).expect("report serialisation cannot fail")
}
