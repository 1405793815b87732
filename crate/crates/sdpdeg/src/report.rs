//! Output shapes and rendering for the CLI: text for humans, JSON and CSV
//! for machines. Degrees are always serialized as decimal strings — they
//! outgrow native integer widths quickly.

use serde::{Deserialize, Serialize};

use crate::localization::{DegreeResult, ProblemTriple};
use num_bigint::BigInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChecksReport {
    pub specializations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    pub m: u64,
    pub n: u32,
    pub r: u32,
    pub k: u64,
    pub l: u64,
    pub degree: String,
    pub checks: ChecksReport,
}

impl DegreeReport {
    pub fn from_result(result: &DegreeResult) -> Self {
        let t = &result.triple;
        DegreeReport {
            m: t.m(),
            n: t.n(),
            r: t.r(),
            k: t.k(),
            l: t.l(),
            degree: result.value.to_string(),
            checks: ChecksReport {
                specializations: result.specializations_checked,
                oracle: result.oracle_checked.then_some(true),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub m: u64,
    pub r: u32,
    pub k: u64,
    pub l: u64,
    pub delta: String,
}

impl TableRow {
    pub fn new(triple: &ProblemTriple, value: &BigInt) -> Self {
        TableRow {
            m: triple.m(),
            r: triple.r(),
            k: triple.k(),
            l: triple.l(),
            delta: value.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub n: u32,
    pub rows: Vec<TableRow>,
}

pub fn render_degree(report: &DegreeReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            let mut out = format!(
                "delta({}, {}, {}) = {}\n  k = {}, l = {}\n  specializations checked: {}\n",
                report.m,
                report.n,
                report.r,
                report.degree,
                report.k,
                report.l,
                report.checks.specializations
            );
            if report.checks.oracle == Some(true) {
                out.push_str("  oracle: agrees\n");
            }
            out
        }
        OutputFormat::Json => {
            let mut s = serde_json::to_string(report).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Csv => format!(
            "m,r,k,l,delta\n{},{},{},{},{}\n",
            report.m, report.r, report.k, report.l, report.degree
        ),
    }
}

pub fn render_table(report: &TableReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            let headers = ["m", "r", "k", "l", "delta"];
            let cells: Vec<[String; 5]> = report
                .rows
                .iter()
                .map(|row| {
                    [
                        row.m.to_string(),
                        row.r.to_string(),
                        row.k.to_string(),
                        row.l.to_string(),
                        row.delta.clone(),
                    ]
                })
                .collect();
            let widths: Vec<usize> = headers
                .iter()
                .enumerate()
                .map(|(i, h)| {
                    cells
                        .iter()
                        .map(|row| row[i].len())
                        .chain([h.len()])
                        .max()
                        .unwrap()
                })
                .collect();
            let mut out = String::new();
            for (i, h) in headers.iter().enumerate() {
                if i > 0 {
                    out.push_str("  ");
                }
                out.push_str(&format!("{:>width$}", h, width = widths[i]));
            }
            out.push('\n');
            for row in &cells {
                for (i, cell) in row.iter().enumerate() {
                    if i > 0 {
                        out.push_str("  ");
                    }
                    out.push_str(&format!("{:>width$}", cell, width = widths[i]));
                }
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => {
            let mut s = serde_json::to_string(report).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut out = String::from("m,r,k,l,delta\n");
            for row in &report.rows {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    row.m, row.r, row.k, row.l, row.delta
                ));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> DegreeReport {
        DegreeReport {
            m: 3,
            n: 3,
            r: 1,
            k: 0,
            l: 2,
            degree: "4".into(),
            checks: ChecksReport {
                specializations: 1,
                oracle: None,
            },
        }
    }

    #[test]
    fn degree_json_shape() {
        let json = render_degree(&sample(), OutputFormat::Json);
        assert_eq!(
            json,
            "{\"m\":3,\"n\":3,\"r\":1,\"k\":0,\"l\":2,\"degree\":\"4\",\"checks\":{\"specializations\":1}}\n"
        );

        let mut with_oracle = sample();
        with_oracle.checks.oracle = Some(true);
        let json = render_degree(&with_oracle, OutputFormat::Json);
        assert!(json.contains("\"oracle\":true"));
    }

    #[test]
    fn degree_json_round_trips() {
        for report in [sample(), {
            let mut r = sample();
            r.checks.oracle = Some(true);
            r
        }] {
            let json = render_degree(&report, OutputFormat::Json);
            let parsed: DegreeReport = serde_json::from_str(json.trim_end()).unwrap();
            assert_eq!(parsed, report);
            assert_eq!(render_degree(&parsed, OutputFormat::Json), json);
        }
    }

    #[test]
    fn degree_text_and_csv() {
        let text = render_degree(&sample(), OutputFormat::Text);
        assert!(text.starts_with("delta(3, 3, 1) = 4\n"));
        assert!(!text.contains("oracle"));

        let csv = render_degree(&sample(), OutputFormat::Csv);
        assert_eq!(csv, "m,r,k,l,delta\n3,1,0,2,4\n");
    }

    #[test]
    fn table_renderings() {
        let table = TableReport {
            n: 1,
            rows: vec![TableRow {
                m: 0,
                r: 1,
                k: 0,
                l: 0,
                delta: "1".into(),
            }],
        };
        assert_eq!(
            render_table(&table, OutputFormat::Csv),
            "m,r,k,l,delta\n0,1,0,0,1\n"
        );
        let text = render_table(&table, OutputFormat::Text);
        assert_eq!(text, "m  r  k  l  delta\n0  1  0  0      1\n");
        let json = render_table(&table, OutputFormat::Json);
        let parsed: TableReport = serde_json::from_str(json.trim_end()).unwrap();
        assert_eq!(parsed, table);
    }
}
