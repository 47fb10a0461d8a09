//! Text, JSON and CSV renderings.

use std::io::{self, Write};

use clap::ValueEnum;
use gridpart::{CountReport, TruncatedSeries};
use serde::Serialize;

use crate::series_catalog::SeriesId;
use crate::verify::VerifyReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

pub const CSV_HEADER: &str = "rows,cols,B,H,V,R,S,L,C";

/// One report with big integers as decimal strings.
#[derive(Debug, Serialize)]
pub struct CountRow {
    pub rows: usize,
    pub cols: usize,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "H")]
    pub h: String,
    #[serde(rename = "V")]
    pub v: String,
    #[serde(rename = "R")]
    pub r: String,
    #[serde(rename = "S")]
    pub s: String,
    #[serde(rename = "L")]
    pub l: String,
    #[serde(rename = "C")]
    pub c: String,
}

impl From<&CountReport> for CountRow {
    fn from(r: &CountReport) -> Self {
        Self {
            rows: r.shape.rows(),
            cols: r.shape.cols(),
            b: r.b.to_string(),
            h: r.h.to_string(),
            v: r.v.to_string(),
            r: r.r.to_string(),
            s: r.s.to_string(),
            l: r.l.to_string(),
            c: r.c.to_string(),
        }
    }
}

impl CountRow {
    fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.rows, self.cols, self.b, self.h, self.v, self.r, self.s, self.l, self.c
        )
    }
}

pub fn count(out: &mut dyn Write, report: &CountReport, format: Format) -> io::Result<()> {
    let row = CountRow::from(report);
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&row)?),
        Format::Csv => writeln!(out, "{}", row.csv()),
        Format::Text => {
            writeln!(
                out,
                "{} grid ({} cells)",
                report.shape,
                report.shape.cells()
            )?;
            let lines = [
                ("B", "all partitions", &report.b),
                ("H", "fixed by the row reflection", &report.h),
                ("V", "fixed by the column reflection", &report.v),
                ("R", "fixed by the half turn", &report.r),
                ("S", "fixed by every symmetry", &report.s),
                ("L", "distinct up to symmetry", &report.l),
                ("C", "fixed by no symmetry", &report.c),
            ];
            for (key, label, value) in lines {
                writeln!(out, "  {key}  {label:<32} {value}")?;
            }
            Ok(())
        }
    }
}

pub fn table(out: &mut dyn Write, reports: &[CountReport], format: Format) -> io::Result<()> {
    let rows: Vec<CountRow> = reports.iter().map(CountRow::from).collect();
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows)?),
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in &rows {
                writeln!(out, "{}", r.csv())?;
            }
            Ok(())
        }
        Format::Text => {
            let cells = |r: &CountRow| {
                [
                    format!("{}x{}", r.rows, r.cols),
                    r.b.clone(),
                    r.h.clone(),
                    r.v.clone(),
                    r.r.clone(),
                    r.s.clone(),
                    r.l.clone(),
                    r.c.clone(),
                ]
            };
            let header = ["shape", "B", "H", "V", "R", "S", "L", "C"].map(String::from);
            let body: Vec<[String; 8]> = rows.iter().map(cells).collect();
            let mut widths = header.clone().map(|h| h.len());
            for row in &body {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.len());
                }
            }
            for row in std::iter::once(&header).chain(&body) {
                let line: Vec<String> = row
                    .iter()
                    .zip(widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                writeln!(out, "{}", line.join("  "))?;
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct FindingRow {
    status: String,
    quantity: String,
    rows: usize,
    cols: usize,
    formula: String,
    oracle: Option<String>,
    paper: Option<String>,
}

#[derive(Serialize)]
struct TripwireRow {
    rows: usize,
    cols: usize,
    paper_sum: String,
    remainder: String,
}

#[derive(Serialize)]
struct VerifyJson {
    findings: Vec<FindingRow>,
    tripwires: Vec<TripwireRow>,
}

pub fn verify(out: &mut dyn Write, report: &VerifyReport, format: Format) -> io::Result<()> {
    let dash =
        |v: &Option<num_bigint::BigInt>| v.as_ref().map_or("-".to_string(), |x| x.to_string());
    match format {
        Format::Text => {
            for f in &report.findings {
                writeln!(
                    out,
                    "{} op={} shape={} formula={} oracle={} paper={}",
                    f.status,
                    f.quantity,
                    f.shape,
                    f.formula,
                    dash(&f.oracle),
                    dash(&f.paper)
                )?;
            }
            for t in &report.tripwires {
                writeln!(
                    out,
                    "TRIPWIRE op=L shape={} paper_sum={} remainder={}",
                    t.shape, t.sum, t.remainder
                )?;
            }
            Ok(())
        }
        Format::Csv => {
            writeln!(out, "status,quantity,rows,cols,formula,oracle,paper")?;
            for f in &report.findings {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    f.status,
                    f.quantity,
                    f.shape.rows(),
                    f.shape.cols(),
                    f.formula,
                    dash(&f.oracle),
                    dash(&f.paper)
                )?;
            }
            Ok(())
        }
        Format::Json => {
            let doc = VerifyJson {
                findings: report
                    .findings
                    .iter()
                    .map(|f| FindingRow {
                        status: f.status.to_string(),
                        quantity: f.quantity.to_string(),
                        rows: f.shape.rows(),
                        cols: f.shape.cols(),
                        formula: f.formula.to_string(),
                        oracle: f.oracle.as_ref().map(ToString::to_string),
                        paper: f.paper.as_ref().map(ToString::to_string),
                    })
                    .collect(),
                tripwires: report
                    .tripwires
                    .iter()
                    .map(|t| TripwireRow {
                        rows: t.shape.rows(),
                        cols: t.shape.cols(),
                        paper_sum: t.sum.to_string(),
                        remainder: t.remainder.to_string(),
                    })
                    .collect(),
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)
        }
    }
}

#[derive(Serialize)]
struct SeriesJson<'a> {
    id: &'a str,
    description: &'a str,
    vars: &'a [String],
    orders: &'a [usize],
    coefficients: Vec<SeriesTerm>,
}

#[derive(Serialize)]
struct SeriesTerm {
    exponents: Vec<usize>,
    value: String,
}

/// Factorial-scaled coefficients. In text form the last variable runs
/// along each line and the other exponents label the lines.
pub fn series(
    out: &mut dyn Write,
    id: SeriesId,
    series: &TruncatedSeries,
    format: Format,
) -> Result<(), Box<dyn std::error::Error>> {
    let grid = series.egf_grid()?;
    let space = series.space();
    match format {
        Format::Json => {
            let doc = SeriesJson {
                id: id.name(),
                description: id.description(),
                vars: space.vars(),
                orders: space.orders(),
                coefficients: grid
                    .into_iter()
                    .map(|(e, v)| SeriesTerm {
                        exponents: e,
                        value: v.to_string(),
                    })
                    .collect(),
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        Format::Csv => {
            writeln!(out, "{},value", space.vars().join(","))?;
            for (e, v) in grid {
                let e: Vec<String> = e.iter().map(ToString::to_string).collect();
                writeln!(out, "{},{v}", e.join(","))?;
            }
        }
        Format::Text => {
            writeln!(out, "# {}: {}", id.name(), id.description())?;
            let vars = space.vars();
            let inner = *space.orders().last().unwrap() + 1;
            for line in grid.chunks(inner) {
                let values: Vec<String> = line.iter().map(|(_, v)| v.to_string()).collect();
                let outer = &line[0].0[..vars.len() - 1];
                if outer.is_empty() {
                    writeln!(out, "{}", values.join(" "))?;
                } else {
                    let label: Vec<String> = vars
                        .iter()
                        .zip(outer)
                        .map(|(v, e)| format!("{v}^{e}"))
                        .collect();
                    writeln!(out, "{}: {}", label.join(" "), values.join(" "))?;
                }
            }
        }
    }
    Ok(())
}
