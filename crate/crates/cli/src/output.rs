//! Rendering of command results as aligned tables, CSV, or JSON.
//!
//! The three formats carry the same data. JSON serializes every number as a
//! decimal string so consumers with 64-bit limits never overflow; CSV uses a
//! header row, LF line endings, and no trailing separator.

use quasicount::rational::Rational;
use quasicount::{QCReport, TValueBreakdown};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Csv,
    Json,
}

/// Renders a rational as "a" or "a/b".
pub fn rational_str(r: &Rational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn csv_line(fields: &[String]) -> String {
    fields.join(",")
}

/// Left-aligned table with a single space-padded layout.
pub fn render_table(header: &[&str], rows: &[Vec<String>], show_header: bool) -> String {
    let columns = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let mut push_row = |cells: &[String]| {
        let mut line = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            if i + 1 == columns {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{cell:<width$}", width = widths[i]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    if show_header {
        let header_cells: Vec<String> = header.iter().map(|h| h.to_string()).collect();
        push_row(&header_cells);
    }
    for row in rows {
        push_row(row);
    }
    out
}

fn opt_str(v: Option<u64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Which of the computed totals a command chose to expose.
#[derive(Debug, Clone, Copy)]
pub struct MethodView {
    pub show_closed: bool,
    pub show_oracle: bool,
}

fn breakdown_json(genus: u64, b: &TValueBreakdown) -> Value {
    let mut obj = Map::new();
    let periods: Vec<Value> = b
        .signature
        .periods()
        .iter()
        .map(|p| Value::String(p.to_string()))
        .collect();
    obj.insert("periods".into(), Value::Array(periods));
    obj.insert("genus".into(), Value::String(genus.to_string()));
    obj.insert("case".into(), Value::String(b.case_tag.as_str().into()));
    obj.insert("t_value".into(), Value::String(b.value.to_string()));
    if let Some(t1) = b.tau1_term {
        obj.insert("tau1".into(), Value::String(t1.to_string()));
    }
    if let Some(t2) = b.tau2_term {
        obj.insert("tau2".into(), Value::String(t2.to_string()));
    }
    obj.insert(
        "w_primes".into(),
        Value::Array(
            b.w_primes
                .iter()
                .map(|p| Value::String(p.to_string()))
                .collect(),
        ),
    );
    Value::Object(obj)
}

pub fn render_qc(report: &QCReport, view: MethodView, format: Format, quiet: bool) -> String {
    match format {
        Format::Table => {
            let rows: Vec<Vec<String>> = report
                .rows
                .iter()
                .map(|row| {
                    vec![
                        row.signature.to_string(),
                        row.genus.to_string(),
                        row.breakdown.case_tag.to_string(),
                        row.breakdown.value.to_string(),
                    ]
                })
                .collect();
            let mut out = render_table(&["signature", "genus", "case", "T"], &rows, !quiet);
            out.push_str(&format!("qc_sum = {}\n", report.qc_sum));
            if view.show_closed {
                match report.qc_closed {
                    Some(c) => out.push_str(&format!("qc_closed = {c}\n")),
                    None => out.push_str("qc_closed = n/a (summation is authoritative)\n"),
                }
            }
            if view.show_oracle {
                if let Some(o) = report.oracle_value {
                    out.push_str(&format!("oracle = {o}\n"));
                }
            }
            out.push_str(&format!("r_cn = {}\n", report.r_cyclic));
            if !quiet && (view.show_closed || view.show_oracle) {
                out.push_str(if view_agrees(report, view) {
                    "methods agree\n"
                } else {
                    "METHOD DISAGREEMENT\n"
                });
            }
            out
        }
        Format::Csv => {
            let header = [
                "n",
                "n1",
                "n2",
                "n3",
                "genus",
                "case",
                "t_value",
                "tau1",
                "tau2",
                "w_primes",
                "qc_sum",
                "qc_closed",
                "r_cn",
                "oracle",
            ];
            let mut lines = vec![header.join(",")];
            let totals = |fields: &mut Vec<String>| {
                fields.push(report.qc_sum.to_string());
                fields.push(if view.show_closed {
                    opt_str(report.qc_closed)
                } else {
                    String::new()
                });
                fields.push(report.r_cyclic.to_string());
                fields.push(if view.show_oracle {
                    opt_str(report.oracle_value)
                } else {
                    String::new()
                });
            };
            if report.rows.is_empty() {
                let mut fields = vec![report.n.to_string()];
                fields.extend(std::iter::repeat_with(String::new).take(9));
                totals(&mut fields);
                lines.push(csv_line(&fields));
            }
            for row in &report.rows {
                let [a, b, c] = row.signature.periods();
                let bd = &row.breakdown;
                let w = bd
                    .w_primes
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(";");
                let mut fields = vec![
                    report.n.to_string(),
                    a.to_string(),
                    b.to_string(),
                    c.to_string(),
                    row.genus.to_string(),
                    bd.case_tag.to_string(),
                    bd.value.to_string(),
                    bd.tau1_term.map(|t| t.to_string()).unwrap_or_default(),
                    bd.tau2_term.map(|t| t.to_string()).unwrap_or_default(),
                    w,
                ];
                totals(&mut fields);
                lines.push(csv_line(&fields));
            }
            lines.join("\n") + "\n"
        }
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("n".into(), Value::String(report.n.to_string()));
            obj.insert(
                "signatures".into(),
                Value::Array(
                    report
                        .rows
                        .iter()
                        .map(|row| breakdown_json(row.genus, &row.breakdown))
                        .collect(),
                ),
            );
            obj.insert("qc_sum".into(), Value::String(report.qc_sum.to_string()));
            if view.show_closed {
                if let Some(c) = report.qc_closed {
                    obj.insert("qc_closed".into(), Value::String(c.to_string()));
                }
            }
            obj.insert("r_cn".into(), Value::String(report.r_cyclic.to_string()));
            if view.show_oracle {
                if let Some(o) = report.oracle_value {
                    obj.insert("oracle".into(), Value::String(o.to_string()));
                }
            }
            serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable") + "\n"
        }
    }
}

/// Agreement of the totals the view exposes.
pub fn view_agrees(report: &QCReport, view: MethodView) -> bool {
    let closed_ok = !view.show_closed || report.qc_closed.is_none_or(|c| c == report.qc_sum);
    let oracle_ok = !view.show_oracle || report.oracle_value.is_none_or(|o| o == report.qc_sum);
    closed_ok && oracle_ok
}

pub struct RangeRow {
    pub n: u64,
    pub qc: u64,
    pub r_cn: u64,
    pub num_signatures: usize,
    pub min_genus: Option<u64>,
    pub max_genus: Option<u64>,
}

pub const RANGE_HEADER: [&str; 6] = [
    "n",
    "qc",
    "r_cn",
    "num_signatures",
    "min_genus",
    "max_genus",
];

pub fn render_range(rows: &[RangeRow], format: Format, quiet: bool) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.qc.to_string(),
                r.r_cn.to_string(),
                r.num_signatures.to_string(),
                opt_str(r.min_genus),
                opt_str(r.max_genus),
            ]
        })
        .collect();
    match format {
        Format::Table => render_table(&RANGE_HEADER, &cells, !quiet),
        Format::Csv => {
            let mut lines = vec![RANGE_HEADER.join(",")];
            lines.extend(cells.iter().map(|c| csv_line(c)));
            lines.join("\n") + "\n"
        }
        Format::Json => {
            let array: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut obj = Map::new();
                    obj.insert("n".into(), Value::String(r.n.to_string()));
                    obj.insert("qc".into(), Value::String(r.qc.to_string()));
                    obj.insert("r_cn".into(), Value::String(r.r_cn.to_string()));
                    obj.insert(
                        "num_signatures".into(),
                        Value::String(r.num_signatures.to_string()),
                    );
                    if let Some(g) = r.min_genus {
                        obj.insert("min_genus".into(), Value::String(g.to_string()));
                    }
                    if let Some(g) = r.max_genus {
                        obj.insert("max_genus".into(), Value::String(g.to_string()));
                    }
                    Value::Object(obj)
                })
                .collect();
            serde_json::to_string_pretty(&Value::Array(array)).expect("serializable") + "\n"
        }
    }
}

pub fn render_signatures(
    n: u64,
    rows: &[(quasicount::Signature, u64)],
    format: Format,
    quiet: bool,
) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|(s, g)| {
            let [a, b, c] = s.periods();
            vec![
                n.to_string(),
                a.to_string(),
                b.to_string(),
                c.to_string(),
                g.to_string(),
            ]
        })
        .collect();
    match format {
        Format::Table => {
            let display: Vec<Vec<String>> = rows
                .iter()
                .map(|(s, g)| vec![s.to_string(), g.to_string()])
                .collect();
            render_table(&["signature", "genus"], &display, !quiet)
        }
        Format::Csv => {
            let mut lines = vec!["n,n1,n2,n3,genus".to_string()];
            lines.extend(cells.iter().map(|c| csv_line(c)));
            lines.join("\n") + "\n"
        }
        Format::Json => {
            let sigs: Vec<Value> = rows
                .iter()
                .map(|(s, g)| {
                    json!({
                        "periods": s.periods().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                        "genus": g.to_string(),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&json!({
                "n": n.to_string(),
                "signatures": sigs,
            }))
            .expect("serializable")
                + "\n"
        }
    }
}

pub fn render_tvalue(
    n: u64,
    genus: u64,
    b: &TValueBreakdown,
    format: Format,
    quiet: bool,
) -> String {
    let w = b
        .w_primes
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(";");
    match format {
        Format::Table => {
            let mut out = String::new();
            if !quiet {
                out.push_str(&format!("signature {} for n = {n}\n", b.signature));
            }
            out.push_str(&format!("case = {}\n", b.case_tag));
            out.push_str(&format!("genus = {genus}\n"));
            if let Some(t1) = b.tau1_term {
                out.push_str(&format!("tau1 = {t1}\n"));
            }
            if let Some(t2) = b.tau2_term {
                out.push_str(&format!("tau2 = {t2}\n"));
            }
            out.push_str(&format!("phi = {}\n", b.phi_term));
            out.push_str(&format!(
                "w_primes = [{}]\n",
                b.w_primes
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
            out.push_str(&format!("product = {}\n", rational_str(&b.product_term)));
            out.push_str(&format!("T = {}\n", b.value));
            out
        }
        Format::Csv => {
            let [a, bb, c] = b.signature.periods();
            let header = "n,n1,n2,n3,genus,case,t_value,tau1,tau2,phi,product,w_primes";
            let fields = vec![
                n.to_string(),
                a.to_string(),
                bb.to_string(),
                c.to_string(),
                genus.to_string(),
                b.case_tag.to_string(),
                b.value.to_string(),
                b.tau1_term.map(|t| t.to_string()).unwrap_or_default(),
                b.tau2_term.map(|t| t.to_string()).unwrap_or_default(),
                b.phi_term.to_string(),
                rational_str(&b.product_term),
                w,
            ];
            format!("{header}\n{}\n", csv_line(&fields))
        }
        Format::Json => {
            let mut obj = Map::new();
            obj.insert("n".into(), Value::String(n.to_string()));
            if let Value::Object(inner) = breakdown_json(genus, b) {
                obj.extend(inner);
            }
            obj.insert("phi".into(), Value::String(b.phi_term.to_string()));
            obj.insert(
                "product".into(),
                Value::String(rational_str(&b.product_term)),
            );
            serde_json::to_string_pretty(&Value::Object(obj)).expect("serializable") + "\n"
        }
    }
}

pub fn render_dessins(n: u64, r_cn: u64, format: Format, quiet: bool) -> String {
    match format {
        Format::Table => {
            if quiet {
                format!("{r_cn}\n")
            } else {
                format!("r(C_{n}) = {r_cn}\n")
            }
        }
        Format::Csv => format!("n,r_cn\n{n},{r_cn}\n"),
        Format::Json => {
            serde_json::to_string_pretty(&json!({
                "n": n.to_string(),
                "r_cn": r_cn.to_string(),
            }))
            .expect("serializable")
                + "\n"
        }
    }
}

pub fn render_lloyd(p: u64, coefficients: &[Rational], format: Format, quiet: bool) -> String {
    match format {
        Format::Table => {
            let rows: Vec<Vec<String>> = coefficients
                .iter()
                .enumerate()
                .map(|(k, c)| vec![k.to_string(), rational_str(c)])
                .collect();
            render_table(&["k", "coefficient"], &rows, !quiet)
        }
        Format::Csv => {
            let mut lines = vec!["k,coefficient".to_string()];
            lines.extend(
                coefficients
                    .iter()
                    .enumerate()
                    .map(|(k, c)| format!("{k},{}", rational_str(c))),
            );
            lines.join("\n") + "\n"
        }
        Format::Json => {
            serde_json::to_string_pretty(&json!({
                "p": p.to_string(),
                "order": (coefficients.len() - 1).to_string(),
                "coefficients": coefficients.iter().map(rational_str).collect::<Vec<_>>(),
            }))
            .expect("serializable")
                + "\n"
        }
    }
}
