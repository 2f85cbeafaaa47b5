//! JSON, CSV and aligned-text renderings. Every renderer ends its output with a newline.

use clap::ValueEnum;
use serde::Serialize;
use triplet_core::qseries::QSeries;
use triplet_core::rational::{format_rational, int};
use triplet_core::verify::CheckReport;

use crate::{Info, LambdaRow};

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",") + "\n";
    for row in rows {
        let fields: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
        out += &fields.join(",");
        out.push('\n');
    }
    out
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

fn vec_str(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(" "))
}

pub fn series(s: &QSeries, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(s).expect("serializable") + "\n",
        Format::Csv | Format::Text => {
            let rows: Vec<Vec<String>> = s
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| {
                    let e = s.base() + int(n as i64);
                    vec![
                        n.to_string(),
                        e.numer().to_string(),
                        e.denom().to_string(),
                        c.to_string(),
                    ]
                })
                .collect();
            let header = ["n", "exponent_num", "exponent_den", "coeff"];
            if let Format::Csv = format {
                csv(&header, &rows)
            } else {
                let rows: Vec<Vec<String>> = s
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(n, c)| {
                        vec![
                            n.to_string(),
                            format_rational(&(s.base() + int(n as i64))),
                            c.to_string(),
                        ]
                    })
                    .collect();
                table(&["n", "exponent", "coeff"], &rows)
            }
        }
    }
}

pub fn info(info: &Info, format: Format) -> String {
    if let Format::Json = format {
        return json(info);
    }
    let list = |v: &[String]| format!("({})", v.join(" "));
    let inv: Vec<String> = info.inverse_cartan.iter().map(|r| list(r)).collect();
    let l0: Vec<String> = info
        .lambda0
        .iter()
        .map(|e| format!("{}:{}", vec_str(&e.weight), e.class))
        .collect();
    let rows = vec![
        vec!["type".into(), info.cartan.clone()],
        vec!["rank".into(), info.rank.to_string()],
        vec!["coxeter_number".into(), info.coxeter_number.to_string()],
        vec!["dim_g".into(), info.dim_g.to_string()],
        vec!["weyl_order".into(), info.weyl_order.to_string()],
        vec!["degrees".into(), vec_str(&info.degrees)],
        vec!["det".into(), info.det.to_string()],
        vec!["rho".into(), list(&info.rho)],
        vec!["rho_norm_sq".into(), info.rho_norm_sq.clone()],
        vec!["theta_simple".into(), vec_str(&info.theta_simple)],
        vec!["theta".into(), list(&info.theta)],
        vec!["inverse_cartan".into(), inv.join(" ")],
        vec!["lambda0".into(), l0.join(" ")],
    ];
    match format {
        Format::Csv => csv(&["key", "value"], &rows),
        _ => table(&["key", "value"], &rows),
    }
}

pub fn lambda_rows(rows: &[LambdaRow], format: Format) -> String {
    if let Format::Json = format {
        return json(rows);
    }
    let header = [
        "lambda0",
        "sp",
        "delta",
        "narrow",
        "dual_lambda0",
        "dual_sp",
        "dual_module_lambda0",
        "dual_module_sp",
    ];
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                vec_str(&r.lambda0),
                vec_str(&r.sp),
                r.delta.clone(),
                r.narrow.to_string(),
                vec_str(&r.dual_param.lambda0),
                vec_str(&r.dual_param.sp),
                vec_str(&r.dual_module_param.lambda0),
                vec_str(&r.dual_module_param.sp),
            ]
        })
        .collect();
    match format {
        Format::Csv => csv(&header, &cells),
        _ => table(&header, &cells),
    }
}

pub fn reports(reports: &[CheckReport], format: Format) -> String {
    if let Format::Json = format {
        return json(reports);
    }
    let cells: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            let status = if r.report_only() {
                format!("{} (report only)", r.status)
            } else {
                r.status.to_string()
            };
            vec![
                r.check.clone(),
                status,
                r.cases.to_string(),
                r.counterexamples.len().to_string(),
                r.informational.len().to_string(),
                r.skipped.len().to_string(),
            ]
        })
        .collect();
    let header = [
        "check",
        "status",
        "cases",
        "counterexamples",
        "informational",
        "skipped",
    ];
    match format {
        Format::Csv => csv(&header, &cells),
        _ => {
            let mut out = table(&header, &cells);
            for r in reports {
                for c in r.counterexamples.iter().chain(&r.informational) {
                    out += &format!(
                        "{}: {}: computed {} expected {}\n",
                        r.check, c.input, c.computed, c.expected
                    );
                }
                for s in &r.skipped {
                    out += &format!("{}: skipped {s}\n", r.check);
                }
            }
            if let Some(r) = reports.first() {
                out += &format!("grid: {}\n", r.grid);
            }
            out
        }
    }
}
