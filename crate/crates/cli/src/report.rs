//! CSV reports for bounds, step data and the summary table.

use std::fmt::Write as _;

use dartboard_core::bounds::{BoundsRecord, StepSeries, TableRow};

pub const BOUNDS_HEADER: &str = "n,r,lower,upper,lower_witness,upper_witness";
pub const STEP_HEADER: &str = "r,c_lower,c_upper";
pub const TABLE_HEADER: &str = "row,interval,statement,n,r,lower,upper,lower_witness,upper_witness";

/// Quotes a field when it contains a comma or a quote.
fn field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn provenance(out: &mut String, lines: &[String]) {
    for line in lines {
        let _ = writeln!(out, "# {line}");
    }
}

pub fn bounds_csv(records: &[BoundsRecord], header: &[String]) -> String {
    let mut out = String::new();
    provenance(&mut out, header);
    out.push_str(BOUNDS_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.n,
            r.r,
            r.lower,
            r.upper,
            field(&r.lower_witness),
            field(&r.upper_witness)
        );
    }
    out
}

pub fn step_csv(series: &StepSeries, header: &[String]) -> String {
    let mut out = String::new();
    provenance(&mut out, header);
    out.push_str(STEP_HEADER);
    out.push('\n');
    for p in &series.points {
        let _ = writeln!(out, "{},{},{}", p.r, p.c_lower, p.c_upper);
    }
    out
}

pub fn table_csv(rows: &[TableRow], header: &[String]) -> String {
    let mut out = String::new();
    provenance(&mut out, header);
    out.push_str(TABLE_HEADER);
    out.push('\n');
    for row in rows {
        let r = &row.record;
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            row.label,
            field(row.interval),
            field(row.statement),
            r.n,
            r.r,
            r.lower,
            r.upper,
            field(&r.lower_witness),
            field(&r.upper_witness)
        );
    }
    out
}
