//! Text and LaTeX layouts of diamonds and reports.

use std::fmt::Write;

use crate::hodge::{BettiVector, HodgeDiamond};
use crate::og6::{ChernReport, PipelineTrace};

/// Classic diamond layout: one row per total degree, `h^{n,0}` on the left
/// of its row. Zero entries inside the diamond are shown.
pub fn diamond_text(d: &HodgeDiamond) -> String {
    let n = d.complex_dimension().unwrap_or_else(|| d.entries().map(|((p, q), _)| p.max(q)).max().unwrap_or(0));
    let digits = d.entries().map(|(_, v)| v.to_string().len()).max().unwrap_or(1);
    // Neighbours in a row are two half-columns apart.
    let half = (digits + 2) / 2;
    let mut out = String::new();
    for k in 0..=2 * n {
        let mut line = String::new();
        for p in (k.saturating_sub(n)..=k.min(n)).rev() {
            let q = k - p;
            let end = (n + q - p + 1) as usize * half;
            let cell = d.get(p, q).to_string();
            let pad = end - line.len() - cell.len();
            line.push_str(&" ".repeat(pad));
            line.push_str(&cell);
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

pub fn betti_text(b: &BettiVector) -> String {
    let numbers: Vec<String> = b.as_slice().iter().map(u64::to_string).collect();
    format!("Betti numbers: {}\n", numbers.join(" "))
}

pub fn chern_text(c: &ChernReport) -> String {
    format!(
        "chi^0 = {}, chi^1 = {}, chi^2 = {}\nc2^3 = {}\nc2 c4 = {}\nc6 = {}\n",
        c.chi0, c.chi1, c.chi2, c.c2_cubed, c.c2_c4, c.c6
    )
}

pub fn trace_text(trace: &PipelineTrace) -> String {
    let mut out = String::new();
    for (i, step) in trace.steps.iter().enumerate() {
        let _ = writeln!(out, "step {} [{}]", i + 1, step.stage.as_str());
        if !step.corrections.is_empty() {
            let cells: Vec<String> = step.corrections.iter().map(|(p, q, delta)| format!("({p},{q}){delta:+}")).collect();
            let _ = writeln!(out, "  corrections: {}", cells.join(" "));
        }
        let max_weight = step.output.entries().map(|((p, q), _)| p + q).max().unwrap_or(0);
        for w in (0..=max_weight).step_by(2) {
            let row: Vec<String> = (0..=w).rev().map(|p| step.output.get(p, w - p).to_string()).collect();
            let _ = writeln!(out, "  weight {w:>2}: {}", row.join(" "));
        }
    }
    out
}

/// LaTeX `array` with one row per total degree and zero entries omitted.
///
/// When every entry has even total degree and the dimension is even the
/// empty odd rows and the interleaved empty columns are dropped.
pub fn diamond_latex(d: &HodgeDiamond) -> String {
    let n = d.complex_dimension().unwrap_or_else(|| d.entries().map(|((p, q), _)| p.max(q)).max().unwrap_or(0));
    let compress = n.is_multiple_of(2) && d.entries().all(|((p, q), _)| (p + q) % 2 == 0);
    let (columns, step) = if compress { (n as usize + 1, 2) } else { (2 * n as usize + 1, 1) };
    let mut out = String::new();
    let _ = writeln!(out, "\\[\n\\begin{{array}}{{{}}}", "c".repeat(columns));
    for k in (0..=2 * n).step_by(step) {
        let mut row = vec![String::new(); columns];
        for p in k.saturating_sub(n)..=k.min(n) {
            let q = k - p;
            let value = d.get(p, q);
            if value != 0 {
                row[(n + q - p) as usize / step] = format!("H^{{{p},{q}}}={value}");
            }
        }
        if row.iter().all(String::is_empty) {
            continue;
        }
        let _ = writeln!(out, "  {} \\\\", row.join(" & "));
    }
    out.push_str("\\end{array}\n\\]\n");
    out
}

pub fn betti_latex(b: &BettiVector) -> String {
    let cells: Vec<String> = b
        .as_slice()
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(k, v)| format!("b_{{{k}}}={v}"))
        .collect();
    format!("\\[\n\\begin{{array}}{{{}}}\n  {} \\\\\n\\end{{array}}\n\\]\n", "c".repeat(cells.len()), cells.join(" & "))
}
