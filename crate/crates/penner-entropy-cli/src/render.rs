//! Plain-text rendering of command results. Everything is assembled into
//! a `String` so output order is fixed and testable.

use std::fmt::Write as _;

use crate::report::{
    CheckJson, ComplexJson, EntropyJson, MatrixJson, PathsJson, VerifyJson,
};

fn pad(s: &str, width: usize) -> String {
    format!("{s:<width$}")
}

pub fn render_check(check: &CheckJson) -> String {
    let mut out = String::new();
    let word: Vec<String> = check
        .word_applied_first
        .iter()
        .map(|l| format!("{}{}", l.vertex, l.sign))
        .collect();
    let _ = writeln!(out, "word (applied first): [{}]", word.join(", "));
    let _ = writeln!(
        out,
        "penner: {} (polarity {})",
        if check.penner.is_penner { "yes" } else { "no" },
        check.penner.polarity
    );
    for v in &check.penner.violations {
        let _ = writeln!(out, "  violation at letter {}: {}", v.index, v.reason);
    }
    let _ = writeln!(
        out,
        "covers all vertices: {}",
        if check.penner.covers_all_vertices { "yes" } else { "no" }
    );
    let _ = writeln!(out, "V+: {{{}}}", check.bipartition_plus.join(", "));
    let _ = writeln!(out, "V-: {{{}}}", check.bipartition_minus.join(", "));
    let _ = writeln!(out, "n:  {}", check.n);
    out
}

pub fn render_complex(complex: &ComplexJson) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "L_{{m,v}} for v = {}, m = {}: {} terms",
        complex.source, complex.power, complex.term_count
    );
    let shift_width = complex
        .terms
        .iter()
        .map(|t| t.shift.len())
        .max()
        .unwrap_or(5)
        .max("shift".len());
    let vertex_width = complex
        .terms
        .iter()
        .map(|t| t.vertex.len())
        .max()
        .unwrap_or(6)
        .max("vertex".len());
    let _ = writeln!(
        out,
        "{}  {}  path",
        pad("vertex", vertex_width),
        pad("shift", shift_width)
    );
    for term in &complex.terms {
        let _ = writeln!(
            out,
            "{}  {}  {}",
            pad(&term.vertex, vertex_width),
            pad(&term.shift, shift_width),
            term.path
        );
    }
    out
}

/// One line per path, nothing else, so the output is the path list itself.
pub fn render_paths(paths: &PathsJson) -> String {
    let mut out = String::new();
    for p in &paths.paths {
        let _ = writeln!(out, "{p}");
    }
    out
}

pub fn render_matrix(matrix: &MatrixJson) -> String {
    let mut out = String::new();
    let mut header = format!("matrix kind = {}", matrix.kind);
    if let Some(n) = matrix.n {
        let _ = write!(header, ", n = {n}");
    }
    if let Some(t) = &matrix.t {
        let _ = write!(header, ", t = {t}");
    }
    let _ = write!(header, ", power = {}", matrix.power);
    let _ = writeln!(out, "{header}");
    let widths: Vec<usize> = (0..matrix.vertices.len())
        .map(|j| {
            matrix
                .rows
                .iter()
                .map(|row| row[j].len())
                .chain([matrix.vertices[j].len()])
                .max()
                .unwrap_or(1)
        })
        .collect();
    let row_label_width = matrix.vertices.iter().map(|v| v.len()).max().unwrap_or(1);
    let mut header_row = pad("", row_label_width).to_string();
    for (j, v) in matrix.vertices.iter().enumerate() {
        let _ = write!(header_row, "  {}", pad(v, widths[j]));
    }
    let _ = writeln!(out, "{}", header_row.trim_end());
    for (i, row) in matrix.rows.iter().enumerate() {
        let mut line = pad(&matrix.vertices[i], row_label_width);
        for (j, entry) in row.iter().enumerate() {
            let _ = write!(line, "  {}", pad(entry, widths[j]));
        }
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}

pub fn render_entropy(report: &EntropyJson) -> String {
    let mut out = String::new();
    let word: Vec<String> = report
        .word_applied_first
        .iter()
        .map(|l| format!("{}{}", l.vertex, l.sign))
        .collect();
    let _ = writeln!(out, "word (applied first): [{}]", word.join(", "));
    let _ = writeln!(
        out,
        "penner: {} (polarity {})",
        if report.penner.is_penner { "yes" } else { "no" },
        report.penner.polarity
    );
    let _ = writeln!(
        out,
        "exact entropy (log radius): [{}, {}]",
        report.exact_entropy.lo, report.exact_entropy.hi
    );
    let _ = writeln!(
        out,
        "unsigned radius ({}): [{}, {}]",
        report.radius_method, report.unsigned_radius.lo, report.unsigned_radius.hi
    );
    if let Some(signed) = &report.signed_odd {
        let _ = writeln!(
            out,
            "signed radius at odd n = {}: [{}, {}]",
            signed.n, signed.radius.lo, signed.radius.hi
        );
    }
    if let Some(signed) = &report.signed_even {
        let _ = writeln!(
            out,
            "signed radius at even n = {}: [{}, {}]",
            signed.n, signed.radius.lo, signed.radius.hi
        );
    }
    if !report.empirical.is_empty() {
        let _ = writeln!(out, "empirical (1/m) log total count:");
        for entry in &report.empirical {
            let _ = writeln!(out, "  m = {:>3}: {}", entry.m, entry.value);
        }
    }
    for entry in &report.t_weighted {
        let _ = writeln!(
            out,
            "t = {} weighted log radius [{}]: [{}, {}]",
            entry.t, entry.label, entry.log_radius.lo, entry.log_radius.hi
        );
    }
    for note in &report.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

pub fn render_verify(verify: &VerifyJson) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "verification with seed {} over {} cases",
        verify.seed, verify.cases
    );
    for check in &verify.checks {
        let status = if check.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{status} [{} cases] {}", check.cases, check.name);
        for failure in check.failures.iter().take(5) {
            let _ = writeln!(out, "     {failure}");
        }
        if check.failures.len() > 5 {
            let _ = writeln!(out, "     ... and {} more", check.failures.len() - 5);
        }
    }
    let _ = writeln!(
        out,
        "overall: {}",
        if verify.all_passed { "PASS" } else { "FAIL" }
    );
    out
}
