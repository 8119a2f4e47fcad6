//! Plain text rendering of output documents.

use std::fmt::Write;

use qlambda::classify::{CuntzRealization, SearchResult};
use qlambda::invariants::InvariantReport;
use qlambda::polyring::RootSide;

use crate::document::{Body, CompareBody, OutputDocument, TableBody};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render(doc: &OutputDocument) -> String {
    let mut out = String::new();
    match &doc.body {
        Body::Report(r) => report(&mut out, r),
        Body::Compare(c) => compare(&mut out, c),
        Body::Cuntz(c) => cuntz(&mut out, c),
        Body::Search(s) => search(&mut out, s),
        Body::Table(t) => table(&mut out, t),
        Body::Failure(f) => writeln!(out, "error [{}]: {}", f.code, f.message).unwrap(),
    }
    out
}

fn report(out: &mut String, r: &InvariantReport) {
    let side = match r.root.side {
        RootSide::BelowOne => "below 1",
        RootSide::AboveOne => "above 1",
    };
    writeln!(out, "f = {} (degree {})", r.poly, r.degree).unwrap();
    writeln!(out, "root in ({}, {}), {side}", r.root.lo, r.root.hi).unwrap();
    if r.roots.len() > 1 {
        writeln!(out, "admissible roots: {}", r.roots.len()).unwrap();
    }
    writeln!(out, "{}", r.ktriple).unwrap();
    writeln!(out, "unit generates K0: {}", yes_no(r.unit_generates)).unwrap();
    writeln!(out, "Cuntz: {}", r.cuntz).unwrap();
    writeln!(out, "blocks I - Λ^k φ:").unwrap();
    for b in &r.blocks {
        writeln!(
            out,
            "  k = {}: size {}, kernel {}, cokernel {}",
            b.k, b.size, b.kernel, b.cokernel
        )
        .unwrap();
    }
    writeln!(out, "homology of G: {}", r.homology_g).unwrap();
    writeln!(out, "homology with coefficients: {}", r.homology_coeff).unwrap();
    let passed = r.closed_form.iter().filter(|c| c.passed).count();
    writeln!(out, "closed forms: {passed}/{} pass", r.closed_form.len()).unwrap();
    for c in &r.closed_form {
        write!(
            out,
            "  {}: {} (expected {})",
            c.name, c.computed, c.expected
        )
        .unwrap();
        if let Some(note) = &c.note {
            write!(out, "; {note}").unwrap();
        }
        out.push('\n');
    }
    writeln!(
        out,
        "consistency checks: {}",
        if r.consistency.all_hold() {
            "all hold"
        } else {
            "FAILED"
        }
    )
    .unwrap();
}

fn compare(out: &mut String, c: &CompareBody) {
    writeln!(out, "f = {}: {}", c.f, c.f_ktriple).unwrap();
    writeln!(out, "g = {}: {}", c.g, c.g_ktriple).unwrap();
    let v = &c.verdict;
    writeln!(
        out,
        "same unital K-theory: {}; Cartan invariants equal: {}",
        yes_no(v.same_unital_k),
        yes_no(v.cartan_invariants_equal)
    )
    .unwrap();
    writeln!(out, "same stable K-theory: {}", yes_no(v.same_stable_k)).unwrap();
    for note in &v.notes {
        writeln!(out, "  {note}").unwrap();
    }
}

fn cuntz(out: &mut String, c: &CuntzRealization) {
    writeln!(out, "{} realizes {}", c.poly, c.report.cuntz).unwrap();
    out.push('\n');
    report(out, &c.report);
}

fn search(out: &mut String, s: &SearchResult) {
    for p in &s.pairs {
        writeln!(
            out,
            "{} ~ {}: same unital K-theory: {}; Cartan invariants equal: {}",
            p.f,
            p.g,
            yes_no(p.verdict.same_unital_k),
            yes_no(p.verdict.cartan_invariants_equal)
        )
        .unwrap();
    }
    for f in &s.undecided {
        writeln!(out, "undecided: {f}").unwrap();
    }
    let refused: Vec<String> = s.refused.iter().map(|(k, n)| format!("{k} {n}")).collect();
    writeln!(
        out,
        "degree <= {}, |a_i| <= {}: examined {}, valid {}, pairs {}, undecided {}",
        s.max_degree,
        s.coeff_bound,
        s.examined,
        s.valid,
        s.pairs.len(),
        s.undecided.len()
    )
    .unwrap();
    if !refused.is_empty() {
        writeln!(out, "refused: {}", refused.join(", ")).unwrap();
    }
}

fn table(out: &mut String, t: &TableBody) {
    let label = |values: &[i64]| -> String {
        t.parameter_names
            .iter()
            .zip(values)
            .map(|(n, v)| format!("{n} = {v}"))
            .collect::<Vec<_>>()
            .join(", ")
    };
    for row in &t.rows {
        writeln!(out, "{}: f = {}", label(&row.parameters), row.poly).unwrap();
        writeln!(out, "  computed: {}", row.computed.ktriple).unwrap();
        writeln!(
            out,
            "  formula:  K0 = {}, unit = {}, K1 = {}",
            row.formula.k0.group(),
            qlambda::abgroups::render_mark(row.formula.k0.mark()),
            row.formula.k1
        )
        .unwrap();
        writeln!(out, "  homology: {}", row.computed.homology_coeff).unwrap();
        writeln!(out, "  match: {}", yes_no(row.matches)).unwrap();
    }
    for s in &t.skipped {
        writeln!(out, "{}: skipped ({})", label(&s.parameters), s.reason).unwrap();
    }
    writeln!(
        out,
        "{}: {} rows, {} skipped, all match: {}",
        t.regime,
        t.rows.len(),
        t.skipped.len(),
        yes_no(t.all_match)
    )
    .unwrap();
}
