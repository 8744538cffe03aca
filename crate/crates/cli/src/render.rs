//! Human-readable output. JSON output bypasses this module entirely.

use std::fmt::Write;

use pareto_core::analysis::{ExampleReport, SearchRecord, TheoremReport};
use pareto_core::axioms::{AxiomMatrix, AxiomReport, WitnessRecord};
use pareto_core::{Correspondence, DomainIndex};

const PASS: &str = "✓";
const FAIL: &str = "✗";

fn mark(passed: bool) -> &'static str {
    if passed {
        PASS
    } else {
        FAIL
    }
}

fn witness_line(w: &WitnessRecord) -> String {
    let mut parts = vec![format!("at {}", w.profiles.join(" -> "))];
    if !w.individuals.is_empty() {
        let ids: Vec<String> = w.individuals.iter().map(|i| format!("#{i}")).collect();
        parts.push(format!("individuals {}", ids.join(", ")));
    }
    if !w.alternatives.is_empty() {
        parts.push(format!("alternatives {}", w.alternatives.join(", ")));
    }
    parts.push(format!("observed {}", w.observed.join(" -> ")));
    parts.push(format!("expected {}", w.expected));
    parts.join("; ")
}

pub fn check(g: &Correspondence, d: &DomainIndex, reports: &[AxiomReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} over m = {}, n = {} ({} profiles)",
        g.name(),
        d.alternatives(),
        d.individuals(),
        d.total()
    );
    let width = reports
        .iter()
        .map(|r| r.axiom.name().len())
        .max()
        .unwrap_or(0);
    for r in reports {
        let _ = write!(out, "  {} {:width$}", mark(r.passed()), r.axiom.name());
        match &r.witness {
            None => {
                let _ = writeln!(out);
            }
            Some(w) => {
                let _ = writeln!(out, "  {}", witness_line(&w.record(g)));
            }
        }
    }
    out
}

pub fn matrix(m: &AxiomMatrix, d: &DomainIndex) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "m = {}, n = {} ({} profiles)",
        d.alternatives(),
        d.individuals(),
        d.total()
    );
    let rule_width = m
        .rows
        .iter()
        .map(|(g, _)| g.name().len())
        .max()
        .unwrap_or(4)
        .max(4);
    let _ = write!(out, "{:rule_width$}", "rule");
    for a in &m.axioms {
        let _ = write!(out, "  {}", a.name());
    }
    let _ = writeln!(out);
    let mut notes = Vec::new();
    for (g, reports) in &m.rows {
        let mut row = format!("{:rule_width$}", g.name());
        for (a, r) in m.axioms.iter().zip(reports) {
            let cell = match &r.witness {
                None => PASS.to_string(),
                Some(w) => {
                    notes.push(format!(
                        "{} {}: {}",
                        g.name(),
                        a.name(),
                        witness_line(&w.record(g))
                    ));
                    format!("{FAIL}{}", notes.len())
                }
            };
            let width = a.name().len();
            let _ = write!(row, "  {cell:width$}");
        }
        let _ = writeln!(out, "{}", row.trim_end());
    }
    if !notes.is_empty() {
        let _ = writeln!(out);
    }
    for (k, note) in notes.iter().enumerate() {
        let _ = writeln!(out, "[{}] {note}", k + 1);
    }
    out
}

pub fn example(report: &ExampleReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "example {}", report.example);
    for c in &report.claims {
        let _ = writeln!(out, "  {} {}  ({})", mark(c.holds), c.claim, c.detail);
    }
    let held = report.claims.iter().filter(|c| c.holds).count();
    let _ = writeln!(out, "{held} of {} claims hold", report.claims.len());
    out
}

pub fn theorem(report: &TheoremReport, g: &Correspondence) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "theorem {} for {} at m = {}, n = {}: {}",
        report.theorem,
        g.name(),
        g.alternatives(),
        g.individuals(),
        report.verdict.name()
    );
    for r in &report.reports {
        let _ = write!(out, "  {} {}", mark(r.passed()), r.axiom.name());
        match &r.witness {
            None => {
                let _ = writeln!(out);
            }
            Some(w) => {
                let _ = writeln!(out, "  {}", witness_line(&w.record(g)));
            }
        }
    }
    let _ = writeln!(out, "  differs from G_P at {} profiles", report.differences);
    for (u, s) in &report.deviations {
        let _ = writeln!(
            out,
            "    {} -> {}",
            g.format_profile(u),
            g.universe().format_set(*s)
        );
    }
    out
}

pub fn search(record: &SearchRecord) -> String {
    let mut out = String::new();
    let axioms: Vec<&str> = record.axioms.iter().map(|a| a.name()).collect();
    let _ = writeln!(
        out,
        "{} search at m = {}, n = {} for {}",
        record.mode,
        record.m,
        record.n,
        axioms.join(", ")
    );
    for (k, dev) in record.deviations.iter().enumerate() {
        let _ = writeln!(out, "deviation {} ({} profiles)", k + 1, dev.profiles.len());
        for (p, s) in dev.profiles.iter().zip(&dev.choice_sets) {
            let _ = writeln!(out, "  {p} -> {{{}}}", s.join(","));
        }
    }
    let scope = if record.exhausted {
        "candidate space exhausted"
    } else {
        "stopped at budget"
    };
    let _ = writeln!(
        out,
        "{} deviations from {} candidates; {scope}",
        record.deviations.len(),
        record.candidates
    );
    if record.deviations.is_empty() {
        let _ = writeln!(out, "no counterexample found at this scale");
    }
    out
}
