//! Human and JSON renderings of a suite run.

use std::fmt::Write;

use serde::Serialize;
use skewverify_core::report::{LawResult, LawStatus};

use crate::suite::{SuiteId, SuiteRun};

#[derive(Serialize)]
struct JsonWitness<'a> {
    probes: &'a [String],
    input: &'a str,
    output: &'a str,
}

#[derive(Serialize)]
struct JsonLaw<'a> {
    id: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    suite: Option<&'static str>,
    status: LawStatus,
    instances: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<JsonWitness<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs: Option<String>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    suite: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    spec: Option<&'a str>,
    laws: Vec<JsonLaw<'a>>,
    probes: &'a [String],
    seed: u64,
    elapsed_ms: u128,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    notes: Vec<String>,
    exit_code: i32,
}

fn json_law(suite: Option<SuiteId>, l: &LawResult) -> JsonLaw<'_> {
    JsonLaw {
        id: &l.id,
        suite: suite.map(SuiteId::name),
        status: l.status,
        instances: l.instances,
        witness: l.witness.as_ref().map(|w| JsonWitness {
            probes: &w.probes,
            input: &w.input,
            output: &w.output,
        }),
        lhs: l.witness.as_ref().map(|w| w.lhs.to_string()),
        rhs: l.witness.as_ref().map(|w| w.rhs.to_string()),
    }
}

/// Notes are prefixed with their suite when several suites ran.
fn notes(run: &SuiteRun) -> Vec<String> {
    let multi = run.sections.len() > 1;
    run.sections
        .iter()
        .flat_map(|s| {
            s.notes
                .iter()
                .map(move |n| if multi { format!("{}: {n}", s.suite) } else { n.clone() })
        })
        .collect()
}

pub fn json(run: &SuiteRun) -> String {
    let tag = run.suite == SuiteId::All;
    let report = JsonReport {
        suite: run.suite.name(),
        spec: run.name.as_deref(),
        laws: run.laws().map(|(s, l)| json_law(tag.then_some(s), l)).collect(),
        probes: &run.probes,
        seed: run.seed,
        elapsed_ms: run.elapsed_ms,
        notes: notes(run),
        exit_code: run.exit_code,
    };
    let mut out = serde_json::to_string_pretty(&report).expect("report serializes");
    out.push('\n');
    out
}

pub fn human(run: &SuiteRun) -> String {
    let mut out = String::new();
    let name = run.name.as_deref().unwrap_or("spec");
    write!(
        out,
        "{name}: suite {}, probes {}, seed {}",
        run.suite,
        run.probes.join(" "),
        run.seed
    )
    .unwrap();
    if run.elapsed_ms > 0 {
        write!(out, ", {} ms", run.elapsed_ms).unwrap();
    }
    out.push('\n');
    for s in &run.sections {
        if run.sections.len() > 1 {
            writeln!(out, "\n[{}]", s.suite).unwrap();
        }
        write!(out, "{}", s.report).unwrap();
        for n in &s.notes {
            writeln!(out, "note: {n}").unwrap();
        }
    }
    let failing = run.failing();
    let verdict = match run.exit_code {
        0 => "pass".to_string(),
        _ if failing.is_empty() => "error".to_string(),
        _ => format!(
            "fail ({})",
            failing.iter().map(|(_, id)| *id).collect::<Vec<_>>().join(", ")
        ),
    };
    writeln!(out, "\nresult: {verdict}, exit {}", run.exit_code).unwrap();
    out
}
