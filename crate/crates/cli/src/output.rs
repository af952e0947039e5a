use std::fmt::Write as _;

use clap::ValueEnum;
use hyperspectra::spectra::SpectrumReport;
use hyperspectra::{Hypergraph, VerifyReport};
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// A command result: the JSON document plus an optional plain-text table.
pub struct Output {
    pub json: Value,
    pub table: Option<String>,
}

impl Output {
    pub fn json<T: Serialize>(v: &T) -> anyhow::Result<Self> {
        Ok(Self {
            json: serde_json::to_value(v)?,
            table: None,
        })
    }

    pub fn with_table(mut self, t: String) -> Self {
        self.table = Some(t);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match (format, &self.table) {
            (Format::Table, Some(t)) => t.clone(),
            _ => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialise");
                s.push('\n');
                s
            }
        }
    }
}

pub fn hypergraph_table(h: &Hypergraph) -> String {
    let mut s = format!("n = {}, {} edges\n", h.n(), h.edge_count());
    for e in h.edges() {
        let vs: Vec<String> = e.vertices().iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "{:<24} {}", vs.join(" "), e.weight());
    }
    s
}

pub fn spectrum_table(r: &SpectrumReport) -> String {
    let mut s = String::from("eigenvalue              multiplicity\n");
    for e in &r.eigenvalues {
        let _ = writeln!(s, "{:<24.12} {}", e.value, e.multiplicity);
    }
    s
}

pub fn verify_table(reports: &[VerifyReport]) -> String {
    let mut s = String::from("theorem          verdict                  max deviation  tolerance\n");
    for r in reports {
        let _ = writeln!(
            s,
            "{:<16} {:<24} {:<14.3e} {:.0e}",
            r.theorem,
            r.verdict.as_str(),
            r.max_deviation,
            r.tolerance
        );
        for c in r.checks.iter().filter(|c| !c.passed) {
            let _ = writeln!(s, "  failed check: {} {}", c.name, c.detail);
        }
        for c in r.constants.iter().filter(|c| !c.agree) {
            let _ = writeln!(
                s,
                "  constant {}: oracle {} published {}",
                c.name,
                hyperspectra::rational::format_rational(&c.oracle),
                hyperspectra::rational::format_rational(&c.published)
            );
        }
    }
    s
}
