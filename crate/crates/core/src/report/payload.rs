use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::OutputFormat;
use crate::sinha::PageTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageEntry {
    pub col: i64,
    pub row: i64,
    pub dim: usize,
}

pub(crate) fn entries_of(page: &PageTable) -> Vec<PageEntry> {
    page.entries
        .iter()
        .map(|(b, &dim)| PageEntry { col: b.col, row: b.row, dim })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pages {
    pub sinha_e2: Vec<PageEntry>,
    pub vassiliev_e1: Vec<PageEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckEntry {
    pub n_diag: usize,
    #[serde(rename = "dim_A")]
    pub dim_a: usize,
    pub e2_diag: usize,
    pub equal: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordEntry {
    pub n_diag: usize,
    pub diagrams: usize,
    pub one_term: usize,
    pub four_term: usize,
    #[serde(rename = "dim_A")]
    pub dim_a: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeDim {
    pub total_degree: i64,
    pub dim: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KanSummary {
    pub lhs: Vec<DegreeDim>,
    pub rhs: Vec<DegreeDim>,
    pub lhs_is_complex: bool,
    pub unit_is_chain_map: bool,
    pub cone_acyclic: bool,
    pub equal: bool,
}

/// The deterministic part of a run: everything except timing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Payload {
    pub command: String,
    pub field: String,
    pub n: usize,
    pub k_max: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation_boundary_col: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pages: Option<Pages>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crosscheck: Option<Vec<CrosscheckEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chord: Option<Vec<ChordEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kancheck: Option<KanSummary>,
}

impl Payload {
    /// Whether every check carried by this payload passed.
    pub fn all_checks_pass(&self) -> bool {
        let cross = self.crosscheck.as_ref().is_none_or(|c| c.iter().all(|e| e.equal));
        let kan = self.kancheck.as_ref().is_none_or(|k| k.equal);
        cross && kan
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("payload serializes");
                s.push('\n');
                s
            }
            OutputFormat::Csv => self.render_csv(),
            OutputFormat::Markdown => self.render_markdown(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        let section = |out: &mut String, header: &str| {
            if !out.is_empty() {
                out.push('\n');
            }
            out.push_str(header);
            out.push('\n');
        };
        if let Some(pages) = &self.pages {
            section(&mut out, "page,col,row,dim");
            for (name, entries) in [("sinha_e2", &pages.sinha_e2), ("vassiliev_e1", &pages.vassiliev_e1)] {
                for e in entries {
                    let _ = writeln!(out, "{name},{},{},{}", e.col, e.row, e.dim);
                }
            }
        }
        if let Some(cross) = &self.crosscheck {
            section(&mut out, "n_diag,dim_A,e2_diag,equal");
            for e in cross {
                let _ = writeln!(out, "{},{},{},{}", e.n_diag, e.dim_a, e.e2_diag, e.equal);
            }
        }
        if let Some(chord) = &self.chord {
            section(&mut out, "n_diag,diagrams,one_term,four_term,dim_A");
            for e in chord {
                let _ = writeln!(out, "{},{},{},{},{}", e.n_diag, e.diagrams, e.one_term, e.four_term, e.dim_a);
            }
        }
        if let Some(kan) = &self.kancheck {
            section(&mut out, "side,total_degree,dim");
            for (side, dims) in [("lhs", &kan.lhs), ("rhs", &kan.rhs)] {
                for d in dims {
                    let _ = writeln!(out, "{side},{},{}", d.total_degree, d.dim);
                }
            }
        }
        out
    }

    fn render_markdown(&self) -> String {
        let mut out = format!(
            "## {} over {} (n = {}, k_max = {})\n",
            self.command, self.field, self.n, self.k_max
        );
        if let Some(col) = self.truncation_boundary_col {
            let _ = writeln!(out, "\nColumn {col} is the truncation boundary.");
        }
        if let Some(pages) = &self.pages {
            for (name, entries) in [("Sinha E2", &pages.sinha_e2), ("Vassiliev E1", &pages.vassiliev_e1)] {
                let _ = writeln!(out, "\n### {name}\n\n| col | row | dim |\n|---:|---:|---:|");
                for e in entries {
                    let _ = writeln!(out, "| {} | {} | {} |", e.col, e.row, e.dim);
                }
            }
        }
        if let Some(cross) = &self.crosscheck {
            out.push_str("\n### Diagonal crosscheck\n\n| n | dim A_n | E2 diagonal | equal |\n|---:|---:|---:|:---:|\n");
            for e in cross {
                let _ = writeln!(out, "| {} | {} | {} | {} |", e.n_diag, e.dim_a, e.e2_diag, e.equal);
            }
        }
        if let Some(chord) = &self.chord {
            out.push_str("\n### Chord diagrams\n\n| n | diagrams | 1T | 4T | dim A_n |\n|---:|---:|---:|---:|---:|\n");
            for e in chord {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} |",
                    e.n_diag, e.diagrams, e.one_term, e.four_term, e.dim_a
                );
            }
        }
        if let Some(kan) = &self.kancheck {
            out.push_str("\n### Kan-extension unit\n\n| total degree | lhs | rhs |\n|---:|---:|---:|\n");
            for (l, r) in kan.lhs.iter().zip(&kan.rhs) {
                let _ = writeln!(out, "| {} | {} | {} |", l.total_degree, l.dim, r.dim);
            }
            let _ = writeln!(
                out,
                "\ncomplex: {}, chain map: {}, cone acyclic: {}, equal: {}",
                kan.lhs_is_complex, kan.unit_is_chain_map, kan.cone_acyclic, kan.equal
            );
        }
        out
    }
}
