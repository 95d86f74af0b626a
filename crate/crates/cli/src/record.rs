//! Append-only run records: one JSON object per line, self-describing
//! enough to re-run the command from its own fields.

use anyhow::{Context, Result};
use semiring_core::engine::Budget;
use serde::Serialize;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Serialize)]
pub struct RunRecord {
    /// Full argv of the invocation.
    pub command: Vec<String>,
    /// SHA-256 of the primary input file, or of the argument text when the
    /// command takes no file.
    pub input_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<BudgetFields>,
    pub wall_ms: u128,
    /// One-line outcome summary (what the command printed as its verdict).
    pub outcome: String,
    /// Paths of proof/census files written by this run.
    pub artifacts: Vec<String>,
}

#[derive(Serialize)]
pub struct BudgetFields {
    pub max_degree: u64,
    pub max_coeff: u64,
    pub max_universe: usize,
    pub max_rounds: u64,
}

impl From<&Budget> for BudgetFields {
    fn from(b: &Budget) -> Self {
        BudgetFields {
            max_degree: b.max_degree,
            max_coeff: b.max_coeff,
            max_universe: b.max_universe,
            max_rounds: b.max_rounds,
        }
    }
}

/// Collects the pieces of a RunRecord while a command runs.
pub struct Recorder {
    out: Option<PathBuf>,
    started: Instant,
    pub input_digest: String,
    pub budget: Option<BudgetFields>,
    pub artifacts: Vec<String>,
}

impl Recorder {
    pub fn new(out: Option<&Path>) -> Self {
        Recorder {
            out: out.map(Path::to_path_buf),
            started: Instant::now(),
            input_digest: String::new(),
            budget: None,
            artifacts: Vec::new(),
        }
    }

    pub fn artifact(&mut self, path: &Path) {
        self.artifacts.push(path.display().to_string());
    }

    /// Write the record (no-op without an --out path).
    pub fn finish(self, outcome: &str) -> Result<()> {
        let Some(path) = self.out else {
            return Ok(());
        };
        let record = RunRecord {
            command: std::env::args().collect(),
            input_digest: self.input_digest,
            budget: self.budget,
            wall_ms: self.started.elapsed().as_millis(),
            outcome: outcome.to_string(),
            artifacts: self.artifacts,
        };
        let line = serde_json::to_string(&record)?;
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&path)
            .with_context(|| format!("opening {}", path.display()))?;
        writeln!(file, "{line}")?;
        Ok(())
    }
}
