//! Run configuration, result records, the on-disk cache and the drivers
//! behind each command-line subcommand.

mod cache;
mod payload;

use std::env;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub use cache::{cache_roundtrip, Cache, Lookup};
pub use payload::{ChordEntry, CrosscheckEntry, DegreeDim, KanSummary, PageEntry, Pages, Payload};

use crate::chord::{dim_a, double_factorial, four_term_relations, one_term_relations};
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::sinha::{e2_entry, e2_page, kan_unit_check, vassiliev_e1_view, Bidegree, PageLabel, PageTable};

/// Environment variable that overrides the cache directory.
pub const CACHE_ENV: &str = "SPECTRAL_KNOTS_CACHE";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    E2,
    Chord,
    Crosscheck,
    Kancheck,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Command::E2 => "e2",
            Command::Chord => "chord",
            Command::Crosscheck => "crosscheck",
            Command::Kancheck => "kancheck",
        };
        f.write_str(s)
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e2" => Ok(Command::E2),
            "chord" => Ok(Command::Chord),
            "crosscheck" => Ok(Command::Crosscheck),
            "kancheck" => Ok(Command::Kancheck),
            _ => Err(Error::Usage(format!("unknown command `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Markdown,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "markdown" | "md" => Ok(OutputFormat::Markdown),
            _ => Err(Error::Usage(format!("unknown output format `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub n: usize,
    pub k_max: usize,
    pub field: Field,
    pub format: OutputFormat,
    /// `None` disables caching unless the environment variable is set.
    pub cache_dir: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command, n: usize, k_max: usize, field_spec: &str) -> Result<Self> {
        let cfg = RunConfig {
            command,
            n,
            k_max,
            field: field_spec.parse()?,
            format: OutputFormat::Json,
            cache_dir: None,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Usage("n must be at least 1".into()));
        }
        Ok(())
    }

    /// Hash of the computational inputs and the crate version. Output format
    /// and cache location do not enter.
    pub fn fingerprint(&self) -> String {
        let canonical = format!(
            "spectral-knots/{}|command={}|n={}|k_max={}|field={}",
            env!("CARGO_PKG_VERSION"),
            self.command,
            self.n,
            self.k_max,
            self.field
        );
        hex::encode(Sha256::digest(canonical.as_bytes()))
    }

    /// The cache directory after applying the environment override.
    pub fn effective_cache_dir(&self) -> Option<PathBuf> {
        match env::var_os(CACHE_ENV) {
            Some(v) if !v.is_empty() => Some(PathBuf::from(v)),
            _ => self.cache_dir.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub fingerprint: String,
    pub version: String,
    pub payload: Payload,
    pub wall_time_ms: u64,
    pub timestamp_unix: u64,
}

#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub record: ResultRecord,
    pub cache_hit: bool,
}

fn base_payload(cfg: &RunConfig) -> Payload {
    Payload {
        command: cfg.command.to_string(),
        field: cfg.field.to_string(),
        n: cfg.n,
        k_max: cfg.k_max,
        truncation_boundary_col: None,
        pages: None,
        crosscheck: None,
        chord: None,
        kancheck: None,
    }
}

fn expect_command(cfg: &RunConfig, command: Command) -> Result<()> {
    if cfg.command != command {
        return Err(Error::Usage(format!("expected command {command}, got {}", cfg.command)));
    }
    cfg.validate()
}

/// Sinha E2 page and its Vassiliev relabeling.
pub fn e2_payload(cfg: &RunConfig) -> Result<Payload> {
    expect_command(cfg, Command::E2)?;
    let page = e2_page(cfg.n, cfg.k_max, cfg.field)?;
    let view = vassiliev_e1_view(&page)?;
    Ok(Payload {
        truncation_boundary_col: page.boundary_column(),
        pages: Some(Pages { sinha_e2: payload::entries_of(&page), vassiliev_e1: payload::entries_of(&view) }),
        ..base_payload(cfg)
    })
}

/// For each `n_diag` in `1..=n`, compares `dim A_{n_diag}` with the Sinha E2
/// entry at `(-2 n_diag, 2 n_diag)`, computed with truncation `2 n_diag`.
pub fn crosscheck_payload(cfg: &RunConfig) -> Result<Payload> {
    expect_command(cfg, Command::Crosscheck)?;
    let mut diagonal = PageTable {
        label: PageLabel::SinhaE2,
        field: cfg.field,
        truncation: 2 * cfg.n,
        entries: Default::default(),
    };
    let mut rows = Vec::with_capacity(cfg.n);
    for n_diag in 1..=cfg.n {
        let a = dim_a(n_diag, cfg.field);
        let e = e2_entry(2 * n_diag, n_diag, 2 * n_diag, cfg.field)?;
        diagonal.entries.insert(Bidegree::sinha(2 * n_diag, n_diag), e);
        rows.push(CrosscheckEntry { n_diag, dim_a: a, e2_diag: e, equal: a == e });
    }
    let view = vassiliev_e1_view(&diagonal)?;
    Ok(Payload {
        pages: Some(Pages { sinha_e2: payload::entries_of(&diagonal), vassiliev_e1: payload::entries_of(&view) }),
        crosscheck: Some(rows),
        ..base_payload(cfg)
    })
}

pub fn chord_payload(cfg: &RunConfig) -> Result<Payload> {
    expect_command(cfg, Command::Chord)?;
    let rows = (1..=cfg.n)
        .map(|n_diag| ChordEntry {
            n_diag,
            diagrams: double_factorial(n_diag),
            one_term: one_term_relations(n_diag).len(),
            four_term: four_term_relations(n_diag).len(),
            dim_a: dim_a(n_diag, cfg.field),
        })
        .collect();
    Ok(Payload { chord: Some(rows), ..base_payload(cfg) })
}

pub fn kancheck_payload(cfg: &RunConfig) -> Result<Payload> {
    expect_command(cfg, Command::Kancheck)?;
    let r = kan_unit_check(cfg.n, cfg.k_max, cfg.field)?;
    let dims = |m: &std::collections::BTreeMap<i64, i64>| {
        m.iter().map(|(&total_degree, &dim)| DegreeDim { total_degree, dim }).collect()
    };
    Ok(Payload {
        kancheck: Some(KanSummary {
            lhs: dims(&r.lhs_dims),
            rhs: dims(&r.rhs_dims),
            lhs_is_complex: r.lhs_is_complex,
            unit_is_chain_map: r.unit_is_chain_map,
            cone_acyclic: r.cone_acyclic,
            equal: r.equal,
        }),
        ..base_payload(cfg)
    })
}

pub fn compute_payload(cfg: &RunConfig) -> Result<Payload> {
    match cfg.command {
        Command::E2 => e2_payload(cfg),
        Command::Chord => chord_payload(cfg),
        Command::Crosscheck => crosscheck_payload(cfg),
        Command::Kancheck => kancheck_payload(cfg),
    }
}

/// Runs `cfg`, serving from and filling the cache when one is configured.
pub fn run(cfg: &RunConfig) -> Result<RunOutcome> {
    cfg.validate()?;
    let fingerprint = cfg.fingerprint();
    let cache = cfg.effective_cache_dir().map(Cache::new);
    if let Some(record) = cache.as_ref().and_then(|c| c.get(&fingerprint)) {
        return Ok(RunOutcome { record, cache_hit: true });
    }
    let start = Instant::now();
    let payload = compute_payload(cfg)?;
    let record = ResultRecord {
        fingerprint,
        version: env!("CARGO_PKG_VERSION").to_string(),
        payload,
        wall_time_ms: start.elapsed().as_millis() as u64,
        timestamp_unix: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
    };
    if let Some(c) = &cache {
        c.put(&record)?;
    }
    Ok(RunOutcome { record, cache_hit: false })
}

pub fn run_e2(cfg: &RunConfig) -> Result<RunOutcome> {
    expect_command(cfg, Command::E2)?;
    run(cfg)
}

pub fn run_crosscheck(cfg: &RunConfig) -> Result<RunOutcome> {
    expect_command(cfg, Command::Crosscheck)?;
    run(cfg)
}
