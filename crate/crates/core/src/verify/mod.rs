//! Verification suites. Each suite is a named strategy producing a [`SuiteReport`].

mod bridges;
mod cardinalities;
pub mod hom;
pub mod identities;
mod presentations;
pub mod tied;
pub mod tl;

use std::time::Instant;

use serde::Serialize;

use crate::error::{FramoidError, Result};
use crate::family::{registry as family_registry, FamilyStrategy};

pub use bridges::{BridgeTarget, BridgesSuite};
pub use cardinalities::CardinalitiesSuite;
pub use hom::HomSuite;
pub use presentations::PresentationsSuite;
pub use tied::TiedSuite;
pub use tl::TlSuite;

pub const DEFAULT_SEED: u64 = 0xF4A317;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// a negative control that failed, as it should
    ExpectedFail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub suite: String,
    pub family: String,
    pub d: u32,
    pub n: usize,
    pub identity: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub entries: Vec<ReportEntry>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        self.entries
            .iter()
            .map(|e| serde_json::to_string(e).expect("report entries serialize") + "\n")
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,family,d,n,identity,status,ms\n");
        for e in &self.entries {
            let status = serde_json::to_value(e.status).unwrap();
            out += &format!(
                "{},{},{},{},\"{}\",{},{}\n",
                e.suite,
                e.family,
                e.d,
                e.n,
                e.identity.replace('"', "\"\""),
                status.as_str().unwrap(),
                e.ms
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let status = serde_json::to_value(e.status).unwrap();
            out += &format!(
                "[{}] {} d={} n={} {}: {}\n",
                e.suite,
                e.family,
                e.d,
                e.n,
                e.identity,
                status.as_str().unwrap()
            );
            if let Some(w) = &e.witness {
                out += &format!("    witness: {w}\n");
            }
        }
        let fails = self.failures().count();
        out += &format!("{} checks, {} failed\n", self.entries.len(), fails);
        out
    }
}

/// Options shared by all suites.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    /// restrict to these family keys (empty means the suite default)
    pub families: Vec<String>,
    /// override the default d values
    pub ds: Option<Vec<u32>>,
    /// override the default n values
    pub ns: Option<Vec<usize>>,
    pub cap: usize,
    /// record wall-clock milliseconds; off by default so reports are reproducible
    pub timing: bool,
    /// random samples for the sampling checks
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: DEFAULT_SEED,
            families: Vec::new(),
            ds: None,
            ns: None,
            cap: crate::closure::DEFAULT_CAP,
            timing: false,
            samples: 0,
        }
    }
}

impl SuiteConfig {
    /// Families selected by the config, or all registered ones.
    pub(crate) fn families(&self) -> Result<Vec<&'static dyn FamilyStrategy>> {
        if self.families.is_empty() {
            return Ok(family_registry().to_vec());
        }
        self.families.iter().map(|k| crate::family::lookup(k)).collect()
    }

    /// The grid after applying the d/n overrides to a default grid.
    pub(crate) fn grid(&self, default: Vec<(u32, usize)>) -> Vec<(u32, usize)> {
        let mut ds: Vec<u32> = default.iter().map(|g| g.0).collect();
        let mut ns: Vec<usize> = default.iter().map(|g| g.1).collect();
        ds.sort_unstable();
        ds.dedup();
        ns.sort_unstable();
        ns.dedup();
        let ds = self.ds.clone().unwrap_or(ds);
        let ns = self.ns.clone().unwrap_or(ns);
        ds.iter().flat_map(|&d| ns.iter().map(move |&n| (d, n))).collect()
    }

    pub(crate) fn samples_or(&self, default: usize) -> usize {
        if self.samples == 0 {
            default
        } else {
            self.samples
        }
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport>;
}

static SUITES: [&dyn Suite; 6] = [
    &CardinalitiesSuite,
    &PresentationsSuite,
    &BridgesSuite,
    &TlSuite,
    &TiedSuite,
    &HomSuite,
];

pub fn registry() -> &'static [&'static dyn Suite] {
    &SUITES
}

pub fn lookup(name: &str) -> Result<&'static dyn Suite> {
    registry()
        .iter()
        .copied()
        .find(|s| s.name() == name)
        .ok_or_else(|| FramoidError::InvalidParameters(format!("unknown suite `{name}`")))
}

/// Runs a check and turns its outcome into a report entry.
pub(crate) fn entry(
    cfg: &SuiteConfig,
    suite: &str,
    family: &str,
    (d, n): (u32, usize),
    identity: impl Into<String>,
    check: impl FnOnce() -> std::result::Result<(), String>,
) -> ReportEntry {
    let start = Instant::now();
    let outcome = check();
    let ms = if cfg.timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    };
    let (status, witness) = match outcome {
        Ok(()) => (Status::Pass, None),
        Err(w) => (Status::Fail, Some(w)),
    };
    ReportEntry {
        suite: suite.to_string(),
        family: family.to_string(),
        d,
        n,
        identity: identity.into(),
        status,
        witness,
        ms,
    }
}

/// Same as [`entry`] for a check that is supposed to fail.
pub(crate) fn control_entry(
    cfg: &SuiteConfig,
    suite: &str,
    family: &str,
    dn: (u32, usize),
    identity: impl Into<String>,
    check: impl FnOnce() -> std::result::Result<(), String>,
) -> ReportEntry {
    let mut e = entry(cfg, suite, family, dn, identity, check);
    e.status = match e.status {
        Status::Fail => Status::ExpectedFail,
        _ => Status::Fail,
    };
    if e.status == Status::Fail {
        e.witness = Some("negative control unexpectedly held".into());
    }
    e
}
