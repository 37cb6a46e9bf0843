//! Enumerated sizes against the closed counting formulas.

use rayon::prelude::*;

use super::{entry, Suite, SuiteConfig, SuiteReport};
use crate::closure::count;
use crate::error::Result;
use crate::family::MonoidFamily;

pub struct CardinalitiesSuite;

impl Suite for CardinalitiesSuite {
    fn name(&self) -> &'static str {
        "cardinalities"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let mut jobs = Vec::new();
        for s in cfg.families()? {
            for (d, n) in cfg.grid(s.default_grid()) {
                jobs.push(MonoidFamily::new(s, d, n)?);
            }
        }
        let entries = jobs
            .par_iter()
            .map(|fam| {
                let predicted = fam.predicted_cardinality();
                let identity = format!("|{}| = {predicted}", fam.strategy.label());
                entry(cfg, self.name(), fam.key(), (fam.d, fam.n), identity, || {
                    let got = count(fam, cfg.cap).map_err(|e| e.to_string())?;
                    if got.to_string() == predicted.to_string() {
                        Ok(())
                    } else {
                        Err(format!("enumerated {got}"))
                    }
                })
            })
            .collect();
        Ok(SuiteReport {
            suite: self.name().into(),
            entries,
        })
    }
}
