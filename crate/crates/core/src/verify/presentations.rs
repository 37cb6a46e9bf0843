//! Every relation schema of every family, checked in the diagram model.

use rayon::prelude::*;

use super::{control_entry, entry, Suite, SuiteConfig, SuiteReport};
use crate::error::Result;
use crate::family::MonoidFamily;
use crate::presentation::{check_schemas, negative_control};

pub struct PresentationsSuite;

impl Suite for PresentationsSuite {
    fn name(&self) -> &'static str {
        "presentations"
    }

    fn run(&self, cfg: &SuiteConfig) -> Result<SuiteReport> {
        let mut jobs = Vec::new();
        for s in cfg.families()? {
            for (d, n) in cfg.grid(s.default_grid()) {
                let fam = MonoidFamily::new(s, d, n)?;
                for schema in s.schemas() {
                    jobs.push((fam, Some(schema)));
                }
                jobs.push((fam, None));
            }
        }
        let entries = jobs
            .into_par_iter()
            .map(|(fam, schema)| {
                let dn = (fam.d, fam.n);
                match schema {
                    Some(schema) => entry(cfg, self.name(), fam.key(), dn, schema.name, || {
                        let report = check_schemas(&fam, std::slice::from_ref(&schema));
                        match report.failures.first() {
                            None => Ok(()),
                            Some(f) => Err(format!(
                                "{} failing instances; {} -> {} but {} -> {}",
                                report.failures.len(),
                                f.lhs,
                                f.lhs_value,
                                f.rhs,
                                f.rhs_value
                            )),
                        }
                    }),
                    None => control_entry(cfg, self.name(), fam.key(), dn, "g = 1", || {
                        let report = negative_control(&fam);
                        let total = report.instances();
                        // every generator must differ from the identity
                        if report.failures.len() == total {
                            Err(format!("{total} of {total} instances rejected"))
                        } else {
                            Ok(())
                        }
                    }),
                }
            })
            .collect();
        Ok(SuiteReport {
            suite: self.name().into(),
            entries,
        })
    }
}
