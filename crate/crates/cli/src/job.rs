//! A computation that produces a certificate: what to run, on which instance,
//! and whether the property in question holds.

use anyhow::{bail, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sqfree_core::covering::{application1_check, application2_check, mengerian_scan, PathPattern};
use sqfree_core::paths::classify_cubic_with;
use sqfree_core::symbolic::{check_badness_criterion, SquarefreeIdeal};

use crate::instance::Instance;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Equality,
    Packing,
    Mengerian,
    Partition,
    Badness,
    Waldschmidt,
    Application,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Job {
    /// `I^(n) = I^n` at `n`, or for every level up to `n` with `up_to`.
    Equality { n: u32, up_to: bool },
    ClassifyCubic { budget: u32 },
    Waldschmidt { depth: u32 },
    Packing,
    Mengerian { c_max: u32, cross_check: Option<u32> },
    Badness,
    Partition { r: usize },
    Application { which: u8, p: usize, a_max: u32, pattern: Option<PathPattern> },
}

/// Result of running a job: the certificate payload and the verdict.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Outcome {
    pub holds: bool,
    pub payload: Value,
}

fn outcome(holds: bool, payload: impl Serialize) -> Result<Outcome> {
    Ok(Outcome { holds, payload: serde_json::to_value(payload)? })
}

impl Job {
    pub fn kind(&self) -> Kind {
        match self {
            Job::Equality { .. } | Job::ClassifyCubic { .. } => Kind::Equality,
            Job::Waldschmidt { .. } => Kind::Waldschmidt,
            Job::Packing => Kind::Packing,
            Job::Mengerian { .. } => Kind::Mengerian,
            Job::Badness => Kind::Badness,
            Job::Partition { .. } => Kind::Partition,
            Job::Application { .. } => Kind::Application,
        }
    }

    pub fn run(&self, instance: &Instance) -> Result<Outcome> {
        match *self {
            Job::Equality { n, up_to } => {
                let ideal = SquarefreeIdeal::new(instance.as_ideal()?)?;
                let reports = if up_to { ideal.equality_up_to(n, true)? } else { vec![ideal.equality_check(n)?] };
                outcome(reports.iter().all(|r| r.equal), reports)
            }
            Job::ClassifyCubic { budget } => {
                let report = classify_cubic_with(&instance.as_graph()?, budget)?;
                outcome(report.predicted && report.consistent, report)
            }
            Job::Waldschmidt { depth } => {
                let bounds = SquarefreeIdeal::new(instance.as_ideal()?)?.waldschmidt_bounds(depth)?;
                outcome(bounds.certified, bounds)
            }
            Job::Packing => {
                let report = instance.as_hypergraph()?.has_packing()?;
                outcome(report.holds, report)
            }
            Job::Mengerian { c_max, cross_check } => {
                let report = mengerian_scan(&instance.as_hypergraph()?, c_max, cross_check)?;
                outcome(report.gap.is_none(), report)
            }
            Job::Badness => {
                let report = check_badness_criterion(&instance.as_hypergraph()?)?;
                outcome(report.agree && report.criterion, report)
            }
            Job::Partition { r } => {
                let h = instance.as_hypergraph()?;
                let partition = h.find_r_partition(r)?;
                let complete = partition.as_ref().map(|p| h.is_complete_r_partite(p)).transpose()?;
                outcome(partition.is_some(), serde_json::json!({ "r": r, "partition": partition, "complete": complete }))
            }
            Job::Application { which, p, a_max, pattern } => {
                if *instance != Instance::None {
                    bail!("application jobs build their own matrix");
                }
                let report = match which {
                    1 => application1_check(p, a_max)?,
                    2 => application2_check(p, a_max, pattern.unwrap_or_default())?,
                    other => bail!("--which must be 1 or 2, got {other}"),
                };
                outcome(report.gap.is_none(), report)
            }
        }
    }
}
