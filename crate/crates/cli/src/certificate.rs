//! Certificates: a job, its canonical instance, the computed payload, and a
//! digest tying them together. `verify` recomputes everything from scratch.

use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::instance::Instance;
use crate::job::{Job, Kind};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub kind: Kind,
    pub instance_digest: String,
    pub job: Job,
    pub instance: Instance,
    pub holds: bool,
    pub payload: Value,
    pub version: String,
    /// Seconds since the Unix epoch; the only field that varies between runs.
    pub timestamp: u64,
}

/// SHA-256 over the canonical JSON of the job and instance.
pub fn digest(job: &Job, instance: &Instance) -> String {
    let canonical = serde_json::json!({ "job": job, "instance": instance });
    hex::encode(Sha256::digest(canonical.to_string().as_bytes()))
}

impl Certificate {
    pub fn issue(job: Job, instance: Instance) -> Result<Self> {
        let outcome = job.run(&instance)?;
        let timestamp = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        Ok(Certificate {
            kind: job.kind(),
            instance_digest: digest(&job, &instance),
            job,
            instance,
            holds: outcome.holds,
            payload: outcome.payload,
            version: VERSION.to_string(),
            timestamp,
        })
    }

    pub fn to_pretty_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificates serialize");
        s.push('\n');
        s
    }

    /// Writes `dir/name.json` through a temporary file and a rename.
    pub fn write_atomic(&self, dir: &Path, name: &str) -> Result<PathBuf> {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let target = dir.join(format!("{name}.json"));
        let tmp = dir.join(format!(".{name}.json.tmp"));
        std::fs::write(&tmp, self.to_pretty_json()).with_context(|| format!("writing {}", tmp.display()))?;
        std::fs::rename(&tmp, &target).with_context(|| format!("renaming to {}", target.display()))?;
        Ok(target)
    }

    /// Default file stem: kind plus a digest prefix.
    pub fn file_stem(&self) -> String {
        format!("{}-{}", serde_json::to_value(self.kind).unwrap().as_str().unwrap(), &self.instance_digest[..12])
    }
}

#[derive(Debug, Deserialize)]
struct Stored {
    kind: Kind,
    instance_digest: String,
    job: Job,
    instance: Value,
    holds: bool,
    payload: Value,
    version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub valid: bool,
    pub problems: Vec<String>,
    pub notes: Vec<String>,
}

/// Re-checks a stored certificate against a fresh computation.
pub fn verify(text: &str) -> Result<Verification> {
    let stored: Stored = serde_json::from_str(text).context("not a certificate")?;
    let mut problems = Vec::new();
    let mut notes = Vec::new();
    let instance = match Instance::from_value(&stored.instance) {
        Ok(i) => i,
        Err(e) => return Ok(Verification { valid: false, problems: vec![format!("embedded instance: {e}")], notes }),
    };
    if serde_json::to_value(&instance)? != stored.instance {
        problems.push("embedded instance is not in canonical form".to_string());
    }
    if stored.kind != stored.job.kind() {
        problems.push(format!("kind {:?} does not match the job", stored.kind));
    }
    if digest(&stored.job, &instance) != stored.instance_digest {
        problems.push("instance digest does not match the job and instance".to_string());
    }
    let fresh = match stored.job.run(&instance) {
        Ok(f) => f,
        Err(e) => {
            problems.push(format!("recomputation failed: {e:#}"));
            return Ok(Verification { valid: false, problems, notes });
        }
    };
    if fresh.holds != stored.holds {
        problems.push(format!("verdict differs: stored {}, recomputed {}", stored.holds, fresh.holds));
    }
    if fresh.payload != stored.payload {
        problems.push("payload differs from a fresh computation".to_string());
    }
    if stored.version != VERSION {
        notes.push(format!("issued by version {}, checked by {VERSION}", stored.version));
    }
    Ok(Verification { valid: problems.is_empty(), problems, notes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance;

    fn bad() -> Instance {
        Instance::of_hypergraph(&instance::hypergraph(&instance::load("corpus:bad").unwrap(), true).unwrap())
    }

    #[test]
    fn issued_certificates_verify() {
        let c = Certificate::issue(Job::Packing, bad()).unwrap();
        assert!(!c.holds);
        let v = verify(&c.to_pretty_json()).unwrap();
        assert!(v.valid, "{v:?}");
    }

    #[test]
    fn tampering_is_detected() {
        let c = Certificate::issue(Job::Equality { n: 2, up_to: false }, bad()).unwrap();
        let text = c.to_pretty_json().replace("\"holds\": false", "\"holds\": true");
        assert!(!verify(&text).unwrap().valid);
        let mut edited: Value = serde_json::from_str(&c.to_pretty_json()).unwrap();
        edited["instance"]["edges"][0][0] = 4.into();
        assert!(!verify(&edited.to_string()).unwrap().valid);
    }

    #[test]
    fn payloads_are_deterministic() {
        let job = Job::Mengerian { c_max: 1, cross_check: Some(2) };
        let a = Certificate::issue(job.clone(), bad()).unwrap();
        let b = Certificate::issue(job, bad()).unwrap();
        assert_eq!(serde_json::to_string(&a.payload).unwrap(), serde_json::to_string(&b.payload).unwrap());
        assert_eq!(a.instance_digest, b.instance_digest);
    }
}
