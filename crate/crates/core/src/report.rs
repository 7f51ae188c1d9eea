//! Machine-readable run reports.
//!
//! A [`Verdict`] can only be built from evidence: [`Verdict::trivial`]
//! checks `∂w = 1` before recording `w`, and [`Verdict::certified`] takes a
//! checked [`Certificate`].

use std::collections::BTreeMap;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::cert::Certificate;
use crate::dga::GradedDga;
use crate::error::Result;
use crate::freealg::{Coefficient, Poly};
use crate::front::ClassicalInvariants;

/// The three possible conclusions about a characteristic algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Verdict {
    /// `∂w = 1` for the recorded element, checked over `ring`.
    Trivial {
        witness: String,
        ring: String,
    },
    NontrivialCertified {
        certificate: Certificate,
    },
    UnknownAtCap {
        cap: usize,
    },
}

impl Verdict {
    /// `Trivial` if `∂w = 1`, otherwise None.
    pub fn trivial<C: Coefficient>(dga: &GradedDga<C>, w: &Poly<C>) -> Result<Option<Verdict>> {
        if !crate::charalg::verify_unit_witness(dga, w)? {
            return Ok(None);
        }
        Ok(Some(Verdict::Trivial { witness: w.render(dga.names()), ring: C::RING.name().to_string() }))
    }

    pub fn certified(certificate: Certificate) -> Verdict {
        Verdict::NontrivialCertified { certificate }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Trivial { .. } => "Trivial",
            Verdict::NontrivialCertified { .. } => "NontrivialCertified",
            Verdict::UnknownAtCap { .. } => "UnknownAtCap",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub knot: String,
    pub invariants: Option<ClassicalInvariants>,
    pub generator_count: usize,
    pub checks: Vec<Check>,
    pub verdict: Option<Verdict>,
    /// Wall-clock time per stage, in milliseconds.
    pub timings_ms: BTreeMap<String, f64>,
}

impl RunReport {
    pub fn new(knot: impl Into<String>) -> Self {
        RunReport {
            knot: knot.into(),
            invariants: None,
            generator_count: 0,
            checks: Vec::new(),
            verdict: None,
            timings_ms: BTreeMap::new(),
        }
    }

    pub fn check(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn time(&mut self, stage: &str, elapsed: Duration) {
        self.timings_ms.insert(stage.to_string(), elapsed.as_secs_f64() * 1e3);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
