//! Uniform per-law pass/fail records shared by every checker.

use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::exactla::{LinMap, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LawStatus {
    Pass,
    Fail,
    /// A law that is implied by laws which passed has failed.
    Inconsistent,
}

impl fmt::Display for LawStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            LawStatus::Pass => "pass",
            LawStatus::Fail => "fail",
            LawStatus::Inconsistent => "inconsistent",
        })
    }
}

/// First failing entry of a law: the probe instance, the input basis vector
/// (column) and output basis vector (row), and both sides' values there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub probes: Vec<String>,
    pub input: String,
    pub output: String,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at ({}) input {} output {}: lhs {} rhs {}",
            self.probes.join(", "),
            self.input,
            self.output,
            self.lhs,
            self.rhs
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub id: String,
    pub status: LawStatus,
    /// Number of probe instances compared.
    pub instances: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub laws: Vec<LawResult>,
}

impl AxiomReport {
    pub fn get(&self, id: &str) -> Option<&LawResult> {
        self.laws.iter().find(|l| l.id == id)
    }

    pub fn status(&self, id: &str) -> Option<LawStatus> {
        self.get(id).map(|l| l.status)
    }

    pub fn passed(&self, id: &str) -> bool {
        self.status(id) == Some(LawStatus::Pass)
    }

    pub fn all_pass(&self) -> bool {
        self.laws.iter().all(|l| l.status == LawStatus::Pass)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.laws
            .iter()
            .filter(|l| l.status != LawStatus::Pass)
            .map(|l| l.id.as_str())
            .collect()
    }

    pub fn has_inconsistency(&self) -> bool {
        self.laws.iter().any(|l| l.status == LawStatus::Inconsistent)
    }

    pub fn ids(&self) -> Vec<&str> {
        self.laws.iter().map(|l| l.id.as_str()).collect()
    }

    pub fn push(&mut self, law: LawResult) {
        self.laws.push(law);
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.laws.extend(other.laws);
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.laws {
            write!(f, "{:<22} {:<12} ({} instances)", l.id, l.status, l.instances)?;
            if let Some(w) = &l.witness {
                write!(f, "  {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Collects comparisons for one law across probe instances, keeping the
/// first failure.
#[derive(Debug)]
pub struct Law {
    id: String,
    instances: usize,
    witness: Option<Witness>,
}

impl Law {
    pub fn new(id: impl Into<String>) -> Self {
        Law {
            id: id.into(),
            instances: 0,
            witness: None,
        }
    }

    /// Compares the two sides of one instance. Parallel maps with different
    /// labels are an assembly error, not a failed law.
    pub fn check(&mut self, probes: &[String], lhs: &LinMap, rhs: &LinMap) -> Result<bool, Error> {
        if lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod() {
            return Err(Error::Shape(format!(
                "law {}: sides {} -> {} and {} -> {} are not parallel",
                self.id,
                lhs.dom(),
                lhs.cod(),
                rhs.dom(),
                rhs.cod()
            )));
        }
        self.instances += 1;
        match lhs.first_difference(rhs) {
            None => Ok(true),
            Some(d) => {
                if self.witness.is_none() {
                    self.witness = Some(Witness {
                        probes: probes.to_vec(),
                        input: lhs.dom().basis_name(d.col),
                        output: lhs.cod().basis_name(d.row),
                        lhs: d.lhs,
                        rhs: d.rhs,
                    });
                }
                Ok(false)
            }
        }
    }

    /// Records a failure that is not a matrix comparison (e.g. a singular
    /// component).
    pub fn fail_with(&mut self, w: Witness) {
        self.instances += 1;
        if self.witness.is_none() {
            self.witness = Some(w);
        }
    }

    pub fn failed(&self) -> bool {
        self.witness.is_some()
    }

    pub fn finish(self) -> LawResult {
        LawResult {
            id: self.id,
            status: if self.witness.is_some() {
                LawStatus::Fail
            } else {
                LawStatus::Pass
            },
            instances: self.instances,
            witness: self.witness,
        }
    }

    /// Like `finish`, but a failure is promoted to `Inconsistent` when the
    /// law's premises all passed.
    pub fn finish_implied(self, premises_hold: bool) -> LawResult {
        let mut r = self.finish();
        if premises_hold && r.status == LawStatus::Fail {
            r.status = LawStatus::Inconsistent;
        }
        r
    }
}
