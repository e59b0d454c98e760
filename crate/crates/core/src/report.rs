use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one verification run, serialized as
/// `{check, parameters, status, counterexample?, …}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub check: String,
    pub parameters: BTreeMap<String, String>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matched: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signed_cardinality: Option<i64>,
}

impl ValidationReport {
    pub fn new(check: &str, parameters: BTreeMap<String, String>) -> Self {
        ValidationReport {
            check: check.to_string(),
            parameters,
            status: Status::Pass,
            counterexample: None,
            family_size: None,
            matched: None,
            fixed: None,
            signed_cardinality: None,
        }
    }

    pub fn stats(&mut self, family_size: usize, matched: usize, fixed: usize, signed: i64) {
        self.family_size = Some(family_size);
        self.matched = Some(matched);
        self.fixed = Some(fixed);
        self.signed_cardinality = Some(signed);
    }

    pub fn fail(mut self, counterexample: impl Into<String>) -> Self {
        self.status = Status::Fail;
        self.counterexample = Some(counterexample.into());
        self
    }

    pub fn pass(mut self) -> Self {
        self.status = Status::Pass;
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {} [{}]", self.check, params.join(", "))?;
        if let (Some(size), Some(fixed)) = (self.family_size, self.fixed) {
            write!(f, " family={size} fixed={fixed}")?;
        }
        if let Some(c) = &self.counterexample {
            write!(f, " counterexample: {c}")?;
        }
        Ok(())
    }
}
