//! Machine-readable check reports.

use serde::{Deserialize, Serialize};

use crate::compositions::Composition;
use crate::scalars::ParamSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Composition>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, lambda: Option<&[i64]>, ok: bool) -> Check {
        Check {
            name: name.into(),
            lambda: lambda.map(|l| l.to_vec()),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: None,
        }
    }

    pub fn pass(name: impl Into<String>, lambda: Option<&[i64]>) -> Check {
        Check::new(name, lambda, true)
    }

    pub fn fail(
        name: impl Into<String>,
        lambda: Option<&[i64]>,
        witness: impl Into<String>,
    ) -> Check {
        Check {
            witness: Some(witness.into()),
            ..Check::new(name, lambda, false)
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    #[serde(rename = "B", skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    #[serde(rename = "S", skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
}

impl From<&ParamSpec> for Params {
    fn from(p: &ParamSpec) -> Params {
        Params {
            n: p.n(),
            k: Some(p.k()),
            r: Some(p.r()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub params: Params,
    #[serde(rename = "box")]
    pub bound: i64,
    pub checks: Vec<Check>,
    pub counts: Counts,
}

impl Report {
    pub fn new(params: Params, bound: i64) -> Report {
        Report {
            params,
            bound,
            checks: Vec::new(),
            counts: Counts::default(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// Sorts checks by name, then weight, so the report does not depend on
    /// the order in which parallel work finished.
    pub fn sort(&mut self) {
        self.checks
            .sort_by(|a, b| a.name.cmp(&b.name).then_with(|| a.lambda.cmp(&b.lambda)));
    }

    /// JSON with sorted keys.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}
