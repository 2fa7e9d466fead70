//! Machine-readable results of the verifiers.

use serde::{Deserialize, Serialize};

use crate::arith::{Rat, RationalFunction, SeriesInvU};
use crate::rep::Recipe;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_ok(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Status::Pass
    }
}

/// Where a check went wrong. Only the fields relevant to the check are set.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub row: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub col: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub u: Option<Rat>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub v: Option<Rat>,
    /// Generator indices, 1-based.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tuple: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub message: Option<String>,
}

impl Witness {
    pub fn message(msg: impl Into<String>) -> Self {
        Witness {
            message: Some(msg.into()),
            ..Default::default()
        }
    }

    pub fn at(row: usize, col: usize, u: Rat, v: Option<Rat>) -> Self {
        Witness {
            row: Some(row),
            col: Some(col),
            u: Some(u),
            v,
            ..Default::default()
        }
    }

    pub fn with_u(mut self, u: Rat) -> Self {
        self.u = Some(u);
        self
    }

    pub fn with_tuple(mut self, t: &[usize]) -> Self {
        self.tuple = Some(t.to_vec());
        self
    }

    pub fn with_message(mut self, msg: impl Into<String>) -> Self {
        self.message = Some(msg.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub grid: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub module: Option<Recipe>,
    pub status: Status,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c_series: Option<RationalFunction>,
    /// Expansion of `c(u)` at infinity.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c_expansion: Option<SeriesInvU>,
}

impl Report {
    pub fn new(check: &str, n: usize) -> Self {
        Report {
            check: check.to_string(),
            n,
            grid: None,
            module: None,
            status: Status::Pass,
            witness: None,
            c_series: None,
            c_expansion: None,
        }
    }

    pub fn grid(mut self, g: usize) -> Self {
        self.grid = Some(g);
        self
    }

    pub fn module(mut self, r: Recipe) -> Self {
        self.module = Some(r);
        self
    }

    /// Pass when `witness` is `None`, fail otherwise.
    pub fn outcome(mut self, witness: Option<Witness>) -> Self {
        self.status = Status::from_ok(witness.is_none());
        self.witness = witness;
        self
    }

    pub fn passed(&self) -> bool {
        self.status.is_pass()
    }

    pub fn summary(&self) -> String {
        let what = match &self.module {
            Some(m) => format!(" [{}]", m.describe()),
            None => String::new(),
        };
        let mut line = format!(
            "{:<8} n={}{}: {}",
            self.check,
            self.n,
            what,
            if self.passed() { "pass" } else { "FAIL" }
        );
        if let Some(w) = &self.witness {
            line.push_str(&format!(" {}", serde_json::to_string(w).unwrap_or_default()));
        }
        line
    }
}
