use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::series::{Divergence, QSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    VerifiedToOrder,
    CertificateVerified,
    ConjectureConsistent,
    Inconclusive,
    #[serde(rename = "FAILED")]
    Failed,
}

impl Status {
    pub fn is_failure(self) -> bool {
        self == Status::Failed
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::VerifiedToOrder => "verified-to-order",
            Status::CertificateVerified => "certificate-verified",
            Status::ConjectureConsistent => "conjecture-consistent",
            Status::Inconclusive => "inconclusive",
            Status::Failed => "FAILED",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Whether a statement is a theorem or only conjectured; conjectures never report as verified.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Standing {
    Theorem,
    Conjecture,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub task: String,
    pub statement: String,
    pub status: Status,
    pub order: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divergence: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl VerificationReport {
    pub fn new(task: impl Into<String>, statement: impl Into<String>, status: Status, order: i64) -> Self {
        VerificationReport {
            task: task.into(),
            statement: statement.into(),
            status,
            order,
            wall_ms: None,
            divergence: None,
            detail: None,
        }
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn failed(task: impl Into<String>, statement: impl Into<String>, order: i64, why: impl Into<String>) -> Self {
        Self::new(task, statement, Status::Failed, order).with_detail(why)
    }

    /// Outcome of an exact comparison: `Ok(None)` means agreement to `order`.
    pub fn from_comparison(
        task: impl Into<String>,
        statement: impl Into<String>,
        standing: Standing,
        order: i64,
        cmp: Result<Option<Divergence>>,
    ) -> Self {
        let pass = match standing {
            Standing::Theorem => Status::VerifiedToOrder,
            Standing::Conjecture => Status::ConjectureConsistent,
        };
        match cmp {
            Ok(None) => Self::new(task, statement, pass, order),
            Ok(Some(d)) => {
                let mut r = Self::new(task, statement, Status::Failed, order);
                r.divergence = Some(d.to_string());
                r
            }
            Err(e) => Self::failed(task, statement, order, e.to_string()),
        }
    }

    pub fn compare(
        task: impl Into<String>,
        statement: impl Into<String>,
        standing: Standing,
        order: i64,
        lhs: Result<QSeries>,
        rhs: Result<QSeries>,
    ) -> Self {
        let cmp = lhs.and_then(|l| rhs.and_then(|r| QSeries::equal_to_order(&l, &r, order)));
        Self::from_comparison(task, statement, standing, order, cmp)
    }

    pub fn passed(&self) -> bool {
        !self.status.is_failure()
    }

    /// One line; wall time only appears when it was recorded.
    pub fn line(&self) -> String {
        let mut s = format!("{:<22} {:<34} order={:<3} {}", self.status.as_str(), self.task, self.order, self.statement);
        if let Some(d) = &self.divergence {
            s.push_str(&format!(" | first divergence: {d}"));
        }
        if let Some(d) = &self.detail {
            s.push_str(&format!(" | {d}"));
        }
        if let Some(ms) = self.wall_ms {
            s.push_str(&format!(" | {ms:.1} ms"));
        }
        s
    }
}
