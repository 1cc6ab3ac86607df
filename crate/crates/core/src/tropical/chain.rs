use serde::Serialize;

use super::{ConeReport, RealRadical, RstarVerdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainViolation {
    pub cone: Option<usize>,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainCheck {
    pub passed: bool,
    pub checked: usize,
    pub violations: Vec<ChainViolation>,
}

/// Check `YES ⇒ IN ⇒ in Trop` on every report, plus `not in Trop ⇒ OUT`.
pub fn verify_chain(reports: &[ConeReport]) -> ChainCheck {
    let mut violations = Vec::new();
    let mut flag = |r: &ConeReport, message: &str| {
        violations.push(ChainViolation {
            cone: r.cone_id,
            message: message.to_string(),
        })
    };
    for r in reports {
        if r.trop_rad == RealRadical::Yes && !r.in_trop {
            flag(r, "real radical tropical verdict YES outside the tropical variety");
        }
        if r.trop_rad == RealRadical::Yes && r.in_trop_rstar != RstarVerdict::In {
            flag(r, "real radical tropical verdict YES but not IN the real tropical variety");
        }
        if r.in_trop_rstar == RstarVerdict::In && !r.in_trop {
            flag(r, "IN the real tropical variety but outside the tropical variety");
        }
        if !r.in_trop && r.in_trop_rstar != RstarVerdict::Out {
            flag(r, "outside the tropical variety but not OUT");
        }
    }
    ChainCheck {
        passed: violations.is_empty(),
        checked: reports.len(),
        violations,
    }
}
