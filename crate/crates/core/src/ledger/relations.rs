use super::{Certificate, InequalityId, Verdict};
use crate::error::{Error, Result};
use InequalityId::*;

/// One internal ordering between certificates of the same run. `holds` is
/// `None` when an involved certificate was not applicable.
#[derive(Debug, Clone, PartialEq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    /// No checked relation failed.
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds != Some(false))
    }
}

/// Relation names in report order.
pub const RELATION_NAMES: [&str; 6] = [
    "I-2.8a<=I-2.8b",
    "I-2.8b=I-1.2",
    "I-2.8a<=I-2.6",
    "I-3.15~I-3.16",
    "I-2.14<=I-2.13",
    "I-2.2=>I-2.6",
];

fn le(a: f64, b: f64, tol: f64) -> bool {
    a <= b + tol * a.abs().max(b.abs()).max(1.0)
}

/// Checks the orderings that hold between catalog entries on any input:
/// the sharp defect gap is below the coarse one and below the
/// `r²/(2|λ|)` gap, the coarse gap coincides with the prior one, the two
/// segment rearrangements agree, the real-part refinement sits below
/// `‖T‖²`, and a verified defect bound implies the coarser gap.
pub fn cross_relations(certs: &[Certificate]) -> Result<RelationReport> {
    let get = |id: InequalityId| -> Result<&Certificate> {
        certs
            .iter()
            .find(|c| c.id == id)
            .ok_or_else(|| Error::MissingCertificate(id.as_str().to_string()))
    };
    let applicable = |c: &Certificate| c.verdict != Verdict::NotApplicable;
    let pair = |a: &Certificate, b: &Certificate, f: &dyn Fn(&Certificate, &Certificate) -> bool| {
        if applicable(a) && applicable(b) {
            Some(f(a, b))
        } else {
            None
        }
    };

    let sharp = get(DefectGapSharp)?;
    let coarse = get(DefectGapCoarse)?;
    let prior = get(PriorNormGap)?;
    let gap = get(DefectGap)?;
    let ratio = get(SegmentRatio)?;
    let relative = get(SegmentRelativeGap)?;
    let refinement = get(RealPartRefinement)?;
    let convexity = get(RealPartConvexity)?;
    let bound = get(DefectBound)?;

    let checks = vec![
        pair(sharp, coarse, &|a, b| le(a.rhs, b.rhs, 1e-12)),
        pair(coarse, prior, &|a, b| le(a.rhs, b.rhs, 1e-12) && le(b.rhs, a.rhs, 1e-12)),
        pair(sharp, gap, &|a, b| le(a.rhs, b.rhs, 1e-12)),
        pair(ratio, relative, &|a, b| a.verdict == b.verdict),
        pair(refinement, convexity, &|a, b| a.rhs <= b.rhs + 1e-7),
        pair(bound, gap, &|a, b| a.slack < 0.0 || b.slack >= -1e-12 * b.rhs.abs().max(1.0)),
    ];
    Ok(RelationReport {
        checks: RELATION_NAMES
            .iter()
            .zip(checks)
            .map(|(&name, holds)| RelationCheck { name, holds })
            .collect(),
    })
}
