use sha2::{Digest, Sha256};

use super::{hex, Certificate, InequalityId, VectorParams};
use crate::error::{Error, Result};
use crate::hypotheses::{vector_equiv_margins, HypothesisReport, RouteResult};
use crate::linalg::ComplexVector;
use InequalityId::*;

fn vector_digest(id: InequalityId, y: &ComplexVector, a: &ComplexVector, params: &VectorParams) -> String {
    let mut h = Sha256::new();
    h.update(id.as_str().as_bytes());
    h.update((y.dim() as u64).to_le_bytes());
    for z in y.as_slice().iter().chain(a.as_slice()) {
        h.update(z.re.to_bits().to_le_bytes());
        h.update(z.im.to_bits().to_le_bytes());
    }
    let values = match params {
        VectorParams::Radius(r) => vec![*r],
        VectorParams::Disk(d) => vec![d.gamma.re, d.gamma.im, d.big_gamma.re, d.big_gamma.im],
    };
    for v in values {
        h.update(v.to_bits().to_le_bytes());
    }
    hex(&h.finalize())
}

/// `‖y − a‖ ≤ r ≤ ‖a‖`, one route per side.
fn ball_hypothesis(y: &ComplexVector, a: &ComplexVector, r: f64) -> Result<HypothesisReport> {
    let dist = y.sub(a)?.norm();
    let na = a.norm();
    let ball = RouteResult::from_margin("ball", (r - dist) / r.max(1.0));
    let below = RouteResult::from_margin("radius-below-norm", (na - r) / na.max(1.0));
    Ok(HypothesisReport::all(vec![
        HypothesisReport::single(ball),
        HypothesisReport::single(below),
    ]))
}

/// Evaluates a vector lemma. For the radius family the arguments are
/// `(y, a)` with `VectorParams::Radius(r)`; for the disk family they are
/// `(z, y)` with `VectorParams::Disk`, and the hypothesis is
/// `Re⟨Γy − z, z − γy⟩ ≥ 0` (equivalently `‖z − (γ+Γ)/2·y‖ ≤ |Γ−γ|/2·‖y‖`).
pub fn evaluate_vector(
    id: InequalityId,
    y: &ComplexVector,
    a: &ComplexVector,
    params: &VectorParams,
) -> Result<Certificate> {
    if y.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: y.dim(),
            found: a.dim(),
        });
    }
    let n = y.dim();
    let digest = vector_digest(id, y, a, params);
    let wrong = |expected| Error::WrongParamKind {
        id: id.as_str().to_string(),
        expected,
    };
    match id {
        VecRealSchwarz | VecRealLower | VecModulusSchwarz => {
            let VectorParams::Radius(r) = *params else {
                return Err(wrong("radius"));
            };
            let hyp = Some(ball_hypothesis(y, a, r)?);
            let (ny, na) = (y.norm(), a.norm());
            let ip = y.inner_product(a);
            let root = (na * na - r * r).max(0.0).sqrt();
            let (lhs, rhs) = match id {
                VecRealSchwarz => (ny * ny * na * na - ip.re * ip.re, r * r * ny * ny),
                VecRealLower => (ny * root, ip.re),
                _ => (
                    ny * ny * na * na - ip.norm_sqr(),
                    2.0 * ip.norm() * na * (na - root),
                ),
            };
            Ok(Certificate::evaluated(id, n, digest, hyp, lhs, rhs, None))
        }
        VecDiskGap | VecDiskRatio | VecDiskQuartic => {
            let VectorParams::Disk(p) = *params else {
                return Err(wrong("disk"));
            };
            // Arguments are (z, y) for this family.
            let (z, y) = (y, a);
            let sum = p.big_gamma + p.gamma;
            let re = p.re_product();
            if id == VecDiskGap && sum.norm() == 0.0 {
                return Ok(Certificate::not_applicable(id, n, digest, "Gamma = -gamma".into()));
            }
            if id != VecDiskGap && re <= 0.0 {
                return Ok(Certificate::not_applicable(
                    id,
                    n,
                    digest,
                    format!("Re(Gamma conj(gamma)) = {re} is not positive"),
                ));
            }
            let lo = y.scaled(p.gamma);
            let hi = y.scaled(p.big_gamma);
            let (m_inner, m_ball) = vector_equiv_margins(z, &lo, &hi)?;
            let inner = RouteResult::from_margin("inner-product", m_inner);
            let ball = RouteResult::from_margin("ball", m_ball);
            let hyp = Some(HypothesisReport {
                satisfied: inner.holds,
                agreement: inner.holds == ball.holds,
                routes: vec![inner, ball],
            });
            let (nz, ny) = (z.norm(), y.norm());
            let ip = z.inner_product(y);
            let diff = (p.big_gamma - p.gamma).norm();
            let (lhs, rhs) = match id {
                VecDiskGap => (
                    nz * ny - (sum.conj() * ip).re / sum.norm(),
                    0.25 * diff * diff / sum.norm() * ny * ny,
                ),
                VecDiskRatio => (nz * ny, sum.norm() / (2.0 * re.sqrt()) * ip.norm()),
                _ => (
                    nz * nz * ny * ny - ip.norm_sqr(),
                    (sum.norm() - 2.0 * re.sqrt()) * ip.norm() * ny * ny,
                ),
            };
            Ok(Certificate::evaluated(id, n, digest, hyp, lhs, rhs, None))
        }
        _ => Err(Error::InvalidParameter(format!("{id} is not a vector inequality"))),
    }
}
