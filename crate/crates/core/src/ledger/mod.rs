//! The certificate engine: evaluates each catalog inequality on a matrix (or
//! a pair of vectors) and its parameters, producing LHS, RHS, slack and a
//! verdict.
//!
//! Numerical radii enter through their certified upper bounds. Every
//! occurrence of `w(·)` in the catalog sits on the side where a larger value
//! helps the inequality, so the enclosure tolerance can never manufacture a
//! violation.

mod catalog;
mod csv;
mod relations;
mod vector;

use std::cell::OnceCell;

use sha2::{Digest, Sha256};

pub use catalog::InequalityId;
pub use csv::{certificates_csv, CERTIFICATE_HEADER};
pub use relations::{cross_relations, RelationCheck, RelationReport, RELATION_NAMES};
pub use vector::evaluate_vector;

use crate::error::{Error, Result};
use crate::hypotheses::{
    check_c_cc, check_d_dd_ddd, check_defect_bound, check_segment, CombinationParams, DiskParams,
    HypothesisReport, LambdaRadius, PriorParams, RouteResult, SegmentParams,
};
use crate::linalg::{
    adjoint, hermitian_part, matadd, matmul, operator_norm, require_normal, scale, svd_extremes,
    ComplexMatrix, ComplexVector, SvdExtremes, C64,
};
use crate::range::{numerical_radius, RadiusResult};
use crate::sphere::{delta, mu, xi, InfimumEstimate};
use InequalityId::*;

/// Relative slack tolerance: verified iff `slack ≥ −SLACK_TOL·max(1, |rhs|)`.
pub const SLACK_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    Violated,
    HypothesisFailed,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::Violated => "violated",
            Verdict::HypothesisFailed => "hypothesis_failed",
            Verdict::NotApplicable => "not_applicable",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Certificate {
    pub id: InequalityId,
    pub n: usize,
    /// `None` when the inequality carries no hypothesis beyond normality, or
    /// when it was not applicable.
    pub hypothesis: Option<HypothesisReport>,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub verdict: Verdict,
    /// A unit vector at which the sphere-defined left side is attained.
    pub witness: Option<ComplexVector>,
    pub inputs_digest: String,
    /// Why the certificate is not applicable, if it is not.
    pub note: Option<String>,
}

impl Certificate {
    pub fn hyp_status(&self) -> &'static str {
        match (&self.hypothesis, self.verdict) {
            (_, Verdict::NotApplicable) => "not_applicable",
            (None, _) => "not_required",
            (Some(h), _) if h.satisfied => "satisfied",
            (Some(_), _) => "failed",
        }
    }

    pub fn hypothesis_ok(&self) -> bool {
        self.hypothesis.as_ref().is_none_or(|h| h.satisfied)
    }

    pub(crate) fn not_applicable(id: InequalityId, n: usize, digest: String, note: String) -> Self {
        Certificate {
            id,
            n,
            hypothesis: None,
            lhs: f64::NAN,
            rhs: f64::NAN,
            slack: f64::NAN,
            verdict: Verdict::NotApplicable,
            witness: None,
            inputs_digest: digest,
            note: Some(note),
        }
    }

    pub(crate) fn evaluated(
        id: InequalityId,
        n: usize,
        digest: String,
        hypothesis: Option<HypothesisReport>,
        lhs: f64,
        rhs: f64,
        witness: Option<ComplexVector>,
    ) -> Self {
        let slack = rhs - lhs;
        let hyp_ok = hypothesis.as_ref().is_none_or(|h| h.satisfied);
        let verdict = if !hyp_ok {
            Verdict::HypothesisFailed
        } else if slack >= -SLACK_TOL * rhs.abs().max(1.0) {
            Verdict::Verified
        } else {
            Verdict::Violated
        };
        Certificate {
            id,
            n,
            hypothesis,
            lhs,
            rhs,
            slack,
            verdict,
            witness,
            inputs_digest: digest,
            note: None,
        }
    }
}

/// Parameters of every inequality family. Absent entries make the
/// corresponding ids not applicable in [`evaluate_all`].
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ParamSet {
    /// `(λ, r)` with `‖T − λT*‖ ≤ r`.
    pub lambda: Option<LambdaRadius>,
    /// `(λ, r)` for the minimum-gain family; falls back to `lambda`.
    pub lambda_gain: Option<LambdaRadius>,
    pub prior: Option<PriorParams>,
    pub combination: Option<CombinationParams>,
    pub disk: Option<DiskParams>,
    pub segment: Option<SegmentParams>,
}

impl ParamSet {
    fn gain(&self) -> Option<LambdaRadius> {
        self.lambda_gain.or(self.lambda)
    }

    fn digest_into(&self, h: &mut Sha256) {
        let mut put = |tag: &str, values: &[f64]| {
            h.update(tag.as_bytes());
            for v in values {
                h.update(v.to_bits().to_le_bytes());
            }
        };
        if let Some(p) = self.lambda {
            put("lambda", &[p.lambda.re, p.lambda.im, p.r]);
        }
        if let Some(p) = self.lambda_gain {
            put("gain", &[p.lambda.re, p.lambda.im, p.r]);
        }
        if let Some(p) = self.prior {
            put("prior", &[p.rho]);
        }
        if let Some(p) = self.combination {
            put("comb", &[p.alpha.re, p.alpha.im, p.beta.re, p.beta.im]);
        }
        if let Some(p) = self.disk {
            put("disk", &[p.gamma.re, p.gamma.im, p.big_gamma.re, p.big_gamma.im]);
        }
        if let Some(p) = self.segment {
            put("segment", &[p.m, p.big_m]);
        }
    }
}

/// Parameters of the vector lemmas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum VectorParams {
    Radius(f64),
    Disk(DiskParams),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    /// Numerical radii are enclosed to `radius_tol·‖B‖`.
    pub radius_tol: f64,
    /// Random restarts of the δ search.
    pub delta_restarts: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            radius_tol: 1e-8,
            delta_restarts: 4,
        }
    }
}

pub(crate) fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn matrix_digest(id: InequalityId, a: &ComplexMatrix, params: &ParamSet) -> String {
    let mut h = Sha256::new();
    h.update(id.as_str().as_bytes());
    h.update((a.dim() as u64).to_le_bytes());
    for z in a.entries_row_major() {
        h.update(z.re.to_bits().to_le_bytes());
        h.update(z.im.to_bits().to_le_bytes());
    }
    params.digest_into(&mut h);
    hex(&h.finalize())
}

/// Per-matrix quantities shared by every certificate, computed on demand.
pub struct Evaluator<'a> {
    a: &'a ComplexMatrix,
    opts: EvalOptions,
    svd: OnceCell<SvdExtremes>,
    w_a: OnceCell<Result<RadiusResult>>,
    w_a2: OnceCell<Result<RadiusResult>>,
    xi: OnceCell<InfimumEstimate>,
    mu: OnceCell<InfimumEstimate>,
    delta: OnceCell<Result<InfimumEstimate>>,
}

/// Outcome of one evaluator before the verdict is attached.
enum Outcome {
    NotApplicable(String),
    Evaluated {
        hypothesis: Option<HypothesisReport>,
        lhs: f64,
        rhs: f64,
        witness: Option<ComplexVector>,
    },
}

fn needs(id: InequalityId, kind: &'static str) -> Error {
    Error::WrongParamKind {
        id: id.as_str().to_string(),
        expected: kind,
    }
}

impl<'a> Evaluator<'a> {
    /// Fails with `NotNormal` unless `a` is normal within tolerance.
    pub fn new(a: &'a ComplexMatrix, opts: EvalOptions) -> Result<Self> {
        require_normal(a)?;
        if !(opts.radius_tol > 0.0) || opts.delta_restarts == 0 {
            return Err(Error::InvalidParameter(
                "radius tolerance must be positive and delta restarts at least one".into(),
            ));
        }
        Ok(Self {
            a,
            opts,
            svd: OnceCell::new(),
            w_a: OnceCell::new(),
            w_a2: OnceCell::new(),
            xi: OnceCell::new(),
            mu: OnceCell::new(),
            delta: OnceCell::new(),
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        self.a
    }

    fn svd(&self) -> &SvdExtremes {
        self.svd.get_or_init(|| svd_extremes(self.a))
    }

    fn norm(&self) -> f64 {
        self.svd().sigma_max
    }

    fn radius_of(&self, b: &ComplexMatrix) -> Result<RadiusResult> {
        let nb = operator_norm(b);
        let tol = if nb > 0.0 { self.opts.radius_tol * nb } else { self.opts.radius_tol };
        numerical_radius(b, tol)
    }

    /// Certified upper bound on `w(A)`.
    pub fn w_a(&self) -> Result<f64> {
        let r = self.w_a.get_or_init(|| self.radius_of(self.a));
        r.as_ref().map(|r| r.upper).map_err(Clone::clone)
    }

    /// Certified upper bound on `w(A²)`.
    pub fn w_a2(&self) -> Result<f64> {
        let r = self.w_a2.get_or_init(|| {
            let a2 = matmul(self.a, self.a).expect("square");
            self.radius_of(&a2)
        });
        r.as_ref().map(|r| r.upper).map_err(Clone::clone)
    }

    fn xi(&self) -> &InfimumEstimate {
        self.xi.get_or_init(|| xi(self.a))
    }

    fn mu(&self) -> &InfimumEstimate {
        self.mu.get_or_init(|| mu(self.a))
    }

    fn delta(&self) -> Result<&InfimumEstimate> {
        self.delta
            .get_or_init(|| delta(self.a, self.opts.delta_restarts))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Evaluates one catalog id.
    pub fn evaluate(&self, id: InequalityId, params: &ParamSet) -> Result<Certificate> {
        let n = self.a.dim();
        let digest = matrix_digest(id, self.a, params);
        if id.is_vector() {
            return self.evaluate_probe(id, params);
        }
        Ok(match self.compute(id, params)? {
            Outcome::NotApplicable(note) => Certificate::not_applicable(id, n, digest, note),
            Outcome::Evaluated {
                hypothesis,
                lhs,
                rhs,
                witness,
            } => Certificate::evaluated(id, n, digest, hypothesis, lhs, rhs, witness),
        })
    }

    /// One certificate per catalog id, in catalog order; missing parameters
    /// give `not_applicable`.
    pub fn evaluate_all(&self, params: &ParamSet) -> Result<Vec<Certificate>> {
        InequalityId::ALL
            .iter()
            .map(|&id| match self.evaluate(id, params) {
                Err(Error::WrongParamKind { expected, .. }) => Ok(Certificate::not_applicable(
                    id,
                    self.a.dim(),
                    matrix_digest(id, self.a, params),
                    format!("no {expected} parameters"),
                )),
                other => other,
            })
            .collect()
    }

    /// Vector lemmas instantiated at the top right singular vector `x`:
    /// `y = Ax`, `a = λA*x` for the radius family and `z = Ax`, `y = A*x`
    /// for the disk family.
    fn evaluate_probe(&self, id: InequalityId, params: &ParamSet) -> Result<Certificate> {
        let x = &self.svd().v_max;
        let ax = self.a.apply(x)?;
        let adx = adjoint(self.a).apply(x)?;
        let mut cert = if id.uses_radius() {
            let p = params.gain().ok_or_else(|| needs(id, "lambda"))?;
            evaluate_vector(id, &ax, &adx.scaled(p.lambda), &VectorParams::Radius(p.r))?
        } else {
            let p = params.disk.ok_or_else(|| needs(id, "disk"))?;
            evaluate_vector(id, &ax, &adx, &VectorParams::Disk(p))?
        };
        cert.inputs_digest = matrix_digest(id, self.a, params);
        Ok(cert)
    }

    fn compute(&self, id: InequalityId, params: &ParamSet) -> Result<Outcome> {
        let a = self.a;
        let nt = self.norm();
        let nt2 = nt * nt;
        let top = Some(self.svd().v_max.clone());
        let done = |hypothesis: Option<HypothesisReport>, lhs: f64, rhs: f64, witness: Option<ComplexVector>| {
            Ok(Outcome::Evaluated {
                hypothesis,
                lhs,
                rhs,
                witness,
            })
        };
        match id {
            PriorNormGap | PriorQuarticGap | DefectBound | DefectGap | DefectGapUnimodular | DefectGapSharp
            | DefectGapCoarse | SphereGap | SphereGapFallback => {
                let p = params.lambda.ok_or_else(|| needs(id, "lambda"))?;
                let l = p.lambda.norm();
                let r2 = p.r * p.r;
                if id == DefectGapUnimodular && (l - 1.0).abs() > 1e-12 {
                    return Ok(Outcome::NotApplicable(format!("|lambda| = {l} is not 1")));
                }
                let hyp = Some(check_defect_bound(a, &p));
                let w2 = self.w_a2()?;
                let gap = nt2 - w2;
                match id {
                    PriorNormGap | DefectGapCoarse => done(hyp, gap, 2.0 * r2 / (1.0 + l).powi(2), top),
                    PriorQuarticGap => done(hyp, nt2 * nt2 - w2 * w2, r2 * nt2 / (l * l), top),
                    DefectBound => done(hyp, (1.0 + l * l) / (2.0 * l) * nt2, w2 + r2 / (2.0 * l), top),
                    DefectGap => done(hyp, gap, r2 / (2.0 * l), top),
                    DefectGapUnimodular => done(hyp, gap, 0.5 * r2, top),
                    DefectGapSharp => done(hyp, gap, r2 / (1.0 + l * l), top),
                    SphereGap => {
                        let d = self.delta()?;
                        let d_safe = if d.certified { d.value.max(0.0) } else { 0.0 };
                        let m = self.mu().lower_bound.max(0.0);
                        done(hyp, gap, r2 - 2.0 * l * d_safe * m, top)
                    }
                    _ => done(hyp, gap, r2, top),
                }
            }
            PriorPowerLarge | PriorPowerSmall => {
                let p = params.lambda.ok_or_else(|| needs(id, "lambda"))?;
                let rho = params.prior.ok_or_else(|| needs(id, "prior"))?.rho;
                let large = id == PriorPowerLarge;
                if large != (rho >= 1.0) {
                    return Ok(Outcome::NotApplicable(format!("rho = {rho} selects the other branch")));
                }
                let l = p.lambda.norm();
                let hyp = Some(HypothesisReport::single(RouteResult::from_margin(
                    "lambda-modulus",
                    1.0 - l,
                )));
                let defect = operator_norm(&crate::linalg::matsub(a, &scale(&adjoint(a), p.lambda))?);
                let coef = if large { rho * rho } else { l.powf(2.0 * rho - 2.0) };
                let lhs = (1.0 + l.powf(2.0 * rho)) * nt2;
                let rhs = 2.0 * l.powf(rho) * self.w_a2()? + coef * defect * defect;
                done(hyp, lhs, rhs, top)
            }
            CombinationUpper | CombinationLower | RealPartRefinement => {
                let (alpha, beta) = if id == RealPartRefinement {
                    (C64::new(0.5, 0.0), C64::new(0.5, 0.0))
                } else {
                    let c = params.combination.ok_or_else(|| needs(id, "combination"))?;
                    (c.alpha, c.beta)
                };
                let weight = alpha.norm_sqr() + beta.norm_sqr();
                let cross = 2.0 * (alpha * beta).norm() * self.w_a2()?;
                let sign = if id == CombinationLower { -beta } else { beta };
                let comb = matadd(&scale(a, alpha), &scale(&adjoint(a), sign))?;
                let s = svd_extremes(&comb);
                let comb2 = s.sigma_max * s.sigma_max;
                if id == CombinationLower {
                    done(None, weight * nt2, comb2 + cross, top)
                } else {
                    done(None, comb2, weight * nt2 + cross, Some(s.v_max))
                }
            }
            RealPartConvexity => {
                let s = svd_extremes(&hermitian_part(a));
                done(None, s.sigma_max * s.sigma_max, nt2, Some(s.v_max))
            }
            GainQuarticGap | GainRatio | GainRadiusGap => {
                let p = params.gain().ok_or_else(|| needs(id, "lambda"))?;
                let l = p.lambda.norm();
                let r2 = p.r * p.r;
                let hyp = Some(check_c_cc(a, &p)?);
                let w2 = self.w_a2()?;
                let xi = self.xi();
                match id {
                    GainQuarticGap => done(hyp, nt2 * nt2 - w2 * w2, r2 * nt2, top),
                    GainRatio => {
                        let lhs = (xi.value * xi.value - r2 / (l * l)).max(0.0).sqrt();
                        let rhs = if nt > 0.0 { w2 / nt } else { 0.0 };
                        done(hyp, lhs, rhs, Some(xi.witness.clone()))
                    }
                    _ => {
                        let inner = (l * l * xi.value * xi.value - r2).max(0.0).sqrt();
                        let rhs = 2.0 * self.w_a()? * nt * (l * nt - inner);
                        done(hyp, nt2 * nt2 - w2 * w2, rhs, top)
                    }
                }
            }
            DiskGap | DiskRatio | DiskQuarticGap => {
                let p = params.disk.ok_or_else(|| needs(id, "disk"))?;
                let sum = (p.big_gamma + p.gamma).norm();
                let diff = (p.big_gamma - p.gamma).norm();
                let re = p.re_product();
                if id == DiskGap && sum == 0.0 {
                    return Ok(Outcome::NotApplicable("Gamma = -gamma".into()));
                }
                if id != DiskGap && re <= 0.0 {
                    return Ok(Outcome::NotApplicable(format!("Re(Gamma conj(gamma)) = {re} is not positive")));
                }
                let hyp = Some(check_d_dd_ddd(a, &p));
                let w2 = self.w_a2()?;
                match id {
                    DiskGap => done(hyp, nt2 - w2, 0.25 * diff * diff / sum * nt2, top),
                    DiskRatio => done(hyp, nt2, sum / (2.0 * re.sqrt()) * w2, top),
                    _ => done(hyp, nt2 * nt2 - w2 * w2, (sum - 2.0 * re.sqrt()) * w2 * nt2, top),
                }
            }
            SegmentGap | SegmentRatio | SegmentRelativeGap | SegmentQuarticGap => {
                let p = params.segment.ok_or_else(|| needs(id, "segment"))?;
                let hyp = Some(check_segment(a, &p)?);
                let (m, big_m) = (p.m, p.big_m);
                let w2 = self.w_a2()?;
                let root = (m * big_m).sqrt();
                let split = (big_m.sqrt() - m.sqrt()).powi(2);
                match id {
                    SegmentGap => done(hyp, nt2 - w2, 0.25 * (big_m - m).powi(2) / (big_m + m) * nt2, top),
                    SegmentRatio => done(hyp, nt2, (big_m + m) / (2.0 * root) * w2, top),
                    SegmentRelativeGap => done(hyp, nt2 - w2, split / (2.0 * root) * w2, top),
                    _ => done(hyp, nt2 * nt2 - w2 * w2, split * w2 * nt2, top),
                }
            }
            VecRealSchwarz | VecRealLower | VecModulusSchwarz | VecDiskGap | VecDiskRatio | VecDiskQuartic => {
                unreachable!("vector ids are evaluated at a probe vector")
            }
        }
    }
}

/// Evaluates one id with default options.
pub fn evaluate(id: InequalityId, a: &ComplexMatrix, params: &ParamSet) -> Result<Certificate> {
    Evaluator::new(a, EvalOptions::default())?.evaluate(id, params)
}

/// Evaluates the whole catalog with default options.
pub fn evaluate_all(a: &ComplexMatrix, params: &ParamSet) -> Result<Vec<Certificate>> {
    Evaluator::new(a, EvalOptions::default())?.evaluate_all(params)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn lambda(l: C64, r: f64) -> ParamSet {
        ParamSet {
            lambda: Some(LambdaRadius::new(l, r).unwrap()),
            ..ParamSet::default()
        }
    }

    #[test]
    fn defect_bound_on_ray_spectrum() {
        let t = ComplexMatrix::diag(&[c(1.0, 1.0), c(2.0, 2.0)]).unwrap();
        let cert = evaluate(DefectBound, &t, &lambda(c(0.0, 1.0), 0.1)).unwrap();
        assert!((cert.lhs - 8.0).abs() < 1e-12);
        assert!((cert.rhs - 8.005).abs() < 1e-6);
        assert_eq!(cert.verdict, Verdict::Verified);
        assert!((cert.slack - 0.005).abs() < 1e-6);
    }

    #[test]
    fn sharp_gap_on_hermitian() {
        let t = ComplexMatrix::diag_real(&[3.0, 1.0]).unwrap();
        let cert = evaluate(DefectGapSharp, &t, &lambda(c(1.0, 0.0), 0.5)).unwrap();
        assert!(cert.lhs.abs() < 1e-6);
        assert!((cert.rhs - 0.125).abs() < 1e-15);
        assert_eq!(cert.verdict, Verdict::Verified);
    }

    #[test]
    fn refinement_is_equality_for_rotation() {
        let t = ComplexMatrix::diag(&[c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
        let cert = evaluate(RealPartRefinement, &t, &ParamSet::default()).unwrap();
        assert!((cert.lhs - 1.0).abs() < 1e-12);
        assert!((cert.rhs - 1.0).abs() < 1e-7);
        assert_eq!(cert.verdict, Verdict::Verified);
        assert_eq!(cert.hyp_status(), "not_required");
    }

    #[test]
    fn gain_ratio_on_identity() {
        let params = lambda(c(1.0, 0.0), 0.1);
        let cert = evaluate(GainRatio, &ComplexMatrix::identity(2), &params).unwrap();
        assert!((cert.lhs - 0.99f64.sqrt()).abs() < 1e-12);
        assert!((cert.rhs - 1.0).abs() < 1e-7);
        assert_eq!(cert.verdict, Verdict::Verified);
    }

    #[test]
    fn disk_ratio_on_diagonal() {
        let params = ParamSet {
            disk: Some(DiskParams::new(c(0.5, 0.0), c(2.0, 0.0)).unwrap()),
            ..ParamSet::default()
        };
        let cert = evaluate(DiskRatio, &ComplexMatrix::diag_real(&[2.0, 1.0]).unwrap(), &params).unwrap();
        assert!((cert.lhs - 4.0).abs() < 1e-12);
        assert!((cert.rhs - 5.0).abs() < 1e-6);
        assert_eq!(cert.verdict, Verdict::Verified);
    }

    #[test]
    fn nilpotent_is_rejected() {
        let nil = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(
            evaluate(DefectBound, &nil, &lambda(c(1.0, 0.0), 1.0)),
            Err(Error::NotNormal { .. })
        ));
    }

    #[test]
    fn missing_params_is_an_error_for_single_ids() {
        let t = ComplexMatrix::identity(2);
        assert!(matches!(
            evaluate(DiskGap, &t, &ParamSet::default()),
            Err(Error::WrongParamKind { .. })
        ));
        let all = evaluate_all(&t, &ParamSet::default()).unwrap();
        assert_eq!(all.len(), InequalityId::ALL.len());
        let disk = all.iter().find(|c| c.id == DiskGap).unwrap();
        assert_eq!(disk.verdict, Verdict::NotApplicable);
        assert!(disk.lhs.is_nan());
    }

    #[test]
    fn unimodular_gap_requires_unit_lambda() {
        let t = ComplexMatrix::identity(2);
        let cert = evaluate(DefectGapUnimodular, &t, &lambda(c(2.0, 0.0), 1.0)).unwrap();
        assert_eq!(cert.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn prior_power_branches() {
        let mut params = lambda(c(0.5, 0.0), 1.0);
        params.prior = Some(PriorParams::new(2.0).unwrap());
        let t = ComplexMatrix::diag_real(&[2.0, 1.0]).unwrap();
        assert_eq!(evaluate(PriorPowerLarge, &t, &params).unwrap().verdict, Verdict::Verified);
        assert_eq!(evaluate(PriorPowerSmall, &t, &params).unwrap().verdict, Verdict::NotApplicable);
        params.lambda = Some(LambdaRadius::new(c(2.0, 0.0), 1.0).unwrap());
        assert_eq!(evaluate(PriorPowerLarge, &t, &params).unwrap().verdict, Verdict::HypothesisFailed);
    }

    #[test]
    fn digest_depends_on_params() {
        let t = ComplexMatrix::identity(2);
        let a = evaluate(DefectGap, &t, &lambda(c(1.0, 0.0), 1.0)).unwrap();
        let b = evaluate(DefectGap, &t, &lambda(c(1.0, 0.0), 2.0)).unwrap();
        assert_ne!(a.inputs_digest, b.inputs_digest);
        assert_eq!(a.inputs_digest.len(), 64);
    }
}
