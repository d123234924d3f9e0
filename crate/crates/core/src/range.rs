//! Numerical range W(A), numerical radius w(A), spectral radius and the
//! resolvent gap.
//!
//! Everything here is driven by the support function
//! `h(θ) = λ_max(Re(e^{-iθ} A))` of the convex set W(A). A sweep over θ gives
//! boundary points `⟨A v_θ, v_θ⟩` (lower bounds) and supporting lines (upper
//! bounds). The circumscribed polygon formed by consecutive supporting lines
//! encloses W(A), which turns the grid into a certified enclosure of w(A);
//! arcs whose enclosure is still too loose are bisected until the requested
//! tolerance is met.

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{
    adjoint, eigenvalues, lambda_max_with_vector, min_gain, operator_norm, shift, ComplexMatrix,
    ComplexVector, C64,
};

/// Initial number of equispaced support angles.
pub const INITIAL_GRID: usize = 512;
/// Hard cap on support evaluations for one enclosure.
pub const MAX_GRID: usize = 1 << 20;
const ROUNDING_PAD: f64 = 16.0 * f64::EPSILON;

#[derive(Debug, Clone)]
pub struct RadiusResult {
    /// Best lower bound: `|⟨A·witness, witness⟩|`.
    pub value: f64,
    /// Certified upper bound on w(A).
    pub upper: f64,
    pub theta_star: f64,
    pub witness: ComplexVector,
    /// Number of support evaluations spent.
    pub evaluations: usize,
}

#[derive(Debug, Clone)]
pub struct BoundaryPolyline {
    pub thetas: Vec<f64>,
    pub points: Vec<C64>,
    pub witnesses: Vec<ComplexVector>,
}

#[derive(Debug, Clone)]
pub(crate) struct SupportSample {
    pub theta: f64,
    pub h: f64,
    pub z: C64,
    pub v: ComplexVector,
}

/// Evaluates `h(θ)` with a boundary witness, reusing the Hermitian and
/// skew-Hermitian parts of `A`.
pub(crate) struct SupportEvaluator {
    a: ComplexMatrix,
    re_part: ComplexMatrix,
    im_part: ComplexMatrix,
}

impl SupportEvaluator {
    pub fn new(a: &ComplexMatrix) -> Self {
        let adj = adjoint(a);
        let n = a.dim();
        let half = C64::new(0.5, 0.0);
        let neg_half_i = C64::new(0.0, -0.5);
        let re_part = ComplexMatrix::from_inner_unchecked(nalgebra::DMatrix::from_fn(n, n, |i, j| {
            (a.get(i, j) + adj.get(i, j)) * half
        }));
        let im_part = ComplexMatrix::from_inner_unchecked(nalgebra::DMatrix::from_fn(n, n, |i, j| {
            (a.get(i, j) - adj.get(i, j)) * neg_half_i
        }));
        Self {
            a: a.clone(),
            re_part,
            im_part,
        }
    }

    pub fn eval(&self, theta: f64) -> SupportSample {
        let (s, c) = theta.sin_cos();
        let n = self.a.dim();
        let h = ComplexMatrix::from_inner_unchecked(nalgebra::DMatrix::from_fn(n, n, |i, j| {
            self.re_part.get(i, j) * c + self.im_part.get(i, j) * s
        }));
        let (lmax, v) = lambda_max_with_vector(&h);
        let z = self.a.quad_form(&v).expect("dimensions agree");
        SupportSample {
            theta,
            h: lmax,
            z,
            v,
        }
    }

    pub fn eval_many(&self, thetas: &[f64]) -> Vec<SupportSample> {
        thetas.par_iter().map(|&t| self.eval(t)).collect()
    }
}

pub(crate) fn uniform_thetas(count: usize) -> Vec<f64> {
    (0..count).map(|k| TAU * k as f64 / count as f64).collect()
}

/// Length of arc `k`, from sample `k` to sample `k+1` (cyclically).
pub(crate) fn arc_end(samples: &[SupportSample], k: usize) -> (f64, f64) {
    let a = samples[k].theta;
    let b = if k + 1 == samples.len() {
        samples[0].theta + TAU
    } else {
        samples[k + 1].theta
    };
    (a, b)
}

/// Inserts the midpoints of the chosen arcs and keeps samples sorted by θ.
pub(crate) fn bisect_arcs(
    eval: &SupportEvaluator,
    samples: Vec<SupportSample>,
    arcs: &[usize],
) -> Vec<SupportSample> {
    let mids: Vec<f64> = arcs
        .iter()
        .map(|&k| {
            let (a, b) = arc_end(&samples, k);
            let m = 0.5 * (a + b);
            if m >= TAU {
                m - TAU
            } else {
                m
            }
        })
        .collect();
    let fresh = eval.eval_many(&mids);
    let mut merged = samples;
    merged.extend(fresh);
    merged.sort_by(|x, y| x.theta.total_cmp(&y.theta));
    merged
}

/// Upper bound on `max h(θ)` over the arc `[a, b]` given exact support
/// values at both ends: the vertex of the wedge cut out by the two supporting
/// lines, intersected with the Lipschitz cone of slope `lip`.
fn arc_support_bound(a: f64, ha: f64, b: f64, hb: f64, lip: f64) -> f64 {
    let half = 0.5 * (b - a);
    let lipschitz = 0.5 * (ha + hb) + lip * half;
    if half <= 0.0 || half >= 0.5 * PI {
        return lipschitz;
    }
    let x = (ha + hb) / (2.0 * half.cos());
    let y = (hb - ha) / (2.0 * half.sin());
    lipschitz.min(x.hypot(y))
}

/// `h(θ) = λ_max((e^{-iθ}A + e^{iθ}A*)/2)` with its unit eigenvector.
pub fn support_value(a: &ComplexMatrix, theta: f64) -> (f64, ComplexVector) {
    let s = SupportEvaluator::new(a).eval(theta);
    (s.h, s.v)
}

/// Certified enclosure `[value, upper]` of the numerical radius with
/// `upper - value <= tol`.
pub fn numerical_radius(a: &ComplexMatrix, tol: f64) -> Result<RadiusResult> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "numerical radius tolerance must be positive, got {tol}"
        )));
    }
    let lip = operator_norm(a);
    let eval = SupportEvaluator::new(a);
    let mut samples = eval.eval_many(&uniform_thetas(INITIAL_GRID));
    loop {
        let (best, lower) = samples
            .iter()
            .enumerate()
            .map(|(k, s)| (k, s.z.norm()))
            .fold((0, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc });
        let bounds: Vec<f64> = (0..samples.len())
            .map(|k| {
                let (a0, b0) = arc_end(&samples, k);
                let hb = samples[(k + 1) % samples.len()].h;
                arc_support_bound(a0, samples[k].h, b0, hb, lip)
            })
            .collect();
        // Pad for rounding in the eigensolver and the wedge vertex.
        let upper = bounds.iter().cloned().fold(lower, f64::max) + ROUNDING_PAD * lip;
        if upper - lower <= tol {
            let s = &samples[best];
            return Ok(RadiusResult {
                value: lower,
                upper,
                theta_star: s.theta,
                witness: s.v.clone(),
                evaluations: samples.len(),
            });
        }
        let split: Vec<usize> = bounds
            .iter()
            .enumerate()
            .filter(|(_, &b)| b > lower + tol)
            .map(|(k, _)| k)
            .collect();
        if split.is_empty() || samples.len() + split.len() > MAX_GRID {
            return Err(Error::ToleranceUnreachable {
                tol,
                points: samples.len(),
                gap: upper - lower,
            });
        }
        samples = bisect_arcs(&eval, samples, &split);
    }
}

/// Boundary points `⟨A v_θ, v_θ⟩` for `count` equispaced support angles.
pub fn range_boundary(a: &ComplexMatrix, count: usize) -> Result<BoundaryPolyline> {
    if count < 3 {
        return Err(Error::InvalidParameter(format!(
            "boundary needs at least 3 points, got {count}"
        )));
    }
    let samples = SupportEvaluator::new(a).eval_many(&uniform_thetas(count));
    let mut out = BoundaryPolyline {
        thetas: Vec::with_capacity(count),
        points: Vec::with_capacity(count),
        witnesses: Vec::with_capacity(count),
    };
    for s in samples {
        out.thetas.push(s.theta);
        out.points.push(s.z);
        out.witnesses.push(s.v);
    }
    Ok(out)
}

/// Largest eigenvalue modulus.
pub fn spectral_radius(a: &ComplexMatrix) -> f64 {
    eigenvalues(a).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `(σ_min(A − zI), dist(z, σ(A)))`.
pub fn resolvent_gap(a: &ComplexMatrix, z: C64) -> (f64, f64) {
    let sigma = min_gain(&shift(a, z));
    let dist = eigenvalues(a)
        .iter()
        .map(|l| (z - l).norm())
        .fold(f64::INFINITY, f64::min);
    (sigma, dist)
}
