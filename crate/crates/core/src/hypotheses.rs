//! Hypothesis predicates and parameter fitting.
//!
//! Every "for all unit x" predicate is reduced to a positive-semidefiniteness
//! test of an explicitly formed Hermitian matrix, and checked alongside the
//! equivalent operator-norm formulation. Each formulation is a *route*; a
//! report carries every route with its scaled margin, so callers can see
//! whether the formulations agree.
//!
//! The fitting routines work on the eigenvalues `d_j` of a normal matrix.
//! For normal `A` we have `A − λA* = U diag(d_j − λ conj(d_j)) U*`, so
//! `‖A − λA*‖ = max_j |d_j| |u_j − λ|` with unit phase points
//! `u_j = d_j / conj(d_j)`.

use crate::error::{Error, Result};
use crate::linalg::{
    adjoint, eigenvalues, hermitian_defect, hermitian_part, herm_eig_extremes_unchecked, matmul,
    matsub, min_gain, operator_norm, require_normal, scale, ComplexMatrix, ComplexVector, C64,
};

/// Relative tolerance for every route: a route holds iff its scaled margin
/// is at least `-HYP_TOL`.
pub const HYP_TOL: f64 = 1e-10;

/// `(λ, r)` with `λ ≠ 0` and `r > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaRadius {
    pub lambda: C64,
    pub r: f64,
}

impl LambdaRadius {
    pub fn new(lambda: C64, r: f64) -> Result<Self> {
        if !(lambda.re.is_finite() && lambda.im.is_finite()) || lambda.norm() == 0.0 {
            return Err(Error::InvalidParameter(format!("lambda must be finite and nonzero, got {lambda}")));
        }
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::InvalidParameter(format!("r must be finite and positive, got {r}")));
        }
        Ok(Self { lambda, r })
    }
}

/// `(γ, Γ)`: the disk with center `(γ+Γ)/2` and radius `|Γ−γ|/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskParams {
    pub gamma: C64,
    pub big_gamma: C64,
}

impl DiskParams {
    pub fn new(gamma: C64, big_gamma: C64) -> Result<Self> {
        for z in [gamma, big_gamma] {
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(Error::InvalidParameter(format!("disk parameter must be finite, got {z}")));
            }
        }
        Ok(Self { gamma, big_gamma })
    }

    pub fn center(&self) -> C64 {
        (self.gamma + self.big_gamma) * 0.5
    }

    pub fn radius(&self) -> f64 {
        0.5 * (self.big_gamma - self.gamma).norm()
    }

    /// `Re(Γ γ̄)`.
    pub fn re_product(&self) -> f64 {
        (self.big_gamma * self.gamma.conj()).re
    }
}

/// `(m, M)` with `M ≥ m > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentParams {
    pub m: f64,
    pub big_m: f64,
}

impl SegmentParams {
    pub fn new(m: f64, big_m: f64) -> Result<Self> {
        if !(m.is_finite() && big_m.is_finite() && m > 0.0 && big_m >= m) {
            return Err(Error::InvalidSegment { m, big_m });
        }
        Ok(Self { m, big_m })
    }

    pub fn as_disk(&self) -> DiskParams {
        DiskParams {
            gamma: C64::new(self.m, 0.0),
            big_gamma: C64::new(self.big_m, 0.0),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CombinationParams {
    pub alpha: C64,
    pub beta: C64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PriorParams {
    pub rho: f64,
}

impl PriorParams {
    pub fn new(rho: f64) -> Result<Self> {
        if !(rho.is_finite() && rho > 0.0) {
            return Err(Error::InvalidParameter(format!("rho must be finite and positive, got {rho}")));
        }
        Ok(Self { rho })
    }
}

/// One formulation of a predicate. `margin` is scaled so that the route
/// holds iff `margin ≥ -HYP_TOL`.
#[derive(Debug, Clone, PartialEq)]
pub struct RouteResult {
    pub route: &'static str,
    pub holds: bool,
    pub margin: f64,
}

impl RouteResult {
    pub fn from_margin(route: &'static str, margin: f64) -> Self {
        Self {
            route,
            holds: margin >= -HYP_TOL,
            margin,
        }
    }

    /// A route whose truth is a plain flag (scalar side conditions).
    pub fn flag(route: &'static str, holds: bool) -> Self {
        Self {
            route,
            holds,
            margin: if holds { 0.0 } else { f64::NEG_INFINITY },
        }
    }

    /// True when the margin is at least `factor × HYP_TOL` away from the
    /// decision boundary.
    pub fn is_clear(&self, factor: f64) -> bool {
        self.margin.abs() > factor * HYP_TOL
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HypothesisReport {
    pub satisfied: bool,
    pub routes: Vec<RouteResult>,
    /// All equivalent formulations reached the same answer.
    pub agreement: bool,
}

impl HypothesisReport {
    pub fn route(&self, name: &str) -> Option<&RouteResult> {
        self.routes.iter().find(|r| r.route == name)
    }

    /// Every route's margin is clear of the boundary by `factor × HYP_TOL`.
    pub fn is_clear(&self, factor: f64) -> bool {
        self.routes.iter().all(|r| r.is_clear(factor))
    }

    /// Conjunction of several reports (all must hold).
    pub fn all(reports: Vec<HypothesisReport>) -> HypothesisReport {
        let satisfied = reports.iter().all(|r| r.satisfied);
        let agreement = reports.iter().all(|r| r.agreement);
        let routes = reports.into_iter().flat_map(|r| r.routes).collect();
        HypothesisReport {
            satisfied,
            routes,
            agreement,
        }
    }

    pub(crate) fn single(route: RouteResult) -> HypothesisReport {
        HypothesisReport {
            satisfied: route.holds,
            routes: vec![route],
            agreement: true,
        }
    }
}

fn psd_margin(m: &ComplexMatrix, scale: f64) -> f64 {
    herm_eig_extremes_unchecked(&hermitian_part(m)).lambda_min / scale.max(1.0)
}

/// `A − c A*`.
fn defect_matrix(a: &ComplexMatrix, c: C64) -> ComplexMatrix {
    matsub(a, &scale(&adjoint(a), c)).expect("same dimension")
}

/// The bound `‖A − λA*‖ ≤ r`, as an operator norm and as
/// `r² I − (A−λA*)*(A−λA*) ⪰ 0`.
pub fn check_defect_bound(a: &ComplexMatrix, p: &LambdaRadius) -> HypothesisReport {
    let d = defect_matrix(a, p.lambda);
    let dn = operator_norm(&d);
    let norm_route = RouteResult::from_margin("defect-norm", (p.r - dn) / p.r.max(1.0));
    let r2 = p.r * p.r;
    let gram = matmul(&adjoint(&d), &d).expect("same dimension");
    let psd = matsub(&scale(&ComplexMatrix::identity(a.dim()), C64::new(r2, 0.0)), &gram).expect("same dimension");
    let psd_route = RouteResult::from_margin("defect-psd", psd_margin(&psd, r2.max(dn * dn)));
    HypothesisReport {
        satisfied: norm_route.holds,
        agreement: norm_route.holds == psd_route.holds,
        routes: vec![norm_route, psd_route],
    }
}

/// Conditions (c) and (cc): `‖Ax − λA*x‖ ≤ r ≤ |λ| ‖A*x‖` on the sphere,
/// against `‖A − λA*‖ ≤ r` and `ξ(A) ≥ r/|λ|`.
pub fn check_c_cc(a: &ComplexMatrix, p: &LambdaRadius) -> Result<HypothesisReport> {
    require_normal(a)?;
    let modulus = p.lambda.norm();
    let defect = check_defect_bound(a, p);
    let r2 = p.r * p.r;
    let gain = RouteResult::from_margin("cc-gain", (modulus * min_gain(a) - p.r) / p.r.max(1.0));
    let aa = matmul(a, &adjoint(a))?;
    let lower = matsub(
        &scale(&aa, C64::new(modulus * modulus, 0.0)),
        &scale(&ComplexMatrix::identity(a.dim()), C64::new(r2, 0.0)),
    )?;
    let na = operator_norm(a);
    let gain_psd = RouteResult::from_margin("c-gain-psd", psd_margin(&lower, r2.max(modulus * modulus * na * na)));
    let (norm_route, defect_psd) = (defect.routes[0].clone(), defect.routes[1].clone());
    let cc = norm_route.holds && gain.holds;
    let c = defect_psd.holds && gain_psd.holds;
    let agreement = norm_route.holds == defect_psd.holds && gain.holds == gain_psd.holds;
    Ok(HypothesisReport {
        satisfied: cc,
        routes: vec![
            RouteResult { route: "cc-defect-norm", ..norm_route },
            gain,
            RouteResult { route: "c-defect-psd", ..defect_psd },
            gain_psd,
        ],
        agreement: agreement && c == cc,
    })
}

fn disk_scale(a: &ComplexMatrix, p: &DiskParams) -> f64 {
    let na = operator_norm(a);
    (na * na * (1.0 + p.gamma.norm()) * (1.0 + p.big_gamma.norm())).max(1.0)
}

/// `(A* − γ̄A)(ΓA* − A)`.
fn accretive_product(a: &ComplexMatrix, p: &DiskParams) -> ComplexMatrix {
    let adj = adjoint(a);
    let left = matsub(&adj, &scale(a, p.gamma.conj())).expect("same dimension");
    let right = matsub(&scale(&adj, p.big_gamma), a).expect("same dimension");
    matmul(&left, &right).expect("same dimension")
}

/// Conditions (d)/(ddd): `(A* − γ̄A)(ΓA* − A)` is accretive; and (dd):
/// `ρ² AA* − (A − cA*)*(A − cA*) ⪰ 0` with `c = (γ+Γ)/2`, `ρ = |Γ−γ|/2`.
pub fn check_d_dd_ddd(a: &ComplexMatrix, p: &DiskParams) -> HypothesisReport {
    let s = disk_scale(a, p);
    let b = accretive_product(a, p);
    let ddd = RouteResult::from_margin("ddd-accretive", psd_margin(&b, s));
    let rho = p.radius();
    let d = defect_matrix(a, p.center());
    let aa = matmul(a, &adjoint(a)).expect("same dimension");
    let gram = matmul(&adjoint(&d), &d).expect("same dimension");
    let ball = matsub(&scale(&aa, C64::new(rho * rho, 0.0)), &gram).expect("same dimension");
    let dd = RouteResult::from_margin("dd-ball-psd", psd_margin(&ball, s));
    HypothesisReport {
        satisfied: ddd.holds,
        agreement: ddd.holds == dd.holds,
        routes: vec![ddd, dd],
    }
}

/// Conditions (e)/(ee): `P = (A* − γ̄A)(ΓA* − A) ⪰ 0` and
/// `Q = Γ(A*)² − (γ̄Γ + 1)A*A + γ̄A² ⪰ 0`, read as "Hermitian and PSD".
/// A non-Hermitian `P` is reported through the `e-hermitian` route rather
/// than as an error; the `d-implied` route records whether (d) holds.
pub fn check_e_ee(a: &ComplexMatrix, p: &DiskParams) -> Result<HypothesisReport> {
    require_normal(a)?;
    let s = disk_scale(a, p);
    let adj = adjoint(a);
    let pm = accretive_product(a, p);
    let a2 = matmul(a, a)?;
    let adj2 = matmul(&adj, &adj)?;
    let ada = matmul(&adj, a)?;
    let q = matsub(
        &crate::linalg::matadd(&scale(&adj2, p.big_gamma), &scale(&a2, p.gamma.conj()))?,
        &scale(&ada, p.gamma.conj() * p.big_gamma + 1.0),
    )?;
    // ‖M − M*‖_F on the PSD scale.
    let herm_margin = |m: &ComplexMatrix| -hermitian_defect(m) * m.frobenius_norm() / s;
    let e_herm = RouteResult::from_margin("e-hermitian", herm_margin(&pm));
    let ee_herm = RouteResult::from_margin("ee-hermitian", herm_margin(&q));
    let e_psd = RouteResult::from_margin("e-psd", psd_margin(&pm, s));
    let ee_psd = RouteResult::from_margin("ee-psd", psd_margin(&q, s));
    let e = e_herm.holds && e_psd.holds;
    let ee = ee_herm.holds && ee_psd.holds;
    let d = check_d_dd_ddd(a, p);
    let implied = RouteResult::flag("d-implied", d.satisfied);
    Ok(HypothesisReport {
        satisfied: e,
        agreement: e == ee && (!e || d.satisfied),
        routes: vec![e_herm, e_psd, ee_herm, ee_psd, implied],
    })
}

/// The segment case `γ = m`, `Γ = M`: the accretivity routes, plus the
/// (e)/(ee) routes when `A` is normal.
pub fn check_segment(a: &ComplexMatrix, p: &SegmentParams) -> Result<HypothesisReport> {
    let p = SegmentParams::new(p.m, p.big_m)?;
    let disk = p.as_disk();
    let mut report = check_d_dd_ddd(a, &disk);
    if let Ok(e) = check_e_ee(a, &disk) {
        report.agreement = report.agreement && e.agreement;
        report.routes.extend(e.routes);
    }
    Ok(report)
}

/// Returns `(Re⟨Z−x, x−z⟩ ≥ −tol, ‖x − (z+Z)/2‖ ≤ ‖Z−z‖/2 + tol)`.
pub fn vector_equiv_31_32(x: &ComplexVector, z: &ComplexVector, big_z: &ComplexVector) -> Result<(bool, bool)> {
    let (m1, m2) = vector_equiv_margins(x, z, big_z)?;
    Ok((m1 >= -HYP_TOL, m2 >= -HYP_TOL))
}

/// Scaled margins of the two sides of [`vector_equiv_31_32`].
pub fn vector_equiv_margins(x: &ComplexVector, z: &ComplexVector, big_z: &ComplexVector) -> Result<(f64, f64)> {
    for v in [z, big_z] {
        if v.dim() != x.dim() {
            return Err(Error::DimensionMismatch {
                expected: x.dim(),
                found: v.dim(),
            });
        }
    }
    let s = x.norm().max(z.norm()).max(big_z.norm()).max(1.0);
    let inner = big_z.sub(x)?.inner_product(&x.sub(z)?).re;
    let mid = z.add(big_z)?.scaled(C64::new(0.5, 0.0));
    let ball = 0.5 * big_z.sub(z)?.norm() - x.sub(&mid)?.norm();
    Ok((inner / (s * s), ball / s))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    /// Minimize `‖A − λA*‖`.
    MinDefect,
    /// Minimize `‖A − λA*‖ / |λ|`.
    MinRatio,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LambdaFit {
    /// `r = achieved·(1 + 1e−9) + 1e−15` for min-defect, and the defect
    /// bound at the returned λ for min-ratio.
    pub params: LambdaRadius,
    /// The minimized objective at `params.lambda`, from an operator norm.
    pub achieved: f64,
    /// The infimum sits at `λ = 0` (min-defect) or `λ = ∞` (min-ratio) and
    /// the returned λ was clamped.
    pub non_attained: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiskFit {
    pub params: DiskParams,
    /// `Re(Γγ̄) > 0`.
    pub feasible: bool,
}

const CLAMP: f64 = 1e-6;

/// Nonzero eigenvalues as `(weight |d_j|, phase point u_j)`.
fn phase_points(a: &ComplexMatrix) -> Vec<(f64, C64)> {
    let na = operator_norm(a);
    eigenvalues(a)
        .into_iter()
        .filter(|d| d.norm() > 1e-14 * na)
        .map(|d| {
            let u = d / d.conj();
            (d.norm(), u / u.norm())
        })
        .collect()
}

fn weighted_max(points: &[(f64, C64)], z: C64) -> f64 {
    points.iter().map(|&(w, u)| w * (u - z).norm()).fold(0.0, f64::max)
}

/// Minimizes `max_j w_j |p_j − z|` over complex `z` (convex): coarse grid,
/// Nelder–Mead from the best grid points, then snapping to any data point
/// that is as good to rounding.
fn weighted_center(points: &[(f64, C64)], radius: f64, snap_tol: f64) -> C64 {
    let f = |z: C64| weighted_max(points, z);
    const STEPS: i32 = 40;
    let mut grid: Vec<(f64, C64)> = Vec::with_capacity(((2 * STEPS + 1) * (2 * STEPS + 1)) as usize);
    for i in -STEPS..=STEPS {
        for j in -STEPS..=STEPS {
            let z = C64::new(i as f64, j as f64) * (radius / STEPS as f64);
            grid.push((f(z), z));
        }
    }
    grid.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut best = grid[0].1;
    let mut best_val = grid[0].0;
    for &(_, start) in grid.iter().take(3) {
        let z = nelder_mead(&f, start, radius / STEPS as f64);
        let v = f(z);
        if v < best_val {
            best_val = v;
            best = z;
        }
    }
    for &(_, u) in points {
        let v = f(u);
        if v <= best_val + snap_tol {
            best = u;
            break;
        }
    }
    best
}

/// Nelder–Mead on the plane with restarts from the current best vertex.
fn nelder_mead(f: &impl Fn(C64) -> f64, start: C64, size: f64) -> C64 {
    let mut best = start;
    let mut step = size;
    for _ in 0..4 {
        let mut simplex = [
            (f(best), best),
            (0.0, best + C64::new(step, 0.0)),
            (0.0, best + C64::new(0.0, step)),
        ];
        simplex[1].0 = f(simplex[1].1);
        simplex[2].0 = f(simplex[2].1);
        for _ in 0..2000 {
            simplex.sort_by(|x, y| x.0.total_cmp(&y.0));
            let (lo, hi) = (simplex[0], simplex[2]);
            let spread = (simplex[1].1 - lo.1).norm().max((hi.1 - lo.1).norm());
            if spread <= 1e-15 * (1.0 + lo.1.norm()) {
                break;
            }
            let centroid = (simplex[0].1 + simplex[1].1) * 0.5;
            let reflect = centroid + (centroid - hi.1);
            let fr = f(reflect);
            if fr < lo.0 {
                let expand = centroid + (reflect - centroid) * 2.0;
                let fe = f(expand);
                simplex[2] = if fe < fr { (fe, expand) } else { (fr, reflect) };
            } else if fr < simplex[1].0 {
                simplex[2] = (fr, reflect);
            } else {
                let contract = if fr < hi.0 {
                    centroid + (reflect - centroid) * 0.5
                } else {
                    centroid + (hi.1 - centroid) * 0.5
                };
                let fc = f(contract);
                if fc < hi.0.min(fr) {
                    simplex[2] = (fc, contract);
                } else {
                    for k in 1..3 {
                        let z = lo.1 + (simplex[k].1 - lo.1) * 0.5;
                        simplex[k] = (f(z), z);
                    }
                }
            }
        }
        simplex.sort_by(|x, y| x.0.total_cmp(&y.0));
        if (simplex[0].1 - best).norm() <= 1e-15 * (1.0 + best.norm()) {
            best = simplex[0].1;
            break;
        }
        best = simplex[0].1;
        step *= 0.1;
    }
    best
}

/// Fits `(λ, r)` for a normal matrix.
///
/// Min-defect minimizes `max_j |d_j||u_j − λ|`. Min-ratio substitutes
/// `μ = 1/λ`, which turns the ratio into the convex
/// `max_j |d_j||μ − ū_j|`. When the optimum is the excluded point (`λ = 0`,
/// resp. `μ = 0`) the parameter is clamped to modulus `1e−6` in the
/// direction found and `non_attained` is set.
pub fn fit_lambda(a: &ComplexMatrix, objective: Objective) -> Result<LambdaFit> {
    require_normal(a)?;
    let na = operator_norm(a);
    if na == 0.0 {
        let params = LambdaRadius::new(C64::new(1.0, 0.0), 1e-15)?;
        return Ok(LambdaFit {
            params,
            achieved: 0.0,
            non_attained: false,
        });
    }
    let sigma_min = min_gain(a);
    if objective == Objective::MinRatio && sigma_min <= 1e-12 * na {
        return Err(Error::Singular { sigma_min });
    }
    let mut points = phase_points(a);
    if objective == Objective::MinRatio {
        for p in points.iter_mut() {
            p.1 = p.1.conj();
        }
    }
    let radius = if sigma_min > 0.0 {
        (2.0 * na / sigma_min).min(2.0)
    } else {
        2.0
    };
    let snap = 4.0 * f64::EPSILON * na;
    let z = weighted_center(&points, radius, snap);
    let at_origin = weighted_max(&points, C64::new(0.0, 0.0));
    let non_attained = at_origin <= weighted_max(&points, z) + 1e-12 * na;
    let z = if non_attained {
        let dir = if z.norm() > 0.0 { z / z.norm() } else { C64::new(1.0, 0.0) };
        dir * CLAMP
    } else {
        z
    };
    let lambda = match objective {
        Objective::MinDefect => z,
        Objective::MinRatio => z.inv(),
    };
    let defect = operator_norm(&defect_matrix(a, lambda));
    let achieved = match objective {
        Objective::MinDefect => defect,
        Objective::MinRatio => defect / lambda.norm(),
    };
    let r = defect * (1.0 + 1e-9) + 1e-15;
    Ok(LambdaFit {
        params: LambdaRadius::new(lambda, r)?,
        achieved,
        non_attained,
    })
}

/// Smallest closed disk containing all points, as `(center, radius)`.
pub(crate) fn min_enclosing_circle(points: &[C64]) -> (C64, f64) {
    let mut pts: Vec<C64> = Vec::new();
    for &p in points {
        if !pts.iter().any(|q| (q - p).norm() <= 1e-14) {
            pts.push(p);
        }
    }
    let cover = |c: C64| pts.iter().map(|p| (p - c).norm()).fold(0.0, f64::max);
    if pts.len() == 1 {
        return (pts[0], 0.0);
    }
    let mut best = (pts[0], f64::INFINITY);
    let mut consider = |c: C64| {
        let r = cover(c);
        if r < best.1 {
            best = (c, r);
        }
    };
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            consider((pts[i] + pts[j]) * 0.5);
            for k in j + 1..pts.len() {
                if let Some(c) = circumcenter(pts[i], pts[j], pts[k]) {
                    consider(c);
                }
            }
        }
    }
    best
}

fn circumcenter(a: C64, b: C64, c: C64) -> Option<C64> {
    let (ab, ac) = (b - a, c - a);
    let d = 2.0 * (ab.conj() * ac).im;
    if d.abs() <= 1e-14 * ab.norm() * ac.norm() {
        return None;
    }
    let (nb, nc) = (ab.norm_sqr(), ac.norm_sqr());
    let ux = (ac.im * nb - ab.im * nc) / d;
    let uy = (ab.re * nc - ac.re * nb) / d;
    Some(a + C64::new(ux, uy))
}

fn require_invertible(a: &ComplexMatrix) -> Result<()> {
    let na = operator_norm(a);
    let sigma_min = min_gain(a);
    if na == 0.0 || sigma_min <= 1e-12 * na {
        return Err(Error::Singular { sigma_min });
    }
    Ok(())
}

/// Fits `(γ, Γ)` from the minimal disk enclosing the phase points of a
/// normal invertible matrix. The disk is split along the direction of its
/// center, so `γ` and `Γ` lie on one ray through the origin.
pub fn fit_disk(a: &ComplexMatrix) -> Result<DiskFit> {
    require_normal(a)?;
    require_invertible(a)?;
    let us: Vec<C64> = phase_points(a).into_iter().map(|p| p.1).collect();
    let (c, rho) = min_enclosing_circle(&us);
    let dir = if c.norm() > 0.0 { c / c.norm() } else { C64::new(1.0, 0.0) };
    let params = DiskParams::new(c - dir * rho, c + dir * rho)?;
    Ok(DiskFit {
        feasible: params.re_product() > 0.0,
        params,
    })
}

/// Fits `(m, M)` with `mM = 1` when every phase point has positive real
/// part; `None` otherwise.
///
/// For `u = e^{iθ}` the segment disk condition reads
/// `1 + mM ≤ (m + M) cos θ`, so with `mM = 1` the tightest admissible `M`
/// solves `M + 1/M = 2 / min cos θ`.
pub fn fit_segment(a: &ComplexMatrix) -> Result<Option<SegmentParams>> {
    require_normal(a)?;
    require_invertible(a)?;
    let cmin = phase_points(a)
        .into_iter()
        .map(|p| p.1.re)
        .fold(f64::INFINITY, f64::min)
        .min(1.0);
    if cmin <= 1e-12 {
        return Ok(None);
    }
    let big_m = (1.0 + (1.0 - cmin * cmin).sqrt()) / cmin * (1.0 + 1e-9);
    Ok(Some(SegmentParams::new(1.0 / big_m, big_m)?))
}
