//! Unit-sphere infima: the minimum gain ξ(A), μ(T) = inf |⟨T²x,x⟩|^{1/2},
//! δ(T) = inf (‖Tx‖ − |⟨T²x,x⟩|^{1/2}), and a brute-force sampling oracle
//! that upper-bounds any of them.

use std::f64::consts::PI;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{
    adjoint, approximate_eigenvector, eigenvalues, is_normal, matmul, operator_norm, svd_extremes,
    ComplexMatrix, ComplexVector, C64,
};
use crate::range::{arc_end, bisect_arcs, uniform_thetas, SupportEvaluator, SupportSample, INITIAL_GRID, MAX_GRID};

/// Values of δ at or below this are reported as an exact zero.
pub const DELTA_ZERO_TOL: f64 = 1e-9;
/// Relative tolerance of the certified distance `dist(0, W(T²))`.
pub const MU_TOL: f64 = 1e-13;
const DELTA_SEED: u64 = 0x6465_6c74_615f_7631;

#[derive(Debug, Clone)]
pub struct InfimumEstimate {
    pub value: f64,
    pub witness: ComplexVector,
    /// True when `value` carries a proof rather than being a best-found
    /// upper bound on the infimum.
    pub certified: bool,
    /// Proven lower bound (`-inf` when none is known).
    pub lower_bound: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Functional {
    /// `‖Tx‖`
    Xi,
    /// `|⟨T²x,x⟩|^{1/2}`
    Mu,
    /// `|⟨T²x,x⟩|`
    MuSquared,
    /// `‖Tx‖ − |⟨T²x,x⟩|^{1/2}`
    Delta,
}

impl FromStr for Functional {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "xi" => Ok(Functional::Xi),
            "mu" => Ok(Functional::Mu),
            "mu2" | "mu²" | "mu^2" => Ok(Functional::MuSquared),
            "delta" => Ok(Functional::Delta),
            other => Err(Error::UnknownFunctional(other.to_string())),
        }
    }
}

/// Precomputed `T` and `T*` for repeated functional evaluations.
struct Probe<'a> {
    t: &'a ComplexMatrix,
    t_adj: ComplexMatrix,
}

impl<'a> Probe<'a> {
    fn new(t: &'a ComplexMatrix) -> Self {
        Self {
            t,
            t_adj: adjoint(t),
        }
    }

    /// `(‖Tx‖, ⟨Tx, T*x⟩)`; the second entry equals `⟨T²x, x⟩`.
    fn parts(&self, x: &ComplexVector) -> (f64, C64) {
        let y = self.t.apply(x).expect("dimensions agree");
        let w = self.t_adj.apply(x).expect("dimensions agree");
        (y.norm(), y.inner_product(&w))
    }

    fn eval(&self, f: Functional, x: &ComplexVector) -> f64 {
        let (ny, q) = self.parts(x);
        match f {
            Functional::Xi => ny,
            Functional::MuSquared => q.norm(),
            Functional::Mu => q.norm().sqrt(),
            Functional::Delta => ny - q.norm().sqrt(),
        }
    }
}

/// Evaluates a functional at the unit vector `x`.
pub fn functional_at(f: Functional, t: &ComplexMatrix, x: &ComplexVector) -> Result<f64> {
    if x.dim() != t.dim() {
        return Err(Error::DimensionMismatch {
            expected: t.dim(),
            found: x.dim(),
        });
    }
    Ok(Probe::new(t).eval(f, x))
}

pub(crate) fn random_unit_vector<R: Rng>(rng: &mut R, n: usize) -> ComplexVector {
    loop {
        let v: Vec<C64> = (0..n)
            .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        let v = ComplexVector::from_inner_unchecked(nalgebra::DVector::from_vec(v));
        if v.norm() > 0.0 {
            return v.normalized();
        }
    }
}

/// ξ(A) = σ_min(A) with its right singular vector.
pub fn xi(a: &ComplexMatrix) -> InfimumEstimate {
    let s = svd_extremes(a);
    InfimumEstimate {
        value: s.sigma_min,
        witness: s.v_min,
        certified: true,
        lower_bound: s.sigma_min,
    }
}

/// Minimum of the named functional over `samples` uniform random unit
/// vectors drawn from the ChaCha20 stream of `seed`; an upper bound on the
/// infimum.
pub fn sphere_oracle(functional: &str, t: &ComplexMatrix, samples: usize, seed: u64) -> Result<f64> {
    let f: Functional = functional.parse()?;
    if samples == 0 {
        return Err(Error::InvalidParameter("oracle needs at least one sample".into()));
    }
    let probe = Probe::new(t);
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut best = f64::INFINITY;
    for _ in 0..samples {
        let x = random_unit_vector(&mut rng, t.dim());
        best = best.min(probe.eval(f, &x));
    }
    Ok(best)
}

/// μ(T), computed as `sqrt(dist(0, W(T²)))` from a certified support sweep of
/// W(T²). The witness is constructed explicitly: a unit vector whose
/// quadratic form hits the nearest point of W(T²) (or zero).
pub fn mu(t: &ComplexMatrix) -> InfimumEstimate {
    let b = matmul(t, t).expect("square");
    let dist = distance_to_range(&b);
    InfimumEstimate {
        value: dist.upper.max(0.0).sqrt(),
        witness: dist.witness,
        certified: dist.certified,
        lower_bound: dist.lower.max(0.0).sqrt(),
    }
}

#[derive(Debug, Clone)]
pub(crate) struct RangeDistance {
    pub lower: f64,
    pub upper: f64,
    pub witness: ComplexVector,
    pub certified: bool,
}

fn cross(u: C64, v: C64) -> f64 {
    (u.conj() * v).im
}

/// Closest point of the segment `[p, q]` to the origin, as `(distance, point)`.
fn segment_closest(p: C64, q: C64) -> (f64, C64) {
    let d = q - p;
    let len2 = d.norm_sqr();
    let s = if len2 == 0.0 {
        0.0
    } else {
        (-(p.conj() * d).re / len2).clamp(0.0, 1.0)
    };
    let c = p + d * s;
    (c.norm(), c)
}

/// Certified `dist(0, W(B))` with an attaining witness.
pub(crate) fn distance_to_range(b: &ComplexMatrix) -> RangeDistance {
    let n = b.dim();
    let lip = operator_norm(b);
    if lip == 0.0 {
        return RangeDistance {
            lower: 0.0,
            upper: 0.0,
            witness: ComplexVector::basis(n, 0),
            certified: true,
        };
    }
    let tol = MU_TOL * lip.max(1.0);
    let zero_tol = 1e-12 * lip;
    let eval = SupportEvaluator::new(b);
    let mut samples = eval.eval_many(&uniform_thetas(INITIAL_GRID));
    loop {
        if let Some(x) = zero_witness(b, &samples, zero_tol) {
            return RangeDistance {
                lower: 0.0,
                upper: 0.0,
                witness: x,
                certified: true,
            };
        }
        let m = samples.len();
        let lower = samples.iter().map(|s| -s.h).fold(0.0, f64::max);
        let (mut upper, mut closest_arc, mut closest_point) = (f64::INFINITY, 0, C64::new(0.0, 0.0));
        for k in 0..m {
            let (d, p) = segment_closest(samples[k].z, samples[(k + 1) % m].z);
            if d < upper {
                upper = d;
                closest_arc = k;
                closest_point = p;
            }
        }
        let done = upper - lower <= tol;
        let mut split: Vec<usize> = Vec::new();
        if !done {
            for k in 0..m {
                let (a0, b0) = arc_end(&samples, k);
                let next = &samples[(k + 1) % m];
                if arc_distance_bound(&samples[k], next, a0, b0, lip) > lower + 0.5 * tol {
                    split.push(k);
                }
            }
            for k in [closest_arc + m - 1, closest_arc, closest_arc + 1] {
                let k = k % m;
                if !split.contains(&k) {
                    split.push(k);
                }
            }
            split.sort_unstable();
        }
        if done || m + split.len() > MAX_GRID {
            let sa = &samples[closest_arc];
            let sb = &samples[(closest_arc + 1) % m];
            let x = attain_on_segment(b, &sa.v, sa.z, &sb.v, sb.z, closest_point);
            let attained = b.quad_form(&x).expect("dimensions agree").norm();
            return RangeDistance {
                lower,
                upper: attained.max(lower),
                witness: x,
                certified: done,
            };
        }
        samples = bisect_arcs(&eval, samples, &split);
    }
}

/// Upper bound on `max(-h(θ))` over the arc `[a, b]`, using that the boundary
/// points at both ends belong to W: `h(θ) ≥ max(Re(e^{-iθ} z_a), Re(e^{-iθ} z_b))`.
fn arc_distance_bound(sa: &SupportSample, sb: &SupportSample, a: f64, b: f64, lip: f64) -> f64 {
    let lipschitz = -0.5 * (sa.h + sb.h) + 0.5 * lip * (b - a);
    let support_of = |theta: f64| {
        let rot = C64::from_polar(1.0, -theta);
        (rot * sa.z).re.max((rot * sb.z).re)
    };
    let mut candidates = vec![a, b];
    let diff = sa.z - sb.z;
    let crossing = diff.arg() + 0.5 * PI;
    let minima = [sa.z.arg() + PI, sb.z.arg() + PI];
    for base in std::iter::once(crossing)
        .chain(std::iter::once(crossing + PI))
        .chain(minima)
    {
        for wrap in -2..=2 {
            let t = base + wrap as f64 * 2.0 * PI;
            if t > a && t < b {
                candidates.push(t);
            }
        }
    }
    let inner = candidates
        .into_iter()
        .map(support_of)
        .fold(f64::INFINITY, f64::min);
    lipschitz.min(-inner)
}

/// If the inscribed polygon of boundary points contains the origin, builds a
/// unit `x` with `⟨Bx,x⟩ ≈ 0`.
fn zero_witness(b: &ComplexMatrix, samples: &[SupportSample], zero_tol: f64) -> Option<ComplexVector> {
    if let Some(s) = samples.iter().find(|s| s.z.norm() <= zero_tol) {
        return Some(s.v.clone());
    }
    let mut order: Vec<(f64, usize)> = samples.iter().enumerate().map(|(k, s)| (s.z.arg(), k)).collect();
    order.sort_by(|x, y| x.0.total_cmp(&y.0));
    let m = order.len();
    let mut max_gap = order[0].0 + 2.0 * PI - order[m - 1].0;
    for w in order.windows(2) {
        max_gap = max_gap.max(w[1].0 - w[0].0);
    }
    if max_gap >= PI - 1e-12 {
        return None;
    }
    // Fan from the first point: b is the last point within half a turn, c the one after.
    let base = order[0].0;
    let mut pos_b = 0;
    for (pos, &(arg, _)) in order.iter().enumerate().skip(1) {
        if arg - base < PI {
            pos_b = pos;
        }
    }
    let pos_c = (pos_b + 1) % m;
    let (sa, sb, sc) = (&samples[order[0].1], &samples[order[pos_b].1], &samples[order[pos_c].1]);
    let denom = cross(sa.z, sc.z - sb.z);
    if denom == 0.0 {
        return None;
    }
    let s = (-cross(sa.z, sb.z) / denom).clamp(0.0, 1.0);
    let p = sb.z + (sc.z - sb.z) * s;
    let xp = attain_on_segment(b, &sb.v, sb.z, &sc.v, sc.z, p);
    let zp = b.quad_form(&xp).ok()?;
    let x = attain_on_segment(b, &sa.v, sa.z, &xp, zp, C64::new(0.0, 0.0));
    let q = b.quad_form(&x).ok()?;
    if q.norm() <= zero_tol {
        Some(x)
    } else {
        None
    }
}

/// Given unit vectors `va`, `vb` with `⟨B va, va⟩ = za`, `⟨B vb, vb⟩ = zb` and
/// a target `p` on the segment `[za, zb]`, returns a unit vector in their span
/// whose quadratic form equals `p` (up to rounding).
pub(crate) fn attain_on_segment(
    b: &ComplexMatrix,
    va: &ComplexVector,
    za: C64,
    vb: &ComplexVector,
    zb: C64,
    p: C64,
) -> ComplexVector {
    let d = zb - za;
    let scale = za.norm().max(zb.norm()).max(1e-300);
    if (p - za).norm() <= 1e-15 * scale || d.norm() == 0.0 {
        return va.clone();
    }
    if (p - zb).norm() <= 1e-15 * scale {
        return vb.clone();
    }
    let rot = d.conj() / d.norm();
    let bva = b.apply(va).expect("dimensions agree");
    let bvb = b.apply(vb).expect("dimensions agree");
    let alpha = rot * (bva.inner_product(vb) - p * va.inner_product(vb));
    let beta = rot * (bvb.inner_product(va) - p * vb.inner_product(va));
    let w = beta - alpha.conj();
    let phase = if w.norm() == 0.0 {
        C64::new(1.0, 0.0)
    } else {
        w.conj() / w.norm()
    };
    let k = (phase * beta + phase.conj() * alpha).re;
    let ra = (rot * (za - p)).re;
    let rb = (rot * (zb - p)).re;
    let f = |t: f64| {
        let (s, c) = t.sin_cos();
        c * c * ra + s * s * rb + s * c * k
    };
    let (mut lo, mut hi) = (0.0f64, 0.5 * PI);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t = if f(lo).abs() <= f(hi).abs() { lo } else { hi };
    let (s, c) = t.sin_cos();
    let y = va
        .scaled(C64::new(c, 0.0))
        .add(&vb.scaled(phase * s))
        .expect("dimensions agree");
    y.normalized()
}

/// δ(T) by projected gradient descent on the sphere from every eigenvector
/// of `T` plus `restarts` random starts. The result is an upper bound on the
/// infimum; values within [`DELTA_ZERO_TOL`] of zero are snapped to an exact
/// zero, which is certified for normal `T` (where δ ≥ 0).
pub fn delta(t: &ComplexMatrix, restarts: usize) -> Result<InfimumEstimate> {
    if restarts == 0 {
        return Err(Error::InvalidParameter("delta needs at least one restart".into()));
    }
    let probe = Probe::new(t);
    let t2 = matmul(t, t)?;
    let t2_adj = adjoint(&t2);
    let scale = operator_norm(t).max(1e-300);

    let mut starts: Vec<ComplexVector> = eigenvalues(t)
        .into_iter()
        .map(|l| approximate_eigenvector(t, l))
        .collect();
    let mut rng = ChaCha20Rng::seed_from_u64(DELTA_SEED);
    for _ in 0..restarts {
        starts.push(random_unit_vector(&mut rng, t.dim()));
    }

    // δ ≥ 0 for normal T, so an eigenvector already at zero is optimal.
    let normal = is_normal(t);
    if normal {
        if let Some(x) = starts.iter().find(|x| probe.eval(Functional::Delta, x).abs() <= DELTA_ZERO_TOL) {
            return Ok(InfimumEstimate {
                value: 0.0,
                witness: x.clone(),
                certified: true,
                lower_bound: 0.0,
            });
        }
    }

    let mut best_value = f64::INFINITY;
    let mut best_x = starts[0].clone();
    for x0 in starts {
        let (v, x) = descend(&probe, &t2, &t2_adj, x0, scale);
        if v < best_value {
            best_value = v;
            best_x = x;
        }
    }
    if best_value.abs() <= DELTA_ZERO_TOL {
        Ok(InfimumEstimate {
            value: 0.0,
            witness: best_x,
            certified: normal,
            lower_bound: if normal { 0.0 } else { f64::NEG_INFINITY },
        })
    } else {
        Ok(InfimumEstimate {
            value: best_value,
            witness: best_x,
            certified: false,
            lower_bound: f64::NEG_INFINITY,
        })
    }
}

fn descend(
    probe: &Probe<'_>,
    t2: &ComplexMatrix,
    t2_adj: &ComplexMatrix,
    mut x: ComplexVector,
    scale: f64,
) -> (f64, ComplexVector) {
    const MAX_ITER: usize = 300;
    let mut fx = probe.eval(Functional::Delta, &x);
    let mut step = 1.0 / scale;
    for _ in 0..MAX_ITER {
        let y = probe.t.apply(&x).expect("dimensions agree");
        let ny = y.norm();
        let (_, q) = probe.parts(&x);
        let qn = q.norm();
        if ny < 1e-300 || qn < 1e-300 {
            break;
        }
        let g1 = probe.t_adj.apply(&y).expect("dimensions agree").scaled(C64::new(1.0 / ny, 0.0));
        let mx = t2.apply(&x).expect("dimensions agree");
        let mhx = t2_adj.apply(&x).expect("dimensions agree");
        let g2 = mx
            .scaled(q.conj())
            .add(&mhx.scaled(q))
            .expect("dimensions agree")
            .scaled(C64::new(1.0 / (2.0 * qn * qn.sqrt()), 0.0));
        let g = g1.sub(&g2).expect("dimensions agree");
        let radial = g.inner_product(&x).re;
        let gt = g.sub(&x.scaled(C64::new(radial, 0.0))).expect("dimensions agree");
        let gnorm2 = gt.norm().powi(2);
        if gnorm2.sqrt() * step < 1e-12 && gnorm2 < 1e-24 {
            break;
        }
        let mut accepted = false;
        for _ in 0..50 {
            let cand = x
                .sub(&gt.scaled(C64::new(step, 0.0)))
                .expect("dimensions agree")
                .normalized();
            let fc = probe.eval(Functional::Delta, &cand);
            if fc <= fx - 1e-4 * step * gnorm2 {
                x = cand;
                fx = fc;
                accepted = true;
                break;
            }
            step *= 0.5;
            if step * gnorm2.sqrt() < 1e-12 {
                break;
            }
        }
        if !accepted {
            break;
        }
        step = (step * 2.0).min(1e3 / scale);
    }
    (fx, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn xi_of_diagonal_has_basis_witness() {
        let e = xi(&ComplexMatrix::diag_real(&[3.0, 1.0]).unwrap());
        assert!((e.value - 1.0).abs() < 1e-15 && e.certified);
        assert!((e.witness.get(1).norm() - 1.0).abs() < 1e-14);
        let sing = ComplexMatrix::from_real_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
        assert!(xi(&sing).value < 1e-14);
    }

    #[test]
    fn mu_small_cases() {
        let m = mu(&ComplexMatrix::diag(&[c(1.0, 0.0), c(0.0, 1.0)]).unwrap());
        assert!(m.value < 1e-7 && m.certified, "{m:?}");
        let m = mu(&ComplexMatrix::diag_real(&[3.0, 1.0]).unwrap());
        assert!((m.value - 1.0).abs() < 1e-9, "{m:?}");
        let m = mu(&ComplexMatrix::diag(&[c(0.0, 2.0), c(0.0, 1.0)]).unwrap());
        assert!((m.value - 1.0).abs() < 1e-9, "{m:?}");
    }

    #[test]
    fn mu_witness_attains_value() {
        let t = ComplexMatrix::diag_real(&[3.0, 1.0]).unwrap();
        let m = mu(&t);
        let at = functional_at(Functional::MuSquared, &t, &m.witness).unwrap();
        assert!((at - m.value * m.value).abs() < 1e-8);
    }

    #[test]
    fn delta_small_cases() {
        let d = delta(&ComplexMatrix::diag_real(&[3.0, 1.0]).unwrap(), 3).unwrap();
        assert_eq!(d.value, 0.0);
        let t = ComplexMatrix::diag(&[c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
        let d = delta(&t, 3).unwrap();
        assert_eq!(d.value, 0.0);
        assert!(d.certified);
        let nil = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        let d = delta(&nil, 3).unwrap();
        assert_eq!(d.value, 0.0);
        assert!((d.witness.get(0).norm() - 1.0).abs() < 1e-12);
        assert!(delta(&nil, 0).is_err());
    }

    #[test]
    fn oracle_cases() {
        let d = ComplexMatrix::diag_real(&[3.0, 1.0]).unwrap();
        let v = sphere_oracle("xi", &d, 100_000, 42).unwrap();
        assert!((1.0..=1.05).contains(&v), "{v}");
        let v = sphere_oracle("mu2", &d, 100_000, 42).unwrap();
        assert!((1.0..=1.2).contains(&v), "{v}");
        let v = sphere_oracle("delta", &ComplexMatrix::identity(2), 10, 1).unwrap();
        assert_eq!(v, 0.0);
        assert!(matches!(
            sphere_oracle("nope", &d, 10, 1),
            Err(Error::UnknownFunctional(_))
        ));
    }

    #[test]
    fn attain_on_segment_hits_midpoint() {
        let b = ComplexMatrix::diag_real(&[1.0, -1.0]).unwrap();
        let e1 = ComplexVector::basis(2, 0);
        let e2 = ComplexVector::basis(2, 1);
        let x = attain_on_segment(&b, &e1, c(1.0, 0.0), &e2, c(-1.0, 0.0), c(0.25, 0.0));
        let q = b.quad_form(&x).unwrap();
        assert!((q - c(0.25, 0.0)).norm() < 1e-14);
        assert!((x.norm() - 1.0).abs() < 1e-14);
    }
}
