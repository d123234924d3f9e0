//! Reference computations for integration tests. Nothing here calls the
//! library's eigen/SVD routines: dense matrices are plain `Vec<Vec<C64>>`
//! and spectra come from a cyclic Jacobi iteration or closed forms.
#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

use nrcert::{ComplexMatrix, ComplexVector, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

pub type Dense = Vec<Vec<C64>>;

pub fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn gaussian<R: Rng>(rng: &mut R) -> C64 {
    c(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn dense(a: &ComplexMatrix) -> Dense {
    let n = a.dim();
    (0..n).map(|i| (0..n).map(|j| a.get(i, j)).collect()).collect()
}

pub fn from_dense(d: &Dense) -> ComplexMatrix {
    ComplexMatrix::from_rows(d).unwrap()
}

pub fn adj(a: &Dense) -> Dense {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].conj()).collect()).collect()
}

pub fn mul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

pub fn lin(a: &Dense, x: C64, b: &Dense, y: C64) -> Dense {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[i][j] * x + b[i][j] * y).collect()).collect()
}

/// One sweep-until-converged cyclic Jacobi pass on the flat row-major
/// Hermitian `a`, accumulating the rotations into the columns of `v`.
fn jacobi_in_place(a: &mut [C64], v: &mut [C64], n: usize) {
    let scale: f64 = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt().max(f64::MIN_POSITIVE);
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    off += a[i * n + j].norm_sqr();
                }
            }
        }
        if off.sqrt() <= 1e-15 * scale {
            return;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                let m = apq.norm();
                if m <= 1e-300 {
                    continue;
                }
                let phase = apq / m;
                let theta = (a[q * n + q].re - a[p * n + p].re) / (2.0 * m);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let cs = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * cs;
                // J restricted to (p, q): [[c, s], [-s·conj(φ), c·conj(φ)]].
                let jpp = c(cs, 0.0);
                let jpq = c(sn, 0.0);
                let jqp = -phase.conj() * sn;
                let jqq = phase.conj() * cs;
                for k in 0..n {
                    let (x, y) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = x * jpp + y * jqp;
                    a[k * n + q] = x * jpq + y * jqq;
                }
                for k in 0..n {
                    let (x, y) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = jpp.conj() * x + jqp.conj() * y;
                    a[q * n + k] = jpq.conj() * x + jqq.conj() * y;
                }
                for k in 0..n {
                    let (x, y) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = x * jpp + y * jqp;
                    v[k * n + q] = x * jpq + y * jqq;
                }
            }
        }
    }
}

fn flat_identity(n: usize) -> Vec<C64> {
    (0..n * n).map(|k| if k / n == k % n { c(1.0, 0.0) } else { c(0.0, 0.0) }).collect()
}

/// Eigenvalues (ascending) and eigenvectors (columns of the returned matrix)
/// of a Hermitian matrix by cyclic Jacobi rotations.
pub fn jacobi_eigh(h: &Dense) -> (Vec<f64>, Dense) {
    let n = h.len();
    let mut a: Vec<C64> = h.iter().flatten().copied().collect();
    let mut v = flat_identity(n);
    jacobi_in_place(&mut a, &mut v, n);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].re.total_cmp(&a[j * n + j].re));
    let values = order.iter().map(|&i| a[i * n + i].re).collect();
    let vectors = (0..n).map(|r| order.iter().map(|&k| v[r * n + k]).collect()).collect();
    (values, vectors)
}

/// Roots of the characteristic polynomial of a 3×3 Hermitian matrix by the
/// trigonometric formula, ascending.
pub fn cubic_eigh(h: &Dense) -> [f64; 3] {
    let (a, b, cc) = (h[0][0].re, h[1][1].re, h[2][2].re);
    let (d, e, f) = (h[0][1], h[1][2], h[0][2]);
    let tr = a + b + cc;
    let minors = a * b + b * cc + a * cc - d.norm_sqr() - e.norm_sqr() - f.norm_sqr();
    let det = a * b * cc + 2.0 * (d * e * f.conj()).re - a * e.norm_sqr() - b * f.norm_sqr() - cc * d.norm_sqr();
    // λ = tr/3 + 2·sqrt(p/3)·cos(·) for the depressed cubic x³ − p x − q.
    let m = tr / 3.0;
    let p = m * m * 3.0 - minors;
    let q = det - m * minors + 2.0 * m * m * m;
    if p <= 1e-300 {
        return [m; 3];
    }
    let r = (p / 3.0).sqrt();
    let arg = (q / (2.0 * r * r * r)).clamp(-1.0, 1.0);
    let phi = arg.acos() / 3.0;
    let mut roots = [0, 1, 2].map(|k| m + 2.0 * r * (phi - TAU * k as f64 / 3.0).cos());
    roots.sort_by(f64::total_cmp);
    roots
}

pub fn op_norm(a: &Dense) -> f64 {
    let (vals, _) = jacobi_eigh(&mul(&adj(a), a));
    vals.last().unwrap().max(0.0).sqrt()
}

pub fn min_gain(a: &Dense) -> f64 {
    let (vals, _) = jacobi_eigh(&mul(&adj(a), a));
    vals[0].max(0.0).sqrt()
}

/// `max_k λ_max(Re(e^{-iθ_k} A))` over `count` equispaced angles: a lower
/// bound on w(A) whose error is `O(w·(π/count)²)`. Each angle's Jacobi
/// solve starts from the previous angle's eigenbasis.
pub fn radius_sweep(a: &Dense, count: usize) -> f64 {
    let n = a.len();
    let flat: Vec<C64> = a.iter().flatten().copied().collect();
    let mut v = flat_identity(n);
    let mut h = vec![c(0.0, 0.0); n * n];
    let mut hv = vec![c(0.0, 0.0); n * n];
    let mut b = vec![c(0.0, 0.0); n * n];
    let mut best = f64::NEG_INFINITY;
    for k in 0..count {
        if k % 1024 == 0 {
            v = flat_identity(n);
        }
        let e = C64::from_polar(0.5, -TAU * k as f64 / count as f64);
        for i in 0..n {
            for j in 0..n {
                h[i * n + j] = flat[i * n + j] * e + flat[j * n + i].conj() * e.conj();
            }
        }
        for i in 0..n {
            for j in 0..n {
                hv[i * n + j] = (0..n).map(|l| h[i * n + l] * v[l * n + j]).sum();
            }
        }
        for i in 0..n {
            for j in 0..n {
                b[i * n + j] = (0..n).map(|l| v[l * n + i].conj() * hv[l * n + j]).sum();
            }
        }
        jacobi_in_place(&mut b, &mut v, n);
        for i in 0..n {
            best = best.max(b[i * n + i].re);
        }
    }
    best
}

pub fn random_unit<R: Rng>(rng: &mut R, n: usize) -> Vec<C64> {
    let v: Vec<C64> = (0..n).map(|_| gaussian(rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

pub fn apply(a: &Dense, x: &[C64]) -> Vec<C64> {
    a.iter().map(|row| row.iter().zip(x).map(|(p, q)| p * q).sum()).collect()
}

pub fn dot(x: &[C64], y: &[C64]) -> C64 {
    x.iter().zip(y).map(|(p, q)| p * q.conj()).sum()
}

/// `min sqrt|⟨T²x,x⟩|` over random unit vectors.
pub fn mu_samples(t: &Dense, samples: usize, seed: u64) -> f64 {
    let t2 = mul(t, t);
    let mut g = rng(seed);
    (0..samples)
        .map(|_| {
            let x = random_unit(&mut g, t.len());
            dot(&apply(&t2, &x), &x).norm()
        })
        .fold(f64::INFINITY, f64::min)
        .sqrt()
}

/// Upper bound on `inf sqrt|⟨T²x,x⟩|` from exactly `budget` evaluations at
/// unit vectors: half uniform samples, half random-walk refinement of the
/// ten best samples.
pub fn mu_refined(t: &Dense, budget: usize, seed: u64) -> f64 {
    let n = t.len();
    let t2 = mul(t, t);
    let f = |x: &[C64]| dot(&apply(&t2, x), x).norm();
    let mut g = rng(seed);
    let uniform = budget / 2;
    let mut pool: Vec<(f64, Vec<C64>)> = (0..uniform)
        .map(|_| {
            let x = random_unit(&mut g, n);
            (f(&x), x)
        })
        .collect();
    pool.sort_by(|a, b| a.0.total_cmp(&b.0));
    pool.truncate(10);
    let per_start = (budget - uniform) / pool.len();
    let mut best = pool[0].0;
    for (mut fx, mut x) in pool {
        let mut step = 0.1;
        for _ in 0..per_start {
            let y: Vec<C64> = x.iter().map(|xi| xi + gaussian(&mut g) * step).collect();
            let norm = y.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            let y: Vec<C64> = y.into_iter().map(|z| z / norm).collect();
            let fy = f(&y);
            if fy < fx {
                (fx, x) = (fy, y);
                step *= 1.5;
            } else {
                step = (step * 0.9).max(1e-12);
            }
        }
        best = best.min(fx);
    }
    best.sqrt()
}

/// Unitary from Gram–Schmidt on a complex Gaussian matrix (columns).
pub fn random_unitary<R: Rng>(rng: &mut R, n: usize) -> Dense {
    let mut cols: Vec<Vec<C64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<C64> = (0..n).map(|_| gaussian(rng)).collect();
        for _ in 0..2 {
            for u in &cols {
                let p = dot(&v, u);
                for (vi, ui) in v.iter_mut().zip(u) {
                    *vi -= p * ui;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    (0..n).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect()
}

/// `U diag(spectrum) U*` with a known spectrum.
pub fn normal_with_spectrum<R: Rng>(rng: &mut R, spectrum: &[C64]) -> Dense {
    let n = spectrum.len();
    let u = random_unitary(rng, n);
    let d: Dense = (0..n)
        .map(|i| (0..n).map(|j| if i == j { spectrum[i] } else { c(0.0, 0.0) }).collect())
        .collect();
    mul(&mul(&u, &d), &adj(&u))
}

pub fn disk_point<R: Rng>(rng: &mut R, radius: f64) -> C64 {
    let (u, v): (f64, f64) = (rng.random(), rng.random());
    C64::from_polar(radius * u.sqrt(), TAU * v)
}

pub fn random_normal<R: Rng>(rng: &mut R, n: usize) -> (Dense, Vec<C64>) {
    let spectrum: Vec<C64> = (0..n).map(|_| disk_point(rng, 1.0)).collect();
    (normal_with_spectrum(rng, &spectrum), spectrum)
}

pub fn random_general<R: Rng>(rng: &mut R, n: usize) -> Dense {
    let s = 1.0 / (n as f64).sqrt();
    (0..n).map(|_| (0..n).map(|_| gaussian(rng) * s).collect()).collect()
}

pub fn vector(v: &[C64]) -> ComplexVector {
    ComplexVector::from_slice(v).unwrap()
}

/// Numerical radius of the `n×n` upper shift: `cos(π/(n+1))`.
pub fn shift_radius(n: usize) -> f64 {
    (PI / (n as f64 + 1.0)).cos()
}
