//! Library results against independent reference computations.

mod common;

use common::*;
use nrcert::hypotheses::{fit_lambda, Objective};
use nrcert::linalg::{herm_eig_extremes, min_gain as lib_min_gain, operator_norm, svd_extremes};
use nrcert::range::{numerical_radius, resolvent_gap, spectral_radius};
use nrcert::sphere::{delta, mu, sphere_oracle, xi};
use nrcert::{ComplexMatrix, C64};

#[test]
fn jacobi_matches_cubic_formula() {
    let mut g = rng(11);
    for _ in 0..50 {
        let a = random_general(&mut g, 3);
        let h = lin(&a, c(1.0, 0.0), &adj(&a), c(1.0, 0.0));
        let cubic = cubic_eigh(&h);
        let (jac, _) = jacobi_eigh(&h);
        for k in 0..3 {
            assert!((cubic[k] - jac[k]).abs() < 1e-10, "{cubic:?} {jac:?}");
        }
    }
}

#[test]
fn hermitian_extremes_match_cubic_formula() {
    let mut g = rng(12);
    for _ in 0..100 {
        let a = random_general(&mut g, 3);
        let h = lin(&a, c(0.5, 0.0), &adj(&a), c(0.5, 0.0));
        let roots = cubic_eigh(&h);
        let e = herm_eig_extremes(&from_dense(&h)).unwrap();
        assert!((e.lambda_min - roots[0]).abs() < 1e-10);
        assert!((e.lambda_max - roots[2]).abs() < 1e-10);
        let hv = from_dense(&h).quad_form(&e.v_max).unwrap();
        assert!((hv.re - roots[2]).abs() < 1e-10);
    }
}

#[test]
fn singular_values_match_jacobi() {
    let mut g = rng(13);
    for n in 1..=8 {
        for _ in 0..6 {
            let a = random_general(&mut g, n);
            let m = from_dense(&a);
            let (top, bottom) = (op_norm(&a), min_gain(&a));
            assert!((operator_norm(&m) - top).abs() <= 1e-10 * top.max(1.0));
            assert!((lib_min_gain(&m) - bottom).abs() <= 1e-9 * top.max(1.0));
            let s = svd_extremes(&m);
            let av = m.apply(&s.v_max).unwrap().norm();
            assert!((av - top).abs() <= 1e-10 * top.max(1.0));
        }
    }
}

#[test]
fn radius_matches_theta_sweep() {
    let mut g = rng(14);
    for n in 2..=5 {
        for _ in 0..3 {
            let a = random_general(&mut g, n);
            let oracle = radius_sweep(&a, 10_000);
            let r = numerical_radius(&from_dense(&a), 1e-10).unwrap();
            // The sweep undershoots by at most w·(π/10000)²/2.
            assert!(r.upper >= oracle - 1e-12, "{} < {}", r.upper, oracle);
            assert!((r.value - oracle).abs() <= 1e-7, "{} vs {}", r.value, oracle);
        }
    }
}

#[test]
fn radius_of_shift_matrices() {
    for n in 2..=10 {
        let a = ComplexMatrix::from_fn(n, |i, j| if j == i + 1 { c(1.0, 0.0) } else { c(0.0, 0.0) }).unwrap();
        let r = numerical_radius(&a, 1e-10).unwrap();
        let want = shift_radius(n);
        assert!(r.value <= want + 1e-12 && r.upper >= want - 1e-12, "n={n} {r:?}");
    }
}

#[test]
fn radius_of_two_by_two_ellipse() {
    // W([[1, b], [0, -1]]) is the ellipse with foci ±1 and minor semi-axis
    // |b|/2, so w = sqrt(1 + |b|²/4).
    for b in [c(0.3, 0.0), c(1.0, 1.0), c(-2.0, 0.5), c(0.0, 4.0)] {
        let a = ComplexMatrix::from_rows(&[vec![c(1.0, 0.0), b], vec![c(0.0, 0.0), c(-1.0, 0.0)]]).unwrap();
        let want = (1.0 + b.norm_sqr() / 4.0).sqrt();
        let r = numerical_radius(&a, 1e-11).unwrap();
        assert!((r.value - want).abs() <= 1e-11, "{} vs {want}", r.value);
    }
}

#[test]
fn resolvent_gap_equals_spectral_distance() {
    let mut g = rng(15);
    for n in 2..=6 {
        for _ in 0..4 {
            let (a, spectrum) = random_normal(&mut g, n);
            let m = from_dense(&a);
            for _ in 0..5 {
                let z = disk_point(&mut g, 1.5);
                let d = spectrum.iter().map(|l| (z - l).norm()).fold(f64::INFINITY, f64::min);
                let (sigma, dist) = resolvent_gap(&m, z);
                assert!((sigma - d).abs() <= 1e-9, "{sigma} vs {d}");
                assert!((dist - d).abs() <= 1e-9);
            }
            let rho = spectrum.iter().map(|l| l.norm()).fold(0.0, f64::max);
            assert!((spectral_radius(&m) - rho).abs() <= 1e-9);
        }
    }
}

#[test]
fn mu_of_two_by_two_normal() {
    // W(T²) is the segment [d₁², d₂²]; μ² is its distance to 0.
    let mut g = rng(16);
    for _ in 0..40 {
        let d = [disk_point(&mut g, 1.0), disk_point(&mut g, 1.0)];
        let t = normal_with_spectrum(&mut g, &d);
        let (p, q) = (d[0] * d[0], d[1] * d[1]);
        let dir = q - p;
        let s = if dir.norm_sqr() > 0.0 {
            (-(p * dir.conj()).re / dir.norm_sqr()).clamp(0.0, 1.0)
        } else {
            0.0
        };
        let want = (p + dir * s).norm().sqrt();
        let got = mu(&from_dense(&t));
        assert!((got.value - want).abs() <= 1e-7, "{} vs {want}", got.value);
        assert!(got.lower_bound <= want + 1e-12);
    }
}

#[test]
fn mu_bounded_by_independent_sampling() {
    let mut g = rng(17);
    for n in 2..=4 {
        for _ in 0..4 {
            let a = random_general(&mut g, n);
            let sampled = mu_samples(&a, 4000, n as u64);
            let m = mu(&from_dense(&a));
            assert!(m.value <= sampled + 1e-12);
            let witness = from_dense(&mul(&a, &a)).quad_form(&m.witness).unwrap().norm().sqrt();
            assert!((witness - m.value).abs() <= 1e-6);
        }
    }
}

#[test]
fn xi_is_smallest_singular_value() {
    let mut g = rng(18);
    for n in 1..=6 {
        let a = random_general(&mut g, n);
        let x = xi(&from_dense(&a));
        assert!((x.value - min_gain(&a)).abs() <= 1e-9);
        let oracle = sphere_oracle("xi", &from_dense(&a), 500, 3).unwrap();
        assert!(x.value <= oracle + 1e-12);
    }
}

#[test]
fn delta_vanishes_on_normal_matrices() {
    let mut g = rng(19);
    for n in 1..=6 {
        let (a, _) = random_normal(&mut g, n);
        let m = from_dense(&a);
        let d = delta(&m, 2).unwrap();
        assert!(d.value.abs() <= 1e-9);
        let x = &d.witness;
        let tx = m.apply(x).unwrap();
        let t2 = from_dense(&mul(&a, &a)).quad_form(x).unwrap();
        assert!((tx.norm() - t2.norm().sqrt()).abs() <= 1e-9);
    }
}

#[test]
fn fit_lambda_on_constructed_ray() {
    let mut g = rng(20);
    for n in 2..=6 {
        let angle = 0.7 * n as f64;
        let spectrum: Vec<C64> = (0..n).map(|k| C64::from_polar(0.2 + k as f64 * 0.3, angle)).collect();
        let a = from_dense(&normal_with_spectrum(&mut g, &spectrum));
        let fit = fit_lambda(&a, Objective::MinDefect).unwrap();
        assert!(fit.achieved <= 1e-10);
        assert!((fit.params.lambda.norm() - 1.0).abs() <= 1e-12);
        assert!((fit.params.lambda - C64::from_polar(1.0, 2.0 * angle)).norm() <= 1e-9);
    }
}

