use std::fmt::Write;

use crate::error::Result;
use crate::linalg::{matmul, normality_defect, operator_norm, ComplexMatrix, NORMALITY_TOL};
use crate::range::{numerical_radius, spectral_radius, RadiusResult};
use crate::sphere::{delta, mu, xi, InfimumEstimate};

/// Residuals of `w(A) = r(A) = ‖A‖` and `‖A²‖ = ‖A‖²`, each relative to
/// `‖A‖` (resp. `‖A‖²`).
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityResiduals {
    pub radius_vs_norm: f64,
    pub spectral_vs_norm: f64,
    pub square_norm: f64,
}

#[derive(Debug, Clone)]
pub struct Analysis {
    pub n: usize,
    pub normality_defect: f64,
    pub normal: bool,
    pub norm: f64,
    pub radius: RadiusResult,
    pub spectral_radius: f64,
    pub xi: InfimumEstimate,
    pub mu: InfimumEstimate,
    pub delta: InfimumEstimate,
    /// Present for normal input only.
    pub residuals: Option<IdentityResiduals>,
}

/// Summary of one matrix; `tol` is the relative enclosure width for `w(A)`.
pub fn analyze(a: &ComplexMatrix, tol: f64, delta_restarts: usize) -> Result<Analysis> {
    let norm = operator_norm(a);
    let radius = numerical_radius(a, if norm > 0.0 { tol * norm } else { tol })?;
    let defect = normality_defect(a);
    let normal = defect <= NORMALITY_TOL;
    let rho = spectral_radius(a);
    let residuals = normal.then(|| {
        let scale = norm.max(f64::MIN_POSITIVE);
        let sq = operator_norm(&matmul(a, a).expect("square"));
        IdentityResiduals {
            radius_vs_norm: (radius.value - norm).abs() / scale,
            spectral_vs_norm: (rho - norm).abs() / scale,
            square_norm: (sq - norm * norm).abs() / (scale * scale),
        }
    });
    Ok(Analysis {
        n: a.dim(),
        normality_defect: defect,
        normal,
        norm,
        spectral_radius: rho,
        xi: xi(a),
        mu: mu(a),
        delta: delta(a, delta_restarts)?,
        radius,
        residuals,
    })
}

impl Analysis {
    /// `key: value` lines.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let mut line = |k: &str, v: String| {
            let _ = writeln!(s, "{k}: {v}");
        };
        line("n", self.n.to_string());
        line("normality_defect", format!("{:.6e}", self.normality_defect));
        line("normal", self.normal.to_string());
        line("norm", format!("{:.16e}", self.norm));
        line("numerical_radius", format!("{:.16e}", self.radius.value));
        line(
            "numerical_radius_interval",
            format!("[{:.16e}, {:.16e}]", self.radius.value, self.radius.upper),
        );
        line("spectral_radius", format!("{:.16e}", self.spectral_radius));
        line("xi", format!("{:.16e}", self.xi.value));
        line("mu", format!("{:.16e} (certified: {})", self.mu.value, self.mu.certified));
        line("delta", format!("{:.16e} (certified: {})", self.delta.value, self.delta.certified));
        match &self.residuals {
            Some(r) => {
                line("residual_radius_vs_norm", format!("{:.3e}", r.radius_vs_norm));
                line("residual_spectral_vs_norm", format!("{:.3e}", r.spectral_vs_norm));
                line("residual_square_norm", format!("{:.3e}", r.square_norm));
            }
            None => line("residuals", "skipped (matrix is not normal)".into()),
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::C64;

    #[test]
    fn rotation_identities() {
        let a = ComplexMatrix::diag(&[C64::new(1.0, 0.0), C64::new(0.0, 1.0)]).unwrap();
        let r = analyze(&a, 1e-8, 2).unwrap();
        assert!(r.normal);
        assert!((r.radius.value - 1.0).abs() < 1e-8 && (r.norm - 1.0).abs() < 1e-12);
        let res = r.residuals.unwrap();
        assert!(res.radius_vs_norm <= 1e-8 && res.spectral_vs_norm <= 1e-8 && res.square_norm <= 1e-8);
    }

    #[test]
    fn nilpotent_is_flagged() {
        let a = ComplexMatrix::from_real_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        let r = analyze(&a, 1e-8, 2).unwrap();
        assert!(!r.normal && r.residuals.is_none());
        assert!((r.radius.value - 0.5).abs() < 1e-8);
        assert!(r.spectral_radius.abs() < 1e-12);
        assert!(r.render().contains("normal: false"));
    }

    #[test]
    fn identity_values() {
        let r = analyze(&ComplexMatrix::identity(3), 1e-8, 2).unwrap();
        assert!((r.mu.value - 1.0).abs() < 1e-9);
        assert_eq!(r.delta.value, 0.0);
        assert!((r.xi.value - 1.0).abs() < 1e-12);
    }
}
