//! Reproducible random test matrices.
//!
//! All randomness comes from `ChaCha20Rng::seed_from_u64(seed)`, drawn in a
//! fixed order: the Haar unitary first, then the spectrum, then the
//! perturbation.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    Normal,
    Hermitian,
    Unitary,
    NearNormal,
    RaySpectrum,
}

impl MatrixKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MatrixKind::Normal => "normal",
            MatrixKind::Hermitian => "hermitian",
            MatrixKind::Unitary => "unitary",
            MatrixKind::NearNormal => "near-normal",
            MatrixKind::RaySpectrum => "ray-spectrum",
        }
    }

    /// The spectrum law used when none is given.
    pub fn default_law(self) -> SpectrumLaw {
        match self {
            MatrixKind::Normal | MatrixKind::NearNormal => SpectrumLaw::UniformDisk { radius: 1.0 },
            MatrixKind::Hermitian => SpectrumLaw::UniformInterval { a: -1.0, b: 1.0 },
            MatrixKind::Unitary => SpectrumLaw::UniformCircle,
            MatrixKind::RaySpectrum => SpectrumLaw::Ray {
                angle: TAU / 8.0,
                radius: 1.0,
            },
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "normal" => Ok(MatrixKind::Normal),
            "hermitian" => Ok(MatrixKind::Hermitian),
            "unitary" => Ok(MatrixKind::Unitary),
            "near-normal" => Ok(MatrixKind::NearNormal),
            "ray-spectrum" => Ok(MatrixKind::RaySpectrum),
            other => Err(Error::InvalidSpec(format!("unknown matrix kind {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpectrumLaw {
    /// Uniform on the disk `|z| ≤ radius`.
    UniformDisk { radius: f64 },
    /// Uniform on the unit circle.
    UniformCircle,
    /// Uniform on the real interval `[a, b]`.
    UniformInterval { a: f64, b: f64 },
    /// Uniform on the segment `(0, radius]·e^{i·angle}`.
    Ray { angle: f64, radius: f64 },
}

impl SpectrumLaw {
    fn validate(&self) -> Result<()> {
        let ok = match *self {
            SpectrumLaw::UniformDisk { radius } => radius.is_finite() && radius > 0.0,
            SpectrumLaw::UniformCircle => true,
            SpectrumLaw::UniformInterval { a, b } => a.is_finite() && b.is_finite() && a <= b,
            SpectrumLaw::Ray { angle, radius } => angle.is_finite() && radius.is_finite() && radius > 0.0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSpec(format!("invalid spectrum law {self:?}")))
        }
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> C64 {
        match *self {
            SpectrumLaw::UniformDisk { radius } => {
                let (u, v): (f64, f64) = (rng.random(), rng.random());
                C64::from_polar(radius * u.sqrt(), TAU * v)
            }
            SpectrumLaw::UniformCircle => C64::from_polar(1.0, TAU * rng.random::<f64>()),
            SpectrumLaw::UniformInterval { a, b } => C64::new(a + (b - a) * rng.random::<f64>(), 0.0),
            SpectrumLaw::Ray { angle, radius } => C64::from_polar(radius * (1.0 - rng.random::<f64>()), angle),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorSpec {
    pub kind: MatrixKind,
    pub n: usize,
    pub seed: u64,
    pub law: SpectrumLaw,
    /// Frobenius size of the non-normal perturbation (near-normal only).
    pub perturbation: f64,
}

impl GeneratorSpec {
    /// A spec with the kind's default law and no perturbation.
    pub fn new(kind: MatrixKind, n: usize, seed: u64) -> Self {
        Self {
            kind,
            n,
            seed,
            law: kind.default_law(),
            perturbation: 0.0,
        }
    }

    pub fn with_law(mut self, law: SpectrumLaw) -> Self {
        self.law = law;
        self
    }

    pub fn with_perturbation(mut self, eps: f64) -> Self {
        self.perturbation = eps;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidSpec("dimension must be at least 1".into()));
        }
        self.law.validate()?;
        let law_ok = match self.kind {
            MatrixKind::Normal | MatrixKind::NearNormal => true,
            MatrixKind::Hermitian => matches!(self.law, SpectrumLaw::UniformInterval { .. }),
            MatrixKind::Unitary => matches!(self.law, SpectrumLaw::UniformCircle),
            MatrixKind::RaySpectrum => matches!(self.law, SpectrumLaw::Ray { .. }),
        };
        if !law_ok {
            return Err(Error::InvalidSpec(format!(
                "{} matrices cannot use spectrum law {:?}",
                self.kind, self.law
            )));
        }
        if !(self.perturbation.is_finite() && self.perturbation >= 0.0) {
            return Err(Error::InvalidSpec(format!("perturbation must be finite and nonnegative, got {}", self.perturbation)));
        }
        if self.perturbation > 0.0 && self.kind != MatrixKind::NearNormal {
            return Err(Error::InvalidSpec("only near-normal matrices take a perturbation".into()));
        }
        Ok(())
    }
}

fn gaussian_matrix<R: Rng>(rng: &mut R, n: usize) -> DMatrix<C64> {
    DMatrix::from_fn(n, n, |_, _| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
}

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// phases of `R`'s diagonal moved into `Q`.
pub(crate) fn haar_unitary<R: Rng>(rng: &mut R, n: usize) -> DMatrix<C64> {
    let qr = gaussian_matrix(rng, n).qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { C64::new(1.0, 0.0) };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// Builds the matrix described by `spec`; a pure function of the spec.
pub fn generate(spec: &GeneratorSpec) -> Result<ComplexMatrix> {
    spec.validate()?;
    let n = spec.n;
    let mut rng = ChaCha20Rng::seed_from_u64(spec.seed);
    let u = haar_unitary(&mut rng, n);
    let spectrum: Vec<C64> = (0..n).map(|_| spec.law.sample(&mut rng)).collect();
    let scaled = DMatrix::from_fn(n, n, |i, j| u[(i, j)] * spectrum[j]);
    let mut a = scaled * u.adjoint();
    if spec.kind == MatrixKind::Hermitian {
        let adj = a.adjoint();
        a = (&a + adj).map(|z| z * 0.5);
    }
    if spec.kind == MatrixKind::NearNormal && spec.perturbation > 0.0 {
        let g = gaussian_matrix(&mut rng, n);
        let fro = g.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        a += g.map(|z| z * (spec.perturbation / fro));
    }
    ComplexMatrix::new(a)
}
