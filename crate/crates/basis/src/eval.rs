use num_complex::Complex64;

use crate::error::BasisError;
use crate::families::{fourier, hermite, jacobi, laguerre, spherical, zernike};
use crate::index::{FamilyId, MultiIndex};

/// Measure under which the scaled family is orthonormal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    /// `dphi` on `[0, 2 pi)`
    Dphi,
    /// `dx` on the real line
    DxLine,
    /// `dy` on `[0, inf)`
    DyHalfLine,
    /// `dx` on `[0, inf)`
    DxHalfLine,
    /// `r dr dphi / pi`, `phi` in `[-pi, pi)`
    Plane,
    /// `d(cos theta) dphi`
    Sphere,
    /// `dx` on `[-1, 1]`
    DxInterval,
    /// `dphi dchi dx / (2 pi^2)`, `chi` in `[0, pi]`
    Hypersphere,
    /// `r dr` on `[0, 1]`
    RDr,
    /// `r dr dphi` on the unit disk
    Disk,
}

impl Measure {
    pub fn tag(&self) -> &'static str {
        match self {
            Measure::Dphi => "dphi",
            Measure::DxLine => "dx(R)",
            Measure::DyHalfLine => "dy[0,inf)",
            Measure::DxHalfLine => "dx[0,inf)",
            Measure::Plane => "r dr dphi/pi",
            Measure::Sphere => "dcos(theta) dphi",
            Measure::DxInterval => "dx[-1,1]",
            Measure::Hypersphere => "dphi dchi dx/(2pi^2)",
            Measure::RDr => "r dr",
            Measure::Disk => "r dr dphi",
        }
    }
}

/// Factor making the family orthonormal, with its measure.
pub fn orthonormal_scale(index: &MultiIndex) -> (f64, Measure) {
    let c = index.components();
    match index.family() {
        FamilyId::FourierCircle => (1.0, Measure::Dphi),
        FamilyId::Hermite => (1.0, Measure::DxLine),
        FamilyId::LaguerreM { .. } => (1.0, Measure::DyHalfLine),
        FamilyId::AssocLaguerre => (1.0, Measure::DxHalfLine),
        FamilyId::PlaneZ => (1.0, Measure::Plane),
        FamilyId::SphericalY => ((c[0] as f64 + 0.5).sqrt(), Measure::Sphere),
        FamilyId::JacobiJ => ((0.5 * c[0] as f64 + 0.5).sqrt(), Measure::DxInterval),
        FamilyId::HypersphereN => (1.0, Measure::Hypersphere),
        FamilyId::ZernikeR => ((2.0 * (c[0] as f64 + 1.0)).sqrt(), Measure::RDr),
        FamilyId::ZernikeW => (1.0, Measure::Disk),
    }
}

/// Evaluates the unscaled family member at a point given in the natural
/// coordinates of [`FamilyId::coordinate_names`].
pub fn evaluate(index: &MultiIndex, point: &[f64]) -> Result<Complex64, BasisError> {
    let family = index.family();
    if point.len() != family.dimension() {
        return Err(BasisError::Dimension {
            family: family.tag(),
            expected: family.dimension(),
            got: point.len(),
        });
    }
    let c = index.components();
    let re = |v: f64| Complex64::new(v, 0.0);
    Ok(match family {
        FamilyId::FourierCircle => fourier::fourier(c[0], point[0]),
        FamilyId::Hermite => re(hermite::hermite(c[0] as u32, point[0])),
        FamilyId::LaguerreM { alpha } => re(laguerre::laguerre_m(c[0] as u32, alpha, point[0])?),
        FamilyId::AssocLaguerre => re(laguerre::assoc_laguerre(c[0], c[1], point[0])?),
        FamilyId::PlaneZ => laguerre::plane_z(c[0], c[1], point[0], point[1])?,
        FamilyId::SphericalY => spherical::sph_harm(c[0], c[1], point[0], point[1])?,
        FamilyId::JacobiJ => re(jacobi::algebraic_jacobi(c[0], c[1], c[2], point[0])?),
        FamilyId::HypersphereN => jacobi::hypersphere(c[0], c[1], c[2], point[0], point[1], point[2])?,
        FamilyId::ZernikeR => re(zernike::zernike_r(c[0], c[1], point[0])?),
        FamilyId::ZernikeW => zernike::zernike_w(c[0], c[1], point[0], point[1])?,
    })
}

/// Orthonormal member: `orthonormal_scale * evaluate`.
pub fn evaluate_scaled(index: &MultiIndex, point: &[f64]) -> Result<Complex64, BasisError> {
    Ok(evaluate(index, point)? * orthonormal_scale(index).0)
}
