//! Meridian profiles of shells of revolution and the local surface geometry.
//!
//! The surface is `r(φ, s) = x(s)·i + R(s)·ρ(φ)` with the meridian parametrized by
//! arc length, so `R′ = sin ψ` and `x′ = cos ψ`. The unit tangent to the meridian is
//! `t = i cos ψ + ρ sin ψ` and the normal is `n = ρ cos ψ − i sin ψ = e_φ × t`.
//! Curvature follows from direct differentiation of that frame: `∂n/∂φ = cos ψ e_φ`,
//! `∂n/∂s = −ψ′ t`, hence `b_φφ = −cos ψ / R` and `b_ss = ψ′`.

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Result, ShellError};
use crate::jet::Jet;

/// Closed-form generating curves with analytic derivatives of every order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ProfileShape {
    /// `R = radius`, `x = s`.
    Cylinder { radius: f64 },
    /// `R = s sin α`, `x = s cos α`; apex at `s = 0`.
    Cone { half_angle: f64 },
    /// `R = R₀ sin(s/R₀)`, `x = −R₀ cos(s/R₀)`; poles at `s = 0` and `s = πR₀`.
    Sphere { radius: f64 },
    /// Flat annulus/disk, `R = s`, `x = 0`.
    Plane,
    /// `R = c + a sin(s/a)`, `x = −a cos(s/a)` with `c > a`.
    Torus { center_distance: f64, tube_radius: f64 },
}

/// A meridian together with the closed interval of arc coordinates on which it is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeridianProfile {
    pub shape: ProfileShape,
    pub s_domain: (f64, f64),
}

/// Angle of the meridian tangent and its derivatives, with the hoop curvature factor `k = 1/R`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfileState {
    pub psi: f64,
    pub psi1: f64,
    pub psi2: f64,
    pub k: f64,
    pub k1: f64,
}

/// Orthonormal frame `(e_φ, t, n)` in Cartesian components; `i` is the symmetry axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceFrame {
    pub e_phi: Vector3<f64>,
    pub t: Vector3<f64>,
    pub n: Vector3<f64>,
}

/// Physical components of the curvature tensor and its trace.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvatureState {
    pub b_phiphi: f64,
    pub b_ss: f64,
    pub mean_h2: f64,
}

/// Unit vector along the symmetry axis.
pub fn axial_unit() -> Vector3<f64> {
    Vector3::new(1.0, 0.0, 0.0)
}

/// Unit radial vector `ρ(φ)` perpendicular to the axis.
pub fn radial_unit(phi: f64) -> Vector3<f64> {
    Vector3::new(0.0, phi.cos(), phi.sin())
}

/// Unit azimuthal vector `e_φ(φ) = dρ/dφ`.
pub fn azimuthal_unit(phi: f64) -> Vector3<f64> {
    Vector3::new(0.0, -phi.sin(), phi.cos())
}

fn harmonic_derivs(n: usize, amplitude: f64, rate: f64, arg: f64, start: usize) -> Vec<f64> {
    // d^k/ds^k [amplitude · sin(rate·s + start·π/2)] evaluated via phase shifts
    (0..=n)
        .map(|k| amplitude * rate.powi(k as i32) * (arg + (k + start) as f64 * PI / 2.0).sin())
        .collect()
}

impl ProfileShape {
    /// Derivatives `[R, R′, R″, …]` up to order `n` at `s`.
    pub fn radius_derivatives(&self, s: f64, n: usize) -> Vec<f64> {
        let mut out = vec![0.0; n + 1];
        match *self {
            ProfileShape::Cylinder { radius } => out[0] = radius,
            ProfileShape::Cone { half_angle } => {
                out[0] = s * half_angle.sin();
                if n >= 1 {
                    out[1] = half_angle.sin();
                }
            }
            ProfileShape::Plane => {
                out[0] = s;
                if n >= 1 {
                    out[1] = 1.0;
                }
            }
            ProfileShape::Sphere { radius } => {
                out = harmonic_derivs(n, radius, 1.0 / radius, s / radius, 0);
            }
            ProfileShape::Torus { center_distance, tube_radius } => {
                out = harmonic_derivs(n, tube_radius, 1.0 / tube_radius, s / tube_radius, 0);
                out[0] += center_distance;
            }
        }
        out
    }

    /// Derivatives `[x, x′, x″, …]` up to order `n` at `s`.
    pub fn axial_derivatives(&self, s: f64, n: usize) -> Vec<f64> {
        let mut out = vec![0.0; n + 1];
        match *self {
            ProfileShape::Cylinder { .. } => {
                out[0] = s;
                if n >= 1 {
                    out[1] = 1.0;
                }
            }
            ProfileShape::Cone { half_angle } => {
                out[0] = s * half_angle.cos();
                if n >= 1 {
                    out[1] = half_angle.cos();
                }
            }
            ProfileShape::Plane => {}
            ProfileShape::Sphere { radius } => {
                // −R₀ cos(s/R₀) = −R₀ sin(s/R₀ + π/2)
                out = harmonic_derivs(n, -radius, 1.0 / radius, s / radius, 1);
            }
            ProfileShape::Torus { tube_radius, .. } => {
                out = harmonic_derivs(n, -tube_radius, 1.0 / tube_radius, s / tube_radius, 1);
            }
        }
        out
    }

    /// Normalized Taylor coefficients of `R` about `s`.
    pub(crate) fn radius_series(&self, s: f64, n: usize) -> Vec<f64> {
        to_series(self.radius_derivatives(s, n))
    }

    pub(crate) fn axial_series(&self, s: f64, n: usize) -> Vec<f64> {
        to_series(self.axial_derivatives(s, n))
    }
}

fn to_series(mut derivs: Vec<f64>) -> Vec<f64> {
    let mut fact = 1.0;
    for (k, d) in derivs.iter_mut().enumerate() {
        if k > 0 {
            fact *= k as f64;
        }
        *d /= fact;
    }
    derivs
}

/// Jets of the profile quantities entering the component equations, all truncated
/// to the same order and constant in φ.
#[derive(Debug, Clone)]
pub(crate) struct ProfileJets {
    pub sin_psi: Jet,
    pub cos_psi: Jet,
    pub dpsi: Jet,
    pub d2psi: Jet,
    pub k: Jet,
    pub dk: Jet,
}

impl MeridianProfile {
    pub fn new(shape: ProfileShape, s_domain: (f64, f64)) -> Result<Self> {
        let (lo, hi) = s_domain;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(ShellError::InvalidParameter(format!(
                "meridian domain [{lo}, {hi}] must be a finite nonempty interval"
            )));
        }
        let ok = match shape {
            ProfileShape::Cylinder { radius } => radius > 0.0 && radius.is_finite(),
            ProfileShape::Cone { half_angle } => half_angle > 0.0 && half_angle <= PI / 2.0,
            ProfileShape::Sphere { radius } => radius > 0.0 && radius.is_finite(),
            ProfileShape::Plane => true,
            ProfileShape::Torus { center_distance, tube_radius } => {
                tube_radius > 0.0 && center_distance > tube_radius && center_distance.is_finite()
            }
        };
        if !ok {
            return Err(ShellError::InvalidParameter(format!("invalid profile shape {shape:?}")));
        }
        Ok(Self { shape, s_domain })
    }

    /// Cylinder of radius `radius` over `s ∈ [0, 10·radius]`.
    pub fn cylinder(radius: f64) -> Result<Self> {
        Self::new(ProfileShape::Cylinder { radius }, (0.0, 10.0 * radius))
    }

    /// Cone with half-opening angle `half_angle` over `s ∈ [0, 2]`; the apex is at `s = 0`.
    pub fn cone(half_angle: f64) -> Result<Self> {
        Self::new(ProfileShape::Cone { half_angle }, (0.0, 2.0))
    }

    /// Sphere of radius `radius` from pole to pole.
    pub fn sphere(radius: f64) -> Result<Self> {
        Self::new(ProfileShape::Sphere { radius }, (0.0, PI * radius))
    }

    /// Flat plate `R = s` over `s ∈ [0, 2]`.
    pub fn plane() -> Result<Self> {
        Self::new(ProfileShape::Plane, (0.0, 2.0))
    }

    /// Full torus section.
    pub fn torus(center_distance: f64, tube_radius: f64) -> Result<Self> {
        Self::new(
            ProfileShape::Torus { center_distance, tube_radius },
            (0.0, 2.0 * PI * tube_radius),
        )
    }

    pub fn with_domain(self, lo: f64, hi: f64) -> Result<Self> {
        Self::new(self.shape, (lo, hi))
    }

    pub fn domain_length(&self) -> f64 {
        self.s_domain.1 - self.s_domain.0
    }

    /// Checks `s` against the domain and the apex exclusion zone.
    pub fn check(&self, s: f64) -> Result<()> {
        let (lo, hi) = self.s_domain;
        if !(s >= lo && s <= hi) {
            return Err(ShellError::OutOfDomain { s, lo, hi });
        }
        let radius = self.radius(s);
        if radius <= 1e-9 * self.domain_length() {
            return Err(ShellError::ApexSingularity { s, radius });
        }
        Ok(())
    }

    pub fn radius(&self, s: f64) -> f64 {
        self.shape.radius_derivatives(s, 0)[0]
    }

    pub fn axial(&self, s: f64) -> f64 {
        self.shape.axial_derivatives(s, 0)[0]
    }

    pub(crate) fn jets(&self, s: f64, order: usize) -> Result<ProfileJets> {
        self.check(s)?;
        let top = order + 3;
        let r = Jet::from_s_series(&self.shape.radius_series(s, top), top);
        let x = Jet::from_s_series(&self.shape.axial_series(s, top), top);
        let sin_psi = r.d_s();
        let cos_psi = x.d_s();
        let dpsi = &cos_psi * &sin_psi.d_s() - &sin_psi * &cos_psi.d_s();
        let d2psi = dpsi.d_s();
        let k = r.recip();
        let dk = k.d_s();
        Ok(ProfileJets {
            sin_psi: sin_psi.truncate(order),
            cos_psi: cos_psi.truncate(order),
            dpsi: dpsi.truncate(order),
            d2psi,
            k: k.truncate(order),
            dk: dk.truncate(order),
        })
    }
}

/// Tangent angle, its derivatives and the hoop curvature factor at `s`.
pub fn profile_state(profile: &MeridianProfile, s: f64) -> Result<ProfileState> {
    profile.check(s)?;
    let r = profile.shape.radius_derivatives(s, 3);
    let x = profile.shape.axial_derivatives(s, 3);
    Ok(ProfileState {
        psi: r[1].atan2(x[1]),
        psi1: x[1] * r[2] - r[1] * x[2],
        psi2: x[1] * r[3] - r[1] * x[3],
        k: 1.0 / r[0],
        k1: -r[1] / (r[0] * r[0]),
    })
}

/// Local frame at `(φ, s)`.
pub fn frame_at(profile: &MeridianProfile, s: f64, phi: f64) -> Result<SurfaceFrame> {
    profile.check(s)?;
    let r = profile.shape.radius_derivatives(s, 1);
    let x = profile.shape.axial_derivatives(s, 1);
    let (sin_psi, cos_psi) = (r[1], x[1]);
    let rho = radial_unit(phi);
    let i = axial_unit();
    Ok(SurfaceFrame {
        e_phi: azimuthal_unit(phi),
        t: i * cos_psi + rho * sin_psi,
        n: rho * cos_psi - i * sin_psi,
    })
}

pub fn curvature_at(profile: &MeridianProfile, s: f64) -> Result<CurvatureState> {
    let st = profile_state(profile, s)?;
    let b_phiphi = -st.k * st.psi.cos();
    Ok(CurvatureState {
        b_phiphi,
        b_ss: st.psi1,
        mean_h2: b_phiphi + st.psi1,
    })
}
