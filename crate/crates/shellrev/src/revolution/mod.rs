//! Component equations of linear elastic shells of revolution.
//!
//! Displacements, loads and strain fields are [`Field`]s over `(φ, s)`; all derived
//! quantities are computed by exact jet propagation, so residuals reflect the
//! equations themselves rather than any discretization.

mod consistency;
mod elastic;
mod kinematics;
mod statics;

pub use consistency::{consistency_residual, ConsistencyResidual, StrainFields};
pub use elastic::{stresses, strains_from_stresses, ElasticModuli, StressState};
pub use kinematics::{strains, StrainJets, StrainSource, StrainState};
pub use statics::{equilibrium_residual, shear_forces};

use crate::field::Field;
use crate::geometry::ProfileShape;

/// Physical components `(u_φ, u_s, u_n)` of the mid-surface displacement.
#[derive(Debug, Clone, PartialEq)]
pub struct DisplacementField {
    pub u_phi: Field,
    pub u_s: Field,
    pub u_n: Field,
}

impl DisplacementField {
    pub fn new(u_phi: Field, u_s: Field, u_n: Field) -> Self {
        Self { u_phi, u_s, u_n }
    }

    pub fn zero() -> Self {
        Self::new(Field::zero(), Field::zero(), Field::zero())
    }

    /// Rigid motion `a + ω × r` written in surface components.
    ///
    /// `translation` and `rotation` are Cartesian with the first axis along the
    /// shell axis, matching [`crate::geometry::axial_unit`].
    pub fn rigid(shape: ProfileShape, translation: [f64; 3], rotation: [f64; 3]) -> Self {
        let sin_psi = || Field::sin_psi(shape);
        let cos_psi = || Field::cos_psi(shape);
        let r = || Field::radius(shape);
        let x = || Field::axial(shape);
        let (sf, cf) = (|| Field::phi().sin(), || Field::phi().cos());
        let [ax, ay, az] = translation;
        let [wx, wy, wz] = rotation;

        let u_phi = -ay * sf() + az * cf() + wx * r() - wy * (x() * cf()) - wz * (x() * sf());
        let u_s = ax * cos_psi()
            + ay * (sin_psi() * cf())
            + az * (sin_psi() * sf())
            + wy * ((r() * cos_psi() - x() * sin_psi()) * sf())
            + wz * ((x() * sin_psi() - r() * cos_psi()) * cf());
        let u_n = -ax * sin_psi()
            + ay * (cos_psi() * cf())
            + az * (cos_psi() * sf())
            - wy * ((x() * cos_psi() + r() * sin_psi()) * sf())
            + wz * ((x() * cos_psi() + r() * sin_psi()) * cf());
        Self::new(u_phi, u_s, u_n)
    }

    /// Translation along the axis, `u = c·i`.
    pub fn axial_translation(shape: ProfileShape, c: f64) -> Self {
        Self::rigid(shape, [c, 0.0, 0.0], [0.0; 3])
    }

    /// Rotation about the axis, `u_φ = c·R(s)`.
    pub fn axial_rotation(shape: ProfileShape, c: f64) -> Self {
        Self::rigid(shape, [0.0; 3], [c, 0.0, 0.0])
    }

    /// The six independent rigid motions with unit amplitude.
    pub fn rigid_basis(shape: ProfileShape) -> Vec<Self> {
        let mut out = Vec::with_capacity(6);
        for i in 0..3 {
            let mut e = [0.0; 3];
            e[i] = 1.0;
            out.push(Self::rigid(shape, e, [0.0; 3]));
            out.push(Self::rigid(shape, [0.0; 3], e));
        }
        out
    }
}

/// Distributed surface loads: forces `f` and moments `m` per unit area.
#[derive(Debug, Clone, PartialEq)]
pub struct LoadField {
    pub f_phi: Field,
    pub f_s: Field,
    pub f_n: Field,
    pub m_phi: Field,
    pub m_s: Field,
}

impl LoadField {
    pub fn zero() -> Self {
        Self {
            f_phi: Field::zero(),
            f_s: Field::zero(),
            f_n: Field::zero(),
            m_phi: Field::zero(),
            m_s: Field::zero(),
        }
    }

    pub fn normal(f_n: Field) -> Self {
        Self { f_n, ..Self::zero() }
    }
}
