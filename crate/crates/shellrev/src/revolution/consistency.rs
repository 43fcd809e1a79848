use serde::{Deserialize, Serialize};

use super::kinematics::{StrainJets, StrainSource};
use crate::error::Result;
use crate::field::Field;
use crate::geometry::MeridianProfile;
use crate::jet::Jet;

/// Strain components given directly as fields, independent of any displacement.
#[derive(Debug, Clone, PartialEq)]
pub struct StrainFields {
    pub eps_phi: Field,
    pub eps_s: Field,
    pub eps_phis: Field,
    pub kap_phi: Field,
    pub kap_s: Field,
    pub kap_phis: Field,
    pub kap_sphi: Field,
}

impl StrainFields {
    pub fn zero() -> Self {
        Self {
            eps_phi: Field::zero(),
            eps_s: Field::zero(),
            eps_phis: Field::zero(),
            kap_phi: Field::zero(),
            kap_s: Field::zero(),
            kap_phis: Field::zero(),
            kap_sphi: Field::zero(),
        }
    }
}

impl StrainSource for StrainFields {
    fn strain_jets(
        &self,
        profile: &MeridianProfile,
        phi: f64,
        s: f64,
        order: usize,
    ) -> Result<StrainJets> {
        profile.check(s)?;
        let j = |f: &Field| f.jet(phi, s, order);
        Ok(StrainJets {
            eps_phi: j(&self.eps_phi),
            eps_s: j(&self.eps_s),
            eps_phis: j(&self.eps_phis),
            kap_phi: j(&self.kap_phi),
            kap_s: j(&self.kap_s),
            kap_phis: j(&self.kap_phis),
            kap_sphi: j(&self.kap_sphi),
        })
    }
}

/// Compatibility residual with the auxiliary vector `Λ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConsistencyResidual {
    /// `(φ, s, n)` rows; all vanish for strains generated by a displacement field.
    pub residual: [f64; 3],
    /// Sum of the magnitudes of the individual terms in each row, for relative checks.
    pub scale: [f64; 3],
    pub lambda_phi: f64,
    pub lambda_s: f64,
}

impl ConsistencyResidual {
    /// Largest row residual relative to its own term magnitude (absolute if all terms vanish).
    pub fn relative(&self) -> f64 {
        (0..3)
            .map(|i| {
                if self.scale[i] > 0.0 {
                    self.residual[i].abs() / self.scale[i]
                } else {
                    self.residual[i].abs()
                }
            })
            .fold(0.0, f64::max)
    }
}

fn row(terms: &[Jet]) -> (f64, f64) {
    terms
        .iter()
        .fold((0.0, 0.0), |(sum, mag), t| (sum + t.value(), mag + t.value().abs()))
}

/// Evaluates the strain compatibility equations at `(φ, s)`.
pub fn consistency_residual(
    profile: &MeridianProfile,
    strains: &dyn StrainSource,
    phi: f64,
    s: f64,
) -> Result<ConsistencyResidual> {
    let g = profile.jets(s, 2)?;
    let e = strains.strain_jets(profile, phi, s, 2)?;
    let (k, sn, cs, dpsi) = (&g.k, &g.sin_psi, &g.cos_psi, &g.dpsi);

    let lambda_phi = k * &(e.eps_s.d_phi() - (&e.eps_phis * sn).scale(2.0)) - e.eps_phis.d_s();
    let lambda_s = k * &(-(&e.eps_s * sn) + &e.eps_phi * sn - e.eps_phis.d_phi()) + e.eps_phi.d_s();

    let (r_phi, m_phi) = row(&[
        k * &lambda_phi * cs,
        (k * &e.eps_phis * sn * dpsi).scale(2.0),
        -(k * &e.kap_phis * sn),
        -(k * &e.kap_sphi * sn),
        -(k * cs * e.eps_phis.d_s()),
        -(k * dpsi * e.eps_s.d_phi()),
        k * &e.kap_s.d_phi(),
        -e.kap_phis.d_s(),
    ]);
    let (r_s, m_s) = row(&[
        -(&lambda_s * dpsi),
        e.kap_phi.d_s(),
        -(k * &e.eps_phi * sn * dpsi),
        k * &e.eps_s * sn * dpsi,
        k * &e.kap_phi * sn,
        -(k * &e.kap_s * sn),
        k * cs * e.eps_phi.d_s(),
        k * dpsi * e.eps_phis.d_phi(),
        -(k * &e.kap_sphi.d_phi()),
    ]);
    let (r_n, m_n) = row(&[
        -(k * &e.kap_s * cs),
        k * &e.eps_s * dpsi * cs,
        k * &e.eps_phi * dpsi * cs,
        k * &lambda_phi.d_phi(),
        k * &lambda_s * sn,
        &e.kap_phi * dpsi,
        lambda_s.d_s(),
    ]);

    Ok(ConsistencyResidual {
        residual: [r_phi, r_s, r_n],
        scale: [m_phi, m_s, m_n],
        lambda_phi: lambda_phi.value(),
        lambda_s: lambda_s.value(),
    })
}
