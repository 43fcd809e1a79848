use serde::{Deserialize, Serialize};

use super::DisplacementField;
use crate::error::Result;
use crate::geometry::MeridianProfile;
use crate::jet::Jet;

/// Membrane strains and bending strains at one surface point.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct StrainState {
    pub eps_phi: f64,
    pub eps_s: f64,
    pub eps_phis: f64,
    pub kap_phi: f64,
    pub kap_s: f64,
    pub kap_phis: f64,
    pub kap_sphi: f64,
}

impl StrainState {
    pub fn as_array(&self) -> [f64; 7] {
        [
            self.eps_phi,
            self.eps_s,
            self.eps_phis,
            self.kap_phi,
            self.kap_s,
            self.kap_phis,
            self.kap_sphi,
        ]
    }

    pub fn from_array(a: [f64; 7]) -> Self {
        Self {
            eps_phi: a[0],
            eps_s: a[1],
            eps_phis: a[2],
            kap_phi: a[3],
            kap_s: a[4],
            kap_phis: a[5],
            kap_sphi: a[6],
        }
    }
}

/// Strain components as jets about a point.
#[derive(Debug, Clone)]
pub struct StrainJets {
    pub eps_phi: Jet,
    pub eps_s: Jet,
    pub eps_phis: Jet,
    pub kap_phi: Jet,
    pub kap_s: Jet,
    pub kap_phis: Jet,
    pub kap_sphi: Jet,
}

impl StrainJets {
    pub fn values(&self) -> StrainState {
        StrainState {
            eps_phi: self.eps_phi.value(),
            eps_s: self.eps_s.value(),
            eps_phis: self.eps_phis.value(),
            kap_phi: self.kap_phi.value(),
            kap_s: self.kap_s.value(),
            kap_phis: self.kap_phis.value(),
            kap_sphi: self.kap_sphi.value(),
        }
    }
}

/// Anything that can supply strain component jets of a requested order.
pub trait StrainSource {
    fn strain_jets(
        &self,
        profile: &MeridianProfile,
        phi: f64,
        s: f64,
        order: usize,
    ) -> Result<StrainJets>;
}

impl StrainSource for DisplacementField {
    fn strain_jets(
        &self,
        profile: &MeridianProfile,
        phi: f64,
        s: f64,
        order: usize,
    ) -> Result<StrainJets> {
        let n = order + 2;
        let g = profile.jets(s, n)?;
        let uf = self.u_phi.jet(phi, s, n);
        let us = self.u_s.jet(phi, s, n);
        let un = self.u_n.jet(phi, s, n);
        let (sn, cs, dpsi, d2psi, k, dk) = (&g.sin_psi, &g.cos_psi, &g.dpsi, &g.d2psi, &g.k, &g.dk);
        let k2 = k * k;

        let uf_p = uf.d_phi();
        let uf_s = uf.d_s();
        let us_p = us.d_phi();
        let us_s = us.d_s();
        let un_p = un.d_phi();
        let un_s = un.d_s();
        let un_pp = un_p.d_phi();
        let un_ps = un_p.d_s();
        let un_ss = un_s.d_s();

        let eps_phi = k * &(&uf_p + &(&us * sn) + &un * cs);
        let eps_s = &us_s - &(&un * dpsi);
        let eps_phis = (k * &(&us_p - &(&uf * sn)) + &uf_s).scale(0.5);

        let kap_phi = &k2 * &(&un_pp - &(&uf_p * cs).scale(2.0) - &us * sn * cs - &un * cs * cs)
            + k * &(&un_s * sn + &us * dpsi * sn);
        let kap_s = &un_ss + &(&us_s * dpsi).scale(2.0) + &us * d2psi - &un * dpsi * dpsi;
        let kap_phis = &k2 * &(-(&un_p * sn) + &uf * sn * cs)
            + k * &(&un_ps + &us_p * dpsi - &uf_s * cs);
        let kap_sphi = k * &(&un_ps - &uf_s * cs + &us_p * dpsi) + dk * &(&un_p - &uf * cs);

        Ok(StrainJets {
            eps_phi: eps_phi.truncate(order),
            eps_s: eps_s.truncate(order),
            eps_phis: eps_phis.truncate(order),
            kap_phi: kap_phi.truncate(order),
            kap_s: kap_s.truncate(order),
            kap_phis: kap_phis.truncate(order),
            kap_sphi: kap_sphi.truncate(order),
        })
    }
}

/// Strain components generated by the displacement field `u` at `(φ, s)`.
pub fn strains(
    profile: &MeridianProfile,
    u: &DisplacementField,
    phi: f64,
    s: f64,
) -> Result<StrainState> {
    Ok(u.strain_jets(profile, phi, s, 0)?.values())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::geometry::{frame_at, MeridianProfile};
    use nalgebra::Vector3;

    #[test]
    fn inflation_of_cylinder() {
        let r0 = 2.0;
        let p = MeridianProfile::cylinder(r0).unwrap();
        let c = 0.3;
        let u = DisplacementField::new(Field::zero(), Field::zero(), Field::constant(c));
        let e = strains(&p, &u, 0.4, 1.0).unwrap();
        assert!((e.eps_phi - c / r0).abs() < 1e-15);
        assert_eq!(e.eps_s, 0.0);
        assert!((e.kap_phi + c / (r0 * r0)).abs() < 1e-15);
        assert_eq!(e.kap_s, 0.0);
        assert_eq!(e.eps_phis, 0.0);
    }

    #[test]
    fn rigid_fields_match_cartesian_motion() {
        let p = MeridianProfile::torus(3.0, 1.0).unwrap();
        let shape = p.shape;
        let a = [0.3, -0.7, 1.1];
        let w = [0.9, 0.4, -0.5];
        let u = DisplacementField::rigid(shape, a, w);
        for &(phi, s) in &[(0.3, 0.5), (2.0, 4.0), (5.5, 1.7)] {
            let f = frame_at(&p, s, phi).unwrap();
            let pos = Vector3::new(p.axial(s), 0.0, 0.0)
                + crate::geometry::radial_unit(phi) * p.radius(s);
            let disp = Vector3::from(a) + Vector3::from(w).cross(&pos);
            assert!((u.u_phi.value(phi, s) - disp.dot(&f.e_phi)).abs() < 1e-13);
            assert!((u.u_s.value(phi, s) - disp.dot(&f.t)).abs() < 1e-13);
            assert!((u.u_n.value(phi, s) - disp.dot(&f.n)).abs() < 1e-13);
        }
    }

    #[test]
    fn rigid_motion_is_strain_free_on_sphere() {
        let p = MeridianProfile::sphere(1.3).unwrap();
        for u in DisplacementField::rigid_basis(p.shape) {
            let e = strains(&p, &u, 1.1, 0.9).unwrap();
            for c in e.as_array() {
                assert!(c.abs() < 1e-13, "{e:?}");
            }
        }
    }

    #[test]
    fn bending_strain_symmetry_on_cone() {
        let p = MeridianProfile::cone(0.6).unwrap();
        let u = DisplacementField::new(
            Field::sin_wave(0.2, 2.0, 1.3, 0.1),
            Field::cos_wave(0.5, 1.0, -0.7, 0.4) * Field::s(),
            Field::cos_wave(1.0, 3.0, 2.0, 0.0),
        );
        let e = strains(&p, &u, 0.8, 1.2).unwrap();
        assert!((e.kap_phis - e.kap_sphi).abs() < 1e-12);
    }
}
