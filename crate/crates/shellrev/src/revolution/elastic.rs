use serde::{Deserialize, Serialize};

use super::kinematics::{StrainJets, StrainState};
use crate::error::{Result, ShellError};
use crate::jet::Jet;

/// Isotropic shell stiffness derived from plane-stress plate theory.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ElasticModuli {
    pub mu: f64,
    pub nu: f64,
    pub h: f64,
}

impl ElasticModuli {
    /// Shear modulus `mu > 0`, thickness `h > 0`, Poisson ratio `nu ∈ [−1, 1)`.
    pub fn new(mu: f64, nu: f64, h: f64) -> Result<Self> {
        if !(mu.is_finite() && mu > 0.0) {
            return Err(ShellError::InvalidParameter(format!("shear modulus must be positive, got {mu}")));
        }
        if !(h.is_finite() && h > 0.0) {
            return Err(ShellError::InvalidParameter(format!("thickness must be positive, got {h}")));
        }
        if !(nu.is_finite() && (-1.0..1.0).contains(&nu)) {
            return Err(ShellError::InvalidParameter(format!("Poisson ratio must lie in [-1, 1), got {nu}")));
        }
        Ok(Self { mu, nu, h })
    }

    pub fn c1(&self) -> f64 {
        2.0 * self.mu * self.nu * self.h / (1.0 - self.nu)
    }

    pub fn c2(&self) -> f64 {
        2.0 * self.mu * self.h
    }

    pub fn d1(&self) -> f64 {
        self.h * self.h / 12.0 * self.c1()
    }

    pub fn d2(&self) -> f64 {
        self.h * self.h / 12.0 * self.c2()
    }

    pub fn b1(&self) -> Result<f64> {
        let (c1, c2) = (self.c1(), self.c2());
        let det = 2.0 * c1 + c2;
        if det.abs() <= 1e-14 * c2 {
            return Err(ShellError::DegenerateModuli("2·C1 + C2 = 0"));
        }
        Ok(-c1 / (c2 * det))
    }

    pub fn b2(&self) -> f64 {
        1.0 / self.c2()
    }

    pub fn a1(&self) -> Result<f64> {
        let (d1, d2) = (self.d1(), self.d2());
        let det = 2.0 * d1 + d2;
        if det.abs() <= 1e-14 * d2 {
            return Err(ShellError::DegenerateModuli("2·D1 + D2 = 0"));
        }
        Ok(-d1 / (d2 * det))
    }

    pub fn a2(&self) -> f64 {
        1.0 / self.d2()
    }

    /// Relative thickness parameter `h²/(12R²)`.
    pub fn gamma(&self, radius: f64) -> f64 {
        self.h * self.h / (12.0 * radius * radius)
    }

    /// Twice the strain energy density, `C1 ε² + C2 ε:ε + D1 ϰ² + D2 ϰ:ϰ`.
    pub fn energy_density2(&self, e: &StrainState) -> f64 {
        let tr_e = e.eps_phi + e.eps_s;
        let tr_k = e.kap_phi + e.kap_s;
        let ee = e.eps_phi.powi(2) + e.eps_s.powi(2) + 2.0 * e.eps_phis.powi(2);
        let kk = e.kap_phi.powi(2) + e.kap_s.powi(2) + e.kap_phis.powi(2) + e.kap_sphi.powi(2);
        self.c1() * tr_e * tr_e + self.c2() * ee + self.d1() * tr_k * tr_k + self.d2() * kk
    }
}

/// Force resultants `τ`, moment resultants `μ` and transverse shear forces `Q`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct StressState {
    pub tau_phi: f64,
    pub tau_s: f64,
    pub tau_phis: f64,
    pub mu_phi: f64,
    pub mu_s: f64,
    pub mu_phis: f64,
    pub mu_sphi: f64,
    /// Not determined by the constitutive law; filled in only by the equilibrium evaluators.
    pub q_phi: Option<f64>,
    pub q_s: Option<f64>,
}

/// Constitutive law. Shear forces are left unset.
pub fn stresses(m: &ElasticModuli, e: &StrainState) -> StressState {
    let (c1, c2, d1, d2) = (m.c1(), m.c2(), m.d1(), m.d2());
    let tr_e = e.eps_phi + e.eps_s;
    let tr_k = e.kap_phi + e.kap_s;
    StressState {
        tau_phi: c1 * tr_e + c2 * e.eps_phi,
        tau_s: c1 * tr_e + c2 * e.eps_s,
        tau_phis: c2 * e.eps_phis,
        mu_phi: d1 * tr_k + d2 * e.kap_phi,
        mu_s: d1 * tr_k + d2 * e.kap_s,
        mu_phis: d2 * e.kap_phis,
        mu_sphi: d2 * e.kap_sphi,
        q_phi: None,
        q_s: None,
    }
}

/// Inverse constitutive law.
pub fn strains_from_stresses(m: &ElasticModuli, st: &StressState) -> Result<StrainState> {
    let (b1, b2) = (m.b1()?, m.b2());
    let (a1, a2) = (m.a1()?, m.a2());
    let tr_t = st.tau_phi + st.tau_s;
    let tr_m = st.mu_phi + st.mu_s;
    Ok(StrainState {
        eps_phi: b1 * tr_t + b2 * st.tau_phi,
        eps_s: b1 * tr_t + b2 * st.tau_s,
        eps_phis: b2 * st.tau_phis,
        kap_phi: a1 * tr_m + a2 * st.mu_phi,
        kap_s: a1 * tr_m + a2 * st.mu_s,
        kap_phis: a2 * st.mu_phis,
        kap_sphi: a2 * st.mu_sphi,
    })
}

pub(crate) struct StressJets {
    pub tau_phi: Jet,
    pub tau_s: Jet,
    pub tau_phis: Jet,
    pub mu_phi: Jet,
    pub mu_s: Jet,
    pub mu_phis: Jet,
    pub mu_sphi: Jet,
}

pub(crate) fn stress_jets(m: &ElasticModuli, e: &StrainJets) -> StressJets {
    let (c1, c2, d1, d2) = (m.c1(), m.c2(), m.d1(), m.d2());
    let tr_e = &e.eps_phi + &e.eps_s;
    let tr_k = &e.kap_phi + &e.kap_s;
    StressJets {
        tau_phi: tr_e.scale(c1) + e.eps_phi.scale(c2),
        tau_s: tr_e.scale(c1) + e.eps_s.scale(c2),
        tau_phis: e.eps_phis.scale(c2),
        mu_phi: tr_k.scale(d1) + e.kap_phi.scale(d2),
        mu_s: tr_k.scale(d1) + e.kap_s.scale(d2),
        mu_phis: e.kap_phis.scale(d2),
        mu_sphi: e.kap_sphi.scale(d2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_definitions() {
        let m = ElasticModuli::new(2.0, 0.25, 0.1).unwrap();
        assert!((m.c1() - 2.0 * 2.0 * 0.25 * 0.1 / 0.75).abs() < 1e-15);
        assert!((m.c2() - 0.4).abs() < 1e-15);
        assert!((m.d2() - 0.01 / 12.0 * 0.4).abs() < 1e-16);
        assert!((m.gamma(2.0) - 0.01 / 48.0).abs() < 1e-18);
    }

    #[test]
    fn zero_strain_gives_zero_stress() {
        let m = ElasticModuli::new(1.0, 0.3, 0.2).unwrap();
        let st = stresses(&m, &StrainState::default());
        assert_eq!(st.tau_phi, 0.0);
        assert_eq!(st.mu_sphi, 0.0);
        assert!(st.q_phi.is_none());
        let e = strains_from_stresses(&m, &StressState::default()).unwrap();
        assert_eq!(e, StrainState::default());
    }

    #[test]
    fn pure_shear_and_hoop_strain() {
        let m = ElasticModuli::new(1.5, 0.3, 0.2).unwrap();
        let g = 0.01;
        let st = stresses(&m, &StrainState { eps_phis: g, ..Default::default() });
        assert_eq!(st.tau_phis, m.c2() * g);
        assert_eq!(st.tau_phi, 0.0);
        assert_eq!(st.tau_s, 0.0);
        let e = 0.02;
        let st = stresses(&m, &StrainState { eps_phi: e, ..Default::default() });
        assert!((st.tau_phi - (m.c1() + m.c2()) * e).abs() < 1e-16);
        assert!((st.tau_s - m.c1() * e).abs() < 1e-16);
    }

    #[test]
    fn equal_biaxial_inverse() {
        // Hand solution of the 2×2 isotropic system: ε = T/(2C1 + C2).
        let m = ElasticModuli::new(1.0, 0.3, 0.2).unwrap();
        let t = 3.0;
        let st = StressState { tau_phi: t, tau_s: t, ..Default::default() };
        let e = strains_from_stresses(&m, &st).unwrap();
        let expect = (2.0 * m.b1().unwrap() + m.b2()) * t;
        assert!((e.eps_phi - expect).abs() < 1e-14);
        assert!((e.eps_s - t / (2.0 * m.c1() + m.c2())).abs() < 1e-12);
    }

    #[test]
    fn auxetic_limit_is_degenerate() {
        let m = ElasticModuli::new(1.0, -1.0, 0.2).unwrap();
        assert!(matches!(
            strains_from_stresses(&m, &StressState::default()),
            Err(ShellError::DegenerateModuli(_))
        ));
    }

    #[test]
    fn invalid_moduli_rejected() {
        assert!(ElasticModuli::new(0.0, 0.3, 0.1).is_err());
        assert!(ElasticModuli::new(1.0, 1.0, 0.1).is_err());
        assert!(ElasticModuli::new(1.0, 0.3, -0.1).is_err());
    }
}
