use super::elastic::{stress_jets, ElasticModuli, StressJets};
use super::kinematics::StrainSource;
use super::{DisplacementField, LoadField};
use crate::error::Result;
use crate::geometry::{MeridianProfile, ProfileJets};
use crate::jet::Jet;

struct ShearJets {
    q_phi: Jet,
    q_s: Jet,
}

fn shear_jets(g: &ProfileJets, st: &StressJets, m_phi: &Jet, m_s: &Jet) -> ShearJets {
    let (k, sn) = (&g.k, &g.sin_psi);
    let q_phi = -(k * &(st.mu_phi.d_phi() + &st.mu_phis * sn + &st.mu_sphi * sn))
        - st.mu_sphi.d_s()
        + m_s;
    let q_s = -(k * &(-(&st.mu_phi * sn) + &st.mu_s * sn + st.mu_phis.d_phi()))
        - st.mu_s.d_s()
        - m_phi;
    ShearJets { q_phi, q_s }
}

/// Transverse shear forces `(Q_φ, Q_s)` implied by moment balance.
pub fn shear_forces(
    profile: &MeridianProfile,
    m: &ElasticModuli,
    u: &DisplacementField,
    loads: &LoadField,
    phi: f64,
    s: f64,
) -> Result<(f64, f64)> {
    let g = profile.jets(s, 1)?;
    let strains = u.strain_jets(profile, phi, s, 1)?;
    let st = stress_jets(m, &strains);
    let q = shear_jets(&g, &st, &loads.m_phi.jet(phi, s, 1), &loads.m_s.jet(phi, s, 1));
    Ok((q.q_phi.value(), q.q_s.value()))
}

/// Left-hand sides of the three force-balance equations, `(φ, s, n)` rows.
pub fn equilibrium_residual(
    profile: &MeridianProfile,
    m: &ElasticModuli,
    u: &DisplacementField,
    loads: &LoadField,
    phi: f64,
    s: f64,
) -> Result<[f64; 3]> {
    let g = profile.jets(s, 2)?;
    let strains = u.strain_jets(profile, phi, s, 2)?;
    let st = stress_jets(m, &strains);
    let q = shear_jets(&g, &st, &loads.m_phi.jet(phi, s, 2), &loads.m_s.jet(phi, s, 2));
    let (k, dk, sn, cs, dpsi, d2psi) = (&g.k, &g.dk, &g.sin_psi, &g.cos_psi, &g.dpsi, &g.d2psi);
    let k2 = k * k;
    let (fp, fs, fn_) = (
        loads.f_phi.value(phi, s),
        loads.f_s.value(phi, s),
        loads.f_n.value(phi, s),
    );

    let row_phi = &k2 * &(-(st.mu_phi.d_phi() * cs) - &st.mu_sphi * cs * sn)
        + k * &(st.tau_phi.d_phi()
            + (&st.tau_phis * sn).scale(2.0)
            + &st.mu_phis * dpsi * sn
            - st.mu_sphi.d_s() * cs
            + &st.mu_sphi * dpsi * sn
            + &q.q_phi * cs)
        + st.tau_phis.d_s()
        - dk * &st.mu_sphi * cs;

    let row_s = &k2 * &st.mu_phi * cs * sn
        + k * &(-(&st.tau_phi * sn) + &st.tau_s * sn + st.tau_phis.d_phi()
            + &st.mu_s * dpsi * sn
            + st.mu_phis.d_phi() * dpsi)
        + st.tau_s.d_s()
        + st.mu_s.d_s() * dpsi
        + &st.mu_s * d2psi
        - &q.q_s * dpsi;

    let row_n = &k2 * &st.mu_phi * cs * cs
        + k * &(-(&st.tau_phi * cs) + q.q_phi.d_phi() + &q.q_s * sn)
        + &st.tau_s * dpsi
        + &st.mu_s * dpsi * dpsi
        + q.q_s.d_s();

    Ok([row_phi.value() + fp, row_s.value() + fs, row_n.value() + fn_])
}
