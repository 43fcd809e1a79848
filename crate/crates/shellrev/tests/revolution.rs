use proptest::prelude::*;
use shellrev::cylinder::{solve_harmonic, HarmonicProblem, TheoryVariant};
use shellrev::field::Field;
use shellrev::geometry::{MeridianProfile, ProfileShape};
use shellrev::revolution::{
    consistency_residual, equilibrium_residual, shear_forces, strains, strains_from_stresses, stresses,
    DisplacementField, ElasticModuli, LoadField, StrainState, StressState,
};

fn shapes() -> Vec<MeridianProfile> {
    vec![
        MeridianProfile::cylinder(1.2).unwrap(),
        MeridianProfile::cone(0.7).unwrap(),
        MeridianProfile::sphere(0.8).unwrap(),
    ]
}

fn interior(p: &MeridianProfile, u: f64) -> f64 {
    let (lo, hi) = p.s_domain;
    lo + (hi - lo) * (0.05 + 0.9 * u)
}

fn strain_strategy() -> impl Strategy<Value = StrainState> {
    prop::array::uniform7(-1.0f64..1.0).prop_map(StrainState::from_array)
}

/// Random sum of travelling waves.
fn wave_field() -> impl Strategy<Value = Field> {
    prop::collection::vec((-1.0f64..1.0, 0i32..4, -2.0f64..2.0, 0.0f64..6.3), 1..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(Field::zero(), |acc, (a, kp, ks, ph)| acc + Field::cos_wave(a, kp as f64, ks, ph))
    })
}

proptest! {
    #[test]
    fn rigid_motions_are_strain_free(
        idx in 0usize..3,
        u in 0.0f64..1.0,
        phi in 0.0f64..6.3,
        t in prop::array::uniform3(-1.0f64..1.0),
        w in prop::array::uniform3(-1.0f64..1.0),
    ) {
        let p = &shapes()[idx];
        let field = DisplacementField::rigid(p.shape, t, w);
        let e = strains(p, &field, phi, interior(p, u)).unwrap();
        for v in e.as_array() {
            prop_assert!(v.abs() < 1e-11);
        }
    }

    #[test]
    fn bending_strain_is_symmetric(
        idx in 0usize..3,
        u in 0.0f64..1.0,
        phi in 0.0f64..6.3,
        a in wave_field(), b in wave_field(), c in wave_field(),
    ) {
        let p = &shapes()[idx];
        let e = strains(p, &DisplacementField::new(a, b, c), phi, interior(p, u)).unwrap();
        prop_assert!((e.kap_phis - e.kap_sphi).abs() < 1e-10 * (1.0 + e.kap_phis.abs()));
    }

    #[test]
    fn kinematic_strains_are_compatible(
        idx in 0usize..3,
        u in 0.0f64..1.0,
        phi in 0.0f64..6.3,
        a in wave_field(), b in wave_field(), c in wave_field(),
    ) {
        let p = &shapes()[idx];
        let r = consistency_residual(p, &DisplacementField::new(a, b, c), phi, interior(p, u)).unwrap();
        prop_assert!(r.relative() < 1e-9, "{:?}", r);
    }

    #[test]
    fn hooke_round_trip(e in strain_strategy(), mu in 0.1f64..10.0, nu in -0.9f64..0.49, h in 0.01f64..1.0) {
        let m = ElasticModuli::new(mu, nu, h).unwrap();
        let back = strains_from_stresses(&m, &stresses(&m, &e)).unwrap();
        for (x, y) in back.as_array().iter().zip(e.as_array()) {
            prop_assert!((x - y).abs() < 1e-11 * (1.0 + y.abs()));
        }
    }

    #[test]
    fn energy_is_positive(e in strain_strategy(), mu in 0.1f64..10.0, nu in 0.0f64..0.5, h in 0.01f64..1.0) {
        prop_assume!(e.as_array().iter().any(|v| v.abs() > 1e-6));
        let m = ElasticModuli::new(mu, nu, h).unwrap();
        prop_assert!(m.energy_density2(&e) > 0.0);
    }
}

#[test]
fn inflated_cylinder() {
    let r0 = 2.0;
    let p = MeridianProfile::cylinder(r0).unwrap();
    let c = 0.3;
    let u = DisplacementField::new(Field::zero(), Field::zero(), Field::constant(c));
    let e = strains(&p, &u, 0.4, 1.0).unwrap();
    assert!((e.eps_phi - c / r0).abs() < 1e-15);
    assert!((e.kap_phi + c / (r0 * r0)).abs() < 1e-15);
    assert_eq!((e.eps_s, e.kap_s), (0.0, 0.0));
    let m = ElasticModuli::new(1.0, 0.3, 0.1).unwrap();
    let (q_phi, q_s) = shear_forces(&p, &m, &u, &LoadField::zero(), 0.4, 1.0).unwrap();
    assert!(q_phi.abs() < 1e-15 && q_s.abs() < 1e-15);
}

#[test]
fn hoop_stretch_stresses() {
    let m = ElasticModuli::new(1.5, 0.3, 0.2).unwrap();
    let e = StrainState { eps_phi: 0.01, ..Default::default() };
    let st = stresses(&m, &e);
    assert!((st.tau_phi - (m.c1() + m.c2()) * 0.01).abs() < 1e-15);
    assert!((st.tau_s - m.c1() * 0.01).abs() < 1e-15);
    let g = StrainState { eps_phis: 0.02, ..Default::default() };
    assert!((stresses(&m, &g).tau_phis - m.c2() * 0.02).abs() < 1e-15);
}

#[test]
fn equal_biaxial_tension_inverse() {
    let m = ElasticModuli::new(2.0, 0.25, 0.1).unwrap();
    let t = 0.7;
    let st = StressState { tau_phi: t, tau_s: t, ..Default::default() };
    let e = strains_from_stresses(&m, &st).unwrap();
    let expect = (2.0 * m.b1().unwrap() + m.b2()) * t;
    assert!((e.eps_phi - expect).abs() < 1e-14 * expect.abs());
    assert!((e.eps_s - expect).abs() < 1e-14 * expect.abs());
}

#[test]
fn rigid_body_carries_applied_moments() {
    let p = MeridianProfile::cone(0.6).unwrap();
    let m = ElasticModuli::new(1.0, 0.3, 0.1).unwrap();
    let u = DisplacementField::rigid(p.shape, [0.3, -0.2, 0.1], [0.5, 0.4, -0.7]);
    let loads = LoadField { m_s: Field::constant(0.8), m_phi: Field::constant(-0.25), ..LoadField::zero() };
    let (q_phi, q_s) = shear_forces(&p, &m, &u, &loads, 1.0, 1.2).unwrap();
    assert!((q_phi - 0.8).abs() < 1e-13);
    assert!((q_s - 0.25).abs() < 1e-13);
    let r = equilibrium_residual(&p, &m, &u, &LoadField::zero(), 1.0, 1.2).unwrap();
    assert!(r.iter().all(|v| v.abs() < 1e-12 * m.c2()));
}

#[test]
fn harmonic_shear_matches_algebraic_values() {
    let pr = HarmonicProblem::pressure(1.3, 0.25, 2.0, 0.3, 2, 0.9, 1.4);
    let sol = solve_harmonic(TheoryVariant::Eliseev, &pr).unwrap();
    let (a_phi, a_s) = sol.shear_amplitudes(&pr).unwrap();
    let phase = 0.3;
    let u = sol.displacement_field(&pr, phase);
    let loads = pr.load_field(phase);
    let profile = pr.profile().unwrap();
    let m = pr.moduli().unwrap();
    for (phi, s) in [(0.1, 0.5), (1.7, 3.0), (4.0, 7.5)] {
        let (q_phi, q_s) = shear_forces(&profile, &m, &u, &loads, phi, s).unwrap();
        let c = (2.0 * phi + 0.9 * s + phase).cos();
        let scale = a_phi.abs().max(a_s.abs());
        assert!((q_phi - a_phi * c).abs() < 1e-9 * scale);
        assert!((q_s - a_s * c).abs() < 1e-9 * scale);
    }
}

#[test]
fn incompatible_hoop_strain() {
    use shellrev::revolution::StrainFields;
    let p = MeridianProfile::cylinder(1.0).unwrap();
    let e = StrainFields { eps_phi: Field::s_power(1.0, 2), ..StrainFields::zero() };
    let r = consistency_residual(&p, &e, 0.3, 0.7).unwrap();
    assert!(r.relative() > 0.1);
    assert!(matches!(p.shape, ProfileShape::Cylinder { .. }));
}
