//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line; the process
//! exits with a failure status if any criterion fails.

use std::time::Instant;

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use shellrev::cylinder::harmonic::system_determinant;
use shellrev::cylinder::{
    asymptotic_roots, char_poly, char_roots, denominator_in_h, discontinuity_thickness, eliseev_pressure_solution,
    harmonic_system, reference_roots, solve_harmonic, zero_root_count, HarmonicProblem, TheoryVariant,
};
use shellrev::field::Field;
use shellrev::geometry::MeridianProfile;
use shellrev::revolution::{
    consistency_residual, equilibrium_residual, strains, DisplacementField, ElasticModuli, LoadField,
};
use shellrev::tube3d::{
    averaged_radial, lame_axisymmetric, lame_constants, solve_radial_bvp, solve_radial_fixed, LoadCase, TubeProblem,
};

type Outcome = Result<String, String>;

fn report(id: u32, title: &str, outcome: Outcome) -> bool {
    match &outcome {
        Ok(detail) => println!("PASS criterion {id:>2} ({title}): {detail}"),
        Err(detail) => println!("FAIL criterion {id:>2} ({title}): {detail}"),
    }
    outcome.is_ok()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Largest relative distance from each expected root to its nearest computed root.
fn match_roots(expected: &[Complex64], computed: &[Complex64]) -> f64 {
    expected
        .iter()
        .map(|e| computed.iter().map(|c| (c - e).norm()).fold(f64::INFINITY, f64::min) / e.norm())
        .fold(0.0, f64::max)
}

const NUS: [f64; 3] = [0.25, 0.3, 0.49];
const GAMMAS: [f64; 3] = [1e-6, 1e-4, 1e-2];

fn eliseev_root_grid(m: i64) -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for nu in NUS {
        for g in GAMMAS {
            let roots = char_roots(&char_poly(TheoryVariant::Eliseev, m, nu, g)).map_err(|e| e.to_string())?;
            let expected = reference_roots(TheoryVariant::Eliseev, m, nu, g).ok_or("no closed form")?;
            ensure(roots.nonzero.len() == 4, || format!("ν={nu}, γ={g}: {} nonzero roots", roots.nonzero.len()))?;
            let err = match_roots(&expected, &roots.nonzero).max(match_roots(&roots.nonzero, &expected));
            ensure(err < 1e-8, || format!("ν={nu}, γ={g}: relative error {err:.3e}"))?;
            worst = worst.max(err);
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    ensure(elapsed < 1.0, || format!("runtime {elapsed:.3} s"))?;
    Ok(format!("max relative error {worst:.2e}, {elapsed:.3} s"))
}

fn criterion_01_roots_axisymmetric() -> bool {
    report(1, "Eliseev roots, m = 0", eliseev_root_grid(0))
}

fn criterion_02_roots_first_harmonic() -> bool {
    report(2, "Eliseev roots, m = 1", eliseev_root_grid(1))
}

fn criterion_03_zero_root_census() -> bool {
    let (nu, g) = (0.3, 1e-4);
    let mut expected: Vec<(TheoryVariant, i64, usize)> = TheoryVariant::ALL.iter().map(|&v| (v, 0, 4)).collect();
    use TheoryVariant::*;
    expected.extend([(Eliseev, 1, 4), (GoldenveiserBiderman, 1, 4), (Fluegge, 1, 4), (Vlasov, 1, 3), (Novichkov, 1, 3)]);
    let mismatches: Vec<String> = expected
        .iter()
        .filter_map(|&(v, m, want)| {
            let got = zero_root_count(v, m, nu, g);
            (got != want).then(|| format!("{v} m={m}: {got} (expected {want})"))
        })
        .collect();
    let outcome = if mismatches.is_empty() {
        Ok(format!("{} variant/harmonic pairs match", expected.len()))
    } else {
        Err(mismatches.join("; "))
    };
    report(3, "zero-root census", outcome)
}

fn criterion_04_closed_form_identity() -> bool {
    let outcome = (|| -> Outcome {
        let mut rng = StdRng::seed_from_u64(4);
        let start = Instant::now();
        let mut worst: f64 = 0.0;
        for _ in 0..1000 {
            let radius = rng.gen_range(0.3..3.0);
            let pr = HarmonicProblem::pressure(
                radius,
                rng.gen_range(0.005..1.95) * radius,
                rng.gen_range(0.1..100.0),
                rng.gen_range(0.0..0.49),
                rng.gen_range(0..=4),
                rng.gen_range(0.05..5.0) / radius,
                rng.gen_range(-2.0..2.0),
            );
            let a = solve_harmonic(TheoryVariant::Eliseev, &pr).map_err(|e| format!("{pr:?}: {e}"))?;
            let b = eliseev_pressure_solution(&pr).map_err(|e| format!("{pr:?}: {e}"))?;
            for (x, y) in [(a.u_phi, b.u_phi), (a.u_z, b.u_z), (a.u_n, b.u_n)] {
                let scale = y.abs().max(1e-300);
                let err = (x - y).abs() / scale;
                let tiny = (x - y).abs() <= 1e-12 * b.u_n.abs().max(b.u_phi.abs()).max(b.u_z.abs());
                ensure(err < 1e-10 || tiny, || format!("{pr:?}: {x} vs {y}"))?;
                if y != 0.0 {
                    worst = worst.max(err);
                }
            }
        }
        let elapsed = start.elapsed().as_secs_f64();
        ensure(elapsed < 5.0, || format!("runtime {elapsed:.3} s"))?;
        Ok(format!("1000 draws, max relative deviation {worst:.2e}, {elapsed:.3} s"))
    })();
    report(4, "harmonic solve equals closed form", outcome)
}

fn criterion_05_back_substitution() -> bool {
    let outcome = (|| -> Outcome {
        let mut rng = StdRng::seed_from_u64(5);
        let mut worst: f64 = 0.0;
        for trial in 0..100 {
            let radius = rng.gen_range(0.5..2.0);
            let p = rng.gen_range(0.5..2.0);
            let pr = HarmonicProblem::pressure(
                radius,
                rng.gen_range(0.01..1.5) * radius,
                rng.gen_range(0.5..5.0),
                rng.gen_range(0.0..0.45),
                rng.gen_range(0..=4),
                rng.gen_range(0.1..3.0) / radius,
                p,
            );
            let sol = solve_harmonic(TheoryVariant::Eliseev, &pr).map_err(|e| e.to_string())?;
            let phase = rng.gen_range(0.0..std::f64::consts::TAU);
            let u = sol.displacement_field(&pr, phase);
            let loads = pr.load_field(phase);
            let profile = pr.profile().map_err(|e| e.to_string())?;
            let moduli = pr.moduli().map_err(|e| e.to_string())?;
            let phi = rng.gen_range(0.0..std::f64::consts::TAU);
            let s = rng.gen_range(0.0..10.0 * radius);
            let r = equilibrium_residual(&profile, &moduli, &u, &loads, phi, s).map_err(|e| e.to_string())?;
            for (row, v) in r.iter().enumerate() {
                ensure(v.abs() < 1e-9 * p, || format!("point {trial}, row {row}: residual {v:.3e}, p = {p}"))?;
                worst = worst.max(v.abs() / p);
            }
        }
        Ok(format!("100 surface points, max |residual|/p = {worst:.2e}"))
    })();
    report(5, "equilibrium back-substitution", outcome)
}

fn criterion_06_membrane_limit() -> bool {
    let outcome = (|| -> Outcome {
        let radius = 1.0;
        let mut worst: f64 = 0.0;
        for k_phi in [0, 1] {
            for kzr in [0.5, 1.0, 2.0] {
                let pr = HarmonicProblem::pressure(radius, 1e-3 * radius, 1.0, 0.3, k_phi, kzr / radius, 1.0);
                let values: Vec<f64> = TheoryVariant::ALL
                    .iter()
                    .map(|&v| solve_harmonic(v, &pr).map(|s| s.u_n).map_err(|e| format!("{v}: {e}")))
                    .collect::<Result<_, _>>()?;
                for (i, a) in values.iter().enumerate() {
                    for b in &values[i + 1..] {
                        let spread = (a - b).abs() / a.abs().max(b.abs());
                        ensure(spread < 0.01, || format!("k_φ={k_phi}, k_zR={kzr}: {values:?}"))?;
                        worst = worst.max(spread);
                    }
                }
            }
        }
        Ok(format!("max pairwise relative spread {worst:.2e}"))
    })();
    report(6, "membrane limit at h/R = 1e-3", outcome)
}

/// Root of `det M(h)` by bisection, independent of the polynomial construction.
fn bisect_determinant(variant: TheoryVariant, mu: f64, k_z: f64, lo: f64, hi: f64) -> f64 {
    let det = |h: f64| system_determinant(&harmonic_system(variant, &HarmonicProblem::pressure(1.0, h, mu, 0.25, 1, k_z, 1.0)));
    let (mut a, mut b) = (lo, hi);
    let fa = det(a);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if (det(m) > 0.0) == (fa > 0.0) {
            a = m;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

fn criterion_07_discontinuity_equations() -> bool {
    let outcome = (|| -> Outcome {
        let proportional = |got: &[f64], printed: &[f64]| -> f64 {
            let lead = printed[printed.len() - 1];
            let norm: Vec<f64> = printed.iter().map(|c| c / lead).collect();
            let scale = norm.iter().fold(0.0f64, |m, c| m.max(c.abs()));
            if got.len() != norm.len() {
                return f64::INFINITY;
            }
            got.iter().zip(&norm).map(|(g, e)| (g - e).abs() / scale).fold(0.0, f64::max)
        };
        for kz in [0.2f64, 0.5, 1.0, 3.0] {
            let (k2, k4, k6) = (kz * kz, kz.powi(4), kz.powi(6));
            let vlasov = denominator_in_h(TheoryVariant::Vlasov, 1, kz, 0.25, 1.0).map_err(|e| e.to_string())?;
            let printed = [-1080.0 * k2, 0.0, 144.0 - 96.0 * k6 - 96.0 * k2 - 336.0 * k4, 0.0, 14.0 * k2 + 8.0 * k6 + 19.0 * k4 + 3.0];
            let err = proportional(&vlasov.coeffs, &printed);
            ensure(err < 1e-10, || format!("Vlasov k_z={kz}: coefficient mismatch {err:.2e}"))?;
            let fluegge = denominator_in_h(TheoryVariant::Fluegge, 1, kz, 0.25, 1.0).map_err(|e| e.to_string())?;
            let printed = [
                25920.0 * k2,
                0.0,
                -6912.0 + 8064.0 * k4 + 2304.0 * k6 - 4176.0 * k2,
                0.0,
                -1212.0 * k2 - 1608.0 * k4 - 768.0 * k6 + 288.0,
                0.0,
                -18.0 * k4 + 73.0 * k2 + 48.0 * k6,
            ];
            let err = proportional(&fluegge.coeffs, &printed);
            ensure(err < 1e-10, || format!("Flügge k_z={kz}: coefficient mismatch {err:.2e}"))?;
        }
        let d = discontinuity_thickness(TheoryVariant::Vlasov, 1, 1.0, 0.25, 1.0).map_err(|e| e.to_string())?;
        ensure(d.in_range.is_empty(), || format!("Vlasov k_z=1 in-range roots {:?}", d.in_range))?;
        let raw = d.out_of_range.first().copied().ok_or("no raw Vlasov root at k_z = 1")?;
        ensure((raw - 3.3116).abs() < 1e-3, || format!("Vlasov raw root {raw}"))?;
        for i in 0..=990 {
            let kz = 0.1 + 0.01 * i as f64;
            let d = discontinuity_thickness(TheoryVariant::Eliseev, 1, kz, 0.25, 1.0).map_err(|e| e.to_string())?;
            ensure(d.in_range.is_empty(), || format!("Eliseev k_z={kz}: h_d = {:?}", d.in_range))?;
        }
        let hd = discontinuity_thickness(TheoryVariant::Vlasov, 1, 0.5, 0.25, 1.0).map_err(|e| e.to_string())?;
        let hd = *hd.in_range.first().ok_or("no in-range Vlasov root at k_z = 0.5")?;
        let h1 = bisect_determinant(TheoryVariant::Vlasov, 1.0, 0.5, 0.5 * hd, (1.5 * hd).min(1.999));
        let h2 = bisect_determinant(TheoryVariant::Vlasov, 1e3, 0.5, 0.5 * hd, (1.5 * hd).min(1.999));
        ensure((h1 - h2).abs() <= 1e-12 * h1, || format!("μ dependence: {h1} vs {h2}"))?;
        ensure((h1 - hd).abs() <= 1e-9 * hd, || format!("polynomial root {hd} vs determinant root {h1}"))?;
        Ok(format!("Vlasov raw h_d(k_z=1) = {raw:.5}, Vlasov h_d(k_z=0.5) = {hd:.6}, Eliseev grid clear"))
    })();
    report(7, "discontinuity equations", outcome)
}

fn criterion_08_tube_oracle() -> bool {
    let outcome = (|| -> Outcome {
        let mut rng = StdRng::seed_from_u64(8);
        let mut worst: f64 = 0.0;
        for _ in 0..100 {
            let radius = rng.gen_range(0.5..2.0);
            let pr = TubeProblem {
                radius,
                thickness: rng.gen_range(0.01..1.9) * radius,
                nu: rng.gen_range(0.0..0.45),
                mu: rng.gen_range(0.5..10.0),
                k_phi: 0,
                k_z: 0.0,
                load_case: LoadCase::ALL[rng.gen_range(0..3)],
                p: rng.gen_range(0.1..5.0),
            };
            let num = solve_radial_bvp(&pr, 16).map_err(|e| e.to_string())?;
            let (a, b) = lame_constants(&pr);
            let peak = num.radii.iter().map(|r| (a * r + b / r).abs()).fold(0.0, f64::max);
            for (r, u) in num.radii.iter().zip(&num.u_r) {
                let err = (u - (a * r + b / r)).abs() / peak;
                ensure(err < 1e-7, || format!("{pr:?}: profile error {err:.2e}"))?;
                worst = worst.max(err);
            }
            let exact = averaged_radial(&lame_axisymmetric(&pr).map_err(|e| e.to_string())?);
            let err = (averaged_radial(&num) - exact).abs() / exact.abs();
            ensure(err < 1e-7, || format!("{pr:?}: average error {err:.2e}"))?;
            worst = worst.max(err);
        }
        // Smooth non-axisymmetric case against a highly resolved reference.
        let pr = TubeProblem {
            radius: 1.0,
            thickness: 1.5,
            nu: 0.3,
            mu: 1.0,
            k_phi: 3,
            k_z: 4.0,
            load_case: LoadCase::Inner,
            p: 1.0,
        };
        let avg = |n| solve_radial_fixed(&pr, n).map(|s| averaged_radial(&s)).map_err(|e| e.to_string());
        let reference = avg(128)?;
        let e8 = (avg(8)? - reference).abs();
        let e16 = (avg(16)? - reference).abs();
        let order = (e8 / e16).log2();
        ensure(order >= 3.0, || format!("observed order {order:.2} (errors {e8:.2e}, {e16:.2e})"))?;
        Ok(format!("max Lamé deviation {worst:.2e}; observed order {order:.1} (errors {e8:.1e} → {e16:.1e})"))
    })();
    report(8, "3D tube oracle", outcome)
}

fn criterion_09_cross_model_agreement() -> bool {
    let outcome = (|| -> Outcome {
        let radius = 1.0;
        let h = 0.05 * radius;
        let shell = HarmonicProblem::pressure(radius, h, 1.0, 0.3, 0, 1.0 / radius, 1.0);
        let eliseev = solve_harmonic(TheoryVariant::Eliseev, &shell).map_err(|e| e.to_string())?.u_n;
        let tube = TubeProblem {
            radius,
            thickness: h,
            nu: 0.3,
            mu: 1.0,
            k_phi: 0,
            k_z: 1.0 / radius,
            load_case: LoadCase::Both,
            p: 1.0,
        };
        let tube_u = averaged_radial(&solve_radial_bvp(&tube, 32).map_err(|e| e.to_string())?);
        let rel = (tube_u - eliseev).abs() / eliseev.abs();
        ensure(rel < 0.05, || format!("tube {tube_u} vs Eliseev {eliseev}"))?;
        for (k_phi, kz) in [(0, 1.0), (0, 0.0), (1, 1.0)] {
            for hr in [1.0, 1.5, 1.9] {
                let pr = HarmonicProblem::pressure(radius, hr * radius, 1.0, 0.3, k_phi, kz, 1.0);
                let el = solve_harmonic(TheoryVariant::Eliseev, &pr).map_err(|e| e.to_string())?.u_n;
                let mem = solve_harmonic(TheoryVariant::Membrane, &pr).map_err(|e| e.to_string())?.u_n;
                ensure(mem.abs() > el.abs(), || format!("k_φ={k_phi}, k_z={kz}, h/R={hr}: membrane {mem} vs Eliseev {el}"))?;
            }
        }
        Ok(format!("tube {tube_u:.6} vs Eliseev {eliseev:.6} ({:.2}%); membrane ordering holds", 100.0 * rel))
    })();
    report(9, "cross-model agreement", outcome)
}

fn criterion_10_kinematic_kernel() -> bool {
    let outcome = (|| -> Outcome {
        let moduli = ElasticModuli::new(1.0, 0.3, 0.1).map_err(|e| e.to_string())?;
        let profiles = [
            (MeridianProfile::cylinder(1.0), 1.0),
            (MeridianProfile::cone(0.6), 1.0),
            (MeridianProfile::sphere(1.0), 1.0),
        ];
        let mut worst_strain: f64 = 0.0;
        let mut worst_eq: f64 = 0.0;
        let bound = 1e-11 * moduli.c2();
        for (profile, radius) in &profiles {
            let profile = profile.as_ref().map_err(|e| e.to_string())?;
            let (lo, hi) = profile.s_domain;
            for u in DisplacementField::rigid_basis(profile.shape) {
                for i in 1..8 {
                    let s = lo + (hi - lo) * i as f64 / 8.0;
                    let phi = 0.7 * i as f64;
                    let e = strains(profile, &u, phi, s).map_err(|e| e.to_string())?;
                    let m = e.as_array().iter().fold(0.0f64, |m, v| m.max(v.abs()));
                    ensure(m < 1e-11, || format!("{:?}: strain {m:.2e}", profile.shape))?;
                    let r = equilibrium_residual(profile, &moduli, &u, &LoadField::zero(), phi, s)
                        .map_err(|e| e.to_string())?;
                    let mr = r.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                    ensure(mr < bound / radius, || format!("{:?}: equilibrium {mr:.2e}", profile.shape))?;
                    worst_strain = worst_strain.max(m);
                    worst_eq = worst_eq.max(mr);
                }
            }
        }
        let mut rng = StdRng::seed_from_u64(10);
        let mut worst_compat: f64 = 0.0;
        let shapes = [
            MeridianProfile::cylinder(1.3),
            MeridianProfile::cone(0.8),
            MeridianProfile::sphere(1.1),
            MeridianProfile::torus(3.0, 1.0),
        ];
        for trial in 0..50 {
            let profile = shapes[trial % shapes.len()].as_ref().map_err(|e| e.to_string())?;
            let wave = |rng: &mut StdRng| {
                (0..3).fold(Field::zero(), |acc, _| {
                    let amp = rng.gen_range(-1.0..1.0);
                    let kp = rng.gen_range(0..4) as f64;
                    let ks = rng.gen_range(-2.0..2.0);
                    let ph = rng.gen_range(0.0..6.0);
                    acc + Field::cos_wave(amp, kp, ks, ph)
                })
            };
            let u = DisplacementField::new(wave(&mut rng), wave(&mut rng), wave(&mut rng));
            let (lo, hi) = profile.s_domain;
            let s = rng.gen_range(lo + 0.1 * (hi - lo)..hi - 0.1 * (hi - lo));
            let phi = rng.gen_range(0.0..std::f64::consts::TAU);
            let c = consistency_residual(profile, &u, phi, s).map_err(|e| e.to_string())?;
            ensure(c.relative() < 1e-9, || format!("trial {trial}: relative residual {:.2e}", c.relative()))?;
            worst_compat = worst_compat.max(c.relative());
        }
        Ok(format!(
            "rigid strains ≤ {worst_strain:.1e}, equilibrium ≤ {worst_eq:.1e}, compatibility ≤ {worst_compat:.1e}"
        ))
    })();
    report(10, "kinematic kernel and compatibility", outcome)
}

fn criterion_11_asymptotics() -> bool {
    let outcome = (|| -> Outcome {
        let mut summary = Vec::new();
        for m in [0, 1] {
            for nu in NUS {
                let mut prev_err = f64::INFINITY;
                let mut ratios = Vec::new();
                for e in 3..=8 {
                    let g = 10f64.powi(-e);
                    let exact = reference_roots(TheoryVariant::Eliseev, m, nu, g).ok_or("no closed form")?;
                    let asym = asymptotic_roots(TheoryVariant::Eliseev, m, nu, g).ok_or("no expansion")?;
                    let err = asym
                        .iter()
                        .map(|a| exact.iter().map(|x| (x - a.value).norm()).fold(f64::INFINITY, f64::min))
                        .fold(0.0, f64::max);
                    ensure(err < prev_err, || format!("m={m}, ν={nu}: error grew to {err:.3e} at γ=1e-{e}"))?;
                    prev_err = err;
                    ratios.push(err / g.powf(0.25));
                }
                let decreasing = ratios.windows(2).all(|w| w[1] < w[0]);
                let last = ratios[ratios.len() - 1];
                ensure(decreasing && last < 1e-2 * ratios[0], || format!("m={m}, ν={nu}: error/γ^¼ = {ratios:?}"))?;
                summary.push(format!("m={m} ν={nu}: {:.1e}→{last:.1e}", ratios[0]));
            }
        }
        Ok(format!("error/γ^¼ {}", summary.join(", ")))
    })();
    report(11, "two-term asymptotics", outcome)
}

fn main() {
    let criteria: [fn() -> bool; 11] = [
        criterion_01_roots_axisymmetric,
        criterion_02_roots_first_harmonic,
        criterion_03_zero_root_census,
        criterion_04_closed_form_identity,
        criterion_05_back_substitution,
        criterion_06_membrane_limit,
        criterion_07_discontinuity_equations,
        criterion_08_tube_oracle,
        criterion_09_cross_model_agreement,
        criterion_10_kinematic_kernel,
        criterion_11_asymptotics,
    ];
    let passed = criteria.iter().filter(|c| c()).count();
    println!("acceptance: {passed}/{} criteria passed", criteria.len());
    if passed != criteria.len() {
        std::process::exit(1);
    }
}
