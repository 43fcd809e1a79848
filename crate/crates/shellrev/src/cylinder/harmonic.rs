//! Single-harmonic response of an infinitely long cylinder.
//!
//! Loads and displacements vary as `θ = k_φ φ + k_z z + θ₀`. Tangential quantities are in
//! cosine phase and normal ones in sine phase (the complex normal amplitude carries a
//! factor `1/i`), which makes the algebraic system and its solution real.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::operator::operator;
use super::TheoryVariant;
use crate::error::{Result, ShellError};
use crate::field::Field;
use crate::geometry::MeridianProfile;
use crate::revolution::{DisplacementField, ElasticModuli, LoadField};

/// Load amplitudes of a harmonic problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HarmonicLoad {
    /// Normal pressure `f_n = p sin θ`.
    Pressure { p: f64 },
    /// Dimensionless intensities entering the operator equations directly.
    Intensities { b_phi: f64, b_z: f64, b_n: f64 },
    /// Force and moment amplitudes per unit area.
    Physical { f_phi: f64, f_z: f64, f_n: f64, m_phi: f64, m_s: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HarmonicProblem {
    pub radius: f64,
    pub thickness: f64,
    pub mu: f64,
    pub nu: f64,
    pub k_phi: i64,
    pub k_z: f64,
    pub load: HarmonicLoad,
}

/// Real displacement amplitudes: `u_φ = U_φ cos θ`, `u_z = U_z cos θ`, `u_n = U_n sin θ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HarmonicSolution {
    pub u_phi: f64,
    pub u_z: f64,
    pub u_n: f64,
}

/// `M · (U_φ, U_z, U_n) = rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HarmonicSystem {
    pub matrix: [[f64; 3]; 3],
    pub rhs: [f64; 3],
}

impl HarmonicProblem {
    pub fn pressure(radius: f64, thickness: f64, mu: f64, nu: f64, k_phi: i64, k_z: f64, p: f64) -> Self {
        Self { radius, thickness, mu, nu, k_phi, k_z, load: HarmonicLoad::Pressure { p } }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(ShellError::InvalidParameter(msg));
        if !(self.radius.is_finite() && self.radius > 0.0) {
            return bad(format!("radius must be positive, got {}", self.radius));
        }
        if !(self.thickness > 0.0 && self.thickness < 2.0 * self.radius) {
            return bad(format!("thickness must lie in (0, 2R), got {}", self.thickness));
        }
        if !(self.mu.is_finite() && self.mu > 0.0) {
            return bad(format!("shear modulus must be positive, got {}", self.mu));
        }
        if !(self.nu.is_finite() && self.nu > -1.0 && self.nu < 1.0) {
            return bad(format!("Poisson ratio must lie in (-1, 1), got {}", self.nu));
        }
        if !self.k_z.is_finite() {
            return bad("axial wavenumber must be finite".into());
        }
        Ok(())
    }

    pub fn gamma(&self) -> f64 {
        self.thickness * self.thickness / (12.0 * self.radius * self.radius)
    }

    pub fn with_thickness(&self, thickness: f64) -> Self {
        Self { thickness, ..*self }
    }

    fn load_factor(&self) -> f64 {
        self.radius * (1.0 - self.nu) / (2.0 * self.thickness * self.mu)
    }

    /// Physical amplitudes `(f_φ, f_z, f_n, m_φ, m_s)` of the load.
    pub fn physical_load(&self) -> [f64; 5] {
        match self.load {
            HarmonicLoad::Pressure { p } => [0.0, 0.0, p, 0.0, 0.0],
            HarmonicLoad::Physical { f_phi, f_z, f_n, m_phi, m_s } => [f_phi, f_z, f_n, m_phi, m_s],
            HarmonicLoad::Intensities { b_phi, b_z, b_n } => {
                let cr = self.load_factor() * self.radius;
                [b_phi / cr, b_z / cr, -b_n / cr, 0.0, 0.0]
            }
        }
    }

    /// Surface loads as fields on the cylinder (`s = z`) with phase offset `phase`.
    pub fn load_field(&self, phase: f64) -> LoadField {
        let [f_phi, f_z, f_n, m_phi, m_s] = self.physical_load();
        let kf = self.k_phi as f64;
        let c = |a: f64| Field::cos_wave(a, kf, self.k_z, phase);
        LoadField {
            f_phi: c(f_phi),
            f_s: c(f_z),
            f_n: Field::sin_wave(f_n, kf, self.k_z, phase),
            m_phi: c(m_phi),
            m_s: c(m_s),
        }
    }

    pub fn moduli(&self) -> Result<ElasticModuli> {
        ElasticModuli::new(self.mu, self.nu, self.thickness)
    }

    pub fn profile(&self) -> Result<MeridianProfile> {
        MeridianProfile::cylinder(self.radius)
    }
}

/// Dimensionless load intensities `(B_φ, B_z, B_n)`.
pub fn load_intensities(problem: &HarmonicProblem) -> [f64; 3] {
    if let HarmonicLoad::Intensities { b_phi, b_z, b_n } = problem.load {
        return [b_phi, b_z, b_n];
    }
    let [f_phi, f_z, f_n, m_phi, m_s] = problem.physical_load();
    let c = problem.load_factor();
    let r = problem.radius;
    let kf = problem.k_phi as f64;
    [
        c * (r * f_phi + m_s),
        c * r * f_z,
        -c * (r * f_n + problem.k_z * r * m_phi - kf * m_s),
    ]
}

/// Real algebraic system obtained by `∂φ → i k_φ`, `∂ζ → i k_z R`.
pub fn harmonic_system(variant: TheoryVariant, problem: &HarmonicProblem) -> HarmonicSystem {
    let matrix = harmonic_matrix(variant, problem.nu, problem.gamma(), problem.k_phi, problem.k_z * problem.radius);
    let b = load_intensities(problem);
    HarmonicSystem { matrix, rhs: [-b[0], -b[1], -b[2]] }
}

/// Real symbol matrix at `X = i k_φ`, `Y = i k_ζ` with `k_ζ = k_z R`.
pub(crate) fn harmonic_matrix(variant: TheoryVariant, nu: f64, gamma: f64, k_phi: i64, k_zeta: f64) -> [[f64; 3]; 3] {
    let op = operator(variant, nu, gamma);
    let x = Complex64::new(0.0, k_phi as f64);
    let y = Complex64::new(0.0, k_zeta);
    let i = Complex64::i();
    std::array::from_fn(|r| {
        std::array::from_fn(|c| {
            let l = op.entries[r][c].eval(x, y);
            let v = match (r == 2, c == 2) {
                (false, true) => l / i,
                (true, false) => l * i,
                _ => l,
            };
            debug_assert!(v.im.abs() <= 1e-12 * (1.0 + v.re.abs()));
            v.re
        })
    })
}

/// Determinant of the harmonic system matrix.
pub fn system_determinant(sys: &HarmonicSystem) -> f64 {
    let m = &sys.matrix;
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Solves the harmonic system.
///
/// At `k_φ = k_z = 0` the tangential rows vanish identically (rigid rotation and axial
/// translation); they are dropped when their loads vanish, leaving the scalar normal equation.
pub fn solve_harmonic(variant: TheoryVariant, problem: &HarmonicProblem) -> Result<HarmonicSolution> {
    problem.validate()?;
    let sys = harmonic_system(variant, problem);
    let singular = Err(ShellError::SingularSystem { thickness: problem.thickness });
    let norm = sys.matrix.iter().flatten().fold(0.0f64, |a, v| a.max(v.abs()));
    let rhs_norm = sys.rhs.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    if norm == 0.0 {
        return singular;
    }
    let tiny = 1e-14 * norm;
    let mut active = Vec::with_capacity(3);
    for i in 0..3 {
        let empty = (0..3).all(|j| sys.matrix[i][j].abs() <= tiny && sys.matrix[j][i].abs() <= tiny);
        if empty {
            if sys.rhs[i].abs() > 1e-14 * rhs_norm {
                return singular;
            }
        } else {
            active.push(i);
        }
    }
    let n = active.len();
    let a = DMatrix::from_fn(n, n, |r, c| sys.matrix[active[r]][active[c]]);
    let b = DVector::from_fn(n, |r, _| sys.rhs[active[r]]);
    let scale: f64 = (0..n).map(|r| a.row(r).norm()).product();
    let lu = a.lu();
    if lu.determinant().abs() < 1e-12 * scale {
        return singular;
    }
    let x = lu.solve(&b).ok_or(ShellError::SingularSystem { thickness: problem.thickness })?;
    let mut u = [0.0; 3];
    for (r, &i) in active.iter().enumerate() {
        u[i] = x[r];
    }
    Ok(HarmonicSolution { u_phi: u[0], u_z: u[1], u_n: u[2] })
}

/// Closed-form Eliseev response to a harmonic normal pressure.
pub fn eliseev_pressure_solution(problem: &HarmonicProblem) -> Result<HarmonicSolution> {
    problem.validate()?;
    let p = match problem.load {
        HarmonicLoad::Pressure { p } => p,
        _ => {
            return Err(ShellError::InvalidParameter(
                "closed-form solution requires a pure pressure load".into(),
            ))
        }
    };
    let (r, h, mu, nu) = (problem.radius, problem.thickness, problem.mu, problem.nu);
    let kf = problem.k_phi as f64;
    let kz = problem.k_z;
    let (r2, r3, r4, r6, r8) = (r * r, r.powi(3), r.powi(4), r.powi(6), r.powi(8));
    let (h2, h4) = (h * h, h.powi(4));
    let (kf2, kf4, kf6, kf8) = (kf * kf, kf.powi(4), kf.powi(6), kf.powi(8));
    let (kz2, kz4, kz6, kz8) = (kz * kz, kz.powi(4), kz.powi(6), kz.powi(8));
    let nu2 = nu * nu;

    let a = 6.0 * h2 * kf4 - 72.0 * kz4 * r6 * nu2 - 24.0 * kz4 * r4 * h2 * nu2 + kz2 * h4 * kf2
        - 2.0 * kz2 * h4 * kf4
        + kz2 * h4 * kf6
        + 24.0 * kz2 * r2 * kf6 * h2
        - kz2 * h4 * kf2 * nu
        + 2.0 * kz4 * r2 * h4 * kf2 * nu
        - 2.0 * kz4 * r2 * h4 * kf4 * nu
        - 4.0 * kz4 * r2 * h4 * kf2
        + 4.0 * kz4 * r2 * h4 * kf4
        + 24.0 * kz6 * r6 * kf2 * h2
        + 5.0 * kz6 * r4 * h4 * kf2
        + 4.0 * kz6 * r4 * h4 * nu
        - kz6 * r4 * h4 * kf2 * nu
        + 72.0 * kz4 * r6
        + 6.0 * kz8 * r8 * h2
        + 2.0 * kz8 * r6 * h4
        + 6.0 * kf8 * h2
        + 2.0 * kz4 * r2 * h4
        + 12.0 * h2 * kf2 * r2 * kz2 * nu
        + 36.0 * kz4 * r4 * kf4 * h2
        - 2.0 * kz4 * r2 * h4 * kf2 * nu2
        + 2.0 * kz2 * h4 * kf4 * nu
        - kz2 * h4 * kf6 * nu
        + 12.0 * kz6 * r6 * h2 * nu
        + 30.0 * h2 * r4 * kz4
        + 24.0 * h2 * kf2 * r2 * kz2
        - 12.0 * h2 * kf6
        - 12.0 * h2 * r2 * kf4 * kz2 * nu
        - 36.0 * h2 * r4 * kf2 * kz4
        - 48.0 * h2 * kf4 * r2 * kz2;
    if a.abs() < 1e-14 * (1.0 + 72.0 * kz4 * r6 + 6.0 * kf8 * h2) {
        return Err(ShellError::SingularSystem { thickness: h });
    }
    let base = h * mu * a;

    let u_phi = -6.0 * r2 * kf * p / base
        * (-6.0 * r2 * kf2 + h2 * kf4 * nu - 12.0 * r4 * kz2 - 2.0 * h2 * r2 * kz2
            + 6.0 * r4 * kz2 * nu
            + 6.0 * r4 * kz2 * nu2
            - 3.0 * h2 * kf2 * r2 * kz2
            + 6.0 * kf2 * r2 * nu
            + h2 * kf2 * nu
            - 2.0 * h2 * r4 * kz4
            + h2 * kf2 * r2 * kz2 * nu
            - h2 * kf2
            - h2 * kf4);
    let u_z = -6.0 * p * kz * r3 / base
        * (-3.0 * h2 * kf2 * nu - 6.0 * r4 * kz2 * nu + 6.0 * r4 * kz2 * nu2 + 6.0 * r2 * kf2
            - 6.0 * kf2 * r2 * nu
            - 2.0 * h2 * r2 * kz2 * nu
            + 2.0 * r2 * kz2 * nu2 * h2
            + h2 * kf2
            + h2 * kf4
            + h2 * kf4 * nu
            + h2 * kf2 * r2 * kz2
            + h2 * kf2 * r2 * kz2 * nu);
    let u_n = -6.0 * r2 * p / base
        * (-2.0 * h2 * kf4 + 2.0 * h2 * kf4 * nu + 6.0 * kz4 * r6 * nu - 6.0 * kz4 * r6
            + 2.0 * h2 * nu * r4 * kz4
            - 5.0 * h2 * kf2 * r2 * kz2
            + 12.0 * kf2 * r4 * kz2 * nu
            - 12.0 * kf2 * r4 * kz2
            + 6.0 * r2 * kf4 * nu
            - 6.0 * kf4 * r2
            - h2 * nu2 * r2 * kz2 * kf2
            - 2.0 * h2 * r4 * kz4
            + 2.0 * h2 * kf2 * r2 * kz2 * nu);
    Ok(HarmonicSolution { u_phi, u_z, u_n })
}

impl HarmonicSolution {
    /// Displacement field on the cylinder (`s = z`) with phase offset `phase`.
    pub fn displacement_field(&self, problem: &HarmonicProblem, phase: f64) -> DisplacementField {
        let kf = problem.k_phi as f64;
        DisplacementField::new(
            Field::cos_wave(self.u_phi, kf, problem.k_z, phase),
            Field::cos_wave(self.u_z, kf, problem.k_z, phase),
            Field::sin_wave(self.u_n, kf, problem.k_z, phase),
        )
    }

    /// Cosine-phase amplitudes of the shear forces `(Q_φ, Q_s)` for the Eliseev kinematics.
    pub fn shear_amplitudes(&self, problem: &HarmonicProblem) -> Result<(f64, f64)> {
        let m = problem.moduli()?;
        let (d1, d2) = (m.d1(), m.d2());
        let k = 1.0 / problem.radius;
        let kf = problem.k_phi as f64;
        let kz = problem.k_z;
        let kap_phi = k * k * (-kf * kf * self.u_n + 2.0 * kf * self.u_phi - self.u_n);
        let kap_s = -kz * kz * self.u_n;
        let kap_phis = k * (-kf * kz * self.u_n + kz * self.u_phi);
        let mu_phi = (d1 + d2) * kap_phi + d1 * kap_s;
        let mu_s = d1 * kap_phi + (d1 + d2) * kap_s;
        let [_, _, _, m_phi, m_s] = problem.physical_load();
        let q_phi = -k * kf * mu_phi - kz * d2 * kap_phis + m_s;
        let q_s = -k * kf * d2 * kap_phis - kz * mu_s - m_phi;
        Ok((q_phi, q_s))
    }
}
