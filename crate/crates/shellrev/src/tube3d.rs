//! Thick-walled infinite tube under harmonic surface pressure, solved in full 3D elasticity.
//!
//! With `Θ = k_φ φ + k_z z` the ansatz `u_r = U(r) cos Θ`, `u_φ = V(r) sin Θ`, `u_z = W(r) sin Θ`
//! reduces the Navier equations to a radial two-point problem. It is written as a first-order
//! system for displacements and the tractions `σ_rr`, `σ_rφ`, `σ_rz` on cylinders `r = const`,
//! and collocated on Chebyshev–Gauss–Lobatto points in `t = ln r`.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Result, ShellError};

/// Which surface carries the pressure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LoadCase {
    Inner,
    Outer,
    Both,
}

impl LoadCase {
    pub const ALL: [LoadCase; 3] = [LoadCase::Inner, LoadCase::Outer, LoadCase::Both];
}

impl fmt::Display for LoadCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LoadCase::Inner => "inner",
            LoadCase::Outer => "outer",
            LoadCase::Both => "both",
        })
    }
}

impl FromStr for LoadCase {
    type Err = ShellError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inner" => Ok(LoadCase::Inner),
            "outer" => Ok(LoadCase::Outer),
            "both" => Ok(LoadCase::Both),
            other => Err(ShellError::InvalidParameter(format!("unknown tube load case `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TubeProblem {
    /// Mid-surface radius.
    pub radius: f64,
    pub thickness: f64,
    pub nu: f64,
    pub mu: f64,
    pub k_phi: i64,
    pub k_z: f64,
    pub load_case: LoadCase,
    /// Equivalent mid-surface pressure.
    pub p: f64,
}

impl TubeProblem {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(ShellError::InvalidParameter(m));
        if !(self.radius.is_finite() && self.radius > 0.0) {
            return bad(format!("radius must be positive, got {}", self.radius));
        }
        if !(self.thickness > 0.0 && self.thickness < 2.0 * self.radius) {
            return bad(format!("thickness must lie in (0, 2R), got {}", self.thickness));
        }
        if !(self.mu.is_finite() && self.mu > 0.0) {
            return bad(format!("shear modulus must be positive, got {}", self.mu));
        }
        if !(self.nu > -1.0 && self.nu < 0.5) {
            return bad(format!("Poisson ratio must lie in (-1, 0.5) for a solid, got {}", self.nu));
        }
        if !(self.k_z.is_finite() && self.p.is_finite()) {
            return bad("wavenumber and pressure must be finite".into());
        }
        Ok(())
    }

    pub fn inner_radius(&self) -> f64 {
        self.radius - self.thickness / 2.0
    }

    pub fn outer_radius(&self) -> f64 {
        self.radius + self.thickness / 2.0
    }

    /// `λ / μ`.
    fn lame_ratio(&self) -> f64 {
        2.0 * self.nu / (1.0 - 2.0 * self.nu)
    }
}

/// Surface pressures `(p_in, p_out)` equivalent to the mid-surface pressure `p`.
pub fn equivalent_pressures(problem: &TubeProblem) -> (f64, f64) {
    let (p, r) = (problem.p, problem.radius);
    match problem.load_case {
        LoadCase::Inner => (p * r / problem.inner_radius(), 0.0),
        LoadCase::Outer => (0.0, p * r / problem.outer_radius()),
        LoadCase::Both => (p / 2.0, p / 2.0),
    }
}

/// Radial amplitude profiles sampled at ascending radii from `R_in` to `R_out`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialSolution {
    pub radii: Vec<f64>,
    pub u_r: Vec<f64>,
    pub u_phi: Vec<f64>,
    pub u_z: Vec<f64>,
    pub sigma_rr: Vec<f64>,
    pub sigma_rphi: Vec<f64>,
    pub sigma_rz: Vec<f64>,
    pub thickness: f64,
    /// Number of Chebyshev intervals of the reported profiles.
    pub mesh_size: usize,
    /// Relative disagreement with the half-resolution solve.
    pub error_estimate: f64,
}

impl RadialSolution {
    fn log_span(&self) -> f64 {
        (self.radii[self.radii.len() - 1] / self.radii[0]).ln()
    }
}

/// Chebyshev–Gauss–Lobatto points `cos(πj/n)` and the differentiation matrix.
fn chebyshev(n: usize) -> (Vec<f64>, DMatrix<f64>) {
    let x: Vec<f64> = (0..=n).map(|j| (std::f64::consts::PI * j as f64 / n as f64).cos()).collect();
    let c = |i: usize| {
        let base = if i == 0 || i == n { 2.0 } else { 1.0 };
        if i % 2 == 0 {
            base
        } else {
            -base
        }
    };
    let mut d = DMatrix::zeros(n + 1, n + 1);
    for i in 0..=n {
        let mut row_sum = 0.0;
        for j in 0..=n {
            if i != j {
                let v = c(i) / c(j) / (x[i] - x[j]);
                d[(i, j)] = v;
                row_sum += v;
            }
        }
        d[(i, i)] = -row_sum;
    }
    (x, d)
}

/// Clenshaw–Curtis weights on `[-1, 1]` for the same nodes.
fn clenshaw_curtis(n: usize) -> Vec<f64> {
    let nf = n as f64;
    let theta: Vec<f64> = (0..=n).map(|j| std::f64::consts::PI * j as f64 / nf).collect();
    let mut w = vec![0.0; n + 1];
    let mut v = vec![1.0; n.saturating_sub(1)];
    if n % 2 == 0 {
        w[0] = 1.0 / (nf * nf - 1.0);
        for k in 1..n / 2 {
            let kf = k as f64;
            for (vi, th) in v.iter_mut().zip(&theta[1..n]) {
                *vi -= 2.0 * (2.0 * kf * th).cos() / (4.0 * kf * kf - 1.0);
            }
        }
        for (vi, th) in v.iter_mut().zip(&theta[1..n]) {
            *vi -= (nf * th).cos() / (nf * nf - 1.0);
        }
    } else {
        w[0] = 1.0 / (nf * nf);
        for k in 1..=(n - 1) / 2 {
            let kf = k as f64;
            for (vi, th) in v.iter_mut().zip(&theta[1..n]) {
                *vi -= 2.0 * (2.0 * kf * th).cos() / (4.0 * kf * kf - 1.0);
            }
        }
    }
    w[n] = w[0];
    for (wi, vi) in w[1..n].iter_mut().zip(&v) {
        *wi = 2.0 * vi / nf;
    }
    w
}

/// Thickness average `(1/h) ∫ U_r dr`.
pub fn averaged_radial(sol: &RadialSolution) -> f64 {
    averaged_components(sol)[0]
}

/// Thickness averages of `(U_r, U_φ, U_z)`.
pub fn averaged_components(sol: &RadialSolution) -> [f64; 3] {
    let n = sol.radii.len() - 1;
    let half_span = sol.log_span() / 2.0;
    let w = clenshaw_curtis(n);
    let avg = |u: &[f64]| -> f64 {
        w.iter().zip(&sol.radii).zip(u).map(|((w, r), u)| w * u * r).sum::<f64>() * half_span / sol.thickness
    };
    [avg(&sol.u_r), avg(&sol.u_phi), avg(&sol.u_z)]
}

/// Plane-strain Lamé solution `U_r = a r + b/r` for the axisymmetric, axially uniform case.
///
/// The inner pressure pushes outward on the bore and the outer load acts outward on the mantle,
/// so `σ_rr(R_in) = −p_in` and `σ_rr(R_out) = +p_out`.
pub fn lame_axisymmetric(problem: &TubeProblem) -> Result<RadialSolution> {
    problem.validate()?;
    if problem.k_phi != 0 || problem.k_z != 0.0 {
        return Err(ShellError::InvalidParameter("Lamé solution requires k_phi = k_z = 0".into()));
    }
    let (a, b) = lame_constants(problem);
    let mu = problem.mu;
    let lam = problem.lame_ratio() * mu;
    let n = 64;
    let radii = mesh_radii(problem, n);
    let u_r = radii.iter().map(|r| a * r + b / r).collect();
    let sigma_rr = radii.iter().map(|r| 2.0 * (lam + mu) * a - 2.0 * mu * b / (r * r)).collect();
    Ok(RadialSolution {
        radii,
        u_r,
        u_phi: vec![0.0; n + 1],
        u_z: vec![0.0; n + 1],
        sigma_rr,
        sigma_rphi: vec![0.0; n + 1],
        sigma_rz: vec![0.0; n + 1],
        thickness: problem.thickness,
        mesh_size: n,
        error_estimate: 0.0,
    })
}

/// `(a, b)` of the Lamé displacement `a r + b / r`.
pub fn lame_constants(problem: &TubeProblem) -> (f64, f64) {
    let (p_in, p_out) = equivalent_pressures(problem);
    let mu = problem.mu;
    let lam = problem.lame_ratio() * mu;
    let (ri, ro) = (problem.inner_radius(), problem.outer_radius());
    // 2(λ+μ) a − 2μ b / r² = σ_rr(r)
    let s = 2.0 * (lam + mu);
    let b = (p_out + p_in) / (2.0 * mu * (1.0 / (ri * ri) - 1.0 / (ro * ro)));
    let a = (p_out + 2.0 * mu * b / (ro * ro)) / s;
    (a, b)
}

/// Ascending radii of the collocation mesh.
fn mesh_radii(problem: &TubeProblem, n: usize) -> Vec<f64> {
    let (ta, tb) = (problem.inner_radius().ln(), problem.outer_radius().ln());
    let (x, _) = chebyshev(n);
    x.iter().rev().map(|x| (ta + (x + 1.0) * (tb - ta) / 2.0).exp()).collect()
}

/// Solves the radial problem with `mesh_size` and `2·mesh_size` intervals and returns the finer one.
pub fn solve_radial_bvp(problem: &TubeProblem, mesh_size: usize) -> Result<RadialSolution> {
    problem.validate()?;
    if mesh_size < 8 {
        return Err(ShellError::InvalidParameter(format!("mesh size must be at least 8, got {mesh_size}")));
    }
    let coarse = solve_radial_fixed(problem, mesh_size)?;
    let mut fine = solve_radial_fixed(problem, 2 * mesh_size)?;
    // Coarse nodes are every other fine node.
    let mut diff: f64 = 0.0;
    let mut size: f64 = 0.0;
    for (fv, cv) in [(&fine.u_r, &coarse.u_r), (&fine.u_phi, &coarse.u_phi), (&fine.u_z, &coarse.u_z)] {
        for (j, c) in cv.iter().enumerate() {
            diff = diff.max((fv[2 * j] - c).abs());
        }
        size = size.max(fv.iter().fold(0.0f64, |m, v| m.max(v.abs())));
    }
    let estimate = if size > 0.0 { diff / size } else { diff };
    if estimate > 1e-6 {
        return Err(ShellError::NoConvergence { disagreement: estimate });
    }
    fine.error_estimate = estimate;
    Ok(fine)
}

/// One collocation solve on `n` intervals without the refinement check; `error_estimate` is NaN.
pub fn solve_radial_fixed(problem: &TubeProblem, n: usize) -> Result<RadialSolution> {
    problem.validate()?;
    if n < 2 {
        return Err(ShellError::InvalidParameter(format!("need at least 2 intervals, got {n}")));
    }
    // Unknown blocks: U, V, W, P, S, T with stresses in units of μ.
    let np = n + 1;
    let (ta, tb) = (problem.inner_radius().ln(), problem.outer_radius().ln());
    let (x, d) = chebyshev(n);
    let dt = d * (2.0 / (tb - ta));
    let r: Vec<f64> = x.iter().map(|x| (ta + (x + 1.0) * (tb - ta) / 2.0).exp()).collect();
    let lam = problem.lame_ratio();
    let c = lam + 2.0;
    let kn = problem.k_phi as f64;
    let k = problem.k_z;
    let (p_in, p_out) = equivalent_pressures(problem);
    let axisymmetric = problem.k_phi == 0 && k == 0.0;
    let blocks: &[usize] = if axisymmetric { &[0, 3] } else { &[0, 1, 2, 3, 4, 5] };
    let nb = blocks.len();
    let col = |block: usize| blocks.iter().position(|&b| b == block);

    let mut a = DMatrix::<f64>::zeros(nb * np, nb * np);
    let mut rhs = DVector::<f64>::zeros(nb * np);
    for (bi, &block) in blocks.iter().enumerate() {
        for i in 0..np {
            let row = bi * np + i;
            let ri = r[i];
            let inv = 1.0 / ri;
            // Coefficients of the right-hand side F(Y) at node i, per unknown block.
            let mut f = [0.0f64; 6];
            // q = (U + nV)/r + kW, e = (P + 2q)/c
            let q = [inv, kn * inv, k, 0.0, 0.0, 0.0];
            let e: [f64; 6] = std::array::from_fn(|j| (if j == 3 { 1.0 } else { 0.0 } + 2.0 * q[j]) / c);
            let s_pp: [f64; 6] = std::array::from_fn(|j| lam * e[j] + 2.0 * [inv, kn * inv, 0.0, 0.0, 0.0, 0.0][j]);
            let s_zz: [f64; 6] = std::array::from_fn(|j| lam * e[j] + if j == 2 { 2.0 * k } else { 0.0 });
            let s_pz = [0.0, k, kn * inv, 0.0, 0.0, 0.0];
            match block {
                0 => {
                    for j in 0..6 {
                        f[j] = (if j == 3 { 1.0 } else { 0.0 } - lam * q[j]) / c;
                    }
                }
                1 => {
                    f[4] = 1.0;
                    f[0] = kn * inv;
                    f[1] = inv;
                }
                2 => {
                    f[5] = 1.0;
                    f[0] = k;
                }
                3 => {
                    for j in 0..6 {
                        f[j] = inv * s_pp[j];
                    }
                    f[4] -= kn * inv;
                    f[5] -= k;
                    f[3] -= inv;
                }
                4 => {
                    for j in 0..6 {
                        f[j] = kn * inv * s_pp[j] + k * s_pz[j];
                    }
                    f[4] -= 2.0 * inv;
                }
                _ => {
                    for j in 0..6 {
                        f[j] = kn * inv * s_pz[j] + k * s_zz[j];
                    }
                    f[5] -= inv;
                }
            }
            for j in 0..np {
                a[(row, bi * np + j)] += dt[(i, j)];
            }
            for (j, fj) in f.iter().enumerate() {
                if *fj != 0.0 {
                    if let Some(cj) = col(j) {
                        a[(row, cj * np + i)] -= ri * fj;
                    }
                }
            }
        }
        // Traction rows: node 0 is the outer surface, node n the inner one.
        if block >= 3 {
            let (outer, inner) = if block == 3 { (p_out / problem.mu, -p_in / problem.mu) } else { (0.0, 0.0) };
            for (node, value) in [(0, outer), (n, inner)] {
                let row = bi * np + node;
                a.row_mut(row).fill(0.0);
                a[(row, row)] = 1.0;
                rhs[row] = value;
            }
        }
    }

    let lu = a.lu();
    let diag = lu.u().diagonal();
    let (lo, hi) = diag.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), v| (lo.min(v.abs()), hi.max(v.abs())));
    if !(lo > 1e-14 * hi) {
        return Err(ShellError::IllPosed);
    }
    let y = lu.solve(&rhs).ok_or(ShellError::IllPosed)?;
    if y.iter().any(|v| !v.is_finite()) {
        return Err(ShellError::IllPosed);
    }
    let get = |block: usize| -> Vec<f64> {
        match col(block) {
            Some(b) => (0..np).rev().map(|i| y[b * np + i]).collect(),
            None => vec![0.0; np],
        }
    };
    let scale = |v: Vec<f64>| v.into_iter().map(|s| s * problem.mu).collect();
    Ok(RadialSolution {
        radii: r.into_iter().rev().collect(),
        u_r: get(0),
        u_phi: get(1),
        u_z: get(2),
        sigma_rr: scale(get(3)),
        sigma_rphi: scale(get(4)),
        sigma_rz: scale(get(5)),
        thickness: problem.thickness,
        mesh_size: n,
        error_estimate: f64::NAN,
    })
}
