//! Thicknesses at which a harmonic response blows up.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::charpoly::aberth;
use super::harmonic::harmonic_matrix;
use super::TheoryVariant;
use crate::error::{Result, ShellError};

/// Monic polynomial in `h` proportional to `det M(h)` after removing powers of `h`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DenominatorPoly {
    pub variant: TheoryVariant,
    pub k_phi: i64,
    pub k_z: f64,
    pub nu: f64,
    pub radius: f64,
    /// Ascending coefficients in `h`; only even powers occur.
    pub coeffs: Vec<f64>,
    /// Power of `h` divided out.
    pub removed_power: usize,
}

impl DenominatorPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, h: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * h + c)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiscontinuityThickness {
    /// Roots in `(0, 2R)`, ascending.
    pub in_range: Vec<f64>,
    /// Positive real roots outside the physical range.
    pub out_of_range: Vec<f64>,
}

fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(acc: &mut Vec<f64>, p: &[f64], sign: f64) {
    if acc.len() < p.len() {
        acc.resize(p.len(), 0.0);
    }
    for (a, b) in acc.iter_mut().zip(p) {
        *a += sign * b;
    }
}

/// `det M` as a polynomial in `γ` (ascending, degree ≤ 3).
fn det_in_gamma(variant: TheoryVariant, k_phi: i64, k_zeta: f64, nu: f64) -> Vec<f64> {
    let a = harmonic_matrix(variant, nu, 0.0, k_phi, k_zeta);
    let ab = harmonic_matrix(variant, nu, 1.0, k_phi, k_zeta);
    let e = |i: usize, j: usize| [a[i][j], ab[i][j] - a[i][j]];
    let mut det = vec![0.0];
    for (p, sign) in [([0, 1, 2], 1.0), ([1, 2, 0], 1.0), ([2, 0, 1], 1.0), ([0, 2, 1], -1.0), ([1, 0, 2], -1.0), ([2, 1, 0], -1.0)] {
        let term = poly_mul(&poly_mul(&e(0, p[0]), &e(1, p[1])), &e(2, p[2]));
        poly_add(&mut det, &term, sign);
    }
    det
}

/// Cleared determinant polynomial of the harmonic system as a function of the thickness.
///
/// Independent of the shear modulus, which only scales the load.
pub fn denominator_in_h(variant: TheoryVariant, k_phi: i64, k_z: f64, nu: f64, radius: f64) -> Result<DenominatorPoly> {
    if !(radius.is_finite() && radius > 0.0) {
        return Err(ShellError::InvalidParameter(format!("radius must be positive, got {radius}")));
    }
    let in_gamma = det_in_gamma(variant, k_phi, k_z * radius, nu);
    let mut coeffs = vec![0.0; 2 * in_gamma.len() - 1];
    let unit = 12.0 * radius * radius;
    for (p, c) in in_gamma.iter().enumerate() {
        coeffs[2 * p] = c / unit.powi(p as i32);
    }
    let max = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    if max < 1e-300 {
        return Err(ShellError::DegeneratePolynomial);
    }
    let tol = 1e-12 * max;
    for c in coeffs.iter_mut() {
        if c.abs() <= tol {
            *c = 0.0;
        }
    }
    while coeffs.last() == Some(&0.0) {
        coeffs.pop();
    }
    let removed_power = coeffs.iter().position(|&c| c != 0.0).unwrap_or(0);
    coeffs.drain(..removed_power);
    let lead = *coeffs.last().expect("nonzero polynomial");
    for c in coeffs.iter_mut() {
        *c /= lead;
    }
    Ok(DenominatorPoly { variant, k_phi, k_z, nu, radius, coeffs, removed_power })
}

/// Positive real roots of the cleared denominator, split at `2R`.
pub fn discontinuity_thickness(
    variant: TheoryVariant,
    k_phi: i64,
    k_z: f64,
    nu: f64,
    radius: f64,
) -> Result<DiscontinuityThickness> {
    let poly = denominator_in_h(variant, k_phi, k_z, nu, radius)?;
    // Even polynomial: solve in x = h².
    let in_x: Vec<Complex64> = poly.coeffs.iter().step_by(2).map(|&c| Complex64::new(c, 0.0)).collect();
    let mut roots: Vec<f64> = aberth(&in_x)
        .into_iter()
        .filter(|x| x.re > 0.0 && x.im.abs() <= 1e-8 * x.norm())
        .map(|x| x.re.sqrt())
        .collect();
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-9 * b.abs());
    let (in_range, out_of_range) = roots.into_iter().partition(|&h| h < 2.0 * radius);
    Ok(DiscontinuityThickness { in_range, out_of_range })
}
