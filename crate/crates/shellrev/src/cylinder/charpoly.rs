use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::operator::operator;
use super::TheoryVariant;
use crate::error::{Result, ShellError};

type C = Complex64;

const ZERO: C = C::new(0.0, 0.0);

/// Relative coefficient threshold deciding which low-order coefficients count as zero.
pub const VALUATION_THRESHOLD: f64 = 1e-12;

/// `D(im, k)`: determinant of the operator with `∂φ → i m`, `∂ζ → k`, divided by `ν − 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharPoly {
    pub variant: TheoryVariant,
    pub m: i64,
    pub nu: f64,
    pub gamma: f64,
    /// Ascending powers of `k`.
    pub coeffs: Vec<Complex64>,
}

/// Roots of a characteristic polynomial; the zero root is counted by valuation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharRoots {
    pub zero_count: usize,
    pub nonzero: Vec<Complex64>,
}

impl CharRoots {
    /// Distinct roots with multiplicities; nonzero roots closer than `1e-8` relative are merged.
    pub fn multiset(&self) -> Vec<(Complex64, usize)> {
        let mut out: Vec<(C, usize)> = Vec::new();
        if self.zero_count > 0 {
            out.push((ZERO, self.zero_count));
        }
        for &z in &self.nonzero {
            match out
                .iter_mut()
                .find(|(w, _)| w.norm() > 0.0 && (z - *w).norm() <= 1e-8 * w.norm())
            {
                Some(entry) => entry.1 += 1,
                None => out.push((z, 1)),
            }
        }
        out
    }

    /// Every root, zeros first, repeated by multiplicity.
    pub fn all(&self) -> Vec<Complex64> {
        let mut v = vec![ZERO; self.zero_count];
        v.extend_from_slice(&self.nonzero);
        v
    }
}

fn poly_mul(a: &[C], b: &[C]) -> Vec<C> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &[C], b: &[C], sign: f64) -> Vec<C> {
    let mut out = vec![ZERO; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y * sign;
    }
    out
}

fn trim(mut c: Vec<C>) -> Vec<C> {
    while c.len() > 1 && c.last().is_some_and(|z| z.norm() < 1e-300) {
        c.pop();
    }
    c
}

/// Characteristic polynomial of the theory for circumferential wavenumber `m`.
pub fn char_poly(variant: TheoryVariant, m: i64, nu: f64, gamma: f64) -> CharPoly {
    let op = operator(variant, nu, gamma);
    let x = C::new(0.0, m as f64);
    let a: Vec<Vec<Vec<C>>> = (0..3)
        .map(|i| (0..3).map(|j| op.entries[i][j].substitute_x(x)).collect())
        .collect();
    let minor = |r0: usize, r1: usize, c0: usize, c1: usize| {
        poly_add(&poly_mul(&a[r0][c0], &a[r1][c1]), &poly_mul(&a[r0][c1], &a[r1][c0]), -1.0)
    };
    let t0 = poly_mul(&a[0][0], &minor(1, 2, 1, 2));
    let t1 = poly_mul(&a[0][1], &minor(1, 2, 0, 2));
    let t2 = poly_mul(&a[0][2], &minor(1, 2, 0, 1));
    let det = poly_add(&poly_add(&t0, &t1, -1.0), &t2, 1.0);
    let coeffs = trim(det.into_iter().map(|c| c / (nu - 1.0)).collect());
    CharPoly { variant, m, nu, gamma, coeffs }
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Lowest power whose coefficient exceeds `1e-12 · max |c|`.
    pub fn valuation(&self) -> usize {
        let thr = VALUATION_THRESHOLD * self.max_coeff();
        self.coeffs.iter().position(|c| c.norm() > thr).unwrap_or(0)
    }

    pub fn eval(&self, k: Complex64) -> Complex64 {
        horner(&self.coeffs, k)
    }

    /// `Σ |c_j| |k|^j`, the natural scale for residual checks.
    pub fn magnitude_at(&self, k: Complex64) -> f64 {
        let r = k.norm();
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
    }

    /// Whether every odd coefficient is negligible against the largest coefficient.
    pub fn is_even(&self) -> bool {
        let thr = 1e-13 * self.max_coeff();
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.norm() <= thr)
    }
}

fn horner(c: &[C], z: C) -> C {
    c.iter().rev().fold(ZERO, |acc, &a| acc * z + a)
}

fn horner_with_derivative(c: &[C], z: C) -> (C, C) {
    let mut p = ZERO;
    let mut dp = ZERO;
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// Starting points spread over the circles suggested by the Newton polygon of `|c_j|`.
fn initial_guesses(c: &[C]) -> Vec<C> {
    let n = c.len() - 1;
    let pts: Vec<(usize, f64)> = c
        .iter()
        .enumerate()
        .filter(|(_, z)| z.norm() > 0.0)
        .map(|(j, z)| (j, z.norm().ln()))
        .collect();
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 as f64 - a.0 as f64) * (p.1 - a.1) - (b.1 - a.1) * (p.0 as f64 - a.0 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut out = Vec::with_capacity(n);
    for w in hull.windows(2) {
        let (ja, la) = w[0];
        let (jb, lb) = w[1];
        let count = jb - ja;
        let radius = ((la - lb) / count as f64).exp();
        for q in 0..count {
            let angle = 2.0 * std::f64::consts::PI * (q as f64 / count as f64) + 0.4 + out.len() as f64 * 0.7;
            out.push(C::from_polar(radius, angle));
        }
    }
    out
}

/// Simultaneous root iteration for a polynomial with nonzero constant term.
pub(crate) fn aberth(c: &[C]) -> Vec<C> {
    let n = c.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let mut z = initial_guesses(c);
    for _ in 0..500 {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let (p, dp) = horner_with_derivative(c, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: C = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = ratio / (C::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(f64::MIN_POSITIVE));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    // Newton polish against the full polynomial, keeping a step only if it helps.
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner_with_derivative(c, *zi);
            let cand = *zi - p / dp;
            if cand.is_finite() && horner(c, cand).norm() < p.norm() {
                *zi = cand;
            } else {
                break;
            }
        }
    }
    z
}

fn clean(z: C) -> C {
    let tol = 1e-14 * z.norm();
    C::new(
        if z.re.abs() <= tol { 0.0 } else { z.re },
        if z.im.abs() <= tol { 0.0 } else { z.im },
    )
}

/// All roots of the characteristic polynomial.
///
/// The multiplicity of the zero root is the polynomial valuation, never a numeric cluster count.
pub fn char_roots(p: &CharPoly) -> Result<CharRoots> {
    if p.max_coeff() < 1e-300 {
        return Err(ShellError::DegeneratePolynomial);
    }
    let v = p.valuation();
    let reduced = trim(p.coeffs[v..].to_vec());
    let mut nonzero: Vec<C> = aberth(&reduced).into_iter().map(clean).collect();
    nonzero.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(CharRoots { zero_count: v, nonzero })
}

/// Multiplicity of the zero root of `D(im, k)`.
pub fn zero_root_count(variant: TheoryVariant, m: i64, nu: f64, gamma: f64) -> usize {
    char_poly(variant, m, nu, gamma).valuation()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eliseev_printed_coefficients() {
        let (nu, g) = (0.3, 0.01);
        for m in [0i64, 1, 2] {
            let p = char_poly(TheoryVariant::Eliseev, m, nu, g);
            let m2 = (m * m) as f64;
            let c8 = -g / 2.0 - 2.0 * g * g;
            let c6 = m2 * (2.0 * g - (nu - 5.0) * g * g) + nu * g + 4.0 * nu * g * g;
            assert!((p.coeffs[8] - c8).norm() < 1e-15, "m={m}");
            assert!((p.coeffs[6] - c6).norm() < 1e-14, "m={m}");
        }
    }

    #[test]
    fn membrane_axisymmetric() {
        let nu = 0.3;
        let p = char_poly(TheoryVariant::Membrane, 0, nu, 0.1);
        assert_eq!(p.degree(), 4);
        assert!((p.coeffs[4].re - (nu - 1.0) * (1.0 + nu) / 2.0).abs() < 1e-15);
        let r = char_roots(&p).unwrap();
        assert_eq!(r.zero_count, 4);
        assert!(r.nonzero.is_empty());
        assert_eq!(r.multiset(), vec![(ZERO, 4)]);
    }

    #[test]
    fn roots_of_known_quartic() {
        // (k² − 4)(k² + 9) k²
        let coeffs = vec![0.0, 0.0, -36.0, 0.0, 5.0, 0.0, 1.0];
        let p = CharPoly {
            variant: TheoryVariant::Eliseev,
            m: 0,
            nu: 0.0,
            gamma: 0.0,
            coeffs: coeffs.into_iter().map(|c| C::new(c, 0.0)).collect(),
        };
        let r = char_roots(&p).unwrap();
        assert_eq!(r.zero_count, 2);
        let expect = [C::new(-2.0, 0.0), C::new(0.0, -3.0), C::new(0.0, 3.0), C::new(2.0, 0.0)];
        for (a, b) in r.nonzero.iter().zip(expect.iter()) {
            assert!((a - b).norm() < 1e-14, "{:?}", r.nonzero);
        }
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        let p = CharPoly {
            variant: TheoryVariant::Membrane,
            m: 0,
            nu: 0.3,
            gamma: 0.0,
            coeffs: vec![ZERO; 5],
        };
        assert_eq!(char_roots(&p), Err(ShellError::DegeneratePolynomial));
    }

    #[test]
    fn dense_serialization_is_ascending() {
        let p = char_poly(TheoryVariant::Membrane, 0, 0.5, 0.0);
        let v: serde_json::Value = serde_json::to_value(&p).unwrap();
        let arr = v["coeffs"].as_array().unwrap();
        assert_eq!(arr.len(), 5);
        assert_eq!(arr[4][0].as_f64().unwrap(), -0.375);
    }
}
