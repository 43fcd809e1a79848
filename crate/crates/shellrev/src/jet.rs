//! Truncated bivariate Taylor expansions ("jets") in the surface coordinates (φ, s).
//!
//! A jet of order `n` stores the normalized Taylor coefficients
//! `c[i][j] = ∂φ^i ∂s^j f / (i! j!)` for every `i + j ≤ n` about a fixed point.
//! Arithmetic on jets is exact up to the truncation order, so derivative chains
//! through products, quotients and elementary functions carry no discretization error
//! and mixed partials commute by construction.

use std::ops::{Add, Mul, Neg, Sub};

/// Truncated bivariate Taylor polynomial about a point.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet {
    order: usize,
    coeffs: Vec<f64>,
}

#[inline]
fn index(i: usize, j: usize) -> usize {
    let d = i + j;
    d * (d + 1) / 2 + j
}

#[inline]
fn len_for(order: usize) -> usize {
    (order + 1) * (order + 2) / 2
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

impl Jet {
    pub fn constant(value: f64, order: usize) -> Self {
        let mut coeffs = vec![0.0; len_for(order)];
        coeffs[0] = value;
        Self { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::constant(0.0, order)
    }

    /// The coordinate φ itself, expanded about `phi0`.
    pub fn phi(phi0: f64, order: usize) -> Self {
        let mut jet = Self::constant(phi0, order);
        if order >= 1 {
            jet.coeffs[index(1, 0)] = 1.0;
        }
        jet
    }

    /// The coordinate s itself, expanded about `s0`.
    pub fn s(s0: f64, order: usize) -> Self {
        let mut jet = Self::constant(s0, order);
        if order >= 1 {
            jet.coeffs[index(0, 1)] = 1.0;
        }
        jet
    }

    /// Lifts a univariate Taylor series in s (normalized coefficients) to a jet.
    /// Missing high-order terms are taken as zero, so callers must supply at least `order + 1`.
    pub fn from_s_series(series: &[f64], order: usize) -> Self {
        let mut jet = Self::zero(order);
        for (j, &c) in series.iter().enumerate().take(order + 1) {
            jet.coeffs[index(0, j)] = c;
        }
        jet
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    /// Normalized coefficient `∂φ^i ∂s^j f / (i! j!)`; zero beyond the truncation order.
    pub fn coeff(&self, i: usize, j: usize) -> f64 {
        if i + j > self.order {
            0.0
        } else {
            self.coeffs[index(i, j)]
        }
    }

    /// The mixed partial `∂φ^i ∂s^j f`.
    ///
    /// # Panics
    /// If `i + j` exceeds the jet order.
    pub fn partial(&self, i: usize, j: usize) -> f64 {
        assert!(i + j <= self.order, "jet of order {} cannot supply ∂φ^{i}∂s^{j}", self.order);
        self.coeffs[index(i, j)] * factorial(i) * factorial(j)
    }

    /// Drops all terms above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self {
            order,
            coeffs: self.coeffs[..len_for(order)].to_vec(),
        }
    }

    /// ∂/∂φ; lowers the order by one.
    ///
    /// # Panics
    /// On a jet of order zero, which carries no derivative information.
    pub fn d_phi(&self) -> Self {
        assert!(self.order > 0, "cannot differentiate an order-0 jet");
        let order = self.order - 1;
        let mut coeffs = vec![0.0; len_for(order)];
        for d in 0..=order {
            for j in 0..=d {
                let i = d - j;
                coeffs[index(i, j)] = (i + 1) as f64 * self.coeffs[index(i + 1, j)];
            }
        }
        Self { order, coeffs }
    }

    /// ∂/∂s; lowers the order by one.
    ///
    /// # Panics
    /// On a jet of order zero.
    pub fn d_s(&self) -> Self {
        assert!(self.order > 0, "cannot differentiate an order-0 jet");
        let order = self.order - 1;
        let mut coeffs = vec![0.0; len_for(order)];
        for d in 0..=order {
            for j in 0..=d {
                let i = d - j;
                coeffs[index(i, j)] = (j + 1) as f64 * self.coeffs[index(i, j + 1)];
            }
        }
        Self { order, coeffs }
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add_const(&self, value: f64) -> Self {
        let mut out = self.clone();
        out.coeffs[0] += value;
        out
    }

    /// Composes a univariate function with this jet, given the function's
    /// derivatives `g(f0), g'(f0), …` at the jet's value. Needs `order + 1` entries.
    pub fn compose(&self, derivatives: &[f64]) -> Self {
        let n = self.order;
        assert!(derivatives.len() > n, "compose needs {} derivatives", n + 1);
        let mut delta = self.clone();
        delta.coeffs[0] = 0.0;
        let mut acc = Self::constant(derivatives[n] / factorial(n), n);
        for k in (0..n).rev() {
            acc = &acc * &delta;
            acc.coeffs[0] += derivatives[k] / factorial(k);
        }
        acc
    }

    pub fn recip(&self) -> Self {
        let v = self.value();
        let mut derivs = Vec::with_capacity(self.order + 1);
        let mut d = 1.0 / v;
        for k in 0..=self.order {
            derivs.push(d);
            d *= -((k + 1) as f64) / v;
        }
        self.compose(&derivs)
    }

    pub fn sin(&self) -> Self {
        let (s, c) = self.value().sin_cos();
        let cycle = [s, c, -s, -c];
        let derivs: Vec<f64> = (0..=self.order).map(|k| cycle[k % 4]).collect();
        self.compose(&derivs)
    }

    pub fn cos(&self) -> Self {
        let (s, c) = self.value().sin_cos();
        let cycle = [c, -s, -c, s];
        let derivs: Vec<f64> = (0..=self.order).map(|k| cycle[k % 4]).collect();
        self.compose(&derivs)
    }

    pub fn exp(&self) -> Self {
        let e = self.value().exp();
        self.compose(&vec![e; self.order + 1])
    }

    pub fn powi(&self, exponent: u32) -> Self {
        let mut out = Self::constant(1.0, self.order);
        for _ in 0..exponent {
            out = &out * self;
        }
        out
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, rhs: &Jet) -> Jet {
        let order = self.order.min(rhs.order);
        let n = len_for(order);
        Jet {
            order,
            coeffs: (0..n).map(|k| self.coeffs[k] + rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, rhs: &Jet) -> Jet {
        let order = self.order.min(rhs.order);
        let n = len_for(order);
        Jet {
            order,
            coeffs: (0..n).map(|k| self.coeffs[k] - rhs.coeffs[k]).collect(),
        }
    }
}

impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, rhs: &Jet) -> Jet {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![0.0; len_for(order)];
        for d in 0..=order {
            for j in 0..=d {
                let i = d - j;
                let mut acc = 0.0;
                for a in 0..=i {
                    for b in 0..=j {
                        acc += self.coeffs[index(a, b)] * rhs.coeffs[index(i - a, j - b)];
                    }
                }
                coeffs[index(i, j)] = acc;
            }
        }
        Jet { order, coeffs }
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Jet {
            type Output = Jet;
            fn $m(self, rhs: Jet) -> Jet { (&self).$m(&rhs) }
        }
        impl $tr<&Jet> for Jet {
            type Output = Jet;
            fn $m(self, rhs: &Jet) -> Jet { (&self).$m(rhs) }
        }
        impl $tr<Jet> for &Jet {
            type Output = Jet;
            fn $m(self, rhs: Jet) -> Jet { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

impl Mul<f64> for &Jet {
    type Output = Jet;
    fn mul(self, rhs: f64) -> Jet {
        self.scale(rhs)
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, rhs: f64) -> Jet {
        self.scale(rhs)
    }
}

impl Mul<&Jet> for f64 {
    type Output = Jet;
    fn mul(self, rhs: &Jet) -> Jet {
        rhs.scale(self)
    }
}

impl Mul<Jet> for f64 {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        rhs.scale(self)
    }
}

/// Sums a list of jets, truncating to the lowest order present.
pub fn sum<'a>(terms: impl IntoIterator<Item = &'a Jet>) -> Option<Jet> {
    terms.into_iter().fold(None, |acc, t| match acc {
        None => Some(t.clone()),
        Some(a) => Some(&a + t),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
    }

    #[test]
    fn coordinate_jets_differentiate_to_one() {
        let p = Jet::phi(0.7, 3);
        let s = Jet::s(-1.2, 3);
        assert_eq!(p.partial(1, 0), 1.0);
        assert_eq!(p.partial(0, 1), 0.0);
        assert_eq!(s.partial(0, 1), 1.0);
        assert_eq!(s.value(), -1.2);
    }

    #[test]
    fn product_rule_on_monomials() {
        // f = φ² s³ at (φ, s) = (2, 3)
        let p = Jet::phi(2.0, 5);
        let s = Jet::s(3.0, 5);
        let f = p.powi(2) * s.powi(3);
        assert!(close(f.value(), 4.0 * 27.0, 1e-14));
        assert!(close(f.partial(1, 0), 2.0 * 2.0 * 27.0, 1e-14));
        assert!(close(f.partial(1, 2), 4.0 * 6.0 * 3.0, 1e-14));
        assert!(close(f.partial(2, 3), 2.0 * 6.0, 1e-14));
        assert!(close(f.partial(0, 4), 0.0, 1e-14));
    }

    #[test]
    fn trig_and_exp_match_closed_derivatives() {
        // g = sin(2φ + 3s) at (0.3, 0.1)
        let arg = Jet::phi(0.3, 4).scale(2.0) + Jet::s(0.1, 4).scale(3.0);
        let g = arg.sin();
        let a: f64 = 2.0 * 0.3 + 3.0 * 0.1;
        assert!(close(g.partial(0, 0), a.sin(), 1e-14));
        assert!(close(g.partial(1, 1), -6.0 * a.sin(), 1e-14));
        assert!(close(g.partial(2, 2), 36.0 * a.sin(), 1e-13));
        assert!(close(g.partial(1, 3), 54.0 * a.sin(), 1e-13));
        let e = arg.exp();
        assert!(close(e.partial(2, 1), 12.0 * a.exp(), 1e-13));
        let c = arg.cos();
        assert!(close(c.partial(0, 3), 27.0 * a.sin(), 1e-13));
    }

    #[test]
    fn reciprocal_of_linear_jet() {
        // 1/(1 + s) at s = 0.5: n-th derivative = (-1)^n n! / 1.5^(n+1)
        let f = Jet::s(0.5, 5).add_const(1.0).recip();
        for n in 0..=5 {
            let expect = (-1f64).powi(n as i32) * factorial(n) / 1.5f64.powi(n as i32 + 1);
            assert!(close(f.partial(0, n), expect, 1e-13), "n = {n}");
        }
    }

    #[test]
    fn derivative_operators_commute() {
        let f = (Jet::phi(0.4, 5) * Jet::s(1.1, 5)).sin() * Jet::s(1.1, 5).exp();
        let a = f.d_phi().d_s();
        let b = f.d_s().d_phi();
        assert_eq!(a, b);
        assert!(close(a.value(), f.partial(1, 1), 1e-14));
    }

    #[test]
    fn truncation_keeps_lower_terms() {
        let f = Jet::s(2.0, 4).powi(3);
        let t = f.truncate(2);
        assert_eq!(t.order(), 2);
        assert_eq!(t.partial(0, 2), f.partial(0, 2));
        assert_eq!(t.coeff(0, 3), 0.0);
    }
}
