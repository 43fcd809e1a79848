//! Sparse bivariate polynomials in the operator symbols `X = ∂φ` and `Y = ∂ζ`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// `Σ c[i][j] X^i Y^j` stored canonically: no zero coefficients, exponents sorted.
///
/// Serializes as a list of `[i, j, coefficient]` triples.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(into = "Vec<(u32, u32, f64)>", from = "Vec<(u32, u32, f64)>")]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), f64>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: f64) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: f64, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    /// The symbol `X`.
    pub fn x() -> Self {
        Self::monomial(1.0, 1, 0)
    }

    /// The symbol `Y`.
    pub fn y() -> Self {
        Self::monomial(1.0, 0, 1)
    }

    fn add_term(&mut self, i: u32, j: u32, c: f64) {
        if c == 0.0 {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert(0.0);
        *entry += c;
        if *entry == 0.0 {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> f64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0.0)
    }

    /// Terms `(i, j, c)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, f64)> + '_ {
        self.terms.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|&(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn scale(&self, c: f64) -> Self {
        let mut out = Self::zero();
        for (i, j, v) in self.terms() {
            out.add_term(i, j, v * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::constant(1.0), |acc, _| &acc * self)
    }

    pub fn eval(&self, x: Complex64, y: Complex64) -> Complex64 {
        self.terms()
            .map(|(i, j, c)| x.powu(i) * y.powu(j) * c)
            .sum()
    }

    /// Substitutes a value for `X`, leaving a dense polynomial in `Y` (ascending powers).
    pub fn substitute_x(&self, x: Complex64) -> Vec<Complex64> {
        let deg = self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0) as usize;
        let mut out = vec![Complex64::new(0.0, 0.0); deg + 1];
        for (i, j, c) in self.terms() {
            out[j as usize] += x.powu(i) * c;
        }
        out
    }

    /// Largest coefficient difference against `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self - other).terms().map(|(_, _, c)| c.abs()).fold(0.0, f64::max)
    }
}

impl From<Vec<(u32, u32, f64)>> for BivariatePoly {
    fn from(v: Vec<(u32, u32, f64)>) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in v {
            p.add_term(i, j, c);
        }
        p
    }
}

impl From<BivariatePoly> for Vec<(u32, u32, f64)> {
    fn from(p: BivariatePoly) -> Self {
        p.terms().collect()
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, c);
        }
        out
    }
}

impl Sub for &BivariatePoly {
    type Output = BivariatePoly;
    fn sub(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (i, j, a) in self.terms() {
            for (k, l, b) in rhs.terms() {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }
}

impl Neg for &BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        self.scale(-1.0)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for BivariatePoly {
            type Output = BivariatePoly;
            fn $m(self, rhs: BivariatePoly) -> BivariatePoly { (&self).$m(&rhs) }
        }
        impl $tr<&BivariatePoly> for BivariatePoly {
            type Output = BivariatePoly;
            fn $m(self, rhs: &BivariatePoly) -> BivariatePoly { (&self).$m(rhs) }
        }
        impl $tr<BivariatePoly> for &BivariatePoly {
            type Output = BivariatePoly;
            fn $m(self, rhs: BivariatePoly) -> BivariatePoly { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for BivariatePoly {
    type Output = BivariatePoly;
    fn neg(self) -> BivariatePoly {
        self.scale(-1.0)
    }
}

impl Mul<BivariatePoly> for f64 {
    type Output = BivariatePoly;
    fn mul(self, rhs: BivariatePoly) -> BivariatePoly {
        rhs.scale(self)
    }
}

impl Mul<f64> for BivariatePoly {
    type Output = BivariatePoly;
    fn mul(self, rhs: f64) -> BivariatePoly {
        self.scale(rhs)
    }
}

impl Add<f64> for BivariatePoly {
    type Output = BivariatePoly;
    fn add(self, rhs: f64) -> BivariatePoly {
        self + BivariatePoly::constant(rhs)
    }
}

impl Sub<BivariatePoly> for f64 {
    type Output = BivariatePoly;
    fn sub(self, rhs: BivariatePoly) -> BivariatePoly {
        BivariatePoly::constant(self) - rhs
    }
}
