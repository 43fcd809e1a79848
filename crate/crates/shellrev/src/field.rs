//! Scalar fields over the surface coordinates `(φ, s)` with exact derivative queries.
//!
//! A [`Field`] is an immutable expression tree built from coordinates, constants,
//! elementary functions and the meridian quantities `R(s)`, `x(s)`, `sin ψ`, `cos ψ`.
//! Evaluation produces a [`Jet`], so every mixed partial up to the requested order is exact.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::geometry::ProfileShape;
use crate::jet::Jet;

/// Meridian quantity usable inside a field expression.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProfileQuantity {
    /// Distance to the axis, `R(s)`.
    Radius,
    /// Axial coordinate, `x(s)`.
    Axial,
    /// `sin ψ = R′(s)`.
    SinPsi,
    /// `cos ψ = x′(s)`.
    CosPsi,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Const(f64),
    Phi,
    S,
    Sum(Arc<Field>, Arc<Field>),
    Product(Arc<Field>, Arc<Field>),
    Scale(f64, Arc<Field>),
    Neg(Arc<Field>),
    Sin(Arc<Field>),
    Cos(Arc<Field>),
    Exp(Arc<Field>),
    Profile(ProfileShape, ProfileQuantity),
}

impl Field {
    pub fn zero() -> Self {
        Field::Const(0.0)
    }

    pub fn constant(value: f64) -> Self {
        Field::Const(value)
    }

    pub fn phi() -> Self {
        Field::Phi
    }

    pub fn s() -> Self {
        Field::S
    }

    pub fn sin(self) -> Self {
        Field::Sin(Arc::new(self))
    }

    pub fn cos(self) -> Self {
        Field::Cos(Arc::new(self))
    }

    pub fn exp(self) -> Self {
        Field::Exp(Arc::new(self))
    }

    pub fn radius(shape: ProfileShape) -> Self {
        Field::Profile(shape, ProfileQuantity::Radius)
    }

    pub fn axial(shape: ProfileShape) -> Self {
        Field::Profile(shape, ProfileQuantity::Axial)
    }

    pub fn sin_psi(shape: ProfileShape) -> Self {
        Field::Profile(shape, ProfileQuantity::SinPsi)
    }

    pub fn cos_psi(shape: ProfileShape) -> Self {
        Field::Profile(shape, ProfileQuantity::CosPsi)
    }

    /// `amplitude · cos(k_φ φ + k_s s + phase)`.
    pub fn cos_wave(amplitude: f64, k_phi: f64, k_s: f64, phase: f64) -> Self {
        (Field::Phi * k_phi + Field::S * k_s + Field::Const(phase)).cos() * amplitude
    }

    /// `amplitude · sin(k_φ φ + k_s s + phase)`.
    pub fn sin_wave(amplitude: f64, k_phi: f64, k_s: f64, phase: f64) -> Self {
        (Field::Phi * k_phi + Field::S * k_s + Field::Const(phase)).sin() * amplitude
    }

    /// `coefficient · s^power`.
    pub fn s_power(coefficient: f64, power: u32) -> Self {
        let mut f = Field::Const(coefficient);
        for _ in 0..power {
            f = f * Field::S;
        }
        f
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Field::Const(c) if *c == 0.0)
    }

    /// Taylor jet of the field about `(φ, s)` to total order `order`.
    pub fn jet(&self, phi: f64, s: f64, order: usize) -> Jet {
        match self {
            Field::Const(c) => Jet::constant(*c, order),
            Field::Phi => Jet::phi(phi, order),
            Field::S => Jet::s(s, order),
            Field::Sum(a, b) => a.jet(phi, s, order) + b.jet(phi, s, order),
            Field::Product(a, b) => {
                if a.is_zero() || b.is_zero() {
                    Jet::zero(order)
                } else {
                    a.jet(phi, s, order) * b.jet(phi, s, order)
                }
            }
            Field::Scale(c, a) => a.jet(phi, s, order).scale(*c),
            Field::Neg(a) => -a.jet(phi, s, order),
            Field::Sin(a) => a.jet(phi, s, order).sin(),
            Field::Cos(a) => a.jet(phi, s, order).cos(),
            Field::Exp(a) => a.jet(phi, s, order).exp(),
            Field::Profile(shape, q) => {
                let series = match q {
                    ProfileQuantity::Radius => shape.radius_series(s, order),
                    ProfileQuantity::Axial => shape.axial_series(s, order),
                    ProfileQuantity::SinPsi => shifted(shape.radius_series(s, order + 1)),
                    ProfileQuantity::CosPsi => shifted(shape.axial_series(s, order + 1)),
                };
                Jet::from_s_series(&series, order)
            }
        }
    }

    pub fn value(&self, phi: f64, s: f64) -> f64 {
        self.jet(phi, s, 0).value()
    }

    /// `∂φ^i ∂s^j` of the field at `(φ, s)`.
    pub fn partial(&self, phi: f64, s: f64, i: usize, j: usize) -> f64 {
        self.jet(phi, s, i + j).partial(i, j)
    }
}

/// Series of the derivative from the series of the function.
fn shifted(series: Vec<f64>) -> Vec<f64> {
    series
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| k as f64 * c)
        .collect()
}

impl Add for Field {
    type Output = Field;
    fn add(self, rhs: Field) -> Field {
        if self.is_zero() {
            rhs
        } else if rhs.is_zero() {
            self
        } else {
            Field::Sum(Arc::new(self), Arc::new(rhs))
        }
    }
}

impl Sub for Field {
    type Output = Field;
    fn sub(self, rhs: Field) -> Field {
        self + (-rhs)
    }
}

impl Mul for Field {
    type Output = Field;
    fn mul(self, rhs: Field) -> Field {
        if self.is_zero() || rhs.is_zero() {
            Field::zero()
        } else {
            Field::Product(Arc::new(self), Arc::new(rhs))
        }
    }
}

impl Mul<f64> for Field {
    type Output = Field;
    fn mul(self, rhs: f64) -> Field {
        if rhs == 0.0 || self.is_zero() {
            Field::zero()
        } else if rhs == 1.0 {
            self
        } else {
            Field::Scale(rhs, Arc::new(self))
        }
    }
}

impl Mul<Field> for f64 {
    type Output = Field;
    fn mul(self, rhs: Field) -> Field {
        rhs * self
    }
}

impl Neg for Field {
    type Output = Field;
    fn neg(self) -> Field {
        if self.is_zero() {
            self
        } else {
            Field::Neg(Arc::new(self))
        }
    }
}

impl From<f64> for Field {
    fn from(value: f64) -> Self {
        Field::Const(value)
    }
}
