use serde::{Deserialize, Serialize};

use super::poly::BivariatePoly;
use super::TheoryVariant;

/// Symmetric 3×3 differential operator acting on `(u_φ, u_z, u_n)`, coefficients in `X = ∂φ`, `Y = ∂ζ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiffOpMatrix {
    pub variant: TheoryVariant,
    pub nu: f64,
    pub gamma: f64,
    pub entries: [[BivariatePoly; 3]; 3],
}

impl DiffOpMatrix {
    /// Entry `(row, col)`, zero-based.
    pub fn entry(&self, row: usize, col: usize) -> &BivariatePoly {
        &self.entries[row][col]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| self.entries[i][j] == self.entries[j][i]))
    }
}

/// Terms common to every theory: the membrane operator.
fn membrane_part(nu: f64) -> [[BivariatePoly; 3]; 3] {
    let x = BivariatePoly::x();
    let y = BivariatePoly::y();
    let x2 = x.pow(2);
    let y2 = y.pow(2);
    let l11 = (&y2 + x2.scale(2.0) - y2.scale(nu)).scale(0.5);
    let l12 = (&x * &y).scale(0.5 * (1.0 + nu));
    let l13 = x.clone();
    let l22 = (y2.scale(2.0) + &x2 - x2.scale(nu)).scale(0.5);
    let l23 = y.scale(nu);
    let l33 = BivariatePoly::constant(1.0);
    [
        [l11, l12.clone(), l13.clone()],
        [l12, l22, l23.clone()],
        [l13, l23, l33],
    ]
}

/// Thickness correction multiplying `γ`.
fn bending_part(variant: TheoryVariant, nu: f64) -> [[BivariatePoly; 3]; 3] {
    let x = BivariatePoly::x();
    let y = BivariatePoly::y();
    let x2 = x.pow(2);
    let y2 = y.pow(2);
    let lap = &x2 + &y2;
    let lap2 = lap.pow(2);
    let one = BivariatePoly::constant(1.0);
    let zero = BivariatePoly::zero;

    let (l11, l22, l23, l33, l13) = match variant {
        TheoryVariant::Membrane => (zero(), zero(), zero(), zero(), zero()),
        TheoryVariant::Eliseev => (
            (&y2 + x2.scale(2.0) - y2.scale(nu)).scale(2.0),
            zero(),
            zero(),
            &one + &lap2 - x2.scale(2.0) - y2.scale(2.0 * nu),
            ((&one - &lap) * &x).scale(2.0),
        ),
        TheoryVariant::Vlasov => (
            zero(),
            zero(),
            (&x2 * &y - y.pow(3).scale(2.0) - (&x2 * &y).scale(nu)).scale(0.5),
            &one + &lap2 + x2.scale(2.0),
            (&x * &y2).scale((nu - 3.0) / 2.0),
        ),
        TheoryVariant::GoldenveiserBiderman => (
            y2.scale(2.0) + &x2 - y2.scale(2.0 * nu),
            zero(),
            zero(),
            lap2.clone(),
            -((y2.scale(2.0) + &x2 - y2.scale(nu)) * &x),
        ),
        TheoryVariant::Novichkov => (
            y2.scale(2.0) + &x2 - y2.scale(2.0 * nu),
            zero(),
            zero(),
            lap2.clone(),
            -((y2.scale(2.0) + &x2 - y2.scale(2.0 * nu)) * &x),
        ),
        TheoryVariant::Fluegge => (
            y2.scale(1.5 * (nu - 1.0)),
            x2.scale(0.5 * (nu - 1.0)),
            -((y2.scale(2.0) - &x2 + x2.scale(nu)) * &y).scale(0.5),
            &one + &lap2 + x2.scale(2.0),
            (&x * &y2).scale(-(3.0 - nu) / 2.0),
        ),
    };
    [
        [l11, zero(), l13.clone()],
        [zero(), l22, l23.clone()],
        [l13, l23, l33],
    ]
}

/// `L⁰ + γ L¹` for the chosen theory. The membrane model ignores `gamma`.
pub fn operator(variant: TheoryVariant, nu: f64, gamma: f64) -> DiffOpMatrix {
    let base = membrane_part(nu);
    let corr = bending_part(variant, nu);
    let g = if variant == TheoryVariant::Membrane { 0.0 } else { gamma };
    let entries = std::array::from_fn(|i| std::array::from_fn(|j| &base[i][j] + corr[i][j].scale(g)));
    DiffOpMatrix { variant, nu, gamma, entries }
}
