//! Closed-form and two-term asymptotic nonzero roots of the characteristic equation.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::TheoryVariant;

type C = Complex64;

fn csqrt(z: impl Into<C>) -> C {
    z.into().sqrt()
}

/// All four sign combinations `±√(inner(±))`.
fn four(inner: impl Fn(f64) -> C) -> Vec<C> {
    let mut out = Vec::with_capacity(4);
    for outer in [1.0, -1.0] {
        for s in [1.0, -1.0] {
            out.push(inner(s).sqrt() * outer);
        }
    }
    out
}

/// Closed-form nonzero roots for `m ∈ {0, 1}`; `None` where no closed form is known.
///
/// The Flügge `m = 1` expression is the classical one and corresponds to the literature
/// form of that theory; see the workspace README for how it relates to the tabulated operator.
pub fn reference_roots(variant: TheoryVariant, m: i64, nu: f64, gamma: f64) -> Option<Vec<Complex64>> {
    use TheoryVariant::*;
    let g = gamma;
    let g4 = g.powf(-0.25);
    let sq_nu = csqrt(nu * nu - 1.0);
    let roots = match (variant, m) {
        (Eliseev, 0) => four(|s| nu + s * csqrt(1.0 / g + 1.0) * sq_nu),
        (Eliseev, 1) => {
            let a = -1.0 / g - 5.0 - 4.0 * g + 9.0 * g * g + 4.0 * nu + 22.0 * nu * g
                + 30.0 * nu * g * g
                + nu * nu / g
                + 9.0 * nu * nu
                + 26.0 * nu * nu * g
                + 25.0 * nu * nu * g * g;
            four(|s| (2.0 + 5.0 * g + nu + 3.0 * nu * g + s * csqrt(a)) / (1.0 + 4.0 * g))
        }
        (Vlasov | Fluegge, 0) => {
            let disc = csqrt(-1.0 + nu * nu + g * g);
            four(|s| (nu * g.sqrt() + s * disc) / (-1.0 + g))
                .into_iter()
                .map(|z| z * g4)
                .collect()
        }
        (GoldenveiserBiderman | Novichkov, 0) => {
            four(|s| s * sq_nu).into_iter().map(|z| z * g4).collect()
        }
        (GoldenveiserBiderman, 1) => {
            let disc = csqrt(-1.0 + nu * nu + 4.0 * g * nu * nu);
            four(|s| (1.0 + g) / (1.0 + 4.0 * g) * (2.0 * g.sqrt() + s * disc))
                .into_iter()
                .map(|z| z * g4)
                .collect()
        }
        (Fluegge, 1) => {
            let a = 8.0 + 11.0 * g + 9.0 * g * g - 4.0 * nu - 15.0 * nu * g - 9.0 * nu * g * g;
            let b = (a * g).powi(2)
                - 4.0
                    * g
                    * (-2.0 - 4.0 * g + 6.0 * g * g)
                    * (-2.0 - 8.0 * g - 6.0 * g * g
                        + 2.0 * nu * nu
                        + 6.0 * g * nu * nu
                        + 6.0 * nu * nu * g * g
                        + 2.0 * nu * nu * g * g * g);
            let denom = g * (-1.0 - 2.0 * g + 3.0 * g * g);
            four(|s| (-a * g + s * csqrt(b)) / denom)
                .into_iter()
                .map(|z| z * 0.5)
                .collect()
        }
        _ => return None,
    };
    Some(roots)
}

/// One root of the thin-shell expansion `±(γ^{-1/4} a + γ^{1/4} b)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticRoot {
    pub leading: Complex64,
    pub correction: Complex64,
    pub value: Complex64,
}

/// Second-term coefficient `b` as a function of the leading coefficient `a`.
fn correction(variant: TheoryVariant, m: i64, nu: f64, a: C) -> Option<C> {
    use TheoryVariant::*;
    let two_a = a * 2.0;
    Some(match (variant, m) {
        (Eliseev, 0) => nu / two_a,
        (Eliseev, 1) => (2.0 + nu) / two_a,
        (Vlasov | Fluegge, 0) => -nu / two_a,
        (GoldenveiserBiderman | Novichkov, 0) => C::new(0.0, 0.0),
        (GoldenveiserBiderman, 1) => 1.0 / a,
        (Fluegge, 1) => (2.0 - nu) / two_a,
        _ => return None,
    })
}

/// Two-term small-γ expansions of the four nonzero roots; intended for `γ < 1e-2`.
pub fn asymptotic_roots(variant: TheoryVariant, m: i64, nu: f64, gamma: f64) -> Option<Vec<AsymptoticRoot>> {
    let sq_nu = csqrt(nu * nu - 1.0);
    let mut out = Vec::with_capacity(4);
    for outer in [1.0, -1.0] {
        for s in [1.0, -1.0] {
            let a = (sq_nu * s).sqrt();
            let b = correction(variant, m, nu, a)?;
            let leading = a * gamma.powf(-0.25) * outer;
            let corr = b * gamma.powf(0.25) * outer;
            out.push(AsymptoticRoot { leading, correction: corr, value: leading + corr });
        }
    }
    Some(out)
}
