//! Long circular cylinders under six shell theories.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ShellError;

pub mod charpoly;
pub mod discont;
pub mod harmonic;
pub mod operator;
pub mod poly;
pub mod reference;
pub mod sweep;

pub use charpoly::{char_poly, char_roots, zero_root_count, CharPoly, CharRoots};
pub use discont::{denominator_in_h, discontinuity_thickness, DenominatorPoly, DiscontinuityThickness};
pub use harmonic::{
    eliseev_pressure_solution, harmonic_system, load_intensities, solve_harmonic, HarmonicLoad,
    HarmonicProblem, HarmonicSolution, HarmonicSystem,
};
pub use operator::{operator, DiffOpMatrix};
pub use poly::BivariatePoly;
pub use reference::{asymptotic_roots, reference_roots, AsymptoticRoot};
pub use sweep::{evaluate_model, sweep_curve, tube_problem, ModelResponse, SweepModel, SweepRow, SweepValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoryVariant {
    Eliseev,
    Vlasov,
    GoldenveiserBiderman,
    Novichkov,
    Fluegge,
    Membrane,
}

impl TheoryVariant {
    pub const ALL: [TheoryVariant; 6] = [
        TheoryVariant::Eliseev,
        TheoryVariant::Vlasov,
        TheoryVariant::GoldenveiserBiderman,
        TheoryVariant::Novichkov,
        TheoryVariant::Fluegge,
        TheoryVariant::Membrane,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoryVariant::Eliseev => "eliseev",
            TheoryVariant::Vlasov => "vlasov",
            TheoryVariant::GoldenveiserBiderman => "goldenveiser-biderman",
            TheoryVariant::Novichkov => "novichkov",
            TheoryVariant::Fluegge => "fluegge",
            TheoryVariant::Membrane => "membrane",
        }
    }
}

impl fmt::Display for TheoryVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoryVariant {
    type Err = ShellError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v = match s.trim().to_ascii_lowercase().replace('_', "-").as_str() {
            "eliseev" => TheoryVariant::Eliseev,
            "vlasov" => TheoryVariant::Vlasov,
            "goldenveiser-biderman" | "goldenveiser" | "gb" => TheoryVariant::GoldenveiserBiderman,
            "novichkov" => TheoryVariant::Novichkov,
            "fluegge" | "flugge" | "flügge" => TheoryVariant::Fluegge,
            "membrane" => TheoryVariant::Membrane,
            other => return Err(ShellError::InvalidParameter(format!("unknown theory variant `{other}`"))),
        };
        Ok(v)
    }
}
