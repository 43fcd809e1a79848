//! Linear elastic shells of revolution.
//!
//! * [`geometry`]: meridian profiles, local frames and curvature.
//! * [`revolution`]: strains, constitutive law, shear forces, equilibrium and
//!   compatibility residuals evaluated with exact derivative propagation.
//! * [`cylinder`]: operator tables of six cylindrical shell theories, characteristic
//!   roots, harmonic solutions and discontinuity thicknesses.
//! * [`tube3d`]: a three-dimensional thick-tube reference solution.

pub mod cylinder;
pub mod error;
pub mod field;
pub mod geometry;
pub mod jet;
pub mod revolution;
pub mod tube3d;

pub use error::{Result, ShellError};
