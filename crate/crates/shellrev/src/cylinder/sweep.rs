//! Thickness sweeps over shell theories and the 3D tube.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::discont::discontinuity_thickness;
use super::harmonic::{solve_harmonic, HarmonicLoad, HarmonicProblem};
use super::TheoryVariant;
use crate::error::{Result, ShellError};
use crate::tube3d::{averaged_components, solve_radial_bvp, LoadCase, TubeProblem};

/// Chebyshev intervals of the coarse tube solve; the reported solve uses twice as many.
pub const TUBE_MESH: usize = 32;

/// A shell theory or the 3D tube under one of its load cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum SweepModel {
    Shell(TheoryVariant),
    Tube(LoadCase),
}

impl fmt::Display for SweepModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepModel::Shell(v) => write!(f, "{v}"),
            SweepModel::Tube(c) => write!(f, "tube3d:{c}"),
        }
    }
}

impl FromStr for SweepModel {
    type Err = ShellError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().strip_prefix("tube3d:") {
            Some(case) => Ok(SweepModel::Tube(case.parse()?)),
            None => Ok(SweepModel::Shell(s.parse()?)),
        }
    }
}

impl From<SweepModel> for String {
    fn from(m: SweepModel) -> String {
        m.to_string()
    }
}

impl TryFrom<String> for SweepModel {
    type Error = ShellError;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Displacement amplitudes of one model; tube values are thickness averages.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelResponse {
    pub u_phi: f64,
    pub u_z: f64,
    pub u_n: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SweepValue {
    Value { u_n: f64, u_n_h: f64 },
    Singular { reason: String },
    Failed { reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub h: f64,
    pub model: SweepModel,
    pub value: SweepValue,
}

/// The tube problem matching a shell problem; only pressure loads carry over.
pub fn tube_problem(case: LoadCase, problem: &HarmonicProblem) -> Result<TubeProblem> {
    let p = match problem.load {
        HarmonicLoad::Pressure { p } => p,
        _ => return Err(ShellError::InvalidParameter("tube models accept pressure loads only".into())),
    };
    Ok(TubeProblem {
        radius: problem.radius,
        thickness: problem.thickness,
        nu: problem.nu,
        mu: problem.mu,
        k_phi: problem.k_phi,
        k_z: problem.k_z,
        load_case: case,
        p,
    })
}

/// Evaluates one model at the problem's thickness.
pub fn evaluate_model(model: SweepModel, problem: &HarmonicProblem) -> Result<ModelResponse> {
    match model {
        SweepModel::Shell(v) => {
            let s = solve_harmonic(v, problem)?;
            Ok(ModelResponse { u_phi: s.u_phi, u_z: s.u_z, u_n: s.u_n })
        }
        SweepModel::Tube(case) => {
            let sol = solve_radial_bvp(&tube_problem(case, problem)?, TUBE_MESH)?;
            let [u_n, u_phi, u_z] = averaged_components(&sol);
            Ok(ModelResponse { u_phi, u_z, u_n })
        }
    }
}

/// Evaluates every model on `h_grid` (model-major, grid order preserved).
///
/// For each discontinuity thickness inside the grid span, the grid row nearest to it is
/// reported as singular, leaving a gap in that model's curve.
pub fn sweep_curve(models: &[SweepModel], h_grid: &[f64], template: &HarmonicProblem) -> Vec<SweepRow> {
    let (lo, hi) = h_grid
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &h| (lo.min(h), hi.max(h)));
    let mut rows = Vec::with_capacity(models.len() * h_grid.len());
    for &model in models {
        let mut flagged: Vec<Option<f64>> = vec![None; h_grid.len()];
        if let SweepModel::Shell(v) = model {
            if let Ok(d) = discontinuity_thickness(v, template.k_phi, template.k_z, template.nu, template.radius) {
                for hd in d.in_range.into_iter().filter(|&hd| hd >= lo && hd <= hi) {
                    let nearest = (0..h_grid.len())
                        .min_by(|&a, &b| (h_grid[a] - hd).abs().total_cmp(&(h_grid[b] - hd).abs()))
                        .expect("nonempty grid");
                    flagged[nearest] = Some(hd);
                }
            }
        }
        for (i, &h) in h_grid.iter().enumerate() {
            let value = match flagged[i] {
                Some(hd) => SweepValue::Singular { reason: format!("discontinuity thickness h_d = {hd}") },
                None => match evaluate_model(model, &template.with_thickness(h)) {
                    Ok(r) => SweepValue::Value { u_n: r.u_n, u_n_h: r.u_n * h },
                    Err(e @ ShellError::SingularSystem { .. }) => SweepValue::Singular { reason: e.to_string() },
                    Err(e) => SweepValue::Failed { reason: e.to_string() },
                },
            };
            rows.push(SweepRow { h, model, value });
        }
    }
    rows
}
