//! The five analyses. Each turns resolved options into a table and, where useful, a chart.

use std::f64::consts::PI;

use num_complex::Complex64;
use shellrev::cylinder::{
    asymptotic_roots, char_poly, char_roots, discontinuity_thickness, evaluate_model,
    reference_roots, solve_harmonic, sweep_curve, HarmonicLoad, HarmonicProblem, SweepModel,
    SweepValue, TheoryVariant,
};
use shellrev::field::Field;
use shellrev::geometry::MeridianProfile;
use shellrev::revolution::{
    consistency_residual, equilibrium_residual, DisplacementField, ElasticModuli, LoadField,
    StrainFields, StrainSource,
};
use shellrev::tube3d::LoadCase;
use shellrev::ShellError;

use crate::error::CliError;
use crate::options::Options;
use crate::svg::{Chart, Series};
use crate::table::{Cell, ResultTable, TEXT};

pub struct Output {
    pub table: ResultTable,
    pub chart: Option<String>,
}

const CONVENTIONS: [(&str, &str); 4] = [
    (
        "convention.phase",
        "tangential amplitudes multiply cos(k_phi*phi + k_z*z), the normal amplitude multiplies sin(k_phi*phi + k_z*z); \
         the common factor 1/i is divided out so all amplitudes are real",
    ),
    (
        "convention.geometry",
        "meridian parametrized by arc length with R'(s) = sin(psi) and x'(s) = cos(psi); \
         the meridional bending strain carries the -u_n*psi'^2 term",
    ),
    (
        "convention.load-mapping",
        "every theory uses the same load intensities B_phi = c(R f_phi + m_s), B_z = c R f_z, \
         B_n = -c(R f_n + k_z R m_phi - k_phi m_s) with c = R(1-nu)/(2 h mu)",
    ),
    (
        "convention.tube3d",
        "tube3d values are thickness averages of the 3D radial solution; inner, outer and both name the loaded faces",
    ),
];

const OK: &str = "ok";
const NOT_AVAILABLE: &str = "not-available";

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn table(
    subcommand: &str,
    columns: &[(&'static str, &'static str)],
    params: &[(&str, String)],
) -> ResultTable {
    let mut t = ResultTable::new(columns);
    t.meta("tool", "shellrev");
    t.meta("version", env!("CARGO_PKG_VERSION"));
    t.meta("subcommand", subcommand);
    let joined: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    t.meta("parameters", joined.join("; "));
    for (k, v) in CONVENTIONS {
        t.meta(k, v);
    }
    t
}

fn chart_notes(t: &ResultTable) -> Vec<String> {
    t.meta.iter().map(|(k, v)| format!("{k}: {v}")).collect()
}

fn num(v: f64) -> String {
    format!("{v:?}")
}

fn checked(name: &str, v: f64, ok: impl Fn(f64) -> bool, range: &str) -> Result<f64, CliError> {
    if v.is_finite() && ok(v) {
        Ok(v)
    } else {
        Err(usage(format!("--{name} must be {range}, got {v}")))
    }
}

/// Material, geometry and load shared by every cylinder analysis.
struct Material {
    nu: f64,
    mu: f64,
    radius: f64,
}

fn material(o: &Options) -> Result<Material, CliError> {
    Ok(Material {
        nu: checked(
            "nu",
            o.nu.unwrap_or(0.3),
            |v| v > -1.0 && v < 1.0,
            "in (-1, 1)",
        )?,
        mu: checked("mu", o.mu.unwrap_or(1.0), |v| v > 0.0, "positive")?,
        radius: checked("R", o.radius.unwrap_or(1.0), |v| v > 0.0, "positive")?,
    })
}

fn thickness(o: &Options, radius: f64) -> Result<f64, CliError> {
    checked(
        "h",
        o.h.unwrap_or(0.1 * radius),
        |v| v > 0.0 && v < 2.0 * radius,
        "in (0, 2R)",
    )
}

fn load(o: &Options) -> Result<HarmonicLoad, CliError> {
    if o.b_phi.is_some() || o.b_z.is_some() || o.b_n.is_some() {
        let f = |name, v: Option<f64>| checked(name, v.unwrap_or(0.0), |_| true, "finite");
        return Ok(HarmonicLoad::Intensities {
            b_phi: f("b-phi", o.b_phi)?,
            b_z: f("b-z", o.b_z)?,
            b_n: f("b-n", o.b_n)?,
        });
    }
    Ok(HarmonicLoad::Pressure {
        p: checked("p", o.p.unwrap_or(1.0), |_| true, "finite")?,
    })
}

fn load_params(load: &HarmonicLoad) -> Vec<(&'static str, String)> {
    match *load {
        HarmonicLoad::Pressure { p } => vec![("p", num(p))],
        HarmonicLoad::Intensities { b_phi, b_z, b_n } => {
            vec![("b-phi", num(b_phi)), ("b-z", num(b_z)), ("b-n", num(b_n))]
        }
        HarmonicLoad::Physical { .. } => vec![("load", "physical".into())],
    }
}

fn kz(o: &Options, default: f64) -> Result<f64, CliError> {
    checked("kz", o.kz.unwrap_or(default), |_| true, "finite")
}

fn default_models() -> Vec<SweepModel> {
    let mut v: Vec<SweepModel> = TheoryVariant::ALL
        .iter()
        .map(|&t| SweepModel::Shell(t))
        .collect();
    v.push(SweepModel::Tube(LoadCase::Both));
    v
}

/// Parses `--variant`; absence selects `defaults`. `all` selects every shell theory, plus
/// `tube3d:both` when the defaults include a tube model.
fn models(o: &Options, defaults: &[SweepModel]) -> Result<Vec<SweepModel>, CliError> {
    let spec = match o.variant.as_deref().map(str::trim) {
        None | Some("") => return Ok(defaults.to_vec()),
        Some("all") => {
            let mut all = default_models();
            if !defaults.iter().any(|m| matches!(m, SweepModel::Tube(_))) {
                all.retain(|m| matches!(m, SweepModel::Shell(_)));
            }
            return Ok(all);
        }
        Some(s) => s,
    };
    let mut out: Vec<SweepModel> = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let model = item
            .parse::<SweepModel>()
            .map_err(|e| usage(format!("--variant `{item}`: {e}")))?;
        if !out.contains(&model) {
            out.push(model);
        }
    }
    Ok(out)
}

fn shell_variants(
    o: &Options,
    defaults: &[TheoryVariant],
    why: &str,
) -> Result<Vec<TheoryVariant>, CliError> {
    let defaults: Vec<SweepModel> = defaults.iter().map(|&v| SweepModel::Shell(v)).collect();
    models(o, &defaults)?
        .into_iter()
        .map(|m| match m {
            SweepModel::Shell(v) => Ok(v),
            SweepModel::Tube(_) => Err(usage(format!("tube3d models are not available for {why}"))),
        })
        .collect()
}

fn variant_names(models: &[SweepModel]) -> String {
    models
        .iter()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `n` points from `lo` to `hi`, geometric or uniform.
fn grid(lo: f64, hi: f64, n: usize, log: bool) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n)
        .map(|i| {
            let t = i as f64 / (n - 1) as f64;
            if i == n - 1 {
                hi
            } else if log {
                lo * (hi / lo).powf(t)
            } else {
                lo + (hi - lo) * t
            }
        })
        .collect()
}

fn steps(name: &str, v: Option<usize>, default: usize) -> Result<usize, CliError> {
    match v.unwrap_or(default) {
        0 => Err(usage(format!("--{name} must be at least 1"))),
        n => Ok(n),
    }
}

fn nearest(target: Complex64, candidates: &[Complex64]) -> Option<Complex64> {
    candidates
        .iter()
        .copied()
        .min_by(|a, b| (a - target).norm().total_cmp(&(b - target).norm()))
}

fn complex_cells(z: Option<Complex64>) -> [Cell; 2] {
    match z {
        Some(z) => [Cell::Num(z.re), Cell::Num(z.im)],
        None => [Cell::from(NOT_AVAILABLE), Cell::from(NOT_AVAILABLE)],
    }
}

pub fn run_roots(o: &Options) -> Result<Output, CliError> {
    let nu = checked(
        "nu",
        o.nu.unwrap_or(0.3),
        |v| v > -1.0 && v < 1.0,
        "in (-1, 1)",
    )?;
    let m = o.m.unwrap_or(0);
    if m < 0 {
        return Err(usage(format!("--m must be non-negative, got {m}")));
    }
    let gamma = match o.gamma {
        Some(g) => checked("gamma", g, |v| v > 0.0, "positive")?,
        None => {
            let radius = checked("R", o.radius.unwrap_or(1.0), |v| v > 0.0, "positive")?;
            let h = thickness(o, radius)?;
            h * h / (12.0 * radius * radius)
        }
    };
    let variants = shell_variants(o, &TheoryVariant::ALL, "characteristic roots")?;
    let params = [
        (
            "variant",
            variant_names(
                &variants
                    .iter()
                    .map(|&v| SweepModel::Shell(v))
                    .collect::<Vec<_>>(),
            ),
        ),
        ("m", m.to_string()),
        ("nu", num(nu)),
        ("gamma", num(gamma)),
    ];
    let mut t = table(
        "roots",
        &[
            ("variant", TEXT),
            ("m", "1"),
            ("kind", TEXT),
            ("re", "1"),
            ("im", "1"),
            ("multiplicity", "1"),
            ("reference_re", "1"),
            ("reference_im", "1"),
            ("asymptotic_re", "1"),
            ("asymptotic_im", "1"),
            ("status", TEXT),
            ("reason", TEXT),
        ],
        &params,
    );
    t.meta(
        "roots.variable",
        "axial wavenumber k in d/dzeta -> k, zeta = z/R, for d/dphi -> i m",
    );
    for v in variants {
        let name = Cell::from(v.name());
        let roots = match char_roots(&char_poly(v, m, nu, gamma)) {
            Ok(r) => r,
            Err(e) => {
                let mut row = vec![name, Cell::Int(m), Cell::from(TEXT)];
                row.extend(std::iter::repeat_n(Cell::Empty, 7));
                row.extend([Cell::from("failed"), Cell::from(e.to_string())]);
                t.push(row);
                continue;
            }
        };
        t.meta(&format!("zero_roots.{v}"), roots.zero_count);
        let reference = reference_roots(v, m, nu, gamma);
        let asymptotic: Option<Vec<Complex64>> =
            asymptotic_roots(v, m, nu, gamma).map(|a| a.into_iter().map(|r| r.value).collect());
        t.push(vec![
            name.clone(),
            Cell::Int(m),
            Cell::from("zero"),
            Cell::Num(0.0),
            Cell::Num(0.0),
            Cell::Int(roots.zero_count as i64),
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            Cell::from(OK),
            Cell::from(""),
        ]);
        let mut nonzero: Vec<(Complex64, usize)> = roots
            .multiset()
            .into_iter()
            .filter(|(z, _)| z.norm() > 0.0)
            .collect();
        nonzero.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
        for (z, mult) in nonzero {
            let r = reference.as_deref().and_then(|c| nearest(z, c));
            let a = asymptotic.as_deref().and_then(|c| nearest(z, c));
            let mut reasons = Vec::new();
            if r.is_none() {
                reasons.push(format!("no closed form for {v} at m = {m}"));
            }
            if a.is_none() {
                reasons.push(format!("no asymptotic expansion for {v} at m = {m}"));
            }
            let mut row = vec![
                name.clone(),
                Cell::Int(m),
                Cell::from("nonzero"),
                Cell::Num(z.re),
                Cell::Num(z.im),
                Cell::Int(mult as i64),
            ];
            row.extend(complex_cells(r));
            row.extend(complex_cells(a));
            row.extend([Cell::from(OK), Cell::from(reasons.join("; "))]);
            t.push(row);
        }
    }
    Ok(Output {
        table: t,
        chart: None,
    })
}

fn status_cells(value: &SweepValue) -> (Option<f64>, Cell, Cell) {
    match value {
        SweepValue::Value { u_n, .. } => (Some(*u_n), Cell::from(OK), Cell::from("")),
        SweepValue::Singular { reason } => {
            (None, Cell::from("singular"), Cell::from(reason.as_str()))
        }
        SweepValue::Failed { reason } => (None, Cell::from("failed"), Cell::from(reason.as_str())),
    }
}

pub fn run_solve(o: &Options) -> Result<Output, CliError> {
    let mat = material(o)?;
    let h = thickness(o, mat.radius)?;
    let k_phi = o.kphi.unwrap_or(0);
    let k_z = kz(o, 1.0)?;
    let load = load(o)?;
    let problem = HarmonicProblem {
        radius: mat.radius,
        thickness: h,
        mu: mat.mu,
        nu: mat.nu,
        k_phi,
        k_z,
        load,
    };
    let models = models(o, &default_models())?;
    let mut params = vec![
        ("variant", variant_names(&models)),
        ("R", num(mat.radius)),
        ("h", num(h)),
        ("nu", num(mat.nu)),
        ("mu", num(mat.mu)),
        ("kphi", k_phi.to_string()),
        ("kz", num(k_z)),
    ];
    params.extend(load_params(&load));
    let mut t = table(
        "solve",
        &[
            ("model", TEXT),
            ("h", "length"),
            ("u_phi", "length"),
            ("u_z", "length"),
            ("u_n", "length"),
            ("status", TEXT),
            ("reason", TEXT),
        ],
        &params,
    );
    for model in models {
        let value = solve_one(model, &problem);
        let mut row = vec![Cell::from(model.to_string()), Cell::Num(h)];
        match value {
            Ok([u_phi, u_z, u_n]) => row.extend([
                Cell::Num(u_phi),
                Cell::Num(u_z),
                Cell::Num(u_n),
                Cell::from(OK),
                Cell::from(""),
            ]),
            Err((status, reason)) => row.extend([
                Cell::Empty,
                Cell::Empty,
                Cell::Empty,
                Cell::from(status),
                Cell::from(reason),
            ]),
        }
        t.push(row);
    }
    Ok(Output {
        table: t,
        chart: None,
    })
}

fn solve_one(
    model: SweepModel,
    problem: &HarmonicProblem,
) -> Result<[f64; 3], (&'static str, String)> {
    if let SweepModel::Shell(v) = model {
        let d = discontinuity_thickness(v, problem.k_phi, problem.k_z, problem.nu, problem.radius);
        if let Some(hd) = d.ok().and_then(|d| {
            d.in_range
                .into_iter()
                .find(|hd| (hd - problem.thickness).abs() <= 1e-9 * hd)
        }) {
            return Err((
                "singular",
                format!("h is at the discontinuity thickness h_d = {hd}"),
            ));
        }
    }
    match evaluate_model(model, problem) {
        Ok(r) => Ok([r.u_phi, r.u_z, r.u_n]),
        Err(e @ ShellError::SingularSystem { .. }) => Err(("singular", e.to_string())),
        Err(e) => Err(("failed", e.to_string())),
    }
}

pub fn run_sweep(o: &Options) -> Result<Output, CliError> {
    let mat = material(o)?;
    let r = mat.radius;
    let lo = checked(
        "h-min",
        o.h_min.unwrap_or(1e-3 * r),
        |v| v > 0.0 && v < 2.0 * r,
        "in (0, 2R)",
    )?;
    let hi = checked(
        "h-max",
        o.h_max.unwrap_or(1.9 * r),
        |v| v > 0.0 && v < 2.0 * r,
        "in (0, 2R)",
    )?;
    if hi < lo {
        return Err(usage(format!(
            "--h-max ({hi}) must not be below --h-min ({lo})"
        )));
    }
    let n = steps("h-steps", o.h_steps, 40)?;
    let log = match o.spacing.as_deref().unwrap_or("log") {
        "log" => true,
        "linear" => false,
        other => {
            return Err(usage(format!(
                "--spacing must be `log` or `linear`, got `{other}`"
            )))
        }
    };
    let k_phi = o.kphi.unwrap_or(0);
    let k_z = kz(o, 1.0)?;
    let load = load(o)?;
    let models = models(o, &default_models())?;
    let template = HarmonicProblem {
        radius: r,
        thickness: lo,
        mu: mat.mu,
        nu: mat.nu,
        k_phi,
        k_z,
        load,
    };
    let h_grid = grid(lo, hi, n, log);
    let mut params = vec![
        ("variant", variant_names(&models)),
        ("R", num(r)),
        ("h-min", num(lo)),
        ("h-max", num(hi)),
        ("h-steps", n.to_string()),
        ("spacing", if log { "log" } else { "linear" }.to_string()),
        ("nu", num(mat.nu)),
        ("mu", num(mat.mu)),
        ("kphi", k_phi.to_string()),
        ("kz", num(k_z)),
    ];
    params.extend(load_params(&load));
    let mut t = table(
        "sweep",
        &[
            ("h", "length"),
            ("model", TEXT),
            ("u_n", "length"),
            ("u_n_h", "length^2"),
            ("status", TEXT),
            ("reason", TEXT),
        ],
        &params,
    );
    let rows = sweep_curve(&models, &h_grid, &template);
    let mut series: Vec<Series> = Vec::new();
    for model in &models {
        let points = rows.iter().filter(|row| row.model == *model).map(|row| {
            let y = match row.value {
                SweepValue::Value { u_n_h, .. } => Some(u_n_h),
                _ => None,
            };
            (row.h, y)
        });
        series.push(Series::from_optional(model.to_string(), points));
    }
    for row in &rows {
        let (u_n, status, reason) = status_cells(&row.value);
        t.push(vec![
            Cell::Num(row.h),
            Cell::from(row.model.to_string()),
            u_n.map_or(Cell::Empty, Cell::Num),
            u_n.map_or(Cell::Empty, |u| Cell::Num(u * row.h)),
            status,
            reason,
        ]);
    }
    let chart = Chart {
        title: format!("Normal displacement times thickness (k_phi = {k_phi}, k_z = {k_z})"),
        x_label: "h".into(),
        y_label: "U_n * h".into(),
        log_x: log,
        markers: false,
        notes: chart_notes(&t),
    };
    let svg = chart.render(&series);
    Ok(Output {
        table: t,
        chart: Some(svg),
    })
}

pub fn run_discont(o: &Options) -> Result<Output, CliError> {
    let nu = checked(
        "nu",
        o.nu.unwrap_or(0.3),
        |v| v > -1.0 && v < 1.0,
        "in (-1, 1)",
    )?;
    let radius = checked("R", o.radius.unwrap_or(1.0), |v| v > 0.0, "positive")?;
    let k_phi = o.kphi.unwrap_or(1);
    let lo = checked("kz-min", o.kz_min.unwrap_or(0.1), |_| true, "finite")?;
    let hi = checked("kz-max", o.kz_max.unwrap_or(3.0), |_| true, "finite")?;
    if hi < lo {
        return Err(usage(format!(
            "--kz-max ({hi}) must not be below --kz-min ({lo})"
        )));
    }
    let n = steps("kz-steps", o.kz_steps, 30)?;
    let shells: Vec<TheoryVariant> = TheoryVariant::ALL
        .into_iter()
        .filter(|&v| v != TheoryVariant::Membrane)
        .collect();
    let variants = shell_variants(o, &shells, "discontinuity scans")?;
    let params = [
        (
            "variant",
            variant_names(
                &variants
                    .iter()
                    .map(|&v| SweepModel::Shell(v))
                    .collect::<Vec<_>>(),
            ),
        ),
        ("R", num(radius)),
        ("nu", num(nu)),
        ("kphi", k_phi.to_string()),
        ("kz-min", num(lo)),
        ("kz-max", num(hi)),
        ("kz-steps", n.to_string()),
    ];
    let mut t = table(
        "discont",
        &[
            ("k_z", "1/length"),
            ("variant", TEXT),
            ("h_d", "length"),
            ("h_d_out_of_range", "length"),
            ("status", TEXT),
            ("reason", TEXT),
        ],
        &params,
    );
    t.meta(
        "discont.range",
        format!(
            "h_d lists roots in (0, 2R); positive roots at or above 2R = {} are listed separately",
            num(2.0 * radius)
        ),
    );
    let mut series = Vec::new();
    for v in variants {
        let mut per_root: Vec<Vec<(f64, Option<f64>)>> = Vec::new();
        for (i, k_z) in grid(lo, hi, n, false).into_iter().enumerate() {
            let mut row = vec![Cell::Num(k_z), Cell::from(v.name())];
            match discontinuity_thickness(v, k_phi, k_z, nu, radius) {
                Ok(d) => {
                    for (j, &hd) in d.in_range.iter().enumerate() {
                        if per_root.len() <= j {
                            per_root.push(vec![(f64::NAN, None); i]);
                        }
                        per_root[j].push((k_z, Some(hd)));
                    }
                    for track in per_root.iter_mut().skip(d.in_range.len()) {
                        track.push((k_z, None));
                    }
                    row.extend([
                        Cell::List(d.in_range),
                        Cell::List(d.out_of_range),
                        Cell::from(OK),
                        Cell::from(""),
                    ]);
                }
                Err(e) => {
                    for track in per_root.iter_mut() {
                        track.push((k_z, None));
                    }
                    row.extend([
                        Cell::Empty,
                        Cell::Empty,
                        Cell::from("failed"),
                        Cell::from(e.to_string()),
                    ]);
                }
            }
            t.push(row);
        }
        for (j, track) in per_root.into_iter().enumerate() {
            let label = if j == 0 {
                v.to_string()
            } else {
                format!("{v} (root {})", j + 1)
            };
            series.push(Series::from_optional(label, track));
        }
    }
    let chart = Chart {
        title: format!("Discontinuity thickness versus axial wavenumber (k_phi = {k_phi})"),
        x_label: "k_z".into(),
        y_label: "h_d".into(),
        log_x: false,
        markers: true,
        notes: chart_notes(&t),
    };
    let svg = chart.render(&series);
    Ok(Output {
        table: t,
        chart: Some(svg),
    })
}

/// Parses `name` or `name(a, b)`.
fn parse_profile(spec: &str, radius: f64) -> Result<MeridianProfile, CliError> {
    let spec = spec.trim();
    let (name, args) = match spec.split_once('(') {
        Some((name, rest)) => {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| usage(format!("--profile `{spec}`: missing `)`")))?;
            let args = inner
                .split(',')
                .map(|a| {
                    a.trim()
                        .parse::<f64>()
                        .map_err(|_| usage(format!("--profile `{spec}`: bad number `{a}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            (name.trim(), args)
        }
        None => (spec, Vec::new()),
    };
    let arg = |i: usize, default: f64| args.get(i).copied().unwrap_or(default);
    let built = match name {
        "cylinder" => MeridianProfile::cylinder(arg(0, radius)),
        "cone" => MeridianProfile::cone(arg(0, 0.6)),
        "sphere" => MeridianProfile::sphere(arg(0, radius)),
        "plane" => MeridianProfile::plane(),
        "torus" => MeridianProfile::torus(arg(0, 3.0 * radius), arg(1, radius)),
        other => {
            return Err(usage(format!(
                "unknown profile `{other}`; expected cylinder, cone, sphere, plane or torus"
            )))
        }
    };
    built.map_err(|e| usage(format!("--profile `{spec}`: {e}")))
}

/// Maxima over the sample grid.
#[derive(Default)]
struct Residuals {
    strain: f64,
    equilibrium: Option<f64>,
    consistency: f64,
    consistency_relative: f64,
}

const SAMPLES: usize = 7;
const ROUNDOFF: f64 = 1e-12;

fn sample_points(profile: &MeridianProfile) -> Vec<(f64, f64)> {
    let (lo, hi) = profile.s_domain;
    let mut out = Vec::with_capacity(SAMPLES * SAMPLES);
    for i in 0..SAMPLES {
        for j in 0..SAMPLES {
            let phi = 2.0 * PI * i as f64 / SAMPLES as f64;
            let s = lo + (hi - lo) * (0.05 + 0.9 * j as f64 / (SAMPLES - 1) as f64);
            out.push((phi, s));
        }
    }
    out
}

fn residuals(
    profile: &MeridianProfile,
    strains: &dyn StrainSource,
    mechanics: Option<(&ElasticModuli, &DisplacementField, &LoadField)>,
) -> Result<Residuals, ShellError> {
    let mut r = Residuals {
        equilibrium: mechanics.map(|_| 0.0),
        ..Residuals::default()
    };
    for (phi, s) in sample_points(profile) {
        let e = strains.strain_jets(profile, phi, s, 0)?.values();
        r.strain = e.as_array().iter().fold(r.strain, |m, v| m.max(v.abs()));
        let c = consistency_residual(profile, strains, phi, s)?;
        r.consistency = c.residual.iter().fold(r.consistency, |m, v| m.max(v.abs()));
        r.consistency_relative = r.consistency_relative.max(c.relative());
        if let Some((m, u, loads)) = mechanics {
            let eq = equilibrium_residual(profile, m, u, loads, phi, s)?;
            r.equilibrium = r
                .equilibrium
                .map(|acc| eq.iter().fold(acc, |m, v| m.max(v.abs())));
        }
    }
    Ok(r)
}

pub fn run_residuals(o: &Options) -> Result<Output, CliError> {
    let mat = material(o)?;
    let preset = o.preset.as_deref().unwrap_or("rigid");
    let profile_spec = o.profile.as_deref().unwrap_or("cylinder");
    let profile = parse_profile(profile_spec, mat.radius)?;
    let h = thickness(o, mat.radius)?;
    let p = checked("p", o.p.unwrap_or(1.0), |_| true, "finite")?;
    let moduli = ElasticModuli::new(mat.mu, mat.nu, h).map_err(|e| usage(e.to_string()))?;
    let mut params = vec![
        ("preset", preset.to_string()),
        ("profile", profile_spec.to_string()),
        ("R", num(mat.radius)),
        ("h", num(h)),
        ("nu", num(mat.nu)),
        ("mu", num(mat.mu)),
        ("p", num(p)),
    ];
    let columns = [
        ("preset", TEXT),
        ("profile", TEXT),
        ("variant", TEXT),
        ("max_strain", "1"),
        ("equilibrium", "force/length^2"),
        ("equilibrium_over_p", "1"),
        ("consistency", "1/length^2"),
        ("consistency_relative", "1"),
        ("status", TEXT),
        ("reason", TEXT),
    ];
    let samples = format!("{SAMPLES} x {SAMPLES} grid: phi uniform on [0, 2pi), s over the central 90% of the meridian domain");
    let row = |variant: &str,
               res: Result<Residuals, ShellError>,
               scale: Option<f64>|
     -> Vec<Cell> {
        let mut row = vec![
            Cell::from(preset),
            Cell::from(profile_spec),
            Cell::from(variant),
        ];
        match res {
            Ok(r) => row.extend([
                Cell::Num(r.strain),
                r.equilibrium.map_or(Cell::Empty, Cell::Num),
                match (r.equilibrium, scale) {
                    (Some(eq), Some(p)) if p != 0.0 => Cell::Num(eq / p.abs()),
                    _ => Cell::Empty,
                },
                Cell::Num(r.consistency),
                // Relative to the individual terms, which are themselves roundoff for strain-free fields.
                if r.strain > ROUNDOFF {
                    Cell::Num(r.consistency_relative)
                } else {
                    Cell::Empty
                },
                Cell::from(OK),
                Cell::from(if r.strain > ROUNDOFF {
                    ""
                } else {
                    "strains are at roundoff level; relative compatibility residual is undefined"
                }),
            ]),
            Err(e) => {
                row.extend(std::iter::repeat_n(Cell::Empty, 5));
                row.extend([Cell::from("failed"), Cell::from(e.to_string())]);
            }
        }
        row
    };
    let mut rows = Vec::new();
    match preset {
        "rigid" => {
            let u = DisplacementField::rigid(profile.shape, [0.3, -0.2, 0.1], [0.5, 0.4, -0.7]);
            let loads = LoadField::zero();
            rows.push(row(
                TEXT,
                residuals(&profile, &u, Some((&moduli, &u, &loads))),
                None,
            ));
        }
        "incompatible" => {
            let e = StrainFields {
                eps_phi: Field::s_power(1.0, 2),
                ..StrainFields::zero()
            };
            rows.push(row(TEXT, residuals(&profile, &e, None), None));
        }
        "inflation" | "harmonic" => {
            if !profile_spec.starts_with("cylinder") {
                return Err(usage(format!(
                    "preset `{preset}` requires the cylinder profile"
                )));
            }
            let (k_phi, k_z, phase) = if preset == "inflation" {
                (0, 0.0, PI / 2.0)
            } else {
                (o.kphi.unwrap_or(0), kz(o, 1.0)?, 0.0)
            };
            params.extend([("kphi", k_phi.to_string()), ("kz", num(k_z))]);
            let problem = HarmonicProblem::pressure(mat.radius, h, mat.mu, mat.nu, k_phi, k_z, p);
            let profile = problem.profile().map_err(|e| usage(e.to_string()))?;
            let variants = shell_variants(o, &[TheoryVariant::Eliseev], "residual checks")?;
            params.insert(
                0,
                (
                    "variant",
                    variant_names(
                        &variants
                            .iter()
                            .map(|&v| SweepModel::Shell(v))
                            .collect::<Vec<_>>(),
                    ),
                ),
            );
            for v in variants {
                let res = solve_harmonic(v, &problem).and_then(|sol| {
                    let u = sol.displacement_field(&problem, phase);
                    let loads = problem.load_field(phase);
                    residuals(&profile, &u, Some((&moduli, &u, &loads)))
                });
                rows.push(row(v.name(), res, Some(p)));
            }
        }
        other => {
            return Err(usage(format!(
                "unknown preset `{other}`; expected rigid, inflation, harmonic or incompatible"
            )))
        }
    }
    let mut t = table("residuals", &columns, &params);
    t.meta("residuals.samples", samples);
    for r in rows {
        t.push(r);
    }
    Ok(Output {
        table: t,
        chart: None,
    })
}
