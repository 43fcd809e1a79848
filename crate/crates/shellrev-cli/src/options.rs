//! Flags and `key=value` configuration files share one set of keys.

use std::path::Path;

use clap::Args;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

fn parse_value<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("invalid value `{value}` for `{key}`")))
}

macro_rules! options {
    ($( $(#[$doc:meta])* $field:ident : $ty:ty = $key:literal ),* $(,)?) => {
        /// Run parameters. Every flag `--key` can also be given as `key=value` in a config file.
        #[derive(Debug, Clone, Default, PartialEq, Args, Serialize, Deserialize)]
        pub struct Options {
            /// Flat `key=value` file supplying defaults for any flag.
            #[arg(long)]
            #[serde(skip)]
            pub config: Option<std::path::PathBuf>,
            $(
                $(#[$doc])*
                #[arg(long = $key)]
                #[serde(rename = $key, default, skip_serializing_if = "Option::is_none")]
                pub $field: Option<$ty>,
            )*
        }

        impl Options {
            pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
                match key {
                    $( $key => self.$field = Some(parse_value(key, value)?), )*
                    _ => return Err(CliError::Usage(format!("unknown configuration key `{key}`"))),
                }
                Ok(())
            }

            /// Values present in `over` win.
            pub fn overlay(self, over: Options) -> Options {
                Options {
                    config: over.config.or(self.config),
                    $( $field: over.$field.or(self.$field), )*
                }
            }

            /// Present values as `(key, value)` pairs in declaration order.
            pub fn to_pairs(&self) -> Vec<(&'static str, String)> {
                let mut out = Vec::new();
                $( if let Some(v) = &self.$field { out.push(($key, v.to_string())); } )*
                out
            }
        }
    };
}

options! {
    /// Comma-separated theories or models (`eliseev`, `vlasov`, `goldenveiser-biderman`,
    /// `novichkov`, `fluegge`, `membrane`, `tube3d:<inner|outer|both>`, `all`).
    variant: String = "variant",
    /// Circumferential harmonic of the characteristic equation.
    m: i64 = "m",
    nu: f64 = "nu",
    /// Shear modulus.
    mu: f64 = "mu",
    /// Mid-surface radius.
    radius: f64 = "R",
    /// Thickness.
    h: f64 = "h",
    h_min: f64 = "h-min",
    h_max: f64 = "h-max",
    h_steps: usize = "h-steps",
    /// `log` (default) or `linear` thickness grid.
    spacing: String = "spacing",
    /// Relative thickness parameter `h²/(12R²)`; derived from `h` and `R` if absent.
    gamma: f64 = "gamma",
    kphi: i64 = "kphi",
    kz: f64 = "kz",
    kz_min: f64 = "kz-min",
    kz_max: f64 = "kz-max",
    kz_steps: usize = "kz-steps",
    /// Pressure amplitude.
    p: f64 = "p",
    /// Dimensionless load intensity along the circumference; replaces `p` when any intensity is given.
    b_phi: f64 = "b-phi",
    b_z: f64 = "b-z",
    b_n: f64 = "b-n",
    /// Residual check preset: `rigid`, `inflation`, `harmonic` or `incompatible`.
    preset: String = "preset",
    /// Surface for residual checks: `cylinder`, `cone`, `sphere` or `torus`.
    profile: String = "profile",
    /// `csv` (default) or `json`.
    format: String = "format",
    /// Output file; standard output if absent.
    out: String = "out",
    /// Optional SVG chart path.
    svg: String = "svg",
}

/// Parses a flat `key=value` file. `#` starts a comment; blank lines are ignored.
pub fn parse_config(text: &str) -> Result<Options, CliError> {
    let mut opts = Options::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::Usage(format!("config line {}: expected key=value", lineno + 1))
        })?;
        opts.set(key.trim(), value)?;
    }
    Ok(opts)
}

#[cfg(test)]
pub fn to_config(opts: &Options) -> String {
    opts.to_pairs()
        .into_iter()
        .map(|(k, v)| format!("{k}={v}\n"))
        .collect()
}

/// Flags override values from the file named by `--config`.
pub fn resolve(flags: Options) -> Result<Options, CliError> {
    match &flags.config {
        Some(path) => {
            let text = read(path)?;
            Ok(parse_config(&text)?.overlay(flags))
        }
        None => Ok(flags),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_round_trip() {
        let opts = Options {
            variant: Some("eliseev,tube3d:both".into()),
            nu: Some(0.3),
            radius: Some(1.0),
            h: Some(1e-7),
            kphi: Some(-2),
            h_steps: Some(40),
            ..Options::default()
        };
        let text = to_config(&opts);
        assert_eq!(parse_config(&text).unwrap(), opts);
        let json = serde_json::to_string(&opts).unwrap();
        assert_eq!(serde_json::from_str::<Options>(&json).unwrap(), opts);
    }

    #[test]
    fn comments_and_errors() {
        let o = parse_config("# geometry\nR = 2.5  # mid-surface\n\nh=0.1\n").unwrap();
        assert_eq!((o.radius, o.h), (Some(2.5), Some(0.1)));
        assert!(matches!(parse_config("R"), Err(CliError::Usage(_))));
        assert!(matches!(parse_config("radius=1"), Err(CliError::Usage(_))));
        assert!(matches!(parse_config("h=thin"), Err(CliError::Usage(_))));
    }

    #[test]
    fn flags_override_file() {
        let file = parse_config("h=0.1\nnu=0.25").unwrap();
        let flags = Options {
            h: Some(0.5),
            ..Options::default()
        };
        let merged = file.overlay(flags);
        assert_eq!((merged.h, merged.nu), (Some(0.5), Some(0.25)));
    }
}
