//! The run parameters shared by every subcommand, as flags or as a TOML file.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, ValueEnum};
use serde::Deserialize;

use crate::bubble::{FiniteSpectrumConfig, LMax, Normalization};
use crate::error::{require_positive, Error, Result};
use crate::model::{BubbleGeometry, MediumTransition};
use crate::units::{fs_to_s, nm_to_m};

pub const DEFAULT_N_LIQUID: f64 = 1.3;
pub const DEFAULT_RADIUS_NM: f64 = 500.0;
pub const DEFAULT_KOBS_R: f64 = 15.0;
pub const DEFAULT_T0_FS: f64 = 1.0;
pub const DEFAULT_TARGET: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Model {
    Infinite,
    Finite,
    Both,
}

impl Model {
    pub fn infinite(self) -> bool {
        matches!(self, Model::Infinite | Model::Both)
    }

    pub fn finite(self) -> bool {
        matches!(self, Model::Finite | Model::Both)
    }

    fn name(self) -> &'static str {
        match self {
            Model::Infinite => "infinite",
            Model::Finite => "finite",
            Model::Both => "both",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormalizationArg {
    CavityAveraged,
    Matched,
}

/// `auto` or a positive integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LMaxArg(pub LMax);

impl FromStr for LMaxArg {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(LMaxArg(LMax::Auto));
        }
        match s.parse::<usize>() {
            Ok(l) if l >= 1 => Ok(LMaxArg(LMax::Fixed(l))),
            _ => Err(format!("expected `auto` or an integer >= 1, got `{s}`")),
        }
    }
}

impl<'de> Deserialize<'de> for LMaxArg {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        let text = match Raw::deserialize(d)? {
            Raw::Int(i) => i.to_string(),
            Raw::Text(s) => s,
        };
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Every parameter any subcommand understands. Unset values fall back to
/// the config file, then to the defaults.
#[derive(Debug, Clone, Default, Args, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Params {
    /// TOML file with the same keys as the flags (snake_case)
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
    /// Gas index before the change
    #[arg(long, visible_alias = "n-in", allow_negative_numbers = true)]
    #[serde(alias = "n_in")]
    pub n_gas_in: Option<f64>,
    /// Gas index after the change
    #[arg(long, visible_alias = "n-out", allow_negative_numbers = true)]
    #[serde(alias = "n_out")]
    pub n_gas_out: Option<f64>,
    /// Index of the surrounding liquid [default: 1.3]
    #[arg(long, allow_negative_numbers = true)]
    pub n_liquid: Option<f64>,
    /// Bubble radius in nm [default: 500]
    #[arg(long, allow_negative_numbers = true)]
    pub radius_nm: Option<f64>,
    /// Observed cutoff wavelength in the liquid, nm (conflicts with --kobs-r)
    #[arg(long, allow_negative_numbers = true)]
    pub cutoff_nm: Option<f64>,
    /// Observed cutoff wavevector times radius [default: 15]
    #[arg(long, allow_negative_numbers = true)]
    pub kobs_r: Option<f64>,
    /// Timescale of the index change in fs [default: 1]
    #[arg(long, allow_negative_numbers = true)]
    pub t0_fs: Option<f64>,
    #[arg(long, value_enum)]
    pub model: Option<Model>,
    /// Angular-momentum cutoff: `auto` or an integer
    #[arg(long)]
    pub lmax: Option<LMaxArg>,
    /// Relative tolerance of the ω_in quadrature [default: 1e-6]
    #[arg(long, allow_negative_numbers = true)]
    pub tol: Option<f64>,
    /// Relative size of the last kept l term [default: 1e-4]
    #[arg(long, allow_negative_numbers = true)]
    pub l_tail_tol: Option<f64>,
    /// Points on the ω_out grid up to the cutoff [default: 200]
    #[arg(long)]
    pub grid_points: Option<usize>,
    #[arg(long, value_enum)]
    pub normalization: Option<NormalizationArg>,
    /// Range past the cutoff for a gas side of index 1, in cutoff units [default: 4]
    #[arg(long, allow_negative_numbers = true)]
    pub vacuum_extension: Option<f64>,
    /// Target photon count [default: 1e6]
    #[arg(long, allow_negative_numbers = true)]
    pub target: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub n_out_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub n_out_max: Option<f64>,
    /// Points on the n_out grid [default: 200]
    #[arg(long)]
    pub points: Option<usize>,
    /// CSV destination; stdout when absent
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

macro_rules! merge_fields {
    ($dst:ident, $src:ident; $($f:ident),*) => {
        $( if $dst.$f.is_none() { $dst.$f = $src.$f; } )*
    };
}

impl Params {
    /// Fills unset flags from the `--config` file, if one was given.
    pub fn merged(mut self) -> Result<Self> {
        let Some(path) = self.config.clone() else {
            return Ok(self);
        };
        let text = std::fs::read_to_string(&path).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
        let file: Params = toml::from_str(&text)
            .map_err(|e| Error::invalid("config", format!("{}: {}", path.display(), e.message())))?;
        merge_fields!(self, file; n_gas_in, n_gas_out, n_liquid, radius_nm, cutoff_nm, kobs_r,
            t0_fs, model, lmax, tol, l_tail_tol, grid_points, normalization, vacuum_extension,
            target, n_out_min, n_out_max, points, output);
        Ok(self)
    }

    pub fn n_in(&self) -> Result<f64> {
        let v = self.n_gas_in.ok_or_else(|| Error::invalid("n_gas_in", "required (> 0)"))?;
        require_positive("n_gas_in", v)
    }

    pub fn n_out(&self) -> Result<f64> {
        let v = self.n_gas_out.ok_or_else(|| Error::invalid("n_gas_out", "required (> 0)"))?;
        require_positive("n_gas_out", v)
    }

    pub fn n_liquid(&self) -> f64 {
        self.n_liquid.unwrap_or(DEFAULT_N_LIQUID)
    }

    pub fn radius_nm(&self) -> f64 {
        self.radius_nm.unwrap_or(DEFAULT_RADIUS_NM)
    }

    pub fn model(&self, default: Model) -> Model {
        self.model.unwrap_or(default)
    }

    pub fn target(&self) -> f64 {
        self.target.unwrap_or(DEFAULT_TARGET)
    }

    pub fn transition(&self) -> Result<MediumTransition> {
        let t0 = require_positive("t0_fs", self.t0_fs.unwrap_or(DEFAULT_T0_FS))?;
        MediumTransition::new(self.n_in()?, self.n_out()?, fs_to_s(t0))
    }

    /// The cutoff product K_obs·R used by the closed-form count.
    pub fn kobs_r(&self) -> Result<f64> {
        match (self.cutoff_nm, self.kobs_r) {
            (Some(_), Some(_)) => Err(Error::invalid("cutoff_nm", "give either cutoff_nm or kobs_r, not both")),
            (Some(l), None) => {
                if !(l.is_finite() && l > 0.0) {
                    return Err(Error::invalid("cutoff_nm", format!("{l} must be finite and > 0")));
                }
                Ok(2.0 * std::f64::consts::PI * self.radius_nm() / l)
            }
            (None, k) => Ok(k.unwrap_or(DEFAULT_KOBS_R)),
        }
    }

    pub fn geometry(&self, n_out: f64) -> Result<BubbleGeometry> {
        let radius = nm_to_m(require_positive("radius_nm", self.radius_nm())?);
        match self.cutoff_nm {
            Some(l) if self.kobs_r.is_none() => BubbleGeometry::new(radius, self.n_liquid(), nm_to_m(l), n_out),
            _ => BubbleGeometry::from_cutoff_product(radius, self.n_liquid(), self.kobs_r()?, n_out),
        }
    }

    pub fn finite_config(&self) -> Result<FiniteSpectrumConfig> {
        let d = FiniteSpectrumConfig::default();
        let c = FiniteSpectrumConfig {
            l_max: self.lmax.map_or(d.l_max, |l| l.0),
            quad_rel_tol: self.tol.unwrap_or(d.quad_rel_tol),
            l_tail_tol: self.l_tail_tol.unwrap_or(d.l_tail_tol),
            grid_points: self.grid_points.unwrap_or(d.grid_points),
            normalization: match self.normalization {
                Some(NormalizationArg::Matched) => Normalization::Matched,
                Some(NormalizationArg::CavityAveraged) => Normalization::CavityAveraged,
                None => d.normalization,
            },
            vacuum_extension: self.vacuum_extension.unwrap_or(d.vacuum_extension),
        };
        c.validate()?;
        Ok(c)
    }

    pub fn output(&self) -> Option<&Path> {
        self.output.as_deref()
    }

    /// The effective parameters as `key = value` lines, unset ones omitted.
    pub fn describe(&self) -> Vec<String> {
        let mut lines = Vec::new();
        let mut push = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                lines.push(format!("{k} = {v}"));
            }
        };
        let f = |v: Option<f64>| v.map(|x| format!("{x:e}"));
        push("n_gas_in", f(self.n_gas_in));
        push("n_gas_out", f(self.n_gas_out));
        push("n_liquid", f(Some(self.n_liquid())));
        push("radius_nm", f(Some(self.radius_nm())));
        push("cutoff_nm", f(self.cutoff_nm));
        push("kobs_r", self.kobs_r().ok().map(|k| format!("{k:e}")));
        push("t0_fs", f(Some(self.t0_fs.unwrap_or(DEFAULT_T0_FS))));
        push("model", self.model.map(|m| m.name().to_string()));
        push("target", f(self.target));
        push("n_out_min", f(self.n_out_min));
        push("n_out_max", f(self.n_out_max));
        push("points", self.points.map(|p| p.to_string()));
        if let Some(p) = &self.config {
            push("config", Some(p.display().to_string()));
        }
        lines
    }

    /// Finite-volume settings as `key = value` lines.
    pub fn describe_finite(config: &FiniteSpectrumConfig) -> Vec<String> {
        let mut s = String::new();
        let l = match config.l_max {
            LMax::Auto => "auto".to_string(),
            LMax::Fixed(l) => l.to_string(),
        };
        let norm = match config.normalization {
            Normalization::CavityAveraged => "cavity-averaged",
            Normalization::Matched => "matched",
        };
        let _ = write!(
            s,
            "lmax = {l}\ntol = {:e}\nl_tail_tol = {:e}\ngrid_points = {}\nnormalization = {norm}\nvacuum_extension = {:e}",
            config.quad_rel_tol, config.l_tail_tol, config.grid_points, config.vacuum_extension
        );
        s.lines().map(str::to_string).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lmax_parsing() {
        assert_eq!("auto".parse::<LMaxArg>().unwrap().0, LMax::Auto);
        assert_eq!("40".parse::<LMaxArg>().unwrap().0, LMax::Fixed(40));
        assert!("0".parse::<LMaxArg>().is_err());
        let p: Params = toml::from_str("lmax = 12\nn_in = 3.0").unwrap();
        assert_eq!(p.lmax.unwrap().0, LMax::Fixed(12));
        assert_eq!(p.n_gas_in, Some(3.0));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(toml::from_str::<Params>("n_gass_in = 3.0").is_err());
    }

    #[test]
    fn cutoff_conflict() {
        let p = Params {
            cutoff_nm: Some(200.0),
            kobs_r: Some(15.0),
            ..Default::default()
        };
        assert!(p.kobs_r().is_err());
        let p = Params {
            cutoff_nm: Some(200.0),
            ..Default::default()
        };
        assert!((p.kobs_r().unwrap() - 5.0 * std::f64::consts::PI).abs() < 1e-12);
    }
}
