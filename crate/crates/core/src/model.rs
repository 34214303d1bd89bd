//! Domain value types shared by every model: the index transition, the
//! bubble geometry with its momentum cutoff, sampled spectra and totals.

use std::f64::consts::PI;

use crate::error::{require_positive, Error, Result};
use crate::units::{HBAR, SPEED_OF_LIGHT};

/// Refractive indices before and after the change, and its timescale.
///
/// The pseudo-time scale is never stored; it is recomputed from `t0` so the
/// two timescales cannot drift apart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MediumTransition {
    n_in: f64,
    n_out: f64,
    t0: f64,
}

impl MediumTransition {
    /// `t0` is the physical timescale of the change, in seconds.
    pub fn new(n_in: f64, n_out: f64, t0: f64) -> Result<Self> {
        Ok(Self {
            n_in: require_positive("n_in", n_in)?,
            n_out: require_positive("n_out", n_out)?,
            t0: require_positive("t0", t0)?,
        })
    }

    /// Builds the transition from the pseudo-time scale of the tanh profile.
    pub fn from_pseudo_time(n_in: f64, n_out: f64, tau0: f64) -> Result<Self> {
        let tau0 = require_positive("tau0", tau0)?;
        let n_in = require_positive("n_in", n_in)?;
        let n_out = require_positive("n_out", n_out)?;
        Self::new(n_in, n_out, 0.5 * tau0 * (n_in * n_in + n_out * n_out))
    }

    pub fn n_in(&self) -> f64 {
        self.n_in
    }

    pub fn n_out(&self) -> f64 {
        self.n_out
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    /// ⟨n²⟩ = (n_in² + n_out²)/2.
    pub fn n_sq_mean(&self) -> f64 {
        0.5 * (self.n_in * self.n_in + self.n_out * self.n_out)
    }

    /// Pseudo-time scale τ0, from t0 = ½ τ0 (n_in² + n_out²).
    pub fn tau0(&self) -> f64 {
        self.t0 / self.n_sq_mean()
    }

    pub fn delta_n(&self) -> f64 {
        self.n_in - self.n_out
    }

    /// Same indices with the roles of "before" and "after" exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            n_in: self.n_out,
            n_out: self.n_in,
            t0: self.t0,
        }
    }
}

/// Bubble radius, ambient liquid, and the sharp momentum cutoff.
///
/// The cutoff is specified as an observed wavelength in the liquid; the
/// gas-side wavevector entering Θ(K − k) is `K = K_obs · n_out / n_liquid`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BubbleGeometry {
    radius: f64,
    n_liquid: f64,
    lambda_obs: f64,
    n_out: f64,
}

impl BubbleGeometry {
    /// All lengths in metres.
    pub fn new(radius: f64, n_liquid: f64, lambda_obs: f64, n_out: f64) -> Result<Self> {
        let radius = require_positive("radius", radius)?;
        let n_liquid = require_positive("n_liquid", n_liquid)?;
        if n_liquid < 1.0 {
            return Err(Error::invalid(
                "n_liquid",
                format!("must be >= 1, got {n_liquid}"),
            ));
        }
        Ok(Self {
            radius,
            n_liquid,
            lambda_obs: require_positive("lambda_obs", lambda_obs)?,
            n_out: require_positive("n_out", n_out)?,
        })
    }

    /// Geometry whose observed cutoff satisfies `K_obs · radius == k_obs_r`.
    pub fn from_cutoff_product(
        radius: f64,
        n_liquid: f64,
        k_obs_r: f64,
        n_out: f64,
    ) -> Result<Self> {
        let radius = require_positive("radius", radius)?;
        let k_obs_r = require_positive("k_obs_r", k_obs_r)?;
        Self::new(radius, n_liquid, 2.0 * PI * radius / k_obs_r, n_out)
    }

    /// Same bubble and cutoff, re-expressed for a different final gas index.
    pub fn with_n_out(&self, n_out: f64) -> Result<Self> {
        Self::new(self.radius, self.n_liquid, self.lambda_obs, n_out)
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn n_liquid(&self) -> f64 {
        self.n_liquid
    }

    pub fn lambda_obs(&self) -> f64 {
        self.lambda_obs
    }

    pub fn n_out(&self) -> f64 {
        self.n_out
    }

    /// K_obs = 2π/λ_obs.
    pub fn k_observed(&self) -> f64 {
        2.0 * PI / self.lambda_obs
    }

    /// K_obs · R, the diagnostic the cutoff is usually quoted by.
    pub fn k_observed_r(&self) -> f64 {
        self.k_observed() * self.radius
    }

    /// Cutoff angular frequency c·K_obs/n_liquid.
    pub fn omega_max(&self) -> f64 {
        SPEED_OF_LIGHT * self.k_observed() / self.n_liquid
    }

    /// Gas-side cutoff wavevector K = K_obs · n_out / n_liquid.
    pub fn k_gas_cutoff(&self) -> f64 {
        self.k_observed() * self.n_out / self.n_liquid
    }

    pub fn k_gas_cutoff_r(&self) -> f64 {
        self.k_gas_cutoff() * self.radius
    }

    /// V = 4πR³/3.
    pub fn volume(&self) -> f64 {
        4.0 / 3.0 * PI * self.radius.powi(3)
    }
}

/// Total photon number, emitted energy and mean photon energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmissionSummary {
    pub photon_count: f64,
    /// Joules.
    pub total_energy: f64,
    /// Joules; zero when no photons are emitted.
    pub mean_energy: f64,
    /// ⟨E⟩ / ħω_max.
    pub mean_over_cutoff: f64,
}

impl EmissionSummary {
    pub fn new(photon_count: f64, total_energy: f64, omega_max: f64) -> Result<Self> {
        if !(photon_count.is_finite() && total_energy.is_finite()) {
            return Err(Error::Numerical(format!(
                "non-finite totals: N = {photon_count}, E = {total_energy}"
            )));
        }
        if photon_count < 0.0 || total_energy < 0.0 {
            return Err(Error::Numerical(format!(
                "negative totals: N = {photon_count}, E = {total_energy}"
            )));
        }
        let mean_energy = if photon_count > 0.0 {
            total_energy / photon_count
        } else {
            0.0
        };
        Ok(Self {
            photon_count,
            total_energy,
            mean_energy,
            mean_over_cutoff: mean_energy / (HBAR * omega_max),
        })
    }
}

/// Sampled dN/dω_out on a strictly increasing angular-frequency grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDensity {
    grid: Vec<f64>,
    values: Vec<f64>,
    dimensionless_x: Option<Vec<f64>>,
}

impl SpectralDensity {
    pub fn new(grid: Vec<f64>, values: Vec<f64>, dimensionless_x: Option<Vec<f64>>) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::invalid(
                "values",
                format!("length {} differs from grid length {}", values.len(), grid.len()),
            ));
        }
        if let Some(x) = &dimensionless_x {
            if x.len() != grid.len() {
                return Err(Error::invalid("dimensionless_x", "length differs from grid"));
            }
        }
        if grid.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::invalid("grid", "must be strictly increasing"));
        }
        if let Some(v) = values.iter().find(|v| !(v.is_finite() && **v >= 0.0)) {
            return Err(Error::Numerical(format!("spectral value {v} is not a finite non-negative number")));
        }
        Ok(Self {
            grid,
            values,
            dimensionless_x,
        })
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn dimensionless_x(&self) -> Option<&[f64]> {
        self.dimensionless_x.as_deref()
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    /// Trapezoidal ∫ dN/dω dω over the sampled grid.
    pub fn trapezoid(&self) -> f64 {
        crate::quad::trapezoid(&self.grid, &self.values)
    }
}
