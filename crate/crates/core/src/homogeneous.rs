//! Infinite-volume analytics: the tanh-profile Bogolubov density, its sudden
//! limit, the cutoff spectrum and the closed-form totals.
//!
//! Momentum conservation pins the frequencies on shell, so every density
//! here is a function of ω_out alone with ω_in = (n_out/n_in)·ω_out.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::model::{BubbleGeometry, EmissionSummary, MediumTransition, SpectralDensity};
use crate::specfun::log_sinh;
use crate::units::{HBAR, SPEED_OF_LIGHT};

/// Photon polarizations. Applied once, at spectrum level.
pub const POLARIZATIONS: f64 = 2.0;

/// Log-space exponents below this are reported as underflow.
pub const UNDERFLOW_EXPONENT: f64 = -700.0;

/// ε(τ) = ⟨n²⟩ + ½(n_out² − n_in²)·tanh(τ/τ0).
///
/// Evaluated as n_in²·σ(−2s) + n_out²·σ(2s) with s = τ/τ0 and the logistic
/// σ, which avoids cancellation when one index dominates.
pub fn epsilon_profile(transition: &MediumTransition, tau: f64) -> f64 {
    let s = 2.0 * tau / transition.tau0();
    let after = 1.0 / (1.0 + (-s).exp());
    let before = 1.0 / (1.0 + s.exp());
    transition.n_in().powi(2) * before + transition.n_out().powi(2) * after
}

/// |β|² per mode and polarization, with its logarithm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaDensity {
    pub value: f64,
    /// ln|β|²; −∞ when the indices are equal.
    pub ln_value: f64,
    /// Set when `ln_value` is finite but too small to exponentiate.
    pub underflow: bool,
}

impl BetaDensity {
    /// |α|², defined through the bosonic normalization |α|² − |β|² = 1.
    pub fn alpha_sq(&self) -> f64 {
        1.0 + self.value
    }
}

/// The three sinh arguments of the on-shell density: (numerator, in, out).
fn sinh_arguments(transition: &MediumTransition, omega_out: f64) -> (f64, f64, f64) {
    let (n_in, n_out) = (transition.n_in(), transition.n_out());
    let scale = PI * n_out * omega_out * transition.t0() / transition.n_sq_mean();
    let v_in = scale * n_in;
    let v_out = scale * n_out;
    // |v_in − v_out|/2 without the cancellation
    (0.5 * scale * (n_in - n_out).abs(), v_in, v_out)
}

/// ln|β|² at `omega_out`; finite for any positive frequency unless n_in = n_out.
pub fn ln_beta_sq_density(transition: &MediumTransition, omega_out: f64) -> Result<f64> {
    if !(omega_out.is_finite() && omega_out > 0.0) {
        return Err(Error::domain(
            "beta_sq_density",
            format!("omega_out = {omega_out} must be finite and > 0"),
        ));
    }
    let (u, v_in, v_out) = sinh_arguments(transition, omega_out);
    if u == 0.0 {
        return Ok(f64::NEG_INFINITY);
    }
    Ok(2.0 * log_sinh(u)? - log_sinh(v_in)? - log_sinh(v_out)?)
}

/// The tanh-profile density sinh²(u)/(sinh v_in · sinh v_out), in log space.
pub fn beta_sq_density(transition: &MediumTransition, omega_out: f64) -> Result<BetaDensity> {
    let ln_value = ln_beta_sq_density(transition, omega_out)?;
    let underflow = ln_value.is_finite() && ln_value < UNDERFLOW_EXPONENT;
    let value = if ln_value < UNDERFLOW_EXPONENT { 0.0 } else { ln_value.exp() };
    Ok(BetaDensity {
        value,
        ln_value,
        underflow,
    })
}

/// Sudden limit ¼(n_in − n_out)²/(n_in·n_out), flat in frequency.
pub fn sudden_beta_sq(transition: &MediumTransition) -> f64 {
    0.25 * transition.delta_n().powi(2) / (transition.n_in() * transition.n_out())
}

/// Frequency below which the sudden approximation holds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuddenApproxScale {
    /// rad/s.
    pub omega_sudden: f64,
}

/// Ω = (1/2πt0)·(n_in² + n_out²)/(n_out·max(n_in, n_out)).
pub fn omega_sudden(transition: &MediumTransition) -> SuddenApproxScale {
    let (n_in, n_out) = (transition.n_in(), transition.n_out());
    SuddenApproxScale {
        omega_sudden: (n_in * n_in + n_out * n_out)
            / (2.0 * PI * transition.t0() * n_out * n_in.max(n_out)),
    }
}

/// Asymptotic d(ln|β|²)/dω_out far above the sudden scale.
///
/// The sinh ratio tends to exp(2u − v_in − v_out) = exp(−2·min(v_in, v_out)).
pub fn tail_log_slope(transition: &MediumTransition) -> f64 {
    let (n_in, n_out) = (transition.n_in(), transition.n_out());
    -2.0 * PI * n_out * transition.t0() * n_in.min(n_out) / transition.n_sq_mean()
}

fn check_consistent(transition: &MediumTransition, geometry: &BubbleGeometry) -> Result<()> {
    let (a, b) = (transition.n_out(), geometry.n_out());
    if (a - b).abs() > 1e-12 * a.max(b) {
        return Err(Error::invalid(
            "n_out",
            format!("geometry built for n_out = {b} but the transition has n_out = {a}"),
        ));
    }
    Ok(())
}

/// Sudden-limit dN/dω_out, in seconds, with the sharp gas-side cutoff.
///
/// 2·|β|²·V/(2π)³·4πk²·dk/dω for k = n_out·ω/c ≤ K, zero above.
pub fn spectrum_infinite(
    transition: &MediumTransition,
    geometry: &BubbleGeometry,
    omega_out: f64,
) -> Result<f64> {
    check_consistent(transition, geometry)?;
    if !(omega_out.is_finite() && omega_out >= 0.0) {
        return Err(Error::domain(
            "spectrum_infinite",
            format!("omega_out = {omega_out} must be finite and >= 0"),
        ));
    }
    if omega_out > geometry.omega_max() {
        return Ok(0.0);
    }
    let n_out = transition.n_out();
    let k = n_out * omega_out / SPEED_OF_LIGHT;
    let modes = geometry.volume() / (2.0 * PI).powi(3) * 4.0 * PI * k * k * n_out / SPEED_OF_LIGHT;
    Ok(POLARIZATIONS * sudden_beta_sq(transition) * modes)
}

/// Samples [`spectrum_infinite`] at ω_j = j·ω_max/n for j = 1..=n.
pub fn spectrum_infinite_grid(
    transition: &MediumTransition,
    geometry: &BubbleGeometry,
    points: usize,
) -> Result<SpectralDensity> {
    if points < 2 {
        return Err(Error::invalid("grid_points", format!("{points} must be >= 2")));
    }
    let step = geometry.omega_max() / points as f64;
    let grid: Vec<f64> = (1..=points).map(|j| j as f64 * step).collect();
    let values = grid
        .iter()
        .map(|&w| spectrum_infinite(transition, geometry, w))
        .collect::<Result<Vec<_>>>()?;
    let x = grid
        .iter()
        .map(|&w| transition.n_out() * w * geometry.radius() / SPEED_OF_LIGHT)
        .collect();
    SpectralDensity::new(grid, values, Some(x))
}

/// N = (1/9π)·(Δn)²/(n_out·n_in)·(R·K)³.
pub fn total_photons_closed_form(
    transition: &MediumTransition,
    geometry: &BubbleGeometry,
) -> Result<f64> {
    check_consistent(transition, geometry)?;
    Ok(transition.delta_n().powi(2) / (transition.n_out() * transition.n_in())
        * geometry.k_gas_cutoff_r().powi(3)
        / (9.0 * PI))
}

/// N from (K_obs·R)³/(9π·n_liquid³)·(Δn)²·n_out²/n_in, the liquid-side form.
pub fn total_photons_liquid_form(
    transition: &MediumTransition,
    geometry: &BubbleGeometry,
) -> Result<f64> {
    check_consistent(transition, geometry)?;
    let c0 = geometry.k_observed_r().powi(3) / (9.0 * PI);
    Ok(c0 / geometry.n_liquid().powi(3) * transition.delta_n().powi(2) * transition.n_out().powi(2)
        / transition.n_in())
}

/// N and E = (1/16π²)·(Δn)²/(n_in·n_out²)·ħcK·VK³.
pub fn totals_closed_form(
    transition: &MediumTransition,
    geometry: &BubbleGeometry,
) -> Result<EmissionSummary> {
    let n = total_photons_closed_form(transition, geometry)?;
    let k = geometry.k_gas_cutoff();
    let energy = transition.delta_n().powi(2)
        / (transition.n_in() * transition.n_out().powi(2))
        * HBAR
        * SPEED_OF_LIGHT
        * k
        * geometry.volume()
        * k.powi(3)
        / (16.0 * PI * PI);
    EmissionSummary::new(n, energy, geometry.omega_max())
}
