//! Finite-volume emission from a dielectric sphere held at fixed radius
//! inside a liquid of fixed index.
//!
//! The spectrum is a sum over angular momentum l ≥ 1 of ω_in integrals of
//! products of matched-mode amplitudes and a Wronskian kernel. See
//! [`modes`] for the normalization convention and [`kernel`] for the
//! overlap weight.

pub mod kernel;
pub mod modes;
pub mod spectrum;

pub use kernel::{dimensionless_integrand, finite_kernel, overlap_weight, Normalization};
pub use modes::{match_modes, ModeMatch};
pub use spectrum::{
    spectrum_finite, totals_finite, totals_from_spectrum, FiniteSpectrum, FiniteSpectrumConfig, LMax,
};
