//! SI constants and the handful of unit conversions used at the I/O boundary.
//!
//! Everything inside the crate works in SI units. Conversions to and from
//! nanometres, femtoseconds, electron-volts and petahertz only happen where
//! values enter or leave (the CLI and the examples).

use std::f64::consts::PI;

/// Speed of light in vacuum, m/s (exact).
pub const SPEED_OF_LIGHT: f64 = 2.997_924_58e8;

/// Reduced Planck constant, J·s (CODATA 2018).
pub const HBAR: f64 = 1.054_571_817e-34;

/// Elementary charge, C (exact). One electron-volt in joules.
pub const ELECTRON_VOLT: f64 = 1.602_176_634e-19;

/// Returns `(c, ħ)` in SI units.
pub fn physical_constants() -> (f64, f64) {
    (SPEED_OF_LIGHT, HBAR)
}

pub fn nm_to_m(nm: f64) -> f64 {
    nm * 1e-9
}

pub fn m_to_nm(m: f64) -> f64 {
    m * 1e9
}

pub fn fs_to_s(fs: f64) -> f64 {
    fs * 1e-15
}

pub fn s_to_fs(s: f64) -> f64 {
    s * 1e15
}

pub fn ev_to_joule(ev: f64) -> f64 {
    ev * ELECTRON_VOLT
}

pub fn joule_to_ev(j: f64) -> f64 {
    j / ELECTRON_VOLT
}

/// Ordinary frequency in PHz to angular frequency in rad/s.
pub fn phz_to_rad_per_s(phz: f64) -> f64 {
    2.0 * PI * phz * 1e15
}

pub fn rad_per_s_to_phz(omega: f64) -> f64 {
    omega / (2.0 * PI * 1e15)
}

/// Angular frequency (rad/s) to ordinary frequency (Hz).
pub fn rad_per_s_to_hz(omega: f64) -> f64 {
    omega / (2.0 * PI)
}

/// Photon energy ħω in electron-volts.
pub fn photon_energy_ev(omega: f64) -> f64 {
    joule_to_ev(HBAR * omega)
}
