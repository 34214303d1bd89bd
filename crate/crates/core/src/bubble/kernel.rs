//! The ω_in-integrand of the finite-volume spectrum.
//!
//! Pairing an "in" mode at ω_i with an "out" mode at ω_o, the Bogolubov
//! overlap reduces to an integral over the sphere's interior of
//! j_l(k_o r)·j_l(k_i r), weighted by
//!
//!   Φ = ω_i·ω_o·(n_i + n_o)/(ω_i + ω_o).
//!
//! On shell (n_i·ω_i = n_o·ω_o) this equals (n_o·ω_o² + n_i·ω_i²)/(ω_o + ω_i),
//! but the two differ off shell. Φ is the form that comes out of the
//! inner product, and it stays bounded when one frequency is much larger
//! than the other.
//!
//! The interior integral is the Wronskian kernel, written in cylinder functions:
//! (1/R)∫₀ᴿ t·J_ν(at)·J_ν(bt) dt = W/(a² − b²).

use std::f64::consts::PI;

use super::modes::match_modes;
use crate::error::{require_positive, Error, Result};
use crate::specfun::{spherical_j_into, wronskian_kernel, BesselOrder, KERNEL_SINGULAR_WINDOW};
use crate::units::SPEED_OF_LIGHT;

/// Φ²·|A_ν^in|²·|A_ν^out|²·[W/(a² − b²)]² for one l, in s².
///
/// Excludes the (2l + 1) degeneracy and the ¼R²(Δn)² prefactor. The
/// amplitudes are the matched ones: the "in" mode has index `n_gas_in`
/// inside and the "out" mode has `n_gas_out`, both with `n_liquid` outside.
pub fn finite_kernel(
    l: usize,
    omega_in: f64,
    omega_out: f64,
    n_gas_in: f64,
    n_gas_out: f64,
    n_liquid: f64,
    radius: f64,
) -> Result<f64> {
    require_positive("omega_in", omega_in)?;
    require_positive("omega_out", omega_out)?;
    let mode_in = match_modes(l, omega_in, n_gas_in, n_liquid, radius)?;
    let mode_out = match_modes(l, omega_out, n_gas_out, n_liquid, radius)?;
    let a = n_gas_out * omega_out / SPEED_OF_LIGHT;
    let b = n_gas_in * omega_in / SPEED_OF_LIGHT;
    let w = wronskian_kernel(BesselOrder::new(l), a, b, radius)?;
    let phi = overlap_weight(omega_in, omega_out, n_gas_in, n_gas_out);
    Ok(phi * phi * mode_in.a_nu_sq * mode_out.a_nu_sq * w * w)
}

/// Φ = ω_i·ω_o·(n_i + n_o)/(ω_i + ω_o), in rad/s.
pub fn overlap_weight(omega_in: f64, omega_out: f64, n_in: f64, n_out: f64) -> f64 {
    omega_in * omega_out * (n_in + n_out) / (omega_in + omega_out)
}

/// How the mode amplitudes |A_ν|² are evaluated in spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Normalization {
    /// ρ = 1: the resonance-averaged value of the matched amplitude.
    #[default]
    CavityAveraged,
    /// ρ = n_l/(n_g·(B² + C²)) at every sample. Only meaningful while the
    /// sphere's resonances are wide enough to resolve.
    Matched,
}

/// Per-ω_out evaluator of the dimensionless integrand
///
///   g_l(x_i) = (2l + 1)·F²·ρ_i·ρ_o·(4·x_i·x_o/π²)·L_l(x_i, x_o)²,
///
/// with F = x_i·x_o·(n_i + n_o)/(n_o·x_i + n_i·x_o) and
/// L_l = ∫₀¹ s²·j_l(x_o s)·j_l(x_i s) ds. Then
/// dN/dω_o = (R/c)·(Δn²/2)·(1/n_i)·Σ_l ∫ g_l dx_i.
pub(crate) struct KernelRow {
    x_out: f64,
    n_in: f64,
    n_out: f64,
    n_liquid: f64,
    l_max: usize,
    normalization: Normalization,
    j_out: Vec<f64>,
    rho_out: Vec<f64>,
    // scratch
    j_in: Vec<f64>,
    j_mid: Vec<f64>,
}

/// ρ = n_l/(n_g·D) from already computed interior j_l, j_l′; zero once the
/// exterior irregular solution overflows (the mode cannot reach the interior).
fn matched_rho(l_max: usize, x: f64, n_g: f64, n_l: f64, j: &[f64], dj: &[f64]) -> Vec<f64> {
    let x_e = x * n_l / n_g;
    let s = n_g / n_l;
    let mut je = vec![0.0; l_max + 2];
    let mut ye = vec![0.0; l_max + 2];
    spherical_j_into(x_e, &mut je);
    crate::specfun::spherical_y_into(x_e, &mut ye);
    let w = x_e * x_e;
    (0..=l_max)
        .map(|l| {
            if l == 0 {
                return 0.0;
            }
            let dje = je[l - 1] - (l + 1) as f64 / x_e * je[l];
            let dye = ye[l - 1] - (l + 1) as f64 / x_e * ye[l];
            let b = w * (j[l] * dye - s * dj[l] * ye[l]);
            let c = w * (s * dj[l] * je[l] - j[l] * dje);
            let d = b * b + c * c;
            if d.is_finite() && d > 0.0 {
                n_l / (n_g * d)
            } else {
                0.0
            }
        })
        .collect()
}

fn derivatives(j: &[f64], x: f64, l_max: usize) -> Vec<f64> {
    (0..=l_max)
        .map(|l| if l == 0 { -j[1] } else { j[l - 1] - (l + 1) as f64 / x * j[l] })
        .collect()
}

impl KernelRow {
    pub(crate) fn new(
        x_out: f64,
        n_in: f64,
        n_out: f64,
        n_liquid: f64,
        l_max: usize,
        normalization: Normalization,
    ) -> Self {
        let mut j_out = vec![0.0; l_max + 2];
        spherical_j_into(x_out, &mut j_out);
        let rho_out = match normalization {
            Normalization::CavityAveraged => vec![1.0; l_max + 1],
            Normalization::Matched => {
                let dj_out = derivatives(&j_out, x_out, l_max);
                matched_rho(l_max, x_out, n_out, n_liquid, &j_out, &dj_out)
            }
        };
        Self {
            x_out,
            n_in,
            n_out,
            n_liquid,
            l_max,
            normalization,
            j_out,
            rho_out,
            j_in: vec![0.0; l_max + 2],
            j_mid: vec![0.0; l_max + 2],
        }
    }

    /// Number of components, l = 1..=l_max.
    pub(crate) fn dim(&self) -> usize {
        self.l_max
    }

    /// Writes g_l(x_in) for l = 1..=l_max into `out[l − 1]`.
    pub(crate) fn eval(&mut self, x_in: f64, out: &mut [f64]) {
        let xo = self.x_out;
        let f = x_in * xo * (self.n_in + self.n_out) / (self.n_out * x_in + self.n_in * xo);
        let pref = f * f * 4.0 * x_in * xo / (PI * PI);
        spherical_j_into(x_in, &mut self.j_in);
        let rho_in = match self.normalization {
            Normalization::CavityAveraged => None,
            Normalization::Matched => {
                let dj_in = derivatives(&self.j_in, x_in, self.l_max);
                Some(matched_rho(self.l_max, x_in, self.n_in, self.n_liquid, &self.j_in, &dj_in))
            }
        };
        let near = (xo - x_in).abs() < KERNEL_SINGULAR_WINDOW * xo.max(x_in);
        if near {
            spherical_j_into(0.5 * (xo + x_in), &mut self.j_mid);
        }
        let denom = xo * xo - x_in * x_in;
        for l in 1..=self.l_max {
            let overlap = if near {
                let m = &self.j_mid;
                0.5 * (m[l] * m[l] - m[l - 1] * m[l + 1])
            } else {
                // x_i·j_o·j_i′ − x_o·j_o′·j_i with j′ = (l/x)·j − j_{l+1}; the
                // l·j_o·j_i terms cancel exactly
                (xo * self.j_out[l + 1] * self.j_in[l] - x_in * self.j_out[l] * self.j_in[l + 1]) / denom
            };
            let rho = rho_in.as_ref().map_or(1.0, |r| r[l]) * self.rho_out[l];
            out[l - 1] = (2 * l + 1) as f64 * pref * rho * overlap * overlap;
        }
    }
}

/// Dimensionless integrand for a single l, through the public SI kernel.
///
/// Used to tie the fast path to [`finite_kernel`]: g_l = (2l + 1)·c²·K_SI.
pub fn dimensionless_integrand(
    l: usize,
    x_in: f64,
    x_out: f64,
    n_gas_in: f64,
    n_gas_out: f64,
    n_liquid: f64,
    radius: f64,
) -> Result<f64> {
    if l == 0 {
        return Err(Error::invalid("l", "angular momentum must be >= 1"));
    }
    let omega_in = x_in * SPEED_OF_LIGHT / (n_gas_in * radius);
    let omega_out = x_out * SPEED_OF_LIGHT / (n_gas_out * radius);
    let k = finite_kernel(l, omega_in, omega_out, n_gas_in, n_gas_out, n_liquid, radius)?;
    Ok((2 * l + 1) as f64 * SPEED_OF_LIGHT * SPEED_OF_LIGHT * k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    #[test]
    fn fast_path_matches_public_kernel() {
        let radius = 500e-9;
        for (n_i, n_o) in [(12.0, 1.0), (1.0, 12.0), (2.5, 1.7)] {
            for norm in [Normalization::Matched, Normalization::CavityAveraged] {
                let x_out = 7.3;
                let mut row = KernelRow::new(x_out, n_i, n_o, 1.3, 12, norm);
                let mut out = vec![0.0; row.dim()];
                for x_in in [0.4, 5.0, 7.3 * (1.0 + 3e-7), 9.9] {
                    row.eval(x_in, &mut out);
                    for l in [1, 4, 11] {
                        let mut reference =
                            dimensionless_integrand(l, x_in, x_out, n_i, n_o, 1.3, radius).unwrap();
                        if norm == Normalization::CavityAveraged {
                            let a = match_modes(l, x_in * SPEED_OF_LIGHT / (n_i * radius), n_i, 1.3, radius)
                                .unwrap();
                            let b = match_modes(l, x_out * SPEED_OF_LIGHT / (n_o * radius), n_o, 1.3, radius)
                                .unwrap();
                            reference /= a.density_ratio() * b.density_ratio();
                        }
                        assert!(rel(out[l - 1], reference) < 1e-8, "{l} {x_in} {} {reference}", out[l - 1]);
                    }
                }
            }
        }
    }

    #[test]
    fn kernel_is_continuous_across_resonance() {
        let (n_i, n_o, radius) = (3.0, 1.5, 500e-9);
        let omega_out = 2e15;
        let resonance = n_o * omega_out / n_i;
        let lo = finite_kernel(2, resonance * (1.0 - 1e-7), omega_out, n_i, n_o, 1.3, radius).unwrap();
        let hi = finite_kernel(2, resonance * (1.0 + 1e-7), omega_out, n_i, n_o, 1.3, radius).unwrap();
        assert!(rel(lo, hi) < 1e-5);
    }

    #[test]
    fn overlap_weight_is_on_shell_printed_form() {
        let (n_i, n_o, w_o) = (3.0, 7.0, 1.1e15);
        let w_i = n_o * w_o / n_i;
        let printed = (n_o * w_o * w_o + n_i * w_i * w_i) / (w_o + w_i);
        assert!(rel(overlap_weight(w_i, w_o, n_i, n_o), printed) < 1e-14);
    }
}
