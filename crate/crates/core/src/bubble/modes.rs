//! Radial eigenmodes of a dielectric sphere in an infinite liquid.
//!
//! Inside the sphere the mode is j_l(k_g r) with k_g = n_g·ω/c; outside it is
//! B·j_l(k_e r) + C·y_l(k_e r) with k_e = n_l·ω/c. Continuity of the mode and
//! its radial derivative at r = R fixes B and C. Writing x = k_g R and
//! x_e = k_e R, the 2×2 system has determinant j·y′ − j′·y = 1/x_e², so
//!
//!   B = x_e²·[j_l(x)·y_l′(x_e) − s·j_l′(x)·y_l(x_e)]
//!   C = x_e²·[s·j_l′(x)·j_l(x_e) − j_l(x)·j_l′(x_e)],   s = n_g/n_l.
//!
//! Normalization. Far outside, the mode oscillates with amplitude
//! √(B² + C²)/(k_e r), so under the inner product ∫ε·f·f′·r²dr the self
//! overlap grows like r·n_l²·(B² + C²)/(2k_e²). Requiring δ(ω − ω′) fixes the
//! amplitude of the interior j_l(k_g r):
//!
//!   A_δ² = 2·n_l·ω²/(π·c³·D),   D = B² + C².
//!
//! The finite-volume spectrum is written with cylinder functions J_ν(k_g r)/√r
//! and the relativistic 1/ω of the Bogolubov inner product folded into the
//! amplitude, which turns A_δ² into
//!
//!   |A_ν|² = π·A_δ²/(2·k_g·ω) = ρ/c²,   ρ = n_l/(n_g·D).
//!
//! ρ = 1 for a sphere with no index contrast, and ρ averages to 1 over the
//! resonances of the sphere.

use std::f64::consts::PI;

use crate::error::{require_positive, Error, Result};
use crate::specfun::{spherical_j_into, spherical_y_into};
use crate::units::SPEED_OF_LIGHT;

/// One matched radial mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeMatch {
    pub l: usize,
    /// rad/s.
    pub omega: f64,
    pub n_inside: f64,
    pub n_outside: f64,
    /// Meters.
    pub radius: f64,
    /// B, exterior coefficient of j_l.
    pub amp_regular: f64,
    /// C, exterior coefficient of y_l.
    pub amp_irregular: f64,
    /// |A_ν|² in s²/m².
    pub a_nu_sq: f64,
}

/// Values and argument-derivatives of j_l, y_l at one point.
struct Radial {
    j: f64,
    dj: f64,
    y: f64,
    dy: f64,
}

fn radial(l: usize, x: f64, with_y: bool) -> Radial {
    let mut j = vec![0.0; l + 2];
    spherical_j_into(x, &mut j);
    // f′_l = f_{l−1} − (l+1)/x·f_l, or −f_1 at l = 0
    let deriv = |f: &[f64]| if l == 0 { -f[1] } else { f[l - 1] - (l + 1) as f64 / x * f[l] };
    let (y, dy) = if with_y {
        let mut yv = vec![0.0; l + 2];
        spherical_y_into(x, &mut yv);
        (yv[l], deriv(&yv))
    } else {
        (0.0, 0.0)
    };
    Radial {
        j: j[l],
        dj: deriv(&j),
        y,
        dy,
    }
}

/// B and C for interior argument `x` and exterior argument `x_e`.
pub(crate) fn junction(l: usize, x: f64, x_e: f64, ratio: f64) -> (f64, f64) {
    let inner = radial(l, x, false);
    let outer = radial(l, x_e, true);
    let w = x_e * x_e;
    (
        w * (inner.j * outer.dy - ratio * inner.dj * outer.y),
        w * (ratio * inner.dj * outer.j - inner.j * outer.dj),
    )
}

/// Matches the interior and exterior solutions at r = R and normalizes.
///
/// A non-finite or vanishing B² + C² is retried once at ω·(1 + 1e-12).
pub fn match_modes(
    l: usize,
    omega: f64,
    n_inside: f64,
    n_outside: f64,
    radius: f64,
) -> Result<ModeMatch> {
    if l == 0 {
        return Err(Error::invalid("l", "angular momentum must be >= 1"));
    }
    let omega = require_positive("omega", omega)?;
    let n_inside = require_positive("n_inside", n_inside)?;
    let n_outside = require_positive("n_outside", n_outside)?;
    let radius = require_positive("radius", radius)?;
    let ratio = n_inside / n_outside;
    let mut w = omega;
    for _ in 0..2 {
        let x = n_inside * w * radius / SPEED_OF_LIGHT;
        let x_e = n_outside * w * radius / SPEED_OF_LIGHT;
        let (b, c) = junction(l, x, x_e, ratio);
        let d = b * b + c * c;
        if d.is_finite() && d > 0.0 {
            return Ok(ModeMatch {
                l,
                omega: w,
                n_inside,
                n_outside,
                radius,
                amp_regular: b,
                amp_irregular: c,
                a_nu_sq: n_outside / (n_inside * d) / (SPEED_OF_LIGHT * SPEED_OF_LIGHT),
            });
        }
        w = omega * (1.0 + 1e-12);
    }
    Err(Error::Numerical(format!(
        "mode matching failed for l = {l}, omega = {omega:e} rad/s, n_inside = {n_inside}, \
         n_outside = {n_outside}: B² + C² is zero or not representable"
    )))
}

impl ModeMatch {
    /// B² + C².
    pub fn exterior_weight(&self) -> f64 {
        self.amp_regular.powi(2) + self.amp_irregular.powi(2)
    }

    /// ρ = c²·|A_ν|², equal to 1 without index contrast.
    pub fn density_ratio(&self) -> f64 {
        self.a_nu_sq * SPEED_OF_LIGHT * SPEED_OF_LIGHT
    }

    /// A_δ², the squared amplitude of the interior j_l(k r) under
    /// δ-normalization in frequency.
    pub fn delta_amplitude_sq(&self) -> f64 {
        2.0 * self.n_outside * self.omega.powi(2) / (PI * SPEED_OF_LIGHT.powi(3) * self.exterior_weight())
    }

    /// Unnormalized mode value and radial derivative (per meter) at `r`.
    pub fn profile(&self, r: f64) -> (f64, f64) {
        if r < self.radius {
            let k = self.n_inside * self.omega / SPEED_OF_LIGHT;
            let f = radial(self.l, k * r, false);
            (f.j, k * f.dj)
        } else {
            let k = self.n_outside * self.omega / SPEED_OF_LIGHT;
            let f = radial(self.l, k * r, true);
            (
                self.amp_regular * f.j + self.amp_irregular * f.y,
                k * (self.amp_regular * f.dj + self.amp_irregular * f.dy),
            )
        }
    }

    /// Interior solution evaluated exactly at R, for junction checks.
    pub fn interior_at_wall(&self) -> (f64, f64) {
        let k = self.n_inside * self.omega / SPEED_OF_LIGHT;
        let f = radial(self.l, k * self.radius, false);
        (f.j, k * f.dj)
    }

    /// Exterior solution evaluated exactly at R.
    pub fn exterior_at_wall(&self) -> (f64, f64) {
        let k = self.n_outside * self.omega / SPEED_OF_LIGHT;
        let f = radial(self.l, k * self.radius, true);
        (
            self.amp_regular * f.j + self.amp_irregular * f.y,
            k * (self.amp_regular * f.dj + self.amp_irregular * f.dy),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_contrast_is_free() {
        for l in [1, 3, 20] {
            let m = match_modes(l, 2e15, 1.3, 1.3, 500e-9).unwrap();
            assert_eq!(m.amp_irregular, 0.0);
            assert!((m.amp_regular - 1.0).abs() < 1e-12);
            assert!((m.density_ratio() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn junction_is_continuous() {
        for (l, n_in, n_out) in [(1, 12.0, 1.3), (4, 1.0, 1.3), (9, 71.0, 1.3), (2, 1.3, 2.5)] {
            let m = match_modes(l, 3.1e15, n_in, n_out, 500e-9).unwrap();
            let (f_in, d_in) = m.interior_at_wall();
            let (f_out, d_out) = m.exterior_at_wall();
            let scale = f_in.abs().max(d_in.abs() * 500e-9);
            assert!((f_in - f_out).abs() < 1e-10 * scale, "{l} {f_in} {f_out}");
            assert!((d_in - d_out).abs() * 500e-9 < 1e-10 * scale, "{l} {d_in} {d_out}");
        }
    }

    #[test]
    fn rejects_monopole_and_bad_input() {
        assert!(match_modes(0, 1e15, 2.0, 1.3, 5e-7).is_err());
        assert!(match_modes(1, -1e15, 2.0, 1.3, 5e-7).is_err());
    }

    #[test]
    fn overflowing_match_is_a_numerical_error() {
        let e = match_modes(300, 1e13, 2e4, 1.3, 5e-7).unwrap_err();
        assert!(matches!(e, Error::Numerical(_)));
    }
}
