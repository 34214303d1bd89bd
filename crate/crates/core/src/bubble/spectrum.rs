//! Finite-volume spectrum and totals.

use std::f64::consts::PI;

use rayon::prelude::*;

use super::kernel::{KernelRow, Normalization};
use crate::error::{Error, Result};
use crate::homogeneous::POLARIZATIONS;
use crate::model::{BubbleGeometry, EmissionSummary, MediumTransition, SpectralDensity};
use crate::quad::{integrate_vec, richardson_trapezoid, QuadOptions};
use crate::specfun::spherical_j;
use crate::units::{HBAR, SPEED_OF_LIGHT};

/// Angular-momentum truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LMax {
    /// Stop at the first l ≥ ⌈K·R⌉ whose share of the running sum is below
    /// `l_tail_tol`.
    #[default]
    Auto,
    Fixed(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiniteSpectrumConfig {
    pub l_max: LMax,
    pub quad_rel_tol: f64,
    pub l_tail_tol: f64,
    /// Points on (0, cK/n_out]. An extended range keeps the same spacing.
    pub grid_points: usize,
    pub normalization: Normalization,
    /// How far past the cutoff a side with gas index 1 is integrated, in
    /// units of the cutoff. Such a side has no index step, so its cutoff is
    /// vacuous; beyond this point an asymptotic tail is added.
    pub vacuum_extension: f64,
}

impl Default for FiniteSpectrumConfig {
    fn default() -> Self {
        Self {
            l_max: LMax::Auto,
            quad_rel_tol: 1e-6,
            l_tail_tol: 1e-4,
            grid_points: 200,
            normalization: Normalization::CavityAveraged,
            vacuum_extension: 4.0,
        }
    }
}

impl FiniteSpectrumConfig {
    pub fn validate(&self) -> Result<()> {
        let unit = |field: &'static str, v: f64| {
            if v > 0.0 && v < 1.0 {
                Ok(())
            } else {
                Err(Error::invalid(field, format!("{v} must lie in (0, 1)")))
            }
        };
        unit("quad_rel_tol", self.quad_rel_tol)?;
        unit("l_tail_tol", self.l_tail_tol)?;
        if self.grid_points < 2 {
            return Err(Error::invalid("grid_points", format!("{} must be >= 2", self.grid_points)));
        }
        if self.l_max == LMax::Fixed(0) {
            return Err(Error::invalid("l_max", "must be >= 1"));
        }
        if !(self.vacuum_extension.is_finite() && self.vacuum_extension >= 1.0) {
            return Err(Error::invalid(
                "vacuum_extension",
                format!("{} must be finite and >= 1", self.vacuum_extension),
            ));
        }
        Ok(())
    }

    /// Number of ω_out samples for a range of `out_range` cutoffs.
    pub fn grid_len(&self, out_range: f64) -> usize {
        (self.grid_points as f64 * out_range).round() as usize
    }
}

/// A sampled finite-volume spectrum with its convergence diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteSpectrum {
    pub density: SpectralDensity,
    /// Highest l summed at each grid point.
    pub l_used: Vec<usize>,
    /// Largest share of the last summed l in its running total.
    pub max_tail_fraction: f64,
    /// Largest relative error estimate of the ω_in quadrature.
    pub max_quad_error: f64,
    /// Upper end of the ω_in range in units of the cutoff (1 unless the
    /// initial gas index is 1).
    pub in_range: f64,
    /// Upper end of the ω_out grid in units of the cutoff.
    pub out_range: f64,
    pub polarizations: f64,
    // tail constants for the totals, only for an extended ω_out range
    out_tail_q: f64,
}

fn is_vacuum(n: f64) -> bool {
    (n - 1.0).abs() < 1e-12
}

/// Width, in x, of the initial panels of the ω_in integration. The
/// integrand oscillates with period ≈ π, so every panel sees about one
/// oscillation before adaptive refinement starts.
const PANEL_WIDTH: f64 = 2.0;

struct Point {
    value: f64,
    l_used: usize,
    tail_fraction: f64,
    quad_error: f64,
}

struct Setup {
    kr: f64,
    x_in_max: f64,
    n_in: f64,
    n_out: f64,
    n_liquid: f64,
}

fn candidate_l(x_out: f64, x_in_max: f64, extra: usize) -> usize {
    let m = x_out.min(x_in_max);
    m.ceil() as usize + (4.0 * m.cbrt()).ceil() as usize + 25 + extra
}

fn breakpoints(lo: f64, hi: f64, node: f64) -> Vec<f64> {
    let panels = ((hi - lo) / PANEL_WIDTH).ceil().max(1.0) as usize;
    let mut p: Vec<f64> = (0..=panels)
        .map(|i| if i == panels { hi } else { lo + (hi - lo) * i as f64 / panels as f64 })
        .collect();
    let tol = 1e-9 * (hi - lo);
    if node > lo + tol && node < hi - tol {
        p.retain(|&q| q == lo || q == hi || (q - node).abs() > tol);
        p.push(node);
        p.sort_by(f64::total_cmp);
    }
    p
}

fn spectrum_point(s: &Setup, x_out: f64, config: &FiniteSpectrumConfig) -> Result<Point> {
    let x_in_min = 1e-6 * s.kr;
    let points = breakpoints(x_in_min, s.x_in_max, x_out);
    let opts = QuadOptions {
        rel_tol: config.quad_rel_tol,
        abs_tol: 0.0,
        max_intervals: 50_000,
    };
    let mut extra = 0;
    loop {
        let l_top = match config.l_max {
            LMax::Fixed(l) => l,
            LMax::Auto => candidate_l(x_out, s.x_in_max, extra),
        };
        let mut row = KernelRow::new(x_out, s.n_in, s.n_out, s.n_liquid, l_top, config.normalization);
        let dim = row.dim();
        let r = integrate_vec(|x, out: &mut [f64]| row.eval(x, out), &points, dim, opts).map_err(|e| {
            Error::Numerical(format!(
                "finite-volume quadrature failed at x_out = {x_out:.6} (l = 1..={l_top}): {e}"
            ))
        })?;
        let total: f64 = r.values.iter().sum();
        let quad_error = if total > 0.0 { r.error / total } else { 0.0 };
        let (l_used, tail_fraction) = match config.l_max {
            LMax::Fixed(l) => {
                let last = r.values[l - 1];
                (l, if total > 0.0 { last / total } else { 0.0 })
            }
            LMax::Auto => {
                let floor = (s.kr.ceil() as usize).min(x_out.min(s.x_in_max).ceil() as usize + 1).max(1);
                let mut running = 0.0;
                let mut stop = None;
                for (i, &v) in r.values.iter().enumerate() {
                    running += v;
                    let l = i + 1;
                    if l >= floor && v <= config.l_tail_tol * running {
                        stop = Some((l, if running > 0.0 { v / running } else { 0.0 }, running));
                        break;
                    }
                }
                match stop {
                    Some((l, frac, running)) => {
                        let value = running + in_tail(s, x_out);
                        return Ok(Point {
                            value,
                            l_used: l,
                            tail_fraction: frac,
                            quad_error,
                        });
                    }
                    None if extra < 400 => {
                        extra = 2 * extra + 32;
                        continue;
                    }
                    None => {
                        return Err(Error::Numerical(format!(
                            "angular-momentum sum did not converge at x_out = {x_out:.6} by l = {l_top}"
                        )))
                    }
                }
            }
        };
        return Ok(Point {
            value: total + in_tail(s, x_out),
            l_used,
            tail_fraction,
            quad_error,
        });
    }
}

/// Σ_l≥1 ∫_X^∞ g_l dx_in for an initial gas index of 1, from the large-x_in
/// asymptotics L_l ≈ −j_l(x_o)·j_l′(x_in)/x_in and Σ(2l+1)j_l² = 1.
fn in_tail(s: &Setup, x_out: f64) -> f64 {
    if !is_vacuum(s.n_in) {
        return 0.0;
    }
    let f_inf = x_out * (s.n_in + s.n_out) / s.n_out;
    let j0 = spherical_j(0, x_out).unwrap_or(0.0);
    (1.0 - j0 * j0) * x_out * f_inf * f_inf / (PI * PI * s.x_in_max * s.x_in_max)
}

/// ∫₀^X dx x³·((n_i + n_o)/n_i)²·(2/π²)·(1 − j_0(x)²), in closed form.
fn out_tail_q(x: f64, n_in: f64, n_out: f64) -> f64 {
    let bracket = x.powi(4) / 4.0 - x * x / 4.0 + x * (2.0 * x).sin() / 4.0 + (2.0 * x).cos() / 8.0 - 0.125;
    2.0 / (PI * PI) * ((n_in + n_out) / n_in).powi(2) * bracket
}

/// dN/dω_out of the sphere on ω_j = j·ω_top/n, j = 1..=n.
///
/// ω_top is the gas-side cutoff c·K/n_out, extended by `vacuum_extension`
/// when n_out = 1, with n growing in proportion. The ω_in integral runs over (10⁻⁶, 1]·c·K/n_in, extended
/// likewise when n_in = 1. Both sides share the single gas-side K.
pub fn spectrum_finite(
    transition: &MediumTransition,
    geometry: &BubbleGeometry,
    config: &FiniteSpectrumConfig,
) -> Result<FiniteSpectrum> {
    config.validate()?;
    let (n_in, n_out) = (transition.n_in(), transition.n_out());
    if (n_out - geometry.n_out()).abs() > 1e-12 * n_out.max(geometry.n_out()) {
        return Err(Error::invalid(
            "n_out",
            format!("geometry built for n_out = {} but the transition has n_out = {n_out}", geometry.n_out()),
        ));
    }
    let kr = geometry.k_gas_cutoff_r();
    let in_range = if is_vacuum(n_in) { config.vacuum_extension } else { 1.0 };
    let out_range = if is_vacuum(n_out) { config.vacuum_extension } else { 1.0 };
    let setup = Setup {
        kr,
        x_in_max: in_range * kr,
        n_in,
        n_out,
        n_liquid: geometry.n_liquid(),
    };
    let n = config.grid_len(out_range);
    let x_top = out_range * kr;
    let xs: Vec<f64> = (1..=n).map(|j| x_top * j as f64 / n as f64).collect();
    let radius = geometry.radius();
    let grid: Vec<f64> = xs.iter().map(|x| x * SPEED_OF_LIGHT / (n_out * radius)).collect();
    let delta_sq = transition.delta_n().powi(2);

    let points: Vec<Point> = if delta_sq == 0.0 {
        xs.iter()
            .map(|_| Point {
                value: 0.0,
                l_used: 0,
                tail_fraction: 0.0,
                quad_error: 0.0,
            })
            .collect()
    } else {
        xs.par_iter()
            .map(|&x| spectrum_point(&setup, x, config))
            .collect::<Result<Vec<_>>>()?
    };

    // dN/dω_out = P·(R/c)·(Δn²/4)·(1/n_in)·S with P = 2 polarizations
    let scale = POLARIZATIONS * radius / SPEED_OF_LIGHT * delta_sq / 4.0 / n_in;
    let values: Vec<f64> = points.iter().map(|p| scale * p.value).collect();
    let fold = |f: fn(&Point) -> f64| points.iter().map(f).fold(0.0, f64::max);
    Ok(FiniteSpectrum {
        density: SpectralDensity::new(grid, values, Some(xs))?,
        l_used: points.iter().map(|p| p.l_used).collect(),
        max_tail_fraction: fold(|p| p.tail_fraction),
        max_quad_error: fold(|p| p.quad_error),
        in_range,
        out_range,
        polarizations: POLARIZATIONS,
        out_tail_q: if out_range > 1.0 { out_tail_q(setup.x_in_max, n_in, n_out) } else { 0.0 },
    })
}

/// N and E from a computed spectrum: Richardson-extrapolated trapezoid from
/// the origin, plus the asymptotic tail when the ω_out range was extended.
pub fn totals_from_spectrum(
    spectrum: &FiniteSpectrum,
    transition: &MediumTransition,
    geometry: &BubbleGeometry,
) -> Result<EmissionSummary> {
    let d = &spectrum.density;
    let h = d.grid()[0];
    let mut counts = vec![0.0];
    counts.extend_from_slice(d.values());
    let mut energies = vec![0.0];
    energies.extend(d.grid().iter().zip(d.values()).map(|(w, v)| HBAR * w * v));
    let mut n = richardson_trapezoid(h, &counts);
    let mut e = richardson_trapezoid(h, &energies);
    if spectrum.out_tail_q > 0.0 {
        let (n_in, n_out) = (transition.n_in(), transition.n_out());
        let delta_sq = transition.delta_n().powi(2);
        let x = spectrum.out_range * geometry.k_gas_cutoff_r();
        let q = spectrum.out_tail_q;
        n += delta_sq * q / (4.0 * n_in * n_out * x * x);
        e += HBAR * SPEED_OF_LIGHT * delta_sq * q / (2.0 * n_in * n_out * n_out * geometry.radius() * x);
    }
    EmissionSummary::new(n.max(0.0), e.max(0.0), geometry.omega_max())
}

/// [`spectrum_finite`] followed by [`totals_from_spectrum`].
pub fn totals_finite(
    transition: &MediumTransition,
    geometry: &BubbleGeometry,
    config: &FiniteSpectrumConfig,
) -> Result<EmissionSummary> {
    let s = spectrum_finite(transition, geometry, config)?;
    totals_from_spectrum(&s, transition, geometry)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::integrate;

    #[test]
    fn config_validation() {
        assert!(FiniteSpectrumConfig::default().validate().is_ok());
        let bad = |f: fn(&mut FiniteSpectrumConfig)| {
            let mut c = FiniteSpectrumConfig::default();
            f(&mut c);
            c.validate().is_err()
        };
        assert!(bad(|c| c.quad_rel_tol = 0.0));
        assert!(bad(|c| c.l_tail_tol = 1.0));
        assert!(bad(|c| c.grid_points = 1));
        assert!(bad(|c| c.l_max = LMax::Fixed(0)));
        assert!(bad(|c| c.vacuum_extension = 0.5));
    }

    #[test]
    fn out_tail_closed_form() {
        let (x, n_i, n_o): (f64, f64, f64) = (9.0, 3.0, 1.0);
        let (numeric, _) = integrate(
            |t| {
                let j0 = if t == 0.0 { 1.0 } else { t.sin() / t };
                t.powi(3) * ((n_i + n_o) / n_i).powi(2) * 2.0 / (PI * PI) * (1.0 - j0 * j0)
            },
            &[0.0, x],
            QuadOptions::default(),
        )
        .unwrap();
        assert!((out_tail_q(x, n_i, n_o) - numeric).abs() < 1e-10 * numeric);
    }

    #[test]
    fn equal_indices_give_zero_spectrum() {
        let t = MediumTransition::new(5.0, 5.0, 1e-15).unwrap();
        let g = BubbleGeometry::from_cutoff_product(500e-9, 1.3, 15.0, 5.0).unwrap();
        let cfg = FiniteSpectrumConfig {
            grid_points: 8,
            ..Default::default()
        };
        let s = spectrum_finite(&t, &g, &cfg).unwrap();
        assert!(s.density.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn breakpoints_contain_node() {
        let p = breakpoints(0.0, 10.0, 3.3);
        assert!(p.contains(&3.3));
        assert!(p.windows(2).all(|w| w[1] > w[0]));
        let p = breakpoints(0.0, 10.0, 4.0);
        assert!(p.windows(2).all(|w| w[1] > w[0]));
    }
}
