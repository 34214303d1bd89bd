#![allow(dead_code)]

pub mod series;

use std::f64::consts::PI;

use dielectric_casimir::bubble::ModeMatch;
use dielectric_casimir::homogeneous::ln_beta_sq_density;
use dielectric_casimir::model::MediumTransition;
use dielectric_casimir::quad::{integrate, QuadOptions};
use dielectric_casimir::units::SPEED_OF_LIGHT;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

/// Least-squares slope of y against x.
pub fn fit_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx).powi(2)).sum();
    sxy / sxx
}

/// Fitting window for the exponential tail: from the larger of 10·Ω_sudden and
/// the frequency where the smallest of the three sinh arguments reaches 5,
/// over a factor 4.
pub fn tail_window(t: &MediumTransition) -> (f64, f64) {
    let (n_in, n_out) = (t.n_in(), t.n_out());
    let sudden = dielectric_casimir::homogeneous::omega_sudden(t).omega_sudden;
    let slowest = n_in.min(n_out).min(0.5 * (n_in - n_out).abs());
    let asymptotic = 5.0 * t.n_sq_mean() / (PI * n_out * slowest * t.t0());
    let lo = (10.0 * sudden).max(asymptotic);
    (lo, 4.0 * lo)
}

/// Fitted d ln|β|²/dω over the tail window, on 64 points.
pub fn fitted_tail_slope(t: &MediumTransition) -> f64 {
    let (lo, hi) = tail_window(t);
    let w: Vec<f64> = (0..64).map(|i| lo + (hi - lo) * i as f64 / 63.0).collect();
    let y: Vec<f64> = w.iter().map(|&w| ln_beta_sq_density(t, w).unwrap()).collect();
    fit_slope(&w, &y)
}

/// Growth rate d/dL of ∫^L ε·(A_δ·f)²·r² dr far outside the sphere,
/// averaged over whole periods. δ-normalization in frequency requires
/// n_l/(π·c).
pub fn delta_norm_growth(m: &ModeMatch) -> f64 {
    let k = m.n_outside * m.omega / SPEED_OF_LIGHT;
    let half_period = PI / k;
    let start = 60.0 * m.radius.max(m.l as f64 / k);
    let periods = 400;
    let points: Vec<f64> = (0..=periods).map(|i| start + i as f64 * half_period).collect();
    let amp = m.delta_amplitude_sq();
    let eps = m.n_outside * m.n_outside;
    let (overlap, _) = integrate(
        |r| {
            let (f, _) = m.profile(r);
            eps * amp * f * f * r * r
        },
        &points,
        QuadOptions {
            rel_tol: 1e-10,
            ..Default::default()
        },
    )
    .unwrap();
    overlap / (periods as f64 * half_period)
}

/// Same windowed integral for two different modes, per unit length.
pub fn cross_overlap_rate(a: &ModeMatch, b: &ModeMatch) -> f64 {
    let k = a.n_outside * a.omega.max(b.omega) / SPEED_OF_LIGHT;
    let step = PI / k;
    let start = 60.0 * a.radius;
    let panels = 2000;
    let points: Vec<f64> = (0..=panels).map(|i| start + i as f64 * step).collect();
    let norm = (a.delta_amplitude_sq() * b.delta_amplitude_sq()).sqrt();
    let eps = a.n_outside * a.n_outside;
    let (overlap, _) = integrate(
        |r| eps * norm * a.profile(r).0 * b.profile(r).0 * r * r,
        &points,
        QuadOptions {
            rel_tol: 1e-10,
            ..Default::default()
        },
    )
    .unwrap();
    overlap / (panels as f64 * step)
}

/// Cylinder J_{l+½}(z) from the exact series.
pub fn oracle_cylinder(l: usize, z: f64) -> f64 {
    (2.0 * z / PI).sqrt() * series::spherical_j(l, z)
}

/// W = J(ar)·∂_r J(br) − ∂_r J(ar)·J(br) with the r-derivatives taken by a
/// fourth-order central difference of the series oracle.
pub fn fd_wronskian(l: usize, a: f64, b: f64, r: f64) -> f64 {
    let h = 5e-4 * r;
    let d = |k: f64| {
        let f = |s: f64| oracle_cylinder(l, k * s);
        (f(r - 2.0 * h) - 8.0 * f(r - h) + 8.0 * f(r + h) - f(r + 2.0 * h)) / (12.0 * h)
    };
    oracle_cylinder(l, a * r) * d(b) - d(a) * oracle_cylinder(l, b * r)
}
