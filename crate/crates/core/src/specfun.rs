//! Spherical and half-integer-order cylinder Bessel functions, the radial
//! Wronskian kernel that appears in the bubble overlap integrals, and an
//! overflow-safe `ln sinh`.
//!
//! Spherical functions of the first kind are generated by Miller's downward
//! recurrence whenever some requested order exceeds the argument, and by the
//! (then stable) upward recurrence otherwise. The second kind is always
//! generated upward.

use std::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};

/// Magnitude at which the downward recurrence is rescaled.
const RESCALE_AT: f64 = 1e250;

/// Relative distance |a − b|/a below which [`wronskian_kernel`] switches to
/// its analytic b → a limit.
pub const KERNEL_SINGULAR_WINDOW: f64 = 1e-6;

/// Angular momentum `l` and the associated cylinder order ν = l + ½.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BesselOrder {
    l: usize,
}

impl BesselOrder {
    pub fn new(l: usize) -> Self {
        Self { l }
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn nu(&self) -> f64 {
        self.l as f64 + 0.5
    }
}

fn check_argument(function: &'static str, x: f64) -> Result<()> {
    if !x.is_finite() {
        return Err(Error::domain(function, format!("argument {x} is not finite")));
    }
    if x < 0.0 {
        return Err(Error::domain(function, format!("argument {x} is negative")));
    }
    Ok(())
}

/// Starting order for the downward recurrence when orders up to `n` are needed.
fn miller_start(n: usize) -> usize {
    n + (1.5 * ((n as f64) * 40.0).sqrt()).ceil() as usize + 20
}

/// Fills `out[l] = j_l(x)` for `l = 0..out.len()`.
///
/// `x` must be finite and non-negative; this is not checked.
pub fn spherical_j_into(x: f64, out: &mut [f64]) {
    let n = out.len();
    if n == 0 {
        return;
    }
    if x == 0.0 {
        out.fill(0.0);
        out[0] = 1.0;
        return;
    }
    let (s, c) = x.sin_cos();
    let j0 = s / x;
    let lmax = n - 1;
    if x > lmax as f64 && x >= 2.0 {
        out[0] = j0;
        if n > 1 {
            out[1] = (j0 - c) / x;
        }
        for l in 1..lmax {
            out[l + 1] = (2 * l + 1) as f64 / x * out[l] - out[l - 1];
        }
        return;
    }

    let start = miller_start(lmax.max(x.ceil() as usize));
    let mut above = 0.0_f64;
    let mut current = 1e-300_f64;
    out.fill(0.0);
    for l in (1..=start).rev() {
        if l <= lmax {
            out[l] = current;
        }
        let below = (2 * l + 1) as f64 / x * current - above;
        above = current;
        current = below;
        if current.abs() > RESCALE_AT {
            current /= RESCALE_AT;
            above /= RESCALE_AT;
            for v in out.iter_mut() {
                *v /= RESCALE_AT;
            }
        }
    }
    out[0] = current;

    // Normalise against whichever of j0, j1 is larger; they never vanish together.
    let j1 = if x < 1e-3 {
        x / 3.0 * (1.0 - x * x / 10.0)
    } else {
        (j0 - c) / x
    };
    // `above` now holds the unnormalised j1
    let scale = if j0.abs() >= j1.abs() {
        j0 / out[0]
    } else {
        j1 / above
    };
    for v in out.iter_mut() {
        *v *= scale;
    }
}

/// Fills `out[l] = y_l(x)` for `l = 0..out.len()`; `x > 0` is not checked.
///
/// Orders whose value overflows are returned as −∞.
pub fn spherical_y_into(x: f64, out: &mut [f64]) {
    let n = out.len();
    if n == 0 {
        return;
    }
    let (s, c) = x.sin_cos();
    out[0] = -c / x;
    if n > 1 {
        out[1] = -c / (x * x) - s / x;
    }
    for l in 1..n - 1 {
        out[l + 1] = (2 * l + 1) as f64 / x * out[l] - out[l - 1];
    }
}

/// Spherical Bessel function of the first kind j_l(x), x ≥ 0.
pub fn spherical_j(l: usize, x: f64) -> Result<f64> {
    check_argument("spherical_j", x)?;
    let mut buf = vec![0.0; l + 1];
    spherical_j_into(x, &mut buf);
    Ok(buf[l])
}

/// Spherical Bessel function of the second kind y_l(x), x > 0.
pub fn spherical_y(l: usize, x: f64) -> Result<f64> {
    check_argument("spherical_y", x)?;
    if x == 0.0 {
        return Err(Error::domain("spherical_y", "irregular at x = 0"));
    }
    let mut buf = vec![0.0; l + 1];
    spherical_y_into(x, &mut buf);
    Ok(buf[l])
}

/// d/dx j_l(x) given the table `j[0..=l+…]` at the same argument.
pub fn spherical_j_derivative(l: usize, x: f64, j: &[f64]) -> f64 {
    if l == 0 {
        return -j[1];
    }
    if x == 0.0 {
        return if l == 1 { 1.0 / 3.0 } else { 0.0 };
    }
    j[l - 1] - (l + 1) as f64 / x * j[l]
}

/// J_{l+½}(x) and J_{l+3/2}(x) for x > 0, via the spherical functions.
fn cylinder_half_pair(l: usize, x: f64) -> (f64, f64) {
    let mut j = vec![0.0; l + 2];
    spherical_j_into(x, &mut j);
    let factor = (2.0 * x / PI).sqrt();
    (factor * j[l], factor * j[l + 1])
}

/// Cylinder Bessel function J_ν(x) for half-integer ν = l + ½ and x ≥ 0.
pub fn cylinder_j_half(order: BesselOrder, x: f64) -> Result<f64> {
    check_argument("cylinder_j_half", x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    Ok(cylinder_half_pair(order.l(), x).0)
}

/// The Wronskian of J_ν(a r) and J_ν(b r) with respect to r, plus its
/// derivative with respect to `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WronskianSample {
    /// W = b·J_ν(ar)·J′_ν(br) − a·J′_ν(ar)·J_ν(br), in 1/m.
    pub value: f64,
    /// ∂W/∂b at the same point, dimensionless.
    pub d_db: f64,
}

fn check_positive(function: &'static str, name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(function, format!("{name} = {v} must be finite and > 0")))
    }
}

/// Evaluates W[J_ν(a r), J_ν(b r)] at `r` together with ∂W/∂b.
pub fn cylinder_pair_at(order: BesselOrder, a: f64, b: f64, r: f64) -> Result<WronskianSample> {
    check_positive("cylinder_pair_at", "a", a)?;
    check_positive("cylinder_pair_at", "b", b)?;
    check_positive("cylinder_pair_at", "r", r)?;
    // With J′_ν = (ν/x)J_ν − J_{ν+1} the two (ν/r)·J·J terms cancel
    // exactly, which keeps W accurate far below the turning point.
    let nu = order.nu();
    let (ja, ja1) = cylinder_half_pair(order.l(), a * r);
    let (jb, jb1) = cylinder_half_pair(order.l(), b * r);
    Ok(WronskianSample {
        value: a * ja1 * jb - b * ja * jb1,
        d_db: nu * (a / b * ja1 * jb + ja * jb1) - r * (a * ja1 * jb1 + b * ja * jb),
    })
}

/// W(a, b; r) / (a² − b²), i.e. (1/r)∫₀ʳ t J_ν(at) J_ν(bt) dt.
///
/// Inside the window |a − b| < [`KERNEL_SINGULAR_WINDOW`]·max(a, b) the
/// removable singularity is replaced by the analytic limit −(∂W/∂b)/(2a),
/// evaluated at the midpoint; the kernel is symmetric in (a, b), so the
/// midpoint value is accurate to second order in a − b.
pub fn wronskian_kernel(order: BesselOrder, a: f64, b: f64, r: f64) -> Result<f64> {
    check_positive("wronskian_kernel", "a", a)?;
    check_positive("wronskian_kernel", "b", b)?;
    check_positive("wronskian_kernel", "r", r)?;
    if (a - b).abs() < KERNEL_SINGULAR_WINDOW * a.max(b) {
        let m = 0.5 * (a + b);
        let at = cylinder_pair_at(order, m, m, r)?;
        return Ok(-at.d_db / (2.0 * m));
    }
    // fixed argument order so the rounding is symmetric too
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    let w = cylinder_pair_at(order, hi, lo, r)?;
    Ok(w.value / ((hi - lo) * (hi + lo)))
}

/// ln(sinh x) for x ≥ 0 without overflow; returns −∞ at x = 0.
pub fn log_sinh(x: f64) -> Result<f64> {
    if x.is_nan() || x < 0.0 {
        return Err(Error::domain("log_sinh", format!("argument {x} must be >= 0")));
    }
    Ok(if x == 0.0 {
        f64::NEG_INFINITY
    } else if x < 1e-4 {
        let x2 = x * x;
        x.ln() + x2 / 6.0 - x2 * x2 / 180.0
    } else if x > 20.0 {
        x - LN_2 + (-(-2.0 * x).exp()).ln_1p()
    } else {
        x.sinh().ln()
    })
}
