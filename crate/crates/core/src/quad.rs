//! Adaptive Gauss–Kronrod quadrature with mandatory breakpoints, plus the
//! fixed-grid rules used on sampled spectra.
//!
//! The adaptive integrator is vector valued: one call integrates a whole
//! family of integrands (in practice, one per angular momentum) that share
//! their abscissae. Error control acts on the sum of the components.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

// 15-point Kronrod extension of the 7-point Gauss rule.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Tolerances and limits for [`integrate_vec`].
#[derive(Debug, Clone, Copy)]
pub struct QuadOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_intervals: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1e-8,
            abs_tol: 0.0,
            max_intervals: 20_000,
        }
    }
}

/// Result of a vector-valued integration.
#[derive(Debug, Clone)]
pub struct VecIntegral {
    pub values: Vec<f64>,
    /// Estimated absolute error of the component sum.
    pub error: f64,
    pub intervals: usize,
}

impl VecIntegral {
    pub fn total(&self) -> f64 {
        self.values.iter().sum()
    }
}

struct Interval {
    a: f64,
    b: f64,
    values: Vec<f64>,
    sum: f64,
    error: f64,
}

impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl Eq for Interval {}

impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Interval {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Applies the 15-point rule on [a, b]; `scratch` must hold `dim` values.
fn kronrod_panel<F>(f: &mut F, a: f64, b: f64, dim: usize, scratch: &mut [f64]) -> Interval
where
    F: FnMut(f64, &mut [f64]),
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut values = vec![0.0; dim];
    let mut kronrod_sums = [0.0; 15];
    let mut gauss = 0.0;
    for (i, (&x, &wk)) in XGK.iter().zip(WGK.iter()).enumerate() {
        let nodes: &[f64] = if i == 7 { &[0.0] } else { &[-x, x] };
        for (side, &dx) in nodes.iter().enumerate() {
            f(center + half * dx, scratch);
            let s: f64 = scratch.iter().sum();
            kronrod_sums[2 * i + side] = s;
            for (v, &c) in values.iter_mut().zip(scratch.iter()) {
                *v += wk * c;
            }
            if i % 2 == 1 {
                gauss += WG[i / 2] * s;
            }
        }
    }
    let kronrod: f64 = XGK
        .iter()
        .enumerate()
        .map(|(i, _)| {
            if i == 7 {
                WGK[i] * kronrod_sums[14]
            } else {
                WGK[i] * (kronrod_sums[2 * i] + kronrod_sums[2 * i + 1])
            }
        })
        .sum();
    let mean = 0.5 * kronrod;
    let resasc: f64 = (0..8)
        .map(|i| {
            if i == 7 {
                WGK[i] * (kronrod_sums[14] - mean).abs()
            } else {
                WGK[i] * ((kronrod_sums[2 * i] - mean).abs() + (kronrod_sums[2 * i + 1] - mean).abs())
            }
        })
        .sum::<f64>()
        * half.abs();
    let mut error = ((kronrod - gauss) * half).abs();
    if resasc != 0.0 && error != 0.0 {
        error = resasc * (200.0 * error / resasc).powf(1.5).min(1.0);
    }
    for v in values.iter_mut() {
        *v *= half;
    }
    Interval {
        a,
        b,
        values,
        sum: kronrod * half,
        error,
    }
}

/// Integrates a `dim`-component integrand over `[points[0], points[last]]`.
///
/// Every entry of `points` is an initial subdivision node, so integrable
/// kinks or near-singular ridges placed there are never straddled.
pub fn integrate_vec<F>(mut f: F, points: &[f64], dim: usize, opts: QuadOptions) -> Result<VecIntegral>
where
    F: FnMut(f64, &mut [f64]),
{
    if points.len() < 2 || points.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Numerical(format!(
            "integration breakpoints must be strictly increasing, got {points:?}"
        )));
    }
    let mut scratch = vec![0.0; dim];
    let mut heap: BinaryHeap<Interval> = points
        .windows(2)
        .map(|w| kronrod_panel(&mut f, w[0], w[1], dim, &mut scratch))
        .collect();
    let mut total: f64 = heap.iter().map(|iv| iv.sum).sum();
    let mut error: f64 = heap.iter().map(|iv| iv.error).sum();
    loop {
        if error <= opts.abs_tol.max(opts.rel_tol * total.abs()) {
            let mut values = vec![0.0; dim];
            let intervals = heap.len();
            // Sum in ascending abscissa order so the result does not depend on heap layout.
            let mut sorted = heap.into_vec();
            sorted.sort_by(|p, q| p.a.total_cmp(&q.a));
            for iv in &sorted {
                for (v, c) in values.iter_mut().zip(&iv.values) {
                    *v += c;
                }
            }
            return Ok(VecIntegral {
                values,
                error,
                intervals,
            });
        }
        if heap.len() >= opts.max_intervals {
            return Err(Error::Numerical(format!(
                "adaptive quadrature did not converge in {} intervals (error {error:.3e}, total {total:.6e})",
                opts.max_intervals
            )));
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            return Err(Error::Numerical(format!(
                "adaptive quadrature exhausted floating-point resolution near {mid}"
            )));
        }
        let left = kronrod_panel(&mut f, worst.a, mid, dim, &mut scratch);
        let right = kronrod_panel(&mut f, mid, worst.b, dim, &mut scratch);
        total += left.sum + right.sum - worst.sum;
        error += left.error + right.error - worst.error;
        // guard against drift in the running error
        if error <= opts.abs_tol.max(opts.rel_tol * total.abs()) {
            error = heap.iter().map(|iv| iv.error).sum::<f64>() + left.error + right.error;
        }
        heap.push(left);
        heap.push(right);
    }
}

/// Scalar convenience wrapper around [`integrate_vec`].
pub fn integrate<F>(mut f: F, points: &[f64], opts: QuadOptions) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> f64,
{
    let r = integrate_vec(|x, out: &mut [f64]| out[0] = f(x), points, 1, opts)?;
    Ok((r.values[0], r.error))
}

/// Trapezoidal rule on an arbitrary increasing grid.
pub fn trapezoid(x: &[f64], y: &[f64]) -> f64 {
    let mut sum = NeumaierSum::default();
    for i in 1..x.len().min(y.len()) {
        sum.add(0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]));
    }
    sum.value()
}

/// Trapezoid with one Richardson step on a uniform grid `y[k] = f(k·h)`,
/// `k = 0..=n`. Falls back to the plain trapezoid when `n` is odd.
pub fn richardson_trapezoid(h: f64, y: &[f64]) -> f64 {
    let n = y.len().saturating_sub(1);
    if n == 0 {
        return 0.0;
    }
    let fine = uniform_trapezoid(h, y, 1);
    if n % 2 == 1 || n < 2 {
        return fine;
    }
    let coarse = uniform_trapezoid(2.0 * h, y, 2);
    fine + (fine - coarse) / 3.0
}

fn uniform_trapezoid(h: f64, y: &[f64], stride: usize) -> f64 {
    let n = y.len() - 1;
    let mut sum = NeumaierSum::default();
    sum.add(0.5 * (y[0] + y[n]));
    for k in (stride..n).step_by(stride) {
        sum.add(y[k]);
    }
    h * sum.value()
}

/// Compensated (Neumaier) summation with a fixed, caller-defined order.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.compensation += (self.sum - t) + v;
        } else {
            self.compensation += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = NeumaierSum::default();
        for v in iter {
            s.add(v);
        }
        s
    }
}
