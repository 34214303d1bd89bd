//! Exact power-series referee for the spherical Bessel functions.
//!
//! Every f64 is a dyadic rational, so the series can be summed in exact
//! rational arithmetic and rounded once at the end. Slow, but it shares no
//! code path with the recurrences it checks.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn exact(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite argument")
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn double_factorial_odd(n: i64) -> BigRational {
    // (2n-1)!! for n >= 0, with (-1)!! = 1
    let mut acc = BigInt::one();
    let mut k = 2 * n - 1;
    while k > 1 {
        acc *= BigInt::from(k);
        k -= 2;
    }
    BigRational::from_integer(acc)
}

fn pow(base: &BigRational, e: i64) -> BigRational {
    let mut acc = BigRational::one();
    let b = if e >= 0 { base.clone() } else { base.recip() };
    for _ in 0..e.abs() {
        acc *= &b;
    }
    acc
}

fn converged(term: &BigRational, sum: &BigRational, k: i64, x: f64) -> bool {
    if (k as f64) < x + 5.0 {
        return false;
    }
    let t = term.abs().to_f64().unwrap_or(f64::INFINITY);
    let s = sum.abs().to_f64().unwrap_or(0.0);
    t <= 1e-40 * s || t == 0.0
}

/// j_l(x) = x^l Σ_k (−x²/2)^k / (k! (2l+2k+1)!!)
pub fn spherical_j(l: usize, x: f64) -> f64 {
    let l = l as i64;
    if x == 0.0 {
        return if l == 0 { 1.0 } else { 0.0 };
    }
    let xr = exact(x);
    let ratio = -(&xr * &xr) / int(2);
    let mut term = pow(&xr, l) / double_factorial_odd(l + 1);
    let mut sum = BigRational::zero();
    let mut k = 0;
    loop {
        sum += &term;
        k += 1;
        term = term * &ratio / (int(k) * int(2 * l + 2 * k + 1));
        if converged(&term, &sum, k, x) {
            break;
        }
    }
    sum.to_f64().unwrap()
}

/// Γ(m + ½)/√π as an exact rational, for any integer m.
fn half_gamma_over_sqrt_pi(m: i64) -> BigRational {
    if m >= 0 {
        double_factorial_odd(m) / pow(&int(2), m)
    } else {
        let n = -m;
        pow(&int(-2), n) / double_factorial_odd(n)
    }
}

/// y_l(x) = (−1)^{l+1} √(π/2x) J_{−l−½}(x), summed term by term.
///
/// Term k is (−1)^k (x/2)^{2k−l} / (x·k!·Γ(k−l+½)/√π); consecutive terms
/// differ by the factor −(x/2)²/(k·(k − l − ½)).
pub fn spherical_y(l: usize, x: f64) -> f64 {
    assert!(x > 0.0);
    let l = l as i64;
    let xr = exact(x);
    let half = &xr / int(2);
    let ratio = -(&half * &half);
    let mut term = pow(&half, -l) / (&xr * half_gamma_over_sqrt_pi(-l));
    let mut sum = BigRational::zero();
    let mut k = 0i64;
    loop {
        sum += &term;
        k += 1;
        // k − l − ½ = (2k − 2l − 1)/2
        term = term * &ratio * int(2) / (int(k) * int(2 * k - 2 * l - 1));
        if k > l && converged(&term, &sum, k, x) {
            break;
        }
    }
    let sign = if (l + 1) % 2 == 0 { 1.0 } else { -1.0 };
    sign * sum.to_f64().unwrap()
}

/// (1/r)∫₀ʳ t J_ν(at) J_ν(bt) dt for ν = l + ½, from the exact series.
///
/// Uses J_ν(z) = √(2z/π) j_l(z) and J′_ν = J_{ν−1} − (ν/z) J_ν; the quotient
/// is formed in f64 from exactly rounded factors.
pub fn wronskian_kernel(l: usize, a: f64, b: f64, r: f64) -> f64 {
    let nu = l as f64 + 0.5;
    let cyl = |z: f64| -> (f64, f64) {
        let f = (2.0 * z / std::f64::consts::PI).sqrt();
        let j = f * spherical_j(l, z);
        let lower = if l == 0 { f * z.cos() / z } else { f * spherical_j(l - 1, z) };
        (j, lower - nu / z * j)
    };
    let (ja, dja) = cyl(a * r);
    let (jb, djb) = cyl(b * r);
    (b * ja * djb - a * dja * jb) / (a * a - b * b)
}
