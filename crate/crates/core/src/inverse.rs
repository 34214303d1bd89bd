//! Inverting the closed-form photon count for the initial index.
//!
//! N = C0/n_l³·(n_out − n_in)²·n_out²/n_in is rational in n_in, and for a
//! fixed target it becomes n_in² − (2n_out + Λ)·n_in + n_out² = 0 with
//! Λ = N·n_l³/(C0·n_out²). The two roots are the two branches of the
//! n_in(n_out) curve and are exchanged by n_in → n_out²/n_in.

use std::f64::consts::PI;

use crate::error::{require_positive, Error, Result};

/// Both roots of the count quadratic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchPair {
    pub n_in_low: f64,
    pub n_in_high: f64,
    /// Λ(4n_out + Λ), the reduced discriminant.
    pub discriminant: f64,
}

/// Closed-form photon count as a function of the liquid-side cutoff product.
pub fn photon_count(n_in: f64, n_out: f64, n_liquid: f64, k_obs_r: f64) -> f64 {
    let c0 = k_obs_r.powi(3) / (9.0 * PI);
    c0 / n_liquid.powi(3) * (n_out - n_in).powi(2) * n_out * n_out / n_in
}

/// Both initial indices giving `target` photons for the final index `n_out`.
pub fn solve_n_in(n_out: f64, target: f64, n_liquid: f64, k_obs_r: f64) -> Result<BranchPair> {
    let n_out = require_positive("n_out", n_out)?;
    let target = require_positive("target", target)?;
    let n_liquid = require_positive("n_liquid", n_liquid)?;
    let k_obs_r = require_positive("k_obs_r", k_obs_r)?;
    let c0 = k_obs_r.powi(3) / (9.0 * PI);
    let lambda = target * n_liquid.powi(3) / (c0 * n_out * n_out);
    let discriminant = lambda * (4.0 * n_out + lambda);
    if !(discriminant.is_finite() && discriminant >= 0.0) {
        return Err(Error::Numerical(format!(
            "no real n_in for n_out = {n_out}, target = {target} (discriminant {discriminant})"
        )));
    }
    // larger root directly, smaller one through the product to avoid cancellation
    let n_in_high = 0.5 * ((2.0 * n_out + lambda) + discriminant.sqrt());
    Ok(BranchPair {
        n_in_low: n_out * n_out / n_in_high,
        n_in_high,
        discriminant,
    })
}

/// One row of the two-branch curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub n_out: f64,
    pub branches: BranchPair,
}

/// `points` values of n_out evenly spaced over [lo, hi].
pub fn linear_grid(lo: f64, hi: f64, points: usize) -> Result<Vec<f64>> {
    require_positive("n_out_min", lo)?;
    if !(hi.is_finite() && hi > lo) {
        return Err(Error::invalid("n_out_max", format!("{hi} must exceed n_out_min = {lo}")));
    }
    if points < 2 {
        return Err(Error::invalid("points", format!("{points} must be >= 2")));
    }
    let step = (hi - lo) / (points - 1) as f64;
    Ok((0..points)
        .map(|i| if i + 1 == points { hi } else { lo + i as f64 * step })
        .collect())
}

/// Solves across a strictly increasing grid of final indices.
pub fn sweep_figure1(
    target: f64,
    n_liquid: f64,
    k_obs_r: f64,
    n_out_grid: &[f64],
) -> Result<Vec<SweepRow>> {
    if n_out_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::invalid("n_out_grid", "must be strictly increasing"));
    }
    n_out_grid
        .iter()
        .map(|&n_out| {
            let branches = solve_n_in(n_out, target, n_liquid, k_obs_r)?;
            let product = branches.n_in_low * branches.n_in_high;
            if (product - n_out * n_out).abs() > 1e-10 * n_out * n_out {
                return Err(Error::Numerical(format!(
                    "branch product {product} differs from n_out² at n_out = {n_out}"
                )));
            }
            Ok(SweepRow { n_out, branches })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn paper_pairs() {
        let p = solve_n_in(12.0, 1e6, 1.3, 15.0).unwrap();
        assert!(rel(p.n_in_low, 0.955) < 5e-3, "{p:?}");
        assert!(rel(p.n_in_high, 150.8) < 5e-3, "{p:?}");
        let p = solve_n_in(25.0, 1e6, 1.3, 15.0).unwrap();
        // 70.7 is what the rounded prefactor 119 gives; 15³/(9π) = 119.37
        assert!(rel(p.n_in_low, 8.85) < 5e-3, "{p:?}");
        assert!(rel(p.n_in_high, 70.7) < 5e-3, "{p:?}");
    }

    #[test]
    fn back_substitution() {
        for n_out in [0.5, 1.0, 12.0, 25.0, 99.0] {
            let p = solve_n_in(n_out, 1e6, 1.3, 15.0).unwrap();
            for root in [p.n_in_low, p.n_in_high] {
                assert!(rel(photon_count(root, n_out, 1.3, 15.0), 1e6) < 1e-8);
            }
        }
    }

    #[test]
    fn tiny_target_gives_double_root() {
        let p = solve_n_in(7.0, 1e-12, 1.3, 15.0).unwrap();
        assert!(rel(p.n_in_low, 7.0) < 1e-6 && rel(p.n_in_high, 7.0) < 1e-6);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(solve_n_in(0.0, 1e6, 1.3, 15.0).is_err());
        assert!(solve_n_in(5.0, -1.0, 1.3, 15.0).is_err());
        assert!(sweep_figure1(1e6, 1.3, 15.0, &[2.0, 1.0]).is_err());
        assert!(linear_grid(1.0, 1.0, 10).is_err());
    }

    #[test]
    fn default_grid_ends_exactly() {
        let g = linear_grid(1.0, 100.0, 200).unwrap();
        assert_eq!(g.len(), 200);
        assert_eq!((g[0], g[199]), (1.0, 100.0));
    }
}
