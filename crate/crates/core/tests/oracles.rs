//! Fast special functions against the exact-series referee.

mod common;

use common::{fd_wronskian, rel, series};
use dielectric_casimir::specfun::{
    cylinder_j_half, cylinder_pair_at, spherical_j, spherical_y, wronskian_kernel, BesselOrder,
};

const ARGS: [f64; 9] = [0.1, 0.75, 2.5, 5.0, 10.0, 17.3, 42.0, 77.7, 100.0];

#[test]
fn j_matches_series() {
    let mut worst: f64 = 0.0;
    for l in [0, 1, 2, 5, 9, 17, 30] {
        for x in ARGS {
            let exact = series::spherical_j(l, x);
            worst = worst.max(rel(spherical_j(l, x).unwrap(), exact));
        }
    }
    assert!(worst < 1e-12, "worst relative error {worst:e}");
}

#[test]
fn j_matches_series_at_high_order() {
    for (l, x) in [(60, 10.0), (120, 40.0), (200, 150.0), (150, 400.0), (400, 390.0)] {
        let exact = series::spherical_j(l, x);
        let e = rel(spherical_j(l, x).unwrap(), exact);
        assert!(e < 1e-12, "l = {l}, x = {x}: {e:e}");
    }
}

#[test]
fn y_matches_series() {
    let mut worst: f64 = 0.0;
    for l in [0, 1, 2, 7, 13, 30] {
        for x in ARGS {
            let exact = series::spherical_y(l, x);
            worst = worst.max(rel(spherical_y(l, x).unwrap(), exact));
        }
    }
    assert!(worst < 1e-12, "worst relative error {worst:e}");
}

#[test]
fn series_reproduces_closed_forms() {
    let x = 1.0f64;
    assert!(rel(series::spherical_j(0, x), x.sin() / x) < 1e-15);
    assert!(rel(series::spherical_y(1, x), -1.381_773_290_676_036_3) < 1e-15);
}

#[test]
fn spherical_and_cylinder_agree() {
    for l in [0, 3, 11, 30] {
        for x in ARGS {
            let j = spherical_j(l, x).unwrap();
            let big = cylinder_j_half(BesselOrder::new(l), x).unwrap();
            let via = (std::f64::consts::PI / (2.0 * x)).sqrt() * big;
            assert!(rel(via, j) < 1e-10, "l = {l}, x = {x}");
        }
    }
}

#[test]
fn wronskian_matches_finite_difference() {
    let w = cylinder_pair_at(BesselOrder::new(1), 1e7, 2e7, 5e-7).unwrap().value;
    let fd = fd_wronskian(1, 1e7, 2e7, 5e-7);
    assert!(rel(w, fd) < 1e-9, "{w:e} vs {fd:e}");
}

#[test]
fn kernel_matches_series_quotient() {
    let k = wronskian_kernel(BesselOrder::new(1), 1.0e7, 0.5e7, 5e-7).unwrap();
    let exact = series::wronskian_kernel(1, 1.0e7, 0.5e7, 5e-7);
    assert!(rel(k, exact) < 1e-12, "{k:e} vs {exact:e}");
}
