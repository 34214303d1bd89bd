//! Spherical Bessel functions and the Wronskian kernel, including its
//! removable singularity at equal wavenumbers.
//!
//! cargo run --example special_functions

use dielectric_casimir::specfun::{spherical_j, spherical_y, wronskian_kernel, BesselOrder};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>4} {:>8} {:>16} {:>16}", "l", "x", "j_l", "y_l");
    for l in [0, 1, 5, 20] {
        for x in [0.5, 10.0, 50.0] {
            println!("{l:>4} {x:>8} {:>16.9e} {:>16.9e}", spherical_j(l, x)?, spherical_y(l, x)?);
        }
    }

    // cross product j_l·y_{l-1} − j_{l-1}·y_l = 1/x²
    let (l, x) = (7, 3.7);
    let cross = spherical_j(l, x)? * spherical_y(l - 1, x)? - spherical_j(l - 1, x)? * spherical_y(l, x)?;
    println!("\ncross product · x² = {:.15}", cross * x * x);

    let order = BesselOrder::new(4);
    let (a, r) = (2.0e7, 500e-9);
    println!("\nkernel near b = a (ν = {}):", order.nu());
    for s in [0.99, 1.0 - 1e-6, 1.0, 1.0 + 1e-6, 1.01] {
        println!("  b/a = {s:<10} {:.12e}", wronskian_kernel(order, a, a * s, r)?);
    }
    Ok(())
}
