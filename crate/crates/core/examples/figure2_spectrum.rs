//! Finite-sphere spectrum against the infinite-volume spectrum for a gas
//! going from n = 2·10⁴ to vacuum, printed against x = ω_out·n_out·R/c.
//! The infinite-volume curve stops at the cutoff; the finite one leaks past it.
//!
//! cargo run --release --example figure2_spectrum

use dielectric_casimir::bubble::{spectrum_finite, FiniteSpectrumConfig};
use dielectric_casimir::homogeneous::spectrum_infinite;
use dielectric_casimir::model::{BubbleGeometry, MediumTransition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let transition = MediumTransition::new(2e4, 1.0, 1e-15)?;
    let geometry = BubbleGeometry::from_cutoff_product(500e-9, 1.3, 15.0, 1.0)?;
    let finite = spectrum_finite(&transition, &geometry, &FiniteSpectrumConfig::default())?;
    let x = finite.density.dimensionless_x().unwrap();
    println!("# cut at x = {:.3}", geometry.k_gas_cutoff_r());
    println!("{:>8} {:>13} {:>13}", "x", "finite", "infinite");
    let rows = x.iter().zip(finite.density.grid()).zip(finite.density.values());
    for ((x, w), v) in rows.step_by(20) {
        println!("{x:>8.3} {v:>13.5e} {:>13.5e}", spectrum_infinite(&transition, &geometry, *w)?);
    }
    Ok(())
}
