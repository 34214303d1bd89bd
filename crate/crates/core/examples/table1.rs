//! Photon count and mean photon energy for the five reference index pairs,
//! in the finite sphere and in the infinite-volume limit.
//!
//! cargo run --release --example table1

use std::time::Instant;

use dielectric_casimir::bubble::{spectrum_finite, totals_from_spectrum, FiniteSpectrumConfig};
use dielectric_casimir::homogeneous::totals_closed_form;
use dielectric_casimir::model::{BubbleGeometry, MediumTransition};

const ROWS: [(f64, f64, f64, f64); 5] = [
    (2e4, 1.0, 1.06e6, 0.803),
    (71.0, 25.0, 1.00e6, 0.750),
    (68.0, 34.0, 1.06e6, 0.751),
    (9.0, 25.0, 0.955e6, 0.750),
    (1.0, 12.0, 0.98e6, 0.765),
];

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = FiniteSpectrumConfig::default();
    println!(
        "{:>8} {:>6} {:>11} {:>11} {:>8} {:>8} {:>8} {:>6} {:>7}",
        "n_in", "n_out", "N", "N_closed", "ratio", "<E>/hw", "ref", "l_max", "secs"
    );
    for (n_in, n_out, n_ref, mean_ref) in ROWS {
        let start = Instant::now();
        let transition = MediumTransition::new(n_in, n_out, 1e-15)?;
        let geometry = BubbleGeometry::from_cutoff_product(500e-9, 1.3, 15.0, n_out)?;
        let spectrum = spectrum_finite(&transition, &geometry, &config)?;
        let finite = totals_from_spectrum(&spectrum, &transition, &geometry)?;
        let closed = totals_closed_form(&transition, &geometry)?;
        println!(
            "{:>8} {:>6} {:>11.4e} {:>11.4e} {:>8.4} {:>8.4} {:>8.3} {:>6} {:>7.1}",
            n_in,
            n_out,
            finite.photon_count,
            closed.photon_count,
            finite.photon_count / closed.photon_count,
            finite.mean_over_cutoff,
            mean_ref,
            spectrum.l_used.iter().max().unwrap_or(&0),
            start.elapsed().as_secs_f64()
        );
        let _ = n_ref;
    }
    Ok(())
}
