//! Matches one radial mode across the bubble wall and checks continuity of
//! the field and its slope.
//!
//! cargo run --example mode_matching

use dielectric_casimir::bubble::{finite_kernel, match_modes};
use dielectric_casimir::units::SPEED_OF_LIGHT;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (r, n_gas, n_liquid) = (500e-9, 12.0, 1.3);
    for (l, x) in [(1, 3.3), (4, 9.0), (10, 14.2)] {
        let omega = x * SPEED_OF_LIGHT / (n_gas * r);
        let m = match_modes(l, omega, n_gas, n_liquid, r)?;
        let (f_in, d_in) = m.interior_at_wall();
        let (f_out, d_out) = m.exterior_at_wall();
        println!(
            "l={l:>2} x={x:>5}: B={:+.5e} C={:+.5e} ρ={:.4e}  Δf={:.1e} Δf'R={:.1e}",
            m.amp_regular,
            m.amp_irregular,
            m.density_ratio(),
            (f_in - f_out).abs(),
            ((d_in - d_out) * r).abs()
        );
    }

    // kernel across ω_in = (n_out/n_in)·ω_out, where the Wronskian quotient is 0/0
    let (n_in, n_out, l) = (9.0, 25.0, 3);
    let w_out = 6.0 * SPEED_OF_LIGHT / (n_out * r);
    let w_res = n_out / n_in * w_out;
    for s in [1.0 - 1e-6, 1.0 - 1e-7, 1.0, 1.0 + 1e-7, 1.0 + 1e-6] {
        let k = finite_kernel(l, w_res * s, w_out, n_in, n_out, n_liquid, r)?;
        println!("ω_in/ω_res = {s:.7}: kernel {k:.9e}");
    }
    Ok(())
}
