//! |β|² per mode for a 1 fs index ramp: flat at low frequency, exponential
//! fall-off far above the sudden scale.
//!
//! cargo run --example sudden_limit_tail

use dielectric_casimir::homogeneous::{
    beta_sq_density, ln_beta_sq_density, omega_sudden, sudden_beta_sq, tail_log_slope,
};
use dielectric_casimir::model::MediumTransition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = MediumTransition::new(9.0, 25.0, 1e-15)?;
    let scale = omega_sudden(&t).omega_sudden;
    println!("sudden |β|² = {:.6}", sudden_beta_sq(&t));
    println!("Ω_sudden    = {scale:.4e} rad/s");
    println!("{:>10} {:>14} {:>12}", "ω/Ω", "|β|²", "ln|β|²");
    for f in [1e-4, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0] {
        let d = beta_sq_density(&t, f * scale)?;
        println!("{f:>10} {:>14.6e} {:>12.4}", d.value, d.ln_value);
    }

    let (w1, w2) = (20.0 * scale, 21.0 * scale);
    let fitted = (ln_beta_sq_density(&t, w2)? - ln_beta_sq_density(&t, w1)?) / (w2 - w1);
    println!("tail slope: {fitted:.6e} s (asymptote {:.6e} s)", tail_log_slope(&t));
    Ok(())
}
