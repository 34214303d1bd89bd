//! The two initial indices that give 10⁶ photons, as n_out runs from 1 to 100.
//!
//! cargo run --example figure1_branches

use dielectric_casimir::inverse::{linear_grid, solve_n_in, sweep_figure1};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n_out in [12.0, 25.0] {
        let p = solve_n_in(n_out, 1e6, 1.3, 15.0)?;
        println!("n_out = {n_out}: n_in = {:.4} or {:.3}", p.n_in_low, p.n_in_high);
    }
    println!();
    println!("{:>8} {:>10} {:>10}", "n_out", "low", "high");
    let grid = linear_grid(1.0, 100.0, 12)?;
    for row in sweep_figure1(1e6, 1.3, 15.0, &grid)? {
        println!("{:>8.2} {:>10.4} {:>10.3}", row.n_out, row.branches.n_in_low, row.branches.n_in_high);
    }
    Ok(())
}
