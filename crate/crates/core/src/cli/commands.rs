use std::f64::consts::PI;

use super::csv::{num, CsvTable};
use super::params::{Model, Params};
use crate::bubble::{spectrum_finite, totals_from_spectrum, FiniteSpectrum};
use crate::error::{Error, Result};
use crate::homogeneous::{omega_sudden, spectrum_infinite, totals_closed_form, POLARIZATIONS};
use crate::inverse::{linear_grid, photon_count, solve_n_in, sweep_figure1};
use crate::model::{BubbleGeometry, EmissionSummary, MediumTransition};
use crate::units::{joule_to_ev, photon_energy_ev, SPEED_OF_LIGHT};

/// Reference rows: (n_gas_in, n_gas_out, N, ⟨E⟩/ħω_max).
pub const TABLE1: [(f64, f64, f64, f64); 5] = [
    (2e4, 1.0, 1.06e6, 0.803),
    (71.0, 25.0, 1.00e6, 0.750),
    (68.0, 34.0, 1.06e6, 0.751),
    (9.0, 25.0, 0.955e6, 0.750),
    (1.0, 12.0, 0.98e6, 0.765),
];

fn header_lines(command: &str, p: &Params) -> Vec<String> {
    let mut v = vec![
        format!("{} {}", env!("CARGO_PKG_NAME"), env!("CARGO_PKG_VERSION")),
        format!("command = {command}"),
    ];
    v.extend(p.describe());
    v
}

fn geometry_lines(g: &BubbleGeometry) -> Vec<String> {
    vec![
        format!("k_gas_cutoff_r = {:e}", g.k_gas_cutoff_r()),
        format!("omega_max_rad_s = {:e}", g.omega_max()),
        format!("hbar_omega_max_eV = {:e}", photon_energy_ev(g.omega_max())),
    ]
}

fn finite_lines(s: &FiniteSpectrum) -> Vec<String> {
    vec![
        format!("l_used_max = {}", s.l_used.iter().max().copied().unwrap_or(0)),
        format!("max_l_tail_fraction = {:e}", s.max_tail_fraction),
        format!("max_quad_rel_error = {:e}", s.max_quad_error),
        format!("omega_in_range_over_cutoff = {:e}", s.in_range),
        format!("omega_out_range_over_cutoff = {:e}", s.out_range),
    ]
}

pub fn spectrum(p: &Params) -> Result<()> {
    let t = p.transition()?;
    let g = p.geometry(t.n_out())?;
    let model = p.model(Model::Both);
    let cfg = p.finite_config()?;
    let finite = if model.finite() { Some(spectrum_finite(&t, &g, &cfg)?) } else { None };
    let grid: Vec<f64> = match &finite {
        Some(f) => f.density.grid().to_vec(),
        None => {
            let top = if (t.n_out() - 1.0).abs() < 1e-12 { cfg.vacuum_extension } else { 1.0 };
            let n = cfg.grid_len(top);
            (1..=n).map(|j| top * g.omega_max() * j as f64 / n as f64).collect()
        }
    };

    let mut table = CsvTable::new(&["x", "omega_out_rad_s", "nu_Hz", "dNdomega_infinite", "dNdomega_finite"]);
    header_lines("spectrum", p).into_iter().for_each(|l| table.comment(l));
    geometry_lines(&g).into_iter().for_each(|l| table.comment(l));
    table.comment(format!("polarizations = {POLARIZATIONS}"));
    if let Some(f) = &finite {
        Params::describe_finite(&cfg).into_iter().for_each(|l| table.comment(l));
        finite_lines(f).into_iter().for_each(|l| table.comment(l));
        let s = totals_from_spectrum(f, &t, &g)?;
        table.comment(format!("photon_count_finite = {:e}", s.photon_count));
        table.comment(format!("mean_over_cutoff_finite = {:e}", s.mean_over_cutoff));
    }
    if model.infinite() {
        let s = totals_closed_form(&t, &g)?;
        table.comment(format!("photon_count_infinite = {:e}", s.photon_count));
    }
    for (i, &w) in grid.iter().enumerate() {
        let x = t.n_out() * w * g.radius() / SPEED_OF_LIGHT;
        let inf = if model.infinite() { Some(spectrum_infinite(&t, &g, w)?) } else { None };
        let fin = finite.as_ref().map(|f| f.density.values()[i]);
        table.row(vec![num(Some(x)), num(Some(w)), num(Some(w / (2.0 * PI))), num(inf), num(fin)]);
    }
    table.write(p.output())
}

fn print_summary(label: &str, s: &EmissionSummary) {
    println!(
        "{label:<9} N = {:.6e}  E = {:.6e} J ({:.6e} eV)  <E> = {:.4} eV  <E>/hbar*omega_max = {:.4}",
        s.photon_count,
        s.total_energy,
        joule_to_ev(s.total_energy),
        joule_to_ev(s.mean_energy),
        s.mean_over_cutoff
    );
}

pub fn totals(p: &Params) -> Result<()> {
    let t = p.transition()?;
    let g = p.geometry(t.n_out())?;
    let model = p.model(Model::Both);
    let mut results = Vec::new();
    if model.infinite() {
        results.push(("infinite", totals_closed_form(&t, &g)?));
    }
    if model.finite() {
        let cfg = p.finite_config()?;
        let s = spectrum_finite(&t, &g, &cfg)?;
        results.push(("finite", totals_from_spectrum(&s, &t, &g)?));
    }
    println!(
        "n_in = {}  n_out = {}  K*R = {:.4}  hbar*omega_max = {:.4} eV  Omega_sudden = {:.4e} rad/s",
        t.n_in(),
        t.n_out(),
        g.k_gas_cutoff_r(),
        photon_energy_ev(g.omega_max()),
        omega_sudden(&t).omega_sudden
    );
    for (label, s) in &results {
        print_summary(label, s);
    }
    if let Some(path) = p.output() {
        let mut table = CsvTable::new(&["model", "photon_count", "total_energy_J", "mean_energy_eV", "mean_over_cutoff"]);
        header_lines("totals", p).into_iter().for_each(|l| table.comment(l));
        geometry_lines(&g).into_iter().for_each(|l| table.comment(l));
        for (label, s) in &results {
            table.row(vec![
                label.to_string(),
                num(Some(s.photon_count)),
                num(Some(s.total_energy)),
                num(Some(joule_to_ev(s.mean_energy))),
                num(Some(s.mean_over_cutoff)),
            ]);
        }
        table.write(Some(path))?;
    }
    Ok(())
}

pub fn solve_nin(p: &Params) -> Result<()> {
    let n_out = p.n_out()?;
    let target = p.target();
    let k = p.kobs_r()?;
    let pair = solve_n_in(n_out, target, p.n_liquid(), k)?;
    println!("n_out = {n_out}  target N = {target:e}  n_liquid = {}  K_obs*R = {k}", p.n_liquid());
    let mut rows = Vec::new();
    for (label, root) in [("low", pair.n_in_low), ("high", pair.n_in_high)] {
        let residual = (photon_count(root, n_out, p.n_liquid(), k) - target).abs() / target;
        println!("n_in_{label:<4} = {root:.6}  (relative residual {residual:.1e})");
        rows.push((label, root, residual));
    }
    if let Some(model) = p.model {
        if model.finite() {
            let cfg = p.finite_config()?;
            for &(label, root, _) in &rows {
                let mut q = p.clone();
                q.n_gas_in = Some(root);
                let t = q.transition()?;
                let g = q.geometry(n_out)?;
                let s = spectrum_finite(&t, &g, &cfg)?;
                let s = totals_from_spectrum(&s, &t, &g)?;
                println!(
                    "finite-volume check ({label}): N = {:.4e}  <E>/hbar*omega_max = {:.4}",
                    s.photon_count, s.mean_over_cutoff
                );
            }
        }
    }
    if let Some(path) = p.output() {
        let mut table = CsvTable::new(&["branch", "n_in", "relative_residual"]);
        header_lines("solve-nin", p).into_iter().for_each(|l| table.comment(l));
        table.comment(format!("target = {target:e}"));
        for (label, root, residual) in rows {
            table.row(vec![label.to_string(), num(Some(root)), num(Some(residual))]);
        }
        table.write(Some(path))?;
    }
    Ok(())
}

pub fn sweep(p: &Params) -> Result<()> {
    let lo = p.n_out_min.unwrap_or(1.0);
    let hi = p.n_out_max.unwrap_or(100.0);
    let points = p.points.unwrap_or(200);
    let grid = linear_grid(lo, hi, points)?;
    let k = p.kobs_r()?;
    let rows = sweep_figure1(p.target(), p.n_liquid(), k, &grid)?;
    let mut table = CsvTable::new(&["n_out", "n_in_low", "n_in_high"]);
    header_lines("sweep", p).into_iter().for_each(|l| table.comment(l));
    table.comment(format!("target = {:e}", p.target()));
    table.comment(format!("n_out_grid = linear [{lo:e}, {hi:e}] with {points} points"));
    for r in rows {
        table.row(vec![
            num(Some(r.n_out)),
            num(Some(r.branches.n_in_low)),
            num(Some(r.branches.n_in_high)),
        ]);
    }
    table.write(p.output())
}

struct Table1Row {
    n_in: f64,
    n_out: f64,
    n_ref: f64,
    mean_ref: f64,
    outcome: Result<(EmissionSummary, EmissionSummary)>,
}

fn table1_row(p: &Params, n_in: f64, n_out: f64) -> Result<(EmissionSummary, EmissionSummary)> {
    let mut q = p.clone();
    q.n_gas_in = Some(n_in);
    q.n_gas_out = Some(n_out);
    let t: MediumTransition = q.transition()?;
    let g = q.geometry(n_out)?;
    let cfg = q.finite_config()?;
    let s = spectrum_finite(&t, &g, &cfg)?;
    Ok((totals_from_spectrum(&s, &t, &g)?, totals_closed_form(&t, &g)?))
}

pub fn table1(p: &Params) -> Result<()> {
    let rows: Vec<Table1Row> = TABLE1
        .iter()
        .map(|&(n_in, n_out, n_ref, mean_ref)| Table1Row {
            n_in,
            n_out,
            n_ref,
            mean_ref,
            outcome: table1_row(p, n_in, n_out),
        })
        .collect();
    println!(
        "{:>8} {:>6} | {:>10} {:>10} {:>7} | {:>7} {:>7} {:>7} | {:>10} {:>7}",
        "n_in", "n_out", "N", "N paper", "dev", "<E>/hw", "paper", "dev", "N closed", "fin/cl"
    );
    let mut table = CsvTable::new(&[
        "n_gas_in",
        "n_gas_out",
        "photon_count",
        "photon_count_paper",
        "photon_count_rel_dev",
        "mean_over_cutoff",
        "mean_over_cutoff_paper",
        "mean_over_cutoff_dev",
        "photon_count_closed_form",
        "finite_over_closed",
    ]);
    header_lines("table1", p).into_iter().for_each(|l| table.comment(l));
    Params::describe_finite(&p.finite_config()?).into_iter().for_each(|l| table.comment(l));
    let mut failures = Vec::new();
    for r in &rows {
        match &r.outcome {
            Ok((fin, closed)) => {
                let dev_n = fin.photon_count / r.n_ref - 1.0;
                let dev_m = fin.mean_over_cutoff - r.mean_ref;
                let ratio = fin.photon_count / closed.photon_count;
                println!(
                    "{:>8} {:>6} | {:>10.4e} {:>10.4e} {:>+6.1}% | {:>7.4} {:>7.3} {:>+7.4} | {:>10.4e} {:>7.4}",
                    r.n_in,
                    r.n_out,
                    fin.photon_count,
                    r.n_ref,
                    100.0 * dev_n,
                    fin.mean_over_cutoff,
                    r.mean_ref,
                    dev_m,
                    closed.photon_count,
                    ratio
                );
                table.row(vec![
                    num(Some(r.n_in)),
                    num(Some(r.n_out)),
                    num(Some(fin.photon_count)),
                    num(Some(r.n_ref)),
                    num(Some(dev_n)),
                    num(Some(fin.mean_over_cutoff)),
                    num(Some(r.mean_ref)),
                    num(Some(dev_m)),
                    num(Some(closed.photon_count)),
                    num(Some(ratio)),
                ]);
            }
            Err(e) => {
                println!("{:>8} {:>6} | FAILED: {e}", r.n_in, r.n_out);
                let mut cells = vec![num(Some(r.n_in)), num(Some(r.n_out))];
                cells.extend((0..8).map(|_| String::new()));
                table.row(cells);
                failures.push(format!("({}, {}): {e}", r.n_in, r.n_out));
            }
        }
    }
    if let Some(path) = p.output() {
        table.write(Some(path))?;
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Error::Numerical(format!("table rows failed: {}", failures.join("; "))))
    }
}
