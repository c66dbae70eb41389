//! Exact comparison tables for double stars and paths.

use std::ops::RangeInclusive;

use super::csv::{fmt_sig, CsvTable};
use super::HarnessError;
use crate::bounds::{
    arizmendi_juarez, koolen_moulton, koolen_moulton_bipartite, mcclelland, tree_star_bound,
};
use crate::graph::{double_star, path, Graph};
use crate::spectral::{energy, energy_double_star, energy_path};

/// Largest disagreement tolerated between a closed-form energy and the
/// eigensolver when a table cross-checks them.
pub const CROSS_CHECK_TOL: f64 = 1e-6;

/// One row of a comparison table; `key` is `q` for double stars and `n`
/// for paths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub key: usize,
    pub energy: f64,
    pub thm31: f64,
    pub km1: f64,
    pub km2: f64,
    pub aj: f64,
    pub mcclelland: f64,
}

fn row(key: usize, g: &Graph, energy: f64) -> Result<TableRow, HarnessError> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    let degrees = g.degrees();
    Ok(TableRow {
        key,
        energy,
        thm31: tree_star_bound(&degrees)?,
        km1: koolen_moulton(n, m)?,
        km2: koolen_moulton_bipartite(n, m)?,
        aj: arizmendi_juarez(&degrees),
        mcclelland: mcclelland(n, m),
    })
}

fn cross_check(g: &Graph, closed: f64) -> Result<(), HarnessError> {
    let numeric = energy(g);
    if (numeric - closed).abs() > CROSS_CHECK_TOL {
        return Err(HarnessError::CrossCheck {
            n: g.vertex_count(),
            closed,
            numeric,
        });
    }
    Ok(())
}

/// Rows for the double stars `S_{p,q}`, `q` in `qs`, with energies from the
/// closed form (cross-checked against the eigensolver).
pub fn run_double_star_table(
    p: usize,
    qs: RangeInclusive<usize>,
) -> Result<Vec<TableRow>, HarnessError> {
    qs.map(|q| {
        let g = double_star(p, q)?;
        let e = energy_double_star(p, q)?;
        cross_check(&g, e)?;
        row(q, &g, e)
    })
    .collect()
}

/// Rows for the paths `P_n`, `n` in `ns` (each `n >= 2`), with energies from
/// the closed form (cross-checked against the eigensolver).
pub fn run_path_table(ns: RangeInclusive<usize>) -> Result<Vec<TableRow>, HarnessError> {
    ns.map(|n| {
        if n < 2 {
            return Err(HarnessError::Config(format!("path table needs n >= 2, got {n}")));
        }
        let g = path(n)?;
        let e = energy_path(n)?;
        cross_check(&g, e)?;
        row(n, &g, e)
    })
    .collect()
}

/// Renders table rows under a header whose first column is `key_name`.
pub fn table_csv(key_name: &str, rows: &[TableRow]) -> CsvTable {
    let mut t = CsvTable::new([key_name, "energy", "thm31", "km1", "km2", "aj", "mcclelland"]);
    for r in rows {
        t.push(vec![
            r.key.to_string(),
            fmt_sig(r.energy),
            fmt_sig(r.thm31),
            fmt_sig(r.km1),
            fmt_sig(r.km2),
            fmt_sig(r.aj),
            fmt_sig(r.mcclelland),
        ]);
    }
    t
}
