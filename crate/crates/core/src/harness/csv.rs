use std::io::{Read, Write};

use super::config::{Dimension, ScatterConfig};
use super::run::{points_per_wavelength, SweepRow};
use crate::assembly::BoundaryKind;
use crate::error::{Error, Result};

/// Column order of every results table.
pub const COLUMNS: [&str; 20] = [
    "dimension",
    "scatterer",
    "Z",
    "k",
    "r_0",
    "R",
    "abc",
    "NT",
    "p",
    "N",
    "m",
    "DOF",
    "err_domain",
    "err_boundary",
    "err_ffp",
    "residual",
    "seconds",
    "h",
    "n_lambda",
    "status",
];

fn io(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}

fn sci(v: f64) -> String {
    format!("{v:.6e}")
}

fn abc_column(cfg: &ScatterConfig) -> String {
    cfg.abc_label().replace('-', "")
}

fn config_columns(cfg: &ScatterConfig) -> Vec<String> {
    vec![
        match cfg.dimension {
            Dimension::Planar => "2D",
            Dimension::Axisymmetric => "3D-axisym",
        }
        .to_string(),
        cfg.scatterer_label().to_string(),
        if cfg.boundary == BoundaryKind::Soft { "0" } else { "1" }.to_string(),
        format!("{:?}", cfg.k),
        format!("{:?}", cfg.r0),
        format!("{:?}", cfg.r_outer),
        abc_column(cfg),
        cfg.terms.to_string(),
        cfg.degree.to_string(),
    ]
}

/// Write one line per row in the given order. Failed rows keep their
/// configuration columns, leave metrics empty and carry the error in
/// `status`; `seconds` is empty unless the row's configuration enables timing.
pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(COLUMNS).map_err(io)?;
    for row in rows {
        let mut rec = config_columns(&row.config);
        let n_lambda = points_per_wavelength(&row.config).map(|n| format!("{n:?}")).unwrap_or_default();
        match &row.result {
            Ok(r) => {
                rec.extend([
                    r.radial_count.to_string(),
                    r.angular_count.to_string(),
                    r.dofs.to_string(),
                    sci(r.errors.domain),
                    sci(r.errors.boundary),
                    r.errors.ffp.map(sci).unwrap_or_default(),
                    sci(r.residual),
                    if row.config.timing { format!("{:.4}", r.seconds) } else { String::new() },
                    format!("{:.6e}", r.mesh_size),
                    n_lambda,
                    "ok".into(),
                ]);
            }
            Err(e) => {
                rec.extend(std::iter::repeat(String::new()).take(9));
                rec.push(n_lambda);
                rec.push(format!("error: {e}"));
            }
        }
        w.write_record(&rec).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

fn grid_value(cfg: &ScatterConfig, key: &str) -> String {
    match key {
        "NT" => cfg.terms.to_string(),
        "p" => cfg.degree.to_string(),
        _ => points_per_wavelength(cfg).map(|n| format!("{n:?}")).unwrap_or_default(),
    }
}

/// Matrix of FFP errors: one line per `row_key` value, one column per
/// `col_key` value; failed cells are empty.
pub fn write_surface_csv<W: Write>(rows: &[SweepRow], row_key: &str, col_key: &str, out: W) -> Result<()> {
    let mut row_vals: Vec<String> = Vec::new();
    let mut col_vals: Vec<String> = Vec::new();
    for r in rows {
        let (a, b) = (grid_value(&r.config, row_key), grid_value(&r.config, col_key));
        if !row_vals.contains(&a) {
            row_vals.push(a);
        }
        if !col_vals.contains(&b) {
            col_vals.push(b);
        }
    }
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec![format!("{row_key}\\{col_key}")];
    header.extend(col_vals.iter().cloned());
    w.write_record(&header).map_err(io)?;
    for a in &row_vals {
        let mut rec = vec![a.clone()];
        for b in &col_vals {
            let cell = rows
                .iter()
                .find(|r| &grid_value(&r.config, row_key) == a && &grid_value(&r.config, col_key) == b)
                .and_then(|r| r.result.as_ref().ok())
                .and_then(|r| r.errors.ffp)
                .map(sci)
                .unwrap_or_default();
            rec.push(cell);
        }
        w.write_record(&rec).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

/// A results-table line read back for plotting.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub dimension: String,
    pub scatterer: String,
    pub z: String,
    pub k: f64,
    pub r0: f64,
    pub r_outer: f64,
    pub abc: String,
    pub terms: usize,
    pub degree: usize,
    pub dofs: Option<usize>,
    pub err_domain: Option<f64>,
    pub err_boundary: Option<f64>,
    pub err_ffp: Option<f64>,
    pub h: Option<f64>,
    pub n_lambda: Option<f64>,
    pub ok: bool,
}

/// Parse a results table written by [`write_csv`].
pub fn read_csv<R: Read>(input: R) -> Result<Vec<TableRow>> {
    let mut r = csv::Reader::from_reader(input);
    let headers = r.headers().map_err(io)?.clone();
    let col = |name: &str| {
        headers.iter().position(|h| h == name).ok_or_else(|| Error::Config(format!("CSV lacks column {name}")))
    };
    let idx: Vec<usize> = COLUMNS.iter().map(|c| col(c)).collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for (line, rec) in r.records().enumerate() {
        let rec = rec.map_err(io)?;
        let field = |c: usize| rec.get(idx[c]).unwrap_or("").trim();
        let bad = |c: usize| Error::Config(format!("CSV row {}: bad {} value {:?}", line + 1, COLUMNS[c], field(c)));
        let num = |c: usize| -> Result<f64> { field(c).parse().map_err(|_| bad(c)) };
        let opt = |c: usize| -> Result<Option<f64>> {
            if field(c).is_empty() {
                Ok(None)
            } else {
                num(c).map(Some)
            }
        };
        rows.push(TableRow {
            dimension: field(0).to_string(),
            scatterer: field(1).to_string(),
            z: field(2).to_string(),
            k: num(3)?,
            r0: num(4)?,
            r_outer: num(5)?,
            abc: field(6).to_string(),
            terms: field(7).parse().map_err(|_| bad(7))?,
            degree: field(8).parse().map_err(|_| bad(8))?,
            dofs: opt(11)?.map(|v| v as usize),
            err_domain: opt(12)?,
            err_boundary: opt(13)?,
            err_ffp: opt(14)?,
            h: opt(17)?,
            n_lambda: opt(18)?,
            ok: field(19) == "ok",
        });
    }
    Ok(rows)
}
