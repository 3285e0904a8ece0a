//! Acceptance checks against reference results, grouped into suites.

use std::fmt;
use std::str::FromStr;

use super::config::ScatterConfig;
use super::run::{run_single, run_sweep, RunRecord, SweepReport};
use crate::error::{Error, Result};
use crate::reference::fit_order;

macro_rules! canonical {
    ($($name:literal),* $(,)?) => {
        /// Configurations shipped in the repository's `configs/` directory.
        pub const CANONICAL: &[(&str, &str)] = &[
            $(($name, include_str!(concat!("../../../../configs/", $name, ".cfg")))),*
        ];
    };
}

canonical!(
    "a1_table1",
    "a2_table2",
    "a2_table3",
    "a3_lowfreq_bgt2_p1",
    "a3_lowfreq_kfe1_p1",
    "a3_lowfreq_kfe3_p2",
    "a3_lowfreq_kfe3_p10",
    "a4_close_boundary",
    "a5_bgt1_p1",
    "a5_kfe4_p1",
    "a5_kfe10_p2",
    "a6_sphere",
    "timing_close",
    "timing_far",
    "surface_p6",
    "stress_k100_surface",
    "stress_k350_ffp",
);

/// Parse a shipped configuration by name.
pub fn canonical_config(name: &str) -> Result<ScatterConfig> {
    let (_, text) = CANONICAL
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Config(format!("no shipped configuration named {name:?}")))?;
    ScatterConfig::parse(text)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Tables,
    LowFreq,
    CloseBoundary,
    Sphere,
    Bgt,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Tables, Suite::LowFreq, Suite::CloseBoundary, Suite::Sphere, Suite::Bgt];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::LowFreq => "lowfreq",
            Suite::CloseBoundary => "closeboundary",
            Suite::Sphere => "sphere",
            Suite::Bgt => "bgt",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown suite {s:?}")))
    }
}

/// Verdict on one acceptance criterion.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub id: String,
    pub passed: bool,
    pub summary: String,
    /// One line per measured quantity.
    pub details: Vec<String>,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {}", self.id, if self.passed { "PASS" } else { "FAIL" }, self.summary)
    }
}

/// Collects individual checks into an [`Outcome`].
struct Checks {
    id: String,
    failed: Vec<String>,
    details: Vec<String>,
}

impl Checks {
    fn new(id: &str) -> Self {
        Checks { id: id.into(), failed: Vec::new(), details: Vec::new() }
    }

    fn check(&mut self, ok: bool, line: String) {
        self.details.push(format!("{} {line}", if ok { "ok  " } else { "FAIL" }));
        if !ok {
            self.failed.push(line);
        }
    }

    fn finish(self, summary: &str) -> Outcome {
        let passed = self.failed.is_empty();
        let summary = if passed {
            summary.to_string()
        } else {
            format!("{summary}; {} check(s) failed: {}", self.failed.len(), self.failed.join("; "))
        };
        Outcome { id: self.id, passed, summary, details: self.details }
    }
}

fn sweep(name: &str) -> Result<SweepReport> {
    run_sweep(&canonical_config(name)?)
}

/// Successful records of a sweep, or a failed check per failing row.
fn records<'a>(checks: &mut Checks, name: &str, report: &'a SweepReport) -> Vec<&'a RunRecord> {
    for row in &report.rows {
        if let Err(e) = &row.result {
            checks.check(false, format!("{name}: run failed: {e}"));
        }
    }
    report.records().collect()
}

/// Reference `(h, boundary error)` rows with the order fit and the factor
/// allowed on each error.
struct Table {
    config: &'static str,
    errors: [f64; 5],
    order: f64,
    order_tol: f64,
    factor: f64,
}

const TABLES: [Table; 3] = [
    Table {
        config: "a1_table1",
        errors: [2.95e-5, 1.86e-5, 1.47e-5, 9.65e-6, 6.94e-6],
        order: 3.03,
        order_tol: 0.3,
        factor: 2.0,
    },
    Table {
        config: "a2_table2",
        errors: [1.35e-6, 9.33e-7, 7.25e-7, 5.73e-7, 4.59e-7],
        order: 4.04,
        order_tol: 0.3,
        factor: 3.0,
    },
    Table {
        config: "a2_table3",
        errors: [6.14e-8, 4.15e-8, 2.59e-8, 1.88e-8, 1.42e-8],
        order: 5.25,
        order_tol: 0.5,
        factor: 3.0,
    },
];

fn table_checks(checks: &mut Checks, table: &Table) -> Result<()> {
    let report = sweep(table.config)?;
    let recs = records(checks, table.config, &report);
    for (rec, want) in recs.iter().zip(table.errors) {
        let got = rec.errors.boundary;
        let ratio = got / want;
        checks.check(
            ratio <= table.factor && ratio >= 1.0 / table.factor,
            format!(
                "{} n_lambda={} h={:.5}: boundary error {got:.3e} vs {want:.2e} (ratio {ratio:.2}, allowed {})",
                table.config,
                super::run::points_per_wavelength(&rec.config).unwrap_or(f64::NAN),
                rec.mesh_size,
                table.factor
            ),
        );
    }
    match &report.fit {
        Some(fit) => checks.check(
            (fit.order - table.order).abs() <= table.order_tol,
            format!("{}: fitted order {:.3} vs {} ± {}", table.config, fit.order, table.order, table.order_tol),
        ),
        None => checks.check(false, format!("{}: no order fit", table.config)),
    }
    Ok(())
}

/// Boundary errors and orders of the three h-refinement tables (A1, A2).
pub fn tables() -> Result<Vec<Outcome>> {
    let mut a1 = Checks::new("A1");
    table_checks(&mut a1, &TABLES[0])?;
    let mut a2 = Checks::new("A2");
    table_checks(&mut a2, &TABLES[1])?;
    table_checks(&mut a2, &TABLES[2])?;
    Ok(vec![
        a1.finish("quadratic basis, 11 Karp terms: boundary errors within 2x, order 3.03 ± 0.3"),
        a2.finish("cubic and quartic bases: boundary errors within 3x, orders 4.04 ± 0.3 and 5.25 ± 0.5"),
    ])
}

/// Very-low-frequency domain errors per artificial radius (A3).
pub fn lowfreq() -> Result<Vec<Outcome>> {
    let bands: [(&str, f64, f64); 4] = [
        ("a3_lowfreq_bgt2_p1", 1e-3, 1.0),
        ("a3_lowfreq_kfe1_p1", 1e-7, 1e-4),
        ("a3_lowfreq_kfe3_p2", 1e-9, 1e-6),
        ("a3_lowfreq_kfe3_p10", 0.0, 1e-10),
    ];
    let mut checks = Checks::new("A3");
    for (name, lo, hi) in bands {
        let report = sweep(name)?;
        for rec in records(&mut checks, name, &report) {
            let e = rec.errors.domain;
            checks.check(
                e >= lo && e <= hi,
                format!("{name} R={}: domain error {e:.3e} in [{lo:.0e}, {hi:.0e}]", rec.config.r_outer),
            );
        }
    }
    Ok(vec![checks.finish("k = 0.01: every method within its error band at R = 1.1, 2, 3, 5")])
}

/// Close artificial boundary (A4) and the solve-time ordering against a
/// distant boundary.
pub fn close_boundary() -> Result<Vec<Outcome>> {
    let mut a4 = Checks::new("A4");
    let name = "a4_close_boundary";
    let report = sweep(name)?;
    let recs = records(&mut a4, name, &report);
    let ffp: Vec<(usize, f64)> =
        recs.iter().map(|r| (r.angular_count, r.errors.ffp.unwrap_or(f64::NAN))).collect();
    for (m, e) in &ffp {
        a4.details.push(format!("     m={m}: FFP error {e:.3e}"));
    }
    if let (Some(first), Some(last)) = (ffp.first(), ffp.last()) {
        a4.check(first.1 <= 1e-8, format!("coarsest FFP error {:.3e} <= 1e-8", first.1));
        a4.check(last.1 <= 1e-10, format!("finest FFP error {:.3e} <= 1e-10", last.1));
        let h: Vec<f64> = recs.iter().map(|r| r.mesh_size).collect();
        let e: Vec<f64> = ffp.iter().map(|p| p.1).collect();
        let trend = fit_order(&h, &e).map(|f| f.order).unwrap_or(f64::NAN);
        a4.check(trend > 0.0, format!("decreasing trend: fitted order {trend:.2} > 0"));
    }

    let mut timing = Checks::new("A4-time");
    let close = run_single(&canonical_config("timing_close")?);
    let far = run_single(&canonical_config("timing_far")?);
    match (close, far) {
        (Ok(c), Ok(f)) => {
            timing.check(
                c.seconds < f.seconds,
                format!(
                    "solve time R=1.05 ({} DOF) {:.3}s < R=5 ({} DOF) {:.3}s; ratio {:.1}%",
                    c.dofs,
                    c.seconds,
                    f.dofs,
                    f.seconds,
                    100.0 * c.seconds / f.seconds
                ),
            );
            timing.details.push(format!(
                "     boundary errors {:.3e} (R=1.05) and {:.3e} (R=5)",
                c.errors.boundary, f.errors.boundary
            ));
        }
        (c, f) => {
            for (label, r) in [("R=1.05", c), ("R=5", f)] {
                if let Err(e) = r {
                    timing.check(false, format!("{label}: run failed: {e}"));
                }
            }
        }
    }
    Ok(vec![
        a4.finish("R = 1.05, p = 6, 24 terms: FFP error <= 1e-8 at m_e = 100, <= 1e-10 at m_e = 700, decreasing"),
        timing.finish("close boundary solves faster than R = 5 at comparable accuracy"),
    ])
}

/// Axisymmetric sphere boundary error (A6).
pub fn sphere() -> Result<Vec<Outcome>> {
    let mut checks = Checks::new("A6");
    match run_single(&canonical_config("a6_sphere")?) {
        Ok(rec) => checks.check(
            rec.errors.boundary <= 3.5e-6,
            format!("boundary error {:.3e} <= 3.5e-6 ({} DOF)", rec.errors.boundary, rec.dofs),
        ),
        Err(e) => checks.check(false, format!("run failed: {e}")),
    }
    Ok(vec![checks.finish("sphere, p = 5, 12 Wilcox terms, n_lambda = 16: boundary error <= 3.5e-6")])
}

/// BGT stagnation against Karp convergence at k = 10 (A5).
pub fn bgt() -> Result<Vec<Outcome>> {
    let mut checks = Checks::new("A5");
    let report = sweep("a5_bgt1_p1")?;
    let recs = records(&mut checks, "a5_bgt1_p1", &report);
    if let [coarse, fine] = recs.as_slice() {
        let (a, b) = (coarse.errors.ffp.unwrap_or(f64::NAN), fine.errors.ffp.unwrap_or(f64::NAN));
        checks.check(b > 0.5 * a, format!("BGT-1 stagnates: FFP error {b:.3e} at n_lambda=50 > 0.5 x {a:.3e} at 15"));
    }

    let report = sweep("a5_kfe4_p1")?;
    let recs = records(&mut checks, "a5_kfe4_p1", &report);
    for r in &recs {
        checks.details.push(format!(
            "     KFE-4 n_lambda={}: domain error {:.3e}, FFP error {:.3e}",
            super::run::points_per_wavelength(&r.config).unwrap_or(f64::NAN),
            r.errors.domain,
            r.errors.ffp.unwrap_or(f64::NAN)
        ));
    }
    match &report.fit {
        Some(fit) => checks
            .check((fit.order - 2.0).abs() <= 0.4, format!("KFE-4 fitted domain order {:.3} vs 2.0 ± 0.4", fit.order)),
        None => checks.check(false, "KFE-4: no order fit".into()),
    }

    match run_single(&canonical_config("a5_kfe10_p2")?) {
        Ok(rec) => {
            let e = rec.errors.ffp.unwrap_or(f64::NAN);
            checks.check(e <= 1e-4, format!("KFE-10 quadratic FFP error {e:.3e} <= 1e-4 at n_lambda=50"));
        }
        Err(e) => checks.check(false, format!("KFE-10: run failed: {e}")),
    }
    Ok(vec![checks.finish("k = 10: BGT-1 stagnates, KFE-4 converges quadratically, KFE-10 reaches 1e-4")])
}

pub fn run_suite(suite: Suite) -> Result<Vec<Outcome>> {
    match suite {
        Suite::Tables => tables(),
        Suite::LowFreq => lowfreq(),
        Suite::CloseBoundary => close_boundary(),
        Suite::Sphere => sphere(),
        Suite::Bgt => bgt(),
    }
}
