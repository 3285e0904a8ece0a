use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;

use super::config::{AbcKind, Dimension, FitMetric, ScatterConfig, Scatterer};
use super::csv::{write_csv, write_surface_csv};
use crate::assembly::{assemble, Abc, AssemblyOptions, QuadratureTables, ScatteringProblem};
use crate::error::{Error, Result};
use crate::farfield_abc::{bgt_coeffs, kfe_coeffs, wfe_coeffs};
use crate::geometry::{build_annulus, build_meridian, GridSpec};
use crate::linsolve::SolveOptions;
use crate::reference::{
    ffp_from_expansion, ffp_from_trace, ffp_from_wilcox, fit_order, l2_absolute_errors, l2_errors, patch_ffp_angles,
    relative_l2, ConvergenceFit, ErrorReport, ExactCylinder, ExactSphere, SeparableSolution,
};

/// Environment variable overriding the output directory.
pub const OUTPUT_DIR_ENV: &str = "FEABC_OUTPUT_DIR";

/// Output directory: `$FEABC_OUTPUT_DIR` when set, otherwise `fallback`.
pub fn output_dir(fallback: &Path) -> PathBuf {
    std::env::var_os(OUTPUT_DIR_ENV).map(PathBuf::from).unwrap_or_else(|| fallback.to_path_buf())
}

/// Process exit status for an error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Config(_) | Error::Domain(_) => 2,
        Error::Conditioning(_) => 3,
        Error::Solver { .. } | Error::Geometry(_) => 4,
        Error::Io(_) => 1,
    }
}

/// Outcome of one solve. Errors are relative, or absolute when the incident
/// amplitude is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub config: ScatterConfig,
    /// Radial control points `N`.
    pub radial_count: usize,
    /// Unique angular control points `m`.
    pub angular_count: usize,
    pub dofs: usize,
    pub mesh_size: f64,
    pub errors: ErrorReport,
    /// Backward error of the linear solve.
    pub residual: f64,
    /// Wall-clock seconds of the sparse solve.
    pub seconds: f64,
    /// Wall-clock seconds for geometry, assembly and solve.
    pub total_seconds: f64,
}

impl RunRecord {
    /// The error selected by the configuration's fit metric.
    pub fn metric(&self) -> Option<f64> {
        match self.config.fit_metric {
            FitMetric::Domain => Some(self.errors.domain),
            FitMetric::Boundary => Some(self.errors.boundary),
            FitMetric::Ffp => self.errors.ffp,
        }
    }

    /// Write `<name>.csv` and `<name>.cfg` into `dir`.
    pub fn persist(&self, dir: &Path) -> Result<PathBuf> {
        std::fs::create_dir_all(dir)?;
        let csv = dir.join(format!("{}.csv", self.config.name));
        let rows = [SweepRow { config: self.config.clone(), result: Ok(self.clone()) }];
        write_csv(&rows, std::fs::File::create(&csv)?)?;
        std::fs::write(dir.join(format!("{}.cfg", self.config.name)), self.config.to_text())?;
        Ok(csv)
    }
}

fn abc_for(cfg: &ScatterConfig) -> Result<Abc> {
    Ok(match cfg.abc {
        AbcKind::Kfe => Abc::Kfe(kfe_coeffs(cfg.k, cfg.r_outer, cfg.terms)?),
        AbcKind::Wfe => Abc::Wfe(wfe_coeffs(cfg.k, cfg.r_outer, cfg.terms)?),
        AbcKind::Bgt1 => Abc::Bgt(bgt_coeffs(1, cfg.k, cfg.r_outer)?),
        AbcKind::Bgt2 => Abc::Bgt(bgt_coeffs(2, cfg.k, cfg.r_outer)?),
    })
}

/// Build, assemble, solve and measure one configuration.
pub fn run_single(cfg: &ScatterConfig) -> Result<RunRecord> {
    if cfg.has_lists() {
        return Err(Error::Config("configuration has sweep lists; run it as a sweep".into()));
    }
    cfg.validate()?;
    let start = Instant::now();
    let (patch, mesh) = match cfg.dimension {
        Dimension::Planar => build_annulus(cfg.r0, cfg.r_outer, cfg.degree, cfg.grid, cfg.k)?,
        Dimension::Axisymmetric => build_meridian(cfg.r0, cfg.r_outer, cfg.degree, cfg.grid, cfg.k)?,
    };
    let abc = abc_for(cfg)?;
    let problem = ScatteringProblem { k: cfg.k, boundary: cfg.boundary, amplitude: cfg.amplitude };
    let system = assemble(&patch, &mesh, &problem, &abc, &AssemblyOptions { quadrature_points: cfg.quadrature })?;
    let solve_start = Instant::now();
    let (sol, info) = system.solve(SolveOptions::default())?;
    let seconds = solve_start.elapsed().as_secs_f64();
    let total_seconds = start.elapsed().as_secs_f64();

    let tables = QuadratureTables::new(&patch, cfg.error_quadrature.unwrap_or(cfg.degree + 2))?;
    let exact: Box<dyn SeparableSolution> = match cfg.scatterer {
        Scatterer::Cylinder => Box::new(ExactCylinder::new(cfg.k, cfg.r0, cfg.boundary)?.scaled(cfg.amplitude)),
        Scatterer::Sphere => Box::new(ExactSphere::new(cfg.k, cfg.r0, cfg.boundary)?.scaled(cfg.amplitude)),
    };
    let absolute = cfg.amplitude == 0.0;
    let mut errors = if absolute {
        l2_absolute_errors(&patch, &sol, exact.as_ref(), &tables)?
    } else {
        l2_errors(&patch, &sol, exact.as_ref(), &tables)?
    };
    let thetas = patch_ffp_angles(&patch, cfg.ffp_samples);
    let ffp = match cfg.abc {
        AbcKind::Kfe => ffp_from_expansion(&patch, &sol, cfg.k, &thetas)?,
        AbcKind::Wfe => ffp_from_wilcox(&patch, &sol, cfg.k, &thetas)?,
        AbcKind::Bgt1 | AbcKind::Bgt2 => ffp_from_trace(&patch, &sol, cfg.k, &tables, &thetas)?,
    };
    let exact_ffp = exact.ffp(&thetas);
    errors.ffp = Some(if absolute {
        let sq: f64 = ffp.iter().zip(&exact_ffp).map(|(a, b)| (a - b).norm_sqr()).sum();
        (sq / thetas.len() as f64).sqrt()
    } else {
        relative_l2(&ffp, &exact_ffp)
    });

    Ok(RunRecord {
        config: cfg.clone(),
        radial_count: patch.radial_count(),
        angular_count: patch.angular_unique(),
        dofs: system.layout.total(),
        mesh_size: patch.mesh_size(),
        errors,
        residual: info.residual,
        seconds,
        total_seconds,
    })
}

/// One combination of a sweep with its outcome.
#[derive(Debug)]
pub struct SweepRow {
    pub config: ScatterConfig,
    pub result: Result<RunRecord>,
}

#[derive(Debug)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    /// Order fit of the configured metric against `h`, for grid sweeps with
    /// at least three successful rows.
    pub fit: Option<ConvergenceFit>,
}

impl SweepReport {
    pub fn records(&self) -> impl Iterator<Item = &RunRecord> {
        self.rows.iter().filter_map(|r| r.result.as_ref().ok())
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| r.result.is_err()).count()
    }

    /// Write the sweep table, plus a surface table for two-key sweeps over
    /// `NT` and `n_lambda` or `p`. Returns the written paths.
    pub fn persist(&self, name: &str, sweep: &[(String, Vec<String>)], dir: &Path) -> Result<Vec<PathBuf>> {
        std::fs::create_dir_all(dir)?;
        let path = dir.join(format!("{name}.csv"));
        write_csv(&self.rows, std::fs::File::create(&path)?)?;
        let mut out = vec![path];
        if let Some((row_key, col_key)) = surface_keys(sweep) {
            let path = dir.join(format!("{name}_surface.csv"));
            write_surface_csv(&self.rows, row_key, col_key, std::fs::File::create(&path)?)?;
            out.push(path);
        }
        Ok(out)
    }
}

/// `(NT, other)` when the sweep is a two-key grid suited to a surface table.
pub fn surface_keys(sweep: &[(String, Vec<String>)]) -> Option<(&'static str, &'static str)> {
    if sweep.len() != 2 {
        return None;
    }
    let keys: Vec<&str> = sweep.iter().map(|(k, _)| k.as_str()).collect();
    let nt = keys.iter().any(|k| matches!(*k, "NT" | "terms"));
    let other = keys.iter().find_map(|k| match *k {
        "n_lambda" => Some("n_lambda"),
        "p" | "degree" => Some("p"),
        _ => None,
    });
    match (nt, other) {
        (true, Some(o)) => Some(("NT", o)),
        _ => None,
    }
}

/// Run every combination of the sweep lists. Rows run concurrently unless
/// timing is recorded; the output keeps configuration order either way.
pub fn run_sweep(cfg: &ScatterConfig) -> Result<SweepReport> {
    let configs = cfg.expand()?;
    let run = |c: &ScatterConfig| SweepRow { config: c.clone(), result: run_single(c) };
    let rows: Vec<SweepRow> = if cfg.timing {
        configs.iter().map(run).collect()
    } else {
        configs.par_iter().map(run).collect()
    };
    let fit = if cfg.is_grid_sweep() {
        let (h, e): (Vec<f64>, Vec<f64>) =
            rows.iter().filter_map(|r| r.result.as_ref().ok()).filter_map(|r| Some((r.mesh_size, r.metric()?))).unzip();
        fit_order(&h, &e).ok()
    } else {
        None
    };
    Ok(SweepReport { rows, fit })
}

/// `n_λ` of a configuration, when the grid is given that way.
pub fn points_per_wavelength(cfg: &ScatterConfig) -> Option<f64> {
    match cfg.grid {
        GridSpec::PerWavelength(n) => Some(n),
        GridSpec::Elements { .. } => None,
    }
}
