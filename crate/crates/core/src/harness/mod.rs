//! Config-driven experiments: single runs, parameter sweeps, CSV tables,
//! SVG plots and the acceptance check suites.

mod config;
mod csv;
mod plot;
mod run;
pub mod suites;

pub use config::{parse_real, AbcKind, Dimension, FitMetric, ScatterConfig, Scatterer};
pub use csv::{read_csv, write_csv, write_surface_csv, TableRow, COLUMNS};
pub use plot::{emit_plots, heatmap_svg, loglog_svg, Series};
pub use run::{
    exit_code, output_dir, points_per_wavelength, run_single, run_sweep, surface_keys, RunRecord, SweepReport,
    SweepRow, OUTPUT_DIR_ENV,
};
pub use suites::{run_suite, Outcome, Suite};
