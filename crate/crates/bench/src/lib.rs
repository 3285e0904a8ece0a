//! Benchmark workloads.

use std::f64::consts::TAU;

use farfield_iga::assembly::{assemble, Abc, AssemblyOptions, BlockSystem, BoundaryKind, ScatteringProblem};
use farfield_iga::farfield_abc::kfe_coeffs;
use farfield_iga::geometry::{build_annulus, ElementMesh, GridSpec, Patch};
use farfield_iga::Result;

/// Soft cylinder at `k = 2π`, `R = 2`, with the given degree, Karp terms and
/// points per wavelength.
pub struct Workload {
    pub patch: Patch,
    pub mesh: ElementMesh,
    pub problem: ScatteringProblem,
    pub abc: Abc,
}

impl Workload {
    pub fn cylinder(degree: usize, terms: usize, per_wavelength: f64) -> Result<Self> {
        let (patch, mesh) = build_annulus(1.0, 2.0, degree, GridSpec::PerWavelength(per_wavelength), TAU)?;
        Ok(Workload {
            patch,
            mesh,
            problem: ScatteringProblem::new(TAU, BoundaryKind::Soft),
            abc: Abc::Kfe(kfe_coeffs(TAU, 2.0, terms)?),
        })
    }

    pub fn assemble(&self) -> Result<BlockSystem> {
        assemble(&self.patch, &self.mesh, &self.problem, &self.abc, &AssemblyOptions::default())
    }
}
