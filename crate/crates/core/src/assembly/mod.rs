//! Sparse block systems for the truncated exterior problem: the field
//! equations on the patch coupled to the far-field expansion unknowns on
//! `S_R`, or a local BGT condition.

mod boundary;
mod interior;
mod quadrature;
mod solution;
mod tables;

pub use boundary::{
    boundary_blocks, dirichlet_projection, incidence_cos, incident_wave, neumann_load, BoundaryBlocks,
    RealTriplets,
};
pub use quadrature::QuadratureRule;
pub use solution::DiscreteSolution;
pub use tables::{AngularSample, QuadratureTables, RadialSample};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::farfield_abc::{
    karp_recurrence_rhs, wfe_recurrence_rhs, BgtCoefficients, KfeCoefficients, WfeCoefficients,
};
use crate::geometry::{Edge, ElementMesh, Patch, PatchKind};
use crate::linsolve::SparseComplexMatrix;

/// Condition on the scatterer boundary `Γ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryKind {
    /// Sound-soft: `u = -u_inc`.
    Soft,
    /// Sound-hard: `∂_n u = -∂_n u_inc`.
    Hard,
}

/// Absorbing condition on `S_R` with its precomputed coefficients.
#[derive(Debug, Clone, PartialEq)]
pub enum Abc {
    Kfe(KfeCoefficients),
    Wfe(WfeCoefficients),
    Bgt(BgtCoefficients),
}

/// Wavenumber, scatterer condition and incident amplitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringProblem {
    pub k: f64,
    pub boundary: BoundaryKind,
    pub amplitude: f64,
}

impl ScatteringProblem {
    pub fn new(k: f64, boundary: BoundaryKind) -> Self {
        ScatteringProblem { k, boundary, amplitude: 1.0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct AssemblyOptions {
    /// Gauss points per direction; `None` uses `p + 1`.
    pub quadrature_points: Option<usize>,
}

/// Numbering of the unknowns: free field DOFs first, then `m`-sized blocks of
/// expansion coefficients. Block `b` of the auxiliary part holds `F_l`
/// (`b = 2l`) and `G_l` (`b = 2l + 1`) for Karp, `F_l` (`b = l`) for Wilcox.
#[derive(Debug, Clone, PartialEq)]
pub struct DofLayout {
    /// Unknown index of each unconstrained field DOF; `None` when prescribed.
    pub free_map: Vec<Option<usize>>,
    pub free_field: usize,
    /// Unique angular DOFs `m` on `S_R`.
    pub boundary_dofs: usize,
    pub terms: usize,
    /// Coefficient families per term: 2 (Karp), 1 (Wilcox), 0 (local ABC).
    pub families: usize,
}

impl DofLayout {
    pub fn total(&self) -> usize {
        self.free_field + self.families * self.terms * self.boundary_dofs
    }

    /// Index of entry `j` of auxiliary block `block`.
    pub fn aux(&self, block: usize, j: usize) -> usize {
        self.free_field + block * self.boundary_dofs + j
    }

    /// Column of coefficient `family` of term `l` at angular DOF `j`.
    pub fn coefficient(&self, family: usize, l: usize, j: usize) -> usize {
        self.aux(l * self.families + family, j)
    }
}

/// Assembled system `A x = b` with the prescribed values of constrained DOFs.
#[derive(Debug, Clone)]
pub struct BlockSystem {
    pub matrix: SparseComplexMatrix,
    pub rhs: Vec<Complex64>,
    pub layout: DofLayout,
    /// Values of the unconstrained field vector at prescribed DOFs, zero
    /// elsewhere.
    pub lifted: Vec<Complex64>,
}

fn c(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

fn check_radius(patch: &Patch, radius: f64, k_abc: f64, k: f64) -> Result<()> {
    let r = patch.outer_radius();
    if (radius - r).abs() > 1e-12 * r || (k_abc - k).abs() > 1e-12 * k {
        return Err(Error::Config(format!(
            "ABC coefficients for k = {k_abc}, R = {radius} do not match the problem (k = {k}, R = {r})"
        )));
    }
    Ok(())
}

/// Assemble the scattering system for any supported absorbing condition.
pub fn assemble(
    patch: &Patch,
    mesh: &ElementMesh,
    problem: &ScatteringProblem,
    abc: &Abc,
    opts: &AssemblyOptions,
) -> Result<BlockSystem> {
    let (needs, radius, k_abc) = match abc {
        Abc::Kfe(c) => (PatchKind::Annulus, c.radius, c.k),
        Abc::Wfe(c) => (PatchKind::Meridian, c.radius, c.k),
        Abc::Bgt(_) => (PatchKind::Annulus, patch.outer_radius(), problem.k),
    };
    if patch.kind() != needs {
        return Err(Error::Config(format!("{:?} condition requires a {needs:?} patch", abc_name(abc))));
    }
    if !(problem.k > 0.0 && problem.k.is_finite()) {
        return Err(Error::Config(format!("wavenumber must be positive, got {}", problem.k)));
    }
    check_radius(patch, radius, k_abc, problem.k)?;

    let points = opts.quadrature_points.unwrap_or(patch.degree() + 1);
    let tables = QuadratureTables::new(patch, points)?;
    let m = patch.angular_unique();
    let field = patch.field_dofs();

    let prescribed = problem.boundary == BoundaryKind::Soft;
    let mut free_map = Vec::with_capacity(field);
    let mut next = 0;
    for dof in 0..field {
        if prescribed && dof < m {
            free_map.push(None);
        } else {
            free_map.push(Some(next));
            next += 1;
        }
    }
    let (terms, families) = match abc {
        Abc::Kfe(c) => (c.terms(), 2),
        Abc::Wfe(c) => (c.terms(), 1),
        Abc::Bgt(_) => (0, 0),
    };
    let layout = DofLayout { free_map, free_field: next, boundary_dofs: m, terms, families };
    let n = layout.total();

    let mut lifted = vec![Complex64::new(0.0, 0.0); field];
    if prescribed {
        let g = dirichlet_projection(patch, &tables, problem.k, problem.amplitude)?;
        lifted[..m].copy_from_slice(&g);
    }

    let interior = interior::field_triplets(patch, mesh, &tables, problem.k);
    let mut matrix = SparseComplexMatrix::with_capacity(n, interior.len() + 16 * n);
    let mut rhs = vec![Complex64::new(0.0, 0.0); n];
    for (r, col, v) in interior {
        let Some(fr) = layout.free_map[r] else { continue };
        match layout.free_map[col] {
            Some(fc) => matrix.push(fr, fc, c(v)),
            None => rhs[fr] -= lifted[col] * v,
        }
    }
    if problem.boundary == BoundaryKind::Hard {
        let load = neumann_load(patch, &tables, problem.k, problem.amplitude);
        for (j, l) in load.into_iter().enumerate() {
            let fr = layout.free_map[j].expect("hard boundary DOFs are free");
            rhs[fr] += l;
        }
    }

    let outer = boundary_blocks(patch, &tables, Edge::Outer, false);
    let trace = patch.boundary_trace(Edge::Outer);
    let sr: Vec<usize> = trace
        .dofs
        .iter()
        .map(|&d| layout.free_map[d].expect("S_R DOFs are free"))
        .collect();
    let mut add = |rows: &dyn Fn(usize) -> usize, cols: &dyn Fn(usize) -> usize, mass: Complex64, stiff: Complex64| {
        if mass != Complex64::new(0.0, 0.0) {
            for &(i, j, v) in &outer.mass {
                matrix.push(rows(i), cols(j), mass * v);
            }
        }
        if stiff != Complex64::new(0.0, 0.0) {
            for &(i, j, v) in &outer.stiffness {
                matrix.push(rows(i), cols(j), stiff * v);
            }
        }
    };
    let zero = Complex64::new(0.0, 0.0);
    let one = c(1.0);
    let field_row = |j: usize| sr[j];
    let lay = &layout;

    match abc {
        Abc::Kfe(kc) => {
            for l in 0..terms {
                let f = move |j: usize| lay.coefficient(0, l, j);
                let g = move |j: usize| lay.coefficient(1, l, j);
                // ∂_r u on S_R from the expansion.
                add(&field_row, &f, -kc.a[l], zero);
                add(&field_row, &g, -kc.b[l], zero);
                // Trace continuity.
                add(&|j| lay.aux(0, j), &f, -kc.trace0[l], zero);
                add(&|j| lay.aux(0, j), &g, -kc.trace1[l], zero);
                // Helmholtz equation at r = R.
                add(&|j| lay.aux(1, j), &f, kc.p[l], -kc.curv0[l]);
                add(&|j| lay.aux(1, j), &g, kc.q[l], -kc.curv1[l]);
            }
            add(&|j| lay.aux(0, j), &field_row, one, zero);
            for l in 1..terms {
                let rec = karp_recurrence_rhs(l)?;
                let f = move |j: usize| lay.coefficient(0, l, j);
                let g = move |j: usize| lay.coefficient(1, l, j);
                let f_prev = move |j: usize| lay.coefficient(0, l - 1, j);
                let g_prev = move |j: usize| lay.coefficient(1, l - 1, j);
                add(&|j| lay.aux(2 * l, j), &f, c(rec.x), zero);
                add(&|j| lay.aux(2 * l, j), &g_prev, c(rec.y_mass), c(rec.y_stiffness));
                add(&|j| lay.aux(2 * l + 1, j), &g, c(rec.r), zero);
                add(&|j| lay.aux(2 * l + 1, j), &f_prev, c(rec.t_mass), c(rec.t_stiffness));
            }
        }
        Abc::Wfe(wc) => {
            for l in 0..terms {
                let f = move |j: usize| lay.coefficient(0, l, j);
                add(&field_row, &f, -wc.c[l], zero);
                add(&|j| lay.aux(0, j), &f, -wc.trace[l], zero);
            }
            add(&|j| lay.aux(0, j), &field_row, one, zero);
            for l in 1..terms {
                let rec = wfe_recurrence_rhs(l)?;
                let f = move |j: usize| lay.coefficient(0, l, j);
                let f_prev = move |j: usize| lay.coefficient(0, l - 1, j);
                add(&|j| lay.aux(l, j), &f, rec.x, zero);
                add(&|j| lay.aux(l, j), &f_prev, c(rec.y_mass), c(rec.y_stiffness));
            }
        }
        Abc::Bgt(bc) => {
            add(&field_row, &field_row, -bc.alpha, bc.beta);
        }
    }
    Ok(BlockSystem { matrix, rhs, layout, lifted })
}

fn abc_name(abc: &Abc) -> &'static str {
    match abc {
        Abc::Kfe(_) => "KFE",
        Abc::Wfe(_) => "WFE",
        Abc::Bgt(_) => "BGT",
    }
}

/// Karp-expansion system on an annulus.
pub fn assemble_system_2d(
    patch: &Patch,
    mesh: &ElementMesh,
    problem: &ScatteringProblem,
    coeffs: &KfeCoefficients,
    opts: &AssemblyOptions,
) -> Result<BlockSystem> {
    assemble(patch, mesh, problem, &Abc::Kfe(coeffs.clone()), opts)
}

/// Wilcox-expansion system on a meridian patch.
pub fn assemble_system_3d_axisym(
    patch: &Patch,
    mesh: &ElementMesh,
    problem: &ScatteringProblem,
    coeffs: &WfeCoefficients,
    opts: &AssemblyOptions,
) -> Result<BlockSystem> {
    assemble(patch, mesh, problem, &Abc::Wfe(coeffs.clone()), opts)
}

/// Local BGT condition on an annulus.
pub fn assemble_bgt_system(
    patch: &Patch,
    mesh: &ElementMesh,
    problem: &ScatteringProblem,
    coeffs: &BgtCoefficients,
    opts: &AssemblyOptions,
) -> Result<BlockSystem> {
    assemble(patch, mesh, problem, &Abc::Bgt(*coeffs), opts)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{PI, TAU};

    use super::*;
    use crate::farfield_abc::{bgt_coeffs, kfe_coeffs, wfe_coeffs};
    use crate::geometry::{build_annulus, build_meridian, GridSpec};

    fn annulus(p: usize) -> (Patch, ElementMesh) {
        build_annulus(1.0, 2.0, p, GridSpec::Elements { radial: 3, angular: 12 }, 1.0).unwrap()
    }

    fn dense(t: &[(usize, usize, f64)], n: usize) -> Vec<Vec<f64>> {
        let mut a = vec![vec![0.0; n]; n];
        for &(i, j, v) in t {
            a[i][j] += v;
        }
        a
    }

    #[test]
    fn constants_are_in_the_kernel_of_the_laplacian() {
        for p in [1, 2, 4] {
            let (patch, mesh) = annulus(p);
            let tables = QuadratureTables::new(&patch, p + 1).unwrap();
            let n = patch.field_dofs();
            let a = dense(&interior::field_triplets(&patch, &mesh, &tables, 0.0), n);
            for row in &a {
                assert!(row.iter().sum::<f64>().abs() < 1e-11);
            }
        }
    }

    #[test]
    fn mass_part_integrates_the_area() {
        let k = 1.7;
        let (patch, mesh) = annulus(3);
        let tables = QuadratureTables::new(&patch, 12).unwrap();
        let total: f64 = interior::field_triplets(&patch, &mesh, &tables, k).iter().map(|t| t.2).sum();
        assert!((total + k * k * PI * 3.0).abs() < 1e-11, "{total}");

        let (mer, mmesh) = build_meridian(1.0, 2.0, 3, GridSpec::Elements { radial: 2, angular: 6 }, 1.0).unwrap();
        let tables = QuadratureTables::new(&mer, 12).unwrap();
        let total: f64 = interior::field_triplets(&mer, &mmesh, &tables, k).iter().map(|t| t.2).sum();
        // ∫ s ds dz over the half annulus = (2/3)(R³ - r0³).
        assert!((total + k * k * 2.0 / 3.0 * 7.0).abs() < 1e-11, "{total}");
    }

    #[test]
    fn boundary_blocks_measure_and_kernel() {
        let (patch, _) = annulus(3);
        let tables = QuadratureTables::new(&patch, 12).unwrap();
        let b = boundary_blocks(&patch, &tables, Edge::Outer, false);
        let ones = vec![1.0; b.size];
        let total: f64 = b.apply_mass(&ones).iter().sum();
        assert!((total - TAU * 2.0).abs() < 1e-12);
        assert!(b.apply_stiffness(&ones).iter().all(|v| v.abs() < 1e-12));

        let (mer, _) = build_meridian(1.0, 1.5, 3, GridSpec::Elements { radial: 2, angular: 8 }, 1.0).unwrap();
        let tables = QuadratureTables::new(&mer, 12).unwrap();
        let b = boundary_blocks(&mer, &tables, Edge::Outer, false);
        let total: f64 = b.apply_mass(&vec![1.0; b.size]).iter().sum();
        assert!((total - 2.0 * 1.5 * 1.5).abs() < 1e-12);
    }

    /// `K` acts on the projection of `cos θ` (circle) or `P_1(cos θ)` (sphere)
    /// like the eigenvalue times `M`.
    #[test]
    fn stiffness_matches_eigenvalues() {
        for (kind, eig) in [(PatchKind::Annulus, 1.0), (PatchKind::Meridian, 2.0)] {
            let grid = GridSpec::Elements { radial: 2, angular: 40 };
            let (patch, _) = match kind {
                PatchKind::Annulus => build_annulus(1.0, 2.0, 4, grid, 1.0).unwrap(),
                PatchKind::Meridian => build_meridian(1.0, 2.0, 4, grid, 1.0).unwrap(),
            };
            let tables = QuadratureTables::new(&patch, 6).unwrap();
            let b = boundary_blocks(&patch, &tables, Edge::Outer, false);
            // Project the mode with the same mass matrix.
            let map = patch.angular_map();
            let mut rhs = vec![Complex64::new(0.0, 0.0); b.size];
            for span in &tables.angular {
                for s in span {
                    let mu = s.weight * boundary::surface_density(&patch, 2.0, s.point.unit, s.point.speed, false);
                    let f = incidence_cos(kind, s.point.unit);
                    let first = s.basis.first_index();
                    for (a, v) in s.basis.values.iter().enumerate() {
                        rhs[map.get(first + a)] += c(f * v * mu);
                    }
                }
            }
            let mut m = SparseComplexMatrix::new(b.size);
            m.extend(b.mass.iter().map(|&(i, j, v)| (i, j, c(v))));
            let x: Vec<f64> = crate::linsolve::solve(&m, &rhs).unwrap().x.iter().map(|z| z.re).collect();
            let kx = b.apply_stiffness(&x);
            let mx = b.apply_mass(&x);
            let err = kx.iter().zip(&mx).map(|(a, b)| (a - eig * b).abs()).fold(0.0, f64::max);
            let scale = mx.iter().map(|v| v.abs()).fold(0.0, f64::max);
            assert!(err < 1e-6 * scale, "{kind:?}: {err}");
        }
    }

    #[test]
    fn layout_sizes() {
        let (patch, mesh) = annulus(2);
        let k = 1.0;
        let prob = ScatteringProblem::new(k, BoundaryKind::Soft);
        let coeffs = kfe_coeffs(k, 2.0, 3).unwrap();
        let sys = assemble_system_2d(&patch, &mesh, &prob, &coeffs, &AssemblyOptions::default()).unwrap();
        let m = patch.angular_unique();
        let free = patch.field_dofs() - m;
        assert_eq!(sys.layout.free_field, free);
        assert_eq!(sys.layout.total(), free + 2 * 3 * m);
        assert_eq!(sys.matrix.dim(), sys.layout.total());

        let hard = ScatteringProblem::new(k, BoundaryKind::Hard);
        let sys = assemble_bgt_system(&patch, &mesh, &hard, &bgt_coeffs(2, k, 2.0).unwrap(), &Default::default())
            .unwrap();
        assert_eq!(sys.layout.total(), patch.field_dofs());

        let (mer, mmesh) = build_meridian(1.0, 2.0, 2, GridSpec::Elements { radial: 2, angular: 6 }, k).unwrap();
        let w = wfe_coeffs(k, 2.0, 4).unwrap();
        let sys = assemble_system_3d_axisym(&mer, &mmesh, &prob, &w, &Default::default()).unwrap();
        let m = mer.angular_unique();
        assert_eq!(sys.layout.total(), mer.field_dofs() - m + 4 * m);
    }

    #[test]
    fn mismatched_inputs_are_rejected() {
        let (patch, mesh) = annulus(2);
        let prob = ScatteringProblem::new(1.0, BoundaryKind::Soft);
        let wrong_r = kfe_coeffs(1.0, 3.0, 2).unwrap();
        assert!(assemble_system_2d(&patch, &mesh, &prob, &wrong_r, &Default::default()).is_err());
        let w = wfe_coeffs(1.0, 2.0, 2).unwrap();
        assert!(assemble_system_3d_axisym(&patch, &mesh, &prob, &w, &Default::default()).is_err());
    }

    #[test]
    fn zero_incident_wave_gives_zero_solution() {
        let (patch, mesh) = annulus(2);
        for boundary in [BoundaryKind::Soft, BoundaryKind::Hard] {
            let prob = ScatteringProblem { k: 1.0, boundary, amplitude: 0.0 };
            let coeffs = kfe_coeffs(1.0, 2.0, 3).unwrap();
            let sys = assemble_system_2d(&patch, &mesh, &prob, &coeffs, &Default::default()).unwrap();
            assert!(sys.rhs.iter().all(|v| v.norm() == 0.0));
            let (sol, _) = sys.solve(Default::default()).unwrap();
            assert!(sol.field.iter().all(|v| v.norm() == 0.0));
        }
    }
}
