use num_complex::Complex64;

use super::tables::QuadratureTables;
use crate::error::Result;
use crate::geometry::{Edge, Patch, PatchKind};
use crate::linsolve::{solve, SparseComplexMatrix};

/// Real sparse matrix as `(row, col, value)` triplets over unique angular DOFs.
pub type RealTriplets = Vec<(usize, usize, f64)>;

/// Mass and Laplace–Beltrami matrices on a circular boundary edge.
///
/// With `μ = w(x) ρ |c'(η)| dη` (`w` the axis weight unless `plain` is set)
/// the entries are `M_ab = ∫ R_a R_b μ` and `K_ab = ∫ ∂_θR_a ∂_θR_b μ`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryBlocks {
    pub size: usize,
    pub mass: RealTriplets,
    pub stiffness: RealTriplets,
}

impl BoundaryBlocks {
    pub fn apply_mass(&self, x: &[f64]) -> Vec<f64> {
        apply(&self.mass, self.size, x)
    }

    pub fn apply_stiffness(&self, x: &[f64]) -> Vec<f64> {
        apply(&self.stiffness, self.size, x)
    }
}

fn apply(t: &RealTriplets, n: usize, x: &[f64]) -> Vec<f64> {
    let mut y = vec![0.0; n];
    for &(i, j, v) in t {
        y[i] += v * x[j];
    }
    y
}

fn edge_radius(patch: &Patch, edge: Edge) -> f64 {
    match edge {
        Edge::Inner => patch.inner_radius(),
        Edge::Outer => patch.outer_radius(),
    }
}

/// Surface measure density `μ/dη` at an angular sample.
pub(crate) fn surface_density(patch: &Patch, radius: f64, unit: [f64; 2], speed: f64, plain: bool) -> f64 {
    let w = if plain { 1.0 } else { patch.measure_weight([radius * unit[0], radius * unit[1]]) };
    w * radius * speed
}

pub fn boundary_blocks(patch: &Patch, tables: &QuadratureTables, edge: Edge, plain: bool) -> BoundaryBlocks {
    let radius = edge_radius(patch, edge);
    let map = patch.angular_map();
    let mut mass = Vec::new();
    let mut stiffness = Vec::new();
    for span in &tables.angular {
        let n = span[0].basis.values.len();
        let first = span[0].basis.first_index();
        let mut lm = vec![0.0; n * n];
        let mut lk = vec![0.0; n * n];
        for s in span {
            let mu = s.weight * surface_density(patch, radius, s.point.unit, s.point.speed, plain);
            let inv2 = 1.0 / (s.point.speed * s.point.speed);
            let b = &s.basis;
            for a in 0..n {
                for c in 0..n {
                    lm[a * n + c] += b.values[a] * b.values[c] * mu;
                    lk[a * n + c] += b.first[a] * b.first[c] * mu * inv2;
                }
            }
        }
        for a in 0..n {
            for c in 0..n {
                let (i, j) = (map.get(first + a), map.get(first + c));
                mass.push((i, j, lm[a * n + c]));
                stiffness.push((i, j, lk[a * n + c]));
            }
        }
    }
    BoundaryBlocks { size: map.unique(), mass, stiffness }
}

/// Cosine of the angle between the position `unit` and the incidence
/// direction (`+x` in the plane, `+z` on the meridian).
pub fn incidence_cos(kind: PatchKind, unit: [f64; 2]) -> f64 {
    match kind {
        PatchKind::Annulus => unit[0],
        PatchKind::Meridian => unit[1],
    }
}

/// Plane wave `A e^{ik r cos θ}` and its radial derivative.
pub fn incident_wave(kind: PatchKind, k: f64, amplitude: f64, r: f64, unit: [f64; 2]) -> (Complex64, Complex64) {
    let c = incidence_cos(kind, unit);
    let u = Complex64::from_polar(amplitude, k * r * c);
    (u, Complex64::new(0.0, k * c) * u)
}

/// `L²(Γ)` projection of `-u_inc` onto the angular basis on the inner edge.
pub fn dirichlet_projection(
    patch: &Patch,
    tables: &QuadratureTables,
    k: f64,
    amplitude: f64,
) -> Result<Vec<Complex64>> {
    let blocks = boundary_blocks(patch, tables, Edge::Inner, true);
    let m = blocks.size;
    if amplitude == 0.0 {
        return Ok(vec![Complex64::new(0.0, 0.0); m]);
    }
    let r0 = patch.inner_radius();
    let map = patch.angular_map();
    let mut rhs = vec![Complex64::new(0.0, 0.0); m];
    for span in &tables.angular {
        for s in span {
            let mu = s.weight * surface_density(patch, r0, s.point.unit, s.point.speed, true);
            let (u, _) = incident_wave(patch.kind(), k, amplitude, r0, s.point.unit);
            let first = s.basis.first_index();
            for (a, v) in s.basis.values.iter().enumerate() {
                rhs[map.get(first + a)] -= u * (v * mu);
            }
        }
    }
    let mut mat = SparseComplexMatrix::with_capacity(m, blocks.mass.len());
    mat.extend(blocks.mass.iter().map(|&(i, j, v)| (i, j, Complex64::new(v, 0.0))));
    Ok(solve(&mat, &rhs)?.x)
}

/// Load `∫_Γ ∂_r u_inc R_j dμ` over the unique angular DOFs of `Γ`.
pub fn neumann_load(patch: &Patch, tables: &QuadratureTables, k: f64, amplitude: f64) -> Vec<Complex64> {
    let r0 = patch.inner_radius();
    let map = patch.angular_map();
    let mut load = vec![Complex64::new(0.0, 0.0); map.unique()];
    for span in &tables.angular {
        for s in span {
            let mu = s.weight * surface_density(patch, r0, s.point.unit, s.point.speed, false);
            let (_, du) = incident_wave(patch.kind(), k, amplitude, r0, s.point.unit);
            let first = s.basis.first_index();
            for (a, v) in s.basis.values.iter().enumerate() {
                load[map.get(first + a)] += du * (v * mu);
            }
        }
    }
    load
}
