use rayon::prelude::*;

use super::tables::QuadratureTables;
use crate::geometry::{ElementMesh, Patch};

/// Contributions of `a(u, v) = ∫ ∇u·∇v - k² u v` from one row of radial
/// elements: unconstrained `(row, col, value)` triplets.
pub(crate) type Triplets = Vec<(usize, usize, f64)>;

/// Element loop over the whole patch, parallel over radial element rows and
/// merged in row order so the output does not depend on scheduling.
pub(crate) fn field_triplets(patch: &Patch, mesh: &ElementMesh, tables: &QuadratureTables, k: f64) -> Triplets {
    let na = mesh.angular_spans.len();
    let rows: Vec<Triplets> = (0..mesh.radial_spans.len())
        .into_par_iter()
        .map(|er| {
            let mut out = Vec::new();
            for ea in 0..na {
                let element = &mesh.elements[er * na + ea];
                let local = element_matrix(patch, &tables.radial[er], &tables.angular[ea], k);
                let n = element.dofs.len();
                for a in 0..n {
                    for b in 0..n {
                        out.push((element.dofs[a], element.dofs[b], local[a * n + b]));
                    }
                }
            }
            out
        })
        .collect();
    rows.into_iter().flatten().collect()
}

/// Dense element matrix, local index `a (p + 1) + b` with `a` radial.
pub(crate) fn element_matrix(
    patch: &Patch,
    radial: &[super::tables::RadialSample],
    angular: &[super::tables::AngularSample],
    k: f64,
) -> Vec<f64> {
    let nr = radial[0].basis.values.len();
    let nt = angular[0].basis.values.len();
    let n = nr * nt;
    let k2 = k * k;
    let mut local = vec![0.0; n * n];
    let mut val = vec![0.0; n];
    let mut gx = vec![0.0; n];
    let mut gy = vec![0.0; n];
    for rs in radial {
        for s in angular {
            let map = patch.point_map(rs.xi, &s.point);
            let w = rs.weight * s.weight * map.det.abs() * patch.measure_weight(map.x);
            let inv = map.inverse;
            for a in 0..nr {
                let (ra, dra) = (rs.basis.values[a], rs.basis.first[a]);
                for b in 0..nt {
                    let (tb, dtb) = (s.basis.values[b], s.basis.first[b]);
                    let (dxi, deta) = (dra * tb, ra * dtb);
                    let i = a * nt + b;
                    val[i] = ra * tb;
                    gx[i] = inv[0][0] * dxi + inv[1][0] * deta;
                    gy[i] = inv[0][1] * dxi + inv[1][1] * deta;
                }
            }
            for i in 0..n {
                let (vi, xi, yi) = (val[i] * w, gx[i] * w, gy[i] * w);
                let row = &mut local[i * n..(i + 1) * n];
                for j in i..n {
                    row[j] += xi * gx[j] + yi * gy[j] - k2 * vi * val[j];
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..i {
            local[i * n + j] = local[j * n + i];
        }
    }
    local
}

