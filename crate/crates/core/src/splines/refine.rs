use super::basis::NurbsBasis;
use super::knots::KnotVector;
use super::periodic::{periodic_couple, PeriodicMap};
use crate::error::{domain, Error, Result};

/// Requested refinement of a curve: elevate to `degree`, then insert
/// `knots` one at a time. With `periodic` set the curve must be closed.
#[derive(Debug, Clone, PartialEq)]
pub struct RefinementSpec {
    pub degree: usize,
    pub knots: Vec<f64>,
    pub periodic: bool,
}

/// A NURBS curve in `dim` dimensions with Cartesian control points.
#[derive(Debug, Clone, PartialEq)]
pub struct NurbsCurve {
    basis: NurbsBasis,
    points: Vec<Vec<f64>>,
}

impl NurbsCurve {
    pub fn new(basis: NurbsBasis, points: Vec<Vec<f64>>) -> Result<Self> {
        if points.len() != basis.len() {
            return domain(format!(
                "{} control points for {} basis functions",
                points.len(),
                basis.len()
            ));
        }
        let dim = points.first().map_or(0, Vec::len);
        if dim == 0 || points.iter().any(|p| p.len() != dim) {
            return domain("control points must share a nonzero dimension");
        }
        Ok(NurbsCurve { basis, points })
    }

    pub fn basis(&self) -> &NurbsBasis {
        &self.basis
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn degree(&self) -> usize {
        self.basis.degree()
    }

    /// Point on the curve.
    pub fn eval(&self, xi: f64) -> Result<Vec<f64>> {
        Ok(self.eval_derivs(xi)?.0)
    }

    /// Point and first parametric derivative.
    pub fn eval_derivs(&self, xi: f64) -> Result<(Vec<f64>, Vec<f64>)> {
        let b = self.basis.eval(xi)?;
        let first = b.first_index();
        let mut x = vec![0.0; self.dim()];
        let mut dx = vec![0.0; self.dim()];
        for a in 0..b.values.len() {
            for (d, c) in self.points[first + a].iter().enumerate() {
                x[d] += b.values[a] * c;
                dx[d] += b.first[a] * c;
            }
        }
        Ok((x, dx))
    }

    fn homogeneous(&self) -> Vec<Vec<f64>> {
        self.points
            .iter()
            .zip(self.basis.weights())
            .map(|(p, &w)| p.iter().map(|c| c * w).chain(std::iter::once(w)).collect())
            .collect()
    }

    fn from_homogeneous(kv: KnotVector, hom: Vec<Vec<f64>>) -> Result<Self> {
        let dim = hom[0].len() - 1;
        let weights: Vec<f64> = hom.iter().map(|h| h[dim]).collect();
        let points = hom
            .iter()
            .map(|h| h[..dim].iter().map(|c| c / h[dim]).collect())
            .collect();
        NurbsCurve::new(NurbsBasis::new(kv, weights)?, points)
    }

    /// Boehm insertion of a single knot strictly inside the domain.
    pub fn insert_knot(&self, xi: f64) -> Result<Self> {
        let kv = self.basis.knots();
        let (a, b) = kv.domain();
        if !(xi > a && xi < b) {
            return domain(format!("inserted knot {xi} must lie strictly inside ({a}, {b})"));
        }
        let p = kv.degree();
        if kv.multiplicity(xi) + 1 > p {
            return domain(format!("inserting {xi} would make the basis discontinuous"));
        }
        let u = kv.knots();
        let k = kv.find_span(xi)?;
        let hom = self.homogeneous();
        let n = hom.len();
        let mut out = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let q = if i + p <= k {
                hom[i].clone()
            } else if i > k {
                hom[i - 1].clone()
            } else {
                let alpha = (xi - u[i]) / (u[i + p] - u[i]);
                hom[i]
                    .iter()
                    .zip(&hom[i - 1])
                    .map(|(pi, pm)| alpha * pi + (1.0 - alpha) * pm)
                    .collect()
            };
            out.push(q);
        }
        let mut knots = u.to_vec();
        knots.insert(k + 1, xi);
        Self::from_homogeneous(KnotVector::new(knots, p)?, out)
    }

    /// Raise the degree by one, keeping the continuity at every knot. The
    /// homogeneous curve is interpolated at the Greville points of the
    /// elevated basis, which reproduces it exactly.
    pub fn elevate_degree(&self) -> Result<Self> {
        let kv = self.basis.knots();
        if !kv.is_open() {
            return domain("degree elevation requires an open knot vector");
        }
        let p = kv.degree();
        let mut knots = Vec::with_capacity(kv.knots().len() + kv.distinct().len());
        for (value, m) in kv.distinct() {
            knots.extend(std::iter::repeat(value).take(m + 1));
        }
        let elevated = KnotVector::new(knots, p + 1)?;
        let new_basis = NurbsBasis::bspline(elevated.clone());
        let n = elevated.num_basis();
        let sites = elevated.greville();

        let old_hom = self.homogeneous();
        let old = NurbsBasis::bspline(kv.clone());
        let cols = old_hom[0].len();
        let mut matrix = vec![vec![0.0; n]; n];
        let mut rhs = vec![vec![0.0; cols]; n];
        for (row, &s) in sites.iter().enumerate() {
            let e = new_basis.eval(s)?;
            for (a, v) in e.values.iter().enumerate() {
                matrix[row][e.first_index() + a] = *v;
            }
            let o = old.eval(s)?;
            for (a, v) in o.values.iter().enumerate() {
                for c in 0..cols {
                    rhs[row][c] += v * old_hom[o.first_index() + a][c];
                }
            }
        }
        let hom = dense_solve(matrix, rhs)?;
        Self::from_homogeneous(elevated, hom)
    }

    /// Elevate to `spec.degree`, then insert `spec.knots`.
    pub fn refine(&self, spec: &RefinementSpec) -> Result<(Self, Option<PeriodicMap>)> {
        if spec.degree < self.degree() {
            return domain(format!(
                "target degree {} is below the current degree {}",
                spec.degree,
                self.degree()
            ));
        }
        let mut curve = self.clone();
        while curve.degree() < spec.degree {
            curve = curve.elevate_degree()?;
        }
        for &xi in &spec.knots {
            curve = curve.insert_knot(xi)?;
        }
        let map = if spec.periodic { Some(periodic_couple(&curve)?) } else { None };
        Ok((curve, map))
    }
}

/// Gaussian elimination with partial pivoting for a small dense system with
/// several right-hand sides.
fn dense_solve(mut a: Vec<Vec<f64>>, mut b: Vec<Vec<f64>>) -> Result<Vec<Vec<f64>>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        if a[pivot][col].abs() < 1e-300 {
            return Err(Error::Geometry("singular collocation matrix".into()));
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            if f == 0.0 {
                continue;
            }
            for c in col..n {
                a[row][c] -= f * a[col][c];
            }
            for c in 0..b[row].len() {
                b[row][c] -= f * b[col][c];
            }
        }
    }
    for row in (0..n).rev() {
        for c in 0..b[row].len() {
            let mut s = b[row][c];
            for j in row + 1..n {
                s -= a[row][j] * b[j][c];
            }
            b[row][c] = s / a[row][row];
        }
    }
    Ok(b)
}
