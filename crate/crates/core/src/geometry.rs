//! Tensor-product patches for the annulus `r_0 <= r <= R` (2D) and the
//! meridian half annulus of an axisymmetric 3D domain.
//!
//! The map is `x(ξ, η) = r(ξ) c(η)` where `r` is linear in `ξ ∈ [0, 1]`
//! (reproduced exactly by the radial B-spline with Greville control radii)
//! and `c` is an exact NURBS unit circle or half circle. This equals the
//! tensor NURBS patch with control points `r_i P_j` and weights `w_j`.

use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::splines::{
    unit_circle, unit_half_circle, BasisEval, KnotVector, NurbsBasis, NurbsCurve, PeriodicMap,
    RefinementSpec, Span,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatchKind {
    /// Full annulus in the plane, periodic in the angular direction.
    Annulus,
    /// Half annulus in the meridian plane `(s, z)`, `s` the distance to the
    /// symmetry axis. Integrals carry the weight `s`.
    Meridian,
}

/// Requested resolution: control points per wavelength, or element counts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GridSpec {
    PerWavelength(f64),
    Elements { radial: usize, angular: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Edge {
    /// The scatterer boundary `r = r_0`.
    Inner,
    /// The artificial boundary `r = R`.
    Outer,
}

/// Geometry map, Jacobian `∂x/∂(ξ, η)` and its inverse at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointMap {
    pub x: [f64; 2],
    pub jacobian: [[f64; 2]; 2],
    pub det: f64,
    pub inverse: [[f64; 2]; 2],
}

/// Unit curve data at an angular parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngularPoint {
    pub eta: f64,
    pub unit: [f64; 2],
    pub tangent: [f64; 2],
    /// `|c'(η)| = dθ/dη` (up to sign for the meridian).
    pub speed: f64,
}

/// One element: a pair of nonzero knot spans and the field DOFs it touches.
#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    pub radial: Span,
    pub angular: Span,
    /// Unconstrained field DOF of local function `a (p + 1) + b`, `a` radial.
    pub dofs: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ElementMesh {
    pub elements: Vec<Element>,
    pub radial_spans: Vec<Span>,
    pub angular_spans: Vec<Span>,
}

/// Boundary curve data for `Γ` or `S_R`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryTrace<'a> {
    pub edge: Edge,
    pub radius: f64,
    pub basis: &'a NurbsBasis,
    pub map: &'a PeriodicMap,
    /// Unconstrained field DOF of every unique angular DOF.
    pub dofs: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Patch {
    kind: PatchKind,
    r0: f64,
    r_outer: f64,
    degree: usize,
    radial: NurbsBasis,
    angular: NurbsBasis,
    curve: NurbsCurve,
    angular_map: PeriodicMap,
}

/// Element counts `(N_e, m_e)` for a grid request.
pub fn grid_elements(
    kind: PatchKind,
    r0: f64,
    r_outer: f64,
    degree: usize,
    k: f64,
    grid: GridSpec,
) -> Result<(usize, usize)> {
    match grid {
        GridSpec::Elements { radial, angular } => Ok((radial, angular)),
        GridSpec::PerWavelength(n_lambda) => {
            if !(n_lambda > 0.0) || !(k > 0.0) {
                return Err(Error::Config(
                    "points per wavelength and wavenumber must be positive".into(),
                ));
            }
            let p = degree as f64;
            let radial_ctrl = ((r_outer - r0) * n_lambda * k / TAU).round().max(p + 1.0);
            let radial = radial_ctrl as usize - degree;
            let (arcs, target) = match kind {
                PatchKind::Annulus => (4.0, r0 * k * n_lambda),
                PatchKind::Meridian => (2.0, 0.5 * r0 * k * n_lambda),
            };
            // Unrolled angular control points = m_e + extra.
            let extra = if degree == 1 { 1.0 } else { arcs * (p - 1.0) + 1.0 };
            let angular = (arcs * ((target - extra) / arcs).round()).max(arcs) as usize;
            Ok((radial, angular))
        }
    }
}

impl Patch {
    fn build(
        kind: PatchKind,
        r0: f64,
        r_outer: f64,
        degree: usize,
        radial_elements: usize,
        angular_elements: usize,
    ) -> Result<Self> {
        if !(r0 > 0.0 && r_outer > r0 && r_outer.is_finite()) {
            return Err(Error::Config(format!("radii must satisfy R > r_0 > 0, got r_0={r0}, R={r_outer}")));
        }
        if degree == 0 {
            return Err(Error::Config("basis degree must be at least 1".into()));
        }
        let (base, arcs) = match kind {
            PatchKind::Annulus => (unit_circle(), 4usize),
            PatchKind::Meridian => (unit_half_circle(), 2usize),
        };
        if radial_elements == 0 || angular_elements < arcs {
            return Err(Error::Config(format!(
                "need at least 1 radial and {arcs} angular elements, got {radial_elements}x{angular_elements}"
            )));
        }

        let mut knots = Vec::with_capacity(angular_elements - arcs);
        for a in 0..arcs {
            let per_arc = angular_elements / arcs + usize::from(a < angular_elements % arcs);
            let (lo, hi) = (a as f64 / arcs as f64, (a + 1) as f64 / arcs as f64);
            for i in 1..per_arc {
                knots.push(lo + (hi - lo) * i as f64 / per_arc as f64);
            }
        }
        let spec = RefinementSpec { degree: degree.max(2), knots, periodic: kind == PatchKind::Annulus };
        let (curve, _) = base.refine(&spec)?;

        let angular = if degree >= 2 {
            curve.basis().clone()
        } else {
            let breaks: Vec<f64> = curve.basis().knots().distinct().iter().map(|d| d.0).collect();
            let interior = vec![1; breaks.len() - 2];
            NurbsBasis::bspline(KnotVector::open_from_breaks(1, &breaks, &interior)?)
        };
        let angular_map = match kind {
            PatchKind::Annulus => PeriodicMap::closed(angular.len())?,
            PatchKind::Meridian => PeriodicMap::open(angular.len()),
        };
        let radial = NurbsBasis::bspline(KnotVector::open_uniform(degree, radial_elements, 0.0, 1.0)?);
        if radial.len() < degree + 1 || angular.len() < degree + 1 {
            return Err(Error::Config("control-point counts below degree + 1".into()));
        }
        Ok(Patch { kind, r0, r_outer, degree, radial, angular, curve, angular_map })
    }

    pub fn kind(&self) -> PatchKind {
        self.kind
    }

    pub fn inner_radius(&self) -> f64 {
        self.r0
    }

    pub fn outer_radius(&self) -> f64 {
        self.r_outer
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn radial_basis(&self) -> &NurbsBasis {
        &self.radial
    }

    pub fn angular_basis(&self) -> &NurbsBasis {
        &self.angular
    }

    pub fn angular_map(&self) -> &PeriodicMap {
        &self.angular_map
    }

    /// Refined unit boundary curve carrying the exact geometry.
    pub fn curve(&self) -> &NurbsCurve {
        &self.curve
    }

    /// Radial control points `N`.
    pub fn radial_count(&self) -> usize {
        self.radial.len()
    }

    /// Unrolled angular control points (the seam point counted twice in 2D).
    pub fn angular_count(&self) -> usize {
        self.angular.len()
    }

    /// Distinct angular DOFs `m`.
    pub fn angular_unique(&self) -> usize {
        self.angular_map.unique()
    }

    pub fn radial_elements(&self) -> usize {
        self.radial.knots().spans().len()
    }

    pub fn angular_elements(&self) -> usize {
        self.angular.knots().spans().len()
    }

    /// Unconstrained field DOF count `N m`.
    pub fn field_dofs(&self) -> usize {
        self.radial_count() * self.angular_unique()
    }

    /// Field DOF of radial function `i` and unrolled angular function `j`.
    pub fn field_dof(&self, i: usize, j: usize) -> usize {
        i * self.angular_unique() + self.angular_map.get(j)
    }

    /// Mesh size `h = r_0 Δθ` with `Δθ` the angular control spacing.
    pub fn mesh_size(&self) -> f64 {
        let arc = match self.kind {
            PatchKind::Annulus => TAU,
            PatchKind::Meridian => PI,
        };
        self.r0 * arc / self.angular_count() as f64
    }

    pub fn radius_at(&self, xi: f64) -> f64 {
        self.r0 + (self.r_outer - self.r0) * xi
    }

    pub fn angular_point(&self, eta: f64) -> Result<AngularPoint> {
        let (c, d) = self.curve.eval_derivs(eta)?;
        Ok(AngularPoint {
            eta,
            unit: [c[0], c[1]],
            tangent: [d[0], d[1]],
            speed: d[0].hypot(d[1]),
        })
    }

    pub fn jacobian(&self, xi: f64, eta: f64) -> Result<PointMap> {
        let a = self.angular_point(eta)?;
        Ok(self.point_map(xi, &a))
    }

    /// Geometry at `(ξ, η)` given precomputed curve data.
    pub fn point_map(&self, xi: f64, a: &AngularPoint) -> PointMap {
        let r = self.radius_at(xi);
        let dr = self.r_outer - self.r0;
        let jac = [[dr * a.unit[0], r * a.tangent[0]], [dr * a.unit[1], r * a.tangent[1]]];
        let det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0];
        let inverse = [[jac[1][1] / det, -jac[0][1] / det], [-jac[1][0] / det, jac[0][0] / det]];
        PointMap { x: [r * a.unit[0], r * a.unit[1]], jacobian: jac, det, inverse }
    }

    /// Integration weight of the physical measure: `1` in the plane, the
    /// axis distance `s` for the meridian.
    pub fn measure_weight(&self, x: [f64; 2]) -> f64 {
        match self.kind {
            PatchKind::Annulus => 1.0,
            PatchKind::Meridian => x[0],
        }
    }

    /// Polar angle of the boundary point at `η`: counterclockwise from the
    /// `x` axis in `[0, 2π]` for the annulus, from the `+z` axis in `[0, π]`
    /// for the meridian.
    pub fn theta(&self, eta: f64) -> Result<f64> {
        let c = self.curve.eval(eta)?;
        Ok(match self.kind {
            PatchKind::Annulus => {
                let mut t = c[1].atan2(c[0]);
                if t < 0.0 || (t == 0.0 && eta > 0.5) {
                    t += TAU;
                }
                if eta > 0.5 && t < 0.5 * PI {
                    t += TAU;
                }
                t
            }
            PatchKind::Meridian => c[0].max(0.0).atan2(c[1]),
        })
    }

    /// Inverse of [`Patch::theta`] by bisection.
    pub fn eta_from_theta(&self, theta: f64) -> Result<f64> {
        let (lo_t, hi_t, increasing) = match self.kind {
            PatchKind::Annulus => (0.0, TAU, true),
            PatchKind::Meridian => (0.0, PI, false),
        };
        if !(theta >= lo_t && theta <= hi_t) {
            return Err(Error::Domain(format!("angle {theta} outside [{lo_t}, {hi_t}]")));
        }
        let (mut a, mut b) = (0.0f64, 1.0f64);
        for _ in 0..64 {
            let mid = 0.5 * (a + b);
            let below = self.theta(mid)? < theta;
            if below == increasing {
                a = mid;
            } else {
                b = mid;
            }
        }
        Ok(0.5 * (a + b))
    }

    pub fn radial_eval(&self, span: usize, xi: f64) -> BasisEval {
        self.radial.eval_in_span(span, xi)
    }

    pub fn angular_eval(&self, span: usize, eta: f64) -> BasisEval {
        self.angular.eval_in_span(span, eta)
    }

    pub fn mesh(&self) -> ElementMesh {
        let radial_spans = self.radial.knots().spans();
        let angular_spans = self.angular.knots().spans();
        let p = self.degree;
        let mut elements = Vec::with_capacity(radial_spans.len() * angular_spans.len());
        for rs in &radial_spans {
            for as_ in &angular_spans {
                let mut dofs = Vec::with_capacity((p + 1) * (p + 1));
                for a in 0..=p {
                    for b in 0..=p {
                        dofs.push(self.field_dof(rs.index - p + a, as_.index - p + b));
                    }
                }
                elements.push(Element { radial: *rs, angular: *as_, dofs });
            }
        }
        ElementMesh { elements, radial_spans, angular_spans }
    }

    pub fn boundary_trace(&self, edge: Edge) -> BoundaryTrace<'_> {
        let (i, radius) = match edge {
            Edge::Inner => (0, self.r0),
            Edge::Outer => (self.radial_count() - 1, self.r_outer),
        };
        let m = self.angular_unique();
        BoundaryTrace {
            edge,
            radius,
            basis: &self.angular,
            map: &self.angular_map,
            dofs: (0..m).map(|j| i * m + j).collect(),
        }
    }

    /// Tensor control net `r_i P_j` with weights `w_j` when the solution
    /// basis is the geometry basis (degree >= 2).
    pub fn control_net(&self) -> Option<Vec<Vec<([f64; 2], f64)>>> {
        if self.degree < 2 {
            return None;
        }
        let radii: Vec<f64> = self.radial.knots().greville().iter().map(|&g| self.radius_at(g)).collect();
        let pts = self.curve.points();
        let w = self.curve.basis().weights();
        Some(
            radii
                .iter()
                .map(|&r| pts.iter().zip(w).map(|(p, &wj)| ([r * p[0], r * p[1]], wj)).collect())
                .collect(),
        )
    }
}

/// Annulus patch between `r0` and `r_outer`.
pub fn build_annulus(
    r0: f64,
    r_outer: f64,
    degree: usize,
    grid: GridSpec,
    k: f64,
) -> Result<(Patch, ElementMesh)> {
    let (ne, me) = grid_elements(PatchKind::Annulus, r0, r_outer, degree, k, grid)?;
    let patch = Patch::build(PatchKind::Annulus, r0, r_outer, degree, ne, me)?;
    let mesh = patch.mesh();
    Ok((patch, mesh))
}

/// Meridian half-annulus patch between `r0` and `r_outer`.
pub fn build_meridian(
    r0: f64,
    r_outer: f64,
    degree: usize,
    grid: GridSpec,
    k: f64,
) -> Result<(Patch, ElementMesh)> {
    let (ne, me) = grid_elements(PatchKind::Meridian, r0, r_outer, degree, k, grid)?;
    let patch = Patch::build(PatchKind::Meridian, r0, r_outer, degree, ne, me)?;
    let mesh = patch.mesh();
    Ok((patch, mesh))
}
