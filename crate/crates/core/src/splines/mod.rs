//! Univariate B-spline and NURBS bases with refinement and seam coupling.

mod basis;
mod knots;
mod periodic;
mod refine;

pub use basis::{eval_bspline, eval_bspline_in_span, eval_nurbs, BasisEval, NurbsBasis};
pub use knots::{KnotVector, Span};
pub use periodic::{periodic_couple, PeriodicMap};
pub use refine::{NurbsCurve, RefinementSpec};

use std::f64::consts::FRAC_1_SQRT_2;

/// Exact unit circle: four rational quadratic arcs starting at (1, 0),
/// counterclockwise, with C0 joints at the quarter points.
pub fn unit_circle() -> NurbsCurve {
    let kv = KnotVector::new(
        vec![0.0, 0.0, 0.0, 0.25, 0.25, 0.5, 0.5, 0.75, 0.75, 1.0, 1.0, 1.0],
        2,
    )
    .expect("valid circle knots");
    let pts = [
        [1.0, 0.0],
        [1.0, 1.0],
        [0.0, 1.0],
        [-1.0, 1.0],
        [-1.0, 0.0],
        [-1.0, -1.0],
        [0.0, -1.0],
        [1.0, -1.0],
        [1.0, 0.0],
    ];
    let weights = (0..9).map(|i| if i % 2 == 0 { 1.0 } else { FRAC_1_SQRT_2 }).collect();
    let basis = NurbsBasis::new(kv, weights).expect("valid circle weights");
    NurbsCurve::new(basis, pts.iter().map(|p| p.to_vec()).collect()).expect("valid circle")
}

/// Exact unit half circle in the meridian plane `(s, z)` from the south pole
/// `(0, -1)` to the north pole `(0, 1)`: two rational quadratic arcs.
pub fn unit_half_circle() -> NurbsCurve {
    let kv = KnotVector::new(vec![0.0, 0.0, 0.0, 0.5, 0.5, 1.0, 1.0, 1.0], 2)
        .expect("valid half-circle knots");
    let pts = [[0.0, -1.0], [1.0, -1.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]];
    let weights = vec![1.0, FRAC_1_SQRT_2, 1.0, FRAC_1_SQRT_2, 1.0];
    let basis = NurbsBasis::new(kv, weights).expect("valid half-circle weights");
    NurbsCurve::new(basis, pts.iter().map(|p| p.to_vec()).collect()).expect("valid half circle")
}
