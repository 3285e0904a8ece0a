use super::quadrature::QuadratureRule;
use crate::error::Result;
use crate::geometry::{AngularPoint, Patch};
use crate::splines::BasisEval;

/// Radial quadrature point with the nonzero radial basis functions.
#[derive(Debug, Clone)]
pub struct RadialSample {
    pub xi: f64,
    pub weight: f64,
    pub basis: BasisEval,
}

/// Angular quadrature point with curve data and the nonzero angular basis.
#[derive(Debug, Clone)]
pub struct AngularSample {
    pub weight: f64,
    pub point: AngularPoint,
    pub basis: BasisEval,
}

/// Basis and curve samples at the quadrature points of every span, per
/// direction. The tensor structure means an element only combines one
/// radial and one angular row.
#[derive(Debug, Clone)]
pub struct QuadratureTables {
    pub points: usize,
    pub radial: Vec<Vec<RadialSample>>,
    pub angular: Vec<Vec<AngularSample>>,
}

impl QuadratureTables {
    pub fn new(patch: &Patch, points: usize) -> Result<Self> {
        let rule = QuadratureRule::gauss_legendre(points)?;
        let radial = patch
            .radial_basis()
            .knots()
            .spans()
            .iter()
            .map(|s| {
                rule.mapped(s.start, s.end)
                    .map(|(xi, weight)| RadialSample { xi, weight, basis: patch.radial_eval(s.index, xi) })
                    .collect()
            })
            .collect();
        let angular = patch
            .angular_basis()
            .knots()
            .spans()
            .iter()
            .map(|s| {
                rule.mapped(s.start, s.end)
                    .map(|(eta, weight)| {
                        Ok(AngularSample {
                            weight,
                            point: patch.angular_point(eta)?,
                            basis: patch.angular_eval(s.index, eta),
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QuadratureTables { points, radial, angular })
    }
}
