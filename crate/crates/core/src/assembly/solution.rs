use num_complex::Complex64;

use super::BlockSystem;
use crate::error::Result;
use crate::geometry::Patch;
use crate::linsolve::{solve_with, Solution, SolveOptions};

/// Solved field coefficients (prescribed values included) and the far-field
/// expansion coefficients `families[f][l][j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteSolution {
    pub field: Vec<Complex64>,
    pub families: Vec<Vec<Vec<Complex64>>>,
}

impl BlockSystem {
    /// Factor, solve and scatter the unknowns back into a [`DiscreteSolution`].
    pub fn solve(&self, opts: SolveOptions) -> Result<(DiscreteSolution, Solution)> {
        let sol = solve_with(&self.matrix, &self.rhs, opts)?;
        Ok((DiscreteSolution::from_unknowns(self, &sol.x), sol))
    }
}

impl DiscreteSolution {
    pub fn from_unknowns(system: &BlockSystem, x: &[Complex64]) -> Self {
        let lay = &system.layout;
        let field = lay
            .free_map
            .iter()
            .zip(&system.lifted)
            .map(|(f, &g)| f.map_or(g, |i| x[i]))
            .collect();
        let families = (0..lay.families)
            .map(|f| {
                (0..lay.terms)
                    .map(|l| (0..lay.boundary_dofs).map(|j| x[lay.coefficient(f, l, j)]).collect())
                    .collect()
            })
            .collect();
        DiscreteSolution { field, families }
    }

    /// `u_h(ξ, η)`.
    pub fn field_at(&self, patch: &Patch, xi: f64, eta: f64) -> Result<Complex64> {
        let rb = patch.radial_basis().eval(xi)?;
        let ab = patch.angular_basis().eval(eta)?;
        let (r0, a0) = (rb.first_index(), ab.first_index());
        let mut u = Complex64::new(0.0, 0.0);
        for (a, rv) in rb.values.iter().enumerate() {
            for (b, av) in ab.values.iter().enumerate() {
                u += self.field[patch.field_dof(r0 + a, a0 + b)] * (rv * av);
            }
        }
        Ok(u)
    }

    /// Expansion coefficient `family` of term `l` evaluated at `η` on `S_R`.
    pub fn coefficient_at(&self, patch: &Patch, family: usize, l: usize, eta: f64) -> Result<Complex64> {
        let ab = patch.angular_basis().eval(eta)?;
        let coeffs = &self.families[family][l];
        let a0 = ab.first_index();
        Ok(ab
            .values
            .iter()
            .enumerate()
            .map(|(b, v)| coeffs[patch.angular_map().get(a0 + b)] * v)
            .sum())
    }
}
