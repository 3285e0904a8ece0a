use super::refine::NurbsCurve;
use crate::error::{domain, Error, Result};

/// Identification of the last unrolled basis function of a closed direction
/// with the first one. The coupled field is C0 across the seam.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicMap {
    map: Vec<usize>,
    unique: usize,
}

impl PeriodicMap {
    /// Couple `unrolled` functions whose first and last members meet at the
    /// seam.
    pub fn closed(unrolled: usize) -> Result<Self> {
        if unrolled < 3 {
            return domain("a closed direction needs at least three basis functions");
        }
        let unique = unrolled - 1;
        Ok(PeriodicMap { map: (0..unrolled).map(|i| i % unique).collect(), unique })
    }

    /// Identity map for an open direction.
    pub fn open(unrolled: usize) -> Self {
        PeriodicMap { map: (0..unrolled).collect(), unique: unrolled }
    }

    pub fn unique(&self) -> usize {
        self.unique
    }

    pub fn unrolled(&self) -> usize {
        self.map.len()
    }

    pub fn is_periodic(&self) -> bool {
        self.unique != self.map.len()
    }

    /// Unique DOF of unrolled basis function `i`.
    pub fn get(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    /// Coefficients on the unrolled basis from coefficients on unique DOFs.
    pub fn expand<T: Copy>(&self, coupled: &[T]) -> Vec<T> {
        assert_eq!(coupled.len(), self.unique);
        self.map.iter().map(|&j| coupled[j]).collect()
    }
}

/// Seam identification for a closed curve; fails if the end points differ
/// by more than 1e-12.
pub fn periodic_couple(curve: &NurbsCurve) -> Result<PeriodicMap> {
    let pts = curve.points();
    let (first, last) = (&pts[0], &pts[pts.len() - 1]);
    let gap = first
        .iter()
        .zip(last)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt();
    if gap > 1e-12 {
        return Err(Error::Geometry(format!("curve is not closed: seam gap {gap:.3e}")));
    }
    PeriodicMap::closed(pts.len())
}
