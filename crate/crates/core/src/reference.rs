//! Exact scattering solutions, a semi-analytic modal solution of the truncated
//! Karp problem, discrete error norms and convergence-order fits.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::assembly::{BoundaryKind, DiscreteSolution, QuadratureTables};
use crate::error::{Error, Result};
use crate::farfield_abc::{ffp_scale, karp_recurrence_rhs, kfe_coeffs};
use crate::geometry::{Patch, PatchKind};
use crate::specfun::{bessel_jy_upto, hankel1_upto, legendre_p_upto, sph_bessel_upto};

/// Number of uniformly spaced angles used for far-field comparisons.
pub const FFP_SAMPLES: usize = 720;

/// Modes whose contribution on the scatterer relative to the largest one
/// falls below this are dropped from the series.
const SERIES_CUTOFF: f64 = 1e-18;

type C = Complex64;

/// A scattered field `u(r, θ) = Σ_n c_n R_n(r) Θ_n(θ)` given mode by mode.
pub trait SeparableSolution: Sync {
    /// `c_n R_n(r)` for every retained mode.
    fn radial(&self, r: f64) -> Result<Vec<C>>;
    /// `Θ_n` at the point of the unit circle (or meridian) `unit`.
    fn angular(&self, unit: [f64; 2]) -> Vec<f64>;

    fn eval(&self, r: f64, unit: [f64; 2]) -> Result<C> {
        let rad = self.radial(r)?;
        Ok(rad.iter().zip(self.angular(unit)).map(|(a, b)| a * b).sum())
    }

    /// Far-field pattern at the listed angles.
    fn ffp(&self, thetas: &[f64]) -> Vec<C>;
}

/// Largest order not above `nmax` for which `Y_n(x)` stays finite.
fn jy_capped(mut nmax: usize, x: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    loop {
        match bessel_jy_upto(nmax, x) {
            Ok(v) => return Ok(v),
            Err(e) if nmax == 0 => return Err(e),
            Err(_) => nmax = nmax * 3 / 4,
        }
    }
}

fn sph_capped(mut nmax: usize, x: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    loop {
        match sph_bessel_upto(nmax, x) {
            Ok(v) => return Ok(v),
            Err(e) if nmax == 0 => return Err(e),
            Err(_) => nmax = nmax * 3 / 4,
        }
    }
}

/// Drop trailing modes whose size `|c_n| scale_n` is negligible; modes up to
/// `past` are always kept.
fn truncate_modes(coeffs: &mut Vec<C>, scale: &[f64], past: usize) {
    let size: Vec<f64> = coeffs.iter().zip(scale).map(|(c, s)| c.norm() * s).collect();
    let peak = size.iter().copied().fold(0.0, f64::max);
    let keep = size
        .iter()
        .enumerate()
        .rposition(|(n, s)| n <= past || *s > SERIES_CUTOFF * peak)
        .map_or(0, |i| i + 1);
    coeffs.truncate(keep.max(1));
}

fn i_pow(n: usize) -> C {
    [C::new(1.0, 0.0), C::new(0.0, 1.0), C::new(-1.0, 0.0), C::new(0.0, -1.0)][n % 4]
}

fn mode_count(k: f64, radius: f64) -> usize {
    (k * radius).ceil() as usize + 40
}

/// Plane wave `e^{ikx}` scattered by a circular cylinder of radius `r0`:
/// `u = Σ c_n H_n(kr) cos nθ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactCylinder {
    pub k: f64,
    pub r0: f64,
    pub coeffs: Vec<C>,
}

impl ExactCylinder {
    pub fn new(k: f64, r0: f64, boundary: BoundaryKind) -> Result<Self> {
        if !(k > 0.0 && r0 > 0.0) {
            return Err(Error::Config("wavenumber and radius must be positive".into()));
        }
        let x = k * r0;
        let (j, y) = jy_capped(mode_count(k, r0) + 1, x)?;
        let nmax = j.len() - 2;
        let mut coeffs = Vec::with_capacity(nmax + 1);
        for n in 0..=nmax {
            let (jn, yn) = match boundary {
                BoundaryKind::Soft => (j[n], y[n]),
                BoundaryKind::Hard => derivative_pair(&j, &y, n, x),
            };
            let eps = if n == 0 { 1.0 } else { 2.0 };
            coeffs.push(-eps * i_pow(n) * jn / C::new(jn, yn));
        }
        let scale: Vec<f64> = j.iter().zip(&y).map(|(j, y)| j.hypot(*y)).collect();
        truncate_modes(&mut coeffs, &scale, x.ceil() as usize);
        Ok(ExactCylinder { k, r0, coeffs })
    }
}

fn derivative_pair(j: &[f64], y: &[f64], n: usize, x: f64) -> (f64, f64) {
    let nf = n as f64;
    if n == 0 {
        (-j[1], -y[1])
    } else {
        (j[n - 1] - nf / x * j[n], y[n - 1] - nf / x * y[n])
    }
}

impl ExactCylinder {
    /// The same field for an incident wave of amplitude `a`.
    pub fn scaled(mut self, a: f64) -> Self {
        self.coeffs.iter_mut().for_each(|c| *c *= a);
        self
    }
}

impl SeparableSolution for ExactCylinder {
    fn radial(&self, r: f64) -> Result<Vec<C>> {
        let h = hankel1_upto(self.coeffs.len() - 1, self.k * r)?;
        Ok(self.coeffs.iter().zip(h).map(|(c, h)| c * h).collect())
    }

    fn angular(&self, unit: [f64; 2]) -> Vec<f64> {
        let t = unit[1].atan2(unit[0]);
        (0..self.coeffs.len()).map(|n| (n as f64 * t).cos()).collect()
    }

    fn ffp(&self, thetas: &[f64]) -> Vec<C> {
        let s = ffp_scale(self.k);
        thetas
            .iter()
            .map(|&t| {
                s * self
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(n, c)| c * i_pow(n).conj() * (n as f64 * t).cos())
                    .sum::<C>()
            })
            .collect()
    }
}

/// Plane wave `e^{ikz}` scattered by a sphere of radius `r0`:
/// `u = Σ c_n h_n(kr) P_n(cos θ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactSphere {
    pub k: f64,
    pub r0: f64,
    pub coeffs: Vec<C>,
}

impl ExactSphere {
    pub fn new(k: f64, r0: f64, boundary: BoundaryKind) -> Result<Self> {
        if !(k > 0.0 && r0 > 0.0) {
            return Err(Error::Config("wavenumber and radius must be positive".into()));
        }
        let x = k * r0;
        let (j, y) = sph_capped(mode_count(k, r0) + 1, x)?;
        let nmax = j.len() - 2;
        let mut coeffs = Vec::with_capacity(nmax + 1);
        for n in 0..=nmax {
            let nf = n as f64;
            let (jn, yn) = match boundary {
                BoundaryKind::Soft => (j[n], y[n]),
                BoundaryKind::Hard if n == 0 => (-j[1], -y[1]),
                BoundaryKind::Hard => (j[n - 1] - (nf + 1.0) / x * j[n], y[n - 1] - (nf + 1.0) / x * y[n]),
            };
            coeffs.push(-(2.0 * nf + 1.0) * i_pow(n) * jn / C::new(jn, yn));
        }
        let scale: Vec<f64> = j.iter().zip(&y).map(|(j, y)| j.hypot(*y)).collect();
        truncate_modes(&mut coeffs, &scale, x.ceil() as usize);
        Ok(ExactSphere { k, r0, coeffs })
    }
}

impl ExactSphere {
    /// The same field for an incident wave of amplitude `a`.
    pub fn scaled(mut self, a: f64) -> Self {
        self.coeffs.iter_mut().for_each(|c| *c *= a);
        self
    }
}

impl SeparableSolution for ExactSphere {
    fn radial(&self, r: f64) -> Result<Vec<C>> {
        let (j, y) = sph_bessel_upto(self.coeffs.len() - 1, self.k * r)?;
        Ok(self.coeffs.iter().zip(j.iter().zip(&y)).map(|(c, (j, y))| c * C::new(*j, *y)).collect())
    }

    fn angular(&self, unit: [f64; 2]) -> Vec<f64> {
        legendre_p_upto(self.coeffs.len() - 1, unit[1].clamp(-1.0, 1.0)).expect("argument clamped")
    }

    /// `u ~ e^{ikr}/r f(θ)`.
    fn ffp(&self, thetas: &[f64]) -> Vec<C> {
        thetas
            .iter()
            .map(|&t| {
                let p = legendre_p_upto(self.coeffs.len() - 1, t.cos().clamp(-1.0, 1.0)).expect("clamped");
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(n, c)| c * i_pow(n + 1).conj() * p[n] / self.k)
                    .sum()
            })
            .collect()
    }
}

/// Uniform angles `2π s / count`, `s = 0..count`.
pub fn ffp_angles(count: usize) -> Vec<f64> {
    (0..count).map(|s| TAU * s as f64 / count as f64).collect()
}

/// Scattered field of the cylinder at `(r, θ)`.
pub fn exact_scattered_cylinder(k: f64, r0: f64, boundary: BoundaryKind, r: f64, theta: f64) -> Result<C> {
    ExactCylinder::new(k, r0, boundary)?.eval(r, [theta.cos(), theta.sin()])
}

/// Far-field pattern of the cylinder at `θ`.
pub fn exact_ffp_cylinder(k: f64, r0: f64, boundary: BoundaryKind, theta: f64) -> Result<C> {
    Ok(ExactCylinder::new(k, r0, boundary)?.ffp(&[theta])[0])
}

/// Scattered field of the sound-soft sphere at `(r, θ)`, `θ` from the `+z` axis.
pub fn exact_scattered_sphere(k: f64, r0: f64, r: f64, theta: f64) -> Result<C> {
    ExactSphere::new(k, r0, BoundaryKind::Soft)?.eval(r, [theta.sin(), theta.cos()])
}

/// Relative discrete `ℓ²` distance between two sampled patterns.
pub fn relative_l2(numeric: &[C], exact: &[C]) -> f64 {
    let num: f64 = numeric.iter().zip(exact).map(|(a, b)| (a - b).norm_sqr()).sum();
    let den: f64 = exact.iter().map(|b| b.norm_sqr()).sum();
    (num / den).sqrt()
}

/// Far-field pattern from the computed `F_0, G_0` on `S_R`.
pub fn ffp_from_expansion(patch: &Patch, sol: &DiscreteSolution, k: f64, thetas: &[f64]) -> Result<Vec<C>> {
    if sol.families.len() != 2 || sol.families[0].is_empty() {
        return Err(Error::Config("far-field pattern needs a Karp-expansion solution".into()));
    }
    let mut f0 = Vec::with_capacity(thetas.len());
    let mut g0 = Vec::with_capacity(thetas.len());
    for &t in thetas {
        let eta = patch.eta_from_theta(t)?;
        f0.push(sol.coefficient_at(patch, 0, 0, eta)?);
        g0.push(sol.coefficient_at(patch, 1, 0, eta)?);
    }
    crate::farfield_abc::ffp_from_karp(&f0, &g0, k)
}

/// Far-field pattern `f = F_0 / k` (with `u ~ e^{ikr} f / r`) from a
/// Wilcox-expansion solution; angles are polar angles in `[0, π]`.
pub fn ffp_from_wilcox(patch: &Patch, sol: &DiscreteSolution, k: f64, thetas: &[f64]) -> Result<Vec<C>> {
    if sol.families.len() != 1 || sol.families[0].is_empty() {
        return Err(Error::Config("far-field pattern needs a Wilcox-expansion solution".into()));
    }
    thetas
        .iter()
        .map(|&t| Ok(sol.coefficient_at(patch, 0, 0, patch.eta_from_theta(t)?)? / k))
        .collect()
}

/// Far-field pattern of an exterior field known only on `r = R`: each
/// Fourier mode `c_n` of `u_h(R, θ)` is continued outward as
/// `c_n H_|n|(kr)/H_|n|(kR)`.
pub fn ffp_from_trace(
    patch: &Patch,
    sol: &DiscreteSolution,
    k: f64,
    tables: &QuadratureTables,
    thetas: &[f64],
) -> Result<Vec<C>> {
    let radius = patch.outer_radius();
    let nmax = mode_count(k, radius);
    let (j, y) = jy_capped(nmax, k * radius)?;
    let nmax = j.len() - 1;
    let mut modes = vec![C::new(0.0, 0.0); 2 * nmax + 1];
    for samples in &tables.angular {
        for s in samples {
            let u = outer_value(patch, sol, s);
            let t = s.point.unit[1].atan2(s.point.unit[0]);
            let w = s.weight * s.point.speed / TAU;
            for (idx, m) in modes.iter_mut().enumerate() {
                let n = idx as f64 - nmax as f64;
                *m += u * C::from_polar(w, -n * t);
            }
        }
    }
    let scale = ffp_scale(k);
    Ok(thetas
        .iter()
        .map(|&t| {
            scale
                * modes
                    .iter()
                    .enumerate()
                    .map(|(idx, c)| {
                        let n = idx as isize - nmax as isize;
                        let a = n.unsigned_abs();
                        c * i_pow(a).conj() * C::from_polar(1.0, n as f64 * t) / C::new(j[a], y[a])
                    })
                    .sum::<C>()
        })
        .collect())
}

fn outer_value(patch: &Patch, sol: &DiscreteSolution, s: &crate::assembly::AngularSample) -> C {
    let i = patch.radial_count() - 1;
    let first = s.basis.first_index();
    s.basis
        .values
        .iter()
        .enumerate()
        .map(|(b, v)| sol.field[patch.field_dof(i, first + b)] * v)
        .sum()
}

/// Relative `L²` errors against an exact solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorReport {
    /// Over the computational domain (weighted by the axis distance in 3D).
    pub domain: f64,
    /// Over the artificial boundary `S_R`.
    pub boundary: f64,
    /// Over the far-field pattern, when one is available.
    pub ffp: Option<f64>,
}

/// Squared error and squared exact norms `(domain, boundary)`.
struct ErrorSums {
    domain: (f64, f64),
    boundary: (f64, f64),
}

fn error_sums(
    patch: &Patch,
    sol: &DiscreteSolution,
    exact: &dyn SeparableSolution,
    tables: &QuadratureTables,
) -> Result<ErrorSums> {
    let angular: Vec<Vec<Vec<f64>>> = tables
        .angular
        .iter()
        .map(|span| span.iter().map(|s| exact.angular(s.point.unit)).collect())
        .collect();
    let partial = tables
        .radial
        .par_iter()
        .map(|rspan| -> Result<(f64, f64)> {
            let (mut num, mut den) = (0.0, 0.0);
            for rs in rspan {
                let radial = exact.radial(patch.radius_at(rs.xi))?;
                let rfirst = rs.basis.first_index();
                for (aspan, aang) in tables.angular.iter().zip(&angular) {
                    for (s, ang) in aspan.iter().zip(aang) {
                        let map = patch.point_map(rs.xi, &s.point);
                        let w = rs.weight * s.weight * map.det.abs() * patch.measure_weight(map.x);
                        let ue: C = radial.iter().zip(ang).map(|(a, b)| a * b).sum();
                        let afirst = s.basis.first_index();
                        let mut uh = C::new(0.0, 0.0);
                        for (a, rv) in rs.basis.values.iter().enumerate() {
                            for (b, av) in s.basis.values.iter().enumerate() {
                                uh += sol.field[patch.field_dof(rfirst + a, afirst + b)] * (rv * av);
                            }
                        }
                        num += w * (uh - ue).norm_sqr();
                        den += w * ue.norm_sqr();
                    }
                }
            }
            Ok((num, den))
        })
        .collect::<Result<Vec<_>>>()?;
    let domain = partial.iter().fold((0.0, 0.0), |acc, p| (acc.0 + p.0, acc.1 + p.1));

    let radius = patch.outer_radius();
    let radial = exact.radial(radius)?;
    let (mut bnum, mut bden) = (0.0, 0.0);
    for (aspan, aang) in tables.angular.iter().zip(&angular) {
        for (s, ang) in aspan.iter().zip(aang) {
            let x = [radius * s.point.unit[0], radius * s.point.unit[1]];
            let w = s.weight * patch.measure_weight(x) * radius * s.point.speed;
            let ue: C = radial.iter().zip(ang).map(|(a, b)| a * b).sum();
            let uh = outer_value(patch, sol, s);
            bnum += w * (uh - ue).norm_sqr();
            bden += w * ue.norm_sqr();
        }
    }
    Ok(ErrorSums { domain, boundary: (bnum, bden) })
}

/// Domain and `S_R` errors with the given quadrature tables.
pub fn l2_errors(
    patch: &Patch,
    sol: &DiscreteSolution,
    exact: &dyn SeparableSolution,
    tables: &QuadratureTables,
) -> Result<ErrorReport> {
    let sums = error_sums(patch, sol, exact, tables)?;
    if !(sums.domain.1 > 0.0) {
        return Err(Error::Domain("exact solution has zero norm over the domain".into()));
    }
    if !(sums.boundary.1 > 0.0) {
        return Err(Error::Domain("exact solution has zero norm on the artificial boundary".into()));
    }
    Ok(ErrorReport {
        domain: (sums.domain.0 / sums.domain.1).sqrt(),
        boundary: (sums.boundary.0 / sums.boundary.1).sqrt(),
        ffp: None,
    })
}

/// Absolute `L²` errors, for exact solutions that may vanish.
pub fn l2_absolute_errors(
    patch: &Patch,
    sol: &DiscreteSolution,
    exact: &dyn SeparableSolution,
    tables: &QuadratureTables,
) -> Result<ErrorReport> {
    let sums = error_sums(patch, sol, exact, tables)?;
    Ok(ErrorReport { domain: sums.domain.0.sqrt(), boundary: sums.boundary.0.sqrt(), ffp: None })
}

/// Far-field pattern of the exact solution of the problem truncated at `R`
/// with an `L`-term Karp condition, obtained mode by mode: interior field
/// `a J_n + b Y_n`, boundary coefficients from the recurrences, and the
/// trace, flux and Helmholtz conditions at `R`.
pub fn modal_kfe_ffp(
    k: f64,
    r0: f64,
    radius: f64,
    terms: usize,
    boundary: BoundaryKind,
    thetas: &[f64],
) -> Result<Vec<C>> {
    let coeffs = kfe_coeffs(k, radius, terms)?;
    let (j0, y0) = jy_capped(mode_count(k, radius) + 1, k * r0)?;
    let (jr, yr) = bessel_jy_upto(j0.len() - 1, k * radius)?;
    let nmax = j0.len() - 2;
    let recs = (1..terms).map(karp_recurrence_rhs).collect::<Result<Vec<_>>>()?;
    let mut modes = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        let nf = n as f64;
        // f_l, g_l as linear combinations of (f_0, g_0).
        let mut f = vec![[C::new(1.0, 0.0), C::new(0.0, 0.0)]];
        let mut g = vec![[C::new(0.0, 0.0), C::new(1.0, 0.0)]];
        for rec in &recs {
            let l = rec.l;
            let fl = rec.modal_f(nf);
            let gl = rec.modal_g(nf);
            f.push([g[l - 1][0] * fl, g[l - 1][1] * fl]);
            g.push([f[l - 1][0] * gl, f[l - 1][1] * gl]);
        }
        let combine = |c0: &[C], c1: &[C]| -> [C; 2] {
            let mut out = [C::new(0.0, 0.0); 2];
            for l in 0..terms {
                for s in 0..2 {
                    out[s] += c0[l] * f[l][s] + c1[l] * g[l][s];
                }
            }
            out
        };
        let trace = combine(&coeffs.trace0, &coeffs.trace1);
        let flux = combine(&coeffs.a, &coeffs.b);
        let pc: Vec<C> = (0..terms).map(|l| coeffs.p[l] - nf * nf * coeffs.curv0[l]).collect();
        let qc: Vec<C> = (0..terms).map(|l| coeffs.q[l] - nf * nf * coeffs.curv1[l]).collect();
        let helm = combine(&pc, &qc);

        let eps = if n == 0 { 1.0 } else { 2.0 };
        let (bj, by) = match boundary {
            BoundaryKind::Soft => (j0[n], y0[n]),
            BoundaryKind::Hard => derivative_pair(&j0, &y0, n, k * r0),
        };
        let (dj, dy) = derivative_pair(&jr, &yr, n, k * radius);
        let one = C::new(1.0, 0.0);
        let zero = C::new(0.0, 0.0);
        let mut a = [
            [one * bj, one * by, zero, zero],
            [one * jr[n], one * yr[n], -trace[0], -trace[1]],
            [one * (k * dj), one * (k * dy), -flux[0], -flux[1]],
            [zero, zero, helm[0], helm[1]],
        ];
        let mut rhs = [-eps * i_pow(n) * bj, zero, zero, zero];
        let x = dense_solve4(&mut a, &mut rhs)?;
        modes.push(x[2] - C::i() * x[3]);
        let peak = modes.iter().map(|m| m.norm()).fold(0.0, f64::max);
        if nf > k * radius + 5.0 && modes[n].norm() < SERIES_CUTOFF * peak {
            break;
        }
    }
    let scale = ffp_scale(k);
    Ok(thetas
        .iter()
        .map(|&t| scale * modes.iter().enumerate().map(|(n, m)| m * (n as f64 * t).cos()).sum::<C>())
        .collect())
}

/// Column-scaled Gaussian elimination with partial pivoting.
fn dense_solve4(a: &mut [[C; 4]; 4], b: &mut [C; 4]) -> Result<[C; 4]> {
    let mut scale = [1.0; 4];
    for (c, s) in scale.iter_mut().enumerate() {
        let m = (0..4).map(|r| a[r][c].norm()).fold(0.0, f64::max);
        if m > 0.0 {
            *s = 1.0 / m;
            for row in a.iter_mut() {
                row[c] *= *s;
            }
        }
    }
    for col in 0..4 {
        let piv = (col..4).max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm())).unwrap();
        if a[piv][col].norm() == 0.0 {
            return Err(Error::Solver { message: "singular modal system".into(), indicator: f64::INFINITY });
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..4 {
            let f = a[r][col] / a[col][col];
            for c in col..4 {
                let v = a[col][c];
                a[r][c] -= f * v;
            }
            let v = b[col];
            b[r] -= f * v;
        }
    }
    let mut x = [C::new(0.0, 0.0); 4];
    for r in (0..4).rev() {
        let mut s = b[r];
        for c in r + 1..4 {
            s -= a[r][c] * x[c];
        }
        x[r] = s / a[r][r];
    }
    for (xi, s) in x.iter_mut().zip(scale) {
        *xi *= s;
    }
    Ok(x)
}

/// Least-squares fit `log e = q log h + c` over a refinement sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceFit {
    pub order: f64,
    pub intercept: f64,
    /// Root-mean-square residual of the fit in `log e`.
    pub residual: f64,
    /// Orders between consecutive entries.
    pub pairwise: Vec<f64>,
}

pub fn fit_order(h: &[f64], errors: &[f64]) -> Result<ConvergenceFit> {
    if h.len() != errors.len() || h.len() < 3 {
        return Err(Error::Domain("an order fit needs at least three (h, error) pairs".into()));
    }
    if h.iter().chain(errors).any(|v| !(*v > 0.0) || !v.is_finite()) {
        return Err(Error::Domain("mesh sizes and errors must be positive and finite".into()));
    }
    let x: Vec<f64> = h.iter().map(|v| v.ln()).collect();
    let y: Vec<f64> = errors.iter().map(|v| v.ln()).collect();
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|v| (v - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(Error::Domain("mesh sizes must not all be equal".into()));
    }
    let sxy: f64 = x.iter().zip(&y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let order = sxy / sxx;
    let pairwise = x.windows(2).zip(y.windows(2)).map(|(xs, ys)| (ys[1] - ys[0]) / (xs[1] - xs[0])).collect();
    let intercept = my - order * mx;
    let residual = (x.iter().zip(&y).map(|(a, b)| (b - intercept - order * a).powi(2)).sum::<f64>() / n).sqrt();
    Ok(ConvergenceFit { order, intercept, residual, pairwise })
}

/// Uniform far-field angles suited to the patch: the full circle in the
/// plane, `[0, π]` on the meridian.
pub fn patch_ffp_angles(patch: &Patch, count: usize) -> Vec<f64> {
    match patch.kind() {
        PatchKind::Annulus => ffp_angles(count),
        PatchKind::Meridian => (0..count).map(|s| PI * (s as f64 / (count - 1).max(1) as f64)).collect(),
    }
}
