//! Coefficients of the Karp (2D) and Wilcox (3D) farfield-expansion
//! absorbing boundary conditions, their recurrences, and the
//! Bayliss–Gunzburger–Turkel baselines.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::bessel_jy;

/// Largest `|(kR)^{-(L+1)} Y_1(kR)|` accepted before a configuration is
/// rejected as numerically meaningless.
pub const CONDITIONING_LIMIT: f64 = 1e290;

/// Karp expansion scalars at `r = R` for `l = 0..L`, with `z = kR`:
/// `u = H_0(kr) Σ F_l/(kr)^l + H_1(kr) Σ G_l/(kr)^l`.
#[derive(Debug, Clone, PartialEq)]
pub struct KfeCoefficients {
    pub k: f64,
    pub radius: f64,
    /// First radial derivatives of `H_0(kr)/(kr)^l` and `H_1(kr)/(kr)^l`.
    pub a: Vec<Complex64>,
    pub b: Vec<Complex64>,
    /// Second radial derivatives of the same.
    pub e: Vec<Complex64>,
    pub i: Vec<Complex64>,
    /// Helmholtz-operator mass coefficients `E + A/R + k² H_0/z^l` and
    /// `I + B/R + k² H_1/z^l`.
    pub p: Vec<Complex64>,
    pub q: Vec<Complex64>,
    /// Trace factors `H_0/z^l` and `H_1/z^l`.
    pub trace0: Vec<Complex64>,
    pub trace1: Vec<Complex64>,
    /// Angular-derivative factors `H_0/(R² z^l)` and `H_1/(R² z^l)`.
    pub curv0: Vec<Complex64>,
    pub curv1: Vec<Complex64>,
}

impl KfeCoefficients {
    pub fn terms(&self) -> usize {
        self.a.len()
    }
}

fn check_inputs(k: f64, radius: f64, terms: usize) -> Result<()> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::Config(format!("wavenumber must be positive, got {k}")));
    }
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::Config(format!("radius must be positive, got {radius}")));
    }
    if terms == 0 {
        return Err(Error::Config("at least one expansion term is required".into()));
    }
    Ok(())
}

pub fn kfe_coeffs(k: f64, radius: f64, terms: usize) -> Result<KfeCoefficients> {
    check_inputs(k, radius, terms)?;
    let z = k * radius;
    let (j0, y0) = bessel_jy(0, z)?;
    let (j1, y1) = bessel_jy(1, z)?;
    let guard = z.powi(-(terms as i32 + 1)) * y1.abs();
    if !(guard <= CONDITIONING_LIMIT) {
        return Err(Error::Conditioning(format!(
            "kR = {z} with {terms} terms: (kR)^-(L+1) Y_1(kR) = {guard:.3e} exceeds {CONDITIONING_LIMIT:e}"
        )));
    }
    let h0 = Complex64::new(j0, y0);
    let h1 = Complex64::new(j1, y1);
    let k2 = k * k;
    let r2 = radius * radius;
    let mut c = KfeCoefficients {
        k,
        radius,
        a: Vec::with_capacity(terms),
        b: Vec::with_capacity(terms),
        e: Vec::with_capacity(terms),
        i: Vec::with_capacity(terms),
        p: Vec::with_capacity(terms),
        q: Vec::with_capacity(terms),
        trace0: Vec::with_capacity(terms),
        trace1: Vec::with_capacity(terms),
        curv0: Vec::with_capacity(terms),
        curv1: Vec::with_capacity(terms),
    };
    for l in 0..terms {
        let lf = l as f64;
        let zl = z.powi(-(l as i32));
        let zl1 = zl / z;
        let zl2 = zl1 / z;
        let a = -k * h1 * zl - k * lf * h0 * zl1;
        let b = -k * (lf + 1.0) * h1 * zl1 + k * h0 * zl;
        let e = -k2 * ((zl - lf * (lf + 1.0) * zl2) * h0 - (2.0 * lf + 1.0) * zl1 * h1);
        let i = -k2 * ((2.0 * lf + 1.0) * zl1 * h0 + (zl - (lf + 1.0) * (lf + 2.0) * zl2) * h1);
        c.p.push(e + a / radius + k2 * h0 * zl);
        c.q.push(i + b / radius + k2 * h1 * zl);
        c.a.push(a);
        c.b.push(b);
        c.e.push(e);
        c.i.push(i);
        c.trace0.push(h0 * zl);
        c.trace1.push(h1 * zl);
        c.curv0.push(h0 * zl / r2);
        c.curv1.push(h1 * zl / r2);
    }
    let all = [&c.a, &c.b, &c.e, &c.i, &c.p, &c.q];
    if all.iter().any(|v| v.iter().any(|x| !x.is_finite())) {
        return Err(Error::Conditioning(format!("Karp coefficients overflow at kR = {z}")));
    }
    Ok(c)
}

/// Wilcox expansion scalars `u = e^{ikr}/(kr) Σ F_l/(kr)^l` at `r = R`.
#[derive(Debug, Clone, PartialEq)]
pub struct WfeCoefficients {
    pub k: f64,
    pub radius: f64,
    /// `e^{ikR}/(kR)^{l+1} (ik - (l+1)/R)`, the radial derivative factor.
    pub c: Vec<Complex64>,
    /// `e^{ikR}/(kR)^{l+1}`.
    pub trace: Vec<Complex64>,
}

impl WfeCoefficients {
    pub fn terms(&self) -> usize {
        self.c.len()
    }
}

pub fn wfe_coeffs(k: f64, radius: f64, terms: usize) -> Result<WfeCoefficients> {
    check_inputs(k, radius, terms)?;
    let z = k * radius;
    let guard = z.powi(-(terms as i32 + 1));
    if !(guard <= CONDITIONING_LIMIT) {
        return Err(Error::Conditioning(format!(
            "kR = {z} with {terms} terms: (kR)^-(L+1) = {guard:.3e} exceeds {CONDITIONING_LIMIT:e}"
        )));
    }
    let phase = Complex64::from_polar(1.0, z);
    let mut trace = Vec::with_capacity(terms);
    let mut c = Vec::with_capacity(terms);
    for l in 0..terms {
        let t = phase * z.powi(-(l as i32 + 1));
        c.push(t * Complex64::new(-((l + 1) as f64) / radius, k));
        trace.push(t);
    }
    Ok(WfeCoefficients { k, radius, c, trace })
}

/// Scalars of the weak Karp recurrences for one `l >= 1`:
///
/// `x M F_l + (y_mass M + y_stiffness K) G_{l-1} = 0`,
/// `r M G_l + (t_mass M + t_stiffness K) F_{l-1} = 0`,
///
/// where `M` is the boundary mass form and `K(w, v) = ∫ w_θ v_θ ds`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KarpRecurrence {
    pub l: usize,
    pub x: f64,
    pub y_mass: f64,
    pub y_stiffness: f64,
    pub r: f64,
    pub t_mass: f64,
    pub t_stiffness: f64,
}

impl KarpRecurrence {
    /// Amplitude of `F_l` produced by `G_{l-1} = cos(nθ)`.
    pub fn modal_f(&self, n: f64) -> f64 {
        -(self.y_mass + self.y_stiffness * n * n) / self.x
    }

    /// Amplitude of `G_l` produced by `F_{l-1} = cos(nθ)`.
    pub fn modal_g(&self, n: f64) -> f64 {
        -(self.t_mass + self.t_stiffness * n * n) / self.r
    }
}

/// Weak-form factors of `2l F_l = -l² G_{l-1} - G_{l-1}''` and
/// `2l G_l = (l-1)² F_{l-1} + F_{l-1}''`.
pub fn karp_recurrence_rhs(l: usize) -> Result<KarpRecurrence> {
    if l == 0 {
        return Err(Error::Domain("Karp recurrences start at l = 1".into()));
    }
    let lf = l as f64;
    Ok(KarpRecurrence {
        l,
        x: 2.0 * lf,
        y_mass: lf * lf,
        y_stiffness: -1.0,
        r: 2.0 * lf,
        t_mass: -(lf - 1.0) * (lf - 1.0),
        t_stiffness: 1.0,
    })
}

/// Scalars of `x M F_l + (y_mass M + y_stiffness K_S) F_{l-1} = 0`, the weak
/// form of `2il F_l = l(l-1) F_{l-1} + Δ_S F_{l-1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WilcoxRecurrence {
    pub l: usize,
    pub x: Complex64,
    pub y_mass: f64,
    pub y_stiffness: f64,
}

impl WilcoxRecurrence {
    /// Amplitude of `F_l` produced by `F_{l-1} = P_n(cos θ)`.
    pub fn modal(&self, n: usize) -> Complex64 {
        let eig = (n * (n + 1)) as f64;
        -(self.y_mass + self.y_stiffness * eig) / self.x
    }
}

pub fn wfe_recurrence_rhs(l: usize) -> Result<WilcoxRecurrence> {
    if l == 0 {
        return Err(Error::Domain("Wilcox recurrence starts at l = 1".into()));
    }
    let lf = l as f64;
    Ok(WilcoxRecurrence {
        l,
        x: Complex64::new(0.0, 2.0 * lf),
        y_mass: -lf * (lf - 1.0),
        y_stiffness: 1.0,
    })
}

/// Robin operator `∂_r u = α u + β ∂_θ² u` on `r = R`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BgtCoefficients {
    pub order: u8,
    pub alpha: Complex64,
    pub beta: Complex64,
}

/// First- and second-order Bayliss–Gunzburger–Turkel conditions. Order 2
/// follows from `(∂_r - ik + 5/(2r))(∂_r - ik + 1/(2r)) u = 0` with `∂_r²`
/// eliminated through the Helmholtz equation.
pub fn bgt_coeffs(order: u8, k: f64, radius: f64) -> Result<BgtCoefficients> {
    check_inputs(k, radius, 1)?;
    let ik = Complex64::new(0.0, k);
    let base = ik - 1.0 / (2.0 * radius);
    match order {
        1 => Ok(BgtCoefficients { order, alpha: base, beta: Complex64::new(0.0, 0.0) }),
        2 => {
            let d = 1.0 / radius - ik;
            let r2 = radius * radius;
            Ok(BgtCoefficients {
                order,
                alpha: base + 1.0 / (8.0 * r2 * d),
                beta: 1.0 / (2.0 * r2 * d),
            })
        }
        _ => Err(Error::Config(format!("BGT order must be 1 or 2, got {order}"))),
    }
}

/// Farfield pattern `f` with `u ~ e^{ikr} f(θ) / √r`:
/// `f = √(2/(πk)) e^{-iπ/4} (F_0 - i G_0)`.
pub fn ffp_from_karp(f0: &[Complex64], g0: &[Complex64], k: f64) -> Result<Vec<Complex64>> {
    if f0.len() != g0.len() {
        return Err(Error::Domain(format!("{} F_0 samples but {} G_0 samples", f0.len(), g0.len())));
    }
    let scale = ffp_scale(k);
    Ok(f0.iter().zip(g0).map(|(f, g)| scale * (f - Complex64::i() * g)).collect())
}

/// `√(2/(πk)) e^{-iπ/4}`.
pub fn ffp_scale(k: f64) -> Complex64 {
    Complex64::from_polar((2.0 / (PI * k)).sqrt(), -0.25 * PI)
}
