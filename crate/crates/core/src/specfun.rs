//! Cylindrical and spherical Bessel/Hankel functions of real positive
//! argument, and Legendre polynomials.
//!
//! `J_n` comes from Miller's backward recurrence. Below
//! [`ASYMPTOTIC_THRESHOLD`] the sequence is normalized by the Neumann sum
//! `J_0 + 2 Σ J_2k = 1`, which also feeds the Neumann series for `Y_0` and
//! `Y_1`. Above it, `J_0, J_1, Y_0, Y_1` come from Hankel's asymptotic
//! expansion and the backward sequence is scaled to match. `Y_n` is always
//! obtained by upward recurrence, which is stable for the second kind.

use std::f64::consts::{FRAC_2_PI, PI};

use num_complex::Complex64;

use crate::error::{domain, Result};

/// Largest order accepted by the single-value entry points.
pub const MAX_ORDER: usize = 200;

/// Largest order accepted by the `*_upto` sequence functions.
pub const MAX_SEQUENCE_ORDER: usize = 20_000;

/// Argument above which Hankel's asymptotic expansion is used for orders 0, 1.
pub const ASYMPTOTIC_THRESHOLD: f64 = 25.0;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const RESCALE_LIMIT: f64 = 1e250;

fn check_argument(x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("Bessel argument must be positive and finite, got {x}"));
    }
    Ok(())
}

fn check_order(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return domain(format!("Bessel order {n} exceeds the supported maximum {limit}"));
    }
    Ok(())
}

/// `(J_n(x), Y_n(x))` for `0 <= n <= MAX_ORDER`, `x > 0`.
pub fn bessel_jy(n: usize, x: f64) -> Result<(f64, f64)> {
    check_order(n, MAX_ORDER)?;
    let (j, y) = bessel_jy_upto(n, x)?;
    Ok((j[n], y[n]))
}

/// Hankel function of the first kind `H_n^(1)(x) = J_n(x) + i Y_n(x)`.
pub fn hankel1(n: usize, x: f64) -> Result<Complex64> {
    let (j, y) = bessel_jy(n, x)?;
    Ok(Complex64::new(j, y))
}

/// `H_0^(1), ..., H_nmax^(1)` at `x`.
pub fn hankel1_upto(nmax: usize, x: f64) -> Result<Vec<Complex64>> {
    let (j, y) = bessel_jy_upto(nmax, x)?;
    Ok(j.into_iter().zip(y).map(|(j, y)| Complex64::new(j, y)).collect())
}

/// `J_0..=J_nmax` and `Y_0..=Y_nmax` at `x`.
///
/// Fails when `Y_n` overflows double precision; `J_n` is allowed to
/// underflow to zero.
pub fn bessel_jy_upto(nmax: usize, x: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    check_argument(x)?;
    check_order(nmax, MAX_SEQUENCE_ORDER)?;

    let (j, y0, y1) = if x < ASYMPTOTIC_THRESHOLD {
        let f = miller_sequence(nmax.max(1), x, |k| 2.0 * k as f64 / x);
        neumann_normalized(&f, nmax, x)
    } else {
        let (j0, y0) = hankel_asymptotic(0.0, x);
        let (j1, y1) = hankel_asymptotic(1.0, x);
        let j = if nmax <= 1 {
            vec![j0, j1]
        } else {
            let f = miller_sequence(nmax, x, |k| 2.0 * k as f64 / x);
            let scale = if j0.abs() >= j1.abs() { j0 / f[0] } else { j1 / f[1] };
            let mut j: Vec<f64> = f[..=nmax].iter().map(|v| v * scale).collect();
            j[0] = j0;
            j[1] = j1;
            j
        };
        (j, y0, y1)
    };

    let mut y = Vec::with_capacity(nmax + 1);
    y.push(y0);
    y.push(y1);
    for n in 1..nmax {
        let next = 2.0 * n as f64 / x * y[n] - y[n - 1];
        if !next.is_finite() {
            return domain(format!("Y_{}({x}) overflows double precision", n + 1));
        }
        y.push(next);
    }
    let mut j = j;
    j.truncate(nmax + 1);
    y.truncate(nmax + 1);
    Ok((j, y))
}

/// Unnormalized backward-recurrence sequence `f_0..=f_start` for a minimal
/// solution of `f_{k-1} = c(k) f_k - f_{k+1}`, started well above
/// `max(nmax, x)`.
fn miller_sequence(nmax: usize, x: f64, coeff: impl Fn(usize) -> f64) -> Vec<f64> {
    let m = nmax.max(x.ceil() as usize);
    let start = m + 16 + (40.0 * m as f64).sqrt().ceil() as usize;
    let start = start + start % 2;
    let mut f = vec![0.0; start + 2];
    f[start] = 1e-300;
    for k in (1..=start).rev() {
        let v = coeff(k) * f[k] - f[k + 1];
        f[k - 1] = v;
        if v.abs() > RESCALE_LIMIT {
            for fj in &mut f[k - 1..] {
                *fj /= RESCALE_LIMIT;
            }
        }
    }
    f.truncate(start + 1);
    f
}

/// Normalizes a Miller sequence with `J_0 + 2 Σ J_2k = 1` and evaluates the
/// Neumann series for `Y_0`, `Y_1`.
fn neumann_normalized(f: &[f64], nmax: usize, x: f64) -> (Vec<f64>, f64, f64) {
    let mut norm = f[0];
    for k in (2..f.len()).step_by(2) {
        norm += 2.0 * f[k];
    }
    let j: Vec<f64> = f.iter().map(|v| v / norm).collect();

    let log_term = (0.5 * x).ln() + EULER_GAMMA;
    let mut s0 = 0.0;
    let mut s1 = 0.0;
    let mut sign = -1.0;
    let mut k = 1;
    while 2 * k + 1 < j.len() {
        let kf = k as f64;
        s0 += sign * j[2 * k] / kf;
        s1 += sign * (j[2 * k - 1] - j[2 * k + 1]) / kf;
        sign = -sign;
        k += 1;
    }
    let y0 = FRAC_2_PI * (log_term * j[0] - 2.0 * s0);
    let y1 = FRAC_2_PI * (-j[0] / x + log_term * j[1] + s1);
    let mut j = j;
    j.truncate(nmax.max(1) + 1);
    (j, y0, y1)
}

/// Hankel's large-argument expansion for integer order `nu`, returning
/// `(J_nu(x), Y_nu(x))`.
fn hankel_asymptotic(nu: f64, x: f64) -> (f64, f64) {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0_f64;
    let mut previous = f64::INFINITY;
    for k in 1..400 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (k as f64 * 8.0 * x);
        let size = term.abs();
        if size >= previous {
            break;
        }
        previous = size;
        match k % 4 {
            0 => p += term,
            1 => q += term,
            2 => p -= term,
            _ => q -= term,
        }
        if size < 1e-17 {
            break;
        }
    }
    let phase = (0.5 * nu + 0.25) * PI;
    let (sx, cx) = x.sin_cos();
    let (sp, cp) = phase.sin_cos();
    let cos_chi = cx * cp + sx * sp;
    let sin_chi = sx * cp - cx * sp;
    let amp = (FRAC_2_PI / x).sqrt();
    (amp * (p * cos_chi - q * sin_chi), amp * (p * sin_chi + q * cos_chi))
}

/// Spherical Bessel functions `j_0..=j_nmax`, `y_0..=y_nmax` at `x`.
pub fn sph_bessel_upto(nmax: usize, x: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    check_argument(x)?;
    check_order(nmax, MAX_SEQUENCE_ORDER)?;
    let (s, c) = x.sin_cos();
    let j0 = s / x;
    let y0 = -c / x;
    let y1 = -c / (x * x) - s / x;

    let mut y = Vec::with_capacity(nmax + 2);
    y.push(y0);
    y.push(y1);
    for n in 1..nmax {
        let next = (2 * n + 1) as f64 / x * y[n] - y[n - 1];
        if !next.is_finite() {
            return domain(format!("y_{}({x}) overflows double precision", n + 1));
        }
        y.push(next);
    }
    y.truncate(nmax + 1);

    let j = if nmax == 0 {
        vec![j0]
    } else {
        let f = miller_sequence(nmax, x, |k| (2 * k + 1) as f64 / x);
        // j_1 by its closed form cancels badly for small x.
        let j1 = s / (x * x) - c / x;
        let scale = if x < 1.0 || j0.abs() >= j1.abs() { j0 / f[0] } else { j1 / f[1] };
        let mut j: Vec<f64> = f[..=nmax].iter().map(|v| v * scale).collect();
        j[0] = j0;
        j
    };
    Ok((j, y))
}

/// Spherical Hankel function `h_n^(1)(x) = j_n(x) + i y_n(x)`.
pub fn sph_hankel1(n: usize, x: f64) -> Result<Complex64> {
    check_order(n, MAX_ORDER)?;
    let (j, y) = sph_bessel_upto(n, x)?;
    Ok(Complex64::new(j[n], y[n]))
}

/// Legendre polynomial `P_n(x)` on `[-1, 1]`.
pub fn legendre_p(n: usize, x: f64) -> Result<f64> {
    Ok(legendre_p_upto(n, x)?[n])
}

/// `P_0(x)..=P_nmax(x)` by the three-term recurrence.
pub fn legendre_p_upto(nmax: usize, x: f64) -> Result<Vec<f64>> {
    if !(-1.0..=1.0).contains(&x) {
        return domain(format!("Legendre argument must lie in [-1, 1], got {x}"));
    }
    let mut p = Vec::with_capacity(nmax + 1);
    p.push(1.0);
    if nmax >= 1 {
        p.push(x);
    }
    for n in 1..nmax {
        let nf = n as f64;
        p.push(((2.0 * nf + 1.0) * x * p[n] - nf * p[n - 1]) / (nf + 1.0));
    }
    Ok(p)
}
