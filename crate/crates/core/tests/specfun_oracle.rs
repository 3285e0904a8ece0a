#[path = "oracle/values.rs"]
mod values;

use farfield_iga::specfun::{
    bessel_jy, bessel_jy_upto, hankel1, legendre_p, sph_bessel_upto, sph_hankel1,
};
use values::*;

/// Error of a real Bessel value scaled by the function's local magnitude:
/// |J_n| itself in the monotone region x < n, the Hankel modulus in the
/// oscillatory region where J_n and Y_n have isolated zeros.
fn scaled_error(got: f64, want: f64, n: usize, x: f64, modulus: f64) -> f64 {
    let scale = if x < n as f64 { want.abs() } else { modulus };
    (got - want).abs() / scale
}

#[test]
fn cylindrical_bessel_against_oracle() {
    let mut worst = 0.0f64;
    for &(n, x, j, y) in BESSEL_JY {
        let (gj, gy) = bessel_jy(n, x).unwrap();
        let modulus = j.hypot(y);
        let ej = scaled_error(gj, j, n, x, modulus);
        let ey = (gy - y).abs() / y.abs().max(if x < n as f64 { 0.0 } else { modulus });
        assert!(ej <= 1e-12, "J_{n}({x}): got {gj:e}, want {j:e}, err {ej:e}");
        assert!(ey <= 1e-12, "Y_{n}({x}): got {gy:e}, want {y:e}, err {ey:e}");
        worst = worst.max(ej).max(ey);
    }
    eprintln!("worst scaled error {worst:e}");
}

#[test]
fn sequence_evaluation_matches_oracle() {
    for &(n, x, j, y) in BESSEL_JY.iter().filter(|r| r.0 <= 60) {
        let (js, ys) = bessel_jy_upto(n, x).unwrap();
        let modulus = j.hypot(y);
        assert!(scaled_error(js[n], j, n, x, modulus) <= 1e-11, "J_{n}({x})");
        assert!((ys[n] - y).abs() <= 1e-11 * y.abs().max(if x < n as f64 { 0.0 } else { modulus }));
    }
}

#[test]
fn spherical_bessel_against_oracle() {
    for &(n, x, j, y) in SPH_BESSEL_JY {
        let (js, ys) = sph_bessel_upto(n, x).unwrap();
        let modulus = j.hypot(y);
        let scale_j = if x < n as f64 { j.abs() } else { modulus };
        let scale_y = if x < n as f64 { y.abs() } else { modulus };
        assert!((js[n] - j).abs() <= 1e-11 * scale_j, "j_{n}({x}): {} vs {j}", js[n]);
        assert!((ys[n] - y).abs() <= 1e-11 * scale_y, "y_{n}({x}): {} vs {y}", ys[n]);
        let h = sph_hankel1(n, x).unwrap();
        assert!((h.re - j).abs() <= 1e-11 * scale_j && (h.im - y).abs() <= 1e-11 * scale_y);
    }
}

#[test]
fn pinned_hankel_values() {
    for (n, x, want) in [(1, 0.02, HANKEL1_1_AT_0_02), (0, 4.0 * std::f64::consts::PI, HANKEL1_0_AT_4PI)] {
        let h = hankel1(n, x).unwrap();
        let err = ((h.re - want.0).powi(2) + (h.im - want.1).powi(2)).sqrt();
        assert!(err <= 1e-12 * want.0.hypot(want.1), "H_{n}({x}) = {h}");
    }
}

#[test]
fn cylindrical_wronskian_over_range() {
    for n in [0usize, 1, 7, 30, 60] {
        for i in 0..=50 {
            let x = 0.01 * 1e5f64.powf(i as f64 / 50.0);
            let (j, y) = bessel_jy_upto(n + 1, x).unwrap();
            let w = j[n + 1] * y[n] - j[n] * y[n + 1];
            let want = 2.0 / (std::f64::consts::PI * x);
            if !w.is_finite() {
                continue;
            }
            assert!((w - want).abs() <= 1e-12 * want, "n={n} x={x} w={w:e} want={want:e}");
        }
    }
}

#[test]
fn spherical_wronskian() {
    for n in [0usize, 1, 4, 20] {
        for &x in &[0.3, 1.0, 3.7, 12.0, 80.0, 500.0] {
            let (j, y) = sph_bessel_upto(n + 1, x).unwrap();
            // j_n' = (n/x) j_n - j_{n+1}, likewise for y_n.
            let jd = n as f64 / x * j[n] - j[n + 1];
            let yd = n as f64 / x * y[n] - y[n + 1];
            let w = j[n] * yd - jd * y[n];
            let want = 1.0 / (x * x);
            assert!((w - want).abs() <= 1e-11 * want, "n={n} x={x}");
        }
    }
}

#[test]
fn legendre_examples() {
    assert_eq!(legendre_p(3, 1.0).unwrap(), 1.0);
    assert!((legendre_p(2, 0.5).unwrap() + 0.125).abs() < 1e-16);
    assert!(legendre_p(2, 1.5).is_err());
}
