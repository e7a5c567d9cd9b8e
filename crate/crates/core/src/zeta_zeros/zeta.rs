//! Hardy's Z function on the critical line by Euler-Maclaurin summation.

use crate::error::{domain, Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Largest ordinate at which [`hardy_z`] accepts an argument. The zero
/// finder needs a little room above its own maximum to reach the next good
/// Gram point.
pub const EVAL_CEILING: f64 = 5400.0;

/// Absolute accuracy promised by [`hardy_z`] below the ceiling.
pub const ACCURACY: f64 = 1e-8;

/// Z(t) with an estimate of its absolute error.
#[derive(Debug, Clone, Copy)]
pub struct ZValue {
    pub z: f64,
    /// imaginary part of `e^{i theta} zeta`, zero in exact arithmetic
    pub residue: f64,
    pub err: f64,
}

// zeta(2k) for k = 1..=40.
fn zeta_even() -> &'static [f64; 41] {
    use std::sync::OnceLock;
    static TABLE: OnceLock<[f64; 41]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out = [0.0; 41];
        out[1] = PI * PI / 6.0;
        for (k, slot) in out.iter_mut().enumerate().skip(2) {
            let s = 2.0 * k as f64;
            // direct sum plus an Euler-Maclaurin tail at N = 100
            let nn = 100.0f64;
            let mut acc = 0.0;
            for n in (1..100).rev() {
                acc += (n as f64).powf(-s);
            }
            acc += nn.powf(1.0 - s) / (s - 1.0) + 0.5 * nn.powf(-s) + s / 12.0 * nn.powf(-s - 1.0);
            *slot = acc;
        }
        out
    })
}

/// Riemann-Siegel theta, `arg Gamma(1/4 + it/2) - (t/2) log pi`, continuous.
pub fn theta(t: f64) -> f64 {
    let w = Complex64::new(0.25, 0.5 * t);
    // shift the argument before Stirling
    let shift = 8.0;
    let ws = w + shift;
    let mut arg_sum = 0.0;
    for j in 0..8 {
        let v = w + j as f64;
        arg_sum += v.im.atan2(v.re);
    }
    const B: [f64; 8] = [
        1.0 / 6.0,
        -1.0 / 30.0,
        1.0 / 42.0,
        -1.0 / 30.0,
        5.0 / 66.0,
        -691.0 / 2730.0,
        7.0 / 6.0,
        -3617.0 / 510.0,
    ];
    let mut series = Complex64::new(0.0, 0.0);
    let inv = ws.inv();
    let inv2 = inv * inv;
    let mut p = inv;
    for (k, b) in B.iter().enumerate() {
        let k2 = 2.0 * (k + 1) as f64;
        series += p * (b / (k2 * (k2 - 1.0)));
        p *= inv2;
    }
    let ln_gamma_shifted = (ws - 0.5) * ws.ln() - ws + 0.5 * (2.0 * PI).ln() + series;
    ln_gamma_shifted.im - arg_sum - 0.5 * t * PI.ln()
}

/// Derivative of [`theta`], to the accuracy Newton iteration needs.
pub fn theta_prime(t: f64) -> f64 {
    0.5 * (t / (2.0 * PI)).ln() + 1.0 / (48.0 * t * t)
}

/// Hardy's `Z(t) = e^{i theta(t)} zeta(1/2 + it)` with an error estimate.
pub fn hardy_z_detailed(t: f64) -> Result<ZValue> {
    if !(t >= 2.0) {
        return Err(domain("hardy_z", format!("t = {t} must be >= 2")));
    }
    if t > EVAL_CEILING {
        return Err(Error::AccuracyNotAchievable {
            t,
            ceiling: EVAL_CEILING,
        });
    }
    let n = (t / 4.0).ceil() as usize + 16;
    let s = Complex64::new(0.5, t);
    let mut head = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    let mut mag = 0.0;
    for k in 1..n {
        let ln_k = (k as f64).ln();
        let r = (-0.5 * ln_k).exp();
        let (sn, cs) = (t * ln_k).sin_cos();
        let term = Complex64::new(r * cs, -r * sn);
        // Kahan on each component
        let y = term - comp;
        let tmp = head + y;
        comp = (tmp - head) - y;
        head = tmp;
        mag += r;
    }
    let nf = n as f64;
    let ln_n = nf.ln();
    let n_pow = Complex64::from_polar((-0.5 * ln_n).exp(), -t * ln_n); // N^{-s}
    let mut zeta = head + n_pow * nf / (s - 1.0) + n_pow * 0.5;
    // Euler-Maclaurin corrections T_k = B_2k/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
    let ze = zeta_even();
    let two_pi_sq = (2.0 * PI) * (2.0 * PI);
    let mut coef = 2.0 * ze[1] / two_pi_sq; // B_2/2! = 1/12
    let mut term = n_pow * s * (coef / nf);
    let mut tail_err = f64::INFINITY;
    for k in 1..40 {
        zeta += term;
        let kk = k as f64;
        let next_coef = -coef * ze[k + 1] / (ze[k] * two_pi_sq);
        let next = term * (s + 2.0 * kk - 1.0) * (s + 2.0 * kk) * (next_coef / (coef * nf * nf));
        coef = next_coef;
        // remainder after T_k is bounded by |T_{k+1}| |s+2k+1| / (sigma+2k+1)
        let bound = next.norm() * (s + 2.0 * kk + 1.0).norm() / (0.5 + 2.0 * kk + 1.0);
        term = next;
        if bound < 1e-17 * mag.max(1.0) {
            tail_err = bound;
            break;
        }
    }
    if !tail_err.is_finite() || tail_err > 1e-10 {
        return Err(Error::AccuracyNotAchievable {
            t,
            ceiling: EVAL_CEILING,
        });
    }
    let phase = Complex64::from_polar(1.0, theta(t));
    let zc = phase * zeta;
    // phase rounding: each term carries ~ eps * t log n absolute error
    let float_err = 2.0 * f64::EPSILON * t * ln_n * mag + 1e-15 * mag;
    Ok(ZValue {
        z: zc.re,
        residue: zc.im,
        err: tail_err + float_err,
    })
}

/// Hardy's Z function; see [`hardy_z_detailed`].
pub fn hardy_z(t: f64) -> Result<f64> {
    hardy_z_detailed(t).map(|v| v.z)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_matches_asymptotic_series() {
        for t in [50.0, 300.0, 4000.0] {
            let asym = 0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0
                + 1.0 / (48.0 * t)
                + 7.0 / (5760.0 * t * t * t);
            assert!((theta(t) - asym).abs() < 1e-9 * t.max(1.0), "t={t}");
        }
    }

    #[test]
    fn theta_reference_values() {
        assert!((theta(10.0) - (-3.067_074_396_289_895_3)).abs() < 1e-12);
        assert!((theta(1000.5) - 2_035.813_960_070_349_3).abs() < 1e-10);
        assert!((theta(5000.0) - 14_197.897_617_602_198).abs() < 1e-9);
    }

    #[test]
    fn z_reference_values() {
        // frozen from an independent multiprecision evaluation
        for (t, want) in [
            (10.0, -1.549_194_546_181_02),
            (100.0, 2.692_697_056_664_463_5),
            (1000.5, 2.549_261_135_555_555_6),
            (5000.0, -0.804_257_236_352_94),
        ] {
            let z = hardy_z(t).unwrap();
            assert!((z - want).abs() < 1e-9, "t={t}: {z} vs {want}");
        }
        assert!(hardy_z(14.134_725_141_734_69).unwrap().abs() < 1e-9);
        assert!(hardy_z(14.0).unwrap().signum() != hardy_z(14.2).unwrap().signum());
    }

    #[test]
    fn residue_is_small() {
        let mut t = 2.0;
        while t < 1000.0 {
            let v = hardy_z_detailed(t).unwrap();
            assert!(v.residue.abs() < 1e-10, "t={t} residue {}", v.residue);
            assert!(v.err < ACCURACY);
            t += 7.31;
        }
    }

    #[test]
    fn ceiling_enforced() {
        assert!(matches!(
            hardy_z(EVAL_CEILING + 1.0),
            Err(Error::AccuracyNotAchievable { .. })
        ));
        assert!(hardy_z(1.0).is_err());
        let v = hardy_z_detailed(5000.0).unwrap();
        assert!(v.err < ACCURACY && v.residue.abs() < ACCURACY);
    }
}
