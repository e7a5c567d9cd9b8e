//! Closed-form `epsilon` shapes for large `x`, all taking `b = log x` so
//! that arguments far beyond the `f64` range of `x` are usable.

use super::R0;
use crate::error::{domain, Error, Result};
use crate::zeta_zeros::DEFAULT_A;
use std::f64::consts::PI;

/// `log x` from which the `sqrt(8/pi) X^{1/2} e^{-X}` form is certified.
pub const EPS0_CERTIFIED_FROM: f64 = 4890.0;
const ASYMPTOTIC_FROM: f64 = 110.0;

fn x_of(b: f64) -> f64 {
    (b / R0).sqrt()
}

fn check_from(op: &'static str, b: f64, from: f64, strict: bool) -> Result<()> {
    let ok = if strict { b > from } else { b >= from };
    if !ok || !b.is_finite() {
        return Err(domain(op, format!("log x = {b} outside the range from {from}")));
    }
    Ok(())
}

/// `1.062253 (1 - 0.900377/(2X)) X^{3/4} e^{-X}` for `log x > 110`.
pub fn epsilon_asymptotic(b: f64) -> Result<f64> {
    check_from("epsilon_asymptotic", b, ASYMPTOTIC_FROM, true)?;
    let x = x_of(b);
    Ok(1.062253 * (1.0 - 0.900377 / (2.0 * x)) * (0.75 * x.ln() - x).exp())
}

/// `1.06225193203 (1 + 15/(32X)) X^{3/4} e^{-X}`, the value that the
/// `m = 1`, `T1 = T2 = 0` argument actually establishes. It exceeds
/// [`epsilon_asymptotic`] by a factor `1 + O(1/X)`.
pub fn epsilon_asymptotic_proof(b: f64) -> Result<f64> {
    check_from("epsilon_asymptotic", b, ASYMPTOTIC_FROM, true)?;
    Ok(proof_form(x_of(b)))
}

fn proof_form(x: f64) -> f64 {
    1.06225193203 * (1.0 + 15.0 / (32.0 * x)) * (0.75 * x.ln() - x).exp()
}

/// `epsilon(x)/sqrt 2 * {1 + 3 log X / (2 sqrt(pi (4X - 3 log X))) + 3/(2 sqrt(pi X))}`,
/// built on [`epsilon_asymptotic_proof`]; for `log x >= 110`.
pub fn epsilon_star(b: f64) -> Result<f64> {
    check_from("epsilon_star", b, ASYMPTOTIC_FROM, false)?;
    let x = x_of(b);
    Ok(proof_form(x) * star_factor(x))
}

/// Ratio `epsilon* / epsilon` as a function of `X`.
pub(crate) fn star_factor(x: f64) -> f64 {
    let lx = x.ln();
    (1.0 + 3.0 * lx / (2.0 * (PI * (4.0 * x - 3.0 * lx)).sqrt()) + 3.0 / (2.0 * (PI * x).sqrt()))
        / std::f64::consts::SQRT_2
}

/// `sqrt(8/pi) X^{1/2} e^{-X}`. Certified for `log x >= 4890`; smaller
/// `log x` is evaluated only with `allow_uncertified`.
pub fn epsilon_zero(b: f64, allow_uncertified: bool) -> Result<f64> {
    if !allow_uncertified {
        check_from("epsilon_zero", b, EPS0_CERTIFIED_FROM, false)?;
    } else if !(b > 0.0) {
        return Err(domain("epsilon_zero", format!("log x = {b} must be positive")));
    }
    let x = x_of(b);
    Ok((8.0 / PI).sqrt() * (0.5 * x.ln() - x).exp())
}

/// `(added, headroom)` for carrying a `psi` bound over to `theta`: the
/// `1.43 sqrt(x)` difference contributes `1.43 e^{-b/2}` to `epsilon`,
/// and the headroom is what rounding `1.06225193203` up to `1.062253`
/// leaves at this `b`.
pub fn psi_theta_absorption(b: f64) -> Result<(f64, f64)> {
    let exact = epsilon_asymptotic_proof(b)?;
    let added = 1.43 * (-b / 2.0).exp();
    Ok((added, exact * (1.062253 / 1.06225193203 - 1.0)))
}

/// The `m = 2` split-tail argument behind [`epsilon_zero`]: the exponent
/// `nu` of `T2 = e^{nu X}` solving `k(nu) = 1` and the quantities checked
/// along the way.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuSolution {
    pub x: f64,
    pub nu: f64,
    pub nu0: f64,
    pub nu1: f64,
    pub k_at_nu: f64,
    pub g0: f64,
    pub g1: f64,
    pub g2: f64,
    pub g3: f64,
    pub y: f64,
    pub delta: f64,
    /// `log T2 = nu X`
    pub ln_t2: f64,
    pub l: f64,
    pub m: f64,
    pub e: f64,
}

fn g0(nu: f64, x: f64) -> f64 {
    nu * nu * (nu - (2.0 * PI).ln() / x)
}

fn g1(nu: f64, x: f64) -> f64 {
    nu * nu / (2.0 * nu * nu - 1.0) * (nu + 1.0 / (2.0 * x))
}

fn ln_k(nu: f64, x: f64) -> f64 {
    let (a, c) = (g0(nu, x), g1(nu, x));
    if !(a > 0.0) || !(c > 0.0) {
        return f64::NEG_INFINITY;
    }
    x.ln() - (2.0 * PI).ln() + 0.5 * (3.0 * a.ln() - c.ln()) - 2.0 * x * (1.0 - nu) - x * (1.0 - nu).powi(2) / nu
}

fn nu_j(j: u32, x: f64) -> f64 {
    1.0 - (x / ((2.0 + 3.0 * j as f64) * PI)).ln() / (2.0 * x)
}

/// Solve `k(nu) = 1` on `(1/sqrt 2, 1)` by bisection and evaluate the
/// `G_0 .. G_3`, `L`, `M`, `E` chain at the root.
pub fn solve_nu(x: f64) -> Result<NuSolution> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("solve_nu", format!("X = {x} must be positive")));
    }
    if !(ln_k(1.0, x) > 0.0) {
        return Err(Error::RootNotBracketed(format!("k(1) <= 1 at X = {x}")));
    }
    let (mut lo, mut hi) = (std::f64::consts::FRAC_1_SQRT_2, 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if ln_k(mid, x) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let nu = 0.5 * (lo + hi);
    let (a, c) = (g0(nu, x), g1(nu, x));
    let y = x * (1.0 - nu).powi(2) / nu;
    let g01 = (a * c).powf(0.25);
    let delta = g01 * (2.0 / PI).sqrt() * (-y / 2.0 + 0.5 * x.ln() - x).exp();
    let ln_t2 = nu * x;
    // 1 + 2pi q(T2), q written through log T2 to stay finite
    let q = (0.137 * ln_t2 + 0.443) / (ln_t2 * (ln_t2 - (2.0 * PI).ln())) * (-ln_t2).exp();
    let g2 = (1.0 + 2.0 * PI * q) * (((1.0 + delta).powi(3) + 1.0) / 2.0).powi(2);
    let big = -R0 * x * x / 2.0 - 1.5 * x.ln() + 3.0 * x;
    let g3 = g2
        * g01
        * (-y / 2.0).exp()
        * (1.0 + (PI / 8.0).sqrt() * (1.022 * (0.5 * x.ln() - x).exp() + 0.0108 * big.exp()));
    let l = (nu.powi(6) / (2.0 * nu * nu - 1.0)).powf(0.25);
    let m = ((1.0 - 1.0 / (nu * x)) * (1.0 + 1.0 / (2.0 * nu * x)) * (-2.0 * x * (1.0 - nu).powi(2) / nu).exp())
        .powf(0.25);
    let nu1 = nu_j(1, x);
    let e = ((-1.0 / (2.0 * x) - 2.0 * x * (1.0 - nu1).powi(2)) / (4.0 * nu1)).exp();
    Ok(NuSolution {
        x,
        nu,
        nu0: nu_j(0, x),
        nu1,
        k_at_nu: ln_k(nu, x).exp(),
        g0: a,
        g1: c,
        g2,
        g3,
        y,
        delta,
        ln_t2,
        l,
        m,
        e,
    })
}

impl NuSolution {
    /// Checks every inequality the argument relies on; the error lists
    /// the ones that fail.
    pub fn verify(&self) -> Result<()> {
        let b = self.x * self.x * R0;
        let mut bad = Vec::new();
        let mut need = |ok: bool, what: &str| {
            if !ok {
                bad.push(what.to_string());
            }
        };
        need((self.k_at_nu - 1.0).abs() <= 1e-9, "k(nu) = 1");
        need(self.nu0 < self.nu && self.nu < self.nu1, "nu0 < nu < nu1");
        need(
            self.l > (27.0f64 / 32.0).powf(0.25) && self.l < 1.0,
            "(27/32)^(1/4) < L < 1",
        );
        need(self.m < self.e && self.e < 1.0, "M < E < 1");
        need(self.g3 <= self.l * self.m, "G3 <= L M");
        need(self.g3 < 1.0, "G3 < 1");
        if self.x >= 11.0 {
            let p = self.g0 * self.g1;
            need(p > 0.84375 && p < 1.0, "0.84375 < G0 G1 < 1");
        }
        if b >= EPS0_CERTIFIED_FROM {
            need(self.y < 0.025, "Y < 0.025");
            need(self.g0 / self.g1 < 2.0 * self.nu * self.nu - 1.0, "G0/G1 < 2 nu^2 - 1");
            need(self.ln_t2 >= DEFAULT_A.ln(), "T2 >= A");
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::Certification(format!("X = {}: {}", self.x, bad.join(", "))))
        }
    }
}
