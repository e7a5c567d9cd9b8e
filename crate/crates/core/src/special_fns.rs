//! The Bessel-type kernel `K_nu(z, x) = 1/2 int_x^inf t^(nu-1) H(z, t) dt`
//! with `H(z, t) = exp(-z (t + 1/t) / 2)`, closed-form bounds for it, and
//! the upper incomplete gamma function.
//!
//! Kernel values underflow quickly (`e^-743` is routine), so most entry
//! points return natural logarithms; the `f64` wrappers are conveniences.

use crate::error::{domain, Error, Result};
use crate::quad::{integrate_decaying, QuadOptions};
use crate::rounding::{self, Neumaier};
use std::f64::consts::{PI, SQRT_2};

/// Arguments of the kernel integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelArgs {
    pub nu: f64,
    pub z: f64,
    pub x: f64,
}

impl KernelArgs {
    pub fn new(nu: f64, z: f64, x: f64) -> Result<Self> {
        if !(z > 0.0) || !(x >= 0.0) {
            return Err(domain("KernelArgs", format!("need z > 0, x >= 0; got z={z}, x={x}")));
        }
        Ok(KernelArgs { nu, z, x })
    }
}

/// Order of a kernel bound; only the two orders with closed forms exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    One,
    Two,
}

impl Order {
    pub fn nu(self) -> f64 {
        match self {
            Order::One => 1.0,
            Order::Two => 2.0,
        }
    }
}

pub fn h(z: f64, t: f64) -> f64 {
    ln_h(z, t).exp()
}

pub fn ln_h(z: f64, t: f64) -> f64 {
    -0.5 * z * (t + 1.0 / t)
}

/// `exp(u^2) erfc(u)`, accurate for all `u >= -5`.
pub fn erfcx(u: f64) -> f64 {
    if u <= 25.0 {
        (u * u).exp() * libm::erfc(u)
    } else {
        // Laplace continued fraction, evaluated bottom-up.
        let mut tail = u;
        for k in (1..=60).rev() {
            tail = u + (k as f64 / 2.0) / tail;
        }
        1.0 / (PI.sqrt() * tail)
    }
}

/// `ln K_nu(z, x)` by adaptive quadrature.
///
/// Relative tolerance `1e-12`. Below the peak at `t = 1` the integral is
/// folded onto `[1, 1/x]` with `t -> 1/t`.
pub fn ln_k_exact(args: KernelArgs) -> Result<f64> {
    let KernelArgs { nu, z, x } = args;
    if !(z >= 0.1) || nu.abs() > 4.0 || !(x >= 0.0) {
        return Err(domain(
            "k_exact",
            format!("need z >= 0.1, |nu| <= 4, x >= 0; got nu={nu}, z={z}, x={x}"),
        ));
    }
    let opts = QuadOptions::default();
    let scale = (1.0 / z).min(0.5);
    if x >= 1.0 {
        let shift = -ln_h(z, x);
        let f = |t: f64| t.powf(nu - 1.0) * (ln_h(z, t) + shift).exp();
        let q = integrate_decaying(f, x, f64::INFINITY, scale.min(x), opts)?;
        return Ok((0.5 * q.value).ln() - shift);
    }
    let shift = z;
    let upper = |t: f64| t.powf(nu - 1.0) * (ln_h(z, t) + shift).exp();
    let folded = |s: f64| s.powf(-nu - 1.0) * (ln_h(z, s) + shift).exp();
    let cap = if x == 0.0 { f64::INFINITY } else { 1.0 / x };
    let q1 = integrate_decaying(upper, 1.0, f64::INFINITY, scale, opts)?;
    let q2 = integrate_decaying(folded, 1.0, cap, scale, opts)?;
    Ok((0.5 * (q1.value + q2.value)).ln() - shift)
}

pub fn k_exact(args: KernelArgs) -> Result<f64> {
    ln_k_exact(args).map(f64::exp)
}

fn y_of(x: f64) -> f64 {
    let r = x.sqrt();
    (r - 1.0 / r) / SQRT_2
}

/// Gaussian tail `e^{z y^2} int_y^inf e^{-z w^2} dw`, rounded up.
fn gauss_tail_scaled(z: f64, y: f64) -> f64 {
    rounding::up(0.5 * (PI / z).sqrt() * erfcx(y * z.sqrt()))
}

fn check_bound_args(op: &'static str, z: f64, x: f64) -> Result<()> {
    if !(z > 0.0) {
        return Err(domain(op, format!("z = {z} must be positive")));
    }
    if !(x > 1.0) {
        return Err(domain(op, format!("x = {x} must exceed 1")));
    }
    Ok(())
}

/// Logarithm of the closed-form upper bound for `K_1(z, x)`, `x > 1`.
pub fn ln_k1_upper(z: f64, x: f64) -> Result<f64> {
    check_bound_args("k1_upper", z, x)?;
    let y = y_of(x);
    let brace = (1.0 + 3.0 * SQRT_2 * y / 8.0)
        + (3.0 / 8.0 + z) * SQRT_2 * gauss_tail_scaled(z, y);
    Ok(ln_h(z, x) + rounding::up(brace / (2.0 * z)).ln())
}

pub fn k1_upper(z: f64, x: f64) -> Result<f64> {
    ln_k1_upper(z, x).map(f64::exp)
}

/// Logarithm of the closed-form upper bound for `K_2(z, x)`, `x > 1`.
///
/// The coefficient of the Gaussian tail carries a `+ z` term. Without it
/// the bound falls below the true kernel near `x = 1` (for instance at
/// `z = 20`, `x = 1.01`), see the unit test below.
pub fn ln_k2_upper(z: f64, x: f64) -> Result<f64> {
    check_bound_args("k2_upper", z, x)?;
    let y = y_of(x);
    let c = 105.0 / (128.0 * z) + 15.0 / 8.0;
    let poly = 35.0 * SQRT_2 / 64.0 * y.powi(3)
        + 2.0 * y * y
        + c * SQRT_2 * y
        + 2.0
        + 2.0 / z;
    let brace = poly + (c + z) * SQRT_2 * gauss_tail_scaled(z, y);
    Ok(ln_h(z, x) + rounding::up(brace / (2.0 * z)).ln())
}

pub fn k2_upper(z: f64, x: f64) -> Result<f64> {
    ln_k2_upper(z, x).map(f64::exp)
}

/// `ln` of the bound `sqrt(pi/2z) e^-z (1 + 3/8z)` for `K_1(z) = K_1(z, 0)`.
pub fn ln_k1_at0_upper(z: f64) -> Result<f64> {
    if !(z > 0.0) {
        return Err(domain("k1_at0_upper", format!("z = {z}")));
    }
    let v = 0.5 * (PI / (2.0 * z)).ln() - z + (3.0 / (8.0 * z)).ln_1p();
    Ok(v + rounding::SLACK)
}

/// `ln` of `sqrt(pi/2z) e^-z (1 + 15/8z + 105/128z^2)`.
pub fn ln_k2_at0_upper(z: f64) -> Result<f64> {
    if !(z > 0.0) {
        return Err(domain("k2_at0_upper", format!("z = {z}")));
    }
    let corr = 15.0 / (8.0 * z) + 105.0 / (128.0 * z * z);
    let v = 0.5 * (PI / (2.0 * z)).ln() - z + corr.ln_1p();
    Ok(v + rounding::SLACK)
}

pub fn k1_at0_upper(z: f64) -> Result<f64> {
    ln_k1_at0_upper(z).map(f64::exp)
}

pub fn k2_at0_upper(z: f64) -> Result<f64> {
    ln_k2_at0_upper(z).map(f64::exp)
}

/// `ln Q_nu(z, x) = ln( x^(nu+1) H(z,x) / (z (x^2 - 1)) )`, an upper bound
/// for `K_nu(z, x)` when `nu <= 1` and `x > 1`.
pub fn ln_q_upper(nu: f64, z: f64, x: f64) -> Result<f64> {
    check_bound_args("q_upper", z, x)?;
    if nu > 1.0 {
        return Err(domain("q_upper", format!("nu = {nu} must be <= 1")));
    }
    let v = (nu + 1.0) * x.ln() + ln_h(z, x) - z.ln() - (x * x - 1.0).ln();
    Ok(v + rounding::SLACK)
}

pub fn q_upper(nu: f64, z: f64, x: f64) -> Result<f64> {
    ln_q_upper(nu, z, x).map(f64::exp)
}

/// `ln` of `(x + 2/z) Q_1(z, x)`, an upper bound for `K_2(z, x)`.
pub fn ln_k2_via_q(z: f64, x: f64) -> Result<f64> {
    Ok((x + 2.0 / z).ln() + ln_q_upper(1.0, z, x)? + rounding::SLACK)
}

pub fn k2_via_q(z: f64, x: f64) -> Result<f64> {
    ln_k2_via_q(z, x).map(f64::exp)
}

/// Simple lower bound for `K_{-nu}(z, s)` with `s >= 1`, `nu >= 0`: keep
/// only `[s, s + 2/z]` and use `t + 1/t <= t + 1/s` there.
fn ln_k_neg_lower(nu: f64, z: f64, s: f64) -> f64 {
    let w = 2.0 / z;
    (-nu - 1.0) * (s + w).ln() + ln_h(z, s) + (1.0 - (-1.0f64).exp()).ln() - z.ln()
}

/// Best available certified upper bound, as a logarithm, for `K_nu(z, x)`
/// with `nu` in {1, 2} and any `x >= 0`.
pub fn ln_k_upper(order: Order, z: f64, x: f64) -> Result<f64> {
    if !(z > 0.0) || !(x >= 0.0) {
        return Err(domain("k_upper", format!("z = {z}, x = {x}")));
    }
    let at0 = match order {
        Order::One => ln_k1_at0_upper(z)?,
        Order::Two => ln_k2_at0_upper(z)?,
    };
    if x > 1.0 {
        let (a, b) = match order {
            Order::One => (ln_k1_upper(z, x)?, ln_q_upper(1.0, z, x)?),
            Order::Two => (ln_k2_upper(z, x)?, ln_k2_via_q(z, x)?),
        };
        return Ok(a.min(b).min(at0));
    }
    if x == 0.0 {
        return Ok(at0);
    }
    // K_nu(z, x) = K_nu(z) - K_{-nu}(z, 1/x).
    let lower = ln_k_neg_lower(order.nu(), z, 1.0 / x);
    Ok(match rounding::ln_sub(at0, lower + rounding::SLACK) {
        Some(v) => v,
        None => at0,
    })
}

/// Certified lower bound, as a logarithm, for `K_nu(z, x)`, `nu` in {1, 2}.
///
/// On `[x, inf)` with `x >= 1` we have `t + 1/t <= t + 1/x`, giving
/// `K_1(z, x) >= H(z, x)/z` and `K_2(z, x) >= x H(z, x)/z`; for `x < 1`
/// the value at `x = 1` is a lower bound by monotonicity.
pub fn ln_k_lower(order: Order, z: f64, x: f64) -> Result<f64> {
    if !(z > 0.0) || !(x >= 0.0) {
        return Err(domain("k_lower", format!("z = {z}, x = {x}")));
    }
    let x = x.max(1.0);
    let base = ln_h(z, x) - z.ln();
    let v = match order {
        Order::One => base,
        Order::Two => base + x.ln(),
    };
    Ok(v - rounding::SLACK)
}

/// Exponential integral `E_1(x)` for `x > 0`.
fn e1(x: f64) -> f64 {
    if x < 1.0 {
        const EULER: f64 = 0.577_215_664_901_532_9;
        let mut acc = Neumaier::new();
        let mut term = 1.0;
        for n in 1..60 {
            term *= -x / n as f64;
            acc.add(-term / n as f64);
            if term.abs() < 1e-18 {
                break;
            }
        }
        -EULER - x.ln() + acc.value()
    } else {
        gamma_cf(0.0, x)
    }
}

/// Legendre continued fraction for `Gamma(a, x)`; converges for `x >= 1`.
fn gamma_cf(a: f64, x: f64) -> f64 {
    let tiny = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut hh = d;
    for i in 1..10_000 {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < tiny {
            d = tiny;
        }
        c = b + an / c;
        if c.abs() < tiny {
            c = tiny;
        }
        d = 1.0 / d;
        let del = d * c;
        hh *= del;
        if (del - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (a * x.ln() - x).exp() * hh
}

/// Lower incomplete gamma by its power series, `x < 1`, `a > 0`.
fn lower_gamma_series(a: f64, x: f64) -> f64 {
    let mut sum = 1.0 / a;
    let mut term = 1.0 / a;
    for n in 1..200 {
        term *= x / (a + n as f64);
        sum += term;
        if term < sum * 1e-17 {
            break;
        }
    }
    sum * (a * x.ln() - x).exp()
}

/// Upper incomplete gamma `Gamma(a, x) = int_x^inf t^(a-1) e^-t dt`.
///
/// For `x >= 1` the Legendre continued fraction is used directly. For
/// `x < 1` a base value at `a' = a - floor(a)` (from the series, or from
/// `E_1` when `a` is an integer) is carried to `a` by the recurrence
/// `Gamma(a+1, x) = a Gamma(a, x) + x^a e^-x`.
pub fn inc_gamma(a: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) || !a.is_finite() {
        return Err(domain("inc_gamma", format!("need x > 0; got a={a}, x={x}")));
    }
    if a != 0.0 && a.abs() < 1e-9 {
        return Err(domain("inc_gamma", format!("a = {a} too close to 0")));
    }
    if x >= 1.0 {
        return Ok(gamma_cf(a, x));
    }
    let fl = a.floor();
    let frac = a - fl;
    let (mut cur_a, mut val) = if frac == 0.0 {
        (0.0, e1(x))
    } else {
        (frac, libm::tgamma(frac) - lower_gamma_series(frac, x))
    };
    let ex = (-x).exp();
    while cur_a > a {
        // step down
        let next = cur_a - 1.0;
        val = (val - x.powf(next) * ex) / next;
        cur_a = next;
    }
    while cur_a < a {
        val = cur_a * val + x.powf(cur_a) * ex;
        cur_a += 1.0;
    }
    Ok(val)
}

/// `((1+x)^(a-1) e^-x, x^(a-1) e^-x)`, bracketing `Gamma(a, x)` for `a <= 1`.
pub fn inc_gamma_sandwich(a: f64, x: f64) -> Result<(f64, f64)> {
    if !(x > 0.0) || a > 1.0 {
        return Err(domain("inc_gamma_sandwich", format!("need a <= 1, x > 0; got a={a}, x={x}")));
    }
    let ex = (-x).exp();
    Ok((
        rounding::down((1.0 + x).powf(a - 1.0) * ex),
        rounding::up(x.powf(a - 1.0) * ex),
    ))
}

/// Tighter bracket for `nu < 1`:
/// `x^nu e^-x / (x + 1 - nu) < Gamma(nu, x) < x^(nu-3) e^-x (x^2 + (nu-1)x + (nu-1)(nu-2))`.
pub fn inc_gamma_tight(nu: f64, x: f64) -> Result<(f64, f64)> {
    if !(x > 0.0) || !(nu < 1.0) {
        return Err(domain("inc_gamma_tight", format!("need nu < 1, x > 0; got nu={nu}, x={x}")));
    }
    let ex = (-x).exp();
    let lo = x.powf(nu) * ex / (x + 1.0 - nu);
    let hi = x.powf(nu - 3.0) * ex * (x * x + (nu - 1.0) * x + (nu - 1.0) * (nu - 2.0));
    Ok((rounding::down(lo), rounding::up(hi)))
}

/// Certified bounds on `Gamma(a, x)` for `a <= 1`: the reference value
/// widened by the rounding slack and clipped to the analytic bracket.
pub fn inc_gamma_bounds(a: f64, x: f64) -> Result<(f64, f64)> {
    let v = inc_gamma(a, x)?;
    let (slo, shi) = inc_gamma_sandwich(a, x)?;
    let lo = rounding::down(rounding::down(v)).max(slo);
    let hi = rounding::up(rounding::up(v)).min(shi);
    if lo > hi {
        return Err(Error::Convergence(format!(
            "inc_gamma({a}, {x}) = {v:e} falls outside its analytic bracket"
        )));
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::integrate_to_infinity;

    fn kx(nu: f64, z: f64, x: f64) -> f64 {
        k_exact(KernelArgs::new(nu, z, x).unwrap()).unwrap()
    }

    #[test]
    fn h_elementary() {
        assert_eq!(h(3.0, 1.0), (-3.0f64).exp());
        assert!((h(2.0, 2.0) - (-2.5f64).exp()).abs() < 1e-16);
        assert!((h(1.7, 4.0) - h(1.7, 0.25)).abs() < 1e-16);
    }

    #[test]
    fn bessel_k_reference_values() {
        // K_1(1) and K_2(5) from standard tables.
        assert!((kx(1.0, 1.0, 0.0) / 0.601_907_230_197_234_6 - 1.0).abs() < 1e-11);
        assert!((kx(2.0, 5.0, 0.0) / 5.308_943_712_223_459e-3 - 1.0).abs() < 1e-11);
        assert!((kx(0.0, 2.0, 0.0) / 0.113_893_872_749_533_4 - 1.0).abs() < 1e-11);
    }

    #[test]
    fn complementarity() {
        for nu in [1.0, 2.0] {
            for z in [1.0, 5.0, 20.0] {
                for x in [1.5, 3.0, 10.0] {
                    let lhs = kx(nu, z, x) + kx(-nu, z, 1.0 / x);
                    let rhs = kx(nu, z, 0.0);
                    assert!((lhs / rhs - 1.0).abs() < 1e-10, "nu={nu} z={z} x={x}");
                }
            }
        }
    }

    #[test]
    fn k1_at0_example() {
        let bound = (PI / 20.0).sqrt() * (-10.0f64).exp() * (1.0 + 3.0 / 80.0);
        assert!(kx(1.0, 10.0, 0.0) <= bound);
    }

    fn grid() -> impl Iterator<Item = (f64, f64)> {
        (0..20).flat_map(|i| {
            let z = 1.0 + 49.0 * i as f64 / 19.0;
            (0..20).map(move |j| (z, 1.01 + 8.99 * j as f64 / 19.0))
        })
    }

    #[test]
    fn closed_forms_dominate_quadrature() {
        for (z, x) in grid() {
            let k1 = ln_k_exact(KernelArgs::new(1.0, z, x).unwrap()).unwrap();
            let k2 = ln_k_exact(KernelArgs::new(2.0, z, x).unwrap()).unwrap();
            assert!(ln_k1_upper(z, x).unwrap() > k1, "k1 z={z} x={x}");
            assert!(ln_k2_upper(z, x).unwrap() > k2, "k2 z={z} x={x}");
            assert!(ln_q_upper(1.0, z, x).unwrap() > k1, "q z={z} x={x}");
            assert!(ln_k2_via_q(z, x).unwrap() > k2, "k2q z={z} x={x}");
            assert!(ln_k_lower(Order::One, z, x).unwrap() < k1);
            assert!(ln_k_lower(Order::Two, z, x).unwrap() < k2);
        }
    }

    #[test]
    fn k2_tail_needs_linear_z_term() {
        // The variant without `+ z` in the tail coefficient undershoots.
        let (z, x) = (20.0, 1.01);
        let y = y_of(x);
        let c = 105.0 / (128.0 * z) + 15.0 / 8.0;
        let poly = 35.0 * SQRT_2 / 64.0 * y.powi(3) + 2.0 * y * y + c * SQRT_2 * y + 2.0 + 2.0 / z;
        let brace = poly + c * SQRT_2 * gauss_tail_scaled(z, y);
        let without = ln_h(z, x) + (brace / (2.0 * z)).ln();
        assert!(without < ln_k_exact(KernelArgs::new(2.0, z, x).unwrap()).unwrap());
    }

    #[test]
    fn at0_bounds_dominate() {
        for i in 0..40 {
            let z = 0.5 + 99.5 * i as f64 / 39.0;
            assert!(k1_at0_upper(z).unwrap() >= kx(1.0, z, 0.0));
            assert!(k2_at0_upper(z).unwrap() >= kx(2.0, z, 0.0));
        }
        let r = ln_k2_at0_upper(1e6).unwrap() - ln_k1_at0_upper(1e6).unwrap();
        assert!(r.abs() < 1e-5);
    }

    #[test]
    fn general_upper_dominates_below_one() {
        for z in [2.0, 10.0, 60.0] {
            for x in [0.0, 0.2, 0.7, 0.95, 1.0] {
                for (o, nu) in [(Order::One, 1.0), (Order::Two, 2.0)] {
                    let e = ln_k_exact(KernelArgs::new(nu, z, x).unwrap()).unwrap();
                    assert!(ln_k_upper(o, z, x).unwrap() >= e, "z={z} x={x}");
                    assert!(ln_k_lower(o, z, x).unwrap() <= e, "z={z} x={x}");
                }
            }
        }
    }

    #[test]
    fn bounds_decrease_in_x() {
        for z in [1.0, 7.0, 40.0] {
            let xs: Vec<f64> = (0..30).map(|i| 1.05 + 0.3 * i as f64).collect();
            for w in xs.windows(2) {
                assert!(ln_k1_upper(z, w[1]).unwrap() < ln_k1_upper(z, w[0]).unwrap());
                assert!(ln_k2_upper(z, w[1]).unwrap() < ln_k2_upper(z, w[0]).unwrap());
                assert!(ln_k_upper(Order::Two, z, w[1]).unwrap() <= ln_k_upper(Order::Two, z, w[0]).unwrap());
                assert!(kx(1.0, z, w[1]) < kx(1.0, z, w[0]));
            }
        }
    }

    #[test]
    fn k1_upper_limit_at_one() {
        let z: f64 = 9.0;
        let lim = (-z).exp() / (2.0 * z) * (1.0 + (3.0 / 8.0 + z) * SQRT_2 * PI.sqrt() / (2.0 * z.sqrt()));
        let v = k1_upper(z, 1.0 + 1e-12).unwrap();
        assert!((v / lim - 1.0).abs() < 1e-5);
        assert!(k1_upper(z, 1.0).is_err());
        assert!(q_upper(1.0, z, 1.0 + 1e-9).unwrap() > 1e6 * q_upper(1.0, z, 2.0).unwrap());
        assert!(k2_upper(20.0, 1.5).unwrap() > 0.0);
    }

    #[test]
    fn erfcx_matches_both_branches() {
        // continuity at the branch switch
        let a = (25.0f64 * 25.0).exp() * libm::erfc(25.0);
        let mut tail = 25.0;
        for k in (1..=60).rev() {
            tail = 25.0 + (k as f64 / 2.0) / tail;
        }
        let b = 1.0 / (PI.sqrt() * tail);
        assert!((a / b - 1.0).abs() < 1e-12);
        assert!((erfcx(0.0) - 1.0).abs() < 1e-16);
    }

    fn gamma_quad(a: f64, x: f64) -> f64 {
        integrate_to_infinity(|t| t.powf(a - 1.0) * (-t).exp(), x, 0.5, QuadOptions::default())
            .unwrap()
            .value
    }

    #[test]
    fn inc_gamma_against_quadrature() {
        for a in [-2.0, -1.0, -0.5, 0.5] {
            for x in [0.5, 2.0, 10.0, 40.0] {
                let v = inc_gamma(a, x).unwrap();
                let q = gamma_quad(a, x);
                assert!((v / q - 1.0).abs() < 1e-10, "a={a} x={x}: {v} vs {q}");
            }
        }
        assert!((inc_gamma(1.0, 3.0).unwrap() - (-3.0f64).exp()).abs() < 1e-16);
        assert!((inc_gamma(1.0, 0.3).unwrap() - (-0.3f64).exp()).abs() < 1e-15);
        assert!((inc_gamma(0.0, 0.2).unwrap() - 1.222_650_544_183_893_2).abs() < 1e-13);
        assert!(inc_gamma(1e-12, 1.0).is_err());
    }

    #[test]
    fn incomplete_gamma_brackets() {
        for a in [-3.0, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0] {
            for x in [0.05, 0.5, 3.0, 30.0] {
                let v = inc_gamma(a, x).unwrap();
                let (lo, hi) = inc_gamma_sandwich(a, x).unwrap();
                assert!(lo <= v && v <= hi, "a={a} x={x}");
                if a < 1.0 {
                    let (lo, hi) = inc_gamma_tight(a, x).unwrap();
                    assert!(lo < v && v < hi, "tight a={a} x={x}");
                }
            }
        }
        let (lo, hi) = inc_gamma_sandwich(1.0, 2.0).unwrap();
        assert!((hi / lo - 1.0).abs() < 1e-8);
        let (lo, hi) = inc_gamma_sandwich(-1.0, 600.0).unwrap();
        assert!((hi / lo - 1.0).abs() < 4e-3);
    }
}
