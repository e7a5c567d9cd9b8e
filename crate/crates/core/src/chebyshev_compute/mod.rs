//! Exact `psi`, `theta`, `pi` and `Pi` by segmented sieving, the
//! logarithmic integral, the explicit formula for `psi` truncated at a
//! number of zeros, and a harness that checks inequalities between these
//! functions at every prime power in a range.

mod sieve;
mod verify;

pub use sieve::iroot;
pub use verify::{report_tsv, verify_all, verify_inequality, Inequality, VerifyReport};

use crate::error::{domain, Error, Result};
use crate::quad::{integrate, QuadOptions};
use crate::zeta_zeros::ZeroTable;
use std::f64::consts::PI;

/// Default largest `x` the sieve accepts.
pub const DEFAULT_LIMIT: u64 = 1_000_000_000;
/// Smallest segment length.
pub const MIN_SEGMENT: usize = 1 << 15;
const MAX_LIMIT: u64 = 1 << 40;

/// Sieve configuration: `limit` caps every argument, `segment` is the
/// number of integers handled per segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SievePlan {
    pub limit: u64,
    pub segment: usize,
}

impl Default for SievePlan {
    fn default() -> Self {
        SievePlan {
            limit: DEFAULT_LIMIT,
            segment: 1 << 18,
        }
    }
}

impl SievePlan {
    pub fn new(limit: u64, segment: usize) -> Result<Self> {
        if segment < MIN_SEGMENT {
            return Err(Error::Config(format!("segment {segment} below {MIN_SEGMENT}")));
        }
        if !(2..=MAX_LIMIT).contains(&limit) {
            return Err(Error::Config(format!("limit {limit} outside [2, {MAX_LIMIT}]")));
        }
        Ok(SievePlan { limit, segment })
    }

    pub fn with_limit(limit: u64) -> Result<Self> {
        Self::new(limit, SievePlan::default().segment)
    }

    /// `floor(x)` after checking `x <= limit`.
    fn floor(&self, x: f64) -> Result<u64> {
        if x.is_nan() {
            return Err(domain("sieve", "x is NaN"));
        }
        if x > self.limit as f64 {
            return Err(Error::LimitExceeded { x, limit: self.limit });
        }
        Ok(if x < 0.0 { 0 } else { x.floor() as u64 })
    }
}

/// All prime-counting functions at one `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChebyshevSample {
    pub x: f64,
    pub psi: f64,
    pub theta: f64,
    pub pi: u64,
    pub big_pi: f64,
}

/// `theta(x) = sum_{p <= x} log p`.
pub fn sieve_theta(x: f64, plan: &SievePlan) -> Result<f64> {
    Ok(sieve::theta_pi(plan.floor(x)?, plan).0)
}

/// Number of primes up to `x`.
pub fn sieve_pi(x: f64, plan: &SievePlan) -> Result<u64> {
    Ok(sieve::theta_pi(plan.floor(x)?, plan).1)
}

/// `psi(x) = sum_m theta(x^(1/m))`, roots taken on `floor(x)` in integers.
pub fn psi_from_theta(x: f64, plan: &SievePlan) -> Result<f64> {
    let n = plan.floor(x)?;
    let mut acc = crate::rounding::Neumaier::new();
    for m in 1..=max_exponent(n) {
        acc.add(sieve::theta_pi(iroot(n, m), plan).0);
    }
    Ok(acc.value())
}

/// `theta(x) = sum_k mu(k) psi(x^(1/k))`.
pub fn theta_from_psi_moebius(x: f64, plan: &SievePlan) -> Result<f64> {
    let n = plan.floor(x)?;
    let mut acc = crate::rounding::Neumaier::new();
    for k in 1..=max_exponent(n) {
        let mu = mobius(k as u64);
        if mu != 0 {
            acc.add(mu as f64 * psi_from_theta(iroot(n, k) as f64, plan)?);
        }
    }
    Ok(acc.value())
}

/// `Pi(x) = sum_m pi(x^(1/m)) / m`.
pub fn big_pi(x: f64, plan: &SievePlan) -> Result<f64> {
    let n = plan.floor(x)?;
    let mut acc = crate::rounding::Neumaier::new();
    for m in 1..=max_exponent(n) {
        acc.add(sieve::theta_pi(iroot(n, m), plan).1 as f64 / m as f64);
    }
    Ok(acc.value())
}

/// `psi`, `theta`, `pi` and `Pi` at each `x` in one pass; results follow
/// the sorted order of `xs`.
pub fn samples(xs: &[f64], plan: &SievePlan) -> Result<Vec<ChebyshevSample>> {
    let mut pts = xs.to_vec();
    if pts.iter().any(|x| x.is_nan()) {
        return Err(domain("samples", "x is NaN"));
    }
    pts.sort_by(f64::total_cmp);
    let hi = match pts.last() {
        Some(&x) => plan.floor(x)?,
        None => return Ok(Vec::new()),
    };
    let (low, inside): (Vec<f64>, Vec<f64>) = pts.into_iter().partition(|&x| x < 2.0);
    let mut out: Vec<ChebyshevSample> = low
        .into_iter()
        .map(|x| ChebyshevSample { x, psi: 0.0, theta: 0.0, pi: 0, big_pi: 0.0 })
        .collect();
    let parts = sieve::scan(hi, plan, &inside, Vec::new, |acc: &mut Vec<ChebyshevSample>, s| {
        if s.k == 0 {
            acc.push(ChebyshevSample {
                x: s.x,
                psi: s.psi,
                theta: s.theta,
                pi: s.pi,
                big_pi: s.big_pi,
            });
        }
    });
    out.extend(parts.into_iter().flatten());
    Ok(out)
}

/// TSV with columns `x, psi, theta, pi, Pi`.
pub fn samples_tsv(rows: &[ChebyshevSample]) -> String {
    let mut s = String::from("x\tpsi\ttheta\tpi\tPi\n");
    for r in rows {
        s.push_str(&format!("{}\t{:.6}\t{:.6}\t{}\t{:.6}\n", r.x, r.psi, r.theta, r.pi, r.big_pi));
    }
    s
}

fn max_exponent(n: u64) -> u32 {
    if n < 2 {
        0
    } else {
        63 - n.leading_zeros()
    }
}

/// Moebius function by trial division.
pub fn mobius(mut n: u64) -> i32 {
    if n == 0 {
        return 0;
    }
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// `Lambda(n)`: `log p` if `n = p^k`, else 0.
pub fn von_mangoldt(n: u64) -> f64 {
    if n < 2 {
        return 0.0;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut m = n;
            while m % p == 0 {
                m /= p;
            }
            return if m == 1 { (p as f64).ln() } else { 0.0 };
        }
        p += 1;
    }
    (n as f64).ln()
}

/// `li(2)` as the principal value `int_0^2 dt / log t`. The pole is removed
/// by subtracting `1/(t - 1)`, whose symmetric principal value over
/// `[0, 2]` vanishes.
pub fn li2() -> Result<f64> {
    let g = |t: f64| {
        let u = t - 1.0;
        if u.abs() < 1e-2 {
            // 1/log(1+u) - 1/u
            0.5 + u * (-1.0 / 12.0 + u * (1.0 / 24.0 + u * (-19.0 / 720.0 + u * 3.0 / 160.0)))
        } else if t == 0.0 {
            1.0
        } else {
            1.0 / t.ln() - 1.0 / u
        }
    };
    let opts = QuadOptions {
        rel_tol: 1e-14,
        ..QuadOptions::default()
    };
    Ok(integrate(g, 0.0, 1.0, opts)?.value + integrate(g, 1.0, 2.0, opts)?.value)
}

/// `li(x) = li(2) + int_2^x dt / log t` for `x >= 2`.
pub fn li(x: f64) -> Result<f64> {
    if !(x >= 2.0) || !x.is_finite() {
        return Err(domain("li", format!("x = {x} must be at least 2")));
    }
    let base = li2()?;
    if x == 2.0 {
        return Ok(base);
    }
    // substitute t = e^s so the integrand e^s / s is smooth on a log scale
    let q = integrate(
        |s: f64| s.exp() / s,
        2f64.ln(),
        x.ln(),
        QuadOptions {
            rel_tol: 1e-13,
            ..QuadOptions::default()
        },
    )?;
    Ok(base + q.value)
}

/// Explicit formula `x - 2 sum_{k <= K} Re(x^rho / rho) - log 2pi -
/// (1/2) log(1 - x^-2)` over the first `K` zeros of `table`.
///
/// Without `midpoint`, `x` must not be a prime power (the formula converges
/// to the mean of the one-sided limits there); with it, the value is
/// understood as `psi(x) - Lambda(x)/2`.
pub fn explicit_psi(x: f64, k: usize, table: &ZeroTable, midpoint: bool) -> Result<f64> {
    if !(x > 1.0) || !x.is_finite() {
        return Err(domain("explicit_psi", format!("x = {x} must exceed 1")));
    }
    if k > table.count() {
        return Err(Error::Precondition(format!(
            "{k} zeros requested, table has {}",
            table.count()
        )));
    }
    if !midpoint && x.fract() == 0.0 && x < u64::MAX as f64 && von_mangoldt(x as u64) > 0.0 {
        return Err(domain("explicit_psi", format!("x = {x} is a prime power; use the midpoint convention")));
    }
    let lx = x.ln();
    let sx = x.sqrt();
    let mut acc = crate::rounding::Neumaier::new();
    for e in &table.entries()[..k] {
        let g = e.gamma;
        let (s, c) = (g * lx).sin_cos();
        // Re(x^(1/2 + i g) / (1/2 + i g)) = sqrt x (c/2 + g s) / (1/4 + g^2)
        acc.add(sx * (0.5 * c + g * s) / (0.25 + g * g));
    }
    Ok(x - 2.0 * acc.value() - (2.0 * PI).ln() - 0.5 * (-1.0 / (x * x)).ln_1p())
}
