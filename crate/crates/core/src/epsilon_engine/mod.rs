//! Assembly of zero-sum bounds into `epsilon` with
//! `|psi(x) - x| < epsilon x` for `x >= e^b`, the analytic large-`x` forms,
//! and the `eta_k` coefficients of `x / log^k x` bounds.
//!
//! Two configurations are supported. [`Family::A`] uses the fixed cutoff
//! `D = 963.5670402` for the low zeros and takes the smaller of the
//! untruncated and split tails. [`Family::B`] uses a general cutoff `D`
//! (2500 by default) through `G(D)` and `C(D)` and always splits the tail
//! at an optimized height `T2`.

mod asymptotic;
mod eta;
mod optimize;
mod reference;

pub use asymptotic::{
    epsilon_asymptotic, epsilon_asymptotic_proof, epsilon_star, epsilon_zero, psi_theta_absorption, solve_nu,
    NuSolution, EPS0_CERTIFIED_FROM,
};
pub use eta::{
    eta_coeffs, eta_row_values, pereira_lower, pereira_upper, theta_coefficient_bounds, EpsRow, LowerBranch,
    ThetaCoefficients, Variant,
};
pub use reference::{reference_rows, ReferenceRow, LN_1E16, LN_1E8, LN_8E11, SPECIAL_ROWS};

use crate::error::{domain, Error, Result};
use crate::rounding::{self, Neumaier};
use crate::zero_sum_bounds::{integral_damped_m0, integral_damped_m0_bounds, ln_integral_damped, Mode};
use crate::zeta_zeros::{c_of_d, g_of_d, q_corr, sum_inv_rho, ZeroTable, DEFAULT_A};
use rayon::prelude::*;
use std::f64::consts::PI;
use std::fmt;

/// Width constant of the zero-free region used for the `e^-X` decay.
pub const R0: f64 = 5.69693;
/// Cutoff for the low zeros in the fixed-`D` configuration.
pub const FIXED_D: f64 = 963.5670402;
/// Default cutoff of the general-`D` configuration.
pub const FAMILY_B_D: f64 = 2500.0;
/// Upper bound for `m` in the optimizer.
pub const MAX_M: u32 = 30;

// constants of the fixed-D bound for S_1 + S_2, valid once the zeros up to
// D are 620 in number with sum 1/|rho| < 2
const FIXED_K0: f64 = 0.1580304;
const FIXED_K1: f64 = 2.531837599;
const FIXED_COUNT: usize = 620;
// coefficient of the main term in the untruncated tail bound; must dominate
// 1/2pi + q(Y)
const TAIL_COEF: f64 = 0.159155;

/// `X = sqrt(log x / R0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XScale {
    pub x: f64,
    pub r0: f64,
}

impl XScale {
    pub fn from_b(b: f64) -> Result<Self> {
        if !(b > 0.0) || !b.is_finite() {
            return Err(domain("XScale", format!("log x = {b} must be positive")));
        }
        Ok(XScale { x: (b / R0).sqrt(), r0: R0 })
    }
}

/// Which assembly of the bound is used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// fixed `D`, untruncated or split tail, whichever is smaller
    A,
    /// general `D`, split tail with the `h_3 / e_3` decomposition
    B,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
        })
    }
}

/// Bound that produced the `S_3 + S_4` part of a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    /// untruncated tail, `T2 = 0`
    Omega2,
    /// tail split at `T2` (fixed `D`)
    Omega3,
    /// tail split at `T2` (general `D`)
    Omega3Star,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::Omega2 => "omega2",
            Form::Omega3 => "omega3",
            Form::Omega3Star => "omega3_star",
        })
    }
}

/// How the fixed-`D` configuration bounds `S_3 + S_4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TailChoice {
    /// smaller of the untruncated and split tails
    #[default]
    Best,
    /// untruncated tail only, as in the published fixed-`D` tables
    Untruncated,
}

/// Inputs of one bound evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundParams {
    /// bound is valid for `x >= e^b`
    pub b: f64,
    pub m: u32,
    pub delta: f64,
    /// cutoff between the low-zero and high-zero parts of `S_1 + S_2`
    pub t1: f64,
    /// split height of the off-line zeros; 0 when the tail is not split
    pub t2: f64,
    pub d: f64,
    /// height below which all zeros are on the critical line
    pub a: f64,
}

impl BoundParams {
    /// Validates the window `0 < delta m < 1 - e^-b` and sets
    /// `T1 = (1/delta) (2 R_m(delta) / (2 + m delta))^(1/m)`.
    pub fn new(b: f64, m: u32, delta: f64, d: f64, a: f64) -> Result<Self> {
        if !(b > 0.5) || !b.is_finite() {
            return Err(domain("BoundParams", format!("b = {b} must exceed 1/2")));
        }
        if m == 0 {
            return Err(domain("BoundParams", "m must be positive"));
        }
        let mf = m as f64;
        if !(delta > 0.0) || !(delta * mf < -(-b).exp_m1()) {
            return Err(domain(
                "BoundParams",
                format!("delta = {delta:e} outside (0, (1 - e^-b)/m) for b = {b}, m = {m}"),
            ));
        }
        if !(d >= 2.0) || !(d <= a) {
            return Err(domain("BoundParams", format!("need 2 <= D <= A; got D = {d}, A = {a}")));
        }
        Ok(BoundParams {
            b,
            m,
            delta,
            t1: ln_t1(m, delta).exp(),
            t2: 0.0,
            d,
            a,
        })
    }

    pub fn x(&self) -> f64 {
        (self.b / R0).sqrt()
    }

    fn ln_rm_over_delta_m(&self) -> f64 {
        ln_r_m(self.m, self.delta) - self.m as f64 * self.delta.ln()
    }
}

/// The four summands of `epsilon`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Parts {
    /// `Omega_1 e^{-b/2}` (low zeros)
    pub omega1: f64,
    /// `Omega_2` or `Omega_3` (off-line zeros)
    pub tail: f64,
    /// `m delta / 2`
    pub linear: f64,
    /// `e^-b log 2pi`
    pub log_term: f64,
}

impl Parts {
    pub fn sum(&self) -> f64 {
        let mut acc = Neumaier::new();
        for v in [self.omega1, self.tail, self.linear, self.log_term] {
            acc.add(v);
        }
        acc.value()
    }
}

/// A certified `epsilon` with the inputs and decomposition behind it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpsilonCertificate {
    pub params: BoundParams,
    pub epsilon: f64,
    pub parts: Parts,
    pub form: Form,
    pub family: Family,
}

/// `R_m(nu) = ((1+nu)^(m+1) + 1)^m`.
pub fn r_m(m: u32, nu: f64) -> Result<f64> {
    let l = ln_r_m_checked(m, nu)?;
    if l > 709.0 {
        return Err(Error::OutOfRange {
            op: "R_m",
            value: l,
            limit: 709.0,
        });
    }
    Ok(l.exp())
}

/// `log R_m(nu)`, usable where `R_m` itself overflows.
pub fn ln_r_m_checked(m: u32, nu: f64) -> Result<f64> {
    if m == 0 || !(nu > 0.0) || !nu.is_finite() {
        return Err(domain("R_m", format!("need m >= 1, nu > 0; got m = {m}, nu = {nu}")));
    }
    Ok(ln_r_m(m, nu))
}

fn ln_r_m(m: u32, nu: f64) -> f64 {
    let mf = m as f64;
    let inner = (mf + 1.0) * nu.ln_1p();
    // log((1+nu)^(m+1) + 1) = inner + log1p(e^-inner)
    mf * (inner + (-inner).exp().ln_1p())
}

fn ln_t1(m: u32, delta: f64) -> f64 {
    let mf = m as f64;
    -delta.ln() + (2f64.ln() + ln_r_m(m, delta) - (2.0 + mf * delta).ln()) / mf
}

fn ln_phi(m: u32, x: f64, y: f64) -> f64 {
    let l = y.ln();
    -x * x / l - (m as f64 + 1.0) * l
}

fn r_env(y: f64) -> f64 {
    let l = y.ln();
    0.137 * l + 0.443 * l.ln() + 1.588
}

/// `exp(l)` rounded up, never returning 0 for a finite argument.
fn exp_up(l: f64) -> f64 {
    if l == f64::NEG_INFINITY {
        0.0
    } else if l < -700.0 {
        f64::MIN_POSITIVE
    } else {
        rounding::up(l.exp())
    }
}

/// Zero data entering the `S_1 + S_2` bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroSummary {
    pub d: f64,
    /// `sum_{0 < gamma <= D} 1/|rho|`, rounded up
    pub s: f64,
    /// number of zeros up to `D`
    pub n: usize,
    /// `G(D)`
    pub g: f64,
    /// `C(D)`
    pub c: f64,
}

impl ZeroSummary {
    pub fn new(table: &ZeroTable, d: f64) -> Result<Self> {
        Ok(ZeroSummary {
            d,
            s: sum_inv_rho(table, d)?,
            n: table.n_lower(d),
            g: g_of_d(table, d)?,
            c: c_of_d(d)?,
        })
    }
}

/// Bound engine bound to one family, one zero table summary and one `A`.
#[derive(Debug, Clone)]
pub struct Engine {
    family: Family,
    zeros: ZeroSummary,
    a: f64,
    mode: Mode,
    tail: TailChoice,
}

impl Engine {
    /// Fixed-`D` engine. Certifies that the table has exactly 620 zeros up
    /// to `D` with `sum 1/|rho| < 2`, which the fixed constants rely on.
    pub fn family_a(table: &ZeroTable, a: f64, mode: Mode) -> Result<Self> {
        check_a(a)?;
        let zeros = ZeroSummary::new(table, FIXED_D)?;
        if zeros.n != FIXED_COUNT || table.n_upper(FIXED_D) != FIXED_COUNT {
            return Err(Error::Certification(format!(
                "expected {FIXED_COUNT} zeros up to {FIXED_D}, table has {}",
                zeros.n
            )));
        }
        if !(zeros.s < 2.0) {
            return Err(Error::Certification(format!(
                "sum of 1/|rho| up to {FIXED_D} is {} >= 2",
                zeros.s
            )));
        }
        Ok(Engine {
            family: Family::A,
            zeros,
            a,
            mode,
            tail: TailChoice::Best,
        })
    }

    /// General-`D` engine with `2 <= D <= min(A, table height)`.
    pub fn family_b(table: &ZeroTable, d: f64, a: f64, mode: Mode) -> Result<Self> {
        check_a(a)?;
        if !(d >= 2.0) || d > a {
            return Err(domain("family_b", format!("need 2 <= D <= A; got D = {d}")));
        }
        let zeros = ZeroSummary::new(table, d)?;
        Ok(Engine {
            family: Family::B,
            zeros,
            a,
            mode,
            tail: TailChoice::Best,
        })
    }

    /// Only affects [`Family::A`].
    pub fn with_tail(mut self, tail: TailChoice) -> Self {
        self.tail = tail;
        self
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn zeros(&self) -> &ZeroSummary {
        &self.zeros
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn params(&self, b: f64, m: u32, delta: f64) -> Result<BoundParams> {
        BoundParams::new(b, m, delta, self.zeros.d, self.a)
    }

    /// Upper bound for `S_1 + S_2`; requires `T1 >= D`.
    pub fn omega1(&self, p: &BoundParams) -> Result<f64> {
        if !(p.t1 >= self.zeros.d) {
            return Err(Error::Precondition(format!(
                "T1 = {} below D = {}",
                p.t1, self.zeros.d
            )));
        }
        let mf = p.m as f64;
        let l = (p.t1 / (2.0 * PI)).ln() + 1.0 / mf;
        let tail = mf / ((mf + 1.0) * p.t1);
        let brace = match self.family {
            Family::A => l * l + 1.0 / (mf * mf) - FIXED_K0 - FIXED_K1 * tail,
            Family::B => l * l + 4.0 * PI * self.zeros.g + 1.0 / (mf * mf) - self.zeros.c * tail,
        };
        Ok(rounding::up((2.0 + mf * p.delta) / (4.0 * PI) * brace))
    }

    /// The `N(A) = F(A)` identity behind the `-R(A) phi(A)` terms is only
    /// known at the default `A`.
    fn subtract_at_a(&self) -> bool {
        self.a == DEFAULT_A
    }

    /// Upper bound for `S_3 + S_4` with the tail left whole (`T2 = 0`).
    pub fn omega2(&self, p: &BoundParams) -> Result<f64> {
        let x = p.x();
        let a = self.a;
        let w = (x / (p.m as f64 + 1.0).sqrt()).exp();
        let y = a.max(w);
        let coef = TAIL_COEF.max(rounding::up(1.0 / (2.0 * PI) + q_corr(y)));
        let lr = p.ln_rm_over_delta_m();
        let main = match ln_integral_damped(a, f64::INFINITY, p.m, x, self.mode)? {
            Some(li) => exp_up(coef.ln() + lr + li),
            None => 0.0,
        };
        // 2 R(Y) phi_m(Y) - R(A) phi_m(A), factored at Y
        let ly = ln_phi(p.m, x, y);
        let sub = if self.subtract_at_a() {
            r_env(a) * (ln_phi(p.m, x, a) - ly).exp()
        } else {
            0.0
        };
        let inner = 2.0 * r_env(y) - sub;
        let err = if inner > 0.0 { exp_up(lr + ly + inner.ln()) } else { 0.0 };
        Ok(rounding::up(main + err))
    }

    /// Window `[log A, X]` for `log T2`, or `None` when it is empty.
    pub fn t2_window(&self, p: &BoundParams) -> Option<(f64, f64)> {
        let la = self.a.ln();
        let x = p.x();
        (x >= la).then_some((la, x))
    }

    /// Tail bound `R_m/delta^m (coef int_T^inf phi_m log + 2 R(Y) phi_m(Y))`
    /// with `Y = max(T, W_m)`; returns (main, error) parts.
    fn split_high(&self, p: &BoundParams, t: f64, coef_of_y: impl Fn(f64) -> f64) -> Result<(f64, f64)> {
        let x = p.x();
        let w = (x / (p.m as f64 + 1.0).sqrt()).exp();
        let y = t.max(w);
        let lr = p.ln_rm_over_delta_m();
        let coef = coef_of_y(t);
        let main = match ln_integral_damped(t, f64::INFINITY, p.m, x, self.mode)? {
            Some(li) => exp_up(coef.ln() + lr + li),
            None => 0.0,
        };
        let err = exp_up(lr + ln_phi(p.m, x, y) + (2.0 * r_env(y)).ln());
        Ok((main, err))
    }

    fn i0_upper(&self, x: f64, t: f64) -> Result<f64> {
        if t <= self.a {
            return Ok(0.0);
        }
        Ok(match self.mode {
            Mode::Certified => integral_damped_m0_bounds(self.a, t, x)?.1,
            Mode::Reference => integral_damped_m0(self.a, t, x)?,
        }
        .max(0.0))
    }

    /// Fixed-`D` split tail at `T2` with `A <= T2 <= e^X`.
    pub fn omega3(&self, p: &BoundParams, t2: f64) -> Result<f64> {
        let x = p.x();
        if !(t2 >= self.a) || !(t2.ln() <= x) {
            return Err(Error::Precondition(format!(
                "T2 = {t2:e} outside [A, e^X] = [{:e}, e^{x}]",
                self.a
            )));
        }
        let mf = p.m as f64;
        let low = (2.0 + mf * p.delta) / (4.0 * PI) * self.i0_upper(x, t2)?;
        let sub = if self.subtract_at_a() {
            r_env(self.a) * ln_phi(0, x, self.a).exp()
        } else {
            0.0
        };
        let edge = (2.0 + mf * p.delta) / 2.0 * (2.0 * r_env(t2) * ln_phi(0, x, t2).exp() - sub);
        let (main, err) = self.split_high(p, t2, |y| TAIL_COEF.max(rounding::up(1.0 / (2.0 * PI) + q_corr(y))))?;
        Ok(rounding::up(low + edge.max(0.0) + main + err))
    }

    /// General-`D` split tail `h_3(T2)/2pi + e_3(T2)`, with
    /// `A <= T2 <= max(A, e^X)`. Returns `(h_3/2pi, e_3)`.
    pub fn omega3_star(&self, p: &BoundParams, t2: f64) -> Result<(f64, f64)> {
        let x = p.x();
        if !(t2 >= self.a) || !(t2 == self.a || t2.ln() <= x) {
            return Err(Error::Precondition(format!(
                "T2 = {t2:e} outside [A, max(A, e^X)] with X = {x}"
            )));
        }
        let mf = p.m as f64;
        let half = (2.0 + mf * p.delta) / 2.0;
        let i0 = self.i0_upper(x, t2)?;
        let q = q_corr(t2);
        let inv2pi = 1.0 / (2.0 * PI);
        let (high_main, high_err) = self.split_high(p, t2, |_| 1.0)?;
        let h = rounding::up(half * i0 * inv2pi + high_main * inv2pi);
        let e = rounding::up(q * (high_main - half * i0) + r_env(t2) * ln_phi(0, x, t2).exp() * 2.0 * half + high_err);
        Ok((h, e))
    }

    fn best_omega3(&self, p: &BoundParams) -> Option<(f64, f64)> {
        let (lo, hi) = self.t2_window(p)?;
        let f = |s: f64| self.omega3(p, s.exp().max(self.a)).unwrap_or(f64::INFINITY);
        let (s, v) = optimize::golden_min(f, lo, hi, 1e-7);
        v.is_finite().then(|| (v, s.exp().max(self.a)))
    }

    fn best_omega3_star(&self, p: &BoundParams) -> Result<(f64, f64)> {
        let total = |t: f64| self.omega3_star(p, t).map(|(h, e)| h + e);
        match self.t2_window(p) {
            None => Ok((total(self.a)?, self.a)),
            Some((lo, hi)) => {
                let f = |s: f64| total(s.exp().max(self.a)).unwrap_or(f64::INFINITY);
                let (s, v) = optimize::golden_min(f, lo, hi, 1e-7);
                if !v.is_finite() {
                    return Err(Error::Convergence(format!("no finite split bound at b = {}", p.b)));
                }
                Ok((v, s.exp().max(self.a)))
            }
        }
    }

    /// Certificate for the given `(b, m, delta)`.
    pub fn epsilon_for(&self, b: f64, m: u32, delta: f64) -> Result<EpsilonCertificate> {
        let mut p = self.params(b, m, delta)?;
        let o1 = self.omega1(&p)?;
        let omega1 = if o1 > 0.0 { exp_up(o1.ln() - b / 2.0) } else { 0.0 };
        let (tail, form) = match self.family {
            Family::A => {
                let o2 = self.omega2(&p)?;
                let split = match self.tail {
                    TailChoice::Best => self.best_omega3(&p),
                    TailChoice::Untruncated => None,
                };
                match split {
                    Some((o3, t2)) if o3 < o2 => {
                        p.t2 = t2;
                        (o3, Form::Omega3)
                    }
                    _ => (o2, Form::Omega2),
                }
            }
            Family::B => {
                let (v, t2) = self.best_omega3_star(&p)?;
                p.t2 = t2;
                (v, Form::Omega3Star)
            }
        };
        let parts = Parts {
            omega1,
            tail,
            linear: rounding::up(m as f64 * delta / 2.0),
            log_term: exp_up((2.0 * PI).ln().ln() - b),
        };
        let epsilon = parts.sum().next_up();
        if !(epsilon > 0.0) || !epsilon.is_finite() {
            return Err(Error::Convergence(format!("epsilon = {epsilon} at b = {b}")));
        }
        Ok(EpsilonCertificate {
            params: p,
            epsilon,
            parts,
            form,
            family: self.family,
        })
    }

    /// Split-tail breakdown `(h_3/2pi, e_3)` at the certificate's `T2`.
    pub fn split_breakdown(&self, cert: &EpsilonCertificate) -> Result<(f64, f64)> {
        let t2 = if cert.params.t2 > 0.0 { cert.params.t2 } else { self.a };
        self.omega3_star(&cert.params, t2)
    }

    /// Minimal-`epsilon` certificate over `m = 1..=30` and `delta`.
    pub fn optimize_row(&self, b: f64) -> Result<EpsilonCertificate> {
        if !(b >= 18.0) {
            return Err(domain("optimize_row", format!("b = {b} below 18")));
        }
        let best = (1..=MAX_M)
            .into_par_iter()
            .filter_map(|m| optimize::best_delta(self, b, m))
            .collect::<Vec<_>>();
        let (m, delta) = best
            .into_iter()
            .min_by(|x, y| x.2.total_cmp(&y.2).then(x.0.cmp(&y.0)))
            .map(|(m, d, _)| (m, d))
            .ok_or_else(|| Error::Convergence(format!("no admissible (m, delta) at b = {b}")))?;
        self.epsilon_for(b, m, delta)
    }

    /// Optimized certificates for a grid of `b`, sorted by `b`. A row that
    /// comes out above its predecessor inherits the predecessor's
    /// certificate, since a bound valid from `e^b'` holds from any `e^b`
    /// with `b >= b'`.
    pub fn table(&self, grid: &[f64]) -> Result<Vec<EpsilonCertificate>> {
        let mut grid = grid.to_vec();
        grid.sort_by(f64::total_cmp);
        grid.dedup();
        let rows = grid
            .par_iter()
            .map(|&b| self.optimize_row(b))
            .collect::<Result<Vec<_>>>()?;
        let mut out: Vec<EpsilonCertificate> = Vec::with_capacity(rows.len());
        for r in rows {
            match out.last() {
                Some(prev) if prev.epsilon < r.epsilon => {
                    let mut c = *prev;
                    c.params.b = r.params.b;
                    out.push(c);
                }
                _ => out.push(r),
            }
        }
        Ok(out)
    }
}

fn check_a(a: f64) -> Result<()> {
    if !(a > 2.0 * PI * std::f64::consts::E) || !a.is_finite() {
        return Err(domain("engine", format!("A = {a} too small")));
    }
    Ok(())
}

/// The grid of `b` values tabulated by default: fine steps just above
/// `log 10^8`, unit steps to 30, then progressively coarser to 5700.
pub fn default_grid() -> Vec<f64> {
    let mut g = vec![18.42, 18.43, 18.44, 18.45, 18.5, 18.7, 19.0, 19.5];
    g.extend((20..=30).map(f64::from));
    g.extend([35.0, 40.0, 45.0, 50.0, 75.0, 100.0]);
    g.extend((3..=40).map(|i| 50.0 * i as f64));
    g.extend((21..=27).map(|i| 100.0 * i as f64));
    g.extend([3000.0, 3200.0, 3500.0, 3700.0, 4000.0, 4200.0, 4500.0, 4700.0, 5000.0, 5200.0, 5500.0, 5700.0]);
    g
}

/// TSV rendering: `b, m, delta, epsilon, form, omega1, tail, linear, log_term, T1, T2`.
pub fn to_tsv(rows: &[EpsilonCertificate]) -> String {
    let mut s = String::from("b\tm\tdelta\tepsilon\tform\tomega1\ttail\tlinear\tlog_term\tT1\tT2\n");
    for c in rows {
        let p = &c.params;
        s.push_str(&format!(
            "{}\t{}\t{:.6e}\t{:.6e}\t{}\t{:.6e}\t{:.6e}\t{:.6e}\t{:.6e}\t{:.6e}\t{:.6e}\n",
            p.b, p.m, p.delta, c.epsilon, c.form, c.parts.omega1, c.parts.tail, c.parts.linear, c.parts.log_term, p.t1, p.t2
        ));
    }
    s
}

#[cfg(test)]
mod tests;
