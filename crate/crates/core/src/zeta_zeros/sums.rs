//! Certified sums over the tabulated zeros.

use super::{f_unchecked, r_unchecked, ZeroTable};
use crate::error::{domain, Error, Result};
use crate::rounding::{self, Neumaier};
use crate::zero_sum_bounds::{lemma7_sum_upper, Mode, PhiSpec};
use std::f64::consts::PI;

/// Rigorous upper bound for a two-sided sum over all nontrivial zeros.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumBound {
    /// over the tabulated zeros, both signs of gamma, rounded up
    pub partial: f64,
    /// bound for everything above the table height
    pub tail: f64,
    pub total: f64,
}

fn check_d(table: &ZeroTable, d: f64) -> Result<()> {
    if d > table.height() {
        return Err(Error::OutOfRange {
            op: "zero sum",
            value: d,
            limit: table.height(),
        });
    }
    Ok(())
}

/// `sum_{0 < gamma <= D} (gamma^2 + 1/4)^{-1/2}`, rounded up.
pub fn sum_inv_rho(table: &ZeroTable, d: f64) -> Result<f64> {
    check_d(table, d)?;
    let acc: Neumaier = table
        .entries()
        .iter()
        .take_while(|e| e.gamma - e.err <= d)
        .map(|e| {
            let g = e.gamma - e.err;
            1.0 / (g * g + 0.25).sqrt()
        })
        .collect();
    Ok(rounding::up(acc.value()))
}

/// Bound for `sum_rho |gamma|^-k` over all nontrivial zeros.
pub fn sum_inv_gamma_pow(table: &ZeroTable, k: u32) -> Result<SumBound> {
    if k < 2 {
        return Err(domain("sum_inv_gamma_pow", format!("k = {k} must be >= 2")));
    }
    if table.height() < 1000.0 {
        return Err(Error::Precondition(format!(
            "table height {} below 1000",
            table.height()
        )));
    }
    let one_sided: Neumaier = table
        .entries()
        .iter()
        .rev()
        .map(|e| (e.gamma - e.err).powi(-(k as i32)))
        .collect();
    let partial = rounding::up(2.0 * one_sided.value());
    let phi = PhiSpec::Power { m: k - 1 };
    let h = table.height();
    let tail = rounding::up(2.0 * lemma7_sum_upper(&phi, h, f64::INFINITY, 0, table, Mode::Certified)?);
    if tail > partial {
        return Err(Error::HeightTooLow { partial, tail });
    }
    Ok(SumBound {
        partial,
        tail,
        total: rounding::up(partial + tail),
    })
}

/// `C(D) = 4pi (0.137 + 0.443 / log D)`.
pub fn c_of_d(d: f64) -> Result<f64> {
    if !(d > 1.0) {
        return Err(domain("C(D)", format!("D = {d} must exceed 1")));
    }
    Ok(4.0 * PI * (0.137 + 0.443 / d.ln()))
}

/// The constant `G(D)` of the general-`D` form of the `S_1 + S_2` bound:
/// `S(D) - ((log(D/2pi) - 1)^2 + 1)/4pi
///  + (0.137 log D + 0.443 (log log D + 1/log D) + 2.6 - N(D)) / D`.
pub fn g_of_d(table: &ZeroTable, d: f64) -> Result<f64> {
    if !(d >= 2.0) {
        return Err(domain("G(D)", format!("D = {d} must be >= 2")));
    }
    check_d(table, d)?;
    let s = sum_inv_rho(table, d)?;
    let l = (d / (2.0 * PI)).ln();
    let ld = d.ln();
    let n = table.n_lower(d) as f64;
    let g = s - ((l - 1.0) * (l - 1.0) + 1.0) / (4.0 * PI)
        + (0.137 * ld + 0.443 * (ld.ln() + 1.0 / ld) + 2.6 - n) / d;
    Ok(rounding::up(g))
}

/// `G(D)` with `S(D)` replaced by an explicit value; used to compare the
/// general-`D` form against the fixed constant.
pub fn g_of_d_with_s(s: f64, n: f64, d: f64) -> f64 {
    let l = (d / (2.0 * PI)).ln();
    let ld = d.ln();
    s - ((l - 1.0) * (l - 1.0) + 1.0) / (4.0 * PI) + (0.137 * ld + 0.443 * (ld.ln() + 1.0 / ld) + 2.6 - n) / d
}

// keeps F and R in scope for the doc cross-check below
#[allow(dead_code)]
fn envelope(d: f64) -> (f64, f64) {
    (f_unchecked(d), r_unchecked(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta_zeros::find_zeros;

    #[test]
    fn inv_rho_small_cases() {
        let t = find_zeros(100.0).unwrap();
        assert_eq!(sum_inv_rho(&t, 14.0).unwrap(), 0.0);
        let g1 = t.entries()[0].gamma;
        let one = sum_inv_rho(&t, 15.0).unwrap();
        assert!((one * (g1 * g1 + 0.25).sqrt() - 1.0).abs() < 1e-8);
        assert!(matches!(sum_inv_rho(&t, 101.0), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn c_of_d_examples() {
        let e = std::f64::consts::E;
        assert!((c_of_d(e).unwrap() - 4.0 * PI * 0.58).abs() < 1e-13);
        let d: f64 = 963.567_040_2;
        let alt = 4.0 * PI * 0.137 + 4.0 * PI * 0.443 / d.ln();
        assert!((c_of_d(d).unwrap() - alt).abs() < 1e-13);
        assert!(c_of_d(1e9).unwrap() < c_of_d(1e3).unwrap());
        assert!(c_of_d(1.0).is_err());
    }

    #[test]
    fn g_of_d_degenerate() {
        let t = find_zeros(100.0).unwrap();
        let g = g_of_d(&t, 14.0).unwrap();
        assert!((g / g_of_d_with_s(0.0, 0.0, 14.0) - 1.0).abs() < 1e-8);
    }

    #[test]
    fn fixed_d_constant_is_g_with_s_two() {
        // with S = 2 and N(D) = 620 the general form collapses to the
        // fixed constant -0.01257566 (times 4pi: -0.1580304)
        let d = 963.567_040_2;
        let g = g_of_d_with_s(2.0, 620.0, d);
        assert!((g / -0.012_575_66 - 1.0).abs() < 1e-4, "{g}");
        assert!(((4.0 * PI * g) / -0.158_030_4 - 1.0).abs() < 1e-4);
    }
}
