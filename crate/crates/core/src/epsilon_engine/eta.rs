//! `eta_k` coefficients of `|f(x) - x| < eta_k x / log^k x` and the linear
//! bounds for `theta`, stepped through a table of `epsilon` rows.

use super::asymptotic::epsilon_asymptotic_proof;
use super::reference::{ReferenceRow, LN_1E16, LN_1E8, LN_8E11};
use super::{EpsilonCertificate, R0};
use crate::error::{Error, Result};
use crate::rounding;

const TOL: f64 = 1e-9;
const LN_2187: f64 = 7.690_285_914_361_39;

/// `epsilon` valid for `x >= e^b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpsRow {
    pub b: f64,
    pub epsilon: f64,
}

impl From<&EpsilonCertificate> for EpsRow {
    fn from(c: &EpsilonCertificate) -> Self {
        EpsRow { b: c.params.b, epsilon: c.epsilon }
    }
}

impl From<&ReferenceRow> for EpsRow {
    fn from(r: &ReferenceRow) -> Self {
        EpsRow { b: r.b, epsilon: r.epsilon }
    }
}

/// Function being bounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Psi,
    Theta,
}

// (from_b, c_half, c_third): psi - theta < c_half sqrt x + c_third x^(1/3)
// on [e^from_b, next from_b)
const UPPER_PIECES: &[(f64, f64, f64)] = &[
    (0.0, 1.0, 4.0 / 3.0),
    (LN_1E8, 1.0, 6.0 / 5.0),
    (LN_1E16, 1.001, 1.1),
    (38.0, 1.001, 1.0),
];

// psi - theta > c_half sqrt x + c_third x^(1/3)
const LOWER_PIECES: &[(f64, f64, f64)] = &[
    (LN_2187, 1.0, 2.0 / 3.0),
    (LN_1E8, 1.0, 6.0 / 7.0),
    (LN_1E16, 0.999, 0.9),
    (38.0, 0.999, 1.0),
];

fn pieces_over(pieces: &[(f64, f64, f64)], lo: f64, hi: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
    pieces.iter().enumerate().filter_map(move |(i, &(from, c1, c2))| {
        let to = pieces.get(i + 1).map_or(f64::INFINITY, |p| p.0);
        (from < hi && to > lo).then_some((c1, c2))
    })
}

/// Constants `(c_half, c_third)` with `psi - theta < c_half sqrt x +
/// c_third x^(1/3)` for all `x` in `[e^lo, e^hi)`.
pub fn pereira_upper(lo: f64, hi: f64) -> Option<(f64, f64)> {
    pieces_over(UPPER_PIECES, lo, hi).reduce(|a, b| (a.0.max(b.0), a.1.max(b.1)))
}

/// Constants with `psi - theta > c_half sqrt x + c_third x^(1/3)` on
/// `[e^lo, e^hi)`; `None` below 2187.
pub fn pereira_lower(lo: f64, hi: f64) -> Option<(f64, f64)> {
    if lo < LN_2187 - TOL {
        return None;
    }
    pieces_over(LOWER_PIECES, lo, hi).reduce(|a, b| (a.0.min(b.0), a.1.min(b.1)))
}

fn correction(c: (f64, f64), b: f64) -> f64 {
    c.0 * (-b / 2.0).exp() + c.1 * (-2.0 * b / 3.0).exp()
}

fn sorted(rows: &[EpsRow]) -> Result<Vec<EpsRow>> {
    let mut v = rows.to_vec();
    v.sort_by(|a, b| a.b.total_cmp(&b.b));
    if v.windows(2).any(|w| !(w[1].b > w[0].b)) || v.iter().any(|r| !(r.epsilon > 0.0)) {
        return Err(Error::Coverage("rows must have distinct b and positive epsilon".into()));
    }
    Ok(v)
}

fn start_index(rows: &[EpsRow], b_min: f64) -> Result<usize> {
    rows.iter()
        .position(|r| (r.b - b_min).abs() <= TOL)
        .ok_or_else(|| Error::Coverage(format!("no row at b = {b_min}")))
}

fn row_value(k: u32, rows: &[EpsRow], i: usize, variant: Variant) -> Result<f64> {
    let r = rows[i];
    match rows.get(i + 1) {
        Some(next) => {
            let corr = match variant {
                Variant::Psi => 0.0,
                Variant::Theta => {
                    let c = pereira_upper(r.b, next.b)
                        .ok_or_else(|| Error::Coverage(format!("no psi - theta bound on [{}, {})", r.b, next.b)))?;
                    correction(c, r.b)
                }
            };
            Ok(rounding::up((r.epsilon + corr) * next.b.powi(k as i32)))
        }
        None => tail_value(k, r, variant),
    }
}

/// Beyond the last row the analytic form takes over; `eps(b) b^k` is
/// decreasing once `X > 2k + 3/4`, so its supremum is the value at the
/// last row.
fn tail_value(k: u32, last: EpsRow, variant: Variant) -> Result<f64> {
    let x = (last.b / R0).sqrt();
    if !(last.b > 110.0) || x <= 2.0 * k as f64 + 0.75 {
        return Err(Error::Coverage(format!(
            "rows end at b = {} before the analytic tail applies for k = {k}",
            last.b
        )));
    }
    let eps = epsilon_asymptotic_proof(last.b)?.max(last.epsilon);
    let corr = match variant {
        Variant::Psi => 0.0,
        Variant::Theta => correction(pereira_upper(last.b, f64::INFINITY).unwrap_or((1.001, 1.1)), last.b),
    };
    Ok(rounding::up((eps + corr) * last.b.powi(k as i32)))
}

/// `eta_k` valid for `x >= e^{b_min}`: the maximum over consecutive rows
/// of `epsilon_i b_{i+1}^k` (with the `psi - theta` correction for
/// `theta`), and the analytic tail past the last row.
pub fn eta_coeffs(k: u32, b_min: f64, rows: &[EpsRow], variant: Variant) -> Result<f64> {
    if !(1..=4).contains(&k) {
        return Err(crate::error::domain("eta_coeffs", format!("k = {k} outside 1..=4")));
    }
    let rows = sorted(rows)?;
    let start = start_index(&rows, b_min)?;
    let mut best = 0.0f64;
    for i in start..rows.len() {
        best = best.max(row_value(k, &rows, i, variant)?);
    }
    Ok(best)
}

/// Per-row values `(b_i, epsilon_i b_{i+1}^k)` behind [`eta_coeffs`].
pub fn eta_row_values(k: u32, rows: &[EpsRow], variant: Variant) -> Result<Vec<(f64, f64)>> {
    let rows = sorted(rows)?;
    (0..rows.len())
        .map(|i| row_value(k, &rows, i, variant).map(|v| (rows[i].b, v)))
        .collect()
}

/// Lower bound `theta(x) > value x` for `x` from `e^{from_b}` up to the
/// next branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowerBranch {
    pub from_b: f64,
    pub epsilon: f64,
    pub value: f64,
}

/// Linear bounds `lower x < theta(x) < upper x`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaCoefficients {
    /// valid for `x >= 8 * 10^11`
    pub upper: f64,
    /// valid for `x >= 10^8`; the minimum over `branches`
    pub lower: f64,
    pub branches: Vec<LowerBranch>,
}

/// Steps through the rows from `8 * 10^11` for the upper coefficient,
/// subtracting the lower `psi - theta` bound at each interval's right
/// end, and evaluates the lower coefficient on the branches starting at
/// `10^8`, `8 * 10^11` and `10^16`.
pub fn theta_coefficient_bounds(rows: &[EpsRow]) -> Result<ThetaCoefficients> {
    let rows = sorted(rows)?;
    let start = start_index(&rows, LN_8E11)?;
    let mut upper = 0.0f64;
    for i in start..rows.len() {
        let r = rows[i];
        let excess = match rows.get(i + 1) {
            Some(next) => {
                let c = pereira_lower(r.b, next.b)
                    .ok_or_else(|| Error::Coverage(format!("no psi - theta lower bound on [{}, {})", r.b, next.b)))?;
                r.epsilon - rounding::down(correction(c, next.b))
            }
            None => r.epsilon,
        };
        upper = upper.max((1.0 + rounding::up(excess)).next_up());
    }

    let starts = [LN_1E8, LN_8E11, LN_1E16];
    let mut branches = Vec::with_capacity(starts.len());
    for (j, &from) in starts.iter().enumerate() {
        let to = starts.get(j + 1).copied().unwrap_or(f64::INFINITY);
        let row = rows
            .iter()
            .rev()
            .find(|r| r.b <= from + TOL)
            .ok_or_else(|| Error::Coverage(format!("no row at or below b = {from}")))?;
        let c = pereira_upper(from, to).ok_or_else(|| Error::Coverage(format!("no psi - theta bound from {from}")))?;
        let loss = rounding::up(row.epsilon + correction(c, from));
        branches.push(LowerBranch {
            from_b: from,
            epsilon: row.epsilon,
            value: (1.0 - loss).next_down(),
        });
    }
    let lower = branches.iter().map(|b| b.value).fold(f64::INFINITY, f64::min);
    Ok(ThetaCoefficients { upper, lower, branches })
}
