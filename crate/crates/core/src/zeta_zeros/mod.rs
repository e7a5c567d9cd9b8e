//! Zeros of zeta on the critical line: location, certification, storage,
//! and certified sums over them.

mod finder;
mod sums;
mod table;
pub mod zeta;

pub use finder::{find_zeros, find_zeros_with, FinderConfig, MAX_HEIGHT};
pub use sums::{c_of_d, g_of_d, g_of_d_with_s, sum_inv_gamma_pow, sum_inv_rho, SumBound};
pub use table::{cache_dir, load_or_find, METHOD_VERSION};
pub use zeta::{hardy_z, hardy_z_detailed, theta};

use crate::error::{domain, Result};
use std::f64::consts::PI;

/// Height up to which all nontrivial zeros are known to lie on the critical
/// line; `F(A) = 10^13`.
pub const DEFAULT_A: f64 = 2_445_999_556_030.342_362_641;

/// Smooth main term of the zero-counting function.
pub fn f_main(t: f64) -> Result<f64> {
    if !(t >= 2.0) {
        return Err(domain("F", format!("T = {t} must be >= 2")));
    }
    Ok(f_unchecked(t))
}

pub(crate) fn f_unchecked(t: f64) -> f64 {
    let u = t / (2.0 * PI);
    u * u.ln() - u + 7.0 / 8.0
}

/// Error envelope for `|N(T) - F(T)|`.
pub fn r_err(t: f64) -> Result<f64> {
    if !(t >= 2.0) {
        return Err(domain("R", format!("T = {t} must be >= 2")));
    }
    Ok(r_unchecked(t))
}

pub(crate) fn r_unchecked(t: f64) -> f64 {
    let l = t.ln();
    0.137 * l + 0.443 * l.ln() + 1.588
}

/// `q(y) = (0.137 log y + 0.443) / (y log y log(y/2pi))`, for `y > 2pi`.
pub fn q_corr(y: f64) -> f64 {
    let l = y.ln();
    (0.137 * l + 0.443) / (y * l * (y / (2.0 * PI)).ln())
}

/// One located zero `1/2 + i gamma`, with the true ordinate inside
/// `[gamma - err, gamma + err]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroEntry {
    pub index: usize,
    pub gamma: f64,
    pub err: f64,
}

/// All zeros with `0 < gamma <= height`, certified complete.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    entries: Vec<ZeroEntry>,
    height: f64,
    /// ordinates are exactly representable in the 12-digit file format
    pub(crate) printed: bool,
}

impl ZeroTable {
    /// Build a table and check its invariants, including the count
    /// certificate `|count - F(height)| < R(height)`.
    pub fn new(entries: Vec<ZeroEntry>, height: f64) -> Result<Self> {
        use crate::error::Error;
        if !(height > 14.0) {
            return Err(domain("ZeroTable", format!("height {height} must exceed 14")));
        }
        for (i, e) in entries.iter().enumerate() {
            if e.index != i + 1 {
                return Err(Error::Certification(format!("entry {i} has index {}", e.index)));
            }
            if !(e.gamma > 14.0) || e.gamma + e.err > height || !(e.err >= 0.0) {
                return Err(Error::Certification(format!(
                    "entry {} at {} (err {}) outside (14, {height}]",
                    e.index, e.gamma, e.err
                )));
            }
        }
        for w in entries.windows(2) {
            if w[1].gamma - w[0].gamma <= w[0].err + w[1].err {
                return Err(Error::Certification(format!(
                    "zeros {} and {} overlap",
                    w[0].index, w[1].index
                )));
            }
        }
        let count = entries.len() as f64;
        let f = f_unchecked(height);
        let r = r_unchecked(height);
        if !((count - f).abs() < r) {
            return Err(Error::Certification(format!(
                "count {count} vs F({height}) = {f:.4} exceeds R = {r:.4}"
            )));
        }
        Ok(ZeroTable {
            entries,
            height,
            printed: false,
        })
    }

    pub fn entries(&self) -> &[ZeroEntry] {
        &self.entries
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn count(&self) -> usize {
        self.entries.len()
    }

    pub fn max_err(&self) -> f64 {
        self.entries.iter().map(|e| e.err).fold(0.0, f64::max)
    }

    /// Zeros that certainly satisfy `gamma <= y`; `y <= height`.
    pub fn n_lower(&self, y: f64) -> usize {
        self.entries.partition_point(|e| e.gamma + e.err <= y)
    }

    /// Zeros that possibly satisfy `gamma <= y`; `y <= height`.
    pub fn n_upper(&self, y: f64) -> usize {
        self.entries.partition_point(|e| e.gamma - e.err <= y)
    }

    /// A table truncated to `height' <= height`.
    pub fn truncate(&self, height: f64) -> Result<ZeroTable> {
        if height > self.height {
            return Err(crate::error::Error::OutOfRange {
                op: "ZeroTable::truncate",
                value: height,
                limit: self.height,
            });
        }
        let n = self.n_upper(height);
        if n != self.n_lower(height) {
            return Err(crate::error::Error::Certification(format!(
                "a zero straddles the cut at {height}"
            )));
        }
        let mut t = ZeroTable::new(self.entries[..n].to_vec(), height)?;
        t.printed = self.printed;
        Ok(t)
    }
}
