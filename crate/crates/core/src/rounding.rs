//! Directed-rounding surrogate and compensated summation.
//!
//! Quantities that must be upper bounds are pushed up by a relative
//! `2^-30`, lower bounds pushed down by the same amount. This is far
//! larger than the accumulated binary64 error of any formula evaluated
//! here, and small enough to be invisible at the printed precision of
//! the bound tables.

/// Relative slack applied to every directed result.
pub const SLACK: f64 = 1.0 / (1u64 << 30) as f64;

/// Push `v` away from zero toward `+inf`.
#[inline]
pub fn up(v: f64) -> f64 {
    if v >= 0.0 {
        v * (1.0 + SLACK)
    } else {
        v * (1.0 - SLACK)
    }
}

/// Push `v` toward `-inf`.
#[inline]
pub fn down(v: f64) -> f64 {
    if v >= 0.0 {
        v * (1.0 - SLACK)
    } else {
        v * (1.0 + SLACK)
    }
}

/// Neumaier (improved Kahan) running sum.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub const fn new() -> Self {
        Neumaier { sum: 0.0, comp: 0.0 }
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    /// Merge another accumulator (used by pairwise reductions).
    pub fn merge(mut self, other: Neumaier) -> Neumaier {
        self.add(other.sum);
        self.add(other.comp);
        self
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for Neumaier {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Neumaier::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// `ln(exp(a) - exp(b))`, or `None` when the difference is not positive.
pub fn ln_sub(a: f64, b: f64) -> Option<f64> {
    if b == f64::NEG_INFINITY {
        return Some(a);
    }
    if !(a > b) {
        return None;
    }
    Some(a + (-(b - a).exp()).ln_1p())
}

/// `ln(exp(a) + exp(b))`.
pub fn ln_add(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    if lo == f64::NEG_INFINITY {
        return hi;
    }
    hi + (lo - hi).exp().ln_1p()
}
