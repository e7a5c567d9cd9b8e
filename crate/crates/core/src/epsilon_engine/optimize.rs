//! One-dimensional searches used by the row optimizer.

use super::Engine;

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section minimum of `f` on `[lo, hi]` until the bracket is below
/// `tol` (absolute). Endpoints are also inspected, so a monotone `f`
/// returns the better end.
pub(super) fn golden_min(f: impl Fn(f64) -> f64, lo: f64, hi: f64, tol: f64) -> (f64, f64) {
    let clean = |v: f64| if v.is_nan() { f64::INFINITY } else { v };
    if !(hi > lo) {
        return (lo, clean(f(lo)));
    }
    let (mut a, mut b) = (lo, hi);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = clean(f(c));
    let mut fd = clean(f(d));
    while b - a > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = clean(f(c));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = clean(f(d));
        }
    }
    let mut best = if fc <= fd { (c, fc) } else { (d, fd) };
    for e in [lo, hi] {
        let fe = clean(f(e));
        if fe < best.1 {
            best = (e, fe);
        }
    }
    best
}

/// Coarse grid of `log delta` (40 points per decade) followed by golden
/// section to `1e-6` relative in `delta`. Returns `(m, delta, epsilon)`.
pub(super) fn best_delta(engine: &Engine, b: f64, m: u32) -> Option<(u32, f64, f64)> {
    let eps = |s: f64| {
        engine
            .epsilon_for(b, m, s.exp())
            .map(|c| c.epsilon)
            .unwrap_or(f64::INFINITY)
    };
    let top = (-(-b).exp_m1() / m as f64).ln() - 1e-9;
    let bottom = 1e-17f64.ln();
    let step = std::f64::consts::LN_10 / 40.0;
    let n = ((top - bottom) / step).ceil() as usize;
    let grid: Vec<f64> = (0..=n).map(|i| top - i as f64 * step).collect();
    let vals: Vec<f64> = grid.iter().map(|&s| eps(s)).collect();
    let (i, v) = vals
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.total_cmp(y.1))
        .map(|(i, v)| (i, *v))?;
    if !v.is_finite() {
        return None;
    }
    let hi = grid[i.saturating_sub(1)];
    let lo = grid[(i + 1).min(n)];
    let (s, fv) = golden_min(eps, lo, hi, 1e-6);
    if fv <= v {
        Some((m, s.exp(), fv))
    } else {
        Some((m, grid[i].exp(), v))
    }
}
