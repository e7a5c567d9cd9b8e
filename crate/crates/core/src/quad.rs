//! Adaptive Gauss-Kronrod (7/15) quadrature.

use crate::error::{Error, Result};
use crate::rounding::Neumaier;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_728_0,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Tolerances for [`integrate`].
#[derive(Debug, Clone, Copy)]
pub struct QuadOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_intervals: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions {
            rel_tol: 1e-12,
            abs_tol: 0.0,
            max_intervals: 4000,
        }
    }
}

/// Result of an integration: value and estimated absolute error.
#[derive(Debug, Clone, Copy)]
pub struct Quad {
    pub value: f64,
    pub error: f64,
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        kron += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    let kron = kron * h;
    let gauss = gauss * h;
    (kron, (kron - gauss).abs())
}

/// Integrate `f` over `[a, b]` with global adaptive bisection.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, opts: QuadOptions) -> Result<Quad> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain {
            op: "integrate",
            detail: format!("non-finite endpoints [{a}, {b}]"),
        });
    }
    if a == b {
        return Ok(Quad { value: 0.0, error: 0.0 });
    }
    let mut pieces: Vec<(f64, f64, f64, f64)> = Vec::with_capacity(64);
    let (v, e) = gk15(&f, a, b);
    pieces.push((a, b, v, e));
    loop {
        let total: Neumaier = pieces.iter().map(|p| p.2).collect();
        let err: f64 = pieces.iter().map(|p| p.3).sum();
        let total = total.value();
        if !total.is_finite() {
            return Err(Error::Convergence(format!(
                "non-finite integrand on [{a}, {b}]"
            )));
        }
        let target = opts.abs_tol.max(opts.rel_tol * total.abs());
        if err <= target {
            return Ok(Quad { value: total, error: err });
        }
        if pieces.len() >= opts.max_intervals {
            return Err(Error::Convergence(format!(
                "[{a}, {b}]: error {err:e} above target {target:e} after {} intervals",
                pieces.len()
            )));
        }
        let (idx, _) = pieces
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .expect("non-empty");
        let (l, r, _, _) = pieces.swap_remove(idx);
        let m = 0.5 * (l + r);
        if m <= l || m >= r {
            return Err(Error::Convergence(format!(
                "interval [{l}, {r}] cannot be bisected further"
            )));
        }
        let (v1, e1) = gk15(&f, l, m);
        let (v2, e2) = gk15(&f, m, r);
        pieces.push((l, m, v1, e1));
        pieces.push((m, r, v2, e2));
    }
}

/// Integrate a non-negative integrand that is eventually decreasing over
/// `[a, inf)`. The range is truncated once the integrand falls below
/// `1e-30` of the largest value seen; `scale` is the initial step.
pub fn integrate_to_infinity<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    scale: f64,
    opts: QuadOptions,
) -> Result<Quad> {
    integrate_decaying(f, a, f64::INFINITY, scale, opts)
}

/// As [`integrate_to_infinity`] but stops at `cap` if that comes first.
pub fn integrate_decaying<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    cap: f64,
    scale: f64,
    opts: QuadOptions,
) -> Result<Quad> {
    if !(scale > 0.0) {
        return Err(Error::Domain {
            op: "integrate_decaying",
            detail: format!("step {scale} must be positive"),
        });
    }
    let mut peak = f(a).abs();
    let mut step = scale;
    let mut hi = a;
    let mut prev = peak;
    let mut truncated = false;
    for _ in 0..400 {
        let next = (hi + step).min(cap);
        let v = f(next).abs();
        peak = peak.max(v);
        hi = next;
        if hi >= cap {
            break;
        }
        if v <= 1e-30 * peak && v <= prev {
            truncated = true;
            break;
        }
        prev = v;
        step *= 2.0;
    }
    if hi < cap && !truncated {
        return Err(Error::Convergence(format!(
            "integrand from {a} does not decay"
        )));
    }
    // Integrate piecewise over the doubling steps so the adaptive rule
    // sees the peak early.
    let mut acc = Neumaier::new();
    let mut err = 0.0;
    let mut lo = a;
    let mut s = scale;
    while lo < hi {
        let b = (lo + s).min(hi);
        let piece_opts = QuadOptions {
            abs_tol: opts.abs_tol.max(opts.rel_tol * 1e-3 * acc.value().abs()),
            ..opts
        };
        let q = integrate(&f, lo, b, piece_opts)?;
        acc.add(q.value);
        err += q.error;
        lo = b;
        s *= 2.0;
    }
    Ok(Quad {
        value: acc.value(),
        error: err,
    })
}
