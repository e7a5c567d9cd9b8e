//! Checks of explicit inequalities between `psi`, `theta`, `pi`, `Pi` and
//! elementary functions over every prime power of a range.
//!
//! Between consecutive prime powers the counting functions are constant
//! and every comparator used here is monotone, so the tightest point of
//! each check lies at a jump (just before or at it) or at an end of the
//! range. Those are exactly the points visited.

use super::sieve::{scan, Snapshot};
use super::SievePlan;
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Inequalities the harness knows how to check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Inequality {
    /// `psi - theta < sqrt x + (4/3) x^(1/3)` up to `10^8`, `(6/5)` above
    PereiraUpper,
    /// `psi - theta > sqrt x + (2/3) x^(1/3)` from 2187, `(6/7)` from `10^8`
    PereiraLower,
    /// `psi < x + 0.656 sqrt x + (4/3) x^(1/3)` up to `10^8`
    PereiraPsiUpper,
    /// `psi > x - 0.833 sqrt x + (2/3) x^(1/3)` on three ranges up to `10^8`.
    /// Fails just below 11777 (`psi(11776) = 11699.72 < 11700.77`), so it
    /// is not part of [`Inequality::standard`].
    PereiraPsiLower,
    /// `|psi - theta| < 1.43 sqrt x`
    RosserDifference,
    /// `psi - theta > 0.998684 sqrt x` from 121
    RosserDifferenceLower,
    /// `|psi - x| < 0.0242269 x / log x` from `10^8`
    RosserLog,
    /// stepped `|psi - x| < c x` from `10^8`
    Schoenfeld,
    /// `0 <= psi - theta <= sqrt x log^2 x / (2 log 2)`
    Apostol,
    /// `psi / log x < pi < Pi` from 4
    PiSandwich,
    /// `|psi - x| < epsilon x` for `x >= e^b`
    Epsilon { b: f64, epsilon: f64 },
}

const E8: f64 = 1e8;
const E16: f64 = 1e16;

// (from log x, c): |psi(x) - x| < c x from e^from on
const SCHOENFELD: &[(f64, f64)] = &[
    (18.420_680_743_952_367, 0.00119721),
    (18.43, 0.0011930),
    (18.44, 0.0011885),
    (18.45, 0.0011839),
    (18.46, 0.0011615),
    (18.7, 0.0010765),
    (19.0, 0.00096161),
];

impl Inequality {
    /// The fixed checks that hold on their whole domain, without
    /// certificates.
    pub fn standard() -> Vec<Inequality> {
        use Inequality::*;
        vec![
            PereiraUpper,
            PereiraLower,
            PereiraPsiUpper,
            RosserDifference,
            RosserDifferenceLower,
            RosserLog,
            Schoenfeld,
            Apostol,
            PiSandwich,
        ]
    }

    /// Closed ranges of `x` on which the inequality is claimed.
    pub fn domains(&self) -> Vec<(f64, f64)> {
        use Inequality::*;
        match *self {
            PereiraUpper => vec![(2.0, E16)],
            PereiraLower => vec![(2187.0, E16)],
            PereiraPsiUpper => vec![(2.0, E8)],
            PereiraPsiLower => vec![(1427.0, 3298.0), (3299.0, 19371.0), (19373.0, E8)],
            RosserDifference | Apostol => vec![(2.0, f64::INFINITY)],
            RosserDifferenceLower => vec![(121.0, f64::INFINITY)],
            RosserLog | Schoenfeld => vec![(E8, f64::INFINITY)],
            PiSandwich => vec![(4.0, f64::INFINITY)],
            Epsilon { b, .. } => vec![(b.exp(), f64::INFINITY)],
        }
    }

    // checks on psi - theta need only the jumps of psi - theta
    fn higher_only(&self) -> bool {
        use Inequality::*;
        matches!(
            self,
            PereiraUpper | PereiraLower | RosserDifference | RosserDifferenceLower | Apostol
        )
    }

    fn in_domain(&self, x: f64) -> bool {
        self.domains().iter().any(|&(a, b)| x >= a && x <= b)
    }

    /// Relative slack at a snapshot; positive when the inequality holds.
    fn slack(&self, s: &Snapshot) -> f64 {
        use Inequality::*;
        let x = s.x;
        let d = s.psi - s.theta;
        let (sq, cb) = (x.sqrt(), x.cbrt());
        let upper = |v: f64, b: f64| (b - v) / b.abs();
        let lower = |v: f64, b: f64| (v - b) / b.abs();
        match *self {
            PereiraUpper => upper(d, sq + if x <= E8 { 4.0 / 3.0 } else { 1.2 } * cb),
            PereiraLower => lower(d, sq + if x < E8 { 2.0 / 3.0 } else { 6.0 / 7.0 } * cb),
            PereiraPsiUpper => upper(s.psi, x + 0.656 * sq + 4.0 / 3.0 * cb),
            PereiraPsiLower => lower(s.psi, x - 0.833 * sq + 2.0 / 3.0 * cb),
            RosserDifference => upper(d.abs(), 1.43 * sq),
            RosserDifferenceLower => lower(d, 0.998684 * sq),
            RosserLog => upper((s.psi - x).abs(), 0.0242269 * x / x.ln()),
            Schoenfeld => {
                let lx = x.ln();
                // the domain starts at 10^8, so the first entry always applies
                let c = SCHOENFELD.iter().rev().find(|e| lx >= e.0).map_or(SCHOENFELD[0].1, |e| e.1);
                upper((s.psi - x).abs(), c * x)
            }
            Apostol => {
                let b = sq * x.ln().powi(2) / (2.0 * std::f64::consts::LN_2);
                if d < 0.0 {
                    -1.0
                } else {
                    upper(d, b)
                }
            }
            PiSandwich => {
                let pi = s.pi as f64;
                let left = lower(pi, s.psi / x.ln());
                let right = upper(pi, s.big_pi);
                left.min(right)
            }
            Epsilon { epsilon, .. } => upper((s.psi - x).abs(), epsilon * x),
        }
    }

    /// Points where the comparator changes form.
    fn breakpoints(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.domains().iter().flat_map(|&(a, b)| [a, b]).collect();
        match self {
            Inequality::PereiraUpper | Inequality::PereiraLower => v.push(E8),
            Inequality::Schoenfeld => v.extend(SCHOENFELD.iter().skip(1).map(|e| e.0.exp())),
            _ => {}
        }
        v
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Inequality::*;
        match self {
            PereiraUpper => f.write_str("pereira_upper"),
            PereiraLower => f.write_str("pereira_lower"),
            PereiraPsiUpper => f.write_str("pereira_psi_upper"),
            PereiraPsiLower => f.write_str("pereira_psi_lower"),
            RosserDifference => f.write_str("rosser_1.43"),
            RosserDifferenceLower => f.write_str("rosser_0.998684"),
            RosserLog => f.write_str("rosser_0.0242269"),
            Schoenfeld => f.write_str("schoenfeld"),
            Apostol => f.write_str("apostol"),
            PiSandwich => f.write_str("pi_sandwich"),
            Epsilon { b, epsilon } => write!(f, "epsilon_b{b}_{epsilon:e}"),
        }
    }
}

impl FromStr for Inequality {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Inequality::standard()
            .into_iter()
            .chain([Inequality::PereiraPsiLower])
            .find(|i| i.to_string() == s)
            .ok_or_else(|| Error::Config(format!("unknown inequality '{s}'")))
    }
}

/// Outcome of checking one inequality over a range.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub id: String,
    /// checked range: the request clipped to the inequality's domain
    pub lo: f64,
    pub hi: f64,
    /// number of points evaluated
    pub checked: u64,
    /// smallest relative slack seen and where
    pub min_slack: f64,
    pub min_slack_x: f64,
    pub violations: u64,
    pub first_violation: Option<f64>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Clone, Copy)]
struct Acc {
    checked: u64,
    min_slack: f64,
    min_x: f64,
    violations: u64,
    first_violation: Option<f64>,
}

impl Acc {
    fn new() -> Self {
        Acc {
            checked: 0,
            min_slack: f64::INFINITY,
            min_x: f64::NAN,
            violations: 0,
            first_violation: None,
        }
    }

    fn push(&mut self, x: f64, slack: f64) {
        self.checked += 1;
        if slack < self.min_slack || slack.is_nan() {
            self.min_slack = slack;
            self.min_x = x;
        }
        if !(slack > 0.0) {
            self.violations += 1;
            self.first_violation.get_or_insert(x);
        }
    }

    fn merge(&mut self, o: &Acc) {
        self.checked += o.checked;
        if o.min_slack < self.min_slack {
            self.min_slack = o.min_slack;
            self.min_x = o.min_x;
        }
        self.violations += o.violations;
        if self.first_violation.is_none() {
            self.first_violation = o.first_violation;
        }
    }
}

const MAX_GRID: f64 = 1e7;

/// Check one inequality on `[lo, hi]`; see [`verify_all`].
pub fn verify_inequality(
    spec: Inequality,
    range: (f64, f64),
    step: Option<f64>,
    plan: &SievePlan,
) -> Result<VerifyReport> {
    Ok(verify_all(&[spec], range, step, plan)?.remove(0))
}

/// Check several inequalities in one scan of `[lo, hi]`. Every prime
/// power is visited from both sides, together with the range ends, the
/// points where a comparator changes form, and the optional `step` grid.
pub fn verify_all(
    specs: &[Inequality],
    range: (f64, f64),
    step: Option<f64>,
    plan: &SievePlan,
) -> Result<Vec<VerifyReport>> {
    let (lo, hi) = range;
    if !(lo >= 2.0) || !(hi >= lo) {
        return Err(Error::Config(format!("range [{lo}, {hi}] must satisfy 2 <= lo <= hi")));
    }
    if hi > plan.limit as f64 {
        return Err(Error::LimitExceeded { x: hi, limit: plan.limit });
    }
    let mut points = vec![lo, hi];
    for s in specs {
        points.extend(s.breakpoints().into_iter().filter(|&p| p >= lo && p <= hi));
    }
    if let Some(h) = step {
        if !(h > 0.0) || (hi - lo) / h > MAX_GRID {
            return Err(Error::Config(format!("step {h} gives too many grid points")));
        }
        let n = ((hi - lo) / h).floor() as u64;
        points.extend((1..=n).map(|i| lo + i as f64 * h).filter(|&p| p <= hi));
    }
    points.sort_by(f64::total_cmp);
    points.dedup();

    let parts = scan(
        hi.floor() as u64,
        plan,
        &points,
        || vec![Acc::new(); specs.len()],
        |accs: &mut Vec<Acc>, snap| {
            if snap.x < lo || snap.x > hi {
                return;
            }
            for (spec, acc) in specs.iter().zip(accs.iter_mut()) {
                if snap.k == 1 && spec.higher_only() {
                    continue;
                }
                if spec.in_domain(snap.x) {
                    acc.push(snap.x, spec.slack(snap));
                }
            }
        },
    );
    let mut total = vec![Acc::new(); specs.len()];
    for p in &parts {
        for (t, a) in total.iter_mut().zip(p) {
            t.merge(a);
        }
    }
    Ok(specs
        .iter()
        .zip(total)
        .map(|(s, a)| {
            let doms = s.domains();
            let dlo = doms.iter().map(|d| d.0).fold(f64::INFINITY, f64::min);
            let dhi = doms.iter().map(|d| d.1).fold(f64::NEG_INFINITY, f64::max);
            VerifyReport {
                id: s.to_string(),
                lo: lo.max(dlo),
                hi: hi.min(dhi),
                checked: a.checked,
                min_slack: a.min_slack,
                min_slack_x: a.min_x,
                violations: a.violations,
                first_violation: a.first_violation,
            }
        })
        .collect())
}

/// TSV: `id, range, min_slack_x, slack, violations`.
pub fn report_tsv(reports: &[VerifyReport]) -> String {
    let mut s = String::from("id\trange\tmin_slack_x\tslack\tviolations\n");
    for r in reports {
        if r.checked == 0 {
            s.push_str(&format!("{}\t-\t-\t-\t0\n", r.id));
        } else {
            s.push_str(&format!(
                "{}\t[{}, {}]\t{}\t{:.6e}\t{}\n",
                r.id, r.lo, r.hi, r.min_slack_x, r.min_slack, r.violations
            ));
        }
    }
    s
}
