//! Segmented sieve and the ordered scan over prime powers.

use super::SievePlan;
use crate::rounding::Neumaier;
use rayon::prelude::*;

/// Primes up to `n` by a plain sieve.
pub(crate) fn small_primes(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Integer `floor(n^(1/k))`: Newton on integers from above, then a
/// correction step in both directions.
pub fn iroot(n: u64, k: u32) -> u64 {
    if k == 0 {
        return 0;
    }
    if k == 1 || n < 2 {
        return n;
    }
    if k >= 64 {
        return 1;
    }
    let exceeds = |r: u64| r.checked_pow(k).map_or(true, |v| v > n);
    // start above the root
    let mut r = ((n as f64).powf(1.0 / k as f64) as u64).saturating_add(2);
    loop {
        if !exceeds(r) {
            break;
        }
        // r^(k-1) fits whenever r^k exceeds n only mildly; fall back to a
        // unit step otherwise
        let next = match r.checked_pow(k - 1) {
            Some(p) if p > 0 => ((k as u64 - 1) * r + n / p) / k as u64,
            _ => r - 1,
        };
        if next >= r {
            r -= 1;
        } else {
            r = next;
        }
    }
    while exceeds(r) {
        r -= 1;
    }
    while !exceeds(r + 1) {
        r += 1;
    }
    r
}

/// Prime powers `p^k` with `k >= 2` up to `hi`, sorted, with `log p`.
pub(crate) fn higher_powers(hi: u64, base: &[u64]) -> Vec<(u64, f64, u32)> {
    let mut out = Vec::new();
    for &p in base {
        let Some(mut q) = p.checked_mul(p) else { break };
        if q > hi {
            break;
        }
        let lp = (p as f64).ln();
        let mut k = 2;
        while q <= hi {
            out.push((q, lp, k));
            match q.checked_mul(p) {
                Some(v) => q = v,
                None => break,
            }
            k += 1;
        }
    }
    out.sort_unstable_by_key(|e| e.0);
    out
}

/// Ranges `[lo, hi]` covering `[2, hi]`.
pub(crate) fn segments(hi: u64, plan: &SievePlan) -> Vec<(u64, u64)> {
    let span = plan.segment as u64;
    let mut out = Vec::new();
    let mut lo = 2u64;
    while lo <= hi {
        let top = hi.min(lo + span - 1);
        out.push((lo, top));
        lo = top + 1;
    }
    out
}

/// Primes in `[lo, hi]`, given all primes up to `sqrt(hi)`.
pub(crate) fn segment_primes(lo: u64, hi: u64, base: &[u64]) -> Vec<u64> {
    let len = (hi - lo + 1) as usize;
    let mut composite = vec![false; len];
    for &p in base {
        let sq = p * p;
        if sq > hi {
            break;
        }
        let start = sq.max(lo.div_ceil(p) * p);
        let mut j = (start - lo) as usize;
        while j < len {
            composite[j] = true;
            j += p as usize;
        }
    }
    composite
        .iter()
        .enumerate()
        .filter(|&(i, &c)| !c && lo + i as u64 >= 2)
        .map(|(i, _)| lo + i as u64)
        .collect()
}

/// A jump of `psi`: `n = p^k`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Event {
    pub n: u64,
    pub log_p: f64,
    pub k: u32,
}

/// Running values of the prime-counting functions.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct State {
    pub psi: Neumaier,
    pub theta: Neumaier,
    pub pi: u64,
    pub big_pi: Neumaier,
}

impl State {
    pub fn apply(&mut self, e: &Event) {
        self.psi.add(e.log_p);
        if e.k == 1 {
            self.theta.add(e.log_p);
            self.pi += 1;
        }
        self.big_pi.add(1.0 / e.k as f64);
    }

    /// Folds a segment's totals into a running prefix.
    fn absorb(&mut self, part: &State) {
        self.psi = self.psi.merge(part.psi);
        self.theta = self.theta.merge(part.theta);
        self.pi += part.pi;
        self.big_pi = self.big_pi.merge(part.big_pi);
    }
}

/// Values seen by a scan visitor.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Snapshot {
    pub x: f64,
    pub psi: f64,
    pub theta: f64,
    pub pi: u64,
    pub big_pi: f64,
    /// exponent of the prime power at this jump; 0 at a plain sample point
    pub k: u32,
}

fn snapshot(s: &State, x: f64, k: u32) -> Snapshot {
    Snapshot {
        x,
        psi: s.psi.value(),
        theta: s.theta.value(),
        pi: s.pi,
        big_pi: s.big_pi.value(),
        k,
    }
}

fn events_in(lo: u64, hi: u64, base: &[u64], higher: &[(u64, f64, u32)]) -> Vec<Event> {
    let primes = segment_primes(lo, hi, base);
    let a = higher.partition_point(|e| e.0 < lo);
    let b = higher.partition_point(|e| e.0 <= hi);
    let mut out = Vec::with_capacity(primes.len() + b - a);
    let mut hp = higher[a..b].iter().peekable();
    for p in primes {
        while let Some(&&(n, lp, k)) = hp.peek() {
            if n < p {
                out.push(Event { n, log_p: lp, k });
                hp.next();
            } else {
                break;
            }
        }
        out.push(Event {
            n: p,
            log_p: (p as f64).ln(),
            k: 1,
        });
    }
    out.extend(hp.map(|&(n, lp, k)| Event { n, log_p: lp, k }));
    out
}

/// Pairwise sum in a fixed order.
pub(crate) fn pairwise(v: &[Neumaier]) -> Neumaier {
    match v.len() {
        0 => Neumaier::new(),
        1 => v[0],
        n => pairwise(&v[..n / 2]).merge(pairwise(&v[n / 2..])),
    }
}

/// Per-segment totals over `[2, hi]`, in segment order.
pub(crate) fn segment_totals(hi: u64, plan: &SievePlan) -> Vec<State> {
    let base = small_primes(iroot(hi, 2));
    let higher = higher_powers(hi, &base);
    segments(hi, plan)
        .par_iter()
        .map(|&(lo, top)| {
            let mut s = State::default();
            for e in events_in(lo, top, &base, &higher) {
                s.apply(&e);
            }
            s
        })
        .collect()
}

/// `theta(hi)` and `pi(hi)`: compensated sums within segments, pairwise
/// across them.
pub(crate) fn theta_pi(hi: u64, plan: &SievePlan) -> (f64, u64) {
    if hi < 2 {
        return (0.0, 0);
    }
    let parts = segment_totals(hi, plan);
    let thetas: Vec<Neumaier> = parts.iter().map(|s| s.theta).collect();
    (pairwise(&thetas).value(), parts.iter().map(|s| s.pi).sum())
}

/// Ordered scan of `[2, hi]`. The visitor sees, for every prime power `n`,
/// the values just before (`x = n^-`) and at `n`, and the values at each
/// point of `points` (sorted, within `[2, hi]`). Segments run in
/// parallel; each gets a fresh accumulator from `init`, returned in
/// segment order.
pub(crate) fn scan<V, I, F>(hi: u64, plan: &SievePlan, points: &[f64], init: I, visit: F) -> Vec<V>
where
    V: Send,
    I: Fn() -> V + Sync,
    F: Fn(&mut V, &Snapshot) + Sync,
{
    if hi < 2 {
        return Vec::new();
    }
    let base = small_primes(iroot(hi, 2));
    let higher = higher_powers(hi, &base);
    let segs = segments(hi, plan);
    let totals = segment_totals(hi, plan);
    let mut starts = Vec::with_capacity(segs.len());
    let mut run = State::default();
    for t in &totals {
        starts.push(run);
        run.absorb(t);
    }
    segs.par_iter()
        .zip(starts.par_iter())
        .map(|(&(lo, top), start)| {
            let mut acc = init();
            let mut s = *start;
            let pa = points.partition_point(|&p| p < lo as f64);
            let pb = points.partition_point(|&p| p < (top + 1) as f64);
            let mut pts = points[pa..pb].iter().peekable();
            for e in events_in(lo, top, &base, &higher) {
                let nx = e.n as f64;
                while let Some(&&p) = pts.peek() {
                    if p < nx {
                        visit(&mut acc, &snapshot(&s, p, 0));
                        pts.next();
                    } else {
                        break;
                    }
                }
                visit(&mut acc, &snapshot(&s, nx.next_down(), e.k));
                s.apply(&e);
                visit(&mut acc, &snapshot(&s, nx, e.k));
            }
            for &p in pts {
                visit(&mut acc, &snapshot(&s, p, 0));
            }
            acc
        })
        .collect()
}
