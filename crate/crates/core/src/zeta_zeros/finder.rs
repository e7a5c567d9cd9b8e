//! Gram-block zero search.

use super::zeta::{hardy_z_detailed, theta, theta_prime};
use super::{ZeroEntry, ZeroTable};
use crate::error::{domain, Error, Result};
use rayon::prelude::*;
use std::f64::consts::PI;

/// Largest height accepted by [`find_zeros`].
pub const MAX_HEIGHT: f64 = 5000.0;

#[derive(Debug, Clone, Copy)]
pub struct FinderConfig {
    pub max_height: f64,
    /// target half-width of each zero's bracket
    pub tol: f64,
    /// most samples per Gram interval before giving up on a block
    pub max_samples: usize,
}

impl Default for FinderConfig {
    fn default() -> Self {
        FinderConfig {
            max_height: MAX_HEIGHT,
            tol: 1e-9,
            max_samples: 256,
        }
    }
}

/// Every zero `0 < gamma <= height`, certified by the count check.
pub fn find_zeros(height: f64) -> Result<ZeroTable> {
    find_zeros_with(height, &FinderConfig::default())
}

#[derive(Clone, Copy)]
struct Sample {
    t: f64,
    sign: f64,
}

/// Evaluate Z at `t`, nudging forward until the sign is trustworthy.
fn trusted_sign(t: f64) -> Result<Sample> {
    let mut s = t;
    for k in 0..20 {
        let v = hardy_z_detailed(s)?;
        if v.z.abs() > v.err {
            return Ok(Sample { t: s, sign: v.z.signum() });
        }
        s = t + 1e-7 * (k + 1) as f64;
    }
    Err(Error::Certification(format!("Z has no reliable sign near {t}")))
}

fn gram_point(n: i64, guess: f64) -> f64 {
    let target = n as f64 * PI;
    let mut t = guess;
    for _ in 0..50 {
        let step = (theta(t) - target) / theta_prime(t);
        t -= step;
        if step.abs() < 1e-13 * t {
            break;
        }
    }
    t
}

struct Block {
    points: Vec<Sample>,
}

fn block_brackets(block: &Block, max_samples: usize) -> Result<Vec<(Sample, Sample)>> {
    let expected = block.points.len() - 1;
    let mut per = 4;
    loop {
        let mut samples = Vec::with_capacity(expected * per + 1);
        samples.push(block.points[0]);
        for w in block.points.windows(2) {
            let (a, b) = (w[0].t, w[1].t);
            for l in 1..per {
                samples.push(trusted_sign(a + (b - a) * l as f64 / per as f64)?);
            }
            samples.push(w[1]);
        }
        let brackets: Vec<(Sample, Sample)> = samples
            .windows(2)
            .filter(|w| w[0].sign != w[1].sign)
            .map(|w| (w[0], w[1]))
            .collect();
        if brackets.len() >= expected {
            return Ok(brackets);
        }
        if per >= max_samples {
            return Err(Error::Certification(format!(
                "Gram block [{:.6}, {:.6}] shows {} of {} sign changes",
                block.points[0].t,
                block.points[expected].t,
                brackets.len(),
                expected
            )));
        }
        per *= 2;
    }
}

/// Shrink a sign-change bracket to half-width `tol`, using only points where
/// the computed sign of Z is reliable.
fn refine(lo: Sample, hi: Sample, tol: f64) -> Result<(f64, f64)> {
    let sa = lo.sign;
    let (mut a, mut b) = (lo.t, hi.t);
    while 0.5 * (b - a) > tol {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let v = hardy_z_detailed(m)?;
        if v.z.abs() > v.err {
            if v.z.signum() == sa {
                a = m;
            } else {
                b = m;
            }
            continue;
        }
        let width = b - a;
        let mut d = tol;
        let mut moved = false;
        while !moved && (m - d > a || m + d < b) {
            for p in [m - d, m + d] {
                if p <= a || p >= b {
                    continue;
                }
                let v = hardy_z_detailed(p)?;
                if v.z.abs() > v.err {
                    if v.z.signum() == sa {
                        a = p;
                    } else {
                        b = p;
                    }
                    moved = true;
                }
            }
            d *= 2.0;
        }
        if !moved || b - a > 0.99 * width {
            break;
        }
    }
    Ok((0.5 * (a + b), 0.5 * (b - a)))
}

pub fn find_zeros_with(height: f64, cfg: &FinderConfig) -> Result<ZeroTable> {
    if !(height > 14.0) {
        return Err(domain("find_zeros", format!("height {height} must exceed 14")));
    }
    if height > cfg.max_height {
        return Err(Error::OutOfRange {
            op: "find_zeros",
            value: height,
            limit: cfg.max_height,
        });
    }
    // Gram points from g_{-1} until a good one beyond the height.
    let mut grams: Vec<(i64, f64)> = Vec::new();
    let mut n = -1i64;
    let mut t = gram_point(-1, 9.67);
    loop {
        grams.push((n, t));
        if t > height + 1.0 && grams.len() > 2 {
            // check goodness later; keep a margin of 40 points past height
            if grams.iter().filter(|g| g.1 > height).count() >= 40 {
                break;
            }
        }
        n += 1;
        t = gram_point(n, t + PI / theta_prime(t));
    }
    let samples: Vec<Sample> = grams
        .par_iter()
        .map(|&(_, g)| trusted_sign(g))
        .collect::<Result<_>>()?;
    let good: Vec<usize> = grams
        .iter()
        .zip(&samples)
        .enumerate()
        .filter(|(_, ((n, _), s))| {
            let parity = if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            parity * s.sign > 0.0
        })
        .map(|(i, _)| i)
        .collect();
    if good.first() != Some(&0) {
        return Err(Error::Certification("g_-1 is not a good Gram point".into()));
    }
    let last = good
        .iter()
        .copied()
        .find(|&i| grams[i].1 > height)
        .ok_or_else(|| Error::Certification("no good Gram point above height".into()))?;
    let blocks: Vec<Block> = good
        .windows(2)
        .take_while(|w| w[0] < last)
        .map(|w| Block {
            points: samples[w[0]..=w[1]].to_vec(),
        })
        .collect();
    let brackets: Vec<(Sample, Sample)> = blocks
        .par_iter()
        .map(|b| block_brackets(b, cfg.max_samples))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut zeros: Vec<(f64, f64)> = brackets
        .par_iter()
        .filter(|(a, _)| a.t <= height)
        .map(|&(a, b)| refine(a, b, cfg.tol))
        .collect::<Result<_>>()?;
    zeros.sort_by(|x, y| x.0.total_cmp(&y.0));
    if zeros.iter().any(|&(g, e)| g - e <= height && g + e > height) {
        return Err(Error::Certification(format!("a zero straddles the height {height}")));
    }
    let entries: Vec<ZeroEntry> = zeros
        .into_iter()
        .filter(|&(g, _)| g <= height)
        .enumerate()
        .map(|(i, (gamma, err))| ZeroEntry {
            index: i + 1,
            gamma,
            err,
        })
        .collect();
    ZeroTable::new(entries, height)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gram_points() {
        let g0 = gram_point(0, 17.8);
        assert!((g0 - 17.845_599_540_410_86).abs() < 1e-10, "{g0}");
        assert!((theta(g0)).abs() < 1e-12);
        let gm1 = gram_point(-1, 9.67);
        assert!((theta(gm1) + PI).abs() < 1e-12);
    }

    #[test]
    fn first_zeros() {
        let t = find_zeros(20.0).unwrap();
        assert_eq!(t.count(), 1);
        assert!((t.entries()[0].gamma - 14.134_725_141_734_69).abs() < 2e-9);
        let t = find_zeros(100.0).unwrap();
        assert_eq!(t.count(), 29);
        for e in t.entries() {
            assert!(e.err <= 1e-9);
        }
        // zero 29 from standard tables
        assert!((t.entries()[28].gamma - 98.831_194_218_193_69).abs() < 2e-9);
    }

    #[test]
    fn rejects_bad_heights() {
        assert!(find_zeros(10.0).is_err());
        assert!(matches!(find_zeros(6000.0), Err(Error::OutOfRange { .. })));
    }
}
