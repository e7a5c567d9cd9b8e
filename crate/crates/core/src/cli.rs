//! Batch commands behind the `chebyshev-bounds` binary. Each command takes
//! a [`RunConfig`], returns its report as text, and optionally writes it
//! under the output directory. Outputs carry no timings so that reruns are
//! byte-identical.

use crate::chebyshev_compute::{psi_from_theta, report_tsv, verify_all, Inequality, SievePlan, VerifyReport};
use crate::epsilon_engine::{
    default_grid, epsilon_asymptotic_proof, epsilon_star, epsilon_zero, eta_coeffs, reference_rows,
    theta_coefficient_bounds, to_tsv, Engine, EpsRow, EpsilonCertificate, Family, Variant, EPS0_CERTIFIED_FROM,
    FAMILY_B_D, FIXED_D, LN_1E16, LN_1E8, LN_8E11, SPECIAL_ROWS,
};
use crate::error::{Error, Result};
use crate::zero_sum_bounds::Mode;
use crate::zeta_zeros::{cache_dir, load_or_find, sum_inv_gamma_pow, sum_inv_rho, FinderConfig, ZeroTable, DEFAULT_A};
use std::fmt;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

/// Everything a command depends on.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// height of the zero table
    pub height: f64,
    /// largest `x` the sieve accepts
    pub limit: u64,
    /// height below which all zeros are on the critical line
    pub a: f64,
    /// cutoff of the general-`D` table
    pub d: f64,
    /// values of `b = log x` to tabulate
    pub grid: Vec<f64>,
    /// directory for report files; `None` prints only
    pub out: Option<PathBuf>,
    pub mode: Mode,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            height: 5000.0,
            limit: 1_000_000_000,
            a: DEFAULT_A,
            d: FAMILY_B_D,
            grid: default_grid(),
            out: None,
            mode: Mode::Certified,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Config(m));
        if !(self.height >= FIXED_D) || self.height > crate::zeta_zeros::MAX_HEIGHT {
            return bad(format!(
                "height {} outside [{FIXED_D}, {}]",
                self.height,
                crate::zeta_zeros::MAX_HEIGHT
            ));
        }
        SievePlan::with_limit(self.limit).map_err(|e| Error::Config(e.to_string()))?;
        if !(self.a > 2.0 * std::f64::consts::PI * std::f64::consts::E) || !self.a.is_finite() {
            return bad(format!("A = {} too small", self.a));
        }
        if !(self.d >= 2.0) || self.d > self.a || self.d > self.height {
            return bad(format!("D = {} must lie in [2, min(A, height)]", self.d));
        }
        if self.grid.is_empty() {
            return bad("empty b grid".into());
        }
        if let Some(b) = self.grid.iter().find(|b| !(**b >= 18.0) || !b.is_finite()) {
            return bad(format!("grid value {b} below 18"));
        }
        Ok(())
    }

    fn plan(&self) -> Result<SievePlan> {
        SievePlan::with_limit(self.limit)
    }

    fn zeros(&self, height: f64) -> Result<ZeroTable> {
        load_or_find(height, &FinderConfig::default(), &cache_dir())
    }

    /// Writes `text` to `name` under the output directory, if one is set.
    pub fn emit(&self, name: &str, text: &str) -> Result<()> {
        if let Some(dir) = &self.out {
            std::fs::create_dir_all(dir)?;
            std::fs::write(dir.join(name), text)?;
        }
        Ok(())
    }
}

/// Parses a comma-separated list of `b` values, or `default`.
pub fn parse_grid(s: &str) -> Result<Vec<f64>> {
    if s == "default" {
        return Ok(default_grid());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::Config(format!("grid value '{t}' is not a number")))
        })
        .collect()
}

/// Parses `certified` or `reference`.
pub fn parse_mode(s: &str) -> Result<Mode> {
    match s {
        "certified" => Ok(Mode::Certified),
        "reference" => Ok(Mode::Reference),
        _ => Err(Error::Config(format!("mode '{s}' is neither certified nor reference"))),
    }
}

/// Exit status for an error: 3 when a certification step failed, 2 for
/// everything else that stops a run.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Certification(_) | Error::HeightTooLow { .. } | Error::Coverage(_) => 3,
        _ => 2,
    }
}

/// Zero table up to `height`, copied to `zeros-h{height}.txt`.
pub fn cmd_zeros(cfg: &RunConfig) -> Result<String> {
    cfg.validate()?;
    let table = cfg.zeros(cfg.height)?;
    let name = format!("zeros-h{}.txt", cfg.height);
    if let Some(dir) = &cfg.out {
        std::fs::create_dir_all(dir)?;
        table.write_to(&dir.join(&name))?;
    }
    let d = FIXED_D.min(cfg.height);
    Ok(format!(
        "height\t{}\ncount\t{}\nmax_err\t{:.3e}\nsum_inv_rho_to_{d}\t{:.10}\n",
        table.height(),
        table.count(),
        table.max_err(),
        sum_inv_rho(&table, d)?
    ))
}

/// Bounds for `sum 1/|gamma|^k` over all zeros.
pub fn cmd_sums(cfg: &RunConfig, ks: &[u32]) -> Result<String> {
    cfg.validate()?;
    let table = cfg.zeros(cfg.height)?;
    let mut s = String::from("k\tpartial\ttail\ttotal\n");
    for &k in ks {
        let b = sum_inv_gamma_pow(&table, k)?;
        writeln!(s, "{k}\t{:.9e}\t{:.3e}\t{:.9e}", b.partial, b.tail, b.total).unwrap();
    }
    cfg.emit("sums.tsv", &s)?;
    Ok(s)
}

fn engine_a(cfg: &RunConfig) -> Result<Engine> {
    Engine::family_a(&cfg.zeros(FIXED_D)?, cfg.a, cfg.mode)
}

fn engine_b(cfg: &RunConfig) -> Result<Engine> {
    Engine::family_b(&cfg.zeros(cfg.height)?, cfg.d, cfg.a, cfg.mode)
}

/// Optimized tables of both families over the grid.
pub fn cmd_table(cfg: &RunConfig) -> Result<String> {
    cfg.validate()?;
    let a = to_tsv(&engine_a(cfg)?.table(&cfg.grid)?);
    let b = to_tsv(&engine_b(cfg)?.table(&cfg.grid)?);
    cfg.emit("epsilon_A.tsv", &a)?;
    cfg.emit("epsilon_B.tsv", &b)?;
    Ok(format!("# family A, D = {FIXED_D}\n{a}# family B, D = {}\n{b}", cfg.d))
}

/// Rows feeding the eta and theta computations: published rows, or our
/// own family-A table over the grid plus the three off-grid points.
fn eta_rows(cfg: &RunConfig, published: bool) -> Result<Vec<EpsRow>> {
    if published {
        return Ok(reference_rows(Family::A)
            .iter()
            .chain(SPECIAL_ROWS)
            .map(EpsRow::from)
            .collect());
    }
    let mut grid = cfg.grid.clone();
    grid.extend([LN_1E8, LN_8E11, LN_1E16]);
    Ok(engine_a(cfg)?.table(&grid)?.iter().map(EpsRow::from).collect())
}

/// `eta_k` for `k = 1..4` from `b_min`, for psi and theta, and the linear
/// theta coefficients.
pub fn cmd_eta(cfg: &RunConfig, b_min: f64, published: bool) -> Result<String> {
    cfg.validate()?;
    let rows = eta_rows(cfg, published)?;
    let mut s = String::from("k\tb_min\teta_psi\teta_theta\n");
    for k in 1..=4 {
        let p = eta_coeffs(k, b_min, &rows, Variant::Psi)?;
        let t = eta_coeffs(k, b_min, &rows, Variant::Theta)?;
        writeln!(s, "{k}\t{b_min}\t{p:.6e}\t{t:.6e}").unwrap();
    }
    let th = theta_coefficient_bounds(&rows)?;
    writeln!(s, "theta_upper\t{:.10}", th.upper).unwrap();
    for br in &th.branches {
        writeln!(s, "theta_lower_from_{}\t{:.13}", br.from_b, br.value).unwrap();
    }
    cfg.emit("eta.tsv", &s)?;
    Ok(s)
}

/// Which checks `cmd_verify` runs when none are named.
pub fn default_checks() -> Vec<Inequality> {
    vec![
        Inequality::PereiraUpper,
        Inequality::PereiraLower,
        Inequality::RosserDifference,
        Inequality::RosserLog,
    ]
}

/// Checks `specs` on `[lo, hi]`, adding our family-A certificate at the
/// smallest grid `b` when `hi` reaches it.
pub fn cmd_verify(
    cfg: &RunConfig,
    range: (f64, f64),
    specs: &[Inequality],
    step: Option<f64>,
) -> Result<(String, Vec<VerifyReport>)> {
    cfg.validate()?;
    let mut specs = specs.to_vec();
    let b0 = cfg.grid.iter().copied().fold(f64::INFINITY, f64::min);
    if range.1.ln() >= b0 {
        let cert = engine_a(cfg)?.optimize_row(b0)?;
        specs.push(Inequality::Epsilon {
            b: b0,
            epsilon: cert.epsilon,
        });
    }
    let reports = verify_all(&specs, range, step, &cfg.plan()?)?;
    let s = report_tsv(&reports);
    cfg.emit("verify.tsv", &s)?;
    Ok((s, reports))
}

/// A point `x`, given either directly or as `e^b` for `x` beyond `f64`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    /// `log x`
    pub b: f64,
    /// `x` itself when it is representable
    pub x: Option<f64>,
}

impl std::str::FromStr for Point {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("'{s}' is neither a number nor e^<b>"));
        let p = match s.strip_prefix("e^") {
            Some(t) => {
                let b: f64 = t.parse().map_err(|_| bad())?;
                let x = b.exp();
                Point {
                    b,
                    x: x.is_finite().then_some(x),
                }
            }
            None => {
                let x: f64 = s.parse().map_err(|_| bad())?;
                Point { b: x.ln(), x: Some(x) }
            }
        };
        if !(p.b > 0.0) || p.b.is_nan() {
            return Err(Error::Config(format!("x = {s} must exceed 1")));
        }
        Ok(p)
    }
}

/// Where an `epsilon` value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// `|psi(x) - x| / x` computed exactly
    Sieve,
    /// the table row at the largest grid `b <= log x`
    Table,
    /// the large-`x` closed form
    Asymptotic,
    EpsilonStar,
    EpsilonZero,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Sieve => "sieve",
            Source::Table => "table",
            Source::Asymptotic => "epsilon_asymptotic",
            Source::EpsilonStar => "epsilon_star",
            Source::EpsilonZero => "epsilon_zero",
        })
    }
}

/// Smallest applicable `epsilon` at a point, with every candidate.
#[derive(Debug, Clone, PartialEq)]
pub struct EpsChoice {
    pub epsilon: f64,
    pub source: Source,
    pub candidates: Vec<(Source, f64)>,
}

/// Best `epsilon` with `|psi(x) - x| <= epsilon x` at `x`. Inside the
/// sieve limit the exact ratio is returned; otherwise the smallest of the
/// table row and the closed forms valid at `log x`.
pub fn eps_at(cfg: &RunConfig, p: Point) -> Result<EpsChoice> {
    cfg.validate()?;
    if let Some(x) = p.x.filter(|&x| x <= cfg.limit as f64) {
        let psi = psi_from_theta(x, &cfg.plan()?)?;
        let e = (psi - x).abs() / x;
        return Ok(EpsChoice {
            epsilon: e,
            source: Source::Sieve,
            candidates: vec![(Source::Sieve, e)],
        });
    }
    let b = p.b;
    let mut candidates = Vec::new();
    if let Some(row) = cfg.grid.iter().copied().filter(|&g| g <= b).reduce(f64::max) {
        let cert: EpsilonCertificate = engine_a(cfg)?.optimize_row(row)?;
        candidates.push((Source::Table, cert.epsilon));
    }
    if b > 110.0 {
        candidates.push((Source::Asymptotic, epsilon_asymptotic_proof(b)?));
        candidates.push((Source::EpsilonStar, epsilon_star(b)?));
    }
    if b >= EPS0_CERTIFIED_FROM {
        candidates.push((Source::EpsilonZero, epsilon_zero(b, false)?));
    }
    let &(source, epsilon) = candidates
        .iter()
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .ok_or_else(|| Error::Coverage(format!("no bound applies at log x = {b}")))?;
    Ok(EpsChoice {
        epsilon,
        source,
        candidates,
    })
}

/// [`eps_at`] as a report.
pub fn cmd_eps(cfg: &RunConfig, p: Point) -> Result<String> {
    let c = eps_at(cfg, p)?;
    let mut s = format!("log_x\t{}\nepsilon\t{:.6e}\nsource\t{}\n", p.b, c.epsilon, c.source);
    for (src, v) in &c.candidates {
        writeln!(s, "candidate_{src}\t{v:.6e}").unwrap();
    }
    cfg.emit("eps.tsv", &s)?;
    Ok(s)
}

/// Output file path helper for callers that need it.
pub fn out_path(cfg: &RunConfig, name: &str) -> Option<PathBuf> {
    cfg.out.as_deref().map(|d: &Path| d.join(name))
}
