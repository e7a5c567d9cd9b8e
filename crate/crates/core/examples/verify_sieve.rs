//! Check the psi - theta bounds, the 1.43 sqrt x bound, the
//! x / log x bound and our own certificate at b = 18.42 against sieved
//! values up to a limit.
//!
//! cargo run --release --example verify_sieve -- 1e9

use chebyshev_bounds::chebyshev_compute::{report_tsv, verify_all, Inequality, SievePlan};
use chebyshev_bounds::epsilon_engine::{Engine, FIXED_D};
use chebyshev_bounds::zero_sum_bounds::Mode;
use chebyshev_bounds::zeta_zeros::{cache_dir, load_or_find, FinderConfig, DEFAULT_A};
use std::time::Instant;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let limit: f64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(1e8);
    let table = load_or_find(FIXED_D, &FinderConfig::default(), &cache_dir())?;
    let cert = Engine::family_a(&table, DEFAULT_A, Mode::Certified)?.optimize_row(18.42)?;
    println!("certificate: x >= e^18.42 gives |psi(x) - x| < {:.6e} x", cert.epsilon);

    let plan = SievePlan::with_limit(limit as u64)?;
    let specs = [
        Inequality::PereiraUpper,
        Inequality::PereiraLower,
        Inequality::RosserDifference,
        Inequality::RosserLog,
        Inequality::Epsilon { b: 18.42, epsilon: cert.epsilon },
    ];
    let start = Instant::now();
    let reports = verify_all(&specs, (2.0, limit), None, &plan)?;
    print!("{}", report_tsv(&reports));
    println!("scanned [2, {limit}] in {:.1?}", start.elapsed());
    Ok(())
}
