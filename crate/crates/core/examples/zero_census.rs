//! Locate the zeros up to a height, certify the count, and bound the
//! power sums over all zeros.
//!
//! cargo run --release --example zero_census -- 5000

use chebyshev_bounds::zeta_zeros::{
    cache_dir, f_main, load_or_find, r_err, sum_inv_gamma_pow, sum_inv_rho, FinderConfig,
};
use std::time::Instant;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let height: f64 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(963.567_040_2);
    let start = Instant::now();
    let table = load_or_find(height, &FinderConfig::default(), &cache_dir())?;
    println!(
        "height {height}: {} zeros in {:.1?} (F = {:.3}, R = {:.3}, max err {:.2e})",
        table.count(),
        start.elapsed(),
        f_main(height)?,
        r_err(height)?,
        table.max_err()
    );
    let d = height.min(963.567_040_2);
    println!("sum 1/|rho| over 0 < gamma <= {d}: {:.10}", sum_inv_rho(&table, d)?);
    if height >= 1000.0 {
        for k in 2..=7 {
            let s = sum_inv_gamma_pow(&table, k)?;
            println!(
                "k = {k}: partial {:.9e}  tail {:.3e}  total {:.9e}",
                s.partial, s.tail, s.total
            );
        }
    }
    Ok(())
}
