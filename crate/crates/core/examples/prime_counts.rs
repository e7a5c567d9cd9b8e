//! psi, theta, pi and Pi by sieving, li(x), and the explicit formula for
//! psi truncated at the zeros up to 963.57.
//!
//! cargo run --release --example prime_counts

use chebyshev_bounds::chebyshev_compute::{explicit_psi, li, samples, samples_tsv, SievePlan};
use chebyshev_bounds::zeta_zeros::{cache_dir, load_or_find, FinderConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let plan = SievePlan::with_limit(100_000_000)?;
    let xs = [100.0, 1e4, 1e6, 1e8];
    print!("{}", samples_tsv(&samples(&xs, &plan)?));
    for x in xs {
        println!("li({x}) = {:.6}", li(x)?);
    }

    let table = load_or_find(963.567_040_2, &FinderConfig::default(), &cache_dir())?;
    let rows = samples(&[1000.5, 10000.5], &plan)?;
    for r in rows {
        let approx = explicit_psi(r.x, table.count(), &table, false)?;
        println!("psi({}) = {:.4}, explicit formula with {} zeros: {approx:.4}", r.x, r.psi, table.count());
    }
    Ok(())
}
