//! Upper bounds for sums of a weight over zero ordinates in a window,
//! compared with the sum over the tabulated zeros.
//!
//! cargo run --release --example zero_sums

use chebyshev_bounds::zero_sum_bounds::{lemma7_sum_upper, tabulated_sum, Mode, PhiSpec};
use chebyshev_bounds::zeta_zeros::{cache_dir, load_or_find, FinderConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let table = load_or_find(5000.0, &FinderConfig::default(), &cache_dir())?;
    let cases = [
        (PhiSpec::Reciprocal, 100.0, 4000.0),
        (PhiSpec::Power { m: 1 }, 50.0, 5000.0),
        (PhiSpec::Power { m: 3 }, 14.0, 1000.0),
        (PhiSpec::Damped { m: 2, x: 3.0 }, 30.0, 3000.0),
    ];
    println!("phi\tU\tV\ttabulated\tbound");
    for (phi, u, v) in cases {
        // j records on which side of the pivot V lies
        let j = if v >= phi.pivot() { 0 } else { 1 };
        let bound = lemma7_sum_upper(&phi, u, v, j, &table, Mode::Certified)?;
        println!("{phi:?}\t{u}\t{v}\t{:.9e}\t{bound:.9e}", tabulated_sum(&phi, u, v, &table));
    }
    Ok(())
}
