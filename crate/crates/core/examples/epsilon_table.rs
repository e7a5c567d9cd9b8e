//! Optimized epsilon rows for both configurations, next to the published
//! values where they exist.
//!
//! cargo run --release --example epsilon_table -- 20,50,1000

use chebyshev_bounds::epsilon_engine::{reference_rows, Engine, Family, FAMILY_B_D, FIXED_D};
use chebyshev_bounds::zero_sum_bounds::Mode;
use chebyshev_bounds::zeta_zeros::{cache_dir, load_or_find, FinderConfig, DEFAULT_A};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let grid: Vec<f64> = match std::env::args().nth(1) {
        Some(s) => s.split(',').map(str::parse).collect::<Result<_, _>>()?,
        None => vec![18.42, 20.0, 50.0, 100.0, 1000.0, 5000.0],
    };
    let cfg = FinderConfig::default();
    let a = Engine::family_a(&load_or_find(FIXED_D, &cfg, &cache_dir())?, DEFAULT_A, Mode::Certified)?;
    let b = Engine::family_b(&load_or_find(5000.0, &cfg, &cache_dir())?, FAMILY_B_D, DEFAULT_A, Mode::Certified)?;
    for engine in [a, b] {
        let family = engine.family();
        println!("family {family}\nb\tm\tdelta\tepsilon\tform\tpublished");
        for c in engine.table(&grid)? {
            let p = c.params;
            let published = reference_rows(family)
                .iter()
                .find(|r| r.b == p.b)
                .map_or("-".to_string(), |r| format!("{:.5e}", r.epsilon));
            println!("{}\t{}\t{:.3e}\t{:.5e}\t{}\t{published}", p.b, p.m, p.delta, c.epsilon, c.form);
        }
        if family == Family::A {
            println!();
        }
    }
    Ok(())
}
