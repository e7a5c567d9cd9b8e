//! Closed-form epsilon for very large x, given by log x, and the split-tail
//! parameter solve behind the sharpest of them.
//!
//! cargo run --release --example large_x

use chebyshev_bounds::epsilon_engine::{
    epsilon_asymptotic, epsilon_asymptotic_proof, epsilon_star, epsilon_zero, solve_nu, R0,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("log x\tX\tprinted form\tproof form\tepsilon*\tepsilon0");
    for b in [200.0, 1000.0, 5000.0, 6000.0, 7000.0, 20000.0] {
        let e0 = epsilon_zero(b, false).map_or("-".to_string(), |v| format!("{v:.6e}"));
        println!(
            "{b}\t{:.3}\t{:.6e}\t{:.6e}\t{:.6e}\t{e0}",
            (b / R0).sqrt(),
            epsilon_asymptotic(b)?,
            epsilon_asymptotic_proof(b)?,
            epsilon_star(b)?
        );
    }
    for x in [40.0, 50.0, 80.0] {
        let s = solve_nu(x)?;
        s.verify()?;
        println!("X = {x}: nu = {:.6} in ({:.6}, {:.6}), Y = {:.4e}, L = {:.6}", s.nu, s.nu0, s.nu1, s.y, s.l);
    }
    Ok(())
}
