//! Closed-form bounds for the kernel K_nu(z, x) next to its quadrature
//! value, and the incomplete gamma function with its certified bracket.
//!
//! cargo run --release --example kernel_bounds

use chebyshev_bounds::special_fns::{inc_gamma, inc_gamma_bounds, k1_upper, k2_upper, k_exact, KernelArgs};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("z\tx\tK1\tK1 bound\tK2\tK2 bound");
    for (z, x) in [(2.0, 1.2), (5.0, 1.5), (20.0, 1.01), (50.0, 3.0)] {
        let k1 = k_exact(KernelArgs::new(1.0, z, x)?)?;
        let k2 = k_exact(KernelArgs::new(2.0, z, x)?)?;
        println!(
            "{z}\t{x}\t{k1:.6e}\t{:.6e}\t{k2:.6e}\t{:.6e}",
            k1_upper(z, x)?,
            k2_upper(z, x)?
        );
    }
    println!();
    for (a, x) in [(-2.5, 0.3), (-1.0, 2.0), (0.5, 10.0)] {
        let (lo, hi) = inc_gamma_bounds(a, x)?;
        println!("Gamma({a}, {x}) = {:.12e} in [{lo:.12e}, {hi:.12e}]", inc_gamma(a, x)?);
    }
    Ok(())
}
