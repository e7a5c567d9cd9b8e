//! eta_k coefficients of |psi(x) - x| < eta_k x / log^k x and the linear
//! bounds for theta from x >= 8e11, stepped through the published epsilon rows.
//!
//! cargo run --release --example eta_constants

use chebyshev_bounds::epsilon_engine::{
    eta_coeffs, reference_rows, theta_coefficient_bounds, EpsRow, Family, Variant, LN_8E11, SPECIAL_ROWS,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rows: Vec<EpsRow> = reference_rows(Family::A)
        .iter()
        .chain(SPECIAL_ROWS)
        .map(EpsRow::from)
        .collect();
    println!("k\teta (psi)\teta (theta)");
    for k in 1..=4 {
        println!(
            "{k}\t{:.6e}\t{:.6e}",
            eta_coeffs(k, LN_8E11, &rows, Variant::Psi)?,
            eta_coeffs(k, LN_8E11, &rows, Variant::Theta)?
        );
    }
    let th = theta_coefficient_bounds(&rows)?;
    println!("theta(x) < {:.9} x for x >= 8e11", th.upper);
    for br in &th.branches {
        println!("theta(x) > {:.13} x from e^{:.4}", br.value, br.from_b);
    }
    Ok(())
}
