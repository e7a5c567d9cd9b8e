//! Published `(b, m, delta, epsilon)` rows, used as comparison targets and
//! as inputs for recomputing derived constants exactly as printed.

use super::Family;

/// `log 10^8`.
pub const LN_1E8: f64 = 18.420_680_743_952_367;
/// `log (8 * 10^11)`.
pub const LN_8E11: f64 = 27.407_877_564_614_34;
/// `log 10^16`.
pub const LN_1E16: f64 = 36.841_361_487_904_734;

/// One published row: for `x >= e^b`, `|psi(x) - x| < epsilon x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceRow {
    pub b: f64,
    pub m: u32,
    pub delta: f64,
    pub epsilon: f64,
}

const fn row(b: f64, m: u32, delta: f64, epsilon: f64) -> ReferenceRow {
    ReferenceRow { b, m, delta, epsilon }
}

/// Rows off the regular grid, at `10^8`, `8 * 10^11` and `10^16`.
pub const SPECIAL_ROWS: &[ReferenceRow] = &[
    row(LN_1E8, 2, 2.44e-4, 1.18294e-3),
    row(LN_8E11, 1, 9e-6, 2.84888e-5),
    row(LN_1E16, 2, 5.24e-8, 4.66629e-7),
];

/// Published rows of one family, sorted by `b`.
pub fn reference_rows(family: Family) -> &'static [ReferenceRow] {
    match family {
        Family::A => FAMILY_A,
        Family::B => FAMILY_B,
    }
}

const FAMILY_A: &[ReferenceRow] = &[
    row(18.42, 1, 4.77e-4, 1.14853e-3),
    row(18.43, 1, 4.75e-4, 1.14399e-3),
    row(18.44, 1, 4.73e-4, 1.13947e-3),
    row(18.45, 1, 4.71e-4, 1.13496e-3),
    row(18.5, 1, 4.61e-4, 1.11269e-3),
    row(18.7, 1, 4.22e-4, 1.02778e-3),
    row(19.0, 1, 3.69e-4, 9.12089e-4),
    row(19.5, 1, 2.96e-4, 7.46822e-4),
    row(20.0, 1, 2.37e-4, 6.10849e-4),
    row(21.0, 1, 1.52e-4, 4.07427e-4),
    row(22.0, 1, 9.68e-5, 2.70724e-4),
    row(23.0, 1, 6.17e-5, 1.79271e-4),
    row(24.0, 1, 3.93e-5, 1.18353e-4),
    row(25.0, 1, 2.51e-5, 7.7946e-5),
    row(26.0, 1, 1.61e-5, 5.12658e-5),
    row(27.0, 1, 1.06e-5, 3.37472e-5),
    row(28.0, 2, 3.18e-6, 2.22937e-5),
    row(29.0, 2, 2.00e-6, 1.45047e-5),
    row(30.0, 2, 1.26e-6, 9.41621e-6),
    row(35.0, 2, 1.22e-7, 1.05487e-6),
    row(40.0, 3, 7.81e-9, 1.16299e-7),
    row(45.0, 4, 5.59e-10, 1.23376e-8),
    row(50.0, 7, 3.44e-11, 1.30131e-9),
    row(75.0, 26, 2.20e-12, 2.96691e-11),
    row(100.0, 26, 2.18e-12, 2.94551e-11),
    row(150.0, 26, 2.15e-12, 2.90681e-11),
    row(200.0, 26, 2.13e-12, 2.87042e-11),
    row(250.0, 25, 2.18e-12, 2.83496e-11),
    row(300.0, 25, 2.15e-12, 2.79972e-11),
    row(350.0, 25, 2.13e-12, 2.76518e-11),
    row(400.0, 25, 2.10e-12, 2.73130e-11),
    row(450.0, 24, 2.16e-12, 2.69688e-11),
    row(500.0, 24, 2.13e-12, 2.66291e-11),
    row(550.0, 24, 2.10e-12, 2.62963e-11),
    row(600.0, 23, 2.16e-12, 2.59588e-11),
    row(650.0, 23, 2.14e-12, 2.56227e-11),
    row(700.0, 23, 2.11e-12, 2.52897e-11),
    row(750.0, 22, 2.17e-12, 2.49584e-11),
    row(800.0, 22, 2.14e-12, 2.46224e-11),
    row(850.0, 22, 2.11e-12, 2.42914e-11),
    row(900.0, 22, 2.08e-12, 2.39657e-11),
    row(950.0, 21, 2.15e-12, 2.36304e-11),
    row(1000.0, 21, 2.12e-12, 2.32993e-11),
    row(1050.0, 21, 2.09e-12, 2.29730e-11),
    row(1100.0, 20, 2.16e-12, 2.26446e-11),
    row(1150.0, 20, 2.13e-12, 2.23136e-11),
    row(1200.0, 20, 2.09e-12, 2.19866e-11),
    row(1250.0, 19, 2.17e-12, 2.16638e-11),
    row(1300.0, 19, 2.13e-12, 2.13312e-11),
    row(1350.0, 19, 2.10e-12, 2.10036e-11),
    row(1400.0, 19, 2.07e-12, 2.06817e-11),
    row(1450.0, 18, 2.14e-12, 2.03545e-11),
    row(1500.0, 18, 2.11e-12, 2.00263e-11),
    row(1550.0, 18, 2.07e-12, 1.97041e-11),
    row(1600.0, 17, 2.15e-12, 1.93833e-11),
    row(1650.0, 17, 2.12e-12, 1.90539e-11),
    row(1700.0, 17, 2.08e-12, 1.87300e-11),
    row(1750.0, 17, 2.05e-12, 1.84125e-11),
    row(1800.0, 16, 2.13e-12, 1.80865e-11),
    row(1850.0, 16, 2.09e-12, 1.77615e-11),
    row(1900.0, 16, 2.05e-12, 1.74427e-11),
    row(1950.0, 15, 2.14e-12, 1.71251e-11),
    row(2000.0, 15, 2.10e-12, 1.67987e-11),
    row(2100.0, 15, 2.02e-12, 1.61646e-11),
    row(2200.0, 14, 2.07e-12, 1.55206e-11),
    row(2300.0, 13, 2.13e-12, 1.48933e-11),
    row(2400.0, 13, 2.04e-12, 1.42535e-11),
    row(2500.0, 12, 2.10e-12, 1.36270e-11),
    row(2600.0, 12, 2.00e-12, 1.29976e-11),
    row(2700.0, 11, 2.06e-12, 1.23732e-11),
    row(3000.0, 10, 1.91e-12, 1.05302e-11),
    row(3200.0, 9, 1.86e-12, 9.32308e-12),
    row(3500.0, 7, 1.88e-12, 7.53751e-12),
    row(3700.0, 6, 1.83e-12, 6.39612e-12),
    row(4000.0, 5, 1.60e-12, 4.78674e-12),
    row(4200.0, 4, 1.51e-12, 3.77702e-12),
    row(4500.0, 3, 1.23e-12, 2.46504e-12),
    row(4700.0, 2, 1.18e-12, 1.77185e-12),
    row(5000.0, 2, 6.51e-13, 9.76476e-13),
    row(5200.0, 2, 4.38e-13, 6.56727e-13),
    row(5500.0, 2, 2.42e-13, 3.62532e-13),
    row(5700.0, 2, 1.63e-13, 2.44112e-13),
];
const FAMILY_B: &[ReferenceRow] = &[
    row(18.42, 1, 4.78e-4, 1.14790e-3),
    row(18.43, 1, 4.76e-4, 1.14336e-3),
    row(18.44, 1, 4.74e-4, 1.13884e-3),
    row(18.45, 1, 4.71e-4, 1.13434e-3),
    row(18.5, 1, 4.61e-4, 1.11208e-3),
    row(18.7, 1, 4.22e-4, 1.02723e-3),
    row(19.0, 1, 3.70e-4, 9.11615e-4),
    row(19.5, 1, 2.96e-4, 7.46453e-4),
    row(20.0, 1, 2.37e-4, 6.10561e-4),
    row(21.0, 1, 1.52e-4, 4.07253e-4),
    row(22.0, 1, 9.68e-5, 2.70618e-4),
    row(23.0, 1, 6.17e-5, 1.79207e-4),
    row(24.0, 1, 3.93e-5, 1.18314e-4),
    row(25.0, 1, 2.51e-5, 7.79224e-5),
    row(26.0, 1, 1.61e-5, 5.12515e-5),
    row(27.0, 1, 1.06e-5, 3.37385e-5),
    row(28.0, 1, 7.22e-6, 2.23274e-5),
    row(29.0, 1, 5.26e-6, 1.49727e-5),
    row(30.0, 2, 1.26e-6, 9.41428e-6),
    row(35.0, 2, 1.22e-7, 1.05471e-6),
    row(40.0, 3, 7.81e-9, 1.16290e-7),
    row(45.0, 4, 5.60e-10, 1.23408e-8),
    row(50.0, 7, 3.45e-11, 1.30541e-9),
    row(75.0, 26, 2.20e-12, 3.32667e-11),
    row(100.0, 26, 2.18e-12, 3.25398e-11),
    row(150.0, 26, 2.16e-12, 3.13387e-11),
    row(200.0, 26, 2.13e-12, 3.03713e-11),
    row(250.0, 25, 2.18e-12, 2.95752e-11),
    row(300.0, 25, 2.15e-12, 2.88982e-11),
    row(350.0, 25, 2.13e-12, 2.83142e-11),
    row(400.0, 25, 2.10e-12, 2.78000e-11),
    row(450.0, 24, 2.16e-12, 2.73267e-11),
    row(500.0, 24, 2.13e-12, 2.68923e-11),
    row(550.0, 24, 2.10e-12, 2.64897e-11),
    row(600.0, 23, 2.16e-12, 2.61010e-11),
    row(650.0, 23, 2.14e-12, 2.57273e-11),
    row(700.0, 23, 2.11e-12, 2.53666e-11),
    row(750.0, 22, 2.17e-12, 2.50149e-11),
    row(800.0, 22, 2.14e-12, 2.46639e-11),
    row(850.0, 22, 2.11e-12, 2.43220e-11),
    row(900.0, 22, 2.08e-12, 2.39881e-11),
    row(950.0, 21, 2.15e-12, 2.36469e-11),
    row(1000.0, 21, 2.12e-12, 2.33114e-11),
    row(1050.0, 21, 2.09e-12, 2.29819e-11),
    row(1100.0, 20, 2.16e-12, 2.26511e-11),
    row(1150.0, 20, 2.13e-12, 2.23185e-11),
    row(1200.0, 20, 2.09e-12, 2.19902e-11),
    row(1250.0, 19, 2.17e-12, 2.16664e-11),
    row(1300.0, 19, 2.13e-12, 2.13331e-11),
    row(1350.0, 19, 2.10e-12, 2.10050e-11),
    row(1400.0, 19, 2.07e-12, 2.06828e-11),
    row(1450.0, 18, 2.14e-12, 2.03552e-11),
    row(1500.0, 18, 2.11e-12, 2.00268e-11),
    row(1550.0, 18, 2.07e-12, 1.97045e-11),
    row(1600.0, 17, 2.15e-12, 1.93836e-11),
    row(1650.0, 17, 2.12e-12, 1.90541e-11),
    row(1700.0, 17, 2.08e-12, 1.87301e-11),
    row(1750.0, 17, 2.05e-12, 1.84126e-11),
    row(1800.0, 16, 2.13e-12, 1.80866e-11),
    row(1850.0, 16, 2.09e-12, 1.77616e-11),
    row(1900.0, 16, 2.05e-12, 1.74427e-11),
    row(1950.0, 15, 2.14e-12, 1.71251e-11),
    row(2000.0, 15, 2.10e-12, 1.67987e-11),
    row(2100.0, 15, 2.02e-12, 1.61646e-11),
    row(2200.0, 14, 2.07e-12, 1.55206e-11),
    row(2300.0, 13, 2.12e-12, 1.48944e-11),
    row(2400.0, 13, 2.04e-12, 1.42535e-11),
    row(2500.0, 12, 2.10e-12, 1.36270e-11),
    row(2600.0, 12, 2.00e-12, 1.29976e-11),
    row(2700.0, 11, 2.06e-12, 1.23732e-11),
    row(3000.0, 10, 1.92e-12, 1.05303e-11),
    row(3200.0, 9, 1.86e-12, 9.32308e-12),
    row(3500.0, 7, 1.89e-12, 7.53761e-12),
    row(3700.0, 6, 1.83e-12, 6.39612e-12),
    row(4000.0, 5, 1.60e-12, 4.78674e-12),
    row(4500.0, 3, 1.23e-12, 2.46504e-12),
    row(4700.0, 2, 1.20e-12, 1.77229e-12),
    row(5000.0, 2, 6.51e-13, 9.76476e-13),
    row(5100.0, 2, 5.34e-13, 8.00754e-13),
    row(5200.0, 2, 4.38e-13, 6.56727e-13),
];
