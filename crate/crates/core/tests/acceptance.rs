//! End-to-end acceptance checks. Each criterion prints one PASS or FAIL
//! line; the test fails if any criterion does.
//!
//! cargo test --release --test acceptance -- --nocapture

use chebyshev_bounds::chebyshev_compute::{
    sieve_theta, theta_from_psi_moebius, verify_all, Inequality, SievePlan,
};
use chebyshev_bounds::epsilon_engine::{
    epsilon_asymptotic_proof, epsilon_zero, eta_coeffs, reference_rows, solve_nu, theta_coefficient_bounds, Engine,
    EpsRow, Family, TailChoice, Variant, FIXED_D, LN_8E11, SPECIAL_ROWS,
};
use chebyshev_bounds::quad::{integrate_to_infinity, QuadOptions};
use chebyshev_bounds::special_fns::{
    inc_gamma_bounds, inc_gamma_sandwich, inc_gamma_tight, ln_k1_at0_upper, ln_k1_upper, ln_k2_at0_upper,
    ln_k2_upper, ln_k2_via_q, ln_k_exact, ln_q_upper, KernelArgs,
};
use chebyshev_bounds::zero_sum_bounds::{lemma7_sum_upper, tabulated_sum, Mode, PhiSpec};
use chebyshev_bounds::zeta_zeros::{
    cache_dir, find_zeros, load_or_find, sum_inv_gamma_pow, sum_inv_rho, FinderConfig, ZeroTable, DEFAULT_A,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use std::time::Instant;

type Outcome = Result<String, String>;

fn check(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn cached(height: f64) -> ZeroTable {
    load_or_find(height, &FinderConfig::default(), &cache_dir()).expect("zero table")
}

fn published_rows() -> Vec<EpsRow> {
    reference_rows(Family::A).iter().chain(SPECIAL_ROWS).map(EpsRow::from).collect()
}

fn zero_census() -> Outcome {
    let t = find_zeros(FIXED_D).map_err(|e| e.to_string())?;
    let s = sum_inv_rho(&t, FIXED_D).map_err(|e| e.to_string())?;
    check(t.count() == 620, format!("{} zeros", t.count()))?;
    check(s < 2.0, format!("sum 1/|rho| = {s}"))?;
    Ok(format!("620 zeros up to {FIXED_D}, sum 1/|rho| = {s:.8}"))
}

fn zero_power_sums() -> Outcome {
    let t = cached(5000.0);
    let limits = [0.0463, 0.00146435, 7.43617e-5, 4.46243e-6, 2.88348e-7, 1.93507e-8];
    for (k, lim) in (2..=7).zip(limits) {
        let s = sum_inv_gamma_pow(&t, k).map_err(|e| e.to_string())?;
        check(s.total <= lim, format!("k = {k}: {:e} > {lim:e}", s.total))?;
    }
    Ok("all six totals within the stated limits at height 5000".into())
}

fn epsilon_rows() -> Outcome {
    let table = cached(FIXED_D);
    let best = Engine::family_a(&table, DEFAULT_A, Mode::Certified).map_err(|e| e.to_string())?;
    let plain = best.clone().with_tail(TailChoice::Untruncated);
    let sample = [18.42, 20.0, 25.0, 30.0, 40.0, 50.0, 100.0, 500.0, 1000.0, 2000.0, 4000.0, 5700.0];
    let mut worst: f64 = 0.0;
    for b in sample {
        let r = reference_rows(Family::A)
            .iter()
            .find(|r| r.b == b)
            .ok_or(format!("no printed row at {b}"))?;
        let at = plain.epsilon_for(r.b, r.m, r.delta).map_err(|e| e.to_string())?;
        let ratio = at.epsilon / r.epsilon;
        check((0.95..=1.05).contains(&ratio), format!("b = {b}: ratio {ratio}"))?;
        worst = worst.max((ratio - 1.0).abs());
        let opt = best.optimize_row(b).map_err(|e| e.to_string())?;
        check(
            opt.epsilon <= at.epsilon,
            format!("b = {b}: optimized {:e} above {:e}", opt.epsilon, at.epsilon),
        )?;
    }
    Ok(format!("12 rows within {:.2}% of the printed values; optimizer never worse", worst * 100.0))
}

fn eta_values() -> Outcome {
    let rows = published_rows();
    let e = |k, v| eta_coeffs(k, LN_8E11, &rows, v).map_err(|e| e.to_string());
    let (e1, e2, t1) = (e(1, Variant::Psi)?, e(2, Variant::Psi)?, e(1, Variant::Theta)?);
    let near = |v: f64, want: f64| (v / want - 1.0).abs() <= 0.01;
    check(near(e1, 0.000797686), format!("eta1 = {e1}"))?;
    check(near(e2, 0.0223352), format!("eta2 = {e2}"))?;
    check(near(t1, 0.000821232), format!("theta eta1 = {t1}"))?;
    Ok(format!("eta1 = {e1:.6e}, eta2 = {e2:.6e}, theta eta1 = {t1:.6e}"))
}

fn theta_linear() -> Outcome {
    let c = theta_coefficient_bounds(&published_rows()).map_err(|e| e.to_string())?;
    let ceil9 = (c.upper * 1e9).ceil() / 1e9;
    check(ceil9 == 1.000027651, format!("upper {}", c.upper))?;
    let floor = |v: f64, d: i32| (v * 10f64.powi(d)).floor() / 10f64.powi(d);
    check(c.branches.len() == 3, "three lower branches")?;
    check(floor(c.branches[1].value, 10) == 0.9999703792, format!("{}", c.branches[1].value))?;
    check(floor(c.branches[2].value, 13) == 0.9999995233373, format!("{}", c.branches[2].value))?;
    Ok(format!(
        "upper {ceil9:.9}, lower branches {:.10} / {:.13}",
        c.branches[1].value, c.branches[2].value
    ))
}

fn sieve_verification() -> Outcome {
    let table = cached(FIXED_D);
    let cert = Engine::family_a(&table, DEFAULT_A, Mode::Certified)
        .and_then(|e| e.optimize_row(18.42))
        .map_err(|e| e.to_string())?;
    let plan = SievePlan::with_limit(1_000_000_000).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let low = verify_all(
        &[Inequality::PereiraUpper, Inequality::PereiraLower, Inequality::RosserDifference],
        (2.0, 1e8),
        None,
        &plan,
    )
    .map_err(|e| e.to_string())?;
    let high = verify_all(
        &[
            Inequality::RosserLog,
            Inequality::Epsilon {
                b: 18.42,
                epsilon: cert.epsilon,
            },
        ],
        (1e8, 1e9),
        None,
        &plan,
    )
    .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let mut checked = 0;
    for r in low.iter().chain(&high) {
        check(r.passed(), format!("{}: {} violations, first at {:?}", r.id, r.violations, r.first_violation))?;
        check(r.checked > 0, format!("{}: nothing checked", r.id))?;
        checked += r.checked;
    }
    // the 1.43 sqrt x bound is required from 121 on; we check it from 2
    check(low[2].lo <= 121.0 && low[2].hi >= 1e8, "1.43 range")?;
    check(elapsed.as_secs() < 600, format!("took {elapsed:.1?}"))?;
    Ok(format!("no violations in {checked} evaluations up to 1e9 ({elapsed:.1?})"))
}

fn kernel_grid() -> impl Iterator<Item = (f64, f64)> {
    (0..20).flat_map(|i| {
        let z = 1.0 + 49.0 * i as f64 / 19.0;
        (0..20).map(move |j| (z, 1.01 + 8.99 * j as f64 / 19.0))
    })
}

fn ln_kx(nu: f64, z: f64, x: f64) -> Result<f64, String> {
    KernelArgs::new(nu, z, x).and_then(ln_k_exact).map_err(|e| e.to_string())
}

fn gamma_quad(a: f64, x: f64) -> f64 {
    integrate_to_infinity(|t| t.powf(a - 1.0) * (-t).exp(), x, 0.5, QuadOptions::default())
        .expect("gamma quadrature")
        .value
}

fn oracle_dominance() -> Outcome {
    let mut n = 0;
    for (z, x) in kernel_grid() {
        let (k1, k2) = (ln_kx(1.0, z, x)?, ln_kx(2.0, z, x)?);
        let bounds = [
            (ln_k1_upper(z, x), k1, "K1"),
            (ln_k2_upper(z, x), k2, "K2"),
            (ln_q_upper(1.0, z, x), k1, "Q"),
            (ln_k2_via_q(z, x), k2, "K2 via Q"),
        ];
        for (ub, exact, name) in bounds {
            let ub = ub.map_err(|e| e.to_string())?;
            check(ub > exact, format!("{name} at z = {z}, x = {x}"))?;
            n += 1;
        }
    }
    for i in 0..40 {
        let z = 0.5 + 99.5 * i as f64 / 39.0;
        let u1 = ln_k1_at0_upper(z).map_err(|e| e.to_string())?;
        let u2 = ln_k2_at0_upper(z).map_err(|e| e.to_string())?;
        check(u1 >= ln_kx(1.0, z, 0.0)? && u2 >= ln_kx(2.0, z, 0.0)?, format!("K(z, 0) at z = {z}"))?;
        n += 2;
    }
    for a in [-3.0, -2.0, -1.5, -1.0, -0.5, 0.5, 0.9] {
        for x in [0.05, 0.5, 2.0, 10.0, 40.0] {
            let q = gamma_quad(a, x);
            let (lo, hi) = inc_gamma_bounds(a, x).map_err(|e| e.to_string())?;
            let (_, sh) = inc_gamma_sandwich(a, x).map_err(|e| e.to_string())?;
            let (tl, th) = inc_gamma_tight(a, x).map_err(|e| e.to_string())?;
            let tol = 1e-10 * q;
            check(hi >= q - tol && lo <= q + tol, format!("Gamma bracket a = {a}, x = {x}"))?;
            check(sh >= q && th >= q && tl <= q, format!("Gamma closed forms a = {a}, x = {x}"))?;
            n += 3;
        }
    }
    // complementarity of the kernel
    for nu in [1.0, 2.0] {
        for z in [1.0, 5.0, 20.0] {
            for x in [1.5, 3.0, 10.0] {
                let lhs = ln_kx(nu, z, x)?.exp() + ln_kx(-nu, z, 1.0 / x)?.exp();
                let rhs = ln_kx(nu, z, 0.0)?.exp();
                check((lhs / rhs - 1.0).abs() < 1e-10, format!("complementarity nu = {nu}, z = {z}, x = {x}"))?;
            }
        }
    }
    // Moebius round trip
    let plan = SievePlan::with_limit(10_000_000).map_err(|e| e.to_string())?;
    let a = theta_from_psi_moebius(1e6, &plan).map_err(|e| e.to_string())?;
    let b = sieve_theta(1e6, &plan).map_err(|e| e.to_string())?;
    check((a - b).abs() < 1e-9, format!("Moebius round trip {a} vs {b}"))?;

    // random zero-sum windows
    let table = cached(5000.0);
    let phi = prop_oneof![
        Just(PhiSpec::Reciprocal),
        (0u32..5).prop_map(|m| PhiSpec::Power { m }),
        (0u32..5, 1.0f64..12.0).prop_map(|(m, x)| PhiSpec::Damped { m, x }),
    ];
    let strategy = (phi, 7.0f64..3000.0, 1.0f64..5000.0);
    let mut runner = TestRunner::new_with_rng(
        Config {
            cases: 50,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    );
    runner
        .run(&strategy, |(phi, u, width)| {
            let v = (u + width).min(5000.0);
            let j = if v >= phi.pivot() { 0 } else { 1 };
            let bound = lemma7_sum_upper(&phi, u, v, j, &table, Mode::Certified).expect("bound");
            let direct = tabulated_sum(&phi, u, v, &table);
            prop_assert!(bound >= direct, "{phi:?} on ({u}, {v}]: {bound:e} < {direct:e}");
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(format!("{n} bound/oracle pairs, identities, and 50 random zero-sum windows"))
}

fn nu_solve() -> Outcome {
    let l_min = (27.0f64 / 32.0).powf(0.25);
    for x in [40.0, 50.0, 80.0] {
        let s = solve_nu(x).map_err(|e| e.to_string())?;
        s.verify().map_err(|e| e.to_string())?;
        check(s.nu0 < s.nu && s.nu < s.nu1, format!("X = {x}: nu = {} outside ({}, {})", s.nu, s.nu0, s.nu1))?;
        check(l_min < s.l && s.l < 1.0, format!("X = {x}: L = {}", s.l))?;
        check(s.y < 0.025, format!("X = {x}: Y = {}", s.y))?;
        let b = chebyshev_bounds::epsilon_engine::R0 * x * x;
        let e0 = epsilon_zero(b, false).map_err(|e| e.to_string())?;
        let e = epsilon_asymptotic_proof(b).map_err(|e| e.to_string())?;
        check(e0 < e, format!("X = {x}: epsilon0 {e0:e} >= epsilon {e:e}"))?;
    }
    Ok("root, L, Y and epsilon0 < epsilon hold at X = 40, 50, 80".into())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("zero census", zero_census),
        ("zero-power sums", zero_power_sums),
        ("epsilon table rows", epsilon_rows),
        ("eta coefficients", eta_values),
        ("theta linear coefficients", theta_linear),
        ("sieve verification", sieve_verification),
        ("oracle dominance", oracle_dominance),
        ("nu solve", nu_solve),
    ];
    let mut failed = Vec::new();
    println!();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                println!("FAIL {} {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
