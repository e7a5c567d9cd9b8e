use super::*;
use crate::zeta_zeros::{cache_dir, load_or_find, FinderConfig};
use std::sync::OnceLock;

fn table(height: f64) -> ZeroTable {
    load_or_find(height, &FinderConfig::default(), &cache_dir()).unwrap()
}

fn engine_a() -> &'static Engine {
    static E: OnceLock<Engine> = OnceLock::new();
    E.get_or_init(|| Engine::family_a(&table(FIXED_D), DEFAULT_A, Mode::Certified).unwrap())
}

fn engine_b() -> &'static Engine {
    static E: OnceLock<Engine> = OnceLock::new();
    E.get_or_init(|| Engine::family_b(&table(5000.0), FAMILY_B_D, DEFAULT_A, Mode::Certified).unwrap())
}

fn published_rows() -> Vec<EpsRow> {
    let mut rows: Vec<EpsRow> = reference_rows(Family::A)
        .iter()
        .chain(SPECIAL_ROWS)
        .map(EpsRow::from)
        .collect();
    rows.sort_by(|a, b| a.b.total_cmp(&b.b));
    rows
}

#[test]
fn r_m_small_cases() {
    assert!((r_m(1, 0.5).unwrap() - 3.25).abs() < 1e-14);
    assert!((r_m(2, 1.0).unwrap() - 81.0).abs() < 1e-12);
    let l = ln_r_m_checked(3, 0.01).unwrap();
    assert!((l.exp() - r_m(3, 0.01).unwrap()).abs() < 1e-12 * l.exp());
    assert!(matches!(r_m(30, 1e3), Err(Error::OutOfRange { .. })));
    assert!(r_m(0, 0.1).is_err());
    assert!(r_m(1, 0.0).is_err());
}

#[test]
fn params_window() {
    assert!(BoundParams::new(18.42, 1, 4.77e-4, FIXED_D, DEFAULT_A).is_ok());
    assert!(BoundParams::new(0.5, 1, 1e-3, FIXED_D, DEFAULT_A).is_err());
    assert!(BoundParams::new(2.0, 2, 0.45, FIXED_D, DEFAULT_A).is_err());
    assert!(BoundParams::new(20.0, 1, 1e-4, 3e12, DEFAULT_A).is_err());
    let p = BoundParams::new(18.42, 1, 4.77e-4, FIXED_D, DEFAULT_A).unwrap();
    // T1 = (2 R_1(delta) / (2 + delta)) / delta
    let t1 = 2.0 * r_m(1, 4.77e-4).unwrap() / (2.0 + 4.77e-4) / 4.77e-4;
    assert!((p.t1 / t1 - 1.0).abs() < 1e-13);
}

#[test]
fn family_a_needs_the_full_census() {
    let short = table(FIXED_D).truncate(900.0).unwrap();
    assert!(Engine::family_a(&short, DEFAULT_A, Mode::Certified).is_err());
    assert!(Engine::family_a(&table(FIXED_D), 10.0, Mode::Certified).is_err());
}

#[test]
fn t1_below_d_is_a_precondition_failure() {
    let e = engine_a();
    let p = e.params(18.42, 1, 0.5).unwrap();
    assert!(p.t1 < FIXED_D);
    assert!(matches!(e.omega1(&p), Err(Error::Precondition(_))));
    assert!(e.epsilon_for(18.42, 1, 0.5).is_err());
}

#[test]
fn general_d_constants_at_the_fixed_cutoff() {
    use crate::zeta_zeros::g_of_d_with_s;
    let g = 4.0 * PI * g_of_d_with_s(2.0, FIXED_COUNT as f64, FIXED_D);
    assert!((g / -FIXED_K0 - 1.0).abs() < 1e-4, "{g}");
    let c = c_of_d(FIXED_D).unwrap();
    assert!((c / FIXED_K1 - 1.0).abs() < 1e-4, "{c}");
    // with the census sum in place of 2 the general form is slightly sharper
    let b_engine = Engine::family_b(&table(FIXED_D), FIXED_D, DEFAULT_A, Mode::Certified).unwrap();
    let pa = engine_a().params(18.42, 1, 4.77e-4).unwrap();
    let pb = b_engine.params(18.42, 1, 4.77e-4).unwrap();
    let (oa, ob) = (engine_a().omega1(&pa).unwrap(), b_engine.omega1(&pb).unwrap());
    assert!(ob <= oa && oa / ob - 1.0 < 1e-3);
}

#[test]
fn published_fixed_d_rows_reproduce() {
    let e = engine_a().clone().with_tail(TailChoice::Untruncated);
    for r in reference_rows(Family::A).iter().chain(SPECIAL_ROWS) {
        let c = e.epsilon_for(r.b, r.m, r.delta).unwrap();
        let ratio = c.epsilon / r.epsilon;
        assert!((0.95..=1.05).contains(&ratio), "b = {}: ratio {ratio}", r.b);
        assert_eq!(c.form, Form::Omega2);
    }
}

#[test]
fn published_general_d_rows_reproduce_below_5200() {
    for r in reference_rows(Family::B) {
        let c = engine_b().epsilon_for(r.b, r.m, r.delta).unwrap();
        let ratio = c.epsilon / r.epsilon;
        if r.b < 5150.0 {
            assert!((0.95..=1.05).contains(&ratio), "b = {}: ratio {ratio}", r.b);
        } else {
            // the split tail is sharper here than the printed value
            assert!(ratio < 1.0, "b = {}: ratio {ratio}", r.b);
        }
    }
}

#[test]
fn split_tail_never_loses_to_untruncated() {
    let plain = engine_a().clone().with_tail(TailChoice::Untruncated);
    for r in reference_rows(Family::A).iter().filter(|r| r.b >= 4700.0) {
        let best = engine_a().epsilon_for(r.b, r.m, r.delta).unwrap();
        let whole = plain.epsilon_for(r.b, r.m, r.delta).unwrap();
        assert!(best.epsilon <= whole.epsilon);
    }
}

#[test]
fn omega3_at_a_reduces_to_omega2() {
    let e = engine_a();
    let p = e.params(5000.0, 2, 6.51e-13).unwrap();
    let o2 = e.omega2(&p).unwrap();
    let o3 = e.omega3(&p, DEFAULT_A).unwrap();
    assert!(o3 >= o2 && o3 <= o2 * (1.0 + 1e-6), "{o3} vs {o2}");
    assert!(e.omega3(&p, DEFAULT_A / 2.0).is_err());
    assert!(e.omega3(&p, (p.x() + 0.1).exp()).is_err());
}

#[test]
fn decomposition_adds_up() {
    for e in [engine_a(), engine_b()] {
        for (b, m, delta) in [(18.42, 1, 4.77e-4), (700.0, 23, 2.11e-12), (5000.0, 2, 6.51e-13)] {
            let c = e.epsilon_for(b, m, delta).unwrap();
            assert!((c.parts.sum() / c.epsilon - 1.0).abs() < 1e-14);
            assert!(c.epsilon >= c.parts.sum());
        }
    }
}

#[test]
fn split_error_is_small_against_main_term() {
    let c = engine_b().epsilon_for(700.0, 23, 2.11e-12).unwrap();
    let (h, e3) = engine_b().split_breakdown(&c).unwrap();
    assert!(e3 / h <= 0.10, "e3/h3 = {}", e3 / h);
}

#[test]
fn optimizer_matches_published_choices() {
    let c = engine_a().optimize_row(50.0).unwrap();
    assert!(c.params.m.abs_diff(7) <= 2, "m = {}", c.params.m);
    assert!(c.epsilon <= 1.30131e-9);
    let c = engine_a().optimize_row(1000.0).unwrap();
    assert!((c.epsilon / 2.32993e-11 - 1.0).abs() < 0.05);
    assert!(engine_a().optimize_row(10.0).is_err());
}

#[test]
fn table_is_non_increasing() {
    let rows = engine_a().table(&[30.0, 18.42, 20.0, 25.0, 27.0, 28.0, 18.42]).unwrap();
    assert_eq!(rows.len(), 6);
    assert!(rows.windows(2).all(|w| w[0].params.b < w[1].params.b && w[1].epsilon <= w[0].epsilon));
    let tsv = to_tsv(&rows);
    assert_eq!(tsv.lines().count(), 7);
    assert!(tsv.starts_with("b\tm\tdelta\tepsilon\tform"));
}

#[test]
fn default_grid_is_sorted_and_spans_the_range() {
    let g = default_grid();
    assert!(g.windows(2).all(|w| w[0] < w[1]));
    assert_eq!(g[0], 18.42);
    assert_eq!(*g.last().unwrap(), 5700.0);
}

#[test]
fn reference_mode_is_close_to_certified() {
    let r = Engine::family_b(&table(5000.0), FAMILY_B_D, DEFAULT_A, Mode::Reference).unwrap();
    let c = r.epsilon_for(5000.0, 2, 6.51e-13).unwrap().epsilon;
    let d = engine_b().epsilon_for(5000.0, 2, 6.51e-13).unwrap().epsilon;
    assert!(c <= d && d / c - 1.0 < 0.02, "{c} vs {d}");
}

#[test]
fn asymptotic_forms() {
    assert!(epsilon_asymptotic(110.0).is_err());
    assert!(epsilon_star(109.0).is_err());
    assert!(epsilon_asymptotic(1000.0).unwrap() * 1000.0 < 0.012559);
    for b in [111.0, 500.0, 5000.0, 1e6] {
        let (a, p) = (epsilon_asymptotic(b).unwrap(), epsilon_asymptotic_proof(b).unwrap());
        assert!(p >= a);
    }
    // epsilon* overtakes epsilon near X = 33.38
    assert!(asymptotic::star_factor(33.36) > 1.0);
    assert!(asymptotic::star_factor(33.4) < 1.0);
    let f = asymptotic::star_factor(((1e12) / R0).sqrt()) * std::f64::consts::SQRT_2;
    assert!(f > 1.0 && f < 1.015);
}

#[test]
fn epsilon_zero_certified_range() {
    assert!(epsilon_zero(4000.0, false).is_err());
    assert!(epsilon_zero(4000.0, true).is_ok());
    for x in [29.3f64, 40.0, 60.0] {
        let b = x * x * R0;
        if b >= EPS0_CERTIFIED_FROM {
            assert!(epsilon_zero(b, false).unwrap() < epsilon_asymptotic(b).unwrap());
        }
    }
}

#[test]
fn nu_solution_checks_hold() {
    for x in [40.0, 50.0, 80.0] {
        let s = solve_nu(x).unwrap();
        s.verify().unwrap();
        assert!(s.nu0 < s.nu && s.nu < s.nu1);
        assert!(s.y < 0.025);
    }
    let s = solve_nu(40.0).unwrap();
    assert!((s.nu0 - 0.97686).abs() < 1e-4, "nu0 = {}", s.nu0);
    assert!(solve_nu(-1.0).is_err());
}

#[test]
fn absorption_fits_in_headroom_for_large_b() {
    let (added, room) = psi_theta_absorption(1000.0).unwrap();
    assert!(added < room);
}

#[test]
fn pereira_pieces() {
    assert_eq!(pereira_upper(20.0, 21.0), Some((1.0, 1.2)));
    assert_eq!(pereira_upper(10.0, 21.0), Some((1.0, 4.0 / 3.0)));
    assert_eq!(pereira_upper(LN_1E16, f64::INFINITY), Some((1.001, 1.1)));
    assert_eq!(pereira_upper(40.0, 50.0), Some((1.001, 1.0)));
    assert_eq!(pereira_lower(27.4, 28.0), Some((1.0, 6.0 / 7.0)));
    assert_eq!(pereira_lower(10.0, 20.0), Some((1.0, 2.0 / 3.0)));
    assert_eq!(pereira_lower(5.0, 6.0), None);
}

#[test]
fn eta_from_published_rows() {
    let rows = published_rows();
    let e1 = eta_coeffs(1, LN_8E11, &rows, Variant::Psi).unwrap();
    assert!((e1 / 0.000797686 - 1.0).abs() < 1e-5, "{e1}");
    let e2 = eta_coeffs(2, LN_8E11, &rows, Variant::Psi).unwrap();
    assert!((e2 / 0.0223352 - 1.0).abs() < 1e-5, "{e2}");
    let t1 = eta_coeffs(1, LN_8E11, &rows, Variant::Theta).unwrap();
    assert!((t1 / 0.000821232 - 1.0).abs() < 0.01, "{t1}");
    assert!(t1 > e1);
    assert!(matches!(eta_coeffs(1, 27.5, &rows, Variant::Psi), Err(Error::Coverage(_))));
    assert!(eta_coeffs(0, LN_8E11, &rows, Variant::Psi).is_err());
    let short: Vec<EpsRow> = rows.iter().copied().filter(|r| r.b <= 40.0).collect();
    assert!(matches!(eta_coeffs(1, LN_8E11, &short, Variant::Psi), Err(Error::Coverage(_))));
    let vals = eta_row_values(1, &rows, Variant::Psi).unwrap();
    assert_eq!(vals.len(), rows.len());
}

#[test]
fn theta_coefficients_from_published_rows() {
    let c = theta_coefficient_bounds(&published_rows()).unwrap();
    assert_eq!((c.upper * 1e9).ceil() / 1e9, 1.000027651);
    let floor = |v: f64, d: i32| (v * 10f64.powi(d)).floor() / 10f64.powi(d);
    assert_eq!(c.branches.len(), 3);
    assert_eq!(floor(c.branches[0].value, 8), 0.99871149);
    assert_eq!(floor(c.branches[1].value, 10), 0.9999703792);
    assert_eq!(floor(c.branches[2].value, 13), 0.9999995233373);
    assert_eq!(c.lower, c.branches[0].value);
}

#[test]
fn golden_section_finds_a_parabola_minimum() {
    let (x, fx) = optimize::golden_min(|x| (x - 1.3).powi(2), 0.0, 4.0, 1e-9);
    assert!((x - 1.3).abs() < 1e-8 && fx < 1e-15);
    let (x, _) = optimize::golden_min(|x| x, 0.0, 1.0, 1e-6);
    assert_eq!(x, 0.0);
}
