//! Special functions against frozen high-precision reference values
//! (regenerate with `tests/oracle/reference_values.py`).

#![allow(clippy::excessive_precision)]

use diracxp::specfun::{
    kummer_m, kummer_m_asymptotic, kummer_m_series, log_gamma, riemann_siegel_theta,
    whittaker_paper, WhittakerParams, ASYMPTOTIC_SWITCH,
};
use diracxp::ComplexValue;

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn rel_err(got: ComplexValue, want: ComplexValue) -> f64 {
    (got - want).norm() / want.norm()
}

#[test]
fn log_gamma_reference_points() {
    let cases = [
        (
            c(3.0, 4.0),
            c(-1.7566267846037841105, 4.7426644380346579282),
        ),
        (
            c(-2.5, 0.1),
            c(-0.10314924404281920289, -9.314444268359838115),
        ),
        (
            c(15.0, 100.0),
            c(-89.335292523181177589, 382.2463765453903234),
        ),
        (
            c(-99.5, 0.5),
            c(-361.20951599778269831, -311.85667609942277171),
        ),
        (
            c(0.25, 50.0),
            c(-78.598880432701842504, 145.20865952425722833),
        ),
        (
            c(1e-3, 1e-3),
            c(6.5606044738375526187, -0.78597373492965343485),
        ),
        (
            c(-50.0, 80.0),
            c(-349.05179653789207019, 176.21703323749349876),
        ),
        (
            c(0.0, 100.0),
            c(-158.46327923927903487, 359.73078709930049801),
        ),
        (
            c(70.0, -70.0),
            c(195.29894618239163875, -306.23939538310531289),
        ),
        (
            c(-7.3, -0.2),
            c(-8.0379725729189845863, 24.337286753302470801),
        ),
    ];
    for (z, want) in cases {
        let got = log_gamma(z).unwrap();
        // exp(got)/Γ(z) - 1 ≈ got - want for small differences.
        let err = (got - want).norm();
        assert!(
            err < 1e-12 * want.norm().max(1.0),
            "z = {z}: got {got}, want {want}, err {err:e}"
        );
    }
}

#[test]
fn log_gamma_recurrence_at_3_plus_4i() {
    let z = c(3.0, 4.0);
    let lhs = log_gamma(z + 1.0).unwrap();
    let rhs = log_gamma(z).unwrap() + z.ln();
    assert!((lhs - rhs).norm() < 1e-12);
}

#[test]
fn log_gamma_special_values() {
    assert!(log_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-15);
    let half = log_gamma(c(0.5, 0.0)).unwrap();
    assert!((half.re - std::f64::consts::PI.sqrt().ln()).abs() < 1e-14);
}

#[test]
fn kummer_reference_points() {
    let cases = [
        (
            c(0.25, 3.0),
            c(1.0, 6.0),
            50.0,
            c(9583056449766796518.7, 1571628772450463759.0),
            1e-10,
        ),
        (
            c(0.25, 3.0),
            c(1.0, 6.0),
            32.0,
            c(16093530517.129040396, 231585473805.59132382),
            1e-12,
        ),
        (
            c(0.25, 3.0),
            c(1.0, 6.0),
            40.0,
            c(369359902201346.53028, 405483042535789.09438),
            1e-12,
        ),
        (
            c(0.0, 7.0),
            c(1.0, 14.0),
            20.0,
            c(-78735.717865122010146, -2300.6245692651724062),
            1e-12,
        ),
        (
            c(0.0, 2.0),
            c(1.0, 4.0),
            3.0,
            c(4.5522217046652683556, 0.57812852841064259227),
            1e-13,
        ),
        (
            c(-2.5, 1.0),
            c(0.5, -2.0),
            12.0,
            c(-65.158513988146467817, 109.91690027884187767),
            1e-12,
        ),
    ];
    for (a, b, u, want, tol) in cases {
        let got = kummer_m(a, b, u).unwrap();
        let err = rel_err(got, want);
        assert!(
            err < tol,
            "M({a}, {b}; {u}) = {got}, want {want}, rel err {err:e}"
        );
    }
}

#[test]
fn kummer_large_argument_matches_expansion() {
    let (a, b) = (c(0.25, 3.0), c(1.0, 6.0));
    let series = kummer_m_series(a, b, 50.0).unwrap();
    let asym = kummer_m_asymptotic(a, b, 50.0).unwrap();
    assert!(
        rel_err(asym.value, series) < 1e-8,
        "{:e}",
        rel_err(asym.value, series)
    );
    assert!(asym.relative_error < 1e-8);
}

#[test]
fn kummer_branches_overlap() {
    let (a, b) = (c(0.25, 3.0), c(1.0, 6.0));
    let mut u = 0.8 * ASYMPTOTIC_SWITCH;
    while u <= 1.2 * ASYMPTOTIC_SWITCH {
        let s = kummer_m_series(a, b, u).unwrap();
        let t = kummer_m_asymptotic(a, b, u).unwrap().value;
        assert!(rel_err(t, s) < 1e-8, "u = {u}: {:e}", rel_err(t, s));
        u += 0.5;
    }
}

#[test]
fn kummer_exponential_identity() {
    let v = kummer_m(c(0.75, 1.0), c(0.75, 1.0), 2.0).unwrap();
    assert!(rel_err(v, c(2f64.exp(), 0.0)) < 1e-14);
}

#[test]
fn whittaker_reference_points() {
    let cases = [
        (
            c(0.5, 0.0),
            c(0.0, 2.0),
            3.0,
            c(-1.2124113728340102538, 1.294276185431477049),
        ),
        (
            c(0.5, 0.0),
            c(0.0, 5.0),
            1e-6,
            c(0.00099929749076760515525, 0.000037476860121719051673),
        ),
        (
            c(0.5, 0.0),
            c(0.0, 7.0),
            20.0,
            c(8.7509098406463908215, -13.386355195996432196),
        ),
        (
            c(0.5, 0.0),
            c(0.0, -7.0),
            0.01,
            c(0.068226954653354596214, 0.073106617909847718227),
        ),
        (
            c(0.25, 0.0),
            c(1.5, 0.5),
            4.0,
            c(14.389418402546562134, 11.580954741482669949),
        ),
    ];
    for (k, m, u, want) in cases {
        let got = whittaker_paper(&WhittakerParams::new(k, m, u).unwrap()).unwrap();
        let err = rel_err(got, want);
        assert!(
            err < 1e-11,
            "W(k={k}, m={m}, u={u}) = {got}, want {want}, rel err {err:e}"
        );
    }
}

#[test]
fn whittaker_small_argument_limit() {
    let (e, u) = (5.0, 1e-6);
    let w = whittaker_paper(&WhittakerParams::spectral(e, u).unwrap()).unwrap();
    let leading = (c(0.5, e) * u.ln()).exp();
    let ratio = w / leading;
    assert!((ratio - 1.0).norm() < 1e-5, "{ratio}");
}

#[test]
fn whittaker_zero_index_at_one() {
    let w = whittaker_paper(&WhittakerParams::new(c(0.5, 0.0), c(0.0, 0.0), 1.0).unwrap()).unwrap();
    assert!((w - c((-0.5f64).exp(), 0.0)).norm() < 1e-15);
}

#[test]
fn theta_reference_points() {
    let cases = [
        (0.0, 0.0),
        (1.0, -1.7675479528122903883),
        (14.134725141734693, -1.7286702466758382115),
        (17.3, -0.2805199942494986317),
        (50.0, 26.461366070161409647),
        (100.0, 87.972165231787219625),
        (200.0, 245.65143509898897282),
        (-30.0, -8.0578001365639901994),
    ];
    for (e, want) in cases {
        let got = riemann_siegel_theta(e);
        assert!(
            (got - want).abs() < 1e-10,
            "theta({e}) = {got}, want {want}"
        );
    }
}

/// `ϑ(E) ≈ (E/2) ln(E/2π) - E/2 - π/8 + 1/(48E) + 7/(5760E³) + 31/(80640E⁵)`.
fn theta_stirling(e: f64) -> f64 {
    use std::f64::consts::PI;
    0.5 * e * (e / (2.0 * PI)).ln() - 0.5 * e - PI / 8.0
        + 1.0 / (48.0 * e)
        + 7.0 / (5760.0 * e.powi(3))
        + 31.0 / (80640.0 * e.powi(5))
}

#[test]
fn theta_matches_stirling_expansion() {
    assert!((riemann_siegel_theta(50.0) - theta_stirling(50.0)).abs() < 1e-8);
    for e in [20.0, 80.0, 150.0] {
        assert!(
            (riemann_siegel_theta(e) - theta_stirling(e)).abs() < 1e-8,
            "E = {e}"
        );
    }
}

#[test]
fn theta_is_odd() {
    assert_eq!(riemann_siegel_theta(-17.3), -riemann_siegel_theta(17.3));
}
