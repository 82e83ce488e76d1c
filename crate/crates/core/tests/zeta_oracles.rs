#![allow(clippy::excessive_precision)]

use std::io::Write;

use diracxp::spectrum::SpectralConfig;
use diracxp::zeta::{
    bundled_zero_table, compare_counting, count_zeros, hardy_z, load_zero_table_file, n_smooth,
    parse_zero_table, s_fluctuation, zeta_critical_line, ArgumentTracker, CountingSummary,
    LoadOptions,
};
use diracxp::{ComplexValue, Error};

#[test]
fn zeta_reference_points() {
    let cases = [
        (0.0, ComplexValue::new(-1.4603545088095868129, 0.0)),
        (
            5.0,
            ComplexValue::new(0.70181237116568663004, 0.23103800839141992679),
        ),
        (
            9.0,
            ComplexValue::new(1.4476424519337558111, 0.19180301276266540549),
        ),
        (
            30.0,
            ComplexValue::new(-0.12064228759004369991, -0.58369121476370628876),
        ),
        (
            50.0,
            ComplexValue::new(-0.081712108320979975048, 0.33079219403866129559),
        ),
        (
            100.0,
            ComplexValue::new(2.6926198856813240905, -0.020386029602598161771),
        ),
        (
            150.0,
            ComplexValue::new(-0.06350505654860523058, -0.065192759925805232653),
        ),
        (
            199.5,
            ComplexValue::new(5.7740821483375558209, 1.5211328668318345007),
        ),
    ];
    for (e, want) in cases {
        let got = zeta_critical_line(e).unwrap();
        let rel = (got - want).norm() / want.norm();
        assert!(
            rel < 1e-8,
            "zeta(1/2 + {e}i) = {got}, want {want}, rel {rel:e}"
        );
    }
}

#[test]
fn zeta_value_at_half() {
    assert!((zeta_critical_line(0.0).unwrap().re + 1.4603545088).abs() < 1e-10);
}

#[test]
fn refined_first_ordinate_is_a_zero() {
    let first = bundled_zero_table().ordinates()[0];
    let (mut a, mut b) = (first - 1e-3, first + 1e-3);
    let fa = hardy_z(a).unwrap();
    assert!(fa * hardy_z(b).unwrap() < 0.0);
    while b - a > 1e-13 {
        let m = 0.5 * (a + b);
        if hardy_z(m).unwrap() * fa > 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    let refined = 0.5 * (a + b);
    assert!(zeta_critical_line(refined).unwrap().norm() < 1e-6);
    assert!((refined - 14.134725141734693).abs() < 1e-9, "{refined}");
}

#[test]
fn zeta_conjugation() {
    let a = zeta_critical_line(9.0).unwrap();
    let b = zeta_critical_line(-9.0).unwrap();
    assert!((a.conj() - b).norm() < 1e-12);
}

#[test]
fn fluctuation_reference_points() {
    let cases = [
        (5.0, 0.10123136792106691956),
        (20.0, -0.37780035138809574752),
        (30.0, -0.5648774443614166503),
        (50.0, 0.57708557793930145368),
        (77.7, 0.3901806466487100456),
        (99.0, 0.437219366196585675),
    ];
    for (e, want) in cases {
        let got = s_fluctuation(e).unwrap();
        assert!((got - want).abs() < 1e-9, "S({e}) = {got}, want {want}");
    }
}

#[test]
fn fluctuation_jumps_by_one_across_a_zero() {
    let first = bundled_zero_table().ordinates()[0];
    let below = s_fluctuation(first - 1e-4).unwrap();
    let above = s_fluctuation(first + 1e-4).unwrap();
    assert!((above - below - 1.0).abs() < 1e-3, "{below} -> {above}");
}

#[test]
fn fluctuation_refuses_exact_zero() {
    // Root of the computed Hardy Z, bisected down to adjacent floats.
    let (mut a, mut b) = (14.13, 14.14);
    let fa = hardy_z(a).unwrap();
    loop {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        if hardy_z(m).unwrap() * fa > 0.0 {
            a = m;
        } else {
            b = m;
        }
    }
    let root = if hardy_z(a).unwrap().abs() < hardy_z(b).unwrap().abs() {
        a
    } else {
        b
    };
    let err = ArgumentTracker::new().advance_to(root).unwrap_err();
    assert!(matches!(err, Error::NearZero { .. }), "{err}");
    assert!(matches!(s_fluctuation(root), Err(Error::NearZero { .. })));
}

#[test]
fn riemann_von_mangoldt_closure() {
    let table = bundled_zero_table();
    for e in [20.0, 30.0, 50.0] {
        let total = n_smooth(e) + s_fluctuation(e).unwrap();
        assert_eq!(total.round() as usize, count_zeros(&table, e), "E = {e}");
    }
}

#[test]
fn fluctuation_stays_below_one() {
    let mut tracker = ArgumentTracker::new();
    let mut worst = 0.0_f64;
    let mut e = 0.5;
    while e <= 100.0 {
        worst = worst.max(tracker.advance_to(e).unwrap().abs());
        e += 0.5;
    }
    eprintln!("max |S(E)| on the 0.5-grid up to 100: {worst}");
    assert!(worst < 1.0, "{worst}");
}

#[test]
fn smooth_count() {
    assert_eq!(n_smooth(0.0), 1.0);
    // ϑ(14.1347…) = -1.72867…, so the smooth count is still below one half
    // at the first zero; S carries the rest of the unit step.
    let first = bundled_zero_table().ordinates()[0];
    let at_first = n_smooth(first);
    let reference = 1.0 - 1.7286702466758382115 / std::f64::consts::PI;
    assert!((at_first - reference).abs() < 1e-10, "{at_first}");
    assert!(at_first > 0.0 && at_first < 1.0);
    let after = at_first + s_fluctuation(first + 1e-6).unwrap();
    assert!((after - 1.0).abs() < 1e-5, "{after}");
    let e = 33.0;
    assert!((n_smooth(e) + n_smooth(-e) - 2.0).abs() < 1e-12);
}

#[test]
fn counting_boundaries() {
    let table = bundled_zero_table();
    assert_eq!(count_zeros(&table, 10.0), 0);
    let second = table.ordinates()[1];
    assert_eq!(count_zeros(&table, second), 2);
    assert_eq!(count_zeros(&table, 1e9), 100);
}

#[test]
fn file_loading() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(
        file,
        "# first zeros\r\n14.134725\r\n\r\n21.022040\r\n25.010858\r\n"
    )
    .unwrap();
    let table = load_zero_table_file(file.path(), LoadOptions::default()).unwrap();
    assert_eq!(table.ordinates(), &[14.134725, 21.022040, 25.010858]);
    assert_eq!(table.source(), file.path().display().to_string());

    let missing = std::path::Path::new("/definitely/not/here.txt");
    let err = load_zero_table_file(missing, LoadOptions::default()).unwrap_err();
    assert!(
        matches!(err, Error::Io(ref m) if m.contains("/definitely/not/here.txt")),
        "{err}"
    );
}

#[test]
fn sanity_gate_can_be_disabled() {
    let text = "1.5\n2.5\n";
    assert!(matches!(
        parse_zero_table(text, LoadOptions::default()),
        Err(Error::Validation { line: 1, .. })
    ));
    let table = parse_zero_table(
        text,
        LoadOptions {
            sanity_check: false,
        },
    )
    .unwrap();
    assert_eq!(table.len(), 2);
}

#[test]
fn comparison_on_default_grid() {
    let table = bundled_zero_table();
    let grid: Vec<f64> = (1..=10).map(|i| 10.0 * i as f64).collect();
    let samples = compare_counting(&SpectralConfig::new(1e-3, 100.0), &table, &grid).unwrap();
    assert_eq!(samples.len(), 10);
    for s in &samples {
        assert_eq!(s.n_table, count_zeros(&table, s.energy));
        assert_eq!(
            (s.n_smooth + s.s_fluct).round() as usize,
            s.n_table,
            "E = {}",
            s.energy
        );
    }
    let summary = CountingSummary::from_samples(&samples);
    assert_eq!(summary.formula_mismatches, 0);
    eprintln!(
        "u0 = 1e-3: rms(n_model - n_table) = {}, rms(formula - table) = {:e}",
        summary.rms_model_minus_table, summary.rms_formula_minus_table
    );
}

#[test]
fn comparison_keeps_grid_order() {
    let table = bundled_zero_table();
    let grid = [40.0, 15.0, 60.0, 15.0];
    let samples = compare_counting(&SpectralConfig::new(1e-3, 60.0), &table, &grid).unwrap();
    let energies: Vec<f64> = samples.iter().map(|s| s.energy).collect();
    assert_eq!(energies, grid);
    assert_eq!(samples[1], samples[3]);
}

#[test]
fn comparison_rejects_out_of_window_grid() {
    let table = bundled_zero_table();
    let err = compare_counting(&SpectralConfig::new(1e-3, 300.0), &table, &[250.0]).unwrap_err();
    assert!(matches!(err, Error::Range { .. }));
}
