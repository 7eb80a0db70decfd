//! Scalar quadrature: consistency with `x^(-alpha)`, published cells and
//! convergence orders.

use fracpow::{approx_frac_power, error_scan, Alpha, Family, QuadratureSpec, Representation, Rule, ScanSpec};

fn spec(rule: Rule, m: usize, family: Family, a: f64, kappa: f64) -> QuadratureSpec {
    let rep = Representation::with_kappa(family, Alpha::new(a).unwrap(), kappa).unwrap();
    QuadratureSpec::new(rule, m, rep).unwrap()
}

fn max_error(rule: Rule, m: usize, family: Family, a: f64, kappa: f64) -> f64 {
    error_scan(&spec(rule, m, family, a, kappa), &ScanSpec::up_to(1e20).unwrap())
        .unwrap()
        .max_error
}

fn assert_close(got: f64, want: f64, rel: f64) {
    assert!(((got - want) / want).abs() <= rel, "got {got:e}, want {want:e}");
}

#[test]
fn fine_rules_reproduce_the_power() {
    for family in [Family::Resolvent, Family::Split] {
        for a in [0.1, 0.5, 0.9] {
            let q = spec(Rule::Midpoint, 100_000, family, a, 3.0);
            let r = q.approximant().unwrap();
            for x in [1.0, 10.0, 1e5] {
                let err = (r.eval(x) - f64::powf(x, -a)).abs();
                assert!(err <= 1e-9, "{family:?} alpha={a} x={x}: error {err:e}");
            }
        }
    }
}

#[test]
fn fine_inverse_family_reproduces_the_power() {
    // Its density decays more slowly near t = 1 for alpha close to 1.
    for a in [0.1, 0.5, 0.9] {
        let r = spec(Rule::Midpoint, 100_000, Family::InverseResolvent, a, 3.0).approximant().unwrap();
        for x in [1.0, 10.0, 1e5] {
            let err = (r.eval(x) - f64::powf(x, -a)).abs();
            assert!(err <= 1e-7, "alpha={a} x={x}: error {err:e}");
        }
    }
}

#[test]
fn published_cells() {
    assert_close(max_error(Rule::Midpoint, 100, Family::Resolvent, 0.5, 2.0), 1.591494e-05, 1e-3);
    assert_close(max_error(Rule::Midpoint, 100, Family::Split, 0.5, 3.0), 7.958861e-06, 1e-3);
    assert_close(max_error(Rule::Midpoint, 50, Family::Resolvent, 0.1, 1.0), 5.374386e-03, 1e-3);
    assert_close(max_error(Rule::Simpson, 200, Family::Resolvent, 0.5, 5.0), 1.591996e-09, 1e-3);
    assert_close(max_error(Rule::Midpoint, 200, Family::Split, 0.9, 2.0), 4.098779e-06, 1e-3);
    assert_close(max_error(Rule::Simpson, 50, Family::Resolvent, 0.9, 2.0), 5.280150e-06, 1e-3);
}

#[test]
fn midpoint_second_order() {
    for a in [0.25, 0.5, 0.75] {
        for kappa in [2.0, 3.0, 4.0] {
            let ratio = max_error(Rule::Midpoint, 100, Family::Resolvent, a, kappa)
                / max_error(Rule::Midpoint, 200, Family::Resolvent, a, kappa);
            assert!((3.5..=4.5).contains(&ratio), "alpha={a} kappa={kappa}: ratio {ratio}");
        }
    }
}

#[test]
fn simpson_fourth_order() {
    for a in [0.5, 0.75, 0.9] {
        for kappa in [4.0, 5.0] {
            let ratio = max_error(Rule::Simpson, 100, Family::Resolvent, a, kappa)
                / max_error(Rule::Simpson, 200, Family::Resolvent, a, kappa);
            assert!((12.0..=20.0).contains(&ratio), "alpha={a} kappa={kappa}: ratio {ratio}");
        }
    }
}

#[test]
fn curve_max_on_shorter_scan_bounded_by_full_scan() {
    let q = spec(Rule::Midpoint, 100, Family::Resolvent, 0.5, 2.0);
    let short = error_scan(&q, &ScanSpec::up_to(1e10).unwrap()).unwrap();
    let full = error_scan(&q, &ScanSpec::up_to(1e20).unwrap()).unwrap();
    assert!(short.max_error <= full.max_error);
    // The shorter scan is a prefix of the longer one.
    assert_eq!(&full.curve[..short.curve.len()], &short.curve[..]);
}

#[test]
fn approx_rejects_bad_x() {
    let q = spec(Rule::Midpoint, 10, Family::Resolvent, 0.5, 2.0);
    assert!(approx_frac_power(0.0, &q).is_err());
    assert!(approx_frac_power(f64::NAN, &q).is_err());
}
