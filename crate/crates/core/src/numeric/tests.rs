use super::*;
use crate::poly::MuParams;
use crate::poly::rat;
use crate::states::{enumerate_level, state, CoordinateSystem, LevelIndex, QuantumNumbers};
use crate::verify::inner_product;
use proptest::prelude::*;

fn st(s: &str, mu: &MuParams) -> GaussianState {
    GaussianState::from_real(&s.parse().unwrap(), mu.clone())
}

#[test]
fn evaluate_examples() {
    let z = MuParams::zero();
    let origin = EvalPoint::new(0.0, 0.0, 0.0).unwrap();
    assert_eq!(evaluate(&st("1", &z), &origin, true).unwrap(), 1.0);
    assert_eq!(evaluate(&st("x1", &z), &EvalPoint::new(2.0, 0.0, 0.0).unwrap(), false).unwrap(), 2.0);
    let m = MuParams::from_ratios([(1, 2), (0, 1), (0, 1)]).unwrap();
    let s = state(&QuantumNumbers::Cartesian { n: [2, 0, 0] }, &m).unwrap();
    // 1 - x1^2 at x1 = 1/2
    assert_eq!(evaluate(&s, &EvalPoint::new(0.5, 0.0, 0.0).unwrap(), false).unwrap(), 0.75);
    assert!(EvalPoint::new(f64::NAN, 0.0, 0.0).is_err());
    assert!(EvalPoint::new(0.0, f64::INFINITY, 0.0).is_err());
}

proptest! {
    #[test]
    fn evaluate_is_exact_on_integer_points(
        e in proptest::array::uniform3(0u32..5),
        x in proptest::array::uniform3(-6i64..7),
        c in -50i64..50,
    ) {
        let p = crate::poly::MultiPoly::term(crate::poly::Monomial(e), rat(c, 1));
        let exact = p.eval(&x.map(|v| rat(v, 1)));
        let point = EvalPoint::new(x[0] as f64, x[1] as f64, x[2] as f64).unwrap();
        prop_assert_eq!(evaluate_poly(&p, &point), rational_to_f64(&exact));
    }

    #[test]
    fn evaluate_matches_exact_rational(
        coeffs in proptest::collection::vec(-1000i64..1000, 1..12),
        x in proptest::array::uniform3(-8i64..8),
    ) {
        let monos = crate::poly::Monomial::up_to_degree(4);
        let p = crate::poly::MultiPoly::from_terms(
            coeffs.iter().enumerate().map(|(i, &c)| (monos[i * 3 % monos.len()], rat(c, 7))),
        );
        let pt = x.map(|v| rat(v, 4));
        let exact = rational_to_f64(&p.eval(&pt));
        let point = EvalPoint::new(x[0] as f64 / 4.0, x[1] as f64 / 4.0, x[2] as f64 / 4.0).unwrap();
        let scale: f64 = p.terms().map(|(m, c)| {
            rational_to_f64(c).abs() * (0..3).map(|i| (x[i] as f64 / 4.0).abs().powi(m.0[i] as i32)).product::<f64>()
        }).sum();
        prop_assert!((evaluate_poly(&p, &point) - exact).abs() <= 1e-13 * scale.max(1.0));
    }
}

#[test]
fn kronrod_integrates_smooth_functions() {
    let r = integrate_adaptive(|x| x.cos(), 0.0, std::f64::consts::PI / 2.0, 1e-14).unwrap();
    assert!((r.value - 1.0).abs() < 1e-14);
    let r = integrate_adaptive(|x| x.powi(30), 0.0, 1.0, 1e-15).unwrap();
    assert!((r.value - 1.0 / 31.0).abs() < 1e-15);
    // endpoint singularity
    let r = integrate_adaptive(|x| x.powf(-0.5), 0.0, 1.0, 1e-8);
    assert!(r.is_err() || (r.unwrap().value - 2.0).abs() < 1e-6);
}

#[test]
fn moments_match_gamma() {
    use statrs::function::gamma::gamma;
    for &mu in &[0.0, 0.2, 0.25, 1.0 / 3.0, 0.5, 1.5] {
        for k in [0u32, 2, 4, 8] {
            let exact = gamma((k as f64 + 2.0 * mu + 1.0) / 2.0);
            let r = weighted_moment(k, mu, 1e-13 * exact).unwrap();
            assert!((r.value - exact).abs() <= 2e-13 * exact, "k={k} mu={mu}: {} vs {exact}", r.value);
        }
    }
}

#[test]
fn numeric_inner_product_examples() {
    let z = MuParams::zero();
    let v = numeric_inner_product(&st("1", &z), &st("1", &z), 1e-10).unwrap();
    assert!((v - std::f64::consts::PI.powf(1.5)).abs() < 1e-10);
    let v = numeric_inner_product(&st("x1", &z), &st("x2", &z), 1e-10).unwrap();
    assert!(v.abs() < 1e-10);
    let m = MuParams::from_ratios([(1, 2), (0, 1), (0, 1)]).unwrap();
    let v = numeric_inner_product(&st("x1", &m), &st("x1", &m), 1e-10).unwrap();
    assert!((v - std::f64::consts::PI).abs() < 1e-10);
    assert!(numeric_inner_product(&st("1", &z), &st("1", &m), 1e-10).is_err());
    assert!(numeric_inner_product(&st("1", &z), &st("1", &z), 0.0).is_err());
}

#[test]
fn numeric_agrees_with_exact_at_low_level() {
    let m = MuParams::from_ratios([(1, 3), (1, 4), (1, 5)]).unwrap();
    let states: Vec<GaussianState> = (0..=2)
        .flat_map(|n| enumerate_level(LevelIndex(n), CoordinateSystem::Spherical))
        .map(|q| state(&q, &m).unwrap())
        .collect();
    for a in &states {
        for b in &states {
            let exact = gamma_scaled_value(&inner_product(a, b).unwrap(), &m);
            let scale = gamma_scaled_value(&inner_product(a, a).unwrap(), &m)
                .max(gamma_scaled_value(&inner_product(b, b).unwrap(), &m));
            let v = numeric_inner_product(a, b, 1e-10 * scale).unwrap();
            assert!((v - exact).abs() <= 1e-9 * scale);
        }
    }
}

#[test]
fn grid_examples() {
    let z = MuParams::zero();
    let spec = GridSpec {
        axes: [AxisSampling::Range { lo: -1.0, hi: 1.0, count: 2 }, AxisSampling::Fixed(0.0), AxisSampling::Fixed(0.0)],
        include_gaussian: true,
    };
    let rows = emit_grid(&st("1", &z), &spec).unwrap();
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| (r.value - (-0.5f64).exp()).abs() < 1e-15));
    let spec = GridSpec {
        axes: [AxisSampling::Range { lo: -1.0, hi: 1.0, count: 3 }, AxisSampling::Fixed(0.0), AxisSampling::Fixed(0.0)],
        include_gaussian: false,
    };
    let values: Vec<f64> = emit_grid(&st("x1", &z), &spec).unwrap().iter().map(|r| r.value).collect();
    assert_eq!(values, vec![-1.0, 0.0, 1.0]);
    let m = MuParams::from_ratios([(1, 2), (0, 1), (0, 1)]).unwrap();
    let s = state(&QuantumNumbers::Cartesian { n: [1, 0, 0] }, &m).unwrap();
    let spec = GridSpec { axes: [AxisSampling::Fixed(1.0), AxisSampling::Fixed(0.0), AxisSampling::Fixed(0.0)], include_gaussian: true };
    let rows = emit_grid(&s, &spec).unwrap();
    assert!((rows[0].value - 0.606531).abs() < 1e-6);
    let bad = GridSpec { axes: [AxisSampling::Range { lo: 1.0, hi: 1.0, count: 3 }, AxisSampling::Fixed(0.0), AxisSampling::Fixed(0.0)], include_gaussian: true };
    assert!(emit_grid(&s, &bad).is_err());
    let bad = GridSpec { axes: [AxisSampling::Range { lo: 0.0, hi: 1.0, count: 1 }, AxisSampling::Fixed(0.0), AxisSampling::Fixed(0.0)], include_gaussian: true };
    assert!(emit_grid(&s, &bad).is_err());
}

#[test]
fn csv_format() {
    let rows = vec![GridRow { x: [0.0, -1.0, 0.5], value: 1.0 / 3.0 }];
    let mut buf = Vec::new();
    write_csv(&rows, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert_eq!(
        text,
        "x1,x2,x3,value\n0.0000000000000000e0,-1.0000000000000000e0,5.0000000000000000e-1,3.3333333333333331e-1\n"
    );
}
