use super::*;
use crate::poly::{int, rat, Monomial};
use LadderSign::{Minus, Plus};

fn mu(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> MuParams {
    MuParams::from_ratios([a, b, c]).unwrap()
}

fn generic() -> MuParams {
    mu((1, 3), (1, 4), (1, 5))
}

fn cp(s: &str) -> CPoly {
    s.parse::<MultiPoly>().unwrap().to_complex()
}

#[test]
fn plain_dunkl_examples() {
    let osc = Oscillator::plain(mu((1, 3), (0, 1), (1, 2)));
    let d1 = osc.dunkl_derivative(Axis::X1);
    assert_eq!(d1.apply(&cp("x1")).unwrap(), cp("5/3"));
    assert!(d1.apply(&cp("1")).unwrap().is_zero());
    assert_eq!(d1.apply(&cp("x1^2")).unwrap(), cp("2*x1"));
    let d3 = osc.dunkl_derivative(Axis::X3);
    assert_eq!(d3.apply(&cp("x3^3")).unwrap(), cp("4*x3^2"));
    let r1 = osc.reflection(Axis::X1);
    assert_eq!(r1.apply(&cp("x1*x2")).unwrap(), cp("-x1*x2"));
}

#[test]
fn representation_mismatch_is_an_error() {
    let osc = Oscillator::gaussian(generic());
    assert!(matches!(
        osc.hamiltonian(HamiltonianScope::Total).apply(&cp("1")),
        Err(Error::RepresentationMismatch { .. })
    ));
    let plain = Oscillator::plain(generic());
    let state = GaussianState::from_real(&MultiPoly::one(), generic());
    assert!(plain.reflection(Axis::X1).apply_gaussian(&state).is_err());
    assert!(bracket(&osc.identity(), &plain.identity(), BracketKind::Commutator).is_err());
}

#[test]
fn dunkl_matches_monomial_formula() {
    // D x^a = (a + 2 mu [a odd]) x^(a-1) on each exponent
    let m = generic();
    let osc = Oscillator::plain(m.clone());
    for mono in Monomial::up_to_degree(8) {
        for axis in Axis::ALL {
            let a = mono.exp(axis);
            let got = osc.dunkl_derivative(axis).act(&CPoly::monomial(mono));
            let expected = if a == 0 {
                CPoly::zero()
            } else {
                let mut c = int(a as i64);
                if a % 2 == 1 {
                    c += int(2) * m.get(axis.index());
                }
                CPoly::term(mono.with_exp(axis, a - 1), real(c))
            };
            assert_eq!(got, expected);
        }
    }
}

#[test]
fn gaussian_conjugation() {
    // D(p e) = (D p - x p) e because R preserves the Gaussian and d(e) = -x e
    let m = generic();
    let plain = Oscillator::plain(m.clone());
    let gauss = Oscillator::gaussian(m);
    for mono in Monomial::up_to_degree(8) {
        let p = CPoly::monomial(mono);
        for axis in Axis::ALL {
            let expected = plain.dunkl_derivative(axis).act(&p) - p.mul_variable(axis);
            assert_eq!(gauss.dunkl_derivative(axis).act(&p), expected);
            let dexp = p.partial_derivative(axis) - p.mul_variable(axis);
            assert_eq!(gauss.partial(axis).act(&p), dexp);
        }
    }
}

#[test]
fn dunkl_derivatives_commute_and_anticommute_with_reflection() {
    let osc = Oscillator::plain(generic());
    for (i, j) in [(Axis::X1, Axis::X2), (Axis::X2, Axis::X3), (Axis::X1, Axis::X3)] {
        let c = osc.dunkl_derivative(i).commutator(&osc.dunkl_derivative(j));
        assert!(operators_equal(&c, &osc.zero(), 8));
    }
    for axis in Axis::ALL {
        let a = osc.reflection(axis).anticommutator(&osc.dunkl_derivative(axis));
        assert!(operators_equal(&a, &osc.zero(), 8));
    }
}

#[test]
fn ladder_examples() {
    let osc = Oscillator::gaussian(generic());
    assert!(osc.ladder(Axis::X1, Minus).act(&cp("1")).is_zero());
    assert_eq!(osc.ladder(Axis::X1, Plus).act(&cp("1")), cp("2*x1"));
}

#[test]
fn ladder_degree_grading() {
    let osc = Oscillator::gaussian(generic());
    let h = osc.hamiltonian(HamiltonianScope::Total);
    for mono in Monomial::up_to_degree(8) {
        let p = CPoly::monomial(mono);
        let d = mono.degree();
        assert_eq!(h.act(&p).degree(), Some(d));
        for axis in Axis::ALL {
            assert_eq!(osc.ladder(axis, Plus).act(&p).degree(), Some(d + 1));
            let lowered = osc.ladder(axis, Minus).act(&p);
            if mono.exp(axis) == 0 {
                assert!(lowered.is_zero());
            } else {
                assert_eq!(lowered.degree(), Some(d - 1));
            }
        }
    }
}

#[test]
fn hamiltonian_examples() {
    let osc = Oscillator::gaussian(MuParams::zero());
    let h = osc.hamiltonian(HamiltonianScope::Total);
    assert_eq!(h.act(&cp("1")), cp("3/2"));
    let osc = Oscillator::gaussian(mu((1, 2), (1, 1), (3, 2)));
    let h = osc.hamiltonian(HamiltonianScope::Total);
    assert_eq!(h.act(&cp("1")), cp("9/2"));
    let h2 = osc.hamiltonian(HamiltonianScope::Axis(Axis::X2));
    assert_eq!(h2.act(&cp("x2")), cp("5/2*x2"));
    let h1 = osc.hamiltonian(HamiltonianScope::Axis(Axis::X1));
    assert_eq!(h1.act(&cp("1")), cp("1"));
}

#[test]
fn casimir_examples() {
    let osc = Oscillator::gaussian(mu((1, 4), (0, 1), (0, 1)));
    let q1 = osc.casimir(Axis::X1);
    assert_eq!(q1.act(&cp("1")), cp("-1/4"));
    assert_eq!(q1.act(&cp("x1")), cp("-1/4*x1"));
    let osc0 = Oscillator::gaussian(MuParams::zero());
    assert!(osc0.casimir(Axis::X1).act(&cp("x1^2")).is_zero());
}

#[test]
fn casimir_is_minus_mu() {
    let m = generic();
    let osc = Oscillator::gaussian(m.clone());
    for axis in Axis::ALL {
        let expected = osc.scalar(real(-m.get(axis.index()).clone()));
        assert!(operators_equal(&osc.casimir(axis), &expected, 8));
    }
}

#[test]
fn symmetry_examples() {
    let m = generic();
    let osc = Oscillator::gaussian(m.clone());
    // J3 x1 = i (1 + 2 mu1) x2
    let expected = CPoly::term(Monomial([0, 1, 0]), imag(int(1) + int(2) * m.get(0)));
    assert_eq!(osc.j(3).act(&cp("x1")), expected);
    // every symmetry annihilates the ground state
    assert!(osc.k(3).act(&cp("1")).is_zero());
    assert!(osc.j(1).act(&cp("1")).is_zero());
    let h = osc.hamiltonian(HamiltonianScope::Total);
    for i in 1..=3 {
        assert!(operators_equal(&osc.j(i).commutator(&h), &osc.zero(), 6));
        assert!(operators_equal(&osc.k(i).commutator(&h), &osc.zero(), 6));
    }
}

#[test]
fn schwinger_and_coordinate_forms_agree() {
    for m in MuParams::default_samples() {
        let osc = Oscillator::gaussian(m);
        for kind in [SymmetryKind::J, SymmetryKind::K] {
            for i in 1..=3 {
                let a = osc.symmetry(kind, i).unwrap();
                let b = osc.schwinger_symmetry(kind, i).unwrap();
                assert!(operators_equal(&a, &b, 6), "{kind:?}{i}");
            }
        }
    }
}

#[test]
fn gellmann_bilinears_match_symmetries() {
    // G1 = K3, G2 = J3, G4 = K2, G5 = -J2, G6 = K1, G7 = J1
    let osc = Oscillator::gaussian(generic());
    let cap = 5;
    let g = |j| osc.gellmann_symmetry(j).unwrap();
    assert!(operators_equal(&g(1), &osc.k(3), cap));
    assert!(operators_equal(&g(2), &osc.j(3), cap));
    assert!(operators_equal(&g(4), &osc.k(2), cap));
    assert!(operators_equal(&g(5), &-osc.j(2), cap));
    assert!(operators_equal(&g(6), &osc.k(1), cap));
    assert!(operators_equal(&g(7), &osc.j(1), cap));
    let h = osc.hamiltonian(HamiltonianScope::Total);
    for j in 1..=8 {
        assert!(operators_equal(&g(j).commutator(&h), &osc.zero(), cap));
    }
}

#[test]
fn coproduct_examples() {
    let osc = Oscillator::gaussian(generic());
    assert_eq!(osc.total_reflection().act(&cp("x1*x2*x3")), cp("-x1*x2*x3"));
    assert!(osc.coproduct_ladder(Minus).act(&cp("1")).is_zero());
    let anti = osc
        .coproduct_ladder(Plus)
        .anticommutator(&osc.coproduct_ladder(Minus))
        .scale_rational(rat(1, 2));
    let two_h = osc.hamiltonian(HamiltonianScope::Total).scale_rational(int(2));
    assert!(operators_equal(&anti, &two_h, 6));
}

#[test]
fn bracket_examples() {
    let osc = Oscillator::gaussian(generic());
    let r = |a| osc.reflection(a);
    let c = bracket(&r(Axis::X1), &r(Axis::X2), BracketKind::Commutator).unwrap();
    assert!(operators_equal(&c, &osc.zero(), 6));
    let c = bracket(&osc.a0(Axis::X1), &osc.ladder(Axis::X1, Plus), BracketKind::Commutator).unwrap();
    assert!(operators_equal(&c, &osc.ladder(Axis::X1, Plus), 8));
    let a = bracket(&osc.ladder(Axis::X1, Plus), &r(Axis::X1), BracketKind::Anticommutator).unwrap();
    assert!(operators_equal(&a, &osc.zero(), 8));
    let w = find_disagreement(&osc.ladder(Axis::X1, Plus), &osc.zero(), 3).unwrap();
    assert_eq!(w.monomial, Monomial::ONE);
}

#[test]
fn undeformed_angular_momentum() {
    let osc = Oscillator::gaussian(MuParams::zero());
    for (j, k, l) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
        let lhs = osc.j(j).commutator(&osc.j(k));
        assert!(operators_equal(&lhs, &osc.j(l).times_i(), 8));
    }
}

#[test]
fn sexpr_text() {
    let osc = Oscillator::plain(mu((1, 3), (0, 1), (0, 1)));
    let d1 = osc.dunkl_derivative(Axis::X1);
    assert_eq!(d1.to_sexpr(false), "(D 1 1/3)");
    assert_eq!(d1.to_sexpr(true), "D1");
    let e = (&osc.coordinate(Axis::X2) * &d1).times_i();
    assert_eq!(e.to_sexpr(false), "(scale i (* (x 2) (D 1 1/3)))");
    let c = osc.reflection(Axis::X1).commutator(&osc.reflection(Axis::X2));
    assert_eq!(c.to_string(), "(comm R1 R2)");
    assert_eq!(osc.ladder(Axis::X3, Plus).to_sexpr(false), "(+ (x 3) (scale -1 (D 3 0)))");
}
