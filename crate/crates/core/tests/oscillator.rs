use quartic_core::algebra::{close_jacobi, AlgebraSpec, Mode};
use quartic_core::oscillator::{detect_case, phi_closed, phi_oracle, realize, CaseKind, N, U};
use quartic_core::ratcore::{int, rat, MultiPoly, Rational};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn quantum() -> AlgebraSpec {
    AlgebraSpec::zero(Mode::Quantum)
}

fn r(rng: &mut StdRng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

fn random_spec(rng: &mut StdRng, case: CaseKind) -> AlgebraSpec {
    let mut s = quantum();
    s.tau = r(rng);
    s.lambda = r(rng);
    for p in [&mut s.alpha, &mut s.gamma, &mut s.epsilon, &mut s.mu, &mut s.nu, &mut s.xi, &mut s.zeta] {
        *p = MultiPoly::constant(r(rng));
    }
    match case {
        CaseKind::Case1 => {
            let d = rat(rng.gen_range(1..=6), rng.gen_range(1..=3));
            s.delta = MultiPoly::constant(&d * &d);
        }
        _ => {
            s.delta = MultiPoly::constant(r(rng));
            s.beta = r(rng);
            if s.beta == int(0) {
                s.beta = int(1);
            }
        }
    }
    close_jacobi(&s)
}

fn random_u(rng: &mut StdRng) -> Rational {
    rat(rng.gen_range(-20..=20) * 2 + 1, 7)
}

#[test]
fn case_detection() {
    let mut s = quantum();
    s.delta = MultiPoly::from_int(16);
    assert_eq!(detect_case(&s), CaseKind::Case1);
    s.beta = int(1);
    assert_eq!(detect_case(&s), CaseKind::Case2);
    assert_eq!(detect_case(&quantum()), CaseKind::Unsupported);
    assert!(realize(&quantum()).is_err());
}

#[test]
fn realization_examples() {
    let nu = &MultiPoly::var(N) + &MultiPoly::var(U);
    let mut s = quantum();
    s.delta = MultiPoly::from_int(16);
    let re = realize(&close_jacobi(&s)).unwrap();
    assert_eq!(re.a_of_n.as_polynomial().unwrap(), nu.scale(&int(4)));
    assert!(re.b_of_n.is_zero());

    let mut s = quantum();
    s.delta = MultiPoly::from_int(1);
    s.tau = int(1);
    let re = realize(&close_jacobi(&s)).unwrap();
    assert_eq!(re.a_of_n.as_polynomial().unwrap(), nu);
    assert_eq!(re.b_of_n.as_polynomial().unwrap(), -&nu.pow(3));

    let mut s = quantum();
    s.beta = int(2);
    let re = realize(&close_jacobi(&s)).unwrap();
    let expect = &nu.pow(2) - &MultiPoly::constant(rat(1, 4));
    assert_eq!(re.a_of_n.as_polynomial().unwrap(), expect);
}

#[test]
fn case2_denominator_choice_is_recorded() {
    let mut rng = StdRng::seed_from_u64(3);
    let s = random_spec(&mut rng, CaseKind::Case2);
    let re = realize(&s).unwrap();
    let pole: Vec<_> = re.checks.iter().filter(|(n, _)| n.starts_with("b(N) with pole")).collect();
    assert_eq!(pole.len(), 2);
    assert!(!pole[0].1 && pole[0].0.contains("1/2"));
    assert!(pole[1].1 && pole[1].0.contains("1/4"));
}

#[test]
fn random_realizations_pass_all_difference_equations() {
    let mut rng = StdRng::seed_from_u64(11);
    for case in [CaseKind::Case1, CaseKind::Case2] {
        for _ in 0..4 {
            let s = random_spec(&mut rng, case);
            let re = realize(&s).unwrap();
            assert_eq!(re.case, case);
            assert!(re.checks.iter().filter(|(n, _)| !n.starts_with("b(N) with pole")).all(|(_, ok)| *ok));
        }
    }
}

#[test]
fn symbolic_energy_realization() {
    let mut s = quantum();
    s.beta = rat(1, 2);
    s.delta = &MultiPoly::var("H") + &MultiPoly::from_int(2);
    s.gamma = MultiPoly::var("H").pow(2);
    s.epsilon = MultiPoly::var("H");
    assert!(realize(&close_jacobi(&s)).is_ok());
}

#[test]
fn trivial_case1_structure_function() {
    let mut s = quantum();
    s.delta = MultiPoly::from_int(1);
    let s = close_jacobi(&s);
    let sf = phi_closed(&s, &MultiPoly::from_int(-2), &MultiPoly::var(U)).unwrap();
    assert_eq!(sf.phi, MultiPoly::one());
    for n in 0..5 {
        assert_eq!(phi_oracle(&s, &int(-2), &rat(1, 3), n).unwrap(), int(1));
    }
}

fn closed_matches_oracle(rng: &mut StdRng, case: CaseKind, trials: usize) {
    let mut done = 0;
    while done < trials {
        let s = random_spec(rng, case);
        let k = r(rng);
        let u = random_u(rng);
        let sf = phi_closed(&s, &MultiPoly::constant(k.clone()), &MultiPoly::constant(u.clone())).unwrap();
        let deg = sf.degree();
        assert!(deg <= if case == CaseKind::Case1 { 6 } else { 12 });
        let mut ok = true;
        for n in 0..=12 {
            match phi_oracle(&s, &k, &u, n) {
                Ok(v) => assert_eq!(sf.eval(n, &[]).unwrap(), v, "{:?} n={}", case, n),
                Err(_) => ok = false,
            }
        }
        if ok {
            done += 1;
        }
    }
}

#[test]
fn closed_forms_agree_with_oracle() {
    let mut rng = StdRng::seed_from_u64(5);
    closed_matches_oracle(&mut rng, CaseKind::Case1, 5);
    closed_matches_oracle(&mut rng, CaseKind::Case2, 3);
}

#[test]
fn case1_limits_lower_the_degree() {
    let mut rng = StdRng::seed_from_u64(9);
    let mut s = random_spec(&mut rng, CaseKind::Case1);
    let u = MultiPoly::var(U);
    let k = MultiPoly::from_int(3);
    assert_eq!(phi_closed(&s, &k, &u).unwrap().degree(), 6);
    s.tau = int(0);
    s.lambda = int(0);
    let s = close_jacobi(&AlgebraSpec { derived: None, ..s });
    assert!(phi_closed(&s, &k, &u).unwrap().degree() <= 4);
    let mut q = s.clone();
    q.mu = MultiPoly::zero();
    q.alpha = MultiPoly::zero();
    let q = close_jacobi(&AlgebraSpec { derived: None, ..q });
    assert!(phi_closed(&q, &k, &u).unwrap().degree() <= 3);
}
