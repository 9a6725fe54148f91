use num_traits::Zero;
use proptest::prelude::*;
use quartic_core::algebra::{close_jacobi, AlgebraSpec, Mode};
use quartic_core::poisson::bracket;
use quartic_core::ratcore::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn poly_in(names: &'static [&'static str], max_exp: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, names.len()), rational()), 0..=max_terms)
        .prop_map(move |ts| MultiPoly::from_terms(names, ts))
}

fn xy() -> impl Strategy<Value = MultiPoly> {
    poly_in(&["x", "y"], 3, 5)
}

fn abc() -> impl Strategy<Value = MultiPoly> {
    poly_in(&["A", "B", "C"], 2, 3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(p in xy(), q in xy(), r in xy()) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &MultiPoly::one(), p.clone());
    }

    #[test]
    fn substitution_is_a_homomorphism(p in xy(), q in xy(), r in xy()) {
        let b = [("x", r.clone())];
        prop_assert_eq!((&p * &q).subs(&b), &p.subs(&b) * &q.subs(&b));
        prop_assert_eq!((&p + &q).subs(&b), &p.subs(&b) + &q.subs(&b));
    }

    #[test]
    fn exact_division(p in xy(), q in xy()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).div_exact(&q), Some(p.clone()));
    }

    #[test]
    fn root_count_of_split_polynomial(rs in prop::collection::vec(rational(), 1..6), extra in 0i64..3) {
        let mut f = UniPoly::one();
        for r in &rs {
            f = &f * &UniPoly::linear_root(r);
        }
        // x² + extra + 1 adds no real root.
        f = &f * &UniPoly::from_ints(&[extra + 1, 0, 1]);
        let mut distinct = rs.clone();
        distinct.sort();
        distinct.dedup();
        let roots = real_roots(&f, &int(-20), &int(20)).unwrap();
        prop_assert_eq!(roots.len(), distinct.len());
        for (got, want) in roots.iter().zip(&distinct) {
            prop_assert!(got.lo <= *want && *want <= got.hi);
            if let Some(e) = &got.exact {
                prop_assert_eq!(e, want);
            }
        }
        let open = distinct.iter().filter(|r| **r > int(-1) && **r < int(1)).count();
        prop_assert_eq!(count_roots_open(&f, &int(-1), &int(1)).unwrap(), open);
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(
        a in prop::collection::vec(rational(), 2..4),
        b in prop::collection::vec(rational(), 2..4),
        shared in any::<bool>(),
        r in rational(),
    ) {
        let (mut f, mut g) = (UniPoly::new(a), UniPoly::new(b));
        prop_assume!(f.degree().unwrap_or(0) > 0 && g.degree().unwrap_or(0) > 0);
        if shared {
            f = &f * &UniPoly::linear_root(&r);
            g = &g * &UniPoly::linear_root(&r);
        }
        let lift = |p: &UniPoly| PolyOverPoly::new(p.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect());
        let res = resultant(&lift(&f), &lift(&g)).unwrap();
        let common = f.gcd(&g).degree().unwrap_or(0) > 0;
        prop_assert_eq!(res.is_zero(), common);
        if shared {
            prop_assert!(res.is_zero());
        }
    }

    #[test]
    fn resultant_commutes_with_specialization(p in poly_in(&["u", "E"], 2, 4), q in poly_in(&["u", "E"], 2, 4), e in rational()) {
        let (pp, qq) = (PolyOverPoly::from_multi(&p, "u", "E").unwrap(), PolyOverPoly::from_multi(&q, "u", "E").unwrap());
        prop_assume!(!pp.is_zero() && !qq.is_zero());
        let (dp, dq) = (pp.degree().unwrap(), qq.degree().unwrap());
        let (sp, sq) = (pp.eval_inner(&e), qq.eval_inner(&e));
        prop_assume!(sp.degree() == Some(dp) && sq.degree() == Some(dq));
        let res = resultant(&pp, &qq).unwrap();
        let lift = |p: &UniPoly| PolyOverPoly::new(p.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect());
        let direct = resultant(&lift(&sp), &lift(&sq)).unwrap();
        prop_assert_eq!(res.eval(&e), direct.eval(&Rational::zero()));
    }
}

fn classical_spec(k: [i64; 8]) -> AlgebraSpec {
    let mut s = AlgebraSpec::zero(Mode::Classical);
    s.tau = rat(k[0], 2);
    s.beta = rat(k[1], 3);
    s.lambda = int(k[2]);
    s.alpha = MultiPoly::from_int(k[3]);
    s.gamma = MultiPoly::from_int(k[4]);
    s.delta = MultiPoly::from_int(k[5]);
    s.epsilon = MultiPoly::from_int(k[6]);
    s.mu = MultiPoly::from_int(k[7]);
    close_jacobi(&s)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn bracket_antisymmetry_and_leibniz(k in prop::array::uniform8(-3i64..=3), p in abc(), q in abc(), r in abc()) {
        let s = classical_spec(k);
        let pq = bracket(&p, &q, &s).unwrap();
        prop_assert_eq!(&pq, &-&bracket(&q, &p, &s).unwrap());
        let lhs = bracket(&p, &(&q * &r), &s).unwrap();
        let rhs = &(&pq * &r) + &(&q * &bracket(&p, &r, &s).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobi_on_random_triples(k in prop::array::uniform8(-3i64..=3), p in abc(), q in abc(), r in abc()) {
        let s = classical_spec(k);
        let br = |x: &MultiPoly, y: &MultiPoly| bracket(x, y, &s).unwrap();
        let sum = &(&br(&p, &br(&q, &r)) + &br(&q, &br(&r, &p))) + &br(&r, &br(&p, &q));
        prop_assert!(sum.is_zero());
    }
}
