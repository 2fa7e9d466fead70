use proptest::prelude::*;
use superyang::arith::{rational_reconstruct, series_of_quotient};
use superyang::hw::{drinfeld_of_module, solve_shift_quotient};
use superyang::rep::{shift_rep, twist_rep, vector_rep};
use superyang::superlin::SuperMatrix;
use superyang::{GradedSpace, Poly, Rat, RationalFunction};

fn rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| Rat::new(p, q))
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rat(), 0..=max_deg + 1).prop_map(Poly::new)
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun() -> impl Strategy<Value = RationalFunction> {
    (poly(3), nonzero_poly(2)).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn monic_with_roots(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rat(), 0..=max_deg).prop_map(|r| Poly::from_roots(&r))
}

/// f(u) with f(infinity) = 1 and no roots or poles far from the origin.
fn twist_series() -> impl Strategy<Value = RationalFunction> {
    (rat(), rat()).prop_map(|(a, b)| {
        RationalFunction::new(Poly::linear_root(&a), Poly::linear_root(&b)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ratfun_ring_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &RationalFunction::one(), a.clone());
    }

    #[test]
    fn ratfun_reduced_form(a in ratfun()) {
        prop_assert!(a.den().is_monic());
        prop_assert!(Poly::gcd(a.num(), a.den()).is_one() || a.num().is_zero());
    }

    #[test]
    fn shift_is_a_ring_automorphism(a in ratfun(), b in ratfun(), s in rat(), t in rat()) {
        prop_assert_eq!((&a * &b).shift_arg(&s), &a.shift_arg(&s) * &b.shift_arg(&s));
        prop_assert_eq!((&a + &b).shift_arg(&s), &a.shift_arg(&s) + &b.shift_arg(&s));
        prop_assert_eq!(a.shift_arg(&s).shift_arg(&t), a.shift_arg(&(&s + &t)));
        prop_assert_eq!(a.shift_arg(&s).shift_arg(&-s.clone()), a);
    }

    #[test]
    fn series_of_product(a in ratfun(), b in ratfun()) {
        let order = 7;
        let (sa, sb) = match (a.series_expand(order), b.series_expand(order)) {
            (Ok(x), Ok(y)) => (x, y),
            _ => return Ok(()),
        };
        prop_assume!(a.num().deg0() <= a.den().deg0() && b.num().deg0() <= b.den().deg0());
        let sab = (&a * &b).series_expand(order).unwrap();
        prop_assert_eq!(sa.mul_truncated(&sb), sab);
    }

    #[test]
    fn series_matches_quotient(a in ratfun()) {
        prop_assume!(a.num().deg0() <= a.den().deg0());
        prop_assert_eq!(a.series_expand(5).unwrap(), series_of_quotient(a.num(), a.den(), 5).unwrap());
    }

    #[test]
    fn reconstruct_round_trip(a in ratfun()) {
        let (p, q) = (a.num().deg0(), a.den().deg0());
        let samples: Vec<(Rat, Rat)> = (0..200i64)
            .map(|k| Rat::new(2 * k + 1, 3))
            .filter_map(|x| a.eval(&x).map(|y| (x, y)))
            .take(p + q + 2)
            .collect();
        let back = rational_reconstruct(&samples, p, q).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn shift_quotient_round_trip(p in monic_with_roots(4)) {
        let q = RationalFunction::new(p.shift(&Rat::one()), p.clone()).unwrap();
        let got = solve_shift_quotient(q.num(), q.den());
        prop_assert_eq!(got, Some(p));
    }

    #[test]
    fn super_transpose_is_an_involution(n in 1usize..=3, seed in prop::collection::vec(-9i64..=9, 49)) {
        let s = GradedSpace::new(n).unwrap();
        let d = s.dim();
        let entries: Vec<Rat> = seed.iter().cycle().take(d * d).map(|&x| Rat::from(x)).collect();
        let a = SuperMatrix::from_entries(&s, entries);
        prop_assert_eq!(a.super_transpose().super_transpose(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn drinfeld_data_ignores_twists(f in twist_series()) {
        let v = vector_rep(&GradedSpace::new(1).unwrap());
        let base = drinfeld_of_module(&v).unwrap();
        let t = twist_rep(&v, &f).unwrap();
        let twisted = drinfeld_of_module(&t).unwrap();
        prop_assert!(twisted.passed());
        prop_assert_eq!(twisted.drinfeld, base.drinfeld);
    }

    #[test]
    fn drinfeld_data_shifts_with_the_module(a in rat()) {
        let v = vector_rep(&GradedSpace::new(2).unwrap());
        let base = drinfeld_of_module(&v).unwrap();
        let shifted = drinfeld_of_module(&shift_rep(&v, &a)).unwrap();
        prop_assert!(shifted.passed());
        let want: Vec<Poly> = base.drinfeld.tuple().unwrap().polys.iter().map(|p| p.shift(&a)).collect();
        prop_assert_eq!(&shifted.drinfeld.tuple().unwrap().polys, &want);
    }
}
