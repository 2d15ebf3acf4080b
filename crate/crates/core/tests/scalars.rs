mod field {
    use wha_core::scalars::*;
    use wha_core::Error;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::Rat(Q::new(n, d))
    }

    #[test]
    fn rational_sum() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let f = Field::cyclotomic(4);
        let z = f.zeta();
        assert_eq!(&z * &z, Scalar::from_int(-1));
    }

    #[test]
    fn zeta3_minimal_relation() {
        let f = Field::cyclotomic(3);
        let z = f.zeta();
        let s = &(&Scalar::one() + &z) + &(&z * &z);
        assert!(s.is_zero());
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mismatch_detected() {
        let a = Field::cyclotomic(3).zeta();
        let b = Field::cyclotomic(5).zeta();
        assert!(matches!(a.try_add(&b), Err(Error::FieldMismatch(_))));
    }

    #[test]
    fn display_parse_round_trip() {
        let f = Field::cyclotomic(5);
        let z = f.zeta();
        let x = &(&q(-1, 2) + &(&z * &q(3, 1))) + &(&(&z * &z) * &(&z * &q(-2, 7)));
        let s = x.to_string();
        assert_eq!(f.parse(&s).unwrap(), x);
        assert_eq!(f.parse("1 - z").unwrap(), &Scalar::one() - &z);
        assert_eq!(f.parse("z^5").unwrap(), Scalar::one());
        assert!(Field::rationals().parse("z").is_err());
    }
}

mod numeric {
    use wha_core::scalars::numeric::*;
    use wha_core::scalars::{Field, Scalar, Q};
    use wha_core::Error;
    use num_complex::Complex64;
    use num_traits::Signed;

    fn ball(fx: &Fixed, re: f64, im: f64) -> Ball {
        Ball { center: fx.from_c64(Complex64::new(re, im)), radius: 1e-20 }
    }

    #[test]
    fn rational_rounding() {
        let fx = Fixed::new(256);
        let x = reconstruct_exact(&ball(&fx, 0.5, 0.0), &Field::rationals(), 1_000_000, 256);
        assert_eq!(x.unwrap(), Scalar::from_q(Q::new(1, 2)));
    }

    #[test]
    fn zeta3_from_embedding() {
        let f = Field::cyclotomic(3);
        let emb = Embedding::new(&f, 1, 256);
        let b = Ball { center: emb.eval(&f.zeta()), radius: 1e-60 };
        assert_eq!(reconstruct_exact(&b, &f, 1_000_000, 256).unwrap(), f.zeta());
    }

    #[test]
    fn sqrt2_not_in_q_zeta3() {
        let fx = Fixed::new(256);
        // x^2 - 2 polished to full precision
        let coeffs = vec![fx.from_q(&Q::from_int(-2)), fx.zero(), fx.one()];
        let roots = isolate_roots(&fx, &coeffs);
        let pos = roots.into_iter().find(|b| b.center.re.is_positive()).unwrap();
        let r = reconstruct_exact(&pos, &Field::cyclotomic(3), 1_000_000, 256);
        assert!(matches!(r, Err(Error::ReconstructionFailed(_))));
    }

    #[test]
    fn roots_over_degree_four_field() {
        let f = Field::cyclotomic(5);
        let z = f.zeta();
        let z2 = &z * &z;
        // (x - ζ)(x - ζ²) = x² - (ζ+ζ²)x + ζ³
        let p = vec![&z2 * &z, -(&z + &z2), Scalar::one()];
        let mut roots = roots_in_field(&p, &f, &RootOptions::default()).unwrap();
        roots.sort_by_key(|r| r.to_string());
        let mut want = vec![z.clone(), z2.clone()];
        want.sort_by_key(|r| r.to_string());
        assert_eq!(roots, want);
    }

    #[test]
    fn irreducible_has_no_rational_roots() {
        let p = vec![Scalar::one(), Scalar::zero(), Scalar::one()];
        assert!(roots_in_field(&p, &Field::rationals(), &RootOptions::default())
            .unwrap()
            .is_empty());
        let roots = roots_in_field(&p, &Field::cyclotomic(4), &RootOptions::default()).unwrap();
        assert_eq!(roots.len(), 2);
    }
}

mod rational {
    use wha_core::scalars::Q;
    use num_bigint::BigInt;

    #[test]
    fn small_arithmetic() {
        assert_eq!(&Q::new(1, 2) + &Q::new(1, 3), Q::new(5, 6));
        assert_eq!(&Q::new(2, 4) * &Q::new(-3, 1), Q::new(-3, 2));
        assert_eq!(Q::new(3, -6), Q::new(-1, 2));
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Q::from_int(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Q::Big(..)));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back, Q::Small(..)));
    }

    #[test]
    fn parse_and_display() {
        let q: Q = "-6/8".parse().unwrap();
        assert_eq!(q.to_string(), "-3/4");
        assert!("1/0".parse::<Q>().is_err());
        assert!("x".parse::<Q>().is_err());
    }

    #[test]
    fn best_approximation_respects_bound() {
        let third = Q::new(1, 3);
        let x = &third + &Q::new(1, 1_000_000_000);
        let a = x.best_approximation(&BigInt::from(1000));
        assert_eq!(a, third);
        assert_eq!(Q::new(5, 7).best_approximation(&BigInt::from(7)), Q::new(5, 7));
    }
}

mod axioms {
    use proptest::prelude::*;
    use wha_core::scalars::{Field, Scalar, Q};

    fn element(field: Field) -> impl Strategy<Value = Scalar> {
        let d = field.degree();
        prop::collection::vec((-50i64..50, 1i64..20), d)
            .prop_map(move |cs| field.from_coords(cs.into_iter().map(|(n, q)| Q::new(n, q)).collect()).unwrap())
    }

    fn triple() -> impl Strategy<Value = (Field, Scalar, Scalar, Scalar)> {
        prop::sample::select(vec![1u32, 3, 4, 5, 8, 12]).prop_flat_map(|n| {
            let f = if n == 1 { Field::rationals() } else { Field::cyclotomic(n) };
            (Just(f.clone()), element(f.clone()), element(f.clone()), element(f))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_laws((f, a, b, c) in triple()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
            let renormalized = f.from_coords(a.coords(f.degree())).unwrap();
            prop_assert_eq!(&renormalized, &a);
            prop_assert_eq!(f.parse(&a.to_string()).unwrap(), a);
        }
    }
}
