mod commalg {
    use wha_core::linalg::*;
    use wha_core::scalars::{Field, Scalar};
    use wha_core::Error;

    fn quadratic(field: Field, a: i64) -> Algebra {
        let table = vec![SVec::unit(0), SVec::unit(1), SVec::unit(1), SVec::single(0, Scalar::from_int(a))];
        Algebra::new(field, 2, table, SVec::unit(0)).unwrap()
    }

    #[test]
    fn splits_x_squared_minus_one() {
        let z = quadratic(Field::rationals(), 1);
        let idem = split_commutative(&z, &SplitOptions::default()).unwrap();
        assert_eq!(idem.len(), 2);
        for e in &idem {
            assert_eq!(&z.mul(e, e), e);
        }
        assert!(z.mul(&idem[0], &idem[1]).is_zero());
        assert_eq!(&idem[0].add(&idem[1]), z.unit());
    }

    #[test]
    fn x_squared_plus_one_needs_i() {
        let over_q = quadratic(Field::rationals(), -1);
        assert!(matches!(split_commutative(&over_q, &SplitOptions::default()), Err(Error::NotSplit(_))));
        let over_i = quadratic(Field::cyclotomic(4), -1);
        assert_eq!(split_commutative(&over_i, &SplitOptions::default()).unwrap().len(), 2);
    }

    #[test]
    fn nilpotent_is_rejected() {
        let z = quadratic(Field::rationals(), 0);
        assert!(matches!(split_commutative(&z, &SplitOptions::default()), Err(Error::NotSemisimple(_))));
    }

    #[test]
    fn product_of_fields() {
        // k × k × k with componentwise product.
        let table = (0..9).map(|t| if t / 3 == t % 3 { SVec::unit(t % 3) } else { SVec::zero() }).collect();
        let unit = SVec::from_terms((0..3).map(|i| (i, Scalar::one())));
        let z = Algebra::new(Field::rationals(), 3, table, unit).unwrap();
        let mut idem = split_commutative(&z, &SplitOptions::default()).unwrap();
        idem.sort_by_key(|e| e.leading().map(|(i, _)| *i));
        assert_eq!(idem, (0..3).map(SVec::unit).collect::<Vec<_>>());
    }
}

mod algebra {
    use wha_core::linalg::*;
    use wha_core::scalars::{Field, Scalar};

    /// `k[x]/(x² - a)` in the basis `1, x`.
    fn quadratic(field: Field, a: i64) -> Algebra {
        let s = |c: i64| Scalar::from_int(c);
        let table = vec![SVec::unit(0), SVec::unit(1), SVec::unit(1), SVec::single(0, s(a))];
        Algebra::new(field, 2, table, SVec::unit(0)).unwrap()
    }

    #[test]
    fn quadratic_algebras() {
        let a = quadratic(Field::rationals(), 1);
        assert!(a.associativity_failure().is_none());
        assert!(a.unit_failure().is_none());
        assert!(a.is_commutative());
        assert_eq!(a.center().dim(), 2);
        assert!(a.is_semisimple());
        let nil = quadratic(Field::rationals(), 0);
        assert_eq!(nil.trace_radical().dim(), 1);
    }

    #[test]
    fn matrix_algebra_center() {
        // M_2 with e_{ij} at index 2i + j.
        let table = (0..16)
            .map(|t| {
                let (a, b) = (t / 4, t % 4);
                let (i, j, k, l) = (a / 2, a % 2, b / 2, b % 2);
                if j == k { SVec::unit(2 * i + l) } else { SVec::zero() }
            })
            .collect();
        let unit = SVec::from_terms([(0, Scalar::one()), (3, Scalar::one())]);
        let m2 = Algebra::new(Field::rationals(), 4, table, unit).unwrap();
        assert!(m2.associativity_failure().is_none());
        assert_eq!(m2.center().dim(), 1);
        assert!(m2.is_semisimple());
        assert!(!m2.is_commutative());
    }
}

mod matrix {
    use wha_core::linalg::*;
    use wha_core::Scalar;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_dense_rows(
            &rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(3).kernel().dim(), 0);
        assert_eq!(Matrix::zeros(2, 5).kernel().dim(), 5);
        let k = m(&[&[1, 1, 0], &[0, 0, 1]]).kernel();
        assert_eq!(k.dim(), 1);
        let want = SVec::from_terms([(0, Scalar::one()), (1, Scalar::from_int(-1))]);
        assert_eq!(k.basis()[0], want);
    }

    #[test]
    fn inverse_and_compose() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.compose(&inv), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn transpose_and_kron() {
        let a = m(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.transpose().transpose(), a);
        let k = a.kron(&Matrix::identity(2));
        assert_eq!(k.entry(2, 0), Scalar::from_int(3));
        assert_eq!(k.trace(), Scalar::from_int(10));
    }
}

mod tensor {
    use wha_core::linalg::tensor::*;
    use wha_core::linalg::*;
    use wha_core::Scalar;

    #[test]
    fn radix_round_trip() {
        let dims = [2, 3, 4];
        for i in 0..24 {
            assert_eq!(encode(&decode(i, &dims), &dims), i);
        }
    }

    #[test]
    fn legs_and_permutations() {
        let dims = [2, 3];
        let v = SVec::unit(encode(&[1, 2], &dims));
        let swapped = permute(&v, &dims, &[1, 0]);
        assert_eq!(swapped, SVec::unit(encode(&[2, 1], &[3, 2])));
        let m = Matrix::from_columns(5, vec![SVec::unit(0), SVec::unit(4), SVec::unit(3)]);
        let w = apply_legs(&v, &dims, &[(1, &m)]);
        assert_eq!(w, SVec::unit(encode(&[1, 3], &[2, 5])));
        let r = Matrix::from_dense_rows(&[vec![Scalar::one(), Scalar::from_int(2), Scalar::zero()]]);
        assert_eq!(reshape(&flatten(&r), 1, 3), r);
    }
}

mod subspace {
    use wha_core::linalg::*;
    use wha_core::Scalar;
    use wha_core::Error;

    fn v(xs: &[i64]) -> SVec {
        SVec::from_dense(&xs.iter().map(|&x| Scalar::from_int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn planes_meet_in_axis() {
        let xy = Subspace::span(3, [v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let yz = Subspace::span(3, [v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let meet = xy.intersect(&yz).unwrap();
        assert_eq!(meet, Subspace::span(3, [v(&[0, 1, 0])]));
        assert_eq!(xy.sum(&xy).unwrap(), xy);
        assert!(Subspace::full(3).contains_space(&xy));
        let s = xy.sum(&yz).unwrap();
        assert_eq!(xy.dim() + yz.dim(), s.dim() + meet.dim());
    }

    #[test]
    fn canonical_form() {
        let a = Subspace::span(3, [v(&[1, 2, 3]), v(&[2, 4, 7])]);
        let b = Subspace::span(3, [v(&[0, 0, 5]), v(&[3, 6, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.coords(&v(&[2, 4, 1])).unwrap(), v(&[2, 1]));
    }

    #[test]
    fn ambient_mismatch() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert_eq!(a.sum(&b), Err(Error::AmbientMismatch(2, 3)));
    }

    #[test]
    fn quotient_round_trip() {
        let u = Subspace::span(3, [v(&[1, 1, 0])]);
        let q = u.quotient();
        assert_eq!(q.dim(), 2);
        assert!(q.project(&v(&[1, 1, 0])).is_zero());
        let x = v(&[0, 3, 4]);
        assert_eq!(q.project(&q.lift(&q.project(&x))), q.project(&x));
    }
}

mod poly {
    use wha_core::linalg::poly::*;
    use wha_core::linalg::{Matrix, SVec};
    use wha_core::Scalar;

    fn s(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    fn diag(xs: &[i64]) -> Matrix {
        let n = xs.len();
        Matrix::from_columns(n, (0..n).map(|i| SVec::single(i, s(xs[i]))).collect())
    }

    #[test]
    fn min_poly_examples() {
        assert_eq!(min_poly(&Matrix::identity(3)), vec![s(-1), s(1)]);
        assert_eq!(min_poly(&diag(&[1, 2])), vec![s(2), s(-3), s(1)]);
        let jordan = Matrix::from_columns(2, vec![SVec::zero(), SVec::unit(0)]);
        assert_eq!(min_poly(&jordan), vec![s(0), s(0), s(1)]);
    }

    #[test]
    fn gcd_and_squarefree() {
        // (x-1)^2 (x+2)
        let p = mul(&mul(&[s(-1), s(1)], &[s(-1), s(1)]), &[s(2), s(1)]);
        assert!(!is_squarefree(&p));
        assert_eq!(gcd(&p, &derivative(&p)), vec![s(-1), s(1)]);
        assert!(is_squarefree(&[s(-2), s(0), s(1)]));
    }
}
