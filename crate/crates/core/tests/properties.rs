use proptest::prelude::*;
use superch::poly::{parse_spoly, TruncSeries};
use superch::ring::{rat, ratio};
use superch::supermatrix::random_supermatrix;
use superch::{Blade, Matrix, Multivector, Ring, SPoly};

const N: usize = 4;

fn multivector(max_terms: usize) -> impl Strategy<Value = Multivector> {
    prop::collection::vec((0u64..(1 << N), -5i64..=5), 0..max_terms).prop_map(|terms| {
        Multivector::from_terms(
            N,
            terms
                .into_iter()
                .map(|(m, c)| (Blade::from_mask(m).indices(), rat(c))),
        )
        .unwrap()
    })
}

fn even_multivector() -> impl Strategy<Value = Multivector> {
    prop::collection::vec((0u64..(1 << N), -5i64..=5), 0..5).prop_map(|terms| {
        let even = terms.into_iter().filter(|(m, _)| m.count_ones() % 2 == 0);
        Multivector::from_terms(
            N,
            even.map(|(m, c)| (Blade::from_mask(m).indices(), rat(c))),
        )
        .unwrap()
    })
}

fn odd_multivector() -> impl Strategy<Value = Multivector> {
    prop::collection::vec((0u64..(1 << N), -5i64..=5), 0..5).prop_map(|terms| {
        let odd = terms.into_iter().filter(|(m, _)| m.count_ones() % 2 == 1);
        Multivector::from_terms(N, odd.map(|(m, c)| (Blade::from_mask(m).indices(), rat(c))))
            .unwrap()
    })
}

fn spoly(symbols: usize) -> impl Strategy<Value = SPoly> {
    prop::collection::vec(
        (prop::collection::vec(0u32..3, symbols), -4i64..=4, 1i64..=3),
        0..5,
    )
    .prop_map(move |terms| {
        SPoly::from_terms(symbols, terms.into_iter().map(|(e, n, d)| (e, ratio(n, d)))).unwrap()
    })
}

fn even_matrix(k: usize) -> impl Strategy<Value = Matrix<Multivector>> {
    prop::collection::vec(even_multivector(), k * k).prop_map(move |v| {
        let mut it = v.into_iter();
        Matrix::from_fn(k, k, &Multivector::zero(N), |_, _| it.next().unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn grassmann_ring_axioms(a in multivector(6), b in multivector(6), c in multivector(6)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        prop_assert_eq!(a.mul(&Multivector::one(N)), a);
    }

    #[test]
    fn odd_elements_anticommute(x in odd_multivector(), y in odd_multivector(), e in even_multivector()) {
        prop_assert_eq!(x.mul(&y), y.mul(&x).neg());
        prop_assert!(x.mul(&x).is_empty());
        prop_assert_eq!(e.mul(&x), x.mul(&e));
    }

    #[test]
    fn souls_are_nilpotent(a in multivector(8)) {
        prop_assert!(a.soul().pow(N as u32 + 1).is_empty());
    }

    #[test]
    fn even_inverse(a in even_multivector(), body in 1i64..7) {
        let x = a.soul().add(&Multivector::scalar(N, rat(body)));
        let inv = x.even_inverse().unwrap();
        prop_assert_eq!(x.mul(&inv), Multivector::one(N));
        prop_assert_eq!(inv.mul(&x), Multivector::one(N));
    }

    #[test]
    fn multivector_json_round_trip(a in multivector(6)) {
        prop_assert_eq!(Multivector::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn polynomial_division_inverts_product(a in spoly(3), b in spoly(3)) {
        prop_assume!(!b.is_empty());
        prop_assert_eq!(a.mul(&b).divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn polynomial_sqrt_of_square(a in spoly(3)) {
        let r = a.mul(&a).sqrt_exact().unwrap();
        prop_assert!(r == a || r == a.neg());
    }

    #[test]
    fn polynomial_text_round_trip(a in spoly(3)) {
        prop_assert_eq!(parse_spoly(&a.to_string(), 3).unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<SPoly>(&json).unwrap(), a);
    }

    #[test]
    fn sign_flip_is_a_ring_involution(a in spoly(3), b in spoly(3)) {
        prop_assert_eq!(a.flip_signs().flip_signs(), a.clone());
        prop_assert_eq!(a.mul(&b).flip_signs(), a.flip_signs().mul(&b.flip_signs()));
    }

    #[test]
    fn truncated_product_matches_full(a in prop::collection::vec(spoly(2), 1..5), b in prop::collection::vec(spoly(2), 1..5)) {
        let order = 3;
        let zero = SPoly::zero(2);
        let ta = TruncSeries::new(a.clone(), order, &zero);
        let tb = TruncSeries::new(b.clone(), order, &zero);
        let prod = ta.mul(&tb).unwrap();
        for k in 0..=order {
            let mut full = zero.clone();
            for i in 0..a.len() {
                if k >= i && k - i < b.len() {
                    full = full.add(&a[i].mul(&b[k - i]));
                }
            }
            prop_assert_eq!(prod.coeff(k), &full);
        }
    }

    #[test]
    fn determinant_is_multiplicative(a in even_matrix(3), b in even_matrix(3)) {
        let ab = a.try_mul(&b).unwrap();
        prop_assert_eq!(ab.det().unwrap(), a.det().unwrap().mul(&b.det().unwrap()));
    }

    #[test]
    fn adjugate_law(a in even_matrix(3)) {
        let scaled = Matrix::identity(3, &Multivector::zero(N)).scale_left(&a.det().unwrap());
        let adj = a.adjugate().unwrap();
        prop_assert_eq!(adj.try_mul(&a).unwrap(), scaled.clone());
        prop_assert_eq!(a.try_mul(&adj).unwrap(), scaled);
    }

    #[test]
    fn supertrace_is_cyclic(s1 in 0u64..1000, s2 in 0u64..1000, p in 1usize..3, q in 1usize..3) {
        let m = random_supermatrix(p, q, N, s1, 3).unwrap();
        let k = random_supermatrix(p, q, N, s2, 3).unwrap();
        prop_assert_eq!(m.mat_mul(&k).unwrap().supertrace(), k.mat_mul(&m).unwrap().supertrace());
        let sum = m.mat_add(&k).unwrap().supertrace();
        prop_assert_eq!(sum, m.supertrace().add(&k.supertrace()));
    }

    #[test]
    fn powers_add(seed in 0u64..1000, i in 0u32..4, j in 0u32..4) {
        let m = random_supermatrix(2, 1, N, seed, 3).unwrap();
        prop_assert_eq!(m.mat_pow(i).mat_mul(&m.mat_pow(j)).unwrap(), m.mat_pow(i + j));
    }

    #[test]
    fn supermatrix_json_round_trip(seed in 0u64..1000) {
        let m = random_supermatrix(2, 2, N, seed, 3).unwrap();
        prop_assert_eq!(superch::SuperMatrix::from_json(&m.to_json()).unwrap(), m);
    }
}
