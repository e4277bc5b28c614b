use super::*;

fn q() -> Field {
    Field::rationals()
}

/// The 6A structure constant `b_0 z`, written out independently of the builder.
#[test]
fn b0_times_z() {
    let e = build_6a_generic(&q()).unwrap();
    let f = e.algebra.field();
    let a = f.var("alpha").unwrap();
    let gamma = a.try_div(&(&f.int(8) * &(&(&f.int(2) * &a) - &f.one()))).unwrap();
    let g = &(&f.int(2) * &gamma) * &(&(&f.int(3) * &a) - &f.int(2));
    let mut expected = vec![f.zero(); 8];
    expected[2] = &f.int(2) * &g;
    expected[0] = -g.clone();
    expected[4] = -g.clone();
    expected[7] = g;
    assert_eq!(e.algebra.product(b6(0), Z6).entries(), expected.as_slice());
}

#[test]
fn z_squared() {
    let e = build_6a_generic(&q()).unwrap();
    let f = e.algebra.field();
    let a = f.var("alpha").unwrap();
    // (2 gamma/alpha)(alpha + 2)(3 alpha - 2) = (alpha + 2)(3 alpha - 2)/(4(2 alpha - 1))
    let k = (&(&a + &f.int(2)) * &(&(&f.int(3) * &a) - &f.int(2)))
        .try_div(&(&f.int(4) * &(&(&f.int(2) * &a) - &f.one())))
        .unwrap();
    assert_eq!(e.algebra.product(Z6, Z6), &e.algebra.basis(Z6).scale(&k));
}

#[test]
fn third_gives_alpha_four_beta() {
    let third = q().rational(1, 3).unwrap();
    let beta = beta_6a(&third).unwrap();
    assert_eq!(beta, q().rational(1, 12).unwrap());
    assert_eq!(&q().int(4) * &beta, third);
    build_6a(&third).unwrap();
}

#[test]
fn excluded_parameters() {
    for (n, d) in [(0, 1), (1, 1), (1, 2), (4, 9)] {
        let err = build_6a(&q().rational(n, d).unwrap()).unwrap_err();
        assert!(matches!(err, CatalogError::InvalidParameter(_)), "{n}/{d}: {err:?}");
    }
    assert!(build_3c(&q().zero()).is_err());
    assert!(build_3c(&q().one()).is_err());
}

#[test]
fn six_a_over_prime_field() {
    let f = Field::prime(11).unwrap();
    let e = build_6a(&f.int(3)).unwrap();
    assert_eq!(e.algebra.dim(), 8);
    let fam = e.family().unwrap();
    assert_eq!(fam.period(), 6);
}

#[test]
fn three_c_identity_and_products() {
    let e = build_3c_generic(&q()).unwrap();
    let id = identity_3c(&e).unwrap();
    assert_eq!(e.algebra.identity_of(&e.axis_vectors()).unwrap(), Some(id.clone()));
    for x in e.axis_vectors() {
        assert_eq!(e.algebra.multiply(&id, &x).unwrap(), x);
    }
    let f = e.algebra.field();
    let eta = f.var("eta").unwrap();
    let (a, b) = (e.axis(0), e.axis(1));
    let ab = e.algebra.multiply(&a, &b).unwrap();
    let aba = e.algebra.multiply(&ab, &a).unwrap();
    // a(a + b - c) = a + ab - ac = a + eta/2 (a + b - c) - eta/2 (a + c - b) = a + eta (b - c)
    let h = eta.try_div(&f.int(2)).unwrap();
    let expected = a.add(&b.sub(&e.axis(2)).scale(&eta)).scale(&h);
    assert_eq!(aba, expected);
    let minus_one = build_3c(&q().int(-1)).unwrap();
    assert!(identity_3c(&minus_one).is_err());
}

#[test]
fn two_b_relations() {
    let e = build_2b_generic(&q()).unwrap();
    assert!(e.algebra.multiply(&e.axis(0), &e.axis(1)).unwrap().is_zero());
    assert_eq!(e.family().unwrap().axet().kind(), AxetKind::Regular(2));
}

#[test]
fn build_by_name() {
    assert_eq!(build("6A", &q(), None).unwrap().algebra.dim(), 8);
    assert!(matches!(build("4A", &q(), None), Err(CatalogError::UnknownEntry(_))));
}
