use super::*;

use proptest::prelude::*;

fn q() -> Field {
    Field::rationals()
}

fn qm(rows: &[&[i64]]) -> Matrix {
    let f = q();
    Matrix::from_rows(&f, rows.iter().map(|r| r.iter().map(|&x| f.int(x)).collect()).collect()).unwrap()
}

fn qv(xs: &[i64]) -> Vector {
    let f = q();
    Vector::new(&f, xs.iter().map(|&x| f.int(x)).collect()).unwrap()
}

#[test]
fn nullspace_of_identity_and_zero() {
    assert!(nullspace(&Matrix::identity(&q(), 3)).is_empty());
    let ns = nullspace(&Matrix::zero(&q(), 2, 2));
    assert_eq!(ns, vec![qv(&[1, 0]), qv(&[0, 1])]);
}

#[test]
fn nullspace_canonical_basis() {
    let m = qm(&[&[1, 2, 3], &[2, 4, 6]]);
    let ns = nullspace(&m);
    assert_eq!(ns, vec![qv(&[-2, 1, 0]), qv(&[-3, 0, 1])]);
}

#[test]
fn solve_trivial_cases() {
    let b = qv(&[3, -1, 4]);
    assert_eq!(solve(&Matrix::identity(&q(), 3), &b).unwrap(), b);
    assert_eq!(solve(&Matrix::zero(&q(), 3, 3), &b), Err(LinalgError::NoSolution));
    let f5 = Field::prime(5).unwrap();
    let other = Vector::zero(&f5, 3);
    assert!(matches!(solve(&Matrix::identity(&q(), 3), &other), Err(LinalgError::DescriptorMismatch(..))));
}

#[test]
fn span_membership_units() {
    let e1 = qv(&[1, 0]);
    let e2 = qv(&[0, 1]);
    assert_eq!(span_membership(&[e1.clone()], &e1).unwrap(), Membership::InSpan(vec![q().one()]));
    match span_membership(&[e1.clone()], &e2).unwrap() {
        Membership::NotInSpan { certificate } => {
            assert!(certificate.dot(&e1).is_zero());
            assert!(!certificate.dot(&e2).is_zero());
        }
        other => panic!("expected NotInSpan, got {other:?}"),
    }
    // Empty basis: only zero is a member.
    assert!(span_membership(&[], &Vector::zero(&q(), 2)).unwrap().is_member());
    assert!(!span_membership(&[], &e2).unwrap().is_member());
}

#[test]
fn inverse_roundtrip() {
    let m = qm(&[&[2, 1], &[7, 4]]);
    let inv = m.inverse().unwrap();
    assert!(m.mul(&inv).unwrap().is_identity());
    assert!(qm(&[&[1, 2], &[2, 4]]).inverse().is_none());
}

#[test]
fn works_over_function_field() {
    let f = Field::function(&q(), &["alpha"]).unwrap();
    let a = f.var("alpha").unwrap();
    // [[alpha, 1], [alpha^2, alpha]] has rank 1.
    let m = Matrix::from_rows(&f, vec![vec![a.clone(), f.one()], vec![&a * &a, a.clone()]]).unwrap();
    assert_eq!(m.rank(), 1);
    let ns = nullspace(&m);
    assert_eq!(ns.len(), 1);
    assert!(m.mul_vec(&ns[0]).unwrap().is_zero());
}

fn arb_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-3i64..=3, r * c)))
}

fn build(r: usize, c: usize, xs: &[i64]) -> Matrix {
    let f = q();
    Matrix::from_rows(&f, (0..r).map(|i| (0..c).map(|j| f.int(xs[i * c + j])).collect()).collect()).unwrap()
}

proptest! {
    #[test]
    fn kernel_vectors_are_annihilated((r, c, xs) in arb_matrix()) {
        let m = build(r, c, &xs);
        let ns = nullspace(&m);
        for n in &ns {
            prop_assert!(m.mul_vec(n).unwrap().is_zero());
        }
        prop_assert_eq!(m.rank() + ns.len(), c);
    }

    #[test]
    fn solve_roundtrip((r, c, xs) in arb_matrix(), ys in prop::collection::vec(-3i64..=3, 4)) {
        let m = build(r, c, &xs);
        let x = Vector::new(&q(), ys[..c].iter().map(|&y| q().int(y)).collect()).unwrap();
        let b = m.mul_vec(&x).unwrap();
        let sol = solve(&m, &b).unwrap();
        prop_assert_eq!(m.mul_vec(&sol).unwrap(), b);
    }

    #[test]
    fn rref_ignores_row_order((r, c, xs) in arb_matrix(), seed in 0usize..24) {
        let m = build(r, c, &xs);
        let mut order: Vec<usize> = (0..r).collect();
        order.rotate_left(seed % r);
        if seed % 2 == 1 { order.reverse(); }
        let permuted = Matrix::from_rows(&q(), order.iter().map(|&i| m.row(i).into_entries()).collect()).unwrap();
        prop_assert_eq!(m.rref(), permuted.rref());
        prop_assert_eq!(nullspace(&m), nullspace(&permuted));
    }
}
