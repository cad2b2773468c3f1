use gl3sixj::poly::var;
use gl3sixj::{GroupId, MultiIndex6, Rational, SparsePoly};
use proptest::prelude::*;

const A: GroupId = GroupId::A;
const B: GroupId = GroupId::B;

fn exponent() -> impl Strategy<Value = MultiIndex6> {
    prop::array::uniform6(0i32..3).prop_map(MultiIndex6)
}

fn coefficient() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn poly_in(groups: &'static [GroupId]) -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec((prop::collection::vec(exponent(), groups.len()), coefficient()), 0..6).prop_map(
        move |terms| {
            terms.into_iter().fold(SparsePoly::zero(groups), |acc, (es, c)| {
                let parts: Vec<(GroupId, MultiIndex6)> = groups.iter().copied().zip(es).collect();
                &acc + &SparsePoly::monomial(&parts, c)
            })
        },
    )
}

fn generator() -> impl Strategy<Value = (u8, u8)> {
    (1u8..=3, 1u8..=3)
}

proptest! {
    #[test]
    fn pairing_is_symmetric_and_bilinear(
        f in poly_in(&[A, B]),
        g in poly_in(&[A, B]),
        h in poly_in(&[A, B]),
        c in coefficient(),
    ) {
        prop_assert_eq!(f.pairing(&g).unwrap(), g.pairing(&f).unwrap());
        let lhs = (&f.scale(&c) + &g).pairing(&h).unwrap();
        let rhs = c * f.pairing(&h).unwrap() + g.pairing(&h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pairing_is_positive(f in poly_in(&[A])) {
        let n = f.pairing(&f).unwrap();
        prop_assert_eq!(n > Rational::from_integer(0.into()), !f.is_zero());
    }

    #[test]
    fn generators_are_adjoint(f in poly_in(&[A, B]), g in poly_in(&[A, B]), (i, j) in generator()) {
        let lhs = f.apply_eij_diagonal(i, j).unwrap().pairing(&g).unwrap();
        let rhs = f.pairing(&g.apply_eij_diagonal(j, i).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn generators_satisfy_gl3_relations(f in poly_in(&[A, B]), (i, j) in generator(), (k, l) in generator()) {
        // [E_ij, E_kl] = δ_jk E_il - δ_li E_kj
        let e = |p: &SparsePoly, a: u8, b: u8| p.apply_eij_diagonal(a, b).unwrap();
        let lhs = &e(&e(&f, k, l), i, j) - &e(&e(&f, i, j), k, l);
        let mut rhs = SparsePoly::zero(f.groups());
        if j == k {
            rhs = &rhs + &e(&f, i, l);
        }
        if l == i {
            rhs = &rhs - &e(&f, k, j);
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn generators_are_derivations(f in poly_in(&[A]), g in poly_in(&[A]), (i, j) in generator()) {
        let e = |p: &SparsePoly| p.apply_eij(i, j, A).unwrap();
        let lhs = e(&(&f * &g));
        let rhs = &(&e(&f) * &g) + &(&f * &e(&g));
        prop_assert_eq!(lhs.aligned_to(&[A]).unwrap(), rhs.aligned_to(&[A]).unwrap());
    }

    #[test]
    fn plucker_form_is_invariant((i, j) in generator()) {
        prop_assume!(i != j);
        let a = |k| SparsePoly::variable(A, k);
        let p = &(&(&a(var::A1) * &a(var::A23)) - &(&a(var::A2) * &a(var::A13))) + &(&a(var::A3) * &a(var::A12));
        prop_assert!(p.apply_eij(i, j, A).unwrap().is_zero());
    }

    #[test]
    fn multiplication_distributes(f in poly_in(&[A]), g in poly_in(&[B]), h in poly_in(&[B])) {
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
    }
}
