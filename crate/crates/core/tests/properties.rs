use proptest::prelude::*;
use totaro::brauer::quaternion_class;
use totaro::places::{hilbert_symbol, symbol_support};
use totaro::witt::{transfer, SimpleExtension};
use totaro::{
    BrauerClassQ, Fraction01, IntegerPolynomial, Place, QuadraticField, QuadraticForm, Quaternion,
    QuaternionAlgebraQ, Rational,
};

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn nonzero(bound: i64) -> impl Strategy<Value = i64> {
    (1..=bound, any::<bool>()).prop_map(|(n, neg)| if neg { -n } else { n })
}

fn ratio() -> impl Strategy<Value = Rational> {
    (nonzero(40), 1..=12i64).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn places_of(xs: &[i64]) -> Vec<Place> {
    let mut out = vec![Place::Infinite, Place::Finite(2)];
    for p in 3..=60u64 {
        if (2..p).all(|m| p % m != 0) && xs.iter().any(|x| x.unsigned_abs() % p == 0) {
            out.push(Place::Finite(p));
        }
    }
    out
}

fn element() -> impl Strategy<Value = Quaternion> {
    proptest::array::uniform4(-9..=9i64)
        .prop_map(|[w, x, y, z]| Quaternion::new(q(w), q(x), q(y), q(z)))
}

fn diag_form(max_dim: usize) -> impl Strategy<Value = QuadraticForm> {
    proptest::collection::vec(nonzero(12), 1..=max_dim)
        .prop_map(|e| QuadraticForm::from_i64(&e).unwrap())
}

fn class_q() -> impl Strategy<Value = BrauerClassQ> {
    let places = [
        Place::Infinite,
        Place::Finite(2),
        Place::Finite(3),
        Place::Finite(5),
        Place::Finite(7),
    ];
    proptest::collection::vec(
        (
            0..places.len(),
            0..6i64,
            prop_oneof![Just(2u64), Just(3), Just(6)],
        ),
        0..4,
    )
    .prop_map(move |picks| {
        let mut entries: Vec<(Place, Fraction01)> = Vec::new();
        for (i, num, den) in picks {
            let v = places[i];
            let den = if v == Place::Infinite { 2 } else { den };
            let x = Fraction01::new(num, den).unwrap();
            if entries.iter().any(|(w, _)| *w == v) {
                continue;
            }
            entries.push((v, x));
            // keep the sum zero by placing the negative at 11
            entries.push((Place::Finite(11), x.neg()));
        }
        let mut merged = std::collections::BTreeMap::new();
        for (v, x) in entries {
            let cur = merged.entry(v).or_insert(Fraction01::new(0, 1).unwrap());
            *cur = cur.add(x);
        }
        BrauerClassQ::new(merged).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reciprocity_holds(a in nonzero(60), b in nonzero(60)) {
        let ramified = symbol_support(&q(a), &q(b))
            .unwrap()
            .into_iter()
            .filter(|&v| hilbert_symbol(&q(a), &q(b), v).unwrap() == -1)
            .count();
        prop_assert_eq!(ramified % 2, 0);
        let product: i64 = places_of(&[a, b])
            .into_iter()
            .map(|v| hilbert_symbol(&q(a), &q(b), v).unwrap() as i64)
            .product();
        prop_assert_eq!(product, 1);
    }

    #[test]
    fn symbol_is_bimultiplicative(a in ratio(), b in ratio(), c in ratio()) {
        let bc = b.clone() * c.clone();
        let nums: Vec<i64> = [&a, &b, &c]
            .iter()
            .flat_map(|x| [i64::try_from(x.numer()).unwrap(), i64::try_from(x.denom()).unwrap()])
            .collect();
        for v in places_of(&nums) {
            let lhs = hilbert_symbol(&a, &bc, v).unwrap();
            let rhs = hilbert_symbol(&a, &b, v).unwrap() * hilbert_symbol(&a, &c, v).unwrap();
            prop_assert_eq!(lhs, rhs, "at {}", v);
            prop_assert_eq!(hilbert_symbol(&a, &b, v).unwrap(), hilbert_symbol(&b, &a, v).unwrap());
        }
    }

    #[test]
    fn steinberg_relations(a in ratio()) {
        prop_assert!(quaternion_class(&a, &-a.clone()).unwrap().is_zero());
        let one_minus = Rational::from_integer(1.into()) - a.clone();
        if one_minus != Rational::from_integer(0.into()) {
            prop_assert!(quaternion_class(&a, &one_minus).unwrap().is_zero());
        }
    }

    #[test]
    fn corestriction_after_restriction_doubles(class in class_q(), d in prop_oneof![Just(-1i64), Just(2), Just(-3), Just(5), Just(-7)]) {
        let k = QuadraticField::new(d).unwrap();
        let back = class.restrict_to_quadratic(&k).corestrict();
        prop_assert_eq!(back, class.tensor(&class));
    }

    #[test]
    fn tensor_with_opposite_is_trivial(class in class_q()) {
        prop_assert!(class.tensor(&class.opposite()).is_zero());
        prop_assert!(class.schur_index() >= 1);
    }

    #[test]
    fn reduced_norm_is_multiplicative(a in nonzero(20), b in nonzero(20), u in element(), v in element()) {
        let alg = QuaternionAlgebraQ::from_i64(a, b).unwrap();
        let uv = alg.multiply(&u, &v);
        prop_assert_eq!(alg.reduced_norm(&uv), alg.reduced_norm(&u) * alg.reduced_norm(&v));
    }

    #[test]
    fn conjugation_reverses_products(a in nonzero(20), b in nonzero(20), u in element(), v in element()) {
        let alg = QuaternionAlgebraQ::from_i64(a, b).unwrap();
        let lhs = alg.multiply(&u, &v).conjugate();
        let rhs = alg.multiply(&v.conjugate(), &u.conjugate());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(u.conjugate().conjugate(), u);
    }

    #[test]
    fn transfer_is_additive(
        f in prop_oneof![
            Just(vec![-2i64, 0, 0, 1]),
            Just(vec![-1, 1, 0, 1]),
            Just(vec![-1, -1, 0, 0, 0, 1]),
        ],
        l1 in proptest::collection::vec(-4..=4i64, 1..=3),
        l2 in proptest::collection::vec(-4..=4i64, 1..=3),
    ) {
        let ext = SimpleExtension::new(IntegerPolynomial::from_i64(&f).unwrap()).unwrap();
        let x = ext.element_i64(&l1);
        let y = ext.element_i64(&l2);
        prop_assume!(!x.is_zero() && !y.is_zero());
        let sum = transfer(&ext, &[x.clone(), y.clone()]).unwrap();
        let parts = transfer(&ext, &[x]).unwrap().orthogonal_sum(&transfer(&ext, &[y]).unwrap());
        prop_assert!(sum.isometric(&parts).unwrap());
    }

    #[test]
    fn hyperbolic_planes_are_witt_trivial(form in diag_form(4), n in 1..3usize) {
        let padded = form.orthogonal_sum(&QuadraticForm::hyperbolic(n));
        prop_assert!(padded.witt_equivalent(&form).unwrap());
        prop_assert!(form.orthogonal_sum(&form.negate()).is_hyperbolic().unwrap());
    }

    #[test]
    fn swap_witnesses_are_isotropic(
        d in prop_oneof![Just(-1i64), Just(2), Just(-3), Just(5), Just(-7)],
        entries in proptest::collection::vec(nonzero(15), 1..=3),
    ) {
        let k = QuadraticField::new(d).unwrap();
        let h = totaro::HermitianForm::from_i64(k, &entries).unwrap();
        let witnesses = h.swap_witnesses();
        prop_assert_eq!(witnesses.len(), h.rank());
        for w in &witnesses {
            prop_assert!(w.value.re == q(0) && w.value.im == q(0));
            prop_assert!(w.vector.0.re != q(0) || w.vector.0.im != q(0) || w.vector.1.re != q(0) || w.vector.1.im != q(0));
        }
        let t = h.trace_form();
        prop_assert_eq!(t.dim(), 2 * h.rank());
        prop_assert!(t.orthogonal_sum(&t.negate()).is_hyperbolic().unwrap());
    }
}

#[test]
fn quaternion_identities() {
    // Q ⊗ Q is split for every quaternion algebra
    for (a, b) in [(-1, -1), (2, 5), (-3, 7), (6, -10)] {
        let c = QuaternionAlgebraQ::from_i64(a, b).unwrap().class();
        assert!(c.tensor(&c).is_zero());
        assert!(c.schur_index() <= 2);
    }
}
