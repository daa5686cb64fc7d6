use proptest::prelude::*;

use qaffine_core::dorey::{dorey, DoreyTriple};
use qaffine_core::quiver::{ar_quiver, convex_order_q, height_function, path_order, DynkinQuiver};
use qaffine_core::rootsys::{positive_roots, reflect, FiniteType, Root};
use qaffine_core::sequiver::{dual_class, pi, pi_preimages, vertex_class};
use qaffine_core::spectral::{denominator, dual_point, right_dual_point, AffineFamily, AffineType, SpectralParam};

fn param() -> impl Strategy<Value = SpectralParam> {
    (0..4i32, -40..40i32).prop_map(|(z, m)| SpectralParam::new(z, m))
}

fn finite_type() -> impl Strategy<Value = FiniteType> {
    prop_oneof![
        (2..=7usize).prop_map(|n| FiniteType::a(n).unwrap()),
        (4..=7usize).prop_map(|n| FiniteType::d(n).unwrap())
    ]
}

fn affine_type() -> impl Strategy<Value = AffineType> {
    let fam = prop_oneof![
        Just(AffineFamily::A1),
        Just(AffineFamily::D1),
        Just(AffineFamily::A2),
        Just(AffineFamily::D2)
    ];
    (fam, 2..=7usize).prop_filter_map("rank too small", |(f, n)| AffineType::new(f, n).ok())
}

fn quiver() -> impl Strategy<Value = DynkinQuiver> {
    (finite_type(), any::<u64>()).prop_map(|(t, bits)| DynkinQuiver::from_bits(t, bits))
}

/// A node of `g` together with a representative spectral parameter.
fn point(g: AffineType) -> impl Strategy<Value = (usize, SpectralParam)> {
    (g.nodes(), param())
}

proptest! {
    #[test]
    fn spectral_group_laws(a in param(), b in param(), c in param()) {
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a * SpectralParam::ONE, a);
        prop_assert_eq!(a * a.inv(), SpectralParam::ONE);
        prop_assert_eq!(a / b, a * b.inv());
        prop_assert_eq!(-(-a), a);
        prop_assert_eq!(-a, a * SpectralParam::unit(2));
    }

    #[test]
    fn spectral_pow_is_additive(a in param(), e in -6..6i32, f in -6..6i32) {
        prop_assert_eq!(a.pow(e) * a.pow(f), a.pow(e + f));
    }

    #[test]
    fn spectral_sqrt_squares_back(a in param()) {
        match a.sqrt() {
            Some([r, s]) => {
                prop_assert_eq!(r * r, a);
                prop_assert_eq!(s, -r);
            }
            // Square roots of odd units would need eighth roots of unity.
            None => prop_assert!(a.m() % 2 != 0 || a.zeta() % 2 != 0),
        }
    }

    #[test]
    fn spectral_text_round_trip(a in param()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<SpectralParam>().unwrap(), a);
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<SpectralParam>(&json).unwrap(), a);
    }

    #[test]
    fn minus_q_sugar_agrees(p in -30..30i32) {
        let x = SpectralParam::minus_q_pow(p);
        prop_assert_eq!(format!("(-q)^{p}").parse::<SpectralParam>().unwrap(), x);
        prop_assert_eq!(x.as_minus_q_pow(), Some(p));
    }

    #[test]
    fn simple_reflection_is_involution(t in finite_type(), i in 1..=7usize, k in any::<prop::sample::Index>()) {
        prop_assume!(i <= t.rank());
        let roots = positive_roots(t);
        let r = &roots[k.index(roots.len())];
        let s = reflect(t, i, r);
        prop_assert_eq!(&reflect(t, i, &s), r);
        // s_i permutes the positive roots other than alpha_i.
        if *r == Root::simple(t.rank(), i) {
            prop_assert!(s.is_negative());
        } else {
            prop_assert!(roots.contains(&s));
        }
    }

    #[test]
    fn reflecting_a_source_twice_is_identity(q in quiver()) {
        for i in q.sources() {
            let r = q.reflect_at(i);
            prop_assert!(r.is_sink(i));
            prop_assert_eq!(&r.reflect_at(i), &q);
        }
        prop_assert_eq!(&q.reversed().reversed(), &q);
    }

    #[test]
    fn height_function_drops_along_arrows(q in quiver(), base in -3..3i32) {
        let xi = height_function(&q, 1, base).unwrap();
        prop_assert_eq!(xi.get(1), base);
        for &(a, b) in q.arrows() {
            prop_assert_eq!(xi.get(a), xi.get(b) + 1);
        }
    }

    #[test]
    fn convex_order_is_a_convex_partial_order(q in quiver()) {
        let xi = height_function(&q, 1, 0).unwrap();
        let ar = ar_quiver(&q, &xi);
        prop_assert_eq!(ar.vertices().len(), q.finite_type().num_positive_roots());
        let ord = convex_order_q(&ar);
        prop_assert!(ord.is_partial_order());
        prop_assert!(ord.is_convex(ar.root_system()));
        let paths = path_order(&ar);
        prop_assert_eq!(ord.matrix(), paths.matrix());
    }

    #[test]
    fn denominator_is_symmetric(g in affine_type(), k in 1..=7usize, l in 1..=7usize) {
        prop_assume!(g.check_node(k).is_ok() && g.check_node(l).is_ok());
        let a = denominator(g, k, l).unwrap();
        let b = denominator(g, l, k).unwrap();
        prop_assert_eq!(a.roots(), b.roots());
        prop_assert_eq!(a.degree(), a.roots().values().sum::<u32>());
        prop_assert_eq!(a.degree() as usize, a.factors().iter().map(|f| f.degree()).sum::<usize>());
    }

    #[test]
    fn left_and_right_duals_are_inverse(g in affine_type(), x in param(), i in 1..=7usize) {
        prop_assume!(g.check_node(i).is_ok());
        let (j, y) = dual_point(g, i, x).unwrap();
        prop_assert_eq!(right_dual_point(g, j, y).unwrap(), (i, x));
        prop_assert_eq!(g.istar(g.istar(i)), i);
    }

    #[test]
    fn class_depends_on_sign_only_through_the_quotient(g in affine_type(), x in param(), i in 1..=7usize) {
        prop_assume!(g.check_node(i).is_ok());
        let v = vertex_class(g, i, x).unwrap();
        let w = vertex_class(g, i, -x).unwrap();
        prop_assert_eq!(v == w, g.sign_quotient(i));
        prop_assert_eq!(dual_class(&dual_class(&v)).affine_type(), g);
    }

    #[test]
    fn pi_preimages_map_back(g in affine_type().prop_filter("twisted", |g| g.is_twisted()), x in param(), i in 1..=7usize) {
        prop_assume!(g.check_node(i).is_ok());
        let v = vertex_class(g, i, x).unwrap();
        let [a, b] = pi_preimages(&v).unwrap();
        prop_assert_ne!(a, b);
        prop_assert_eq!(pi(&a).unwrap(), v);
        prop_assert_eq!(pi(&b).unwrap(), v);
    }

    #[test]
    fn dorey_verdict_is_translation_invariant(
        (g, pts) in affine_type().prop_flat_map(|g| (Just(g), [point(g), point(g), point(g)])),
        c in param(),
    ) {
        let t = DoreyTriple::new(g, pts).unwrap();
        let a = dorey(&t).unwrap();
        let b = dorey(&t.translate(c)).unwrap();
        prop_assert_eq!(a.holds, b.holds);
        prop_assert_eq!(a.condition, b.condition);
    }
}
