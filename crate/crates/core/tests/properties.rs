use proptest::prelude::*;
use qgue::exactq::{q_binomial, Base, QPolynomial};
use qgue::qgue::alternating_binomial_sum;
use qgue::qxpoly::{gaussian_op, Direction, XPoly};
use qgue::symschur::{
    family_expand, family_polynomial, schur_coefficient, schur_monomials, ExplicitFamily, MonomialMap,
    Partition,
};
use qgue::Scalar;

fn int_poly(max_deg: usize) -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(-4i64..=4, 0..=max_deg + 1).prop_map(|c| QPolynomial::from_int_coeffs(&c))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (int_poly(3), int_poly(3).prop_filter("nonzero", |p| !p.is_zero()))
        .prop_map(|(n, d)| Scalar::new(n, d))
}

fn monic(deg: usize) -> impl Strategy<Value = XPoly> {
    prop::collection::vec(-3i64..=3, deg).prop_map(move |low| {
        let mut c: Vec<Scalar> = low.into_iter().map(Scalar::from_int).collect();
        c.push(Scalar::one());
        XPoly::from_coeffs(c)
    })
}

fn family(len: usize) -> impl Strategy<Value = ExplicitFamily> {
    (0..len).map(monic).collect::<Vec<_>>().prop_map(ExplicitFamily)
}

fn partition(max_weight: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    let all = Partition::all_up_to(max_weight, max_len);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a.clone());
            prop_assert!((&b * &b.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_unique(n in int_poly(4), d in int_poly(3), k in int_poly(2)) {
        prop_assume!(!d.is_zero() && !k.is_zero());
        let plain = Scalar::new(n.clone(), d.clone());
        let scaled = Scalar::new(&n * &k, &d * &k);
        prop_assert_eq!(&plain, &scaled);
        prop_assert_eq!(plain.to_string(), scaled.to_string());
    }

    #[test]
    fn polynomial_gcd_divides_both(a in int_poly(4), b in int_poly(4), g in int_poly(3)) {
        prop_assume!(!a.is_zero() && !b.is_zero() && !g.is_zero());
        let (x, y) = (&a * &g, &b * &g);
        let h = x.gcd(&y);
        prop_assert!(x.div_rem(&h).1.is_zero());
        prop_assert!(y.div_rem(&h).1.is_zero());
        prop_assert!(h.div_rem(&g.make_monic()).1.is_zero());
    }

    #[test]
    fn gaussian_ops_are_inverse(coeffs in prop::collection::vec(-5i64..=5, 1..10)) {
        let p = XPoly::from_coeffs(coeffs.into_iter().map(Scalar::from_int).collect());
        let there = gaussian_op(&p, Direction::Forward);
        prop_assert_eq!(gaussian_op(&there, Direction::Inverse), p);
    }

    #[test]
    fn family_polynomial_is_its_schur_expansion(fam in family(7), kappa in partition(4, 3), n in 1usize..=3) {
        prop_assume!(kappa.length() <= n);
        let direct = family_polynomial(&fam, &kappa, n).unwrap();
        let expansion = family_expand(&fam, &kappa, n).unwrap();
        prop_assert_eq!(expansion.get(&kappa), Scalar::one());
        let mut rebuilt = MonomialMap::zero(n);
        for (lambda, c) in expansion.entries() {
            prop_assert!(lambda.is_contained_in(&kappa));
            rebuilt = &rebuilt + &schur_monomials(lambda, n).unwrap().scale(c);
        }
        prop_assert_eq!(rebuilt, direct);
    }

    #[test]
    fn expansion_is_triangular(fam in family(7), kappa in partition(4, 3), lambda in partition(4, 3)) {
        let n = 3;
        prop_assume!(!lambda.is_contained_in(&kappa));
        prop_assert!(schur_coefficient(&fam, &kappa, &lambda, n).unwrap().is_zero());
    }
}

#[test]
fn q_pascal() {
    for base in [Base::Q, Base::QSquared] {
        let step = if base == Base::Q { 1 } else { 2 };
        for n in 1..=14i64 {
            for k in 0..=n {
                let rhs = q_binomial(n - 1, k - 1, base) + Scalar::q_pow(step * k) * q_binomial(n - 1, k, base);
                assert_eq!(q_binomial(n, k, base), rhs, "n = {n}, k = {k}");
            }
        }
    }
}

#[test]
fn alternating_binomial_sum_evaluation() {
    // Σ_r (-1)^r q^{r(r-1)} [n, r]_{q²} = (-1)^s q^{s(s+1)} [n-1, s]_{q²}
    for n in 1..=9i64 {
        for s in 0..=n {
            let sign = if s % 2 == 0 { 1 } else { -1 };
            let closed = Scalar::from_int(sign) * Scalar::q_pow(s * (s + 1)) * q_binomial(n - 1, s, Base::QSquared);
            assert_eq!(alternating_binomial_sum(n as usize, s as usize), closed, "n = {n}, s = {s}");
        }
    }
}
