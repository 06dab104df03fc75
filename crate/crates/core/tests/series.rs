use proptest::prelude::*;

use rsg_core::products::{allowed_residues, shifted_a_pochhammer};
use rsg_core::{
    build_e, build_f, geometric_inverse, inverse_q_factorial, pochhammer, residue_product,
    residue_product_with_numerators, BiSeries, Identity, Length, Partition, Series,
};

fn series(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(-50i128..50, order + 1).prop_map(Series::from_coeffs)
}

fn triple() -> impl Strategy<Value = (Series, Series, Series)> {
    (0usize..12).prop_flat_map(|n| (series(n), series(n), series(n)))
}

// schoolbook product computed from scratch
fn naive_mul(a: &Series, b: &Series) -> Vec<i128> {
    let n = a.order().min(b.order());
    (0..=n)
        .map(|e| (0..=e).map(|i| a.coeff(i) * b.coeff(e - i)).sum())
        .collect()
}

proptest! {
    #[test]
    fn ring_axioms((a, b, c) in triple()) {
        let n = a.order();
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Series::zero(n), a.clone());
        prop_assert_eq!(&a * &Series::one(n), a.clone());
        prop_assert_eq!(&a - &a, Series::zero(n));
        prop_assert_eq!(&a + &(-&a), Series::zero(n));
        prop_assert_eq!((&a * &b).coeffs().to_vec(), naive_mul(&a, &b));
    }

    #[test]
    fn truncation_commutes_with_ops((a, b, _c) in triple(), cut in 0usize..12) {
        let cut = cut.min(a.order());
        prop_assert_eq!((&a * &b).truncate(cut), &a.truncate(cut) * &b.truncate(cut));
        prop_assert_eq!((&a + &b).truncate(cut), &a.truncate(cut) + &b.truncate(cut));
    }

    #[test]
    fn binomial_factor_round_trip(a in (0usize..12).prop_flat_map(series), e in 1usize..6) {
        let mut x = a.clone();
        x.mul_binomial(-1, e);
        x.div_one_minus(e);
        prop_assert_eq!(x, a);
    }

    #[test]
    fn series_text_round_trip(a in (0usize..10).prop_flat_map(series)) {
        let text = a.to_string();
        let back: Series = text.parse().unwrap();
        prop_assert_eq!(back.coeffs(), a.coeffs());
        prop_assert_eq!(back.order(), a.order());
    }

    #[test]
    fn partition_canonical_and_weights(
        xs in prop::collection::vec(0u64..12, 0..10),
        ys in prop::collection::vec(0u64..12, 0..10),
    ) {
        let p = Partition::from_parts(xs.iter().copied());
        let q = Partition::from_parts(ys.iter().copied());
        prop_assert_eq!(Partition::from_parts(p.parts().iter().copied()), p.clone());
        prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(p.union(&q).weight(), p.weight() + q.weight());
        prop_assert_eq!(p.sum(&q).weight(), p.weight() + q.weight());
        let s = p.sum(&q);
        prop_assert_eq!(s.difference(&q).unwrap().weight(), p.weight());
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
        prop_assert_eq!(p.to_exponent_string().parse::<Partition>().unwrap(), p.clone());
        let cut = p.largest_repeated();
        prop_assert_eq!(p.to_split_string(cut).parse::<Partition>().unwrap(), p.clone());
    }
}

fn univariate_builders(order: usize) -> Vec<(String, Series)> {
    let mut out = vec![
        ("geometric_inverse(3)".to_string(), geometric_inverse(3, order)),
        ("residue_product(7, 1)".to_string(), residue_product(7, &allowed_residues(7, 1), order)),
        (
            "residue_product_with_numerators".to_string(),
            residue_product_with_numerators(5, &[1, 4], &[3, 7], order),
        ),
        ("(q;q^2)_inf".to_string(), pochhammer(-1, 1, 2, Length::Infinite, order)),
        ("(-q^2;q)_5".to_string(), pochhammer(1, 2, 1, Length::Finite(5), order)),
        ("1/(q^2;q^2)_6".to_string(), inverse_q_factorial(2, 6, order)),
    ];
    for id in Identity::ALL {
        out.push((format!("{id} sum side"), id.sum_side(order)));
        out.push((format!("{id} product side"), id.product_side(order)));
    }
    out
}

fn bivariate_builders(order: usize) -> Vec<(String, BiSeries)> {
    let mut out = vec![("(-aq;q)_inf".to_string(), shifted_a_pochhammer(1, order))];
    for i in 1..=3 {
        out.push((format!("F{i}"), build_f(i, order)));
        out.push((format!("E{i}"), build_e(i, order)));
    }
    out
}

#[test]
fn truncation_soundness() {
    let low = univariate_builders(40);
    let high = univariate_builders(100);
    for ((name, lo), (_, hi)) in low.iter().zip(&high) {
        assert_eq!(lo.order(), 40);
        assert_eq!(hi.truncate(40).coeffs(), lo.coeffs(), "{name}");
    }
    let low = bivariate_builders(40);
    let high = bivariate_builders(100);
    for ((name, lo), (_, hi)) in low.iter().zip(&high) {
        assert!(hi.truncate(40).first_mismatch(lo).is_none(), "{name}");
        assert_eq!(hi.truncate(40), *lo, "{name}");
    }
}

#[test]
fn bivariate_specializations() {
    let n = 30;
    // F2(a) = (-aq;q)_∞ counts distinct parts, with a marking the number of parts
    let f2 = build_f(2, n);
    assert_eq!(f2.specialize_a1(), Identity::Sl27b.sum_side(n));
    assert_eq!(f2.specialize_a0(), Series::one(n));
    for i in 1..=3 {
        assert_eq!(build_e(i, n).specialize_a1(), build_f(i, n).specialize_a1(), "i = {i}");
    }
}
