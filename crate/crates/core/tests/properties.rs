use norlund::multiindex::{binomial, sub_indices};
use norlund::polynomials::bernoulli_poly;
use norlund::ring::ratio;
use norlund::{Family, MultiIndex, Rational, Tables};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=7).prop_map(|(n, d)| ratio(n, d))
}

fn index(max_dim: usize, max_part: u32) -> impl Strategy<Value = MultiIndex> {
    prop::collection::vec(0..=max_part, 1..=max_dim).prop_map(MultiIndex::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn symbolic_number_evaluates_to_fixed_order(v in index(3, 3), t in small_rational()) {
        let tables = Tables::new(10);
        for family in Family::ALL {
            let symbolic = tables.number(family, &v).unwrap();
            prop_assert_eq!(symbolic.eval(&t), tables.number_at(family, &v, &t).unwrap());
        }
    }

    #[test]
    fn orders_add_by_binomial_convolution(v in index(2, 3), s in small_rational(), t in small_rational()) {
        let tables = Tables::new(8);
        for family in Family::ALL {
            let mut rhs = Rational::from_integer(0.into());
            for k in sub_indices(&v) {
                let rest = v.checked_sub(&k).unwrap();
                let c = Rational::from_integer(binomial(&v, &k).unwrap());
                rhs += c * tables.number_at(family, &k, &s).unwrap() * tables.number_at(family, &rest, &t).unwrap();
            }
            prop_assert_eq!(tables.number_at(family, &v, &(&s + &t)).unwrap(), rhs);
        }
    }

    #[test]
    fn bernoulli_polynomial_reflects(n in 0u32..=8, x in small_rational(), t in small_rational()) {
        let tables = Tables::new(10);
        let p = bernoulli_poly(&tables, &MultiIndex::new(vec![n])).unwrap();
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let reflected = p.evaluate(&[&t - &x], &t).unwrap();
        prop_assert_eq!(reflected, p.evaluate(&[x], &t).unwrap() * Rational::from_integer(sign.into()));
    }

    #[test]
    fn bernoulli_polynomial_difference(n in 1u32..=8, x in small_rational(), t in small_rational()) {
        // B_n^(t)(x + 1) - B_n^(t)(x) = n B_{n-1}^(t-1)(x)
        let tables = Tables::new(10);
        let p = bernoulli_poly(&tables, &MultiIndex::new(vec![n])).unwrap();
        let q = bernoulli_poly(&tables, &MultiIndex::new(vec![n - 1])).unwrap();
        let one = Rational::from_integer(1.into());
        let lhs = p.evaluate(&[&x + &one], &t).unwrap() - p.evaluate(std::slice::from_ref(&x), &t).unwrap();
        let rhs = q.evaluate(&[x], &(&t - &one)).unwrap() * Rational::from_integer(n.into());
        prop_assert_eq!(lhs, rhs);
    }
}
