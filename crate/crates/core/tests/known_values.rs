//! Values with closed forms that do not go through the series machinery.

use norlund::multiindex::{indices_up_to, partitions};
use norlund::polynomials::{bernoulli_poly, euler_poly};
use norlund::ring::{rat, ratio};
use norlund::{Family, MultiIndex, OrderPolynomial, Rational, Tables};

fn mi(p: &[u32]) -> MultiIndex {
    MultiIndex::new(p.to_vec())
}

fn poly(c: &[Rational]) -> OrderPolynomial {
    OrderPolynomial::from_rationals(c.iter().cloned())
}

#[test]
fn norlund_numbers_low_degree() {
    let tables = Tables::new(12);
    // B_1 = -t/2, B_2 = t^2/4 - t/12, B_3 = -t^3/8 + t^2/8
    assert_eq!(
        tables.number(Family::Bernoulli, &mi(&[1])).unwrap(),
        poly(&[rat(0), ratio(-1, 2)])
    );
    assert_eq!(
        tables.number(Family::Bernoulli, &mi(&[2])).unwrap(),
        poly(&[rat(0), ratio(-1, 12), ratio(1, 4)])
    );
    assert_eq!(
        tables.number(Family::Bernoulli, &mi(&[3])).unwrap(),
        poly(&[rat(0), rat(0), ratio(1, 8), ratio(-1, 8)])
    );
    // sech(z)^t: E_2 = -t, E_4 = 3t^2 + 2t, odd ones vanish
    assert_eq!(
        tables.number(Family::Euler, &mi(&[2])).unwrap(),
        poly(&[rat(0), rat(-1)])
    );
    assert_eq!(
        tables.number(Family::Euler, &mi(&[4])).unwrap(),
        poly(&[rat(0), rat(2), rat(3)])
    );
    for n in [1u32, 3, 5, 7, 9, 11] {
        assert_eq!(
            tables.number(Family::Euler, &mi(&[n])).unwrap(),
            OrderPolynomial::new(vec![])
        );
    }
}

#[test]
fn classical_values_at_order_one() {
    let tables = Tables::new(12);
    let b = [
        rat(1),
        ratio(-1, 2),
        ratio(1, 6),
        rat(0),
        ratio(-1, 30),
        rat(0),
        ratio(1, 42),
        rat(0),
        ratio(-1, 30),
        rat(0),
        ratio(5, 66),
        rat(0),
        ratio(-691, 2730),
    ];
    let e = [1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521, 0, 2702765];
    for n in 0..=12u32 {
        assert_eq!(
            tables
                .number_at(Family::Bernoulli, &mi(&[n]), &rat(1))
                .unwrap(),
            b[n as usize]
        );
        assert_eq!(
            tables.number_at(Family::Euler, &mi(&[n]), &rat(1)).unwrap(),
            rat(e[n as usize])
        );
    }
}

#[test]
fn multivariate_numbers_depend_on_total_degree() {
    let tables = Tables::new(10);
    for dim in 1..=3 {
        for v in indices_up_to(dim, 6) {
            let flat = mi(&[v.total_degree() as u32]);
            for family in Family::ALL {
                assert_eq!(
                    tables.number(family, &v).unwrap(),
                    tables.number(family, &flat).unwrap()
                );
            }
        }
    }
    assert_eq!(
        tables
            .number_at(Family::Bernoulli, &mi(&[1, 1]), &rat(1))
            .unwrap(),
        ratio(1, 6)
    );
}

#[test]
fn numbers_at_order_zero_are_trivial() {
    let tables = Tables::new(8);
    for v in indices_up_to(2, 8) {
        let expected = if v.is_zero() { rat(1) } else { rat(0) };
        for family in Family::ALL {
            assert_eq!(tables.number_at(family, &v, &rat(0)).unwrap(), expected);
        }
    }
}

#[test]
fn low_degree_polynomials() {
    let tables = Tables::new(12);
    let half = ratio(1, 2);
    // B_1(x) = x - t/2 at t = 1 vanishes at 1/2; E_1(x) at t = 2 vanishes at 1
    let b1 = bernoulli_poly(&tables, &mi(&[1])).unwrap();
    assert_eq!(
        b1.evaluate(std::slice::from_ref(&half), &rat(1)).unwrap(),
        rat(0)
    );
    let e1 = euler_poly(&tables, &mi(&[1])).unwrap();
    assert_eq!(e1.evaluate(&[rat(1)], &rat(2)).unwrap(), rat(0));
    // B_2(x) = x^2 - t x + t^2/4 - t/12
    let b2 = bernoulli_poly(&tables, &mi(&[2])).unwrap();
    for (x, t) in [
        (rat(3), rat(2)),
        (ratio(-1, 3), ratio(5, 7)),
        (rat(0), rat(-4)),
    ] {
        let expected = &x * &x - &t * &x + &t * &t / rat(4) - &t / rat(12);
        assert_eq!(b2.evaluate(&[x], &t).unwrap(), expected);
    }
    // classical E_2(x) = x^2 - x, E_3(x) = x^3 - 3x^2/2 + 1/4
    let e2 = euler_poly(&tables, &mi(&[2])).unwrap();
    let e3 = euler_poly(&tables, &mi(&[3])).unwrap();
    for x in [rat(0), rat(1), ratio(1, 2), ratio(-7, 3)] {
        assert_eq!(
            e2.evaluate(std::slice::from_ref(&x), &rat(1)).unwrap(),
            &x * &x - &x
        );
        let cube = &x * &x * &x - ratio(3, 2) * &x * &x + ratio(1, 4);
        assert_eq!(e3.evaluate(&[x], &rat(1)).unwrap(), cube);
    }
}

#[test]
fn polynomials_of_zero_index_are_one() {
    let tables = Tables::new(6);
    for dim in 1..=4 {
        let v = MultiIndex::zero(dim);
        let x: Vec<Rational> = (0..dim).map(|i| ratio(i as i64 + 2, 3)).collect();
        assert_eq!(
            bernoulli_poly(&tables, &v)
                .unwrap()
                .evaluate(&x, &ratio(-5, 2))
                .unwrap(),
            rat(1)
        );
        assert_eq!(
            euler_poly(&tables, &v)
                .unwrap()
                .evaluate(&x, &rat(9))
                .unwrap(),
            rat(1)
        );
    }
}

#[test]
fn product_polynomial_factorises_over_coordinates() {
    // Each coordinate of t.ι is the same umbra, so at a point x the
    // expansion is Σ_k C(v,k) B_{|k|} x^(v-k); check v = (1,1) by hand.
    let tables = Tables::new(8);
    let p = bernoulli_poly(&tables, &mi(&[1, 1])).unwrap();
    let (x, y, t) = (ratio(2, 3), ratio(-1, 5), ratio(3, 2));
    let b1 = -&t / rat(2);
    let b2 = &t * &t / rat(4) - &t / rat(12);
    let expected = &x * &y + &b1 * (&x + &y) + b2;
    assert_eq!(p.evaluate(&[x, y], &t).unwrap(), expected);
}

#[test]
fn partition_counts_of_spec_examples() {
    assert_eq!(partitions(&mi(&[2])).unwrap().len(), 2);
    assert_eq!(partitions(&mi(&[1, 1])).unwrap().len(), 2);
    assert_eq!(partitions(&mi(&[2, 1])).unwrap().len(), 4);
    assert!(partitions(&mi(&[0, 0])).is_err());
}
