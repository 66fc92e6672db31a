//! Truncated exponential generating functions.
//!
//! A [`TruncatedSeries`] stores a_0..a_N where a_n is the coefficient of
//! z^n/n!, so products are binomial convolutions and a_n reads directly
//! as the n-th moment of the corresponding umbra.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::binomial as int_binomial;

use crate::poly::OrderPolynomial;
use crate::ring::{rat, ratio, Rational, Ring};
use crate::Error;

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 12;

#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

/// Table of binomial coefficients (n choose k) for n ≤ order, as rationals.
fn binomial_rows(order: usize) -> Vec<Vec<Rational>> {
    (0..=order)
        .map(|n| {
            (0..=n)
                .map(|k| Rational::from_integer(int_binomial(BigInt::from(n), BigInt::from(k))))
                .collect()
        })
        .collect()
}

impl<R: Ring> TruncatedSeries<R> {
    /// Series with the given moments; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<R>) -> Result<Self, Error> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> R) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// 1 + 0 z + ... , the g.f. of the umbra ε.
    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |n| if n == 0 { R::one() } else { R::zero() })
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| R::zero())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&R, Error> {
        self.coeffs.get(n).ok_or(Error::TruncationExceeded {
            requested: n,
            order: self.order(),
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TruncatedSeries<S> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn check_order(&self, other: &Self) -> Result<(), Error> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn scale_coeffs(&self, c: &R) -> Self {
        self.map(|a| a.mul(c))
    }

    /// Binomial convolution (fg)_n = Σ_k (n choose k) f_k g_{n-k}.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_order(other)?;
        let rows = binomial_rows(self.order());
        Ok(TruncatedSeries {
            coeffs: rows
                .iter()
                .enumerate()
                .map(|(n, row)| {
                    row.iter().enumerate().fold(R::zero(), |acc, (k, b)| {
                        acc.add(&self.coeffs[k].mul(&other.coeffs[n - k]).scale(b))
                    })
                })
                .collect(),
        })
    }

    /// Multiplicative inverse; requires a_0 to be a unit.
    pub fn reciprocal(&self) -> Result<Self, Error> {
        let inv0 = self.coeffs[0].inverse().ok_or(Error::NotInvertible)?;
        let rows = binomial_rows(self.order());
        let mut out: Vec<R> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for (n, row) in rows.iter().enumerate().skip(1) {
            let s = (1..=n).fold(R::zero(), |acc, k| {
                acc.add(&self.coeffs[k].mul(&out[n - k]).scale(&row[k]))
            });
            out.push(s.neg().mul(&inv0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Formal logarithm of a series with a_0 = 1, via D(log f) = Df / f.
    pub fn log1(&self) -> Result<Self, Error> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Precondition("log1 requires a_0 = 1"));
        }
        let recip = self.reciprocal()?;
        let rows = binomial_rows(self.order());
        let mut out = vec![R::zero(); self.coeffs.len()];
        // (log f)_{n+1} = Σ_k (n choose k) f_{k+1} (1/f)_{n-k}
        for n in 0..self.order() {
            out[n + 1] = (0..=n).fold(R::zero(), |acc, k| {
                acc.add(
                    &self.coeffs[k + 1]
                        .mul(&recip.coeffs[n - k])
                        .scale(&rows[n][k]),
                )
            });
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Formal exponential of a series with a_0 = 0, via D(exp f) = Df · exp f.
    pub fn exp0(&self) -> Result<Self, Error> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Precondition("exp0 requires a_0 = 0"));
        }
        let rows = binomial_rows(self.order());
        let mut out = Vec::with_capacity(self.coeffs.len());
        out.push(R::one());
        for n in 0..self.order() {
            let next = (0..=n).fold(R::zero(), |acc, k| {
                acc.add(&self.coeffs[k + 1].mul(&out[n - k]).scale(&rows[n][k]))
            });
            out.push(next);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// f(cz): a_n ↦ c^n a_n.
    pub fn scale_arg(&self, c: &Rational) -> Self {
        let mut power = rat(1);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.scale(&power));
            power *= c;
        }
        TruncatedSeries { coeffs }
    }

    /// f^e for an exponent `e` in a ring `S` containing `R`, computed as
    /// exp(e · log f). Requires a_0 = 1.
    pub fn power_in<S: Ring>(
        &self,
        exponent: &S,
        embed: impl Fn(&R) -> S,
    ) -> Result<TruncatedSeries<S>, Error> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Precondition("power requires a_0 = 1"));
        }
        self.log1()?.map(|c| embed(c).mul(exponent)).exp0()
    }
}

impl TruncatedSeries<Rational> {
    /// [f(z)]^t as a series over ℚ[t].
    pub fn power_t(&self) -> Result<TruncatedSeries<OrderPolynomial>, Error> {
        self.power_in(&OrderPolynomial::var(), |c| {
            OrderPolynomial::constant(c.clone())
        })
    }

    /// [f(z)]^q for rational q.
    pub fn power_rational(&self, q: &Rational) -> Result<Self, Error> {
        self.power_in(q, Rational::clone)
    }
}

impl TruncatedSeries<OrderPolynomial> {
    /// Coefficientwise evaluation t ↦ `at`.
    pub fn eval_t(&self, at: &Rational) -> TruncatedSeries<Rational> {
        self.map(|p| p.eval(at))
    }

    /// Coefficientwise substitution t ↦ -t.
    pub fn reflect_t(&self) -> Self {
        self.map(OrderPolynomial::reflect)
    }
}

/// Named generating functions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Builtin {
    /// z/(e^z - 1)
    Bernoulli,
    /// 2e^z/(e^{2z} + 1)
    Euler,
    /// e^z
    Unity,
    /// (e^z - 1)/z
    ExpM1OverZ,
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "bernoulli" => Ok(Builtin::Bernoulli),
            "euler" => Ok(Builtin::Euler),
            "unity" => Ok(Builtin::Unity),
            "expm1_over_z" => Ok(Builtin::ExpM1OverZ),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

/// Exact coefficients a_0..a_order of a named g.f.
pub fn builtin(which: Builtin, order: usize) -> TruncatedSeries<Rational> {
    match which {
        Builtin::Unity => TruncatedSeries::from_fn(order, |_| rat(1)),
        Builtin::ExpM1OverZ => TruncatedSeries::from_fn(order, |n| ratio(1, n as i64 + 1)),
        Builtin::Bernoulli => builtin(Builtin::ExpM1OverZ, order)
            .reciprocal()
            .expect("a_0 = 1"),
        // 2e^z/(e^{2z}+1) = 1/cosh z
        Builtin::Euler => TruncatedSeries::from_fn(order, |n| rat(if n % 2 == 0 { 1 } else { 0 }))
            .reciprocal()
            .expect("a_0 = 1"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t() -> OrderPolynomial {
        OrderPolynomial::var()
    }

    fn exp_series(order: usize, c: i64) -> TruncatedSeries<Rational> {
        TruncatedSeries::from_fn(order, |n| rat(c).power(n as u32))
    }

    // Bernoulli numbers from Σ_{k<n+1} (n+1 choose k) B_k = 0, written
    // without the series machinery.
    fn bernoulli_recurrence(max: usize) -> Vec<Rational> {
        let mut b: Vec<Rational> = vec![rat(1)];
        for n in 1..=max {
            let mut s = rat(0);
            for (k, bk) in b.iter().enumerate() {
                s +=
                    Rational::from_integer(int_binomial(BigInt::from(n + 1), BigInt::from(k))) * bk;
            }
            b.push(-s / rat(n as i64 + 1));
        }
        b
    }

    #[test]
    fn mul_examples() {
        let e = exp_series(8, 1);
        let em = exp_series(8, -1);
        assert_eq!(e.mul(&em).unwrap(), TruncatedSeries::identity(8));
        assert_eq!(e.mul(&e).unwrap(), exp_series(8, 2));
        let b = builtin(Builtin::Bernoulli, 8);
        let g = builtin(Builtin::ExpM1OverZ, 8);
        assert_eq!(b.mul(&g).unwrap(), TruncatedSeries::identity(8));
        assert!(matches!(
            e.mul(&exp_series(7, 1)),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn reciprocal_examples() {
        let b = builtin(Builtin::ExpM1OverZ, 4).reciprocal().unwrap();
        assert_eq!(
            b.coeffs(),
            &[rat(1), ratio(-1, 2), ratio(1, 6), rat(0), ratio(-1, 30)]
        );
        let id: TruncatedSeries<Rational> = TruncatedSeries::identity(5);
        assert_eq!(id.reciprocal().unwrap(), id);
        assert_eq!(exp_series(6, 1).reciprocal().unwrap(), exp_series(6, -1));
        let z = TruncatedSeries::from_fn(3, |n| rat(n as i64));
        assert!(matches!(z.reciprocal(), Err(Error::NotInvertible)));
    }

    #[test]
    fn builtin_values() {
        let b = builtin(Builtin::Bernoulli, 12);
        assert_eq!(b.coeffs(), bernoulli_recurrence(12).as_slice());
        assert_eq!(b.coeffs()[12], ratio(-691, 2730));
        let e = builtin(Builtin::Euler, 10);
        let expected = [1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521];
        assert_eq!(e.coeffs(), expected.map(rat).as_slice());
        assert!(builtin(Builtin::Unity, 6)
            .coeffs()
            .iter()
            .all(|c| *c == rat(1)));
        assert!("gamma".parse::<Builtin>().is_err());
    }

    #[test]
    fn log_exp_examples() {
        let id: TruncatedSeries<Rational> = TruncatedSeries::identity(6);
        assert_eq!(id.log1().unwrap(), TruncatedSeries::zero(6));
        let z = TruncatedSeries::from_fn(6, |n| rat(if n == 1 { 1 } else { 0 }));
        assert_eq!(z.exp0().unwrap(), exp_series(6, 1));
        let b = builtin(Builtin::Bernoulli, 12);
        assert_eq!(b.log1().unwrap().exp0().unwrap(), b);
        assert!(b.exp0().is_err());
        assert!(z.log1().is_err());
    }

    #[test]
    fn power_t_examples() {
        let p = builtin(Builtin::Bernoulli, 12).power_t().unwrap();
        assert_eq!(p.coeffs()[1], t().scale(&ratio(-1, 2)));
        assert_eq!(
            p.coeffs()[2],
            OrderPolynomial::from_rationals([rat(0), ratio(-1, 12), ratio(1, 4)])
        );
        assert_eq!(p.eval_t(&rat(0)), TruncatedSeries::identity(12));
        let doubled = builtin(Builtin::Unity, 5).power_t().unwrap();
        assert!(matches!(
            exp_series(5, 2).scale_coeffs(&rat(2)).power_t(),
            Err(Error::Precondition(_))
        ));
        assert_eq!(doubled.eval_t(&rat(3)), exp_series(5, 3));
    }

    #[test]
    fn scale_arg_examples() {
        let b = builtin(Builtin::Bernoulli, 6);
        assert_eq!(b.scale_arg(&rat(1)), b);
        assert_eq!(b.scale_arg(&rat(2)).coeffs()[2], ratio(2, 3));
        // ½(η - u): f(η, z/2) e^{-z/2} = 2/(e^z + 1)
        let eta_minus_u = builtin(Builtin::Euler, 8).mul(&exp_series(8, -1)).unwrap();
        let half = eta_minus_u.scale_arg(&ratio(1, 2));
        let denom = TruncatedSeries::from_fn(8, |n| if n == 0 { rat(1) } else { ratio(1, 2) });
        assert_eq!(half, denom.reciprocal().unwrap());
    }

    fn series_strategy() -> impl Strategy<Value = TruncatedSeries<Rational>> {
        prop::collection::vec((-6i64..7, 1i64..5), 8).prop_map(|v| {
            let mut c: Vec<Rational> = v.into_iter().map(|(n, d)| ratio(n, d)).collect();
            c[0] = rat(1);
            TruncatedSeries::new(c).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn power_t_matches_repeated_products(f in series_strategy()) {
            let p = f.power_t().unwrap();
            let mut acc = f.clone();
            prop_assert_eq!(p.eval_t(&rat(1)), acc.clone());
            for m in 2..=3 {
                acc = acc.mul(&f).unwrap();
                prop_assert_eq!(p.eval_t(&rat(m)), acc.clone());
            }
            prop_assert_eq!(p.eval_t(&rat(-1)), f.reciprocal().unwrap());
            for (n, c) in p.coeffs().iter().enumerate() {
                prop_assert!(c.degree().is_none_or(|d| d <= n));
            }
        }

        #[test]
        fn powers_add_exponents(f in series_strategy(), s in (-5i64..6, 1i64..4), u in (-5i64..6, 1i64..4)) {
            let s = ratio(s.0, s.1);
            let u = ratio(u.0, u.1);
            let p = f.power_t().unwrap();
            let lhs = p.eval_t(&s).mul(&p.eval_t(&u)).unwrap();
            prop_assert_eq!(lhs, p.eval_t(&(s + u)));
        }

        #[test]
        fn exp_inverts_log(f in series_strategy()) {
            prop_assert_eq!(f.log1().unwrap().exp0().unwrap(), f);
        }
    }
}
