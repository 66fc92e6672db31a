//! Umbrae as moment sequences.
//!
//! An umbra is identified with its moment sequence (equivalently its
//! exponential g.f.). The tuples used here all have identical components,
//! so the multivariate moment at v depends only on |v|, and dot-products,
//! scalings and sums of uncorrelated tuples act on the base series alone.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::multiindex::{partitions, MultiIndex};
use crate::poly::{falling_factorial, OrderPolynomial};
use crate::ring::{ratio, Rational, Ring};
use crate::series::{builtin, Builtin, TruncatedSeries};
use crate::Error;

#[derive(Clone, PartialEq, Debug)]
pub struct Umbra<R> {
    moments: TruncatedSeries<R>,
    label: String,
}

/// Umbra whose moments are polynomials in the order parameter t.
pub type ParametricUmbra = Umbra<OrderPolynomial>;

impl<R: Ring> Umbra<R> {
    /// Requires a_0 = 1.
    pub fn new(label: impl Into<String>, moments: TruncatedSeries<R>) -> Result<Self, Error> {
        if !moments.coeffs()[0].is_one() {
            return Err(Error::Precondition("an umbra has a_0 = E[1] = 1"));
        }
        Ok(Umbra {
            moments,
            label: label.into(),
        })
    }

    /// ε: the umbra with g.f. 1.
    pub fn epsilon(order: usize) -> Self {
        Umbra {
            moments: TruncatedSeries::identity(order),
            label: "ε".into(),
        }
    }

    pub fn moments(&self) -> &TruncatedSeries<R> {
        &self.moments
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.moments.order()
    }

    /// α ≡ γ: equal moment sequences up to the common truncation.
    pub fn similar(&self, other: &Self) -> bool {
        let n = self.order().min(other.order());
        self.moments.coeffs()[..=n] == other.moments.coeffs()[..=n]
    }

    /// cα, with g.f. f(α, cz).
    pub fn scale(&self, c: &Rational) -> Self {
        Umbra {
            moments: self.moments.scale_arg(c),
            label: format!("{}({})", crate::ring::format_rational(c), self.label),
        }
    }

    /// α + γ for uncorrelated α, γ: product of g.f.s.
    pub fn sum(&self, other: &Self) -> Result<Self, Error> {
        Ok(Umbra {
            moments: self.moments.mul(&other.moments)?,
            label: format!("{} + {}", self.label, other.label),
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        Umbra {
            moments: self.moments.truncate(order),
            label: self.label.clone(),
        }
    }

    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

impl Umbra<Rational> {
    pub fn builtin(which: Builtin, order: usize) -> Self {
        let label = match which {
            Builtin::Bernoulli => "ι",
            Builtin::Euler => "η",
            Builtin::Unity => "u",
            Builtin::ExpM1OverZ => "-1.ι",
        };
        Umbra {
            moments: builtin(which, order),
            label: label.into(),
        }
    }

    pub fn bernoulli(order: usize) -> Self {
        Self::builtin(Builtin::Bernoulli, order)
    }

    pub fn euler(order: usize) -> Self {
        Self::builtin(Builtin::Euler, order)
    }

    pub fn unity(order: usize) -> Self {
        Self::builtin(Builtin::Unity, order)
    }

    /// η - u ≡ η + (-1.u), with g.f. f(η, z) e^{-z}.
    pub fn euler_minus_unity(order: usize) -> Self {
        Self::euler(order)
            .sum(&Self::unity(order).inverse())
            .expect("same order")
            .relabel("η - u")
    }

    /// -1.α, the inverse of α: reciprocal g.f.
    pub fn inverse(&self) -> Self {
        Umbra {
            moments: self.moments.reciprocal().expect("a_0 = 1 is a unit"),
            label: format!("-1.{}", self.label),
        }
    }

    /// t.α with symbolic t: g.f. [f(α, z)]^t.
    pub fn dot_symbolic(&self) -> ParametricUmbra {
        Umbra {
            moments: self.moments.power_t().expect("a_0 = 1"),
            label: format!("t.{}", self.label),
        }
    }

    /// q.α for rational q.
    pub fn dot_rational(&self, q: &Rational) -> Self {
        Umbra {
            moments: self.moments.power_rational(q).expect("a_0 = 1"),
            label: format!("{}.{}", crate::ring::format_rational(q), self.label),
        }
    }
}

impl ParametricUmbra {
    /// -t.α: substitutes t ↦ -t, so that -t.α + t.α ≡ ε.
    pub fn inverse(&self) -> Self {
        Umbra {
            moments: self.moments.reflect_t(),
            label: format!("-({})", self.label),
        }
    }

    /// Specializes the order parameter.
    pub fn at(&self, t: &Rational) -> Umbra<Rational> {
        Umbra {
            moments: self.moments.eval_t(t),
            label: format!("{}[t={}]", self.label, crate::ring::format_rational(t)),
        }
    }
}

/// The d-tuple (α, …, α).
#[derive(Clone, PartialEq, Debug)]
pub struct TupleUmbra<R> {
    base: Umbra<R>,
    dim: usize,
}

pub type ParametricTuple = TupleUmbra<OrderPolynomial>;

impl<R: Ring> TupleUmbra<R> {
    pub fn new(base: Umbra<R>, dim: usize) -> Self {
        assert!(dim >= 1, "tuple dimension must be >= 1");
        TupleUmbra { base, dim }
    }

    pub fn base(&self) -> &Umbra<R> {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// E[μ^v] = a_{|v|} of the base umbra.
    pub fn mv_moment(&self, v: &MultiIndex) -> Result<R, Error> {
        self.check_dim(v.dim())?;
        self.base.moments.coeff(v.total_degree()).cloned()
    }

    fn check_dim(&self, dim: usize) -> Result<(), Error> {
        if dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: dim,
            });
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TupleUmbra::new(self.base.scale(c), self.dim)
    }

    /// Sum of uncorrelated tuples.
    pub fn sum(&self, other: &Self) -> Result<Self, Error> {
        self.check_dim(other.dim)?;
        Ok(TupleUmbra::new(self.base.sum(&other.base)?, self.dim))
    }

    pub fn similar(&self, other: &Self) -> bool {
        self.dim == other.dim && self.base.similar(&other.base)
    }
}

impl TupleUmbra<Rational> {
    pub fn bernoulli(dim: usize, order: usize) -> Self {
        TupleUmbra::new(Umbra::bernoulli(order), dim)
    }

    pub fn euler(dim: usize, order: usize) -> Self {
        TupleUmbra::new(Umbra::euler(order), dim)
    }

    pub fn unity(dim: usize, order: usize) -> Self {
        TupleUmbra::new(Umbra::unity(order), dim)
    }

    /// The tuple η - u.
    pub fn euler_minus_unity(dim: usize, order: usize) -> Self {
        TupleUmbra::new(Umbra::euler_minus_unity(order), dim)
    }

    pub fn inverse(&self) -> Self {
        TupleUmbra::new(self.base.inverse(), self.dim)
    }

    /// t.μ via the g.f. route [f(μ, z)]^t.
    pub fn dot_product_gf(&self) -> ParametricTuple {
        TupleUmbra::new(self.base.dot_symbolic(), self.dim)
    }

    /// E[(t.μ)^v] via the sum over multipartite partitions of v:
    /// Σ_λ v!/(m(λ)! λ!) (t)_{l(λ)} Π g_{λ_i}^{r_i}.
    pub fn dot_product_partition(&self, v: &MultiIndex) -> Result<OrderPolynomial, Error> {
        self.check_dim(v.dim())?;
        if v.total_degree() > self.base.order() {
            return Err(Error::TruncationExceeded {
                requested: v.total_degree(),
                order: self.base.order(),
            });
        }
        let parts = partitions(v)?;
        let v_fact = v.factorial();
        let t = OrderPolynomial::var();
        let moments = self.base.moments.coeffs();
        let total = parts
            .par_iter()
            .map(|lambda| {
                let denom: BigInt = lambda.multiplicity_factorial() * lambda.factorial();
                let weight = Rational::new(v_fact.clone(), denom);
                let product = lambda
                    .columns()
                    .iter()
                    .zip(lambda.multiplicities())
                    .fold(weight, |acc, (col, &r)| {
                        acc * moments[col.total_degree()].power(r)
                    });
                falling_factorial(&t, lambda.length()).scale(&product)
            })
            .reduce(OrderPolynomial::zero, |a, b| a.add(&b));
        Ok(total)
    }
}

impl ParametricTuple {
    /// -t.μ
    pub fn inverse(&self) -> Self {
        TupleUmbra::new(self.base.inverse(), self.dim)
    }

    pub fn at(&self, t: &Rational) -> TupleUmbra<Rational> {
        TupleUmbra::new(self.base.at(t), self.dim)
    }
}

/// Which family of t-th-order numbers or polynomials.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Bernoulli,
    Euler,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Bernoulli, Family::Euler];

    pub fn name(self) -> &'static str {
        match self {
            Family::Bernoulli => "bernoulli",
            Family::Euler => "euler",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "bernoulli" => Ok(Family::Bernoulli),
            "euler" => Ok(Family::Euler),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

/// Base Bernoulli and Euler moments together with their t-th powers.
///
/// Every number and polynomial in the crate is read from one of these, so
/// replacing a stored moment (see [`Tables::perturbed`]) propagates to all
/// downstream computations.
#[derive(Clone, Debug)]
pub struct Tables {
    bernoulli: Umbra<Rational>,
    euler: Umbra<Rational>,
    bernoulli_t: ParametricUmbra,
    euler_t: ParametricUmbra,
    // ½[t.(η - u)]
    half_euler_minus_unity_t: ParametricUmbra,
}

impl Tables {
    pub fn new(order: usize) -> Self {
        Self::from_umbrae(Umbra::bernoulli(order), Umbra::euler(order))
            .expect("builtin moments are consistent")
    }

    /// Tables built from explicit base moments (a_0 must be 1, orders equal).
    pub fn from_moments(
        bernoulli: TruncatedSeries<Rational>,
        euler: TruncatedSeries<Rational>,
    ) -> Result<Self, Error> {
        Self::from_umbrae(Umbra::new("ι", bernoulli)?, Umbra::new("η", euler)?)
    }

    fn from_umbrae(bernoulli: Umbra<Rational>, euler: Umbra<Rational>) -> Result<Self, Error> {
        if bernoulli.order() != euler.order() {
            return Err(Error::OrderMismatch {
                left: bernoulli.order(),
                right: euler.order(),
            });
        }
        let order = bernoulli.order();
        let eta_minus_u = euler.sum(&Umbra::unity(order).inverse())?.relabel("η - u");
        Ok(Tables {
            bernoulli_t: bernoulli.dot_symbolic(),
            euler_t: euler.dot_symbolic(),
            half_euler_minus_unity_t: eta_minus_u
                .dot_symbolic()
                .scale(&ratio(1, 2))
                .relabel("½[t.(η - u)]"),
            bernoulli,
            euler,
        })
    }

    /// Copy with the stored n-th base moment of `family` shifted by `delta`.
    pub fn perturbed(&self, family: Family, n: usize, delta: &Rational) -> Result<Self, Error> {
        let mut b = self.bernoulli.moments().clone();
        let mut e = self.euler.moments().clone();
        let target = match family {
            Family::Bernoulli => &mut b,
            Family::Euler => &mut e,
        };
        let mut coeffs = target.coeffs().to_vec();
        let slot = coeffs.get_mut(n).ok_or(Error::TruncationExceeded {
            requested: n,
            order: self.order(),
        })?;
        *slot += delta;
        *target = TruncatedSeries::new(coeffs)?;
        Self::from_moments(b, e)
    }

    pub fn order(&self) -> usize {
        self.bernoulli.order()
    }

    pub fn base(&self, family: Family) -> &Umbra<Rational> {
        match family {
            Family::Bernoulli => &self.bernoulli,
            Family::Euler => &self.euler,
        }
    }

    /// t.ι or t.η
    pub fn dot(&self, family: Family) -> &ParametricUmbra {
        match family {
            Family::Bernoulli => &self.bernoulli_t,
            Family::Euler => &self.euler_t,
        }
    }

    /// ½[t.(η - u)], the umbra behind the Euler polynomials.
    pub fn half_euler_minus_unity_t(&self) -> &ParametricUmbra {
        &self.half_euler_minus_unity_t
    }

    /// B_v^(t) or 𝔈_v^(t) as a polynomial in t.
    pub fn number(&self, family: Family, v: &MultiIndex) -> Result<OrderPolynomial, Error> {
        self.dot(family).moments().coeff(v.total_degree()).cloned()
    }

    /// Like [`Tables::number`] at a fixed rational order.
    pub fn number_at(
        &self,
        family: Family,
        v: &MultiIndex,
        t: &Rational,
    ) -> Result<Rational, Error> {
        Ok(self.number(family, v)?.eval(t))
    }
}

/// The classical numbers B_n (or E_n) for n ≤ order.
pub fn classical_numbers(family: Family, order: usize) -> Vec<Rational> {
    let which = match family {
        Family::Bernoulli => Builtin::Bernoulli,
        Family::Euler => Builtin::Euler,
    };
    builtin(which, order).coeffs().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn mi(p: &[u32]) -> MultiIndex {
        MultiIndex::new(p.to_vec())
    }

    fn t() -> OrderPolynomial {
        OrderPolynomial::var()
    }

    #[test]
    fn mv_moment_examples() {
        let iota = TupleUmbra::bernoulli(2, 12);
        assert_eq!(iota.mv_moment(&mi(&[1, 1])).unwrap(), ratio(1, 6));
        let eta = TupleUmbra::euler(3, 12);
        assert_eq!(eta.mv_moment(&mi(&[1, 0, 0])).unwrap(), rat(0));
        assert_eq!(eta.mv_moment(&mi(&[0, 0, 0])).unwrap(), rat(1));
        assert!(matches!(
            eta.mv_moment(&mi(&[13, 0, 0])),
            Err(Error::TruncationExceeded { .. })
        ));
        assert!(matches!(
            eta.mv_moment(&mi(&[1, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn dot_product_gf_examples() {
        let iota_t = TupleUmbra::bernoulli(1, 12).dot_product_gf();
        assert_eq!(
            iota_t.mv_moment(&mi(&[1])).unwrap(),
            t().scale(&ratio(-1, 2))
        );
        let eta_t = TupleUmbra::euler(1, 12).dot_product_gf();
        assert_eq!(eta_t.mv_moment(&mi(&[2])).unwrap(), t().neg());
        for tuple in [iota_t, eta_t] {
            for n in 1..=12 {
                assert_eq!(tuple.at(&rat(0)).mv_moment(&mi(&[n])).unwrap(), rat(0));
            }
        }
    }

    #[test]
    fn partition_path_normalization() {
        let iota = TupleUmbra::bernoulli(2, 12);
        let b2 = OrderPolynomial::from_rationals([rat(0), ratio(-1, 12), ratio(1, 4)]);
        assert_eq!(iota.dot_product_partition(&mi(&[1, 1])).unwrap(), b2);
        let iota1 = TupleUmbra::bernoulli(1, 12);
        assert_eq!(iota1.dot_product_partition(&mi(&[2])).unwrap(), b2);
        let eta = TupleUmbra::euler(1, 12);
        assert_eq!(
            eta.dot_product_partition(&mi(&[1])).unwrap(),
            OrderPolynomial::zero()
        );
        let unity = TupleUmbra::unity(1, 12);
        let m2 = unity.dot_product_partition(&mi(&[2])).unwrap();
        for m in 0..6 {
            assert_eq!(m2.eval(&rat(m)), rat(m * m));
        }
        assert!(matches!(
            iota.dot_product_partition(&mi(&[0, 0])),
            Err(Error::ZeroMultiIndex)
        ));
    }

    #[test]
    fn scale_sum_inverse_examples() {
        let iota_t = TupleUmbra::bernoulli(2, 12).dot_product_gf();
        let eps = iota_t.inverse().sum(&iota_t).unwrap();
        assert!(eps.similar(&TupleUmbra::new(Umbra::epsilon(12), 2)));

        let half = TupleUmbra::euler_minus_unity(1, 12).scale(&ratio(1, 2));
        assert_eq!(half.mv_moment(&mi(&[1])).unwrap(), ratio(-1, 2));

        let inv = TupleUmbra::bernoulli(1, 12)
            .dot_product_gf()
            .inverse()
            .at(&rat(1));
        for n in 0..=12u32 {
            assert_eq!(inv.mv_moment(&mi(&[n])).unwrap(), ratio(1, n as i64 + 1));
        }
        assert!(matches!(
            TupleUmbra::bernoulli(1, 12).sum(&TupleUmbra::bernoulli(2, 12)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn euler_minus_unity_examples() {
        let m = Umbra::euler_minus_unity(12);
        assert_eq!(m.moments().coeffs()[..3], [rat(1), rat(-1), rat(0)]);
    }

    #[test]
    fn inverse_euler_is_rademacher() {
        let inv = Umbra::euler(12).inverse();
        for (n, a) in inv.moments().coeffs().iter().enumerate() {
            assert_eq!(*a, rat(if n % 2 == 0 { 1 } else { 0 }));
        }
    }

    #[test]
    fn perturbation_changes_only_target() {
        let tables = Tables::new(12);
        let bumped = tables.perturbed(Family::Bernoulli, 2, &rat(1)).unwrap();
        assert_eq!(
            bumped.base(Family::Bernoulli).moments().coeffs()[2],
            ratio(7, 6)
        );
        assert_eq!(bumped.base(Family::Euler), tables.base(Family::Euler));
        assert!(tables.perturbed(Family::Euler, 13, &rat(1)).is_err());
    }
}
