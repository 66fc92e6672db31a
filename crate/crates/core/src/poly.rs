//! Dense univariate polynomials over a [`Ring`].
//!
//! [`OrderPolynomial`] (ℚ[t]) holds the order-dependent numbers such as
//! B_v^(t). Nesting gives [`BiPolynomial`] = ℚ[s][t], used wherever an
//! identity involves two independent orders.

use std::fmt;

use num_traits::Signed;

use crate::ring::{format_rational, rational_abs_is_one, Rational, Ring};

/// Polynomial with coefficients `coeffs[i]` of `var^i`; never stores
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

/// Element of ℚ[t].
pub type OrderPolynomial = UniPoly<Rational>;

/// Element of ℚ[s][t]: the outer variable is `t`, inner coefficients are
/// polynomials in `s`.
pub type BiPolynomial = UniPoly<OrderPolynomial>;

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::new(vec![R::zero(), R::one()])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `var^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Evaluates at a point of a ring `S` into which `R` embeds (Horner).
    pub fn eval_in<S: Ring>(&self, at: &S, embed: impl Fn(&R) -> S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc.mul(at).add(&embed(c)))
    }

    pub fn eval(&self, at: &R) -> R {
        self.eval_in(at, R::clone)
    }

    /// Substitutes `var ↦ -var`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        )
    }
}

impl OrderPolynomial {
    /// Polynomial with the given rational coefficients, lowest degree first.
    pub fn from_rationals<I: IntoIterator<Item = Rational>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().collect())
    }

    /// The same polynomial read as a polynomial in the outer variable `t`
    /// of ℚ[s][t].
    pub fn in_outer(&self) -> BiPolynomial {
        self.map(|c| OrderPolynomial::constant(c.clone()))
    }

    /// The same polynomial read in the inner variable `s` of ℚ[s][t].
    pub fn in_inner(&self) -> BiPolynomial {
        BiPolynomial::constant(self.clone())
    }

    /// Exact rendering such as `1/4 t^2 - 1/12 t`.
    pub fn display_in(&self, var: &str) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if Ring::is_zero(c) {
                continue;
            }
            let negative = c.is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let magnitude = if negative { -c } else { c.clone() };
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 || !rational_abs_is_one(&magnitude) {
                out.push_str(&format_rational(&magnitude));
                if i > 0 {
                    out.push(' ');
                }
            }
            out.push_str(&mono);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for OrderPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        Self::constant(R::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).add(&other.coeff(i))).collect())
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i).sub(&other.coeff(i))).collect())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(R::neg).collect())
    }

    fn from_rational(q: &Rational) -> Self {
        Self::constant(R::from_rational(q))
    }

    fn inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => c.inverse().map(Self::constant),
            _ => None,
        }
    }

    fn scale(&self, q: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.scale(q)).collect())
    }
}

/// Lower factorial x(x-1)...(x-k+1); one when `k = 0`.
pub fn falling_factorial<R: Ring>(x: &R, k: usize) -> R {
    (0..k).fold(R::one(), |acc, j| acc.mul(&x.sub(&R::from_int(j as i64))))
}
