//! Multivariate Bernoulli and Euler polynomials.
//!
//! [`MvPolynomial`] is a sparse polynomial in x_1..x_d with coefficients in
//! any [`Ring`], in practice ℚ[t] (or ℚ[s][t] for addition theorems).
//! Both families are Appell-type: B_v^(t)(x) = E[(x + t.ι)^v] and
//! E_v^(t)(x) = E[(x + ½[t.(η - u)])^v], so each is the monomial x^v shifted
//! by a parametric tuple umbra (see [`umbral_shift`]).

use std::collections::BTreeMap;
use std::fmt;

use crate::multiindex::{binomial, sub_indices, MultiIndex};
use crate::poly::{BiPolynomial, OrderPolynomial};
use crate::ring::{format_rational, rat, ratio, Rational, Ring};
use crate::series::{builtin, Builtin, TruncatedSeries};
use crate::umbrae::{Family, Tables, TupleUmbra, Umbra};
use crate::verify::{ReportBuilder, VerificationReport};
use crate::Error;

#[derive(Clone, PartialEq, Debug)]
pub struct MvPolynomial<R> {
    dim: usize,
    terms: BTreeMap<MultiIndex, R>,
}

impl<R: Ring> MvPolynomial<R> {
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "polynomial dimension must be >= 1");
        MvPolynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: R) -> Self {
        Self::monomial(MultiIndex::zero(dim), c)
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, R::one())
    }

    /// c · x^exponent
    pub fn monomial(exponent: MultiIndex, c: R) -> Self {
        let mut p = Self::zero(exponent.dim());
        p.add_term(exponent, c);
        p
    }

    /// x_i (zero-based i)
    pub fn var(dim: usize, i: usize) -> Self {
        Self::monomial(MultiIndex::unit(dim, i), R::one())
    }

    pub fn from_terms(
        dim: usize,
        terms: impl IntoIterator<Item = (MultiIndex, R)>,
    ) -> Result<Self, Error> {
        let mut p = Self::zero(dim);
        for (e, c) in terms {
            p.check_dim(e.dim())?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &R)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: &MultiIndex) -> R {
        self.terms.get(exponent).cloned().unwrap_or_else(R::zero)
    }

    /// Largest |w| over stored terms; `None` for zero.
    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(MultiIndex::total_degree).max()
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

    fn add_term(&mut self, exponent: MultiIndex, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exponent) {
            Some(existing) => {
                *existing = existing.add(&c);
                if existing.is_zero() {
                    self.terms.remove(&exponent);
                }
            }
            None => {
                self.terms.insert(exponent, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_dim(other.dim)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(R::neg)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_dim(other.dim)?;
        let mut out = Self::zero(self.dim);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2)?, c1.mul(c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a.mul(c));
        }
        out
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MvPolynomial<S> {
        let mut out = MvPolynomial::zero(self.dim);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Affine change of variables x ↦ a·x + b·1, where 1 is the all-ones
    /// tuple.
    pub fn affine_substitute(&self, a: &Rational, b: &R) -> Self {
        let mut out = Self::zero(self.dim);
        for (w, c) in &self.terms {
            // Π_i (a x_i + b)^{w_i} = Σ_{j ≤ w} (w choose j) a^{|j|} b^{|w-j|} x^j
            for j in sub_indices(w) {
                let rest = w.checked_sub(&j).expect("j <= w").total_degree();
                let weight = Rational::from_integer(binomial(w, &j).expect("same dim"))
                    * num_traits::pow(a.clone(), j.total_degree());
                out.add_term(j, c.mul(&b.power(rest as u32)).scale(&weight));
            }
        }
        out
    }

    /// P(x) ↦ P(x + y) as a polynomial in 2d variables (x first, then y).
    pub fn translate_by_new_variables(&self) -> MvPolynomial<R> {
        let mut out = MvPolynomial::zero(2 * self.dim);
        for (w, c) in &self.terms {
            for j in sub_indices(w) {
                let rest = w.checked_sub(&j).expect("j <= w");
                let weight = Rational::from_integer(binomial(w, &j).expect("same dim"));
                out.add_term(j.concat(&rest), c.scale(&weight));
            }
        }
        out
    }

    /// Re-embeds into `total_dim` variables starting at `offset`.
    pub fn embed(&self, offset: usize, total_dim: usize) -> Result<MvPolynomial<R>, Error> {
        if offset + self.dim > total_dim {
            return Err(Error::DimensionMismatch {
                expected: total_dim,
                found: offset + self.dim,
            });
        }
        let mut out = MvPolynomial::zero(total_dim);
        for (w, c) in &self.terms {
            let mut parts = vec![0u32; total_dim];
            parts[offset..offset + self.dim].copy_from_slice(w.parts());
            out.add_term(MultiIndex::new(parts), c.clone());
        }
        Ok(out)
    }
}

impl MvPolynomial<OrderPolynomial> {
    /// Exact value at x ∈ ℚ^d and order t.
    pub fn evaluate(&self, x: &[Rational], t: &Rational) -> Result<Rational, Error> {
        self.check_dim(x.len())?;
        let mut total = <Rational as Ring>::zero();
        for (w, c) in &self.terms {
            let mono = w
                .parts()
                .iter()
                .zip(x)
                .fold(<Rational as Ring>::one(), |acc, (&p, xi)| acc * xi.power(p));
            total += c.eval(t) * mono;
        }
        Ok(total)
    }

    /// Specializes t, keeping x symbolic.
    pub fn at_order(&self, t: &Rational) -> MvPolynomial<OrderPolynomial> {
        self.map_coeffs(|c| OrderPolynomial::constant(c.eval(t)))
    }

    /// Reads the coefficients as polynomials in the outer variable t of ℚ[s][t].
    pub fn in_outer(&self) -> MvPolynomial<BiPolynomial> {
        self.map_coeffs(OrderPolynomial::in_outer)
    }

    /// Reads the coefficients as polynomials in the inner variable s of ℚ[s][t].
    pub fn in_inner(&self) -> MvPolynomial<BiPolynomial> {
        self.map_coeffs(OrderPolynomial::in_inner)
    }
}

/// Σ_w c_w E[T^w]: every monomial x^w is replaced by the multivariate moment
/// of an umbra uncorrelated with the coefficients.
pub fn umbral_substitute<R: Ring>(p: &MvPolynomial<R>, umbra: &TupleUmbra<R>) -> Result<R, Error> {
    p.check_dim(umbra.dim())?;
    let mut total = R::zero();
    for (w, c) in p.terms() {
        total = total.add(&c.mul(&umbra.mv_moment(w)?));
    }
    Ok(total)
}

/// E[P(x + T)] with x kept symbolic: x^w ↦ Σ_{j ≤ w} (w choose j) x^{w-j} E[T^j].
pub fn umbral_shift<R: Ring>(
    p: &MvPolynomial<R>,
    umbra: &TupleUmbra<R>,
) -> Result<MvPolynomial<R>, Error> {
    p.check_dim(umbra.dim())?;
    let mut out = MvPolynomial::zero(p.dim());
    for (w, c) in p.terms() {
        for j in sub_indices(w) {
            let moment = umbra.mv_moment(&j)?;
            let weight = Rational::from_integer(binomial(w, &j)?);
            let rest = w.checked_sub(&j).expect("j <= w");
            out.add_term(rest, c.mul(&moment).scale(&weight));
        }
    }
    Ok(out)
}

/// E[(x + T)^v] for a parametric tuple T.
fn shifted_monomial(
    v: &MultiIndex,
    umbra: &TupleUmbra<OrderPolynomial>,
) -> Result<MvPolynomial<OrderPolynomial>, Error> {
    if v.total_degree() > umbra.base().order() {
        return Err(Error::TruncationExceeded {
            requested: v.total_degree(),
            order: umbra.base().order(),
        });
    }
    umbral_shift(
        &MvPolynomial::monomial(v.clone(), OrderPolynomial::one()),
        umbra,
    )
}

/// B_v^(t)(x) = Σ_{k ≤ v} (v choose k) x^{v-k} B_k^(t).
pub fn bernoulli_poly(
    tables: &Tables,
    v: &MultiIndex,
) -> Result<MvPolynomial<OrderPolynomial>, Error> {
    shifted_monomial(
        v,
        &TupleUmbra::new(tables.dot(Family::Bernoulli).clone(), v.dim()),
    )
}

/// E_v^(t)(x) = Σ_{k ≤ v} (v choose k) x^{v-k} 2^{-|k|} E[{t.(η - u)}^k].
pub fn euler_poly(tables: &Tables, v: &MultiIndex) -> Result<MvPolynomial<OrderPolynomial>, Error> {
    shifted_monomial(
        v,
        &TupleUmbra::new(tables.half_euler_minus_unity_t().clone(), v.dim()),
    )
}

pub fn family_poly(
    tables: &Tables,
    family: Family,
    v: &MultiIndex,
) -> Result<MvPolynomial<OrderPolynomial>, Error> {
    match family {
        Family::Bernoulli => bernoulli_poly(tables, v),
        Family::Euler => euler_poly(tables, v),
    }
}

/// Human-readable rendering of ring elements.
pub trait Pretty {
    fn pretty(&self) -> String;

    /// True when the rendering is a single signed factor that needs no
    /// parentheses in front of a monomial.
    fn is_atomic(&self) -> bool;
}

impl Pretty for Rational {
    fn pretty(&self) -> String {
        format_rational(self)
    }

    fn is_atomic(&self) -> bool {
        true
    }
}

impl Pretty for OrderPolynomial {
    fn pretty(&self) -> String {
        self.display_in("t")
    }

    fn is_atomic(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }
}

impl Pretty for BiPolynomial {
    fn pretty(&self) -> String {
        let mut parts = Vec::new();
        for (i, inner) in self.coeffs().iter().enumerate().rev() {
            if Ring::is_zero(inner) {
                continue;
            }
            let tpow = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            let inner_text = inner.display_in("s");
            parts.push(match (inner.degree(), tpow.is_empty()) {
                (_, true) => inner_text,
                (Some(0), false) if inner_text == "1" => tpow,
                (Some(0), false) => format!("{inner_text} {tpow}"),
                _ => format!("({inner_text}) {tpow}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    fn is_atomic(&self) -> bool {
        self.degree().is_none_or(|d| d == 0) && self.coeff(0).is_atomic()
    }
}

fn monomial_text(w: &MultiIndex) -> String {
    let mut factors = Vec::new();
    for (i, &p) in w.parts().iter().enumerate() {
        match p {
            0 => {}
            1 => factors.push(format!("x{}", i + 1)),
            _ => factors.push(format!("x{}^{}", i + 1, p)),
        }
    }
    factors.join(" ")
}

impl<R: Ring + Pretty> fmt::Display for MvPolynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // graded, highest degree first
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            b.0.total_degree()
                .cmp(&a.0.total_degree())
                .then_with(|| b.0.cmp(a.0))
        });
        for (i, (w, c)) in terms.into_iter().enumerate() {
            let mono = monomial_text(w);
            let mut coeff = c.pretty();
            let mut negative = false;
            if c.is_atomic() {
                if let Some(stripped) = coeff.strip_prefix('-') {
                    negative = true;
                    coeff = stripped.to_string();
                }
            } else {
                coeff = format!("({coeff})");
            }
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            match (mono.is_empty(), coeff.as_str()) {
                (true, _) => f.write_str(&coeff)?,
                (false, "1") => f.write_str(&mono)?,
                (false, _) => write!(f, "{coeff} {mono}")?,
            }
        }
        Ok(())
    }
}

/// Records one case per side of the addition theorems at v:
/// 𝓑_v^(t+s)(x + y) = Σ (v choose k) 𝓑_k^(t)(x) 𝓑_{v-k}^(s)(y) in ℚ[s,t][x, y],
/// and Σ (v choose k) 𝓑_k^(t)(x) 𝓑_{v-k}^(-t)(x) = 2^{|v|} x^v; likewise for 𝓔.
pub fn record_addition_theorem(tables: &Tables, v: &MultiIndex, report: &mut ReportBuilder) {
    let d = v.dim();
    let t_plus_s = OrderPolynomial::var()
        .in_outer()
        .add(&OrderPolynomial::var().in_inner());
    for family in Family::ALL {
        let result = (|| -> Result<_, Error> {
            let lhs = family_poly(tables, family, v)?
                .map_coeffs(|c| c.eval_in(&t_plus_s, BiPolynomial::from_rational))
                .translate_by_new_variables();
            let mut rhs = MvPolynomial::zero(2 * d);
            let mut reflected_sum = MvPolynomial::zero(d);
            for k in sub_indices(v) {
                let rest = v.checked_sub(&k).expect("k <= v");
                let weight = Rational::from_integer(binomial(v, &k)?);
                let first = family_poly(tables, family, &k)?;
                let second = family_poly(tables, family, &rest)?;
                let product = first
                    .in_outer()
                    .embed(0, 2 * d)?
                    .mul(&second.in_inner().embed(d, 2 * d)?)?;
                rhs = rhs.add(&product.map_coeffs(|c| c.scale(&weight)))?;
                let reflected = second.map_coeffs(OrderPolynomial::reflect);
                reflected_sum =
                    reflected_sum.add(&first.mul(&reflected)?.map_coeffs(|c| c.scale(&weight)))?;
            }
            let doubled = MvPolynomial::monomial(
                v.clone(),
                OrderPolynomial::constant(crate::ring::rat(2).power(v.total_degree() as u32)),
            );
            Ok((lhs, rhs, reflected_sum, doubled))
        })();
        match result {
            Ok((lhs, rhs, reflected_sum, doubled)) => {
                if lhs == rhs {
                    report.pass();
                } else {
                    let diff = lhs.sub(&rhs).expect("same dimension");
                    let (mono, _) = diff.terms().next().expect("nonzero difference");
                    report.fail(
                        format!("{family} v={v} first differing monomial (x,y)^{mono}"),
                        lhs.to_string(),
                        rhs.to_string(),
                    );
                }
                report.check(
                    || format!("{family} v={v} s=-t"),
                    &reflected_sum,
                    &doubled,
                    |p| p.to_string(),
                );
            }
            Err(e) => report.error(format!("{family} v={v}"), &e),
        }
    }
}

/// Addition theorems for a single v.
pub fn addition_theorem_check(tables: &Tables, v: &MultiIndex) -> VerificationReport {
    let mut report = ReportBuilder::new("addition_theorem");
    record_addition_theorem(tables, v, &mut report);
    report.finish()
}

/// Compares the d = 1 polynomial families with the coefficients of
/// e^{xz} (z/(e^z - 1))^t and e^{xz} (2/(e^z + 1))^t, n ≤ `max_n`. The g.f.s
/// are built as ((e^z - 1)/z)^{-t} and ((e^z + 1)/2)^{-t}, independently of
/// the stored moment tables.
pub fn poly_gf_check(tables: &Tables, max_n: usize) -> VerificationReport {
    let mut report = ReportBuilder::new("poly_gf");
    let max_n = max_n.min(tables.order());
    // ring ℚ[t][x], outer variable x
    type XPoly = crate::poly::UniPoly<OrderPolynomial>;
    let exp_xz = TruncatedSeries::from_fn(max_n, |n| {
        let mut c = vec![OrderPolynomial::zero(); n + 1];
        c[n] = OrderPolynomial::one();
        XPoly::new(c)
    });
    let half_exp_plus_one =
        TruncatedSeries::from_fn(max_n, |n| if n == 0 { rat(1) } else { ratio(1, 2) });
    for family in Family::ALL {
        let base = match family {
            Family::Bernoulli => builtin(Builtin::ExpM1OverZ, max_n),
            Family::Euler => half_exp_plus_one.clone(),
        };
        let gf = base
            .power_t()
            .expect("a_0 = 1")
            .reflect_t()
            .map(|c| XPoly::constant(c.clone()));
        let product = exp_xz.mul(&gf).expect("same order");
        for n in 0..=max_n {
            let v = MultiIndex::new(vec![n as u32]);
            let inputs = || format!("{family} n={n}");
            let poly = match family_poly(tables, family, &v) {
                Ok(p) => p,
                Err(e) => {
                    report.error(inputs(), &e);
                    continue;
                }
            };
            let mut as_x = vec![OrderPolynomial::zero(); n + 1];
            for (w, c) in poly.terms() {
                as_x[w.total_degree()] = c.clone();
            }
            let as_x = XPoly::new(as_x);
            report.check(inputs, &as_x, &product.coeffs()[n], |p| {
                p.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| format!("[x^{k}] {c}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            });
            let at_zero = poly.at_order(&rat(0));
            let monomial = MvPolynomial::monomial(v.clone(), OrderPolynomial::one());
            report.check(
                || format!("{family} n={n} t=0"),
                &at_zero,
                &monomial,
                |p| p.to_string(),
            );
        }
    }
    report.finish()
}

/// 2ι ≡ ½(η - u) + ι on moments: 2^n B_n = Σ (n choose k) c_k B_{n-k},
/// c_k the moments of ½(η - u), n ≤ `max_n`.
pub fn doubling_check(tables: &Tables, max_n: usize) -> VerificationReport {
    let mut report = ReportBuilder::new("doubling");
    let iota = tables.base(Family::Bernoulli).truncate(max_n);
    let order = iota.order();
    let eta = tables.base(Family::Euler).truncate(order);
    let half = eta
        .sum(&Umbra::unity(order).inverse())
        .expect("same order")
        .scale(&ratio(1, 2));
    let lhs = iota.scale(&rat(2));
    let rhs = half.sum(&iota).expect("same order");
    for n in 0..=order {
        report.check(
            || format!("n={n}"),
            &lhs.moments().coeffs()[n],
            &rhs.moments().coeffs()[n],
            format_rational,
        );
    }
    report.finish()
}
