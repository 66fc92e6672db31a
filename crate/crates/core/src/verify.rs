//! Verification suites.
//!
//! Exact suites compare two independently computed sides of an identity in
//! ℚ, ℚ[t] or ℚ[s][t] and report the first counterexample. The Monte Carlo
//! suites are the only floating-point code in the crate.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::binomial as int_binomial;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::multiindex::{binomial, indices_up_to, sub_indices, MultiIndex};
use crate::poly::{BiPolynomial, OrderPolynomial};
use crate::polynomials::{
    bernoulli_poly, doubling_check, euler_poly, family_poly, poly_gf_check,
    record_addition_theorem, umbral_shift, umbral_substitute, MvPolynomial,
};
use crate::ring::{format_rational, rat, ratio, Rational, Ring};
use crate::series::{builtin, Builtin};
use crate::umbrae::{Family, Tables, TupleUmbra, Umbra};
use crate::Error;

/// Name of the generator used by the Monte Carlo suites.
pub const GENERATOR: &str = "ChaCha20Rng (rand_chacha 0.9), shard seed = seed + shard index";

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Counterexample {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub attempted: u64,
    pub passed: u64,
    pub counterexample: Option<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
    /// Per-path timings, e.g. partition vs g.f. route.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub timings_ms: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub notes: BTreeMap<String, String>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.attempted
    }

    /// Drops every wall-clock field so that reports are reproducible.
    pub fn strip_timings(&mut self) {
        self.wall_time_ms = None;
        self.timings_ms.clear();
    }
}

/// Accumulates cases for one suite.
pub struct ReportBuilder {
    suite: String,
    attempted: u64,
    passed: u64,
    counterexample: Option<Counterexample>,
    started: Instant,
    timings_ms: BTreeMap<String, f64>,
    notes: BTreeMap<String, String>,
}

impl ReportBuilder {
    pub fn new(suite: impl Into<String>) -> Self {
        ReportBuilder {
            suite: suite.into(),
            attempted: 0,
            passed: 0,
            counterexample: None,
            started: Instant::now(),
            timings_ms: BTreeMap::new(),
            notes: BTreeMap::new(),
        }
    }

    /// Records one case; `show` renders both sides only on failure.
    pub fn check<T: PartialEq>(
        &mut self,
        inputs: impl FnOnce() -> String,
        lhs: &T,
        rhs: &T,
        show: impl Fn(&T) -> String,
    ) -> bool {
        if lhs == rhs {
            self.attempted += 1;
            self.passed += 1;
            true
        } else {
            self.fail(inputs(), show(lhs), show(rhs));
            false
        }
    }

    pub fn pass(&mut self) {
        self.attempted += 1;
        self.passed += 1;
    }

    pub fn fail(&mut self, inputs: String, lhs: String, rhs: String) {
        self.attempted += 1;
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample { inputs, lhs, rhs });
        }
    }

    /// Records a case whose computation itself failed.
    pub fn error(&mut self, inputs: String, err: &Error) {
        self.fail(inputs, format!("error: {err}"), String::new());
    }

    pub fn timing(&mut self, key: &str, ms: f64) {
        *self.timings_ms.entry(key.to_string()).or_insert(0.0) += ms;
    }

    pub fn note(&mut self, key: &str, value: impl Into<String>) {
        self.notes.insert(key.to_string(), value.into());
    }

    pub fn finish(self) -> VerificationReport {
        VerificationReport {
            suite: self.suite,
            attempted: self.attempted,
            passed: self.passed,
            counterexample: self.counterexample,
            wall_time_ms: Some(self.started.elapsed().as_secs_f64() * 1e3),
            timings_ms: self.timings_ms,
            notes: self.notes,
        }
    }
}

/// All (d, v) with 1 ≤ d ≤ max_dim and |v| ≤ max_deg.
pub fn cases(max_deg: usize, max_dim: usize) -> Vec<MultiIndex> {
    (1..=max_dim)
        .flat_map(|d| indices_up_to(d, max_deg))
        .collect()
}

fn show_t(p: &OrderPolynomial) -> String {
    p.to_string()
}

fn show_st(p: &BiPolynomial) -> String {
    use crate::polynomials::Pretty;
    p.pretty()
}

fn show_q(q: &Rational) -> String {
    format_rational(q)
}

fn show_poly(p: &MvPolynomial<OrderPolynomial>) -> String {
    p.to_string()
}

fn binom_q(v: &MultiIndex, k: &MultiIndex) -> Rational {
    Rational::from_integer(binomial(v, k).expect("same dimension"))
}

fn pow2(n: usize) -> Rational {
    rat(2).power(n as u32)
}

/// B_n or E_n from scalar recurrences that share no code with the series
/// module: Σ_{k ≤ n} (n+1 choose k) B_k = 0 and Σ_{k even} (n choose k) E_{n-k} = 0.
pub fn classical_by_recurrence(family: Family, max: usize) -> Vec<Rational> {
    let choose =
        |n: usize, k: usize| Rational::from_integer(int_binomial(BigInt::from(n), BigInt::from(k)));
    let mut out: Vec<Rational> = vec![rat(1)];
    for n in 1..=max {
        let next = match family {
            Family::Bernoulli => {
                let s: Rational = (0..n).map(|k| choose(n + 1, k) * &out[k]).sum();
                -s / rat(n as i64 + 1)
            }
            Family::Euler => {
                let s: Rational = (2..=n).step_by(2).map(|k| choose(n, k) * &out[n - k]).sum();
                -s
            }
        };
        out.push(next);
    }
    out
}

/// B_v^(1) = B_{|v|} and 𝔈_v^(1) = E_{|v|}.
pub fn reduction_check(tables: &Tables, max_deg: usize, max_dim: usize) -> VerificationReport {
    let mut report = ReportBuilder::new("reduction");
    for family in Family::ALL {
        let classical = classical_by_recurrence(family, max_deg);
        for v in cases(max_deg, max_dim) {
            let inputs = || format!("{family} v={v} t=1");
            match tables.number_at(family, &v, &rat(1)) {
                Ok(value) => {
                    report.check(inputs, &value, &classical[v.total_degree()], show_q);
                }
                Err(e) => report.error(inputs(), &e),
            }
        }
    }
    report.finish()
}

/// X_v^(t) = Σ_{k ≤ v} (v choose k) X_k^(s) X_{v-k}^(t-s) in ℚ[s][t].
pub fn order_addition_check(tables: &Tables, max_deg: usize, max_dim: usize) -> VerificationReport {
    let mut report = ReportBuilder::new("order_addition");
    let s = OrderPolynomial::var().in_inner();
    let t = OrderPolynomial::var().in_outer();
    let t_minus_s = t.sub(&s);
    for family in Family::ALL {
        for v in cases(max_deg, max_dim) {
            let result = (|| -> Result<(BiPolynomial, BiPolynomial), Error> {
                let lhs = tables.number(family, &v)?.in_outer();
                let mut rhs = BiPolynomial::zero();
                for k in sub_indices(&v) {
                    let rest = v.checked_sub(&k).expect("k <= v");
                    let first = tables.number(family, &k)?.in_inner();
                    let second = tables
                        .number(family, &rest)?
                        .eval_in(&t_minus_s, BiPolynomial::from_rational);
                    rhs = rhs.add(&first.mul(&second).scale(&binom_q(&v, &k)));
                }
                Ok((lhs, rhs))
            })();
            let inputs = || format!("{family} v={v}");
            match result {
                Ok((lhs, rhs)) => {
                    report.check(inputs, &lhs, &rhs, show_st);
                }
                Err(e) => report.error(inputs(), &e),
            }
        }
    }
    report.finish()
}

/// Σ_{k ≤ v} (v choose k) X_k^(s) X_{v-k}^(-s) = [v = 0].
pub fn inverse_order_check(tables: &Tables, max_deg: usize, max_dim: usize) -> VerificationReport {
    let mut report = ReportBuilder::new("inverse_order");
    for family in Family::ALL {
        for v in cases(max_deg, max_dim) {
            let result = (|| -> Result<OrderPolynomial, Error> {
                let mut sum = OrderPolynomial::zero();
                for k in sub_indices(&v) {
                    let rest = v.checked_sub(&k).expect("k <= v");
                    let a = tables.number(family, &k)?;
                    let b = tables.number(family, &rest)?.reflect();
                    sum = sum.add(&a.mul(&b).scale(&binom_q(&v, &k)));
                }
                Ok(sum)
            })();
            let expected = if v.is_zero() {
                OrderPolynomial::one()
            } else {
                OrderPolynomial::zero()
            };
            let inputs = || format!("{family} v={v}");
            match result {
                Ok(sum) => {
                    report.check(inputs, &sum, &expected, |p| p.display_in("s"));
                }
                Err(e) => report.error(inputs(), &e),
            }
        }
    }
    report.finish()
}

/// B_v^(1) = Σ_{k ≤ v} (v choose k) B_k^(1) for |v| > 1.
pub fn bernoulli_sum_check(tables: &Tables, max_deg: usize, max_dim: usize) -> VerificationReport {
    let mut report = ReportBuilder::new("bernoulli_sum");
    let one = rat(1);
    for v in cases(max_deg, max_dim)
        .into_iter()
        .filter(|v| v.total_degree() > 1)
    {
        let result = (|| -> Result<(Rational, Rational), Error> {
            let lhs = tables.number_at(Family::Bernoulli, &v, &one)?;
            let mut rhs = rat(0);
            for k in sub_indices(&v) {
                rhs += binom_q(&v, &k) * tables.number_at(Family::Bernoulli, &k, &one)?;
            }
            Ok((lhs, rhs))
        })();
        let inputs = || format!("v={v}");
        match result {
            Ok((lhs, rhs)) => {
                report.check(inputs, &lhs, &rhs, show_q);
            }
            Err(e) => report.error(inputs(), &e),
        }
    }
    report.finish()
}

/// E[(ι+u)^k] = E[ι^k] for k > 1 and E[(ι+u)^k] = (-1)^k E[ι^k] for all k.
pub fn unity_shift_check(tables: &Tables, max_n: usize) -> VerificationReport {
    let mut report = ReportBuilder::new("unity_shift");
    let iota = tables.base(Family::Bernoulli).truncate(max_n);
    let shifted = iota.sum(&Umbra::unity(iota.order())).expect("same order");
    for n in 0..=iota.order() {
        let b = iota.moments().coeffs()[n].clone();
        let s = shifted.moments().coeffs()[n].clone();
        if n > 1 {
            report.check(|| format!("E[(ι+u)^{n}] = E[ι^{n}]"), &s, &b, show_q);
        }
        let signed = if n % 2 == 0 { b } else { -b };
        report.check(
            || format!("E[(ι+u)^{n}] = (-1)^{n} E[ι^{n}]"),
            &s,
            &signed,
            show_q,
        );
    }
    report.finish()
}

/// Both halves of the Appell-form proposition:
/// B_v(x) = Σ (v choose k) x^{v-k} B_k and
/// 2^{|v|} E_v(x/2 + t/2·1) = Σ (v choose k) x^{v-k} 𝔈_k.
pub fn appell_form_check(tables: &Tables, max_deg: usize, max_dim: usize) -> VerificationReport {
    let mut report = ReportBuilder::new("appell_form");
    let half_t = OrderPolynomial::var().scale(&ratio(1, 2));
    for v in cases(max_deg, max_dim) {
        for family in Family::ALL {
            let result = (|| -> Result<(MvPolynomial<OrderPolynomial>, MvPolynomial<OrderPolynomial>), Error> {
                let poly = family_poly(tables, family, &v)?;
                let lhs = match family {
                    Family::Bernoulli => poly,
                    Family::Euler => poly
                        .affine_substitute(&ratio(1, 2), &half_t)
                        .scale(&OrderPolynomial::constant(pow2(v.total_degree()))),
                };
                let mut rhs = MvPolynomial::zero(v.dim());
                for k in sub_indices(&v) {
                    let rest = v.checked_sub(&k).expect("k <= v");
                    let coeff = tables.number(family, &k)?.scale(&binom_q(&v, &k));
                    rhs = rhs.add(&MvPolynomial::monomial(rest, coeff))?;
                }
                Ok((lhs, rhs))
            })();
            let inputs = || format!("{family} v={v}");
            match result {
                Ok((lhs, rhs)) => {
                    report.check(inputs, &lhs, &rhs, show_poly);
                }
                Err(e) => report.error(inputs(), &e),
            }
        }
    }
    report.finish()
}

/// B_v^(t) = 𝓑_v^(t)(0) and 𝔈_v^(t) = 2^{|v|} 𝓔_v^(t)(t/2·1).
pub fn special_values_check(tables: &Tables, max_deg: usize, max_dim: usize) -> VerificationReport {
    let mut report = ReportBuilder::new("special_values");
    let half_t = OrderPolynomial::var().scale(&ratio(1, 2));
    for v in cases(max_deg, max_dim) {
        let result = (|| -> Result<[(OrderPolynomial, OrderPolynomial); 2], Error> {
            let b =
                bernoulli_poly(tables, &v)?.affine_substitute(&rat(0), &OrderPolynomial::zero());
            let e = euler_poly(tables, &v)?.affine_substitute(&rat(0), &half_t);
            Ok([
                (
                    b.coeff(&MultiIndex::zero(v.dim())),
                    tables.number(Family::Bernoulli, &v)?,
                ),
                (
                    e.coeff(&MultiIndex::zero(v.dim()))
                        .scale(&pow2(v.total_degree())),
                    tables.number(Family::Euler, &v)?,
                ),
            ])
        })();
        match result {
            Ok(pairs) => {
                for ((lhs, rhs), family) in pairs.iter().zip(Family::ALL) {
                    report.check(|| format!("{family} v={v}"), lhs, rhs, show_t);
                }
            }
            Err(e) => report.error(format!("v={v}"), &e),
        }
    }
    report.finish()
}

/// E[𝓑_v^(t)(-t.ι)] = 0 and E[𝓔_v^(t)(½[t.(u - (-1.η))])] = 0 for |v| > 0,
/// both equal to 1 at v = 0.
pub fn zero_mean_check(tables: &Tables, max_deg: usize, max_dim: usize) -> VerificationReport {
    let mut report = ReportBuilder::new("zero_mean");
    let order = tables.order();
    // u - (-1.η): -1.η has the even g.f. cosh z, so this equals u + (-1.η).
    let euler_argument = Umbra::unity(order)
        .sum(&tables.base(Family::Euler).inverse().scale(&rat(-1)))
        .expect("same order")
        .dot_symbolic()
        .scale(&ratio(1, 2));
    let bernoulli_argument = tables.dot(Family::Bernoulli).inverse();
    for v in cases(max_deg, max_dim) {
        let expected = if v.is_zero() {
            OrderPolynomial::one()
        } else {
            OrderPolynomial::zero()
        };
        for family in Family::ALL {
            let argument = match family {
                Family::Bernoulli => &bernoulli_argument,
                Family::Euler => &euler_argument,
            };
            let tuple = TupleUmbra::new(argument.clone(), v.dim());
            let inputs = || format!("{family} v={v}");
            match family_poly(tables, family, &v).and_then(|p| umbral_substitute(&p, &tuple)) {
                Ok(value) => {
                    report.check(inputs, &value, &expected, show_t);
                }
                Err(e) => report.error(inputs(), &e),
            }
        }
    }
    report.finish()
}

/// 𝓑_v^(t)(t·1 - x) = (-1)^{|v|} 𝓑_v^(t)(x), and the same for 𝓔.
pub fn reflection_check(tables: &Tables, max_deg: usize, max_dim: usize) -> VerificationReport {
    let mut report = ReportBuilder::new("reflection");
    let t = OrderPolynomial::var();
    for v in cases(max_deg, max_dim) {
        for family in Family::ALL {
            let inputs = || format!("{family} v={v}");
            match family_poly(tables, family, &v) {
                Ok(p) => {
                    let lhs = p.affine_substitute(&rat(-1), &t);
                    let rhs = if v.total_degree() % 2 == 0 {
                        p
                    } else {
                        p.neg()
                    };
                    report.check(inputs, &lhs, &rhs, show_poly);
                }
                Err(e) => report.error(inputs(), &e),
            }
        }
    }
    report.finish()
}

/// 2^{|v|} 𝓑_v^(t)(x/2) = E[𝓔_v^(t)(x + t.ι)], checked with x symbolic and
/// at x = 0.
pub fn bernoulli_euler_relation_check(
    tables: &Tables,
    max_deg: usize,
    max_dim: usize,
) -> VerificationReport {
    let mut report = ReportBuilder::new("bernoulli_euler_relation");
    for v in cases(max_deg, max_dim) {
        let iota_t = TupleUmbra::new(tables.dot(Family::Bernoulli).clone(), v.dim());
        let result = (|| -> Result<_, Error> {
            let lhs = bernoulli_poly(tables, &v)?
                .affine_substitute(&ratio(1, 2), &OrderPolynomial::zero())
                .scale(&OrderPolynomial::constant(pow2(v.total_degree())));
            let euler = euler_poly(tables, &v)?;
            let rhs = umbral_shift(&euler, &iota_t)?;
            let at_zero = umbral_substitute(&euler, &iota_t)?;
            Ok((lhs, rhs, at_zero))
        })();
        match result {
            Ok((lhs, rhs, at_zero)) => {
                let constant = lhs.coeff(&MultiIndex::zero(v.dim()));
                report.check(|| format!("v={v}"), &lhs, &rhs, show_poly);
                report.check(|| format!("v={v} x=0"), &constant, &at_zero, show_t);
            }
            Err(e) => report.error(format!("v={v}"), &e),
        }
    }
    report.finish()
}

/// Partition route vs g.f. route for t.μ, μ ∈ {ι, η, u, η - u}.
pub fn oracle_check(tables: &Tables, max_deg: usize, max_dim: usize) -> VerificationReport {
    let mut report = ReportBuilder::new("oracle");
    let order = tables.order();
    let bases = [
        tables.base(Family::Bernoulli).clone(),
        tables.base(Family::Euler).clone(),
        Umbra::unity(order),
        tables
            .base(Family::Euler)
            .sum(&Umbra::unity(order).inverse())
            .expect("same order")
            .relabel("η - u"),
    ];
    for base in &bases {
        for d in 1..=max_dim {
            let tuple = TupleUmbra::new(base.clone(), d);
            let clock = Instant::now();
            let via_gf = tuple.dot_product_gf();
            report.timing("gf_path", clock.elapsed().as_secs_f64() * 1e3);
            for v in indices_up_to(d, max_deg)
                .into_iter()
                .filter(|v| !v.is_zero())
            {
                let inputs = || format!("{} v={v}", base.label());
                let clock = Instant::now();
                let partition = tuple.dot_product_partition(&v);
                report.timing("partition_path", clock.elapsed().as_secs_f64() * 1e3);
                let clock = Instant::now();
                let gf = via_gf.mv_moment(&v);
                report.timing("gf_path", clock.elapsed().as_secs_f64() * 1e3);
                match (partition, gf) {
                    (Ok(a), Ok(b)) => {
                        report.check(inputs, &a, &b, show_t);
                    }
                    (Err(e), _) | (_, Err(e)) => report.error(inputs(), &e),
                }
            }
        }
    }
    report.finish()
}

/// Every exact identity suite, in a fixed order.
pub fn run_exact_suite(
    tables: &Tables,
    max_deg: usize,
    max_dim: usize,
) -> Result<Vec<VerificationReport>, Error> {
    if max_deg > tables.order() {
        return Err(Error::TruncationExceeded {
            requested: max_deg,
            order: tables.order(),
        });
    }
    if max_dim == 0 {
        return Err(Error::Precondition("dimension must be >= 1"));
    }
    let mut addition = ReportBuilder::new("addition_theorem");
    for v in cases(max_deg, max_dim) {
        record_addition_theorem(tables, &v, &mut addition);
    }
    Ok(vec![
        reduction_check(tables, max_deg, max_dim),
        order_addition_check(tables, max_deg, max_dim),
        inverse_order_check(tables, max_deg, max_dim),
        bernoulli_sum_check(tables, max_deg, max_dim),
        unity_shift_check(tables, tables.order()),
        appell_form_check(tables, max_deg, max_dim),
        special_values_check(tables, max_deg, max_dim),
        zero_mean_check(tables, max_deg, max_dim),
        poly_gf_check(tables, max_deg),
        addition.finish(),
        reflection_check(tables, max_deg, max_dim),
        doubling_check(tables, tables.order()),
        bernoulli_euler_relation_check(tables, max_deg, max_dim),
    ])
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct MonteCarloConfig {
    pub samples: u64,
    pub seed: u64,
    pub dim: usize,
    pub max_degree: usize,
    /// Multiplier on σ̂/√n.
    pub confidence: f64,
    pub shards: usize,
}

impl Default for MonteCarloConfig {
    fn default() -> Self {
        MonteCarloConfig {
            samples: 1_000_000,
            seed: 42,
            dim: 2,
            max_degree: 4,
            confidence: 4.0,
            shards: 1,
        }
    }
}

impl MonteCarloConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if self.samples < 10_000 {
            return Err(Error::InvalidConfig("sample count must be >= 10^4".into()));
        }
        if self.dim == 0 {
            return Err(Error::InvalidConfig("dimension must be >= 1".into()));
        }
        if self.shards == 0 || self.shards as u64 > self.samples {
            return Err(Error::InvalidConfig(
                "shard count must be in 1..=samples".into(),
            ));
        }
        if !(self.confidence.is_finite() && self.confidence > 0.0) {
            return Err(Error::InvalidConfig(
                "confidence multiplier must be positive".into(),
            ));
        }
        Ok(())
    }
}

// Σ x^n and Σ x^{2n} for n = 0..=max_degree.
#[derive(Clone)]
struct PowerSums {
    first: Vec<f64>,
    second: Vec<f64>,
}

fn sample_power_sums(
    cfg: &MonteCarloConfig,
    draw: fn(&mut ChaCha20Rng) -> f64,
) -> (PowerSums, u64) {
    use rayon::prelude::*;
    let shards = cfg.shards as u64;
    let partials: Vec<PowerSums> = (0..shards)
        .into_par_iter()
        .map(|shard| {
            let count = cfg.samples / shards + u64::from(shard < cfg.samples % shards);
            let mut rng = ChaCha20Rng::seed_from_u64(cfg.seed.wrapping_add(shard));
            let mut sums = PowerSums {
                first: vec![0.0; cfg.max_degree + 1],
                second: vec![0.0; cfg.max_degree + 1],
            };
            for _ in 0..count {
                let x = draw(&mut rng);
                let mut p = 1.0;
                for n in 0..=cfg.max_degree {
                    sums.first[n] += p;
                    sums.second[n] += p * p;
                    p *= x;
                }
            }
            sums
        })
        .collect();
    // combine in shard order so the result only depends on the shard count
    let mut total = PowerSums {
        first: vec![0.0; cfg.max_degree + 1],
        second: vec![0.0; cfg.max_degree + 1],
    };
    for part in partials {
        for n in 0..=cfg.max_degree {
            total.first[n] += part.first[n];
            total.second[n] += part.second[n];
        }
    }
    (total, cfg.samples)
}

fn run_montecarlo(
    suite: &str,
    cfg: &MonteCarloConfig,
    exact: &TupleUmbra<Rational>,
    draw: fn(&mut ChaCha20Rng) -> f64,
) -> Result<VerificationReport, Error> {
    cfg.validate()?;
    if cfg.max_degree > exact.base().order() {
        return Err(Error::TruncationExceeded {
            requested: cfg.max_degree,
            order: exact.base().order(),
        });
    }
    let mut report = ReportBuilder::new(suite);
    report.note("generator", GENERATOR);
    report.note("samples", cfg.samples.to_string());
    report.note("seed", cfg.seed.to_string());
    report.note("shards", cfg.shards.to_string());
    report.note("confidence", format!("{}", cfg.confidence));
    let (sums, n) = sample_power_sums(cfg, draw);
    let n_f = n as f64;
    for v in indices_up_to(cfg.dim, cfg.max_degree) {
        let k = v.total_degree();
        let exact_q = exact.mv_moment(&v)?;
        let exact_f = exact_q.to_f64().unwrap_or(f64::NAN);
        let mean = sums.first[k] / n_f;
        let var = (sums.second[k] / n_f - mean * mean).max(0.0) * n_f / (n_f - 1.0);
        let bound = cfg.confidence * var.sqrt() / n_f.sqrt();
        let error = (mean - exact_f).abs();
        if error <= bound {
            report.pass();
        } else {
            report.fail(
                format!("v={v} bound={bound:.3e}"),
                format!("{mean:.9}"),
                format!("{} ({exact_f:.9})", format_rational(&exact_q)),
            );
        }
    }
    Ok(report.finish())
}

/// Empirical moments of (U, …, U), U ~ Uniform(0, 1), against -1.ι.
pub fn run_montecarlo_uniform(
    tables: &Tables,
    cfg: &MonteCarloConfig,
) -> Result<VerificationReport, Error> {
    cfg.validate()?;
    let exact = TupleUmbra::new(tables.dot(Family::Bernoulli).inverse().at(&rat(1)), cfg.dim);
    run_montecarlo("montecarlo_uniform", cfg, &exact, |rng| rng.random::<f64>())
}

/// Empirical moments of (X, …, X), X = 2Y - 1 with Y ~ Bernoulli(1/2),
/// against -1.η.
pub fn run_montecarlo_rademacher(
    tables: &Tables,
    cfg: &MonteCarloConfig,
) -> Result<VerificationReport, Error> {
    cfg.validate()?;
    let exact = TupleUmbra::new(tables.dot(Family::Euler).inverse().at(&rat(1)), cfg.dim);
    run_montecarlo("montecarlo_rademacher", cfg, &exact, |rng| {
        if rng.random::<bool>() {
            1.0
        } else {
            -1.0
        }
    })
}

/// Moments of -1.ι without going through [`Tables`]: the g.f. (e^z - 1)/z.
pub fn uniform_moments(order: usize) -> Vec<Rational> {
    builtin(Builtin::ExpM1OverZ, order).coeffs().to_vec()
}
