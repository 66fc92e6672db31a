//! Subcommand implementations. Each returns a finished document; process
//! concerns (formats, exit codes, timestamps) are handled by the caller.

use std::collections::BTreeMap;

use norlund::multiindex::indices_up_to;
use norlund::polynomials::family_poly;
use norlund::verify::{self, run_montecarlo_rademacher, run_montecarlo_uniform};
use norlund::{Error, Family, MonteCarloConfig, MultiIndex, Rational, Tables};

use crate::document::{
    CommandEcho, Entry, EvaluationDoc, NumbersTable, Order, OutputDocument, Payload, PolynomialDoc,
    ReportCollection, Term, Value, Q,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Suite {
    All,
    Exact,
    Montecarlo,
    Oracle,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Exact => "exact",
            Suite::Montecarlo => "montecarlo",
            Suite::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyArgs {
    pub suite: Suite,
    pub max_deg: usize,
    pub dim: usize,
    pub samples: u64,
    pub seed: u64,
    pub shards: usize,
    pub confidence: f64,
}

fn echo(name: &str, args: &[(&str, String)]) -> CommandEcho {
    CommandEcho {
        name: name.to_string(),
        args: args
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect::<BTreeMap<_, _>>(),
    }
}

fn check_degree(tables: &Tables, degree: usize) -> Result<(), Error> {
    if degree > tables.order() {
        return Err(Error::TruncationExceeded {
            requested: degree,
            order: tables.order(),
        });
    }
    Ok(())
}

fn check_dim(dim: usize) -> Result<(), Error> {
    if !(1..=4).contains(&dim) {
        return Err(Error::InvalidConfig(format!(
            "dimension must be in 1..=4, got {dim}"
        )));
    }
    Ok(())
}

pub fn cmd_numbers(
    tables: &Tables,
    family: Family,
    dim: usize,
    max_deg: usize,
    t: &Order,
) -> Result<OutputDocument, Error> {
    check_dim(dim)?;
    check_degree(tables, max_deg)?;
    let mut entries = Vec::new();
    for v in indices_up_to(dim, max_deg) {
        let value = match t.fixed() {
            Some(q) => Value::exact(tables.number_at(family, &v, q)?),
            None => Value::symbolic(&tables.number(family, &v)?),
        };
        entries.push(Entry { v, value });
    }
    let command = echo(
        "numbers",
        &[
            ("family", family.to_string()),
            ("dim", dim.to_string()),
            ("max_deg", max_deg.to_string()),
            ("t", t.to_string()),
        ],
    );
    Ok(OutputDocument::new(
        command,
        Payload::Numbers(NumbersTable {
            family,
            dimension: dim,
            max_degree: max_deg,
            t: t.clone(),
            entries,
        }),
    ))
}

pub fn cmd_poly(
    tables: &Tables,
    family: Family,
    v: &MultiIndex,
    t: &Order,
) -> Result<OutputDocument, Error> {
    check_degree(tables, v.total_degree())?;
    let p = family_poly(tables, family, v)?;
    let (terms, text) = match t.fixed() {
        Some(q) => {
            let fixed = p.map_coeffs(|c| c.eval(q));
            let terms = fixed
                .terms()
                .map(|(e, c)| Term {
                    exponent: e.clone(),
                    coeff: Value::exact(c.clone()),
                })
                .collect();
            (terms, fixed.to_string())
        }
        None => {
            let terms = p
                .terms()
                .map(|(e, c)| Term {
                    exponent: e.clone(),
                    coeff: Value::symbolic(c),
                })
                .collect();
            (terms, p.to_string())
        }
    };
    let command = echo(
        "poly",
        &[
            ("family", family.to_string()),
            ("v", v.to_string()),
            ("t", t.to_string()),
        ],
    );
    Ok(OutputDocument::new(
        command,
        Payload::Polynomial(PolynomialDoc {
            family,
            v: v.clone(),
            t: t.clone(),
            terms,
            text,
        }),
    ))
}

pub fn cmd_eval(
    tables: &Tables,
    family: Family,
    v: &MultiIndex,
    x: &[Rational],
    t: &Rational,
) -> Result<OutputDocument, Error> {
    if x.len() != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: v.dim(),
            found: x.len(),
        });
    }
    check_degree(tables, v.total_degree())?;
    let value = family_poly(tables, family, v)?.evaluate(x, t)?;
    let xs: Vec<String> = x.iter().map(norlund::ring::format_rational).collect();
    let command = echo(
        "eval",
        &[
            ("family", family.to_string()),
            ("v", v.to_string()),
            ("x", xs.join(",")),
            ("t", norlund::ring::format_rational(t)),
        ],
    );
    Ok(OutputDocument::new(
        command,
        Payload::Evaluation(EvaluationDoc {
            family,
            v: v.clone(),
            x: x.iter().cloned().map(Q).collect(),
            t: Q(t.clone()),
            value: Q(value),
        }),
    ))
}

pub fn cmd_verify(tables: &Tables, args: &VerifyArgs) -> Result<OutputDocument, Error> {
    check_dim(args.dim)?;
    check_degree(tables, args.max_deg)?;
    let cfg = MonteCarloConfig {
        samples: args.samples,
        seed: args.seed,
        dim: args.dim,
        max_degree: args.max_deg,
        confidence: args.confidence,
        shards: args.shards,
    };
    let wants = |s: Suite| args.suite == Suite::All || args.suite == s;
    if wants(Suite::Montecarlo) {
        cfg.validate()?;
    }
    let mut reports = Vec::new();
    if wants(Suite::Exact) {
        reports.extend(verify::run_exact_suite(tables, args.max_deg, args.dim)?);
    }
    if wants(Suite::Oracle) {
        reports.push(verify::oracle_check(tables, args.max_deg, args.dim));
    }
    if wants(Suite::Montecarlo) {
        reports.push(run_montecarlo_uniform(tables, &cfg)?);
        reports.push(run_montecarlo_rademacher(tables, &cfg)?);
    }
    let all_passed = reports.iter().all(|r| r.all_passed());
    let mut echoed = vec![
        ("suite", args.suite.name().to_string()),
        ("max_deg", args.max_deg.to_string()),
        ("dim", args.dim.to_string()),
    ];
    if wants(Suite::Montecarlo) {
        echoed.push(("samples", args.samples.to_string()));
        echoed.push(("seed", args.seed.to_string()));
        echoed.push(("shards", args.shards.to_string()));
        echoed.push(("confidence", args.confidence.to_string()));
    }
    Ok(OutputDocument::new(
        echo("verify", &echoed),
        Payload::Reports(ReportCollection {
            reports,
            all_passed,
        }),
    ))
}

/// Reads the evaluation point `1/2,1` as rationals.
pub fn parse_point(text: &str) -> Result<Vec<Rational>, Error> {
    text.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(norlund::ring::parse_rational)
        .collect()
}
