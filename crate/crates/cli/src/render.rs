//! CSV and LaTeX renderings of an [`OutputDocument`]. JSON lives on the
//! document itself since it is the only format that is parsed back.

use norlund::{Family, MultiIndex, Rational};
use num_traits::{Signed, Zero};

use crate::document::{Order, OutputDocument, Payload, Value};

pub fn to_csv(doc: &OutputDocument) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut row = |fields: &[String]| w.write_record(fields).expect("in-memory write");
    match &doc.payload {
        Payload::Numbers(table) => {
            let symbolic = table.t.fixed().is_none();
            if symbolic {
                row(&["v".into(), "t_power".into(), "coeff".into()]);
            } else {
                row(&["v".into(), "value".into()]);
            }
            for e in &table.entries {
                value_rows(&e.v, &e.value, symbolic, &mut row);
            }
        }
        Payload::Polynomial(p) => {
            let symbolic = p.t.fixed().is_none();
            if symbolic {
                row(&["exponent".into(), "t_power".into(), "coeff".into()]);
            } else {
                row(&["exponent".into(), "coeff".into()]);
            }
            for term in &p.terms {
                value_rows(&term.exponent, &term.coeff, symbolic, &mut row);
            }
        }
        Payload::Evaluation(e) => {
            row(&[
                "family".into(),
                "v".into(),
                "x".into(),
                "t".into(),
                "value".into(),
            ]);
            let x: Vec<String> = e.x.iter().map(|q| q.to_string()).collect();
            row(&[
                e.family.to_string(),
                e.v.to_string(),
                format!("({})", x.join(",")),
                e.t.to_string(),
                e.value.to_string(),
            ]);
        }
        Payload::Reports(c) => {
            row(&[
                "suite".into(),
                "attempted".into(),
                "passed".into(),
                "status".into(),
                "inputs".into(),
                "lhs".into(),
                "rhs".into(),
            ]);
            for r in &c.reports {
                let (inputs, lhs, rhs) = match &r.counterexample {
                    Some(ce) => (ce.inputs.clone(), ce.lhs.clone(), ce.rhs.clone()),
                    None => Default::default(),
                };
                let status = if r.all_passed() { "pass" } else { "fail" };
                row(&[
                    r.suite.clone(),
                    r.attempted.to_string(),
                    r.passed.to_string(),
                    status.into(),
                    inputs,
                    lhs,
                    rhs,
                ]);
            }
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("csv is utf-8")
}

fn value_rows(key: &MultiIndex, value: &Value, symbolic: bool, row: &mut impl FnMut(&[String])) {
    match value {
        Value::Exact(q) if !symbolic => row(&[key.to_string(), q.to_string()]),
        Value::Exact(q) => row(&[key.to_string(), "0".into(), q.to_string()]),
        Value::Symbolic(cs) => {
            for (i, q) in cs.iter().enumerate() {
                row(&[key.to_string(), i.to_string(), q.to_string()]);
            }
        }
    }
}

pub fn latex_rational(q: &Rational) -> String {
    let sign = if q.is_negative() { "-" } else { "" };
    let a = q.abs();
    if a.is_integer() {
        format!("{sign}{}", a.numer())
    } else {
        format!("{sign}\\frac{{{}}}{{{}}}", a.numer(), a.denom())
    }
}

/// Joins signed terms `(coefficient, monomial)`; an empty monomial means a
/// constant term.
fn latex_sum(terms: &[(Rational, String)]) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if mono.is_empty() {
            out.push_str(&latex_rational(&a));
        } else if a == Rational::from_integer(1.into()) {
            out.push_str(mono);
        } else {
            out.push_str(&latex_rational(&a));
            out.push(' ');
            out.push_str(mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn power(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{{{k}}}"),
    }
}

pub fn latex_value(value: &Value) -> String {
    match value {
        Value::Exact(q) => latex_rational(&q.0),
        Value::Symbolic(cs) => {
            let terms: Vec<_> = cs
                .iter()
                .enumerate()
                .rev()
                .map(|(i, q)| (q.0.clone(), power("t", i)))
                .collect();
            latex_sum(&terms)
        }
    }
}

fn monomial(e: &MultiIndex) -> String {
    e.parts()
        .iter()
        .enumerate()
        .filter(|(_, &p)| p > 0)
        .map(|(i, &p)| power(&format!("x_{{{}}}", i + 1), p as usize))
        .collect::<Vec<_>>()
        .join(" ")
}

fn latex_polynomial(terms: &[(MultiIndex, Value)]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (e, c) in terms.iter().rev() {
        let mono = monomial(e);
        let piece = match c {
            Value::Exact(q) => latex_sum(&[(q.0.clone(), mono)]),
            Value::Symbolic(cs) if cs.iter().filter(|q| !q.0.is_zero()).count() <= 1 => {
                let (i, q) = cs
                    .iter()
                    .enumerate()
                    .find(|(_, q)| !q.0.is_zero())
                    .unwrap_or((0, &cs[0]));
                let m = [power("t", i), mono]
                    .iter()
                    .filter(|s| !s.is_empty())
                    .cloned()
                    .collect::<Vec<_>>()
                    .join(" ");
                latex_sum(&[(q.0.clone(), m)])
            }
            Value::Symbolic(_) => {
                let inner = latex_value(c);
                if mono.is_empty() {
                    format!("\\left({inner}\\right)")
                } else {
                    format!("\\left({inner}\\right) {mono}")
                }
            }
        };
        if piece == "0" {
            continue;
        }
        if parts.is_empty() {
            parts.push(piece);
        } else if let Some(rest) = piece.strip_prefix('-') {
            parts.push(format!("- {rest}"));
        } else {
            parts.push(format!("+ {piece}"));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ")
    }
}

fn symbol(family: Family, poly: bool) -> &'static str {
    match (family, poly) {
        (Family::Bernoulli, false) => "B",
        (Family::Euler, false) => "\\mathfrak{E}",
        (Family::Bernoulli, true) => "\\mathcal{B}",
        (Family::Euler, true) => "\\mathcal{E}",
    }
}

fn order_tex(t: &Order) -> String {
    match t {
        Order::Fixed(q) => latex_rational(&q.0),
        Order::Symbolic(_) => "t".to_string(),
    }
}

fn index_tex(v: &MultiIndex) -> String {
    let parts: Vec<String> = v.parts().iter().map(|p| p.to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn to_latex(doc: &OutputDocument) -> String {
    let mut out = String::new();
    match &doc.payload {
        Payload::Numbers(table) => {
            let sym = symbol(table.family, false);
            let t = order_tex(&table.t);
            out.push_str("\\begin{tabular}{ll}\n");
            out.push_str(&format!("$v$ & ${sym}_v^{{({t})}}$ \\\\\n\\hline\n"));
            for e in &table.entries {
                out.push_str(&format!(
                    "${}$ & ${}$ \\\\\n",
                    index_tex(&e.v),
                    latex_value(&e.value)
                ));
            }
            out.push_str("\\end{tabular}\n");
        }
        Payload::Polynomial(p) => {
            let sym = symbol(p.family, true);
            let terms: Vec<_> = p
                .terms
                .iter()
                .map(|t| (t.exponent.clone(), t.coeff.clone()))
                .collect();
            out.push_str(&format!(
                "{sym}_{{{}}}^{{({})}}(x) = {}\n",
                index_tex(&p.v),
                order_tex(&p.t),
                latex_polynomial(&terms)
            ));
        }
        Payload::Evaluation(e) => {
            let sym = symbol(e.family, true);
            let x: Vec<String> = e.x.iter().map(|q| latex_rational(&q.0)).collect();
            out.push_str(&format!(
                "{sym}_{{{}}}^{{({})}}({}) = {}\n",
                index_tex(&e.v),
                latex_rational(&e.t.0),
                x.join(", "),
                latex_rational(&e.value.0)
            ));
        }
        Payload::Reports(c) => {
            out.push_str("\\begin{tabular}{lrrl}\n");
            out.push_str("suite & attempted & passed & status \\\\\n\\hline\n");
            for r in &c.reports {
                let status = if r.all_passed() { "pass" } else { "fail" };
                out.push_str(&format!(
                    "\\texttt{{{}}} & {} & {} & {} \\\\\n",
                    r.suite.replace('_', "\\_"),
                    r.attempted,
                    r.passed,
                    status
                ));
            }
            out.push_str("\\end{tabular}\n");
        }
    }
    out
}
