//! Text and JSON renderings of engine results.

use serde_json::{json, Value};
use wishart_moments::engine::MomentMonomial;
use wishart_moments::{
    BivariateMomentPoly, MomentPolynomial, MomentValue, NuPolynomial, ShapeClass,
};

fn power(name: &str, exp: u32) -> Option<String> {
    match exp {
        0 => None,
        1 => Some(name.to_string()),
        k => Some(format!("{name}^{k}")),
    }
}

fn join_term(coeff: String, factors: Vec<String>) -> String {
    match (coeff.as_str(), factors.is_empty()) {
        (_, true) => coeff,
        ("1", false) => factors.join("*"),
        _ => format!("{coeff}*{}", factors.join("*")),
    }
}

fn monomial_factors(mono: &MomentMonomial) -> Vec<String> {
    let mut out: Vec<String> = power("nu", mono.nu_exp).into_iter().collect();
    out.extend(mono.sigma.iter().map(|(i, j)| format!("s[{i},{j}]")));
    out.extend(mono.delta.iter().map(|(i, j)| format!("d[{i},{j}]")));
    out
}

pub fn moment_text(poly: &MomentPolynomial) -> String {
    let terms: Vec<String> = poly
        .terms()
        .iter()
        .map(|(m, c)| join_term(c.to_string(), monomial_factors(m)))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn monomial_json(mono: &MomentMonomial) -> Value {
    json!({
        "nu_exp": mono.nu_exp,
        "sigma": mono.sigma.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
        "delta": mono.delta.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
    })
}

pub fn shapes_json(poly: &MomentPolynomial, shapes: &[ShapeClass]) -> Value {
    json!({
        "mass": poly.total_mass().to_string(),
        "shapes": shapes
            .iter()
            .map(|s| json!({"representative": monomial_json(&s.representative), "multiplicity": s.multiplicity.to_string()}))
            .collect::<Vec<_>>(),
    })
}

pub fn shapes_text(poly: &MomentPolynomial, shapes: &[ShapeClass]) -> String {
    let mut out = format!("mass {}\n", poly.total_mass());
    for s in shapes {
        let rep = join_term("1".into(), monomial_factors(&s.representative));
        out.push_str(&format!("{:>8}  {rep}\n", s.multiplicity));
    }
    out.pop();
    out
}

pub fn value_json(v: MomentValue) -> Value {
    match v {
        MomentValue::Real(x) => json!(x),
        MomentValue::Complex(z) => json!([z.re, z.im]),
    }
}

pub fn value_text(v: MomentValue) -> String {
    match v {
        MomentValue::Real(x) => format!("{x}"),
        MomentValue::Complex(z) if z.im < 0.0 => format!("{}-{}i", z.re, -z.im),
        MomentValue::Complex(z) => format!("{}+{}i", z.re, z.im),
    }
}

pub fn bivariate_text(poly: &BivariateMomentPoly) -> String {
    let terms: Vec<String> = poly
        .terms()
        .iter()
        .rev()
        .map(|(&(nu, rho2, delta), c)| {
            let factors = [
                power("nu", nu),
                power("rho", 2 * rho2),
                power("delta", delta),
            ];
            join_term(c.to_string(), factors.into_iter().flatten().collect())
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

pub fn nu_polys_json(polys: &[NuPolynomial]) -> Value {
    serde_json::to_value(polys).expect("polynomials serialize")
}
