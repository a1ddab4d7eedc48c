use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use tcanon_core::texpr::{FactorPart, IndexName};
use tcanon_core::TensorExpr;

fn index(name: &IndexName, dummypri: bool) -> String {
    match name {
        IndexName::Dummy { .. } if dummypri => name.to_string(),
        _ => name.original().to_string(),
    }
}

/// `a2(i,j)*v1(i)`
pub fn monomial(parts: &[FactorPart], dummypri: bool) -> String {
    parts
        .iter()
        .map(|f| {
            let idx: Vec<String> = f.indices.iter().map(|i| index(i, dummypri)).collect();
            format!("{}({})", f.name, idx.join(","))
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Renders an expression; a shared denominator `d > 1` is written as `… / d`.
pub fn print(expr: &TensorExpr, dummypri: bool) -> String {
    if expr.is_zero() {
        return "0".into();
    }
    let denom = expr
        .vec()
        .terms()
        .iter()
        .fold(BigInt::one(), |acc, (c, _)| acc.lcm(c.denom()));
    let terms: Vec<String> = expr
        .split_terms()
        .map(|(c, parts)| {
            let k = (c * &denom).to_integer();
            let body = monomial(&parts, dummypri);
            if k.is_one() {
                body
            } else if k.is_negative() {
                format!("({k})*{body}")
            } else {
                format!("{k}*{body}")
            }
        })
        .collect();
    let body = terms.join(" + ");
    if denom.is_one() {
        body
    } else if terms.len() > 1 {
        format!("({body}) / {denom}")
    } else {
        format!("{body} / {denom}")
    }
}
