#![allow(dead_code)]

use std::io;

use rand::seq::SliceRandom;
use rand::Rng;
use tcanon::frontend::parse_expr;
use tcanon::{Session, Value};
use tcanon_core::galg::{coeff, GroupVector};
use tcanon_core::{Perm, TensorExpr};

pub const TEST_RUN: &str = include_str!("../data/test_run.tcn");
pub const TEST_RUN_EXPECTED: &str = include_str!("../data/test_run.expected");

/// A session with every tensor of the reference run declared.
pub fn reference_session() -> Session {
    let mut s = Session::default();
    s.run_source(TEST_RUN, &mut io::sink(), &mut io::sink()).unwrap();
    s
}

pub fn run(s: &mut Session, src: &str) -> String {
    let mut out = Vec::new();
    s.run_source(src, &mut out, &mut io::sink()).unwrap();
    String::from_utf8(out).unwrap()
}

/// Evaluates `src` without simplifying.
pub fn expr(s: &mut Session, src: &str) -> TensorExpr {
    match s.eval(&parse_expr(src).unwrap(), &mut Vec::new()).unwrap() {
        Value::Tensor(e) => e,
        Value::Scalar(_) => panic!("{src} is not a tensor expression"),
    }
}

pub fn canon(s: &Session, e: &TensorExpr) -> TensorExpr {
    s.registry().simplify(e).unwrap().canonical
}

/// Whitespace collapsed, blank and timing lines dropped.
pub fn normalize(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
        .filter(|l| !l.is_empty() && !l.starts_with("Time:"))
        .collect()
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Perm {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Perm::from_images(&images).unwrap()
}

pub fn random_vector<R: Rng>(rng: &mut R, n: usize, max_terms: usize) -> GroupVector {
    let k = rng.gen_range(0..=max_terms);
    let terms: Vec<_> = (0..k)
        .map(|_| (coeff(rng.gen_range(-5..=5)), random_perm(rng, n)))
        .collect();
    GroupVector::from_terms(n, terms).unwrap()
}

/// Replaces whole index names inside the argument lists of printed output.
pub fn rename_indices(printed: &str, map: &[(&str, &str)]) -> String {
    let mut out = String::new();
    let mut word = String::new();
    let mut depth = 0;
    let flush = |word: &mut String, out: &mut String, depth: i32| {
        if depth > 0 {
            if let Some((_, to)) = map.iter().find(|(from, _)| *from == word.as_str()) {
                out.push_str(to);
                word.clear();
                return;
            }
        }
        out.push_str(word);
        word.clear();
    };
    for ch in printed.chars() {
        if ch.is_ascii_alphanumeric() || ch == '_' {
            word.push(ch);
            continue;
        }
        flush(&mut word, &mut out, depth);
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        out.push(ch);
    }
    flush(&mut word, &mut out, depth);
    out
}
