//! Acceptance gate: one PASS/FAIL line per criterion.

mod common;

use std::io;
use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tcanon::frontend::BasisSpec;
use tcanon::Session;
use tcanon_core::galg::{coeff, Coeff, GroupVector};
use tcanon_core::oracle::{self, DenseSpan};
use tcanon_core::texpr::{dummy_relations, estimate_memory, product_relations};
use tcanon_core::{KBasis, TensorHeader};

use common::*;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, format!("{what} took {t:?}, limit {limit:?}"))
}

fn single_bases() -> Result<String, String> {
    let cases: &[(&str, &str, usize)] = &[
        ("a2", "tsym a2(i,j)+a2(j,i);", 1),
        ("s2", "tsym s2(i,j)-s2(j,i);", 1),
        ("a3", "tsym a3(i,j,k)+a3(j,i,k); tsym a3(i,j,k)-a3(j,k,i);", 5),
        ("s3", "tsym s3(i,j,k)-s3(j,i,k); tsym s3(i,j,k)-s3(j,k,i);", 5),
        (
            "ri",
            "tsym ri(i,j,k,l) + ri(j,i,k,l); tsym ri(i,j,k,l) + ri(i,j,l,k);
             tsym ri(i,j,k,l) + ri(i,k,l,j) + ri(i,l,j,k);",
            22,
        ),
    ];
    let mut dims = Vec::new();
    for (name, rels, dim) in cases {
        let start = Instant::now();
        let mut s = Session::default();
        let out = run(&mut s, &format!("tensor {name}; {rels} kbasis {name};"));
        within(start, Duration::from_secs(1), name)?;
        let last = out.lines().last().unwrap_or_default();
        ensure(last == dim.to_string(), format!("{name}: dimension {last}, expected {dim}"))?;
        ensure(out.lines().count() == dim + 1, format!("{name}: row count"))?;
        dims.push(format!("{name}={last}"));
    }
    Ok(dims.join(" "))
}

fn product_basis() -> Result<String, String> {
    let mut s = Session::default();
    run(&mut s, "tensor s2, a3; tsym s2(i,j)-s2(j,i), a3(i,j,k)+a3(j,i,k), a3(i,j,k)-a3(j,k,i);");
    let start = Instant::now();
    let out = run(&mut s, "kbasis s2(a3);");
    within(start, Duration::from_secs(30), "kbasis s2(a3)")?;
    let lines: Vec<&str> = out.lines().collect();
    ensure(lines.last() == Some(&"110"), format!("dimension {:?}", lines.last()))?;
    ensure(lines[0] == "a3(j,i,k)*s2(i,j) + a3(k,i,j)*s2(j,i)", lines[0])?;
    ensure(lines[1] == "a3(j,i,k)*s2(j,i) + a3(k,i,j)*s2(j,i)", lines[1])?;
    Ok(format!("dim 110 in {:?}", start.elapsed()))
}

fn golden() -> Result<String, String> {
    // (input, expected numerator, denominator)
    let cases: &[(&str, &str, i64)] = &[
        ("a2(k,k)", "0", 1),
        ("a2(j,i)-a2(i,j)", "2*a2(j,i)", 1),
        ("a2(i,j)*v1(i)*v1(j)", "0", 1),
        ("a2(i,j)*s2(i,j)", "0", 1),
        ("a2(i,j)*a2(j,k)*a2(k,i)", "0", 1),
        ("a3(i,k,i)", "0", 1),
        ("s3(i,j,k)-s3(i,k,j)", "0", 1),
        ("s3(i,j,k)*a3(i,j,k)", "0", 1),
        ("ri(i,j,k,l)-ri(k,l,i,j)", "0", 1),
        ("ri(m,n,m,n)-ri(m,n,n,m)", "2*ri(m,n,m,n)", 1),
        (
            "ri(i,j,k,l)+ri(j,k,l,i)+ri(k,l,i,j)+ri(l,i,j,k)",
            "(-2)*ri(l,j,i,k) + 4*ri(l,i,j,k)",
            1,
        ),
        ("a2(m,n)*ri(m,n,c,d) + a2(k,l)*ri(c,d,l,k)", "0", 1),
        ("(ri(i,j,k,l)-ri(i,k,j,l))*a2(i,j)", "a2(i,j)*ri(i,j,k,l)", 2),
    ];
    let mut s = reference_session();
    let mut slowest = Duration::ZERO;
    for (input, expected, den) in cases {
        let start = Instant::now();
        let e = expr(&mut s, input);
        let got = canon(&s, &e);
        let t = start.elapsed();
        slowest = slowest.max(t);
        let limit = if e.degree() >= 6 { 60 } else { 30 };
        within(start, Duration::from_secs(limit), input)?;
        let (want, want_terms) = if *expected == "0" {
            (None, 0)
        } else {
            let w = expr(&mut s, expected).scale(&Coeff::new(1.into(), (*den).into()));
            let n = w.vec().len();
            (Some(w), n)
        };
        ensure(got.vec().len() == want_terms, format!("{input}: {} terms", got.vec().len()))?;
        if let Some(w) = want {
            ensure(s.registry().equal(&got, &w).unwrap(), format!("{input}: not equal to {expected}"))?;
        }
    }
    Ok(format!("{} cases, slowest {slowest:?}", cases.len()))
}

fn memory() -> Result<String, String> {
    for (n, cells, bytes) in [(9, 2.9, 22.6), (10, 29.0, 226.8), (11, 319.3, 2494.8)] {
        let e = estimate_memory(n);
        let rel = |a: f64, b: f64| ((a - b) / b).abs();
        ensure(
            rel(e.mcells, cells) < 0.01 && rel(e.mbytes, bytes) < 0.01,
            format!("rank {n}: ({:.3}, {:.3})", e.mcells, e.mbytes),
        )?;
    }
    Ok("ranks 9, 10, 11 within 1%".into())
}

struct Scenario {
    name: String,
    basis: KBasis,
    relations: Vec<GroupVector>,
}

fn scenarios(s: &mut Session) -> Vec<Scenario> {
    let mut out = Vec::new();
    let mut from_header = |s: &Session, name: String, header: &TensorHeader, dummies: bool| {
        let reg = s.registry();
        let mut relations = product_relations(header, |n| reg.k0(n).map(|b| b.into_owned()));
        let basis = if dummies {
            relations.extend(dummy_relations(header));
            reg.full_basis(header).unwrap().0
        } else {
            reg.product_basis(header).unwrap()
        };
        out.push(Scenario { name, basis, relations });
    };
    for names in [&["a2"][..], &["s2"], &["a3"], &["s3"], &["ri"], &["s2", "a3"], &["a2", "ri"]] {
        let spec = BasisSpec { names: names.iter().map(|n| n.to_string()).collect() };
        let (header, _) = s.basis(&spec).unwrap().unwrap();
        from_header(s, names.join("*"), &header, false);
    }
    for src in ["a2(i,j)*s2(j,k)", "a2(i,j)*a3(j,k,i)", "v1(i)*ri(i,j,k,j)", "a2(m,n)*ri(m,n,c,d)"] {
        let e = expr(s, src);
        from_header(s, src.to_string(), e.header(), true);
    }
    out
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn properties() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut s = reference_session();
    let scen = scenarios(&mut s);

    // sieve idempotence, linearity, length bound
    for sc in &scen {
        let n = sc.basis.degree();
        let bound = factorial(n) - sc.basis.dim();
        for _ in 0..1000 {
            let (x, y) = (random_vector(&mut rng, n, 8), random_vector(&mut rng, n, 8));
            let k = coeff(rng.gen_range(-4..=4));
            let sx = sc.basis.sieve(&x).unwrap();
            let sy = sc.basis.sieve(&y).unwrap();
            ensure(sc.basis.sieve(&sx).unwrap() == sx, format!("{}: sieve not idempotent", sc.name))?;
            let lhs = sc.basis.sieve(&x.add(&y.scale(&k)).unwrap()).unwrap();
            ensure(lhs == sx.add(&sy.scale(&k)).unwrap(), format!("{}: sieve not linear", sc.name))?;
            ensure(sx.len() <= bound, format!("{}: canonical form longer than n!-dim", sc.name))?;
        }
    }

    // dummy renaming leaves the printed output unchanged up to the names
    let templates = [
        "a2(#0,#1)*ri(#0,#1,c,d)",
        "ri(#0,c,#1,d)*a2(#0,#1)",
        "a2(#0,c)*s2(#0,#1)*v1(#1)",
        "a3(#0,#1,c)*s3(d,#0,#1)",
        "ri(#0,#1,c,#2)*v1(#0)*v2(#1)*v3(#2)",
        "a2(#0,#1)*ri(#0,#1,c,d) + a2(#1,#0)*ri(c,d,#0,#1)",
    ];
    let pool = ["a", "b", "e", "f", "g", "h", "m", "n", "p", "q", "r", "t", "x", "y", "z"];
    let render = |s: &mut Session, t: &str, names: &[&str]| {
        let mut src = t.to_string();
        for (k, n) in names.iter().enumerate() {
            src = src.replace(&format!("#{k}"), n);
        }
        let e = expr(s, &src);
        s.render(&tcanon::Value::Tensor(canon(s, &e)))
    };
    let reference: Vec<String> = templates.iter().map(|t| render(&mut s, t, &["i", "j", "k"])).collect();
    for _ in 0..200 {
        let k = rng.gen_range(0..templates.len());
        let names: Vec<&str> = pool.choose_multiple(&mut rng, 3).copied().collect();
        let got = render(&mut s, templates[k], &names);
        let map = [("i", names[0]), ("j", names[1]), ("k", names[2])];
        let want = rename_indices(&reference[k], &map);
        ensure(got == want, format!("{}: {got} vs {want}", templates[k]))?;
    }

    // pair exchange of ri from three relations only
    let mut fresh = Session::default();
    let out = run(
        &mut fresh,
        "tensor ri; tsym ri(i,j,k,l) + ri(j,i,k,l), ri(i,j,k,l) + ri(i,j,l,k),
         ri(i,j,k,l) + ri(i,k,l,j) + ri(i,l,j,k); ri(i,j,k,l)-ri(k,l,i,j);",
    );
    ensure(out.trim() == "0", format!("pair exchange gave {out}"))?;

    // oracle agreement on named scenarios
    let mut checked = 0;
    for sc in scen.iter().filter(|sc| sc.basis.degree() <= 5) {
        let n = sc.basis.degree();
        let mut dense = DenseSpan::new(n).unwrap();
        for r in &sc.relations {
            dense.push(r).unwrap();
        }
        ensure(dense.dim() == sc.basis.dim(), format!("{}: oracle dim {}", sc.name, dense.dim()))?;
        for i in 0..1000 {
            let mut v = if i % 2 == 0 { random_vector(&mut rng, n, 6) } else { GroupVector::zero(n) };
            for _ in 0..rng.gen_range(0..4) {
                let r = &sc.relations[rng.gen_range(0..sc.relations.len())];
                v = v.add(&r.scale(&coeff(rng.gen_range(-3..=3)))).unwrap();
            }
            let engine = sc.basis.sieve(&v).unwrap().is_zero();
            ensure(engine == dense.member(&v).unwrap(), format!("{}: membership disagrees", sc.name))?;
        }
        checked += 1;
    }

    // oracle agreement on random relation sets
    for set in 0..50 {
        let n = rng.gen_range(2..=5);
        let relations: Vec<GroupVector> = (0..rng.gen_range(1..12)).map(|_| random_vector(&mut rng, n, 4)).collect();
        let basis = KBasis::build(&relations, KBasis::new(n)).unwrap();
        let dim = oracle::span_dim(n, &relations).unwrap();
        ensure(basis.dim() == dim, format!("random set {set}: {} vs {dim}", basis.dim()))?;
        for _ in 0..20 {
            let v = random_vector(&mut rng, n, 4);
            ensure(
                basis.sieve(&v).unwrap().is_zero() == oracle::member(n, &relations, &v).unwrap(),
                format!("random set {set}: membership disagrees"),
            )?;
        }
    }
    Ok(format!("{} scenarios, {checked} oracle scenarios, 50 random sets", scen.len()))
}

fn transcript() -> Result<String, String> {
    let start = Instant::now();
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/test_run.tcn");
    let output = Command::new(env!("CARGO_BIN_EXE_tcanon"))
        .args(["--echo", "--script", path])
        .output()
        .map_err(|e| e.to_string())?;
    within(start, Duration::from_secs(300), "transcript")?;
    ensure(output.status.success(), String::from_utf8_lossy(&output.stderr))?;
    let got = normalize(&String::from_utf8_lossy(&output.stdout));
    let want = normalize(TEST_RUN_EXPECTED);
    for (i, (g, w)) in got.iter().zip(&want).enumerate() {
        ensure(g == w, format!("line {}: `{g}` vs `{w}`", i + 1))?;
    }
    ensure(got.len() == want.len(), format!("{} lines vs {}", got.len(), want.len()))?;
    Ok(format!("{} lines in {:?}", got.len(), start.elapsed()))
}

fn main() -> ExitCode {
    let criteria: &[(&str, Check)] = &[
        ("single-tensor basis dimensions", single_bases),
        ("product basis dimension", product_basis),
        ("simplification golden suite", golden),
        ("memory estimator", memory),
        ("property suites", properties),
        ("reference transcript", transcript),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let result = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        match result {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail})", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({why})", k + 1);
            }
        }
    }
    let _ = io::Write::flush(&mut io::stdout());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
