#![allow(dead_code)]

use tcanon_core::galg::coeff;
use tcanon_core::texpr::DummyCounter;
use tcanon_core::{Registry, TensorExpr};

/// A session-like helper: a registry plus a dummy counter.
pub struct Ctx {
    pub reg: Registry,
    pub counter: DummyCounter,
}

impl Ctx {
    pub fn new() -> Ctx {
        Ctx {
            reg: Registry::new(),
            counter: DummyCounter::new(),
        }
    }

    pub fn tensor(&mut self, names: &[&str]) {
        for n in names {
            assert!(self.reg.declare(n).is_none());
        }
    }

    /// `name(i,j,...)` with single-letter index names.
    pub fn t(&mut self, name: &str, idx: &str) -> TensorExpr {
        let letters: Vec<String> = idx.chars().map(String::from).collect();
        let (e, _) = TensorExpr::atom(name, &letters, &mut self.counter).unwrap();
        self.reg.use_tensor(name, letters.len()).unwrap();
        e
    }

    pub fn mul(&mut self, a: &TensorExpr, b: &TensorExpr) -> TensorExpr {
        a.mul(b, &mut self.counter).0
    }

    pub fn prod(&mut self, parts: &[TensorExpr]) -> TensorExpr {
        let mut acc = parts[0].clone();
        for p in &parts[1..] {
            acc = self.mul(&acc, p);
        }
        acc
    }

    pub fn tsym(&mut self, rel: &TensorExpr) -> usize {
        self.reg.declare_symmetry(rel).unwrap()
    }

    /// Sum of signed terms, folded from the right so the last term's header wins.
    pub fn sum(&self, terms: &[(i64, TensorExpr)]) -> TensorExpr {
        let mut acc: Option<TensorExpr> = None;
        for (c, t) in terms {
            let t = t.scale(&coeff(*c));
            acc = Some(match acc {
                None => t,
                Some(a) => t.add(&a).unwrap(),
            });
        }
        acc.unwrap()
    }

    pub fn canon(&self, e: &TensorExpr) -> TensorExpr {
        self.reg.simplify(e).unwrap().canonical
    }
}

/// The tensors declared in the reference session, with their relations.
pub fn standard() -> Ctx {
    let mut c = Ctx::new();
    c.tensor(&["a2", "v1", "v2", "v3", "s2", "a3", "s3", "ri"]);
    let r = c.sum(&[(1, c.clone_t("a2", "ij")), (1, c.clone_t("a2", "ji"))]);
    c.tsym(&r);
    let (x, y) = (c.t("s2", "ij"), c.t("s2", "ji"));
    c.tsym(&x.sub(&y).unwrap());
    let r = c.sum(&[(1, c.clone_t("a3", "ijk")), (1, c.clone_t("a3", "jik"))]);
    c.tsym(&r);
    let (x, y) = (c.t("a3", "ijk"), c.t("a3", "jki"));
    c.tsym(&x.sub(&y).unwrap());
    let (x, y) = (c.t("s3", "ijk"), c.t("s3", "jik"));
    c.tsym(&x.sub(&y).unwrap());
    let (x, y) = (c.t("s3", "ijk"), c.t("s3", "jki"));
    c.tsym(&x.sub(&y).unwrap());
    let r = c.sum(&[(1, c.clone_t("ri", "ijkl")), (1, c.clone_t("ri", "jikl"))]);
    c.tsym(&r);
    let r = c.sum(&[(1, c.clone_t("ri", "ijkl")), (1, c.clone_t("ri", "ijlk"))]);
    c.tsym(&r);
    let r = c.sum(&[
        (1, c.clone_t("ri", "ijkl")),
        (1, c.clone_t("ri", "iklj")),
        (1, c.clone_t("ri", "iljk")),
    ]);
    c.tsym(&r);
    c
}

impl Ctx {
    /// Atom without dummies, usable where `self` is borrowed immutably.
    pub fn clone_t(&self, name: &str, idx: &str) -> TensorExpr {
        let letters: Vec<String> = idx.chars().map(String::from).collect();
        TensorExpr::atom(name, &letters, &mut DummyCounter::starting_at(1_000_001)).unwrap().0
    }
}
