//! Statement evaluation against a registry of declared tensors.

use std::collections::HashMap;
use std::io::{self, Write};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use tcanon_core::galg::Coeff;
use tcanon_core::texpr::{DummyCounter, Warning};
use tcanon_core::{KBasis, Registry, TensorError, TensorExpr, TensorHeader};

use crate::frontend::printer;
use crate::frontend::{parse, BasisSpec, Expr, Statement, StatementKind, SyntaxError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("Invalid as tensor: {0}")]
    InvalidTensor(String),
    #[error("{0}")]
    Tensor(TensorError),
    #[error("{0} has no value")]
    Unbound(String),
    #[error("cannot add a number to a tensor expression")]
    MixedSum,
    #[error("a symmetry relation must be a tensor expression")]
    ScalarRelation,
    #[error("unknown switch {0}")]
    UnknownSwitch(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl From<TensorError> for CliError {
    fn from(e: TensorError) -> CliError {
        match e {
            TensorError::NotATensor(name) => CliError::InvalidTensor(name),
            other => CliError::Tensor(other),
        }
    }
}

/// Result of evaluating an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Coeff),
    Tensor(TensorExpr),
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    /// Print each statement before its output.
    pub echo: bool,
    /// Print the elapsed time after every statement.
    pub time: bool,
}

/// Where [`Session::run_source`] stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flow {
    Continue,
    Ended,
}

pub struct Session {
    registry: Registry,
    counter: DummyCounter,
    bindings: HashMap<String, Value>,
    options: Options,
    clock: Instant,
}

impl Default for Session {
    fn default() -> Self {
        Session::new(Options::default())
    }
}

impl Session {
    pub fn new(options: Options) -> Session {
        Session {
            registry: Registry::new(),
            counter: DummyCounter::new(),
            bindings: HashMap::new(),
            options,
            clock: Instant::now(),
        }
    }

    pub fn registry(&self) -> &Registry {
        &self.registry
    }

    pub fn registry_mut(&mut self) -> &mut Registry {
        &mut self.registry
    }

    /// Parses and runs `src`, stopping at the first error or `end;`.
    pub fn run_source(&mut self, src: &str, out: &mut dyn Write, diag: &mut dyn Write) -> Result<Flow, CliError> {
        for stmt in parse(src)? {
            if self.run(&stmt, out, diag)? == Flow::Ended {
                return Ok(Flow::Ended);
            }
        }
        Ok(Flow::Continue)
    }

    pub fn run(&mut self, stmt: &Statement, out: &mut dyn Write, diag: &mut dyn Write) -> Result<Flow, CliError> {
        if self.options.echo {
            writeln!(out, "{}", stmt.text)?;
        }
        let started = Instant::now();
        let mut warnings = Vec::new();
        let flow = self.execute(stmt, out, &mut warnings);
        for w in &warnings {
            writeln!(diag, "+++ {w}")?;
        }
        let flow = flow?;
        if self.options.time {
            writeln!(out, "Time: {} ms", started.elapsed().as_millis())?;
        }
        Ok(flow)
    }

    fn execute(&mut self, stmt: &Statement, out: &mut dyn Write, warnings: &mut Vec<Warning>) -> Result<Flow, CliError> {
        match &stmt.kind {
            StatementKind::TensorDecl(names) => {
                warnings.extend(names.iter().filter_map(|n| self.registry.declare(n)));
            }
            StatementKind::TClear(names) => {
                warnings.extend(names.iter().filter_map(|n| self.registry.undeclare(n)));
            }
            StatementKind::SymDecl(relations) => {
                for rel in relations {
                    let Value::Tensor(e) = self.eval(rel, warnings)? else {
                        return Err(CliError::ScalarRelation);
                    };
                    self.registry.declare_symmetry(&e)?;
                }
            }
            StatementKind::KBasisQuery(specs) => {
                for spec in specs {
                    let dummypri = self.registry.switches().dummypri;
                    match self.basis(spec)? {
                        Some((header, basis)) => {
                            for row in basis.rows() {
                                let e = TensorExpr::new(header.clone(), row.clone())?;
                                writeln!(out, "{}", printer::print(&e, dummypri))?;
                            }
                            writeln!(out, "{}", basis.dim())?;
                        }
                        None => writeln!(out, "0")?,
                    }
                }
            }
            StatementKind::SwitchSet { on, names } => {
                for name in names {
                    match name.as_str() {
                        "dummypri" => self.registry.set_dummypri(*on),
                        "shortest" => self.registry.set_shortest(*on),
                        "packed" => self.registry.set_packed(*on),
                        _ => return Err(CliError::UnknownSwitch(name.clone())),
                    }
                }
            }
            StatementKind::ShowTime => {
                writeln!(out, "Time: {} ms", self.clock.elapsed().as_millis())?;
                self.clock = Instant::now();
            }
            StatementKind::Assignment { name, expr } => {
                let value = self.eval(expr, warnings)?;
                let value = self.simplify_value(value)?;
                if !stmt.silent {
                    writeln!(out, "{name} := {}", self.render(&value))?;
                }
                self.bindings.insert(name.clone(), value);
            }
            StatementKind::ExprEval(expr) => {
                let value = self.eval(expr, warnings)?;
                let shown = match value {
                    Value::Tensor(e) => {
                        let s = self.registry.simplify(&e)?;
                        Value::Tensor(s.display_form(self.registry.switches().shortest).clone())
                    }
                    scalar => scalar,
                };
                if !stmt.silent {
                    writeln!(out, "{}", self.render(&shown))?;
                }
            }
            StatementKind::End => return Ok(Flow::Ended),
        }
        Ok(Flow::Continue)
    }

    fn simplify_value(&self, v: Value) -> Result<Value, CliError> {
        Ok(match v {
            Value::Tensor(e) => Value::Tensor(self.registry.simplify(&e)?.canonical),
            scalar => scalar,
        })
    }

    /// Renders a value with the current switches.
    pub fn render(&self, v: &Value) -> String {
        match v {
            Value::Scalar(c) if c.is_integer() => c.to_integer().to_string(),
            Value::Scalar(c) => format!("{} / {}", c.numer(), c.denom()),
            Value::Tensor(e) => printer::print(e, self.registry.switches().dummypri),
        }
    }

    /// The header and basis a `kbasis` entry refers to; `None` for a single
    /// tensor whose number of indices is not known yet.
    pub fn basis(&self, spec: &BasisSpec) -> Result<Option<(TensorHeader, KBasis)>, CliError> {
        for name in &spec.names {
            if !self.registry.is_tensor(name) {
                return Err(CliError::InvalidTensor(name.clone()));
            }
        }
        if let [name] = spec.names.as_slice() {
            let t = self.registry.tensor(name).expect("checked above");
            if t.arity().is_none() {
                return Ok(None);
            }
            let header = self.registry.display_header(&[name])?;
            let basis = match t.k0() {
                Some(b) => b.into_owned(),
                None => KBasis::new(header.degree()),
            };
            return Ok(Some((header, basis)));
        }
        let names: Vec<&str> = spec.names.iter().map(String::as_str).collect();
        let header = self.registry.display_header(&names)?;
        let basis = self.registry.product_basis(&header)?;
        Ok(Some((header, basis)))
    }

    /// Evaluates an expression without simplifying it. Sums take the index
    /// layout of their last term, binary differences that of their first.
    pub fn eval(&mut self, expr: &Expr, warnings: &mut Vec<Warning>) -> Result<Value, CliError> {
        Ok(match expr {
            Expr::Int(n) => Value::Scalar(Coeff::from_integer(BigInt::from(n.clone()))),
            Expr::Tensor { name, indices } => {
                if !self.registry.is_tensor(name) {
                    return Err(CliError::InvalidTensor(name.clone()));
                }
                self.registry.use_tensor(name, indices.len())?;
                let (e, w) = TensorExpr::atom(name, indices, &mut self.counter)?;
                warnings.extend(w);
                Value::Tensor(e)
            }
            Expr::Var(name) => match self.bindings.get(name) {
                Some(v) => v.clone(),
                None if self.registry.is_tensor(name) => {
                    return Err(TensorError::NoIndices(name.clone()).into());
                }
                None => return Err(CliError::Unbound(name.clone())),
            },
            Expr::Neg(e) => negate(self.eval(e, warnings)?),
            Expr::Diff(a, b) => {
                let a = self.eval(a, warnings)?;
                let b = self.eval(b, warnings)?;
                add(a, negate(b))?
            }
            Expr::Sum(terms) => {
                let mut values = Vec::with_capacity(terms.len());
                for t in terms {
                    values.push(self.eval(t, warnings)?);
                }
                let mut values = values.into_iter();
                let mut acc = values.next().expect("sums have terms");
                for v in values {
                    acc = add(v, acc)?;
                }
                acc
            }
            Expr::Product(factors) => {
                let mut acc: Option<Value> = None;
                for f in factors {
                    let v = self.eval(f, warnings)?;
                    acc = Some(match acc {
                        None => v,
                        Some(a) => self.multiply(a, v, warnings),
                    });
                }
                acc.expect("products have factors")
            }
        })
    }

    fn multiply(&mut self, a: Value, b: Value, warnings: &mut Vec<Warning>) -> Value {
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
            (Value::Scalar(k), Value::Tensor(e)) | (Value::Tensor(e), Value::Scalar(k)) => Value::Tensor(e.scale(&k)),
            (Value::Tensor(x), Value::Tensor(y)) => {
                let (e, w) = x.mul(&y, &mut self.counter);
                warnings.extend(w);
                Value::Tensor(e)
            }
        }
    }
}

fn negate(v: Value) -> Value {
    match v {
        Value::Scalar(c) => Value::Scalar(-c),
        Value::Tensor(e) => Value::Tensor(e.neg()),
    }
}

/// `a + b` over `a`'s index layout.
fn add(a: Value, b: Value) -> Result<Value, CliError> {
    Ok(match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y),
        (Value::Tensor(x), Value::Tensor(y)) => Value::Tensor(x.add(&y)?),
        (Value::Scalar(k), v) | (v, Value::Scalar(k)) if k.is_zero() => v,
        _ => return Err(CliError::MixedSum),
    })
}
