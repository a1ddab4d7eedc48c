use num_bigint::BigUint;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigUint),
    /// `name(i,j,…)`
    Tensor { name: String, indices: Vec<String> },
    /// A bare name: a bound variable.
    Var(String),
    Neg(Box<Expr>),
    /// `a - b` with exactly two operands.
    Diff(Box<Expr>, Box<Expr>),
    /// Any other chain of `+`/`-`; subtracted terms are wrapped in `Neg`.
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
}

/// An entry of a `kbasis` list: a tensor, or a product written `t1(t2,…)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisSpec {
    pub names: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StatementKind {
    TensorDecl(Vec<String>),
    SymDecl(Vec<Expr>),
    KBasisQuery(Vec<BasisSpec>),
    TClear(Vec<String>),
    SwitchSet { on: bool, names: Vec<String> },
    Assignment { name: String, expr: Expr },
    ExprEval(Expr),
    ShowTime,
    /// `end;` stops a script.
    End,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statement {
    pub kind: StatementKind,
    /// Terminated by `$` rather than `;`.
    pub silent: bool,
    /// Source text, terminator included.
    pub text: String,
    pub line: usize,
}
