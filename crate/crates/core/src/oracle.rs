//! Dense reference implementation of span computations.
//!
//! Vectors are expanded over all `n!` permutations in lexicographic order and
//! reduced by plain Gaussian elimination with pivots on the lowest column.
//! Nothing here shares code with [`crate::kbasis`]; it is meant for
//! cross-checking at small degrees.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::OracleError;
use crate::galg::{Coeff, GroupVector};
use crate::perm::Perm;

/// Largest degree the oracle accepts (`7! = 5040` columns).
pub const MAX_ORACLE_DEGREE: usize = 7;

/// Lexicographic rank of a permutation among all permutations of its degree.
pub fn lex_rank(p: &Perm) -> usize {
    let images: Vec<usize> = p.images().collect();
    let n = images.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = images[i + 1..].iter().filter(|&&x| x < images[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

/// Row-reduced dense matrix spanning a set of vectors.
#[derive(Clone, Debug)]
pub struct DenseSpan {
    degree: usize,
    columns: usize,
    /// `(pivot column, row)`; each row has a 1 at its pivot and zeros at
    /// every other row's pivot.
    rows: Vec<(usize, Vec<Coeff>)>,
}

impl DenseSpan {
    pub fn new(degree: usize) -> Result<DenseSpan, OracleError> {
        if degree == 0 || degree > MAX_ORACLE_DEGREE {
            return Err(OracleError::Oversize {
                max: MAX_ORACLE_DEGREE,
                found: degree,
            });
        }
        let columns = (1..=degree).product();
        Ok(DenseSpan {
            degree,
            columns,
            rows: Vec::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn dense(&self, v: &GroupVector) -> Result<Vec<Coeff>, OracleError> {
        if v.degree() != self.degree {
            return Err(OracleError::DegreeMismatch {
                expected: self.degree,
                found: v.degree(),
            });
        }
        let mut out = alloc::vec![Coeff::zero(); self.columns];
        for (c, p) in v.terms() {
            out[lex_rank(p)] += c;
        }
        Ok(out)
    }

    fn eliminate(&self, mut x: Vec<Coeff>) -> Vec<Coeff> {
        for (pivot, row) in &self.rows {
            if x[*pivot].is_zero() {
                continue;
            }
            let k = x[*pivot].clone();
            for (xi, ri) in x.iter_mut().zip(row) {
                if !ri.is_zero() {
                    *xi -= &k * ri;
                }
            }
        }
        x
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn push(&mut self, v: &GroupVector) -> Result<bool, OracleError> {
        let x = self.eliminate(self.dense(v)?);
        let Some(pivot) = x.iter().position(|c| !c.is_zero()) else {
            return Ok(false);
        };
        let inv = x[pivot].recip();
        let x: Vec<Coeff> = x.into_iter().map(|c| c * &inv).collect();
        for (_, row) in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let k = row[pivot].clone();
            for (ri, xi) in row.iter_mut().zip(&x) {
                if !xi.is_zero() {
                    *ri -= &k * xi;
                }
            }
        }
        self.rows.push((pivot, x));
        Ok(true)
    }

    /// `v` with every pivot column of the span eliminated, as dense coefficients.
    pub fn residual(&self, v: &GroupVector) -> Result<Vec<Coeff>, OracleError> {
        Ok(self.eliminate(self.dense(v)?))
    }

    pub fn member(&self, v: &GroupVector) -> Result<bool, OracleError> {
        Ok(self.residual(v)?.iter().all(Zero::is_zero))
    }
}

/// Dimension of the span of `vectors`.
pub fn span_dim<'a, I>(degree: usize, vectors: I) -> Result<usize, OracleError>
where
    I: IntoIterator<Item = &'a GroupVector>,
{
    let mut span = DenseSpan::new(degree)?;
    for v in vectors {
        span.push(v)?;
    }
    Ok(span.dim())
}

/// Whether `v` lies in the span of `vectors`.
pub fn member<'a, I>(degree: usize, vectors: I, v: &GroupVector) -> Result<bool, OracleError>
where
    I: IntoIterator<Item = &'a GroupVector>,
{
    let mut span = DenseSpan::new(degree)?;
    for w in vectors {
        span.push(w)?;
    }
    span.member(v)
}
