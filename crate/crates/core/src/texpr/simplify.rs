use crate::error::TensorError;
use crate::kbasis::KBasis;
use crate::texpr::expr::TensorExpr;
use crate::texpr::header::TensorHeader;
use crate::texpr::registry::Registry;
use crate::texpr::relations::dummy_generators;

/// Result of sieving an expression through its full relation basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Simplified {
    /// Canonical representative.
    pub canonical: TensorExpr,
    /// Fewest-term form met on the way (input and result included).
    pub shortest: TensorExpr,
    /// Dimension of the product basis before dummy renamings.
    pub product_dim: usize,
    /// Dimension of the full basis.
    pub full_dim: usize,
}

impl Simplified {
    /// The form selected by the `shortest` switch.
    pub fn display_form(&self, shortest: bool) -> &TensorExpr {
        if shortest {
            &self.shortest
        } else {
            &self.canonical
        }
    }
}

impl Registry {
    /// Product basis completed by dummy renamings of `header`.
    pub fn full_basis(&self, header: &TensorHeader) -> Result<(KBasis, usize), TensorError> {
        let mut basis = self.product_basis(header)?;
        let product_dim = basis.dim();
        for g in dummy_generators(header) {
            for v in g.expand() {
                basis.absorb(&v)?;
            }
        }
        Ok((basis, product_dim))
    }

    /// Projects `expr` onto its canonical representative.
    pub fn simplify(&self, expr: &TensorExpr) -> Result<Simplified, TensorError> {
        for f in expr.header().factors() {
            let t = self
                .tensor(&f.name)
                .ok_or_else(|| TensorError::NotATensor(f.name.clone()))?;
            if let Some(arity) = t.arity() {
                if arity != f.arity {
                    return Err(TensorError::ArityMismatch {
                        name: f.name.clone(),
                        expected: arity,
                        found: f.arity,
                    });
                }
            }
        }
        if expr.is_zero() {
            return Ok(Simplified {
                canonical: expr.clone(),
                shortest: expr.clone(),
                product_dim: 0,
                full_dim: 0,
            });
        }
        let (basis, product_dim) = self.full_basis(expr.header())?;
        let (canonical, shortest) = basis.sieve_tracking_shortest(expr.vec())?;
        Ok(Simplified {
            canonical: expr.with_vec(canonical),
            shortest: expr.with_vec(shortest),
            product_dim,
            full_dim: basis.dim(),
        })
    }

    /// Whether `a − b` vanishes modulo all relations.
    pub fn equal(&self, a: &TensorExpr, b: &TensorExpr) -> Result<bool, TensorError> {
        let diff = a.sub(b)?;
        Ok(self.simplify(&diff)?.canonical.is_zero())
    }
}
