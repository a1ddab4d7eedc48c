//! Triangle bases of relation subspaces and the canonical sieve.
//!
//! A [`KBasis`] holds linearly independent rows, each renormed to coprime
//! integers and keyed by its leading permutation (its pivot). Rows are kept
//! fully reduced: no row has a nonzero coefficient on another row's pivot.
//! Sieving a vector eliminates every pivot from it; the result is the
//! canonical representative of the vector's class modulo the span.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::BasisError;
use crate::galg::GroupVector;
use crate::perm::Perm;

/// `v − (v[pivot] / row[pivot])·row`, where `pivot` is the row's leading
/// permutation. Returns `v` unchanged when it has no term at the pivot.
pub fn reduce(v: &GroupVector, row: &GroupVector) -> GroupVector {
    let Some((lead, pivot)) = row.leading() else {
        return v.clone();
    };
    match v.coeff(pivot) {
        Some(c) => v.add_scaled(&-(c / lead), row),
        None => v.clone(),
    }
}

#[derive(Clone, Debug)]
pub struct KBasis {
    degree: usize,
    rows: BTreeMap<Perm, GroupVector>,
    /// For each non-pivot term, the pivots of the rows containing it.
    occurs: BTreeMap<Perm, BTreeSet<Perm>>,
}

impl PartialEq for KBasis {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.rows == other.rows
    }
}

impl Eq for KBasis {}

impl KBasis {
    pub fn new(degree: usize) -> KBasis {
        KBasis {
            degree,
            rows: BTreeMap::new(),
            occurs: BTreeMap::new(),
        }
    }

    fn index(&mut self, pivot: &Perm, row: &GroupVector) {
        for (_, p) in &row.terms()[1..] {
            self.occurs.entry(p.clone()).or_default().insert(pivot.clone());
        }
    }

    fn unindex(&mut self, pivot: &Perm, row: &GroupVector) {
        for (_, p) in &row.terms()[1..] {
            if let Some(set) = self.occurs.get_mut(p) {
                set.remove(pivot);
                if set.is_empty() {
                    self.occurs.remove(p);
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of rows, i.e. the dimension of the spanned subspace.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows ordered by descending pivot.
    pub fn rows(&self) -> impl DoubleEndedIterator<Item = &GroupVector> + ExactSizeIterator {
        self.rows.values().rev()
    }

    pub fn pivots(&self) -> impl DoubleEndedIterator<Item = &Perm> + ExactSizeIterator {
        self.rows.keys().rev()
    }

    pub fn is_pivot(&self, p: &Perm) -> bool {
        self.rows.contains_key(p)
    }

    pub fn row(&self, pivot: &Perm) -> Option<&GroupVector> {
        self.rows.get(pivot)
    }

    fn check(&self, v: &GroupVector) -> Result<(), BasisError> {
        if v.degree() != self.degree {
            return Err(BasisError::DegreeMismatch {
                expected: self.degree,
                found: v.degree(),
            });
        }
        Ok(())
    }

    fn first_pivot_in(&self, v: &GroupVector) -> Option<&GroupVector> {
        v.terms().iter().find_map(|(_, p)| self.rows.get(p))
    }

    /// Eliminates every pivot from `v`. Rescans until no pivot remains, so
    /// the result does not depend on the order rows are applied in.
    pub fn sieve(&self, v: &GroupVector) -> Result<GroupVector, BasisError> {
        self.check(v)?;
        let mut current = v.clone();
        while let Some(row) = self.first_pivot_in(&current) {
            current = reduce(&current, row);
        }
        Ok(current)
    }

    /// Like [`sieve`](Self::sieve), also returning the intermediate vector
    /// with the fewest terms (the input and result included; ties go to the
    /// earliest one).
    pub fn sieve_tracking_shortest(
        &self,
        v: &GroupVector,
    ) -> Result<(GroupVector, GroupVector), BasisError> {
        self.check(v)?;
        let mut current = v.clone();
        let mut shortest = v.clone();
        while let Some(row) = self.first_pivot_in(&current) {
            current = reduce(&current, row);
            if current.len() < shortest.len() {
                shortest = current.clone();
            }
        }
        Ok((current, shortest))
    }

    /// Adds an already sieved nonzero vector as a row and reduces the
    /// existing rows against it.
    pub fn insert(&mut self, v: &GroupVector) -> Result<(), BasisError> {
        self.check(v)?;
        if v.is_zero() {
            return Err(BasisError::ZeroVector);
        }
        if let Some((_, p)) = v.terms().iter().find(|(_, p)| self.rows.contains_key(p)) {
            return Err(BasisError::PivotCollision(p.clone()));
        }
        let row = v.renorm();
        let pivot = row.leading().map(|(_, p)| p.clone()).unwrap_or_else(|| unreachable!());
        for q in self.occurs.remove(&pivot).unwrap_or_default() {
            let old = self.rows.remove(&q).expect("indexed rows exist");
            self.unindex(&q, &old);
            let new = reduce(&old, &row).renorm();
            self.index(&q, &new);
            self.rows.insert(q, new);
        }
        self.index(&pivot, &row);
        self.rows.insert(pivot, row);
        Ok(())
    }

    /// Sieves `v` and inserts the remainder if it is nonzero. Returns whether
    /// the dimension grew.
    pub fn absorb(&mut self, v: &GroupVector) -> Result<bool, BasisError> {
        let rest = self.sieve(v)?;
        if rest.is_zero() {
            return Ok(false);
        }
        self.insert(&rest)?;
        Ok(true)
    }

    /// Extends `initial` by a list of relations, one sieve-then-insert step each.
    pub fn build<'a, I>(relations: I, initial: KBasis) -> Result<KBasis, BasisError>
    where
        I: IntoIterator<Item = &'a GroupVector>,
    {
        let mut basis = initial;
        for v in relations {
            basis.absorb(v)?;
        }
        Ok(basis)
    }

    /// Whether `v` lies in the span of the rows.
    pub fn contains(&self, v: &GroupVector) -> Result<bool, BasisError> {
        Ok(self.sieve(v)?.is_zero())
    }

    /// Checks the reduced-triangle invariants. Intended for tests and debug assertions.
    pub fn is_reduced(&self) -> bool {
        self.rows.iter().all(|(pivot, row)| {
            row.degree() == self.degree
                && row.leading().map(|(c, p)| p == pivot && !c.is_zero() && c > &Zero::zero())
                    == Some(true)
                && row.terms()[1..].iter().all(|(_, p)| !self.rows.contains_key(p))
        })
    }

    pub(crate) fn from_rows_unchecked(degree: usize, rows: Vec<GroupVector>) -> KBasis {
        let mut basis = KBasis::new(degree);
        for r in rows {
            let pivot = r.leading().map(|(_, p)| p.clone()).unwrap_or_else(|| unreachable!());
            basis.index(&pivot, &r);
            basis.rows.insert(pivot, r);
        }
        basis
    }
}
