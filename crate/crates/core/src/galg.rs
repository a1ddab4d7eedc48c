//! Sparse vectors in the group algebra of `S_n`.
//!
//! A [`GroupVector`] is an exact rational combination `Σ c_i e_{p_i}` of unit
//! vectors, one per permutation. Terms are kept strictly descending by
//! permutation (equivalently by packed value), with no zero coefficients and
//! no repeated permutations; the zero vector is the empty term list.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::PermError;
use crate::perm::Perm;

/// Exact coefficient type.
pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupVector {
    degree: usize,
    terms: Vec<(Coeff, Perm)>,
}

/// Sorts raw terms descending by permutation. Equal permutations end up adjacent.
pub fn sort_terms(terms: &mut [(Coeff, Perm)]) {
    terms.sort_by(|a, b| b.1.cmp(&a.1));
}

/// Merges adjacent equal permutations and drops zero coefficients.
/// Expects `terms` already sorted.
pub fn compress_terms(terms: Vec<(Coeff, Perm)>) -> Vec<(Coeff, Perm)> {
    let mut out: Vec<(Coeff, Perm)> = Vec::with_capacity(terms.len());
    for (c, p) in terms {
        match out.last_mut() {
            Some((acc, last)) if *last == p => *acc += c,
            _ => {
                if let Some((acc, _)) = out.last() {
                    if acc.is_zero() {
                        out.pop();
                    }
                }
                out.push((c, p));
            }
        }
    }
    if let Some((acc, _)) = out.last() {
        if acc.is_zero() {
            out.pop();
        }
    }
    out
}

impl GroupVector {
    pub fn zero(degree: usize) -> GroupVector {
        GroupVector {
            degree,
            terms: Vec::new(),
        }
    }

    /// The unit vector `e_p`.
    pub fn unit(p: Perm) -> GroupVector {
        GroupVector {
            degree: p.degree(),
            terms: alloc::vec![(Coeff::one(), p)],
        }
    }

    /// Builds a vector from arbitrary terms: sorts, merges duplicates and drops zeros.
    pub fn from_terms<I>(degree: usize, terms: I) -> Result<GroupVector, PermError>
    where
        I: IntoIterator<Item = (Coeff, Perm)>,
    {
        let mut raw: Vec<(Coeff, Perm)> = terms.into_iter().collect();
        if let Some((_, p)) = raw.iter().find(|(_, p)| p.degree() != degree) {
            return Err(PermError::DegreeMismatch {
                left: degree,
                right: p.degree(),
            });
        }
        sort_terms(&mut raw);
        Ok(GroupVector {
            degree,
            terms: compress_terms(raw),
        })
    }

    /// Same as [`from_terms`](Self::from_terms) for terms known to share `degree`.
    pub(crate) fn from_terms_unchecked(degree: usize, mut raw: Vec<(Coeff, Perm)>) -> GroupVector {
        sort_terms(&mut raw);
        GroupVector {
            degree,
            terms: compress_terms(raw),
        }
    }

    pub(crate) fn from_sorted_unchecked(degree: usize, terms: Vec<(Coeff, Perm)>) -> GroupVector {
        debug_assert!(terms.windows(2).all(|w| w[0].1 > w[1].1));
        debug_assert!(terms.iter().all(|(c, _)| !c.is_zero()));
        GroupVector { degree, terms }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &[(Coeff, Perm)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Coeff, Perm)> {
        self.terms
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Same as [`is_zero`](Self::is_zero).
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Perm) -> Option<&Coeff> {
        self.terms
            .binary_search_by(|(_, q)| p.cmp(q))
            .ok()
            .map(|i| &self.terms[i].0)
    }

    /// First term under the descending order; the pivot selector.
    pub fn leading(&self) -> Option<(&Coeff, &Perm)> {
        self.terms.first().map(|(c, p)| (c, p))
    }

    fn check(&self, other: &GroupVector) -> Result<(), PermError> {
        if self.degree != other.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupVector) -> Result<GroupVector, PermError> {
        self.check(other)?;
        Ok(self.add_scaled(&Coeff::one(), other))
    }

    pub fn sub(&self, other: &GroupVector) -> Result<GroupVector, PermError> {
        self.check(other)?;
        Ok(self.add_scaled(&-Coeff::one(), other))
    }

    pub fn neg(&self) -> GroupVector {
        self.scale(&-Coeff::one())
    }

    pub fn scale(&self, k: &Coeff) -> GroupVector {
        if k.is_zero() {
            return GroupVector::zero(self.degree);
        }
        GroupVector {
            degree: self.degree,
            terms: self.terms.iter().map(|(c, p)| (c * k, p.clone())).collect(),
        }
    }

    /// `self + k·other`, merging the two sorted term lists. Degrees must agree.
    pub(crate) fn add_scaled(&self, k: &Coeff, other: &GroupVector) -> GroupVector {
        debug_assert_eq!(self.degree, other.degree);
        if k.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].1.cmp(&b[j].1) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((&b[j].0 * k, b[j].1.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].0 + &b[j].0 * k;
                    if !c.is_zero() {
                        out.push((c, a[i].1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(c, p)| (c * k, p.clone())));
        GroupVector {
            degree: self.degree,
            terms: out,
        }
    }

    /// Least common multiple of the coefficient denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.terms
            .iter()
            .fold(BigInt::one(), |acc, (c, _)| acc.lcm(c.denom()))
    }

    /// Rescales to coprime integer coefficients with a positive leading
    /// coefficient. The zero vector is returned unchanged.
    pub fn renorm(&self) -> GroupVector {
        let Some((lead, _)) = self.leading() else {
            return self.clone();
        };
        let den = self.common_denominator();
        let gcd = self.terms.iter().fold(BigInt::zero(), |acc, (c, _)| {
            acc.gcd(&(c.numer() * (&den / c.denom())))
        });
        let mut factor = BigRational::new(den, gcd);
        if lead.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// `Σ c_i e_{p ∘ p_i}`.
    pub fn translate_left(&self, p: &Perm) -> Result<GroupVector, PermError> {
        if p.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: p.degree(),
                right: self.degree,
            });
        }
        Ok(self.translate_left_unchecked(p))
    }

    pub(crate) fn translate_left_unchecked(&self, p: &Perm) -> GroupVector {
        let mut terms: Vec<(Coeff, Perm)> = self
            .terms
            .iter()
            .map(|(c, q)| (c.clone(), p.compose_unchecked(q)))
            .collect();
        sort_terms(&mut terms);
        GroupVector {
            degree: self.degree,
            terms,
        }
    }

    /// `Σ c_i e_{p_i ∘ p}`.
    pub fn translate_right(&self, p: &Perm) -> Result<GroupVector, PermError> {
        if p.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.translate_right_unchecked(p))
    }

    pub(crate) fn translate_right_unchecked(&self, p: &Perm) -> GroupVector {
        let mut terms: Vec<(Coeff, Perm)> = self
            .terms
            .iter()
            .map(|(c, q)| (c.clone(), q.compose_unchecked(p)))
            .collect();
        sort_terms(&mut terms);
        GroupVector {
            degree: self.degree,
            terms,
        }
    }

    pub fn lift_right(&self, d: usize) -> GroupVector {
        // extension by fixed slots on the right preserves the order
        GroupVector {
            degree: self.degree + d,
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), p.extend_right(d)))
                .collect(),
        }
    }

    pub fn lift_left(&self, d: usize) -> GroupVector {
        GroupVector {
            degree: self.degree + d,
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), p.extend_left(d)))
                .collect(),
        }
    }
}
