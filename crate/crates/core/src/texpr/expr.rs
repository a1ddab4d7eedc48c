use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::TensorError;
use crate::galg::{Coeff, GroupVector};
use crate::perm::Perm;
use crate::texpr::header::{DummyCounter, Factor, IndexName, TensorHeader};
use crate::texpr::Warning;

/// One basic-tensor factor of a term, with the index names in its slots.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactorPart {
    pub name: String,
    pub indices: Vec<IndexName>,
}

/// A tensor expression: a header shared by all terms and a group-algebra
/// vector whose permutations arrange the header's index list.
///
/// The term for permutation `p` reads `indices[p[i]]` in slot `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorExpr {
    header: TensorHeader,
    vec: GroupVector,
}

impl TensorExpr {
    /// An expression over `header` with terms `vec`.
    pub fn new(header: TensorHeader, vec: GroupVector) -> Result<TensorExpr, TensorError> {
        if header.degree() != vec.degree() {
            return Err(crate::error::PermError::DegreeMismatch {
                left: header.degree(),
                right: vec.degree(),
            }
            .into());
        }
        Ok(TensorExpr { header, vec })
    }

    pub fn header(&self) -> &TensorHeader {
        &self.header
    }

    pub fn vec(&self) -> &GroupVector {
        &self.vec
    }

    pub fn degree(&self) -> usize {
        self.header.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.vec.is_zero()
    }

    /// Same header, different vector.
    pub fn with_vec(&self, vec: GroupVector) -> TensorExpr {
        assert_eq!(vec.degree(), self.degree(), "vector degree does not match header");
        TensorExpr {
            header: self.header.clone(),
            vec,
        }
    }

    /// A single basic tensor `name(indices…)` as written by the user.
    /// Repeated names pair up two at a time into dummies; an odd leftover
    /// occurrence stays free and is reported.
    pub fn atom<S: AsRef<str>>(
        name: &str,
        indices: &[S],
        counter: &mut DummyCounter,
    ) -> Result<(TensorExpr, Vec<Warning>), TensorError> {
        if indices.is_empty() {
            return Err(TensorError::NoIndices(name.to_owned()));
        }
        let mut warnings = Vec::new();
        let mut slots: Vec<IndexName> = indices.iter().map(|s| IndexName::free(s.as_ref())).collect();
        let mut occurrences: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
        for (pos, s) in indices.iter().enumerate() {
            occurrences.entry(s.as_ref()).or_default().push(pos);
        }
        let mut pairs: Vec<(usize, usize, &str)> = Vec::new();
        for (name, positions) in &occurrences {
            for chunk in positions.chunks(2) {
                if chunk.len() == 2 {
                    pairs.push((chunk[0], chunk[1], name));
                }
            }
            if positions.len() > 2 {
                warnings.push(Warning::RepeatedIndex((*name).to_owned()));
            }
        }
        pairs.sort_unstable();
        for (a, b, original) in pairs {
            let (ia, ib) = counter.next_pair();
            slots[a] = IndexName::Dummy {
                id: ia,
                original: original.to_owned(),
            };
            slots[b] = IndexName::Dummy {
                id: ib,
                original: original.to_owned(),
            };
        }
        let degree = slots.len();
        let header = TensorHeader::new_unchecked(
            alloc::vec![Factor {
                name: name.to_owned(),
                arity: degree,
            }],
            slots,
        );
        Ok((
            TensorExpr {
                header,
                vec: GroupVector::unit(Perm::identity(degree)?),
            },
            warnings,
        ))
    }

    /// Combines factor parts into one term in canonical (name-sorted) factor
    /// order. Index names are taken as given; no dummy detection happens here.
    pub fn fuse(mut parts: Vec<FactorPart>) -> Result<TensorExpr, TensorError> {
        parts.sort_by(|a, b| a.name.cmp(&b.name));
        for part in &parts {
            if part.indices.is_empty() {
                return Err(TensorError::NoIndices(part.name.clone()));
            }
        }
        let factors = parts
            .iter()
            .map(|p| Factor {
                name: p.name.clone(),
                arity: p.indices.len(),
            })
            .collect();
        let indices: Vec<IndexName> = parts.into_iter().flat_map(|p| p.indices).collect();
        let degree = indices.len();
        Ok(TensorExpr {
            header: TensorHeader::new_unchecked(factors, indices),
            vec: GroupVector::unit(Perm::identity(degree)?),
        })
    }

    /// The factors of the term with arrangement `p`.
    pub fn split(&self, p: &Perm) -> Vec<FactorPart> {
        let names = p
            .apply(self.header.indices())
            .expect("term permutation degree matches header");
        self.header
            .blocks()
            .map(|(offset, f)| FactorPart {
                name: f.name.clone(),
                indices: names[offset..offset + f.arity].to_vec(),
            })
            .collect()
    }

    /// Every term as `(coefficient, factors)`, in vector order.
    pub fn split_terms(&self) -> impl Iterator<Item = (&Coeff, Vec<FactorPart>)> + '_ {
        self.vec.terms().iter().map(move |(c, p)| (c, self.split(p)))
    }

    pub fn neg(&self) -> TensorExpr {
        self.with_vec(self.vec.neg())
    }

    pub fn scale(&self, k: &Coeff) -> TensorExpr {
        self.with_vec(self.vec.scale(k))
    }

    /// Sum expressed over `self`'s header. `other`'s free names are matched
    /// by name and its dummy pairs by internal order.
    pub fn add(&self, other: &TensorExpr) -> Result<TensorExpr, TensorError> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.header.factors() != other.header.factors() {
            return Err(TensorError::HeaderMismatch {
                left: self.header.factor_signature(),
                right: other.header.factor_signature(),
            });
        }
        let embed = other.embedding_into(&self.header)?;
        let moved = other.vec.translate_left_unchecked(&embed);
        Ok(self.with_vec(self.vec.add_scaled(&num_traits::One::one(), &moved)))
    }

    pub fn sub(&self, other: &TensorExpr) -> Result<TensorExpr, TensorError> {
        self.add(&other.neg())
    }

    /// Position map from this header's index list into `target`'s.
    fn embedding_into(&self, target: &TensorHeader) -> Result<Perm, TensorError> {
        let (ours, theirs) = (self.header.free_names(), target.free_names());
        if ours != theirs {
            return Err(TensorError::FreeIndexMismatch {
                left: join(&theirs),
                right: join(&ours),
            });
        }
        let (our_pairs, their_pairs) = (self.header.dummy_pairs(), target.dummy_pairs());
        if our_pairs.len() != their_pairs.len() {
            return Err(TensorError::DummyCountMismatch {
                left: their_pairs.len(),
                right: our_pairs.len(),
            });
        }
        let mut images = alloc::vec![0usize; self.degree()];
        for (pos, name) in self.header.indices().iter().enumerate() {
            if let IndexName::Free(s) = name {
                let found = target
                    .indices()
                    .iter()
                    .position(|t| matches!(t, IndexName::Free(x) if x == s))
                    .expect("free name sets agree");
                images[pos] = found + 1;
            }
        }
        for (&(a, b), &(ta, tb)) in our_pairs.iter().zip(their_pairs.iter()) {
            images[a] = ta + 1;
            images[b] = tb + 1;
        }
        Ok(Perm::from_images(&images)?)
    }

    /// Product with canonical factor order. Free names shared by both sides
    /// become new dummy pairs.
    pub fn mul(&self, other: &TensorExpr, counter: &mut DummyCounter) -> (TensorExpr, Vec<Warning>) {
        let mut warnings = Vec::new();
        let other = other.with_fresh_dummies(&self.header.dummy_ids(), counter);
        let (nu, nv) = (self.degree(), other.degree());
        let n = nu + nv;

        // block order after a stable sort by name; each block remembers its old offset
        let mut blocks: Vec<(usize, &Factor)> = self
            .header
            .blocks()
            .chain(other.header.blocks().map(|(o, f)| (o + nu, f)))
            .collect();
        blocks.sort_by(|a, b| a.1.name.cmp(&b.1.name));
        let mut old_slot = Vec::with_capacity(n);
        for (offset, f) in &blocks {
            old_slot.extend(offset + 1..=offset + f.arity);
        }
        let beta = Perm::from_images(&old_slot).expect("block reordering is a bijection");
        let beta_inv = beta.inverse();

        let old_indices: Vec<IndexName> = self
            .header
            .indices()
            .iter()
            .chain(other.header.indices())
            .cloned()
            .collect();
        let mut indices = beta.apply(&old_indices).expect("degrees agree");
        let factors: Vec<Factor> = blocks.iter().map(|(_, f)| (*f).clone()).collect();

        // contractions and repeated-name diagnostics
        let dummy_originals: BTreeSet<&str> = old_indices
            .iter()
            .filter(|i| i.is_dummy())
            .map(IndexName::original)
            .collect();
        let mut seen: BTreeMap<String, usize> = BTreeMap::new();
        let mut contractions: Vec<(usize, usize)> = Vec::new();
        for (pos, name) in indices.iter().enumerate() {
            if let IndexName::Free(s) = name {
                if let Some(first) = seen.remove(s) {
                    contractions.push((first, pos));
                } else {
                    seen.insert(s.clone(), pos);
                }
            }
        }
        let mut flagged = BTreeSet::new();
        for name in indices.iter() {
            if let IndexName::Free(s) = name {
                if dummy_originals.contains(s.as_str()) && flagged.insert(s.clone()) {
                    warnings.push(Warning::RepeatedIndex(s.clone()));
                }
            }
        }
        for (a, b) in contractions {
            let (ia, ib) = counter.next_pair();
            let original = indices[a].original().to_owned();
            indices[a] = IndexName::Dummy {
                id: ia,
                original: original.clone(),
            };
            indices[b] = IndexName::Dummy { id: ib, original };
        }

        let mut raw = Vec::with_capacity(self.vec.len() * other.vec.len());
        for (c, p) in self.vec.terms() {
            for (d, q) in other.vec.terms() {
                let joined = p.concat(q);
                raw.push((c * d, beta_inv.compose_unchecked(&joined).compose_unchecked(&beta)));
            }
        }
        let header = TensorHeader::new_unchecked(factors, indices);
        (
            TensorExpr {
                header,
                vec: GroupVector::from_terms_unchecked(n, raw),
            },
            warnings,
        )
    }

    /// Renumbers dummy pairs that collide with `taken`.
    fn with_fresh_dummies(&self, taken: &[u32], counter: &mut DummyCounter) -> TensorExpr {
        let ids = self.header.dummy_ids();
        if !ids.iter().any(|id| taken.binary_search(id).is_ok()) {
            return self.clone();
        }
        let mut renumber: BTreeMap<u32, u32> = BTreeMap::new();
        for pair in ids.chunks(2) {
            let (a, b) = counter.next_pair();
            renumber.insert(pair[0], a);
            if let Some(&second) = pair.get(1) {
                renumber.insert(second, b);
            }
        }
        let mut out = self.clone();
        for name in out.header.indices_mut() {
            if let IndexName::Dummy { id, .. } = name {
                *id = renumber[id];
            }
        }
        out
    }
}

fn join(names: &[&str]) -> String {
    let mut s = String::from("(");
    for (i, n) in names.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(n);
    }
    s.push(')');
    s
}
