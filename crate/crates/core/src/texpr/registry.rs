use alloc::borrow::{Cow, ToOwned};
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::TensorError;
use crate::galg::{Coeff, GroupVector};
use crate::kbasis::KBasis;
use crate::perm::PackedPerm;
use crate::texpr::expr::TensorExpr;
use crate::texpr::header::{Factor, IndexName, TensorHeader};
use crate::texpr::relations::{product_generators, symmetry_generator};
use crate::texpr::Warning;

/// Output and storage switches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Switches {
    /// Print dummy indices with their internal numbers.
    pub dummypri: bool,
    /// Print the shortest form seen while sieving instead of the canonical one.
    pub shortest: bool,
    /// Keep stored bases with packed permutations.
    pub packed: bool,
}

impl Default for Switches {
    fn default() -> Self {
        Switches {
            dummypri: false,
            shortest: false,
            packed: true,
        }
    }
}

/// A stored basis, either as-is or with its permutations packed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StoredBasis {
    Plain(KBasis),
    Packed {
        degree: usize,
        rows: Vec<Vec<(Coeff, PackedPerm)>>,
    },
}

impl StoredBasis {
    pub fn store(basis: KBasis, packed: bool) -> StoredBasis {
        if !packed || basis.degree() > crate::perm::MAX_PACKED_DEGREE {
            return StoredBasis::Plain(basis);
        }
        let rows = basis
            .rows()
            .map(|row| {
                row.terms()
                    .iter()
                    .map(|(c, p)| (c.clone(), p.pack().expect("degree checked above")))
                    .collect()
            })
            .collect();
        StoredBasis::Packed {
            degree: basis.degree(),
            rows,
        }
    }

    pub fn load(&self) -> Cow<'_, KBasis> {
        match self {
            StoredBasis::Plain(b) => Cow::Borrowed(b),
            StoredBasis::Packed { degree, rows } => {
                let rows = rows
                    .iter()
                    .map(|row| {
                        let terms = row
                            .iter()
                            .map(|(c, p)| (c.clone(), p.unpack().expect("stored packed values are valid")))
                            .collect();
                        GroupVector::from_sorted_unchecked(*degree, terms)
                    })
                    .collect();
                Cow::Owned(KBasis::from_rows_unchecked(*degree, rows))
            }
        }
    }

    pub fn is_packed(&self) -> bool {
        matches!(self, StoredBasis::Packed { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicTensor {
    name: String,
    arity: Option<usize>,
    k0: Option<StoredBasis>,
    display: Option<Vec<String>>,
}

impl BasicTensor {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Fixed on first use.
    pub fn arity(&self) -> Option<usize> {
        self.arity
    }

    pub fn k0(&self) -> Option<Cow<'_, KBasis>> {
        self.k0.as_ref().map(StoredBasis::load)
    }

    pub fn stored(&self) -> Option<&StoredBasis> {
        self.k0.as_ref()
    }

    /// Index names used to print the stored basis.
    pub fn display_indices(&self) -> Vec<String> {
        if let Some(d) = &self.display {
            return d.clone();
        }
        default_names(self.arity.unwrap_or(0))
    }
}

fn default_names(n: usize) -> Vec<String> {
    const LETTERS: &[&str] = &["i", "j", "k", "l", "m", "n", "p", "q", "r", "s", "t", "u"];
    (0..n)
        .map(|k| match LETTERS.get(k) {
            Some(s) => (*s).to_owned(),
            None => alloc::format!("i{}", k + 1),
        })
        .collect()
}

/// Declared basic tensors with their stored bases, plus global switches.
///
/// Only per-tensor bases are stored; bases for products and dummies are
/// rebuilt by every [`simplify`](Registry::simplify) call.
#[derive(Clone, Debug)]
pub struct Registry {
    tensors: BTreeMap<String, BasicTensor>,
    switches: Switches,
    max_degree: usize,
}

impl Default for Registry {
    fn default() -> Self {
        Registry {
            tensors: BTreeMap::new(),
            switches: Switches::default(),
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

/// Largest expression degree simplified by default.
pub const DEFAULT_MAX_DEGREE: usize = 8;

impl Registry {
    pub fn new() -> Registry {
        Registry::default()
    }

    pub fn switches(&self) -> Switches {
        self.switches
    }

    pub fn set_dummypri(&mut self, on: bool) {
        self.switches.dummypri = on;
    }

    pub fn set_shortest(&mut self, on: bool) {
        self.switches.shortest = on;
    }

    /// Re-stores every basis in the requested form.
    pub fn set_packed(&mut self, on: bool) {
        self.switches.packed = on;
        for t in self.tensors.values_mut() {
            if let Some(stored) = t.k0.take() {
                t.k0 = Some(StoredBasis::store(stored.load().into_owned(), on));
            }
        }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn set_max_degree(&mut self, n: usize) {
        self.max_degree = n;
    }

    pub(crate) fn check_degree(&self, degree: usize) -> Result<(), TensorError> {
        if degree > self.max_degree {
            return Err(TensorError::DegreeLimit {
                degree,
                limit: self.max_degree,
            });
        }
        Ok(())
    }

    pub fn declare(&mut self, name: &str) -> Option<Warning> {
        if self.tensors.contains_key(name) {
            return Some(Warning::AlreadyDeclared(name.to_owned()));
        }
        self.tensors.insert(
            name.to_owned(),
            BasicTensor {
                name: name.to_owned(),
                arity: None,
                k0: None,
                display: None,
            },
        );
        None
    }

    /// Removes a tensor and its stored basis.
    pub fn undeclare(&mut self, name: &str) -> Option<Warning> {
        match self.tensors.remove(name) {
            Some(_) => None,
            None => Some(Warning::NotATensor(name.to_owned())),
        }
    }

    pub fn is_tensor(&self, name: &str) -> bool {
        self.tensors.contains_key(name)
    }

    pub fn tensor(&self, name: &str) -> Option<&BasicTensor> {
        self.tensors.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.tensors.keys().map(String::as_str)
    }

    /// Checks a use of `name` with `arity` indices, fixing the arity on first use.
    pub fn use_tensor(&mut self, name: &str, arity: usize) -> Result<(), TensorError> {
        let t = self
            .tensors
            .get_mut(name)
            .ok_or_else(|| TensorError::NotATensor(name.to_owned()))?;
        if arity == 0 {
            return Err(TensorError::NoIndices(name.to_owned()));
        }
        match t.arity {
            Some(expected) if expected != arity => Err(TensorError::ArityMismatch {
                name: name.to_owned(),
                expected,
                found: arity,
            }),
            Some(_) => Ok(()),
            None => {
                t.arity = Some(arity);
                Ok(())
            }
        }
    }

    pub fn k0(&self, name: &str) -> Option<Cow<'_, KBasis>> {
        self.tensors.get(name).and_then(BasicTensor::k0)
    }

    /// Adds a relation `Σ c_i t(…) = 0` for one tensor: every renaming of
    /// its indices is sieved into the tensor's basis. Returns the new dimension.
    pub fn declare_symmetry(&mut self, relation: &TensorExpr) -> Result<usize, TensorError> {
        let header = relation.header();
        let [factor] = header.factors() else {
            return Err(TensorError::RelationNotSingleFactor);
        };
        if header.has_dummies() {
            return Err(TensorError::RelationHasDummies(factor.name.clone()));
        }
        self.use_tensor(&factor.name, factor.arity)?;
        let packed = self.switches.packed;
        let t = self.tensors.get_mut(&factor.name).expect("checked by use_tensor");
        let mut basis = match &t.k0 {
            Some(stored) => stored.load().into_owned(),
            None => KBasis::new(factor.arity),
        };
        if !relation.is_zero() {
            for v in symmetry_generator(relation.vec().clone()).expand() {
                basis.absorb(&v)?;
            }
        }
        if t.display.is_none() {
            t.display = Some(header.indices().iter().map(|i| i.original().to_owned()).collect());
        }
        let dim = basis.dim();
        t.k0 = Some(StoredBasis::store(basis, packed));
        Ok(dim)
    }

    /// Header used to print the basis of a product of declared tensors:
    /// factors in canonical order, each with its display names.
    pub fn display_header(&self, names: &[&str]) -> Result<TensorHeader, TensorError> {
        let mut tensors: Vec<&BasicTensor> = Vec::with_capacity(names.len());
        for name in names {
            let t = self
                .tensors
                .get(*name)
                .ok_or_else(|| TensorError::NotATensor((*name).to_owned()))?;
            if t.arity.is_none() {
                return Err(TensorError::NoIndices((*name).to_owned()));
            }
            tensors.push(t);
        }
        tensors.sort_by(|a, b| a.name.cmp(&b.name));
        let factors = tensors
            .iter()
            .map(|t| Factor {
                name: t.name.clone(),
                arity: t.arity.unwrap_or_default(),
            })
            .collect();
        let indices = tensors
            .iter()
            .flat_map(|t| t.display_indices().into_iter().map(IndexName::Free))
            .collect();
        Ok(TensorHeader::new_unchecked(factors, indices))
    }

    /// The basis for a header built from stored bases and factor exchanges
    /// only (no dummy renamings).
    pub fn product_basis(&self, header: &TensorHeader) -> Result<KBasis, TensorError> {
        self.check_degree(header.degree())?;
        let mut basis = KBasis::new(header.degree());
        for g in product_generators(header, |name| self.k0(name).map(Cow::into_owned)) {
            for v in g.expand() {
                basis.absorb(&v)?;
            }
        }
        Ok(basis)
    }
}
