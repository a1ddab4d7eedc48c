use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// One entry of a header's index list.
///
/// Dummy indices carry an internal number: the pair `(2k-1, 2k)` is one
/// contraction. The name the user wrote is kept for printing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum IndexName {
    Free(String),
    Dummy { id: u32, original: String },
}

impl IndexName {
    pub fn free(name: impl Into<String>) -> IndexName {
        IndexName::Free(name.into())
    }

    pub fn is_dummy(&self) -> bool {
        matches!(self, IndexName::Dummy { .. })
    }

    /// The name as the user wrote it.
    pub fn original(&self) -> &str {
        match self {
            IndexName::Free(s) => s,
            IndexName::Dummy { original, .. } => original,
        }
    }

    pub fn dummy_id(&self) -> Option<u32> {
        match self {
            IndexName::Dummy { id, .. } => Some(*id),
            IndexName::Free(_) => None,
        }
    }
}

impl fmt::Display for IndexName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexName::Free(s) => f.write_str(s),
            IndexName::Dummy { id, original } => write!(f, "{original}_{id}"),
        }
    }
}

/// Hands out internal dummy numbers in pairs `(2k-1, 2k)`.
#[derive(Clone, Debug)]
pub struct DummyCounter {
    next: u32,
}

impl Default for DummyCounter {
    fn default() -> Self {
        DummyCounter { next: 1 }
    }
}

impl DummyCounter {
    pub fn new() -> DummyCounter {
        DummyCounter::default()
    }

    /// Starts numbering at the pair containing `first`.
    pub fn starting_at(first: u32) -> DummyCounter {
        DummyCounter {
            next: first.max(1) | 1,
        }
    }

    pub fn next_pair(&mut self) -> (u32, u32) {
        let a = self.next;
        self.next += 2;
        (a, a + 1)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Factor {
    pub name: String,
    pub arity: usize,
}

/// Factor names (sorted) and the index list that every term permutes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TensorHeader {
    factors: Vec<Factor>,
    indices: Vec<IndexName>,
}

impl TensorHeader {
    /// Caller guarantees sorted factors whose arities sum to `indices.len()`.
    pub(crate) fn new_unchecked(factors: Vec<Factor>, indices: Vec<IndexName>) -> TensorHeader {
        debug_assert!(factors.windows(2).all(|w| w[0].name <= w[1].name));
        debug_assert_eq!(factors.iter().map(|f| f.arity).sum::<usize>(), indices.len());
        TensorHeader { factors, indices }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn indices(&self) -> &[IndexName] {
        &self.indices
    }

    pub fn degree(&self) -> usize {
        self.indices.len()
    }

    /// `(offset, factor)` for each factor's slot block; offsets are 0-based.
    pub fn blocks(&self) -> impl Iterator<Item = (usize, &Factor)> {
        self.factors.iter().scan(0usize, |offset, f| {
            let start = *offset;
            *offset += f.arity;
            Some((start, f))
        })
    }

    /// Free names, sorted.
    pub fn free_names(&self) -> Vec<&str> {
        let mut names: Vec<&str> = self
            .indices
            .iter()
            .filter_map(|i| match i {
                IndexName::Free(s) => Some(s.as_str()),
                IndexName::Dummy { .. } => None,
            })
            .collect();
        names.sort_unstable();
        names
    }

    /// 0-based positions `(first, second)` of each dummy pair, ordered by
    /// internal number.
    pub fn dummy_pairs(&self) -> Vec<(usize, usize)> {
        let mut members: Vec<(u32, usize)> = self
            .indices
            .iter()
            .enumerate()
            .filter_map(|(pos, i)| i.dummy_id().map(|id| (id, pos)))
            .collect();
        members.sort_unstable();
        members
            .chunks(2)
            .filter(|c| c.len() == 2)
            .map(|c| (c[0].1, c[1].1))
            .collect()
    }

    pub fn dummy_ids(&self) -> Vec<u32> {
        let mut ids: Vec<u32> = self.indices.iter().filter_map(IndexName::dummy_id).collect();
        ids.sort_unstable();
        ids
    }

    pub fn has_dummies(&self) -> bool {
        self.indices.iter().any(IndexName::is_dummy)
    }

    /// Factor list rendered as `a*b*c`, for messages.
    pub fn factor_signature(&self) -> String {
        let mut s = String::new();
        for (i, f) in self.factors.iter().enumerate() {
            if i > 0 {
                s.push('*');
            }
            s.push_str(&f.name);
        }
        s
    }

    pub(crate) fn indices_mut(&mut self) -> &mut Vec<IndexName> {
        &mut self.indices
    }
}
