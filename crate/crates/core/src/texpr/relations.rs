//! Generators of the relation subspace of an expression header.
//!
//! Relations on slots (declared symmetries and identities, lifted factor
//! bases, exchange of identical factors) hold for any assignment of index
//! names, so their closure is taken by left translation over `S_n`.
//! Renaming dummies acts on names, and its closure is a right translation:
//! `e_{m∘π} − e_π` for every `π`.

use alloc::vec::Vec;
use core::ops::Range;

use crate::galg::{coeff, GroupVector};
use crate::kbasis::KBasis;
use crate::perm::Perm;
use crate::texpr::header::TensorHeader;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    /// `{π ∘ g : π ∈ S_n}`
    Left,
    /// `{g ∘ π : π ∈ S_n}`
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Restriction {
    None,
    /// `g = e_s − e_1` for an involution `s`: translates by `π` and by the
    /// mirrored `π` differ only in sign, so keep one of each couple.
    Involution(Perm),
    /// `g` is closed under renaming of the values in this 1-based range;
    /// one translate per coset suffices (images of the range increasing).
    StableValues(Range<usize>),
}

/// A generator vector together with the closure that turns it into relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    vector: GroupVector,
    closure: Closure,
    restriction: Restriction,
}

impl Generator {
    pub fn new(vector: GroupVector, closure: Closure) -> Generator {
        Generator {
            vector,
            closure,
            restriction: Restriction::None,
        }
    }

    /// `e_s − e_1` for an involution `s`.
    fn involution(s: Perm, closure: Closure) -> Generator {
        debug_assert!(s.compose_unchecked(&s).is_identity());
        let id = Perm::identity(s.degree()).expect("nonzero degree");
        let vector = GroupVector::from_terms_unchecked(
            s.degree(),
            alloc::vec![(coeff(1), s.clone()), (coeff(-1), id)],
        );
        Generator {
            vector,
            closure,
            restriction: Restriction::Involution(s),
        }
    }

    pub fn vector(&self) -> &GroupVector {
        &self.vector
    }

    pub fn closure(&self) -> Closure {
        self.closure
    }

    fn keeps(&self, pi: &Perm) -> bool {
        match &self.restriction {
            Restriction::None => true,
            Restriction::Involution(s) => {
                let mirrored = match self.closure {
                    Closure::Left => pi.compose_unchecked(s),
                    Closure::Right => s.compose_unchecked(pi),
                };
                mirrored > *pi
            }
            Restriction::StableValues(range) => {
                let images: Vec<usize> = range.clone().map(|v| pi.image(v)).collect();
                images.windows(2).all(|w| w[0] < w[1])
            }
        }
    }

    /// All translates of the generator (possibly fewer, when a smaller set
    /// spans the same subspace).
    pub fn expand(&self) -> impl Iterator<Item = GroupVector> + '_ {
        let n = self.vector.degree();
        Perm::all(n)
            .expect("nonzero degree")
            .filter(move |pi| self.keeps(pi))
            .map(move |pi| match self.closure {
                Closure::Left => self.vector.translate_left_unchecked(&pi),
                Closure::Right => self.vector.translate_right_unchecked(&pi),
            })
    }
}

/// Closure of a declared relation on a single tensor.
pub fn symmetry_generator(relation: GroupVector) -> Generator {
    Generator::new(relation, Closure::Left)
}

/// Lifted factor bases and identical-factor exchanges for `header`.
/// `k0` looks up the stored basis of a factor by name.
pub fn product_generators<F>(header: &TensorHeader, mut k0: F) -> Vec<Generator>
where
    F: FnMut(&str) -> Option<KBasis>,
{
    let n = header.degree();
    let blocks: Vec<(usize, &crate::texpr::header::Factor)> = header.blocks().collect();
    let mut out = Vec::new();
    for &(offset, factor) in &blocks {
        let Some(basis) = k0(&factor.name) else {
            continue;
        };
        for row in basis.rows() {
            let lifted = row.lift_right(n - offset - factor.arity).lift_left(offset);
            out.push(Generator {
                vector: lifted,
                closure: Closure::Left,
                restriction: Restriction::StableValues(offset + 1..offset + factor.arity + 1),
            });
        }
    }
    for (i, &(oa, fa)) in blocks.iter().enumerate() {
        for &(ob, fb) in &blocks[i + 1..] {
            if fa.name != fb.name {
                continue;
            }
            let mut images: Vec<usize> = (1..=n).collect();
            for k in 0..fa.arity {
                images.swap(oa + k, ob + k);
            }
            let swap = Perm::from_images(&images).expect("block swap is a bijection");
            out.push(Generator::involution(swap, Closure::Left));
        }
    }
    out
}

/// Renamings inside each dummy pair and between consecutive pairs.
pub fn dummy_generators(header: &TensorHeader) -> Vec<Generator> {
    let n = header.degree();
    let pairs = header.dummy_pairs();
    let mut out = Vec::new();
    for &(a, b) in &pairs {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a, b);
        out.push(Generator::involution(
            Perm::from_images(&images).expect("transposition"),
            Closure::Right,
        ));
    }
    for w in pairs.windows(2) {
        let ((a1, b1), (a2, b2)) = (w[0], w[1]);
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a1, a2);
        images.swap(b1, b2);
        out.push(Generator::involution(
            Perm::from_images(&images).expect("pair exchange"),
            Closure::Right,
        ));
    }
    out
}

/// Expanded product relations of `header`.
pub fn product_relations<F>(header: &TensorHeader, k0: F) -> Vec<GroupVector>
where
    F: FnMut(&str) -> Option<KBasis>,
{
    product_generators(header, k0)
        .iter()
        .flat_map(|g| g.expand().collect::<Vec<_>>())
        .collect()
}

/// Expanded dummy-renaming relations of `header`.
pub fn dummy_relations(header: &TensorHeader) -> Vec<GroupVector> {
    dummy_generators(header)
        .iter()
        .flat_map(|g| g.expand().collect::<Vec<_>>())
        .collect()
}
