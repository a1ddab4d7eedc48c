//! Permutations of `S_n` in unpacked (slot sequence) and packed (decimal) form.
//!
//! A [`Perm`] stores the 1-based images `p[1..=n]`. Composition is
//! `(p ∘ q)[i] = p[q[i]]`, so the right factor acts first, and the action on a
//! sequence selects: `apply(p, l)[i] = l[p[i]]`. Together these give
//! `apply(p ∘ q, l) = apply(q, apply(p, l))`.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::PermError;

/// Largest degree a [`Perm`] can hold.
pub const MAX_DEGREE: usize = u8::MAX as usize;

/// Largest degree with a packed decimal form.
pub const MAX_PACKED_DEGREE: usize = 99;

/// A bijection on the slots `1..=n`.
///
/// The derived ordering is lexicographic on the image sequence, which for a
/// fixed degree coincides with the numeric order of the packed form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    map: Box<[u8]>,
}

impl Perm {
    /// The unit element `(1 2 … n)`.
    pub fn identity(n: usize) -> Result<Perm, PermError> {
        if n == 0 {
            return Err(PermError::ZeroDegree);
        }
        if n > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(n));
        }
        Ok(Perm {
            map: (1..=n as u8).collect(),
        })
    }

    /// Builds a permutation from its 1-based image sequence.
    pub fn from_images(images: &[usize]) -> Result<Perm, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::ZeroDegree);
        }
        if n > MAX_DEGREE {
            return Err(PermError::DegreeTooLarge(n));
        }
        let mut seen = alloc::vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(PermError::NotBijection);
            }
            seen[v - 1] = true;
        }
        Ok(Perm {
            map: images.iter().map(|&v| v as u8).collect(),
        })
    }

    fn from_raw(map: Vec<u8>) -> Perm {
        debug_assert!(!map.is_empty());
        Perm {
            map: map.into_boxed_slice(),
        }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    /// Image of slot `i` (1-based).
    pub fn image(&self, i: usize) -> usize {
        self.map[i - 1] as usize
    }

    /// The image sequence, 1-based.
    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.map.iter().map(|&v| v as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    fn check_degree(&self, other: &Perm) -> Result<(), PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// `self ∘ q`, with `q` applied first.
    pub fn multiply(&self, q: &Perm) -> Result<Perm, PermError> {
        self.check_degree(q)?;
        Ok(self.compose_unchecked(q))
    }

    pub(crate) fn compose_unchecked(&self, q: &Perm) -> Perm {
        Perm::from_raw(q.map.iter().map(|&j| self.map[j as usize - 1]).collect())
    }

    /// The `x` with `x ∘ self = 1`.
    pub fn inverse(&self) -> Perm {
        let mut inv = alloc::vec![0u8; self.degree()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Perm::from_raw(inv)
    }

    /// The `x` with `target = x ∘ self`.
    pub fn divide(&self, target: &Perm) -> Result<Perm, PermError> {
        self.check_degree(target)?;
        Ok(target.compose_unchecked(&self.inverse()))
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i8 {
        let n = self.degree();
        let mut visited = alloc::vec![false; n];
        let mut cycles = 0usize;
        for start in 0..n {
            if visited[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.map[i] as usize - 1;
            }
        }
        if (n - cycles).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Selects from `l`: `result[i] = l[self[i]]`.
    pub fn apply<T: Clone>(&self, l: &[T]) -> Result<Vec<T>, PermError> {
        if l.len() != self.degree() {
            return Err(PermError::LengthMismatch {
                degree: self.degree(),
                len: l.len(),
            });
        }
        Ok(self.map.iter().map(|&j| l[j as usize - 1].clone()).collect())
    }

    /// Extends to `S_{n+d}`, fixing the `d` new slots on the right.
    pub fn extend_right(&self, d: usize) -> Perm {
        let n = self.degree();
        assert!(n + d <= MAX_DEGREE, "permutation degree {} exceeds {MAX_DEGREE}", n + d);
        let mut map = Vec::with_capacity(n + d);
        map.extend_from_slice(&self.map);
        map.extend((n + 1..=n + d).map(|v| v as u8));
        Perm::from_raw(map)
    }

    /// Extends to `S_{n+d}`, fixing `d` new slots on the left and shifting
    /// the old images by `d`.
    pub fn extend_left(&self, d: usize) -> Perm {
        let n = self.degree();
        assert!(n + d <= MAX_DEGREE, "permutation degree {} exceeds {MAX_DEGREE}", n + d);
        let mut map = Vec::with_capacity(n + d);
        map.extend((1..=d).map(|v| v as u8));
        map.extend(self.map.iter().map(|&v| v + d as u8));
        Perm::from_raw(map)
    }

    /// Block-diagonal sum: `self` on the first slots, `other` shifted after it.
    pub fn concat(&self, other: &Perm) -> Perm {
        let n1 = self.degree();
        assert!(
            n1 + other.degree() <= MAX_DEGREE,
            "permutation degree {} exceeds {MAX_DEGREE}",
            n1 + other.degree()
        );
        let mut map = Vec::with_capacity(n1 + other.degree());
        map.extend_from_slice(&self.map);
        map.extend(other.map.iter().map(|&v| v + n1 as u8));
        Perm::from_raw(map)
    }

    pub fn pack(&self) -> Result<PackedPerm, PermError> {
        PackedPerm::pack(self)
    }

    /// All of `S_n` in ascending lexicographic order.
    pub fn all(n: usize) -> Result<AllPerms, PermError> {
        let first = Perm::identity(n)?;
        Ok(AllPerms {
            next: Some(first.map.into_vec()),
        })
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.map.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// Lexicographic enumeration of `S_n` (Knuth's algorithm L).
pub struct AllPerms {
    next: Option<Vec<u8>>,
}

impl Iterator for AllPerms {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        let current = self.next.take()?;
        let mut a = current.clone();
        let n = a.len();
        // rightmost ascent
        let mut j = n.wrapping_sub(2);
        while j < n && a[j] >= a[j + 1] {
            j = j.wrapping_sub(1);
        }
        if j < n {
            let mut l = n - 1;
            while a[j] >= a[l] {
                l -= 1;
            }
            a.swap(j, l);
            a[j + 1..].reverse();
            self.next = Some(a);
        }
        Some(Perm::from_raw(current))
    }
}

/// Decimal packing `d1 d2 … dn` of a permutation, one digit per slot up to
/// degree 9 and two digits per slot up to degree 99.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PackedPerm {
    degree: u8,
    value: BigUint,
}

impl PackedPerm {
    fn width(degree: usize) -> usize {
        if degree <= 9 {
            1
        } else {
            2
        }
    }

    pub fn pack(p: &Perm) -> Result<PackedPerm, PermError> {
        let n = p.degree();
        if n > MAX_PACKED_DEGREE {
            return Err(PermError::PackDegree(n));
        }
        let base: u32 = if Self::width(n) == 1 { 10 } else { 100 };
        let mut value = BigUint::zero();
        for v in p.images() {
            value = value * base + BigUint::from(v);
        }
        Ok(PackedPerm {
            degree: n as u8,
            value,
        })
    }

    pub fn unpack(&self) -> Result<Perm, PermError> {
        let n = self.degree as usize;
        let width = Self::width(n);
        let digits: String = self.value.to_str_radix(10);
        if digits.len() > n * width {
            return Err(PermError::InvalidPacked);
        }
        let pad = n * width - digits.len();
        let bytes: Vec<u8> = core::iter::repeat_n(b'0', pad)
            .chain(digits.bytes())
            .collect();
        let images: Vec<usize> = bytes
            .chunks(width)
            .map(|c| c.iter().fold(0usize, |acc, &b| acc * 10 + (b - b'0') as usize))
            .collect();
        Perm::from_images(&images).map_err(|_| PermError::InvalidPacked)
    }

    pub fn from_parts(value: BigUint, degree: usize) -> Result<PackedPerm, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        if degree > MAX_PACKED_DEGREE {
            return Err(PermError::PackDegree(degree));
        }
        let packed = PackedPerm {
            degree: degree as u8,
            value,
        };
        packed.unpack()?;
        Ok(packed)
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn degree(&self) -> usize {
        self.degree as usize
    }
}
