//! Permutations of `{0..n-1}` in image-array form.
//!
//! Mappings act on the left: `(a ∘ b)(x) = a(b(x))`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A bijection on `{0..n-1}`, stored as `images[i] = image of i`.
///
/// Points are `u16` internally; degrees beyond a few dozen are outside
/// the scope of this crate anyway.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u16>,
}

/// Rejected image arrays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermError {
    /// An image is `>= n` or occurs twice.
    NotABijection { index: usize },
    /// Degree larger than the supported point type.
    DegreeTooLarge { degree: usize },
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::NotABijection { index } => {
                write!(f, "image array is not a bijection (at index {index})")
            }
            PermError::DegreeTooLarge { degree } => {
                write!(f, "degree {degree} exceeds the supported maximum")
            }
        }
    }
}

impl core::error::Error for PermError {}

impl Permutation {
    /// Validates an image array as a permutation.
    pub fn from_images(images: Vec<u16>) -> Result<Self, PermError> {
        let n = images.len();
        if n > u16::MAX as usize {
            return Err(PermError::DegreeTooLarge { degree: n });
        }
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            if (x as usize) >= n || seen[x as usize] {
                return Err(PermError::NotABijection { index: i });
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Identity permutation on `n` points.
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u16).collect(),
        }
    }

    /// Degree `n` of the underlying point set.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// Raw image array.
    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// Composition `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    /// Inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    /// Conjugate `self ∘ other ∘ self⁻¹`.
    pub fn conjugate(&self, other: &Permutation) -> Permutation {
        self.compose(other).compose(&self.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u16 == x)
    }

    /// Smallest point moved by this permutation, if any.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u16 != x)
            .map(|(i, _)| i)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}
