use serde::{Deserialize, Serialize};
use std::fmt;

/// A subset of `{0, .., 31}` stored as a bitmask. Bit `i` is simple index `i`.
#[derive(
    Copy, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct SubsetMask(pub u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 32);
        if n == 32 {
            SubsetMask(u32::MAX)
        } else {
            SubsetMask((1u32 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        SubsetMask(1 << i)
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        SubsetMask(indices.iter().fold(0, |m, &i| m | (1 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersect(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & other.0)
    }

    pub fn minus(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !other.0)
    }

    pub fn complement_in(self, universe: SubsetMask) -> SubsetMask {
        SubsetMask(universe.0 & !self.0)
    }

    pub fn with(self, i: usize) -> SubsetMask {
        SubsetMask(self.0 | (1 << i))
    }

    /// Indices of the set, ascending.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let i = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(i)
            }
        })
    }

    /// All subsets of `self`, in ascending mask order.
    pub fn subsets(self) -> impl Iterator<Item = SubsetMask> {
        let universe = self.0;
        let mut next: Option<u32> = Some(0);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == universe {
                None
            } else {
                Some((cur | !universe).wrapping_add(1) & universe)
            };
            Some(SubsetMask(cur))
        })
    }

    /// Position of submask `self` among subsets of `universe`, compressing the
    /// bits of `universe` to the low positions. Inverse of [`expand_in`].
    ///
    /// [`expand_in`]: SubsetMask::expand_in
    pub fn compress_in(self, universe: SubsetMask) -> usize {
        debug_assert!(self.is_subset_of(universe));
        let mut out = 0usize;
        for (pos, i) in universe.iter().enumerate() {
            if self.contains(i) {
                out |= 1 << pos;
            }
        }
        out
    }

    /// Expand a compressed index back into a submask of `universe`.
    pub fn expand_in(index: usize, universe: SubsetMask) -> SubsetMask {
        let mut out = SubsetMask::EMPTY;
        for (pos, i) in universe.iter().enumerate() {
            if index & (1 << pos) != 0 {
                out = out.with(i);
            }
        }
        out
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
