//! Monomials in the odd (anticommuting) variables.

use std::fmt;

/// A product `θ_{i1} ⋯ θ_{ik}` with `i1 < ⋯ < ik`, stored as a bitset:
/// bit `i` stands for the `(i+1)`-st odd variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OddMask(pub u32);

/// Result of multiplying two odd monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OddProduct {
    Zero,
    /// `sign` is `+1` or `-1`.
    Signed {
        sign: i8,
        mask: OddMask,
    },
}

impl OddMask {
    pub const EMPTY: OddMask = OddMask(0);

    /// Builds a mask from 1-based indices; returns `None` on a repeat or a
    /// zero index.
    pub fn from_indices(indices: &[usize]) -> Option<OddMask> {
        let mut bits = 0u32;
        for &i in indices {
            if i == 0 || i > 32 || bits >> (i - 1) & 1 == 1 {
                return None;
            }
            bits |= 1 << (i - 1);
        }
        Some(OddMask(bits))
    }

    pub fn single(i: usize) -> OddMask {
        OddMask(1 << i)
    }

    /// 1-based indices in ascending order.
    pub fn indices(self) -> Vec<usize> {
        (0..32)
            .filter(|i| self.0 >> i & 1 == 1)
            .map(|i| i + 1)
            .collect()
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_odd(self) -> bool {
        self.len() % 2 == 1
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Product `self · other` with the sign of the sorting permutation.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: OddMask) -> OddProduct {
        if self.0 & other.0 != 0 {
            return OddProduct::Zero;
        }
        // each bit j of `other` passes every bit of `self` above j
        let mut inversions = 0u32;
        let mut b = other.0;
        while b != 0 {
            let j = b.trailing_zeros();
            inversions += (self.0 >> j).count_ones();
            b &= b - 1;
        }
        OddProduct::Signed {
            sign: if inversions.is_multiple_of(2) { 1 } else { -1 },
            mask: OddMask(self.0 | other.0),
        }
    }

    /// All masks over `d` odd variables, in ascending bit-pattern order.
    pub fn all(d: usize) -> impl Iterator<Item = OddMask> {
        (0..1u32 << d).map(OddMask)
    }
}

impl fmt::Display for OddMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.indices().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mask(ix: &[usize]) -> OddMask {
        OddMask::from_indices(ix).unwrap()
    }

    #[test]
    fn odd_mul_examples() {
        assert_eq!(
            mask(&[1]).mul(mask(&[2])),
            OddProduct::Signed {
                sign: 1,
                mask: mask(&[1, 2])
            }
        );
        assert_eq!(
            mask(&[2]).mul(mask(&[1])),
            OddProduct::Signed {
                sign: -1,
                mask: mask(&[1, 2])
            }
        );
        assert_eq!(mask(&[1]).mul(mask(&[1])), OddProduct::Zero);
    }

    // Sign by explicit bubble sort of the concatenated index list.
    fn brute(a: &[usize], b: &[usize]) -> OddProduct {
        let mut v: Vec<usize> = a.iter().chain(b).copied().collect();
        let mut swaps = 0;
        for i in 0..v.len() {
            for j in 0..v.len() - 1 - i {
                if v[j] == v[j + 1] {
                    return OddProduct::Zero;
                }
                if v[j] > v[j + 1] {
                    v.swap(j, j + 1);
                    swaps += 1;
                }
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return OddProduct::Zero;
        }
        OddProduct::Signed {
            sign: if swaps % 2 == 0 { 1 } else { -1 },
            mask: OddMask::from_indices(&v).unwrap(),
        }
    }

    #[test]
    fn odd_mul_matches_bubble_sort() {
        for a in OddMask::all(5) {
            for b in OddMask::all(5) {
                assert_eq!(a.mul(b), brute(&a.indices(), &b.indices()), "{a} {b}");
            }
        }
    }
}
