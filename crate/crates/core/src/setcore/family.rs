use std::cmp::Ordering;
use std::fmt;

use super::subset::{check_ground, full_mask, Subset};
use crate::error::{Error, Result};

/// A duplicate-free family of subsets of a common ground set.
///
/// Stored as a bitset over all `2^ground_size` masks, so membership is a
/// single bit test and iteration yields members in numeric order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    ground: u8,
    words: Vec<u64>,
}

fn word_count(ground: usize) -> usize {
    (1usize << ground).div_ceil(64)
}

impl SetFamily {
    pub fn empty(ground: usize) -> Result<Self> {
        check_ground(ground)?;
        Ok(Self {
            ground: ground as u8,
            words: vec![0; word_count(ground)],
        })
    }

    pub fn from_subsets<I: IntoIterator<Item = Subset>>(ground: usize, sets: I) -> Result<Self> {
        let mut fam = Self::empty(ground)?;
        for s in sets {
            fam.try_insert(s)?;
        }
        Ok(fam)
    }

    /// Builds a family from raw masks.
    pub fn from_masks<I: IntoIterator<Item = u16>>(ground: usize, masks: I) -> Result<Self> {
        let mut fam = Self::empty(ground)?;
        for m in masks {
            fam.try_insert(Subset::new(ground, m)?)?;
        }
        Ok(fam)
    }

    /// Builds a family from point lists, the format used in fixtures and documents.
    pub fn from_point_lists<L: AsRef<[usize]>>(ground: usize, lists: &[L]) -> Result<Self> {
        let mut fam = Self::empty(ground)?;
        for l in lists {
            fam.try_insert(Subset::from_points(ground, l.as_ref())?)?;
        }
        Ok(fam)
    }

    /// All subsets of the ground set.
    pub fn power_set(ground: usize) -> Result<Self> {
        Self::from_subsets(ground, Subset::all(ground)?)
    }

    /// All nonempty subsets of the ground set.
    pub fn nonempty_subsets(ground: usize) -> Result<Self> {
        Self::from_subsets(ground, Subset::all(ground)?.filter(|s| !s.is_empty()))
    }

    #[inline]
    pub fn ground_size(&self) -> usize {
        self.ground as usize
    }

    pub fn try_insert(&mut self, s: Subset) -> Result<bool> {
        self.check_member(s)?;
        Ok(self.insert(s))
    }

    /// Inserts `s`, returning whether it was new. Panics in debug builds on ground mismatch.
    #[inline]
    pub fn insert(&mut self, s: Subset) -> bool {
        debug_assert_eq!(s.ground_size(), self.ground as usize);
        let b = s.bits() as usize;
        let (w, m) = (b / 64, 1u64 << (b % 64));
        let fresh = self.words[w] & m == 0;
        self.words[w] |= m;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, s: Subset) -> bool {
        let b = s.bits() as usize;
        let (w, m) = (b / 64, 1u64 << (b % 64));
        let had = self.words[w] & m != 0;
        self.words[w] &= !m;
        had
    }

    #[inline]
    pub fn contains(&self, s: Subset) -> bool {
        s.ground_size() == self.ground as usize && self.contains_mask(s.bits())
    }

    #[inline]
    pub fn contains_mask(&self, bits: u16) -> bool {
        let b = bits as usize;
        self.words
            .get(b / 64)
            .is_some_and(|w| w & (1u64 << (b % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in increasing numeric order of their masks.
    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        let ground = self.ground as usize;
        self.words.iter().enumerate().flat_map(move |(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(Subset::from_raw(ground, (wi * 64 + t) as u16))
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<Subset> {
        self.iter().collect()
    }

    pub fn to_point_lists(&self) -> Vec<Vec<usize>> {
        self.iter().map(Subset::to_points).collect()
    }

    pub fn check_member(&self, s: Subset) -> Result<()> {
        check_same(self.ground as usize, s.ground_size())
    }

    pub fn check_compatible(&self, other: &SetFamily) -> Result<()> {
        check_same(self.ground as usize, other.ground as usize)
    }

    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.ground == other.ground
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &SetFamily) -> Result<SetFamily> {
        self.check_compatible(other)?;
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        Ok(Self {
            ground: self.ground,
            words,
        })
    }

    pub fn intersection(&self, other: &SetFamily) -> Result<SetFamily> {
        self.check_compatible(other)?;
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        Ok(Self {
            ground: self.ground,
            words,
        })
    }

    pub fn filter(&self, mut keep: impl FnMut(Subset) -> bool) -> SetFamily {
        let mut out = Self {
            ground: self.ground,
            words: vec![0; self.words.len()],
        };
        for s in self.iter().filter(|&s| keep(s)) {
            out.insert(s);
        }
        out
    }

    pub fn map(&self, f: impl Fn(Subset) -> Subset) -> SetFamily {
        let mut out = Self {
            ground: self.ground,
            words: vec![0; self.words.len()],
        };
        for s in self.iter() {
            out.insert(f(s));
        }
        out
    }

    /// Union of all members (empty set for an empty family).
    pub fn union_of_members(&self) -> Subset {
        let ground = self.ground as usize;
        Subset::from_raw(ground, self.iter().fold(0, |acc, s| acc | s.bits()))
    }

    /// Intersection of all members (full set for an empty family).
    pub fn intersection_of_members(&self) -> Subset {
        let ground = self.ground as usize;
        Subset::from_raw(
            ground,
            self.iter().fold(full_mask(ground), |acc, s| acc & s.bits()),
        )
    }

    /// Whether the members cover the ground set.
    pub fn covers(&self) -> bool {
        self.union_of_members().is_full()
    }

    pub fn smallest(&self) -> Option<Subset> {
        self.iter().next()
    }
}

pub(crate) fn check_same(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::GroundMismatch { left, right })
    }
}

impl Ord for SetFamily {
    /// Lexicographic on the member sequence, ground size first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.ground
            .cmp(&other.ground)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for SetFamily {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", s)?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_and_dedup() {
        let f = SetFamily::from_masks(3, [0b110, 0b001, 0b110, 0b000]).unwrap();
        assert_eq!(f.len(), 3);
        let bits: Vec<u16> = f.iter().map(Subset::bits).collect();
        assert_eq!(bits, vec![0b000, 0b001, 0b110]);
    }

    #[test]
    fn mismatch_is_an_error() {
        let mut f = SetFamily::empty(3).unwrap();
        assert!(f.try_insert(Subset::full(2).unwrap()).is_err());
        let g = SetFamily::empty(2).unwrap();
        assert!(f.union(&g).is_err());
    }

    #[test]
    fn large_ground_iterates() {
        let f = SetFamily::from_masks(16, [u16::MAX, 0, 1 << 15]).unwrap();
        assert_eq!(
            f.iter().map(Subset::bits).collect::<Vec<_>>(),
            vec![0, 1 << 15, u16::MAX]
        );
        assert_eq!(SetFamily::power_set(4).unwrap().len(), 16);
        assert_eq!(SetFamily::nonempty_subsets(3).unwrap().len(), 7);
    }
}
