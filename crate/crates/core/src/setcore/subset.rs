use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_GROUND: usize = 16;

/// A subset of the ground set `{0, .., ground_size - 1}` stored as a bit mask.
///
/// Bit `i` is set iff point `i` is a member. Two subsets are equal iff they
/// have the same ground size and the same mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    ground: u8,
    bits: u16,
}

pub(crate) fn full_mask(ground: usize) -> u16 {
    if ground >= 16 {
        u16::MAX
    } else {
        ((1u32 << ground) - 1) as u16
    }
}

pub(crate) fn check_ground(ground: usize) -> Result<()> {
    if (1..=MAX_GROUND).contains(&ground) {
        Ok(())
    } else {
        Err(Error::GroundSize(ground))
    }
}

impl Subset {
    pub fn new(ground: usize, bits: u16) -> Result<Self> {
        check_ground(ground)?;
        if bits & !full_mask(ground) != 0 {
            let point = 15 - (bits & !full_mask(ground)).leading_zeros() as usize;
            return Err(Error::PointOutOfRange { point, ground });
        }
        Ok(Self::from_raw(ground, bits))
    }

    /// Caller guarantees `ground` is in range and `bits` fits.
    pub(crate) fn from_raw(ground: usize, bits: u16) -> Self {
        debug_assert!((1..=MAX_GROUND).contains(&ground));
        debug_assert_eq!(bits & !full_mask(ground), 0);
        Self {
            ground: ground as u8,
            bits,
        }
    }

    pub fn from_points(ground: usize, points: &[usize]) -> Result<Self> {
        check_ground(ground)?;
        let mut bits = 0u16;
        for &p in points {
            if p >= ground {
                return Err(Error::PointOutOfRange { point: p, ground });
            }
            bits |= 1 << p;
        }
        Ok(Self::from_raw(ground, bits))
    }

    pub fn empty(ground: usize) -> Result<Self> {
        Self::new(ground, 0)
    }

    pub fn full(ground: usize) -> Result<Self> {
        check_ground(ground)?;
        Ok(Self::from_raw(ground, full_mask(ground)))
    }

    pub fn singleton(ground: usize, point: usize) -> Result<Self> {
        Self::from_points(ground, &[point])
    }

    #[inline]
    pub fn ground_size(self) -> usize {
        self.ground as usize
    }

    #[inline]
    pub fn bits(self) -> u16 {
        self.bits
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(self) -> bool {
        self.bits == full_mask(self.ground as usize)
    }

    #[inline]
    pub fn contains(self, point: usize) -> bool {
        point < self.ground as usize && self.bits & (1 << point) != 0
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        debug_assert_eq!(self.ground, other.ground);
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn intersects(self, other: Subset) -> bool {
        debug_assert_eq!(self.ground, other.ground);
        self.bits & other.bits != 0
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        debug_assert_eq!(self.ground, other.ground);
        Self {
            bits: self.bits | other.bits,
            ..self
        }
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        debug_assert_eq!(self.ground, other.ground);
        Self {
            bits: self.bits & other.bits,
            ..self
        }
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        debug_assert_eq!(self.ground, other.ground);
        Self {
            bits: self.bits & !other.bits,
            ..self
        }
    }

    #[inline]
    pub fn complement(self) -> Subset {
        Self {
            bits: !self.bits & full_mask(self.ground as usize),
            ..self
        }
    }

    pub fn with(self, point: usize) -> Subset {
        debug_assert!(point < self.ground as usize);
        Self {
            bits: self.bits | (1 << point),
            ..self
        }
    }

    /// Members in increasing order.
    pub fn points(self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let p = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(p)
            }
        })
    }

    pub fn to_points(self) -> Vec<usize> {
        self.points().collect()
    }

    /// Same members, reinterpreted over a different ground size.
    pub fn regrounded(self, ground: usize) -> Result<Subset> {
        Subset::new(ground, self.bits)
    }

    /// Every subset of a ground set, in numeric order.
    pub fn all(ground: usize) -> Result<impl Iterator<Item = Subset>> {
        check_ground(ground)?;
        Ok((0..=full_mask(ground) as u32).map(move |b| Subset::from_raw(ground, b as u16)))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
        }
        f.write_str("}")
    }
}
