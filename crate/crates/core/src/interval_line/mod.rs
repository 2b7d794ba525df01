//! Exact interval arithmetic on the extended line, enough to check the
//! real-line counterexamples at witness level.

mod witness;

pub use witness::{
    notpreg_witness, novietoris_points, novietoris_sample_suite, novietoris_witness,
    p_regular_pair, SampleSuite,
};

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A point of `ℝ̄ = ℝ ∪ {-∞, +∞}` over the scalar `T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ext<T> {
    NegInf,
    Finite(T),
    PosInf,
}

impl<T> Ext<T> {
    pub fn is_finite(&self) -> bool {
        matches!(self, Ext::Finite(_))
    }

    pub fn finite(&self) -> Option<&T> {
        match self {
            Ext::Finite(v) => Some(v),
            _ => None,
        }
    }
}

impl<T> From<T> for Ext<T> {
    fn from(v: T) -> Self {
        Ext::Finite(v)
    }
}

impl<T: fmt::Display> fmt::Display for Ext<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::NegInf => write!(f, "-inf"),
            Ext::Finite(v) => write!(f, "{v}"),
            Ext::PosInf => write!(f, "+inf"),
        }
    }
}

/// A nonempty interval of reals. Infinite ends are always open.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval<T> {
    lo: Ext<T>,
    lo_closed: bool,
    hi: Ext<T>,
    hi_closed: bool,
}

impl<T: Clone + Ord> Interval<T> {
    pub fn new(lo: Ext<T>, lo_closed: bool, hi: Ext<T>, hi_closed: bool) -> Result<Self> {
        if (lo_closed && !lo.is_finite()) || (hi_closed && !hi.is_finite()) {
            return Err(Error::InvalidParameter(
                "infinite endpoints must be open".into(),
            ));
        }
        if lo == Ext::PosInf || hi == Ext::NegInf {
            return Err(Error::InvalidParameter("interval is empty".into()));
        }
        match lo.cmp(&hi) {
            Ordering::Less => {}
            Ordering::Equal if lo_closed && hi_closed => {}
            _ => return Err(Error::InvalidParameter("interval is empty".into())),
        }
        Ok(Self {
            lo,
            lo_closed,
            hi,
            hi_closed,
        })
    }

    /// `(lo, hi)`
    pub fn open(lo: Ext<T>, hi: Ext<T>) -> Result<Self> {
        Self::new(lo, false, hi, false)
    }

    /// `[lo, hi]`
    pub fn closed(lo: T, hi: T) -> Result<Self> {
        Self::new(Ext::Finite(lo), true, Ext::Finite(hi), true)
    }

    pub fn point(v: T) -> Self {
        Self::closed(v.clone(), v).expect("degenerate closed interval is valid")
    }

    /// `(-∞, +∞)`
    pub fn whole() -> Self {
        Self::open(Ext::NegInf, Ext::PosInf).expect("the line is a valid interval")
    }

    pub fn lo(&self) -> &Ext<T> {
        &self.lo
    }

    pub fn hi(&self) -> &Ext<T> {
        &self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    pub fn is_open(&self) -> bool {
        !self.lo_closed && !self.hi_closed
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn contains(&self, q: &Ext<T>) -> bool {
        if !q.is_finite() {
            return false;
        }
        let above = match q.cmp(&self.lo) {
            Ordering::Greater => true,
            Ordering::Equal => self.lo_closed,
            Ordering::Less => false,
        };
        let below = match q.cmp(&self.hi) {
            Ordering::Less => true,
            Ordering::Equal => self.hi_closed,
            Ordering::Greater => false,
        };
        above && below
    }

    pub fn intersection(&self, other: &Self) -> Option<Self> {
        let (lo, lo_closed) = match cmp_lo(self, other) {
            Ordering::Less => (other.lo.clone(), other.lo_closed),
            _ => (self.lo.clone(), self.lo_closed),
        };
        let (hi, hi_closed) = match cmp_hi(self, other) {
            Ordering::Greater => (other.hi.clone(), other.hi_closed),
            _ => (self.hi.clone(), self.hi_closed),
        };
        Self::new(lo, lo_closed, hi, hi_closed).ok()
    }

    /// Same interval with every finite end closed.
    pub fn closure(&self) -> Self {
        Self {
            lo_closed: self.lo.is_finite(),
            hi_closed: self.hi.is_finite(),
            ..self.clone()
        }
    }
}

// at equal values a closed lower end starts earlier
fn cmp_lo<T: Ord>(a: &Interval<T>, b: &Interval<T>) -> Ordering {
    a.lo.cmp(&b.lo).then(b.lo_closed.cmp(&a.lo_closed))
}

// at equal values an open upper end stops earlier
fn cmp_hi<T: Ord>(a: &Interval<T>, b: &Interval<T>) -> Ordering {
    a.hi.cmp(&b.hi).then(a.hi_closed.cmp(&b.hi_closed))
}

/// `a` starts no later than `b`; true when their union is one interval.
fn touches<T: Ord>(a: &Interval<T>, b: &Interval<T>) -> bool {
    match a.hi.cmp(&b.lo) {
        Ordering::Greater => true,
        Ordering::Equal => a.hi_closed || b.lo_closed,
        Ordering::Less => false,
    }
}

impl<T: fmt::Display> fmt::Display for Interval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.lo_closed { '[' } else { '(' };
        let r = if self.hi_closed { ']' } else { ')' };
        write!(f, "{l}{},{}{r}", self.lo, self.hi)
    }
}

/// A finite union of intervals, kept sorted with pairwise disjoint,
/// non-adjacent components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalSet<T> {
    comps: Vec<Interval<T>>,
}

impl<T: Clone + Ord> IntervalSet<T> {
    pub fn new(mut comps: Vec<Interval<T>>) -> Self {
        comps.sort_by(cmp_lo);
        let mut out: Vec<Interval<T>> = Vec::with_capacity(comps.len());
        for c in comps {
            match out.last_mut() {
                Some(last) if touches(last, &c) => {
                    if cmp_hi(&c, last) == Ordering::Greater {
                        last.hi = c.hi;
                        last.hi_closed = c.hi_closed;
                    }
                }
                _ => out.push(c),
            }
        }
        Self { comps: out }
    }

    pub fn empty() -> Self {
        Self { comps: Vec::new() }
    }

    pub fn whole() -> Self {
        Interval::whole().into()
    }

    pub fn components(&self) -> &[Interval<T>] {
        &self.comps
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    /// The single component, when the set is one open interval.
    pub fn as_open_interval(&self) -> Option<&Interval<T>> {
        match self.comps.as_slice() {
            [c] if c.is_open() => Some(c),
            _ => None,
        }
    }

    pub fn contains(&self, q: &Ext<T>) -> bool {
        self.comps.iter().any(|c| c.contains(q))
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.comps.len() && j < other.comps.len() {
            let (a, b) = (&self.comps[i], &other.comps[j]);
            if let Some(c) = a.intersection(b) {
                out.push(c);
            }
            if cmp_hi(a, b) == Ordering::Less {
                i += 1;
            } else {
                j += 1;
            }
        }
        Self::new(out)
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::new(self.comps.iter().chain(&other.comps).cloned().collect())
    }

    /// `ℝ ∖ S`
    pub fn complement(&self) -> Self {
        let mut out = Vec::new();
        let mut lo = Ext::NegInf;
        let mut lo_closed = false;
        for c in &self.comps {
            if let Ok(gap) = Interval::new(lo, lo_closed, c.lo.clone(), !c.lo_closed) {
                out.push(gap);
            }
            lo = c.hi.clone();
            lo_closed = !c.hi_closed;
        }
        if let Ok(gap) = Interval::new(lo, lo_closed, Ext::PosInf, false) {
            out.push(gap);
        }
        Self { comps: out }
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.intersection(other).is_empty()
    }

    pub fn subset_of(&self, other: &Self) -> bool {
        self.intersection(&other.complement()).is_empty()
    }

    /// Closure in `ℝ`: every finite end closed.
    pub fn closure(&self) -> Self {
        Self::new(self.comps.iter().map(Interval::closure).collect())
    }

    /// Closed in `ℝ`.
    pub fn is_closed(&self) -> bool {
        self.closure() == *self
    }
}

impl<T: Clone + Ord> From<Interval<T>> for IntervalSet<T> {
    fn from(c: Interval<T>) -> Self {
        Self { comps: vec![c] }
    }
}

impl<T: fmt::Display> fmt::Display for IntervalSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "∅");
        }
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, "∪")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn closure_intervals<T: Clone + Ord>(s: &IntervalSet<T>) -> IntervalSet<T> {
    s.closure()
}

#[cfg(test)]
mod tests;
