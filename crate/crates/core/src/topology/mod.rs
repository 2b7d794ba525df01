//! Finite topological spaces.
//!
//! A finite topology is determined by the minimal open neighbourhood `N(x)` of
//! each point. Every space keeps these neighbourhoods alongside the open
//! family; point-separation and closure queries are answered from them.

mod enumerate;
mod map;
mod weight;

pub use enumerate::{
    enumerate_topologies, enumerate_topologies_direct, MAX_DIRECT_POINTS, MAX_PREORDER_POINTS,
};
pub use map::SpaceMap;
pub use weight::{weight, weight_witness, WEIGHT_CAP};

use std::fmt;

use crate::error::{Error, Result};
use crate::setcore::{check_ground, check_same, full_mask, SetFamily, Subset};

/// A topology on `{0, .., ground_size - 1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteTopology {
    opens: SetFamily,
    nbhd: Vec<u16>,
}

/// A subspace re-indexed over `0..|A|`, with the order-preserving map back to
/// the parent's points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub topology: FiniteTopology,
    pub points: Vec<usize>,
}

impl Subspace {
    /// Parent-space subset corresponding to a subset of the subspace.
    pub fn lift(&self, s: Subset, parent_ground: usize) -> Subset {
        let bits = s.points().fold(0u16, |acc, i| acc | (1 << self.points[i]));
        Subset::from_raw(parent_ground, bits)
    }

    /// Subspace subset corresponding to the trace of a parent subset.
    pub fn restrict(&self, s: Subset) -> Subset {
        let bits = self
            .points
            .iter()
            .enumerate()
            .filter(|&(_, &p)| s.contains(p))
            .fold(0u16, |acc, (i, _)| acc | (1 << i));
        Subset::from_raw(self.points.len(), bits)
    }
}

/// Open sets of the Alexandrov topology with the given minimal neighbourhoods.
fn alexandrov(ground: usize, nbhd: &[u16]) -> SetFamily {
    let mut opens = SetFamily::empty(ground).expect("ground checked by caller");
    for mask in 0..=full_mask(ground) as u32 {
        let u = mask as u16;
        let mut rest = u;
        let mut ok = true;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if nbhd[x] & !u != 0 {
                ok = false;
                break;
            }
        }
        if ok {
            opens.insert(Subset::from_raw(ground, u));
        }
    }
    opens
}

/// `N(x) = ⋂{s ∈ F : x ∈ s}`, starting from the full set.
fn neighbourhoods_of(ground: usize, family: &SetFamily) -> Vec<u16> {
    let mut nbhd = vec![full_mask(ground); ground];
    for s in family.iter() {
        for x in s.points() {
            nbhd[x] &= s.bits();
        }
    }
    nbhd
}

impl FiniteTopology {
    /// Validates `opens` as a topology.
    pub fn new(opens: SetFamily) -> Result<Self> {
        let ground = opens.ground_size();
        if !opens.contains_mask(0) {
            return Err(Error::NotATopology("missing the empty set".into()));
        }
        if !opens.contains_mask(full_mask(ground)) {
            return Err(Error::NotATopology("missing the whole space".into()));
        }
        let nbhd = neighbourhoods_of(ground, &opens);
        // every member of `opens` is an up-set for `nbhd`, so equality with the
        // Alexandrov family is exactly closure under unions and intersections
        let closed = alexandrov(ground, &nbhd);
        if closed != opens {
            let missing = closed
                .iter()
                .find(|s| !opens.contains(*s))
                .expect("families differ");
            return Err(Error::NotATopology(format!(
                "union/intersection {missing} missing"
            )));
        }
        Ok(Self { opens, nbhd })
    }

    pub(crate) fn from_nbhd(ground: usize, nbhd: Vec<u16>) -> Self {
        let opens = alexandrov(ground, &nbhd);
        Self { opens, nbhd }
    }

    pub fn discrete(ground: usize) -> Result<Self> {
        check_ground(ground)?;
        Ok(Self::from_nbhd(
            ground,
            (0..ground).map(|x| 1u16 << x).collect(),
        ))
    }

    pub fn indiscrete(ground: usize) -> Result<Self> {
        check_ground(ground)?;
        Ok(Self::from_nbhd(ground, vec![full_mask(ground); ground]))
    }

    /// Coarsest topology containing `subbase`; the whole space and `∅` are adjoined.
    pub fn from_subbase(ground: usize, subbase: &SetFamily) -> Result<Self> {
        check_ground(ground)?;
        check_same(ground, subbase.ground_size())?;
        Ok(Self::from_nbhd(ground, neighbourhoods_of(ground, subbase)))
    }

    /// Topology whose opens are the unions of members of `base`.
    ///
    /// `base` must cover the space and refine pairwise intersections.
    pub fn from_base(ground: usize, base: &SetFamily) -> Result<Self> {
        check_ground(ground)?;
        check_same(ground, base.ground_size())?;
        let cover = base.union_of_members();
        if !cover.is_full() {
            let x = cover.complement().points().next().expect("not full");
            return Err(Error::InvalidBase(format!("point {x} is not covered")));
        }
        let nbhd = neighbourhoods_of(ground, base);
        for (x, &n) in nbhd.iter().enumerate() {
            if !base.contains_mask(n) {
                return Err(Error::InvalidBase(format!(
                    "no member contains {x} inside the intersection {}",
                    Subset::from_raw(ground, n)
                )));
            }
        }
        Ok(Self::from_nbhd(ground, nbhd))
    }

    #[inline]
    pub fn ground_size(&self) -> usize {
        self.opens.ground_size()
    }

    pub fn opens(&self) -> &SetFamily {
        &self.opens
    }

    pub fn whole(&self) -> Subset {
        Subset::from_raw(self.ground_size(), full_mask(self.ground_size()))
    }

    pub fn is_open(&self, s: Subset) -> bool {
        self.opens.contains(s)
    }

    /// Smallest open set containing `x`.
    pub fn neighbourhood(&self, x: usize) -> Subset {
        Subset::from_raw(self.ground_size(), self.nbhd[x])
    }

    /// Smallest open set containing `a`.
    pub fn open_hull(&self, a: Subset) -> Subset {
        let bits = a.points().fold(0u16, |acc, x| acc | self.nbhd[x]);
        Subset::from_raw(self.ground_size(), bits)
    }

    /// Re-check of the invariants; always true for values built through the API.
    pub fn is_valid(&self) -> bool {
        FiniteTopology::new(self.opens.clone()).is_ok()
    }

    fn check(&self, a: Subset) -> Result<()> {
        check_same(self.ground_size(), a.ground_size())
    }

    pub fn closure_of(&self, a: Subset) -> Result<Subset> {
        self.check(a)?;
        Ok(self.closure(a))
    }

    /// `x ∈ cl A` iff `N(x)` meets `A`.
    pub(crate) fn closure(&self, a: Subset) -> Subset {
        let bits = (0..self.ground_size())
            .filter(|&x| self.nbhd[x] & a.bits() != 0)
            .fold(0u16, |acc, x| acc | (1 << x));
        Subset::from_raw(self.ground_size(), bits)
    }

    pub fn is_closed(&self, a: Subset) -> bool {
        self.opens.contains(a.complement())
    }

    /// Nonempty closed sets.
    pub fn closed_family(&self) -> SetFamily {
        let mut out = SetFamily::empty(self.ground_size()).expect("valid ground");
        for u in self.opens.iter() {
            let c = u.complement();
            if !c.is_empty() {
                out.insert(c);
            }
        }
        out
    }

    pub fn is_dense(&self, d: Subset) -> Result<bool> {
        Ok(self.closure_of(d)?.is_full())
    }

    pub fn is_t0(&self) -> bool {
        let n = self.ground_size();
        (0..n).all(|x| {
            (x + 1..n).all(|y| !(self.nbhd[x] & (1 << y) != 0 && self.nbhd[y] & (1 << x) != 0))
        })
    }

    pub fn is_t1(&self) -> bool {
        (0..self.ground_size()).all(|x| self.nbhd[x] == 1 << x)
    }

    pub fn is_t2(&self) -> bool {
        let n = self.ground_size();
        (0..n).all(|x| (x + 1..n).all(|y| self.nbhd[x] & self.nbhd[y] == 0))
    }

    /// Points and closed sets not containing them have disjoint neighbourhoods.
    pub fn is_regular(&self) -> bool {
        self.closed_family().iter().all(|f| {
            let hull = self.open_hull(f).bits();
            f.complement().points().all(|x| self.nbhd[x] & hull == 0)
        })
    }

    pub fn is_t3(&self) -> bool {
        self.is_regular() && self.is_t1()
    }

    /// Every open cover has a subcover with at most one member per point.
    pub fn is_compact(&self) -> bool {
        let cover: Vec<Subset> = self.opens.iter().filter(|s| !s.is_empty()).collect();
        subcover(self.whole(), &cover).is_some()
    }

    /// Whether `base ⊆ opens` and every open set is the union of the members of `base` it contains.
    pub fn is_base(&self, base: &SetFamily) -> bool {
        base.ground_size() == self.ground_size()
            && base.is_subfamily_of(&self.opens)
            && self.nbhd.iter().all(|&n| base.contains_mask(n))
    }

    /// Whether `subbase ⊆ opens` and generates exactly this topology.
    pub fn is_subbase(&self, subbase: &SetFamily) -> bool {
        subbase.ground_size() == self.ground_size()
            && subbase.is_subfamily_of(&self.opens)
            && neighbourhoods_of(self.ground_size(), subbase) == self.nbhd
    }

    /// Whether every open set of `self` is open in `other`.
    pub fn is_coarser_than(&self, other: &FiniteTopology) -> bool {
        self.opens.is_subfamily_of(&other.opens)
    }

    /// Least upper bound in the lattice of topologies.
    pub fn join(&self, other: &FiniteTopology) -> Result<FiniteTopology> {
        check_same(self.ground_size(), other.ground_size())?;
        let nbhd = self
            .nbhd
            .iter()
            .zip(&other.nbhd)
            .map(|(a, b)| a & b)
            .collect();
        Ok(Self::from_nbhd(self.ground_size(), nbhd))
    }

    /// `P`-regularity: for `x ∈ U ∈ P` there are `V, W ∈ P` with `x ∈ V ⊆ X∖W ⊆ U`.
    pub fn is_p_regular(&self, p: &SetFamily) -> Result<bool> {
        if !self.is_subbase(p) {
            return Err(Error::NotASubbase);
        }
        let members = p.to_vec();
        Ok(members.iter().all(|&u| {
            u.points().all(|x| {
                members.iter().any(|&w| {
                    let outside = w.complement();
                    outside.is_subset_of(u)
                        && members
                            .iter()
                            .any(|&v| v.contains(x) && v.is_subset_of(outside))
                })
            })
        }))
    }

    /// `X^n` with the product topology; tuples are indexed row-major.
    pub fn product(&self, n: usize) -> Result<FiniteTopology> {
        if n < 1 {
            return Err(Error::InvalidParameter("product power must be >= 1".into()));
        }
        let g = self.ground_size();
        let points = (g as u64)
            .checked_pow(n as u32)
            .filter(|&p| p <= crate::setcore::MAX_GROUND as u64);
        let Some(points) = points else {
            return Err(Error::TooLarge(format!(
                "{g}^{n} points exceeds {}",
                crate::setcore::MAX_GROUND
            )));
        };
        let points = points as usize;
        // N(x_1..x_n) = N(x_1) × .. × N(x_n)
        let nbhd = (0..points)
            .map(|t| {
                let coords = tuple_of(t, g, n);
                (0..points)
                    .filter(|&s| {
                        tuple_of(s, g, n)
                            .iter()
                            .zip(&coords)
                            .all(|(&y, &x)| self.nbhd[x] & (1 << y) != 0)
                    })
                    .fold(0u16, |acc, s| acc | (1 << s))
            })
            .collect();
        Ok(Self::from_nbhd(points, nbhd))
    }

    /// Traces of the opens on `a`, re-indexed over `|a|` points.
    pub fn subspace(&self, a: Subset) -> Result<Subspace> {
        self.check(a)?;
        if a.is_empty() {
            return Err(Error::EmptySubset);
        }
        let points = a.to_points();
        let proto = Subspace {
            topology: FiniteTopology::indiscrete(points.len())?,
            points,
        };
        let nbhd = proto
            .points
            .iter()
            .map(|&x| proto.restrict(self.neighbourhood(x)).bits())
            .collect();
        Ok(Subspace {
            topology: Self::from_nbhd(proto.points.len(), nbhd),
            ..proto
        })
    }
}

/// Coordinates of a row-major tuple index.
pub fn tuple_of(index: usize, ground: usize, n: usize) -> Vec<usize> {
    let mut coords = vec![0; n];
    let mut rest = index;
    for c in coords.iter_mut().rev() {
        *c = rest % ground;
        rest /= ground;
    }
    coords
}

/// Picks one member per point of `target`; `None` if `cover` misses a point.
pub fn subcover(target: Subset, cover: &[Subset]) -> Option<Vec<Subset>> {
    let mut chosen: Vec<Subset> = Vec::new();
    for x in target.points() {
        if chosen.iter().any(|c| c.contains(x)) {
            continue;
        }
        chosen.push(*cover.iter().find(|c| c.contains(x))?);
    }
    Some(chosen)
}

/// `from_subbase`.
pub fn from_subbase(ground: usize, subbase: &SetFamily) -> Result<FiniteTopology> {
    FiniteTopology::from_subbase(ground, subbase)
}

/// `from_base`.
pub fn from_base(ground: usize, base: &SetFamily) -> Result<FiniteTopology> {
    FiniteTopology::from_base(ground, base)
}

pub fn is_base_for(base: &SetFamily, t: &FiniteTopology) -> Result<bool> {
    check_same(base.ground_size(), t.ground_size())?;
    Ok(t.is_base(base))
}

pub fn is_subbase_for(subbase: &SetFamily, t: &FiniteTopology) -> Result<bool> {
    check_same(subbase.ground_size(), t.ground_size())?;
    Ok(t.is_subbase(subbase))
}

impl fmt::Debug for FiniteTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteTopology({} points, {})",
            self.ground_size(),
            self.opens
        )
    }
}
