//! Hyperspaces `(M, O)`: a family `M` of nonempty subsets of a finite set `X`
//! together with a topology `O` on `M`.
//!
//! The topology on `M` is stored re-indexed over `0..|M|`, where index `i`
//! is the `i`-th member of `M` in canonical order. A subfamily of `M` is
//! therefore a [`Subset`] of the index set, and every topology operation
//! applies to hypertopologies unchanged.

mod derive;

pub use derive::{Classification, DerivedFamilies, MAX_DERIVE_GROUND};

use crate::error::{Error, Result};
use crate::setcore::{check_same, fin_n, SetFamily, Subset, MAX_GROUND};
use crate::topology::{FiniteTopology, SpaceMap};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HyperSpace {
    ground: usize,
    base: Option<FiniteTopology>,
    family: SetFamily,
    members: Vec<Subset>,
    topo: FiniteTopology,
}

pub fn is_natural_family(m: &SetFamily) -> bool {
    (0..m.ground_size()).all(|x| m.contains_mask(1 << x))
}

fn check_family(m: &SetFamily) -> Result<Vec<Subset>> {
    if m.contains_mask(0) {
        return Err(Error::EmptyMember);
    }
    let members = m.to_vec();
    if members.is_empty() {
        return Err(Error::InvalidParameter("hyperspace family is empty".into()));
    }
    if members.len() > MAX_GROUND {
        return Err(Error::TooLarge(format!(
            "hyperspace family has {} members, at most {MAX_GROUND} are supported",
            members.len()
        )));
    }
    Ok(members)
}

impl HyperSpace {
    /// Hyperspace with an explicitly given topology on the index set of `family`.
    pub fn new(family: SetFamily, topo: FiniteTopology) -> Result<Self> {
        let members = check_family(&family)?;
        check_same(members.len(), topo.ground_size())?;
        Ok(Self {
            ground: family.ground_size(),
            base: None,
            family,
            members,
            topo,
        })
    }

    /// Hyperspace whose topology is generated by subfamilies of `family`.
    pub fn from_subbase(family: SetFamily, subbase: &[SetFamily]) -> Result<Self> {
        let members = check_family(&family)?;
        let mut proto = Self {
            ground: family.ground_size(),
            base: None,
            family,
            topo: FiniteTopology::indiscrete(members.len())?,
            members,
        };
        let idx = proto.index_family(subbase.iter())?;
        proto.topo = FiniteTopology::from_subbase(proto.members.len(), &idx)?;
        Ok(proto)
    }

    fn generated(t: &FiniteTopology, m: &SetFamily, plus: bool, minus: bool) -> Result<Self> {
        check_same(t.ground_size(), m.ground_size())?;
        let members = check_family(m)?;
        let mut h = Self {
            ground: m.ground_size(),
            base: Some(t.clone()),
            family: m.clone(),
            topo: FiniteTopology::indiscrete(members.len())?,
            members,
        };
        let mut sub = SetFamily::empty(h.members.len())?;
        for u in t.opens().iter() {
            if plus {
                sub.insert(h.plus_index(u));
            }
            if minus {
                sub.insert(h.minus_index(u));
            }
        }
        h.topo = if plus && !minus {
            FiniteTopology::from_base(h.members.len(), &sub)?
        } else {
            FiniteTopology::from_subbase(h.members.len(), &sub)?
        };
        Ok(h)
    }

    /// Topology on `M` with base `{U⁺_M : U open}`.
    pub fn upper_vietoris(t: &FiniteTopology, m: &SetFamily) -> Result<Self> {
        Self::generated(t, m, true, false)
    }

    /// Topology on `M` with subbase `{U⁻_M : U open}`.
    pub fn lower_vietoris(t: &FiniteTopology, m: &SetFamily) -> Result<Self> {
        Self::generated(t, m, false, true)
    }

    /// Topology on `M` with subbase `{U⁺_M} ∪ {U⁻_M}`.
    pub fn vietoris(t: &FiniteTopology, m: &SetFamily) -> Result<Self> {
        Self::generated(t, m, true, true)
    }

    /// Same family and base, different topology on the index set.
    pub fn with_topology(&self, topo: FiniteTopology) -> Result<Self> {
        check_same(self.members.len(), topo.ground_size())?;
        Ok(Self {
            topo,
            ..self.clone()
        })
    }

    pub fn with_base(mut self, base: Option<FiniteTopology>) -> Self {
        self.base = base;
        self
    }

    /// Size of the underlying set `X`.
    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn base(&self) -> Option<&FiniteTopology> {
        self.base.as_ref()
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    /// Members of `M`; position `i` is point `i` of [`Self::topology`].
    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn topology(&self) -> &FiniteTopology {
        &self.topo
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, s: Subset) -> Option<usize> {
        self.members.binary_search(&s).ok()
    }

    fn index_set(&self, pred: impl Fn(Subset) -> bool) -> Subset {
        let bits = self
            .members
            .iter()
            .enumerate()
            .filter(|&(_, &s)| pred(s))
            .fold(0u16, |acc, (i, _)| acc | (1 << i));
        Subset::from_raw(self.members.len(), bits)
    }

    /// `A⁺_M` as a subset of the index set.
    pub fn plus_index(&self, a: Subset) -> Subset {
        self.index_set(|s| s.is_subset_of(a))
    }

    /// `A⁻_M` as a subset of the index set.
    pub fn minus_index(&self, a: Subset) -> Subset {
        self.index_set(|s| s.intersects(a))
    }

    /// Index-set form of a subfamily of `M`.
    pub fn index_of_family(&self, sub: &SetFamily) -> Result<Subset> {
        check_same(self.ground, sub.ground_size())?;
        if !sub.is_subfamily_of(&self.family) {
            return Err(Error::NotASubfamily);
        }
        Ok(self.index_set(|s| sub.contains(s)))
    }

    fn index_family<'a>(&self, subs: impl Iterator<Item = &'a SetFamily>) -> Result<SetFamily> {
        let mut out = SetFamily::empty(self.members.len())?;
        for s in subs {
            out.insert(self.index_of_family(s)?);
        }
        Ok(out)
    }

    /// Subfamily of `M` named by an index subset.
    pub fn decode(&self, idx: Subset) -> SetFamily {
        SetFamily::from_subsets(self.ground, idx.points().map(|i| self.members[i]))
            .expect("members share the ground")
    }

    /// Open sets of `O` as subfamilies of `M`, in canonical order of the index masks.
    pub fn open_families(&self) -> Vec<SetFamily> {
        self.topo.opens().iter().map(|o| self.decode(o)).collect()
    }

    /// Whether the subfamily `sub` of `M` is `O`-open.
    pub fn is_open_family(&self, sub: &SetFamily) -> Result<bool> {
        Ok(self.topo.is_open(self.index_of_family(sub)?))
    }

    /// `{A⁺_M : A ∈ F}` as an index family.
    pub fn lift_plus_index(&self, f: &SetFamily) -> SetFamily {
        let mut out = SetFamily::empty(self.members.len()).expect("checked size");
        for a in f.iter() {
            out.insert(self.plus_index(a));
        }
        out
    }

    /// `{A⁻_M : A ∈ F}` as an index family.
    pub fn lift_minus_index(&self, f: &SetFamily) -> SetFamily {
        let mut out = SetFamily::empty(self.members.len()).expect("checked size");
        for a in f.iter() {
            out.insert(self.minus_index(a));
        }
        out
    }

    /// Subspace `(N, O|N)`.
    pub fn restrict(&self, n: &SetFamily) -> Result<Self> {
        let idx = self.index_of_family(n)?;
        let sub = self.topo.subspace(idx)?;
        Ok(Self {
            ground: self.ground,
            base: self.base.clone(),
            family: n.clone(),
            members: sub.points.iter().map(|&i| self.members[i]).collect(),
            topo: sub.topology,
        })
    }

    /// Supremum of two topologies on the same family.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if self.family != other.family {
            return Err(Error::HyperMismatch);
        }
        if let (Some(a), Some(b)) = (&self.base, &other.base) {
            if a != b {
                return Err(Error::HyperMismatch);
            }
        }
        Ok(Self {
            topo: self.topo.join(&other.topo)?,
            base: self.base.clone().or_else(|| other.base.clone()),
            ..self.clone()
        })
    }

    /// `J_n(X)`: members with at most `n` points.
    pub fn j_family(&self, n: usize) -> SetFamily {
        self.family.filter(|s| s.len() <= n)
    }

    /// `j_n : X^n → J_n(X)`, `(x_1, .., x_n) ↦ {x_1, .., x_n}`, with the
    /// product of `t` on the domain and the subspace topology on `J_n(X)`.
    pub fn j_map(&self, t: &FiniteTopology, n: usize) -> Result<SpaceMap> {
        check_same(t.ground_size(), self.ground)?;
        let fin = fin_n(self.ground, n)?;
        if !fin.is_subfamily_of(&self.family) {
            return Err(Error::Precondition(format!(
                "Fin_{n}(X) is not contained in M"
            )));
        }
        let domain = t.product(n)?;
        let target = self.restrict(&self.j_family(n))?;
        let graph = (0..domain.ground_size())
            .map(|p| {
                let coords = crate::topology::tuple_of(p, self.ground, n);
                let s = Subset::from_points(self.ground, &coords).expect("coords in range");
                target.index_of(s).expect("Fin_n is inside M")
            })
            .collect();
        SpaceMap::new(domain, target.topo, graph)
    }
}

/// `j_n` for the hyperspace `h` over the family `m`.
pub fn j_map(t: &FiniteTopology, m: &SetFamily, n: usize, h: &HyperSpace) -> Result<SpaceMap> {
    if h.family() != m {
        return Err(Error::HyperMismatch);
    }
    h.j_map(t, n)
}
