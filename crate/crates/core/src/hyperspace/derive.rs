use super::HyperSpace;
use crate::error::{Error, Result};
use crate::setcore::{SetFamily, Subset};
use crate::topology::FiniteTopology;

/// `derive` visits all `2^|X|` subsets of `X`.
pub const MAX_DERIVE_GROUND: usize = 12;

/// Topologies on `X` induced by a hyperspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedFamilies {
    /// `B_O = {A ⊆ X : A⁺_M ∈ O}`
    pub b_family: SetFamily,
    /// `P_O = {A ⊆ X : A⁻_M ∈ O}`
    pub p_family: SetFamily,
    /// plus-topology, with base `B_O`
    pub t_plus: FiniteTopology,
    /// minus-topology, with subbase `P_O`
    pub t_minus: FiniteTopology,
    /// V-topology, with subbase `B_O ∪ P_O`
    pub t_v: FiniteTopology,
}

/// Every classification predicate of a hyperspace, computed in one pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub derived: DerivedFamilies,
    pub tychonoff_type: bool,
    pub lower_vietoris_type: bool,
    pub vietoris_type: bool,
    /// `None` when the topology is not Vietoris-type.
    pub strong_vietoris_type: Option<bool>,
}

impl HyperSpace {
    pub fn derive(&self) -> Result<DerivedFamilies> {
        let g = self.ground_size();
        if g > MAX_DERIVE_GROUND {
            return Err(Error::TooLarge(format!(
                "derive enumerates 2^{g} subsets; at most {MAX_DERIVE_GROUND} points are supported"
            )));
        }
        let mut b_family = SetFamily::empty(g)?;
        let mut p_family = SetFamily::empty(g)?;
        for a in Subset::all(g)? {
            if self.topo.is_open(self.plus_index(a)) {
                b_family.insert(a);
            }
            if self.topo.is_open(self.minus_index(a)) {
                p_family.insert(a);
            }
        }
        let t_plus = FiniteTopology::from_base(g, &b_family)?;
        let t_minus = FiniteTopology::from_subbase(g, &p_family)?;
        let t_v = FiniteTopology::from_subbase(g, &b_family.union(&p_family)?)?;
        Ok(DerivedFamilies {
            b_family,
            p_family,
            t_plus,
            t_minus,
            t_v,
        })
    }

    fn o_u_from(&self, d: &DerivedFamilies) -> Result<FiniteTopology> {
        FiniteTopology::from_base(self.len(), &self.lift_plus_index(&d.b_family))
    }

    fn o_l_from(&self, d: &DerivedFamilies) -> Result<FiniteTopology> {
        FiniteTopology::from_subbase(self.len(), &self.lift_minus_index(&d.p_family))
    }

    /// `O_u`: base `(B_O)⁺_M`.
    pub fn o_u(&self) -> Result<HyperSpace> {
        let d = self.derive()?;
        self.with_topology(self.o_u_from(&d)?)
    }

    /// `O_l`: subbase `(P_O)⁻_M`.
    pub fn o_l(&self) -> Result<HyperSpace> {
        let d = self.derive()?;
        self.with_topology(self.o_l_from(&d)?)
    }

    /// `O ∩ {A⁺_M : A ⊆ X}` is a base for `O`.
    pub fn is_tychonoff_type(&self) -> Result<bool> {
        let g = self.ground_size();
        let mut fam = SetFamily::empty(self.len())?;
        for a in Subset::all(g)? {
            let p = self.plus_index(a);
            if self.topo.is_open(p) {
                fam.insert(p);
            }
        }
        Ok(self.topo.is_base(&fam))
    }

    /// `O ∩ {A⁻_M : A ⊆ X}` is a subbase for `O`.
    pub fn is_lower_vietoris_type(&self) -> Result<bool> {
        let g = self.ground_size();
        let mut fam = SetFamily::empty(self.len())?;
        for a in Subset::all(g)? {
            let m = self.minus_index(a);
            if self.topo.is_open(m) {
                fam.insert(m);
            }
        }
        Ok(self.topo.is_subbase(&fam))
    }

    fn vietoris_type_from(&self, d: &DerivedFamilies) -> Result<bool> {
        let subbase = self
            .lift_plus_index(&d.b_family)
            .union(&self.lift_minus_index(&d.p_family))?;
        let by_subbase = self.topo.is_subbase(&subbase);
        let by_join = self.o_u_from(d)?.join(&self.o_l_from(d)?)? == self.topo;
        if by_subbase != by_join {
            return Err(Error::Inconsistent {
                subbase: by_subbase,
                join: by_join,
            });
        }
        Ok(by_subbase)
    }

    /// `(B_O)⁺_M ∪ (P_O)⁻_M` is a subbase for `O`; cross-checked against `O = O_u ∨ O_l`.
    pub fn is_vietoris_type(&self) -> Result<bool> {
        let d = self.derive()?;
        self.vietoris_type_from(&d)
    }

    /// Vietoris-type with equal plus- and minus-topologies.
    pub fn is_strong_vietoris_type(&self) -> Result<bool> {
        let d = self.derive()?;
        if !self.vietoris_type_from(&d)? {
            return Err(Error::NotVietorisType);
        }
        Ok(d.t_plus == d.t_minus)
    }

    pub fn classify(&self) -> Result<Classification> {
        let derived = self.derive()?;
        let vietoris_type = self.vietoris_type_from(&derived)?;
        let strong_vietoris_type = vietoris_type.then(|| derived.t_plus == derived.t_minus);
        Ok(Classification {
            tychonoff_type: self.is_tychonoff_type()?,
            lower_vietoris_type: self.is_lower_vietoris_type()?,
            vietoris_type,
            strong_vietoris_type,
            derived,
        })
    }
}
