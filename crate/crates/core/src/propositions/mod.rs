//! One checker per proposition, exhaustive drivers over small instances,
//! counterexample search and reproduction of the worked examples.
//!
//! Checkers return a three-valued [`Outcome`]: instances whose hypotheses
//! fail are counted separately and never as passes.

mod checks;
mod drivers;
mod pool;
mod reproduce;
mod search;

use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyperspace::{DerivedFamilies, HyperSpace};
use crate::setcore::SetFamily;
use crate::topology::FiniteTopology;

pub use checks::*;
pub use drivers::{check, PROP_IDS};
pub use pool::{
    natural_families, pool_is_exhaustive, random_subbase_pool, sampled_vietoris_type_pool,
    subbases_of, subfamilies, vietoris_type_pool, PoolEntry, EXHAUSTIVE_POOL_MAX, POOL_CAP,
    SAMPLED_POOL,
};
pub use reproduce::{fixtures, reproduce, EXAMPLE_IDS};
pub use search::{
    search_counterexamples, FamilyPolicy, HyperPolicy, Implication, SearchConfig, PREDICATES,
};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    HypothesisNotMet,
}

/// Result of one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    HypothesisNotMet(String),
}

impl Outcome {
    pub fn from_conclusion(ok: bool, what: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(what())
        }
    }

    pub fn unmet(why: &str) -> Self {
        Outcome::HypothesisNotMet(why.to_string())
    }

    pub fn verdict(&self) -> Verdict {
        match self {
            Outcome::Pass => Verdict::Pass,
            Outcome::Fail(_) => Verdict::Fail,
            Outcome::HypothesisNotMet(_) => Verdict::HypothesisNotMet,
        }
    }
}

/// A concrete instance: base space, family, hypertopology and any extra data.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub points: usize,
    pub opens: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub family: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub hypertopology: Vec<Vec<Vec<usize>>>,
    pub detail: String,
}

impl Witness {
    pub fn space(t: &FiniteTopology, detail: impl Into<String>) -> Self {
        Self {
            points: t.ground_size(),
            opens: t.opens().to_point_lists(),
            family: Vec::new(),
            hypertopology: Vec::new(),
            detail: detail.into(),
        }
    }

    pub fn hyper(t: &FiniteTopology, h: &HyperSpace, detail: impl Into<String>) -> Self {
        Self {
            family: h.family().to_point_lists(),
            hypertopology: h
                .open_families()
                .iter()
                .map(SetFamily::to_point_lists)
                .collect(),
            ..Self::space(t, detail)
        }
    }

    /// The base space, rebuilt.
    pub fn topology(&self) -> Result<FiniteTopology> {
        FiniteTopology::new(SetFamily::from_point_lists(self.points, &self.opens)?)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub prop_id: String,
    pub instances_checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub hypothesis_not_met: usize,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Wall time; not serialized so that reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Running counts; merging keeps the first witness in instance order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub unmet: usize,
    pub witness: Option<Witness>,
}

impl Tally {
    pub fn record(&mut self, outcome: Outcome, witness: impl FnOnce(String) -> Witness) {
        self.checked += 1;
        match outcome {
            Outcome::Pass => self.passed += 1,
            Outcome::HypothesisNotMet(_) => self.unmet += 1,
            Outcome::Fail(detail) => {
                self.failed += 1;
                if self.witness.is_none() {
                    self.witness = Some(witness(detail));
                }
            }
        }
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.passed += other.passed;
        self.failed += other.failed;
        self.unmet += other.unmet;
        if self.witness.is_none() {
            self.witness = other.witness;
        }
        self
    }

    pub fn verdict(&self) -> Verdict {
        if self.failed > 0 {
            Verdict::Fail
        } else if self.passed > 0 {
            Verdict::Pass
        } else {
            Verdict::HypothesisNotMet
        }
    }

    pub fn into_report(
        self,
        prop_id: &str,
        seed: Option<u64>,
        notes: Vec<String>,
        elapsed: Duration,
    ) -> CheckReport {
        CheckReport {
            prop_id: prop_id.to_string(),
            instances_checked: self.checked,
            passed: self.passed,
            failed: self.failed,
            hypothesis_not_met: self.unmet,
            verdict: self.verdict(),
            witness: self.witness,
            seed,
            notes,
            elapsed,
        }
    }
}

/// Replacement for the complement condition on `M` in the T₁ checker.
#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[serde(rename_all = "kebab-case")]
pub enum T1Condition {
    /// `M ⊆ {X∖U : U ∈ P}`
    Complements,
    /// condition (*)
    Star,
    /// condition (**)
    DoubleStar,
}

/// Choice of `M` in the converse P-regularity checker.
#[derive(Serialize, Deserialize, Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[serde(rename_all = "kebab-case")]
pub enum PregVariant {
    /// `M = {X∖U : U ∈ P}`, natural
    Exact,
    /// `M ⊇ {X∖U : U ∈ P}`, `Fin(X) ⊆ M`, `{x} ∪ (X∖U) ∈ M` for `x ∈ U ∈ P`
    Relaxed,
}

/// Scope of an exhaustive driver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scope {
    pub max_points: usize,
    /// Power for the `j_n` checker; `None` runs `n = 1` and `n = 2`.
    pub n: Option<usize>,
    pub seed: u64,
    /// Random-subbase hypertopologies added per family.
    pub random_count: usize,
    pub t1_condition: Option<T1Condition>,
    pub preg_variant: Option<PregVariant>,
}

impl Default for Scope {
    fn default() -> Self {
        Self {
            max_points: 3,
            n: None,
            seed: DEFAULT_SEED,
            random_count: 8,
            t1_condition: None,
            preg_variant: None,
        }
    }
}

impl Scope {
    pub fn validate(&self) -> Result<()> {
        if self.max_points == 0 || self.max_points > crate::topology::MAX_PREORDER_POINTS {
            return Err(Error::TooLarge(format!(
                "max_points must be in 1..={}",
                crate::topology::MAX_PREORDER_POINTS
            )));
        }
        if self.n == Some(0) {
            return Err(Error::InvalidParameter("n must be >= 1".into()));
        }
        Ok(())
    }
}

/// A base space with a hyperspace over it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub base: FiniteTopology,
    pub entry: PoolEntry,
}

impl Instance {
    pub fn new(base: FiniteTopology, hyper: HyperSpace) -> Result<Self> {
        crate::setcore::check_same(base.ground_size(), hyper.ground_size())?;
        Ok(Self {
            base,
            entry: PoolEntry::new(hyper)?,
        })
    }

    pub fn vietoris(base: &FiniteTopology, m: &SetFamily) -> Result<Self> {
        Self::new(base.clone(), HyperSpace::vietoris(base, m)?)
    }

    pub fn hyper(&self) -> &HyperSpace {
        &self.entry.hyper
    }

    pub fn derived(&self) -> &DerivedFamilies {
        &self.entry.derived
    }

    pub fn is_vietoris_type(&self) -> bool {
        self.entry.vietoris_type
    }

    pub fn witness(&self, detail: impl Into<String>) -> Witness {
        Witness::hyper(&self.base, self.hyper(), detail)
    }
}
