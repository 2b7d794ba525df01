use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::DEFAULT_SEED;
use super::{
    natural_families, random_subbase_pool, vietoris_type_pool, CheckReport, Outcome, PoolEntry,
    Tally, Witness,
};
use crate::error::{Error, Result};
use crate::hyperspace::{is_natural_family, HyperSpace};
use crate::setcore::{fin_n, SetFamily};
use crate::topology::{enumerate_topologies, FiniteTopology, MAX_PREORDER_POINTS};

/// Which families `M` to pair with each space.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyPolicy {
    /// every natural family
    AllNatural,
    /// `CL(X)` only
    ClosedOnly,
    /// `Fin_n(X)`
    FinN(usize),
    /// listed families, each used on every space whose points it fits
    Explicit(Vec<Vec<Vec<usize>>>),
}

/// Which hypertopologies to put on each `M`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum HyperPolicy {
    Vietoris,
    Upper,
    Lower,
    RandomSubbase {
        seed: u64,
        count: usize,
    },
    /// every Vietoris-type topology on `M`
    VietorisType,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Implication {
    #[serde(default)]
    pub hypotheses: Vec<String>,
    pub conclusion: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SearchConfig {
    #[serde(default = "one")]
    pub min_points: usize,
    pub max_points: usize,
    pub family_policy: FamilyPolicy,
    pub hypertopology_policy: HyperPolicy,
    pub implication: Implication,
    /// Echoed in the report; the random-subbase policy carries its own seed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

fn one() -> usize {
    1
}

impl SearchConfig {
    pub fn seed(&self) -> u64 {
        match self.hypertopology_policy {
            HyperPolicy::RandomSubbase { seed, .. } => seed,
            _ => self.seed.unwrap_or(DEFAULT_SEED),
        }
    }

    /// Replaces every seed in the configuration.
    pub fn with_seed(mut self, seed: u64) -> Self {
        if let HyperPolicy::RandomSubbase { seed: s, .. } = &mut self.hypertopology_policy {
            *s = seed;
        }
        self.seed = Some(seed);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_points > MAX_PREORDER_POINTS {
            return Err(Error::TooLarge(format!(
                "max_points {} exceeds {MAX_PREORDER_POINTS}",
                self.max_points
            )));
        }
        if self.min_points == 0 || self.min_points > self.max_points {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= min_points <= max_points, got {}..={}",
                self.min_points, self.max_points
            )));
        }
        if self.family_policy == FamilyPolicy::FinN(0) {
            return Err(Error::InvalidParameter("fin-n needs n >= 1".into()));
        }
        if let FamilyPolicy::Explicit(fs) = &self.family_policy {
            if fs.is_empty()
                || fs
                    .iter()
                    .any(|f| f.is_empty() || f.iter().any(Vec::is_empty))
            {
                return Err(Error::InvalidParameter(
                    "explicit families must be nonempty without ∅".into(),
                ));
            }
        }
        let imp = &self.implication;
        for p in imp.hypotheses.iter().chain([&imp.conclusion]) {
            if !PREDICATES.contains(&p.as_str()) {
                return Err(Error::InvalidParameter(format!("unknown predicate {p:?}")));
            }
        }
        Ok(())
    }
}

/// Predicate ids accepted in implications.
pub const PREDICATES: &[&str] = &[
    "vietoris-type",
    "strong-vietoris-type",
    "tychonoff-type",
    "lower-vietoris-type",
    "tychonoff-topology",
    "lower-vietoris-topology",
    "vietoris-topology",
    "t-o-equals-t",
    "t-o-coarser",
    "t-plus-equals-t",
    "t-minus-equals-t",
    "hyper-t0",
    "hyper-t1",
    "hyper-t2",
    "hyper-compact",
    "natural-family",
    "closed-family",
    "base-t0",
    "base-t1",
    "base-t2",
    "base-regular",
    "j1-closed",
];

fn eval(id: &str, t: &FiniteTopology, e: &PoolEntry) -> Result<bool> {
    let h = &e.hyper;
    let d = &e.derived;
    let m = h.family();
    Ok(match id {
        "vietoris-type" => e.vietoris_type,
        "strong-vietoris-type" => e.vietoris_type && d.t_plus == d.t_minus,
        "tychonoff-type" => h.is_tychonoff_type()?,
        "lower-vietoris-type" => h.is_lower_vietoris_type()?,
        "tychonoff-topology" => HyperSpace::upper_vietoris(t, m)?.topology() == h.topology(),
        "lower-vietoris-topology" => HyperSpace::lower_vietoris(t, m)?.topology() == h.topology(),
        "vietoris-topology" => HyperSpace::vietoris(t, m)?.topology() == h.topology(),
        "t-o-equals-t" => d.t_v == *t,
        "t-o-coarser" => d.t_v.is_coarser_than(t),
        "t-plus-equals-t" => d.t_plus == *t,
        "t-minus-equals-t" => d.t_minus == *t,
        "hyper-t0" => h.topology().is_t0(),
        "hyper-t1" => h.topology().is_t1(),
        "hyper-t2" => h.topology().is_t2(),
        "hyper-compact" => h.topology().is_compact(),
        "natural-family" => is_natural_family(m),
        "closed-family" => *m == t.closed_family(),
        "base-t0" => t.is_t0(),
        "base-t1" => t.is_t1(),
        "base-t2" => t.is_t2(),
        "base-regular" => t.is_regular(),
        "j1-closed" => super::j1_is_closed(h)?,
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown predicate {other:?}"
            )))
        }
    })
}

fn families_for(policy: &FamilyPolicy, t: &FiniteTopology) -> Result<Vec<SetFamily>> {
    let g = t.ground_size();
    Ok(match policy {
        FamilyPolicy::AllNatural => natural_families(g)?,
        FamilyPolicy::ClosedOnly => vec![t.closed_family()],
        FamilyPolicy::FinN(n) => vec![fin_n(g, *n)?],
        FamilyPolicy::Explicit(fs) => fs
            .iter()
            .filter(|f| f.iter().flatten().all(|&x| x < g))
            .map(|f| SetFamily::from_point_lists(g, f))
            .collect::<Result<_>>()?,
    })
}

fn hypers_for(policy: &HyperPolicy, t: &FiniteTopology, m: &SetFamily) -> Result<Vec<HyperSpace>> {
    Ok(match policy {
        HyperPolicy::Vietoris => vec![HyperSpace::vietoris(t, m)?],
        HyperPolicy::Upper => vec![HyperSpace::upper_vietoris(t, m)?],
        HyperPolicy::Lower => vec![HyperSpace::lower_vietoris(t, m)?],
        HyperPolicy::RandomSubbase { seed, count } => random_subbase_pool(m, *seed, *count)?,
        HyperPolicy::VietorisType => vietoris_type_pool(m)?,
    })
}

/// Ordering key of a counterexample: points, `|M|`, number of opens, then
/// enumeration order.
type Key = (usize, usize, usize, usize, usize);

struct Found {
    tally: Tally,
    best: Option<(Key, Witness)>,
}

fn search_space(cfg: &SearchConfig, index: usize, t: &FiniteTopology) -> Result<Found> {
    let imp = &cfg.implication;
    let mut found = Found {
        tally: Tally::default(),
        best: None,
    };
    let mut serial = 0;
    for m in families_for(&cfg.family_policy, t)? {
        if m.is_empty() || m.contains(crate::setcore::Subset::empty(t.ground_size())?) {
            continue;
        }
        for h in hypers_for(&cfg.hypertopology_policy, t, &m)? {
            let e = PoolEntry::new(h.with_base(Some(t.clone())))?;
            let mut unmet = None;
            for p in &imp.hypotheses {
                if !eval(p, t, &e)? {
                    unmet = Some(p.clone());
                    break;
                }
            }
            let outcome = match unmet {
                Some(p) => Outcome::HypothesisNotMet(p),
                None => Outcome::from_conclusion(eval(&imp.conclusion, t, &e)?, || {
                    format!(
                        "hypotheses {:?} hold but {} fails",
                        imp.hypotheses, imp.conclusion
                    )
                }),
            };
            if let Outcome::Fail(detail) = &outcome {
                let key = (
                    t.ground_size(),
                    m.len(),
                    e.hyper.topology().opens().len(),
                    index,
                    serial,
                );
                if found.best.as_ref().is_none_or(|(k, _)| key < *k) {
                    found.best = Some((key, Witness::hyper(t, &e.hyper, detail.clone())));
                }
            }
            found.tally.record(outcome, |_| Witness::space(t, ""));
            serial += 1;
        }
    }
    Ok(found)
}

/// Evaluates the implication on every instance the policies produce and
/// reports the minimal counterexample, if any.
pub fn search_counterexamples(cfg: &SearchConfig) -> Result<CheckReport> {
    cfg.validate()?;
    let start = Instant::now();
    let mut spaces = Vec::new();
    for n in cfg.min_points..=cfg.max_points {
        spaces.extend(enumerate_topologies(n)?);
    }
    let parts: Vec<Result<Found>> = spaces
        .par_iter()
        .enumerate()
        .map(|(i, t)| search_space(cfg, i, t))
        .collect();
    let mut tally = Tally::default();
    let mut best: Option<(Key, Witness)> = None;
    for part in parts {
        let part = part?;
        let mut t = part.tally;
        t.witness = None;
        tally = tally.merge(t);
        if let Some((k, w)) = part.best {
            if best.as_ref().is_none_or(|(b, _)| k < *b) {
                best = Some((k, w));
            }
        }
    }
    tally.witness = best.map(|(_, w)| w);
    let imp = &cfg.implication;
    let notes = vec![
        format!(
            "{} topologies on {}..={} points",
            spaces.len(),
            cfg.min_points,
            cfg.max_points
        ),
        format!("implication {:?} => {}", imp.hypotheses, imp.conclusion),
    ];
    Ok(tally.into_report("search", Some(cfg.seed()), notes, start.elapsed()))
}
