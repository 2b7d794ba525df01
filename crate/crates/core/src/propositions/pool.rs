use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::{Arc, Mutex};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hyperspace::{DerivedFamilies, HyperSpace};
use crate::setcore::{SetFamily, Subset};
use crate::topology::FiniteTopology;

/// Largest number of hypertopologies `vietoris_type_pool` will produce.
pub const POOL_CAP: usize = 50_000;

/// A hyperspace together with its derived families and Vietoris-type flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoolEntry {
    pub hyper: HyperSpace,
    pub derived: DerivedFamilies,
    pub vietoris_type: bool,
}

impl PoolEntry {
    pub fn new(hyper: HyperSpace) -> Result<Self> {
        let derived = hyper.derive()?;
        let vietoris_type = hyper.is_vietoris_type()?;
        Ok(Self {
            hyper,
            derived,
            vietoris_type,
        })
    }
}

/// Families containing every singleton, in canonical order.
pub fn natural_families(ground: usize) -> Result<Vec<SetFamily>> {
    if ground > 4 {
        return Err(Error::TooLarge(format!(
            "natural families on {ground} points"
        )));
    }
    let singletons: Vec<Subset> = (0..ground)
        .map(|x| Subset::singleton(ground, x))
        .collect::<Result<_>>()?;
    let rest: Vec<Subset> = Subset::all(ground)?.filter(|s| s.len() >= 2).collect();
    let mut out = Vec::with_capacity(1 << rest.len());
    for mask in 0u32..(1 << rest.len()) {
        let chosen = rest
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &s)| s);
        out.push(SetFamily::from_subsets(
            ground,
            singletons.iter().copied().chain(chosen),
        )?);
    }
    out.sort();
    Ok(out)
}

/// All subfamilies of `f`, in order of the member-selection mask.
pub fn subfamilies(f: &SetFamily) -> Result<Vec<SetFamily>> {
    let members = f.to_vec();
    if members.len() > 16 {
        return Err(Error::TooLarge(format!("2^{} subfamilies", members.len())));
    }
    (0u32..(1 << members.len()))
        .map(|mask| {
            let chosen = members
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &s)| s);
            SetFamily::from_subsets(f.ground_size(), chosen)
        })
        .collect()
}

/// Subfamilies `P` of the opens with `P` a subbase for `t`.
pub fn subbases_of(t: &FiniteTopology) -> Result<Vec<SetFamily>> {
    Ok(subfamilies(t.opens())?
        .into_iter()
        .filter(|p| t.is_subbase(p))
        .collect())
}

/// Every Vietoris-type topology on `m`, sorted by number of opens.
///
/// A topology generated by plus- and minus-sets `A⁺_M`, `A⁻_M` is
/// Vietoris-type, and every Vietoris-type topology is generated by its own
/// open plus- and minus-sets, so closing the single-lift topologies under
/// joins reaches exactly these.
pub fn vietoris_type_pool(m: &SetFamily) -> Result<Vec<HyperSpace>> {
    let len = m.len();
    let (proto, lifts) = lifts_of(m)?;
    let singles: Vec<(Subset, FiniteTopology)> = lifts
        .into_iter()
        .map(|l| {
            Ok((
                l,
                FiniteTopology::from_subbase(len, &SetFamily::from_subsets(len, [l])?)?,
            ))
        })
        .collect::<Result<_>>()?;
    let start = FiniteTopology::indiscrete(len)?;
    let mut seen = HashSet::from([start.clone()]);
    let mut out = vec![start];
    let mut i = 0;
    while i < out.len() {
        let t = out[i].clone();
        for (l, s) in &singles {
            if t.is_open(*l) {
                continue;
            }
            let j = t.join(s)?;
            if seen.insert(j.clone()) {
                out.push(j);
                if out.len() > POOL_CAP {
                    return Err(Error::TooLarge(format!(
                        "more than {POOL_CAP} Vietoris-type topologies on a family of {len} sets"
                    )));
                }
            }
        }
        i += 1;
    }
    out.sort_by(|a, b| {
        a.opens()
            .len()
            .cmp(&b.opens().len())
            .then_with(|| a.opens().cmp(b.opens()))
    });
    out.into_iter().map(|t| proto.with_topology(t)).collect()
}

/// Distinct nontrivial plus- and minus-lifts on `m`, as index subsets.
fn lifts_of(m: &SetFamily) -> Result<(HyperSpace, BTreeSet<Subset>)> {
    let proto = HyperSpace::new(m.clone(), FiniteTopology::indiscrete(m.len())?)?;
    let mut lifts = BTreeSet::new();
    for a in Subset::all(m.ground_size())? {
        for l in [proto.plus_index(a), proto.minus_index(a)] {
            if !l.is_empty() && !l.is_full() {
                lifts.insert(l);
            }
        }
    }
    Ok((proto, lifts))
}

/// Up to `count` distinct Vietoris-type topologies on `m`, each generated by
/// a seeded random set of lifts; sorted like [`vietoris_type_pool`].
pub fn sampled_vietoris_type_pool(
    m: &SetFamily,
    seed: u64,
    count: usize,
) -> Result<Vec<HyperSpace>> {
    let len = m.len();
    let (proto, lifts) = lifts_of(m)?;
    let lifts: Vec<Subset> = lifts.into_iter().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed ^ 0x5A5A, m));
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for _ in 0..count {
        let p = rng.random_range(0.05..0.6);
        let chosen = lifts.iter().copied().filter(|_| rng.random_bool(p));
        let t = FiniteTopology::from_subbase(len, &SetFamily::from_subsets(len, chosen)?)?;
        if seen.insert(t.clone()) {
            out.push(t);
        }
    }
    out.sort_by(|a, b| {
        a.opens()
            .len()
            .cmp(&b.opens().len())
            .then_with(|| a.opens().cmp(b.opens()))
    });
    out.into_iter().map(|t| proto.with_topology(t)).collect()
}

/// Families this large on more than 3 points get a sampled pool.
pub const EXHAUSTIVE_POOL_MAX: usize = 5;

/// Size of a sampled Vietoris-type pool.
pub const SAMPLED_POOL: usize = 48;

/// Whether [`PoolCache`] enumerates every Vietoris-type topology on `m`.
pub fn pool_is_exhaustive(m: &SetFamily) -> bool {
    m.ground_size() <= 3 || m.len() <= EXHAUSTIVE_POOL_MAX
}

/// Deterministic per-family seed.
pub(crate) fn mix_seed(seed: u64, m: &SetFamily) -> u64 {
    let mut h = seed ^ 0x9E37_79B9_7F4A_7C15;
    for s in m.iter() {
        h ^= s.bits() as u64 + ((m.ground_size() as u64) << 16);
        h = h.wrapping_mul(0x0100_0000_01B3).rotate_left(23);
    }
    h
}

/// `count` hypertopologies on `m`, each generated by `k ∈ 1..=3` random
/// subfamilies of `m`.
pub fn random_subbase_pool(m: &SetFamily, seed: u64, count: usize) -> Result<Vec<HyperSpace>> {
    let len = m.len();
    let members = m.to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, m));
    (0..count)
        .map(|_| {
            let k = rng.random_range(1..=3);
            let subbase: Vec<SetFamily> = (0..k)
                .map(|_| {
                    let mask: u32 = rng.random_range(0..(1u32 << len));
                    let chosen = members
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, &s)| s);
                    SetFamily::from_subsets(m.ground_size(), chosen)
                })
                .collect::<Result<_>>()?;
            HyperSpace::from_subbase(m.clone(), &subbase)
        })
        .collect()
}

/// Pools shared by the drivers, built once per family.
pub(crate) struct PoolCache {
    seed: u64,
    random_count: usize,
    pools: Mutex<HashMap<SetFamily, Arc<Vec<PoolEntry>>>>,
}

impl PoolCache {
    pub(crate) fn new(seed: u64, random_count: usize) -> Self {
        Self {
            seed,
            random_count,
            pools: Mutex::new(HashMap::new()),
        }
    }

    /// The Vietoris-type topologies on `m` (all of them when
    /// [`pool_is_exhaustive`], else a sample) followed by the random-subbase ones.
    pub(crate) fn get(&self, m: &SetFamily) -> Result<Arc<Vec<PoolEntry>>> {
        if let Some(p) = self.pools.lock().expect("pool lock").get(m) {
            return Ok(p.clone());
        }
        let mut hypers = if pool_is_exhaustive(m) {
            vietoris_type_pool(m)?
        } else {
            sampled_vietoris_type_pool(m, self.seed, SAMPLED_POOL)?
        };
        hypers.extend(random_subbase_pool(m, self.seed, self.random_count)?);
        let entries: Vec<PoolEntry> = hypers
            .into_iter()
            .map(PoolEntry::new)
            .collect::<Result<_>>()?;
        let entries = Arc::new(entries);
        self.pools
            .lock()
            .expect("pool lock")
            .entry(m.clone())
            .or_insert(entries.clone());
        Ok(entries)
    }
}
