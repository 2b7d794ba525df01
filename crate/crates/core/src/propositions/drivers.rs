use std::time::Instant;

use rayon::prelude::*;

use super::pool::PoolCache;
use super::reproduce::{reproduce, EXAMPLE_IDS};
use super::*;
use crate::error::{Error, Result};
use crate::setcore::{intersection_closure, union_closure, SetFamily, Subset};
use crate::topology::{enumerate_topologies, weight_witness, FiniteTopology};

/// Proposition drivers, in the order the CLI lists them.
pub const PROP_IDS: &[&str] = &[
    "prop-2.7.20a",
    "prop-2.7.20b",
    "prop-2.7.20v",
    "prop-2.7.20g",
    "prop-2.7.20d",
    "prop-2.7.20e",
    "prop-3.3p",
    "prop-teglovi",
    "prop-T0",
    "prop-T1",
    "prop-T2",
    "prop-proPreg",
    "prop-mycom",
    "prop-iA",
    "prop-iAX",
    "prop-strV",
];

/// Runs the exhaustive driver for `prop_id` (or reproduces an `example-*` id).
pub fn check(prop_id: &str, scope: &Scope) -> Result<CheckReport> {
    if EXAMPLE_IDS.contains(&prop_id) {
        return reproduce(prop_id.trim_start_matches("example-"), scope.seed);
    }
    if !PROP_IDS.contains(&prop_id) {
        return Err(Error::InvalidParameter(format!(
            "unknown proposition id {prop_id:?}"
        )));
    }
    scope.validate()?;
    let start = Instant::now();
    let d = Driver::new(scope)?;
    let mut notes = vec![format!(
        "{} topologies on 1..={} points",
        d.spaces.len(),
        scope.max_points
    )];
    let t = match prop_id {
        "prop-2.7.20a" => {
            let ns = scope.n.map_or(vec![1, 2], |n| vec![n]);
            notes.push(format!("n in {ns:?}"));
            d.over_pool(|t, e, out| {
                for &n in &ns {
                    out.hyper(t, e, check_jn_continuous(t, e, n)?);
                }
                Ok(())
            })?
        }
        "prop-2.7.20b" => d.over_pool(|t, e, out| {
            out.hyper(t, e, check_j1_homeo(t, e)?);
            Ok(())
        })?,
        "prop-2.7.20v" => d.over_pool(|t, e, out| {
            out.hyper(t, e, check_j1_closed(t, e)?);
            Ok(())
        })?,
        "prop-2.7.20g" => d.over_pool(|t, e, out| {
            out.hyper(t, e, check_t2_from_closed_j1(t, e)?);
            Ok(())
        })?,
        "prop-2.7.20d" => d.over_pool(|t, e, out| {
            out.hyper(t, e, check_jx_dense(t, e)?);
            Ok(())
        })?,
        "prop-2.7.20e" => d.over_pool(|t, e, out| {
            for a in nonempty(t)? {
                let o = check_density(t, e, a)?;
                out.record(o, |d| Witness::hyper(t, &e.hyper, format!("A={a}: {d}")));
            }
            Ok(())
        })?,
        "prop-3.3p" => d.over_pool(|t, e, out| {
            let p_o = e.derived.p_family.clone();
            for p_prime in dedup(vec![p_o, t.opens().clone()]) {
                let mut ps = vec![p_prime.clone()];
                ps.extend(weight_witness(&p_prime));
                for p in dedup(ps) {
                    let o = check_weight_lower(t, e, &p_prime, &p)?;
                    out.record(o, |d| {
                        Witness::hyper(t, &e.hyper, format!("P'={p_prime} P={p}: {d}"))
                    });
                }
            }
            Ok(())
        })?,
        "prop-teglovi" => d.over_pool(|t, e, out| {
            for b in interpolant_choices(e)? {
                let o = check_weight_vietoris(t, e, &b)?;
                out.record(o, |d| Witness::hyper(t, &e.hyper, format!("B={b}: {d}")));
            }
            Ok(())
        })?,
        "prop-T0" => d.over_pool(|t, e, out| {
            out.hyper(t, e, check_t0(t, e)?);
            Ok(())
        })?,
        "prop-T1" => {
            let conds = scope.t1_condition.map_or(
                vec![
                    T1Condition::Complements,
                    T1Condition::Star,
                    T1Condition::DoubleStar,
                ],
                |c| vec![c],
            );
            notes.push(format!("conditions {conds:?}"));
            let t1 = d.over_spaces(|t, out| {
                let naturals = natural_families(t.ground_size())?;
                for p in subbases_of(t)? {
                    for &cond in &conds {
                        let ms: Vec<&SetFamily> = match cond {
                            T1Condition::Complements => {
                                let c = complements(&p);
                                naturals.iter().filter(|m| m.is_subfamily_of(&c)).collect()
                            }
                            _ => naturals.iter().collect(),
                        };
                        for m in ms {
                            let e = PoolEntry::new(hyper_from_lifts(t, m, &p)?)?;
                            let o = check_t1(t, &p, &e, cond)?;
                            out.record(o, |d| {
                                Witness::hyper(t, &e.hyper, format!("P={p} {cond:?}: {d}"))
                            });
                        }
                    }
                }
                Ok(())
            })?;
            let imp = d.over_spaces(|t, out| {
                let naturals = natural_families(t.ground_size())?;
                for p in subbases_of(t)? {
                    for m in &naturals {
                        let o = check_double_star_implies_star(m, &p);
                        out.record(o, |d| Witness::space(t, format!("P={p} M={m}: {d}")));
                    }
                }
                Ok(())
            })?;
            notes.push(format!(
                "(**) => (*): {} pairs, {} with (**), {} violations",
                imp.checked,
                imp.passed + imp.failed,
                imp.failed
            ));
            t1.merge(imp)
        }
        "prop-T2" => d.over_spaces(|t, out| {
            for p in subbases_of(t)? {
                let c = complements(&p);
                for m in natural_families(t.ground_size())?
                    .iter()
                    .filter(|m| m.is_subfamily_of(&c))
                {
                    let e = PoolEntry::new(hyper_from_lifts(t, m, &p)?)?;
                    let o = check_t2(t, &p, &e)?;
                    out.record(o, |d| Witness::hyper(t, &e.hyper, format!("P={p}: {d}")));
                }
            }
            Ok(())
        })?,
        "prop-proPreg" => {
            let variants = scope
                .preg_variant
                .map_or(vec![PregVariant::Exact, PregVariant::Relaxed], |v| vec![v]);
            notes.push(format!("variants {variants:?}"));
            let dropped = d.over_spaces(|t, out| {
                preg_instances(
                    t,
                    &[PregVariant::Relaxed],
                    out,
                    check_preg_converse_dropping_empty,
                )
            })?;
            notes.push(format!(
                "relaxed variant with ∅ dropped from {{X∖U : U ∈ P}}: {} pass, {} fail{}",
                dropped.passed,
                dropped.failed,
                dropped.witness.as_ref().map_or(String::new(), |w| format!(
                    " (first on {} point(s), opens {:?}: {})",
                    w.points, w.opens, w.detail
                ))
            ));
            d.over_spaces(|t, out| preg_instances(t, &variants, out, check_preg_converse))?
        }
        "prop-mycom" => d.over_closed_pool(|t, e, out| {
            out.hyper(t, e, check_compact(t, e)?);
            Ok(())
        })?,
        "prop-iA" => d.over_spaces(|t, out| {
            for p in subbases_of(t)?
                .into_iter()
                .filter(|p| p.contains(t.whole()))
            {
                for a in nonempty(t)? {
                    let o = check_embedding_minus(t, &p, a)?;
                    out.record(o, |d| Witness::space(t, format!("P={p} A={a}: {d}")));
                }
            }
            Ok(())
        })?,
        "prop-iAX" => d.over_closed_pool(|t, e, out| {
            for a in nonempty(t)? {
                let o = check_subspace_equivalence(t, e, a)?;
                out.record(o, |d| Witness::hyper(t, &e.hyper, format!("A={a}: {d}")));
            }
            Ok(())
        })?,
        "prop-strV" => d.over_spaces(|t, out| {
            for m in families(t)? {
                let o = check_strong_vietoris(t, &m)?;
                out.record(o, |d| Witness::space(t, format!("M={m}: {d}")));
            }
            Ok(())
        })?,
        _ => unreachable!("id listed in PROP_IDS"),
    };
    if uses_pool(prop_id) {
        notes.push(format!(
            "hypertopologies: every Vietoris-type topology on each family, plus {} random-subbase ones",
            scope.random_count
        ));
        if scope.max_points > 3 {
            notes.push(format!(
                "on 4 points, families with more than {EXHAUSTIVE_POOL_MAX} sets get {SAMPLED_POOL} sampled Vietoris-type topologies instead"
            ));
        }
    }
    Ok(t.into_report(prop_id, Some(scope.seed), notes, start.elapsed()))
}

type PregCheck = fn(&FiniteTopology, &SetFamily, &PoolEntry, PregVariant) -> Result<Outcome>;

fn preg_instances(
    t: &FiniteTopology,
    variants: &[PregVariant],
    out: &mut Out,
    check: PregCheck,
) -> Result<()> {
    let g = t.ground_size();
    for p in subfamilies(t.opens())? {
        if p.is_empty() || !t.is_base(&p) || intersection_closure(&p)? != p {
            continue;
        }
        for &v in variants {
            let m = match v {
                PregVariant::Exact => complements(&p),
                PregVariant::Relaxed => SetFamily::nonempty_subsets(g)?,
            };
            if m.is_empty() {
                out.record(Outcome::unmet("M is empty"), |d| Witness::space(t, d));
                continue;
            }
            let e = PoolEntry::new(hyper_from_lifts(t, &m, &p)?)?;
            let o = check(t, &p, &e, v)?;
            out.record(o, |d| {
                Witness::hyper(t, &e.hyper, format!("P={p} {v:?}: {d}"))
            });
        }
    }
    Ok(())
}

fn uses_pool(prop_id: &str) -> bool {
    !matches!(
        prop_id,
        "prop-T1" | "prop-T2" | "prop-proPreg" | "prop-iA" | "prop-strV"
    )
}

/// Tally with shorthand for the common witness shape.
#[derive(Default)]
struct Out(Tally);

impl Out {
    fn record(&mut self, o: Outcome, witness: impl FnOnce(String) -> Witness) {
        self.0.record(o, witness);
    }

    fn hyper(&mut self, t: &FiniteTopology, e: &PoolEntry, o: Outcome) {
        self.0.record(o, |d| Witness::hyper(t, &e.hyper, d));
    }
}

struct Driver {
    spaces: Vec<FiniteTopology>,
    cache: PoolCache,
}

impl Driver {
    fn new(scope: &Scope) -> Result<Self> {
        let mut spaces = Vec::new();
        for n in 1..=scope.max_points {
            spaces.extend(enumerate_topologies(n)?);
        }
        Ok(Self {
            spaces,
            cache: PoolCache::new(scope.seed, scope.random_count),
        })
    }

    /// One task per space; tallies merged in enumeration order.
    fn over_spaces<F>(&self, f: F) -> Result<Tally>
    where
        F: Fn(&FiniteTopology, &mut Out) -> Result<()> + Sync,
    {
        let parts: Vec<Result<Tally>> = self
            .spaces
            .par_iter()
            .map(|t| {
                let mut out = Out::default();
                f(t, &mut out)?;
                Ok(out.0)
            })
            .collect();
        parts
            .into_iter()
            .try_fold(Tally::default(), |acc, p| Ok(acc.merge(p?)))
    }

    /// Every space, every family from [`families`], every pooled hypertopology.
    fn over_pool<F>(&self, f: F) -> Result<Tally>
    where
        F: Fn(&FiniteTopology, &PoolEntry, &mut Out) -> Result<()> + Sync,
    {
        self.over_spaces(|t, out| {
            for m in families(t)? {
                for e in self.cache.get(&m)?.iter() {
                    f(t, e, out)?;
                }
            }
            Ok(())
        })
    }

    /// Every space with `M = CL(X)`.
    fn over_closed_pool<F>(&self, f: F) -> Result<Tally>
    where
        F: Fn(&FiniteTopology, &PoolEntry, &mut Out) -> Result<()> + Sync,
    {
        self.over_spaces(|t, out| {
            for e in self.cache.get(&t.closed_family())?.iter() {
                f(t, e, out)?;
            }
            Ok(())
        })
    }
}

/// Natural families and `CL(X)`.
pub(crate) fn families(t: &FiniteTopology) -> Result<Vec<SetFamily>> {
    let mut v = natural_families(t.ground_size())?;
    let cl = t.closed_family();
    if !v.contains(&cl) {
        v.push(cl);
    }
    Ok(v)
}

fn nonempty(t: &FiniteTopology) -> Result<Vec<Subset>> {
    Ok(Subset::all(t.ground_size())?
        .filter(|a| !a.is_empty())
        .collect())
}

fn dedup(mut v: Vec<SetFamily>) -> Vec<SetFamily> {
    let mut seen = Vec::new();
    v.retain(|f| {
        let fresh = !seen.contains(f);
        if fresh {
            seen.push(f.clone());
        }
        fresh
    });
    v
}

/// `B_O`, the unions of minimal plus-neighbourhoods lying in `B_O`, and `B_O`
/// with one member deleted.
fn interpolant_choices(e: &PoolEntry) -> Result<Vec<SetFamily>> {
    let b_o = &e.derived.b_family;
    let g = b_o.ground_size();
    let t_plus = &e.derived.t_plus;
    let nbhds = SetFamily::from_subsets(g, (0..g).map(|x| t_plus.neighbourhood(x)))?;
    let mut out = vec![
        b_o.clone(),
        union_closure(&nbhds)?.filter(|u| b_o.contains(u)),
    ];
    for u in b_o.iter() {
        let mut smaller = b_o.clone();
        smaller.remove(u);
        out.push(smaller);
    }
    Ok(dedup(out))
}
