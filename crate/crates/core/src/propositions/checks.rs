use super::{Outcome, PoolEntry, PregVariant, T1Condition};
use crate::error::Result;
use crate::hyperspace::{is_natural_family, HyperSpace};
use crate::setcore::{fin_n, intersection_closure, SetFamily, Subset};
use crate::topology::{weight, FiniteTopology, SpaceMap, Subspace};

macro_rules! require {
    ($cond:expr, $why:expr) => {
        if !$cond {
            return Ok(Outcome::unmet($why));
        }
    };
}

fn contains_fin(m: &SetFamily, n: usize) -> Result<bool> {
    Ok(fin_n(m.ground_size(), n)?.is_subfamily_of(m))
}

/// `J_1(X)` is closed in `(M, O)`.
pub fn j1_is_closed(h: &HyperSpace) -> Result<bool> {
    let j1 = h.index_of_family(&h.j_family(1))?;
    Ok(h.topology().is_open(j1.complement()))
}

/// `{X∖U : U ∈ P} ∖ {∅}`
pub fn complements(p: &SetFamily) -> SetFamily {
    p.map(Subset::complement).filter(|s| !s.is_empty())
}

/// Hyperspace on `m` with subbase `P⁻_M ∪ P⁺_M`.
pub fn hyper_from_lifts(base: &FiniteTopology, m: &SetFamily, p: &SetFamily) -> Result<HyperSpace> {
    let proto = HyperSpace::new(m.clone(), FiniteTopology::indiscrete(m.len())?)?;
    let sub = proto.lift_minus_index(p).union(&proto.lift_plus_index(p))?;
    let topo = FiniteTopology::from_subbase(m.len(), &sub)?;
    Ok(proto.with_topology(topo)?.with_base(Some(base.clone())))
}

fn generated_by_lifts(e: &PoolEntry, p: &SetFamily) -> Result<bool> {
    let h = &e.hyper;
    let sub = h.lift_minus_index(p).union(&h.lift_plus_index(p))?;
    Ok(FiniteTopology::from_subbase(h.len(), &sub)? == *h.topology())
}

fn strong(e: &PoolEntry) -> bool {
    e.vietoris_type && e.derived.t_plus == e.derived.t_minus
}

/// `j_n : X^n → J_n(X)` is continuous.
pub fn check_jn_continuous(base: &FiniteTopology, e: &PoolEntry, n: usize) -> Result<Outcome> {
    let h = &e.hyper;
    require!(
        contains_fin(h.family(), n)?,
        "Fin_n(X) is not contained in M"
    );
    require!(e.vietoris_type, "O is not Vietoris-type");
    require!(
        e.derived.t_v.is_coarser_than(base),
        "T_O is not coarser than T"
    );
    let j = h.j_map(base, n)?;
    Ok(Outcome::from_conclusion(j.is_continuous(), || {
        format!("j_{n} is not continuous")
    }))
}

/// `j_1 : X → J_1(X)` is a homeomorphism.
pub fn check_j1_homeo(base: &FiniteTopology, e: &PoolEntry) -> Result<Outcome> {
    let h = &e.hyper;
    require!(is_natural_family(h.family()), "M is not natural");
    require!(e.vietoris_type, "O is not Vietoris-type");
    require!(e.derived.t_v == *base, "T_O differs from T");
    let j = h.j_map(base, 1)?;
    let ok = j.is_bijective() && j.is_continuous() && j.is_inversely_continuous()?;
    Ok(Outcome::from_conclusion(ok, || {
        "j_1 is not a homeomorphism".into()
    }))
}

/// `J_1(X)` is closed.
pub fn check_j1_closed(base: &FiniteTopology, e: &PoolEntry) -> Result<Outcome> {
    let h = &e.hyper;
    require!(base.is_t2(), "X is not T2");
    require!(is_natural_family(h.family()), "M is not natural");
    require!(e.vietoris_type, "O is not Vietoris-type");
    require!(
        base.is_coarser_than(&e.derived.t_minus),
        "T is not coarser than the minus-topology"
    );
    Ok(Outcome::from_conclusion(j1_is_closed(h)?, || {
        "J_1(X) is not closed".into()
    }))
}

/// `X` is T₂ when `J_1(X)` is closed.
pub fn check_t2_from_closed_j1(base: &FiniteTopology, e: &PoolEntry) -> Result<Outcome> {
    let h = &e.hyper;
    require!(
        contains_fin(h.family(), 2)?,
        "Fin_2(X) is not contained in M"
    );
    require!(e.vietoris_type, "O is not Vietoris-type");
    require!(
        e.derived.t_v.is_coarser_than(base),
        "T_O is not coarser than T"
    );
    require!(j1_is_closed(h)?, "J_1(X) is not closed");
    Ok(Outcome::from_conclusion(base.is_t2(), || {
        "X is not T2".into()
    }))
}

/// `J(X)` is dense.
pub fn check_jx_dense(_base: &FiniteTopology, e: &PoolEntry) -> Result<Outcome> {
    let h = &e.hyper;
    let g = h.ground_size();
    require!(contains_fin(h.family(), g)?, "Fin(X) is not contained in M");
    require!(e.vietoris_type, "O is not Vietoris-type");
    let j = h.index_of_family(&h.j_family(g))?;
    Ok(Outcome::from_conclusion(h.topology().is_dense(j)?, || {
        "J(X) is not dense".into()
    }))
}

/// `Fin(A)` is dense for a dense `A ⊆ X`.
pub fn check_density(base: &FiniteTopology, e: &PoolEntry, a: Subset) -> Result<Outcome> {
    let h = &e.hyper;
    require!(
        contains_fin(h.family(), h.ground_size())?,
        "Fin(X) is not contained in M"
    );
    require!(e.vietoris_type, "O is not Vietoris-type");
    require!(e.derived.t_v == *base, "T_O differs from T");
    require!(base.is_dense(a)?, "A is not dense");
    let fin_a = h.index_of_family(&h.family().filter(|s| s.is_subset_of(a)))?;
    Ok(Outcome::from_conclusion(
        h.topology().is_dense(fin_a)?,
        || format!("Fin({a}) is not dense"),
    ))
}

/// `∀U ∈ outer ∀x ∈ U ∃V ∈ inner : x ∈ V ⊆ U`
pub fn refines(inner: &SetFamily, outer: &SetFamily) -> bool {
    outer.iter().all(|u| {
        u.points()
            .all(|x| inner.iter().any(|v| v.contains(x) && v.is_subset_of(u)))
    })
}

/// Weight of a finite topology is at most the size of the base `(P⁻_M)^∩`.
///
/// The empty intersection `M` is adjoined, matching the convention that
/// generation always adjoins the whole space.
pub fn check_weight_lower(
    _base: &FiniteTopology,
    e: &PoolEntry,
    p_prime: &SetFamily,
    p: &SetFamily,
) -> Result<Outcome> {
    let h = &e.hyper;
    let topo = h.topology();
    require!(h.is_lower_vietoris_type()?, "O is not lower-Vietoris-type");
    require!(
        topo.is_subbase(&h.lift_minus_index(p_prime)),
        "(P')⁻ is not a subbase for O"
    );
    require!(p.is_subfamily_of(p_prime), "P is not contained in P'");
    require!(refines(p, p_prime), "P does not refine P'");
    let mut lifted = h.lift_minus_index(p);
    lifted.insert(topo.whole());
    let b = intersection_closure(&lifted)?;
    if !topo.is_base(&b) {
        return Ok(Outcome::Fail("(P⁻)^∩ is not a base".into()));
    }
    let ok = weight(topo.opens()).is_none_or(|w| w <= b.len());
    Ok(Outcome::from_conclusion(ok, || {
        "weight exceeds the constructed base".into()
    }))
}

/// `∀M ∀U ∈ B_O, M ⊆ U ⇒ ∃V ∈ B, M ⊆ V ⊆ U`
pub fn interpolates(h: &HyperSpace, b_o: &SetFamily, b: &SetFamily) -> bool {
    h.members().iter().all(|&m| {
        b_o.iter()
            .filter(|u| m.is_subset_of(*u))
            .all(|u| b.iter().any(|v| m.is_subset_of(v) && v.is_subset_of(u)))
    })
}

/// `B⁺_M` is a base for `O_u`, and `B⁺_M ∪ (P_O)⁻_M` a subbase for `O`.
pub fn check_weight_vietoris(
    _base: &FiniteTopology,
    e: &PoolEntry,
    b: &SetFamily,
) -> Result<Outcome> {
    let h = &e.hyper;
    let d = &e.derived;
    require!(e.vietoris_type, "O is not Vietoris-type");
    require!(b.is_subfamily_of(&d.b_family), "B is not contained in B_O");
    require!(
        interpolates(h, &d.b_family, b),
        "B does not interpolate B_O"
    );
    let plus = h.lift_plus_index(b);
    if !h.o_u()?.topology().is_base(&plus) {
        return Ok(Outcome::Fail("B⁺ is not a base for O_u".into()));
    }
    let mut sub = plus.union(&h.lift_minus_index(&d.p_family))?;
    if !h.topology().is_subbase(&sub) {
        return Ok(Outcome::Fail("B⁺ ∪ (P_O)⁻ is not a subbase for O".into()));
    }
    sub.insert(h.topology().whole());
    let size = intersection_closure(&sub)?.len();
    let ok = weight(h.topology().opens()).is_none_or(|w| w <= size);
    Ok(Outcome::from_conclusion(ok, || {
        "weight exceeds the generated base".into()
    }))
}

/// `(M, O)` is T₀.
pub fn check_t0(_base: &FiniteTopology, e: &PoolEntry) -> Result<Outcome> {
    let h = &e.hyper;
    let d = &e.derived;
    let by_p = h
        .members()
        .iter()
        .all(|m| d.p_family.contains(m.complement()));
    let by_b = h.members().iter().all(|&m| d.b_family.contains(m));
    require!(by_p || by_b, "M is in neither {X∖A : A ∈ P_O} nor B_O");
    Ok(Outcome::from_conclusion(h.topology().is_t0(), || {
        "(M,O) is not T0".into()
    }))
}

/// Condition (*) on `M` and `P`.
pub fn condition_star(m: &SetFamily, p: &SetFamily) -> bool {
    m.iter().all(|a| {
        m.iter().filter(|&b| !a.difference(b).is_empty()).all(|b| {
            p.iter().any(|u| b.is_subset_of(u) && !a.is_subset_of(u))
                && p.iter().any(|v| a.intersects(v) && !b.intersects(v))
        })
    })
}

/// Condition (**) on `M` and `P`.
pub fn condition_double_star(m: &SetFamily, p: &SetFamily) -> bool {
    m.iter().all(|a| {
        a.complement().points().all(|x| {
            p.iter().any(|u| a.is_subset_of(u) && !u.contains(x))
                && p.iter().any(|v| v.contains(x) && !v.intersects(a))
        })
    })
}

fn lift_hypotheses(base: &FiniteTopology, p: &SetFamily, e: &PoolEntry) -> Result<Option<Outcome>> {
    if !base.is_subbase(p) {
        return Ok(Some(Outcome::unmet("P is not a subbase for T")));
    }
    if !is_natural_family(e.hyper.family()) {
        return Ok(Some(Outcome::unmet("M is not natural")));
    }
    if !generated_by_lifts(e, p)? {
        return Ok(Some(Outcome::unmet("O is not generated by P⁻ ∪ P⁺")));
    }
    Ok(None)
}

/// Strong Vietoris-type, `T_O = T`, `(M, O)` T₁.
pub fn check_t1(
    base: &FiniteTopology,
    p: &SetFamily,
    e: &PoolEntry,
    cond: T1Condition,
) -> Result<Outcome> {
    if let Some(o) = lift_hypotheses(base, p, e)? {
        return Ok(o);
    }
    let m = e.hyper.family();
    let holds = match cond {
        T1Condition::Complements => m.is_subfamily_of(&complements(p)),
        T1Condition::Star => condition_star(m, p),
        T1Condition::DoubleStar => condition_double_star(m, p),
    };
    require!(holds, "condition on M fails");
    if !strong(e) {
        return Ok(Outcome::Fail("O is not strong Vietoris-type".into()));
    }
    if e.derived.t_v != *base {
        return Ok(Outcome::Fail("T_O differs from T".into()));
    }
    Ok(Outcome::from_conclusion(e.hyper.topology().is_t1(), || {
        "(M,O) is not T1".into()
    }))
}

/// `(**) ⇒ (*)` on one pair.
pub fn check_double_star_implies_star(m: &SetFamily, p: &SetFamily) -> Outcome {
    if !condition_double_star(m, p) {
        return Outcome::unmet("(**) fails");
    }
    Outcome::from_conclusion(condition_star(m, p), || "(**) holds but (*) fails".into())
}

/// As [`check_t1`] for the complement condition, with `X` P-regular, and `(M, O)` T₂.
pub fn check_t2(base: &FiniteTopology, p: &SetFamily, e: &PoolEntry) -> Result<Outcome> {
    if let Some(o) = lift_hypotheses(base, p, e)? {
        return Ok(o);
    }
    require!(
        e.hyper.family().is_subfamily_of(&complements(p)),
        "M is not contained in {X∖U : U ∈ P}"
    );
    require!(base.is_p_regular(p)?, "X is not P-regular");
    if !strong(e) {
        return Ok(Outcome::Fail("O is not strong Vietoris-type".into()));
    }
    if e.derived.t_v != *base {
        return Ok(Outcome::Fail("T_O differs from T".into()));
    }
    let topo = e.hyper.topology();
    Ok(Outcome::from_conclusion(
        topo.is_t1() && topo.is_t2(),
        || "(M,O) is not T2".into(),
    ))
}

/// `X` is P-regular when the hyperspace is T₂.
///
/// In the exact variant `M = {X∖U : U ∈ P} ∖ {∅}`, as `M ⊆ P′(X)` forces.
/// In the relaxed variant `M ⊇ {X∖U : U ∈ P}` is read literally, so `X ∈ P`
/// (putting `∅` on the right) fails the hypotheses.
pub fn check_preg_converse(
    base: &FiniteTopology,
    p: &SetFamily,
    e: &PoolEntry,
    variant: PregVariant,
) -> Result<Outcome> {
    if variant == PregVariant::Relaxed && p.contains(base.whole()) {
        return Ok(Outcome::unmet("X ∈ P puts ∅ into {X∖U : U ∈ P}"));
    }
    preg_converse(base, p, e, variant)
}

/// [`check_preg_converse`] with `∅` dropped from `{X∖U : U ∈ P}` in both variants.
pub fn check_preg_converse_dropping_empty(
    base: &FiniteTopology,
    p: &SetFamily,
    e: &PoolEntry,
    variant: PregVariant,
) -> Result<Outcome> {
    preg_converse(base, p, e, variant)
}

fn preg_converse(
    base: &FiniteTopology,
    p: &SetFamily,
    e: &PoolEntry,
    variant: PregVariant,
) -> Result<Outcome> {
    let m = e.hyper.family();
    let g = base.ground_size();
    require!(base.is_base(p), "P is not a base for T");
    require!(
        !p.is_empty() && intersection_closure(p)? == *p,
        "P is not closed under intersections"
    );
    let c = complements(p);
    match variant {
        PregVariant::Exact => {
            require!(*m == c, "M is not {X∖U : U ∈ P}");
            require!(is_natural_family(m), "M is not natural");
        }
        PregVariant::Relaxed => {
            require!(c.is_subfamily_of(m), "M does not contain {X∖U : U ∈ P}");
            require!(contains_fin(m, g)?, "Fin(X) is not contained in M");
            let joins = p
                .iter()
                .all(|u| u.points().all(|x| m.contains(u.complement().with(x))));
            require!(joins, "some {x} ∪ (X∖U) is missing from M");
        }
    }
    require!(generated_by_lifts(e, p)?, "O is not generated by P⁻ ∪ P⁺");
    require!(e.hyper.topology().is_t2(), "(M,O) is not T2");
    Ok(Outcome::from_conclusion(base.is_p_regular(p)?, || {
        "X is not P-regular".into()
    }))
}

/// `(CL(X), O)` is compact; the identity from the Vietoris topology is continuous.
pub fn check_compact(base: &FiniteTopology, e: &PoolEntry) -> Result<Outcome> {
    let h = &e.hyper;
    require!(base.is_compact() && base.is_t1(), "X is not compact T1");
    require!(*h.family() == base.closed_family(), "M is not CL(X)");
    require!(e.vietoris_type, "O is not Vietoris-type");
    require!(e.derived.t_v == *base, "T_O differs from T");
    if !h.topology().is_compact() {
        return Ok(Outcome::Fail("(CL(X),O) is not compact".into()));
    }
    let v = HyperSpace::vietoris(base, h.family())?;
    let id = SpaceMap::new(
        v.topology().clone(),
        h.topology().clone(),
        (0..h.len()).collect(),
    )?;
    Ok(Outcome::from_conclusion(id.is_continuous(), || {
        "identity from the Vietoris topology is not continuous".into()
    }))
}

/// `CL(A)` in the coordinates of the subspace, with the map `F ↦ cl_X F` into `CL(X)`.
struct SubHyper {
    sub: Subspace,
    family: SetFamily,
    graph: Vec<usize>,
}

fn sub_hyper(base: &FiniteTopology, cl_x: &HyperSpace, a: Subset) -> Result<SubHyper> {
    let sub = base.subspace(a)?;
    let family = sub.topology.closed_family();
    let g = base.ground_size();
    let graph = family
        .iter()
        .map(|f| {
            let c = base.closure_of(sub.lift(f, g))?;
            cl_x.index_of(c).ok_or_else(|| {
                crate::error::Error::WitnessFailed(format!("closure {c} is not in CL(X)"))
            })
        })
        .collect::<Result<_>>()?;
    Ok(SubHyper { sub, family, graph })
}

fn traces(s: &SubHyper, f: &SetFamily) -> Result<SetFamily> {
    SetFamily::from_subsets(s.sub.points.len(), f.iter().map(|u| s.sub.restrict(u)))
}

/// `i_{A,X,-} : (CL(A), O₋^A) → (CL(X), O)` is an embedding, `O` generated by `P⁻`.
pub fn check_embedding_minus(base: &FiniteTopology, p: &SetFamily, a: Subset) -> Result<Outcome> {
    require!(base.is_subbase(p), "P is not a subbase for T");
    require!(p.contains(base.whole()), "X is not in P");
    require!(!a.is_empty(), "A is empty");
    let cl = base.closed_family();
    let proto = HyperSpace::new(cl.clone(), FiniteTopology::indiscrete(cl.len())?)?;
    let h = proto.with_topology(FiniteTopology::from_subbase(
        cl.len(),
        &proto.lift_minus_index(p),
    )?)?;
    let s = sub_hyper(base, &h, a)?;
    let ha = HyperSpace::new(
        s.family.clone(),
        FiniteTopology::indiscrete(s.family.len())?,
    )?;
    let o_a = FiniteTopology::from_subbase(ha.len(), &ha.lift_minus_index(&traces(&s, p)?))?;
    let i = SpaceMap::new(o_a, h.topology().clone(), s.graph)?;
    Ok(Outcome::from_conclusion(i.is_embedding(), || {
        format!("i_(A,X,-) for A={a} is not an embedding")
    }))
}

/// Both parts for `A ⊆ X`: `O^A` is strong Vietoris-type with `T_{O^A} = T_A`,
/// and `i_{A,X}` is (inversely) continuous iff `i_{A,X,+}` is.
pub fn check_subspace_equivalence(
    base: &FiniteTopology,
    e: &PoolEntry,
    a: Subset,
) -> Result<Outcome> {
    let h = &e.hyper;
    let d = &e.derived;
    require!(base.is_t1(), "X is not T1");
    require!(*h.family() == base.closed_family(), "M is not CL(X)");
    require!(strong(e), "O is not strong Vietoris-type");
    require!(d.t_v == *base, "T_O differs from T");
    require!(!a.is_empty(), "A is empty");

    let s = sub_hyper(base, h, a)?;
    let ha = HyperSpace::new(
        s.family.clone(),
        FiniteTopology::indiscrete(s.family.len())?,
    )?;
    let o_minus =
        FiniteTopology::from_subbase(ha.len(), &ha.lift_minus_index(&traces(&s, &d.p_family)?))?;
    let o_plus =
        FiniteTopology::from_base(ha.len(), &ha.lift_plus_index(&traces(&s, &d.b_family)?))?;
    let o_a = o_minus.join(&o_plus)?;

    let part_a = PoolEntry::new(ha.with_topology(o_a.clone())?)?;
    if !(strong(&part_a) && part_a.derived.t_v == s.sub.topology) {
        return Ok(Outcome::Fail(format!(
            "O^A for A={a} is not strong Vietoris-type with T_A"
        )));
    }

    let i = SpaceMap::new(o_a, h.topology().clone(), s.graph.clone())?;
    let i_plus = SpaceMap::new(o_plus, h.o_u()?.topology().clone(), s.graph)?;
    if i.is_continuous() != i_plus.is_continuous() {
        return Ok(Outcome::Fail(format!(
            "continuity of i and i_+ differ for A={a}"
        )));
    }
    let equal = i.is_inversely_continuous()? == i_plus.is_inversely_continuous()?;
    Ok(Outcome::from_conclusion(equal, || {
        format!("inverse continuity of i and i_+ differ for A={a}")
    }))
}

/// The Vietoris topology on a natural `M ⊆ CL(X)` is strong with `T_O = T`,
/// and is the restriction of the Vietoris topology on `CL(X)`.
pub fn check_strong_vietoris(base: &FiniteTopology, m: &SetFamily) -> Result<Outcome> {
    require!(is_natural_family(m), "M is not natural");
    let cl = base.closed_family();
    require!(m.is_subfamily_of(&cl), "M is not contained in CL(X)");
    let e = PoolEntry::new(HyperSpace::vietoris(base, m)?)?;
    if !strong(&e) {
        return Ok(Outcome::Fail("Vietoris topology is not strong".into()));
    }
    if e.derived.t_v != *base {
        return Ok(Outcome::Fail("T_O differs from T".into()));
    }
    let restricted = HyperSpace::vietoris(base, &cl)?.restrict(m)?;
    Ok(Outcome::from_conclusion(
        restricted.topology() == e.hyper.topology(),
        || "restriction of the Vietoris topology on CL(X) differs".into(),
    ))
}
