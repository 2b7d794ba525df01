use hyperlab_core::propositions::{natural_families, random_subbase_pool};
use hyperlab_core::setcore::{fin_n, union_closure};
use hyperlab_core::topology::enumerate_topologies;
use hyperlab_core::{FiniteTopology, HyperSpace, SetFamily, Subset};
use proptest::prelude::*;

fn families(t: &FiniteTopology) -> Vec<SetFamily> {
    let g = t.ground_size();
    let mut v = vec![
        t.closed_family(),
        SetFamily::nonempty_subsets(g).unwrap(),
        fin_n(g, 2).unwrap(),
    ];
    v.extend(natural_families(g).unwrap());
    v
}

/// `{A : A⁺ open}` and `{A : A⁻ open}` straight from the definitions.
fn plus_minus_opens(h: &HyperSpace) -> (SetFamily, SetFamily) {
    let g = h.ground_size();
    let members = h.members();
    let lift = |keep: &dyn Fn(Subset) -> bool| -> Subset {
        let bits = members
            .iter()
            .enumerate()
            .filter(|(_, &m)| keep(m))
            .fold(0u16, |b, (i, _)| b | (1 << i));
        Subset::new(members.len(), bits).unwrap()
    };
    let all: Vec<Subset> = Subset::all(g).unwrap().collect();
    let plus = all
        .iter()
        .copied()
        .filter(|&a| h.topology().is_open(lift(&|m| m.is_subset_of(a))));
    let minus = all
        .iter()
        .copied()
        .filter(|&a| h.topology().is_open(lift(&|m| m.intersects(a))));
    (
        SetFamily::from_subsets(g, plus).unwrap(),
        SetFamily::from_subsets(g, minus).unwrap(),
    )
}

fn check_facts(h: &HyperSpace) {
    let g = h.ground_size();
    let d = h.derive().unwrap();
    let (b, p) = plus_minus_opens(h);
    assert_eq!(d.b_family, b);
    assert_eq!(d.p_family, p);
    // B_O contains X and is closed under finite intersections
    assert!(b.contains(Subset::full(g).unwrap()));
    for x in b.iter() {
        for y in b.iter() {
            assert!(b.contains(x.intersection(y)));
        }
    }
    // P_O is closed under arbitrary unions
    assert_eq!(union_closure(&p).unwrap(), p);
    assert_eq!(d.t_v, d.t_plus.join(&d.t_minus).unwrap());

    // the two formulations of Vietoris-type
    let o_u = FiniteTopology::from_base(h.len(), &h.lift_plus_index(&b)).unwrap();
    let o_l = FiniteTopology::from_subbase(h.len(), &h.lift_minus_index(&p)).unwrap();
    let sub = h
        .lift_plus_index(&b)
        .union(&h.lift_minus_index(&p))
        .unwrap();
    let by_subbase = FiniteTopology::from_subbase(h.len(), &sub).unwrap() == *h.topology();
    let by_join = o_u.join(&o_l).unwrap() == *h.topology();
    assert_eq!(by_subbase, by_join);
    assert_eq!(h.is_vietoris_type().unwrap(), by_subbase);
}

#[test]
fn facts_over_three_point_spaces() {
    let mut instances = 0;
    for n in 1..=3 {
        for t in enumerate_topologies(n).unwrap() {
            for m in families(&t) {
                for h in [
                    HyperSpace::upper_vietoris(&t, &m).unwrap(),
                    HyperSpace::lower_vietoris(&t, &m).unwrap(),
                    HyperSpace::vietoris(&t, &m).unwrap(),
                ] {
                    check_facts(&h);
                    // the three classical constructions are Vietoris-type
                    assert!(h.is_vietoris_type().unwrap());
                    instances += 1;
                }
            }
        }
    }
    assert_eq!(instances, 3 * (4 + 4 * 5 + 29 * 19));
}

#[test]
fn vietoris_is_the_join() {
    for t in enumerate_topologies(3).unwrap() {
        for m in families(&t) {
            let u = HyperSpace::upper_vietoris(&t, &m).unwrap();
            let l = HyperSpace::lower_vietoris(&t, &m).unwrap();
            assert_eq!(u.join(&l).unwrap(), HyperSpace::vietoris(&t, &m).unwrap());
        }
    }
}

fn random_pair() -> impl Strategy<Value = (usize, usize, u64)> {
    (1usize..=3, 0usize..16, any::<u64>())
}

proptest! {
    #[test]
    fn facts_on_random_hypertopologies((n, fi, seed) in random_pair()) {
        let fams = natural_families(n).unwrap();
        let m = &fams[fi % fams.len()];
        for h in random_subbase_pool(m, seed, 4).unwrap() {
            check_facts(&h);
        }
    }

    #[test]
    fn induced_families_are_monotone((n, fi, seed) in random_pair()) {
        let fams = natural_families(n).unwrap();
        let m = &fams[fi % fams.len()];
        let pool = random_subbase_pool(m, seed, 2).unwrap();
        let (a, b) = (&pool[0], &pool[1]);
        let j = a.join(b).unwrap();
        let (da, dj) = (a.derive().unwrap(), j.derive().unwrap());
        prop_assert!(da.b_family.is_subfamily_of(&dj.b_family));
        prop_assert!(da.p_family.is_subfamily_of(&dj.p_family));
        prop_assert!(da.t_v.is_coarser_than(&dj.t_v));
    }

    #[test]
    fn restriction_to_a_subfamily((n, fi, seed) in random_pair()) {
        let spaces = enumerate_topologies(n).unwrap();
        let t = &spaces[(seed % spaces.len() as u64) as usize];
        let fams = natural_families(n).unwrap();
        let m = &fams[fi % fams.len()];
        let full = HyperSpace::vietoris(t, &SetFamily::nonempty_subsets(n).unwrap()).unwrap();
        let restricted = full.restrict(m).unwrap();
        let direct = HyperSpace::vietoris(t, m).unwrap();
        prop_assert_eq!(restricted.topology(), direct.topology());
    }
}
