use hyperlab_core::setcore::{intersection_closure, minus_sets, plus_sets, union_closure};
use hyperlab_core::{SetFamily, Subset};
use proptest::prelude::*;

fn ground_and_masks() -> impl Strategy<Value = (usize, u16, u16, Vec<u16>)> {
    (1usize..=6).prop_flat_map(|g| {
        let top = (1u32 << g) as u16;
        (
            Just(g),
            0..top,
            0..top,
            proptest::collection::vec(1..top, 1..8),
        )
    })
}

proptest! {
    #[test]
    fn plus_and_minus_lattice_laws((g, a, b, m) in ground_and_masks()) {
        let a = Subset::new(g, a).unwrap();
        let b = Subset::new(g, b).unwrap();
        let m = SetFamily::from_masks(g, m).unwrap();
        let pa = plus_sets(a, &m).unwrap();
        let pb = plus_sets(b, &m).unwrap();
        prop_assert_eq!(plus_sets(a.intersection(b), &m).unwrap(), pa.intersection(&pb).unwrap());
        let ma = minus_sets(a, &m).unwrap();
        let mb = minus_sets(b, &m).unwrap();
        prop_assert_eq!(minus_sets(a.union(b), &m).unwrap(), ma.union(&mb).unwrap());
        // a member misses A exactly when it lies in X∖A
        let outside = plus_sets(a.complement(), &m).unwrap();
        prop_assert_eq!(ma.union(&outside).unwrap(), m.clone());
        prop_assert_eq!(ma.intersection(&outside).unwrap().len(), 0);
        if a.is_subset_of(b) {
            prop_assert!(pa.is_subfamily_of(&pb));
            prop_assert!(ma.is_subfamily_of(&mb));
        }
    }

    #[test]
    fn subset_algebra((g, a, b, _m) in ground_and_masks()) {
        let a = Subset::new(g, a).unwrap();
        let b = Subset::new(g, b).unwrap();
        prop_assert_eq!(a.complement().complement(), a);
        prop_assert_eq!(a.union(b).complement(), a.complement().intersection(b.complement()));
        prop_assert_eq!(a.difference(b), a.intersection(b.complement()));
        prop_assert_eq!(a.len() + a.complement().len(), g);
        prop_assert_eq!(Subset::from_points(g, &a.to_points()).unwrap(), a);
        prop_assert_eq!(a.is_subset_of(b), a.union(b) == b);
    }

    #[test]
    fn closures_are_closure_operators((g, _a, _b, m) in ground_and_masks()) {
        let f = SetFamily::from_masks(g, m).unwrap();
        let i = intersection_closure(&f).unwrap();
        let u = union_closure(&f).unwrap();
        prop_assert!(f.is_subfamily_of(&i));
        prop_assert!(f.is_subfamily_of(&u));
        prop_assert_eq!(intersection_closure(&i).unwrap(), i.clone());
        prop_assert_eq!(union_closure(&u).unwrap(), u.clone());
        for x in i.iter() {
            for y in i.iter() {
                prop_assert!(i.contains(x.intersection(y)));
            }
        }
        for x in u.iter() {
            for y in u.iter() {
                prop_assert!(u.contains(x.union(y)));
            }
        }
        // each member of the ∩-closure is the intersection of the members containing it
        for x in i.iter() {
            let meet = f.iter().filter(|s| x.is_subset_of(*s)).fold(Subset::full(g).unwrap(), |acc, s| acc.intersection(s));
            prop_assert_eq!(meet, x);
        }
    }

    #[test]
    fn family_iteration_is_sorted_and_canonical((g, _a, _b, m) in ground_and_masks()) {
        let f = SetFamily::from_masks(g, m.clone()).unwrap();
        let bits: Vec<u16> = f.iter().map(|s| s.bits()).collect();
        let mut expected = m;
        expected.sort();
        expected.dedup();
        prop_assert_eq!(bits, expected);
        let lists = f.to_point_lists();
        prop_assert_eq!(SetFamily::from_point_lists(g, &lists).unwrap(), f);
    }
}

#[test]
fn plus_sets_meet_exhaustively_on_three_points() {
    let g = 3;
    let all: Vec<Subset> = Subset::all(g).unwrap().collect();
    let nonempty: Vec<u16> = (1..8).collect();
    for mask in 1u32..(1 << 7) {
        let members = nonempty
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &b)| b);
        let m = SetFamily::from_masks(g, members).unwrap();
        for &a in &all {
            for &b in &all {
                let lhs = plus_sets(a.intersection(b), &m).unwrap();
                let rhs = plus_sets(a, &m)
                    .unwrap()
                    .intersection(&plus_sets(b, &m).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
