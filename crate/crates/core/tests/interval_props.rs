use hyperlab_core::interval_line::{closure_intervals, Ext, Interval, IntervalSet};
use hyperlab_core::Rational64 as Q;
use proptest::prelude::*;

/// Endpoints with denominators up to 64, plus the infinities.
fn endpoint() -> impl Strategy<Value = Ext<Q>> {
    prop_oneof![
        1 => Just(Ext::NegInf),
        1 => Just(Ext::PosInf),
        8 => (-192i64..=192, 1i64..=64).prop_map(|(n, d)| Ext::Finite(Q::new(n, d))),
    ]
}

fn interval() -> impl Strategy<Value = Option<Interval<Q>>> {
    (endpoint(), any::<bool>(), endpoint(), any::<bool>()).prop_map(|(a, ac, b, bc)| {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Interval::new(lo, ac, hi, bc).ok()
    })
}

fn interval_set() -> impl Strategy<Value = IntervalSet<Q>> {
    proptest::collection::vec(interval(), 0..4)
        .prop_map(|v| IntervalSet::new(v.into_iter().flatten().collect()))
}

/// Every endpoint of `a` and `b`, the midpoints between consecutive ones and a
/// point beyond each end: membership is constant between these samples.
fn samples(a: &IntervalSet<Q>, b: &IntervalSet<Q>) -> Vec<Ext<Q>> {
    let mut ends: Vec<Q> = a
        .components()
        .iter()
        .chain(b.components())
        .flat_map(|c| [c.lo(), c.hi()])
        .filter_map(|e| e.finite().copied())
        .collect();
    ends.push(Q::from_integer(0));
    ends.sort();
    ends.dedup();
    let mut out = vec![
        Ext::NegInf,
        Ext::PosInf,
        Ext::Finite(ends[0] - 1),
        Ext::Finite(ends[ends.len() - 1] + 1),
    ];
    for w in ends.windows(2) {
        out.push(Ext::Finite((w[0] + w[1]) / 2));
    }
    out.extend(ends.into_iter().map(Ext::Finite));
    out
}

/// Membership by definition against each component.
fn member(s: &IntervalSet<Q>, q: &Ext<Q>) -> bool {
    s.components().iter().any(|c| {
        let above = if c.lo_closed() {
            c.lo() <= q
        } else {
            c.lo() < q
        };
        let below = if c.hi_closed() {
            q <= c.hi()
        } else {
            q < c.hi()
        };
        above && below && q.is_finite()
    })
}

proptest! {
    #[test]
    fn normalization_is_idempotent_and_disjoint(s in interval_set()) {
        let again = IntervalSet::new(s.components().to_vec());
        prop_assert_eq!(&again, &s);
        for w in s.components().windows(2) {
            prop_assert!(w[0].hi() <= w[1].lo());
            let touching = w[0].hi() == w[1].lo() && (w[0].hi_closed() || w[1].lo_closed());
            prop_assert!(!touching);
            prop_assert!(w[0].intersection(&w[1]).is_none());
        }
    }

    #[test]
    fn operations_agree_with_grid_sampling(a in interval_set(), b in interval_set()) {
        let g = samples(&a, &b);
        for q in &g {
            prop_assert_eq!(a.contains(q), member(&a, q));
            prop_assert_eq!(a.intersection(&b).contains(q), member(&a, q) && member(&b, q));
            prop_assert_eq!(a.union(&b).contains(q), member(&a, q) || member(&b, q));
            prop_assert_eq!(a.complement().contains(q), q.is_finite() && !member(&a, q));
        }
        let meet = g.iter().any(|q| member(&a, q) && member(&b, q));
        prop_assert_eq!(a.intersects(&b), meet);
        let sub = g.iter().all(|q| !member(&a, q) || member(&b, q));
        prop_assert_eq!(a.subset_of(&b), sub);
        prop_assert_eq!(a.complement().complement(), a.clone());
    }

    #[test]
    fn closure_is_closed_and_smallest(a in interval_set()) {
        let c = closure_intervals(&a);
        prop_assert!(c.is_closed());
        prop_assert!(a.subset_of(&c));
        prop_assert_eq!(closure_intervals(&c), c.clone());
        prop_assert_eq!(c.complement().complement(), c);
    }

    #[test]
    fn open_intervals_are_intersection_closed(a in endpoint(), b in endpoint(), c in endpoint(), d in endpoint()) {
        let mk = |x: Ext<Q>, y: Ext<Q>| if x < y { Interval::open(x, y).ok() } else { Interval::open(y, x).ok() };
        if let (Some(u), Some(v)) = (mk(a, b), mk(c, d)) {
            let s = IntervalSet::from(u).intersection(&IntervalSet::from(v));
            prop_assert!(s.is_empty() || s.as_open_interval().is_some());
        }
    }
}
