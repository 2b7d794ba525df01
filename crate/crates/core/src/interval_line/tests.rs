use super::*;
use num_rational::Rational64;

type Q = Rational64;

fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

fn f(n: i64, d: i64) -> Ext<Q> {
    Ext::Finite(q(n, d))
}

fn open(lo: Ext<Q>, hi: Ext<Q>) -> IntervalSet<Q> {
    Interval::open(lo, hi).unwrap().into()
}

fn closed(lo: Q, hi: Q) -> IntervalSet<Q> {
    Interval::closed(lo, hi).unwrap().into()
}

#[test]
fn interval_validation() {
    assert!(Interval::new(Ext::NegInf, true, f(0, 1), false).is_err());
    assert!(Interval::open(f(1, 1), f(1, 1)).is_err());
    assert!(Interval::open(f(2, 1), f(1, 1)).is_err());
    assert!(Interval::<Q>::open(Ext::PosInf, Ext::PosInf).is_err());
    assert!(Interval::closed(q(1, 1), q(1, 1)).is_ok());
}

#[test]
fn membership_examples() {
    let unit = open(f(0, 1), f(1, 1));
    assert!(unit.contains(&f(1, 2)));
    assert!(!unit.contains(&f(1, 1)));
    assert!(!IntervalSet::<Q>::whole().contains(&Ext::PosInf));

    let g = closed(q(1, 2), q(3, 2));
    assert!(g.subset_of(&open(f(1, 4), f(7, 4))));
    assert!(g.subset_of(&open(Ext::NegInf, f(2, 1))));
    assert!(!g.subset_of(&open(f(1, 2), f(2, 1))));

    assert!(!unit.intersects(&open(f(1, 1), f(2, 1))));
    assert!(!closed(q(0, 1), q(1, 1)).intersects(&open(f(1, 1), f(2, 1))));
    assert!(closed(q(0, 1), q(1, 1)).intersects(&closed(q(1, 1), q(2, 1))));
}

#[test]
fn normalization() {
    let s = IntervalSet::new(vec![
        Interval::open(f(1, 1), f(2, 1)).unwrap(),
        Interval::open(f(0, 1), f(1, 1)).unwrap(),
    ]);
    assert_eq!(s.components().len(), 2);
    let s = s.union(&closed(q(1, 1), q(1, 1)));
    assert_eq!(s, open(f(0, 1), f(2, 1)));
    let s = IntervalSet::new(vec![
        Interval::new(f(0, 1), false, f(1, 1), true).unwrap(),
        Interval::open(f(1, 1), f(3, 1)).unwrap(),
        Interval::open(f(2, 1), f(5, 2)).unwrap(),
    ]);
    assert_eq!(s, open(f(0, 1), f(3, 1)));
    assert_eq!(IntervalSet::new(s.components().to_vec()), s);
}

#[test]
fn complement_examples() {
    assert!(IntervalSet::<Q>::whole().complement().is_empty());
    assert_eq!(IntervalSet::<Q>::empty().complement(), IntervalSet::whole());
    let c = open(f(0, 1), f(1, 1)).complement();
    assert_eq!(
        c,
        IntervalSet::new(vec![
            Interval::new(Ext::NegInf, false, f(0, 1), true).unwrap(),
            Interval::new(f(1, 1), true, Ext::PosInf, false).unwrap(),
        ])
    );
    assert_eq!(c.complement(), open(f(0, 1), f(1, 1)));
    let ray = open(Ext::NegInf, f(0, 1)).complement();
    assert_eq!(
        ray,
        IntervalSet::from(Interval::new(f(0, 1), true, Ext::PosInf, false).unwrap())
    );
}

#[test]
fn closure_examples() {
    assert_eq!(
        closure_intervals(&open(f(0, 1), f(1, 1))),
        closed(q(0, 1), q(1, 1))
    );
    let g = closed(q(1, 2), q(3, 2));
    assert_eq!(closure_intervals(&g), g);
    let s = open(Ext::NegInf, f(0, 1)).union(&open(f(2, 1), f(3, 1)));
    let expect = IntervalSet::new(vec![
        Interval::new(Ext::NegInf, false, f(0, 1), true).unwrap(),
        Interval::closed(q(2, 1), q(3, 1)).unwrap(),
    ]);
    assert_eq!(closure_intervals(&s), expect);
    let punctured = open(f(0, 1), f(1, 1)).union(&open(f(1, 1), f(2, 1)));
    assert_eq!(closure_intervals(&punctured), closed(q(0, 1), q(2, 1)));
}

#[test]
fn display() {
    let s = open(Ext::NegInf, f(0, 1)).union(&closed(q(1, 2), q(3, 2)));
    assert_eq!(s.to_string(), "(-inf,0)∪[1/2,3/2]");
    assert_eq!(IntervalSet::<Q>::empty().to_string(), "∅");
}

#[test]
fn novietoris_examples() {
    let g = closed(q(1, 2), q(3, 2));
    let v = open(f(0, 1), f(2, 1));
    let us = [open(f(0, 1), f(1, 1)), open(f(1, 1), f(2, 1))];
    assert_eq!(novietoris_witness(&v, &us).unwrap(), g);
    assert_eq!(novietoris_witness(&IntervalSet::whole(), &[]).unwrap(), g);

    assert!(matches!(
        novietoris_witness(&open(f(1, 1), f(2, 1)), &[]),
        Err(Error::Precondition(_))
    ));
    assert!(matches!(
        novietoris_witness(&v, &[open(f(2, 1), f(3, 1))]),
        Err(Error::Precondition(_))
    ));
    assert!(matches!(
        novietoris_witness(&closed(q(0, 1), q(2, 1)), &[]),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn novietoris_suite_is_seeded() {
    let a = novietoris_sample_suite(7, 200);
    assert_eq!(a.passed, 200);
    assert_eq!(a.failure, None);
    assert_eq!(a, novietoris_sample_suite(7, 200));
}

/// All open intervals with endpoints on `grid`, plus the rays and the line.
fn p_members(grid: &[Q]) -> Vec<IntervalSet<Q>> {
    let mut ends: Vec<Ext<Q>> = vec![Ext::NegInf];
    ends.extend(grid.iter().map(|&g| Ext::Finite(g)));
    ends.push(Ext::PosInf);
    let mut out = Vec::new();
    for (i, lo) in ends.iter().enumerate() {
        for hi in &ends[i + 1..] {
            out.push(open(*lo, *hi));
        }
    }
    out
}

fn brute_pair(x: &Ext<Q>, u: &IntervalSet<Q>, members: &[IntervalSet<Q>]) -> bool {
    members.iter().any(|w| {
        let rest = w.complement();
        rest.subset_of(u) && members.iter().any(|v| v.contains(x) && v.subset_of(&rest))
    })
}

#[test]
fn notpreg_examples() {
    assert!(notpreg_witness(&f(0, 1), &open(f(-1, 1), f(1, 1))).unwrap());
    assert!(!notpreg_witness(&f(0, 1), &IntervalSet::whole()).unwrap());
    // W = (-∞,-1), V = (-1,+∞)
    assert!(!notpreg_witness(&f(0, 1), &open(f(-2, 1), Ext::PosInf)).unwrap());
    assert!(!notpreg_witness(&f(0, 1), &open(Ext::NegInf, f(1, 3))).unwrap());
    assert!(matches!(
        notpreg_witness(&f(5, 1), &open(f(-1, 1), f(1, 1))),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn notpreg_agrees_with_grid_search() {
    // quarter grid for V, W; x and the ends of U on the half grid, so the
    // grid always has points strictly between them
    let grid: Vec<Q> = (-16..=16).map(|k| q(k, 4)).collect();
    let members = p_members(&grid);
    let half: Vec<Ext<Q>> = (-6..=6).map(|k| f(k, 2)).collect();
    let mut ends = vec![Ext::NegInf];
    ends.extend(half.iter().copied());
    ends.push(Ext::PosInf);
    for (i, lo) in ends.iter().enumerate() {
        for hi in &ends[i + 1..] {
            let u = open(*lo, *hi);
            for x in half.iter().filter(|x| u.contains(x)) {
                let expected = !brute_pair(x, &u, &members);
                assert_eq!(notpreg_witness(x, &u).unwrap(), expected, "x={x} U={u}");
            }
        }
    }
}
