use num_rational::Rational64;
use num_traits::Num;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Ext, Interval, IntervalSet};
use crate::error::{Error, Result};

fn two<T: Num>() -> T {
    T::one() + T::one()
}

/// The two points `1/2` and `3/2` of `F`.
pub fn novietoris_points<T: Num + Clone>() -> (T, T) {
    let half = T::one() / two();
    let three_halves = half.clone() + T::one();
    (half, three_halves)
}

/// Checks that `V⁺ ∩ U_1⁻ ∩ .. ∩ U_k⁻` is a neighbourhood of `F = {1/2, 3/2}`
/// and returns `G = [1/2, 3/2]`, verified to lie in it while escaping
/// `((0,1) ∪ (1,2))⁺`.
pub fn novietoris_witness<T: Num + Clone + Ord>(
    v: &IntervalSet<T>,
    us: &[IntervalSet<T>],
) -> Result<IntervalSet<T>> {
    let (a, b) = novietoris_points::<T>();
    let f = IntervalSet::new(vec![Interval::point(a.clone()), Interval::point(b.clone())]);
    if v.as_open_interval().is_none() {
        return Err(Error::Precondition("V is not an open interval".into()));
    }
    if !f.subset_of(v) {
        return Err(Error::Precondition("F is not contained in V".into()));
    }
    for (i, u) in us.iter().enumerate() {
        if u.as_open_interval().is_none() {
            return Err(Error::Precondition(format!(
                "U_{i} is not an open interval"
            )));
        }
        if !u.intersects(&f) {
            return Err(Error::Precondition(format!("U_{i} misses F")));
        }
    }

    let g: IntervalSet<T> = Interval::closed(a, b)?.into();
    let one = Ext::Finite(T::one());
    let zero = Ext::Finite(T::zero());
    let punctured = IntervalSet::new(vec![
        Interval::open(zero, one.clone())?,
        Interval::open(one.clone(), Ext::Finite(two()))?,
    ]);
    let checks = [
        (g.is_closed(), "G is not closed"),
        (g.subset_of(v), "G is not contained in V"),
        (us.iter().all(|u| g.intersects(u)), "G misses some U_i"),
        (g.contains(&one), "1 is not in G"),
        (!punctured.contains(&one), "1 lies in (0,1)∪(1,2)"),
        (!g.subset_of(&punctured), "G lies in (0,1)∪(1,2)"),
        (f.subset_of(&punctured), "F escapes (0,1)∪(1,2)"),
    ];
    if let Some((_, msg)) = checks.iter().find(|(ok, _)| !ok) {
        return Err(Error::WitnessFailed(msg.to_string()));
    }
    Ok(g)
}

/// Outcome of the randomized neighbourhood driver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleSuite {
    pub seed: u64,
    pub samples: usize,
    pub passed: usize,
    /// First failing sample, rendered.
    pub failure: Option<String>,
}

fn positive(rng: &mut ChaCha8Rng) -> Rational64 {
    Rational64::new(rng.random_range(1..=64), rng.random_range(1..=16))
}

/// `count` seeded subbasic neighbourhoods `V⁺ ∩ U_1⁻ ∩ .. ∩ U_k⁻` of `F`,
/// each checked with [`novietoris_witness`].
pub fn novietoris_sample_suite(seed: u64, count: usize) -> SampleSuite {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (a, b) = novietoris_points::<Rational64>();
    let mut passed = 0;
    let mut failure = None;
    for _ in 0..count {
        let lo = if rng.random_bool(0.2) {
            Ext::NegInf
        } else {
            Ext::Finite(a - positive(&mut rng))
        };
        let hi = if rng.random_bool(0.2) {
            Ext::PosInf
        } else {
            Ext::Finite(b + positive(&mut rng))
        };
        let v: IntervalSet<Rational64> =
            Interval::open(lo, hi).expect("lo < 1/2 < 3/2 < hi").into();
        let k = rng.random_range(0..=3);
        let us: Vec<IntervalSet<Rational64>> = (0..k)
            .map(|_| {
                let centre = if rng.random_bool(0.5) { a } else { b };
                let lo = if rng.random_bool(0.1) {
                    Ext::NegInf
                } else {
                    Ext::Finite(centre - positive(&mut rng))
                };
                let hi = if rng.random_bool(0.1) {
                    Ext::PosInf
                } else {
                    Ext::Finite(centre + positive(&mut rng))
                };
                Interval::open(lo, hi).expect("around a point of F").into()
            })
            .collect();
        match novietoris_witness(&v, &us) {
            Ok(_) => passed += 1,
            Err(e) if failure.is_none() => {
                let us: Vec<String> = us.iter().map(|u| u.to_string()).collect();
                failure = Some(format!("V={v} Us=[{}]: {e}", us.join(", ")));
            }
            Err(_) => {}
        }
    }
    SampleSuite {
        seed,
        samples: count,
        passed,
        failure,
    }
}

/// For `P` the open intervals `(α, β)`, `α < β` in `ℝ̄`: a pair `(V, W)` of
/// members of `P` with `x ∈ V ⊆ ℝ∖W ⊆ U`, if one exists.
///
/// `ℝ∖W` is empty, a closed ray, or the union of two closed rays. For
/// bounded `U` only `W = ℝ` fits inside it, leaving no room for `V`; for a
/// ray `U` the complement of a smaller open ray works; for `U = ℝ` any
/// bounded `W` away from `x` works.
pub fn p_regular_pair<T: Num + Clone + Ord>(
    x: &Ext<T>,
    u: &IntervalSet<T>,
) -> Result<Option<(Interval<T>, Interval<T>)>> {
    let Some(ui) = u.as_open_interval() else {
        return Err(Error::Precondition("U is not an open interval".into()));
    };
    if !ui.contains(x) {
        return Err(Error::Precondition("x is not in U".into()));
    }
    let xv = x.finite().expect("members of U are finite").clone();
    let fin = |v: T| Ext::Finite(v);
    let pair = match (ui.lo(), ui.hi()) {
        (Ext::Finite(_), Ext::Finite(_)) => None,
        (Ext::Finite(p), _) => {
            let b = (p.clone() + xv) / two();
            Some((
                Interval::open(fin(b.clone()), Ext::PosInf)?,
                Interval::open(Ext::NegInf, fin(b))?,
            ))
        }
        (_, Ext::Finite(q)) => {
            let b = (xv + q.clone()) / two();
            Some((
                Interval::open(Ext::NegInf, fin(b.clone()))?,
                Interval::open(fin(b), Ext::PosInf)?,
            ))
        }
        _ => {
            let one = T::one();
            Some((
                Interval::open(fin(xv.clone() - one.clone()), fin(xv.clone() + one.clone()))?,
                Interval::open(fin(xv.clone() + one.clone()), fin(xv + two::<T>() * one))?,
            ))
        }
    };
    if let Some((v, w)) = &pair {
        let v: IntervalSet<T> = v.clone().into();
        let rest = IntervalSet::from(w.clone()).complement();
        if !(v.contains(x) && v.subset_of(&rest) && rest.subset_of(u)) {
            return Err(Error::WitnessFailed(
                "constructed P-regularity pair fails".into(),
            ));
        }
    }
    Ok(pair)
}

/// True iff no `V, W ∈ P` give `x ∈ V ⊆ ℝ∖W ⊆ U`, i.e. `U` refutes
/// P-regularity at `x`.
pub fn notpreg_witness<T: Num + Clone + Ord>(x: &Ext<T>, u: &IntervalSet<T>) -> Result<bool> {
    Ok(p_regular_pair(x, u)?.is_none())
}
