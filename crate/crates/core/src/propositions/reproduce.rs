use std::time::Instant;

use super::{CheckReport, Outcome, Tally, Witness};
use crate::error::{Error, Result};
use crate::hyperspace::HyperSpace;
use crate::interval_line::{
    notpreg_witness, novietoris_sample_suite, novietoris_witness, Ext, Interval, IntervalSet,
};
use crate::setcore::{SetFamily, Subset};
use crate::topology::FiniteTopology;
use crate::Rational64;

pub const EXAMPLE_IDS: &[&str] = &["example-novt", "example-novt1", "example-novietoris"];

/// Number of sampled neighbourhoods in the real-line suite.
pub const NOVIETORIS_SAMPLES: usize = 200;

type Sets = &'static [&'static [usize]];
type Families = &'static [Sets];

/// Data displayed for a worked 3-point example.
#[derive(Debug)]
pub struct Fixture {
    pub id: &'static str,
    pub points: usize,
    pub opens: Sets,
    pub closed: Sets,
    /// `{A⁻ : A ∈ T}`
    pub minus_subbase: Families,
    pub lower: Families,
    /// `{A⁺ : A ∈ T}`
    pub plus_base: Families,
    pub upper: Families,
    /// Vietoris opens beyond `lower ∪ upper`.
    pub vietoris_extra: Families,
    /// `(A, A⁺, A⁻)` for every `A ⊆ X`
    pub lifts: &'static [(&'static [usize], Sets, Sets)],
    pub b_o: Sets,
    pub p_o: Sets,
    /// Named relations between the induced topologies, with their truth value.
    pub claims: &'static [(&'static str, bool)],
}

const X: &[usize] = &[0, 1, 2];
const CL_NOVT: Sets = &[X, &[1], &[1, 2]];
const CL_NOVT1: Sets = &[X, &[1, 2], &[1], &[0], &[0, 1]];

static FIXTURES: [Fixture; 2] = [
    Fixture {
        id: "novt",
        points: 3,
        opens: &[&[], X, &[0], &[0, 2]],
        closed: CL_NOVT,
        minus_subbase: &[&[], CL_NOVT, &[X], &[&[1, 2], X]],
        lower: &[&[], CL_NOVT, &[X], &[&[1, 2], X]],
        plus_base: &[&[], CL_NOVT],
        upper: &[&[], CL_NOVT],
        vietoris_extra: &[],
        lifts: &[
            (&[], &[], &[]),
            (X, CL_NOVT, CL_NOVT),
            (&[0], &[], &[X]),
            (&[1], &[&[1]], CL_NOVT),
            (&[2], &[], &[X, &[1, 2]]),
            (&[0, 1], &[&[1]], CL_NOVT),
            (&[0, 2], &[], &[X, &[1, 2]]),
            (&[1, 2], &[&[1], &[1, 2]], CL_NOVT),
        ],
        b_o: &[&[], X, &[0], &[2], &[0, 2]],
        p_o: &[&[], X, &[0], &[1], &[2], &[0, 1], &[0, 2], &[1, 2]],
        claims: &[
            ("T0", true),
            ("vietoris-type", true),
            ("strong", false),
            ("T+ = T-", false),
            ("T = T-", false),
            ("T = T+", false),
            ("T = T_O", false),
            ("B_O ⊆ P_O", true),
            ("T_O = T-", true),
        ],
    },
    Fixture {
        id: "novt1",
        points: 3,
        opens: &[&[], X, &[0], &[0, 2], &[1, 2], &[2]],
        closed: CL_NOVT1,
        minus_subbase: &[
            &[],
            CL_NOVT1,
            &[X, &[0], &[0, 1]],
            &[X, &[0], &[0, 1], &[1, 2]],
            &[&[1], &[0, 1], X, &[1, 2]],
            &[X, &[1, 2]],
        ],
        lower: &[
            &[],
            CL_NOVT1,
            &[X, &[0], &[0, 1]],
            &[X, &[0], &[0, 1], &[1, 2]],
            &[X, &[1], &[0, 1], &[1, 2]],
            &[X, &[1, 2]],
            &[X, &[0, 1]],
            &[X],
            &[X, &[0, 1], &[1, 2]],
        ],
        plus_base: &[&[], CL_NOVT1, &[&[0]], &[&[1], &[1, 2]]],
        upper: &[
            &[],
            CL_NOVT1,
            &[&[0]],
            &[&[1], &[1, 2]],
            &[&[0], &[1], &[1, 2]],
        ],
        vietoris_extra: &[
            &[&[1, 2]],
            &[&[0], &[1, 2]],
            &[X, &[0], &[1, 2]],
            &[X, &[0]],
            &[X, &[1], &[1, 2]],
            &[X, &[0], &[1], &[1, 2]],
        ],
        lifts: &[
            (&[], &[], &[]),
            (X, CL_NOVT1, CL_NOVT1),
            (&[0], &[&[0]], &[X, &[0], &[0, 1]]),
            (&[1], &[&[1]], &[X, &[1], &[0, 1], &[1, 2]]),
            (&[2], &[], &[X, &[1, 2]]),
            (&[0, 1], &[&[0], &[1], &[0, 1]], CL_NOVT1),
            (&[0, 2], &[&[0]], &[X, &[0], &[0, 1], &[1, 2]]),
            (&[1, 2], &[&[1], &[1, 2]], &[X, &[1], &[0, 1], &[1, 2]]),
        ],
        b_o: &[&[], X, &[0], &[2], &[0, 2], &[1, 2]],
        p_o: &[&[], X, &[0], &[2], &[1, 2], &[0, 2], &[1], &[0, 1]],
        claims: &[
            ("T0", true),
            ("vietoris-type", true),
            ("strong", false),
            ("T+ = T-", false),
            ("T = B_O", true),
            ("T = T+", true),
            ("T = T-", false),
            ("T+ ⊆ T-", true),
            ("T_O = T-", true),
        ],
    },
];

/// Embedded data of the 3-point examples.
pub fn fixtures() -> &'static [Fixture] {
    &FIXTURES
}

/// Recomputes an example and compares it with its embedded data, one
/// instance per displayed value.
pub fn reproduce(example: &str, seed: u64) -> Result<CheckReport> {
    let start = Instant::now();
    let id = format!("example-{example}");
    if example == "novietoris" {
        let (tally, notes) = novietoris(seed)?;
        return Ok(tally.into_report(&id, Some(seed), notes, start.elapsed()));
    }
    let fx = FIXTURES
        .iter()
        .find(|f| f.id == example)
        .ok_or_else(|| Error::InvalidParameter(format!("unknown example {example:?}")))?;
    let (tally, notes) = finite_example(fx)?;
    Ok(tally.into_report(&id, None, notes, start.elapsed()))
}

fn family(g: usize, sets: Sets) -> Result<SetFamily> {
    SetFamily::from_point_lists(g, sets)
}

fn families(g: usize, fs: Families) -> Result<Vec<SetFamily>> {
    let mut v: Vec<SetFamily> = fs.iter().map(|f| family(g, f)).collect::<Result<_>>()?;
    v.sort();
    v.dedup();
    Ok(v)
}

fn sorted(mut v: Vec<SetFamily>) -> Vec<SetFamily> {
    v.sort();
    v.dedup();
    v
}

fn show(v: &[SetFamily]) -> String {
    let parts: Vec<String> = v.iter().map(|f| f.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

struct Compare<'a> {
    tally: Tally,
    notes: Vec<String>,
    t: &'a FiniteTopology,
    h: &'a HyperSpace,
}

impl Compare<'_> {
    fn check(&mut self, what: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.notes
            .push(format!("{what}: {}", if ok { "match" } else { "MISMATCH" }));
        let o = Outcome::from_conclusion(ok, detail);
        let (t, h) = (self.t, self.h);
        self.tally
            .record(o, |d| Witness::hyper(t, h, format!("{what}: {d}")));
    }

    fn families(&mut self, what: &str, expected: Vec<SetFamily>, got: Vec<SetFamily>) {
        let got = sorted(got);
        let ok = expected == got;
        self.check(what, ok, || {
            format!("expected {}, computed {}", show(&expected), show(&got))
        });
    }

    fn family(&mut self, what: &str, expected: SetFamily, got: SetFamily) {
        let ok = expected == got;
        self.check(what, ok, || format!("expected {expected}, computed {got}"));
    }
}

fn finite_example(fx: &Fixture) -> Result<(Tally, Vec<String>)> {
    let g = fx.points;
    let t = FiniteTopology::new(family(g, fx.opens)?)?;
    let cl = t.closed_family();
    let h = HyperSpace::vietoris(&t, &cl)?;
    let lower = HyperSpace::lower_vietoris(&t, &cl)?;
    let upper = HyperSpace::upper_vietoris(&t, &cl)?;
    let d = h.derive()?;
    let mut c = Compare {
        tally: Tally::default(),
        notes: Vec::new(),
        t: &t,
        h: &h,
    };

    c.family("CL(X)", family(g, fx.closed)?, cl.clone());
    let minus: Vec<SetFamily> = t
        .opens()
        .iter()
        .map(|a| h.decode(h.minus_index(a)))
        .collect();
    c.families(
        "lower subbase {A⁻ : A ∈ T}",
        families(g, fx.minus_subbase)?,
        minus,
    );
    c.families(
        "lower Vietoris",
        families(g, fx.lower)?,
        lower.open_families(),
    );
    let plus: Vec<SetFamily> = t
        .opens()
        .iter()
        .map(|a| h.decode(h.plus_index(a)))
        .collect();
    c.families("upper base {A⁺ : A ∈ T}", families(g, fx.plus_base)?, plus);
    c.families(
        "upper Vietoris",
        families(g, fx.upper)?,
        upper.open_families(),
    );
    let mut listed = families(g, fx.lower)?;
    listed.extend(families(g, fx.upper)?);
    listed.extend(families(g, fx.vietoris_extra)?);
    c.families("Vietoris", sorted(listed), h.open_families());

    for &(a, p, m) in fx.lifts {
        let a = Subset::from_points(g, a)?;
        c.family(&format!("{a}⁺"), family(g, p)?, h.decode(h.plus_index(a)));
        c.family(&format!("{a}⁻"), family(g, m)?, h.decode(h.minus_index(a)));
    }
    c.family("B_O", family(g, fx.b_o)?, d.b_family.clone());
    c.family("P_O", family(g, fx.p_o)?, d.p_family.clone());
    c.family("T+ = B_O", family(g, fx.b_o)?, d.t_plus.opens().clone());
    c.family("T- = P_O", family(g, fx.p_o)?, d.t_minus.opens().clone());

    let vt = h.is_vietoris_type()?;
    for &(claim, expected) in fx.claims {
        let got = match claim {
            "T0" => t.is_t0(),
            "vietoris-type" => vt,
            "strong" => h.is_strong_vietoris_type()?,
            "T+ = T-" => d.t_plus == d.t_minus,
            "T+ ⊆ T-" => d.t_plus.is_coarser_than(&d.t_minus),
            "B_O ⊆ P_O" => d.b_family.is_subfamily_of(&d.p_family),
            "T = B_O" => *t.opens() == d.b_family,
            "T = T+" => t == d.t_plus,
            "T = T-" => t == d.t_minus,
            "T = T_O" => t == d.t_v,
            "T_O = T-" => d.t_v == d.t_minus,
            other => return Err(Error::InvalidParameter(format!("unknown claim {other:?}"))),
        };
        c.check(claim, got == expected, || {
            format!("expected {expected}, computed {got}")
        });
    }
    Ok((c.tally, c.notes))
}

type Q = Rational64;

fn open(lo: Ext<Q>, hi: Ext<Q>) -> Result<IntervalSet<Q>> {
    Ok(Interval::open(lo, hi)?.into())
}

fn fin(n: i64, d: i64) -> Ext<Q> {
    Ext::Finite(Q::new(n, d))
}

fn line_witness(detail: String) -> Witness {
    Witness {
        points: 0,
        opens: Vec::new(),
        family: Vec::new(),
        hypertopology: Vec::new(),
        detail,
    }
}

fn novietoris(seed: u64) -> Result<(Tally, Vec<String>)> {
    let mut tally = Tally::default();
    let mut notes = Vec::new();
    let g: IntervalSet<Q> = Interval::closed(Q::new(1, 2), Q::new(3, 2))?.into();

    let cases = [
        (
            "V=(0,2), Us=[(0,1),(1,2)]",
            open(fin(0, 1), fin(2, 1))?,
            vec![open(fin(0, 1), fin(1, 1))?, open(fin(1, 1), fin(2, 1))?],
        ),
        ("V=(-inf,+inf), Us=[]", IntervalSet::whole(), Vec::new()),
    ];
    for (what, v, us) in cases {
        let o = match novietoris_witness(&v, &us) {
            Ok(w) => Outcome::from_conclusion(w == g, || format!("witness {w} differs from {g}")),
            Err(Error::WitnessFailed(m)) => Outcome::Fail(m),
            Err(e) => return Err(e),
        };
        notes.push(format!(
            "{what}: {}",
            if o == Outcome::Pass {
                "G=[1/2,3/2] verified"
            } else {
                "FAILED"
            }
        ));
        tally.record(o, |d| line_witness(format!("{what}: {d}")));
    }

    let suite = novietoris_sample_suite(seed, NOVIETORIS_SAMPLES);
    for _ in 0..suite.passed {
        tally.record(Outcome::Pass, line_witness);
    }
    for _ in suite.passed..suite.samples {
        let d = suite.failure.clone().unwrap_or_default();
        tally.record(Outcome::Fail(d), line_witness);
    }
    notes.push(format!(
        "sampled neighbourhoods: {}/{} verified (seed {seed})",
        suite.passed, suite.samples
    ));

    // intersections of open intervals on a grid stay open intervals or empty
    let mut ends = vec![Ext::NegInf];
    ends.extend((-4..=4).map(|k| fin(k, 2)));
    ends.push(Ext::PosInf);
    let mut intervals = Vec::new();
    for (i, lo) in ends.iter().enumerate() {
        for hi in &ends[i + 1..] {
            intervals.push(open(*lo, *hi)?);
        }
    }
    let closed_under = intervals.iter().all(|a| {
        intervals.iter().all(|b| {
            let c = a.intersection(b);
            c.is_empty() || c.as_open_interval().is_some()
        })
    });
    notes.push(format!(
        "intersections of {} grid intervals are intervals or empty: {closed_under}",
        intervals.len()
    ));
    tally.record(
        Outcome::from_conclusion(closed_under, || {
            "an intersection of open intervals is not an interval".into()
        }),
        line_witness,
    );

    let no_pair = notpreg_witness(&fin(0, 1), &open(fin(-1, 1), fin(1, 1))?)?;
    notes.push(format!("x=0, U=(-1,1) has no V, W: {no_pair}"));
    tally.record(
        Outcome::from_conclusion(no_pair, || "found V, W for x=0, U=(-1,1)".into()),
        line_witness,
    );
    Ok((tally, notes))
}
