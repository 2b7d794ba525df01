//! Subcommands. Each returns the text for stdout and an exit code; errors
//! map to exit code 2 in `main`.

use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hyperlab_core::propositions::{
    check, reproduce, search_counterexamples, CheckReport, PregVariant, Scope, SearchConfig,
    T1Condition, Verdict, DEFAULT_SEED,
};
use hyperlab_core::topology::enumerate_topologies;
use hyperlab_core::{FiniteTopology, HyperSpace, SetFamily};
use serde::Serialize;

use crate::docs::{load, save, FamilyDocument, SpaceDocument, SubbaseDocument};

#[derive(Parser, Debug)]
#[command(
    name = "hyperlab",
    version,
    about = "Finite-model engine for hyperspace topologies"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a hypertopology on a family of subsets of a space.
    Classify {
        space: PathBuf,
        family: PathBuf,
        /// `vietoris`, `upper`, `lower` or `subbase:<file>`
        hypertopology: String,
    },
    /// Run a proposition driver or reproduce an example.
    Check {
        id: String,
        #[arg(long, default_value_t = 3)]
        max_points: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        random_count: usize,
        #[arg(long, value_enum)]
        t1_condition: Option<T1Arg>,
        #[arg(long, value_enum)]
        preg_variant: Option<PregArg>,
    },
    /// Search for counterexamples to an implication. `HYPERLAB_SEED`
    /// overrides the seeds in the configuration.
    Search { config: PathBuf },
    /// Enumerate all topologies on `n` points.
    Enumerate {
        n: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Recompute a worked example.
    Reproduce {
        id: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum T1Arg {
    Complements,
    Star,
    DoubleStar,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum PregArg {
    Exact,
    Relaxed,
}

impl From<T1Arg> for T1Condition {
    fn from(a: T1Arg) -> Self {
        match a {
            T1Arg::Complements => T1Condition::Complements,
            T1Arg::Star => T1Condition::Star,
            T1Arg::DoubleStar => T1Condition::DoubleStar,
        }
    }
}

impl From<PregArg> for PregVariant {
    fn from(a: PregArg) -> Self {
        match a {
            PregArg::Exact => PregVariant::Exact,
            PregArg::Relaxed => PregVariant::Relaxed,
        }
    }
}

pub struct Output {
    pub stdout: String,
    pub code: u8,
    pub elapsed: Option<Duration>,
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn report_output(r: &CheckReport) -> Result<Output> {
    Ok(Output {
        stdout: json(r)?,
        code: if r.verdict == Verdict::Fail { 1 } else { 0 },
        elapsed: Some(r.elapsed),
    })
}

pub fn run(cli: Cli) -> Result<Output> {
    match cli.command {
        Command::Classify {
            space,
            family,
            hypertopology,
        } => {
            let c = classify(&space, &family, &hypertopology)?;
            Ok(Output {
                stdout: json(&c)?,
                code: 0,
                elapsed: None,
            })
        }
        Command::Check {
            id,
            max_points,
            n,
            seed,
            random_count,
            t1_condition,
            preg_variant,
        } => {
            let scope = Scope {
                max_points,
                n,
                seed,
                random_count,
                t1_condition: t1_condition.map(Into::into),
                preg_variant: preg_variant.map(Into::into),
            };
            report_output(&check(&id, &scope)?)
        }
        Command::Search { config } => {
            let mut cfg: SearchConfig = load(&config)?;
            if let Ok(s) = std::env::var("HYPERLAB_SEED") {
                let seed = s
                    .parse()
                    .with_context(|| format!("HYPERLAB_SEED={s:?} is not a u64"))?;
                cfg = cfg.with_seed(seed);
            }
            report_output(&search_counterexamples(&cfg)?)
        }
        Command::Enumerate { n, output } => {
            let ts = enumerate_topologies(n)?;
            if let Some(path) = output {
                let docs: Vec<SpaceDocument> =
                    ts.iter().map(SpaceDocument::from_topology).collect();
                save(&path, &docs)?;
            }
            Ok(Output {
                stdout: format!("{}\n", ts.len()),
                code: 0,
                elapsed: None,
            })
        }
        Command::Reproduce { id, seed } => {
            let name = id.strip_prefix("example-").unwrap_or(&id);
            report_output(&reproduce(name, seed)?)
        }
    }
}

/// Output of `classify`. Families are lists of sets, sets lists of points.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct ClassifyReport {
    pub points: usize,
    pub family: Vec<Vec<usize>>,
    pub natural_family: bool,
    pub tychonoff_type: bool,
    pub lower_vietoris_type: bool,
    pub vietoris_type: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strong_vietoris_type: Option<bool>,
    pub b_o: Vec<Vec<usize>>,
    pub p_o: Vec<Vec<usize>>,
    pub t_plus: Vec<Vec<usize>>,
    pub t_minus: Vec<Vec<usize>>,
    pub t_o: Vec<Vec<usize>>,
    pub t_o_equals_t: bool,
    pub hyperspace_opens: Vec<Vec<Vec<usize>>>,
    pub separation: Separation,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    pub regular: bool,
    pub compact: bool,
}

pub fn build_hyperspace(t: &FiniteTopology, m: &SetFamily, hyper: &str) -> Result<HyperSpace> {
    Ok(match hyper {
        "vietoris" => HyperSpace::vietoris(t, m)?,
        "upper" => HyperSpace::upper_vietoris(t, m)?,
        "lower" => HyperSpace::lower_vietoris(t, m)?,
        other => {
            let Some(file) = other.strip_prefix("subbase:") else {
                bail!(
                    "hypertopology must be vietoris, upper, lower or subbase:<file>, got {other:?}"
                );
            };
            let doc: SubbaseDocument = load(Path::new(file))?;
            let sub = doc.to_families(t.ground_size())?;
            HyperSpace::from_subbase(m.clone(), &sub)?.with_base(Some(t.clone()))
        }
    })
}

pub fn classify(space: &Path, family: &Path, hyper: &str) -> Result<ClassifyReport> {
    let t = load::<SpaceDocument>(space)?.to_topology()?;
    let m = load::<FamilyDocument>(family)?.to_family(t.ground_size())?;
    let h = build_hyperspace(&t, &m, hyper)?;
    let c = h.classify()?;
    let d = &c.derived;
    let o = h.topology();
    Ok(ClassifyReport {
        points: t.ground_size(),
        family: m.to_point_lists(),
        natural_family: hyperlab_core::hyperspace::is_natural_family(&m),
        tychonoff_type: c.tychonoff_type,
        lower_vietoris_type: c.lower_vietoris_type,
        vietoris_type: c.vietoris_type,
        strong_vietoris_type: c.strong_vietoris_type,
        b_o: d.b_family.to_point_lists(),
        p_o: d.p_family.to_point_lists(),
        t_plus: d.t_plus.opens().to_point_lists(),
        t_minus: d.t_minus.opens().to_point_lists(),
        t_o: d.t_v.opens().to_point_lists(),
        t_o_equals_t: d.t_v == t,
        hyperspace_opens: h
            .open_families()
            .iter()
            .map(SetFamily::to_point_lists)
            .collect(),
        separation: Separation {
            t0: o.is_t0(),
            t1: o.is_t1(),
            t2: o.is_t2(),
            regular: o.is_regular(),
            compact: o.is_compact(),
        },
    })
}
