#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Run {
    pub fn json(&self) -> Value {
        serde_json::from_str(&self.stdout)
            .unwrap_or_else(|e| panic!("bad JSON ({e}): {}", self.stdout))
    }
}

pub fn hyperlab(args: &[&str]) -> Run {
    hyperlab_env(args, &[])
}

pub fn hyperlab_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hyperlab"));
    cmd.args(args).env_remove("HYPERLAB_SEED");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("running hyperlab");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn fixture_str(name: &str) -> String {
    fixture(name).to_str().unwrap().to_owned()
}

pub fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

/// A JSON list of point lists, as a set.
pub fn sets(v: &Value) -> BTreeSet<Vec<u64>> {
    v.as_array()
        .expect("list of sets")
        .iter()
        .map(|s| {
            s.as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_u64().unwrap())
                .collect()
        })
        .collect()
}

pub fn lit(lists: &[&[u64]]) -> BTreeSet<Vec<u64>> {
    lists.iter().map(|l| l.to_vec()).collect()
}

/// A JSON list of families, as a set of sets.
pub fn families(v: &Value) -> BTreeSet<BTreeSet<Vec<u64>>> {
    v.as_array().unwrap().iter().map(sets).collect()
}

/// Whether some permutation of `0..n` carries the opens `a` onto `b`.
pub fn isomorphic(n: usize, a: &BTreeSet<Vec<u64>>, b: &BTreeSet<Vec<u64>>) -> bool {
    fn perms(n: usize) -> Vec<Vec<u64>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, (n - 1) as u64);
                out.push(q);
            }
        }
        out
    }
    a.len() == b.len()
        && perms(n).iter().any(|p| {
            a.iter().all(|s| {
                let mut img: Vec<u64> = s.iter().map(|&x| p[x as usize]).collect();
                img.sort();
                b.contains(&img)
            })
        })
}
