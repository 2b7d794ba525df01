//! Subsets, families of subsets, and the elementary hyperspace operators.
//!
//! For a family `M` and a set `A`, the plus-set `A⁺_M` collects the members of
//! `M` contained in `A` and the minus-set `A⁻_M` collects those meeting `A`.

mod family;
mod subset;

use std::collections::BTreeSet;

pub use family::SetFamily;
pub use subset::{Subset, MAX_GROUND};

pub(crate) use family::check_same;
pub(crate) use subset::{check_ground, full_mask};

use crate::error::{Error, Result};

/// `{m ∈ M : m ⊆ A}`.
pub fn plus_sets(a: Subset, m: &SetFamily) -> Result<SetFamily> {
    m.check_member(a)?;
    Ok(m.filter(|s| s.is_subset_of(a)))
}

/// `{m ∈ M : m ∩ A ≠ ∅}`.
pub fn minus_sets(a: Subset, m: &SetFamily) -> Result<SetFamily> {
    m.check_member(a)?;
    Ok(m.filter(|s| s.intersects(a)))
}

/// `{A⁺_M : A ∈ F}` with duplicates collapsed, in canonical order.
pub fn lift_plus(f: &SetFamily, m: &SetFamily) -> Result<Vec<SetFamily>> {
    f.check_compatible(m)?;
    let out: BTreeSet<SetFamily> = f.iter().map(|a| m.filter(|s| s.is_subset_of(a))).collect();
    Ok(out.into_iter().collect())
}

/// `{A⁻_M : A ∈ F}` with duplicates collapsed, in canonical order.
pub fn lift_minus(f: &SetFamily, m: &SetFamily) -> Result<Vec<SetFamily>> {
    f.check_compatible(m)?;
    let out: BTreeSet<SetFamily> = f.iter().map(|a| m.filter(|s| s.intersects(a))).collect();
    Ok(out.into_iter().collect())
}

/// Nonempty subsets with at most `n` points.
pub fn fin_n(ground: usize, n: usize) -> Result<SetFamily> {
    if n < 1 {
        return Err(Error::InvalidParameter(format!(
            "fin_n needs n >= 1, got {n}"
        )));
    }
    SetFamily::from_subsets(
        ground,
        Subset::all(ground)?.filter(|s| !s.is_empty() && s.len() <= n),
    )
}

/// All nonempty finite subsets; on a finite ground set this is every nonempty subset.
pub fn fin(ground: usize) -> Result<SetFamily> {
    fin_n(ground, ground)
}

fn binary_closure(f: &SetFamily, op: impl Fn(Subset, Subset) -> Subset) -> Result<SetFamily> {
    if f.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mut out = f.clone();
    let mut members = f.to_vec();
    let mut next = 0;
    while next < members.len() {
        let s = members[next];
        next += 1;
        let mut i = 0;
        while i < members.len() {
            let t = op(s, members[i]);
            if out.insert(t) {
                members.push(t);
            }
            i += 1;
        }
    }
    Ok(out)
}

/// Smallest family containing `F` and closed under finite intersections.
pub fn intersection_closure(f: &SetFamily) -> Result<SetFamily> {
    binary_closure(f, Subset::intersection)
}

/// Smallest family containing `F` and closed under finite unions.
pub fn union_closure(f: &SetFamily) -> Result<SetFamily> {
    binary_closure(f, Subset::union)
}
