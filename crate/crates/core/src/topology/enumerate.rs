use super::FiniteTopology;
use crate::error::{Error, Result};
use crate::setcore::{full_mask, SetFamily, Subset};

pub const MAX_PREORDER_POINTS: usize = 4;
pub const MAX_DIRECT_POINTS: usize = 4;

/// All labeled topologies on `n` points, via their specialization preorders.
///
/// Reflexive relations are visited in lexicographic order of their relation
/// matrices (row-major, off-diagonal entries, `0 < 1`); the transitive ones
/// are kept and mapped to their up-set topologies, with `N(x) = {y : x ≤ y}`.
pub fn enumerate_topologies(n: usize) -> Result<Vec<FiniteTopology>> {
    if !(1..=MAX_PREORDER_POINTS).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "preorder enumeration supports 1..={MAX_PREORDER_POINTS} points, got {n}"
        )));
    }
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let k = cells.len();
    let mut out = Vec::new();
    for code in 0u32..(1u32 << k) {
        let mut rows = vec![0u16; n];
        for (i, row) in rows.iter_mut().enumerate() {
            *row = 1 << i;
        }
        for (c, &(i, j)) in cells.iter().enumerate() {
            // first cell is the most significant digit
            if code & (1 << (k - 1 - c)) != 0 {
                rows[i] |= 1 << j;
            }
        }
        if is_transitive(&rows) {
            out.push(FiniteTopology::from_nbhd(n, rows));
        }
    }
    Ok(out)
}

fn is_transitive(rows: &[u16]) -> bool {
    rows.iter().all(|&r| {
        Subset::from_raw(rows.len(), r)
            .points()
            .all(|j| rows[j] & !r == 0)
    })
}

/// All labeled topologies on `n` points by filtering every family that
/// contains `∅` and the whole space, in increasing order of the family code.
pub fn enumerate_topologies_direct(n: usize) -> Result<Vec<FiniteTopology>> {
    if !(1..=MAX_DIRECT_POINTS).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "direct enumeration supports 1..={MAX_DIRECT_POINTS} points, got {n}"
        )));
    }
    let full = full_mask(n);
    let middle: Vec<u16> = (1..full).collect();
    let mut out = Vec::new();
    for code in 0u64..(1u64 << middle.len()) {
        let mut fam = SetFamily::empty(n)?;
        fam.insert(Subset::from_raw(n, 0));
        fam.insert(Subset::from_raw(n, full));
        for (i, &m) in middle.iter().enumerate() {
            if code & (1 << i) != 0 {
                fam.insert(Subset::from_raw(n, m));
            }
        }
        if closed_pairwise(&fam) {
            out.push(FiniteTopology::new(fam)?);
        }
    }
    Ok(out)
}

/// Pairwise union/intersection test, independent of the neighbourhood machinery.
fn closed_pairwise(fam: &SetFamily) -> bool {
    let members = fam.to_vec();
    members.iter().all(|&a| {
        members
            .iter()
            .all(|&b| fam.contains(a.union(b)) && fam.contains(a.intersection(b)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn opens_set(ts: &[FiniteTopology]) -> BTreeSet<SetFamily> {
        ts.iter().map(|t| t.opens().clone()).collect()
    }

    #[test]
    fn counts_agree_between_strategies() {
        for n in 1..=4 {
            let pre = enumerate_topologies(n).unwrap();
            let direct = enumerate_topologies_direct(n).unwrap();
            assert_eq!(pre.len(), direct.len(), "n = {n}");
            assert_eq!(opens_set(&pre), opens_set(&direct), "n = {n}");
            assert_eq!(opens_set(&pre).len(), pre.len(), "duplicates at n = {n}");
        }
    }

    #[test]
    fn frozen_counts() {
        // values produced by the two strategies above
        let counts: Vec<usize> = (1..=4)
            .map(|n| enumerate_topologies(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 4, 29, 355]);
    }

    #[test]
    fn deterministic_order() {
        let a = enumerate_topologies(3).unwrap();
        let b = enumerate_topologies(3).unwrap();
        assert_eq!(a, b);
        // code 0 is the identity relation: discrete comes first, indiscrete last
        assert_eq!(a.first().unwrap(), &FiniteTopology::discrete(3).unwrap());
        assert_eq!(a.last().unwrap(), &FiniteTopology::indiscrete(3).unwrap());
    }

    #[test]
    fn range_checks() {
        assert!(enumerate_topologies(0).is_err());
        assert!(enumerate_topologies(5).is_err());
        assert!(enumerate_topologies_direct(5).is_err());
    }
}
