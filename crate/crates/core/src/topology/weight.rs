use crate::setcore::SetFamily;

/// Largest family for which the exact search is attempted.
pub const WEIGHT_CAP: usize = 20;

/// Minimum size of a subfamily `P' ⊆ P` such that every `x ∈ U ∈ P` has some
/// `V ∈ P'` with `x ∈ V ⊆ U`. `None` when `|P|` exceeds [`WEIGHT_CAP`].
pub fn weight(p: &SetFamily) -> Option<usize> {
    weight_witness(p).map(|w| w.len())
}

/// A subfamily attaining [`weight`]; the first one in combination order.
pub fn weight_witness(p: &SetFamily) -> Option<SetFamily> {
    let members = p.to_vec();
    if members.len() > WEIGHT_CAP {
        return None;
    }
    // each constraint is the mask of members usable for one (U, x) pair
    let mut constraints: Vec<u32> = members
        .iter()
        .flat_map(|&u| {
            let members = &members;
            u.points().map(move |x| {
                members
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| v.contains(x) && v.is_subset_of(u))
                    .fold(0u32, |acc, (i, _)| acc | (1 << i))
            })
        })
        .collect();
    constraints.sort_unstable();
    constraints.dedup();

    let to_family = |mask: u32| {
        let chosen = members
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &s)| s);
        SetFamily::from_subsets(p.ground_size(), chosen).expect("members share ground")
    };

    for k in 0..=members.len() {
        if let Some(mask) =
            combinations(members.len(), k).find(|&m| constraints.iter().all(|c| c & m != 0))
        {
            return Some(to_family(mask));
        }
    }
    unreachable!("the whole family always satisfies every constraint")
}

/// `k`-element subsets of `0..n` as bit masks, in lexicographic order.
fn combinations(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let mask = idx.iter().fold(0u32, |acc, &i| acc | (1 << i));
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(mask)
    })
}
