//! Nonnegative integer solutions of `sum c_i * a_i = target`.
//!
//! Both searches prune with prefix reachability tables, so a branch is only
//! entered when the remaining degree is representable by the generators that
//! are still available. This keeps the enumeration output-sensitive.

/// `tables[k][r]` is true when `r` is a nonnegative combination of `gens[..k]`.
fn prefix_reachability(gens: &[u64], target: u64) -> Vec<Vec<bool>> {
    let n = target as usize;
    let mut tables = Vec::with_capacity(gens.len() + 1);
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    tables.push(reach.clone());
    for &a in gens {
        let a = a as usize;
        for r in a..=n {
            if reach[r - a] {
                reach[r] = true;
            }
        }
        tables.push(reach.clone());
    }
    tables
}

/// Returns one factorization of `target`, chosen greedily: the last generator
/// gets the largest coefficient that still leaves a representable remainder,
/// then the next one, and so on.
pub fn greedy_factorization(gens: &[u64], target: u64) -> Option<Vec<u64>> {
    if gens.contains(&0) {
        return None;
    }
    let tables = prefix_reachability(gens, target);
    if !tables[gens.len()][target as usize] {
        return None;
    }
    let mut coeffs = vec![0u64; gens.len()];
    let mut rest = target;
    for k in (0..gens.len()).rev() {
        let a = gens[k];
        let mut c = rest / a;
        loop {
            if tables[k][(rest - c * a) as usize] {
                break;
            }
            // c = 0 always succeeds because tables[k + 1][rest] holds
            c -= 1;
        }
        coeffs[k] = c;
        rest -= c * a;
    }
    debug_assert_eq!(rest, 0);
    Some(coeffs)
}

/// All factorizations of `target`, in lexicographic order of coefficient
/// vectors.
pub fn all_factorizations(gens: &[u64], target: u64) -> Vec<Vec<u64>> {
    if gens.is_empty() || gens.contains(&0) {
        return if target == 0 && gens.is_empty() {
            vec![vec![]]
        } else {
            Vec::new()
        };
    }
    let tables = prefix_reachability(gens, target);
    let mut out = Vec::new();
    let mut current = vec![0u64; gens.len()];
    descend(gens, &tables, gens.len(), target, &mut current, &mut out);
    out.sort();
    out
}

fn descend(
    gens: &[u64],
    tables: &[Vec<bool>],
    k: usize,
    rest: u64,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if k == 0 {
        if rest == 0 {
            out.push(current.clone());
        }
        return;
    }
    if !tables[k][rest as usize] {
        return;
    }
    let a = gens[k - 1];
    for c in (0..=rest / a).rev() {
        let r = rest - c * a;
        if tables[k - 1][r as usize] {
            current[k - 1] = c;
            descend(gens, tables, k - 1, r, current, out);
        }
    }
    current[k - 1] = 0;
}
