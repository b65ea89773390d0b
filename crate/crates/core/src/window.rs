// SPDX-License-Identifier: Apache-2.0

//! Exhaustive counting over finite windows `[0, limit)`.
//!
//! Each part is given by its elements below the window limit, ascending.

/// Number of ways each `n < limit` is a sum of one element per part,
/// saturating at 2.
pub(crate) fn count_representations(parts: &[Vec<usize>], limit: usize) -> Vec<u8> {
    let mut counts = vec![0u8; limit];
    if limit == 0 {
        return counts;
    }
    counts[0] = 1;
    let mut support = vec![0usize];
    for part in parts {
        let mut next = vec![0u8; limit];
        let mut next_support = Vec::new();
        for &p in &support {
            let c = counts[p];
            for &e in part {
                let s = p + e;
                if s >= limit {
                    break;
                }
                if next[s] == 0 {
                    next_support.push(s);
                }
                next[s] = next[s].saturating_add(c).min(2);
            }
        }
        next_support.sort_unstable();
        counts = next;
        support = next_support;
    }
    counts
}

/// Up to `max` representations of `n`, as one chosen element per part.
///
/// Representations come out in colexicographic order: the last part varies
/// slowest.
pub(crate) fn representations(parts: &[Vec<usize>], n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if parts.is_empty() {
        if n == 0 && max > 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut current = vec![0usize; parts.len()];
    collect(parts, parts.len() - 1, n, &mut current, &mut out, max);
    out
}

fn collect(
    parts: &[Vec<usize>],
    idx: usize,
    remaining: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    max: usize,
) {
    if out.len() >= max {
        return;
    }
    if idx == 0 {
        if parts[0].binary_search(&remaining).is_ok() {
            current[0] = remaining;
            out.push(current.clone());
        }
        return;
    }
    for &e in &parts[idx] {
        if e > remaining || out.len() >= max {
            break;
        }
        current[idx] = e;
        collect(parts, idx - 1, remaining - e, current, out, max);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_saturate() {
        let parts = vec![vec![0, 1], vec![0, 1]];
        assert_eq!(count_representations(&parts, 4), vec![1, 2, 1, 0]);
    }

    #[test]
    fn colex_order() {
        let parts = vec![vec![0, 1], vec![0, 1]];
        assert_eq!(representations(&parts, 1, 10), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn empty_family_represents_only_zero() {
        assert_eq!(representations(&[], 0, 5), vec![Vec::<usize>::new()]);
        assert!(representations(&[], 3, 5).is_empty());
        assert_eq!(count_representations(&[], 3), vec![1, 0, 0]);
    }
}
