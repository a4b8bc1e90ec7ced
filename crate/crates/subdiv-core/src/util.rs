//! Small shared helpers for the constructors.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Path;

/// Largest subset of `nodes` in which `connected` holds for every pair,
/// by branch and bound over the node list in order (so the result is
/// deterministic and, among maximum subsets, the lexicographically first).
/// The constructors call this with at most a few dozen nodes.
pub(crate) fn max_pairwise_connected<F>(nodes: &[usize], connected: F) -> Vec<usize>
where
    F: Fn(usize, usize) -> bool,
{
    fn extend<F: Fn(usize, usize) -> bool>(
        nodes: &[usize],
        connected: &F,
        start: usize,
        current: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        if current.len() + (nodes.len() - start) <= best.len() {
            return; // cannot beat the incumbent
        }
        for idx in start..nodes.len() {
            let v = nodes[idx];
            if current.iter().all(|&u| connected(u, v)) {
                current.push(v);
                extend(nodes, connected, idx + 1, current, best);
                current.pop();
            }
        }
    }
    let mut best = Vec::new();
    extend(nodes, &connected, 0, &mut Vec::new(), &mut best);
    best
}

/// Removes any cycles created at concatenation seams: whenever a vertex
/// repeats, the stretch between its occurrences is cut out. Consecutive
/// adjacency survives the cut because both occurrences are the same vertex.
pub(crate) fn splice_repeats(path: Path) -> Path {
    let mut out: Vec<usize> = vec![];
    for v in path {
        if let Some(pos) = out.iter().position(|&u| u == v) {
            out.truncate(pos);
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn max_clique_on_pair_relation() {
        // 1-2-3 mutually connected, 0 isolated.
        let conn = |u: usize, v: usize| u != 0 && v != 0 && u != v;
        assert_eq!(max_pairwise_connected(&[0, 1, 2, 3], conn), vec![1, 2, 3]);
    }

    #[test]
    fn max_clique_prefers_lex_first_among_ties() {
        let conn = |u: usize, v: usize| (u < 2 && v < 2) || (u >= 2 && v >= 2);
        assert_eq!(max_pairwise_connected(&[0, 1, 2, 3], conn), vec![0, 1]);
    }

    #[test]
    fn splice_cuts_cycles() {
        assert_eq!(splice_repeats(vec![0, 1, 2, 1, 3]), vec![0, 1, 3]);
        assert_eq!(splice_repeats(vec![0, 1, 2, 3]), vec![0, 1, 2, 3]);
        assert_eq!(splice_repeats(vec![5, 6, 5]), vec![5]);
    }
}
