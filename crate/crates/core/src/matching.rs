//! Perfect matchings of small graphs given as vertex bitmask adjacency.
//!
//! Enumeration always branches on the smallest free vertex and tries its
//! partners in increasing order, so every listing is deterministic and
//! lexicographic.

use std::ops::ControlFlow;

use crate::combinat::PairIndex;

/// Adjacency bitmasks for `edges` on `n <= 64` vertices.
pub fn adjacency(n: usize, edges: &[PairIndex]) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for e in edges {
        adj[e.a()] |= 1 << e.b();
        adj[e.b()] |= 1 << e.a();
    }
    adj
}

/// Visits every perfect matching of the subgraph induced on `free`, as
/// lists of `(smaller, larger)` vertex pairs in branching order.
pub fn for_each_perfect_matching<B>(
    adj: &[u64],
    free: u64,
    f: &mut impl FnMut(&[(usize, usize)]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let mut cur = Vec::with_capacity(free.count_ones() as usize / 2);
    rec(adj, free, &mut cur, f)
}

fn rec<B>(
    adj: &[u64],
    free: u64,
    cur: &mut Vec<(usize, usize)>,
    f: &mut impl FnMut(&[(usize, usize)]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if free == 0 {
        return f(cur);
    }
    let v = free.trailing_zeros() as usize;
    let rest = free & !(1 << v);
    let mut partners = adj[v] & rest;
    while partners != 0 {
        let u = partners.trailing_zeros() as usize;
        partners &= partners - 1;
        cur.push((v, u));
        rec(adj, rest & !(1 << u), cur, f)?;
        cur.pop();
    }
    ControlFlow::Continue(())
}

/// All perfect matchings of the graph, each sorted, in lexicographic order.
pub fn perfect_matchings(n: usize, edges: &[PairIndex]) -> Vec<Vec<PairIndex>> {
    let adj = adjacency(n, edges);
    let mut out = Vec::new();
    let _ = for_each_perfect_matching::<()>(&adj, full(n), &mut |m| {
        out.push(m.iter().map(|&(a, b)| PairIndex::of(a, b)).collect());
        ControlFlow::Continue(())
    });
    out
}

pub fn first_perfect_matching(n: usize, edges: &[PairIndex]) -> Option<Vec<PairIndex>> {
    let adj = adjacency(n, edges);
    match for_each_perfect_matching(&adj, full(n), &mut |m| {
        ControlFlow::Break(m.iter().map(|&(a, b)| PairIndex::of(a, b)).collect::<Vec<_>>())
    }) {
        ControlFlow::Break(m) => Some(m),
        ControlFlow::Continue(()) => None,
    }
}

/// Whether the bipartite graph between `left` and `right` (edges from
/// `adj`) has a perfect matching; Kuhn's augmenting paths.
pub fn bipartite_has_perfect_matching(adj: &[u64], left: u64, right: u64) -> bool {
    if left.count_ones() != right.count_ones() {
        return false;
    }
    let mut mate = [usize::MAX; 64];
    let mut l = left;
    while l != 0 {
        let v = l.trailing_zeros() as usize;
        l &= l - 1;
        let mut seen = 0u64;
        if !augment(adj, right, v, &mut seen, &mut mate) {
            return false;
        }
    }
    true
}

fn augment(adj: &[u64], right: u64, v: usize, seen: &mut u64, mate: &mut [usize; 64]) -> bool {
    let mut cand = adj[v] & right & !*seen;
    while cand != 0 {
        let u = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        *seen |= 1 << u;
        if mate[u] == usize::MAX || augment(adj, right, mate[u], seen, mate) {
            mate[u] = v;
            return true;
        }
    }
    false
}

pub(crate) fn full(n: usize) -> u64 {
    crate::combinat::full_mask(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::all_pairs;

    /// Double factorial (n-1)!! counts perfect matchings of K_n.
    fn complete_count(n: usize) -> usize {
        (1..n).step_by(2).product()
    }

    #[test]
    fn complete_graph_counts() {
        for n in [2, 4, 6, 8] {
            assert_eq!(perfect_matchings(n, &all_pairs(n)).len(), complete_count(n));
        }
    }

    #[test]
    fn listing_is_lexicographic() {
        let ms = perfect_matchings(6, &all_pairs(6));
        let mut sorted = ms.clone();
        sorted.sort();
        assert_eq!(ms, sorted);
        assert_eq!(first_perfect_matching(6, &all_pairs(6)), Some(ms[0].clone()));
    }

    #[test]
    fn odd_cycle_union_has_no_matching() {
        let tri = |o: usize| [PairIndex::of(o, o + 1), PairIndex::of(o + 1, o + 2), PairIndex::of(o, o + 2)];
        let edges: Vec<_> = tri(0).into_iter().chain(tri(3)).collect();
        assert!(perfect_matchings(6, &edges).is_empty());
        assert_eq!(first_perfect_matching(6, &edges), None);
    }

    #[test]
    fn bipartite_check_agrees_with_enumeration() {
        // 6-cycle 0-3-1-4-2-5-0 across sides {0,1,2} / {3,4,5}
        let edges = [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]
            .map(|(a, b)| PairIndex::of(a, b));
        let adj = adjacency(6, &edges);
        assert!(bipartite_has_perfect_matching(&adj, 0b000111, 0b111000));
        assert_eq!(perfect_matchings(6, &edges).len(), 2);
        let star = [(0, 3), (1, 3), (2, 3), (2, 4), (2, 5)].map(|(a, b)| PairIndex::of(a, b));
        let adj = adjacency(6, &star);
        assert!(!bipartite_has_perfect_matching(&adj, 0b000111, 0b111000));
        assert!(perfect_matchings(6, &star).is_empty());
    }
}
