//! Regular graphs on the team set and the concrete families studied:
//! complete graphs, balanced complete bipartite graphs, antiprisms, prisms
//! and the Petersen graph.

use std::collections::VecDeque;

use crate::combinat::{all_pairs, PairIndex, ProblemVector};
use crate::error::{Error, Result};
use crate::matching;

/// A simple regular graph on vertices `0..n`, edges kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RegularGraph {
    n: usize,
    edges: Vec<PairIndex>,
    degree: usize,
}

impl RegularGraph {
    /// Validates simplicity and regularity.
    pub fn new(n: usize, edges: impl IntoIterator<Item = PairIndex>) -> Result<Self> {
        let mut edges: Vec<PairIndex> = edges.into_iter().collect();
        edges.sort();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge(w[0].a(), w[0].b()));
            }
        }
        if let Some(e) = edges.iter().find(|e| e.b() >= n) {
            return Err(Error::InvalidInput(format!("edge {e} out of range for n={n}")));
        }
        let degree = validate_regular(n, &edges)?;
        Ok(RegularGraph { n, edges, degree })
    }

    /// Builds from raw endpoint pairs, reporting self-loops.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let edges = pairs
            .iter()
            .map(|&(a, b)| PairIndex::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        RegularGraph::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[PairIndex] {
        &self.edges
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, p: PairIndex) -> bool {
        self.edges.binary_search(&p).is_ok()
    }

    /// Position of `p` in the sorted edge list.
    pub fn edge_position(&self, p: PairIndex) -> Option<usize> {
        self.edges.binary_search(&p).ok()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|e| e.contains(v))
            .map(|e| if e.a() == v { e.b() } else { e.a() })
            .collect()
    }

    /// χ_E: the edge indicator with zero partition part.
    pub fn indicator(&self) -> ProblemVector {
        ProblemVector::chi_edges(self.n, self.edges.iter().copied())
    }

    /// Edges of the complete graph missing from this one.
    pub fn complement_edges(&self) -> Vec<PairIndex> {
        all_pairs(self.n)
            .into_iter()
            .filter(|p| !self.has_edge(*p))
            .collect()
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let adj: Vec<Vec<usize>> = (0..self.n).map(|v| self.neighbors(v)).collect();
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

/// Returns the common degree, or the first vertex whose degree differs from
/// vertex 0's.
pub fn validate_regular(n: usize, edges: &[PairIndex]) -> Result<usize> {
    if n == 0 {
        return Err(Error::InvalidInput("graph needs at least one vertex".into()));
    }
    let mut degree = vec![0usize; n];
    for e in edges {
        degree[e.a()] += 1;
        degree[e.b()] += 1;
    }
    match degree.iter().position(|&d| d != degree[0]) {
        Some(v) => Err(Error::NotRegular {
            vertex: v,
            found: degree[v],
            expected: degree[0],
        }),
        None => Ok(degree[0]),
    }
}

pub fn complete_graph(n: usize) -> Result<RegularGraph> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("complete graph needs n >= 2, got {n}")));
    }
    RegularGraph::new(n, all_pairs(n))
}

/// K_{k,k} with sides `0..k` and `k..2k`.
pub fn complete_bipartite(k: usize) -> Result<RegularGraph> {
    if k < 1 {
        return Err(Error::InvalidInput("complete bipartite graph needs k >= 1".into()));
    }
    let edges = (0..k).flat_map(|a| (k..2 * k).map(move |b| PairIndex::of(a, b)));
    RegularGraph::new(2 * k, edges)
}

/// The 4-regular circulant with edges at cyclic distances 1 and 2.
pub fn antiprism(n: usize) -> Result<RegularGraph> {
    if n < 6 || !n.is_multiple_of(2) {
        return Err(Error::InvalidInput(format!("antiprism needs even n >= 6, got {n}")));
    }
    let edges = (0..n).flat_map(|i| [PairIndex::of(i, (i + 1) % n), PairIndex::of(i, (i + 2) % n)]);
    RegularGraph::new(n, edges)
}

/// Two k-cycles `0..k` and `k..2k` joined by rungs `{i, i+k}`.
pub fn prism(k: usize) -> Result<RegularGraph> {
    if k < 3 {
        return Err(Error::InvalidInput(format!("prism needs k >= 3, got {k}")));
    }
    let edges = (0..k).flat_map(|i| {
        let j = (i + 1) % k;
        [PairIndex::of(i, j), PairIndex::of(k + i, k + j), PairIndex::of(i, k + i)]
    });
    RegularGraph::new(2 * k, edges)
}

/// Outer 5-cycle `0..5`, inner pentagram on `5..10`, spokes `{i, i+5}`.
pub fn petersen() -> RegularGraph {
    let edges = (0..5).flat_map(|i| {
        [
            PairIndex::of(i, (i + 1) % 5),
            PairIndex::of(5 + i, 5 + (i + 2) % 5),
            PairIndex::of(i, i + 5),
        ]
    });
    RegularGraph::new(10, edges).expect("Petersen graph is 3-regular")
}

/// The lexicographically first perfect matching of the Petersen complement.
pub fn petersen_complement_matching() -> Vec<PairIndex> {
    let p = petersen();
    matching::first_perfect_matching(p.n(), &p.complement_edges())
        .expect("the Petersen complement has a perfect matching")
}

/// Petersen graph plus [`petersen_complement_matching`]; 4-regular.
pub fn petersen_plus_matching() -> RegularGraph {
    let mut edges = petersen().edges().to_vec();
    edges.extend(petersen_complement_matching());
    RegularGraph::new(10, edges).expect("adding a perfect matching keeps regularity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::canonical_form;

    fn handshake(g: &RegularGraph) {
        assert_eq!(2 * g.edge_count(), g.n() * g.degree());
    }

    #[test]
    fn family_sizes() {
        let cases = [
            (complete_graph(4).unwrap(), 6, 3),
            (complete_graph(6).unwrap(), 15, 5),
            (complete_graph(2).unwrap(), 1, 1),
            (complete_bipartite(3).unwrap(), 9, 3),
            (complete_bipartite(4).unwrap(), 16, 4),
            (complete_bipartite(1).unwrap(), 1, 1),
            (antiprism(6).unwrap(), 12, 4),
            (antiprism(8).unwrap(), 16, 4),
            (antiprism(10).unwrap(), 20, 4),
            (prism(3).unwrap(), 9, 3),
            (prism(4).unwrap(), 12, 3),
            (prism(5).unwrap(), 15, 3),
            (petersen(), 15, 3),
            (petersen_plus_matching(), 20, 4),
        ];
        for (g, edges, degree) in cases {
            assert_eq!(g.edge_count(), edges);
            assert_eq!(g.degree(), degree);
            handshake(&g);
        }
    }

    #[test]
    fn constructor_preconditions() {
        assert!(antiprism(4).is_err());
        assert!(antiprism(7).is_err());
        assert!(prism(2).is_err());
        assert!(complete_graph(1).is_err());
        assert!(complete_bipartite(0).is_err());
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            RegularGraph::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]),
            Err(Error::NotRegular { .. })
        ));
        assert!(matches!(RegularGraph::from_pairs(2, &[(1, 1)]), Err(Error::SelfLoop(1))));
        assert!(matches!(
            RegularGraph::from_pairs(2, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
    }

    #[test]
    fn girths() {
        assert_eq!(petersen().girth(), Some(5));
        assert_eq!(prism(4).unwrap().girth(), Some(4));
        assert_eq!(complete_graph(4).unwrap().girth(), Some(3));
        assert_eq!(complete_graph(2).unwrap().girth(), None);
    }

    #[test]
    fn petersen_plus_matching_recovers_petersen() {
        let m = petersen_complement_matching();
        assert_eq!(m.len(), 5);
        let p = petersen();
        assert!(m.iter().all(|e| !p.has_edge(*e)));
        let g = petersen_plus_matching();
        let rest: Vec<_> = g.edges().iter().copied().filter(|e| !m.contains(e)).collect();
        assert_eq!(rest, p.edges());
    }

    #[test]
    fn antiprism6_is_octahedron() {
        // K_{2,2,2}: everything except three disjoint pairs
        let missing = [PairIndex::of(0, 1), PairIndex::of(2, 3), PairIndex::of(4, 5)];
        let octa = RegularGraph::new(6, all_pairs(6).into_iter().filter(|p| !missing.contains(p))).unwrap();
        assert_eq!(
            canonical_form(&antiprism(6).unwrap().indicator()).unwrap(),
            canonical_form(&octa.indicator()).unwrap()
        );
    }
}
