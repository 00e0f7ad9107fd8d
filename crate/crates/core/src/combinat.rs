//! Ground sets of the scheduling monoids: team pairs, equal partitions,
//! the generator family of (perfect matching, partition) pairs, and the
//! relabeling action of team permutations.
//!
//! Every vector lives in the coordinate space indexed by all team pairs
//! followed by all equal partitions. Pairs are ordered lexicographically and
//! partitions by their canonical home side (the side holding team 0), also
//! lexicographically. That global order fixes dense layouts, LP columns and
//! the text formats.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// Largest team count representable by the bitmask partitions.
pub const MAX_TEAMS: usize = 64;

/// Largest team count accepted by [`canonical_form`].
pub const MAX_CANONICAL_TEAMS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TeamSet {
    n: usize,
}

impl TeamSet {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 || !n.is_multiple_of(2) || n > MAX_TEAMS {
            return Err(Error::InvalidInput(format!(
                "team count must be even and in 2..={MAX_TEAMS}, got {n}"
            )));
        }
        Ok(TeamSet { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// An unordered pair of distinct teams, stored with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairIndex {
    a: usize,
    b: usize,
}

impl PairIndex {
    pub fn new(x: usize, y: usize) -> Result<Self> {
        match x.cmp(&y) {
            Ordering::Less => Ok(PairIndex { a: x, b: y }),
            Ordering::Greater => Ok(PairIndex { a: y, b: x }),
            Ordering::Equal => Err(Error::SelfLoop(x)),
        }
    }

    /// Panics on `x == y`; for internal construction from known-distinct teams.
    pub(crate) fn of(x: usize, y: usize) -> Self {
        PairIndex::new(x, y).expect("pair of distinct teams")
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn contains(&self, t: usize) -> bool {
        self.a == t || self.b == t
    }

    /// Position of this pair in the lexicographic list of all pairs on `n` teams.
    pub fn rank(&self, n: usize) -> usize {
        // pairs (a, *) for a' < a come first: sum_{a'<a} (n - 1 - a')
        self.a * (2 * n - self.a - 1) / 2 + (self.b - self.a - 1)
    }
}

impl fmt::Display for PairIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.a, self.b)
    }
}

/// A split of the teams into two sides of equal size. The split is
/// unordered; it is stored by the side containing team 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EqualPartition {
    n: usize,
    home: u64,
}

impl EqualPartition {
    /// Builds the partition with `side` as one of its two halves.
    pub fn from_side(n: usize, side: &[usize]) -> Result<Self> {
        TeamSet::new(n)?;
        let mut mask = 0u64;
        for &t in side {
            if t >= n {
                return Err(Error::InvalidInput(format!("team {t} out of range for n={n}")));
            }
            if mask & (1 << t) != 0 {
                return Err(Error::InvalidInput(format!("team {t} listed twice")));
            }
            mask |= 1 << t;
        }
        EqualPartition::from_mask(n, mask)
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        TeamSet::new(n)?;
        let full = full_mask(n);
        if mask & !full != 0 {
            return Err(Error::InvalidInput(format!("mask {mask:#x} has teams beyond n={n}")));
        }
        if mask.count_ones() as usize != n / 2 {
            return Err(Error::InvalidInput(format!(
                "side has {} teams, an equal partition of {n} needs {}",
                mask.count_ones(),
                n / 2
            )));
        }
        let home = if mask & 1 == 1 { mask } else { full & !mask };
        Ok(EqualPartition { n, home })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Bitmask of the canonical side (contains team 0).
    pub fn mask(&self) -> u64 {
        self.home
    }

    pub fn home_side(&self) -> Vec<usize> {
        members(self.home)
    }

    pub fn away_side(&self) -> Vec<usize> {
        members(full_mask(self.n) & !self.home)
    }

    /// True when `t` is on the same side as team 0.
    pub fn on_home_side(&self, t: usize) -> bool {
        self.home >> t & 1 == 1
    }

    /// A pair can play under this partition only if it crosses it.
    pub fn crosses(&self, p: PairIndex) -> bool {
        self.on_home_side(p.a) != self.on_home_side(p.b)
    }
}

impl Ord for EqualPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            // Lexicographic order of the sorted home sides: the side owning the
            // lowest differing team is the smaller one.
            let diff = self.home ^ other.home;
            if diff == 0 {
                Ordering::Equal
            } else if self.home & (diff & diff.wrapping_neg()) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for EqualPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EqualPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side: Vec<String> = self.home_side().iter().map(|t| t.to_string()).collect();
        write!(f, "{}", side.join(","))
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn members(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// A nonnegative integer vector over pairs and partitions. Zero entries are
/// never stored, so structural equality is componentwise equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProblemVector {
    n: usize,
    edges: BTreeMap<PairIndex, u64>,
    parts: BTreeMap<EqualPartition, u64>,
}

impl ProblemVector {
    pub fn zero(n: usize) -> Self {
        ProblemVector {
            n,
            edges: BTreeMap::new(),
            parts: BTreeMap::new(),
        }
    }

    /// All edge components 1, all partition components 0.
    pub fn chi_k(n: usize) -> Self {
        ProblemVector::chi_edges(n, all_pairs(n))
    }

    pub fn chi_edges(n: usize, edges: impl IntoIterator<Item = PairIndex>) -> Self {
        let mut v = ProblemVector::zero(n);
        for e in edges {
            v.set_edge(e, 1);
        }
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge(&self, p: PairIndex) -> u64 {
        self.edges.get(&p).copied().unwrap_or(0)
    }

    pub fn part(&self, c: EqualPartition) -> u64 {
        self.parts.get(&c).copied().unwrap_or(0)
    }

    pub fn set_edge(&mut self, p: PairIndex, value: u64) {
        debug_assert!(p.b < self.n);
        if value == 0 {
            self.edges.remove(&p);
        } else {
            self.edges.insert(p, value);
        }
    }

    pub fn set_part(&mut self, c: EqualPartition, value: u64) {
        debug_assert_eq!(c.n, self.n);
        if value == 0 {
            self.parts.remove(&c);
        } else {
            self.parts.insert(c, value);
        }
    }

    pub fn add_edge(&mut self, p: PairIndex, delta: u64) {
        let v = self.edge(p) + delta;
        self.set_edge(p, v);
    }

    pub fn add_part(&mut self, c: EqualPartition, delta: u64) {
        let v = self.part(c) + delta;
        self.set_part(c, v);
    }

    /// Nonzero edge components in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (PairIndex, u64)> + '_ {
        self.edges.iter().map(|(p, v)| (*p, *v))
    }

    /// Nonzero partition components in canonical order.
    pub fn parts(&self) -> impl Iterator<Item = (EqualPartition, u64)> + '_ {
        self.parts.iter().map(|(c, v)| (*c, *v))
    }

    pub fn edge_sum(&self) -> u64 {
        self.edges.values().sum()
    }

    pub fn part_sum(&self) -> u64 {
        self.parts.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.edges.is_empty() && self.parts.is_empty()
    }

    pub fn max_edge(&self) -> u64 {
        self.edges.values().copied().max().unwrap_or(0)
    }

    pub fn plus(&self, other: &ProblemVector) -> Result<ProblemVector> {
        self.same_n(other)?;
        let mut out = self.clone();
        for (p, v) in other.edges() {
            out.add_edge(p, v);
        }
        for (c, v) in other.parts() {
            out.add_part(c, v);
        }
        Ok(out)
    }

    pub fn scaled(&self, k: u64) -> ProblemVector {
        let mut out = ProblemVector::zero(self.n);
        if k == 0 {
            return out;
        }
        for (p, v) in self.edges() {
            out.set_edge(p, v * k);
        }
        for (c, v) in self.parts() {
            out.set_part(c, v * k);
        }
        out
    }

    /// `self - other` when it stays nonnegative.
    pub fn checked_sub(&self, other: &ProblemVector) -> Option<ProblemVector> {
        if self.n != other.n {
            return None;
        }
        let mut out = self.clone();
        for (p, v) in other.edges() {
            let cur = out.edge(p);
            if cur < v {
                return None;
            }
            out.set_edge(p, cur - v);
        }
        for (c, v) in other.parts() {
            let cur = out.part(c);
            if cur < v {
                return None;
            }
            out.set_part(c, cur - v);
        }
        Some(out)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &ProblemVector) -> bool {
        self.n == other.n
            && self.edges().all(|(p, v)| v <= other.edge(p))
            && self.parts().all(|(c, v)| v <= other.part(c))
    }

    fn same_n(&self, other: &ProblemVector) -> Result<()> {
        if self.n != other.n {
            return Err(Error::TeamCountMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    /// Restriction to the edge components, as an edge list of the support
    /// with multiplicities.
    pub fn edge_part(&self) -> ProblemVector {
        ProblemVector {
            n: self.n,
            edges: self.edges.clone(),
            parts: BTreeMap::new(),
        }
    }

    /// Dense layout in the global coordinate order.
    pub fn dense(&self, coords: &Coordinates) -> Vec<u64> {
        let mut out = vec![0; coords.len()];
        for (p, v) in self.edges() {
            out[coords.pair_position(p)] = v;
        }
        for (c, v) in self.parts() {
            out[coords.partition_position(c).expect("partition of matching n")] = v;
        }
        out
    }

    pub fn from_dense(coords: &Coordinates, values: &[u64]) -> Result<Self> {
        if values.len() != coords.len() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coordinates, got {}",
                coords.len(),
                values.len()
            )));
        }
        let mut v = ProblemVector::zero(coords.n());
        for (i, &x) in values.iter().enumerate() {
            match coords.coordinate(i) {
                Coordinate::Pair(p) => v.set_edge(p, x),
                Coordinate::Partition(c) => v.set_part(c, x),
            }
        }
        Ok(v)
    }
}

/// All pairs on `n` teams in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<PairIndex> {
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for a in 0..n {
        for b in a + 1..n {
            out.push(PairIndex { a, b });
        }
    }
    out
}

pub fn enumerate_pairs(ts: TeamSet) -> Vec<PairIndex> {
    all_pairs(ts.n)
}

pub fn enumerate_partitions(ts: TeamSet) -> Vec<EqualPartition> {
    let n = ts.n;
    let half = n / 2;
    let mut out = Vec::new();
    // sides containing team 0, generated in lexicographic order
    let mut side = Vec::with_capacity(half);
    side.push(0usize);
    fn rec(n: usize, half: usize, side: &mut Vec<usize>, out: &mut Vec<EqualPartition>) {
        if side.len() == half {
            let mask = side.iter().fold(0u64, |m, &t| m | 1 << t);
            out.push(EqualPartition { n, home: mask });
            return;
        }
        let start = side.last().map_or(0, |&t| t + 1);
        let need = half - side.len();
        for t in start..=n - need {
            side.push(t);
            rec(n, half, side, out);
            side.pop();
        }
    }
    rec(n, half, &mut side, &mut out);
    out
}

/// Which coordinate a dense position refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coordinate {
    Pair(PairIndex),
    Partition(EqualPartition),
}

/// The global coordinate system for one team count.
#[derive(Clone, Debug)]
pub struct Coordinates {
    n: usize,
    pairs: Vec<PairIndex>,
    partitions: Vec<EqualPartition>,
    partition_index: HashMap<u64, usize>,
}

impl Coordinates {
    pub fn new(ts: TeamSet) -> Self {
        let pairs = enumerate_pairs(ts);
        let partitions = enumerate_partitions(ts);
        let partition_index = partitions
            .iter()
            .enumerate()
            .map(|(i, c)| (c.home, i))
            .collect();
        Coordinates {
            n: ts.n,
            pairs,
            partitions,
            partition_index,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.pairs.len() + self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn pairs(&self) -> &[PairIndex] {
        &self.pairs
    }

    pub fn partitions(&self) -> &[EqualPartition] {
        &self.partitions
    }

    pub fn pair_position(&self, p: PairIndex) -> usize {
        p.rank(self.n)
    }

    pub fn partition_position(&self, c: EqualPartition) -> Option<usize> {
        self.partition_index.get(&c.home).map(|i| self.pairs.len() + i)
    }

    pub fn partition_rank(&self, c: EqualPartition) -> Option<usize> {
        self.partition_index.get(&c.home).copied()
    }

    pub fn coordinate(&self, i: usize) -> Coordinate {
        if i < self.pairs.len() {
            Coordinate::Pair(self.pairs[i])
        } else {
            Coordinate::Partition(self.partitions[i - self.pairs.len()])
        }
    }
}

/// A perfect matching of the complete bipartite graph across a partition,
/// together with that partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PMGenerator {
    partition: EqualPartition,
    matching: Vec<PairIndex>,
}

impl PMGenerator {
    pub fn new(mut matching: Vec<PairIndex>, partition: EqualPartition) -> Result<Self> {
        let n = partition.n;
        matching.sort();
        let mut seen = 0u64;
        for p in &matching {
            if p.b >= n {
                return Err(Error::InvalidInput(format!("pair {p} out of range for n={n}")));
            }
            if seen & (1 << p.a | 1 << p.b) != 0 {
                return Err(Error::InvalidInput(format!("team of {p} matched twice")));
            }
            if !partition.crosses(*p) {
                return Err(Error::InvalidInput(format!(
                    "pair {p} does not cross partition {partition}"
                )));
            }
            seen |= 1 << p.a | 1 << p.b;
        }
        if seen != full_mask(n) {
            return Err(Error::InvalidInput("matching is not perfect".into()));
        }
        Ok(PMGenerator {
            partition,
            matching,
        })
    }

    pub fn matching(&self) -> &[PairIndex] {
        &self.matching
    }

    pub fn partition(&self) -> EqualPartition {
        self.partition
    }

    pub fn n(&self) -> usize {
        self.partition.n
    }

    pub fn to_vector(&self) -> ProblemVector {
        let mut v = ProblemVector::chi_edges(self.n(), self.matching.iter().copied());
        v.set_part(self.partition, 1);
        v
    }

    /// Recovers a generator from its 0/1 vector.
    pub fn from_vector(v: &ProblemVector) -> Result<Self> {
        let parts: Vec<_> = v.parts().collect();
        if parts.len() != 1 || parts[0].1 != 1 {
            return Err(Error::InvalidInput("generator needs exactly one partition component equal to 1".into()));
        }
        if v.edges().any(|(_, x)| x != 1) {
            return Err(Error::InvalidInput("generator edge components must be 0/1".into()));
        }
        PMGenerator::new(v.edges().map(|(p, _)| p).collect(), parts[0].0)
    }
}

impl fmt::Display for PMGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.partition)?;
        for p in &self.matching {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

/// All perfect matchings across `c` in lexicographic order.
pub fn matchings_across(c: EqualPartition) -> Vec<Vec<PairIndex>> {
    let home = c.home_side();
    let away = c.away_side();
    let mut out = Vec::new();
    let mut used = vec![false; away.len()];
    let mut cur = Vec::with_capacity(home.len());
    fn rec(
        home: &[usize],
        away: &[usize],
        used: &mut [bool],
        cur: &mut Vec<PairIndex>,
        out: &mut Vec<Vec<PairIndex>>,
    ) {
        let i = cur.len();
        if i == home.len() {
            let mut m = cur.clone();
            m.sort();
            out.push(m);
            return;
        }
        for j in 0..away.len() {
            if !used[j] {
                used[j] = true;
                cur.push(PairIndex::of(home[i], away[j]));
                rec(home, away, used, cur, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    rec(&home, &away, &mut used, &mut cur, &mut out);
    out.sort();
    out
}

/// Every generator on `ts`: partition-major, matchings lexicographic.
pub fn enumerate_pm(ts: TeamSet) -> Vec<PMGenerator> {
    enumerate_partitions(ts)
        .into_iter()
        .flat_map(|c| {
            matchings_across(c).into_iter().map(move |m| PMGenerator {
                partition: c,
                matching: m,
            })
        })
        .collect()
}

/// The clause of the problem-vector definition a vector violates first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProblemViolation {
    EdgeAboveOne { pair: PairIndex, value: u64 },
    NotRegular { vertex: usize, degree: usize, expected: usize },
    Unbalanced { partition_sum: u64, edge_sum: u64 },
}

impl fmt::Display for ProblemViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProblemViolation::EdgeAboveOne { pair, value } => {
                write!(f, "edge component {pair} = {value} exceeds 1")
            }
            ProblemViolation::NotRegular {
                vertex,
                degree,
                expected,
            } => write!(
                f,
                "support graph is not regular: vertex {vertex} has degree {degree}, vertex 0 has {expected}"
            ),
            ProblemViolation::Unbalanced {
                partition_sum,
                edge_sum,
            } => write!(
                f,
                "balance fails: partition sum {partition_sum} times n/2 differs from edge sum {edge_sum}"
            ),
        }
    }
}

/// Checks the three defining clauses of a problem vector in order.
pub fn check_problem_vector(v: &ProblemVector) -> Result<(), ProblemViolation> {
    if let Some((pair, value)) = v.edges().find(|&(_, x)| x > 1) {
        return Err(ProblemViolation::EdgeAboveOne { pair, value });
    }
    let mut degree = vec![0usize; v.n];
    for (p, _) in v.edges() {
        degree[p.a] += 1;
        degree[p.b] += 1;
    }
    if let Some((vertex, &d)) = degree.iter().enumerate().find(|&(_, &d)| d != degree[0]) {
        return Err(ProblemViolation::NotRegular {
            vertex,
            degree: d,
            expected: degree[0],
        });
    }
    let partition_sum = v.part_sum();
    let edge_sum = v.edge_sum();
    if partition_sum * (v.n as u64 / 2) != edge_sum {
        return Err(ProblemViolation::Unbalanced {
            partition_sum,
            edge_sum,
        });
    }
    Ok(())
}

pub fn is_problem_vector(v: &ProblemVector) -> bool {
    check_problem_vector(v).is_ok()
}

/// Pairs whose edge component is exactly 1.
pub fn support_graph(v: &ProblemVector) -> Vec<PairIndex> {
    v.edges().filter(|&(_, x)| x == 1).map(|(p, _)| p).collect()
}

/// A bijection on teams; `image(i)` is where team `i` goes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidInput("not a permutation".into()));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn apply_pair(&self, p: PairIndex) -> PairIndex {
        PairIndex::of(self.0[p.a], self.0[p.b])
    }

    pub fn apply_partition(&self, c: EqualPartition) -> EqualPartition {
        let mask = members(c.home).iter().fold(0u64, |m, &t| m | 1 << self.0[t]);
        EqualPartition::from_mask(c.n, mask).expect("image of an equal partition")
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (0..n).collect();
        let mut out = vec![Permutation(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Permutation(cur.clone()));
        }
        out
    }
}

fn next_permutation(xs: &mut [usize]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

pub fn permute_vector(v: &ProblemVector, sigma: &Permutation) -> Result<ProblemVector> {
    if sigma.len() != v.n {
        return Err(Error::TeamCountMismatch {
            expected: v.n,
            found: sigma.len(),
        });
    }
    let mut out = ProblemVector::zero(v.n);
    for (p, x) in v.edges() {
        out.set_edge(sigma.apply_pair(p), x);
    }
    for (c, x) in v.parts() {
        out.set_part(sigma.apply_partition(c), x);
    }
    Ok(out)
}

/// Precomputed permutation action on dense coordinates, for canonicalizing
/// many vectors of one team count.
pub struct Canonicalizer {
    coords: Coordinates,
    /// per permutation: image position of every dense coordinate
    maps: Vec<Vec<u32>>,
}

impl Canonicalizer {
    pub fn new(n: usize) -> Result<Self> {
        let ts = TeamSet::new(n)?;
        if n > MAX_CANONICAL_TEAMS {
            return Err(Error::BudgetExceeded {
                what: format!("canonical form needs {n}! relabelings; limit is n <= {MAX_CANONICAL_TEAMS}"),
                elapsed: Default::default(),
                nodes: 0,
            });
        }
        let coords = Coordinates::new(ts);
        let maps = Permutation::all(n)
            .iter()
            .map(|sigma| {
                (0..coords.len())
                    .map(|i| match coords.coordinate(i) {
                        Coordinate::Pair(p) => coords.pair_position(sigma.apply_pair(p)) as u32,
                        Coordinate::Partition(c) => coords
                            .partition_position(sigma.apply_partition(c))
                            .expect("partition image") as u32,
                    })
                    .collect()
            })
            .collect();
        Ok(Canonicalizer { coords, maps })
    }

    pub fn coordinates(&self) -> &Coordinates {
        &self.coords
    }

    pub fn canonical(&self, v: &ProblemVector) -> Result<ProblemVector> {
        if v.n != self.coords.n() {
            return Err(Error::TeamCountMismatch {
                expected: self.coords.n(),
                found: v.n,
            });
        }
        let dense = v.dense(&self.coords);
        let support: Vec<usize> = (0..dense.len()).filter(|&i| dense[i] != 0).collect();
        let mut best: Option<Vec<u64>> = None;
        let mut image = vec![0u64; dense.len()];
        for map in &self.maps {
            image.iter_mut().for_each(|x| *x = 0);
            for &i in &support {
                image[map[i] as usize] = dense[i];
            }
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image.clone());
            }
        }
        ProblemVector::from_dense(&self.coords, &best.unwrap_or(dense))
    }
}

/// Lexicographically smallest relabeling of `v`; equal for isomorphic vectors.
pub fn canonical_form(v: &ProblemVector) -> Result<ProblemVector> {
    Canonicalizer::new(v.n)?.canonical(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ts(n: usize) -> TeamSet {
        TeamSet::new(n).unwrap()
    }

    #[test]
    fn team_set_rejects_odd_and_tiny() {
        assert!(TeamSet::new(0).is_err());
        assert!(TeamSet::new(3).is_err());
        assert!(TeamSet::new(2).is_ok());
    }

    #[test]
    fn pair_counts() {
        assert_eq!(enumerate_pairs(ts(4)).len(), 6);
        assert_eq!(enumerate_pairs(ts(6)).len(), 15);
        assert_eq!(enumerate_pairs(ts(2)).len(), 1);
    }

    #[test]
    fn pair_rank_matches_enumeration() {
        for n in [2, 4, 6, 10] {
            for (i, p) in all_pairs(n).iter().enumerate() {
                assert_eq!(p.rank(n), i);
            }
        }
    }

    #[test]
    fn partition_counts_and_order() {
        assert_eq!(enumerate_partitions(ts(4)).len(), 3);
        assert_eq!(enumerate_partitions(ts(6)).len(), 10);
        assert_eq!(enumerate_partitions(ts(8)).len(), 35);
        let parts = enumerate_partitions(ts(6));
        let sides: Vec<Vec<usize>> = parts.iter().map(|c| c.home_side()).collect();
        let mut sorted = sides.clone();
        sorted.sort();
        assert_eq!(sides, sorted);
        let mut by_ord = parts.clone();
        by_ord.sort();
        assert_eq!(by_ord, parts);
    }

    #[test]
    fn partition_is_unordered() {
        let a = EqualPartition::from_side(4, &[0, 2]).unwrap();
        let b = EqualPartition::from_side(4, &[1, 3]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.home_side(), vec![0, 2]);
        assert!(EqualPartition::from_side(4, &[0]).is_err());
    }

    #[test]
    fn pm_counts() {
        assert_eq!(enumerate_pm(ts(4)).len(), 6);
        assert_eq!(enumerate_pm(ts(6)).len(), 60);
        assert_eq!(enumerate_pm(ts(8)).len(), 840);
    }

    #[test]
    fn pm_generators_are_balanced_problem_vectors() {
        for g in enumerate_pm(ts(6)) {
            let v = g.to_vector();
            assert!(is_problem_vector(&v));
            assert_eq!(v.edge_sum(), 3);
            assert_eq!(v.part_sum(), 1);
            assert_eq!(PMGenerator::from_vector(&v).unwrap(), g);
        }
    }

    #[test]
    fn problem_vector_clauses() {
        let c = EqualPartition::from_side(4, &[0, 1]).unwrap();
        let mut v = ProblemVector::zero(4);
        v.set_edge(PairIndex::of(0, 2), 2);
        v.set_part(c, 1);
        assert!(matches!(
            check_problem_vector(&v),
            Err(ProblemViolation::EdgeAboveOne { .. })
        ));

        let k4 = ProblemVector::chi_k(4);
        assert!(matches!(
            check_problem_vector(&k4),
            Err(ProblemViolation::Unbalanced { .. })
        ));

        let mut rotation_table = k4.clone();
        for c in enumerate_partitions(ts(4)) {
            rotation_table.set_part(c, 1);
        }
        assert!(is_problem_vector(&rotation_table));
        assert_eq!(support_graph(&rotation_table), all_pairs(4));

        let path = ProblemVector::chi_edges(4, [PairIndex::of(0, 1), PairIndex::of(1, 2)]);
        assert!(matches!(
            check_problem_vector(&path),
            Err(ProblemViolation::NotRegular { .. })
        ));
    }

    #[test]
    fn support_of_zero_is_empty() {
        assert!(support_graph(&ProblemVector::zero(6)).is_empty());
    }

    #[test]
    fn permutation_action_preserves_generators_n4() {
        let gens = enumerate_pm(ts(4));
        let set: std::collections::HashSet<_> = gens.iter().map(|g| g.to_vector()).collect();
        for sigma in Permutation::all(4) {
            assert_eq!(sigma.len(), 4);
            for g in &gens {
                let img = permute_vector(&g.to_vector(), &sigma).unwrap();
                assert!(set.contains(&img));
                let back = permute_vector(&img, &sigma.inverse()).unwrap();
                assert_eq!(back, g.to_vector());
            }
        }
    }

    #[test]
    fn canonical_form_orbit_and_limit() {
        let g = enumerate_pm(ts(6))[17].to_vector();
        let canon = canonical_form(&g).unwrap();
        for sigma in Permutation::all(6).iter().step_by(37) {
            let img = permute_vector(&g, sigma).unwrap();
            assert_eq!(canonical_form(&img).unwrap(), canon);
        }
        assert_eq!(canonical_form(&canon).unwrap(), canon);
        assert!(canonical_form(&ProblemVector::zero(10)).unwrap_err().is_budget());
    }

    #[test]
    fn dense_round_trip() {
        let coords = Coordinates::new(ts(6));
        let g = enumerate_pm(ts(6))[40].to_vector();
        let d = g.dense(&coords);
        assert_eq!(d.len(), 25);
        assert_eq!(ProblemVector::from_dense(&coords, &d).unwrap(), g);
    }
}
