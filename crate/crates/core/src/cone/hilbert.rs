//! Hilbert bases of pointed rational cones spanned by nonnegative integer
//! generators.
//!
//! The computation is primal:
//! 1. generators owning a private coordinate (value 1, zero elsewhere) are
//!    split off, and the rest is split into coordinate-disjoint blocks;
//! 2. each block is rewritten in a basis of its saturated lattice, so the
//!    cone becomes full-dimensional in `Z^r`;
//! 3. a first beneath-beyond pass finds the facets of the cone;
//! 4. a second pass builds the placing triangulation, keeping the facets and
//!    the boundary faces of the current cone (with their lattice
//!    multiplicities) so every new simplex determinant is a product of two
//!    integers;
//! 5. lattice points of the half-open parallelepipeds of the non-unimodular
//!    simplices are enumerated as the finite group `Z^r / M Z^r` as each
//!    simplex appears, and dropped at once when a generator reduces them;
//! 6. the survivors are inter-reduced by degree using the facet values.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::linalg::{self, Q};
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Upper bound on the stored boundary faces (about 32 bytes each for up to
/// 192 generators). A placing triangulation whose boundary outgrows it is
/// abandoned as over budget instead of exhausting memory.
pub const MAX_BOUNDARY_FACES: usize = 40_000_000;

/// Triangulation statistics of one full-dimensional block.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BlockStats {
    pub dimension: usize,
    pub generators: usize,
    pub simplices: u64,
    /// Sum of simplex determinants (normalized volume in the block lattice).
    pub multiplicity: u128,
    pub facets: usize,
    pub box_points: u64,
}

/// Hilbert basis plus diagnostics.
#[derive(Clone, Debug, Default)]
pub struct DenseHilbert {
    /// Basis elements in input coordinates, sorted lexicographically.
    pub basis: Vec<Vec<i64>>,
    /// Generators split off through a private coordinate.
    pub private_generators: usize,
    pub blocks: Vec<BlockStats>,
}

/// Hilbert basis of the lattice points in the cone spanned by `gens`.
/// All generators must be nonnegative, which makes the cone pointed.
pub fn hilbert_basis_dense(gens: &[Vec<i64>], budget: &Budget) -> Result<DenseHilbert> {
    let dim = gens.first().map_or(0, |g| g.len());
    if gens.iter().any(|g| g.len() != dim) {
        return Err(Error::DimensionMismatch("generators of different lengths".into()));
    }
    if gens.iter().flatten().any(|&x| x < 0) {
        return Err(Error::InvalidInput("generators must be nonnegative".into()));
    }
    let mut pool: Vec<Vec<i64>> = gens.iter().filter(|g| g.iter().any(|&x| x != 0)).cloned().collect();
    pool.sort();
    pool.dedup();

    let mut out = DenseHilbert::default();
    split_private(&mut pool, &mut out.basis);
    out.private_generators = out.basis.len();

    for block in coordinate_blocks(&pool, dim) {
        let coords: Vec<usize> = (0..dim).filter(|&c| block.iter().any(|&i| pool[i][c] != 0)).collect();
        let compressed: Vec<Vec<i64>> = block
            .iter()
            .map(|&i| coords.iter().map(|&c| pool[i][c]).collect())
            .collect();
        let (basis, stats) = block_hilbert_basis(&compressed, budget)?;
        for h in basis {
            let mut full = vec![0; dim];
            for (&c, x) in coords.iter().zip(h) {
                full[c] = x;
            }
            out.basis.push(full);
        }
        out.blocks.push(stats);
    }
    out.basis.sort();
    Ok(out)
}

/// Repeatedly moves generators that are alone on some coordinate, with value
/// 1 there, from `pool` into `basis`. Such a generator's coefficient in any
/// cone point is that coordinate's value, so it splits off as a direct
/// summand of the monoid.
fn split_private(pool: &mut Vec<Vec<i64>>, basis: &mut Vec<Vec<i64>>) {
    loop {
        let dim = pool.first().map_or(0, |g| g.len());
        let mut owner: Vec<Option<usize>> = vec![None; dim];
        let mut count = vec![0usize; dim];
        for (i, g) in pool.iter().enumerate() {
            for (c, &x) in g.iter().enumerate() {
                if x != 0 {
                    count[c] += 1;
                    owner[c] = Some(i);
                }
            }
        }
        let private: HashSet<usize> = (0..dim)
            .filter(|&c| count[c] == 1)
            .filter_map(|c| owner[c].filter(|&i| pool[i][c] == 1))
            .collect();
        if private.is_empty() {
            return;
        }
        let mut idx: Vec<usize> = private.into_iter().collect();
        idx.sort_unstable_by(|a, b| b.cmp(a));
        for i in idx {
            basis.push(pool.remove(i));
        }
    }
}

/// Groups generator indices into blocks with pairwise disjoint coordinate
/// supports.
fn coordinate_blocks(pool: &[Vec<i64>], dim: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..pool.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for c in 0..dim {
        let mut first = None;
        for (i, g) in pool.iter().enumerate() {
            if g[c] != 0 {
                match first {
                    None => first = Some(i),
                    Some(f) => {
                        let (a, b) = (find(&mut parent, f), find(&mut parent, i));
                        parent[a] = b;
                    }
                }
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut root_block = vec![usize::MAX; pool.len()];
    for i in 0..pool.len() {
        let r = find(&mut parent, i);
        if root_block[r] == usize::MAX {
            root_block[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[root_block[r]].push(i);
    }
    blocks
}

fn block_hilbert_basis(gens: &[Vec<i64>], budget: &Budget) -> Result<(Vec<Vec<i64>>, BlockStats)> {
    let dim = gens[0].len();
    let lattice: Vec<Vec<i64>> = linalg::saturated_basis(gens, dim)?
        .iter()
        .map(|row| row.iter().map(linalg::to_i64).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let r = lattice.len();
    let local: Vec<Vec<i64>> = gens
        .iter()
        .map(|g| {
            linalg::echelon_coordinates(&lattice, g)
                .ok_or(Error::Overflow("lattice coordinates of a generator"))
        })
        .collect::<Result<_>>()?;

    let mut stats = BlockStats {
        dimension: r,
        generators: gens.len(),
        ..BlockStats::default()
    };
    let local_basis = if r == 1 {
        // a ray: the primitive lattice point in the generators' direction
        let sign = local[0][0].signum();
        stats.simplices = 1;
        stats.multiplicity = local.iter().map(|y| y[0].unsigned_abs()).min().unwrap_or(0) as u128;
        stats.facets = 1;
        vec![vec![sign]]
    } else {
        // first pass: the facets of the cone, without tracking the boundary
        let mut hull = Triangulation::new(&local, None, budget)?;
        hull.insert_all(budget)?;
        let facets: Vec<Vec<i64>> = hull.alive_facets().map(|f| f.normal.clone()).collect();
        drop(hull);
        // second pass: the triangulation, reducing parallelepiped points
        // against the generators as soon as they appear
        let sieve = Sieve::new(&local, &facets)?;
        let mut tri = Triangulation::new(&local, Some(sieve), budget)?;
        tri.insert_all(budget)?;
        let sieve = tri.sieve.take().expect("second pass tracks the boundary");
        stats.simplices = tri.simplex_count;
        stats.multiplicity = tri.multiplicity;
        stats.facets = facets.len();
        stats.box_points = sieve.box_points;
        let mut candidates: Vec<Vec<i64>> = local.clone();
        candidates.extend(sieve.survivors);
        reduce(candidates, &facets, budget)?
    };

    let basis = local_basis
        .iter()
        .map(|y| {
            let mut x = vec![0i64; dim];
            for (yi, row) in y.iter().zip(&lattice) {
                for (xc, &b) in x.iter_mut().zip(row) {
                    *xc = yi
                        .checked_mul(b)
                        .and_then(|p| xc.checked_add(p))
                        .ok_or(Error::Overflow("lattice to ambient coordinates"))?;
                }
            }
            Ok(x)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((basis, stats))
}

fn dot(a: &[i64], b: &[i64]) -> Result<i64> {
    let s: i128 = a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum();
    i64::try_from(s).map_err(|_| Error::Overflow("linear form evaluation"))
}

#[derive(Clone, Debug)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(bits: usize) -> Self {
        BitSet(vec![0; bits.div_ceil(64)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_subset(&self, other: &BitSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    /// The only element of `self \ other`, if there is exactly one.
    fn single_outside(&self, other: &BitSet) -> Option<usize> {
        let mut found = None;
        for (w, (a, b)) in self.0.iter().zip(&other.0).enumerate() {
            let d = a & !b;
            if d != 0 {
                if found.is_some() || d.count_ones() > 1 {
                    return None;
                }
                found = Some(w * 64 + d.trailing_zeros() as usize);
            }
        }
        found
    }
    fn elements(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (w, &word) in self.0.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                out.push((w * 64) as u32 + bits.trailing_zeros());
                bits &= bits - 1;
            }
        }
        out
    }
}

/// The maximal faces of the triangulated boundary inside one facet, stored
/// flat: face `k` is the vertex bitset `words[k * stride..(k + 1) * stride]`
/// of `r - 1` generators, and `kappa[k]` is the factor with
/// `|det(verts, y)| = kappa * |facet(y)|` for every `y`.
#[derive(Clone, Debug, Default)]
struct FaceList {
    stride: usize,
    words: Vec<u64>,
    kappa: Vec<i64>,
}

impl FaceList {
    fn new(stride: usize) -> Self {
        FaceList {
            stride,
            ..FaceList::default()
        }
    }
    fn len(&self) -> usize {
        self.kappa.len()
    }
    fn push(&mut self, verts: &BitSet, kappa: i64) {
        self.words.extend_from_slice(&verts.0);
        self.kappa.push(kappa);
    }
    fn get(&self, k: usize) -> (BitSet, i64) {
        (BitSet(self.words[k * self.stride..(k + 1) * self.stride].to_vec()), self.kappa[k])
    }
}

/// Streams the parallelepiped points of the simplices, keeping only those
/// not reducible by a single generator. Every Hilbert basis element
/// survives, and whatever else survives is removed by the final reduction.
struct Sieve {
    facets: Vec<Vec<i64>>,
    /// Facet values of the generators.
    generator_values: Vec<Vec<i64>>,
    survivors: HashSet<Vec<i64>>,
    box_points: u64,
}

impl Sieve {
    fn new(gens: &[Vec<i64>], facets: &[Vec<i64>]) -> Result<Self> {
        let generator_values = gens
            .iter()
            .map(|g| facets.iter().map(|f| dot(f, g)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        Ok(Sieve {
            facets: facets.to_vec(),
            generator_values,
            survivors: HashSet::new(),
            box_points: 0,
        })
    }

    fn absorb(&mut self, gens: &[Vec<i64>], verts: &[u32], det: i64) -> Result<()> {
        for p in box_points(gens, verts, det)? {
            self.box_points += 1;
            let values: Vec<i64> = self.facets.iter().map(|f| dot(f, &p)).collect::<Result<_>>()?;
            let reducible = self
                .generator_values
                .iter()
                .any(|g| g.iter().zip(&values).all(|(a, b)| a <= b));
            if !reducible {
                self.survivors.insert(p);
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
struct Facet {
    /// Primitive inner normal: nonnegative on the cone.
    normal: Vec<i64>,
    /// Inserted generators on this facet.
    incidence: BitSet,
    faces: FaceList,
    alive: bool,
}

struct Triangulation<'a> {
    gens: &'a [Vec<i64>],
    r: usize,
    facets: Vec<Facet>,
    inserted: Vec<bool>,
    simplex_count: u64,
    multiplicity: u128,
    /// Present when the boundary is tracked; it receives the simplices with
    /// determinant above 1, which carry parallelepiped points.
    sieve: Option<Sieve>,
    /// Boundary faces currently stored over all live facets.
    boundary_faces: usize,
}

impl<'a> Triangulation<'a> {
    fn new(gens: &'a [Vec<i64>], sieve: Option<Sieve>, budget: &Budget) -> Result<Self> {
        let r = gens[0].len();
        let start = linalg::independent_rows(gens);
        if start.len() != r {
            return Err(Error::InvalidInput("generators do not span their lattice".into()));
        }
        // matrix with the start generators as columns
        let m: Vec<Vec<i64>> = (0..r).map(|i| start.iter().map(|&s| gens[s][i]).collect()).collect();
        let (inv, det) = linalg::inverse(&m)?;
        let det = linalg::to_i64(&det.abs())?;
        let mut tri = Triangulation {
            gens,
            r,
            facets: Vec::new(),
            inserted: vec![false; gens.len()],
            simplex_count: 0,
            multiplicity: 0,
            sieve,
            boundary_faces: 0,
        };
        let stride = gens.len().div_ceil(64);
        for (i, row) in inv.iter().enumerate() {
            let normal: Vec<i64> = linalg::primitive(row).iter().map(linalg::to_i64).collect::<Result<_>>()?;
            let height = dot(&normal, &gens[start[i]])?;
            let mut incidence = BitSet::new(gens.len());
            for (j, &s) in start.iter().enumerate() {
                if j != i {
                    incidence.insert(s);
                }
            }
            let mut faces = FaceList::new(stride);
            if tri.sieve.is_some() {
                faces.push(&incidence, exact_div(det, height)?);
                tri.boundary_faces += 1;
            }
            tri.facets.push(Facet {
                normal,
                faces,
                incidence,
                alive: true,
            });
        }
        if tri.sieve.is_some() {
            let mut verts = BitSet::new(gens.len());
            start.iter().for_each(|&s| verts.insert(s));
            tri.record_simplex(&verts, det)?;
        }
        for &s in &start {
            tri.inserted[s] = true;
        }
        budget.check_time("initial simplex")?;
        Ok(tri)
    }

    fn record_simplex(&mut self, verts: &BitSet, det: i64) -> Result<()> {
        self.simplex_count += 1;
        self.multiplicity += det as u128;
        match &mut self.sieve {
            Some(sieve) if det > 1 => sieve.absorb(self.gens, &verts.elements(), det),
            _ => Ok(()),
        }
    }

    fn alive_facets(&self) -> impl Iterator<Item = &Facet> {
        self.facets.iter().filter(|f| f.alive)
    }

    fn insert_all(&mut self, budget: &Budget) -> Result<()> {
        for x in 0..self.gens.len() {
            if !self.inserted[x] {
                self.insert(x, budget)?;
                budget.check_time("triangulation")?;
            }
        }
        Ok(())
    }

    fn insert(&mut self, x: usize, budget: &Budget) -> Result<()> {
        let y = &self.gens[x];
        let alive: Vec<usize> = (0..self.facets.len()).filter(|&i| self.facets[i].alive).collect();
        let mut sigma = vec![0i64; self.facets.len()];
        for &i in &alive {
            sigma[i] = dot(&self.facets[i].normal, y)?;
        }
        let visible: Vec<usize> = alive.iter().copied().filter(|&i| sigma[i] < 0).collect();
        if visible.is_empty() {
            // already inside the current cone: not a vertex of the triangulation
            return Ok(());
        }
        let hidden: Vec<usize> = alive.iter().copied().filter(|&i| sigma[i] >= 0).collect();

        // Horizon ridges: (visible F, hidden G, F∩G incidence, facet that
        // will carry the new boundary faces over this ridge).
        let mut horizon: Vec<(usize, BitSet, usize)> = Vec::new();
        let mut horizon_of: Vec<Vec<usize>> = vec![Vec::new(); self.facets.len()];
        let mut new_facets: Vec<Facet> = Vec::new();
        for &f in &visible {
            for &g in &hidden {
                budget.tick("facet adjacency")?;
                let z = self.facets[f].incidence.and(&self.facets[g].incidence);
                if z.len() + 2 < self.r {
                    continue;
                }
                let blocked = alive
                    .iter()
                    .any(|&h| h != f && h != g && z.is_subset(&self.facets[h].incidence));
                if blocked {
                    continue;
                }
                let target = if sigma[g] == 0 {
                    g
                } else {
                    let normal = combine(&self.facets[f].normal, sigma[g], &self.facets[g].normal, -sigma[f])?;
                    let mut incidence = z.clone();
                    incidence.insert(x);
                    new_facets.push(Facet {
                        normal,
                        incidence,
                        faces: FaceList::new(z.0.len()),
                        alive: true,
                    });
                    self.facets.len() + new_facets.len() - 1
                };
                horizon_of[f].push(horizon.len());
                horizon.push((g, z, target));
            }
        }
        self.facets.extend(new_facets);

        for &f in &visible {
            let height = -sigma[f];
            let faces = std::mem::take(&mut self.facets[f].faces);
            self.boundary_faces -= faces.len();
            for k in 0..faces.len() {
                budget.tick("simplex")?;
                let (face, kappa) = faces.get(k);
                let det = kappa.checked_mul(height).ok_or(Error::Overflow("simplex determinant"))?;
                let mut verts = face.clone();
                verts.insert(x);
                self.record_simplex(&verts, det)?;
                for &h in &horizon_of[f] {
                    let (_, z, target) = &horizon[h];
                    let Some(g) = face.single_outside(z) else {
                        continue;
                    };
                    let mut verts = face.clone();
                    verts.remove(g);
                    verts.insert(x);
                    let t_height = dot(&self.facets[*target].normal, &self.gens[g])?.abs();
                    self.facets[*target].faces.push(&verts, exact_div(det, t_height)?);
                    self.boundary_faces += 1;
                }
            }
            budget.check_time("parallelepiped enumeration")?;
        }
        for &g in &hidden {
            if sigma[g] == 0 {
                self.facets[g].incidence.insert(x);
            }
        }
        for &f in &visible {
            self.facets[f].alive = false;
        }
        self.inserted[x] = true;
        if self.boundary_faces > MAX_BOUNDARY_FACES {
            return Err(budget.exceeded("triangulation boundary exceeds the memory bound"));
        }
        Ok(())
    }
}

fn exact_div(a: i64, b: i64) -> Result<i64> {
    if b == 0 || a % b != 0 {
        return Err(Error::InvalidInput(format!(
            "triangulation invariant broken: {a} not divisible by {b}"
        )));
    }
    Ok(a / b)
}

/// Primitive `a * u + b * v`.
fn combine(u: &[i64], a: i64, v: &[i64], b: i64) -> Result<Vec<i64>> {
    let mut out: Vec<i64> = u
        .iter()
        .zip(v)
        .map(|(&x, &y)| {
            let s = a as i128 * x as i128 + b as i128 * y as i128;
            i64::try_from(s).map_err(|_| Error::Overflow("facet normal"))
        })
        .collect::<Result<_>>()?;
    let g = out.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g > 1 {
        out.iter_mut().for_each(|x| *x /= g);
    }
    Ok(out)
}

/// Nonzero lattice points `Σ λ_i v_i` with `0 <= λ_i < 1` of the simplicial
/// cone on `verts`; they form the group `Z^r / M Z^r` of order `det`.
fn box_points(gens: &[Vec<i64>], verts: &[u32], det: i64) -> Result<Vec<Vec<i64>>> {
    let r = verts.len();
    let m: Vec<Vec<i64>> = (0..r).map(|i| verts.iter().map(|&v| gens[v as usize][i]).collect()).collect();
    let (inv, d) = linalg::inverse(&m)?;
    let d = d.abs();
    if linalg::to_i64(&d)? != det {
        return Err(Error::InvalidInput("simplex determinant mismatch".into()));
    }
    let dq = Q::from_integer(d.clone());
    // image of unit vector e_j: λ = column j of the inverse, scaled by det
    let generators: Vec<Vec<i64>> = (0..r)
        .map(|j| {
            (0..r)
                .map(|i| {
                    let a: BigInt = (&inv[i][j] * &dq).to_integer();
                    a.mod_floor(&d).to_i64().ok_or(Error::Overflow("parallelepiped group"))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let zero = vec![0i64; r];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(a) = queue.pop_front() {
        for g in &generators {
            let b: Vec<i64> = a.iter().zip(g).map(|(x, y)| (x + y) % det).collect();
            if seen.insert(b.clone()) {
                queue.push_back(b);
            }
        }
    }
    if seen.len() as i64 != det {
        return Err(Error::InvalidInput("parallelepiped group has the wrong order".into()));
    }
    let mut out = Vec::with_capacity(seen.len() - 1);
    for a in seen {
        if a.iter().all(|&x| x == 0) {
            continue;
        }
        let mut p = vec![0i128; r];
        for (ai, &v) in a.iter().zip(verts) {
            for (pc, &gc) in p.iter_mut().zip(&gens[v as usize]) {
                *pc += *ai as i128 * gc as i128;
            }
        }
        let point = p
            .into_iter()
            .map(|c| {
                if c % det as i128 != 0 {
                    return Err(Error::InvalidInput("parallelepiped point is not integral".into()));
                }
                i64::try_from(c / det as i128).map_err(|_| Error::Overflow("parallelepiped point"))
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(point);
    }
    out.sort();
    Ok(out)
}

/// Irreducible elements among `candidates`, which must contain the whole
/// Hilbert basis. `y` reduces `x` when `x - y` lies in the cone, i.e. every
/// facet value of `x` dominates that of `y`.
fn reduce(candidates: Vec<Vec<i64>>, facets: &[Vec<i64>], budget: &Budget) -> Result<Vec<Vec<i64>>> {
    let mut keyed: Vec<(i64, Vec<i64>, Vec<i64>)> = candidates
        .into_iter()
        .map(|c| {
            let values: Vec<i64> = facets.iter().map(|f| dot(f, &c)).collect::<Result<_>>()?;
            let degree = values.iter().try_fold(0i64, |acc, &v| acc.checked_add(v));
            Ok((degree.ok_or(Error::Overflow("degree"))?, values, c))
        })
        .collect::<Result<_>>()?;
    keyed.sort();
    keyed.dedup_by(|a, b| a.1 == b.1);
    let mut basis: Vec<(i64, Vec<i64>, Vec<i64>)> = Vec::new();
    for cand in keyed {
        budget.tick("reduction")?;
        let reducible = basis
            .iter()
            .any(|(d, v, _)| *d < cand.0 && v.iter().zip(&cand.1).all(|(a, b)| a <= b));
        if !reducible {
            basis.push(cand);
        }
    }
    Ok(basis.into_iter().map(|(_, _, c)| c).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hb(gens: &[Vec<i64>]) -> Vec<Vec<i64>> {
        hilbert_basis_dense(gens, &Budget::unlimited()).unwrap().basis
    }

    #[test]
    fn two_dimensional_cone_needs_interior_point() {
        // cone over (1,0) and (1,2): lattice point (1,1) is irreducible
        assert_eq!(hb(&[vec![1, 0], vec![1, 2]]), vec![vec![1, 0], vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn classic_cone_over_2_3() {
        // cone((0,1),(2,3)) in Z^2: basis (0,1),(1,2),(2,3)
        assert_eq!(hb(&[vec![0, 1], vec![2, 3]]), vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn non_primitive_ray_and_saturation() {
        assert_eq!(hb(&[vec![2, 2]]), vec![vec![1, 1]]);
        // span{(2,0,0),(0,2,0)} contains (1,1,0) etc.
        assert_eq!(hb(&[vec![2, 0, 0], vec![0, 2, 0]]), vec![vec![0, 1, 0], vec![1, 0, 0]]);
    }

    #[test]
    fn interior_generators_are_reduced_away() {
        let basis = hb(&[vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1]]);
        assert_eq!(basis, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn square_pyramid_is_normal() {
        // cone over the unit square at height 1: non-simplicial, unimodular pieces
        let gens = vec![vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]];
        let out = hilbert_basis_dense(&gens, &Budget::unlimited()).unwrap();
        assert_eq!(out.basis.len(), 4);
        assert_eq!(out.blocks[0].multiplicity, 2);
        assert_eq!(out.blocks[0].facets, 4);
    }

    #[test]
    fn reeve_tetrahedron_cone() {
        // cone over (0,0,0),(1,0,0),(0,1,0),(1,1,h) at height 1 has
        // multiplicity h and h-1 extra degree-2 basis elements
        let h = 4;
        let gens = vec![vec![0, 0, 0, 1], vec![1, 0, 0, 1], vec![0, 1, 0, 1], vec![1, 1, h, 1]];
        let out = hilbert_basis_dense(&gens, &Budget::unlimited()).unwrap();
        assert_eq!(out.blocks[0].multiplicity, h as u128);
        assert_eq!(out.basis.len(), 4 + (h as usize - 1));
    }

    #[test]
    fn private_generators_split_off() {
        // after (1,0,0,0) and (0,1,0,1) leave, coordinate 3 becomes private too
        let gens = vec![vec![1, 0, 0, 0], vec![0, 1, 0, 1], vec![0, 0, 2, 1]];
        let out = hilbert_basis_dense(&gens, &Budget::unlimited()).unwrap();
        assert_eq!(out.private_generators, 3);
        assert_eq!(out.basis.len(), 3);
        assert!(out.blocks.is_empty());
    }

    #[test]
    fn disjoint_blocks_are_independent() {
        let gens = vec![vec![1, 0, 0, 0], vec![1, 2, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 1, 2]];
        let out = hilbert_basis_dense(&gens, &Budget::unlimited()).unwrap();
        assert_eq!(out.blocks.len(), 2);
        assert_eq!(
            out.basis,
            vec![
                vec![0, 0, 1, 0],
                vec![0, 0, 1, 1],
                vec![0, 0, 1, 2],
                vec![1, 0, 0, 0],
                vec![1, 1, 0, 0],
                vec![1, 2, 0, 0]
            ]
        );
    }

    #[test]
    fn rejects_negative_entries() {
        assert!(hilbert_basis_dense(&[vec![1, -1]], &Budget::unlimited()).is_err());
    }
}
