//! Exact integer and rational linear algebra used by the cone computations:
//! ranks, inverses, integer kernels and saturated lattice bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

fn qi(x: i64) -> Q {
    Q::from_integer(BigInt::from(x))
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn to_rational(m: &[Vec<i64>]) -> Vec<Vec<Q>> {
    m.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect()
}

pub fn rank(m: &[Vec<i64>]) -> usize {
    rref(&mut to_rational(m)).len()
}

/// Indices of a maximal linearly independent subset, chosen greedily in order.
pub fn independent_rows(m: &[Vec<i64>]) -> Vec<usize> {
    let cols = m.first().map_or(0, |r| r.len());
    // Incremental elimination against the basis found so far.
    let mut basis: Vec<(usize, Vec<Q>)> = Vec::new(); // (pivot col, normalized row)
    let mut chosen = Vec::new();
    for (i, row) in m.iter().enumerate() {
        let mut v: Vec<Q> = row.iter().map(|&x| qi(x)).collect();
        for (p, b) in &basis {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(b) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        if let Some(p) = (0..cols).find(|&c| !v[c].is_zero()) {
            let inv = v[p].recip();
            for x in v.iter_mut() {
                *x *= &inv;
            }
            // keep earlier basis rows reduced at the new pivot
            for (_, b) in basis.iter_mut() {
                if !b[p].is_zero() {
                    let f = b[p].clone();
                    for (x, y) in b.iter_mut().zip(&v) {
                        if !y.is_zero() {
                            *x -= &f * y;
                        }
                    }
                }
            }
            basis.push((p, v));
            chosen.push(i);
        }
    }
    chosen
}

/// Inverse of a square integer matrix and its determinant.
pub fn inverse(m: &[Vec<i64>]) -> Result<(Vec<Vec<Q>>, BigInt)> {
    let n = m.len();
    let mut aug: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<Q> = r.iter().map(|&x| qi(x)).collect();
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    let mut det = Q::one();
    for c in 0..n {
        let p = (c..n)
            .find(|&i| !aug[i][c].is_zero())
            .ok_or_else(|| Error::InvalidInput("singular matrix".into()))?;
        if p != c {
            aug.swap(p, c);
            det = -det;
        }
        let pv = aug[c][c].clone();
        det *= &pv;
        let inv = pv.recip();
        for x in aug[c].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = aug[c].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
    }
    let inv = aug.into_iter().map(|r| r[n..].to_vec()).collect();
    Ok((inv, det.to_integer()))
}

/// Scales a rational vector to the primitive integer vector with the same
/// direction.
pub fn primitive(v: &[Q]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub fn to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64().ok_or(Error::Overflow("integer coordinates"))
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// Rational basis of `{y : M y = 0}`.
pub fn rational_kernel(m: &[Vec<i64>], cols: usize) -> Vec<Vec<Q>> {
    let mut r = to_rational(m);
    let pivots = rref(&mut r);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut y = vec![Q::zero(); cols];
            y[f] = Q::one();
            for (row, &p) in r.iter().zip(&pivots) {
                y[p] = -row[f].clone();
            }
            y
        })
        .collect()
}

/// Z-basis, in row Hermite normal form, of the saturated lattice
/// `span(rows) ∩ Z^cols`.
pub fn saturated_basis(rows: &[Vec<i64>], cols: usize) -> Result<Vec<Vec<BigInt>>> {
    // Orthogonal complement of the row span, as integer vectors.
    let normals: Vec<Vec<BigInt>> = rational_kernel(rows, cols).iter().map(|v| primitive(v)).collect();
    // Integer kernel of the normals via unimodular column operations.
    let k = normals.len();
    let mut a = normals;
    let mut u: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| (0..cols).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect(); // columns of u track the transform; u[row][col]
    for i in 0..k {
        // bring a nonzero entry to column i
        let p = (i..cols)
            .find(|&j| !a[i][j].is_zero())
            .ok_or_else(|| Error::InvalidInput("dependent normal vectors".into()))?;
        if p != i {
            swap_cols(&mut a, i, p);
            swap_cols(&mut u, i, p);
        }
        for j in i + 1..cols {
            if a[i][j].is_zero() {
                continue;
            }
            let x = a[i][i].clone();
            let y = a[i][j].clone();
            let e = x.extended_gcd(&y);
            let (g, s, t) = (e.gcd, e.x, e.y);
            let xg = &x / &g;
            let yg = &y / &g;
            // (col_i, col_j) <- (s col_i + t col_j, -yg col_i + xg col_j)
            combine_cols(&mut a, i, j, &s, &t, &(-&yg), &xg);
            combine_cols(&mut u, i, j, &s, &t, &(-&yg), &xg);
        }
    }
    let basis: Vec<Vec<BigInt>> = (k..cols).map(|c| u.iter().map(|row| row[c].clone()).collect()).collect();
    Ok(hermite_rows(basis))
}

fn swap_cols(m: &mut [Vec<BigInt>], i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

fn combine_cols(m: &mut [Vec<BigInt>], i: usize, j: usize, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) {
    for row in m.iter_mut() {
        let x = row[i].clone();
        let y = row[j].clone();
        row[i] = a * &x + b * &y;
        row[j] = c * &x + d * &y;
    }
}

/// Row Hermite normal form of a full-row-rank integer matrix.
pub fn hermite_rows(mut m: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Euclid on column c among rows r..
        loop {
            let nz: Vec<usize> = (r..rows).filter(|&i| !m[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| m[i][c].abs()).expect("nonempty");
            m.swap(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if !m[i][c].is_zero() {
                    let f = m[i][c].div_floor(&m[r][c]);
                    let pivot_row = m[r].clone();
                    for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                        *x -= &f * y;
                    }
                    if !m[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if m[r][c].is_zero() {
            continue;
        }
        if m[r][c].is_negative() {
            for x in m[r].iter_mut() {
                *x = -x.clone();
            }
        }
        let pivot_row = m[r].clone();
        for i in 0..r {
            let f = m[i][c].div_floor(&pivot_row[c]);
            if !f.is_zero() {
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    m
}

/// Coordinates of `v` in a row-echelon basis, `None` if `v` is not an
/// integer combination of the basis rows.
pub fn echelon_coordinates(basis: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    let mut rest: Vec<i128> = v.iter().map(|&x| x as i128).collect();
    let mut out = Vec::with_capacity(basis.len());
    for b in basis {
        let p = b.iter().position(|&x| x != 0)?;
        let bp = b[p] as i128;
        if rest[p] % bp != 0 {
            return None;
        }
        let y = rest[p] / bp;
        for (r, &x) in rest.iter_mut().zip(b) {
            *r -= y * x as i128;
        }
        out.push(i64::try_from(y).ok()?);
    }
    rest.iter().all(|&x| x == 0).then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(m: &[Vec<BigInt>]) -> Vec<Vec<i64>> {
        m.iter().map(|r| r.iter().map(|x| to_i64(x).unwrap()).collect()).collect()
    }

    #[test]
    fn rank_and_independent_rows() {
        let m = vec![vec![1, 0, 1], vec![2, 0, 2], vec![0, 1, 0], vec![1, 1, 1]];
        assert_eq!(rank(&m), 2);
        assert_eq!(independent_rows(&m), vec![0, 2]);
    }

    #[test]
    fn inverse_and_det() {
        let m = vec![vec![2, 1], vec![1, 1]];
        let (inv, det) = inverse(&m).unwrap();
        assert_eq!(det, BigInt::from(1));
        assert_eq!(inv[0][0], qi(1));
        assert_eq!(inv[0][1], qi(-1));
        let m = vec![vec![0, 2], vec![3, 0]];
        assert_eq!(inverse(&m).unwrap().1, BigInt::from(-6));
        assert!(inverse(&[vec![1, 1], vec![1, 1]]).is_err());
    }

    #[test]
    fn saturation_adds_missing_lattice_points() {
        // span of (2,0) and (0,2) is everything; lattice must be Z^2
        let b = big(&saturated_basis(&[vec![2, 0], vec![0, 2]], 2).unwrap());
        assert_eq!(b, vec![vec![1, 0], vec![0, 1]]);
        // span of (2,2,0): saturated by (1,1,0)
        let b = big(&saturated_basis(&[vec![2, 2, 0]], 3).unwrap());
        assert_eq!(b, vec![vec![1, 1, 0]]);
        // plane x + y = z with generators (1,0,1), (1,2,3)
        let b = big(&saturated_basis(&[vec![1, 0, 1], vec![1, 2, 3]], 3).unwrap());
        assert_eq!(b.len(), 2);
        for v in [[0, 1, 1], [1, 0, 1], [3, 4, 7]] {
            assert!(echelon_coordinates(&b, &v).is_some(), "{v:?}");
        }
        assert!(echelon_coordinates(&b, &[1, 1, 1]).is_none());
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![Q::new(1.into(), 2.into()), Q::new((-3).into(), 4.into()), Q::zero()];
        assert_eq!(primitive(&v), vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
    }
}
