//! Oracles and generators shared by the integration tests. Nothing here
//! calls into the library's linear algebra.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

use toric_cox::fans::Fan;
use toric_cox::intlin::{IntMatrix, IntVector};

pub fn q(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

/// Row-reduces a rational matrix in place; returns the pivot columns.
fn rref(rows: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank_q(vectors: &[Vec<BigRational>]) -> usize {
    let cols = vectors.first().map_or(0, Vec::len);
    let mut rows = vectors.to_vec();
    rref(&mut rows, cols).len()
}

pub fn rank_int(vectors: &[IntVector]) -> usize {
    rank_q(
        &vectors
            .iter()
            .map(|v| v.iter().map(q).collect())
            .collect::<Vec<_>>(),
    )
}

/// Determinant by rational elimination.
pub fn det_q(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a.iter().map(|r| r.iter().map(q).collect()).collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return BigInt::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det = &det * &m[c][c];
        for i in c + 1..n {
            let f = &m[i][c] / &m[c][c];
            let pivot_row = m[c].clone();
            for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                *x = &*x - &f * y;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

pub fn matrix_rows(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    a.row_vectors()
}

/// Solves `Σ λᵢ colsᵢ = p` for linearly independent columns.
pub fn solve_independent(cols: &[Vec<BigRational>], p: &[BigRational]) -> Option<Vec<BigRational>> {
    let k = cols.len();
    let n = p.len();
    let mut rows: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut r: Vec<BigRational> = cols.iter().map(|c| c[i].clone()).collect();
            r.push(p[i].clone());
            r
        })
        .collect();
    let pivots = rref(&mut rows, k + 1);
    if pivots.contains(&k) {
        return None;
    }
    let mut lambda = vec![BigRational::zero(); k];
    for (r, &c) in pivots.iter().enumerate() {
        lambda[c] = rows[r][k].clone();
    }
    Some(lambda)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if k > n {
        return vec![];
    }
    let mut out = Vec::new();
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out.extend(subsets(n - 1, k));
    out
}

/// Carathéodory: `p ∈ cone(rays)` iff `p` is a nonnegative combination of a
/// linearly independent subset.
pub fn in_cone_oracle(rays: &[IntVector], p: &[BigRational]) -> bool {
    if p.iter().all(Zero::is_zero) {
        return true;
    }
    let n = p.len();
    let cols: Vec<Vec<BigRational>> = rays.iter().map(|r| r.iter().map(q).collect()).collect();
    for k in 1..=n.min(rays.len()) {
        for s in subsets(rays.len(), k) {
            let chosen: Vec<Vec<BigRational>> = s.iter().map(|&i| cols[i].clone()).collect();
            if rank_q(&chosen) != k {
                continue;
            }
            if let Some(l) = solve_independent(&chosen, p) {
                if l.iter().all(|x| !x.is_negative()) {
                    return true;
                }
            }
        }
    }
    false
}

pub fn in_cone_oracle_int(rays: &[IntVector], p: &[BigInt]) -> bool {
    in_cone_oracle(rays, &p.iter().map(q).collect::<Vec<_>>())
}

/// Support membership: some maximal cone contains `p`.
pub fn in_support_oracle(fan: &Fan, p: &[BigRational]) -> bool {
    fan.max_cones().iter().any(|c| in_cone_oracle(c.rays(), p))
}

/// Invariant factors from determinantal divisors: `sₖ = dₖ / dₖ₋₁` with
/// `dₖ` the gcd of all `k × k` minors.
pub fn determinantal_invariants(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut divisors = vec![BigInt::one()];
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| a[i][j].clone()).collect())
                    .collect();
                g = g.gcd(&det_q(&minor));
            }
        }
        if g.is_zero() {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| &w[1] / &w[0]).collect()
}

pub fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let data: Vec<IntVector> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
                .collect()
        })
        .collect();
    IntMatrix::from_rows(cols, data).unwrap()
}

pub fn primitive(v: &[BigInt]) -> IntVector {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    v.iter().map(|x| x / &g).collect()
}

fn random_primitive_basis(rng: &mut StdRng, n: usize, bound: i64) -> Vec<IntVector> {
    loop {
        let vs: Vec<IntVector> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
                    .collect()
            })
            .collect();
        if !det_q(&vs).is_zero() {
            return vs.iter().map(|v| primitive(v)).collect();
        }
    }
}

/// Builds a fan from rays and maximal cones, dropping unused rays.
pub fn fan_from_parts(rank: usize, rays: &[IntVector], cones: &[Vec<usize>]) -> Fan {
    let mut used: Vec<usize> = cones.iter().flatten().copied().collect();
    used.sort_unstable();
    used.dedup();
    let new_rays: Vec<IntVector> = used.iter().map(|&i| rays[i].clone()).collect();
    let reindexed: Vec<Vec<usize>> = cones
        .iter()
        .map(|c| c.iter().map(|i| used.binary_search(i).unwrap()).collect())
        .collect();
    Fan::from_ray_indices(rank, new_rays, &reindexed).expect("generated fan is valid")
}

/// A random simplicial fan of the given rank: a complete fan of
/// `ℙ^n` type or a single simplicial cone, refined by stellar subdivisions.
/// Returns rays and maximal cones as index sets.
pub fn random_simplicial_parts(rng: &mut StdRng, rank: usize) -> (Vec<IntVector>, Vec<Vec<usize>>) {
    let basis = random_primitive_basis(rng, rank, 2);
    let (mut rays, mut cones) = if rng.gen_bool(0.7) {
        let mut rays = basis.clone();
        let sum: IntVector = (0..rank)
            .map(|j| -basis.iter().map(|v| &v[j]).sum::<BigInt>())
            .collect();
        rays.push(primitive(&sum));
        let cones = (0..=rank)
            .map(|skip| (0..=rank).filter(|&i| i != skip).collect())
            .collect();
        (rays, cones)
    } else {
        (basis, vec![(0..rank).collect::<Vec<_>>()])
    };
    if rank >= 2 {
        for _ in 0..rng.gen_range(0..=3) {
            let sigma: Vec<usize> = cones.choose(rng).unwrap().clone();
            let k = rng.gen_range(2..=sigma.len());
            let tau: Vec<usize> = sigma.choose_multiple(rng, k).copied().collect();
            let sum: IntVector = (0..rank)
                .map(|j| tau.iter().map(|&i| &rays[i][j]).sum())
                .collect();
            rays.push(primitive(&sum));
            let new = rays.len() - 1;
            let mut next = Vec::new();
            for c in cones {
                if tau.iter().all(|i| c.contains(i)) {
                    for r in &tau {
                        let mut d: Vec<usize> = c.iter().copied().filter(|i| i != r).collect();
                        d.push(new);
                        d.sort_unstable();
                        next.push(d);
                    }
                } else {
                    next.push(c);
                }
            }
            cones = next;
        }
    }
    (rays, cones)
}

/// A random simplicial fan, possibly with some maximal cones removed. All
/// maximal cones are full-dimensional.
pub fn random_pure_fan(rng: &mut StdRng, rank: usize) -> Fan {
    let (rays, mut cones) = random_simplicial_parts(rng, rank);
    if cones.len() > 1 && rng.gen_bool(0.6) {
        cones.shuffle(rng);
        let keep = rng.gen_range(1..cones.len());
        cones.truncate(keep);
        cones.sort();
    }
    fan_from_parts(rank, &rays, &cones)
}

/// Random simplicial fans of rank 1 to 3, including lower-dimensional
/// maximal cones.
pub fn random_simplicial_fan(rng: &mut StdRng) -> Fan {
    let rank = *[1, 2, 2, 3, 3].choose(rng).unwrap();
    let (rays, mut cones) = random_simplicial_parts(rng, rank);
    if cones.len() > 1 && rng.gen_bool(0.4) {
        cones.shuffle(rng);
        cones.truncate(rng.gen_range((cones.len() / 2).max(1)..cones.len()));
    }
    if rng.gen_bool(0.25) {
        // replace a maximal cone by one of its proper faces
        let i = rng.gen_range(0..cones.len());
        let keep = rng.gen_range(0..cones[i].len());
        let face: Vec<usize> = cones[i][..keep].to_vec();
        cones.remove(i);
        if !face.is_empty() && !cones.iter().any(|c| face.iter().all(|r| c.contains(r))) {
            cones.push(face);
        }
    }
    if cones.is_empty() {
        return Fan::from_ray_indices(rank, vec![], &[]).unwrap();
    }
    fan_from_parts(rank, &rays, &cones)
}

/// A random point `Σ λᵢ rᵢ` with nonnegative rational `λᵢ`.
pub fn random_point_in_cone(rng: &mut StdRng, rays: &[IntVector], rank: usize) -> Vec<BigRational> {
    let mut p = vec![BigRational::zero(); rank];
    for r in rays {
        let lambda = BigRational::new(rng.gen_range(0..=12).into(), rng.gen_range(1..=5).into());
        for (x, y) in p.iter_mut().zip(r) {
            *x = &*x + &lambda * q(y);
        }
    }
    p
}
