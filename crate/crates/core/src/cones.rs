//! Strongly convex rational polyhedral cones.
//!
//! A [`Cone`] stores its extreme rays together with an exact dual
//! description: integer equations cutting out its linear span and one
//! primitive inward facet normal per facet. Facet normals of a cone that is
//! not full-dimensional are taken inside its span, so they are unique.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::intlin::{self, dot, IntMatrix, IntVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConeError {
    #[error("generator {index} is the zero vector and spans no ray")]
    ZeroGenerator { index: usize },
    #[error("generator {index} has {found} coordinates, expected {expected}")]
    WrongLength {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("cone contains a line (not strongly convex)")]
    NotStronglyConvex,
}

/// Equations of the linear span and inward facet normals of the cone
/// generated by `gens`. Works whether or not that cone is pointed.
pub(crate) fn dual_of_generators(
    rank: usize,
    gens: &[IntVector],
) -> (Vec<IntVector>, Vec<IntVector>) {
    let g = IntMatrix::from_columns(rank, gens).expect("generators have ambient length");
    let dim = g.rank();
    let equations = intlin::kernel_basis(&g.transpose());
    if dim == 0 {
        return (equations, Vec::new());
    }
    let mut facets: Vec<IntVector> = Vec::new();
    for subset in combinations(gens.len(), dim - 1) {
        let mut rows: Vec<IntVector> = subset.iter().map(|&i| gens[i].clone()).collect();
        rows.extend(equations.iter().cloned());
        let m = IntMatrix::from_rows(rank, rows).expect("rows have ambient length");
        let kernel = intlin::kernel_basis(&m);
        if kernel.len() != 1 {
            continue;
        }
        let mut u = kernel.into_iter().next().unwrap();
        let values: Vec<BigInt> = gens.iter().map(|x| dot(&u, x)).collect();
        if values.iter().any(|x| x.is_negative()) {
            if values.iter().any(|x| x.is_positive()) {
                continue;
            }
            u = u.into_iter().map(|x| -x).collect();
        }
        if !facets.contains(&u) {
            facets.push(u);
        }
    }
    facets.sort();
    (equations, facets)
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

fn rank_of(rank: usize, rows: Vec<IntVector>) -> usize {
    IntMatrix::from_rows(rank, rows)
        .expect("rows have ambient length")
        .rank()
}

/// Clears denominators of a rational point with a positive scalar.
pub fn clear_denominators(p: &[BigRational]) -> IntVector {
    let l = p.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    p.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// A strongly convex rational polyhedral cone.
#[derive(Clone, Debug)]
pub struct Cone {
    ambient_rank: usize,
    rays: Vec<IntVector>,
    equations: Vec<IntVector>,
    facets: Vec<IntVector>,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_rank == other.ambient_rank && self.ray_set() == other.ray_set()
    }
}

impl Eq for Cone {}

impl std::hash::Hash for Cone {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ambient_rank.hash(state);
        self.ray_set().hash(state);
    }
}

impl Cone {
    /// The cone generated by `generators`, reduced to its primitive extreme rays.
    pub fn from_rays(rank: usize, generators: &[IntVector]) -> Result<Cone, ConeError> {
        let mut gens: Vec<IntVector> = Vec::new();
        for (index, g) in generators.iter().enumerate() {
            if g.len() != rank {
                return Err(ConeError::WrongLength {
                    index,
                    expected: rank,
                    found: g.len(),
                });
            }
            let p = intlin::primitive_vector(g).map_err(|_| ConeError::ZeroGenerator { index })?;
            if !gens.contains(&p) {
                gens.push(p);
            }
        }
        let (equations, facets) = dual_of_generators(rank, &gens);
        let mut all = facets.clone();
        all.extend(equations.iter().cloned());
        if rank_of(rank, all) != rank {
            return Err(ConeError::NotStronglyConvex);
        }
        let rays = gens
            .into_iter()
            .filter(|g| {
                let mut tight: Vec<IntVector> = facets
                    .iter()
                    .filter(|u| dot(u, g).is_zero())
                    .cloned()
                    .collect();
                tight.extend(equations.iter().cloned());
                rank_of(rank, tight) + 1 == rank
            })
            .collect();
        Ok(Cone {
            ambient_rank: rank,
            rays,
            equations,
            facets,
        })
    }

    /// Convenience constructor from machine-integer generators.
    pub fn from_i64(rank: usize, generators: &[&[i64]]) -> Result<Cone, ConeError> {
        let gens: Vec<IntVector> = generators.iter().map(|g| intlin::ivec(g)).collect();
        Cone::from_rays(rank, &gens)
    }

    /// The cone `{0}`.
    pub fn zero(rank: usize) -> Cone {
        Cone::from_rays(rank, &[]).expect("zero cone is strongly convex")
    }

    /// The pointed cone `{x : E·x = 0, N·x ≥ 0}`; `None` if it contains a line.
    pub fn from_constraints(
        rank: usize,
        equations: &[IntVector],
        inequalities: &[IntVector],
    ) -> Option<Cone> {
        let e_rank = rank_of(rank, equations.to_vec());
        if e_rank == rank {
            return Some(Cone::zero(rank));
        }
        let needed = rank - 1 - e_rank;
        let mut rays: Vec<IntVector> = Vec::new();
        for subset in combinations(inequalities.len(), needed) {
            let mut rows = equations.to_vec();
            rows.extend(subset.iter().map(|&i| inequalities[i].clone()));
            let m = IntMatrix::from_rows(rank, rows).expect("constraints have ambient length");
            let kernel = intlin::kernel_basis(&m);
            if kernel.len() != 1 {
                continue;
            }
            let r = &kernel[0];
            let values: Vec<BigInt> = inequalities.iter().map(|u| dot(u, r)).collect();
            let candidate = if values.iter().all(|x| !x.is_negative()) {
                if values.iter().all(Zero::is_zero) {
                    return None;
                }
                r.clone()
            } else if values.iter().all(|x| !x.is_positive()) {
                r.iter().map(|x| -x).collect()
            } else {
                continue;
            };
            if !rays.contains(&candidate) {
                rays.push(candidate);
            }
        }
        rays.sort();
        Cone::from_rays(rank, &rays).ok()
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Primitive extreme rays, in input order.
    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    pub fn ray_set(&self) -> BTreeSet<IntVector> {
        self.rays.iter().cloned().collect()
    }

    /// Integer equations of the linear span.
    pub fn span_equations(&self) -> &[IntVector] {
        &self.equations
    }

    /// Inward primitive facet normals, taken inside the linear span.
    pub fn dual_description(&self) -> &[IntVector] {
        &self.facets
    }

    pub fn dim(&self) -> usize {
        self.ambient_rank - self.equations.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn is_simplicial(&self) -> bool {
        self.rays.len() == self.dim()
    }

    /// Simplicial with rays extending to a lattice basis.
    pub fn is_smooth(&self) -> bool {
        if !self.is_simplicial() {
            return false;
        }
        let m = IntMatrix::from_columns(self.ambient_rank, &self.rays)
            .expect("rays have ambient length");
        intlin::cokernel_invariants(&m).torsion.is_empty()
    }

    pub fn contains_integer_point(&self, p: &[BigInt]) -> bool {
        p.len() == self.ambient_rank
            && self.equations.iter().all(|e| dot(e, p).is_zero())
            && self.facets.iter().all(|u| !dot(u, p).is_negative())
    }

    pub fn contains_point(&self, p: &[BigRational]) -> bool {
        self.contains_integer_point(&clear_denominators(p))
    }

    /// Whether `p` lies in the relative interior.
    pub fn relative_interior_contains(&self, p: &[BigInt]) -> bool {
        self.contains_integer_point(p) && self.facets.iter().all(|u| dot(u, p).is_positive())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.rays.iter().all(|r| self.contains_integer_point(r))
    }

    pub fn intersect(&self, other: &Cone) -> Cone {
        assert_eq!(
            self.ambient_rank, other.ambient_rank,
            "ambient ranks differ"
        );
        let mut equations = self.equations.clone();
        equations.extend(other.equations.iter().cloned());
        let mut inequalities = self.facets.clone();
        inequalities.extend(other.facets.iter().cloned());
        Cone::from_constraints(self.ambient_rank, &equations, &inequalities)
            .expect("intersection of pointed cones is pointed")
    }

    /// The face cut out by the facets of `self` that vanish on all of `rays`.
    fn minimal_face_containing(&self, rays: &[IntVector]) -> Cone {
        let tight: Vec<&IntVector> = self
            .facets
            .iter()
            .filter(|u| rays.iter().all(|r| dot(u, r).is_zero()))
            .collect();
        let face_rays: Vec<IntVector> = self
            .rays
            .iter()
            .filter(|r| tight.iter().all(|u| dot(u, r).is_zero()))
            .cloned()
            .collect();
        Cone::from_rays(self.ambient_rank, &face_rays).expect("faces of pointed cones are pointed")
    }

    pub fn is_face_of(&self, c: &Cone) -> bool {
        self.ambient_rank == c.ambient_rank
            && c.contains_cone(self)
            && c.minimal_face_containing(&self.rays).ray_set() == self.ray_set()
    }

    /// All faces, each once, from `self` down to the zero cone.
    pub fn faces(&self) -> Vec<Cone> {
        let mut seen: HashSet<BTreeSet<IntVector>> = HashSet::new();
        let mut out = vec![self.clone()];
        seen.insert(self.ray_set());
        let mut i = 0;
        while i < out.len() {
            let face = out[i].clone();
            for u in &self.facets {
                if face.rays.iter().all(|r| dot(u, r).is_zero()) {
                    continue;
                }
                let sub: Vec<IntVector> = face
                    .rays
                    .iter()
                    .filter(|r| dot(u, r).is_zero())
                    .cloned()
                    .collect();
                let sub =
                    Cone::from_rays(self.ambient_rank, &sub).expect("subsets of rays are pointed");
                if seen.insert(sub.ray_set()) {
                    out.push(sub);
                }
            }
            i += 1;
        }
        out.sort_by(|a, b| {
            b.dim()
                .cmp(&a.dim())
                .then_with(|| a.ray_set().cmp(&b.ray_set()))
        });
        out
    }

    /// Sum of the rays, a point of the relative interior.
    pub fn interior_point(&self) -> IntVector {
        let mut p = vec![BigInt::zero(); self.ambient_rank];
        for r in &self.rays {
            for (x, y) in p.iter_mut().zip(r) {
                *x += y;
            }
        }
        p
    }
}
