//! Validated fans and their global properties.
//!
//! Besides the fan axioms, this module decides the two hypotheses a toric
//! variety must satisfy before the torus-action pipeline runs:
//! nondegeneracy (the rays span the ambient space) and convex support,
//! which certifies that the variety has no small holes.
//!
//! Convex support is decided exactly through boundary walls. For a pure
//! full-dimensional fan the support is a closed set whose topological
//! boundary lies in the union of the walls that belong to a single maximal
//! cone. If each of those walls sits in a facet hyperplane of
//! `C = cone(all rays)`, the support is relatively open and closed in the
//! interior of `C`, so it equals `C`. Conversely a boundary wall meeting the
//! interior of `C` yields an explicit lattice point of `C` outside the fan.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cones::{dual_of_generators, Cone, ConeError};
use crate::intlin::{self, dot, IntMatrix, IntVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FanError {
    #[error("cone {index}: {source}")]
    Cone { index: usize, source: ConeError },
    #[error("cone {index} lives in rank {found}, fan has rank {expected}")]
    WrongRank {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("maximal cone {inner} is contained in maximal cone {outer}")]
    Containment { inner: usize, outer: usize },
    #[error("cones {first} and {second} overlap: their intersection is not a common face")]
    Overlap { first: usize, second: usize },
    #[error("ray {index} is not primitive; use {hint:?}")]
    NonPrimitiveRay { index: usize, hint: IntVector },
    #[error("ray {index} is the zero vector")]
    ZeroRay { index: usize },
    #[error("ray {index} has {found} coordinates, expected {expected}")]
    RayLength {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("rays {first} and {second} coincide")]
    DuplicateRay { first: usize, second: usize },
    #[error("cone {cone} references ray index {index}, out of range")]
    RayIndexOutOfRange { cone: usize, index: usize },
    #[error("ray {index} is not a one-dimensional cone of the fan")]
    NotARay { index: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// A codimension-one cone of a fan and the maximal cones containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub face: Cone,
    pub incident: Vec<usize>,
}

impl Wall {
    pub fn is_boundary(&self) -> bool {
        self.incident.len() == 1
    }
}

/// Outcome of the convex-support test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SupportConvexity {
    Convex,
    /// `witness` lies in `cone(all rays)` but in no cone of the fan; it sits
    /// just outside `wall`, a boundary wall crossing the interior.
    NotConvex {
        wall: Cone,
        witness: IntVector,
    },
    /// The criterion does not apply (support not pure after span reduction).
    NotCertified {
        reason: String,
    },
}

impl SupportConvexity {
    pub fn is_convex(&self) -> bool {
        matches!(self, SupportConvexity::Convex)
    }

    pub fn label(&self) -> &'static str {
        match self {
            SupportConvexity::Convex => "convex",
            SupportConvexity::NotConvex { .. } => "not-convex",
            SupportConvexity::NotCertified { .. } => "not-certified",
        }
    }
}

/// A fan in a lattice `N ≅ ℤ^rank`.
#[derive(Clone, Debug)]
pub struct Fan {
    rank: usize,
    rays: Vec<IntVector>,
    max_cones: Vec<Cone>,
    max_cone_rays: Vec<Vec<usize>>,
    cones: Vec<Cone>,
}

impl Fan {
    /// Validates the fan generated by `cones`. Rays are numbered by first
    /// appearance along the maximal cones as given. An empty list gives the
    /// fan consisting of the zero cone only.
    pub fn from_max_cones(rank: usize, cones: Vec<Cone>) -> Result<Fan, FanError> {
        let mut rays: Vec<IntVector> = Vec::new();
        for c in &cones {
            for r in c.rays() {
                if !rays.contains(r) {
                    rays.push(r.clone());
                }
            }
        }
        Fan::assemble(rank, rays, cones)
    }

    /// Builds a fan from an explicit ray list and maximal cones given as ray
    /// indices, keeping the ray order. Rays must be primitive and each must be
    /// an extreme ray of some cone.
    pub fn from_ray_indices(
        rank: usize,
        rays: Vec<IntVector>,
        cones: &[Vec<usize>],
    ) -> Result<Fan, FanError> {
        for (index, r) in rays.iter().enumerate() {
            if r.len() != rank {
                return Err(FanError::RayLength {
                    index,
                    expected: rank,
                    found: r.len(),
                });
            }
            let p = intlin::primitive_vector(r).map_err(|_| FanError::ZeroRay { index })?;
            if &p != r {
                return Err(FanError::NonPrimitiveRay { index, hint: p });
            }
            if let Some(first) = rays[..index].iter().position(|x| x == r) {
                return Err(FanError::DuplicateRay {
                    first,
                    second: index,
                });
            }
        }
        let mut built = Vec::with_capacity(cones.len());
        for (ci, idx) in cones.iter().enumerate() {
            let mut gens = Vec::with_capacity(idx.len());
            for &i in idx {
                gens.push(
                    rays.get(i)
                        .ok_or(FanError::RayIndexOutOfRange { cone: ci, index: i })?
                        .clone(),
                );
            }
            built.push(
                Cone::from_rays(rank, &gens)
                    .map_err(|source| FanError::Cone { index: ci, source })?,
            );
        }
        Fan::assemble(rank, rays, built)
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(rank: usize, rays: &[&[i64]], cones: &[&[usize]]) -> Result<Fan, FanError> {
        Fan::from_ray_indices(
            rank,
            rays.iter().map(|r| intlin::ivec(r)).collect(),
            &cones.iter().map(|c| c.to_vec()).collect::<Vec<_>>(),
        )
    }

    fn assemble(
        rank: usize,
        rays: Vec<IntVector>,
        mut max_cones: Vec<Cone>,
    ) -> Result<Fan, FanError> {
        for (index, c) in max_cones.iter().enumerate() {
            if c.ambient_rank() != rank {
                return Err(FanError::WrongRank {
                    index,
                    expected: rank,
                    found: c.ambient_rank(),
                });
            }
        }
        if max_cones.is_empty() {
            max_cones.push(Cone::zero(rank));
        }
        // Overlaps first: a cone sitting inside another without being a face
        // violates the intersection axiom; containment is reported only for
        // redundant faces listed as maximal.
        for i in 0..max_cones.len() {
            for j in i + 1..max_cones.len() {
                let common = max_cones[i].intersect(&max_cones[j]);
                if !common.is_face_of(&max_cones[i]) || !common.is_face_of(&max_cones[j]) {
                    return Err(FanError::Overlap {
                        first: i,
                        second: j,
                    });
                }
            }
        }
        for i in 0..max_cones.len() {
            for j in 0..max_cones.len() {
                if i != j && max_cones[j].contains_cone(&max_cones[i]) {
                    return Err(FanError::Containment { inner: i, outer: j });
                }
            }
        }
        let index: HashMap<&IntVector, usize> =
            rays.iter().enumerate().map(|(i, r)| (r, i)).collect();
        let max_cone_rays: Vec<Vec<usize>> = max_cones
            .iter()
            .map(|c| {
                let mut ids: Vec<usize> = c.rays().iter().map(|r| index[r]).collect();
                ids.sort_unstable();
                ids
            })
            .collect();
        let used: HashSet<usize> = max_cone_rays.iter().flatten().copied().collect();
        if let Some(index) = (0..rays.len()).find(|i| !used.contains(i)) {
            return Err(FanError::NotARay { index });
        }
        let mut seen = HashSet::new();
        let mut cones = Vec::new();
        for c in &max_cones {
            for f in c.faces() {
                if seen.insert(f.ray_set()) {
                    cones.push(f);
                }
            }
        }
        cones.sort_by(|a, b| {
            a.dim()
                .cmp(&b.dim())
                .then_with(|| a.ray_set().cmp(&b.ray_set()))
        });
        Ok(Fan {
            rank,
            rays,
            max_cones,
            max_cone_rays,
            cones,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Primitive ray generators ϱ₁, …, ϱ_m in the fan's fixed order.
    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Cone] {
        &self.max_cones
    }

    /// Ray indices of each maximal cone, sorted.
    pub fn max_cone_ray_indices(&self) -> &[Vec<usize>] {
        &self.max_cone_rays
    }

    /// Every cone of the fan, sorted by dimension.
    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    /// The `rank × m` matrix with the rays as columns.
    pub fn ray_matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.rank, &self.rays).expect("rays have fan rank")
    }

    /// Rays span `N ⊗ ℚ`; equivalently every invertible regular function on
    /// the variety is constant.
    pub fn is_nondegenerate(&self) -> bool {
        self.ray_matrix().rank() == self.rank
    }

    pub fn is_pure_full_dimensional(&self) -> bool {
        self.max_cones.iter().all(|c| c.dim() == self.rank)
    }

    pub fn walls(&self) -> Vec<Wall> {
        if self.rank == 0 {
            return Vec::new();
        }
        let ray_index: HashMap<&IntVector, usize> =
            self.rays.iter().enumerate().map(|(i, r)| (r, i)).collect();
        self.cones
            .iter()
            .filter(|c| c.dim() + 1 == self.rank)
            .map(|face| {
                let ids: BTreeSet<usize> = face.rays().iter().map(|r| ray_index[r]).collect();
                let incident = self
                    .max_cone_rays
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| ids.iter().all(|i| m.contains(i)))
                    .map(|(i, _)| i)
                    .collect();
                Wall {
                    face: face.clone(),
                    incident,
                }
            })
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.is_pure_full_dimensional() && self.walls().iter().all(|w| w.incident.len() == 2)
    }

    /// Whether the support equals `cone(all rays)`.
    pub fn has_convex_support(&self) -> SupportConvexity {
        let rm = self.ray_matrix();
        let span_dim = rm.rank();
        if span_dim == 0 {
            return SupportConvexity::Convex;
        }
        if span_dim < self.rank {
            return self.convexity_in_span();
        }
        if !self.is_pure_full_dimensional() {
            return SupportConvexity::NotCertified {
                reason: "maximal cones are not all full-dimensional".to_string(),
            };
        }
        let (_, hull_facets) = dual_of_generators(self.rank, &self.rays);
        for wall in self.walls().into_iter().filter(Wall::is_boundary) {
            let on_hull_boundary = hull_facets
                .iter()
                .any(|u| wall.face.rays().iter().all(|r| dot(u, r).is_zero()));
            if !on_hull_boundary {
                let witness = self.outside_witness(&wall, &hull_facets);
                return SupportConvexity::NotConvex {
                    wall: wall.face,
                    witness,
                };
            }
        }
        SupportConvexity::Convex
    }

    /// Restricts to the saturated lattice spanned by the rays and reruns the test.
    fn convexity_in_span(&self) -> SupportConvexity {
        let basis = intlin::saturation(&self.ray_matrix());
        let b = IntMatrix::from_columns(self.rank, &basis).expect("basis vectors have fan rank");
        let reduced: Vec<IntVector> = self
            .rays
            .iter()
            .map(|r| intlin::solve_integer(&b, r).expect("ray lies in its saturated span"))
            .collect();
        let reduced = Fan::from_ray_indices(basis.len(), reduced, &self.max_cone_rays)
            .expect("a fan stays a fan in coordinates of its span");
        match reduced.has_convex_support() {
            SupportConvexity::NotConvex { wall, witness } => {
                let lift = |v: &IntVector| b.mul_vec(v).expect("coordinates match basis");
                let wall_rays: Vec<IntVector> = wall.rays().iter().map(lift).collect();
                SupportConvexity::NotConvex {
                    wall: Cone::from_rays(self.rank, &wall_rays).expect("image of a pointed cone"),
                    witness: lift(&witness),
                }
            }
            other => other,
        }
    }

    /// A lattice point of `cone(all rays)` just across `wall` from its only
    /// incident maximal cone.
    fn outside_witness(&self, wall: &Wall, hull_facets: &[IntVector]) -> IntVector {
        let sigma = &self.max_cones[wall.incident[0]];
        let inward = sigma
            .dual_description()
            .iter()
            .find(|u| wall.face.rays().iter().all(|r| dot(u, r).is_zero()))
            .expect("a wall is a facet of its incident cone");
        let p = wall.face.interior_point();
        let mut k = BigInt::one();
        loop {
            let q: IntVector = p.iter().zip(inward).map(|(x, u)| &k * x - u).collect();
            let in_hull = hull_facets.iter().all(|u| dot(u, &q) >= BigInt::zero());
            if in_hull && !self.support_contains(&q) {
                return q;
            }
            k *= 2;
        }
    }

    /// Whether some cone of the fan contains `p`.
    pub fn support_contains(&self, p: &[BigInt]) -> bool {
        self.max_cones.iter().any(|c| c.contains_integer_point(p))
    }

    /// Sufficient test for "no small holes": convex support.
    pub fn has_no_small_holes_sufficient(&self) -> SupportConvexity {
        self.has_convex_support()
    }
}

/// Whether the lattice map `map: ℤ^{f1.rank} → ℤ^{f2.rank}` sends every cone
/// of `f1` into some cone of `f2`.
pub fn is_map_of_fans(map: &IntMatrix, f1: &Fan, f2: &Fan) -> Result<bool, FanError> {
    if map.cols() != f1.rank() || map.rows() != f2.rank() {
        return Err(FanError::Shape(format!(
            "map is {}x{}, fans have ranks {} and {}",
            map.rows(),
            map.cols(),
            f1.rank(),
            f2.rank()
        )));
    }
    Ok(f1.max_cones().iter().all(|sigma| {
        let images: Vec<IntVector> = sigma
            .rays()
            .iter()
            .map(|r| map.mul_vec(r).expect("shape checked"))
            .collect();
        f2.max_cones()
            .iter()
            .any(|tau| images.iter().all(|v| tau.contains_integer_point(v)))
    }))
}
