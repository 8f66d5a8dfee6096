//! Cox's quotient presentation of a toric variety.
//!
//! For a fan Δ in `N = ℤ^n` with rays ϱ₁, …, ϱ_m the presentation consists of
//!
//! * `Q: ℤ^m → N`, sending `eᵢ` to the primitive generator of ϱᵢ;
//! * the fan Σ in `ℤ^m` whose maximal cones are `cone(eᵢ : ϱᵢ ⊂ τ)` for the
//!   maximal cones τ of Δ, defining the open subset `Z ⊆ 𝕂^m`;
//! * the kernel `H ⊆ (𝕂*)^m` of the induced map of big tori, with relation
//!   lattice `im(Qᵀ)` and character group `Γ = ℤ^m / im(Qᵀ)`.
//!
//! Coordinates of `ℤ^m` follow the fan's ray order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::cones::combinations;
use crate::fans::Fan;
use crate::groups::{DiagonalizableSubgroup, SubgroupDecomposition, WeightAction};
use crate::intlin::{self, CokernelInvariants, IntMatrix, IntVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxError {
    #[error("the fan is degenerate: its rays do not span the ambient space")]
    Degenerate,
    #[error("exponent vector has length {found}, expected {expected}")]
    ExponentLength { expected: usize, found: usize },
    #[error("cocharacter matrix has {found} rows, expected {expected}")]
    IotaShape { expected: usize, found: usize },
    #[error("cocharacter matrix has rank {rank} but {columns} columns")]
    IotaNotInjective { rank: usize, columns: usize },
    #[error("column {column} of the cocharacter matrix has no rational preimage under Q")]
    NoRationalLift { column: usize },
}

/// `Γ ≅ ℤ^free_rank ⊕ ⊕ ℤ/dᵢ`.
pub type ClassGroup = CokernelInvariants;

/// An element of Γ in the coordinates fixed by the presentation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassGroupElement {
    pub free_part: IntVector,
    /// Residues in `[0, dᵢ)`, one per torsion invariant.
    pub torsion_part: IntVector,
}

impl ClassGroupElement {
    pub fn add(&self, other: &ClassGroupElement, torsion: &[BigInt]) -> ClassGroupElement {
        ClassGroupElement {
            free_part: self
                .free_part
                .iter()
                .zip(&other.free_part)
                .map(|(a, b)| a + b)
                .collect(),
            torsion_part: self
                .torsion_part
                .iter()
                .zip(&other.torsion_part)
                .zip(torsion)
                .map(|((a, b), d)| (a + b).mod_floor(d))
                .collect(),
        }
    }
}

/// Linear forms realizing `ℤ^m → Γ`.
#[derive(Clone, Debug)]
struct Grading {
    /// Basis of `ker(Q)`, canonical form; gives the free coordinates.
    free_rows: Vec<IntVector>,
    torsion_rows: Vec<(IntVector, BigInt)>,
}

impl Grading {
    fn new(q_matrix: &IntMatrix) -> Grading {
        let qt = q_matrix.transpose();
        let snf = intlin::smith_normal_form(&qt);
        let torsion_rows = snf
            .invariant_factors()
            .into_iter()
            .enumerate()
            .filter(|(_, d)| !d.is_one())
            .map(|(i, d)| (snf.u.row(i).to_vec(), d))
            .collect();
        // The trailing rows of U span ker(Q); swapping in the canonical
        // kernel basis is a unimodular change on those rows only.
        Grading {
            free_rows: intlin::kernel_basis(q_matrix),
            torsion_rows,
        }
    }

    fn degree(&self, a: &[BigInt]) -> ClassGroupElement {
        ClassGroupElement {
            free_part: self.free_rows.iter().map(|r| intlin::dot(r, a)).collect(),
            torsion_part: self
                .torsion_rows
                .iter()
                .map(|(r, d)| intlin::dot(r, a).mod_floor(d))
                .collect(),
        }
    }
}

/// The data `(Q, Σ, H)` for a fan Δ.
#[derive(Clone, Debug)]
pub struct CoxPresentation {
    delta: Fan,
    q_matrix: IntMatrix,
    sigma: Fan,
    kernel_group: DiagonalizableSubgroup,
    grading: Grading,
}

impl CoxPresentation {
    pub fn new(delta: &Fan) -> CoxPresentation {
        let m = delta.rays().len();
        let q_matrix = delta.ray_matrix();
        let units: Vec<IntVector> = (0..m)
            .map(|i| (0..m).map(|j| BigInt::from(u8::from(i == j))).collect())
            .collect();
        let sigma = Fan::from_ray_indices(m, units, delta.max_cone_ray_indices())
            .expect("faces of the orthant indexed by maximal cones form a fan");
        let kernel_group = DiagonalizableSubgroup::new(q_matrix.transpose());
        let grading = Grading::new(&q_matrix);
        CoxPresentation {
            delta: delta.clone(),
            q_matrix,
            sigma,
            kernel_group,
            grading,
        }
    }

    pub fn delta(&self) -> &Fan {
        &self.delta
    }

    /// Number of rays, the dimension of the ambient affine space `𝕂^m`.
    pub fn m(&self) -> usize {
        self.q_matrix.cols()
    }

    pub fn q_matrix(&self) -> &IntMatrix {
        &self.q_matrix
    }

    pub fn sigma(&self) -> &Fan {
        &self.sigma
    }

    /// `H ⊆ (𝕂*)^m`.
    pub fn kernel_group(&self) -> &DiagonalizableSubgroup {
        &self.kernel_group
    }

    /// Codimension of `𝕂^m ∖ Z`: the least dimension of an orthant face not
    /// in Σ, or `m + 1` when `Z = 𝕂^m`.
    pub fn complement_codim(&self) -> usize {
        let m = self.m();
        let maximal = self.delta.max_cone_ray_indices();
        for k in 0..=m {
            let missing = combinations(m, k).into_iter().any(|face| {
                !maximal
                    .iter()
                    .any(|tau| face.iter().all(|i| tau.contains(i)))
            });
            if missing {
                return k;
            }
        }
        m + 1
    }

    /// Isotropy group in `H` of the distinguished point of each maximal
    /// cone's orbit in Z, in the order of Δ's maximal cones.
    pub fn isotropy_groups(&self) -> Vec<DiagonalizableSubgroup> {
        self.delta
            .max_cone_ray_indices()
            .iter()
            .map(|tau| self.kernel_group.isotropy(tau))
            .collect()
    }

    /// `H` acts freely on `Z`: all isotropy groups are trivial.
    pub fn acts_freely(&self) -> bool {
        self.isotropy_groups()
            .iter()
            .all(DiagonalizableSubgroup::is_trivial)
    }

    pub fn class_group(&self) -> Result<ClassGroup, CoxError> {
        if !self.delta.is_nondegenerate() {
            return Err(CoxError::Degenerate);
        }
        Ok(intlin::cokernel_invariants(&self.q_matrix.transpose()))
    }

    /// Degree in Γ of the Laurent monomial `z^a`.
    pub fn degree_of_monomial(&self, a: &[BigInt]) -> Result<ClassGroupElement, CoxError> {
        if !self.delta.is_nondegenerate() {
            return Err(CoxError::Degenerate);
        }
        if a.len() != self.m() {
            return Err(CoxError::ExponentLength {
                expected: self.m(),
                found: a.len(),
            });
        }
        Ok(self.grading.degree(a))
    }

    /// Decomposition of H into a torus and cyclic factors.
    pub fn kernel_decomposition(&self) -> SubgroupDecomposition {
        self.kernel_group.decompose()
    }
}

pub fn cox_presentation(delta: &Fan) -> CoxPresentation {
    CoxPresentation::new(delta)
}

/// Every maximal cone of Δ is smooth.
pub fn variety_is_smooth(delta: &Fan) -> bool {
    delta.max_cones().iter().all(|c| c.is_smooth())
}

/// A diagonal action on `𝕂^m` covering a subtorus of `T_X` up to the
/// `degree`-th power map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubtorusLift {
    /// `r × m`; satisfies `Q·Wᵀ = degree · iota`.
    pub weights: IntMatrix,
    pub degree: BigInt,
    /// Minimal lifting degree of each column of `iota`.
    pub column_degrees: Vec<BigInt>,
    pub effective: bool,
}

/// Lifts the subtorus of `T_X` with cocharacter matrix `iota` (`n × r`) to a
/// diagonal action on `𝕂^m`, using the least degree `d` for which
/// `d·iota` factors through `Q`. The weights are one solution; others differ
/// by characters of H (elements of `ker Q` in each row).
pub fn lift_subtorus(p: &CoxPresentation, iota: &IntMatrix) -> Result<SubtorusLift, CoxError> {
    let n = p.delta.rank();
    if iota.rows() != n {
        return Err(CoxError::IotaShape {
            expected: n,
            found: iota.rows(),
        });
    }
    let rank = iota.rank();
    if rank != iota.cols() {
        return Err(CoxError::IotaNotInjective {
            rank,
            columns: iota.cols(),
        });
    }
    let mut column_degrees = Vec::with_capacity(iota.cols());
    for (column, v) in iota.column_vectors().iter().enumerate() {
        column_degrees.push(
            intlin::divisibility_index(&p.q_matrix, v)
                .ok_or(CoxError::NoRationalLift { column })?,
        );
    }
    let degree = column_degrees
        .iter()
        .fold(BigInt::one(), |acc, d| acc.lcm(d));
    let mut rows = Vec::with_capacity(iota.cols());
    for (column, v) in iota.column_vectors().iter().enumerate() {
        let target: IntVector = v.iter().map(|x| x * &degree).collect();
        let w = intlin::solve_integer(&p.q_matrix, &target)
            .ok_or(CoxError::NoRationalLift { column })?;
        rows.push(w);
    }
    let weights = IntMatrix::from_rows(p.m(), rows).expect("solutions have length m");
    let effective = WeightAction::new(weights.clone()).is_effective();
    debug_assert!(degree > BigInt::zero());
    Ok(SubtorusLift {
        weights,
        degree,
        column_degrees,
        effective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::fans::is_map_of_fans;
    use crate::intlin::ivec;

    #[test]
    fn p2_presentation() {
        let p = cox_presentation(&corpus::projective_plane());
        assert_eq!(p.m(), 3);
        assert_eq!(p.sigma().max_cones().len(), 3);
        assert!(p.sigma().max_cones().iter().all(|c| c.dim() == 2));
        assert_eq!(p.kernel_group().dimension(), 1);
        assert!(is_map_of_fans(p.q_matrix(), p.sigma(), p.delta()).unwrap());
        assert_eq!(p.complement_codim(), 3);
        assert!(p.acts_freely());
    }

    #[test]
    fn affine_plane_presentation() {
        let p = cox_presentation(&corpus::affine_space(2));
        assert_eq!(p.q_matrix(), &IntMatrix::identity(2));
        assert!(p.kernel_group().is_trivial());
        assert_eq!(p.complement_codim(), 3);
        assert!(p.acts_freely());
    }

    #[test]
    fn quadric_cone_presentation() {
        let p = cox_presentation(&corpus::quadric_cone());
        assert_eq!(p.q_matrix(), &IntMatrix::from_slices(&[&[1, 1], &[0, 2]]));
        let h = p.kernel_group();
        assert_eq!(h.dimension(), 0);
        assert_eq!(h.decompose().cyclic_orders, ivec(&[2]));
        let half = num_rational::BigRational::new(1.into(), 2.into());
        // (ε, ε) with ε = −1 lies in H; (−1, 1) does not
        assert!(h.contains_root_of_unity_point(&[half.clone(), half.clone()]));
        assert!(!h.contains_root_of_unity_point(&[half, num_rational::BigRational::zero()]));
        assert!(!p.acts_freely());
        assert!(!variety_is_smooth(p.delta()));
    }

    #[test]
    fn p1xp1_codim() {
        assert_eq!(
            cox_presentation(&corpus::p1_times_p1()).complement_codim(),
            2
        );
    }

    #[test]
    fn smoothness_examples() {
        assert!(variety_is_smooth(&corpus::projective_plane()));
        assert!(variety_is_smooth(&corpus::hirzebruch(2)));
        assert!(cox_presentation(&corpus::hirzebruch(2)).acts_freely());
    }

    #[test]
    fn class_groups_and_degrees() {
        let p = cox_presentation(&corpus::projective_plane());
        let cl = p.class_group().unwrap();
        assert_eq!((cl.free_rank, cl.torsion.len()), (1, 0));
        for i in 0..3 {
            let mut e = vec![BigInt::zero(); 3];
            e[i] = BigInt::one();
            assert_eq!(p.degree_of_monomial(&e).unwrap().free_part, ivec(&[1]));
        }

        let p = cox_presentation(&corpus::quadric_cone());
        let cl = p.class_group().unwrap();
        assert_eq!((cl.free_rank, cl.torsion.clone()), (0, ivec(&[2])));
        assert_eq!(
            p.degree_of_monomial(&ivec(&[1, 0])).unwrap().torsion_part,
            ivec(&[1])
        );
        assert_eq!(
            p.degree_of_monomial(&ivec(&[0, 1])).unwrap().torsion_part,
            ivec(&[1])
        );
        assert_eq!(
            p.degree_of_monomial(&ivec(&[1, 1])).unwrap().torsion_part,
            ivec(&[0])
        );

        let p = cox_presentation(&corpus::weighted_projective_plane());
        let cl = p.class_group().unwrap();
        assert_eq!((cl.free_rank, cl.torsion.len()), (1, 0));
        let degrees: Vec<BigInt> = (0..3)
            .map(|i| {
                let mut e = vec![BigInt::zero(); 3];
                e[i] = BigInt::one();
                p.degree_of_monomial(&e).unwrap().free_part[0].clone()
            })
            .collect();
        assert_eq!(degrees, ivec(&[1, 2, 1]));
    }

    #[test]
    fn laurent_degrees_are_additive() {
        let p = cox_presentation(&corpus::hirzebruch(3));
        let a = ivec(&[1, -2, 3, 0]);
        let b = ivec(&[-4, 1, 0, 2]);
        let sum: IntVector = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let cl = p.class_group().unwrap();
        let da = p.degree_of_monomial(&a).unwrap();
        let db = p.degree_of_monomial(&b).unwrap();
        assert_eq!(
            p.degree_of_monomial(&sum).unwrap(),
            da.add(&db, &cl.torsion)
        );
    }

    #[test]
    fn degenerate_fan_has_no_class_group() {
        let f = Fan::from_i64(2, &[&[1, 0]], &[&[0]]).unwrap();
        let p = cox_presentation(&f);
        assert_eq!(p.class_group(), Err(CoxError::Degenerate));
        assert_eq!(p.degree_of_monomial(&ivec(&[1])), Err(CoxError::Degenerate));
    }

    #[test]
    fn lifts() {
        let p = cox_presentation(&corpus::projective_plane());
        let lift = lift_subtorus(&p, &IntMatrix::from_slices(&[&[1], &[0]])).unwrap();
        assert_eq!(lift.degree, BigInt::one());
        let qw = p.q_matrix().mul(&lift.weights.transpose()).unwrap();
        assert_eq!(qw, IntMatrix::from_slices(&[&[1], &[0]]));

        let p = cox_presentation(&corpus::quadric_cone());
        let lift = lift_subtorus(&p, &IntMatrix::from_slices(&[&[0], &[1]])).unwrap();
        assert_eq!(lift.degree, BigInt::from(2));
        let qw = p.q_matrix().mul(&lift.weights.transpose()).unwrap();
        assert_eq!(qw, IntMatrix::from_slices(&[&[0], &[2]]));

        let p = cox_presentation(&corpus::hirzebruch(2));
        let e1 = IntMatrix::from_columns(2, &[p.q_matrix().column(0)]).unwrap();
        let lift = lift_subtorus(&p, &e1).unwrap();
        assert_eq!(lift.degree, BigInt::one());
        assert_eq!(p.q_matrix().mul(&lift.weights.transpose()).unwrap(), e1);
    }

    #[test]
    fn lift_errors() {
        let p = cox_presentation(&corpus::projective_plane());
        assert!(matches!(
            lift_subtorus(&p, &IntMatrix::from_slices(&[&[1, 2], &[1, 2]])),
            Err(CoxError::IotaNotInjective { .. })
        ));
        assert!(matches!(
            lift_subtorus(&p, &IntMatrix::from_slices(&[&[1]])),
            Err(CoxError::IotaShape { .. })
        ));
        let degenerate = cox_presentation(&Fan::from_i64(2, &[&[1, 0]], &[&[0]]).unwrap());
        assert_eq!(
            lift_subtorus(&degenerate, &IntMatrix::from_slices(&[&[0], &[1]])),
            Err(CoxError::NoRationalLift { column: 0 })
        );
    }
}
