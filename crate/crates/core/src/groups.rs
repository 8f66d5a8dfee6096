//! Diagonalizable subgroups of the standard torus `(𝕂*)^m` and the finite
//! symmetries that act on them.
//!
//! A closed subgroup `G ⊆ (𝕂*)^m` is stored through its relation lattice
//! `L ⊆ ℤ^m`, the characters that are trivial on it:
//! `G = { t : t^χ = 1 for all χ ∈ L }`. The character group of `G` is
//! `ℤ^m / L`, so its Smith invariants give the splitting of `G` into a torus
//! times finite cyclic groups.
//!
//! Roots of unity only ever appear as exponents in `ℚ/ℤ` (`ζ^q` with
//! `ζ = e^{2πi}` formally), which is all the group-law bookkeeping needs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::intlin::{self, CokernelInvariants, IntMatrix, IntVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("expected a subgroup of dimension {expected}, got {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("subgroup is disconnected (component group has invariants {torsion:?})")]
    Disconnected { torsion: Vec<BigInt> },
    #[error("isogeny degree must be at least 1")]
    ZeroDegree,
    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// A closed subgroup of `(𝕂*)^m`, given by generators of its relation lattice.
#[derive(Clone, Debug)]
pub struct DiagonalizableSubgroup {
    ambient: usize,
    relations: IntMatrix,
}

/// `G ≅ (𝕂*)^torus_rank × ∏ ℤ/dᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupDecomposition {
    pub torus_rank: usize,
    pub cyclic_orders: Vec<BigInt>,
}

impl From<CokernelInvariants> for SubgroupDecomposition {
    fn from(c: CokernelInvariants) -> Self {
        SubgroupDecomposition {
            torus_rank: c.free_rank,
            cyclic_orders: c.torsion,
        }
    }
}

impl DiagonalizableSubgroup {
    /// `relations` is `m × k`; its columns generate the relation lattice.
    pub fn new(relations: IntMatrix) -> Self {
        DiagonalizableSubgroup {
            ambient: relations.rows(),
            relations,
        }
    }

    pub fn from_relation_vectors(
        ambient: usize,
        vectors: &[IntVector],
    ) -> Result<Self, GroupError> {
        IntMatrix::from_columns(ambient, vectors)
            .map(Self::new)
            .map_err(|e| GroupError::Shape(e.to_string()))
    }

    pub fn whole_torus(m: usize) -> Self {
        Self::new(IntMatrix::zeros(m, 0))
    }

    pub fn trivial(m: usize) -> Self {
        Self::new(IntMatrix::identity(m))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// Canonical basis of the relation lattice.
    pub fn relation_basis(&self) -> Vec<IntVector> {
        intlin::canonical_basis(self.ambient, &self.relations.column_vectors())
    }

    pub fn dimension(&self) -> usize {
        self.ambient - self.relations.rank()
    }

    pub fn decompose(&self) -> SubgroupDecomposition {
        intlin::cokernel_invariants(&self.relations).into()
    }

    pub fn is_connected(&self) -> bool {
        self.decompose().cyclic_orders.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        let d = self.decompose();
        d.torus_rank == 0 && d.cyclic_orders.is_empty()
    }

    /// Number of connected components.
    pub fn component_count(&self) -> BigInt {
        self.decompose().cyclic_orders.iter().product()
    }

    /// Whether `{(1, …, t, …, 1)}` (t in slot `i`) lies in the subgroup.
    pub fn contains_coordinate_subtorus(&self, i: usize) -> bool {
        (0..self.relations.cols()).all(|j| self.relations.get(i, j).is_zero())
    }

    /// The subgroup of elements fixing the point whose coordinates are zero
    /// exactly on `zero_coords` and one elsewhere.
    pub fn isotropy(&self, zero_coords: &[usize]) -> DiagonalizableSubgroup {
        let extra: Vec<IntVector> = (0..self.ambient)
            .filter(|j| !zero_coords.contains(j))
            .map(|j| {
                (0..self.ambient)
                    .map(|k| BigInt::from(u8::from(j == k)))
                    .collect()
            })
            .collect();
        let extra =
            IntMatrix::from_columns(self.ambient, &extra).expect("unit vectors have length m");
        Self::new(self.relations.hstack(&extra).expect("same row count"))
    }

    /// Whether the finite-order element `(ζ^{q₁}, …, ζ^{q_m})` lies in the subgroup.
    pub fn contains_root_of_unity_point(&self, exponents: &[BigRational]) -> bool {
        (0..self.relations.cols()).all(|j| {
            let s: BigRational = (0..self.ambient)
                .map(|i| {
                    exponents[i].clone()
                        * BigRational::from_integer(self.relations.get(i, j).clone())
                })
                .sum();
            s.is_integer()
        })
    }

    /// Equality of relation lattices, hence of subgroups.
    pub fn same_subgroup(&self, other: &DiagonalizableSubgroup) -> bool {
        self.ambient == other.ambient && self.relation_basis() == other.relation_basis()
    }
}

/// Torus splitting of a diagonalizable subgroup: torus rank and the orders of
/// the cyclic factors in divisibility order.
pub fn decompose_subgroup(g: &DiagonalizableSubgroup) -> SubgroupDecomposition {
    g.decompose()
}

/// A diagonal action of `(𝕂*)^r` on `𝕂^m`; column `i` of `weights` is the
/// character by which the torus scales `zᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightAction {
    weights: IntMatrix,
}

impl WeightAction {
    pub fn new(weights: IntMatrix) -> Self {
        WeightAction { weights }
    }

    pub fn torus_rank(&self) -> usize {
        self.weights.rows()
    }

    pub fn ambient(&self) -> usize {
        self.weights.cols()
    }

    pub fn weights(&self) -> &IntMatrix {
        &self.weights
    }

    /// The image of the torus in `(𝕂*)^m`.
    pub fn subgroup(&self) -> DiagonalizableSubgroup {
        let kernel = intlin::kernel_basis(&self.weights);
        DiagonalizableSubgroup::from_relation_vectors(self.ambient(), &kernel)
            .expect("kernel vectors have length m")
    }

    /// The action has trivial kernel: the weights generate `ℤ^r`.
    pub fn is_effective(&self) -> bool {
        intlin::cokernel_invariants(&self.weights).is_trivial()
    }
}

pub fn subgroup_from_weights(w: &WeightAction) -> DiagonalizableSubgroup {
    w.subgroup()
}

/// Shape of the quotient `𝕂^m // G₀` for a connected subgroup of corank one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientType {
    /// Only constants are invariant.
    Point,
    /// The quotient map is `z ↦ z^a`, `a ≥ 0` with coprime entries.
    Monomial(IntVector),
}

pub fn classify_quotient(g0: &DiagonalizableSubgroup) -> Result<QuotientType, GroupError> {
    let m = g0.ambient();
    let dim = g0.dimension();
    if m == 0 || dim + 1 != m {
        return Err(GroupError::WrongDimension {
            expected: m.saturating_sub(1),
            found: dim,
        });
    }
    let d = g0.decompose();
    if !d.cyclic_orders.is_empty() {
        return Err(GroupError::Disconnected {
            torsion: d.cyclic_orders,
        });
    }
    let generator = g0
        .relations()
        .column_vectors()
        .into_iter()
        .find(|c| c.iter().any(|x| !x.is_zero()))
        .expect("relation lattice has rank one");
    let a = intlin::primitive_vector(&generator).expect("nonzero column");
    if a.iter().all(|x| !x.is_negative()) {
        Ok(QuotientType::Monomial(a))
    } else if a.iter().all(|x| !x.is_positive()) {
        Ok(QuotientType::Monomial(a.into_iter().map(|x| -x).collect()))
    } else {
        Ok(QuotientType::Point)
    }
}

fn frac_part(q: &BigRational) -> BigRational {
    q - q.floor()
}

/// A permutation followed by root-of-unity scalings:
/// `(g·z)ᵢ = ζ^{qᵢ} · z_{π⁻¹(i)}`, with `perm[j] = π(j)` and `qᵢ ∈ [0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMatrix {
    perm: Vec<usize>,
    scalars: Vec<BigRational>,
}

impl MonomialMatrix {
    pub fn new(perm: Vec<usize>, scalars: Vec<BigRational>) -> Result<Self, GroupError> {
        let m = perm.len();
        let mut seen = vec![false; m];
        for &p in &perm {
            if p >= m || std::mem::replace(&mut seen[p], true) {
                return Err(GroupError::InvalidPermutation(m));
            }
        }
        if scalars.len() != m {
            return Err(GroupError::Shape(format!(
                "{} scalars for {} coordinates",
                scalars.len(),
                m
            )));
        }
        Ok(MonomialMatrix {
            perm,
            scalars: scalars.iter().map(frac_part).collect(),
        })
    }

    /// A pure permutation matrix.
    pub fn permutation(perm: Vec<usize>) -> Result<Self, GroupError> {
        let m = perm.len();
        Self::new(perm, vec![BigRational::zero(); m])
    }

    pub fn identity(m: usize) -> Self {
        Self::permutation((0..m).collect()).expect("identity is a permutation")
    }

    pub fn size(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn scalars(&self) -> &[BigRational] {
        &self.scalars
    }

    fn inverse_perm(&self) -> Vec<usize> {
        let mut inv = vec![0; self.perm.len()];
        for (j, &p) in self.perm.iter().enumerate() {
            inv[p] = j;
        }
        inv
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &MonomialMatrix) -> MonomialMatrix {
        let inv = self.inverse_perm();
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        let scalars = (0..self.size())
            .map(|i| frac_part(&(&self.scalars[i] + &other.scalars[inv[i]])))
            .collect();
        MonomialMatrix { perm, scalars }
    }

    pub fn inverse(&self) -> MonomialMatrix {
        let perm = self.inverse_perm();
        let scalars = (0..self.size())
            .map(|k| frac_part(&-self.scalars[self.perm[k]].clone()))
            .collect();
        MonomialMatrix { perm, scalars }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.scalars.iter().all(Zero::is_zero)
    }

    pub fn order(&self) -> usize {
        let mut power = self.clone();
        let mut n = 1;
        while !power.is_identity() {
            power = self.compose(&power);
            n += 1;
        }
        n
    }

    /// Image of `z` (coordinates given as exponents in `ℚ/ℤ` for points of
    /// the torus of roots of unity), used to spot-check group laws.
    pub fn apply_exponents(&self, z: &[BigRational]) -> Vec<BigRational> {
        let inv = self.inverse_perm();
        (0..self.size())
            .map(|i| frac_part(&(&self.scalars[i] + &z[inv[i]])))
            .collect()
    }
}

/// Elementwise commutation with every element of `g0`:
/// `g t g⁻¹ = diag(t_{π⁻¹(i)})` equals `t` on `g0` iff each character
/// `e_{π⁻¹(i)} − eᵢ` is trivial on `g0`.
pub fn commutes_with_torus(g: &MonomialMatrix, g0: &DiagonalizableSubgroup) -> bool {
    let m = g.size();
    let inv = g.inverse_perm();
    (0..m).filter(|&i| inv[i] != i).all(|i| {
        let mut chi = vec![BigInt::zero(); m];
        chi[inv[i]] += 1;
        chi[i] -= 1;
        intlin::lattice_membership(g0.relations(), &chi)
    })
}

/// Conjugation by `g` maps `g0` onto itself, i.e. `π·L = L`.
pub fn normalizes_torus(g: &MonomialMatrix, g0: &DiagonalizableSubgroup) -> bool {
    let m = g.size();
    let moved: Vec<IntVector> = g0
        .relations()
        .column_vectors()
        .into_iter()
        .map(|chi| {
            let mut out = vec![BigInt::zero(); m];
            for (j, x) in chi.into_iter().enumerate() {
                out[g.perm[j]] = x;
            }
            out
        })
        .collect();
    let moved = DiagonalizableSubgroup::from_relation_vectors(m, &moved).expect("length m");
    moved.same_subgroup(g0)
}

/// How a monomial matrix moves the coordinate hyperplanes `V(zᵢ)` relative
/// to the support of a quotient exponent vector `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneReport {
    /// `pi[i] = j` when `g` maps `V(zᵢ)` onto `V(z_j)`.
    pub pi: Vec<usize>,
    /// Every hyperplane with `aᵢ = 0` is fixed.
    pub fixes_zero_support: bool,
    /// `{i : aᵢ > 0}` is mapped onto itself.
    pub permutes_positive_support: bool,
}

pub fn hyperplane_permutation_report(g: &MonomialMatrix, a: &[BigInt]) -> HyperplaneReport {
    let pi = g.perm.clone();
    let positive = |i: usize| a[i].is_positive();
    HyperplaneReport {
        fixes_zero_support: (0..pi.len()).filter(|&i| !positive(i)).all(|i| pi[i] == i),
        permutes_positive_support: (0..pi.len())
            .filter(|&i| positive(i))
            .all(|i| positive(pi[i])),
        pi,
    }
}

/// An isogeny `κ` of `T = (𝕂*)^r` with `ξ ∘ κ = ξ₀^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterRoot {
    /// Acts on cocharacters; `κᵀ` acts on characters.
    pub kappa: IntMatrix,
    pub xi0: IntVector,
}

impl CharacterRoot {
    pub fn degree(&self) -> BigInt {
        self.kappa.det().expect("square").abs()
    }
}

/// Builds `κ` of degree `d / gcd(d, gcd(ξ))` with `κᵀ·ξ = d·ξ₀`.
pub fn character_root_isogeny(xi: &[BigInt], d: &BigInt) -> Result<CharacterRoot, GroupError> {
    if !d.is_positive() {
        return Err(GroupError::ZeroDegree);
    }
    let r = xi.len();
    let g = intlin::vector_gcd(xi);
    if g.is_zero() {
        return Ok(CharacterRoot {
            kappa: IntMatrix::identity(r),
            xi0: vec![BigInt::zero(); r],
        });
    }
    // U·ξ = g·e₁ with U unimodular
    let column = IntMatrix::from_columns(r, &[xi.to_vec()]).expect("length r");
    let snf = intlin::smith_normal_form(&column);
    let sign = snf.v.get(0, 0).clone();
    let mut scale = IntMatrix::identity(r);
    scale.set(0, 0, d / d.gcd(&g) * sign);
    let kappa_t = scale.mul(&snf.u).expect("square");
    let image = kappa_t.mul_vec(xi).expect("length r");
    let xi0 = image.iter().map(|x| x / d).collect();
    debug_assert!(image.iter().all(|x| x.is_multiple_of(d)));
    Ok(CharacterRoot {
        kappa: kappa_t.transpose(),
        xi0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlin::ivec;

    fn sub(m: usize, rel: &[&[i64]]) -> DiagonalizableSubgroup {
        let v: Vec<IntVector> = rel.iter().map(|r| ivec(r)).collect();
        DiagonalizableSubgroup::from_relation_vectors(m, &v).unwrap()
    }

    fn weights(rows: &[&[i64]]) -> WeightAction {
        WeightAction::new(IntMatrix::from_slices(rows))
    }

    #[test]
    fn subgroups_from_weights() {
        let g = weights(&[&[1, -1]]).subgroup();
        assert_eq!(g.relation_basis(), vec![ivec(&[1, 1])]);
        let g = WeightAction::new(IntMatrix::identity(3)).subgroup();
        assert_eq!(g.relations().cols(), 0);
        assert_eq!(g.dimension(), 3);
        let g = weights(&[&[1, 2, 1]]).subgroup();
        assert_eq!(g.relations().rank(), 2);
        assert_eq!(g.dimension(), 1);
    }

    #[test]
    fn effectiveness() {
        assert!(weights(&[&[1, -1]]).is_effective());
        assert!(!weights(&[&[2]]).is_effective());
        assert!(weights(&[&[1, 0, 0], &[0, 1, 1]]).is_effective());
        assert!(!weights(&[&[1, 1, 1], &[0, 2, 4]]).is_effective());
    }

    #[test]
    fn quotient_classification() {
        let g = weights(&[&[1, -1]]).subgroup();
        assert_eq!(
            classify_quotient(&g).unwrap(),
            QuotientType::Monomial(ivec(&[1, 1]))
        );
        let g = weights(&[&[1, 1]]).subgroup();
        assert_eq!(classify_quotient(&g).unwrap(), QuotientType::Point);
        let g = weights(&[&[0, 1]]).subgroup();
        assert_eq!(
            classify_quotient(&g).unwrap(),
            QuotientType::Monomial(ivec(&[1, 0]))
        );
    }

    #[test]
    fn classification_hypotheses() {
        assert!(matches!(
            classify_quotient(&DiagonalizableSubgroup::whole_torus(2)),
            Err(GroupError::WrongDimension { .. })
        ));
        // {(t, ±t⁻¹)}: relation 2·(1,1)
        assert!(matches!(
            classify_quotient(&sub(2, &[&[2, 2]])),
            Err(GroupError::Disconnected { .. })
        ));
    }

    #[test]
    fn coordinate_subtori() {
        assert!(DiagonalizableSubgroup::whole_torus(3).contains_coordinate_subtorus(1));
        assert!(!sub(2, &[&[1, 1]]).contains_coordinate_subtorus(0));
        let g = sub(3, &[&[1, 0, 0]]);
        assert!(g.contains_coordinate_subtorus(1) && g.contains_coordinate_subtorus(2));
        assert!(!g.contains_coordinate_subtorus(0));
    }

    #[test]
    fn normalizing_and_commuting() {
        let id = MonomialMatrix::identity(2);
        let swap = MonomialMatrix::permutation(vec![1, 0]).unwrap();
        let anti = sub(2, &[&[1, 1]]);
        let axis = sub(2, &[&[1, 0]]);
        assert!(normalizes_torus(&id, &anti) && commutes_with_torus(&id, &anti));
        assert!(normalizes_torus(&swap, &anti));
        assert!(!normalizes_torus(&swap, &axis));
        // swapping coordinates inverts (t, t⁻¹): normalizes without commuting
        assert!(!commutes_with_torus(&swap, &anti));
        // the diagonal {(t, t)} is centralized by the swap
        assert!(commutes_with_torus(&swap, &sub(2, &[&[1, -1]])));
    }

    #[test]
    fn hyperplane_reports() {
        let a = ivec(&[1, 1, 0]);
        let r = hyperplane_permutation_report(&MonomialMatrix::identity(3), &a);
        assert!(r.fixes_zero_support && r.permutes_positive_support);
        let r =
            hyperplane_permutation_report(&MonomialMatrix::permutation(vec![1, 0, 2]).unwrap(), &a);
        assert_eq!(r.pi, vec![1, 0, 2]);
        assert!(r.fixes_zero_support && r.permutes_positive_support);
        let r =
            hyperplane_permutation_report(&MonomialMatrix::permutation(vec![0, 2, 1]).unwrap(), &a);
        assert!(!r.permutes_positive_support && !r.fixes_zero_support);
    }

    #[test]
    fn monomial_group_laws() {
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new(1.into(), 3.into());
        let g = MonomialMatrix::new(
            vec![1, 2, 0],
            vec![half.clone(), third.clone(), BigRational::zero()],
        )
        .unwrap();
        assert!(g.compose(&g.inverse()).is_identity());
        assert!(g.inverse().compose(&g).is_identity());
        let h = MonomialMatrix::new(
            vec![1, 0, 2],
            vec![third.clone(), BigRational::zero(), half],
        )
        .unwrap();
        let z: Vec<BigRational> = (1..=3)
            .map(|k| BigRational::new(k.into(), 7.into()))
            .collect();
        assert_eq!(
            g.compose(&h).apply_exponents(&z),
            g.apply_exponents(&h.apply_exponents(&z))
        );
        // g³ multiplies every coordinate by ζ^{1/2 + 1/3}
        assert_eq!(g.order(), 18);
        assert!(MonomialMatrix::new(vec![0, 0], vec![BigRational::zero(); 2]).is_err());
    }

    #[test]
    fn isogenies() {
        let zero = character_root_isogeny(&ivec(&[0, 0]), &BigInt::from(5)).unwrap();
        assert_eq!(zero.kappa, IntMatrix::identity(2));
        assert_eq!(zero.xi0, ivec(&[0, 0]));
        let k = character_root_isogeny(&ivec(&[1, 0]), &BigInt::from(2)).unwrap();
        assert_eq!(k.degree(), BigInt::from(2));
        let lhs = k.kappa.transpose().mul_vec(&ivec(&[1, 0])).unwrap();
        assert_eq!(lhs, k.xi0.iter().map(|x| x * 2).collect::<Vec<_>>());
        let k = character_root_isogeny(&ivec(&[2]), &BigInt::from(2)).unwrap();
        assert_eq!(k.kappa, IntMatrix::from_slices(&[&[1]]));
        assert_eq!(k.xi0, ivec(&[1]));
        assert_eq!(
            character_root_isogeny(&ivec(&[1]), &BigInt::zero()),
            Err(GroupError::ZeroDegree)
        );
    }

    #[test]
    fn decomposition() {
        assert_eq!(
            decompose_subgroup(&DiagonalizableSubgroup::trivial(3)),
            SubgroupDecomposition {
                torus_rank: 0,
                cyclic_orders: vec![]
            }
        );
        let g = sub(2, &[&[1, 1], &[0, 2]]);
        assert_eq!(decompose_subgroup(&g).cyclic_orders, ivec(&[2]));
        assert_eq!(g.component_count(), BigInt::from(2));
    }

    #[test]
    fn isotropy_and_points() {
        // μ₂ = {(ε, ε)} inside (𝕂*)²: relations (1,1), (0,2)
        let g = sub(2, &[&[1, 1], &[0, 2]]);
        let half = BigRational::new(1.into(), 2.into());
        assert!(g.contains_root_of_unity_point(&[half.clone(), half.clone()]));
        assert!(!g.contains_root_of_unity_point(&[half.clone(), BigRational::zero()]));
        assert!(!g.isotropy(&[0, 1]).is_trivial());
        assert!(g.isotropy(&[0]).is_trivial());
    }
}
