//! Realizing a codimension-one torus action on a toric variety inside the
//! big torus, starting from a diagonal action lifted to the Cox space.
//!
//! Given Δ in `ℤ^n` with `m` rays and weights `W` (`(n−1) × m`) of a torus
//! `T` acting diagonally on `𝕂^m`, the driver checks, in order:
//!
//! 1. Δ is nondegenerate;
//! 2. Δ has convex support (the sufficient condition for no small holes);
//! 3. the Cox presentation of Δ;
//! 4. `W` is effective;
//! 5. the group generated by the image of `T` and `H` has dimension `m − 1`,
//!    i.e. `rank(ker W ∩ im Qᵀ) = 1`;
//!
//! and on success emits `Q·Wᵀ`, the cocharacter matrix of `T → T_X`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::cox::{cox_presentation, ClassGroup};
use crate::fans::{Fan, SupportConvexity};
use crate::groups::{SubgroupDecomposition, WeightAction};
use crate::intlin::{self, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diagnostic {
    DegenerateFan,
    HolesNotCertified,
    IneffectiveAction,
    WrongDimension,
}

impl Diagnostic {
    /// Stable identifier for scripting.
    pub fn name(self) -> &'static str {
        match self {
            Diagnostic::DegenerateFan => "degenerate-fan",
            Diagnostic::HolesNotCertified => "holes-not-certified",
            Diagnostic::IneffectiveAction => "ineffective-action",
            Diagnostic::WrongDimension => "wrong-dimension",
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error("weight matrix has {found} columns but the fan has {expected} rays")]
    WeightColumns { expected: usize, found: usize },
    #[error("weight matrix has {found} rows, expected rank - 1 = {expected}")]
    WeightRows { expected: usize, found: usize },
    #[error("fan has rank 0")]
    RankZero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxSummary {
    pub m: usize,
    /// Absent for degenerate fans.
    pub class_group: Option<ClassGroup>,
    pub h_decomposition: SubgroupDecomposition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineReport {
    pub nondegenerate: bool,
    pub support: SupportConvexity,
    pub cox: CoxSummary,
    pub input_torus_rank: usize,
    pub combined_dimension: usize,
    pub diagnostics: Vec<Diagnostic>,
    pub hypotheses_met: bool,
    /// `Q·Wᵀ`, present iff `hypotheses_met`.
    pub embedding: Option<IntMatrix>,
    /// Column basis of the saturation of the embedding's image.
    pub saturated_embedding: Option<IntMatrix>,
    pub isogeny_degree: BigInt,
}

impl PipelineReport {
    /// `Some(true)` when convex support certifies no small holes, `Some(false)`
    /// when the support is provably not convex, `None` when not certified.
    pub fn no_small_holes_certified(&self) -> Option<bool> {
        match self.support {
            SupportConvexity::Convex => Some(true),
            SupportConvexity::NotConvex { .. } => Some(false),
            SupportConvexity::NotCertified { .. } => None,
        }
    }
}

/// `m − rank(ker W ∩ im Qᵀ)`.
pub fn combined_dimension(q_matrix: &IntMatrix, weights: &IntMatrix) -> usize {
    let qt = q_matrix.transpose();
    // χ = Qᵀu lies in ker W iff (W·Qᵀ)u = 0
    let wqt = weights.mul(&qt).expect("W has m columns");
    let coefficients = intlin::kernel_basis(&wqt);
    let rank = if coefficients.is_empty() {
        0
    } else {
        IntMatrix::from_columns(qt.cols(), &coefficients)
            .and_then(|k| qt.mul(&k))
            .expect("shapes agree")
            .rank()
    };
    q_matrix.cols() - rank
}

pub fn theorem_pipeline(delta: &Fan, weights: &IntMatrix) -> Result<PipelineReport, PipelineError> {
    let n = delta.rank();
    let m = delta.rays().len();
    if n == 0 {
        return Err(PipelineError::RankZero);
    }
    if weights.cols() != m {
        return Err(PipelineError::WeightColumns {
            expected: m,
            found: weights.cols(),
        });
    }
    if weights.rows() != n - 1 {
        return Err(PipelineError::WeightRows {
            expected: n - 1,
            found: weights.rows(),
        });
    }

    let mut diagnostics = Vec::new();
    let nondegenerate = delta.is_nondegenerate();
    if !nondegenerate {
        diagnostics.push(Diagnostic::DegenerateFan);
    }
    let support = delta.has_no_small_holes_sufficient();
    if !support.is_convex() {
        diagnostics.push(Diagnostic::HolesNotCertified);
    }
    let p = cox_presentation(delta);
    let cox = CoxSummary {
        m,
        class_group: p.class_group().ok(),
        h_decomposition: p.kernel_decomposition(),
    };
    let action = WeightAction::new(weights.clone());
    if !action.is_effective() {
        diagnostics.push(Diagnostic::IneffectiveAction);
    }
    let combined = combined_dimension(p.q_matrix(), weights);
    let product = p.q_matrix().mul(&weights.transpose()).expect("Q is n×m");
    if combined + 1 != m || product.rank() != n - 1 {
        diagnostics.push(Diagnostic::WrongDimension);
    }

    let hypotheses_met = diagnostics.is_empty();
    let (embedding, saturated_embedding) = if hypotheses_met {
        let saturated =
            IntMatrix::from_columns(n, &intlin::saturation(&product)).expect("length n");
        (Some(product), Some(saturated))
    } else {
        (None, None)
    };
    Ok(PipelineReport {
        nondegenerate,
        support,
        cox,
        input_torus_rank: weights.rows(),
        combined_dimension: combined,
        diagnostics,
        hypotheses_met,
        embedding,
        saturated_embedding,
        isogeny_degree: BigInt::one(),
    })
}
