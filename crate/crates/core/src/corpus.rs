//! Named fans used throughout the tests, examples and CLI fixtures.

use crate::fans::Fan;
use crate::intlin::IntVector;

fn build(rank: usize, rays: &[&[i64]], cones: &[&[usize]]) -> Fan {
    Fan::from_i64(rank, rays, cones).expect("corpus fans are valid")
}

/// 𝔸ⁿ: the positive orthant and its faces.
pub fn affine_space(n: usize) -> Fan {
    let rays: Vec<IntVector> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j).into()).collect())
        .collect();
    Fan::from_ray_indices(n, rays, &[(0..n).collect()]).expect("orthant fan is valid")
}

/// ℙ¹.
pub fn projective_line() -> Fan {
    build(1, &[&[1], &[-1]], &[&[0], &[1]])
}

/// ℙ² with rays (1,0), (0,1), (−1,−1).
pub fn projective_plane() -> Fan {
    build(
        2,
        &[&[1, 0], &[0, 1], &[-1, -1]],
        &[&[0, 1], &[1, 2], &[2, 0]],
    )
}

/// ℙ³.
pub fn projective_space_3() -> Fan {
    build(
        3,
        &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]],
        &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]],
    )
}

/// Hirzebruch surface 𝔽_a with rays (1,0), (0,1), (−1,a), (0,−1).
pub fn hirzebruch(a: i64) -> Fan {
    build(
        2,
        &[&[1, 0], &[0, 1], &[-1, a], &[0, -1]],
        &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
    )
}

/// ℙ¹ × ℙ¹ (equal to 𝔽₀).
pub fn p1_times_p1() -> Fan {
    hirzebruch(0)
}

/// The affine quadric cone: a single cone((1,0),(1,2)).
pub fn quadric_cone() -> Fan {
    build(2, &[&[1, 0], &[1, 2]], &[&[0, 1]])
}

/// Weighted projective plane with rays (1,0), (0,1), (−1,−2); the rays
/// satisfy ϱ₁ + 2ϱ₂ + ϱ₃ = 0.
pub fn weighted_projective_plane() -> Fan {
    build(
        2,
        &[&[1, 0], &[0, 1], &[-1, -2]],
        &[&[0, 1], &[1, 2], &[2, 0]],
    )
}

/// Blow-up of 𝔸² at the origin, rays (1,0), (0,1), (1,1).
pub fn blowup_plane() -> Fan {
    build(2, &[&[1, 0], &[0, 1], &[1, 1]], &[&[0, 2], &[2, 1]])
}

/// The named corpus with stable identifiers.
pub fn all() -> Vec<(&'static str, Fan)> {
    vec![
        ("a1", affine_space(1)),
        ("a2", affine_space(2)),
        ("a3", affine_space(3)),
        ("p1", projective_line()),
        ("p2", projective_plane()),
        ("p3", projective_space_3()),
        ("p1xp1", p1_times_p1()),
        ("f1", hirzebruch(1)),
        ("f2", hirzebruch(2)),
        ("f3", hirzebruch(3)),
        ("quadric_cone", quadric_cone()),
        ("p121", weighted_projective_plane()),
        ("blowup_a2", blowup_plane()),
    ]
}
