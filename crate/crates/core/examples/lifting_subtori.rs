//! Lifting subtori of the big torus to the Cox space, and roots of
//! characters up to isogeny.

use std::error::Error;

use num_bigint::BigInt;
use toric_cox::corpus;
use toric_cox::cox::{cox_presentation, lift_subtorus};
use toric_cox::groups::character_root_isogeny;
use toric_cox::intlin::{ivec, IntMatrix};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = cox_presentation(&corpus::quadric_cone());
    let iota = IntMatrix::from_slices(&[&[0], &[1]]);
    let lift = lift_subtorus(&p, &iota)?;
    println!(
        "quadric cone, iota = (0,1): d = {}, W = {:?}",
        lift.degree,
        lift.weights.row_vectors()
    );
    assert_eq!(
        p.q_matrix().mul(&lift.weights.transpose())?,
        IntMatrix::from_slices(&[&[0], &[2]])
    );

    let p = cox_presentation(&corpus::hirzebruch(3));
    let iota = IntMatrix::from_slices(&[&[1, 0], &[0, 1]]);
    let lift = lift_subtorus(&p, &iota)?;
    println!(
        "F3, whole torus: d = {}, W =\n{}",
        lift.degree, lift.weights
    );

    let xi = ivec(&[4, 6]);
    let d = BigInt::from(3);
    let root = character_root_isogeny(&xi, &d)?;
    println!(
        "xi = {xi:?}, d = {d}: kappa =\n{}xi0 = {:?}, deg kappa = {}",
        root.kappa,
        root.xi0,
        root.degree()
    );
    let lhs = root.kappa.transpose().mul_vec(&xi)?;
    assert_eq!(lhs, root.xi0.iter().map(|x| x * &d).collect::<Vec<_>>());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
