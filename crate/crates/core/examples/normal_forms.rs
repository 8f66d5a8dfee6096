//! Smith and Hermite normal forms, kernels and class groups.
//!
//! Run with `cargo run --example normal_forms`.

use std::error::Error;

use toric_cox::corpus;
use toric_cox::intlin::{self, ivec, IntMatrix};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let a = IntMatrix::from_slices(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let snf = intlin::smith_normal_form(&a);
    println!("A =\n{a}D = U*A*V =\n{}", snf.d);
    assert_eq!(snf.u.mul(&a)?.mul(&snf.v)?, snf.d);
    assert_eq!(snf.invariant_factors(), ivec(&[2, 6, 12]));

    let hnf = intlin::column_hnf(&a);
    println!("column Hermite form =\n{}", hnf.h);

    let b = IntMatrix::from_slices(&[&[1, 2, 3], &[2, 4, 6]]);
    println!(
        "kernel basis of {:?}: {:?}",
        b.row_vectors(),
        intlin::kernel_basis(&b)
    );

    // the class group of X is Z^m / im(Q^T)
    for (name, fan) in corpus::all() {
        let cl = intlin::cokernel_invariants(&fan.ray_matrix().transpose());
        println!(
            "{name:>13}: free rank {}, torsion {:?}",
            cl.free_rank, cl.torsion
        );
    }

    let target = ivec(&[0, 2]);
    let q = corpus::quadric_cone().ray_matrix();
    println!(
        "(0,2) in im Q: {}, (0,1) needs multiplier {:?}",
        intlin::lattice_membership(&q, &target),
        intlin::divisibility_index(&q, &ivec(&[0, 1]))
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
