//! Corank-one diagonal subgroups, their quotients, and monomial matrices
//! commuting with them.

use std::error::Error;

use num_rational::BigRational;
use toric_cox::groups::{
    classify_quotient, commutes_with_torus, hyperplane_permutation_report, normalizes_torus,
    DiagonalizableSubgroup, MonomialMatrix, QuotientType,
};
use toric_cox::intlin::ivec;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for a in [
        ivec(&[1, 2, 0]),
        ivec(&[1, -1, 0]),
        ivec(&[-2, -1, -1]),
        ivec(&[2, 4, 0]),
    ] {
        let g0 = DiagonalizableSubgroup::from_relation_vectors(3, std::slice::from_ref(&a))?;
        match classify_quotient(&g0) {
            Ok(QuotientType::Monomial(e)) => println!("t^{a:?} = 1: quotient map z^{e:?}"),
            Ok(QuotientType::Point) => println!("t^{a:?} = 1: quotient is a point"),
            Err(e) => println!("t^{a:?} = 1: {e}"),
        }
    }

    let a = ivec(&[1, 1, 0, 0]);
    let g0 = DiagonalizableSubgroup::from_relation_vectors(4, std::slice::from_ref(&a))?;
    let third = BigRational::new(1.into(), 3.into());
    let zero = BigRational::from_integer(0.into());
    let candidates = [
        MonomialMatrix::new(
            vec![0, 1, 2, 3],
            vec![third.clone(), zero.clone(), third, zero.clone()],
        )?,
        MonomialMatrix::permutation(vec![1, 0, 2, 3])?,
        MonomialMatrix::permutation(vec![0, 1, 3, 2])?,
    ];
    for g in &candidates {
        let r = hyperplane_permutation_report(g, &a);
        println!(
            "perm {:?} order {}: commutes {}, normalizes {}, fixes zero support {}, permutes positive support {}",
            g.perm(),
            g.order(),
            commutes_with_torus(g, &g0),
            normalizes_torus(g, &g0),
            r.fixes_zero_support,
            r.permutes_positive_support
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
