//! Nondegeneracy, completeness and convex support of fans.

use std::error::Error;

use toric_cox::corpus;
use toric_cox::fans::{Fan, SupportConvexity};

fn describe(name: &str, fan: &Fan) {
    let support = fan.has_convex_support();
    print!(
        "{name:>16}: nondegenerate {:5} complete {:5} support {}",
        fan.is_nondegenerate(),
        fan.is_complete(),
        support.label()
    );
    if let SupportConvexity::NotConvex { witness, .. } = &support {
        print!(" (witness {witness:?})");
    }
    println!();
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (name, fan) in corpus::all() {
        describe(name, &fan);
    }

    let three_quadrants = Fan::from_i64(
        2,
        &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]],
        &[&[0, 1], &[1, 2], &[2, 3]],
    )?;
    describe("three quadrants", &three_quadrants);
    if let SupportConvexity::NotConvex { witness, .. } = three_quadrants.has_convex_support() {
        assert!(!three_quadrants.support_contains(&witness));
    }

    let line = Fan::from_i64(2, &[&[1, 0]], &[&[0]])?;
    describe("a ray in rank 2", &line);

    // overlapping cones are not a fan
    let err = Fan::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1]], &[&[0, 1], &[2, 1]]).unwrap_err();
    println!("invalid: {err}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
