//! Cones: dual descriptions, faces, intersections.

use std::error::Error;

use toric_cox::cones::Cone;
use toric_cox::intlin::ivec;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let pyramid = Cone::from_i64(3, &[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1]])?;
    println!(
        "pyramid: dim {}, simplicial {}",
        pyramid.dim(),
        pyramid.is_simplicial()
    );
    println!("facet normals: {:?}", pyramid.dual_description());
    let faces = pyramid.faces();
    println!("{} faces", faces.len());
    assert_eq!(faces.len(), 10);

    // redundant generators are dropped
    let c = Cone::from_i64(2, &[&[1, 0], &[1, 1], &[0, 1]])?;
    println!("cone((1,0),(1,1),(0,1)) has rays {:?}", c.rays());

    let quadrant = Cone::from_i64(2, &[&[1, 0], &[0, 1]])?;
    let upper = Cone::from_i64(2, &[&[1, 1], &[-1, 1]])?;
    let meet = quadrant.intersect(&upper);
    println!("intersection rays: {:?}", meet.rays());
    assert!(meet.is_face_of(&meet));

    let q = Cone::from_i64(2, &[&[1, 0], &[1, 2]])?;
    println!(
        "quadric cone smooth: {}, contains (1,1): {}",
        q.is_smooth(),
        q.contains_integer_point(&ivec(&[1, 1]))
    );

    match Cone::from_i64(2, &[&[1, 0], &[-1, 0]]) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("a line is not strongly convex"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
