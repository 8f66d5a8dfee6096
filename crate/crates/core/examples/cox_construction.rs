//! Cox presentations: the map Q, the fan Σ, the group H, freeness.

use std::error::Error;

use toric_cox::corpus;
use toric_cox::cox::{cox_presentation, variety_is_smooth};
use toric_cox::intlin::ivec;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let p = cox_presentation(&corpus::projective_plane());
    println!("P2: Q =\n{}", p.q_matrix());
    println!("Sigma maximal cones {:?}", p.sigma().max_cone_ray_indices());
    println!("H = {:?}", p.kernel_decomposition());
    println!("codim of the complement of Z: {}", p.complement_codim());

    println!(
        "\n{:>13} {:>6} {:>6} {:>6}",
        "fan", "codim", "free", "smooth"
    );
    for (name, fan) in corpus::all() {
        let p = cox_presentation(&fan);
        let codim = p.complement_codim();
        let shown = if codim > p.m() {
            "-".to_string()
        } else {
            codim.to_string()
        };
        println!(
            "{name:>13} {shown:>6} {:>6} {:>6}",
            p.acts_freely(),
            variety_is_smooth(&fan)
        );
        assert_eq!(p.acts_freely(), variety_is_smooth(&fan));
    }

    let p = cox_presentation(&corpus::weighted_projective_plane());
    for a in [ivec(&[1, 0, 0]), ivec(&[0, 1, 0]), ivec(&[1, -2, 1])] {
        println!("deg z^{a:?} = {:?}", p.degree_of_monomial(&a)?.free_part);
    }

    let quadric = cox_presentation(&corpus::quadric_cone());
    for (tau, iso) in quadric
        .delta()
        .max_cone_ray_indices()
        .iter()
        .zip(quadric.isotropy_groups())
    {
        println!("isotropy over cone {tau:?}: {:?}", iso.decompose());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
