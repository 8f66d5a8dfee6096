//! Places a codimension-one torus action inside the big torus, reading the
//! fans from the JSON fixtures in `data/`.

use std::error::Error;
use std::path::Path;

use toric_cox::intlin::IntMatrix;
use toric_cox::json::parse_fan;
use toric_cox::pipeline::theorem_pipeline;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let cases: [(&str, &[&[i64]]); 4] = [
        ("blowup_a2.json", &[&[1, 0, 0]]),
        ("a2.json", &[&[1, 0]]),
        ("p2.json", &[&[1, 1, 1]]),
        ("three_quadrants.json", &[&[1, 0, 0, 0]]),
    ];
    for (file, w) in cases {
        let fan = parse_fan(&std::fs::read_to_string(data.join(file))?)?;
        let report = theorem_pipeline(&fan, &IntMatrix::from_slices(w))?;
        print!(
            "{file}: combined dimension {} of m - 1 = {}",
            report.combined_dimension,
            report.cox.m - 1
        );
        match &report.embedding {
            Some(e) => println!(", embedding {:?}", e.column_vectors()),
            None => {
                let names: Vec<_> = report.diagnostics.iter().map(|d| d.name()).collect();
                println!(", rejected: {}", names.join(", "));
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
