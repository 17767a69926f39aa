//! Tour of cyclic gradings: build the grading of `sl(n)` induced by a
//! `Z/m`-graded vector space, inspect component dimensions, and run the
//! soundness verification.
//!
//! Run with `cargo run --example grading_tour`.

use vinberg::{CyclicGrading, GradedDims, Result};

fn main() -> Result<()> {
    for dims in [vec![1, 1], vec![1, 2], vec![2, 2, 3], vec![2, 0, 1]] {
        let profile = GradedDims::from_slice(&dims)?;
        let grading = CyclicGrading::from_quiver(&profile);
        let report = grading.verify();
        println!("{}", profile.label());
        println!("  component dims: {:?}", report.component_dims);
        println!(
            "  total {} = n^2 - 1 = {}",
            report.component_dims.iter().sum::<usize>(),
            profile.n() * profile.n() - 1
        );
        println!(
            "  verified: dims match {}, brackets graded {}, pass {}",
            report.dims_match,
            report.bracket_failures.is_empty(),
            report.pass
        );
    }

    // The grading refines the bracket: component i bracketed with
    // component j lands in component i + j mod m.
    let profile = GradedDims::from_slice(&[1, 2])?;
    let grading = CyclicGrading::from_quiver(&profile);
    let x = &grading.component(1)[0];
    let y = &grading.component(1)[1];
    let b = vinberg::matrix::bracket(x, y);
    println!("\nbracket of two index-1 elements of {}:", profile.label());
    println!("{b}");
    let target = 2 % profile.m();
    println!(
        "equals its own projection to component {target}: {}",
        grading.project(&b, target) == b
    );
    Ok(())
}
