//! From a `Z`-grading to a `Z/m`-grading: build the chain grading of a
//! graded vector space, read off the grading element, collapse degrees
//! modulo `m`, and check the result against the direct quiver grading.
//!
//! Run with `cargo run --example chain_to_cyclic`.

use vinberg::matrix::span_equal;
use vinberg::{CyclicGrading, GradedDims, Result, ZGrading};

fn main() -> Result<()> {
    let profile = GradedDims::from_slice(&[1, 2, 1])?;
    let z = ZGrading::chain(&profile)?;

    println!("chain grading for {}", profile.label());
    println!("grading element zeta = diag of");
    println!("{}", z.zeta());
    println!(
        "degrees {} to {}, piece dimensions {:?}",
        z.min_degree(),
        z.max_degree(),
        z.piece_dims()
    );

    // Each piece is an eigenspace of ad zeta.
    for degree in z.min_degree()..=z.max_degree() {
        for x in z.piece(degree) {
            let ad = vinberg::matrix::bracket(z.zeta(), x);
            assert_eq!(ad, x.scale(&vinberg::scalar::int(degree)));
        }
    }
    println!("every piece is an exact ad-zeta eigenspace");

    // Collapsing degrees modulo m recovers the cyclic quiver grading.
    let collapsed = z.to_cyclic()?;
    let direct = CyclicGrading::from_quiver(&profile);
    for i in 0..profile.m() {
        assert!(span_equal(collapsed.component(i), direct.component(i)));
    }
    println!("collapse modulo m matches the quiver grading as subspaces");

    // The index-1 component splits into the chain maps (degree 1) and the
    // wrap-around maps (degree 1 - m).
    println!(
        "index 1 splits as dim {} (chain) + dim {} (wrap) = {}",
        z.phi_plus_basis().len(),
        z.phi_minus_basis().len(),
        collapsed.component(1).len()
    );
    Ok(())
}
