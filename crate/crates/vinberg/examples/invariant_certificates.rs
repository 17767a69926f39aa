//! Invariant theory of a cyclic pair, certified: generating invariants
//! and their degrees, algebraic independence through an exact Jacobian,
//! the restriction to the Cartan candidate, the predicted little Weyl
//! group order, and the rank cross-check.
//!
//! Run with `cargo run --example invariant_certificates`.

use vinberg::invariants::{cartan_candidate, rank_of_theta, restriction_certificate};
use vinberg::{CyclicGrading, GradedDims, InvariantSystem, QuiverPoint, Result};

fn main() -> Result<()> {
    let profile = GradedDims::from_slice(&[2, 2])?;
    let sys = InvariantSystem::new(&profile)?;
    println!("profile {}", profile.label());
    println!("k = {}, degrees = {:?}", sys.k(), sys.degrees());

    // Evaluate the invariants on a seeded random Higgs field.
    let mut rng = vinberg::sampling::rng_from_seed(1);
    let phi = QuiverPoint::random(&profile, &mut rng, 5);
    let values = sys.evaluate(&phi)?;
    for (degree, value) in sys.degrees().iter().zip(&values) {
        println!("invariant of degree {degree} evaluates to {value}");
    }

    // Algebraic independence: the Jacobian at a random point has rank k.
    let jacobian = sys.certify_independence(7)?;
    println!(
        "Jacobian rank {} of {} invariants: full rank = {}",
        jacobian.jacobian_rank, jacobian.k, jacobian.full_rank
    );

    // Restriction theorem: on the Cartan candidate the invariants become
    // elementary symmetric polynomials in the m-th powers of the
    // coordinates, proved on determining grids.
    let candidate = cartan_candidate(&profile)?;
    let restriction = restriction_certificate(&sys, &candidate)?;
    println!(
        "restriction certificate: pass = {}, predicted Weyl order = {}",
        restriction.pass, restriction.weyl_order_predicted
    );

    // The rank of the pair equals the Cartan candidate dimension, cross
    // checked against the centralizer of a random regular point.
    let grading = CyclicGrading::from_quiver(&profile);
    let rank = rank_of_theta(&grading, 3)?;
    println!("certified rank = {rank}");

    // A profile with a zero block has no Cartan subspace at all.
    let degenerate = GradedDims::from_slice(&[2, 0, 1])?;
    let empty = InvariantSystem::new(&degenerate)?;
    println!(
        "profile {} has k = {} and no invariants",
        degenerate.label(),
        empty.k()
    );
    Ok(())
}
