//! Hitchin base dimensions: for the full algebra the summands are the
//! spaces of differentials of the exponent degrees, and the total is
//! `(n^2 - 1)(g - 1)`; for a cyclic pair the degrees come from the
//! certified invariant system.  The pointwise Hitchin map evaluates the
//! invariants on a Higgs field.
//!
//! Run with `cargo run --example hitchin_bases`.

use vinberg::hitchin::{base_dimension, pointwise_hitchin, HitchinPair};
use vinberg::{GradedDims, InvariantSystem, QuiverPoint, Result};

fn main() -> Result<()> {
    println!("full algebra over a genus-2 curve:");
    for n in 2..=5usize {
        let base = base_dimension(&HitchinPair::full_sl(n)?, 2)?;
        println!(
            "  sl({n}): degrees {:?}, summands {:?}, total {}",
            base.degrees, base.summand_dims, base.total_dim
        );
        assert_eq!(base.total_dim, n * n - 1);
    }

    println!("\ncyclic pairs over a genus-3 curve:");
    for dims in [vec![1usize, 1], vec![2, 2], vec![2, 3], vec![1, 1, 1]] {
        let profile = GradedDims::from_slice(&dims)?;
        let pair = HitchinPair::cyclic(profile.clone());
        let base = base_dimension(&pair, 3)?;
        println!(
            "  {}: degrees {:?}, total {} ({})",
            profile.label(),
            base.degrees,
            base.total_dim,
            base.degree_source()
        );
    }

    // Evaluating the invariants on a Higgs field gives the point of the
    // base the field maps to.
    let profile = GradedDims::from_slice(&[2, 2])?;
    let sys = InvariantSystem::new(&profile)?;
    let mut rng = vinberg::sampling::rng_from_seed(9);
    let phi = QuiverPoint::random(&profile, &mut rng, 4);
    let values = pointwise_hitchin(&sys, &phi)?;
    println!("\npoint of the base under a random Higgs field for m=2 dims=(2,2):");
    for (degree, value) in sys.degrees().iter().zip(&values) {
        println!("  degree {degree} summand: {value}");
    }
    Ok(())
}
