//! One-sided degree bounds for longer cycles: for `m >= 3` the chain-side
//! bound `tau_plus >= -rk(phi_plus)(2g - 2)` holds for semistable types,
//! while the wrap-side bound is not guaranteed in general; the report
//! carries that caveat explicitly.
//!
//! Run with `cargo run --example cyclic_chain_bounds`.

use vinberg::toledo::{am_check, toledo_character, toledo_rank_of_pair};
use vinberg::{BilinearFormSpec, GradedDims, HiggsType, Result, ZGrading};

fn main() -> Result<()> {
    let profile = GradedDims::from_slice(&[1, 1, 1])?;
    let z = ZGrading::chain(&profile)?;
    let chi = toledo_character(&z, &BilinearFormSpec::trace_form())?;

    // The Toledo rank of the pair: the rank of a generic chain element.
    println!(
        "generic Toledo rank of the pair for {}: {}",
        profile.label(),
        toledo_rank_of_pair(&z, 5)?
    );

    // Bound checks for a family of types at genus 2.
    println!("\ntypes with ranks (1,1,1), genus 2, full chain rank:");
    for degrees in [vec![1i64, 0, -1], vec![3, -2, -1], vec![4, -1, -3]] {
        let t = HiggsType::new(3, vec![1, 1, 1], degrees.clone(), 2, 1, 0)?;
        let report = am_check(&t, &chi, &z)?;
        println!(
            "  degrees {degrees:?}: tau_plus = {} >= {} is {}, wrap bound guaranteed = {}",
            report.tau_plus, report.tau_plus_bound, report.plus_satisfied, report.guaranteed
        );
        assert!(report.tau.is_none(), "no two-sided window for m > 2");
    }

    // With a vanishing chain part the wrap bound becomes a theorem again.
    let t = HiggsType::new(3, vec![1, 1, 1], vec![1, 0, -1], 2, 0, 1)?;
    let report = am_check(&t, &chi, &z)?;
    println!(
        "\nsame profile with phi_plus = 0: bound {} trivial, guaranteed = {}",
        report.tau_plus_bound, report.guaranteed
    );
    Ok(())
}
