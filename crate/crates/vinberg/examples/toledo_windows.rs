//! Toledo invariants of two-block types: the Toledo character, the
//! invariant `tau = 2 e_0`, Toledo ranks of nilpotents through exact
//! `sl_2`-triples, the Arakelov-Milnor bounds, and the Milnor-Wood
//! window with its maximal and Cayley values.
//!
//! Run with `cargo run --example toledo_windows`.

use vinberg::toledo::{
    am_check, canonical_forward_nilpotent, enumerate_toledo_window, jacobson_morozov,
    toledo_character, toledo_character_minus, toledo_invariant,
};
use vinberg::{BilinearFormSpec, GradedDims, HiggsType, Result, ZGrading};

fn main() -> Result<()> {
    let profile = GradedDims::from_slice(&[1, 1])?;
    let z = ZGrading::chain(&profile)?;
    let spec = BilinearFormSpec::trace_form();

    // The classical Hermitian character of the two-block case pairs a
    // type to twice its first block degree.
    let chi_minus = toledo_character_minus(&z, &spec)?;
    println!(
        "character coefficients on block traces: {:?}",
        chi_minus
            .coefficients()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    for e0 in [-2i64, 0, 1] {
        let t = HiggsType::new(2, vec![1, 1], vec![e0, -e0], 2, 1, 1)?;
        println!("e0 = {e0:>2}  tau = {}", toledo_invariant(&t, &chi_minus)?);
    }

    // Toledo ranks come from exact sl2 triples.
    let e = canonical_forward_nilpotent(&profile, 1)?;
    let triple = jacobson_morozov(&e, &z)?;
    println!("\nsl2 triple above the corner nilpotent: h =");
    println!("{}", triple.h());

    // Full bound report for a maximal type.
    let chi_plus = toledo_character(&z, &spec)?;
    let t = HiggsType::new(2, vec![1, 1], vec![1, -1], 2, 1, 1)?;
    let report = am_check(&t, &chi_plus, &z)?;
    println!(
        "type with e0 = 1: tau = {}, window = [{}, {}], maximal = {}, cayley = {}",
        report.tau.as_ref().expect("m = 2"),
        report.window.as_ref().expect("m = 2")[0],
        report.window.as_ref().expect("m = 2")[1],
        report.maximal.expect("m = 2"),
        report.cayley.expect("m = 2"),
    );

    // The admissible window for a larger profile.
    println!("\nwindow for ranks (2, 3), genus 2:");
    let window = enumerate_toledo_window(&[2, 3], 2)?;
    for entry in &window.entries {
        println!(
            "  d = {:>2}  tau = {:>2}  maximal = {:<5} cayley = {}",
            entry.d, entry.tau, entry.maximal, entry.cayley
        );
    }
    Ok(())
}
