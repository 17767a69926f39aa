//! The one-shot verification sweep: replay every certified property over
//! small profiles, then show that an injected fault is detected.
//!
//! Run with `cargo run --example verification_sweep`.

use vinberg::{run_verify, Fault, VerifyOptions};

fn main() {
    let opts = VerifyOptions {
        max_n: 5,
        max_m: 3,
        trials: 20,
        ..VerifyOptions::default()
    };
    let report = run_verify(&opts);
    println!("clean sweep over n <= {}, m <= {}:", opts.max_n, opts.max_m);
    for check in &report.checks {
        println!(
            "  {:<24} pass = {:<5}  {}",
            check.name, check.pass, check.detail
        );
    }
    println!("overall: {}", report.pass);

    let broken = run_verify(&VerifyOptions {
        fault: Some(Fault::EvaluatorSignFlip),
        ..opts
    });
    let caught = broken
        .checks
        .iter()
        .find(|c| !c.pass)
        .expect("the fault must be detected");
    println!(
        "\nwith an injected {} fault: overall {} (first failing check: {})",
        Fault::EvaluatorSignFlip,
        broken.pass,
        caught.name
    );
}
