//! Scan small profiles and classify each pair as split, quasi-split, or
//! neither, comparing the centralizer computation with the closed
//! dimension rule: quasi-split exactly when every block dimension is `k`
//! or `k + 1`, split exactly when all are 1.
//!
//! Run with `cargo run --example quasi_split_scan`.

use vinberg::invariants::{quasi_split_classify, quasi_split_dims_rule};
use vinberg::{CyclicGrading, GradedDims, Result};

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        if total == 0 {
            return Vec::new();
        }
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in compositions(total - first, parts - 1) {
            let mut tuple = vec![first];
            tuple.append(&mut rest);
            out.push(tuple);
        }
    }
    out
}

fn main() -> Result<()> {
    println!(
        "{:<18} {:>16} {:>10} {:>8}",
        "profile", "classification", "dim C(a)", "rule ok"
    );
    for m in 2..=3usize {
        for n in 2..=6usize {
            for dims in compositions(n, m) {
                let profile = GradedDims::from_slice(&dims)?;
                let grading = CyclicGrading::from_quiver(&profile);
                let report = quasi_split_classify(&grading)?;
                let rule = quasi_split_dims_rule(&profile);
                println!(
                    "{:<18} {:>16} {:>10} {:>8}",
                    profile.label(),
                    report.classification.to_string(),
                    report.centralizer_dim,
                    report.classification == rule
                );
            }
        }
    }
    Ok(())
}
