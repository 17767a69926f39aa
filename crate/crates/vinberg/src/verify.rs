//! One-shot verification sweep over the built-in profile family.
//!
//! [`run_verify`] replays every certified property of the library on all
//! dimension profiles with `n <= max_n` and `m <= max_m`: grading
//! soundness, chain-to-cyclic consistency, the restriction certificate,
//! `G_0`-invariance, the quasi-split classification, the Toledo
//! identities, the Milnor-Wood window, the one-sided cyclic bound, and
//! Hitchin base dimensions.  Every check uses seeded randomness only, so
//! a report is a pure function of `(options, build)`.
//!
//! The optional [`Fault`] switch deliberately corrupts one intermediate
//! value inside this module (never inside the library) so that the suite
//! can demonstrate it actually detects broken invariants.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::grading::{CyclicGrading, GradedDims, QuiverPoint};
use crate::hitchin::{base_dimension, pointwise_hitchin, HitchinPair};
use crate::invariants::{
    cartan_candidate, check_g0_invariance, cycle_composite, quasi_split_classify,
    quasi_split_dims_rule, rank_of_theta, restriction_certificate, InvariantSystem,
    QuasiSplitClass,
};
use crate::matrix::{bracket, span_equal, Matrix};
use crate::sampling::{derive_seed, rng_from_seed};
use crate::scalar::{int, Scalar};
use crate::toledo::{
    am_check, canonical_forward_nilpotent, canonical_wrap_nilpotent, enumerate_toledo_window,
    jacobson_morozov, toledo_character, toledo_character_minus, toledo_invariant, toledo_rank,
    BilinearFormSpec, HiggsType,
};
use crate::zgrading::ZGrading;

/// A deliberate corruption of one intermediate value, used to prove the
/// suite detects broken invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Moves one basis element of the quiver grading into the wrong
    /// component before soundness checking.
    MisgradeBasis,
    /// Flips the sign of the first evaluator value before the Hitchin
    /// pointwise comparison.
    EvaluatorSignFlip,
    /// Appends one out-of-range degree to every computed Milnor-Wood
    /// window.
    WindowOffByOne,
    /// Adds one to the first Riemann-Roch summand dimension.
    RiemannRochOffByOne,
}

impl Fault {
    pub const ALL: [Fault; 4] = [
        Fault::MisgradeBasis,
        Fault::EvaluatorSignFlip,
        Fault::WindowOffByOne,
        Fault::RiemannRochOffByOne,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Fault::MisgradeBasis => "misgrade-basis",
            Fault::EvaluatorSignFlip => "evaluator-sign-flip",
            Fault::WindowOffByOne => "window-off-by-one",
            Fault::RiemannRochOffByOne => "riemann-roch-off-by-one",
        }
    }

    pub fn from_name(name: &str) -> Option<Fault> {
        Fault::ALL.iter().copied().find(|f| f.name() == name)
    }
}

impl std::fmt::Display for Fault {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Options for the verification sweep.
#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Largest total dimension in the sweep.
    pub max_n: usize,
    /// Largest modulus in the sweep.
    pub max_m: usize,
    /// Conjugation trials per profile in the invariance check.
    pub trials: usize,
    pub fault: Option<Fault>,
}

impl Default for VerifyOptions {
    fn default() -> VerifyOptions {
        VerifyOptions {
            seed: 0,
            max_n: 8,
            max_m: 4,
            trials: 100,
            fault: None,
        }
    }
}

/// Result of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Result of the full sweep.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub pass: bool,
    pub max_n: usize,
    pub max_m: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fault: Option<String>,
    pub checks: Vec<CheckOutcome>,
}

/// All ordered `m`-tuples of nonnegative parts with the given total.
fn compositions(total: usize, parts: usize, min_part: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        if total >= min_part {
            return vec![vec![total]];
        }
        return Vec::new();
    }
    let mut out = Vec::new();
    for first in min_part..=total {
        for mut rest in compositions(total - first, parts - 1, min_part) {
            let mut tuple = Vec::with_capacity(parts);
            tuple.push(first);
            tuple.append(&mut rest);
            out.push(tuple);
        }
    }
    out
}

/// The sweep family: every profile with `2 <= n <= max_n` and
/// `min_m <= m <= max_m`, with parts bounded below by `min_part`.
fn sweep_profiles(max_n: usize, min_m: usize, max_m: usize, min_part: usize) -> Vec<GradedDims> {
    let mut out = Vec::new();
    for m in min_m..=max_m {
        for n in 2..=max_n {
            for dims in compositions(n, m, min_part) {
                if let Ok(profile) = GradedDims::new(m, dims) {
                    out.push(profile);
                }
            }
        }
    }
    out
}

fn outcome(name: &str, swept: usize, failures: Vec<String>) -> CheckOutcome {
    let pass = failures.is_empty();
    let detail = if pass {
        format!("{swept} cases checked")
    } else {
        format!(
            "{} of {swept} cases failed; first: {}",
            failures.len(),
            failures[0]
        )
    };
    CheckOutcome {
        name: name.into(),
        pass,
        detail,
    }
}

/// Criterion: every profile's quiver grading verifies, with component
/// dimensions matching the block-count formula and summing to `n^2 - 1`.
fn check_grading_soundness(opts: &VerifyOptions) -> CheckOutcome {
    let profiles = sweep_profiles(opts.max_n, 1, opts.max_m, 0);
    let failures: Vec<String> = profiles
        .par_iter()
        .filter_map(|dims| {
            let grading = CyclicGrading::from_quiver(dims);
            let grading = if opts.fault == Some(Fault::MisgradeBasis) && dims.m() >= 2 {
                let mut components: Vec<Vec<Matrix>> = (0..dims.m())
                    .map(|i| grading.component(i).to_vec())
                    .collect();
                if let Some(stray) = components[1].pop() {
                    components[0].push(stray);
                }
                match CyclicGrading::from_parts(dims.clone(), components) {
                    Ok(g) => g,
                    Err(e) => return Some(format!("{}: {e}", dims.label())),
                }
            } else {
                grading
            };
            let report = grading.verify();
            let m = dims.m();
            let d = dims.dims();
            let expected: Vec<usize> = (0..m)
                .map(|i| {
                    let raw: usize = (0..m).map(|j| d[j] * d[(j + i) % m]).sum();
                    if i == 0 {
                        raw - 1
                    } else {
                        raw
                    }
                })
                .collect();
            let total: usize = report.component_dims.iter().sum();
            let n = dims.n();
            if report.pass && report.component_dims == expected && total == n * n - 1 {
                None
            } else {
                Some(dims.label())
            }
        })
        .collect();
    outcome("grading_soundness", profiles.len(), failures)
}

/// Criterion: the collapsed chain grading agrees with the quiver grading
/// as subspaces, component by component.
fn check_z_to_cyclic(opts: &VerifyOptions) -> CheckOutcome {
    let profiles = sweep_profiles(opts.max_n, 2, opts.max_m, 1);
    let failures: Vec<String> = profiles
        .par_iter()
        .filter_map(|dims| {
            let run = || -> Result<bool> {
                let z = ZGrading::chain(dims)?;
                let collapsed = z.to_cyclic()?;
                let reference = CyclicGrading::from_quiver(dims);
                for i in 0..dims.m() {
                    if !span_equal(collapsed.component(i), reference.component(i)) {
                        return Ok(false);
                    }
                }
                Ok(true)
            };
            match run() {
                Ok(true) => None,
                Ok(false) => Some(dims.label()),
                Err(e) => Some(format!("{}: {e}", dims.label())),
            }
        })
        .collect();
    outcome("z_to_cyclic", profiles.len(), failures)
}

/// Criterion: the invariant system restricts to elementary symmetric
/// polynomials on the Cartan candidate, the degrees are `m, ..., km`, the
/// predicted Weyl order is `m^k k!`, the Jacobian certificate is full
/// rank, and the rank of theta is `k`.
fn check_restriction(opts: &VerifyOptions) -> CheckOutcome {
    let profiles: Vec<GradedDims> = sweep_profiles(opts.max_n, 2, opts.max_m, 1)
        .into_iter()
        .filter(|dims| dims.k() <= 3)
        .collect();
    let seed = opts.seed;
    let failures: Vec<String> = profiles
        .par_iter()
        .filter_map(|dims| {
            let run = || -> Result<Option<String>> {
                let sys = InvariantSystem::new(dims)?;
                let k = dims.k();
                let m = dims.m();
                let expected_degrees: Vec<usize> = (1..=k).map(|j| j * m).collect();
                if sys.degrees() != expected_degrees {
                    return Ok(Some("degree list".into()));
                }
                let candidate = cartan_candidate(dims)?;
                let report = restriction_certificate(&sys, &candidate)?;
                if !report.pass {
                    return Ok(Some("restriction identity".into()));
                }
                let factorial: u64 = (1..=k as u64).product();
                let expected_order = (m as u64).pow(k as u32) * factorial;
                if report.weyl_order_predicted != expected_order {
                    return Ok(Some("Weyl order".into()));
                }
                let jacobian = sys.certify_independence(derive_seed(seed, &dims.label()))?;
                if !jacobian.full_rank {
                    return Ok(Some("Jacobian rank".into()));
                }
                let grading = CyclicGrading::from_quiver(dims);
                let rank = rank_of_theta(&grading, derive_seed(seed, "rank"))?;
                if rank != k {
                    return Ok(Some(format!("rank {rank} != k {k}")));
                }
                Ok(None)
            };
            match run() {
                Ok(None) => None,
                Ok(Some(reason)) => Some(format!("{}: {reason}", dims.label())),
                Err(e) => Some(format!("{}: {e}", dims.label())),
            }
        })
        .collect();
    outcome("restriction", profiles.len(), failures)
}

/// Criterion: seeded random conjugations leave every invariant value
/// unchanged, `trials` times per profile.
fn check_g0_invariance_sweep(opts: &VerifyOptions) -> CheckOutcome {
    let profiles = sweep_profiles(opts.max_n, 2, opts.max_m, 1);
    let seed = opts.seed;
    let trials = opts.trials;
    let failures: Vec<String> = profiles
        .par_iter()
        .filter_map(|dims| {
            let run = || -> Result<bool> {
                let sys = InvariantSystem::new(dims)?;
                let label = dims.label();
                let mut rng = rng_from_seed(derive_seed(seed, &label));
                let phi = QuiverPoint::random(dims, &mut rng, 5);
                check_g0_invariance(&sys, &phi, trials, derive_seed(seed, "conj"))
            };
            match run() {
                Ok(true) => None,
                Ok(false) => Some(dims.label()),
                Err(e) => Some(format!("{}: {e}", dims.label())),
            }
        })
        .collect();
    outcome("g0_invariance", profiles.len(), failures)
}

/// Criterion: the computed quasi-split classification matches the
/// dimension rule on the whole sweep, including the named witnesses.
fn check_quasi_split(opts: &VerifyOptions) -> CheckOutcome {
    let profiles = sweep_profiles(opts.max_n, 2, opts.max_m, 1);
    let mut failures: Vec<String> = profiles
        .par_iter()
        .filter_map(|dims| {
            let run = || -> Result<bool> {
                let grading = CyclicGrading::from_quiver(dims);
                let report = quasi_split_classify(&grading)?;
                Ok(report.classification == quasi_split_dims_rule(dims))
            };
            match run() {
                Ok(true) => None,
                Ok(false) => Some(dims.label()),
                Err(e) => Some(format!("{}: {e}", dims.label())),
            }
        })
        .collect();
    let witnesses = [
        (vec![1usize, 1, 1], QuasiSplitClass::Split),
        (vec![2, 2, 3], QuasiSplitClass::QuasiSplit),
        (vec![1, 3], QuasiSplitClass::Neither),
    ];
    let mut swept = profiles.len();
    for (dims, expected) in witnesses {
        swept += 1;
        let label = format!("witness {dims:?}");
        match GradedDims::from_slice(&dims)
            .and_then(|p| quasi_split_classify(&CyclicGrading::from_quiver(&p)))
        {
            Ok(report) if report.classification == expected => {}
            Ok(report) => failures.push(format!(
                "{label}: got {}, expected {expected}",
                report.classification
            )),
            Err(e) => failures.push(format!("{label}: {e}")),
        }
    }
    outcome("quasi_split", swept, failures)
}

/// Criterion: tau = 2 e_0 on two-block types, character coefficients are
/// scale independent, canonical nilpotents complete to exact sl_2
/// triples, and two-block corner ranks equal the matrix rank.
fn check_toledo_identities(opts: &VerifyOptions) -> CheckOutcome {
    let mut swept = 0usize;
    let mut failures: Vec<String> = Vec::new();

    for n0 in 1..=4usize {
        for n1 in 1..=4usize {
            let dims = match GradedDims::new(2, vec![n0, n1]) {
                Ok(d) => d,
                Err(_) => continue,
            };
            let run = || -> Result<Vec<String>> {
                let mut local = Vec::new();
                let z = ZGrading::chain(&dims)?;
                let spec = BilinearFormSpec::trace_form();
                let chi_minus = toledo_character_minus(&z, &spec)?;
                let chi_plus = toledo_character(&z, &spec)?;
                for e0 in -6i64..=6 {
                    let t = HiggsType::new(2, vec![n0, n1], vec![e0, -e0], 2, 0, 0)?;
                    if toledo_invariant(&t, &chi_minus)? != int(2 * e0) {
                        local.push(format!("{}: tau != 2e0 at e0 = {e0}", dims.label()));
                    }
                }
                for r in 1..=n0.min(n1).min(4) {
                    let forward = canonical_forward_nilpotent(&dims, r)?;
                    if toledo_rank(&forward, &chi_plus, &z)? != int(r as i64) {
                        local.push(format!("{}: forward rank {r}", dims.label()));
                    }
                    let wrap = canonical_wrap_nilpotent(&dims, r)?;
                    if toledo_rank(&wrap, &chi_minus, &z)? != int(r as i64) {
                        local.push(format!("{}: wrap rank {r}", dims.label()));
                    }
                }
                Ok(local)
            };
            swept += 1;
            match run() {
                Ok(local) => failures.extend(local),
                Err(e) => failures.push(format!("{}: {e}", dims.label())),
            }
        }
    }

    let profiles = sweep_profiles(opts.max_n, 2, opts.max_m, 1);
    for dims in &profiles {
        swept += 1;
        let run = || -> Result<Vec<String>> {
            let mut local = Vec::new();
            let z = ZGrading::chain(dims)?;
            let one = toledo_character(&z, &BilinearFormSpec::trace_form())?;
            let seven = toledo_character(&z, &BilinearFormSpec::new(int(7))?)?;
            if one.coefficients() != seven.coefficients() {
                local.push(format!("{}: scale dependence", dims.label()));
            }
            let wrap_cap = dims.dims()[0].min(dims.dims()[dims.m() - 1]);
            for r in 1..=dims.k().min(4) {
                let e = canonical_forward_nilpotent(dims, r)?;
                let triple = jacobson_morozov(&e, &z)?;
                let ok = bracket(triple.h(), triple.e()) == triple.e().scale(&int(2))
                    && bracket(triple.h(), triple.f()) == triple.f().scale(&int(-2))
                    && &bracket(triple.e(), triple.f()) == triple.h();
                if !ok {
                    local.push(format!(
                        "{}: forward sl2 relations at r = {r}",
                        dims.label()
                    ));
                }
            }
            for r in 1..=wrap_cap.min(4) {
                let e = canonical_wrap_nilpotent(dims, r)?;
                let triple = jacobson_morozov(&e, &z)?;
                let ok = bracket(triple.h(), triple.e()) == triple.e().scale(&int(2))
                    && bracket(triple.h(), triple.f()) == triple.f().scale(&int(-2))
                    && &bracket(triple.e(), triple.f()) == triple.h();
                if !ok {
                    local.push(format!("{}: wrap sl2 relations at r = {r}", dims.label()));
                }
            }
            Ok(local)
        };
        match run() {
            Ok(local) => failures.extend(local),
            Err(e) => failures.push(format!("{}: {e}", dims.label())),
        }
    }

    outcome("toledo_identities", swept, failures)
}

/// Criterion: the enumerated Milnor-Wood window equals the brute-force
/// set of degrees passing both bounds at full generic ranks, with exact
/// Cayley flags.
fn check_window(opts: &VerifyOptions) -> CheckOutcome {
    let max_n = opts.max_n.min(6);
    let profiles = sweep_profiles(max_n, 2, 2, 1);
    let mut swept = 0usize;
    let mut failures: Vec<String> = Vec::new();
    for dims in &profiles {
        for genus in [2usize, 3] {
            swept += 1;
            let label = format!("{} g={genus}", dims.label());
            let run = || -> Result<Option<String>> {
                let ranks = dims.dims().to_vec();
                let window = enumerate_toledo_window(&ranks, genus)?;
                let mut computed: Vec<i64> = window.entries.iter().map(|e| e.d).collect();
                if opts.fault == Some(Fault::WindowOffByOne) {
                    computed.push(window.bound + 1);
                }
                let z = ZGrading::chain(dims)?;
                let chi = toledo_character(&z, &BilinearFormSpec::trace_form())?;
                let k = dims.k();
                let mut admitted = Vec::new();
                for d in -(window.bound + 2)..=(window.bound + 2) {
                    let t = HiggsType::new(2, ranks.clone(), vec![d, -d], genus, k, k)?;
                    let report = am_check(&t, &chi, &z)?;
                    if report.plus_satisfied && report.minus_satisfied {
                        admitted.push(d);
                    }
                }
                if computed != admitted {
                    return Ok(Some(format!("{label}: window set mismatch")));
                }
                let balanced = ranks[0] == ranks[1];
                for entry in &window.entries {
                    let expect_cayley = entry.maximal && balanced;
                    if entry.cayley != expect_cayley
                        || entry.maximal != (entry.d.abs() == window.bound)
                        || entry.tau != 2 * entry.d
                    {
                        return Ok(Some(format!("{label}: flags at d = {}", entry.d)));
                    }
                }
                Ok(None)
            };
            match run() {
                Ok(None) => {}
                Ok(Some(reason)) => failures.push(reason),
                Err(e) => failures.push(format!("{label}: {e}")),
            }
        }
    }
    outcome("milnor_wood_window", swept, failures)
}

/// Criterion: for m in {3, 4}, the one-sided bound uses the
/// Jacobson-Morozov Toledo rank, every boundary type sits exactly at
/// `-rk(2g - 2)`, and the wrap-side bound is marked not guaranteed.
fn check_cyclic_one_sided(opts: &VerifyOptions) -> CheckOutcome {
    let genus = 2usize;
    let two_g_minus_2 = int(2 * genus as i64 - 2);
    let mut swept = 0usize;
    let mut boundary_cases = 0usize;
    let mut failures: Vec<String> = Vec::new();
    for m in 3..=opts.max_m.min(4) {
        let profiles = sweep_profiles(opts.max_n, m, m, 1);
        for dims in &profiles {
            swept += 1;
            let run = || -> Result<(usize, Vec<String>)> {
                let mut local = Vec::new();
                let mut boundary = 0usize;
                let z = ZGrading::chain(dims)?;
                let chi = toledo_character(&z, &BilinearFormSpec::trace_form())?;
                for r in 0..=dims.k() {
                    let rk = if r == 0 {
                        Scalar::zero()
                    } else {
                        toledo_rank(&canonical_forward_nilpotent(dims, r)?, &chi, &z)?
                    };
                    let bound = -(&rk * &two_g_minus_2);
                    for degrees in degree_tuples(dims.m(), 3) {
                        let t =
                            HiggsType::new(dims.m(), dims.dims().to_vec(), degrees, genus, r, 0)?;
                        let tau_plus = toledo_invariant(&t, &chi)?;
                        if tau_plus != bound {
                            continue;
                        }
                        boundary += 1;
                        let report = am_check(&t, &chi, &z)?;
                        let consistent = report.plus_satisfied
                            && report.tau_plus == tau_plus
                            && report.tau_plus_bound == bound
                            && report.guaranteed == (r == 0)
                            && report.tau.is_none()
                            && report.window.is_none();
                        if !consistent {
                            local.push(format!("{}: boundary report at r = {r}", dims.label()));
                        }
                    }
                }
                Ok((boundary, local))
            };
            match run() {
                Ok((boundary, local)) => {
                    boundary_cases += boundary;
                    failures.extend(local);
                }
                Err(e) => failures.push(format!("{}: {e}", dims.label())),
            }
        }
    }
    if swept > 0 && boundary_cases == 0 {
        failures.push("no boundary types found in the sweep".into());
    }
    let mut result = outcome("cyclic_one_sided_bound", swept, failures);
    if result.pass {
        result.detail = format!(
            "{swept} profiles checked, {boundary_cases} boundary types hit the bound exactly"
        );
    }
    result
}

/// All degree tuples summing to zero with entries in `[-box_bound, box_bound]`
/// in the first `m - 1` slots.
fn degree_tuples(m: usize, box_bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut current = vec![0i64; m];
    fn rec(slot: usize, m: usize, box_bound: i64, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if slot == m - 1 {
            let partial: i64 = current[..m - 1].iter().sum();
            current[m - 1] = -partial;
            out.push(current.clone());
            return;
        }
        for v in -box_bound..=box_bound {
            current[slot] = v;
            rec(slot + 1, m, box_bound, current, out);
        }
    }
    rec(0, m, box_bound, &mut current, &mut out);
    out
}

/// Criterion: the full-algebra base dimension identity and the pointwise
/// Hitchin oracle on 50 seeded random points per profile.
fn check_hitchin(opts: &VerifyOptions) -> CheckOutcome {
    let mut swept = 0usize;
    let mut failures: Vec<String> = Vec::new();

    for n in 2..=opts.max_n.max(2) {
        let pair = match HitchinPair::full_sl(n) {
            Ok(p) => p,
            Err(e) => {
                failures.push(format!("sl({n}): {e}"));
                continue;
            }
        };
        for genus in 2..=5usize {
            swept += 1;
            match base_dimension(&pair, genus) {
                Ok(mut base) => {
                    if opts.fault == Some(Fault::RiemannRochOffByOne) {
                        base.summand_dims[0] += 1;
                        base.total_dim += 1;
                    }
                    let expected = (n * n - 1) * (genus - 1);
                    let consistent = base.total_dim == expected
                        && base.summand_dims.iter().sum::<usize>() == base.total_dim;
                    if !consistent {
                        failures.push(format!("sl({n}) g={genus}: base dimension"));
                    }
                }
                Err(e) => failures.push(format!("sl({n}) g={genus}: {e}")),
            }
        }
    }

    let profiles = sweep_profiles(opts.max_n, 2, opts.max_m, 1);
    let seed = opts.seed;
    let fault = opts.fault;
    let pointwise_failures: Vec<String> = profiles
        .par_iter()
        .filter_map(|dims| {
            let run = || -> Result<Option<String>> {
                let sys = InvariantSystem::new(dims)?;
                let mut rng = rng_from_seed(derive_seed(seed, &dims.label()));
                let n = dims.n();
                let m = dims.m();
                let n0 = dims.dims()[0];
                for draw in 0..50 {
                    let phi = QuiverPoint::random(dims, &mut rng, 5);
                    let mut values = pointwise_hitchin(&sys, &phi)?;
                    if fault == Some(Fault::EvaluatorSignFlip) && !values.is_empty() {
                        values[0] = -values[0].clone();
                    }
                    let assembled_charpoly = phi.assemble().charpoly()?;
                    for (idx, value) in values.iter().enumerate() {
                        let degree = sys.degrees()[idx];
                        let sign = if (idx + 1) % 2 == 0 { int(1) } else { int(-1) };
                        if value != &(sign * assembled_charpoly.coeff(n - degree)) {
                            return Ok(Some(format!(
                                "{}: draw {draw} invariant {}",
                                dims.label(),
                                idx + 1
                            )));
                        }
                    }
                    let composite_charpoly = cycle_composite(&phi)?.charpoly()?;
                    let lhs = composite_charpoly.substitute_power(m).shift(n);
                    let rhs = assembled_charpoly.shift(m * n0);
                    if lhs != rhs {
                        return Ok(Some(format!(
                            "{}: draw {draw} substitution identity",
                            dims.label()
                        )));
                    }
                }
                Ok(None)
            };
            match run() {
                Ok(None) => None,
                Ok(Some(reason)) => Some(reason),
                Err(e) => Some(format!("{}: {e}", dims.label())),
            }
        })
        .collect();
    swept += profiles.len();
    failures.extend(pointwise_failures);

    outcome("hitchin_base", swept, failures)
}

/// Runs the whole suite and assembles the report.
pub fn run_verify(opts: &VerifyOptions) -> VerifyReport {
    let checks = vec![
        check_grading_soundness(opts),
        check_z_to_cyclic(opts),
        check_restriction(opts),
        check_g0_invariance_sweep(opts),
        check_quasi_split(opts),
        check_toledo_identities(opts),
        check_window(opts),
        check_cyclic_one_sided(opts),
        check_hitchin(opts),
    ];
    let pass = checks.iter().all(|c| c.pass);
    VerifyReport {
        pass,
        max_n: opts.max_n,
        max_m: opts.max_m,
        seed: opts.seed,
        fault: opts.fault.map(|f| f.name().to_string()),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_enumerate_the_simplex() {
        assert_eq!(compositions(3, 1, 0), vec![vec![3]]);
        assert_eq!(compositions(3, 2, 1), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(compositions(2, 3, 0).len(), 6);
        assert!(compositions(2, 3, 1).is_empty());
    }

    #[test]
    fn degree_tuples_sum_to_zero() {
        let tuples = degree_tuples(3, 2);
        assert_eq!(tuples.len(), 25);
        assert!(tuples.iter().all(|t| t.iter().sum::<i64>() == 0));
        assert!(tuples.contains(&vec![2, -1, -1]));
    }

    #[test]
    fn fault_names_round_trip() {
        for fault in Fault::ALL {
            assert_eq!(Fault::from_name(fault.name()), Some(fault));
        }
        assert_eq!(Fault::from_name("nonsense"), None);
    }

    #[test]
    fn small_sweep_is_green() {
        let opts = VerifyOptions {
            max_n: 4,
            max_m: 3,
            trials: 5,
            ..VerifyOptions::default()
        };
        let report = run_verify(&opts);
        for check in &report.checks {
            assert!(check.pass, "{}: {}", check.name, check.detail);
        }
        assert!(report.pass);
        assert_eq!(report.checks.len(), 9);
    }

    #[test]
    fn every_fault_breaks_the_small_sweep() {
        for fault in Fault::ALL {
            let opts = VerifyOptions {
                max_n: 4,
                max_m: 3,
                trials: 2,
                fault: Some(fault),
                ..VerifyOptions::default()
            };
            let report = run_verify(&opts);
            assert!(!report.pass, "fault {fault} went undetected");
        }
    }
}
