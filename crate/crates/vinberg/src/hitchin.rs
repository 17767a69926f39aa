//! Hitchin base data: invariant degrees, Riemann-Roch summand dimensions,
//! total base dimension, and the pointwise Hitchin map.
//!
//! The base of the Hitchin map for a pair with generating invariants of
//! degrees `d_1, ..., d_r` is `⊕_i H^0(X, K^{d_i})`; the curve `X` enters
//! only through its genus, so every dimension here is a Riemann-Roch
//! count.  For the full algebra (`m = 1`) the degrees are the exponents
//! `2, ..., n`; for a cyclic quiver pair they are the degrees
//! `m, 2m, ..., km` of the certified invariant system, a list not
//! confirmed against the literature, so [`HitchinBase::degree_source`]
//! records that caveat.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grading::{GradedDims, QuiverPoint};
use crate::invariants::InvariantSystem;
use crate::scalar::Scalar;

/// A pair descriptor for Hitchin base computations: the full algebra or a
/// cyclic quiver pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HitchinPair {
    /// All of `sl(n)` with the adjoint action, the `m = 1` case.
    FullSl { n: usize },
    /// The pair `(G_0, g_1)` of a cyclic quiver profile with `m >= 2`.
    Cyclic { dims: GradedDims },
}

impl HitchinPair {
    pub fn full_sl(n: usize) -> Result<HitchinPair> {
        if n < 2 {
            return Err(Error::Invalid(format!("sl(n) needs n >= 2, got n = {n}")));
        }
        Ok(HitchinPair::FullSl { n })
    }

    /// Wraps a quiver profile; an `m = 1` profile is the full algebra.
    pub fn cyclic(dims: GradedDims) -> HitchinPair {
        if dims.m() == 1 {
            HitchinPair::FullSl { n: dims.n() }
        } else {
            HitchinPair::Cyclic { dims }
        }
    }
}

/// Provenance of a degree list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeSource {
    /// Exponents of `sl(n)`, the classical `m = 1` table.
    Exponents,
    /// Degrees of the certified invariant system; computed, not
    /// literature-confirmed.
    InvariantSystem,
}

impl std::fmt::Display for DegreeSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DegreeSource::Exponents => write!(f, "exponents of sl(n)"),
            DegreeSource::InvariantSystem => {
                write!(f, "computed, not literature-confirmed")
            }
        }
    }
}

/// Degrees of the generating invariants of a pair: the exponents
/// `2, ..., n` for the full algebra, `m, 2m, ..., km` for a cyclic quiver
/// pair.
pub fn invariant_degrees(pair: &HitchinPair) -> Result<Vec<usize>> {
    match pair {
        HitchinPair::FullSl { n } => {
            if *n < 2 {
                return Err(Error::Invalid(format!("sl(n) needs n >= 2, got n = {n}")));
            }
            Ok((2..=*n).collect())
        }
        HitchinPair::Cyclic { dims } => Ok(InvariantSystem::new(dims)?.degrees().to_vec()),
    }
}

/// `dim H^0(X, K^d)` on a smooth curve of genus `g >= 2`: 1 for `d = 0`,
/// `g` for `d = 1`, `(2d - 1)(g - 1)` for `d >= 2`.
pub fn h0_kpower(genus: usize, d: usize) -> Result<usize> {
    if genus < 2 {
        return Err(Error::Invalid(format!(
            "genus must be at least 2, got {genus}"
        )));
    }
    Ok(match d {
        0 => 1,
        1 => genus,
        _ => (2 * d - 1) * (genus - 1),
    })
}

/// The Hitchin base `⊕_i H^0(X, K^{d_i})` of a pair over a genus-`g`
/// curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HitchinBase {
    pub degrees: Vec<usize>,
    pub genus: usize,
    pub summand_dims: Vec<usize>,
    pub total_dim: usize,
    #[serde(skip)]
    degree_source: DegreeSource,
}

impl HitchinBase {
    /// Where the degree list comes from; cyclic-pair degrees are computed
    /// from the invariant system rather than read from a table.
    pub fn degree_source(&self) -> DegreeSource {
        self.degree_source
    }
}

/// Assembles the Hitchin base of a pair.  For the full algebra the total
/// is re-verified against the closed form `(n^2 - 1)(g - 1)`.
pub fn base_dimension(pair: &HitchinPair, genus: usize) -> Result<HitchinBase> {
    let degrees = invariant_degrees(pair)?;
    let summand_dims: Vec<usize> = degrees
        .iter()
        .map(|&d| h0_kpower(genus, d))
        .collect::<Result<_>>()?;
    let total_dim = summand_dims.iter().sum();
    if let HitchinPair::FullSl { n } = pair {
        let expected = (n * n - 1) * (genus - 1);
        if total_dim != expected {
            return Err(Error::Certification(format!(
                "full-algebra base dimension {total_dim} differs from (n^2-1)(g-1) = {expected}"
            )));
        }
    }
    let degree_source = match pair {
        HitchinPair::FullSl { .. } => DegreeSource::Exponents,
        HitchinPair::Cyclic { .. } => DegreeSource::InvariantSystem,
    };
    Ok(HitchinBase {
        degrees,
        genus,
        summand_dims,
        total_dim,
        degree_source,
    })
}

/// Evaluates the generating invariants on a Higgs field:
/// `(f_1(phi), ..., f_k(phi))`.
pub fn pointwise_hitchin(sys: &InvariantSystem, phi: &QuiverPoint) -> Result<Vec<Scalar>> {
    sys.evaluate(phi)
}
