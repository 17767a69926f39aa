//! Invariant theory of the pair `(G_0, g_1)` for a cyclic quiver grading.
//!
//! The only `G_0`-invariant contraction of a cyclic quiver point is the
//! composite `f_{m-1} ... f_1 f_0 : V_0 -> V_0`.  The coefficients of its
//! characteristic polynomial give `k = min_i n_i` algebraically independent
//! generators of the invariant ring of `g_1`, of degrees `m, 2m, ..., km`
//! in the entries of the quiver point ([`InvariantSystem`]).
//!
//! The module certifies rather than assumes the structural claims:
//! the Cartan candidate built from coordinate cycles is checked to be
//! abelian and semisimple ([`cartan_candidate`]), the rank is cross-checked
//! against centralizer dimensions ([`rank_of_theta`]), the restriction of
//! the invariants to the candidate is matched against elementary symmetric
//! polynomials on determining evaluation grids
//! ([`restriction_certificate`]), and independence is certified through an
//! exact Jacobian rank ([`InvariantSystem::certify_independence`]).

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grading::{CyclicGrading, GradedDims, QuiverPoint};
use crate::matrix::{bracket, Matrix};
use crate::poly::Poly;
use crate::sampling::{distinct_abs_values, random_invertible, rng_from_seed};
use crate::scalar::{int, Scalar};

/// The generating invariants of `g_1`: coefficient functions of the cycle
/// composite's characteristic polynomial.
#[derive(Clone, Debug)]
pub struct InvariantSystem {
    dims: GradedDims,
    degrees: Vec<usize>,
}

/// Outcome of the exact Jacobian-rank independence check.
#[derive(Clone, Debug, Serialize)]
pub struct JacobianCertificate {
    pub k: usize,
    pub jacobian_rank: usize,
    pub full_rank: bool,
}

impl InvariantSystem {
    /// Builds the invariant system of a cyclic profile with `m >= 2`.
    ///
    /// Profiles with a zero block get the empty system (`k = 0`).
    pub fn new(dims: &GradedDims) -> Result<InvariantSystem> {
        if dims.m() < 2 {
            return Err(Error::Invalid(
                "invariant systems are built for cyclic profiles with m >= 2".into(),
            ));
        }
        let k = dims.k();
        let degrees = (1..=k).map(|j| j * dims.m()).collect();
        Ok(InvariantSystem {
            dims: dims.clone(),
            degrees,
        })
    }

    pub fn from_grading(gr: &CyclicGrading) -> Result<InvariantSystem> {
        InvariantSystem::new(gr.dims())
    }

    pub fn dims(&self) -> &GradedDims {
        &self.dims
    }

    /// Number of generating invariants, `min_i n_i`.
    pub fn k(&self) -> usize {
        self.degrees.len()
    }

    /// Homogeneity degrees `m, 2m, ..., km`.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Evaluates all invariants at a quiver point.
    ///
    /// Value `j` (1-indexed) is `(-1)^j` times the coefficient of
    /// `lambda^(n_0 - j)` in the characteristic polynomial of the cycle
    /// composite, which is the `j`-th elementary symmetric function of the
    /// composite's eigenvalues.
    pub fn evaluate(&self, phi: &QuiverPoint) -> Result<Vec<Scalar>> {
        if phi.dims() != &self.dims {
            return Err(Error::Invalid(format!(
                "point has profile {}, system expects {}",
                phi.dims().label(),
                self.dims.label()
            )));
        }
        let composite = cycle_composite(phi)?;
        let charpoly = composite.charpoly()?;
        let n0 = composite.rows();
        Ok((1..=self.k())
            .map(|j| {
                let c = charpoly.coeff(n0 - j);
                if j % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .collect())
    }

    /// Evaluates the single invariant of degree `j * m` (1-indexed `j`).
    pub fn evaluate_one(&self, phi: &QuiverPoint, j: usize) -> Result<Scalar> {
        if j == 0 || j > self.k() {
            return Err(Error::Invalid(format!(
                "invariant index {j} out of range 1..={}",
                self.k()
            )));
        }
        Ok(self.evaluate(phi)?.swap_remove(j - 1))
    }

    /// Certifies algebraic independence: the Jacobian of the `k` invariants
    /// at a random rational point must have rank `k`.
    ///
    /// Partial derivatives are exact: along each coordinate direction the
    /// invariant values restrict to polynomials in one variable, which are
    /// recovered by interpolation on integer nodes and differentiated at 0.
    pub fn certify_independence(&self, seed: u64) -> Result<JacobianCertificate> {
        let k = self.k();
        if k == 0 {
            return Ok(JacobianCertificate {
                k: 0,
                jacobian_rank: 0,
                full_rank: true,
            });
        }
        let mut rng = rng_from_seed(seed);
        let directions = coordinate_directions(&self.dims);
        let max_degree = *self.degrees.last().expect("k >= 1");
        let nodes: Vec<Scalar> = (0..=max_degree as i64).map(int).collect();
        let mut best_rank = 0;
        for _ in 0..3 {
            let base = QuiverPoint::random(&self.dims, &mut rng, 9);
            let mut jacobian = Matrix::zeros(k, directions.len());
            for (col, dir) in directions.iter().enumerate() {
                let mut samples: Vec<Vec<Scalar>> = Vec::with_capacity(nodes.len());
                for t in &nodes {
                    samples.push(self.evaluate(&base.add_scaled(dir, t))?);
                }
                for row in 0..k {
                    let points: Vec<(Scalar, Scalar)> = nodes
                        .iter()
                        .cloned()
                        .zip(samples.iter().map(|v| v[row].clone()))
                        .collect();
                    jacobian[(row, col)] = Poly::interpolate(&points)?.coeff(1);
                }
            }
            let rank = jacobian.rank();
            best_rank = best_rank.max(rank);
            if rank == k {
                return Ok(JacobianCertificate {
                    k,
                    jacobian_rank: rank,
                    full_rank: true,
                });
            }
        }
        Ok(JacobianCertificate {
            k,
            jacobian_rank: best_rank,
            full_rank: false,
        })
    }
}

/// One quiver point per free coordinate: a single unit entry in one block
/// map.
fn coordinate_directions(dims: &GradedDims) -> Vec<QuiverPoint> {
    let m = dims.m();
    let mut directions = Vec::new();
    for i in 0..m {
        let rows = dims.dims()[(i + 1) % m];
        let cols = dims.dims()[i];
        for r in 0..rows {
            for c in 0..cols {
                let maps: Vec<Matrix> = (0..m)
                    .map(|a| {
                        if a == i {
                            Matrix::unit(rows, cols, r, c)
                        } else {
                            Matrix::zeros(dims.dims()[(a + 1) % m], dims.dims()[a])
                        }
                    })
                    .collect();
                directions.push(QuiverPoint::new(dims.clone(), maps).expect("consistent shapes"));
            }
        }
    }
    directions
}

/// The composite `f_{m-1} ... f_1 f_0 : V_0 -> V_0` around the cycle.
pub fn cycle_composite(phi: &QuiverPoint) -> Result<Matrix> {
    let mut acc = phi.map(0).clone();
    for i in 1..phi.dims().m() {
        acc = phi.map(i).mul(&acc)?;
    }
    Ok(acc)
}

/// Conjugates a quiver point by a tuple of invertible block matrices:
/// `f_i` becomes `g_{i+1} f_i g_i^{-1}`.
pub fn conjugate_point(phi: &QuiverPoint, gs: &[Matrix]) -> Result<QuiverPoint> {
    let dims = phi.dims();
    let m = dims.m();
    if gs.len() != m {
        return Err(Error::Invalid(format!(
            "expected {m} block matrices, got {}",
            gs.len()
        )));
    }
    for (i, g) in gs.iter().enumerate() {
        if g.rows() != dims.dims()[i] || g.cols() != dims.dims()[i] {
            return Err(Error::Invalid(format!(
                "block {i} must be {0} x {0}",
                dims.dims()[i]
            )));
        }
    }
    let inverses: Vec<Matrix> = gs.iter().map(Matrix::inverse).collect::<Result<_>>()?;
    let maps: Vec<Matrix> = (0..m)
        .map(|i| gs[(i + 1) % m].mul(phi.map(i))?.mul(&inverses[i]))
        .collect::<Result<_>>()?;
    QuiverPoint::new(dims.clone(), maps)
}

/// Checks exact invariance of all evaluator values under seeded random
/// block conjugations.
pub fn check_g0_invariance(
    sys: &InvariantSystem,
    phi: &QuiverPoint,
    trials: usize,
    seed: u64,
) -> Result<bool> {
    let reference = sys.evaluate(phi)?;
    let mut rng = rng_from_seed(seed);
    for _ in 0..trials {
        let gs: Vec<Matrix> = sys
            .dims()
            .dims()
            .iter()
            .map(|&d| random_invertible(&mut rng, d, 5))
            .collect();
        let moved = conjugate_point(phi, &gs)?;
        if sys.evaluate(&moved)? != reference {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The canonical Cartan subspace candidate: coordinate cycles.
///
/// Basis element `t` routes coordinate `t` of every block to coordinate `t`
/// of the next block and is zero elsewhere; there are `k = min_i n_i` of
/// them.
#[derive(Clone, Debug)]
pub struct CartanCandidate {
    dims: GradedDims,
    basis: Vec<QuiverPoint>,
    assembled: Vec<Matrix>,
}

impl CartanCandidate {
    pub fn dims(&self) -> &GradedDims {
        &self.dims
    }

    pub fn k(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[QuiverPoint] {
        &self.basis
    }

    /// The basis as `n x n` matrices.
    pub fn assembled(&self) -> &[Matrix] {
        &self.assembled
    }

    /// The point `sum_t c_t basis_t` of the candidate subspace.
    pub fn point(&self, coefficients: &[Scalar]) -> Result<QuiverPoint> {
        if coefficients.len() != self.k() {
            return Err(Error::Invalid(format!(
                "expected {} coefficients, got {}",
                self.k(),
                coefficients.len()
            )));
        }
        let mut point = QuiverPoint::zero(&self.dims);
        for (c, b) in coefficients.iter().zip(&self.basis) {
            point = point.add_scaled(b, c);
        }
        Ok(point)
    }
}

/// Builds and verifies the coordinate-cycle Cartan candidate.
///
/// Verification is not assumed from the construction: pairwise brackets of
/// the assembled basis must vanish and every element must have a squarefree
/// minimal polynomial (exact semisimplicity test over the rationals).
pub fn cartan_candidate(dims: &GradedDims) -> Result<CartanCandidate> {
    if dims.m() < 2 {
        return Err(Error::Invalid(
            "Cartan candidates are built for cyclic profiles with m >= 2".into(),
        ));
    }
    let m = dims.m();
    let k = dims.k();
    let mut basis = Vec::with_capacity(k);
    for t in 0..k {
        let maps: Vec<Matrix> = (0..m)
            .map(|i| Matrix::unit(dims.dims()[(i + 1) % m], dims.dims()[i], t, t))
            .collect();
        basis.push(QuiverPoint::new(dims.clone(), maps)?);
    }
    let assembled: Vec<Matrix> = basis.iter().map(QuiverPoint::assemble).collect();
    for (s, a) in assembled.iter().enumerate() {
        for b in assembled.iter().skip(s + 1) {
            if !bracket(a, b).is_zero() {
                return Err(Error::Certification(
                    "Cartan candidate basis does not commute".into(),
                ));
            }
        }
        if !a.min_poly()?.is_squarefree() {
            return Err(Error::Certification(format!(
                "Cartan candidate element {s} is not semisimple"
            )));
        }
    }
    Ok(CartanCandidate {
        dims: dims.clone(),
        basis,
        assembled,
    })
}

/// Basis of the joint centralizer of `points` inside the degree-zero
/// component of the grading.
pub fn centralizer_in_g0(gr: &CyclicGrading, points: &[Matrix]) -> Vec<Matrix> {
    let g0 = gr.component(0);
    if g0.is_empty() {
        return Vec::new();
    }
    let n2 = gr.n() * gr.n();
    let mut stacked = Matrix::zeros(n2 * points.len().max(1), g0.len());
    if points.is_empty() {
        // Centralizing nothing imposes no conditions.
        return g0.to_vec();
    }
    for (block, point) in points.iter().enumerate() {
        for (col, b) in g0.iter().enumerate() {
            for (row, value) in bracket(b, point).vectorize().into_iter().enumerate() {
                stacked[(block * n2 + row, col)] = value;
            }
        }
    }
    stacked
        .kernel_basis()
        .into_iter()
        .map(|coords| {
            let mut y = Matrix::zeros(gr.n(), gr.n());
            for (c, b) in coords.iter().zip(g0) {
                y = &y + &b.scale(c);
            }
            y
        })
        .collect()
}

/// The rank of the pair: dimension of the Cartan candidate, cross-checked
/// against centralizer dimensions.
///
/// A random candidate point with distinct nonzero coordinate magnitudes
/// must have the same `g_0`-centralizer dimension as the whole candidate
/// subspace; a mismatch means the candidate is not certified and surfaces
/// as [`Error::RankCertification`].
pub fn rank_of_theta(gr: &CyclicGrading, seed: u64) -> Result<usize> {
    let candidate = cartan_candidate(gr.dims())?;
    let k = candidate.k();
    if k == 0 {
        return Ok(0);
    }
    let mut rng = rng_from_seed(seed);
    let coefficients = distinct_abs_values(&mut rng, k);
    let x = candidate.point(&coefficients)?.assemble();
    let point_dim = centralizer_in_g0(gr, &[x]).len();
    let subspace_dim = centralizer_in_g0(gr, candidate.assembled()).len();
    if point_dim != subspace_dim {
        return Err(Error::RankCertification {
            point_dim,
            subspace_dim,
        });
    }
    Ok(k)
}

/// A witness point where the restriction identity failed.
#[derive(Clone, Debug, Serialize)]
pub struct RestrictionWitness {
    pub invariant: usize,
    pub point: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

/// Result of certifying the restriction to the Cartan candidate.
#[derive(Clone, Debug, Serialize)]
pub struct RestrictionReport {
    pub k: usize,
    pub degrees: Vec<usize>,
    pub weyl_order_predicted: u64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<RestrictionWitness>,
}

/// Certifies that invariant `j` restricted to the candidate subspace equals
/// the `j`-th elementary symmetric polynomial in `c_1^m, ..., c_k^m`.
///
/// Both sides of the identity for invariant `j` are polynomials of degree
/// at most `j * m` in each coordinate, so agreement on the integer grid
/// `{0, ..., jm}^k` proves them equal.  The predicted little-Weyl-group
/// order is the degree product `m^k k!`.
pub fn restriction_certificate(
    sys: &InvariantSystem,
    candidate: &CartanCandidate,
) -> Result<RestrictionReport> {
    if sys.dims() != candidate.dims() {
        return Err(Error::Invalid(
            "invariant system and Cartan candidate have different profiles".into(),
        ));
    }
    let k = sys.k();
    let m = sys.dims().m();
    let weyl_order_predicted = sys
        .degrees()
        .iter()
        .try_fold(1u64, |acc, &d| acc.checked_mul(d as u64))
        .ok_or_else(|| Error::Invalid("degree product overflows u64".into()))?;

    for j in 1..=k {
        let side = j * m + 1;
        let mut counter = vec![0usize; k];
        loop {
            let coords: Vec<Scalar> = counter.iter().map(|&v| int(v as i64)).collect();
            let values = sys.evaluate(&candidate.point(&coords)?)?;
            let lhs = values[j - 1].clone();
            let powered: Vec<Scalar> = coords
                .iter()
                .map(|c| num_traits::pow(c.clone(), m))
                .collect();
            let rhs = elementary_symmetric(&powered, j);
            if lhs != rhs {
                return Ok(RestrictionReport {
                    k,
                    degrees: sys.degrees().to_vec(),
                    weyl_order_predicted,
                    pass: false,
                    witness: Some(RestrictionWitness {
                        invariant: j,
                        point: coords.iter().map(Scalar::to_string).collect(),
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    }),
                });
            }
            // Mixed-radix increment over the grid {0, ..., jm}^k.
            let mut pos = 0;
            loop {
                if pos == k {
                    break;
                }
                counter[pos] += 1;
                if counter[pos] < side {
                    break;
                }
                counter[pos] = 0;
                pos += 1;
            }
            if pos == k {
                break;
            }
        }
    }
    Ok(RestrictionReport {
        k,
        degrees: sys.degrees().to_vec(),
        weyl_order_predicted,
        pass: true,
        witness: None,
    })
}

/// The elementary symmetric polynomial `e_j` of the given values.
pub fn elementary_symmetric(values: &[Scalar], j: usize) -> Scalar {
    if j > values.len() {
        return Scalar::zero();
    }
    let mut e: Vec<Scalar> = vec![Scalar::zero(); j + 1];
    e[0] = int(1);
    for v in values {
        for idx in (1..=j).rev() {
            let add = v * &e[idx - 1];
            e[idx] = &e[idx] + &add;
        }
    }
    e.swap_remove(j)
}

/// Classification of the pair by its Cartan-candidate centralizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QuasiSplitClass {
    #[serde(rename = "split")]
    Split,
    #[serde(rename = "quasi-split")]
    QuasiSplit,
    #[serde(rename = "neither")]
    Neither,
}

impl std::fmt::Display for QuasiSplitClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let label = match self {
            QuasiSplitClass::Split => "split",
            QuasiSplitClass::QuasiSplit => "quasi-split",
            QuasiSplitClass::Neither => "neither",
        };
        f.write_str(label)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiSplitReport {
    pub centralizer_dim: usize,
    pub abelian: bool,
    #[serde(rename = "quasi_split")]
    pub classification: QuasiSplitClass,
}

/// Computes `C_{g_0}(a)` for the Cartan candidate and classifies the pair:
/// split when the centralizer is zero, quasi-split when it is abelian.
pub fn quasi_split_classify(gr: &CyclicGrading) -> Result<QuasiSplitReport> {
    if gr.dims().k() == 0 {
        return Err(Error::Invalid(
            "quasi-split classification needs every block nonzero".into(),
        ));
    }
    let candidate = cartan_candidate(gr.dims())?;
    let centralizer = centralizer_in_g0(gr, candidate.assembled());
    let mut abelian = true;
    'outer: for (s, a) in centralizer.iter().enumerate() {
        for b in centralizer.iter().skip(s + 1) {
            if !bracket(a, b).is_zero() {
                abelian = false;
                break 'outer;
            }
        }
    }
    let classification = if centralizer.is_empty() {
        QuasiSplitClass::Split
    } else if abelian {
        QuasiSplitClass::QuasiSplit
    } else {
        QuasiSplitClass::Neither
    };
    Ok(QuasiSplitReport {
        centralizer_dim: centralizer.len(),
        abelian,
        classification,
    })
}

/// The quiver-dimension criterion for the classification: quasi-split iff
/// every block dimension is `k` or `k + 1`, split iff all are 1.
pub fn quasi_split_dims_rule(dims: &GradedDims) -> QuasiSplitClass {
    let k = dims.k();
    if dims.dims().iter().all(|&d| d == 1) {
        QuasiSplitClass::Split
    } else if dims.dims().iter().all(|&d| d == k || d == k + 1) {
        QuasiSplitClass::QuasiSplit
    } else {
        QuasiSplitClass::Neither
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn profile(dims: &[usize]) -> GradedDims {
        GradedDims::from_slice(dims).unwrap()
    }

    fn point(dims: &GradedDims, maps: Vec<Matrix>) -> QuiverPoint {
        QuiverPoint::new(dims.clone(), maps).unwrap()
    }

    #[test]
    fn composite_of_identity_routings_is_identity() {
        let dims = profile(&[2, 2, 2]);
        let phi = point(&dims, vec![Matrix::identity(2); 3]);
        assert_eq!(cycle_composite(&phi).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn composite_with_a_zero_map_is_zero() {
        let dims = profile(&[2, 3]);
        let phi = point(
            &dims,
            vec![
                Matrix::from_ints(&[&[1, 2], &[3, 4], &[5, 6]]),
                Matrix::zeros(2, 3),
            ],
        );
        assert!(cycle_composite(&phi).unwrap().is_zero());
    }

    #[test]
    fn composite_of_orthogonal_routings_vanishes() {
        let dims = profile(&[1, 2]);
        let phi = point(
            &dims,
            vec![
                Matrix::from_ints(&[&[1], &[0]]),
                Matrix::from_ints(&[&[0, 1]]),
            ],
        );
        assert_eq!(cycle_composite(&phi).unwrap(), Matrix::zeros(1, 1));
    }

    #[test]
    fn degrees_follow_the_profile() {
        assert_eq!(
            InvariantSystem::new(&profile(&[1, 1])).unwrap().degrees(),
            &[2]
        );
        assert_eq!(
            InvariantSystem::new(&profile(&[1, 1, 1]))
                .unwrap()
                .degrees(),
            &[3]
        );
        assert_eq!(
            InvariantSystem::new(&profile(&[2, 2])).unwrap().degrees(),
            &[2, 4]
        );
        assert_eq!(InvariantSystem::new(&profile(&[2, 0, 1])).unwrap().k(), 0);
        assert!(InvariantSystem::new(&profile(&[5])).is_err());
    }

    #[test]
    fn rank_one_invariant_is_the_scalar_product() {
        let dims = profile(&[1, 1]);
        let sys = InvariantSystem::new(&dims).unwrap();
        let phi = point(
            &dims,
            vec![Matrix::from_ints(&[&[2]]), Matrix::from_ints(&[&[3]])],
        );
        assert_eq!(sys.evaluate(&phi).unwrap(), vec![int(6)]);
    }

    #[test]
    fn balanced_two_by_two_gives_trace_and_determinant() {
        let dims = profile(&[2, 2]);
        let sys = InvariantSystem::new(&dims).unwrap();
        let f0 = Matrix::from_ints(&[&[1, 2], &[0, 1]]);
        let f1 = Matrix::from_ints(&[&[3, 0], &[1, 1]]);
        let phi = point(&dims, vec![f0.clone(), f1.clone()]);
        let composite = f1.mul(&f0).unwrap();
        let values = sys.evaluate(&phi).unwrap();
        assert_eq!(values[0], composite.trace());
        assert_eq!(values[1], composite.det().unwrap());
    }

    #[test]
    fn evaluators_are_homogeneous_of_degree_jm() {
        for dims in [profile(&[2, 3]), profile(&[1, 1, 1]), profile(&[2, 2])] {
            let sys = InvariantSystem::new(&dims).unwrap();
            let mut rng = rng_from_seed(5);
            let phi = QuiverPoint::random(&dims, &mut rng, 7);
            let lambda = ratio(3, 2);
            let base = sys.evaluate(&phi).unwrap();
            let scaled = sys.evaluate(&phi.scale(&lambda)).unwrap();
            for (j, (b, s)) in base.iter().zip(&scaled).enumerate() {
                let expected = num_traits::pow(lambda.clone(), (j + 1) * dims.m()) * b;
                assert_eq!(s, &expected);
            }
        }
    }

    #[test]
    fn evaluators_match_the_assembled_charpoly_route() {
        // Independent route: coefficient of lambda^(n - jm) in the charpoly
        // of the assembled n x n matrix, with sign (-1)^j.
        for dims in [
            profile(&[1, 1]),
            profile(&[2, 3]),
            profile(&[3, 1]),
            profile(&[1, 1, 1]),
            profile(&[2, 1, 2]),
        ] {
            let sys = InvariantSystem::new(&dims).unwrap();
            let mut rng = rng_from_seed(11);
            let phi = QuiverPoint::random(&dims, &mut rng, 6);
            let assembled_cp = phi.assemble().charpoly().unwrap();
            let values = sys.evaluate(&phi).unwrap();
            for (idx, value) in values.iter().enumerate() {
                let j = idx + 1;
                let c = assembled_cp.coeff(dims.n() - j * dims.m());
                let expected = if j % 2 == 0 { c } else { -c };
                assert_eq!(value, &expected, "profile {} invariant {j}", dims.label());
            }
        }
    }

    #[test]
    fn assembled_and_composite_charpolys_satisfy_the_power_identity() {
        // lambda^n * p_composite(lambda^m) = lambda^(m n_0) * p_assembled(lambda).
        for dims in [
            profile(&[2, 3]),
            profile(&[3, 1]),
            profile(&[2, 1, 2]),
            profile(&[2, 0, 1]),
        ] {
            let mut rng = rng_from_seed(23);
            let phi = QuiverPoint::random(&dims, &mut rng, 5);
            let pc = cycle_composite(&phi).unwrap().charpoly().unwrap();
            let pa = phi.assemble().charpoly().unwrap();
            let lhs = pc.substitute_power(dims.m()).shift(dims.n());
            let rhs = pa.shift(dims.m() * dims.dims()[0]);
            assert_eq!(lhs, rhs, "profile {}", dims.label());
        }
    }

    #[test]
    fn conjugation_preserves_invariants() {
        for dims in [profile(&[2, 3]), profile(&[1, 1, 1]), profile(&[2, 2])] {
            let sys = InvariantSystem::new(&dims).unwrap();
            let mut rng = rng_from_seed(7);
            let phi = QuiverPoint::random(&dims, &mut rng, 6);
            assert!(check_g0_invariance(&sys, &phi, 20, 99).unwrap());
        }
    }

    #[test]
    fn identity_conjugation_is_a_no_op() {
        let dims = profile(&[2, 3]);
        let mut rng = rng_from_seed(3);
        let phi = QuiverPoint::random(&dims, &mut rng, 6);
        let gs = vec![Matrix::identity(2), Matrix::identity(3)];
        let moved = conjugate_point(&phi, &gs).unwrap();
        assert_eq!(moved.map(0), phi.map(0));
        assert_eq!(moved.map(1), phi.map(1));
    }

    #[test]
    fn conjugation_actually_moves_the_point() {
        let dims = profile(&[2, 2]);
        let mut rng = rng_from_seed(13);
        let phi = QuiverPoint::random(&dims, &mut rng, 6);
        let gs = vec![Matrix::from_ints(&[&[1, 1], &[0, 1]]), Matrix::identity(2)];
        let moved = conjugate_point(&phi, &gs).unwrap();
        assert_ne!(moved.map(0), phi.map(0));
        let sys = InvariantSystem::new(&dims).unwrap();
        assert_eq!(sys.evaluate(&moved).unwrap(), sys.evaluate(&phi).unwrap());
    }

    #[test]
    fn cartan_candidate_for_two_lines() {
        let candidate = cartan_candidate(&profile(&[1, 1])).unwrap();
        assert_eq!(candidate.k(), 1);
        assert_eq!(
            candidate.assembled()[0],
            Matrix::from_ints(&[&[0, 1], &[1, 0]])
        );
        let mp = candidate.assembled()[0].min_poly().unwrap();
        assert_eq!(mp, Poly::from_ints(&[-1, 0, 1]));
    }

    #[test]
    fn cartan_candidate_routes_first_coordinates() {
        let candidate = cartan_candidate(&profile(&[1, 2])).unwrap();
        assert_eq!(candidate.k(), 1);
        let a = &candidate.assembled()[0];
        assert_eq!(a, &Matrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]));
        assert!(a.min_poly().unwrap().is_squarefree());
    }

    #[test]
    fn cartan_candidate_commutes_for_balanced_profiles() {
        let candidate = cartan_candidate(&profile(&[3, 3])).unwrap();
        assert_eq!(candidate.k(), 3);
        for a in candidate.assembled() {
            for b in candidate.assembled() {
                assert!(bracket(a, b).is_zero());
            }
        }
    }

    #[test]
    fn rank_matches_the_minimal_block_dimension() {
        for (dims, expected) in [
            (profile(&[1, 1]), 1),
            (profile(&[2, 3]), 2),
            (profile(&[1, 1, 1]), 1),
            (profile(&[2, 2]), 2),
            (profile(&[2, 0, 1]), 0),
        ] {
            let gr = CyclicGrading::from_quiver(&dims);
            assert_eq!(rank_of_theta(&gr, 41).unwrap(), expected);
        }
    }

    #[test]
    fn restriction_matches_elementary_symmetric_polynomials() {
        for dims in [profile(&[1, 1]), profile(&[2, 2]), profile(&[2, 3, 2])] {
            let sys = InvariantSystem::new(&dims).unwrap();
            let candidate = cartan_candidate(&dims).unwrap();
            let report = restriction_certificate(&sys, &candidate).unwrap();
            assert!(report.pass, "profile {}", dims.label());
            assert!(report.witness.is_none());
        }
    }

    #[test]
    fn restriction_reports_the_weyl_order() {
        let dims = profile(&[2, 2]);
        let sys = InvariantSystem::new(&dims).unwrap();
        let report = restriction_certificate(&sys, &cartan_candidate(&dims).unwrap()).unwrap();
        // Degree product 2 * 4, which is m^k k! = 4 * 2.
        assert_eq!(report.weyl_order_predicted, 8);
        let dims = profile(&[2, 2, 2]);
        let sys = InvariantSystem::new(&dims).unwrap();
        let report = restriction_certificate(&sys, &cartan_candidate(&dims).unwrap()).unwrap();
        assert_eq!(report.weyl_order_predicted, 18);
    }

    #[test]
    fn restriction_on_candidate_points_in_coordinates() {
        // Direct expansion for the balanced k = 2, m = 2 case: the composite
        // at the candidate point is diag(c1^2, c2^2).
        let dims = profile(&[2, 2]);
        let candidate = cartan_candidate(&dims).unwrap();
        let c = [int(3), int(-5)];
        let composite = cycle_composite(&candidate.point(&c).unwrap()).unwrap();
        assert_eq!(composite, Matrix::diagonal(&[int(9), int(25)]));
    }

    #[test]
    fn elementary_symmetric_small_cases() {
        let vals = [int(1), int(2), int(3)];
        assert_eq!(elementary_symmetric(&vals, 0), int(1));
        assert_eq!(elementary_symmetric(&vals, 1), int(6));
        assert_eq!(elementary_symmetric(&vals, 2), int(11));
        assert_eq!(elementary_symmetric(&vals, 3), int(6));
        assert_eq!(elementary_symmetric(&vals, 4), int(0));
    }

    #[test]
    fn independence_certificate_has_full_rank() {
        for dims in [profile(&[1, 1]), profile(&[2, 3]), profile(&[1, 1, 1])] {
            let sys = InvariantSystem::new(&dims).unwrap();
            let cert = sys.certify_independence(17).unwrap();
            assert!(cert.full_rank, "profile {}", dims.label());
            assert_eq!(cert.jacobian_rank, sys.k());
        }
    }

    #[test]
    fn split_profiles_have_trivial_centralizer() {
        for dims in [
            profile(&[1, 1]),
            profile(&[1, 1, 1]),
            profile(&[1, 1, 1, 1]),
        ] {
            let gr = CyclicGrading::from_quiver(&dims);
            let report = quasi_split_classify(&gr).unwrap();
            assert_eq!(report.centralizer_dim, 0);
            assert_eq!(report.classification, QuasiSplitClass::Split);
            assert_eq!(quasi_split_dims_rule(&dims), QuasiSplitClass::Split);
        }
    }

    #[test]
    fn near_balanced_profile_is_quasi_split() {
        let dims = profile(&[2, 2, 3]);
        let gr = CyclicGrading::from_quiver(&dims);
        let report = quasi_split_classify(&gr).unwrap();
        assert!(report.centralizer_dim > 0);
        assert!(report.abelian);
        assert_eq!(report.classification, QuasiSplitClass::QuasiSplit);
        assert_eq!(quasi_split_dims_rule(&dims), QuasiSplitClass::QuasiSplit);
    }

    #[test]
    fn unbalanced_profile_is_neither() {
        let dims = profile(&[1, 3]);
        let gr = CyclicGrading::from_quiver(&dims);
        let report = quasi_split_classify(&gr).unwrap();
        assert!(!report.abelian);
        assert_eq!(report.classification, QuasiSplitClass::Neither);
        assert_eq!(quasi_split_dims_rule(&dims), QuasiSplitClass::Neither);
    }

    #[test]
    fn classification_agrees_with_dims_rule_on_small_profiles() {
        for dims in [
            profile(&[2, 1]),
            profile(&[3, 3]),
            profile(&[2, 4]),
            profile(&[1, 2, 2]),
            profile(&[2, 2, 2]),
            profile(&[1, 1, 2]),
        ] {
            let gr = CyclicGrading::from_quiver(&dims);
            let report = quasi_split_classify(&gr).unwrap();
            assert_eq!(
                report.classification,
                quasi_split_dims_rule(&dims),
                "profile {}",
                dims.label()
            );
        }
    }

    #[test]
    fn zero_block_profiles_are_rejected_for_classification() {
        let gr = CyclicGrading::from_quiver(&profile(&[2, 0, 1]));
        assert!(quasi_split_classify(&gr).is_err());
    }

    #[test]
    fn empty_system_evaluates_to_nothing() {
        let dims = profile(&[2, 0, 1]);
        let sys = InvariantSystem::new(&dims).unwrap();
        let phi = QuiverPoint::zero(&dims);
        assert!(sys.evaluate(&phi).unwrap().is_empty());
        let candidate = cartan_candidate(&dims).unwrap();
        let report = restriction_certificate(&sys, &candidate).unwrap();
        assert!(report.pass);
        assert_eq!(report.weyl_order_predicted, 1);
        let cert = sys.certify_independence(1).unwrap();
        assert!(cert.full_rank);
    }
}
