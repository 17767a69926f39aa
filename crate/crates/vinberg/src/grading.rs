//! Cyclic gradings of `sl(n)` induced by graded vector spaces.
//!
//! A `Z/m`-graded vector space `V = V_0 + ... + V_{m-1}` with `dim V_i = n_i`
//! turns `sl(V)` into a `Z/m`-graded Lie algebra: the component of index `i`
//! consists of the traceless endomorphisms mapping each `V_j` into
//! `V_{j+i mod m}`.  Matrix-wise, an entry at row `r`, column `c` represents
//! a map `V_{block(c)} -> V_{block(r)}` and therefore carries grading index
//! `block(r) - block(c) mod m`.
//!
//! Gradings are stored as explicit rational bases per component, and
//! [`CyclicGrading::verify`] re-checks the defining bracket relation
//! `[g_i, g_j] in g_{i+j}` pair by pair instead of trusting the
//! construction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{bracket, span_rank, Matrix};
use crate::scalar::Scalar;
use num_traits::Zero;

/// Dimension profile of a `Z/m`-graded vector space.
///
/// Zero-dimensional summands are allowed; the total dimension must be at
/// least 2 so that `sl(V)` is nontrivial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGradedDims")]
pub struct GradedDims {
    m: usize,
    dims: Vec<usize>,
}

#[derive(Deserialize)]
struct RawGradedDims {
    m: usize,
    dims: Vec<usize>,
}

impl TryFrom<RawGradedDims> for GradedDims {
    type Error = Error;
    fn try_from(raw: RawGradedDims) -> Result<GradedDims> {
        GradedDims::new(raw.m, raw.dims)
    }
}

impl GradedDims {
    /// Validates and builds a dimension profile.
    pub fn new(m: usize, dims: Vec<usize>) -> Result<GradedDims> {
        if m == 0 {
            return Err(Error::Invalid("modulus m must be at least 1".into()));
        }
        if dims.len() != m {
            return Err(Error::Invalid(format!(
                "expected {} summand dimensions, got {}",
                m,
                dims.len()
            )));
        }
        let n: usize = dims.iter().sum();
        if n < 2 {
            return Err(Error::Invalid(format!(
                "total dimension must be at least 2, got {n}"
            )));
        }
        Ok(GradedDims { m, dims })
    }

    /// Shorthand used by tests and examples.
    pub fn from_slice(dims: &[usize]) -> Result<GradedDims> {
        GradedDims::new(dims.len(), dims.to_vec())
    }

    /// The modulus `m`.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Summand dimensions `n_0, ..., n_{m-1}`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Total dimension `n`.
    pub fn n(&self) -> usize {
        self.dims.iter().sum()
    }

    /// The minimal summand dimension, written `k` throughout.
    pub fn k(&self) -> usize {
        *self.dims.iter().min().expect("m >= 1")
    }

    /// True when every summand is nonzero.
    pub fn full_support(&self) -> bool {
        self.dims.iter().all(|&d| d > 0)
    }

    /// Starting coordinate of each block, plus the total as a sentinel.
    pub fn offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.m + 1);
        let mut acc = 0;
        for &d in &self.dims {
            offsets.push(acc);
            acc += d;
        }
        offsets.push(acc);
        offsets
    }

    /// Block index of an ambient coordinate.
    pub fn block_of(&self, coord: usize) -> usize {
        debug_assert!(coord < self.n());
        let mut acc = 0;
        for (i, &d) in self.dims.iter().enumerate() {
            acc += d;
            if coord < acc {
                return i;
            }
        }
        unreachable!("coordinate out of range")
    }

    /// Grading index carried by matrix position `(row, col)`.
    pub fn grading_index(&self, row: usize, col: usize) -> usize {
        (self.block_of(row) + self.m - self.block_of(col)) % self.m
    }

    /// Compact label such as `m=2 dims=(1,3)`, used in reports.
    pub fn label(&self) -> String {
        let body: Vec<String> = self.dims.iter().map(usize::to_string).collect();
        format!("m={} dims=({})", self.m, body.join(","))
    }
}

/// A cyclic grading of `sl(n)`: one rational basis per component.
#[derive(Clone, Debug)]
pub struct CyclicGrading {
    dims: GradedDims,
    components: Vec<Vec<Matrix>>,
}

impl CyclicGrading {
    /// The grading induced by the graded vector space itself, with the
    /// standard basis: for index 0 the traceless-diagonal generators
    /// `H_k = E_kk - E_{k+1,k+1}` followed by the off-diagonal block
    /// positions in lexicographic order, and for every other index the
    /// elementary matrices of that index in lexicographic order.
    pub fn from_quiver(dims: &GradedDims) -> CyclicGrading {
        let n = dims.n();
        let m = dims.m();
        let mut components: Vec<Vec<Matrix>> = vec![Vec::new(); m];
        for k in 0..n - 1 {
            let h = &Matrix::unit(n, n, k, k) - &Matrix::unit(n, n, k + 1, k + 1);
            components[0].push(h);
        }
        for row in 0..n {
            for col in 0..n {
                if row == col {
                    continue;
                }
                let idx = dims.grading_index(row, col);
                components[idx].push(Matrix::unit(n, n, row, col));
            }
        }
        CyclicGrading {
            dims: dims.clone(),
            components,
        }
    }

    /// Assembles a grading from explicit component bases.  Only shapes are
    /// checked here; [`CyclicGrading::verify`] is the validity test.
    pub fn from_parts(dims: GradedDims, components: Vec<Vec<Matrix>>) -> Result<CyclicGrading> {
        if components.len() != dims.m() {
            return Err(Error::Invalid(format!(
                "expected {} components, got {}",
                dims.m(),
                components.len()
            )));
        }
        let n = dims.n();
        for comp in &components {
            for mat in comp {
                if mat.rows() != n || mat.cols() != n {
                    return Err(Error::Dimension(format!(
                        "component basis matrix is {}x{}, ambient size is {n}",
                        mat.rows(),
                        mat.cols()
                    )));
                }
            }
        }
        Ok(CyclicGrading { dims, components })
    }

    pub fn dims(&self) -> &GradedDims {
        &self.dims
    }

    pub fn m(&self) -> usize {
        self.dims.m()
    }

    pub fn n(&self) -> usize {
        self.dims.n()
    }

    /// Basis of the component with the given grading index.
    pub fn component(&self, index: usize) -> &[Matrix] {
        &self.components[index]
    }

    /// Number of basis elements per component.
    pub fn component_dims(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }

    /// Dimension the component of the given index must have:
    /// `sum_j n_j * n_{j+i}`, minus one for the traceless constraint when
    /// `i = 0`.
    pub fn expected_component_dim(dims: &GradedDims, index: usize) -> usize {
        let m = dims.m();
        let d = dims.dims();
        let raw: usize = (0..m).map(|j| d[j] * d[(j + index) % m]).sum();
        if index == 0 {
            raw - 1
        } else {
            raw
        }
    }

    /// Projection of a matrix onto the entries of one grading index.
    pub fn project(&self, x: &Matrix, index: usize) -> Matrix {
        let n = self.n();
        Matrix::from_fn(n, n, |r, c| {
            if self.dims.grading_index(r, c) == index {
                x[(r, c)].clone()
            } else {
                Scalar::zero()
            }
        })
    }

    /// Independent soundness check of the grading: every pairwise bracket
    /// of basis elements must land entirely in the component of the summed
    /// index, the component dimensions must match the block-count formula,
    /// each basis must be linearly independent, and every basis element
    /// must be traceless.
    pub fn verify(&self) -> GradingReport {
        let m = self.m();
        let n = self.n();
        let expected: Vec<usize> = (0..m)
            .map(|i| Self::expected_component_dim(&self.dims, i))
            .collect();
        let component_dims = self.component_dims();
        let total: usize = component_dims.iter().sum();
        let total_dim_ok = total == n * n - 1;
        let dims_match = component_dims == expected;
        let components_independent = self
            .components
            .iter()
            .all(|comp| span_rank(comp) == comp.len());
        let all_traceless = self
            .components
            .iter()
            .flatten()
            .all(|mat| mat.trace().is_zero());

        let mut bracket_failures = Vec::new();
        for (i, comp_i) in self.components.iter().enumerate() {
            for (j, comp_j) in self.components.iter().enumerate() {
                let target = (i + j) % m;
                for (xi, x) in comp_i.iter().enumerate() {
                    for (yj, y) in comp_j.iter().enumerate() {
                        let b = bracket(x, y);
                        if !self.lands_in_index(&b, target) {
                            bracket_failures.push(BracketFailure {
                                component_a: i,
                                component_b: j,
                                basis_a: xi,
                                basis_b: yj,
                            });
                        }
                    }
                }
            }
        }

        let pass = total_dim_ok
            && dims_match
            && components_independent
            && all_traceless
            && bracket_failures.is_empty();
        GradingReport {
            m,
            n,
            dims: self.dims.dims().to_vec(),
            component_dims,
            expected_dims: expected,
            dims_match,
            total_dim_ok,
            components_independent,
            all_traceless,
            bracket_failures,
            pass,
        }
    }

    /// True when every nonzero entry of `x` carries the given grading index.
    fn lands_in_index(&self, x: &Matrix, index: usize) -> bool {
        let n = self.n();
        for r in 0..n {
            for c in 0..n {
                if !x[(r, c)].is_zero() && self.dims.grading_index(r, c) != index {
                    return false;
                }
            }
        }
        true
    }
}

/// A bracket of two basis elements that escaped its target component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketFailure {
    pub component_a: usize,
    pub component_b: usize,
    pub basis_a: usize,
    pub basis_b: usize,
}

/// Outcome of [`CyclicGrading::verify`].
#[derive(Clone, Debug, Serialize)]
pub struct GradingReport {
    pub m: usize,
    pub n: usize,
    pub dims: Vec<usize>,
    pub component_dims: Vec<usize>,
    pub expected_dims: Vec<usize>,
    pub dims_match: bool,
    pub total_dim_ok: bool,
    pub components_independent: bool,
    pub all_traceless: bool,
    pub bracket_failures: Vec<BracketFailure>,
    pub pass: bool,
}

/// A point of the index-1 component, stored as the cyclic quiver maps
/// `f_i : V_i -> V_{i+1 mod m}` it is made of.
#[derive(Clone, Debug, PartialEq)]
pub struct QuiverPoint {
    dims: GradedDims,
    maps: Vec<Matrix>,
}

impl QuiverPoint {
    /// Validates shapes: `f_i` must be `n_{i+1 mod m} x n_i`.  For `m = 1`
    /// the single loop map must additionally be traceless, since the
    /// index-1 component is then all of `sl(n)`.
    pub fn new(dims: GradedDims, maps: Vec<Matrix>) -> Result<QuiverPoint> {
        let m = dims.m();
        if maps.len() != m {
            return Err(Error::Invalid(format!(
                "expected {} maps, got {}",
                m,
                maps.len()
            )));
        }
        let d = dims.dims();
        for (i, f) in maps.iter().enumerate() {
            let (rows, cols) = (d[(i + 1) % m], d[i]);
            if f.rows() != rows || f.cols() != cols {
                return Err(Error::Dimension(format!(
                    "map {i} must be {rows}x{cols}, got {}x{}",
                    f.rows(),
                    f.cols()
                )));
            }
        }
        if m == 1 && !maps[0].trace().is_zero() {
            return Err(Error::Invalid(
                "for m = 1 the loop map must be traceless".into(),
            ));
        }
        Ok(QuiverPoint { dims, maps })
    }

    /// The zero point.
    pub fn zero(dims: &GradedDims) -> QuiverPoint {
        let d = dims.dims();
        let m = dims.m();
        let maps = (0..m)
            .map(|i| Matrix::zeros(d[(i + 1) % m], d[i]))
            .collect();
        QuiverPoint {
            dims: dims.clone(),
            maps,
        }
    }

    pub fn dims(&self) -> &GradedDims {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, i: usize) -> &Matrix {
        &self.maps[i]
    }

    /// The point as an `n x n` matrix: `f_i` occupies row block `i+1 mod m`,
    /// column block `i`.  For `m >= 2` every diagonal block is zero, so the
    /// result is traceless automatically.
    pub fn assemble(&self) -> Matrix {
        let n = self.dims.n();
        let offsets = self.dims.offsets();
        let m = self.dims.m();
        let mut out = Matrix::zeros(n, n);
        for (i, f) in self.maps.iter().enumerate() {
            let row0 = offsets[(i + 1) % m];
            let col0 = offsets[i];
            for r in 0..f.rows() {
                for c in 0..f.cols() {
                    if !f[(r, c)].is_zero() {
                        out[(row0 + r, col0 + c)] = f[(r, c)].clone();
                    }
                }
            }
        }
        out
    }

    /// Scales every map.
    pub fn scale(&self, c: &Scalar) -> QuiverPoint {
        QuiverPoint {
            dims: self.dims.clone(),
            maps: self.maps.iter().map(|f| f.scale(c)).collect(),
        }
    }

    /// `self + t * other` (profiles must agree).
    pub fn add_scaled(&self, other: &QuiverPoint, t: &Scalar) -> QuiverPoint {
        assert_eq!(self.dims, other.dims, "quiver point profile mismatch");
        QuiverPoint {
            dims: self.dims.clone(),
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a + &b.scale(t))
                .collect(),
        }
    }

    /// Random integer-entry point, for seeded sampling.
    pub fn random(dims: &GradedDims, rng: &mut rand_chacha::ChaCha8Rng, bound: i64) -> QuiverPoint {
        let d = dims.dims();
        let m = dims.m();
        let maps = (0..m)
            .map(|i| crate::sampling::random_matrix(rng, d[(i + 1) % m], d[i], bound))
            .collect();
        let point = QuiverPoint {
            dims: dims.clone(),
            maps,
        };
        if m == 1 {
            // Project the loop map back to sl(n).
            let n = dims.n();
            let tr = point.maps[0].trace();
            let shift = Matrix::identity(n).scale(&(tr / crate::scalar::int(n as i64)));
            QuiverPoint {
                dims: dims.clone(),
                maps: vec![&point.maps[0] - &shift],
            }
        } else {
            point
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn profile(dims: &[usize]) -> GradedDims {
        GradedDims::from_slice(dims).unwrap()
    }

    #[test]
    fn graded_dims_validation() {
        assert!(GradedDims::new(0, vec![]).is_err());
        assert!(GradedDims::new(2, vec![1]).is_err());
        assert!(GradedDims::new(1, vec![1]).is_err()); // n = 1 too small
        assert!(GradedDims::new(2, vec![1, 0]).is_err()); // n = 1 again
        assert!(GradedDims::new(2, vec![2, 0]).is_ok()); // zero block, n = 2
    }

    #[test]
    fn graded_dims_serde_round_trip() {
        let d = profile(&[1, 2, 3]);
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, r#"{"m":3,"dims":[1,2,3]}"#);
        let back: GradedDims = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);

        let bad: std::result::Result<GradedDims, _> =
            serde_json::from_str(r#"{"m":2,"dims":[1,2,3]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn blocks_and_offsets() {
        let d = profile(&[1, 2, 3]);
        assert_eq!(d.offsets(), vec![0, 1, 3, 6]);
        assert_eq!(d.block_of(0), 0);
        assert_eq!(d.block_of(2), 1);
        assert_eq!(d.block_of(5), 2);
        assert_eq!(d.k(), 1);
        assert_eq!(d.n(), 6);
    }

    #[test]
    fn grading_index_follows_blocks() {
        let d = profile(&[1, 1]);
        // E at (row 1, col 0) maps V_0 -> V_1: index 1.
        assert_eq!(d.grading_index(1, 0), 1);
        assert_eq!(d.grading_index(0, 1), 1); // V_1 -> V_0 is also index 1 mod 2
        assert_eq!(d.grading_index(0, 0), 0);
    }

    #[test]
    fn quiver_component_dims_match_known_profiles() {
        // dims (1,1), m=2: both Hom spaces fall in the index-1 component.
        let g = CyclicGrading::from_quiver(&profile(&[1, 1]));
        assert_eq!(g.component_dims(), vec![1, 2]);

        let g = CyclicGrading::from_quiver(&profile(&[1, 1, 1]));
        assert_eq!(g.component_dims(), vec![2, 3, 3]);

        let g = CyclicGrading::from_quiver(&profile(&[2, 3]));
        assert_eq!(g.component_dims(), vec![12, 12]);
    }

    #[test]
    fn component_dims_match_position_count_oracle() {
        // Independent count: classify every matrix position by walking
        // coordinates, never using the closed dimension formula.
        for dims in [
            vec![1, 1],
            vec![2, 3],
            vec![1, 1, 1],
            vec![2, 2, 3],
            vec![3, 0, 1],
            vec![4],
        ] {
            let d = profile(&dims);
            let g = CyclicGrading::from_quiver(&d);
            let n = d.n();
            let mut counts = vec![0usize; d.m()];
            for r in 0..n {
                for c in 0..n {
                    if r != c {
                        counts[d.grading_index(r, c)] += 1;
                    }
                }
            }
            counts[0] += n - 1; // traceless diagonal
            assert_eq!(g.component_dims(), counts, "profile {dims:?}");
        }
    }

    #[test]
    fn verify_passes_for_built_gradings() {
        for dims in [
            vec![1, 1],
            vec![2, 3],
            vec![1, 1, 1],
            vec![1, 3],
            vec![2, 0, 1],
            vec![5],
        ] {
            let g = CyclicGrading::from_quiver(&profile(&dims));
            let report = g.verify();
            assert!(report.pass, "verify failed for {dims:?}: {report:?}");
        }
    }

    #[test]
    fn verify_flags_a_misplaced_basis_vector() {
        let d = profile(&[1, 1]);
        let g = CyclicGrading::from_quiver(&d);
        // Move one index-1 basis vector into the index-0 component.
        let mut comps: Vec<Vec<Matrix>> = (0..2).map(|i| g.component(i).to_vec()).collect();
        let moved = comps[1].pop().unwrap();
        comps[0].push(moved);
        let tampered = CyclicGrading::from_parts(d, comps).unwrap();
        let report = tampered.verify();
        assert!(!report.pass);
        assert!(!report.dims_match);
        assert!(!report.bracket_failures.is_empty());
        // The offending pairs must involve the moved vector (index 1 in
        // component 0).
        assert!(report
            .bracket_failures
            .iter()
            .any(|f| (f.component_a == 0 && f.basis_a == 1)
                || (f.component_b == 0 && f.basis_b == 1)));
    }

    #[test]
    fn verify_notices_missing_basis_vector() {
        let d = profile(&[2, 1]);
        let g = CyclicGrading::from_quiver(&d);
        let mut comps: Vec<Vec<Matrix>> = (0..2).map(|i| g.component(i).to_vec()).collect();
        comps[1].pop();
        let tampered = CyclicGrading::from_parts(d, comps).unwrap();
        let report = tampered.verify();
        assert!(!report.pass);
        assert!(!report.total_dim_ok);
    }

    #[test]
    fn quiver_point_shapes_are_checked() {
        let d = profile(&[1, 2]);
        // f_0 : V_0 -> V_1 is 2x1, f_1 : V_1 -> V_0 is 1x2.
        let good = QuiverPoint::new(
            d.clone(),
            vec![
                Matrix::from_ints(&[&[1], &[0]]),
                Matrix::from_ints(&[&[0, 1]]),
            ],
        );
        assert!(good.is_ok());
        let bad = QuiverPoint::new(
            d,
            vec![
                Matrix::from_ints(&[&[1, 0]]),
                Matrix::from_ints(&[&[0], &[1]]),
            ],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn assemble_places_blocks_cyclically() {
        let d = profile(&[1, 2]);
        let phi = QuiverPoint::new(
            d,
            vec![
                Matrix::from_ints(&[&[2], &[3]]),
                Matrix::from_ints(&[&[5, 7]]),
            ],
        )
        .unwrap();
        let full = phi.assemble();
        assert_eq!(
            full,
            Matrix::from_ints(&[&[0, 5, 7], &[2, 0, 0], &[3, 0, 0]])
        );
        assert!(full.trace().is_zero());
    }

    #[test]
    fn loop_points_must_be_traceless() {
        let d = GradedDims::new(1, vec![2]).unwrap();
        assert!(QuiverPoint::new(d.clone(), vec![Matrix::identity(2)]).is_err());
        let ok = QuiverPoint::new(d, vec![Matrix::from_ints(&[&[1, 0], &[0, -1]])]);
        assert!(ok.is_ok());
    }

    #[test]
    fn add_scaled_is_affine() {
        let d = profile(&[1, 1]);
        let a = QuiverPoint::new(
            d.clone(),
            vec![Matrix::from_ints(&[&[1]]), Matrix::from_ints(&[&[2]])],
        )
        .unwrap();
        let b = QuiverPoint::new(
            d,
            vec![Matrix::from_ints(&[&[5]]), Matrix::from_ints(&[&[-1]])],
        )
        .unwrap();
        let c = a.add_scaled(&b, &int(3));
        assert_eq!(c.map(0)[(0, 0)], int(16));
        assert_eq!(c.map(1)[(0, 0)], int(-1));
    }
}
