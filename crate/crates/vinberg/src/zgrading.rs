//! Lifting a cyclic profile to a `Z`-grading of `sl(n)`.
//!
//! Reading the summands `V_0, ..., V_{m-1}` as a chain gives the grading
//! element `zeta = blockdiag((j - mu) I_{n_j})` with `mu = (sum j n_j)/n`
//! chosen so that `zeta` is traceless.  The degree-`j` piece is the
//! `ad(zeta)`-eigenspace of eigenvalue `j`: the maps `V_a -> V_{a+j}`, so
//! `Hom(V_a, V_b)` sits in degree `b - a` and the degrees run through
//! `-(m-1), ..., m-1`.
//!
//! Reducing degrees mod `m` recovers the cyclic grading
//! ([`ZGrading::to_cyclic`]); the degree-1 piece maps onto the forward
//! quiver maps and the degree-`(1-m)` piece onto the wrap-around map.
//!
//! The same eigenspace machinery, run for an arbitrary rational diagonal
//! `s`, produces the fixed and nonnegative-weight subspaces of the
//! one-parameter subgroup generated by `s` ([`s_subspaces`]).

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::grading::{CyclicGrading, GradedDims};
use crate::matrix::{bracket, Matrix};
use crate::scalar::{int, to_i64, Scalar};

/// A `Z`-grading of `sl(n)` compatible with a block decomposition.
#[derive(Clone, Debug)]
pub struct ZGrading {
    dims: GradedDims,
    zeta: Matrix,
    /// Piece of degree `j` lives at `pieces[(j + m - 1) as usize]`.
    pieces: Vec<Vec<Matrix>>,
}

impl ZGrading {
    /// Builds the chain grading of a fully supported profile.
    pub fn chain(dims: &GradedDims) -> Result<ZGrading> {
        if !dims.full_support() {
            return Err(Error::Invalid(format!(
                "chain gradings need every summand nonzero, got {}",
                dims.label()
            )));
        }
        let n = dims.n();
        let m = dims.m();
        let weighted: i64 = dims
            .dims()
            .iter()
            .enumerate()
            .map(|(j, &d)| (j * d) as i64)
            .sum();
        let mu = Scalar::new(weighted.into(), (n as i64).into());
        let mut diag = Vec::with_capacity(n);
        for (j, &d) in dims.dims().iter().enumerate() {
            for _ in 0..d {
                diag.push(int(j as i64) - &mu);
            }
        }
        let zeta = Matrix::diagonal(&diag);

        // Group the standard basis of sl(n) by its ad(zeta) eigenvalue.
        let mut pieces: Vec<Vec<Matrix>> = vec![Vec::new(); 2 * m - 1];
        for k in 0..n - 1 {
            let h = &Matrix::unit(n, n, k, k) - &Matrix::unit(n, n, k + 1, k + 1);
            debug_assert!(bracket(&zeta, &h).is_zero());
            pieces[m - 1].push(h);
        }
        for row in 0..n {
            for col in 0..n {
                if row == col {
                    continue;
                }
                let e = Matrix::unit(n, n, row, col);
                let ad = bracket(&zeta, &e);
                let eigen = &ad[(row, col)];
                let j = to_i64(eigen).ok_or_else(|| {
                    Error::Certification(format!(
                        "ad(zeta) eigenvalue {eigen} at ({row},{col}) is not an integer"
                    ))
                })?;
                debug_assert_eq!(ad, e.scale(eigen));
                let slot = usize::try_from(j + m as i64 - 1).expect("degree in range");
                pieces[slot].push(e);
            }
        }
        Ok(ZGrading {
            dims: dims.clone(),
            zeta,
            pieces,
        })
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

    /// The grading element.
    pub fn zeta(&self) -> &Matrix {
        &self.zeta
    }

    /// Degrees with a nonzero piece range over `-(m-1) ..= m-1`.
    pub fn min_degree(&self) -> i64 {
        -(self.m() as i64 - 1)
    }

    pub fn max_degree(&self) -> i64 {
        self.m() as i64 - 1
    }

    /// Basis of the degree-`j` piece (empty outside the degree range).
    pub fn piece(&self, j: i64) -> &[Matrix] {
        let m = self.m() as i64;
        if j <= -m || j >= m {
            return &[];
        }
        &self.pieces[(j + m - 1) as usize]
    }

    /// Dimensions of the pieces from `min_degree` to `max_degree`.
    pub fn piece_dims(&self) -> Vec<usize> {
        self.pieces.iter().map(Vec::len).collect()
    }

    /// The opposite grading: grading element `-zeta`, every degree negated.
    pub fn reversed(&self) -> ZGrading {
        let mut pieces = self.pieces.clone();
        pieces.reverse();
        ZGrading {
            dims: self.dims.clone(),
            zeta: -&self.zeta,
            pieces,
        }
    }

    /// Homogeneous degree of a nonzero matrix, or `None` when the support
    /// mixes degrees or the matrix is zero.
    pub fn degree_of(&self, x: &Matrix) -> Option<i64> {
        let n = self.n();
        let mut found: Option<i64> = None;
        for r in 0..n {
            for c in 0..n {
                if x[(r, c)].is_zero() {
                    continue;
                }
                let d = self.dims.block_of(r) as i64 - self.dims.block_of(c) as i64;
                match found {
                    None => found = Some(d),
                    Some(prev) if prev != d => return None,
                    Some(_) => {}
                }
            }
        }
        found
    }

    /// Collapses degrees mod `m`: component `i` is spanned by the pieces of
    /// degree `i` and `i - m`.  Requires `m >= 2`.
    pub fn to_cyclic(&self) -> Result<CyclicGrading> {
        let m = self.m();
        if m < 2 {
            return Err(Error::Invalid(
                "collapsing a Z-grading mod m needs m >= 2".into(),
            ));
        }
        let mut components = Vec::with_capacity(m);
        for i in 0..m {
            let mut comp: Vec<Matrix> = self.piece(i as i64).to_vec();
            comp.extend(self.piece(i as i64 - m as i64).iter().cloned());
            components.push(comp);
        }
        CyclicGrading::from_parts(self.dims.clone(), components)
    }

    /// Basis of the forward part of the collapsed index-1 component
    /// (degree `+1`).
    pub fn phi_plus_basis(&self) -> &[Matrix] {
        self.piece(1)
    }

    /// Basis of the wrap-around part of the collapsed index-1 component
    /// (degree `1 - m`).
    pub fn phi_minus_basis(&self) -> &[Matrix] {
        self.piece(1 - self.m() as i64)
    }
}

/// Fixed-weight and bounded-weight subspaces attached to a rational
/// diagonal `s`.
///
/// For the adjoint action, `[s, E_rc] = (s_r - s_c) E_rc`, so conjugating by
/// `exp(t s)` scales `E_rc` by `exp(t (s_r - s_c))`.  The span of the
/// nonpositive-weight positions is exactly the subspace that stays bounded
/// as `t -> +infinity`; it is the parabolic subalgebra attached to `s`,
/// and the weight-zero span is its Levi factor.
#[derive(Clone, Debug)]
pub struct SSubspaceData {
    s: Matrix,
    zero_weight: Vec<Matrix>,
    bounded: Vec<Matrix>,
}

impl SSubspaceData {
    pub fn s(&self) -> &Matrix {
        &self.s
    }

    /// Basis of the weight-zero subspace.
    pub fn zero_weight(&self) -> &[Matrix] {
        &self.zero_weight
    }

    /// Basis of the nonpositive-weight subspace.
    pub fn bounded(&self) -> &[Matrix] {
        &self.bounded
    }

    /// The Levi subalgebra: for the adjoint representation this is the
    /// weight-zero subspace itself.
    pub fn levi(&self) -> &[Matrix] {
        &self.zero_weight
    }

    /// The parabolic subalgebra: for the adjoint representation this is the
    /// bounded subspace itself.
    pub fn parabolic(&self) -> &[Matrix] {
        &self.bounded
    }
}

/// Computes the `s`-subspaces of `sl(n)` for a rational diagonal traceless
/// `s`.
pub fn s_subspaces(s: &Matrix) -> Result<SSubspaceData> {
    let n = s.rows();
    if !s.is_square() || n < 2 {
        return Err(Error::Invalid(
            "s must be a square matrix of size at least 2".into(),
        ));
    }
    for r in 0..n {
        for c in 0..n {
            if r != c && !s[(r, c)].is_zero() {
                return Err(Error::Invalid("s must be diagonal".into()));
            }
        }
    }
    if !s.trace().is_zero() {
        return Err(Error::Invalid("s must be traceless".into()));
    }

    let mut zero_weight = Vec::new();
    let mut bounded = Vec::new();
    for k in 0..n - 1 {
        let h = &Matrix::unit(n, n, k, k) - &Matrix::unit(n, n, k + 1, k + 1);
        zero_weight.push(h.clone());
        bounded.push(h);
    }
    for row in 0..n {
        for col in 0..n {
            if row == col {
                continue;
            }
            let weight = &s[(row, row)] - &s[(col, col)];
            let e = Matrix::unit(n, n, row, col);
            if weight.is_zero() {
                zero_weight.push(e.clone());
                bounded.push(e);
            } else if weight < Scalar::zero() {
                bounded.push(e);
            }
        }
    }
    Ok(SSubspaceData {
        s: s.clone(),
        zero_weight,
        bounded,
    })
}

/// The character `x -> tr(s x)` attached to a diagonal `s`.
pub fn chi_s(s: &Matrix, x: &Matrix) -> Result<Scalar> {
    Ok(s.mul(x)?.trace())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{span_equal, span_rank};
    use crate::scalar::ratio;
    use rand::Rng;

    fn profile(dims: &[usize]) -> GradedDims {
        GradedDims::from_slice(dims).unwrap()
    }

    #[test]
    fn chain_grading_element_for_two_lines() {
        let z = ZGrading::chain(&profile(&[1, 1])).unwrap();
        assert_eq!(z.zeta(), &Matrix::diagonal(&[ratio(-1, 2), ratio(1, 2)]));
        assert_eq!(z.piece(1), &[Matrix::unit(2, 2, 1, 0)]);
        assert_eq!(z.piece(-1), &[Matrix::unit(2, 2, 0, 1)]);
        assert_eq!(z.piece(0).len(), 1);
        assert!(z.piece(2).is_empty());
    }

    #[test]
    fn chain_grading_element_for_two_blocks() {
        let z = ZGrading::chain(&profile(&[2, 3])).unwrap();
        let mut diag = vec![ratio(-3, 5); 2];
        diag.extend(vec![ratio(2, 5); 3]);
        assert_eq!(z.zeta(), &Matrix::diagonal(&diag));
        assert!(z.zeta().trace().is_zero());
        assert_eq!(z.piece(1).len(), 6);
        assert_eq!(z.piece(-1).len(), 6);
    }

    #[test]
    fn chain_piece_dims_for_three_lines() {
        let z = ZGrading::chain(&profile(&[1, 1, 1])).unwrap();
        assert_eq!(z.piece_dims(), vec![1, 2, 2, 2, 1]);
        let total: usize = z.piece_dims().iter().sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn chain_requires_full_support() {
        assert!(ZGrading::chain(&profile(&[2, 0, 1])).is_err());
    }

    #[test]
    fn pieces_are_ad_zeta_eigenspaces() {
        for dims in [vec![1, 1], vec![2, 3], vec![1, 1, 1], vec![1, 2, 1, 1]] {
            let z = ZGrading::chain(&profile(&dims)).unwrap();
            for j in z.min_degree()..=z.max_degree() {
                for x in z.piece(j) {
                    assert_eq!(bracket(z.zeta(), x), x.scale(&int(j)), "degree {j}");
                }
            }
        }
    }

    #[test]
    fn reversed_negates_degrees() {
        let z = ZGrading::chain(&profile(&[1, 1, 1])).unwrap();
        let r = z.reversed();
        assert_eq!(r.zeta(), &-z.zeta());
        assert_eq!(r.piece(1), z.piece(-1));
        assert_eq!(r.piece(-2), z.piece(2));
        for j in r.min_degree()..=r.max_degree() {
            for x in r.piece(j) {
                assert_eq!(bracket(r.zeta(), x), x.scale(&int(j)));
            }
        }
    }

    #[test]
    fn degree_of_detects_homogeneity() {
        let z = ZGrading::chain(&profile(&[1, 1])).unwrap();
        assert_eq!(z.degree_of(&Matrix::unit(2, 2, 1, 0)), Some(1));
        assert_eq!(z.degree_of(&Matrix::unit(2, 2, 0, 1)), Some(-1));
        assert_eq!(z.degree_of(&Matrix::zeros(2, 2)), None);
        let mixed = &Matrix::unit(2, 2, 1, 0) + &Matrix::unit(2, 2, 0, 1);
        assert_eq!(z.degree_of(&mixed), None);
    }

    #[test]
    fn collapse_matches_quiver_grading() {
        for dims in [vec![1, 1], vec![2, 3], vec![1, 1, 1], vec![2, 1, 2]] {
            let d = profile(&dims);
            let collapsed = ZGrading::chain(&d).unwrap().to_cyclic().unwrap();
            let quiver = CyclicGrading::from_quiver(&d);
            assert!(
                collapsed.verify().pass,
                "collapse of {dims:?} not a grading"
            );
            for i in 0..d.m() {
                assert!(
                    span_equal(collapsed.component(i), quiver.component(i)),
                    "component {i} of {dims:?} differs"
                );
            }
        }
    }

    #[test]
    fn collapse_splits_component_one_into_forward_and_wrap() {
        let z = ZGrading::chain(&profile(&[1, 1, 1])).unwrap();
        assert_eq!(z.phi_plus_basis().len(), 2);
        assert_eq!(z.phi_minus_basis().len(), 1);
        let c1 = z.to_cyclic().unwrap();
        assert_eq!(c1.component(1).len(), 3);
    }

    #[test]
    fn s_subspaces_of_zero_weight_element() {
        let s = Matrix::zeros(2, 2);
        let data = s_subspaces(&s).unwrap();
        assert_eq!(span_rank(data.levi()), 3);
        assert_eq!(span_rank(data.parabolic()), 3);
    }

    #[test]
    fn s_subspaces_for_sl2_regular_element() {
        let s = Matrix::diagonal(&[int(1), int(-1)]);
        let data = s_subspaces(&s).unwrap();
        assert_eq!(data.levi().len(), 1);
        assert_eq!(data.parabolic().len(), 2);
        // Levi is contained in the parabolic.
        assert_eq!(
            span_rank(&[data.levi(), data.parabolic()].concat()),
            data.parabolic().len()
        );
    }

    #[test]
    fn s_subspaces_for_sl3_regular_element() {
        let s = Matrix::diagonal(&[int(1), int(0), int(-1)]);
        let data = s_subspaces(&s).unwrap();
        assert_eq!(data.levi().len(), 2);
        assert_eq!(data.parabolic().len(), 5);
    }

    #[test]
    fn levi_is_intersection_of_opposite_parabolics() {
        let mut rng = crate::sampling::rng_from_seed(17);
        for _ in 0..6 {
            let n = rng.gen_range(2..=4);
            // Random traceless diagonal built from n - 1 free entries.
            let mut diag: Vec<Scalar> = (0..n - 1).map(|_| int(rng.gen_range(-3..=3))).collect();
            let sum: Scalar = diag.iter().cloned().sum();
            diag.push(-sum);
            let s = Matrix::diagonal(&diag);
            let pos = s_subspaces(&s).unwrap();
            let neg = s_subspaces(&-&s).unwrap();
            let dim_p = span_rank(pos.parabolic());
            let dim_q = span_rank(neg.parabolic());
            let dim_union = span_rank(&[pos.parabolic(), neg.parabolic()].concat());
            // dim(p ∩ q) = dim p + dim q - dim(p + q) must equal dim levi.
            assert_eq!(dim_p + dim_q - dim_union, span_rank(pos.levi()));
            assert!(span_equal(pos.levi(), neg.levi()));
        }
    }

    #[test]
    fn s_subspace_input_validation() {
        assert!(s_subspaces(&Matrix::from_ints(&[&[0, 1], &[0, 0]])).is_err());
        assert!(s_subspaces(&Matrix::identity(2)).is_err());
        assert!(s_subspaces(&Matrix::zeros(1, 1)).is_err());
    }

    #[test]
    fn chi_s_is_the_trace_pairing() {
        let s = Matrix::diagonal(&[int(1), int(-1)]);
        let x = Matrix::from_ints(&[&[3, 1], &[2, -3]]);
        assert_eq!(chi_s(&s, &x).unwrap(), int(6));
        // Linear in x.
        let y = Matrix::from_ints(&[&[1, 0], &[5, -1]]);
        let lhs = chi_s(&s, &(&x + &y)).unwrap();
        assert_eq!(lhs, chi_s(&s, &x).unwrap() + chi_s(&s, &y).unwrap());
    }
}
