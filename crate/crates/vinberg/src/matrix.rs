//! Dense matrices over the rationals.
//!
//! Row-major storage, exact arithmetic throughout.  Besides the basic ring
//! operations this module carries the elimination-based tools the rest of
//! the crate leans on: reduced row echelon form, kernel bases, linear
//! solving, and a division-free characteristic polynomial (Berkowitz
//! iteration, which keeps intermediate values polynomial in the entries
//! instead of exploding like cofactor expansion).

use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Matrix with [`Scalar`] entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    /// The zero matrix of the given shape (either dimension may be 0).
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    /// The identity matrix of size `n`.
    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// The elementary matrix with a single `1` at `(row, col)`.
    pub fn unit(rows: usize, cols: usize, row: usize, col: usize) -> Matrix {
        let mut m = Matrix::zeros(rows, cols);
        m[(row, col)] = Scalar::one();
        m
    }

    /// Builds a matrix from rows of scalars; all rows must share a length.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from rows of integers (test and example shorthand).
    pub fn from_ints(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::scalar::int(v)).collect())
                .collect(),
        )
        .expect("integer rows share a length")
    }

    /// Builds a matrix entrywise from a function of `(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<Scalar>]) -> Result<Matrix> {
        let ncols = columns.len();
        let nrows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != nrows) {
            return Err(Error::Dimension("ragged columns".into()));
        }
        Ok(Matrix::from_fn(nrows, ncols, |r, c| columns[c][r].clone()))
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(diag: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub(crate) fn entry_mut(&mut self, row: usize, col: usize) -> &mut Scalar {
        &mut self.entries[row * self.cols + col]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Matrix product; errors when the inner dimensions disagree.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        *out.entry_mut(i, j) += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Scales every entry.
    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    /// Trace of a square matrix.
    pub fn trace(&self) -> Scalar {
        assert!(self.is_square(), "trace requires a square matrix");
        let mut t = Scalar::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    /// The entries flattened row-major (coordinates for span computations).
    pub fn vectorize(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, row: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let e = self.entry_mut(row, c);
            if !e.is_zero() {
                *e = &*e * factor;
            }
        }
    }

    /// `row a -= factor * row b`
    fn row_sub_scaled(&mut self, a: usize, b: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let val = &self[(b, c)] * factor;
            if !val.is_zero() {
                *self.entry_mut(a, c) -= val;
            }
        }
    }

    /// Reduced row echelon form; returns the reduced matrix and the pivot
    /// column indices.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].recip();
            m.scale_row(row, &inv);
            for r in 0..m.rows {
                if r != row && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    m.row_sub_scaled(r, row, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact basis of the null space `{v : self * v = 0}`; the number of
    /// vectors equals `cols - rank`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot_col = vec![false; self.cols];
        for &p in &pivots {
            is_pivot_col[p] = true;
        }
        for free in 0..self.cols {
            if is_pivot_col[free] {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = rhs`, returning one solution (free coordinates
    /// set to zero) or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.rows, "right-hand side length mismatch");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = rhs[r].clone();
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = red[(i, self.cols)].clone();
        }
        Some(x)
    }

    /// Exact inverse; errors on non-square or singular input.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = Scalar::one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |r, c| red[(r, n + c)].clone()))
    }

    /// Determinant by Gaussian elimination with exact pivots.
    pub fn det(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            let pivot = m[(col, col)].clone();
            det *= &pivot;
            let inv = pivot.recip();
            for r in col + 1..n {
                if !m[(r, col)].is_zero() {
                    let factor = &m[(r, col)] * &inv;
                    m.row_sub_scaled(r, col, &factor);
                }
            }
        }
        Ok(det)
    }

    /// Monic characteristic polynomial `det(x I - self)` via the Berkowitz
    /// iteration (division-free); the `0x0` matrix yields the constant `1`.
    pub fn charpoly(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        // Coefficients of the leading principal r x r block's characteristic
        // polynomial, highest degree first.
        let mut v = vec![Scalar::one()];
        for r in 1..=n {
            // Toeplitz column t: t0 = 1, t1 = -corner, t_k = -(R . M^(k-2) . C)
            // where M is the leading (r-1) block, R the row below it, C the
            // column to its right.
            let mut t = Vec::with_capacity(r + 1);
            t.push(Scalar::one());
            t.push(-self[(r - 1, r - 1)].clone());
            let mut w: Vec<Scalar> = (0..r - 1).map(|i| self[(i, r - 1)].clone()).collect();
            for k in 2..=r {
                let mut dot = Scalar::zero();
                for i in 0..r - 1 {
                    let a = &self[(r - 1, i)];
                    if !a.is_zero() && !w[i].is_zero() {
                        dot += a * &w[i];
                    }
                }
                t.push(-dot);
                if k < r {
                    let mut nw = vec![Scalar::zero(); r - 1];
                    for i in 0..r - 1 {
                        for j in 0..r - 1 {
                            let a = &self[(i, j)];
                            if !a.is_zero() && !w[j].is_zero() {
                                nw[i] += a * &w[j];
                            }
                        }
                    }
                    w = nw;
                }
            }
            let mut nv = vec![Scalar::zero(); r + 1];
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                for (d, td) in t.iter().enumerate() {
                    if j + d <= r && !td.is_zero() {
                        nv[j + d] += td * vj;
                    }
                }
            }
            v = nv;
        }
        v.reverse();
        Ok(Poly::new(v))
    }

    /// Monic minimal polynomial, found as the first linear dependence among
    /// the vectorized powers `I, A, A^2, ...`.
    pub fn min_poly(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one());
        }
        let mut powers: Vec<Matrix> = vec![Matrix::identity(n)];
        loop {
            let d = powers.len();
            let next = powers.last().expect("nonempty").mul(self)?;
            let columns: Vec<Vec<Scalar>> = powers.iter().map(Matrix::vectorize).collect();
            let system = Matrix::from_columns(&columns)?;
            if let Some(x) = system.solve(&next.vectorize()) {
                let mut coeffs: Vec<Scalar> = x.into_iter().map(|c| -c).collect();
                coeffs.push(Scalar::one());
                return Ok(Poly::new(coeffs));
            }
            assert!(
                d <= n,
                "powers of an n x n matrix must be dependent by degree n"
            );
            powers.push(next);
        }
    }
}

/// Commutator `[a, b] = ab - ba` of two square matrices of equal size.
pub fn bracket(a: &Matrix, b: &Matrix) -> Matrix {
    assert!(
        a.is_square() && b.is_square() && a.rows == b.rows,
        "bracket requires equal square matrices"
    );
    let ab = a.mul(b).expect("square sizes agree");
    let ba = b.mul(a).expect("square sizes agree");
    &ab - &ba
}

/// Rank of the span of a family of equal-shaped matrices.
pub fn span_rank(mats: &[Matrix]) -> usize {
    if mats.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<Scalar>> = mats.iter().map(Matrix::vectorize).collect();
    Matrix::from_rows(rows).expect("equal shapes").rank()
}

/// True when two families of equal-shaped matrices span the same subspace.
pub fn span_equal(a: &[Matrix], b: &[Matrix]) -> bool {
    let ra = span_rank(a);
    let rb = span_rank(b);
    if ra != rb {
        return false;
    }
    let mut all: Vec<Matrix> = a.to_vec();
    all.extend(b.iter().cloned());
    span_rank(&all) == ra
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (row, col): (usize, usize)) -> &Scalar {
        assert!(row < self.rows && col < self.cols, "index out of range");
        &self.entries[row * self.cols + col]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (row, col): (usize, usize)) -> &mut Scalar {
        assert!(row < self.rows && col < self.cols, "index out of range");
        &mut self.entries[row * self.cols + col]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "shape mismatch in addition"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "shape mismatch in subtraction"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| int(rng.gen_range(-9..=9)))
    }

    /// Entrywise product definition, kept deliberately naive as an oracle.
    fn mul_oracle(a: &Matrix, b: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(a.rows(), b.cols());
        for i in 0..a.rows() {
            for j in 0..b.cols() {
                let mut sum = Scalar::zero();
                for k in 0..a.cols() {
                    sum += &a[(i, k)] * &b[(k, j)];
                }
                out[(i, j)] = sum;
            }
        }
        out
    }

    /// Characteristic polynomial by cofactor expansion of `xI - A` over
    /// polynomial entries; exponential, test-only.
    fn charpoly_oracle(a: &Matrix) -> Poly {
        fn det_poly(m: &[Vec<Poly>]) -> Poly {
            let n = m.len();
            if n == 0 {
                return Poly::one();
            }
            let mut acc = Poly::zero();
            for (j, top) in m[0].iter().enumerate() {
                if top.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = top * &det_poly(&minor);
                if j % 2 == 0 {
                    acc = &acc + &term;
                } else {
                    acc = &acc - &term;
                }
            }
            acc
        }
        let n = a.rows();
        let entries: Vec<Vec<Poly>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let diag = if r == c {
                            Poly::monomial(1)
                        } else {
                            Poly::zero()
                        };
                        &diag - &Poly::constant(a[(r, c)].clone())
                    })
                    .collect()
            })
            .collect();
        det_poly(&entries)
    }

    #[test]
    fn identity_and_units_multiply_as_expected() {
        let e01 = Matrix::unit(2, 2, 0, 1);
        let e10 = Matrix::unit(2, 2, 1, 0);
        assert_eq!(e01.mul(&e10).unwrap(), Matrix::unit(2, 2, 0, 0));
        assert_eq!(e10.mul(&e01).unwrap(), Matrix::unit(2, 2, 1, 1));
        let i = Matrix::identity(2);
        assert_eq!(i.mul(&e01).unwrap(), e01);
    }

    #[test]
    fn mul_rejects_mismatched_shapes() {
        let a = Matrix::zeros(2, 3);
        let b = Matrix::zeros(2, 3);
        assert!(matches!(a.mul(&b), Err(Error::Dimension(_))));
    }

    #[test]
    fn mul_handles_empty_dimensions() {
        let a = Matrix::zeros(2, 0);
        let b = Matrix::zeros(0, 3);
        assert_eq!(a.mul(&b).unwrap(), Matrix::zeros(2, 3));
    }

    #[test]
    fn mul_matches_naive_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let a = random_matrix(&mut rng, 3, 4);
            let b = random_matrix(&mut rng, 4, 2);
            assert_eq!(a.mul(&b).unwrap(), mul_oracle(&a, &b));
        }
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let z = Matrix::zeros(2, 2);
        let k = z.kernel_basis();
        assert_eq!(k.len(), 2);
        assert_eq!(
            span_rank(&[
                Matrix::from_rows(vec![k[0].clone()]).unwrap(),
                Matrix::from_rows(vec![k[1].clone()]).unwrap()
            ]),
            2
        );
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert!(Matrix::identity(3).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_rank_one_matrix() {
        let m = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        // The kernel vector must be proportional to (2, -1).
        let v = &k[0];
        assert_eq!(&v[0] * int(-1), &v[1] * int(2));
        assert!(!(v[0].is_zero() && v[1].is_zero()));
    }

    #[test]
    fn rank_plus_nullity_is_column_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=5);
            let m = random_matrix(&mut rng, rows, cols);
            assert_eq!(m.rank() + m.kernel_basis().len(), cols);
            // Every kernel vector is actually annihilated.
            for v in m.kernel_basis() {
                let col = Matrix::from_columns(&[v]).unwrap();
                assert!(m.mul(&col).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn inverse_round_trips() {
        let m = Matrix::from_ints(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(2));

        let s = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert!(matches!(s.inverse(), Err(Error::Singular)));
    }

    #[test]
    fn solve_finds_solutions_and_detects_inconsistency() {
        let m = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let x = m.solve(&[int(5), int(11)]).unwrap();
        assert_eq!(x, vec![int(1), int(2)]);

        let s = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert!(s.solve(&[int(1), int(3)]).is_none());
        let x = s.solve(&[int(1), int(2)]).unwrap();
        assert_eq!(&x[0] + &x[1] * int(2), int(1));
    }

    #[test]
    fn det_agrees_with_hand_values() {
        assert_eq!(Matrix::identity(3).det().unwrap(), int(1));
        assert_eq!(
            Matrix::from_ints(&[&[1, 2], &[3, 4]]).det().unwrap(),
            int(-2)
        );
        assert_eq!(
            Matrix::from_ints(&[&[1, 2], &[2, 4]]).det().unwrap(),
            int(0)
        );
    }

    #[test]
    fn charpoly_of_identity() {
        // (x - 1)^2 = x^2 - 2x + 1
        assert_eq!(
            Matrix::identity(2).charpoly().unwrap(),
            Poly::from_ints(&[1, -2, 1])
        );
    }

    #[test]
    fn charpoly_of_diagonal_matrix() {
        let d = Matrix::diagonal(&[int(1), int(2), int(3)]);
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        assert_eq!(d.charpoly().unwrap(), Poly::from_ints(&[-6, 11, -6, 1]));
    }

    #[test]
    fn charpoly_of_empty_matrix_is_one() {
        assert_eq!(Matrix::zeros(0, 0).charpoly().unwrap(), Poly::one());
    }

    #[test]
    fn charpoly_matches_cofactor_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..12 {
            let n = rng.gen_range(1..=4);
            let m = Matrix::from_fn(n, n, |_, _| {
                ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3))
            });
            assert_eq!(m.charpoly().unwrap(), charpoly_oracle(&m));
        }
    }

    #[test]
    fn cayley_hamilton_holds() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..10 {
            let n = rng.gen_range(1..=5);
            let m = random_matrix(&mut rng, n, n);
            let p = m.charpoly().unwrap();
            assert!(p.eval_matrix(&m).unwrap().is_zero());
        }
    }

    #[test]
    fn det_is_constant_term_of_charpoly_up_to_sign() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..10 {
            let n = rng.gen_range(1..=4);
            let m = random_matrix(&mut rng, n, n);
            let p = m.charpoly().unwrap();
            let sign = if n % 2 == 0 { int(1) } else { int(-1) };
            assert_eq!(m.det().unwrap(), sign * p.coeff(0));
        }
    }

    #[test]
    fn min_poly_examples() {
        // diag(1, 1, 2): minimal polynomial (x-1)(x-2), strictly divides charpoly.
        let d = Matrix::diagonal(&[int(1), int(1), int(2)]);
        assert_eq!(d.min_poly().unwrap(), Poly::from_ints(&[2, -3, 1]));

        // Jordan block: x^2.
        let j = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
        assert_eq!(j.min_poly().unwrap(), Poly::from_ints(&[0, 0, 1]));
        assert!(!j.min_poly().unwrap().is_squarefree());

        // A projector satisfies x^2 - x.
        let p = Matrix::from_ints(&[&[1, 0], &[0, 0]]);
        assert_eq!(p.min_poly().unwrap(), Poly::from_ints(&[0, -1, 1]));
        assert!(p.min_poly().unwrap().is_squarefree());
    }

    #[test]
    fn bracket_is_antisymmetric() {
        let a = Matrix::from_ints(&[&[1, 2], &[3, 4]]);
        let b = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        let ab = bracket(&a, &b);
        let ba = bracket(&b, &a);
        assert_eq!(ab, -&ba);
    }

    #[test]
    fn span_equality_ignores_basis_choice() {
        let e1 = Matrix::unit(2, 2, 0, 0);
        let e2 = Matrix::unit(2, 2, 1, 1);
        let sum = &e1 + &e2;
        let diff = &e1 - &e2;
        assert!(span_equal(&[e1.clone(), e2.clone()], &[sum, diff]));
        assert!(!span_equal(std::slice::from_ref(&e1), &[e2]));
        assert!(span_equal(&[], &[Matrix::zeros(2, 2)]));
    }
}
