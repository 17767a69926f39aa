//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending degree order with the invariant
//! that the highest-degree coefficient is nonzero; the zero polynomial is
//! the empty coefficient list.  Everything is exact: division, gcd, and
//! interpolation never round.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Polynomial in one variable with [`Scalar`] coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn new(mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Convenience constructor from ascending integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| crate::scalar::int(c)).collect())
    }

    /// The zero polynomial.
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Poly {
        Poly::constant(Scalar::one())
    }

    /// A constant polynomial.
    pub fn constant(c: Scalar) -> Poly {
        Poly::new(vec![c])
    }

    /// The monomial `x^deg`.
    pub fn monomial(deg: usize) -> Poly {
        let mut coeffs = vec![Scalar::zero(); deg + 1];
        coeffs[deg] = Scalar::one();
        Poly { coeffs }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient, `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Ascending coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// True if the leading coefficient is `1`.
    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Scales every coefficient.
    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lead) => {
                let inv = lead.recip();
                self.scale(&inv)
            }
        }
    }

    /// Horner evaluation at a scalar.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a square matrix (constant term times identity).
    pub fn eval_matrix(&self, a: &Matrix) -> Result<Matrix> {
        if a.rows() != a.cols() {
            return Err(Error::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        let n = a.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(a)?;
            for k in 0..n {
                let e = acc.entry_mut(k, k);
                *e += c;
            }
        }
        Ok(acc)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * crate::scalar::int(i as i64 + 1))
                .collect(),
        )
    }

    /// Euclidean division: returns `(quotient, remainder)` with
    /// `self = quotient * divisor + remainder` and
    /// `deg remainder < deg divisor`.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let Some(d_deg) = divisor.degree() else {
            return Err(Error::Invalid("polynomial division by zero".into()));
        };
        let lead_inv = divisor.leading().expect("nonzero divisor").recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); self.coeffs.len().saturating_sub(d_deg)];
        while rem.len() > d_deg {
            let r_deg = rem.len() - 1;
            let factor = &rem[r_deg] * &lead_inv;
            if !factor.is_zero() {
                let shift = r_deg - d_deg;
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let delta = &factor * c;
                    rem[shift + i] -= delta;
                }
                quot[shift] = factor;
            }
            rem.pop();
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = x.divrem(&y).expect("nonzero divisor");
            x = y;
            y = r;
        }
        x.monic()
    }

    /// True when the polynomial has no repeated roots, i.e. it is coprime
    /// with its derivative.  Constants count as squarefree.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None | Some(0) => true,
            Some(_) => Poly::gcd(self, &self.derivative()).degree() == Some(0),
        }
    }

    /// Substitutes `x^m` for the variable: `p(x) -> p(x^m)`.
    pub fn substitute_power(&self, m: usize) -> Poly {
        assert!(m >= 1, "substitution exponent must be positive");
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); (self.coeffs.len() - 1) * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * m] = c.clone();
        }
        Poly { coeffs }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Unique interpolating polynomial through `points` (Newton divided
    /// differences).  The abscissas must be pairwise distinct.
    pub fn interpolate(points: &[(Scalar, Scalar)]) -> Result<Poly> {
        for (i, (xi, _)) in points.iter().enumerate() {
            for (xj, _) in &points[..i] {
                if xi == xj {
                    return Err(Error::Invalid(format!(
                        "repeated interpolation abscissa {xi}"
                    )));
                }
            }
        }
        // Divided-difference table, then expansion of the Newton form.
        let mut table: Vec<Scalar> = points.iter().map(|(_, y)| y.clone()).collect();
        let xs: Vec<&Scalar> = points.iter().map(|(x, _)| x).collect();
        let mut result = Poly::zero();
        let mut basis = Poly::one();
        for level in 0..points.len() {
            result = &result + &basis.scale(&table[0]);
            basis = &basis * &Poly::new(vec![-xs[level].clone(), Scalar::one()]);
            for i in 0..table.len().saturating_sub(level + 1) {
                let num = &table[i + 1] - &table[i];
                let den = xs[i + level + 1] - xs[i];
                table[i] = num / den;
            }
        }
        Ok(result)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::new(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Poly::new(coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "x")?,
                1 => write!(f, "{c}*x")?,
                _ if c.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
