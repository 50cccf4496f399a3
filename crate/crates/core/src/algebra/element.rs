//! Floating-point algebra elements and their real coordinates.

use std::ops::{Add, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::basis::{Basis, BasisKind, CartanPart};
use crate::error::{check_dim, Error, Result};
use crate::exact::ExactMatrix;

/// Membership tolerance for float entries, relative to `max(1, max |entry|)`.
pub const MEMBERSHIP_TOL: f64 = 1e-12;

/// An `(n+1) x (n+1)` complex matrix, nominally in su(n,1) or gl(n+1, C).
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement {
    n: usize,
    matrix: DMatrix<Complex64>,
}

impl AlgebraElement {
    pub fn new(n: usize, matrix: DMatrix<Complex64>) -> Result<Self> {
        check_dim(n)?;
        if matrix.nrows() != n + 1 || matrix.ncols() != n + 1 {
            return Err(Error::Shape {
                expected: format!("{0}x{0}", n + 1),
                found: format!("{}x{}", matrix.nrows(), matrix.ncols()),
            });
        }
        Ok(AlgebraElement { n, matrix })
    }

    pub fn zeros(n: usize) -> Self {
        AlgebraElement {
            n,
            matrix: DMatrix::zeros(n + 1, n + 1),
        }
    }

    pub fn from_exact(m: &ExactMatrix) -> Self {
        let s = m.size();
        AlgebraElement {
            n: s - 1,
            matrix: DMatrix::from_fn(s, s, |r, c| m[(r, c)].to_complex()),
        }
    }

    pub fn basis(n: usize, kind: BasisKind) -> Self {
        Self::from_exact(&kind.matrix(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.matrix
    }

    pub fn scale(&self, c: f64) -> Self {
        AlgebraElement {
            n: self.n,
            matrix: self.matrix.map(|z| z * c),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.matrix.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    /// Residual of the su(n,1) conditions: `max(|J M* J + M|, |tr M|)`.
    pub fn membership_residual(&self) -> f64 {
        let n = self.n;
        let sign = |i: usize| if i == n { -1.0 } else { 1.0 };
        let mut worst = self.trace().norm();
        for r in 0..=n {
            for c in 0..=n {
                // (J M* J)_{rc} = J_r conj(M_{cr}) J_c
                let jmj = self.matrix[(c, r)].conj() * (sign(r) * sign(c));
                worst = worst.max((jmj + self.matrix[(r, c)]).norm());
            }
        }
        worst
    }

    /// Checks `J M* J = -M` and `tr M = 0` within [`MEMBERSHIP_TOL`].
    pub fn check_membership(&self) -> Result<()> {
        let n = self.n;
        let tol = MEMBERSHIP_TOL * self.max_abs().max(1.0);
        let tr = self.trace().norm();
        if tr > tol {
            return Err(Error::NotInAlgebra(format!("trace has modulus {tr:e}")));
        }
        for r in 0..=n {
            for c in 0..=n {
                let sign = if (r == n) != (c == n) { -1.0 } else { 1.0 };
                let resid = (self.matrix[(c, r)].conj() * sign + self.matrix[(r, c)]).norm();
                if resid > tol {
                    return Err(Error::NotInAlgebra(format!(
                        "J M* J = -M violated at ({}, {}) by {resid:e}",
                        r + 1,
                        c + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_member(&self) -> bool {
        self.check_membership().is_ok()
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, o: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.n, o.n, "dimension mismatch");
        AlgebraElement {
            n: self.n,
            matrix: &self.matrix + &o.matrix,
        }
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, o: &AlgebraElement) -> AlgebraElement {
        assert_eq!(self.n, o.n, "dimension mismatch");
        AlgebraElement {
            n: self.n,
            matrix: &self.matrix - &o.matrix,
        }
    }
}

fn same_dim(x: &AlgebraElement, y: &AlgebraElement) -> Result<()> {
    if x.n != y.n {
        return Err(Error::Shape {
            expected: format!("n = {}", x.n),
            found: format!("n = {}", y.n),
        });
    }
    Ok(())
}

/// The commutator `XY - YX`.
pub fn bracket(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    same_dim(x, y)?;
    Ok(AlgebraElement {
        n: x.n,
        matrix: &x.matrix * &y.matrix - &y.matrix * &x.matrix,
    })
}

/// Real coefficients over the standard basis, indexed by ordinal.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealCoordinates {
    pub n: usize,
    pub coeffs: Vec<f64>,
}

impl RealCoordinates {
    pub fn new(n: usize, coeffs: Vec<f64>) -> Result<Self> {
        check_dim(n)?;
        let d = n * n + 2 * n;
        if coeffs.len() != d {
            return Err(Error::Shape {
                expected: format!("{d} coefficients"),
                found: format!("{}", coeffs.len()),
            });
        }
        Ok(RealCoordinates { n, coeffs })
    }

    pub fn zeros(n: usize) -> Self {
        RealCoordinates {
            n,
            coeffs: vec![0.0; n * n + 2 * n],
        }
    }

    pub fn unit(n: usize, ordinal: usize) -> Self {
        let mut c = Self::zeros(n);
        c.coeffs[ordinal] = 1.0;
        c
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// Copy with every coordinate outside `part` zeroed.
    pub fn project(&self, part: CartanPart) -> Self {
        let basis = Basis::new(self.n).expect("n validated at construction");
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| if basis.part(i) == part { c } else { 0.0 })
            .collect();
        RealCoordinates { n: self.n, coeffs }
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn reconstruct(&self) -> AlgebraElement {
        let n = self.n;
        let basis = Basis::new(n).expect("n validated at construction");
        let i = Complex64::i();
        let mut m = DMatrix::<Complex64>::zeros(n + 1, n + 1);
        for (ix, &c) in basis.indices().iter().zip(&self.coeffs) {
            if c == 0.0 {
                continue;
            }
            match ix.kind {
                BasisKind::Alpha(j, k) => {
                    m[(j - 1, k - 1)] += c;
                    m[(k - 1, j - 1)] -= c;
                }
                BasisKind::IBeta(j, k) => {
                    m[(j - 1, k - 1)] += i * c;
                    m[(k - 1, j - 1)] += i * c;
                }
                BasisKind::H(j) => {
                    m[(j - 1, j - 1)] += i * c;
                    m[(n, n)] -= i * c;
                }
                BasisKind::BetaP(j) => {
                    m[(j - 1, n)] += c;
                    m[(n, j - 1)] += c;
                }
                BasisKind::IAlphaP(j) => {
                    m[(j - 1, n)] += i * c;
                    m[(n, j - 1)] -= i * c;
                }
            }
        }
        AlgebraElement { n, matrix: m }
    }
}

/// Reads the real coordinates of `m` straight off its entries.
///
/// `alpha_jk`/`i beta_jk` come from the real/imaginary part of `M[j][k]`,
/// the P coordinates from the last column, and `h_j` from `Im M[j][j]`.
pub fn decompose(m: &AlgebraElement) -> Result<RealCoordinates> {
    m.check_membership()?;
    let n = m.n;
    let basis = Basis::new(n)?;
    let mx = &m.matrix;
    let coeffs = basis
        .indices()
        .iter()
        .map(|ix| match ix.kind {
            BasisKind::Alpha(j, k) => mx[(j - 1, k - 1)].re,
            BasisKind::IBeta(j, k) => mx[(j - 1, k - 1)].im,
            BasisKind::H(j) => mx[(j - 1, j - 1)].im,
            BasisKind::BetaP(j) => mx[(j - 1, n)].re,
            BasisKind::IAlphaP(j) => mx[(j - 1, n)].im,
        })
        .collect();
    Ok(RealCoordinates { n, coeffs })
}

/// Exact counterpart of [`decompose`] for Gaussian-integer matrices.
pub fn decompose_exact(m: &ExactMatrix) -> Result<Vec<i64>> {
    let n = m.size().checked_sub(1).filter(|&n| n >= 1).ok_or(Error::InvalidDimension(0))?;
    let mut jm = m.conj_transpose();
    for r in 0..=n {
        for c in 0..=n {
            if (r == n) != (c == n) {
                jm[(r, c)] = -jm[(r, c)];
            }
        }
    }
    if &jm + m != ExactMatrix::zeros(n + 1) {
        return Err(Error::NotInAlgebra("J M* J = -M violated".into()));
    }
    if !m.trace().is_zero() {
        return Err(Error::NotInAlgebra(format!("trace is {}", m.trace())));
    }
    let basis = Basis::new(n)?;
    Ok(basis
        .indices()
        .iter()
        .map(|ix| match ix.kind {
            BasisKind::Alpha(j, k) => m[(j - 1, k - 1)].re,
            BasisKind::IBeta(j, k) => m[(j - 1, k - 1)].im,
            BasisKind::H(j) => m[(j - 1, j - 1)].im,
            BasisKind::BetaP(j) => m[(j - 1, n)].re,
            BasisKind::IAlphaP(j) => m[(j - 1, n)].im,
        })
        .collect())
}

/// Splits `m` into its K and P components.
pub fn cartan_split(m: &AlgebraElement) -> Result<(AlgebraElement, AlgebraElement)> {
    let coords = decompose(m)?;
    Ok((
        coords.project(CartanPart::K).reconstruct(),
        coords.project(CartanPart::P).reconstruct(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::basis::standard_basis;

    fn el(n: usize, kind: BasisKind) -> AlgebraElement {
        AlgebraElement::basis(n, kind)
    }

    #[test]
    fn decompose_basis_elements_gives_unit_vectors() {
        for n in 1..=4 {
            for (i, m) in standard_basis(n).unwrap().iter().enumerate() {
                let c = decompose(&AlgebraElement::from_exact(m)).unwrap();
                assert_eq!(c, RealCoordinates::unit(n, i));
            }
        }
        let b = Basis::new(3).unwrap();
        let c = decompose(&el(3, BasisKind::H(2))).unwrap();
        assert_eq!(c, RealCoordinates::unit(3, b.ordinal(BasisKind::H(2)).unwrap()));
    }

    #[test]
    fn decompose_is_linear() {
        let n = 3;
        let b = Basis::new(n).unwrap();
        let m = &el(n, BasisKind::Alpha(1, 2)).scale(3.0) - &el(n, BasisKind::IAlphaP(1)).scale(2.0);
        let c = decompose(&m).unwrap();
        let mut expect = RealCoordinates::zeros(n);
        expect.coeffs[b.ordinal(BasisKind::Alpha(1, 2)).unwrap()] = 3.0;
        expect.coeffs[b.ordinal(BasisKind::IAlphaP(1)).unwrap()] = -2.0;
        assert_eq!(c, expect);
    }

    #[test]
    fn non_members_are_rejected() {
        let n = 2;
        // e_11 alone: trace 1 and not skew.
        let mut m = DMatrix::zeros(3, 3);
        m[(0, 0)] = Complex64::new(1.0, 0.0);
        let err = decompose(&AlgebraElement::new(n, m).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NotInAlgebra(_)));
        // i e_11: skew but not traceless.
        let mut m = DMatrix::zeros(3, 3);
        m[(0, 0)] = Complex64::new(0.0, 1.0);
        let err = decompose(&AlgebraElement::new(n, m).unwrap()).unwrap_err();
        assert!(err.to_string().contains("trace"));
    }

    #[test]
    fn bracket_shape_mismatch() {
        let x = el(2, BasisKind::H(1));
        let y = el(3, BasisKind::H(1));
        assert!(matches!(bracket(&x, &y), Err(Error::Shape { .. })));
    }

    #[test]
    fn wrong_shape_rejected() {
        let m = DMatrix::zeros(3, 4);
        assert!(AlgebraElement::new(2, m).is_err());
    }

    #[test]
    fn cartan_split_of_aligned_input() {
        let n = 2;
        let hk = el(n, BasisKind::H(1));
        let bp = el(n, BasisKind::BetaP(1));
        let (k, p) = cartan_split(&(&hk + &bp)).unwrap();
        assert_eq!(k, hk);
        assert_eq!(p, bp);
        let (k0, p0) = cartan_split(&AlgebraElement::zeros(n)).unwrap();
        assert_eq!(k0.max_abs(), 0.0);
        assert_eq!(p0.max_abs(), 0.0);
    }

    #[test]
    fn exact_decompose_matches_float() {
        let n = 3;
        let basis = standard_basis(n).unwrap();
        let m = &(&basis[0] + &basis[5].scale_int(3)) - &basis[9].scale_int(2);
        let ci = decompose_exact(&m).unwrap();
        let cf = decompose(&AlgebraElement::from_exact(&m)).unwrap();
        let back: Vec<f64> = ci.iter().map(|&x| x as f64).collect();
        assert_eq!(back, cf.coeffs);
    }
}
