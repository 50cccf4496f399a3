//! Gaussian-integer matrices.
//!
//! Every standard basis element of su(n,1) has entries in Z[i], and so do all
//! of their brackets. Working over Z[i] makes the bracket table and the
//! structure constants exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: i64,
    pub im: i64,
}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt { re: 0, im: 0 };
    pub const ONE: GaussInt = GaussInt { re: 1, im: 0 };
    pub const I: GaussInt = GaussInt { re: 0, im: 1 };

    pub const fn new(re: i64, im: i64) -> Self {
        GaussInt { re, im }
    }

    pub fn conj(self) -> Self {
        GaussInt::new(self.re, -self.im)
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    /// Max-norm |re| + |im| is enough to measure exact residuals.
    pub fn abs_l1(self) -> i64 {
        self.re.abs() + self.im.abs()
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re as f64, self.im as f64)
    }
}

impl Add for GaussInt {
    type Output = GaussInt;
    fn add(self, o: GaussInt) -> GaussInt {
        GaussInt::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, o: GaussInt) -> GaussInt {
        GaussInt::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt::new(-self.re, -self.im)
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, o: GaussInt) -> GaussInt {
        GaussInt::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (r, 0) => write!(f, "{r}"),
            (0, i) => write!(f, "{i}i"),
            (r, i) if i < 0 => write!(f, "{r}{i}i"),
            (r, i) => write!(f, "{r}+{i}i"),
        }
    }
}

/// Square matrix over Z[i], row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    size: usize,
    data: Vec<GaussInt>,
}

impl ExactMatrix {
    pub fn zeros(size: usize) -> Self {
        ExactMatrix {
            size,
            data: vec![GaussInt::ZERO; size * size],
        }
    }

    /// The matrix unit with `value` at (row, col), zero-based.
    pub fn unit(size: usize, row: usize, col: usize, value: GaussInt) -> Self {
        let mut m = Self::zeros(size);
        m[(row, col)] = value;
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn scale(&self, c: GaussInt) -> Self {
        ExactMatrix {
            size: self.size,
            data: self.data.iter().map(|&x| x * c).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(GaussInt::new(c, 0))
    }

    pub fn conj_transpose(&self) -> Self {
        let s = self.size;
        let mut out = Self::zeros(s);
        for r in 0..s {
            for c in 0..s {
                out[(c, r)] = self[(r, c)].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> GaussInt {
        (0..self.size).fold(GaussInt::ZERO, |acc, i| acc + self[(i, i)])
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Largest |re| + |im| over all entries.
    pub fn max_abs(&self) -> i64 {
        self.data.iter().map(|x| x.abs_l1()).max().unwrap_or(0)
    }

    pub fn bracket(&self, other: &ExactMatrix) -> ExactMatrix {
        &(self * other) - &(other * self)
    }

    pub fn entries(&self) -> &[GaussInt] {
        &self.data
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = GaussInt;
    fn index(&self, (r, c): (usize, usize)) -> &GaussInt {
        &self.data[r * self.size + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut GaussInt {
        &mut self.data[r * self.size + c]
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, o: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.size, o.size, "matrix size mismatch");
        ExactMatrix {
            size: self.size,
            data: self.data.iter().zip(&o.data).map(|(&a, &b)| a + b).collect(),
        }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, o: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.size, o.size, "matrix size mismatch");
        ExactMatrix {
            size: self.size,
            data: self.data.iter().zip(&o.data).map(|(&a, &b)| a - b).collect(),
        }
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        self.scale_int(-1)
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, o: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.size, o.size, "matrix size mismatch");
        let s = self.size;
        let mut out = ExactMatrix::zeros(s);
        for r in 0..s {
            for k in 0..s {
                let a = self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..s {
                    out[(r, c)] = out[(r, c)] + a * o[(k, c)];
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_int_arithmetic() {
        let a = GaussInt::new(2, -3);
        let b = GaussInt::new(-1, 4);
        assert_eq!(a * b, GaussInt::new(10, 11));
        assert_eq!(GaussInt::I * GaussInt::I, GaussInt::new(-1, 0));
        assert_eq!((a + b) - b, a);
        assert_eq!(a.conj(), GaussInt::new(2, 3));
        assert_eq!(format!("{a}"), "2-3i");
    }

    #[test]
    fn matrix_units_multiply() {
        let e01 = ExactMatrix::unit(3, 0, 1, GaussInt::ONE);
        let e12 = ExactMatrix::unit(3, 1, 2, GaussInt::I);
        let p = &e01 * &e12;
        assert_eq!(p, ExactMatrix::unit(3, 0, 2, GaussInt::I));
        assert!((&e12 * &e01).is_zero());
        assert_eq!(e01.bracket(&e12), p);
    }

    #[test]
    fn conj_transpose_and_trace() {
        let mut m = ExactMatrix::zeros(2);
        m[(0, 1)] = GaussInt::new(1, 2);
        m[(1, 1)] = GaussInt::new(0, 5);
        let t = m.conj_transpose();
        assert_eq!(t[(1, 0)], GaussInt::new(1, -2));
        assert_eq!(t.trace(), GaussInt::new(0, -5));
        assert_eq!(m.max_abs(), 5);
    }
}
