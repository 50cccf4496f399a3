//! Complex hyperbolic space in the projective model: the signature-(n,1)
//! Hermitian form, the Bergman distance, and the action of SU(n,1).

use std::str::FromStr;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::RealCoordinates;
use crate::error::{check_dim, Error, Result};
use crate::sampling;

/// `<z, w> = sum_{j<=n} z_j conj(w_j) - z_{n+1} conj(w_{n+1})`.
pub fn hermitian_form(z: &[Complex64], w: &[Complex64]) -> Result<Complex64> {
    if z.len() != w.len() {
        return Err(Error::Shape {
            expected: format!("length {}", z.len()),
            found: format!("length {}", w.len()),
        });
    }
    let Some(last) = z.len().checked_sub(1) else {
        return Ok(Complex64::new(0.0, 0.0));
    };
    Ok(z.iter()
        .zip(w)
        .enumerate()
        .map(|(i, (a, b))| {
            let t = a * b.conj();
            if i == last {
                -t
            } else {
                t
            }
        })
        .sum())
}

/// A lift `z` in C^{n,1} of a projective point. Lifts are stored as given;
/// nothing assumes `<z,z> = -1`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomogeneousPoint {
    coords: Vec<Complex64>,
}

impl HomogeneousPoint {
    pub fn new(coords: Vec<Complex64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::Shape {
                expected: "at least 2 homogeneous coordinates".into(),
                found: format!("{}", coords.len()),
            });
        }
        Ok(HomogeneousPoint { coords })
    }

    /// The point `(x_1, .., x_n, 1)` for ball coordinates `x`.
    pub fn from_ball(x: &[Complex64]) -> Result<Self> {
        let mut c = x.to_vec();
        c.push(Complex64::new(1.0, 0.0));
        Self::new(c)
    }

    /// `[0 : .. : 0 : 1]`.
    pub fn center(n: usize) -> Self {
        let mut c = vec![Complex64::new(0.0, 0.0); n + 1];
        c[n] = Complex64::new(1.0, 0.0);
        HomogeneousPoint { coords: c }
    }

    pub fn n(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    pub fn norm_form(&self) -> f64 {
        hermitian_form(&self.coords, &self.coords)
            .expect("same length")
            .re
    }

    pub fn is_negative(&self) -> bool {
        self.norm_form() < 0.0
    }

    fn require_negative(&self) -> Result<f64> {
        let q = self.norm_form();
        if q < 0.0 {
            Ok(q)
        } else {
            Err(Error::NotNegative(q))
        }
    }

    pub fn scaled(&self, lambda: Complex64) -> Self {
        HomogeneousPoint {
            coords: self.coords.iter().map(|c| c * lambda).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("finite floats serialize")
    }

    /// Reads a JSON array of `[re, im]` pairs.
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for HomogeneousPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = self.coords.iter().map(|c| [c.re, c.im]).collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomogeneousPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = Vec::<[f64; 2]>::deserialize(d)?;
        let coords: Vec<Complex64> = pairs.iter().map(|p| Complex64::new(p[0], p[1])).collect();
        if coords.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(serde::de::Error::custom("coordinates must be finite"));
        }
        HomogeneousPoint::new(coords).map_err(serde::de::Error::custom)
    }
}

impl FromStr for HomogeneousPoint {
    type Err = Error;

    /// Comma-separated complex literals, e.g. `0.5+0.1i,0,1`.
    fn from_str(s: &str) -> Result<Self> {
        HomogeneousPoint::new(parse_complex_list(s)?)
    }
}

/// Parses one complex literal: `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i`, with
/// optional exponents (`1e-3-2.5E+1i`).
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty complex literal".into()));
    }
    let bad = || Error::Parse(format!("invalid complex literal {t:?}"));
    let num = |x: &str| -> Result<f64> {
        // Rust accepts "inf"/"nan"; only plain decimal literals are allowed here.
        if x.is_empty() || x.chars().any(|c| c.is_ascii_alphabetic() && c != 'e' && c != 'E') {
            return Err(bad());
        }
        let v = f64::from_str(x).map_err(|_| bad())?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(bad())
        }
    };
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex64::new(num(t)?, 0.0));
    };
    // Split before the last sign that is neither leading nor part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&p| matches!(bytes[p], b'+' | b'-') && !matches!(bytes[p - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(p) => (num(&body[..p])?, &body[p..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => num(x)?,
    };
    Ok(Complex64::new(re, im))
}

pub fn parse_complex_list(s: &str) -> Result<Vec<Complex64>> {
    s.split(',').map(parse_complex).collect()
}

/// Slack below 1 in `cosh^2(rho/2)` that is clamped to 1 as rounding.
pub const Q_CLAMP: f64 = 1e-9;

/// Bergman distance `rho = 2 arccosh(sqrt(q))`,
/// `q = <z,w><w,z> / (<z,z><w,w>)`.
pub fn bergman_distance(z: &HomogeneousPoint, w: &HomogeneousPoint) -> Result<f64> {
    if z.n() != w.n() {
        return Err(Error::Shape {
            expected: format!("n = {}", z.n()),
            found: format!("n = {}", w.n()),
        });
    }
    let zz = z.require_negative()?;
    let ww = w.require_negative()?;
    let zw = hermitian_form(z.coords(), w.coords())?;
    let q = zw.norm_sqr() / (zz * ww);
    if q < 1.0 - Q_CLAMP || !q.is_finite() {
        return Err(Error::Numerical(format!(
            "cosh^2(rho/2) = {q} is below 1"
        )));
    }
    // |<z,w>|^2 - <z,z><w,w> = -sum_{i<j} e_i e_j |z_i w_j - z_j w_i|^2 avoids
    // cancellation near the diagonal.
    let (zc, wc) = (z.coords(), w.coords());
    let last = z.n();
    let mut excess = 0.0;
    for i in 0..=last {
        for j in i + 1..=last {
            let m = (zc[i] * wc[j] - zc[j] * wc[i]).norm_sqr();
            excess += if j == last { m } else { -m };
        }
    }
    let qm1 = (excess / (zz * ww)).max(0.0);
    // arccosh(s) = log1p((s - 1) + sqrt(s^2 - 1)) with s - 1 = (q - 1)/(s + 1)
    let s = q.max(1.0).sqrt();
    Ok(2.0 * (qm1 / (s + 1.0) + qm1.sqrt()).ln_1p())
}

/// `J = diag(1, .., 1, -1)` of size `n + 1`.
pub fn form_matrix(n: usize) -> DMatrix<Complex64> {
    DMatrix::from_fn(n + 1, n + 1, |r, c| {
        if r != c {
            Complex64::new(0.0, 0.0)
        } else if r == n {
            Complex64::new(-1.0, 0.0)
        } else {
            Complex64::new(1.0, 0.0)
        }
    })
}

/// Max-entry residual of `A J A* - J`.
pub fn isometry_residual(a: &DMatrix<Complex64>) -> f64 {
    let n = a.nrows() - 1;
    let j = form_matrix(n);
    (a * &j * a.adjoint() - j).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Taylor degree of the exponential kernel.
const EXP_DEGREE: usize = 18;
/// The kernel runs on `M / 2^s` with 1-norm at most this.
const EXP_THETA: f64 = 0.5;

/// Matrix exponential by scaling and squaring with a degree-18 Taylor kernel.
/// At `|A|_1 <= 1/2` the truncation error is below `0.5^19 / 19! < 1e-22`.
pub fn matrix_exp(m: &DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
    if m.nrows() != m.ncols() {
        return Err(Error::Shape {
            expected: "square matrix".into(),
            found: format!("{}x{}", m.nrows(), m.ncols()),
        });
    }
    if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Domain("matrix has non-finite entries".into()));
    }
    let size = m.nrows();
    let norm1 = (0..size)
        .map(|c| m.column(c).iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let squarings = if norm1 > EXP_THETA {
        (norm1 / EXP_THETA).log2().ceil() as i32
    } else {
        0
    };
    let a = m / Complex64::new(2f64.powi(squarings), 0.0);
    // Horner: I + A(I + A/2(I + A/3(...)))
    let id = DMatrix::<Complex64>::identity(size, size);
    let mut acc = id.clone();
    for k in (1..=EXP_DEGREE).rev() {
        acc = &id + (&a * acc) / Complex64::new(k as f64, 0.0);
    }
    for _ in 0..squarings {
        acc = &acc * &acc;
    }
    Ok(acc)
}

/// Tolerance on `A J A* = J` and `det A = 1` for generated isometries.
pub const ISOMETRY_TOL: f64 = 1e-9;

/// `exp(X)` for a seeded random `X` in su(n,1) with Frobenius norm at most
/// `magnitude`.
pub fn random_isometry(n: usize, seed: u64, magnitude: f64) -> Result<DMatrix<Complex64>> {
    check_dim(n)?;
    if !(magnitude.is_finite() && magnitude > 0.0) {
        return Err(Error::Input(format!("magnitude {magnitude} must be positive")));
    }
    let mut rng = sampling::rng(seed, 0x150);
    let d = n * n + 2 * n;
    let mut coeffs = sampling::normal_vec(&mut rng, d);
    let x = loop {
        let x = RealCoordinates { n, coeffs: coeffs.clone() }.reconstruct();
        let fro = x.matrix().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if fro > 0.0 {
            let radius: f64 = 1.0 - rand::Rng::random::<f64>(&mut rng);
            break x.scale(magnitude * radius / fro);
        }
        coeffs = sampling::normal_vec(&mut rng, d);
    };
    let a = matrix_exp(x.matrix())?;
    let resid = isometry_residual(&a);
    let det_err = (a.determinant() - Complex64::new(1.0, 0.0)).norm();
    if resid > ISOMETRY_TOL || det_err > ISOMETRY_TOL {
        return Err(Error::Numerical(format!(
            "exponential left SU(n,1): form residual {resid:e}, det error {det_err:e}"
        )));
    }
    Ok(a)
}

/// Form-invariance tolerance accepted by [`apply_isometry`].
pub const APPLY_TOL: f64 = 1e-8;

/// Acts on a lift by `z -> A z`.
pub fn apply_isometry(a: &DMatrix<Complex64>, z: &HomogeneousPoint) -> Result<HomogeneousPoint> {
    if a.nrows() != z.n() + 1 || a.ncols() != z.n() + 1 {
        return Err(Error::Shape {
            expected: format!("{0}x{0}", z.n() + 1),
            found: format!("{}x{}", a.nrows(), a.ncols()),
        });
    }
    let residual = isometry_residual(a);
    if !(residual < APPLY_TOL) {
        return Err(Error::InvalidIsometry { residual });
    }
    z.require_negative()?;
    let out = a * DVector::from_column_slice(z.coords());
    HomogeneousPoint::new(out.iter().copied().collect())
}
