//! Killing form, the canonical and scaled metrics, orthonormal frames, and
//! the operator-norm constants `C1`, `C2`.

use std::fmt;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::algebra::{cartan_split, AlgebraElement, BasisKind, CartanPart, RealCoordinates};
use crate::context::SuAlgebra;
use crate::error::{check_dim, Error, Result};
use crate::sampling;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricVariant {
    /// `-B` on K, `+B` on P.
    Canonical,
    /// The canonical metric divided by `n + 1`.
    Scaled,
}

/// Which inner product is in force. `scale` multiplies the `±B` rule.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricSpec {
    pub variant: MetricVariant,
    pub scale: f64,
}

impl MetricSpec {
    pub fn canonical() -> Self {
        MetricSpec {
            variant: MetricVariant::Canonical,
            scale: 1.0,
        }
    }

    pub fn scaled(n: usize) -> Self {
        MetricSpec {
            variant: MetricVariant::Scaled,
            scale: 1.0 / (n as f64 + 1.0),
        }
    }

    pub fn new(variant: MetricVariant, n: usize) -> Self {
        match variant {
            MetricVariant::Canonical => Self::canonical(),
            MetricVariant::Scaled => Self::scaled(n),
        }
    }

    /// Same variant tag with the scale multiplied by `factor`.
    pub fn rescaled(self, factor: f64) -> Self {
        MetricSpec {
            scale: self.scale * factor,
            ..self
        }
    }
}

impl fmt::Display for MetricSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variant {
            MetricVariant::Canonical => write!(f, "canonical"),
            MetricVariant::Scaled => write!(f, "scaled"),
        }
    }
}

fn same_n(x: &AlgebraElement, y: &AlgebraElement) -> Result<()> {
    if x.n() != y.n() {
        return Err(Error::Shape {
            expected: format!("n = {}", x.n()),
            found: format!("n = {}", y.n()),
        });
    }
    Ok(())
}

/// `B(X, Y) = tr(ad X ad Y)` with `ad` taken from the structure constants.
pub fn killing_form(x: &AlgebraElement, y: &AlgebraElement) -> Result<f64> {
    same_n(x, y)?;
    let alg = SuAlgebra::shared(x.n())?;
    let cx = alg.coords_of(x)?;
    let cy = alg.coords_of(y)?;
    Ok(killing_coords(&alg, &cx, &cy))
}

/// Trace-of-ad Killing form on coordinate vectors.
pub fn killing_coords(alg: &SuAlgebra, x: &[f64], y: &[f64]) -> f64 {
    let ax = alg.constants.ad_matrix(x);
    let ay = alg.constants.ad_matrix(y);
    // tr(A B) = sum_ij A_ij B_ji
    ax.component_mul(&ay.transpose()).sum()
}

/// `B(X, Y) = 2(n+1) Re tr(XY)`.
pub fn killing_form_closed(x: &AlgebraElement, y: &AlgebraElement) -> Result<f64> {
    same_n(x, y)?;
    x.check_membership()?;
    y.check_membership()?;
    Ok(killing_closed_unchecked(x, y))
}

fn killing_closed_unchecked(x: &AlgebraElement, y: &AlgebraElement) -> f64 {
    let n = x.n() as f64;
    2.0 * (n + 1.0) * (x.matrix() * y.matrix()).trace().re
}

/// `scale * (-B)` on K, `scale * B` on P, zero across parts.
pub fn inner_product(x: &AlgebraElement, y: &AlgebraElement, m: MetricSpec) -> Result<f64> {
    same_n(x, y)?;
    let (xk, xp) = cartan_split(x)?;
    let (yk, yp) = cartan_split(y)?;
    Ok(m.scale * (-killing_closed_unchecked(&xk, &yk) + killing_closed_unchecked(&xp, &yp)))
}

pub fn norm(x: &AlgebraElement, m: MetricSpec) -> Result<f64> {
    Ok(inner_product(x, x, m)?.max(0.0).sqrt())
}

/// Gram matrix of the standard basis.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GramMatrix {
    pub n: usize,
    pub metric: MetricSpec,
    pub entries: Vec<Vec<f64>>,
}

impl GramMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn to_matrix(&self) -> DMatrix<f64> {
        let d = self.dim();
        DMatrix::from_fn(d, d, |i, j| self.entries[i][j])
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.to_matrix()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }

    pub fn symmetry_residual(&self) -> f64 {
        let d = self.dim();
        let mut worst = 0.0f64;
        for i in 0..d {
            for j in 0..d {
                worst = worst.max((self.entries[i][j] - self.entries[j][i]).abs());
            }
        }
        worst
    }

    /// `x^T G y` for standard coordinates.
    pub fn inner(&self, x: &[f64], y: &[f64]) -> f64 {
        self.entries
            .iter()
            .zip(x)
            .map(|(row, xi)| xi * row.iter().zip(y).map(|(g, yj)| g * yj).sum::<f64>())
            .sum()
    }
}

/// Computes every entry from [`inner_product`]; nothing is assumed diagonal.
pub fn gram_matrix(n: usize, m: MetricSpec) -> Result<GramMatrix> {
    let alg = SuAlgebra::shared(n)?;
    let els: Vec<AlgebraElement> = alg
        .basis
        .indices()
        .iter()
        .map(|ix| AlgebraElement::basis(n, ix.kind))
        .collect();
    let d = els.len();
    let mut entries = vec![vec![0.0; d]; d];
    for i in 0..d {
        for j in i..d {
            let v = inner_product(&els[i], &els[j], m)?;
            entries[i][j] = v;
            entries[j][i] = v;
        }
    }
    Ok(GramMatrix { n, metric: m, entries })
}

/// Orthonormal frame adapted to the standard basis.
///
/// Every non-H basis vector is rescaled by its norm. The H block has Gram
/// matrix `2(n+1) scale (I + 11^T)`, so it is rotated onto the eigenbasis of
/// `I + 11^T`: the all-ones direction (eigenvalue `n+1`) first, then the
/// Helmert contrasts `(1,..,1,-k,0,..)/sqrt(k(k+1))` (eigenvalue 1).
#[derive(Clone, Debug, PartialEq)]
pub struct OrthonormalFrame {
    pub n: usize,
    pub metric: MetricSpec,
    /// Frame vectors in standard coordinates.
    pub frame: Vec<RealCoordinates>,
    /// Maps standard coordinates to frame coordinates.
    pub change_of_basis: DMatrix<f64>,
    /// Columns are the frame vectors (inverse of `change_of_basis`).
    pub frame_matrix: DMatrix<f64>,
    /// Cartan part of each frame vector.
    pub parts: Vec<CartanPart>,
}

impl OrthonormalFrame {
    pub fn dim(&self) -> usize {
        self.parts.len()
    }

    pub fn to_frame(&self, std: &[f64]) -> Vec<f64> {
        (&self.change_of_basis * DVector::from_column_slice(std))
            .iter()
            .copied()
            .collect()
    }

    pub fn from_frame(&self, coords: &[f64]) -> Vec<f64> {
        (&self.frame_matrix * DVector::from_column_slice(coords))
            .iter()
            .copied()
            .collect()
    }

    /// Frame indices in the given Cartan part.
    pub fn indices_of(&self, part: CartanPart) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parts[i] == part).collect()
    }
}

pub fn orthonormal_frame(n: usize, m: MetricSpec) -> Result<OrthonormalFrame> {
    check_dim(n)?;
    let alg = SuAlgebra::shared(n)?;
    let basis = &alg.basis;
    let d = basis.dim();
    let np1 = n as f64 + 1.0;
    // Squared norm of every standard basis vector.
    let diag = 4.0 * np1 * m.scale;
    let h_unit = 2.0 * np1 * m.scale;

    let mut fm = DMatrix::<f64>::zeros(d, d);
    let mut cob = DMatrix::<f64>::zeros(d, d);
    for ix in basis.indices() {
        if !matches!(ix.kind, BasisKind::H(_)) {
            fm[(ix.ordinal, ix.ordinal)] = 1.0 / diag.sqrt();
            cob[(ix.ordinal, ix.ordinal)] = diag.sqrt();
        }
    }
    // Orthonormal eigenvectors of I + 11^T, as columns of u.
    let h0 = basis.h_range().start;
    let mut u = DMatrix::<f64>::zeros(n, n);
    let mut eig = vec![1.0; n];
    eig[0] = np1;
    for j in 0..n {
        u[(j, 0)] = 1.0 / (n as f64).sqrt();
    }
    for k in 1..n {
        let kf = k as f64;
        let s = (kf * (kf + 1.0)).sqrt();
        for j in 0..k {
            u[(j, k)] = 1.0 / s;
        }
        u[(k, k)] = -kf / s;
    }
    for col in 0..n {
        let len = (h_unit * eig[col]).sqrt();
        for row in 0..n {
            fm[(h0 + row, h0 + col)] = u[(row, col)] / len;
            cob[(h0 + col, h0 + row)] = u[(row, col)] * len;
        }
    }
    let frame = (0..d)
        .map(|c| RealCoordinates {
            n,
            coeffs: fm.column(c).iter().copied().collect(),
        })
        .collect();
    let parts = (0..d).map(|i| basis.part(i)).collect();
    Ok(OrthonormalFrame {
        n,
        metric: m,
        frame,
        change_of_basis: cob,
        frame_matrix: fm,
        parts,
    })
}

/// Structure constants re-expressed in an orthonormal frame.
#[derive(Clone, Debug)]
pub struct FrameStructure {
    pub frame: OrthonormalFrame,
    dim: usize,
    /// Nonzero `(c, value)` of `[f_a, f_b]` for each `a * dim + b`.
    terms: Vec<Vec<(usize, f64)>>,
}

/// Frame constants below this magnitude are rounding noise from the H-block rotation.
const FRAME_ZERO: f64 = 1e-14;

impl FrameStructure {
    pub fn new(n: usize, m: MetricSpec) -> Result<Self> {
        let frame = orthonormal_frame(n, m)?;
        let alg = SuAlgebra::shared(n)?;
        let d = frame.dim();
        let mut terms = Vec::with_capacity(d * d);
        for a in 0..d {
            for b in 0..d {
                let std = alg
                    .constants
                    .bracket_coords(&frame.frame[a].coeffs, &frame.frame[b].coeffs);
                let fc = frame.to_frame(&std);
                terms.push(
                    fc.into_iter()
                        .enumerate()
                        .filter(|(_, v)| v.abs() > FRAME_ZERO)
                        .collect(),
                );
            }
        }
        Ok(FrameStructure { frame, dim: d, terms })
    }

    pub fn n(&self) -> usize {
        self.frame.n
    }

    pub fn metric(&self) -> MetricSpec {
        self.frame.metric
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn part(&self, a: usize) -> CartanPart {
        self.frame.parts[a]
    }

    pub fn terms(&self, a: usize, b: usize) -> &[(usize, f64)] {
        &self.terms[a * self.dim + b]
    }

    pub fn constant(&self, a: usize, b: usize, c: usize) -> f64 {
        self.terms(a, b)
            .iter()
            .find(|(k, _)| *k == c)
            .map_or(0.0, |(_, v)| *v)
    }

    /// Bracket of two frame-coordinate vectors.
    pub fn bracket(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        for (a, &xa) in x.iter().enumerate() {
            if xa == 0.0 {
                continue;
            }
            for (b, &yb) in y.iter().enumerate() {
                if yb == 0.0 {
                    continue;
                }
                for &(c, v) in self.terms(a, b) {
                    out[c] += xa * yb * v;
                }
            }
        }
        out
    }

    /// Matrix of `ad X` in the frame; orthonormality makes its spectral norm
    /// the metric operator norm.
    pub fn ad_matrix(&self, x: &[f64]) -> DMatrix<f64> {
        let d = self.dim;
        let mut ad = DMatrix::zeros(d, d);
        for (a, &xa) in x.iter().enumerate() {
            if xa == 0.0 {
                continue;
            }
            for b in 0..d {
                for &(c, v) in self.terms(a, b) {
                    ad[(c, b)] += xa * v;
                }
            }
        }
        ad
    }

    /// Frame coordinates of an algebra element.
    pub fn coords_of(&self, x: &AlgebraElement) -> Result<Vec<f64>> {
        let alg = SuAlgebra::shared(self.n())?;
        Ok(self.frame.to_frame(&alg.coords_of(x)?))
    }
}

/// Top singular triple via the symmetric eigenproblem of `A^T A`. nalgebra's
/// SVD with vectors requested returns wrong factors on some of these
/// rank-deficient ad matrices.
fn spectral_norm_with_vectors(a: &DMatrix<f64>) -> (f64, DVector<f64>, DVector<f64>) {
    let eig = (a.transpose() * a).symmetric_eigen();
    let (idx, &lambda) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.total_cmp(y.1))
        .expect("nonempty matrix");
    let s = lambda.max(0.0).sqrt();
    let v = eig.eigenvectors.column(idx).into_owned();
    let u = if s > 0.0 {
        a * &v / s
    } else {
        DVector::zeros(a.nrows())
    };
    (s, u, v)
}

/// `N(ad X) = sup { |[X, Y]| : |Y| = 1 }`, the largest singular value of
/// `ad X` in an orthonormal frame.
pub fn ad_operator_norm(x: &AlgebraElement, m: MetricSpec) -> Result<f64> {
    let fs = FrameStructure::new(x.n(), m)?;
    let coords = fs.coords_of(x)?;
    Ok(ad_norm_frame(&fs, &coords))
}

pub fn ad_norm_frame(fs: &FrameStructure, coords: &[f64]) -> f64 {
    if coords.iter().all(|&c| c == 0.0) {
        return 0.0;
    }
    spectral_norm_with_vectors(&fs.ad_matrix(coords)).0
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WangConstants {
    /// Sup of `N(ad X)` over unit `X` in P.
    pub c1: f64,
    /// Sup of `N(ad X)` over unit `X` in K.
    pub c2: f64,
}

/// Number of best starting points that get refined.
const REFINE_STARTS: usize = 6;
const REFINE_ITERS: usize = 200;

/// Best value of `N(ad X)` over unit `X` in one Cartan part.
///
/// Candidates are every frame vector of the part plus `samples` Gaussian
/// directions; the best few are polished by projected gradient ascent on the
/// unit sphere, using `d sigma = u^T (d A) v` for the top singular pair.
pub fn sup_ad_norm(fs: &FrameStructure, part: CartanPart, samples: usize, seed: u64) -> f64 {
    let idx = fs.frame.indices_of(part);
    let q = idx.len();
    let d = fs.dim();
    let gens: Vec<DMatrix<f64>> = idx
        .iter()
        .map(|&a| {
            let mut e = vec![0.0; d];
            e[a] = 1.0;
            fs.ad_matrix(&e)
        })
        .collect();
    let assemble = |v: &[f64]| {
        let mut m = DMatrix::zeros(d, d);
        for (g, &c) in gens.iter().zip(v) {
            if c != 0.0 {
                m += g * c;
            }
        }
        m
    };
    let value = |v: &[f64]| spectral_norm_with_vectors(&assemble(v)).0;

    let mut starts: Vec<(f64, Vec<f64>)> = (0..q)
        .map(|i| {
            let mut v = vec![0.0; q];
            v[i] = 1.0;
            (value(&v), v)
        })
        .collect();
    let stream = match part {
        CartanPart::P => 1,
        CartanPart::K => 2,
    };
    let mut rng = sampling::rng(seed, stream);
    for _ in 0..samples {
        let mut v = sampling::normal_vec(&mut rng, q);
        if sampling::normalize(&mut v) == 0.0 {
            continue;
        }
        starts.push((value(&v), v));
    }
    starts.sort_by(|a, b| b.0.total_cmp(&a.0));
    let mut best = starts.first().map_or(0.0, |s| s.0);

    for (mut val, mut v) in starts.into_iter().take(REFINE_STARTS) {
        let mut step = 0.5;
        for _ in 0..REFINE_ITERS {
            let (_, u, w) = spectral_norm_with_vectors(&assemble(&v));
            let grad: Vec<f64> = gens.iter().map(|g| u.dot(&(g * &w))).collect();
            let radial: f64 = grad.iter().zip(&v).map(|(g, x)| g * x).sum();
            let tangent: Vec<f64> = grad.iter().zip(&v).map(|(g, x)| g - radial * x).collect();
            if tangent.iter().map(|t| t * t).sum::<f64>().sqrt() < 1e-13 {
                break;
            }
            let mut improved = false;
            while step > 1e-12 {
                let mut cand: Vec<f64> = v.iter().zip(&tangent).map(|(x, t)| x + step * t).collect();
                sampling::normalize(&mut cand);
                let cv = value(&cand);
                if cv > val {
                    v = cand;
                    val = cv;
                    improved = true;
                    step *= 2.0;
                    break;
                }
                step *= 0.5;
            }
            if !improved {
                break;
            }
        }
        best = f64::max(best, val);
    }
    best
}

/// Computes `C1` and `C2` as certified lower bounds on their suprema.
pub fn wang_constants(n: usize, m: MetricSpec, samples: usize, seed: u64) -> Result<WangConstants> {
    check_dim(n)?;
    if samples == 0 {
        return Err(Error::Input("samples must be at least 1".into()));
    }
    if !(m.scale.is_finite() && m.scale > 0.0) {
        return Err(Error::Input(format!("metric scale {} must be positive", m.scale)));
    }
    let fs = FrameStructure::new(n, m)?;
    Ok(WangConstants {
        c1: sup_ad_norm(&fs, CartanPart::P, samples, seed),
        c2: sup_ad_norm(&fs, CartanPart::K, samples, seed),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BasisKind;

    fn el(n: usize, k: BasisKind) -> AlgebraElement {
        AlgebraElement::basis(n, k)
    }

    #[test]
    fn killing_on_basis_elements() {
        for n in 1..=4 {
            let np1 = n as f64 + 1.0;
            let h1 = el(n, BasisKind::H(1));
            let b1 = el(n, BasisKind::BetaP(1));
            assert!((killing_form(&h1, &h1).unwrap() + 4.0 * np1).abs() < 1e-12);
            assert!((killing_form(&b1, &b1).unwrap() - 4.0 * np1).abs() < 1e-12);
            assert!((killing_form_closed(&h1, &h1).unwrap() + 4.0 * np1).abs() < 1e-12);
        }
    }

    #[test]
    fn inner_product_examples() {
        let n = 3;
        let h1 = el(n, BasisKind::H(1));
        let b1 = el(n, BasisKind::BetaP(1));
        assert_eq!(inner_product(&h1, &h1, MetricSpec::canonical()).unwrap(), 16.0);
        assert!((inner_product(&b1, &b1, MetricSpec::scaled(n)).unwrap() - 4.0).abs() < 1e-14);
        assert_eq!(inner_product(&h1, &b1, MetricSpec::canonical()).unwrap(), 0.0);
    }

    #[test]
    fn gram_n1_is_diagonal_eight() {
        let g = gram_matrix(1, MetricSpec::canonical()).unwrap();
        assert_eq!(g.entries, vec![vec![8.0, 0.0, 0.0], vec![0.0, 8.0, 0.0], vec![0.0, 0.0, 8.0]]);
    }

    #[test]
    fn gram_n2_h_block_is_not_diagonal() {
        let b = crate::algebra::Basis::new(2).unwrap();
        let h1 = b.ordinal(BasisKind::H(1)).unwrap();
        let h2 = b.ordinal(BasisKind::H(2)).unwrap();
        let g = gram_matrix(2, MetricSpec::canonical()).unwrap();
        assert_eq!(g.entries[h1][h2], 6.0);
        assert!((0..8).all(|i| g.entries[i][i] == 12.0));
        let gs = gram_matrix(2, MetricSpec::scaled(2)).unwrap();
        assert!((gs.entries[h1][h2] - 2.0).abs() < 1e-14);
        assert!((0..8).all(|i| (gs.entries[i][i] - 4.0).abs() < 1e-14));
    }

    #[test]
    fn frame_n1_scaled_is_half_basis() {
        let f = orthonormal_frame(1, MetricSpec::scaled(1)).unwrap();
        for (i, v) in f.frame.iter().enumerate() {
            let mut expect = vec![0.0; 3];
            expect[i] = 0.5;
            for (a, b) in v.coeffs.iter().zip(&expect) {
                assert!((a - b).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn frame_is_orthonormal_and_inverse() {
        for n in 1..=5 {
            for m in [MetricSpec::canonical(), MetricSpec::scaled(n)] {
                let f = orthonormal_frame(n, m).unwrap();
                let g = gram_matrix(n, m).unwrap().to_matrix();
                let gf = f.frame_matrix.transpose() * &g * &f.frame_matrix;
                let id = DMatrix::<f64>::identity(f.dim(), f.dim());
                assert!((gf - &id).amax() < 1e-12, "n = {n}");
                assert!((&f.change_of_basis * &f.frame_matrix - id).amax() < 1e-12);
            }
        }
    }

    #[test]
    fn frame_respects_cartan_split() {
        let f = orthonormal_frame(3, MetricSpec::scaled(3)).unwrap();
        let basis = crate::algebra::Basis::new(3).unwrap();
        for (v, &part) in f.frame.iter().zip(&f.parts) {
            for (i, &c) in v.coeffs.iter().enumerate() {
                if c != 0.0 {
                    assert_eq!(basis.part(i), part);
                }
            }
        }
    }

    #[test]
    fn ad_norm_of_unit_beta_is_one() {
        for n in 1..=3 {
            let x = el(n, BasisKind::BetaP(1)).scale(0.5);
            let v = ad_operator_norm(&x, MetricSpec::scaled(n)).unwrap();
            assert!((v - 1.0).abs() < 1e-12, "n = {n}: {v}");
            assert_eq!(ad_operator_norm(&AlgebraElement::zeros(n), MetricSpec::scaled(n)).unwrap(), 0.0);
            let v3 = ad_operator_norm(&x.scale(-3.0), MetricSpec::scaled(n)).unwrap();
            assert!((v3 - 3.0 * v).abs() < 1e-12);
        }
    }

    #[test]
    fn wang_constants_scaled_and_canonical() {
        let w = wang_constants(2, MetricSpec::scaled(2), 16, 7).unwrap();
        assert!((w.c1 - 1.0).abs() < 1e-3 && (w.c2 - 1.0).abs() < 1e-3, "{w:?}");
        let w = wang_constants(3, MetricSpec::canonical(), 16, 7).unwrap();
        assert!((w.c1 - 0.5).abs() < 1e-3 && (w.c2 - 0.5).abs() < 1e-3, "{w:?}");
    }

    #[test]
    fn wang_constants_scale_covariance() {
        let m = MetricSpec::scaled(2);
        let a = wang_constants(2, m, 8, 3).unwrap();
        let b = wang_constants(2, m.rescaled(0.5), 8, 3).unwrap();
        assert!((b.c1 - a.c1 * 2f64.sqrt()).abs() < 1e-9);
        assert!((b.c2 - a.c2 * 2f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn wang_constants_input_errors() {
        assert!(matches!(
            wang_constants(2, MetricSpec::scaled(2), 0, 1),
            Err(Error::Input(_))
        ));
        assert!(wang_constants(0, MetricSpec::canonical(), 1, 1).is_err());
    }

    #[test]
    fn ad_norm_is_constant_on_unit_p() {
        // K acts transitively on the unit sphere of P.
        for n in 1..=4 {
            let fs = FrameStructure::new(n, MetricSpec::scaled(n)).unwrap();
            let idx = fs.frame.indices_of(CartanPart::P);
            let mut rng = sampling::rng(11, n as u64);
            for _ in 0..200 {
                let mut v = sampling::normal_vec(&mut rng, idx.len());
                sampling::normalize(&mut v);
                let mut x = vec![0.0; fs.dim()];
                for (k, &i) in idx.iter().enumerate() {
                    x[i] = v[k];
                }
                assert!((ad_norm_frame(&fs, &x) - 1.0).abs() < 1e-12, "n = {n}");
            }
        }
    }
}
