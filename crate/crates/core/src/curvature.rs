//! Levi-Civita connection and curvature of the left-invariant metrics on
//! SU(n,1), computed in an orthonormal frame from the Koszul formula.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::algebra::{bracket, AlgebraElement, Basis, BasisKind, CartanPart, RealCoordinates};
use crate::error::{check_dim, Error, Result};
use crate::metric::{FrameStructure, MetricSpec};
use crate::sampling;

/// `gamma[(a * d + b) * d + c] = <nabla_{f_a} f_b, f_c>`.
#[derive(Clone, Debug)]
pub struct ConnectionCoefficients {
    pub n: usize,
    pub metric: MetricSpec,
    dim: usize,
    gamma: Vec<f64>,
    sparse: Vec<Vec<(usize, f64)>>,
}

impl ConnectionCoefficients {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, a: usize, b: usize, c: usize) -> f64 {
        self.gamma[(a * self.dim + b) * self.dim + c]
    }

    /// `nabla_X Y` for frame-coordinate vectors.
    pub fn nabla(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        for (a, &xa) in x.iter().enumerate() {
            if xa == 0.0 {
                continue;
            }
            for (b, &yb) in y.iter().enumerate() {
                if yb == 0.0 {
                    continue;
                }
                for &(c, g) in &self.sparse[a * self.dim + b] {
                    out[c] += xa * yb * g;
                }
            }
        }
        out
    }

    /// Operator `Y -> nabla_{f_a} Y` as a matrix acting on frame coordinates.
    fn operator(&self, a: usize) -> DMatrix<f64> {
        let d = self.dim;
        DMatrix::from_fn(d, d, |c, b| self.get(a, b, c))
    }
}

/// Koszul formula for left-invariant fields in an orthonormal frame:
/// `<nabla_a f_b, f_c> = (c_ab^c - c_ac^b - c_bc^a) / 2`.
pub fn levi_civita(n: usize, m: MetricSpec) -> Result<ConnectionCoefficients> {
    let fs = FrameStructure::new(n, m)?;
    Ok(connection_from(&fs))
}

fn connection_from(fs: &FrameStructure) -> ConnectionCoefficients {
    let d = fs.dim();
    let mut gamma = vec![0.0; d * d * d];
    for a in 0..d {
        for b in 0..d {
            for &(c, v) in fs.terms(a, b) {
                gamma[(a * d + b) * d + c] += 0.5 * v;
            }
            // -c_ab^x contributes to <nabla_a f_x, f_b> with x = c
            for &(x, v) in fs.terms(a, b) {
                gamma[(a * d + x) * d + b] -= 0.5 * v;
            }
            // -c_ab^x contributes to <nabla_x f_a, f_b>
            for &(x, v) in fs.terms(a, b) {
                gamma[(x * d + a) * d + b] -= 0.5 * v;
            }
        }
    }
    let sparse = (0..d * d)
        .map(|ab| {
            (0..d)
                .filter_map(|c| {
                    let g = gamma[ab * d + c];
                    (g != 0.0).then_some((c, g))
                })
                .collect()
        })
        .collect();
    ConnectionCoefficients {
        n: fs.n(),
        metric: fs.metric(),
        dim: d,
        gamma,
        sparse,
    }
}

/// Frame structure and connection for one `(n, metric)`.
#[derive(Debug)]
pub struct LieGeometry {
    pub structure: FrameStructure,
    pub connection: ConnectionCoefficients,
}

impl LieGeometry {
    pub fn new(n: usize, m: MetricSpec) -> Result<Self> {
        let structure = FrameStructure::new(n, m)?;
        let connection = connection_from(&structure);
        Ok(LieGeometry {
            structure,
            connection,
        })
    }

    /// Shared instance, built once per `(n, metric)`.
    pub fn shared(n: usize, m: MetricSpec) -> Result<Arc<LieGeometry>> {
        type Key = (usize, u64);
        static CACHE: OnceLock<Mutex<BTreeMap<Key, Arc<LieGeometry>>>> = OnceLock::new();
        check_dim(n)?;
        let key = (n, m.scale.to_bits());
        let cache = CACHE.get_or_init(Default::default);
        if let Some(g) = cache.lock().expect("cache poisoned").get(&key) {
            return Ok(Arc::clone(g));
        }
        let built = Arc::new(LieGeometry::new(n, m)?);
        let mut guard = cache.lock().expect("cache poisoned");
        Ok(Arc::clone(guard.entry(key).or_insert(built)))
    }

    pub fn n(&self) -> usize {
        self.structure.n()
    }

    pub fn metric(&self) -> MetricSpec {
        self.structure.metric()
    }

    pub fn dim(&self) -> usize {
        self.structure.dim()
    }

    pub fn bracket(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        self.structure.bracket(x, y)
    }

    pub fn nabla(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        self.connection.nabla(x, y)
    }

    /// `R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z`.
    pub fn curvature(&self, x: &[f64], y: &[f64], z: &[f64]) -> Vec<f64> {
        let a = self.nabla(x, &self.nabla(y, z));
        let b = self.nabla(y, &self.nabla(x, z));
        let c = self.nabla(&self.bracket(x, y), z);
        a.iter().zip(&b).zip(&c).map(|((a, b), c)| a - b - c).collect()
    }

    /// `<R(X,Y)Y, X>` in frame coordinates.
    pub fn curvature_form(&self, x: &[f64], y: &[f64]) -> f64 {
        dot(&self.curvature(x, y, y), x)
    }

    /// Sectional curvature of the plane spanned by two frame vectors.
    pub fn sectional(&self, x: &[f64], y: &[f64]) -> Result<f64> {
        let xx = dot(x, x);
        let yy = dot(y, y);
        let xy = dot(x, y);
        let area = xx * yy - xy * xy;
        let threshold = DEGENERATE_REL * xx * yy;
        if !(area > threshold) {
            return Err(Error::DegeneratePlane { area, threshold });
        }
        Ok(self.curvature_form(x, y) / area)
    }

    /// Frame coordinates of an algebra element.
    pub fn coords_of(&self, x: &AlgebraElement) -> Result<Vec<f64>> {
        self.structure.coords_of(x)
    }

    pub fn to_element(&self, frame_coords: &[f64]) -> AlgebraElement {
        let std = self.structure.frame.from_frame(frame_coords);
        RealCoordinates {
            n: self.n(),
            coeffs: std,
        }
        .reconstruct()
    }

    /// Squared norm of the K component of a frame vector.
    pub fn vertical_norm_sq(&self, v: &[f64]) -> f64 {
        v.iter()
            .enumerate()
            .filter(|(a, _)| self.structure.part(*a) == CartanPart::K)
            .map(|(_, x)| x * x)
            .sum()
    }
}

pub(crate) fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// Planes with `area < DEGENERATE_REL * |X|^2 |Y|^2` are rejected.
pub const DEGENERATE_REL: f64 = 1e-14;

/// `R[((i * d + j) * d + k) * d + l] = <R(f_i, f_j) f_k, f_l>`.
#[derive(Clone, Debug)]
pub struct CurvatureTensor {
    pub n: usize,
    pub metric: MetricSpec,
    dim: usize,
    r: Vec<f64>,
}

/// Residuals of the algebraic symmetries of a curvature tensor.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct TensorSymmetry {
    pub antisym_ij: f64,
    pub antisym_kl: f64,
    pub pair: f64,
    pub bianchi: f64,
}

impl TensorSymmetry {
    pub fn max(&self) -> f64 {
        self.antisym_ij
            .max(self.antisym_kl)
            .max(self.pair)
            .max(self.bianchi)
    }
}

impl CurvatureTensor {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        let d = self.dim;
        self.r[((i * d + j) * d + k) * d + l]
    }

    /// `<R(X,Y)Z, W>` by full contraction.
    pub fn contract(&self, x: &[f64], y: &[f64], z: &[f64], w: &[f64]) -> f64 {
        let d = self.dim;
        let mut total = 0.0;
        for i in 0..d {
            if x[i] == 0.0 {
                continue;
            }
            for j in 0..d {
                if y[j] == 0.0 {
                    continue;
                }
                let xy = x[i] * y[j];
                for k in 0..d {
                    if z[k] == 0.0 {
                        continue;
                    }
                    let base = ((i * d + j) * d + k) * d;
                    let s: f64 = self.r[base..base + d].iter().zip(w).map(|(r, w)| r * w).sum();
                    total += xy * z[k] * s;
                }
            }
        }
        total
    }

    pub fn symmetry_residuals(&self) -> TensorSymmetry {
        let d = self.dim;
        let mut s = TensorSymmetry::default();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let v = self.get(i, j, k, l);
                        s.antisym_ij = s.antisym_ij.max((v + self.get(j, i, k, l)).abs());
                        s.antisym_kl = s.antisym_kl.max((v + self.get(i, j, l, k)).abs());
                        s.pair = s.pair.max((v - self.get(k, l, i, j)).abs());
                        let b = v + self.get(j, k, i, l) + self.get(k, i, j, l);
                        s.bianchi = s.bianchi.max(b.abs());
                    }
                }
            }
        }
        s
    }
}

/// Full curvature tensor over the orthonormal frame.
pub fn curvature_tensor(n: usize, m: MetricSpec) -> Result<CurvatureTensor> {
    let geo = LieGeometry::shared(n, m)?;
    Ok(tensor_from(&geo))
}

fn tensor_from(geo: &LieGeometry) -> CurvatureTensor {
    let d = geo.dim();
    let conn = &geo.connection;
    let ops: Vec<DMatrix<f64>> = (0..d).map(|a| conn.operator(a)).collect();
    let mut r = vec![0.0; d * d * d * d];
    for i in 0..d {
        for j in 0..d {
            let mut op = &ops[i] * &ops[j] - &ops[j] * &ops[i];
            for &(c, v) in geo.structure.terms(i, j) {
                op -= &ops[c] * v;
            }
            // op[(l, k)] = <R(f_i, f_j) f_k, f_l>
            for k in 0..d {
                for l in 0..d {
                    r[((i * d + j) * d + k) * d + l] = op[(l, k)];
                }
            }
        }
    }
    CurvatureTensor {
        n: geo.n(),
        metric: geo.metric(),
        dim: d,
        r,
    }
}

/// Which bracket expression to evaluate; `U, V, W` lie in K and `X, Y, Z` in P.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClosedFormCase {
    /// `R(U,V)W = 1/4 [[V,U],W]`
    Kkk,
    /// `R(X,Y)Z = -7/4 [[X,Y],Z]`
    Ppp,
    /// `R(U,X)Y = 1/4 [[X,U],Y] - 1/2 [[Y,U],X]`
    Kpp,
    /// `R(X,Y)V = 3/4 [X,[V,Y]] + 3/4 [Y,[X,V]]`
    Ppk,
}

impl ClosedFormCase {
    pub const ALL: [ClosedFormCase; 4] = [Self::Kkk, Self::Ppp, Self::Kpp, Self::Ppk];

    pub fn parts(self) -> [CartanPart; 3] {
        use CartanPart::{K, P};
        match self {
            Self::Kkk => [K, K, K],
            Self::Ppp => [P, P, P],
            Self::Kpp => [K, P, P],
            Self::Ppk => [P, P, K],
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Self::Kkk => "R(U,V)W",
            Self::Ppp => "R(X,Y)Z",
            Self::Kpp => "R(U,X)Y",
            Self::Ppk => "R(X,Y)V",
        }
    }
}

/// Rejects an element with a nonzero component outside `part`.
fn require_part(x: &AlgebraElement, part: CartanPart, what: &str) -> Result<()> {
    let coords = crate::algebra::decompose(x)?;
    let basis = Basis::new(x.n())?;
    let tol = 1e-12 * coords.max_abs().max(1.0);
    let stray = coords
        .coeffs
        .iter()
        .enumerate()
        .filter(|(i, _)| basis.part(*i) != part)
        .map(|(_, c)| c.abs())
        .fold(0.0, f64::max);
    if stray > tol {
        return Err(Error::Precondition(format!(
            "{what} must lie in {part:?}; its other component has size {stray:e}"
        )));
    }
    Ok(())
}

/// Evaluates the bracket formula for `case` by matrix arithmetic.
pub fn closed_form_curvature(
    case: ClosedFormCase,
    a: &AlgebraElement,
    b: &AlgebraElement,
    c: &AlgebraElement,
) -> Result<AlgebraElement> {
    for (el, (part, name)) in [a, b, c]
        .into_iter()
        .zip(case.parts().into_iter().zip(["first", "second", "third"]))
    {
        require_part(el, part, &format!("{name} argument of {}", case.label()))?;
    }
    let br = |x: &AlgebraElement, y: &AlgebraElement| bracket(x, y);
    Ok(match case {
        ClosedFormCase::Kkk => br(&br(b, a)?, c)?.scale(0.25),
        ClosedFormCase::Ppp => br(&br(a, b)?, c)?.scale(-1.75),
        ClosedFormCase::Kpp => {
            &br(&br(b, a)?, c)?.scale(0.25) - &br(&br(c, a)?, b)?.scale(0.5)
        }
        ClosedFormCase::Ppk => &br(a, &br(c, b)?)?.scale(0.75) + &br(b, &br(a, c)?)?.scale(0.75),
    })
}

/// `R(X,Y)Z` from the Koszul connection, as an algebra element.
pub fn koszul_curvature(
    x: &AlgebraElement,
    y: &AlgebraElement,
    z: &AlgebraElement,
    m: MetricSpec,
) -> Result<AlgebraElement> {
    let geo = LieGeometry::shared(x.n(), m)?;
    let (cx, cy, cz) = (geo.coords_of(x)?, geo.coords_of(y)?, geo.coords_of(z)?);
    Ok(geo.to_element(&geo.curvature(&cx, &cy, &cz)))
}

/// `K(X,Y) = <R(X,Y)Y,X> / (|X|^2 |Y|^2 - <X,Y>^2)`.
pub fn sectional_curvature(x: &AlgebraElement, y: &AlgebraElement, m: MetricSpec) -> Result<f64> {
    if x.n() != y.n() {
        return Err(Error::Shape {
            expected: format!("n = {}", x.n()),
            found: format!("n = {}", y.n()),
        });
    }
    let geo = LieGeometry::shared(x.n(), m)?;
    geo.sectional(&geo.coords_of(x)?, &geo.coords_of(y)?)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisPlaneMax {
    pub max: f64,
    /// Unordered basis pairs attaining the maximum (within 1e-12).
    pub attained_by: Vec<(BasisKind, BasisKind)>,
}

/// Largest sectional curvature over planes spanned by two distinct standard
/// basis elements, under the scaled metric. H-H planes use the full
/// denominator since distinct `h_j` are not orthogonal.
pub fn basis_plane_max(n: usize) -> Result<BasisPlaneMax> {
    let geo = LieGeometry::shared(n, MetricSpec::scaled(n))?;
    let basis = Basis::new(n)?;
    let d = basis.dim();
    let cols: Vec<Vec<f64>> = (0..d)
        .map(|i| geo.structure.frame.to_frame(&RealCoordinates::unit(n, i).coeffs))
        .collect();
    let mut vals = Vec::with_capacity(d * (d - 1) / 2);
    for i in 0..d {
        for j in i + 1..d {
            vals.push((geo.sectional(&cols[i], &cols[j])?, i, j));
        }
    }
    let max = vals.iter().map(|v| v.0).fold(f64::NEG_INFINITY, f64::max);
    let attained_by = vals
        .iter()
        .filter(|v| (v.0 - max).abs() <= 1e-12)
        .map(|&(_, i, j)| (basis.kind(i), basis.kind(j)))
        .collect();
    Ok(BasisPlaneMax { max, attained_by })
}

/// `(36n + 21) / 4`.
pub fn sectional_upper_bound(n: usize) -> f64 {
    (36.0 * n as f64 + 21.0) / 4.0
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundSample {
    pub max_found: f64,
    pub min_found: f64,
    pub bound: f64,
    pub within_bound: bool,
    /// Random planes plus basis planes.
    pub planes: u64,
}

/// Samples random planes (two Gaussian frame vectors, orthonormalized) plus
/// every basis plane under the scaled metric and compares the largest
/// sectional curvature with `(36n + 21) / 4`.
pub fn sectional_bound_sample(n: usize, trials: usize, seed: u64) -> Result<BoundSample> {
    if trials == 0 {
        return Err(Error::Input("trials must be at least 1".into()));
    }
    let geo = LieGeometry::shared(n, MetricSpec::scaled(n))?;
    let d = geo.dim();
    let bp = basis_plane_max(n)?;
    let mut max_found = bp.max;
    let mut min_found = f64::INFINITY;
    let mut rng = sampling::rng(seed, 0x5ec);
    let mut planes = (d * (d - 1) / 2) as u64;
    for _ in 0..trials {
        let mut u = sampling::normal_vec(&mut rng, d);
        let mut v = sampling::normal_vec(&mut rng, d);
        sampling::normalize(&mut u);
        let p = dot(&u, &v);
        v.iter_mut().zip(&u).for_each(|(v, u)| *v -= p * u);
        if sampling::normalize(&mut v) < 1e-8 {
            continue;
        }
        let k = geo.curvature_form(&u, &v);
        max_found = max_found.max(k);
        min_found = min_found.min(k);
        planes += 1;
    }
    let bound = sectional_upper_bound(n);
    Ok(BoundSample {
        max_found,
        min_found,
        bound,
        within_bound: max_found <= bound + 1e-9,
        planes,
    })
}

/// Complex structure on P: `sum(a_j i alpha_j + b_j beta_j)` maps to
/// `sum(-b_j i alpha_j + a_j beta_j)`.
pub fn complex_structure(x: &AlgebraElement) -> Result<AlgebraElement> {
    require_part(x, CartanPart::P, "argument of J")?;
    let n = x.n();
    let basis = Basis::new(n)?;
    let c = crate::algebra::decompose(x)?;
    let mut out = RealCoordinates::zeros(n);
    for j in 1..=n {
        let ia = basis.ordinal(BasisKind::IAlphaP(j)).expect("valid index");
        let be = basis.ordinal(BasisKind::BetaP(j)).expect("valid index");
        out.coeffs[ia] = -c.coeffs[be];
        out.coeffs[be] = c.coeffs[ia];
    }
    Ok(out.reconstruct())
}

/// Sectional curvature on the quotient SU(n,1)/U(n) of the plane spanned by
/// `X, Y` in P, via O'Neill: `K_b = K_t + 3/4 |[X,Y]^v|^2` for an orthonormal
/// pair, where the vertical part is the K component.
pub fn base_sectional_curvature(x: &AlgebraElement, y: &AlgebraElement, m: MetricSpec) -> Result<f64> {
    require_part(x, CartanPart::P, "X")?;
    require_part(y, CartanPart::P, "Y")?;
    let geo = LieGeometry::shared(x.n(), m)?;
    let (cx, cy) = (geo.coords_of(x)?, geo.coords_of(y)?);
    let kt = geo.sectional(&cx, &cy)?;
    let area = dot(&cx, &cx) * dot(&cy, &cy) - dot(&cx, &cy).powi(2);
    let vert = geo.vertical_norm_sq(&geo.bracket(&cx, &cy));
    Ok(kt + 0.75 * vert / area)
}

/// Holomorphic sectional curvature `K_b(X, JX)` of the quotient for a unit
/// `X` in P.
pub fn holomorphic_base_curvature(x: &AlgebraElement, m: MetricSpec) -> Result<f64> {
    require_part(x, CartanPart::P, "X")?;
    let nx = crate::metric::norm(x, m)?;
    if (nx - 1.0).abs() > 1e-10 {
        return Err(Error::Precondition(format!("X must have unit norm, got {nx}")));
    }
    let jx = complex_structure(x)?;
    base_sectional_curvature(x, &jx, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::inner_product;

    fn el(n: usize, k: BasisKind) -> AlgebraElement {
        AlgebraElement::basis(n, k)
    }

    #[test]
    fn connection_is_torsion_free_and_metric() {
        for n in 1..=3 {
            let geo = LieGeometry::new(n, MetricSpec::scaled(n)).unwrap();
            let d = geo.dim();
            let conn = &geo.connection;
            let mut worst = 0.0f64;
            for a in 0..d {
                for b in 0..d {
                    for c in 0..d {
                        worst = worst.max((conn.get(a, b, c) + conn.get(a, c, b)).abs());
                        let torsion = conn.get(a, b, c) - conn.get(b, a, c)
                            - geo.structure.constant(a, b, c);
                        worst = worst.max(torsion.abs());
                    }
                }
            }
            assert!(worst < 1e-12, "n = {n}: {worst}");
        }
    }

    #[test]
    fn nabla_of_a_frame_field_along_itself_vanishes() {
        for n in 1..=2 {
            let geo = LieGeometry::new(n, MetricSpec::scaled(n)).unwrap();
            for a in 0..geo.dim() {
                let mut e = vec![0.0; geo.dim()];
                e[a] = 1.0;
                assert!(geo.nabla(&e, &e).iter().all(|v| v.abs() < 1e-14));
            }
        }
    }

    #[test]
    fn tensor_has_curvature_symmetries() {
        let t = curvature_tensor(2, MetricSpec::scaled(2)).unwrap();
        assert!(t.symmetry_residuals().max() < 1e-12);
    }

    #[test]
    fn n1_group_p_plane_is_minus_seven_quarters() {
        // On the group the P-plane has K_t = -7/4 |[X,Y]|^2 = -7/4; the
        // quotient H^1_C has curvature -1.
        let n = 1;
        let m = MetricSpec::scaled(n);
        let x = el(n, BasisKind::BetaP(1)).scale(0.5);
        let y = el(n, BasisKind::IAlphaP(1)).scale(0.5);
        assert!((sectional_curvature(&x, &y, m).unwrap() + 1.75).abs() < 1e-12);
        assert!((base_sectional_curvature(&x, &y, m).unwrap() + 1.0).abs() < 1e-12);
    }

    #[test]
    fn basis_plane_examples() {
        let n = 2;
        let m = MetricSpec::scaled(n);
        let h1 = el(n, BasisKind::H(1));
        let ia = el(n, BasisKind::IAlphaP(1));
        assert!((sectional_curvature(&h1, &ia, m).unwrap() - 0.25).abs() < 1e-12);
        let h2 = el(n, BasisKind::H(2));
        assert!(sectional_curvature(&h1, &h2, m).unwrap().abs() < 1e-12);
        let shifted = &ia + &h1.scale(3.0);
        let k1 = sectional_curvature(&h1, &ia, m).unwrap();
        let k2 = sectional_curvature(&h1, &shifted, m).unwrap();
        assert!((k1 - k2).abs() < 1e-12);
    }

    #[test]
    fn degenerate_plane_rejected() {
        let n = 2;
        let h1 = el(n, BasisKind::H(1));
        let err = sectional_curvature(&h1, &h1.scale(2.0), MetricSpec::scaled(n)).unwrap_err();
        assert!(matches!(err, Error::DegeneratePlane { .. }));
    }

    #[test]
    fn basis_plane_max_is_a_quarter() {
        for n in 1..=3 {
            let r = basis_plane_max(n).unwrap();
            assert!((r.max - 0.25).abs() < 1e-12, "n = {n}: {}", r.max);
            assert!(r.attained_by.contains(&(BasisKind::H(1), BasisKind::BetaP(1))));
            assert!(r.attained_by.contains(&(BasisKind::H(1), BasisKind::IAlphaP(1))));
        }
    }

    #[test]
    fn bound_sample_n1_and_n2() {
        let s = sectional_bound_sample(1, 2000, 3).unwrap();
        assert_eq!(s.bound, 14.25);
        assert!(s.within_bound && s.max_found >= 0.25);
        assert_eq!(sectional_bound_sample(2, 10, 3).unwrap().bound, 23.25);
    }

    #[test]
    fn complex_structure_examples() {
        let n = 2;
        let ia = el(n, BasisKind::IAlphaP(1));
        assert_eq!(complex_structure(&ia).unwrap(), el(n, BasisKind::BetaP(1)));
        let x = &ia.scale(0.3) + &el(n, BasisKind::BetaP(2)).scale(-1.2);
        let jjx = complex_structure(&complex_structure(&x).unwrap()).unwrap();
        assert!((&jjx + &x).max_abs() < 1e-15);
        let m = MetricSpec::scaled(n);
        let jx = complex_structure(&x).unwrap();
        let a = inner_product(&x, &x, m).unwrap();
        let b = inner_product(&jx, &jx, m).unwrap();
        assert!((a - b).abs() < 1e-12);
        assert!(matches!(
            complex_structure(&el(n, BasisKind::H(1))),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn holomorphic_curvature_of_unit_beta() {
        for n in 1..=3 {
            let x = el(n, BasisKind::BetaP(1)).scale(0.5);
            let k = holomorphic_base_curvature(&x, MetricSpec::scaled(n)).unwrap();
            assert!((k + 1.0).abs() < 1e-12, "n = {n}: {k}");
        }
        let not_unit = el(2, BasisKind::BetaP(1));
        assert!(holomorphic_base_curvature(&not_unit, MetricSpec::scaled(2)).is_err());
    }

    #[test]
    fn closed_form_preconditions_and_zero() {
        let n = 2;
        let u = el(n, BasisKind::Alpha(1, 2));
        let x = el(n, BasisKind::BetaP(1));
        assert!(matches!(
            closed_form_curvature(ClosedFormCase::Kkk, &u, &x, &u),
            Err(Error::Precondition(_))
        ));
        let z = closed_form_curvature(ClosedFormCase::Kkk, &u, &u, &el(n, BasisKind::H(1))).unwrap();
        assert_eq!(z.max_abs(), 0.0);
    }

    #[test]
    fn closed_form_matches_koszul_on_basis_triple() {
        let n = 2;
        let m = MetricSpec::scaled(n);
        let u = el(n, BasisKind::Alpha(1, 2));
        let v = el(n, BasisKind::IBeta(1, 2));
        let w = el(n, BasisKind::H(1));
        let cf = closed_form_curvature(ClosedFormCase::Kkk, &u, &v, &w).unwrap();
        let kz = koszul_curvature(&u, &v, &w, m).unwrap();
        assert!((&cf - &kz).max_abs() < 1e-12);
    }
}
