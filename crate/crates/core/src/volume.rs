//! Wang's radius, Gunther's comparison volume, Vol U(n), and the orbifold
//! volume bound C(n) with its symmetry-group corollaries.

use std::f64::consts::{LN_10, LN_2, PI};

use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use crate::error::{check_dim, Error, Result};
use crate::quadrature::{gl128, gl64};

/// The ball radius printed with the bound.
pub const PRINTED_R0: f64 = 0.1385;
/// The coefficient of `sqrt(36n+21)` in the printed integration limit.
pub const PRINTED_LIMIT_COEFF: f64 = 0.06925;
/// Wang constants of the scaled metric.
pub const SCALED_WANG_C1: f64 = 1.0;
pub const SCALED_WANG_C2: f64 = 1.0;
/// Agreement required between the two evaluations of `log C(n)`.
pub const CROSSCHECK_TOL: f64 = 1e-9;

/// `exp(C1 t) - 1 + 2 sin(C2 t) - C1 t / (exp(C1 t) - 1)`.
pub fn wang_f(t: f64, c1: f64, c2: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain(format!("F(t) needs t > 0, got {t}")));
    }
    let x = c1 * t;
    let ratio = if x.abs() < 1e-4 {
        1.0 - x / 2.0 + x * x / 12.0 - x.powi(4) / 720.0
    } else {
        x / x.exp_m1()
    };
    Ok(x.exp_m1() + 2.0 * (c2 * t).sin() - ratio)
}

/// Step of the bracketing scan.
pub const SCAN_STEP: f64 = 1e-3;
/// Upper end of the bracketing scan.
pub const SCAN_LIMIT: f64 = 10.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WangRadius {
    pub c1: f64,
    pub c2: f64,
    pub tol: f64,
    pub root: f64,
    pub residual: f64,
    pub derivative: f64,
    /// `10 tol |F'(root)|`.
    pub guard: f64,
    pub guard_ok: bool,
    pub bisections: u32,
}

/// Least positive zero of [`wang_f`]: fixed-step scan from `t = tol`, then
/// bisection to an interval shorter than `tol`.
pub fn wang_radius(c1: f64, c2: f64, tol: f64) -> Result<WangRadius> {
    for (name, v) in [("C1", c1), ("C2", c2), ("tol", tol)] {
        if !(v > 0.0) || !v.is_finite() {
            return Err(Error::Domain(format!("{name} must be positive, got {v}")));
        }
    }
    let f = |t: f64| wang_f(t, c1, c2);
    let mut lo = tol;
    let mut f_lo = f(lo)?;
    let mut step = 0u64;
    let (mut a, mut b) = loop {
        if f_lo == 0.0 {
            break (lo, lo);
        }
        step += 1;
        let hi = (tol + SCAN_STEP * step as f64).min(SCAN_LIMIT);
        let f_hi = f(hi)?;
        if f_hi == 0.0 || f_hi.signum() != f_lo.signum() {
            break (lo, hi);
        }
        if hi >= SCAN_LIMIT {
            return Err(Error::NoRoot { limit: SCAN_LIMIT });
        }
        lo = hi;
        f_lo = f_hi;
    };
    let mut bisections = 0;
    let f_a = f(a)?;
    while b - a >= tol {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid)?;
        bisections += 1;
        if fm == 0.0 {
            a = mid;
            b = mid;
        } else if fm.signum() == f_a.signum() {
            a = mid;
        } else {
            b = mid;
        }
    }
    let root = 0.5 * (a + b);
    let residual = f(root)?;
    let h = 1e-6 * root.max(1e-3);
    let derivative = (f(root + h)? - f((root - h).max(root * 0.5))?) / (root + h - (root - h).max(root * 0.5));
    let guard = 10.0 * tol * derivative.abs();
    Ok(WangRadius {
        c1,
        c2,
        tol,
        root,
        residual,
        derivative,
        guard,
        guard_ok: residual.abs() < guard,
        bisections,
    })
}

fn check_limit(l: f64) -> Result<()> {
    if (0.0..=PI).contains(&l) {
        Ok(())
    } else {
        Err(Error::Domain(format!("integration limit {l} is outside [0, pi]")))
    }
}

/// `int_0^L sin^m` by the reduction recurrence
/// `m I_m = -cos L sin^{m-1} L + (m-1) I_{m-2}`.
///
/// The upward direction cancels when `cos L > 0` and `I_m` is small; there
/// the recurrence is run downward from a zero seed far enough above `m` that
/// the seed error has decayed below rounding.
pub fn sin_power_integral(m: u64, l: f64) -> Result<f64> {
    check_limit(l)?;
    let (s, c) = l.sin_cos();
    let (value, amplification) = upward(m, l, s, c);
    if amplification <= 16.0 || c <= 0.0 || s <= 0.0 {
        return Ok(value);
    }
    let extra = (41.5 / -s.ln()).ceil();
    if extra > 4e6 {
        return Ok(value);
    }
    Ok(downward(m, s, c, m + 2 * (extra as u64 / 2 + 1)))
}

/// Upward sweep; also returns `sum of |terms| / |I_m|`.
fn upward(m: u64, l: f64, s: f64, c: f64) -> (f64, f64) {
    let (mut cur, mut mag, mut k) = if m % 2 == 0 { (l, l, 0) } else { (1.0 - c, 1.0 - c, 1) };
    if k == 1 {
        cur = 2.0 * (l / 2.0).sin().powi(2);
        mag = cur;
    }
    let mut s_pow = if k == 0 { s } else { s * s };
    while k < m {
        k += 2;
        let kf = k as f64;
        cur = (-c * s_pow + (kf - 1.0) * cur) / kf;
        mag = ((c * s_pow).abs() + (kf - 1.0) * mag) / kf;
        s_pow *= s * s;
    }
    (cur, if cur != 0.0 { mag / cur.abs() } else { f64::INFINITY })
}

fn downward(m: u64, s: f64, c: f64, top: u64) -> f64 {
    let ln_s = s.ln();
    let mut cur = 0.0;
    let mut k = top;
    while k > m {
        let kf = k as f64;
        cur = (kf * cur + c * ((kf - 1.0) * ln_s).exp()) / (kf - 1.0);
        k -= 2;
    }
    cur
}

/// Single-panel 64-node Gauss-Legendre value of `int_0^L sin^m`.
pub fn sin_power_integral_gl(m: u64, l: f64, nodes: usize) -> Result<f64> {
    check_limit(l)?;
    let rule = match nodes {
        64 => gl64(),
        128 => gl128(),
        _ => return Err(Error::Input(format!("unsupported rule size {nodes}"))),
    };
    Ok(rule.integrate(|r| r.sin().powf(m as f64), 0.0, l))
}

/// `ln int_0^L sin^m`, by composite quadrature of
/// `exp(m (ln sin r - ln sin r*))` with `r* = min(L, pi/2)`.
pub fn log_sin_power_integral(m: u64, l: f64) -> Result<f64> {
    check_limit(l)?;
    if l == 0.0 {
        return Ok(f64::NEG_INFINITY);
    }
    if m == 0 {
        return Ok(l.ln());
    }
    let mf = m as f64;
    let peak = l.min(PI / 2.0);
    let shift = mf * peak.sin().ln();
    let integrand = |r: f64| {
        let s = r.sin();
        if s <= 0.0 {
            0.0
        } else {
            (mf * s.ln() - shift).exp()
        }
    };
    let rule = gl64();
    let mut panels = ((l * mf.sqrt()).ceil() as usize).max(1);
    let mut value = rule.integrate_composite(integrand, 0.0, l, panels);
    loop {
        panels *= 2;
        let refined = rule.integrate_composite(integrand, 0.0, l, panels);
        let done = (refined - value).abs() <= 1e-14 * refined.abs() || panels >= 1 << 15;
        value = refined;
        if done {
            break;
        }
    }
    Ok(shift + value.ln())
}

fn check_ball(d: u64, k: f64, r: f64) -> Result<()> {
    if d < 2 {
        return Err(Error::Domain(format!("dimension d = {d} must be at least 2")));
    }
    if !(k > 0.0) || !k.is_finite() {
        return Err(Error::Domain(format!("curvature bound k = {k} must be positive")));
    }
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::Domain(format!("radius r = {r} must be positive")));
    }
    Ok(())
}

/// `V(d,k,r) = 2 (pi/k)^{d/2} / Gamma(d/2) * int_0^{min(r sqrt k, pi)} sin^{d-1}`,
/// the volume of an `r`-ball in the `d`-sphere of curvature `k`.
pub fn gunther_ball_volume(d: u64, k: f64, r: f64) -> Result<f64> {
    check_ball(d, k, r)?;
    let l = (r * k.sqrt()).min(PI);
    let half = d as f64 / 2.0;
    Ok(2.0 * (PI / k).powf(half) / statrs::function::gamma::gamma(half) * sin_power_integral(d - 1, l)?)
}

pub fn log_gunther_ball_volume(d: u64, k: f64, r: f64) -> Result<f64> {
    check_ball(d, k, r)?;
    let l = (r * k.sqrt()).min(PI);
    let half = d as f64 / 2.0;
    Ok(LN_2 + half * (PI.ln() - k.ln()) - ln_gamma(half) + log_sin_power_integral(d - 1, l)?)
}

/// A positive quantity that may not fit in an `f64`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LinearValue {
    Value(f64),
    Marker(Marker),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Marker {
    Underflow,
    Overflow,
}

impl LinearValue {
    pub fn from_log(ln: f64) -> Self {
        let v = ln.exp();
        if v.is_infinite() {
            LinearValue::Marker(Marker::Overflow)
        } else if v < f64::MIN_POSITIVE {
            LinearValue::Marker(Marker::Underflow)
        } else {
            LinearValue::Value(v)
        }
    }

    pub fn value(&self) -> Option<f64> {
        match self {
            LinearValue::Value(v) => Some(*v),
            LinearValue::Marker(_) => None,
        }
    }
}

/// `Vol U(n) = 2^n pi^{(n^2+n)/2} / prod_{j<n} j!`, evaluated directly.
pub fn unitary_volume(n: usize) -> Result<LinearValue> {
    check_dim(n)?;
    let mut v = 2f64.powi(n as i32) * PI.powf((n * n + n) as f64 / 2.0);
    let mut fact = 1.0;
    for j in 1..n {
        fact *= j as f64;
        v /= fact;
    }
    Ok(if v.is_finite() {
        LinearValue::Value(v)
    } else {
        LinearValue::from_log(log_unitary_volume(n)?)
    })
}

pub fn log_unitary_volume(n: usize) -> Result<f64> {
    check_dim(n)?;
    let nf = n as f64;
    let facts: f64 = (1..n).map(|j| ln_gamma(j as f64 + 1.0)).sum();
    Ok(nf * LN_2 + (nf * nf + nf) / 2.0 * PI.ln() - facts)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundOptions {
    pub use_computed_radius: bool,
    pub tol: f64,
}

impl Default for BoundOptions {
    fn default() -> Self {
        BoundOptions {
            use_computed_radius: false,
            tol: 1e-10,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RadiusSource {
    Printed,
    Computed,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct BoundReport {
    pub n: usize,
    pub d0: u64,
    pub k0: f64,
    #[serde(rename = "C1")]
    pub c1: f64,
    #[serde(rename = "C2")]
    pub c2: f64,
    #[serde(rename = "R_G")]
    pub r_g: f64,
    pub r0: f64,
    #[serde(rename = "L")]
    pub l: f64,
    pub log_vol_Un: f64,
    pub log_V_ball: f64,
    pub log_C: f64,
    #[serde(rename = "C")]
    pub c: LinearValue,
    pub crosscheck_residual: f64,
    pub radius_source: RadiusSource,
    /// Coefficient of `sqrt(36n+21)` in the closed-form limit (`r0 / 2`).
    pub limit_coeff: f64,
    /// `limit_coeff - 0.06925`; zero for the printed radius.
    pub limit_coeff_deviation: f64,
}

impl BoundReport {
    pub fn log10_c(&self) -> f64 {
        self.log_C / LN_10
    }

    pub fn log10_vol_un(&self) -> f64 {
        self.log_vol_Un / LN_10
    }

    pub fn log10_v_ball(&self) -> f64 {
        self.log_V_ball / LN_10
    }
}

/// Theorem-style closed form of `ln C(n)` with limit `coeff sqrt(36n+21)`.
pub fn log_bound_closed_form(n: usize, coeff: f64) -> Result<f64> {
    check_dim(n)?;
    let nf = n as f64;
    let d = (n * n + 2 * n) as u64;
    let m = 36.0 * nf + 21.0;
    let l = (coeff * m.sqrt()).min(PI);
    let log_facts: f64 = (1..n).map(|j| (1..=j).map(|i| (i as f64).ln()).sum::<f64>()).sum();
    let integral = sin_power_integral(d - 1, l)?;
    let log_integral = if integral >= f64::MIN_POSITIVE {
        integral.ln()
    } else {
        log_sin_power_integral(d - 1, l)?
    };
    Ok((nf * nf + nf + 1.0) * LN_2 + nf / 2.0 * PI.ln() + log_facts
        - d as f64 / 2.0 * m.ln()
        - ln_gamma(d as f64 / 2.0)
        + log_integral)
}

/// `C(n)` by the closed form and by `V(d0, k0, r0) / Vol U(n)`; the two
/// must agree in log space.
pub fn orbifold_bound(n: usize, opts: &BoundOptions) -> Result<BoundReport> {
    check_dim(n)?;
    let radius = wang_radius(SCALED_WANG_C1, SCALED_WANG_C2, opts.tol)?;
    let (r0, source) = if opts.use_computed_radius {
        (radius.root / 2.0, RadiusSource::Computed)
    } else {
        (PRINTED_R0, RadiusSource::Printed)
    };
    let d0 = (n * n + 2 * n) as u64;
    let k0 = (36.0 * n as f64 + 21.0) / 4.0;
    let l = (r0 * k0.sqrt()).min(PI);
    let log_vol_un = log_unitary_volume(n)?;
    let log_v_ball = log_gunther_ball_volume(d0, k0, r0)?;
    let assembled = log_v_ball - log_vol_un;
    let limit_coeff = r0 / 2.0;
    let closed = log_bound_closed_form(n, limit_coeff)?;
    let residual = (closed - assembled).abs();
    if !(residual < CROSSCHECK_TOL) {
        return Err(Error::Inconsistent {
            n,
            closed,
            assembled,
        });
    }
    Ok(BoundReport {
        n,
        d0,
        k0,
        c1: SCALED_WANG_C1,
        c2: SCALED_WANG_C2,
        r_g: radius.root,
        r0,
        l,
        log_vol_Un: log_vol_un,
        log_V_ball: log_v_ball,
        log_C: assembled,
        c: LinearValue::from_log(assembled),
        crosscheck_residual: residual,
        radius_source: source,
        limit_coeff,
        limit_coeff_deviation: limit_coeff - PRINTED_LIMIT_COEFF,
    })
}

fn floor_ratio(ratio: f64) -> Result<u128> {
    if !ratio.is_finite() || ratio >= u128::MAX as f64 {
        return Err(Error::Unrepresentable(format!("group order bound {ratio:e}")));
    }
    Ok(ratio.floor() as u128)
}

/// `floor(volume / C)` for the bound in `report`.
pub fn symmetry_order_bound_for(volume: f64, report: &BoundReport) -> Result<u128> {
    if !(volume > 0.0) || !volume.is_finite() {
        return Err(Error::Domain(format!("volume {volume} must be positive")));
    }
    let ratio = match report.c {
        LinearValue::Value(c) if (volume / c).is_finite() => volume / c,
        _ => (volume.ln() - report.log_C).exp(),
    };
    floor_ratio(ratio)
}

/// Largest isometry group order certified for a quotient of the given volume.
pub fn symmetry_order_bound(volume: f64, n: usize) -> Result<u128> {
    if !(volume > 0.0) || !volume.is_finite() {
        return Err(Error::Domain(format!("volume {volume} must be positive")));
    }
    symmetry_order_bound_for(volume, &orbifold_bound(n, &BoundOptions::default())?)
}

/// Chern-Gauss-Bonnet volume `(-4 pi)^n chi / (n+1)!`.
pub fn cgb_volume(n: usize, chi: i64) -> Result<f64> {
    check_dim(n)?;
    let odd = n % 2 == 1;
    if chi == 0 || (chi < 0) != odd {
        let need = if odd { "negative for odd n" } else { "positive for even n" };
        return Err(Error::Sign(format!(
            "(-4pi)^{n} chi/({}!) is not positive: chi = {chi} must be {need}",
            n + 1
        )));
    }
    let mut v = chi.unsigned_abs() as f64;
    for j in 1..=n {
        v *= 4.0 * PI / (j + 1) as f64;
    }
    if !v.is_finite() || v == 0.0 {
        return Err(Error::Unrepresentable(format!("volume for n = {n}, chi = {chi}")));
    }
    Ok(v)
}

pub fn euler_symmetry_bound(n: usize, chi: i64) -> Result<u128> {
    symmetry_order_bound(cgb_volume(n, chi)?, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wang_f_examples() {
        assert!((wang_f(1e-8, 1.0, 1.0).unwrap() + 1.0).abs() < 1e-6);
        let e = std::f64::consts::E;
        let f1 = wang_f(1.0, 1.0, 1.0).unwrap();
        assert!((f1 - ((e - 1.0) + 2.0 * 1f64.sin() - 1.0 / (e - 1.0))).abs() < 1e-14);
        assert!(wang_f(0.277, 1.0, 1.0).unwrap().abs() < 0.01);
        assert!(wang_f(0.0, 1.0, 1.0).is_err());
        assert!(wang_f(-1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn radius_examples() {
        let r = wang_radius(1.0, 1.0, 1e-12).unwrap();
        assert!((0.2770..=0.2780).contains(&r.root), "{}", r.root);
        assert!(r.residual.abs() < 1e-10);
        assert!(r.guard_ok);
        assert!((r.root / 2.0 - 0.1385).abs() < 5e-4);
        assert!(wang_radius(1.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn radius_scaling() {
        // F(t; a, a) = F(at; 1, 1)
        let r1 = wang_radius(1.0, 1.0, 1e-12).unwrap().root;
        let r2 = wang_radius(2.0, 2.0, 1e-12).unwrap().root;
        assert!((r2 - r1 / 2.0).abs() < 1e-10);
    }

    #[test]
    fn integral_examples() {
        assert_eq!(sin_power_integral(0, 1.25).unwrap(), 1.25);
        assert!((sin_power_integral(1, PI).unwrap() - 2.0).abs() < 1e-15);
        let l: f64 = 0.5228;
        let oracle = l / 2.0 - (2.0 * l).sin() / 4.0;
        let v = sin_power_integral(2, l).unwrap();
        assert!((v - oracle).abs() < 1e-15);
        assert!((v - 0.0450936).abs() < 1e-7);
        assert!(sin_power_integral(3, 3.2).is_err());
        assert!(sin_power_integral(3, -0.1).is_err());
    }

    #[test]
    fn recurrence_matches_quadrature() {
        for m in [0u64, 1, 2, 3, 7, 8, 23, 24, 51, 120] {
            for l in [0.01, 0.3, 0.5228, 1.0, 1.5, PI / 2.0, 2.5, PI] {
                let a = sin_power_integral(m, l).unwrap();
                let b = sin_power_integral_gl(m, l, 64).unwrap();
                assert!((a - b).abs() <= 1e-12 * a.abs(), "m={m} l={l}: {a} vs {b}");
                let c = log_sin_power_integral(m, l).unwrap();
                assert!((c - a.ln()).abs() < 1e-12, "m={m} l={l}");
            }
        }
    }

    #[test]
    fn ball_volume_examples() {
        assert!((gunther_ball_volume(2, 1.0, PI).unwrap() - 4.0 * PI).abs() < 1e-13);
        assert!((gunther_ball_volume(2, 1.0, PI / 2.0).unwrap() - 2.0 * PI).abs() < 1e-13);
        // beyond pi/sqrt(k) the whole sphere is counted
        assert!((gunther_ball_volume(2, 1.0, 10.0).unwrap() - 4.0 * PI).abs() < 1e-13);
        let lin = gunther_ball_volume(7, 3.0, 0.4).unwrap();
        let lg = log_gunther_ball_volume(7, 3.0, 0.4).unwrap();
        assert!((lg - lin.ln()).abs() < 1e-12);
        assert!(gunther_ball_volume(1, 1.0, 1.0).is_err());
        assert!(gunther_ball_volume(3, 0.0, 1.0).is_err());
        assert!(gunther_ball_volume(3, 1.0, -1.0).is_err());
    }

    #[test]
    fn unitary_volume_examples() {
        assert_eq!(unitary_volume(1).unwrap(), LinearValue::Value(2.0 * PI));
        let v2 = unitary_volume(2).unwrap().value().unwrap();
        assert!((v2 - 4.0 * PI.powi(3)).abs() < 1e-12 * v2);
        assert!((log_unitary_volume(2).unwrap() - v2.ln()).abs() < 1e-13);
        assert!(log_unitary_volume(50).unwrap().is_finite());
        assert_eq!(unitary_volume(50).unwrap(), LinearValue::Marker(Marker::Underflow));
        assert!(unitary_volume(0).is_err());
    }

    #[test]
    fn bound_headlines() {
        let opts = BoundOptions::default();
        let c1 = orbifold_bound(1, &opts).unwrap().c.value().unwrap();
        assert!(c1 > 0.0015 && c1 < 0.0025);
        assert!(c1 < PI / 21.0);
        let c2 = orbifold_bound(2, &opts).unwrap().c.value().unwrap();
        assert!((c2 / 2.918e-9 - 1.0).abs() < 0.01, "{c2}");
    }

    #[test]
    fn computed_radius_is_flagged() {
        let r = orbifold_bound(1, &BoundOptions { use_computed_radius: true, tol: 1e-12 }).unwrap();
        assert_eq!(r.radius_source, RadiusSource::Computed);
        assert!(r.limit_coeff_deviation > 0.0);
        assert!(r.crosscheck_residual < CROSSCHECK_TOL);
        let p = orbifold_bound(1, &BoundOptions::default()).unwrap();
        assert_eq!(p.limit_coeff_deviation, 0.0);
        assert!(r.log_C > p.log_C);
    }

    #[test]
    fn symmetry_examples() {
        let rep = orbifold_bound(2, &BoundOptions::default()).unwrap();
        let c = rep.c.value().unwrap();
        assert_eq!(symmetry_order_bound(c, 2).unwrap(), 1);
        assert_eq!(symmetry_order_bound(c / 2.0, 2).unwrap(), 0);
        let v = 8.0 * PI * PI / 3.0;
        assert_eq!(symmetry_order_bound(v, 2).unwrap(), (v / c).floor() as u128);
        assert!(symmetry_order_bound(0.0, 2).is_err());
    }

    #[test]
    fn cgb_examples() {
        assert!((cgb_volume(1, -2).unwrap() - 4.0 * PI).abs() < 1e-14);
        assert!((cgb_volume(2, 3).unwrap() - 8.0 * PI * PI).abs() < 1e-12);
        assert!(matches!(cgb_volume(2, -3), Err(Error::Sign(_))));
        assert!(matches!(cgb_volume(1, 2), Err(Error::Sign(_))));
        assert!(matches!(cgb_volume(1, 0), Err(Error::Sign(_))));
        let c1 = orbifold_bound(1, &BoundOptions::default()).unwrap().c.value().unwrap();
        assert_eq!(euler_symmetry_bound(1, -2).unwrap(), (4.0 * PI / c1).floor() as u128);
    }

    #[test]
    fn json_marker() {
        let rep = orbifold_bound(60, &BoundOptions::default()).unwrap();
        let s = serde_json::to_string(&rep).unwrap();
        assert!(s.contains("\"C\":\"underflow\""), "{s}");
        let back: BoundReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, rep);
    }
}
