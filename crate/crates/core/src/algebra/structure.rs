//! Integer structure constants `[e_i, e_j] = sum_k c_ij^k e_k`.

use super::basis::{standard_basis, Basis};
use super::element::decompose_exact;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    n: usize,
    dim: usize,
    /// Dense `c[(i * dim + j) * dim + k]`.
    dense: Vec<i8>,
    /// Nonzero `(k, c_ij^k)` for each `i * dim + j`.
    sparse: Vec<Vec<(usize, i8)>>,
}

impl StructureConstants {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> i8 {
        self.dense[(i * self.dim + j) * self.dim + k]
    }

    /// Nonzero terms of `[e_i, e_j]`.
    pub fn terms(&self, i: usize, j: usize) -> &[(usize, i8)] {
        &self.sparse[i * self.dim + j]
    }

    pub fn entries(&self) -> &[i8] {
        &self.dense
    }

    /// Bracket of two coordinate vectors over the standard basis.
    pub fn bracket_coords(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let d = self.dim;
        let mut out = vec![0.0; d];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0.0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0.0 {
                    continue;
                }
                for &(k, c) in self.terms(i, j) {
                    out[k] += xi * yj * c as f64;
                }
            }
        }
        out
    }

    /// Largest `|c_ij^k + c_ji^k|`.
    pub fn antisymmetry_residual(&self) -> i64 {
        let d = self.dim;
        let mut worst = 0i64;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let r = self.get(i, j, k) as i64 + self.get(j, i, k) as i64;
                    worst = worst.max(r.abs());
                }
            }
        }
        worst
    }

    /// Largest `|sum_m (c_ij^m c_mk^l + c_jk^m c_mi^l + c_ki^m c_mj^l)|`.
    pub fn jacobi_residual(&self) -> i64 {
        let d = self.dim;
        let mut acc = vec![0i64; d];
        let mut worst = 0i64;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    acc.iter_mut().for_each(|a| *a = 0);
                    for &(a, b, c) in &[(i, j, k), (j, k, i), (k, i, j)] {
                        for &(m, cab) in self.terms(a, b) {
                            for &(l, cmc) in self.terms(m, c) {
                                acc[l] += cab as i64 * cmc as i64;
                            }
                        }
                    }
                    worst = worst.max(acc.iter().map(|x| x.abs()).max().unwrap_or(0));
                }
            }
        }
        worst
    }

    /// Matrix of `ad X` over the standard basis: column `j` holds `[X, e_j]`.
    pub fn ad_matrix(&self, x: &[f64]) -> nalgebra::DMatrix<f64> {
        let d = self.dim;
        let mut ad = nalgebra::DMatrix::zeros(d, d);
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0.0 {
                continue;
            }
            for j in 0..d {
                for &(k, c) in self.terms(i, j) {
                    ad[(k, j)] += xi * c as f64;
                }
            }
        }
        ad
    }
}

/// Structure constants of su(n,1) over the standard basis, computed by exact
/// matrix brackets.
pub fn structure_constants(n: usize) -> Result<StructureConstants> {
    let basis = Basis::new(n)?;
    let mats = standard_basis(n)?;
    let d = basis.dim();
    let mut dense = vec![0i8; d * d * d];
    let mut sparse = vec![Vec::new(); d * d];
    for i in 0..d {
        for j in 0..d {
            let coords = decompose_exact(&mats[i].bracket(&mats[j]))
                .expect("su(n,1) is closed under the bracket");
            for (k, c) in coords.into_iter().enumerate() {
                if c != 0 {
                    let c = i8::try_from(c).expect("structure constants are small integers");
                    dense[(i * d + j) * d + k] = c;
                    sparse[i * d + j].push((k, c));
                }
            }
        }
    }
    Ok(StructureConstants {
        n,
        dim: d,
        dense,
        sparse,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::basis::BasisKind;

    #[test]
    fn beta_beta_gives_alpha() {
        for n in 2..=4 {
            let b = Basis::new(n).unwrap();
            let c = structure_constants(n).unwrap();
            let i = b.ordinal(BasisKind::BetaP(1)).unwrap();
            let j = b.ordinal(BasisKind::BetaP(2)).unwrap();
            let k = b.ordinal(BasisKind::Alpha(1, 2)).unwrap();
            assert_eq!(c.get(i, j, k), 1);
            assert_eq!(c.terms(i, j), &[(k, 1)]);
        }
    }

    #[test]
    fn ialpha_beta_same_index_gives_two_h() {
        for n in 1..=4 {
            let b = Basis::new(n).unwrap();
            let c = structure_constants(n).unwrap();
            let i = b.ordinal(BasisKind::IAlphaP(1)).unwrap();
            let j = b.ordinal(BasisKind::BetaP(1)).unwrap();
            let h1 = b.ordinal(BasisKind::H(1)).unwrap();
            assert_eq!(c.get(i, j, h1), 2);
        }
    }

    #[test]
    fn self_brackets_vanish() {
        let c = structure_constants(3).unwrap();
        for i in 0..c.dim() {
            assert!(c.terms(i, i).is_empty());
        }
    }

    #[test]
    fn antisymmetric_jacobi_and_small() {
        for n in 1..=6 {
            let c = structure_constants(n).unwrap();
            assert_eq!(c.antisymmetry_residual(), 0, "n = {n}");
            assert_eq!(c.jacobi_residual(), 0, "n = {n}");
            assert!(c.entries().iter().all(|&x| (-2..=2).contains(&x)));
        }
    }

    #[test]
    fn h_block_commutes() {
        let n = 3;
        let b = Basis::new(n).unwrap();
        let c = structure_constants(n).unwrap();
        for i in b.h_range() {
            for j in b.h_range() {
                assert!(c.terms(i, j).is_empty());
            }
        }
    }
}
