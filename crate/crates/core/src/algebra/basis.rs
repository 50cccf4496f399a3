//! The standard basis of su(n,1) and its canonical ordering.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{check_dim, Result};
use crate::exact::{ExactMatrix, GaussInt};

/// Which half of the Cartan decomposition a basis direction lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanPart {
    /// Compact part, spanned by `alpha_jk`, `i beta_jk` and `h_j`.
    K,
    /// Noncompact part, spanned by `beta_{j,n+1}` and `i alpha_{j,n+1}`.
    P,
}

/// Labels of the standard basis. Indices are 1-based as in the usual
/// matrix-unit notation, so `Alpha(1, 2)` is `e_12 - e_21`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasisKind {
    /// `alpha_jk = e_jk - e_kj`, `1 <= j < k <= n`.
    Alpha(usize, usize),
    /// `i beta_jk = i(e_jk + e_kj)`, `1 <= j < k <= n`.
    IBeta(usize, usize),
    /// `h_j = i(e_jj - e_{n+1,n+1})`.
    H(usize),
    /// `beta_{j,n+1} = e_{j,n+1} + e_{n+1,j}`.
    BetaP(usize),
    /// `i alpha_{j,n+1} = i(e_{j,n+1} - e_{n+1,j})`.
    IAlphaP(usize),
}

impl BasisKind {
    pub fn part(self) -> CartanPart {
        match self {
            BasisKind::Alpha(..) | BasisKind::IBeta(..) | BasisKind::H(_) => CartanPart::K,
            BasisKind::BetaP(_) | BasisKind::IAlphaP(_) => CartanPart::P,
        }
    }

    /// The basis matrix for this label, with complex dimension `n`.
    pub fn matrix(self, n: usize) -> ExactMatrix {
        let last = n + 1;
        match self {
            BasisKind::Alpha(j, k) => alpha(n, j, k),
            BasisKind::IBeta(j, k) => beta(n, j, k).scale(GaussInt::I),
            BasisKind::H(j) => h(n, j),
            BasisKind::BetaP(j) => beta(n, j, last),
            BasisKind::IAlphaP(j) => alpha(n, j, last).scale(GaussInt::I),
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisKind::Alpha(j, k) => write!(f, "alpha_{j}{k}"),
            BasisKind::IBeta(j, k) => write!(f, "i*beta_{j}{k}"),
            BasisKind::H(j) => write!(f, "h_{j}"),
            BasisKind::BetaP(j) => write!(f, "beta_{j},n+1"),
            BasisKind::IAlphaP(j) => write!(f, "i*alpha_{j},n+1"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisIndex {
    pub kind: BasisKind,
    pub ordinal: usize,
}

/// The ordered standard basis labels for a fixed `n`.
///
/// Order: all `Alpha(j,k)` lexicographic, all `IBeta(j,k)` lexicographic,
/// then `H(1..n)`, `BetaP(1..n)`, `IAlphaP(1..n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    n: usize,
    indices: Vec<BasisIndex>,
}

impl Basis {
    pub fn new(n: usize) -> Result<Self> {
        check_dim(n)?;
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|j| (j + 1..=n).map(move |k| (j, k)))
            .collect();
        let kinds = pairs
            .iter()
            .map(|&(j, k)| BasisKind::Alpha(j, k))
            .chain(pairs.iter().map(|&(j, k)| BasisKind::IBeta(j, k)))
            .chain((1..=n).map(BasisKind::H))
            .chain((1..=n).map(BasisKind::BetaP))
            .chain((1..=n).map(BasisKind::IAlphaP));
        let indices = kinds
            .enumerate()
            .map(|(ordinal, kind)| BasisIndex { kind, ordinal })
            .collect();
        Ok(Basis { n, indices })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Real dimension `n^2 + 2n`.
    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[BasisIndex] {
        &self.indices
    }

    pub fn kind(&self, ordinal: usize) -> BasisKind {
        self.indices[ordinal].kind
    }

    pub fn part(&self, ordinal: usize) -> CartanPart {
        self.indices[ordinal].kind.part()
    }

    /// Number of `Alpha` (equivalently `IBeta`) elements, `n(n-1)/2`.
    pub fn pair_count(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// Ordinal of a label, or `None` if the label is not admissible for this `n`.
    pub fn ordinal(&self, kind: BasisKind) -> Option<usize> {
        let n = self.n;
        let pairs = self.pair_count();
        let pair_pos = |j: usize, k: usize| -> Option<usize> {
            if j == 0 || j >= k || k > n {
                return None;
            }
            // Pairs with first index < j come first.
            let before: usize = (1..j).map(|r| n - r).sum();
            Some(before + (k - j - 1))
        };
        let single = |j: usize| (1..=n).contains(&j).then(|| j - 1);
        match kind {
            BasisKind::Alpha(j, k) => pair_pos(j, k),
            BasisKind::IBeta(j, k) => pair_pos(j, k).map(|p| pairs + p),
            BasisKind::H(j) => single(j).map(|p| 2 * pairs + p),
            BasisKind::BetaP(j) => single(j).map(|p| 2 * pairs + n + p),
            BasisKind::IAlphaP(j) => single(j).map(|p| 2 * pairs + 2 * n + p),
        }
    }

    /// Ordinal range of the H block.
    pub fn h_range(&self) -> std::ops::Range<usize> {
        let start = 2 * self.pair_count();
        start..start + self.n
    }

    /// Ordinal range of the P block (`BetaP` then `IAlphaP`).
    pub fn p_range(&self) -> std::ops::Range<usize> {
        let start = 2 * self.pair_count() + self.n;
        start..start + 2 * self.n
    }

    pub fn matrices(&self) -> Vec<ExactMatrix> {
        self.indices.iter().map(|ix| ix.kind.matrix(self.n)).collect()
    }
}

/// The standard basis of su(n,1) as exact matrices, in canonical order.
pub fn standard_basis(n: usize) -> Result<Vec<ExactMatrix>> {
    Ok(Basis::new(n)?.matrices())
}

/// Matrix unit `e_jk` in gl(n+1, C); indices are 1-based.
pub fn e(n: usize, j: usize, k: usize) -> ExactMatrix {
    ExactMatrix::unit(n + 1, j - 1, k - 1, GaussInt::ONE)
}

/// `alpha_jk = e_jk - e_kj` for any 1-based `j, k` (zero when `j == k`).
pub fn alpha(n: usize, j: usize, k: usize) -> ExactMatrix {
    &e(n, j, k) - &e(n, k, j)
}

/// `beta_jk = e_jk + e_kj` for any 1-based `j, k` (`2 e_jj` when `j == k`).
pub fn beta(n: usize, j: usize, k: usize) -> ExactMatrix {
    &e(n, j, k) + &e(n, k, j)
}

/// `h_j = i(e_jj - e_{n+1,n+1})`.
pub fn h(n: usize, j: usize) -> ExactMatrix {
    (&e(n, j, j) - &e(n, n + 1, n + 1)).scale(GaussInt::I)
}
