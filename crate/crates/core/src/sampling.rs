//! Seeded random draws shared by the numerical sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::algebra::{Basis, CartanPart, RealCoordinates};

pub type SweepRng = ChaCha8Rng;

/// Deterministic generator for `(seed, stream)`; distinct streams give
/// independent sequences from one user seed.
pub fn rng(seed: u64, stream: u64) -> SweepRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

pub fn normal_vec(rng: &mut SweepRng, len: usize) -> Vec<f64> {
    (0..len).map(|_| rng.sample(StandardNormal)).collect()
}

/// Gaussian coordinates, optionally restricted to one Cartan part.
pub fn normal_coords(rng: &mut SweepRng, basis: &Basis, part: Option<CartanPart>) -> RealCoordinates {
    let coeffs = (0..basis.dim())
        .map(|i| match part {
            Some(p) if basis.part(i) != p => 0.0,
            _ => rng.sample(StandardNormal),
        })
        .collect();
    RealCoordinates {
        n: basis.n(),
        coeffs,
    }
}

/// Integer coordinates in `[-bound, bound]`, optionally restricted to one part.
pub fn integer_coords(
    rng: &mut SweepRng,
    basis: &Basis,
    part: Option<CartanPart>,
    bound: i64,
) -> Vec<i64> {
    (0..basis.dim())
        .map(|i| match part {
            Some(p) if basis.part(i) != p => 0,
            _ => rng.random_range(-bound..=bound),
        })
        .collect()
}

pub fn normalize(v: &mut [f64]) -> f64 {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
    norm
}
