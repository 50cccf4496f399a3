//! Per-dimension cache of the basis and structure constants.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::{decompose, structure_constants, AlgebraElement, Basis, StructureConstants};
use crate::error::{check_dim, Error, Result};

/// The standard basis together with its structure constants.
#[derive(Debug)]
pub struct SuAlgebra {
    pub basis: Basis,
    pub constants: StructureConstants,
}

impl SuAlgebra {
    pub fn new(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(SuAlgebra {
            basis: Basis::new(n)?,
            constants: structure_constants(n)?,
        })
    }

    /// Shared instance for `n`; built once per process.
    pub fn shared(n: usize) -> Result<Arc<SuAlgebra>> {
        static CACHE: OnceLock<Mutex<BTreeMap<usize, Arc<SuAlgebra>>>> = OnceLock::new();
        check_dim(n)?;
        let cache = CACHE.get_or_init(Default::default);
        if let Some(a) = cache.lock().expect("cache poisoned").get(&n) {
            return Ok(Arc::clone(a));
        }
        let built = Arc::new(SuAlgebra::new(n)?);
        let mut guard = cache.lock().expect("cache poisoned");
        Ok(Arc::clone(guard.entry(n).or_insert(built)))
    }

    pub fn n(&self) -> usize {
        self.basis.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// Coordinates of a member of su(n,1) with the matching dimension.
    pub fn coords_of(&self, x: &AlgebraElement) -> Result<Vec<f64>> {
        if x.n() != self.n() {
            return Err(Error::Shape {
                expected: format!("n = {}", self.n()),
                found: format!("n = {}", x.n()),
            });
        }
        Ok(decompose(x)?.coeffs)
    }
}
