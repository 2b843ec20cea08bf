//! Kostant's partition function and Lusztig's q-analogue
//! `∑ 𝒫_q(ν) e^{−ν} = ∏_{α>0} (1 − q e^{−α})^{−1}`.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::error::Result;
use crate::poly::QPolynomial;
use crate::root_system::{RootDatum, Weight};

/// Counts decompositions of a root-lattice vector into positive roots,
/// graded by the number of parts.
///
/// Dynamic programming over the positive roots in their canonical order,
/// memoized on `(root index, residual)`. The memo is shared between calls
/// and guarded by a mutex; entries are pure functions of their key.
pub struct KostantPartition {
    roots: Vec<Vec<i64>>,
    datum: RootDatum,
    memo: Mutex<HashMap<(usize, Vec<i64>), QPolynomial>>,
}

impl KostantPartition {
    pub fn new(datum: &RootDatum) -> Self {
        Self {
            roots: datum.positive_roots().to_vec(),
            datum: datum.clone(),
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// `𝒫_q(ν)`. Weights off the root lattice, or with a negative root
    /// coordinate, give the zero polynomial.
    pub fn q_analogue(&self, nu: &Weight) -> Result<QPolynomial> {
        let coords = self.datum.root_coords_rational(nu)?;
        if coords.iter().any(|c| !c.is_integer()) {
            return Ok(QPolynomial::zero());
        }
        let residual: Vec<i64> = coords.iter().map(|c| c.to_integer()).collect();
        Ok(self.count_root_coords(&residual))
    }

    /// `𝒫_q` on explicit root coordinates.
    pub fn count_root_coords(&self, residual: &[i64]) -> QPolynomial {
        if residual.iter().any(|&c| c < 0) {
            return QPolynomial::zero();
        }
        self.count(0, residual.to_vec())
    }

    /// `𝒫(ν) = 𝒫_q(ν)|_{q=1}`.
    pub fn count_at_one(&self, nu: &Weight) -> Result<u64> {
        Ok(self.q_analogue(nu)?.eval(1) as u64)
    }

    fn count(&self, idx: usize, residual: Vec<i64>) -> QPolynomial {
        if residual.iter().all(|&c| c == 0) {
            return QPolynomial::one();
        }
        if idx == self.roots.len() {
            return QPolynomial::zero();
        }
        let key = (idx, residual);
        if let Some(hit) = self.memo.lock().expect("memo poisoned").get(&key) {
            return hit.clone();
        }
        let (_, residual) = &key;
        let root = &self.roots[idx];
        let mut total = QPolynomial::zero();
        let mut rest = residual.clone();
        let mut parts = 0u32;
        loop {
            total += &self.count(idx + 1, rest.clone()).shift(parts);
            for (r, b) in rest.iter_mut().zip(root) {
                *r -= b;
            }
            if rest.iter().any(|&c| c < 0) {
                break;
            }
            parts += 1;
        }
        self.memo
            .lock()
            .expect("memo poisoned")
            .insert(key.clone(), total.clone());
        total
    }

    /// Number of memoized entries, for diagnostics.
    pub fn memo_len(&self) -> usize {
        self.memo.lock().expect("memo poisoned").len()
    }
}

/// `𝒫_q(ν)` computed from scratch (no shared memo).
pub fn kostant_partition_q(datum: &RootDatum, nu: &Weight) -> Result<QPolynomial> {
    KostantPartition::new(datum).q_analogue(nu)
}

/// `𝒫(ν)`.
pub fn kostant_partition(datum: &RootDatum, nu: &Weight) -> Result<u64> {
    KostantPartition::new(datum).count_at_one(nu)
}
