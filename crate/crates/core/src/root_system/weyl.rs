use std::collections::HashSet;

use serde::Serialize;

use super::{RootDatum, Weight};
use crate::error::{Error, Result};

/// Default cap on `|W|` for full enumeration.
pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

/// A Weyl group element, stored by the images of the fundamental weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeylElement {
    /// `images[j]` = fundamental coordinates of `w(ϖ_{j+1})`.
    images: Vec<Vec<i64>>,
    length: usize,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let images = (0..rank)
            .map(|j| {
                let mut e = vec![0; rank];
                e[j] = 1;
                e
            })
            .collect();
        Self { images, length: 0 }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// `(−1)^{l(w)}`.
    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn images(&self) -> &[Vec<i64>] {
        &self.images
    }

    /// `w(λ)` for λ in fundamental coordinates.
    pub fn act(&self, lambda: &[i64]) -> Vec<i64> {
        let n = self.images.len();
        let mut out = vec![0; n];
        for (j, &c) in lambda.iter().enumerate() {
            if c != 0 {
                for (o, x) in out.iter_mut().zip(&self.images[j]) {
                    *o += c * x;
                }
            }
        }
        out
    }

    /// `w(λ)`, returned in fundamental coordinates.
    pub fn act_weight(&self, datum: &RootDatum, lambda: &Weight) -> Result<Weight> {
        let l = datum.to_fundamental(lambda)?;
        Ok(Weight::fundamental(self.act(l.coords())))
    }

    /// `w·s_i` (1-based `i`).
    fn times_simple(&self, datum: &RootDatum, i: usize) -> Self {
        let idx = i - 1;
        let alpha: Vec<i64> = datum.cartan().iter().map(|row| row[idx]).collect();
        let w_alpha = self.act(&alpha);
        let mut images = self.images.clone();
        for (x, a) in images[idx].iter_mut().zip(&w_alpha) {
            *x -= a;
        }
        Self {
            images,
            length: self.length + 1,
        }
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self, datum: &RootDatum) -> usize {
        datum
            .positive_roots()
            .iter()
            .filter(|beta| {
                let img = self.act(&datum.root_to_fund(beta));
                let r = datum.fund_to_root_rational(&img);
                r.iter().any(|x| *x < num_rational::Ratio::from_integer(0))
            })
            .count()
    }
}

impl RootDatum {
    /// All of `W`, each element once, sorted by length and then by `w(ρ)`.
    pub fn weyl_group(&self) -> Result<Vec<WeylElement>> {
        self.weyl_group_with_cap(DEFAULT_WEYL_CAP)
    }

    /// Breadth-first closure under right multiplication by simple
    /// reflections, deduplicated by the action on ρ.
    pub fn weyl_group_with_cap(&self, cap: usize) -> Result<Vec<WeylElement>> {
        let order = self.weyl_order();
        if order > cap as u128 {
            return Err(Error::WeylCapExceeded { order, cap });
        }
        let rho = vec![1; self.rank()];
        let id = WeylElement::identity(self.rank());
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        seen.insert(id.act(&rho));
        let mut all = vec![id];
        let mut frontier = 0;
        while frontier < all.len() {
            let level_end = all.len();
            for k in frontier..level_end {
                for i in 1..=self.rank() {
                    let next = all[k].times_simple(self, i);
                    if seen.insert(next.act(&rho)) {
                        all.push(next);
                        if all.len() > cap {
                            return Err(Error::WeylCapExceeded {
                                order: all.len() as u128,
                                cap,
                            });
                        }
                    }
                }
            }
            frontier = level_end;
        }
        all.sort_by(|a, b| {
            a.length
                .cmp(&b.length)
                .then_with(|| a.act(&rho).cmp(&b.act(&rho)))
        });
        Ok(all)
    }
}
