use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// Coordinates with respect to the fundamental weights `ϖ_i`.
    Fundamental,
    /// Coordinates with respect to the simple roots `α_i`.
    Root,
}

/// An integral vector tagged with the basis it is written in.
///
/// Conversions between the two bases go through a [`RootDatum`](super::RootDatum).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    coords: Vec<i64>,
    basis: Basis,
}

impl Weight {
    pub fn fundamental(coords: Vec<i64>) -> Self {
        Self {
            coords,
            basis: Basis::Fundamental,
        }
    }

    pub fn root(coords: Vec<i64>) -> Self {
        Self {
            coords,
            basis: Basis::Root,
        }
    }

    pub fn zero(rank: usize, basis: Basis) -> Self {
        Self {
            coords: vec![0; rank],
            basis,
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.coords
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Coordinate-wise sum.
    ///
    /// # Panics
    /// If the bases or lengths differ.
    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.basis, other.basis, "basis mismatch");
        assert_eq!(self.coords.len(), other.coords.len(), "length mismatch");
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
            basis: self.basis,
        }
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| c * k).collect(),
            basis: self.basis,
        }
    }
}

/// `2ϖ1 + ϖ3` (fundamental) or `α1 + α2` (root); `0` for the zero weight.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.basis {
            Basis::Fundamental => "ϖ",
            Basis::Root => "α",
        };
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            let a = c.abs();
            if a != 1 {
                write!(f, "{a}")?;
            }
            write!(f, "{sym}{}", i + 1)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(Weight::fundamental(vec![2, 0, 1]).to_string(), "2ϖ1 + ϖ3");
        assert_eq!(Weight::root(vec![1, -1]).to_string(), "α1 - α2");
        assert_eq!(Weight::fundamental(vec![0, 0]).to_string(), "0");
    }
}
