//! Root systems, weights, Weyl groups and reduced words for the longest
//! element.
//!
//! Conventions:
//! - simple-root indices are 1-based in every public API (`i ∈ 1..=n`);
//! - the Cartan matrix is `a_ij = ⟨α_i^∨, α_j⟩`, so the fundamental
//!   coordinates of `α_j` form column `j`;
//! - the invariant form is normalized so short roots have `(α, α) = 2`, i.e.
//!   `(α_i, α_i) = 2 d_i`.

mod weight;
mod weyl;
mod word;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use weight::{Basis, Weight};
pub use weyl::{WeylElement, DEFAULT_WEYL_CAP};
pub use word::{ReducedWord, RootPackages, WordStyle};

pub type Rational = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootType::A => "A",
            RootType::B => "B",
            RootType::C => "C",
            RootType::D => "D",
            RootType::E => "E",
            RootType::F => "F",
            RootType::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for RootType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(RootType::A),
            "B" => Ok(RootType::B),
            "C" => Ok(RootType::C),
            "D" => Ok(RootType::D),
            "E" => Ok(RootType::E),
            "F" => Ok(RootType::F),
            "G" => Ok(RootType::G),
            other => Err(Error::InvalidType {
                label: other.to_string(),
                rank: 0,
                reason: "type label must be one of A, B, C, D, E, F, G".into(),
            }),
        }
    }
}

/// Cartan data and positive roots for a simple type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    root_type: RootType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    /// Root-basis coordinates, sorted by height then lexicographically.
    positive_roots: Vec<Vec<i64>>,
    inverse_cartan: Vec<Vec<Rational>>,
}

impl RootDatum {
    /// Standard Cartan data for `(type, rank)` (Bourbaki numbering).
    pub fn new(root_type: RootType, rank: usize) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidType {
            label: root_type.to_string(),
            rank,
            reason: reason.to_string(),
        };
        // (edges, symmetrizer); an edge joins two nodes with (α_i, α_j) = -max(d_i, d_j)
        let (edges, symmetrizer): (Vec<(usize, usize)>, Vec<i64>) = match root_type {
            RootType::A => {
                if rank < 1 {
                    return Err(invalid("A_n requires n >= 1"));
                }
                (chain(rank), vec![1; rank])
            }
            RootType::B => {
                if rank < 2 {
                    return Err(invalid("B_n requires n >= 2"));
                }
                let mut d = vec![2; rank];
                d[rank - 1] = 1;
                (chain(rank), d)
            }
            RootType::C => {
                if rank < 3 {
                    return Err(invalid("C_n requires n >= 3"));
                }
                let mut d = vec![1; rank];
                d[rank - 1] = 2;
                (chain(rank), d)
            }
            RootType::D => {
                if rank < 4 {
                    return Err(invalid("D_n requires n >= 4"));
                }
                let mut e = chain(rank - 1);
                e.push((rank - 3, rank - 1));
                (e, vec![1; rank])
            }
            RootType::E => {
                if !(6..=8).contains(&rank) {
                    return Err(invalid("E_n requires n in {6, 7, 8}"));
                }
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..rank - 1).map(|i| (i, i + 1)));
                (e, vec![1; rank])
            }
            RootType::F => {
                if rank != 4 {
                    return Err(invalid("F_n requires n = 4"));
                }
                (chain(4), vec![2, 2, 1, 1])
            }
            RootType::G => {
                if rank != 2 {
                    return Err(invalid("G_n requires n = 2"));
                }
                (chain(2), vec![1, 3])
            }
        };

        let mut cartan = vec![vec![0i64; rank]; rank];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(i, j) in &edges {
            let b = -symmetrizer[i].max(symmetrizer[j]);
            cartan[i][j] = b / symmetrizer[i];
            cartan[j][i] = b / symmetrizer[j];
        }

        let inverse_cartan =
            invert(&cartan).ok_or_else(|| Error::Inconsistent("singular Cartan matrix".into()))?;
        let positive_roots = close_positive_roots(&cartan);

        let datum = RootDatum {
            root_type,
            rank,
            cartan,
            symmetrizer,
            positive_roots,
            inverse_cartan,
        };
        debug_assert_eq!(
            Some(datum.num_positive_roots()),
            expected_root_count(root_type, rank)
        );
        Ok(datum)
    }

    pub fn from_label(label: &str, rank: usize) -> Result<Self> {
        Self::new(label.parse()?, rank)
    }

    pub fn root_type(&self) -> RootType {
        self.root_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.root_type, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn is_simply_laced(&self) -> bool {
        self.symmetrizer.iter().all(|&d| d == 1)
    }

    pub fn is_type_a(&self) -> bool {
        self.root_type == RootType::A
    }

    /// `N = |Δ⁺|`.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Root-basis coordinates of the positive roots (height, then lex order).
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn positive_root_weights(&self) -> Vec<Weight> {
        self.positive_roots.iter().cloned().map(Weight::root).collect()
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots.last().expect("at least one root")
    }

    /// `ρ = ∑ ϖ_i`.
    pub fn rho(&self) -> Weight {
        Weight::fundamental(vec![1; self.rank])
    }

    /// `ϖ_i`, 1-based.
    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut c = vec![0; self.rank];
        c[i - 1] = 1;
        Weight::fundamental(c)
    }

    /// `α_i` in root coordinates, 1-based.
    pub fn simple_root(&self, i: usize) -> Weight {
        let mut c = vec![0; self.rank];
        c[i - 1] = 1;
        Weight::root(c)
    }

    pub(crate) fn check_len(&self, coords: &[i64]) -> Result<()> {
        if coords.len() != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                got: coords.len(),
            });
        }
        Ok(())
    }

    /// Fundamental coordinates of a root-basis vector: `λ = A x`.
    pub(crate) fn root_to_fund(&self, x: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * x[j]).sum())
            .collect()
    }

    /// Rational root coordinates of a fundamental-basis vector: `x = A⁻¹ λ`.
    pub(crate) fn fund_to_root_rational(&self, lambda: &[i64]) -> Vec<Rational> {
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| self.inverse_cartan[i][j] * lambda[j])
                    .fold(Rational::from_integer(0), |a, b| a + b)
            })
            .collect()
    }

    /// Converts to the fundamental basis (always exact).
    pub fn to_fundamental(&self, w: &Weight) -> Result<Weight> {
        self.check_len(w.coords())?;
        Ok(match w.basis() {
            Basis::Fundamental => w.clone(),
            Basis::Root => Weight::fundamental(self.root_to_fund(w.coords())),
        })
    }

    /// Converts to the root basis; weights off the root lattice are reported,
    /// never rounded.
    pub fn to_root(&self, w: &Weight) -> Result<Weight> {
        self.check_len(w.coords())?;
        match w.basis() {
            Basis::Root => Ok(w.clone()),
            Basis::Fundamental => {
                let r = self.fund_to_root_rational(w.coords());
                if r.iter().all(|x| x.is_integer()) {
                    Ok(Weight::root(r.iter().map(|x| x.to_integer()).collect()))
                } else {
                    Err(Error::NonIntegral {
                        coords: w.coords().to_vec(),
                    })
                }
            }
        }
    }

    /// Root coordinates as rationals, whatever the basis.
    pub fn root_coords_rational(&self, w: &Weight) -> Result<Vec<Rational>> {
        self.check_len(w.coords())?;
        Ok(match w.basis() {
            Basis::Root => w.coords().iter().map(|&c| Rational::from_integer(c)).collect(),
            Basis::Fundamental => self.fund_to_root_rational(w.coords()),
        })
    }

    /// `(λ, μ)` with `(α_i, α_i) = 2 d_i`.
    pub fn pairing(&self, lambda: &Weight, mu: &Weight) -> Result<Rational> {
        let l = self.to_fundamental(lambda)?;
        let m = self.root_coords_rational(mu)?;
        // (ϖ_i, α_j) = d_j δ_ij
        Ok(l.coords()
            .iter()
            .zip(&m)
            .zip(&self.symmetrizer)
            .map(|((&li, mi), &di)| *mi * (li * di))
            .fold(Rational::from_integer(0), |a, b| a + b))
    }

    /// `(λ, α_i^∨)`, i.e. the i-th fundamental coordinate (1-based).
    pub fn coroot_pairing(&self, lambda: &Weight, i: usize) -> Result<i64> {
        Ok(self.to_fundamental(lambda)?.coords()[i - 1])
    }

    /// Sum of root-basis coordinates.
    pub fn height(&self, beta: &Weight) -> Result<i64> {
        let r = self.to_root(beta)?;
        if r.coords().iter().any(|&c| c < 0) {
            return Err(Error::NegativeRootCoordinate {
                coords: r.coords().to_vec(),
            });
        }
        Ok(r.coords().iter().sum())
    }

    pub fn is_dominant(&self, lambda: &Weight) -> Result<bool> {
        Ok(self.to_fundamental(lambda)?.coords().iter().all(|&c| c >= 0))
    }

    /// `λ ⪯ μ ⇔ μ − λ ∈ P⁺`.
    pub fn dominance_leq(&self, lambda: &Weight, mu: &Weight) -> Result<bool> {
        let l = self.to_fundamental(lambda)?;
        let m = self.to_fundamental(mu)?;
        Ok(l.coords().iter().zip(m.coords()).all(|(a, b)| b >= a))
    }

    /// `s_i` applied to root-basis coordinates (1-based `i`).
    pub fn reflect_root_coords(&self, i: usize, v: &[i64]) -> Vec<i64> {
        let i = i - 1;
        let p: i64 = (0..self.rank).map(|j| self.cartan[i][j] * v[j]).sum();
        let mut out = v.to_vec();
        out[i] -= p;
        out
    }

    /// `s_i` applied to fundamental-basis coordinates (1-based `i`).
    pub fn reflect_fund_coords(&self, i: usize, lambda: &[i64]) -> Vec<i64> {
        let i = i - 1;
        let c = lambda[i];
        (0..self.rank)
            .map(|k| lambda[k] - c * self.cartan[k][i])
            .collect()
    }

    /// Index of a root (root coordinates) in `positive_roots`.
    pub fn positive_root_index(&self, coords: &[i64]) -> Option<usize> {
        self.positive_roots.iter().position(|r| r == coords)
    }

    /// `|W|` from the classification.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.root_type {
            RootType::A => fact(n + 1),
            RootType::B | RootType::C => (1u128 << n) * fact(n),
            RootType::D => (1u128 << (n - 1)) * fact(n),
            RootType::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            RootType::F => 1152,
            RootType::G => 12,
        }
    }
}

fn chain(n: usize) -> Vec<(usize, usize)> {
    (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect()
}

/// Known `|Δ⁺|` for each type.
pub fn expected_root_count(root_type: RootType, rank: usize) -> Option<usize> {
    let n = rank;
    Some(match root_type {
        RootType::A => n * (n + 1) / 2,
        RootType::B | RootType::C => n * n,
        RootType::D => n * (n - 1),
        RootType::E => match n {
            6 => 36,
            7 => 63,
            8 => 120,
            _ => return None,
        },
        RootType::F => 24,
        RootType::G => 6,
    })
}

fn invert(m: &[Vec<i64>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let zero = Rational::from_integer(0);
    let one = Rational::from_integer(1);
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational> = row.iter().map(|&x| Rational::from_integer(x)).collect();
            r.extend((0..n).map(|j| if i == j { one } else { zero }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != zero)?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && a[r][col] != zero {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Closure of the simple roots under simple reflections, keeping positives.
fn close_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..n {
            let p: i64 = (0..n).map(|j| cartan[i][j] * v[j]).sum();
            let mut w = v.clone();
            w[i] -= p;
            if w.iter().all(|&c| c >= 0) && w.iter().any(|&c| c > 0) && seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(t: &str, n: usize) -> RootDatum {
        RootDatum::from_label(t, n).unwrap()
    }

    #[test]
    fn rank_one() {
        let a1 = datum("A", 1);
        assert_eq!(a1.positive_roots(), &[vec![1]]);
        assert_eq!(a1.cartan(), &[vec![2]]);
    }

    #[test]
    fn a3_cartan_and_roots() {
        let a3 = datum("A", 3);
        assert_eq!(a3.cartan(), &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(a3.num_positive_roots(), 6);
        assert_eq!(a3.highest_root(), &[1, 1, 1]);
    }

    #[test]
    fn root_counts_for_every_type() {
        let cases = [
            ("A", 1),
            ("A", 4),
            ("B", 2),
            ("B", 4),
            ("C", 3),
            ("C", 4),
            ("D", 4),
            ("D", 5),
            ("E", 6),
            ("E", 7),
            ("E", 8),
            ("F", 4),
            ("G", 2),
        ];
        for (t, n) in cases {
            let d = datum(t, n);
            assert_eq!(
                Some(d.num_positive_roots()),
                expected_root_count(d.root_type(), n),
                "{t}{n}"
            );
            // n(n-1) for D_n
            if t == "D" {
                assert_eq!(d.num_positive_roots(), n * (n - 1));
            }
        }
    }

    #[test]
    fn cartan_invariants() {
        for (t, n) in [("B", 3), ("C", 3), ("F", 4), ("G", 2), ("E", 6)] {
            let d = datum(t, n);
            let c = d.cartan();
            let s = d.symmetrizer();
            for i in 0..n {
                assert_eq!(c[i][i], 2);
                for j in 0..n {
                    if i != j {
                        assert!(c[i][j] <= 0);
                    }
                    assert_eq!(s[i] * c[i][j], s[j] * c[j][i], "{t}{n} symmetrizable");
                }
            }
            assert!(d
                .positive_roots()
                .iter()
                .all(|r| r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0)));
        }
    }

    #[test]
    fn invalid_types_are_rejected() {
        for (t, n) in [
            ("A", 0),
            ("B", 1),
            ("C", 2),
            ("D", 3),
            ("E", 5),
            ("E", 9),
            ("F", 3),
            ("G", 3),
        ] {
            let err = RootDatum::from_label(t, n).unwrap_err();
            assert!(matches!(err, Error::InvalidType { .. }), "{t}{n}");
            assert!(err.to_string().contains("requires"));
        }
        assert!(RootDatum::from_label("H", 3).is_err());
    }

    #[test]
    fn pairing_examples() {
        let a2 = datum("A", 2);
        let r = |v: Vec<i64>| Weight::root(v);
        assert_eq!(
            a2.pairing(&r(vec![1, 0]), &r(vec![0, 1])).unwrap(),
            Rational::from_integer(-1)
        );
        assert_eq!(
            a2.pairing(&a2.fundamental_weight(1), &a2.simple_root(1)).unwrap(),
            Rational::from_integer(1)
        );
        // (ρ, ρ) for A3 from the inverse Cartan entries
        let a3 = datum("A", 3);
        let rho = a3.rho();
        let mut sum = Rational::from_integer(0);
        for i in 1..=3 {
            for j in 1..=3 {
                sum += a3
                    .pairing(&a3.fundamental_weight(i), &a3.fundamental_weight(j))
                    .unwrap();
            }
        }
        assert_eq!(a3.pairing(&rho, &rho).unwrap(), sum);
        assert_eq!(sum, Rational::from_integer(5));
    }

    #[test]
    fn pairing_normalization_non_simply_laced() {
        let b2 = datum("B", 2);
        let a1 = b2.simple_root(1);
        let a2 = b2.simple_root(2);
        assert_eq!(b2.pairing(&a1, &a1).unwrap(), Rational::from_integer(4));
        assert_eq!(b2.pairing(&a2, &a2).unwrap(), Rational::from_integer(2));
        assert_eq!(b2.pairing(&a1, &a2).unwrap(), b2.pairing(&a2, &a1).unwrap());
    }

    #[test]
    fn pairing_dimension_mismatch() {
        let a2 = datum("A", 2);
        let err = a2
            .pairing(&Weight::fundamental(vec![1]), &Weight::fundamental(vec![1, 0]))
            .unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn basis_conversion() {
        let a2 = datum("A", 2);
        let theta = Weight::fundamental(vec![1, 1]);
        assert_eq!(a2.to_root(&theta).unwrap(), Weight::root(vec![1, 1]));
        assert!(matches!(
            a2.to_root(&a2.fundamental_weight(1)),
            Err(Error::NonIntegral { .. })
        ));
        let back = a2.to_fundamental(&Weight::root(vec![1, 0])).unwrap();
        assert_eq!(back.coords(), &[2, -1]);
    }

    #[test]
    fn heights() {
        let a2 = datum("A", 2);
        assert_eq!(a2.height(&a2.simple_root(1)).unwrap(), 1);
        assert_eq!(a2.height(&Weight::root(a2.highest_root().to_vec())).unwrap(), 2);
        let a3 = datum("A", 3);
        assert_eq!(a3.height(&Weight::root(a3.highest_root().to_vec())).unwrap(), 3);
        assert!(matches!(
            a3.height(&Weight::root(vec![1, -1, 0])),
            Err(Error::NegativeRootCoordinate { .. })
        ));
    }

    #[test]
    fn dominance_examples() {
        let a2 = datum("A", 2);
        let w1 = a2.fundamental_weight(1);
        let w2 = a2.fundamental_weight(2);
        assert!(a2.dominance_leq(&w1, &w1).unwrap());
        assert!(a2.dominance_leq(&Weight::fundamental(vec![0, 0]), &w1).unwrap());
        assert!(!a2.dominance_leq(&w1, &w2).unwrap());
    }
}
