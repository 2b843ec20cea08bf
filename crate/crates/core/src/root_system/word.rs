use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{RootDatum, RootType, Weight};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WordStyle {
    /// Greedy: repeatedly reflect in the smallest index with a positive
    /// coordinate, starting from ρ.
    Any,
    /// `s_1…s_n s_1…s_{n−1} … s_1 s_2 s_1` (type A only).
    TypeAStandard,
}

/// A reduced word `(i_1, …, i_N)` for the longest element, letters 1-based,
/// together with its β-sequence `β_k = s_{i_1}⋯s_{i_{k−1}}(α_{i_k})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ReducedWord {
    letters: Vec<usize>,
    #[serde(skip)]
    betas: Vec<Vec<i64>>,
}

impl ReducedWord {
    /// Validates that `letters` is a reduced word for `w₀`: the length is
    /// `N` and the β-sequence consists of distinct positive roots.
    pub fn new(datum: &RootDatum, letters: Vec<usize>) -> Result<Self> {
        let betas = beta_sequence_of(datum, &letters)?;
        Ok(Self { letters, betas })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Root-basis coordinates of `β_1, …, β_N`.
    pub fn betas(&self) -> &[Vec<i64>] {
        &self.betas
    }

    pub fn heights(&self) -> Vec<i64> {
        self.betas.iter().map(|b| b.iter().sum()).collect()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// The root packages `Δ_j⁺ = {β_l : i_l = j}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootPackages {
    /// `slots[j-1]` lists the slots `l` (0-based) with `i_l = j`, in the
    /// decreasing root order `α_{j,1} > α_{j,2} > …`.
    slots: Vec<Vec<usize>>,
    roots: Vec<Vec<Vec<i64>>>,
}

impl RootPackages {
    pub fn slots(&self, j: usize) -> &[usize] {
        &self.slots[j - 1]
    }

    pub fn roots(&self, j: usize) -> &[Vec<i64>] {
        &self.roots[j - 1]
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn all_slots(&self) -> &[Vec<usize>] {
        &self.slots
    }
}

/// β-sequence of an arbitrary letter sequence; errors unless it is a
/// reduced word for `w₀`.
pub fn beta_sequence_of(datum: &RootDatum, letters: &[usize]) -> Result<Vec<Vec<i64>>> {
    let n = datum.rank();
    let not_reduced = |reason: String| Error::NotReduced {
        letters: letters.to_vec(),
        reason,
    };
    if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l > n) {
        return Err(not_reduced(format!("letter {bad} outside 1..={n}")));
    }
    if letters.len() != datum.num_positive_roots() {
        return Err(not_reduced(format!(
            "length {} differs from N = {}",
            letters.len(),
            datum.num_positive_roots()
        )));
    }
    let mut seen = HashSet::new();
    let mut betas = Vec::with_capacity(letters.len());
    for (k, &ik) in letters.iter().enumerate() {
        let mut v = vec![0; n];
        v[ik - 1] = 1;
        for &j in letters[..k].iter().rev() {
            v = datum.reflect_root_coords(j, &v);
        }
        if v.iter().any(|&c| c < 0) {
            return Err(not_reduced(format!("β_{} is negative", k + 1)));
        }
        if !seen.insert(v.clone()) {
            return Err(not_reduced(format!("β_{} repeats an earlier root", k + 1)));
        }
        betas.push(v);
    }
    Ok(betas)
}

impl RootDatum {
    pub fn longest_word(&self, style: WordStyle) -> Result<ReducedWord> {
        let letters = match style {
            WordStyle::TypeAStandard => {
                if self.root_type() != RootType::A {
                    return Err(Error::RequiresTypeA {
                        operation: "typeA_standard word",
                        label: self.root_type().to_string(),
                        rank: self.rank(),
                    });
                }
                (1..=self.rank()).rev().flat_map(|m| 1..=m).collect()
            }
            WordStyle::Any => {
                let mut mu = vec![1; self.rank()];
                let mut out = Vec::new();
                while let Some(i) = mu.iter().position(|&c| c > 0) {
                    mu = self.reflect_fund_coords(i + 1, &mu);
                    out.push(i + 1);
                }
                out
            }
        };
        ReducedWord::new(self, letters)
    }

    /// `β_1, …, β_N` as root-basis weights; the order is `β_N < … < β_1`.
    pub fn beta_sequence(&self, word: &[usize]) -> Result<Vec<Weight>> {
        Ok(beta_sequence_of(self, word)?
            .into_iter()
            .map(Weight::root)
            .collect())
    }

    pub fn root_packages(&self, word: &ReducedWord) -> RootPackages {
        let n = self.rank();
        let mut slots = vec![Vec::new(); n];
        let mut roots = vec![Vec::new(); n];
        for (l, (&i, beta)) in word.letters().iter().zip(word.betas()).enumerate() {
            slots[i - 1].push(l);
            roots[i - 1].push(beta.clone());
        }
        RootPackages { slots, roots }
    }
}
