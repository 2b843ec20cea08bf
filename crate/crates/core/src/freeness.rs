//! Exponent patterns of PBW monomials over the center, and the type-A
//! transition matrix between central generators.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{ReducedWord, RootDatum};

/// E-exponents `a` and F-exponents `b` indexed by the slots of a reduced
/// word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExponentPattern {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
}

impl ExponentPattern {
    pub fn new(a: Vec<u64>, b: Vec<u64>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch {
                expected: a.len(),
                got: b.len(),
            });
        }
        Ok(Self { a, b })
    }

    pub fn zero(len: usize) -> Self {
        Self {
            a: vec![0; len],
            b: vec![0; len],
        }
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }
}

/// Result of splitting a pattern into a central part and a residue.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralFactorization {
    /// `c_j`: the power of the `j`-th central generator.
    pub central: Vec<u64>,
    pub residue: ExponentPattern,
}

fn packages(datum: &RootDatum, word: &ReducedWord, p: &ExponentPattern) -> Result<Vec<Vec<usize>>> {
    if p.len() != word.len() {
        return Err(Error::DimensionMismatch {
            expected: word.len(),
            got: p.len(),
        });
    }
    Ok(datum.root_packages(word).all_slots().to_vec())
}

/// True iff every package has a slot where `a` or `b` vanishes.
pub fn is_m_pattern(datum: &RootDatum, word: &ReducedWord, p: &ExponentPattern) -> Result<bool> {
    Ok(packages(datum, word, p)?
        .iter()
        .all(|slots| slots.iter().any(|&l| p.a[l] == 0 || p.b[l] == 0)))
}

/// Removes from each package the largest common power
/// `c_j = min_l min(a_l, b_l)`.
pub fn central_factorize(
    datum: &RootDatum,
    word: &ReducedWord,
    p: &ExponentPattern,
) -> Result<CentralFactorization> {
    let pk = packages(datum, word, p)?;
    let mut residue = p.clone();
    let central = pk
        .iter()
        .map(|slots| {
            let c = slots.iter().map(|&l| p.a[l].min(p.b[l])).min().unwrap_or(0);
            for &l in slots {
                residue.a[l] -= c;
                residue.b[l] -= c;
            }
            c
        })
        .collect();
    Ok(CentralFactorization { central, residue })
}

/// Multiplies `p` by `∏ z_j^{c_j}` at the level of exponents.
pub fn add_central(
    datum: &RootDatum,
    word: &ReducedWord,
    p: &ExponentPattern,
    central: &[u64],
) -> Result<ExponentPattern> {
    let pk = packages(datum, word, p)?;
    if central.len() != pk.len() {
        return Err(Error::DimensionMismatch {
            expected: pk.len(),
            got: central.len(),
        });
    }
    let mut out = p.clone();
    for (slots, &c) in pk.iter().zip(central) {
        for &l in slots {
            out.a[l] += c;
            out.b[l] += c;
        }
    }
    Ok(out)
}

fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

fn check_indices(n: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::OutOfRange(format!(
            "matrix index ({i},{j}) outside 1..={n}"
        )));
    }
    Ok(())
}

/// `a_{ij} = ∑_{t=1}^{i} (−1)^{t−1} t^j C(n+1, i−t)`.
pub fn center_matrix_entry(n: usize, i: usize, j: usize) -> Result<i128> {
    check_indices(n, i, j)?;
    Ok((1..=i as i128)
        .map(|t| {
            let sign = if t % 2 == 1 { 1 } else { -1 };
            sign * t.pow(j as u32) * binomial(n as i128 + 1, i as i128 - t)
        })
        .sum())
}

/// Determinant of the leading `s × s` block, by fraction-free (Bareiss)
/// elimination.
pub fn center_matrix_det(n: usize, s: usize) -> Result<i128> {
    if s == 0 || s > n {
        return Err(Error::OutOfRange(format!("block size {s} outside 1..={n}")));
    }
    let mut m: Vec<Vec<i128>> = (1..=s)
        .map(|i| (1..=s).map(|j| center_matrix_entry(n, i, j)).collect())
        .collect::<Result<_>>()?;
    Ok(bareiss(&mut m))
}

fn bareiss(m: &mut [Vec<i128>]) -> i128 {
    let s = m.len();
    let mut sign = 1;
    let mut prev = 1;
    for k in 0..s {
        if m[k][k] == 0 {
            match (k + 1..s).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..s {
            for j in k + 1..s {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[s - 1][s - 1]
}

/// `(−1)^{s(s−1)/2} ∏_{m=1}^{s} m!`.
pub fn closed_form_det(s: usize) -> i128 {
    let sign = if (s * s.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    };
    let mut prod: i128 = 1;
    let mut fact: i128 = 1;
    for m in 1..=s as i128 {
        fact *= m;
        prod *= fact;
    }
    sign * prod
}
