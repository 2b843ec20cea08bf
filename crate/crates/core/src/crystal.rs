//! Type-A crystal combinatorics on semistandard Young tableaux.
//!
//! The crystal operators act through the row reading word (rows from
//! bottom to top, each row left to right). For the pair of letters
//! `i, i+1`, every `i+1` is an opening bracket and every `i` a closing
//! one; after cancelling matched pairs the word reads `i…i (i+1)…(i+1)`.
//! `ε_i` counts the unmatched `i+1`, `φ_i` the unmatched `i`, and `ẽ_i`
//! turns the leftmost unmatched `i+1` into `i`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kostka::ExponentMultiset;
use crate::poly::MultiPolynomial;
use crate::root_system::{RootDatum, Weight};

/// (row, column) address of a box.
type Cell = (usize, usize);

/// A semistandard Young tableau with entries in `1..=max_entry`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Validates row weak increase, column strict increase, partition shape
    /// and positive entries. Empty rows are dropped.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        for (r, row) in rows.iter().enumerate() {
            if row.contains(&0) {
                return Err(Error::OutOfRange(format!("row {} has a zero entry", r + 1)));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::OutOfRange(format!(
                    "row {} is not weakly increasing",
                    r + 1
                )));
            }
            if r > 0 {
                let above = &rows[r - 1];
                if row.len() > above.len() {
                    return Err(Error::OutOfRange(format!(
                        "row {} is longer than the row above",
                        r + 1
                    )));
                }
                if row.iter().zip(above).any(|(b, a)| b <= a) {
                    return Err(Error::OutOfRange(format!(
                        "column strictness fails between rows {} and {}",
                        r,
                        r + 1
                    )));
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn num_boxes(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Number of occurrences of each letter `1..=letters`.
    pub fn content(&self, letters: usize) -> Vec<usize> {
        let mut c = vec![0; letters];
        for &x in self.rows.iter().flatten() {
            if (x as usize) <= letters {
                c[x as usize - 1] += 1;
            }
        }
        c
    }

    /// Rows from bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// The unmatched `i+1` positions and unmatched `i` positions in the
    /// reading word, as flat (row, column) addresses.
    fn unmatched(&self, i: u32) -> (Vec<Cell>, Vec<Cell>) {
        let mut open: Vec<Cell> = Vec::new();
        let mut closed: Vec<Cell> = Vec::new();
        for r in (0..self.rows.len()).rev() {
            for (c, &x) in self.rows[r].iter().enumerate() {
                if x == i + 1 {
                    open.push((r, c));
                } else if x == i && open.pop().is_none() {
                    closed.push((r, c));
                }
            }
        }
        (open, closed)
    }

    /// `ε_i`.
    pub fn epsilon(&self, i: u32) -> usize {
        self.unmatched(i).0.len()
    }

    /// `φ_i`.
    pub fn phi(&self, i: u32) -> usize {
        self.unmatched(i).1.len()
    }

    /// `ẽ_i T`, or `None` when `ε_i(T) = 0`.
    pub fn raise(&self, i: u32) -> Option<Tableau> {
        let (open, _) = self.unmatched(i);
        let &(r, c) = open.first()?;
        let mut rows = self.rows.clone();
        rows[r][c] = i;
        Some(Tableau { rows })
    }

    /// `f̃_i T`, or `None` when `φ_i(T) = 0`.
    pub fn lower(&self, i: u32) -> Option<Tableau> {
        let (_, closed) = self.unmatched(i);
        let &(r, c) = closed.last()?;
        let mut rows = self.rows.clone();
        rows[r][c] = i + 1;
        Some(Tableau { rows })
    }
}

impl TryFrom<Vec<Vec<u32>>> for Tableau {
    type Error = Error;
    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<u32>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            write!(f, "[")?;
            for x in row {
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

pub(crate) fn require_type_a(datum: &RootDatum, operation: &'static str) -> Result<()> {
    if datum.is_type_a() {
        Ok(())
    } else {
        Err(Error::RequiresTypeA {
            operation,
            label: datum.root_type().to_string(),
            rank: datum.rank(),
        })
    }
}

fn dominant_coords(datum: &RootDatum, mu: &Weight) -> Result<Vec<i64>> {
    let m = datum.to_fundamental(mu)?;
    if m.coords().iter().any(|&c| c < 0) {
        return Err(Error::NonDominant {
            coords: m.coords().to_vec(),
        });
    }
    Ok(m.into_coords())
}

/// The partition with `μ_i` columns of height `i`.
pub fn shape_from_weight(datum: &RootDatum, mu: &Weight) -> Result<Vec<usize>> {
    require_type_a(datum, "shape_from_weight")?;
    let m = dominant_coords(datum, mu)?;
    let n = m.len();
    Ok((0..n)
        .map(|r| m[r..].iter().sum::<i64>() as usize)
        .filter(|&len| len > 0)
        .collect())
}

/// All semistandard tableaux of `shape` with entries in `1..=max_entry`,
/// in lexicographic row-major order.
pub fn enumerate_tableaux(shape: &[usize], max_entry: u32) -> Vec<Tableau> {
    let mut out = Vec::new();
    fill(shape, max_entry, None, &mut out);
    out
}

/// Semistandard tableaux of `shape` with prescribed content.
pub fn enumerate_with_content(shape: &[usize], content: &[usize]) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.iter().sum::<usize>() == content.iter().sum::<usize>() {
        fill(shape, content.len() as u32, Some(content.to_vec()), &mut out);
    }
    out
}

fn fill(shape: &[usize], max_entry: u32, content: Option<Vec<usize>>, out: &mut Vec<Tableau>) {
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&l| Vec::with_capacity(l)).collect();
    let mut remaining = content;
    fill_cell(shape, max_entry, 0, &mut rows, &mut remaining, out);
}

fn fill_cell(
    shape: &[usize],
    max_entry: u32,
    row: usize,
    rows: &mut Vec<Vec<u32>>,
    remaining: &mut Option<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if row == shape.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    let col = rows[row].len();
    if col == shape[row] {
        fill_cell(shape, max_entry, row + 1, rows, remaining, out);
        return;
    }
    let left = if col > 0 { rows[row][col - 1] } else { 1 };
    let above = if row > 0 { rows[row - 1][col] + 1 } else { 1 };
    let lo = left.max(above);
    // the cells below in this column need strictly larger entries
    let depth = shape[row + 1..].iter().take_while(|&&l| l > col).count() as u32;
    if lo + depth > max_entry {
        return;
    }
    for x in lo..=max_entry - depth {
        if let Some(rem) = remaining.as_mut() {
            if rem[x as usize - 1] == 0 {
                continue;
            }
            rem[x as usize - 1] -= 1;
        }
        rows[row].push(x);
        fill_cell(shape, max_entry, row, rows, remaining, out);
        rows[row].pop();
        if let Some(rem) = remaining.as_mut() {
            rem[x as usize - 1] += 1;
        }
    }
}

/// Zero-weight tableaux of shape `shape_from_weight(μ)`: each letter
/// `1..=n+1` occurs `|shape|/(n+1)` times. Empty when `μ` is off the root
/// lattice.
pub fn enumerate_zero_weight_tableaux(datum: &RootDatum, mu: &Weight) -> Result<Vec<Tableau>> {
    let shape = shape_from_weight(datum, mu)?;
    let letters = datum.rank() + 1;
    let boxes: usize = shape.iter().sum();
    if !boxes.is_multiple_of(letters) {
        return Ok(Vec::new());
    }
    if boxes == 0 {
        return Ok(vec![Tableau { rows: Vec::new() }]);
    }
    Ok(enumerate_with_content(&shape, &vec![boxes / letters; letters]))
}

fn check_index(datum: &RootDatum, i: usize) -> Result<()> {
    if i == 0 || i > datum.rank() {
        return Err(Error::OutOfRange(format!(
            "simple root index {i} not in 1..={}",
            datum.rank()
        )));
    }
    Ok(())
}

/// `ε_i(T)` for `1 ≤ i ≤ n`.
pub fn epsilon(datum: &RootDatum, t: &Tableau, i: usize) -> Result<usize> {
    require_type_a(datum, "epsilon")?;
    check_index(datum, i)?;
    Ok(t.epsilon(i as u32))
}

/// `𝓔(T) = ∑ ε_i(T) ϖ_i`.
pub fn cal_e(datum: &RootDatum, t: &Tableau) -> Result<Weight> {
    require_type_a(datum, "cal_e")?;
    Ok(Weight::fundamental(
        (1..=datum.rank() as u32).map(|i| t.epsilon(i) as i64).collect(),
    ))
}

/// `∑_{T} ∏ X_i^{ε_i(T)}` over the zero-weight tableaux of `μ`.
pub fn multivar_kostka(datum: &RootDatum, mu: &Weight) -> Result<MultiPolynomial> {
    let n = datum.rank();
    let mut p = MultiPolynomial::zero(n);
    for t in enumerate_zero_weight_tableaux(datum, mu)? {
        p.add_term((1..=n as u32).map(|i| t.epsilon(i) as u32).collect(), 1);
    }
    Ok(p)
}

/// The multiset `{𝓔(T)}` over zero-weight tableaux, kept in enumeration
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PPlusExponents {
    weights: Vec<Weight>,
}

impl PPlusExponents {
    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Multiplicity of each distinct weight, keyed by fundamental
    /// coordinates.
    pub fn counts(&self) -> BTreeMap<Vec<i64>, usize> {
        let mut m = BTreeMap::new();
        for w in &self.weights {
            *m.entry(w.coords().to_vec()).or_insert(0) += 1;
        }
        m
    }

    /// The weights sorted by the type-A total order.
    pub fn sorted(&self) -> Vec<Weight> {
        let mut w = self.weights.clone();
        w.sort_by(|a, b| typea_order_cmp(a.coords(), b.coords()));
        w
    }
}

pub fn pplus_exponents(datum: &RootDatum, mu: &Weight) -> Result<PPlusExponents> {
    let weights = enumerate_zero_weight_tableaux(datum, mu)?
        .iter()
        .map(|t| cal_e(datum, t))
        .collect::<Result<_>>()?;
    Ok(PPlusExponents { weights })
}

/// `h(λ) = ∑ i λ_i` on fundamental coordinates.
pub fn h_value(lambda: &[i64]) -> i64 {
    lambda.iter().enumerate().map(|(i, &c)| (i as i64 + 1) * c).sum()
}

/// `{h(𝓔(T))}` over zero-weight tableaux, sorted.
pub fn n_exponents(datum: &RootDatum, mu: &Weight) -> Result<ExponentMultiset> {
    let p = pplus_exponents(datum, mu)?;
    Ok(ExponentMultiset::new(
        p.weights().iter().map(|w| h_value(w.coords()) as u32).collect(),
    ))
}

/// Total order on dominant weights of type A: by `h` first, then at the
/// last coordinate where they differ the larger coordinate comes first.
pub fn typea_order_cmp(lambda: &[i64], mu: &[i64]) -> Ordering {
    h_value(lambda)
        .cmp(&h_value(mu))
        .then_with(|| match lambda.iter().zip(mu).rev().find(|(a, b)| a != b) {
            Some((a, b)) => b.cmp(a),
            None => Ordering::Equal,
        })
}

pub fn typea_order_leq(datum: &RootDatum, lambda: &Weight, mu: &Weight) -> Result<bool> {
    require_type_a(datum, "typea_order_leq")?;
    let l = dominant_coords(datum, lambda)?;
    let m = dominant_coords(datum, mu)?;
    Ok(typea_order_cmp(&l, &m) != Ordering::Greater)
}
