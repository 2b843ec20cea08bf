//! Exact integer polynomials: univariate in `q`, and multivariate in
//! `X_1, …, X_n`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// A polynomial in `q` with integer coefficients.
///
/// Stored sparsely as exponent → coefficient; zero coefficients are never
/// kept, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<(u32, i64)>", from = "Vec<(u32, i64)>")]
pub struct QPolynomial {
    coeffs: BTreeMap<u32, i64>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `coeff · q^exp`.
    pub fn monomial(exp: u32, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: u32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: u32) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: u32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    pub fn scale(&self, s: i64) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e, c * s)))
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.terms().map(|(e, c)| c * q.pow(e)).sum()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }
}

impl From<Vec<(u32, i64)>> for QPolynomial {
    fn from(terms: Vec<(u32, i64)>) -> Self {
        Self::from_terms(terms)
    }
}

impl From<QPolynomial> for Vec<(u32, i64)> {
    fn from(p: QPolynomial) -> Self {
        p.coeffs.into_iter().collect()
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        for (e, c) in rhs.terms() {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&QPolynomial> for QPolynomial {
    fn sub_assign(&mut self, rhs: &QPolynomial) {
        for (e, c) in rhs.terms() {
            self.add_term(e, -c);
        }
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        self.scale(-1)
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: i64, mono: &str) -> fmt::Result {
    let sign = if c < 0 {
        if first {
            "-"
        } else {
            " - "
        }
    } else if first {
        ""
    } else {
        " + "
    };
    let a = c.unsigned_abs();
    match (a, mono.is_empty()) {
        (_, true) => write!(f, "{sign}{a}"),
        (1, false) => write!(f, "{sign}{mono}"),
        (_, false) => write!(f, "{sign}{a}{mono}"),
    }
}

/// Increasing powers, e.g. `q^3 + q^4 + 2q^5`.
impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let mono = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            write_term(f, k == 0, c, &mono)?;
        }
        Ok(())
    }
}

/// A polynomial in `X_1, …, X_n` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl MultiPolynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Adds `coeff · ∏ X_i^{exps[i]}`.
    ///
    /// # Panics
    /// If `exps` does not have one entry per variable.
    pub fn add_term(&mut self, exps: Vec<u32>, coeff: i64) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        if coeff == 0 {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if *slot.get() == 0 {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i64)> + '_ {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at `X_i = 1` for all i.
    pub fn eval_ones(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Substitutes `X_i ↦ q^{weights[i]}`.
    pub fn specialize(&self, weights: &[u32]) -> QPolynomial {
        assert_eq!(weights.len(), self.nvars, "specialization length");
        QPolynomial::from_terms(self.terms.iter().map(|(e, &c)| {
            let deg = e.iter().zip(weights).map(|(a, w)| a * w).sum();
            (deg, c)
        }))
    }

    /// Substitutes `X_i ↦ q^i` (1-based i).
    pub fn principal_specialization(&self) -> QPolynomial {
        let w: Vec<u32> = (1..=self.nvars as u32).collect();
        self.specialize(&w)
    }
}

impl fmt::Display for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, &c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("X{}", i + 1)
                    } else {
                        format!("X{}^{}", i + 1, p)
                    }
                })
                .collect();
            write_term(f, k == 0, c, &mono.join("*"))?;
        }
        Ok(())
    }
}
