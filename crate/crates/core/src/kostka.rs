//! Kostka–Foulkes polynomials via the alternating Weyl sum
//! `K_{λμ}(q) = ∑_{w∈W} (−1)^{l(w)} 𝒫_q(w(λ+ρ) − μ − ρ)`,
//! weight multiplicities and generalized exponents.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::KostantPartition;
use crate::poly::QPolynomial;
use crate::root_system::{Rational, RootDatum, Weight, WeylElement, DEFAULT_WEYL_CAP};

/// The exponents `m¹_λ ≤ … ≤ m^{k_λ}_λ` of `K_{λ0}(q)`, with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentMultiset {
    exponents: Vec<u32>,
}

impl ExponentMultiset {
    pub fn new(mut exponents: Vec<u32>) -> Self {
        exponents.sort_unstable();
        Self { exponents }
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// `∑ q^{m_i}`.
    pub fn to_polynomial(&self) -> QPolynomial {
        QPolynomial::from_terms(self.exponents.iter().map(|&e| (e, 1)))
    }
}

/// Evaluates Kostka–Foulkes polynomials for one root datum, reusing the
/// enumerated Weyl group and the partition-function memo across calls.
pub struct KostkaFoulkes {
    datum: RootDatum,
    weyl: Vec<WeylElement>,
    partition: KostantPartition,
}

impl KostkaFoulkes {
    pub fn new(datum: &RootDatum) -> Result<Self> {
        Self::with_cap(datum, DEFAULT_WEYL_CAP)
    }

    pub fn with_cap(datum: &RootDatum, cap: usize) -> Result<Self> {
        Ok(Self {
            weyl: datum.weyl_group_with_cap(cap)?,
            partition: KostantPartition::new(datum),
            datum: datum.clone(),
        })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    fn dominant_fund(&self, lambda: &Weight) -> Result<Vec<i64>> {
        let l = self.datum.to_fundamental(lambda)?;
        if l.coords().iter().any(|&c| c < 0) {
            return Err(Error::NonDominant {
                coords: l.coords().to_vec(),
            });
        }
        Ok(l.into_coords())
    }

    /// `K_{λμ}(q)` for dominant `λ` and any integral `μ`.
    pub fn polynomial(&self, lambda: &Weight, mu: &Weight) -> Result<QPolynomial> {
        let lam = self.dominant_fund(lambda)?;
        let mu_f = self.datum.to_fundamental(mu)?.into_coords();
        let lam_rho: Vec<i64> = lam.iter().map(|c| c + 1).collect();

        let mut total = QPolynomial::zero();
        for w in &self.weyl {
            let nu: Vec<i64> = w
                .act(&lam_rho)
                .iter()
                .zip(&mu_f)
                .map(|(a, m)| a - m - 1)
                .collect();
            let r = self.datum.fund_to_root_rational(&nu);
            if r.iter()
                .any(|x| !x.is_integer() || *x < Rational::from_integer(0))
            {
                continue;
            }
            let r: Vec<i64> = r.iter().map(|x| x.to_integer()).collect();
            let term = self.partition.count_root_coords(&r);
            if w.sign() > 0 {
                total += &term;
            } else {
                total -= &term;
            }
        }

        if self.datum.is_dominant(mu)? && !total.has_nonnegative_coefficients() {
            return Err(Error::Inconsistent(format!(
                "K_(λ,μ)(q) = {total} has a negative coefficient for dominant μ"
            )));
        }
        Ok(total)
    }

    /// `dim V(λ)_μ = K_{λμ}(1)`.
    pub fn multiplicity(&self, lambda: &Weight, mu: &Weight) -> Result<u64> {
        let p = self.polynomial(lambda, mu)?;
        let v = p.eval(1);
        if v < 0 {
            return Err(Error::Inconsistent(format!("K(1) = {v} is negative")));
        }
        Ok(v as u64)
    }

    /// The exponents of `K_{λ0}(q)`.
    pub fn generalized_exponents(&self, lambda: &Weight) -> Result<ExponentMultiset> {
        let zero = Weight::zero(self.datum.rank(), lambda.basis());
        let p = self.polynomial(lambda, &zero)?;
        exponents_of(&p)
    }
}

/// Reads a polynomial with non-negative coefficients as a multiset of
/// exponents.
pub fn exponents_of(p: &QPolynomial) -> Result<ExponentMultiset> {
    if !p.has_nonnegative_coefficients() {
        return Err(Error::Inconsistent(format!(
            "{p} has a negative coefficient and is not an exponent generating function"
        )));
    }
    Ok(ExponentMultiset::new(
        p.terms()
            .flat_map(|(e, c)| std::iter::repeat_n(e, c as usize))
            .collect(),
    ))
}

pub fn kostka_foulkes(datum: &RootDatum, lambda: &Weight, mu: &Weight) -> Result<QPolynomial> {
    KostkaFoulkes::new(datum)?.polynomial(lambda, mu)
}

pub fn weight_multiplicity(datum: &RootDatum, lambda: &Weight, mu: &Weight) -> Result<u64> {
    KostkaFoulkes::new(datum)?.multiplicity(lambda, mu)
}

pub fn generalized_exponents(datum: &RootDatum, lambda: &Weight) -> Result<ExponentMultiset> {
    KostkaFoulkes::new(datum)?.generalized_exponents(lambda)
}

/// Weyl's dimension formula `∏_{α>0} (λ+ρ, α)/(ρ, α)`.
pub fn weyl_dimension(datum: &RootDatum, lambda: &Weight) -> Result<u128> {
    let l = datum.to_fundamental(lambda)?;
    if l.coords().iter().any(|&c| c < 0) {
        return Err(Error::NonDominant {
            coords: l.coords().to_vec(),
        });
    }
    let d = datum.symmetrizer();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for alpha in datum.positive_roots() {
        // (ϖ_i, α) = d_i α_i
        let top: i64 = (0..datum.rank())
            .map(|i| (l.coords()[i] + 1) * d[i] * alpha[i])
            .sum();
        let bottom: i64 = (0..datum.rank()).map(|i| d[i] * alpha[i]).sum();
        num *= top as u128;
        den *= bottom as u128;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    if den != 1 {
        return Err(Error::Inconsistent(format!(
            "Weyl dimension is not an integer ({num}/{den})"
        )));
    }
    Ok(num)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> RootDatum {
        RootDatum::from_label("A", n).unwrap()
    }

    fn f(v: &[i64]) -> Weight {
        Weight::fundamental(v.to_vec())
    }

    #[test]
    fn trivial_module() {
        let d = a(2);
        assert_eq!(
            kostka_foulkes(&d, &f(&[0, 0]), &f(&[0, 0])).unwrap(),
            QPolynomial::one()
        );
        assert_eq!(generalized_exponents(&d, &f(&[0, 0])).unwrap().as_slice(), &[0]);
    }

    #[test]
    fn a2_adjoint() {
        let d = a(2);
        let k = kostka_foulkes(&d, &f(&[1, 1]), &f(&[0, 0])).unwrap();
        assert_eq!(k, QPolynomial::from_terms([(1, 1), (2, 1)]));
        assert_eq!(weight_multiplicity(&d, &f(&[1, 1]), &f(&[0, 0])).unwrap(), 2);
    }

    #[test]
    fn a3_zero_weight_exponents() {
        let d = a(3);
        let k = kostka_foulkes(&d, &f(&[1, 2, 1]), &f(&[0, 0, 0])).unwrap();
        assert_eq!(
            k,
            QPolynomial::from_terms([(3, 1), (4, 1), (5, 2), (6, 2), (7, 1)])
        );
        assert_eq!(
            weight_multiplicity(&d, &f(&[1, 2, 1]), &f(&[0, 0, 0])).unwrap(),
            7
        );
        assert_eq!(
            generalized_exponents(&d, &f(&[1, 2, 1])).unwrap().as_slice(),
            &[3, 4, 5, 5, 6, 6, 7]
        );
    }

    #[test]
    fn classical_exponents_a3() {
        let d = a(3);
        assert_eq!(
            generalized_exponents(&d, &f(&[1, 0, 1])).unwrap().as_slice(),
            &[1, 2, 3]
        );
    }

    #[test]
    fn highest_weight_space_is_one_dimensional() {
        let d = a(3);
        for lam in [[1, 0, 0], [2, 1, 0], [0, 3, 1]] {
            assert_eq!(weight_multiplicity(&d, &f(&lam), &f(&lam)).unwrap(), 1);
        }
    }

    #[test]
    fn non_dominant_rejected() {
        let d = a(2);
        assert!(matches!(
            kostka_foulkes(&d, &f(&[-1, 1]), &f(&[0, 0])),
            Err(Error::NonDominant { .. })
        ));
        assert!(matches!(
            weyl_dimension(&d, &f(&[0, -1])),
            Err(Error::NonDominant { .. })
        ));
    }

    #[test]
    fn weyl_cap_rejected() {
        let d = a(3);
        assert!(matches!(
            KostkaFoulkes::with_cap(&d, 5),
            Err(Error::WeylCapExceeded { .. })
        ));
    }

    #[test]
    fn dimensions() {
        assert_eq!(weyl_dimension(&a(2), &f(&[0, 0])).unwrap(), 1);
        for k in 0..6 {
            assert_eq!(weyl_dimension(&a(1), &f(&[k])).unwrap(), k as u128 + 1);
        }
        assert_eq!(weyl_dimension(&a(2), &f(&[1, 1])).unwrap(), 8);
        let g2 = RootDatum::from_label("G", 2).unwrap();
        // the 7- and 14-dimensional modules
        assert_eq!(weyl_dimension(&g2, &f(&[1, 0])).unwrap(), 7);
        assert_eq!(weyl_dimension(&g2, &f(&[0, 1])).unwrap(), 14);
    }

    #[test]
    fn vanishes_outside_dominance() {
        let d = a(2);
        // μ = 2ϖ1 ⋠ ϖ1 + ϖ2 in the root order (different class mod Q)
        assert!(kostka_foulkes(&d, &f(&[1, 1]), &f(&[3, 0])).unwrap().is_zero());
        assert!(kostka_foulkes(&d, &f(&[0, 0]), &f(&[1, 1])).unwrap().is_zero());
    }
}
