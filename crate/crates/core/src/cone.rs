//! The harmonic cone `C₀ = {ψ : ε_i(b_ψ) ≤ (Ω(ψ), α_i^∨) for all i}`:
//! membership, bounded enumeration, Hilbert basis, saturation sampling and
//! the structure constants of the degenerate semigroup algebra.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::crystal::require_type_a;
use crate::error::{Error, Result};
use crate::lusztig::{omega_of, LusztigDatum, PbwCrystal};
use crate::root_system::{ReducedWord, RootDatum};

/// Default cap on the number of lattice points an enumeration may visit.
pub const DEFAULT_BUDGET: u128 = 5_000_000;

/// A lattice point with its weight and crystal data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConePoint {
    pub psi: Vec<i64>,
    /// `Ω(ψ)` in the root basis.
    pub omega: Vec<i64>,
    /// `(ε_1, …, ε_n)`, i.e. `𝓔(b_ψ)` in fundamental coordinates.
    pub epsilon: Vec<i64>,
    /// `(ε_1*, …, ε_n*)`.
    pub epsilon_bar: Vec<i64>,
    pub in_cone: bool,
}

/// A structure constant `a_ψ · a_φ` of the degenerate algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DegenProduct {
    Zero,
    NonZero { q_exponent: i64, point: Vec<i64> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertBasis {
    pub bound: i64,
    pub generators: Vec<ConePoint>,
    /// Every enumerated cone point was re-derived as a sum of generators.
    pub complete: bool,
    pub max_generator_height: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationViolation {
    pub psi: Vec<i64>,
    pub k: i64,
    pub psi_in_cone: bool,
    pub multiple_in_cone: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationReport {
    pub checked: usize,
    pub violations: Vec<SaturationViolation>,
}

impl SaturationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The cone in Lusztig coordinates adapted to one reduced word.
pub struct HarmonicCone {
    datum: RootDatum,
    word: ReducedWord,
    pbw: PbwCrystal,
    heights: Vec<i64>,
    budget: u128,
}

impl HarmonicCone {
    pub fn new(datum: &RootDatum, word: &ReducedWord) -> Result<Self> {
        let pbw = PbwCrystal::new(datum)?;
        // validates the word against this datum
        let word = ReducedWord::new(datum, word.letters().to_vec())?;
        Ok(Self {
            datum: datum.clone(),
            heights: word.heights(),
            word,
            pbw,
            budget: DEFAULT_BUDGET,
        })
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    fn check_psi(&self, psi: &[i64]) -> Result<()> {
        if psi.len() != self.word.len() || psi.iter().any(|&x| x < 0) {
            return Err(Error::InvalidLusztigDatum {
                expected: self.word.len(),
                got: psi.len(),
            });
        }
        Ok(())
    }

    pub fn omega(&self, psi: &[i64]) -> Vec<i64> {
        omega_of(self.word.betas(), psi)
    }

    pub fn height(&self, psi: &[i64]) -> i64 {
        psi.iter().zip(&self.heights).map(|(x, h)| x * h).sum()
    }

    /// `(Ω(ψ), α_i^∨) − ε_i(b_ψ)` for each i; membership means all are
    /// non-negative.
    pub fn slack(&self, psi: &[i64]) -> Result<Vec<i64>> {
        self.check_psi(psi)?;
        let bound = self.datum.root_to_fund(&self.omega(psi));
        let eps = self.pbw.cal_e_raw(self.word.letters(), psi)?;
        Ok(bound.iter().zip(&eps).map(|(b, e)| b - e).collect())
    }

    pub fn in_cone(&self, psi: &[i64]) -> Result<bool> {
        Ok(self.slack(psi)?.iter().all(|&s| s >= 0))
    }

    pub fn point(&self, psi: &[i64]) -> Result<ConePoint> {
        let slack = self.slack(psi)?;
        Ok(ConePoint {
            psi: psi.to_vec(),
            omega: self.omega(psi),
            epsilon: self.pbw.cal_e_raw(self.word.letters(), psi)?,
            epsilon_bar: self.pbw.cal_e_bar_raw(self.word.letters(), psi)?,
            in_cone: slack.iter().all(|&s| s >= 0),
        })
    }

    /// Number of `ψ ∈ ℕ^N` with `height(Ω(ψ)) ≤ bound`.
    pub fn count_estimate(&self, bound: i64) -> u128 {
        if bound < 0 {
            return 0;
        }
        let b = bound as usize;
        // ways[s] = points using the slots so far with height exactly s
        let mut ways = vec![0u128; b + 1];
        ways[0] = 1;
        for &h in &self.heights {
            let h = h as usize;
            for s in h..=b {
                ways[s] = ways[s].saturating_add(ways[s - h]);
            }
        }
        ways.iter().fold(0u128, |a, &w| a.saturating_add(w))
    }

    /// Every `ψ ∈ ℕ^N` with `height(Ω(ψ)) ≤ bound`, cone or not, in
    /// lexicographic order.
    pub fn lattice_points(&self, bound: i64) -> Result<Vec<Vec<i64>>> {
        let estimate = self.count_estimate(bound);
        if estimate > self.budget {
            return Err(Error::BudgetExceeded {
                estimate,
                budget: self.budget,
            });
        }
        let mut out = Vec::new();
        if bound >= 0 {
            let mut cur = vec![0; self.heights.len()];
            self.lattice_rec(0, bound, &mut cur, &mut out);
        }
        Ok(out)
    }

    fn lattice_rec(&self, slot: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if slot == cur.len() {
            out.push(cur.clone());
            return;
        }
        let h = self.heights[slot];
        let mut x = 0;
        while x * h <= left {
            cur[slot] = x;
            self.lattice_rec(slot + 1, left - x * h, cur, out);
            x += 1;
        }
        cur[slot] = 0;
    }

    /// All cone points with `height(Ω(ψ)) ≤ bound`, in lexicographic order.
    pub fn enumerate(&self, bound: i64) -> Result<Vec<ConePoint>> {
        let mut out = Vec::new();
        for psi in self.lattice_points(bound)? {
            let p = self.point(&psi)?;
            if p.in_cone {
                out.push(p);
            }
        }
        Ok(out)
    }

    /// Cone points within the bound that are not a sum of two non-zero
    /// cone points.
    pub fn hilbert_basis(&self, bound: i64) -> Result<HilbertBasis> {
        let points = self.enumerate(bound)?;
        let members: HashSet<&[i64]> = points.iter().map(|p| p.psi.as_slice()).collect();
        let nonzero: Vec<&ConePoint> = points.iter().filter(|p| p.psi.iter().any(|&x| x != 0)).collect();

        let mut generators = Vec::new();
        for p in &nonzero {
            let reducible = nonzero.iter().any(|q| {
                q.psi != p.psi
                    && q.psi.iter().zip(&p.psi).all(|(a, b)| a <= b)
                    && members.contains(
                        p.psi
                            .iter()
                            .zip(&q.psi)
                            .map(|(a, b)| a - b)
                            .collect::<Vec<_>>()
                            .as_slice(),
                    )
            });
            if !reducible {
                generators.push((*p).clone());
            }
        }

        // re-derive the enumeration from the generators
        let gens: Vec<&[i64]> = generators.iter().map(|g| g.psi.as_slice()).collect();
        let mut reached: HashSet<Vec<i64>> = HashSet::from([vec![0; self.word.len()]]);
        let mut frontier: Vec<Vec<i64>> = vec![vec![0; self.word.len()]];
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y: Vec<i64> = x.iter().zip(*g).map(|(a, b)| a + b).collect();
                if self.height(&y) <= bound && reached.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        let complete = points.iter().all(|p| reached.contains(&p.psi))
            && reached.iter().all(|r| members.contains(r.as_slice()));

        let max_generator_height = generators.iter().map(|g| self.height(&g.psi)).max().unwrap_or(0);
        Ok(HilbertBasis {
            bound,
            generators,
            complete,
            max_generator_height,
        })
    }

    /// For each sample and `2 ≤ k ≤ k_max`, checks `ψ ∈ C₀ ⇔ kψ ∈ C₀`.
    pub fn saturation_check(&self, samples: &[Vec<i64>], k_max: i64) -> Result<SaturationReport> {
        let mut report = SaturationReport::default();
        for psi in samples {
            let inside = self.in_cone(psi)?;
            for k in 2..=k_max {
                let multiple: Vec<i64> = psi.iter().map(|x| k * x).collect();
                let m_in = self.in_cone(&multiple)?;
                report.checked += 1;
                if m_in != inside {
                    report.violations.push(SaturationViolation {
                        psi: psi.clone(),
                        k,
                        psi_in_cone: inside,
                        multiple_in_cone: m_in,
                    });
                }
            }
        }
        Ok(report)
    }

    fn form(&self, x: &[i64], y: &[i64]) -> i64 {
        let ay = self.datum.root_to_fund(y);
        let d = self.datum.symmetrizer();
        (0..x.len()).map(|i| x[i] * d[i] * ay[i]).sum()
    }

    /// `⟨ψ, φ⟩ = ∑_{b<a} ψ_a φ_b (β_a, β_b)`: only pairs with `β_b` strictly
    /// above `β_a` in the order `β_N < … < β_1` contribute.
    pub fn bilinear_form(&self, psi: &[i64], phi: &[i64]) -> Result<i64> {
        self.check_psi(psi)?;
        self.check_psi(phi)?;
        let betas = self.word.betas();
        let mut total = 0;
        for a in 0..psi.len() {
            if psi[a] == 0 {
                continue;
            }
            for b in 0..a {
                if phi[b] != 0 {
                    total += psi[a] * phi[b] * self.form(&betas[a], &betas[b]);
                }
            }
        }
        Ok(total)
    }

    /// `a_ψ · a_φ` in the degenerate algebra, graded by `𝓔̄`.
    pub fn degenerate_product(&self, psi: &[i64], phi: &[i64]) -> Result<DegenProduct> {
        for x in [psi, phi] {
            if !self.in_cone(x)? {
                return Err(Error::NotInCone { psi: x.to_vec() });
            }
        }
        let sum: Vec<i64> = psi.iter().zip(phi).map(|(a, b)| a + b).collect();
        let letters = self.word.letters();
        let e_psi = self.pbw.cal_e_bar_raw(letters, psi)?;
        let e_phi = self.pbw.cal_e_bar_raw(letters, phi)?;
        let e_sum = self.pbw.cal_e_bar_raw(letters, &sum)?;
        if e_sum
            .iter()
            .zip(&e_psi)
            .zip(&e_phi)
            .any(|((s, a), b)| *s != a + b)
        {
            return Ok(DegenProduct::Zero);
        }
        let d = self.datum.symmetrizer();
        let om = self.omega(psi);
        // (ϖ_i, α_j) = d_i δ_ij
        let pair: i64 = (0..om.len()).map(|i| om[i] * d[i] * e_phi[i]).sum();
        Ok(DegenProduct::NonZero {
            q_exponent: self.bilinear_form(psi, phi)? - 2 * pair,
            point: sum,
        })
    }
}

pub fn in_cone(datum: &RootDatum, d: &LusztigDatum) -> Result<bool> {
    HarmonicCone::new(datum, d.word())?.in_cone(d.psi())
}

pub fn enumerate_cone(datum: &RootDatum, word: &ReducedWord, bound: i64) -> Result<Vec<ConePoint>> {
    HarmonicCone::new(datum, word)?.enumerate(bound)
}

pub fn hilbert_basis(datum: &RootDatum, word: &ReducedWord, bound: i64) -> Result<HilbertBasis> {
    HarmonicCone::new(datum, word)?.hilbert_basis(bound)
}

pub fn saturation_check(
    datum: &RootDatum,
    word: &ReducedWord,
    samples: &[Vec<i64>],
    k_max: i64,
) -> Result<SaturationReport> {
    HarmonicCone::new(datum, word)?.saturation_check(samples, k_max)
}

pub fn bilinear_form_m(datum: &RootDatum, word: &ReducedWord, psi: &[i64], phi: &[i64]) -> Result<i64> {
    HarmonicCone::new(datum, word)?.bilinear_form(psi, phi)
}

pub fn degenerate_product(
    datum: &RootDatum,
    word: &ReducedWord,
    psi: &[i64],
    phi: &[i64],
) -> Result<DegenProduct> {
    HarmonicCone::new(datum, word)?.degenerate_product(psi, phi)
}

/// How Lusztig coordinates on the standard type-A word are indexed by the
/// roots `α_{i,j} = α_i + … + α_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SlotLabeling {
    /// Slot `l` carries `α_{i,j} = β_l`.
    BetaSequence,
    /// Slot `l` with `β_l = α_{i,j}` carries `α_{n+1−j, n+1−i}`, the image
    /// under the diagram automorphism `i ↦ n+1−i`.
    DiagramFlipped,
}

/// Re-indexes `ψ` on the standard word by pairs `(i, j)`.
pub fn type_a_coords(
    datum: &RootDatum,
    psi: &[i64],
    labeling: SlotLabeling,
) -> Result<BTreeMap<(usize, usize), i64>> {
    require_type_a(datum, "type_a_coords")?;
    let n = datum.rank();
    let word = datum.longest_word(crate::root_system::WordStyle::TypeAStandard)?;
    if psi.len() != word.len() {
        return Err(Error::InvalidLusztigDatum {
            expected: word.len(),
            got: psi.len(),
        });
    }
    let mut out = BTreeMap::new();
    for (beta, &x) in word.betas().iter().zip(psi) {
        let i = beta.iter().position(|&c| c != 0).expect("non-zero root") + 1;
        let j = beta.iter().rposition(|&c| c != 0).expect("non-zero root") + 1;
        let key = match labeling {
            SlotLabeling::BetaSequence => (i, j),
            SlotLabeling::DiagramFlipped => (n + 1 - j, n + 1 - i),
        };
        out.insert(key, x);
    }
    Ok(out)
}

/// The closed-form inequalities in type `A_n`:
/// `∑_{k≥j} n_{i,k} − ∑_{k>j} n_{i+1,k} ≤ (Ω, α_i)` for `1 ≤ i ≤ j ≤ n`.
/// Missing keys are zero.
pub fn in_cone_type_a(n: usize, coords: &BTreeMap<(usize, usize), i64>) -> Result<bool> {
    for (&(i, j), &x) in coords {
        if i == 0 || i > j || j > n {
            return Err(Error::OutOfRange(format!("root index ({i},{j}) for A{n}")));
        }
        if x < 0 {
            return Err(Error::InvalidLusztigDatum {
                expected: n * (n + 1) / 2,
                got: coords.len(),
            });
        }
    }
    let get = |i: usize, j: usize| coords.get(&(i, j)).copied().unwrap_or(0);
    // Ω in root coordinates, padded with zeros at both ends
    let mut omega = vec![0i64; n + 2];
    for (&(i, j), &x) in coords {
        for c in omega.iter_mut().take(j + 1).skip(i) {
            *c += x;
        }
    }
    for i in 1..=n {
        let bound = 2 * omega[i] - omega[i - 1] - omega[i + 1];
        for j in i..=n {
            let lhs: i64 =
                (j..=n).map(|k| get(i, k)).sum::<i64>() - (j + 1..=n).map(|k| get(i + 1, k)).sum::<i64>();
            if lhs > bound {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::WordStyle;

    fn a2() -> HarmonicCone {
        let d = RootDatum::from_label("A", 2).unwrap();
        let w = ReducedWord::new(&d, vec![1, 2, 1]).unwrap();
        HarmonicCone::new(&d, &w).unwrap()
    }

    #[test]
    fn a2_generators() {
        let c = a2();
        for g in [[1, 0, 1], [0, 1, 0], [0, 1, 1], [2, 0, 1]] {
            assert!(c.in_cone(&g).unwrap(), "{g:?}");
        }
        assert!(!c.in_cone(&[1, 0, 0]).unwrap());
        let hb = c.hilbert_basis(4).unwrap();
        let got: HashSet<Vec<i64>> = hb.generators.iter().map(|g| g.psi.clone()).collect();
        let want: HashSet<Vec<i64>> = [[1, 0, 1], [0, 1, 0], [0, 1, 1], [2, 0, 1]]
            .iter()
            .map(|g| g.to_vec())
            .collect();
        assert_eq!(got, want);
        assert!(hb.complete);
        assert_eq!(hb.max_generator_height, 3);
    }

    #[test]
    fn a2_generator_product_vanishes() {
        let c = a2();
        assert_eq!(
            c.degenerate_product(&[0, 1, 1], &[2, 0, 1]).unwrap(),
            DegenProduct::Zero
        );
        assert_eq!(
            c.degenerate_product(&[0, 0, 0], &[0, 1, 1]).unwrap(),
            DegenProduct::NonZero {
                q_exponent: 0,
                point: vec![0, 1, 1]
            }
        );
        assert!(matches!(
            c.degenerate_product(&[1, 0, 0], &[0, 1, 0]),
            Err(Error::NotInCone { .. })
        ));
    }

    #[test]
    fn bilinear_form_case_split() {
        let c = a2();
        assert_eq!(c.bilinear_form(&[1, 0, 0], &[0, 0, 1]).unwrap(), 0);
        assert_eq!(c.bilinear_form(&[0, 0, 1], &[1, 0, 0]).unwrap(), -1);
        assert_eq!(c.bilinear_form(&[0, 2, 0], &[0, 3, 0]).unwrap(), 0);
        assert_eq!(c.bilinear_form(&[0, 0, 0], &[1, 1, 1]).unwrap(), 0);
    }

    #[test]
    fn a1_is_all_of_n() {
        let d = RootDatum::from_label("A", 1).unwrap();
        let w = d.longest_word(WordStyle::Any).unwrap();
        let c = HarmonicCone::new(&d, &w).unwrap();
        let pts: Vec<Vec<i64>> = c.enumerate(3).unwrap().into_iter().map(|p| p.psi).collect();
        assert_eq!(pts, vec![vec![0], vec![1], vec![2], vec![3]]);
        let hb = c.hilbert_basis(5).unwrap();
        assert_eq!(hb.generators.len(), 1);
        assert_eq!(hb.generators[0].psi, vec![1]);
    }

    #[test]
    fn bound_zero_and_budget() {
        let c = a2();
        let pts = c.enumerate(0).unwrap();
        assert_eq!(pts.len(), 1);
        assert!(c.hilbert_basis(0).unwrap().generators.is_empty());
        let small = a2().with_budget(10);
        assert!(matches!(small.enumerate(6), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn saturation_examples() {
        let c = a2();
        let r = c.saturation_check(&[vec![1, 0, 0], vec![1, 0, 1]], 3).unwrap();
        assert_eq!(r.checked, 4);
        assert!(r.is_clean());
        assert!(c.saturation_check(&[], 4).unwrap().violations.is_empty());
    }

    #[test]
    fn closed_form_single_simple_root() {
        let coords = BTreeMap::from([((1, 1), 1)]);
        assert!(!in_cone_type_a(2, &coords).unwrap());
        assert!(in_cone_type_a(2, &BTreeMap::new()).unwrap());
        assert!(in_cone_type_a(2, &BTreeMap::from([((0, 1), 1)])).is_err());
    }

    #[test]
    fn closed_form_matches_membership_a2() {
        let c = a2();
        let d = c.datum().clone();
        for p in c.lattice_points(6).unwrap() {
            let m = type_a_coords(&d, &p, SlotLabeling::DiagramFlipped).unwrap();
            assert_eq!(in_cone_type_a(2, &m).unwrap(), c.in_cone(&p).unwrap(), "{p:?}");
        }
    }
}
