//! Lusztig's PBW parametrization of the canonical basis in simply-laced
//! type: transition maps between reduced words and the crystal statistics
//! `ε_i`, `ε_i*`, `𝓔`, `𝓔̄` on Lusztig data.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{ReducedWord, RootDatum, Weight};

/// A point `ψ ∈ ℕ^N` read against a reduced word of `w₀`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LusztigDatum {
    psi: Vec<i64>,
    word: ReducedWord,
}

impl LusztigDatum {
    pub fn new(psi: Vec<i64>, word: ReducedWord) -> Result<Self> {
        if psi.len() != word.len() || psi.iter().any(|&x| x < 0) {
            return Err(Error::InvalidLusztigDatum {
                expected: word.len(),
                got: psi.len(),
            });
        }
        Ok(Self { psi, word })
    }

    pub fn zero(word: ReducedWord) -> Self {
        Self {
            psi: vec![0; word.len()],
            word,
        }
    }

    pub fn psi(&self) -> &[i64] {
        &self.psi
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }
}

impl fmt::Display for LusztigDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} on {}", self.psi, self.word)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    /// `i j ↦ j i` for orthogonal `i, j`.
    Commute,
    /// `i j i ↦ j i j` for adjacent `i, j`.
    Braid,
}

/// An elementary move on a word, starting at a 0-based position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub position: usize,
    pub kind: MoveKind,
}

impl Move {
    fn apply_letters(&self, w: &mut [usize]) {
        let p = self.position;
        match self.kind {
            MoveKind::Commute => w.swap(p, p + 1),
            MoveKind::Braid => {
                let (i, j) = (w[p], w[p + 1]);
                w[p] = j;
                w[p + 1] = i;
                w[p + 2] = j;
            }
        }
    }

    /// The piecewise-linear transition on Lusztig coordinates.
    pub fn apply_psi(&self, psi: &mut [i64]) {
        let p = self.position;
        match self.kind {
            MoveKind::Commute => psi.swap(p, p + 1),
            MoveKind::Braid => {
                let (a, b, c) = (psi[p], psi[p + 1], psi[p + 2]);
                let m = a.min(c);
                psi[p] = b + c - m;
                psi[p + 1] = m;
                psi[p + 2] = a + b - m;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Target {
    Word(Vec<usize>),
    StartsWith(usize),
    EndsWith(usize),
}

impl Target {
    fn accepts(&self, w: &[usize]) -> bool {
        match self {
            Target::Word(t) => t.as_slice() == w,
            Target::StartsWith(i) => w.first() == Some(i),
            Target::EndsWith(i) => w.last() == Some(i),
        }
    }
}

type ChainCache = HashMap<(Vec<usize>, Target), Vec<Move>>;

/// The PBW crystal of a simply-laced root datum. Move chains between words
/// are found by breadth-first search and cached per (source, target).
pub struct PbwCrystal {
    datum: RootDatum,
    cache: Mutex<ChainCache>,
}

impl PbwCrystal {
    pub fn new(datum: &RootDatum) -> Result<Self> {
        if !datum.is_simply_laced() {
            return Err(Error::RequiresSimplyLaced {
                operation: "Lusztig parametrization",
                label: datum.root_type().to_string(),
                rank: datum.rank(),
            });
        }
        Ok(Self {
            datum: datum.clone(),
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    fn moves_from(&self, w: &[usize]) -> Vec<Move> {
        let a = self.datum.cartan();
        let mut out = Vec::new();
        for p in 0..w.len().saturating_sub(1) {
            let (i, j) = (w[p] - 1, w[p + 1] - 1);
            if i == j {
                continue;
            }
            if a[i][j] == 0 {
                out.push(Move {
                    position: p,
                    kind: MoveKind::Commute,
                });
            } else if a[i][j] == -1 && p + 2 < w.len() && w[p + 2] == w[p] {
                out.push(Move {
                    position: p,
                    kind: MoveKind::Braid,
                });
            }
        }
        out
    }

    fn chain(&self, source: &[usize], target: Target) -> Result<Vec<Move>> {
        let key = (source.to_vec(), target);
        if let Some(hit) = self.cache.lock().expect("chain cache poisoned").get(&key) {
            return Ok(hit.clone());
        }
        let (_, target) = &key;
        let mut parent: HashMap<Vec<usize>, (Vec<usize>, Move)> = HashMap::new();
        let mut queue = VecDeque::from([source.to_vec()]);
        parent.insert(
            source.to_vec(),
            (
                Vec::new(),
                Move {
                    position: 0,
                    kind: MoveKind::Commute,
                },
            ),
        );
        let mut found = None;
        while let Some(w) = queue.pop_front() {
            if target.accepts(&w) {
                found = Some(w);
                break;
            }
            for m in self.moves_from(&w) {
                let mut next = w.clone();
                m.apply_letters(&mut next);
                if !parent.contains_key(&next) {
                    parent.insert(next.clone(), (w.clone(), m));
                    queue.push_back(next);
                }
            }
        }
        let mut w = found.ok_or_else(|| {
            Error::Inconsistent(format!("no braid-move chain from {source:?} to {target:?}"))
        })?;
        let mut chain = Vec::new();
        while w.as_slice() != source {
            let (prev, m) = parent[&w].clone();
            chain.push(m);
            w = prev;
        }
        chain.reverse();
        self.cache
            .lock()
            .expect("chain cache poisoned")
            .insert(key.clone(), chain.clone());
        Ok(chain)
    }

    fn check_datum(&self, d: &LusztigDatum) -> Result<()> {
        if let Some(beta) = d.word.betas().first() {
            self.datum.check_len(beta)?;
        }
        if d.word.len() != self.datum.num_positive_roots() {
            return Err(Error::InvalidLusztigDatum {
                expected: self.datum.num_positive_roots(),
                got: d.word.len(),
            });
        }
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.datum.rank() {
            return Err(Error::OutOfRange(format!(
                "simple root index {i} not in 1..={}",
                self.datum.rank()
            )));
        }
        Ok(())
    }

    /// `Ω(ψ) = ∑ ψ_l β_l` in the root basis.
    pub fn omega(&self, d: &LusztigDatum) -> Result<Weight> {
        self.check_datum(d)?;
        Ok(Weight::root(omega_of(d.word.betas(), &d.psi)))
    }

    /// Transports `d` to the coordinates adapted to `target`.
    pub fn transition(&self, d: &LusztigDatum, target: &ReducedWord) -> Result<LusztigDatum> {
        self.check_datum(d)?;
        let chain = self.chain(d.word.letters(), Target::Word(target.letters().to_vec()))?;
        let mut psi = d.psi.clone();
        for m in &chain {
            m.apply_psi(&mut psi);
        }
        Ok(LusztigDatum {
            psi,
            word: target.clone(),
        })
    }

    /// Coordinates of `ψ` on the word reached from `letters` by the cached
    /// chain towards `target`.
    fn transport(&self, letters: &[usize], psi: &[i64], target: Target) -> Result<Vec<i64>> {
        let chain = self.chain(letters, target)?;
        let mut out = psi.to_vec();
        for m in &chain {
            m.apply_psi(&mut out);
        }
        Ok(out)
    }

    /// `ε_i(b_ψ)`: the first coordinate on a word starting with `i`.
    pub fn epsilon(&self, d: &LusztigDatum, i: usize) -> Result<i64> {
        self.check_datum(d)?;
        self.check_index(i)?;
        self.epsilon_raw(d.word.letters(), &d.psi, i)
    }

    /// `ε_i*(b_ψ)`: the last coordinate on a word ending with `i`.
    pub fn epsilon_star(&self, d: &LusztigDatum, i: usize) -> Result<i64> {
        self.check_datum(d)?;
        self.check_index(i)?;
        self.epsilon_star_raw(d.word.letters(), &d.psi, i)
    }

    pub(crate) fn epsilon_raw(&self, letters: &[usize], psi: &[i64], i: usize) -> Result<i64> {
        Ok(self.transport(letters, psi, Target::StartsWith(i))?[0])
    }

    pub(crate) fn epsilon_star_raw(&self, letters: &[usize], psi: &[i64], i: usize) -> Result<i64> {
        let v = self.transport(letters, psi, Target::EndsWith(i))?;
        Ok(v[v.len() - 1])
    }

    pub(crate) fn cal_e_raw(&self, letters: &[usize], psi: &[i64]) -> Result<Vec<i64>> {
        (1..=self.datum.rank())
            .map(|i| self.epsilon_raw(letters, psi, i))
            .collect()
    }

    pub(crate) fn cal_e_bar_raw(&self, letters: &[usize], psi: &[i64]) -> Result<Vec<i64>> {
        (1..=self.datum.rank())
            .map(|i| self.epsilon_star_raw(letters, psi, i))
            .collect()
    }

    /// `𝓔(ψ) = ∑ ε_i ϖ_i`.
    pub fn cal_e(&self, d: &LusztigDatum) -> Result<Weight> {
        self.check_datum(d)?;
        Ok(Weight::fundamental(self.cal_e_raw(d.word.letters(), &d.psi)?))
    }

    /// `𝓔̄(ψ) = ∑ ε_i* ϖ_i`.
    pub fn cal_e_bar(&self, d: &LusztigDatum) -> Result<Weight> {
        self.check_datum(d)?;
        Ok(Weight::fundamental(self.cal_e_bar_raw(d.word.letters(), &d.psi)?))
    }

    pub fn cache_len(&self) -> usize {
        self.cache.lock().expect("chain cache poisoned").len()
    }
}

pub(crate) fn omega_of(betas: &[Vec<i64>], psi: &[i64]) -> Vec<i64> {
    let rank = betas.first().map(Vec::len).unwrap_or(0);
    let mut out = vec![0; rank];
    for (beta, &x) in betas.iter().zip(psi) {
        for (o, b) in out.iter_mut().zip(beta) {
            *o += x * b;
        }
    }
    out
}

pub fn omega(datum: &RootDatum, d: &LusztigDatum) -> Result<Weight> {
    PbwCrystal::new(datum)?.omega(d)
}

pub fn braid_transition(datum: &RootDatum, d: &LusztigDatum, target: &ReducedWord) -> Result<LusztigDatum> {
    PbwCrystal::new(datum)?.transition(d, target)
}

pub fn epsilon_lusztig(datum: &RootDatum, d: &LusztigDatum, i: usize) -> Result<i64> {
    PbwCrystal::new(datum)?.epsilon(d, i)
}

pub fn epsilon_star_lusztig(datum: &RootDatum, d: &LusztigDatum, i: usize) -> Result<i64> {
    PbwCrystal::new(datum)?.epsilon_star(d, i)
}

pub fn cal_e_lusztig(datum: &RootDatum, d: &LusztigDatum) -> Result<Weight> {
    PbwCrystal::new(datum)?.cal_e(d)
}

pub fn cal_e_bar_lusztig(datum: &RootDatum, d: &LusztigDatum) -> Result<Weight> {
    PbwCrystal::new(datum)?.cal_e_bar(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::WordStyle;

    fn a2() -> (RootDatum, ReducedWord, ReducedWord) {
        let d = RootDatum::from_label("A", 2).unwrap();
        let w = ReducedWord::new(&d, vec![1, 2, 1]).unwrap();
        let v = ReducedWord::new(&d, vec![2, 1, 2]).unwrap();
        (d, w, v)
    }

    #[test]
    fn omega_examples() {
        let (d, w, _) = a2();
        let x = LusztigDatum::new(vec![0, 1, 0], w.clone()).unwrap();
        let y = LusztigDatum::new(vec![1, 0, 1], w.clone()).unwrap();
        assert_eq!(omega(&d, &x).unwrap().coords(), &[1, 1]);
        assert_eq!(omega(&d, &y).unwrap().coords(), &[1, 1]);
        assert!(omega(&d, &LusztigDatum::zero(w)).unwrap().is_zero());
    }

    #[test]
    fn single_braid_move() {
        let (d, w, v) = a2();
        let x = LusztigDatum::new(vec![1, 0, 1], w.clone()).unwrap();
        let y = braid_transition(&d, &x, &v).unwrap();
        assert_eq!(y.psi(), &[0, 1, 0]);
        assert_eq!(braid_transition(&d, &y, &w).unwrap(), x);
        assert_eq!(braid_transition(&d, &x, &w).unwrap(), x);
    }

    #[test]
    fn epsilons_a2() {
        let (d, w, _) = a2();
        let x = LusztigDatum::new(vec![1, 0, 1], w.clone()).unwrap();
        assert_eq!(epsilon_lusztig(&d, &x, 1).unwrap(), 1);
        assert_eq!(epsilon_lusztig(&d, &x, 2).unwrap(), 0);
        assert_eq!(epsilon_star_lusztig(&d, &x, 1).unwrap(), 1);
        let z = LusztigDatum::zero(w);
        assert!(cal_e_lusztig(&d, &z).unwrap().is_zero());
        assert!(cal_e_bar_lusztig(&d, &z).unwrap().is_zero());
    }

    #[test]
    fn invalid_inputs() {
        let (d, w, _) = a2();
        assert!(LusztigDatum::new(vec![1, 0], w.clone()).is_err());
        assert!(LusztigDatum::new(vec![1, -1, 0], w.clone()).is_err());
        let b2 = RootDatum::from_label("B", 2).unwrap();
        assert!(matches!(
            PbwCrystal::new(&b2),
            Err(Error::RequiresSimplyLaced { .. })
        ));
        let x = LusztigDatum::zero(w);
        assert!(epsilon_lusztig(&d, &x, 3).is_err());
    }

    #[test]
    fn omega_is_word_independent_a3() {
        let d = RootDatum::from_label("A", 3).unwrap();
        let pbw = PbwCrystal::new(&d).unwrap();
        let w = d.longest_word(WordStyle::TypeAStandard).unwrap();
        let v = ReducedWord::new(&d, vec![3, 2, 1, 3, 2, 3]).unwrap();
        for seed in 0..50i64 {
            let psi: Vec<i64> = (0..6).map(|k| (seed * 7 + k * 3) % 4).collect();
            let x = LusztigDatum::new(psi, w.clone()).unwrap();
            let y = pbw.transition(&x, &v).unwrap();
            assert_eq!(pbw.omega(&x).unwrap(), pbw.omega(&y).unwrap());
            assert_eq!(pbw.transition(&y, &w).unwrap(), x);
        }
        assert!(pbw.cache_len() >= 2);
    }

    #[test]
    fn d4_chains_exist() {
        let d = RootDatum::from_label("D", 4).unwrap();
        let pbw = PbwCrystal::new(&d).unwrap();
        let w = d.longest_word(WordStyle::Any).unwrap();
        let x = LusztigDatum::new(vec![1; w.len()], w).unwrap();
        for i in 1..=4 {
            assert!(pbw.epsilon(&x, i).unwrap() >= 0);
            assert!(pbw.epsilon_star(&x, i).unwrap() >= 0);
        }
    }
}
