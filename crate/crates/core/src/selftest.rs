//! Cross-module identity checks behind `harmonia selftest`.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::cone::{in_cone_type_a, type_a_coords, DegenProduct, HarmonicCone, SlotLabeling};
use crate::crystal::{
    enumerate_zero_weight_tableaux, h_value, multivar_kostka, n_exponents, pplus_exponents,
};
use crate::error::Result;
use crate::freeness::{center_matrix_det, closed_form_det};
use crate::kostka::KostkaFoulkes;
use crate::poly::QPolynomial;
use crate::root_system::{ReducedWord, RootDatum, Weight, WordStyle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Depth {
    Quick,
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub depth: Depth,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

type Outcome = Result<(bool, String)>;
type Suite = Vec<(&'static str, fn() -> Outcome)>;

pub fn run(depth: Depth) -> Report {
    let mut suite: Suite = vec![
        ("a1_cone_is_all_of_n", a1_cone),
        ("a2_hilbert_basis", a2_basis),
        ("a2_relation_and_zero_product", a2_product),
        ("a3_zero_weight_tableaux_and_exponents", a3_tableaux),
        ("a3_kostka_foulkes_at_zero", a3_kostka),
        ("center_determinants", determinants),
    ];
    if depth == Depth::Full {
        suite.extend_from_slice(&[
            (
                "classical_exponents_a1_a3_d4",
                classical_exponents as fn() -> Outcome,
            ),
            ("principal_specialization_a2_a3", specialization_identity),
            ("closed_form_cone_a2_a3", closed_form_cone),
            ("cone_counts_vs_multiplicities", cone_counts),
        ]);
    }
    let checks = suite
        .into_iter()
        .map(|(name, f)| {
            let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
            Check {
                name: name.to_string(),
                passed,
                detail,
            }
        })
        .collect();
    Report { depth, checks }
}

fn type_a(n: usize) -> Result<RootDatum> {
    RootDatum::from_label("A", n)
}

fn a1_cone() -> Outcome {
    let d = type_a(1)?;
    let c = HarmonicCone::new(&d, &d.longest_word(WordStyle::Any)?)?;
    let bad: Vec<i64> = (0..=50).filter(|&k| !c.in_cone(&[k]).unwrap_or(false)).collect();
    Ok((bad.is_empty(), format!("rejected points: {bad:?}")))
}

fn a2_cone() -> Result<HarmonicCone> {
    let d = type_a(2)?;
    let w = ReducedWord::new(&d, vec![1, 2, 1])?;
    HarmonicCone::new(&d, &w)
}

fn a2_basis() -> Outcome {
    let hb = a2_cone()?.hilbert_basis(4)?;
    let got: HashSet<Vec<i64>> = hb.generators.iter().map(|g| g.psi.clone()).collect();
    let want: HashSet<Vec<i64>> = [[1, 0, 1], [0, 1, 0], [0, 1, 1], [2, 0, 1]]
        .iter()
        .map(|g| g.to_vec())
        .collect();
    let mut sorted: Vec<_> = got.iter().cloned().collect();
    sorted.sort();
    Ok((
        got == want && hb.complete,
        format!("generators {sorted:?}, complete {}", hb.complete),
    ))
}

fn a2_product() -> Outcome {
    let c = a2_cone()?;
    let (t1, t2, t3, t4) = ([1, 0, 1], [0, 1, 0], [0, 1, 1], [2, 0, 1]);
    let lhs: Vec<i64> = (0..3).map(|k| 2 * t1[k] + t2[k]).collect();
    let rhs: Vec<i64> = (0..3).map(|k| t3[k] + t4[k]).collect();
    let product = c.degenerate_product(&t3, &t4)?;
    Ok((
        lhs == vec![2, 1, 2] && rhs == lhs && product == DegenProduct::Zero,
        format!("2t1+t2 = {lhs:?}, t3+t4 = {rhs:?}, t3*t4 = {product:?}"),
    ))
}

fn a3_tableaux() -> Outcome {
    let d = type_a(3)?;
    let mu = Weight::fundamental(vec![1, 2, 1]);
    let tabs = enumerate_zero_weight_tableaux(&d, &mu)?;
    let e: Vec<Vec<i64>> = pplus_exponents(&d, &mu)?
        .weights()
        .iter()
        .map(|w| w.coords().to_vec())
        .collect();
    let want = vec![
        vec![2, 0, 1],
        vec![1, 1, 0],
        vec![1, 1, 1],
        vec![1, 1, 1],
        vec![1, 0, 2],
        vec![0, 2, 0],
        vec![0, 1, 1],
    ];
    let ex = n_exponents(&d, &mu)?;
    Ok((
        tabs.len() == 7 && e == want && ex.as_slice() == [3, 4, 5, 5, 6, 6, 7],
        format!("{} tableaux, exponents {:?}", tabs.len(), ex.as_slice()),
    ))
}

fn a3_kostka() -> Outcome {
    let d = type_a(3)?;
    let k = KostkaFoulkes::new(&d)?.polynomial(
        &Weight::fundamental(vec![1, 2, 1]),
        &Weight::fundamental(vec![0, 0, 0]),
    )?;
    let want = QPolynomial::from_terms([(3, 1), (4, 1), (5, 2), (6, 2), (7, 1)]);
    Ok((k == want, k.to_string()))
}

fn determinants() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=6 {
        for s in 1..=n {
            if center_matrix_det(n, s)? != closed_form_det(s) {
                bad.push((n, s));
            }
        }
    }
    Ok((bad.is_empty(), format!("mismatches (n,s): {bad:?}")))
}

fn classical_exponents() -> Outcome {
    let mut detail = Vec::new();
    let mut ok = true;
    for n in 1..=3 {
        let d = type_a(n)?;
        let mut adj = vec![0; n];
        adj[0] += 1;
        adj[n - 1] += 1;
        let ex = KostkaFoulkes::new(&d)?.generalized_exponents(&Weight::fundamental(adj))?;
        ok &= ex.as_slice() == (1..=n as u32).collect::<Vec<_>>().as_slice();
        detail.push(format!("A{n}: {:?}", ex.as_slice()));
    }
    let d4 = RootDatum::from_label("D", 4)?;
    let ex = KostkaFoulkes::new(&d4)?.generalized_exponents(&Weight::fundamental(vec![0, 1, 0, 0]))?;
    ok &= ex.as_slice() == [1, 3, 3, 5];
    detail.push(format!("D4: {:?}", ex.as_slice()));
    Ok((ok, detail.join("; ")))
}

/// Dominant weights of `A_n` in the root lattice with `h(μ) ≤ max_h`.
pub fn root_lattice_dominant(n: usize, max_h: i64) -> Vec<Vec<i64>> {
    fn rec(n: usize, i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == n {
            if h_value(cur) % (n as i64 + 1) == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = i as i64 + 1;
        let mut c = 0;
        while c * w <= left {
            cur.push(c);
            rec(n, i + 1, left - c * w, cur, out);
            cur.pop();
            c += 1;
        }
    }
    let mut out = Vec::new();
    rec(n, 0, max_h, &mut Vec::new(), &mut out);
    out
}

fn specialization_identity() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 2..=3 {
        let d = type_a(n)?;
        let kf = KostkaFoulkes::new(&d)?;
        let zero = Weight::fundamental(vec![0; n]);
        for mu in root_lattice_dominant(n, 12) {
            let w = Weight::fundamental(mu.clone());
            let lhs = multivar_kostka(&d, &w)?.principal_specialization();
            let rhs = kf.polynomial(&w, &zero)?;
            checked += 1;
            if lhs != rhs {
                bad.push(format!("A{n} {mu:?}"));
            }
        }
    }
    Ok((bad.is_empty(), format!("{checked} weights, mismatches {bad:?}")))
}

fn closed_form_cone() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 2..=3 {
        let d = type_a(n)?;
        let c = HarmonicCone::new(&d, &d.longest_word(WordStyle::TypeAStandard)?)?;
        for psi in c.lattice_points(6)? {
            let m = type_a_coords(&d, &psi, SlotLabeling::DiagramFlipped)?;
            checked += 1;
            if in_cone_type_a(n, &m)? != c.in_cone(&psi)? {
                bad.push(psi);
            }
        }
    }
    Ok((bad.is_empty(), format!("{checked} points, disagreements {bad:?}")))
}

fn cone_counts() -> Outcome {
    let mut detail = Vec::new();
    let mut ok = true;
    for n in 2..=3 {
        let d = type_a(n)?;
        let c = HarmonicCone::new(&d, &d.longest_word(WordStyle::TypeAStandard)?)?;
        let mut fibres: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
        for p in c.enumerate(6)? {
            *fibres.entry(p.omega).or_insert(0) += 1;
        }
        let kf = KostkaFoulkes::new(&d)?;
        let zero = Weight::fundamental(vec![0; n]);
        // every dominant root-lattice weight of height ≤ 6, as root coordinates
        let mut weights = Vec::new();
        let mut cur = vec![0; n];
        boxes(n, 0, 6, &mut cur, &mut weights);
        for r in weights {
            let w = d.to_fundamental(&Weight::root(r.clone()))?;
            if !d.is_dominant(&w)? {
                if fibres.contains_key(&r) {
                    ok = false;
                    detail.push(format!("A{n}: non-dominant Ω {r:?} in cone"));
                }
                continue;
            }
            let mult = kf.multiplicity(&w, &zero)?;
            let count = fibres.get(&r).copied().unwrap_or(0);
            if mult != count {
                ok = false;
                detail.push(format!("A{n} Ω={r:?}: cone {count}, dim {mult}"));
            }
        }
    }
    if ok {
        detail.push("all fibres match".to_string());
    }
    Ok((ok, detail.join("; ")))
}

fn boxes(n: usize, i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if i == n {
        out.push(cur.clone());
        return;
    }
    for c in 0..=left {
        cur[i] = c;
        boxes(n, i + 1, left - c, cur, out);
    }
    cur[i] = 0;
}
