mod support;

use std::collections::BTreeMap;

use harmonia::cone::{in_cone_type_a, type_a_coords, HarmonicCone, SlotLabeling};
use harmonia::crystal::{enumerate_tableaux, typea_order_cmp, typea_order_leq};
use harmonia::kostka::KostkaFoulkes;
use harmonia::lusztig::{LusztigDatum, PbwCrystal};
use harmonia::partitions::KostantPartition;
use harmonia::{ReducedWord, RootDatum, Weight, WordStyle};
use proptest::prelude::*;
use support::{box_points, partition_table, Freudenthal};

fn datum(label: &str, n: usize) -> RootDatum {
    RootDatum::from_label(label, n).unwrap()
}

/// A reduced word for `w₀` reached from the default word by the moves
/// selected by `picks`.
fn shuffled_word(d: &RootDatum, picks: &[usize]) -> ReducedWord {
    let a = d.cartan();
    let mut w = d.longest_word(WordStyle::Any).unwrap().letters().to_vec();
    for &p in picks {
        let p = p % (w.len() - 1);
        let (x, y) = (w[p], w[p + 1]);
        if x != y && a[x - 1][y - 1] == 0 {
            w.swap(p, p + 1);
        } else if p + 2 < w.len() && x != y && w[p + 2] == x && a[x - 1][y - 1] == -1 {
            w[p] = y;
            w[p + 1] = x;
            w[p + 2] = y;
        }
    }
    ReducedWord::new(d, w).unwrap()
}

fn simply_laced() -> impl Strategy<Value = (&'static str, usize)> {
    prop_oneof![Just(("A", 2)), Just(("A", 3)), Just(("A", 4)), Just(("D", 4))]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn statistics_do_not_depend_on_the_word(
        (label, n) in simply_laced(),
        picks in prop::collection::vec(0usize..64, 0..40),
        seed in prop::collection::vec(0i64..5, 12),
    ) {
        let d = datum(label, n);
        let pbw = PbwCrystal::new(&d).unwrap();
        let w1 = d.longest_word(WordStyle::Any).unwrap();
        let w2 = shuffled_word(&d, &picks);
        let psi: Vec<i64> = (0..w1.len()).map(|l| seed[l % seed.len()]).collect();
        let x = LusztigDatum::new(psi, w1).unwrap();
        let y = pbw.transition(&x, &w2).unwrap();
        prop_assert_eq!(pbw.omega(&x).unwrap(), pbw.omega(&y).unwrap());
        prop_assert_eq!(pbw.cal_e(&x).unwrap(), pbw.cal_e(&y).unwrap());
        prop_assert_eq!(pbw.cal_e_bar(&x).unwrap(), pbw.cal_e_bar(&y).unwrap());
        let back = pbw.transition(&y, x.word()).unwrap();
        prop_assert_eq!(back.psi(), x.psi());
    }

    #[test]
    fn transitions_compose(
        picks1 in prop::collection::vec(0usize..64, 0..40),
        picks2 in prop::collection::vec(0usize..64, 0..40),
        psi in prop::collection::vec(0i64..6, 10),
    ) {
        let d = datum("A", 4);
        let pbw = PbwCrystal::new(&d).unwrap();
        let w0 = d.longest_word(WordStyle::Any).unwrap();
        let (w1, w2) = (shuffled_word(&d, &picks1), shuffled_word(&d, &picks2));
        let x = LusztigDatum::new(psi, w0).unwrap();
        let direct = pbw.transition(&x, &w2).unwrap();
        let via = pbw.transition(&pbw.transition(&x, &w1).unwrap(), &w2).unwrap();
        prop_assert_eq!(direct.psi(), via.psi());
    }

    #[test]
    fn type_a_order_is_total_and_refines_dominance(
        n in 1usize..5,
        l in prop::collection::vec(0i64..4, 4),
        m in prop::collection::vec(0i64..4, 4),
    ) {
        let d = datum("A", n);
        let (l, m) = (l[..n].to_vec(), m[..n].to_vec());
        let (wl, wm) = (Weight::fundamental(l.clone()), Weight::fundamental(m.clone()));
        let le = typea_order_leq(&d, &wl, &wm).unwrap();
        let ge = typea_order_leq(&d, &wm, &wl).unwrap();
        prop_assert!(le || ge);
        prop_assert_eq!(le && ge, l == m);
        if d.dominance_leq(&wl, &wm).unwrap() {
            prop_assert!(le);
        }
        prop_assert_eq!(typea_order_cmp(&l, &m), typea_order_cmp(&m, &l).reverse());
    }

    #[test]
    fn saturation_on_random_points(
        n in 1usize..4,
        psi in prop::collection::vec(0i64..4, 6),
        k in 1i64..5,
    ) {
        let d = datum("A", n);
        let cone = HarmonicCone::new(&d, &d.longest_word(WordStyle::TypeAStandard).unwrap()).unwrap();
        let psi = psi[..cone.word().len()].to_vec();
        let scaled: Vec<i64> = psi.iter().map(|x| k * x).collect();
        prop_assert_eq!(cone.in_cone(&psi).unwrap(), cone.in_cone(&scaled).unwrap());
    }
}

#[test]
fn cone_is_closed_under_addition() {
    for n in 2..=3 {
        let d = datum("A", n);
        let cone = HarmonicCone::new(&d, &d.longest_word(WordStyle::TypeAStandard).unwrap()).unwrap();
        let pts: Vec<Vec<i64>> = cone
            .enumerate(4)
            .unwrap()
            .into_iter()
            .filter(|p| p.in_cone)
            .map(|p| p.psi)
            .collect();
        assert!(pts.len() > 3);
        for a in &pts {
            for b in &pts {
                let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                assert!(cone.in_cone(&s).unwrap(), "A{n}: {a:?} + {b:?}");
            }
        }
    }
}

#[test]
fn closed_form_with_own_betas_holds_on_the_flipped_word() {
    // the closed-form inequalities, with each slot labelled by its own β,
    // describe the cone of the word n…1 n…2 … n rather than of 1…n 1…n−1 … 1
    for n in 2..=4 {
        let d = datum("A", n);
        let standard = d.longest_word(WordStyle::TypeAStandard).unwrap();
        let flipped: Vec<usize> = standard.letters().iter().map(|&i| n + 1 - i).collect();
        let word = ReducedWord::new(&d, flipped).unwrap();
        let cone = HarmonicCone::new(&d, &word).unwrap();
        let bound = if n == 4 { 5 } else { 6 };
        for psi in cone.lattice_points(bound).unwrap() {
            let coords: BTreeMap<(usize, usize), i64> = word
                .betas()
                .iter()
                .zip(&psi)
                .map(|(beta, &x)| {
                    let i = beta.iter().position(|&c| c != 0).unwrap() + 1;
                    let j = beta.iter().rposition(|&c| c != 0).unwrap() + 1;
                    ((i, j), x)
                })
                .collect();
            assert_eq!(
                in_cone_type_a(n, &coords).unwrap(),
                cone.in_cone(&psi).unwrap(),
                "A{n} ψ={psi:?}"
            );
        }
    }
}

#[test]
fn beta_sequence_labeling_rejects_an_a2_generator() {
    let d = datum("A", 2);
    let cone = HarmonicCone::new(&d, &d.longest_word(WordStyle::TypeAStandard).unwrap()).unwrap();
    let psi = [0, 1, 1];
    assert!(cone.in_cone(&psi).unwrap());
    let beta = type_a_coords(&d, &psi, SlotLabeling::BetaSequence).unwrap();
    assert!(!in_cone_type_a(2, &beta).unwrap());
    let flipped = type_a_coords(&d, &psi, SlotLabeling::DiagramFlipped).unwrap();
    assert!(in_cone_type_a(2, &flipped).unwrap());
}

#[test]
fn signature_phi_minus_epsilon_is_the_weight() {
    for boxes in 1..=7 {
        for shape in support::partitions(boxes, 4) {
            for t in enumerate_tableaux(&shape, 4) {
                let c = t.content(4);
                for i in 1..4u32 {
                    let wt = c[i as usize - 1] as i64 - c[i as usize] as i64;
                    assert_eq!(t.phi(i) as i64 - t.epsilon(i) as i64, wt, "{t} i={i}");
                    if let Some(up) = t.raise(i) {
                        assert_eq!(up.lower(i).as_ref(), Some(&t));
                    }
                    if let Some(down) = t.lower(i) {
                        assert_eq!(down.raise(i).as_ref(), Some(&t));
                    }
                }
            }
        }
    }
}

#[test]
fn partition_function_matches_series_expansion() {
    for (label, n, target) in [
        ("A", 2, vec![4, 4]),
        ("A", 3, vec![3, 4, 3]),
        ("B", 2, vec![4, 5]),
        ("C", 3, vec![2, 3, 3]),
        ("G", 2, vec![5, 7]),
    ] {
        let d = datum(label, n);
        let table = partition_table(d.positive_roots(), &target);
        let kp = KostantPartition::new(&d);
        for v in box_points(&target) {
            let got = kp.count_at_one(&Weight::root(v.clone())).unwrap();
            assert_eq!(got, table.get(&v).copied().unwrap_or(0), "{label}{n} ν={v:?}");
            assert_eq!(kp.count_root_coords(&v).eval(1) as u64, got);
        }
    }
}

#[test]
fn multiplicities_match_freudenthal_outside_type_a() {
    for (label, n) in [("B", 2), ("C", 3), ("G", 2), ("D", 4)] {
        let d = datum(label, n);
        let kf = KostkaFoulkes::new(&d).unwrap();
        let limit = if n > 2 { 2 } else { 3 };
        for lambda in box_points(&vec![limit; n])
            .into_iter()
            .filter(|l| l.iter().sum::<i64>() <= limit)
        {
            let mut oracle = Freudenthal::new(&d, &lambda);
            for mu in box_points(&lambda) {
                let got = kf
                    .multiplicity(
                        &Weight::fundamental(lambda.clone()),
                        &Weight::fundamental(mu.clone()),
                    )
                    .unwrap();
                assert_eq!(
                    got as i64,
                    oracle.multiplicity(&mu),
                    "{label}{n} λ={lambda:?} μ={mu:?}"
                );
            }
        }
    }
}

#[test]
fn weyl_dimension_is_the_sum_of_multiplicities() {
    let d = datum("B", 2);
    let lambda = vec![1, 2];
    let mut oracle = Freudenthal::new(&d, &lambda);
    // weights of V(λ) lie in the box |μ_i| ≤ 4 for this λ
    let mut total = 0;
    for a in -6..=6 {
        for b in -6..=6 {
            total += oracle.multiplicity(&[a, b]);
        }
    }
    let dim = harmonia::kostka::weyl_dimension(&d, &Weight::fundamental(lambda)).unwrap();
    assert_eq!(total as u128, dim);
}
