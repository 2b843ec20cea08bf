//! Independent oracles used by the integration tests. None of these call
//! the library routine they are checked against.

#![allow(dead_code)]

use std::collections::HashMap;

use harmonia::RootDatum;
use num_rational::Ratio;

type Q = Ratio<i64>;

/// Weight multiplicities by Freudenthal's recursion, in fundamental
/// coordinates.
pub struct Freudenthal {
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    /// positive roots in fundamental coordinates
    roots: Vec<Vec<i64>>,
    inv: Vec<Vec<Q>>,
    lambda: Vec<i64>,
    memo: HashMap<Vec<i64>, i64>,
}

impl Freudenthal {
    pub fn new(datum: &RootDatum, lambda: &[i64]) -> Self {
        let cartan: Vec<Vec<i64>> = datum.cartan().to_vec();
        let n = cartan.len();
        let roots = datum
            .positive_roots()
            .iter()
            .map(|r| {
                (0..n)
                    .map(|k| (0..n).map(|j| cartan[k][j] * r[j]).sum())
                    .collect()
            })
            .collect();
        Self {
            inv: invert(&cartan),
            sym: datum.symmetrizer().to_vec(),
            cartan,
            roots,
            lambda: lambda.to_vec(),
            memo: HashMap::new(),
        }
    }

    fn root_coords(&self, v: &[i64]) -> Vec<Q> {
        let n = v.len();
        (0..n)
            .map(|i| (0..n).map(|j| self.inv[i][j] * Q::from_integer(v[j])).sum())
            .collect()
    }

    /// `(x, y)` for fundamental-coordinate vectors.
    fn form(&self, x: &[i64], y: &[i64]) -> Q {
        let ry = self.root_coords(y);
        // (ϖ_i, α_j) = d_j δ_ij
        (0..x.len())
            .map(|i| Q::from_integer(x[i] * self.sym[i]) * ry[i])
            .sum()
    }

    fn below_lambda(&self, mu: &[i64]) -> bool {
        let diff: Vec<i64> = self.lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
        self.root_coords(&diff)
            .iter()
            .all(|c| c.is_integer() && *c >= Q::from_integer(0))
    }

    fn dominant(&self, mu: &[i64]) -> Vec<i64> {
        let mut v = mu.to_vec();
        while let Some(i) = v.iter().position(|&c| c < 0) {
            let c = v[i];
            for (k, x) in v.iter_mut().enumerate() {
                *x -= c * self.cartan[k][i];
            }
        }
        v
    }

    pub fn multiplicity(&mut self, mu: &[i64]) -> i64 {
        let mu = self.dominant(mu);
        if let Some(&m) = self.memo.get(&mu) {
            return m;
        }
        let m = if mu == self.lambda {
            1
        } else if !self.below_lambda(&mu) {
            0
        } else {
            let rho = vec![1; mu.len()];
            let lr: Vec<i64> = self.lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
            let mr: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
            let denom = self.form(&lr, &lr) - self.form(&mr, &mr);
            let mut total = Q::from_integer(0);
            for a in self.roots.clone() {
                let mut nu = mu.clone();
                loop {
                    for (x, y) in nu.iter_mut().zip(&a) {
                        *x += y;
                    }
                    let d = self.dominant(&nu);
                    if !self.below_lambda(&d) {
                        break;
                    }
                    let m = self.multiplicity(&nu);
                    total += Q::from_integer(m) * self.form(&nu, &a);
                }
            }
            let v = Q::from_integer(2) * total / denom;
            assert!(v.is_integer(), "non-integral Freudenthal value {v}");
            v.to_integer()
        };
        self.memo.insert(mu, m);
        m
    }
}

fn invert(a: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let n = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q> = row.iter().map(|&x| Q::from_integer(x)).collect();
            r.extend((0..n).map(|j| Q::from_integer((i == j) as i64)));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| m[r][c] != Q::from_integer(0)).unwrap();
        m.swap(c, p);
        let piv = m[c][c];
        for x in m[c].iter_mut() {
            *x /= piv;
        }
        for r in 0..n {
            if r != c {
                let f = m[r][c];
                let row_c = m[c].clone();
                for (x, y) in m[r].iter_mut().zip(row_c) {
                    *x -= f * y;
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// `𝒫(ν)` for every `ν` in the box `0 ≤ ν ≤ target` (root coordinates),
/// by expanding `∏_α (1 − e^α)^{−1}` as a dense truncated series.
pub fn partition_table(roots: &[Vec<i64>], target: &[i64]) -> HashMap<Vec<i64>, u64> {
    let mut series: HashMap<Vec<i64>, u64> = HashMap::from([(vec![0; target.len()], 1)]);
    let mut all = box_points(target);
    // increasing height, so a root may be used repeatedly within one pass
    all.sort_by_key(|k| k.iter().sum::<i64>());
    for r in roots {
        for v in &all {
            let prev: Vec<i64> = v.iter().zip(r).map(|(a, b)| a - b).collect();
            if prev.iter().any(|&x| x < 0) {
                continue;
            }
            let add = series.get(&prev).copied().unwrap_or(0);
            if add > 0 {
                *series.entry(v.clone()).or_insert(0) += add;
            }
        }
    }
    series
}

pub fn box_points(target: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &t in target {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (0..=t).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// `ẽ_i` on a word of single boxes under the Kashiwara tensor rule
/// (`b₁ ⊗ b₂ ⊗ …`, acting on `b₁` when `φ_i(b₁) ≥ ε_i(b₂ ⊗ …)`).
pub fn tensor_raise(word: &[u32], i: u32) -> Option<Vec<u32>> {
    if word.is_empty() {
        return None;
    }
    let (b1, rest) = (word[0], &word[1..]);
    let phi1 = (b1 == i) as i64;
    let (eps_rest, _) = tensor_eps_phi(rest, i);
    if phi1 >= eps_rest {
        if b1 == i + 1 {
            let mut out = word.to_vec();
            out[0] = i;
            Some(out)
        } else {
            None
        }
    } else {
        let raised = tensor_raise(rest, i)?;
        let mut out = vec![b1];
        out.extend(raised);
        Some(out)
    }
}

/// `(ε_i, φ_i)` of a tensor word, by the recursive tensor formulas.
pub fn tensor_eps_phi(word: &[u32], i: u32) -> (i64, i64) {
    if word.is_empty() {
        return (0, 0);
    }
    let (b1, rest) = (word[0], &word[1..]);
    let (e1, p1) = ((b1 == i + 1) as i64, (b1 == i) as i64);
    let (e2, p2) = tensor_eps_phi(rest, i);
    // Kashiwara: ε = ε1 + max(0, ε2 − φ1), φ = φ2 + max(0, φ1 − ε2)
    (e1 + (e2 - p1).max(0), p2 + (p1 - e2).max(0))
}

/// Columns right to left, each top to bottom.
pub fn column_word(rows: &[Vec<u32>]) -> Vec<u32> {
    let width = rows.first().map(Vec::len).unwrap_or(0);
    let mut out = Vec::new();
    for c in (0..width).rev() {
        for row in rows {
            if c < row.len() {
                out.push(row[c]);
            }
        }
    }
    out
}

/// Rebuilds rows from a column word of the given shape.
pub fn rows_from_column_word(shape: &[usize], word: &[u32]) -> Vec<Vec<u32>> {
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&l| vec![0; l]).collect();
    let width = shape.first().copied().unwrap_or(0);
    let mut it = word.iter();
    for c in (0..width).rev() {
        for row in rows.iter_mut() {
            if c < row.len() {
                row[c] = *it.next().unwrap();
            }
        }
    }
    rows
}

/// All partitions of `n` with at most `max_rows` parts.
pub fn partitions(n: usize, max_rows: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, cap: usize, rows: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if rows == 0 {
            return;
        }
        for p in (1..=cap.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, rows - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, max_rows, &mut Vec::new(), &mut out);
    out
}

/// Root packages of a word, recomputed from its letters.
pub fn packages(letters: &[usize], rank: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); rank];
    for (l, &i) in letters.iter().enumerate() {
        out[i - 1].push(l);
    }
    out
}

/// `λ ⪯ μ` for weights given in root coordinates.
pub fn root_leq(lambda: &[i64], mu: &[i64]) -> bool {
    lambda.iter().zip(mu).all(|(a, b)| a <= b)
}
