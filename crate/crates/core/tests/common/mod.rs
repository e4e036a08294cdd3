//! Test-only oracles, independent of the library's elimination and rewriting code.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rank by dense Gaussian elimination over Q.
pub fn dense_rank_q(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        let inv = BigRational::one() / m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone() * inv.clone();
                for j in 0..cols {
                    let t = m[rank][j].clone() * f.clone();
                    m[r][j] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank by dense Gaussian elimination over F_p.
pub fn dense_rank_p(rows: &[Vec<i64>], p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|v| v.rem_euclid(p)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, pr);
        let inv = (1..p).find(|x| x * m[rank][c] % p == 1).unwrap();
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c] * inv % p;
                for j in 0..cols {
                    m[r][j] = (m[r][j] - f * m[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// The presented algebra in degree `2k` on `l` strands, built from words:
/// commutative words in the ordered symbols `g_ij` (1 <= i, j <= l) modulo
/// antisymmetry, squares and Arnold triples with distinct indices.
pub struct PresentedAlgebra {
    pub l: u16,
    pub k: usize,
    pub words: Vec<Vec<(u16, u16)>>,
    pub relations: Vec<Vec<i64>>,
}

fn multisets(symbols: &[(u16, u16)], k: usize) -> Vec<Vec<(u16, u16)>> {
    fn go(sym: &[(u16, u16)], start: usize, k: usize, cur: &mut Vec<(u16, u16)>, out: &mut Vec<Vec<(u16, u16)>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..sym.len() {
            cur.push(sym[i]);
            go(sym, i, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(symbols, 0, k, &mut Vec::new(), &mut out);
    out
}

impl PresentedAlgebra {
    pub fn new(l: u16, k: usize) -> Self {
        let symbols: Vec<(u16, u16)> = (1..=l).flat_map(|i| (1..=l).map(move |j| (i, j))).collect();
        let words = multisets(&symbols, k);
        let mut alg = PresentedAlgebra { l, k, words, relations: Vec::new() };
        let nw = alg.words.len();
        let mut rels = Vec::new();
        for w in &alg.words {
            for (pos, &(i, j)) in w.iter().enumerate() {
                if i != j {
                    let mut w2 = w.clone();
                    w2[pos] = (j, i);
                    let mut v = vec![0i64; nw];
                    v[alg.index(w)] += 1;
                    v[alg.index(&w2)] += 1;
                    rels.push(v);
                }
            }
            if w.windows(2).any(|p| p[0] == p[1]) {
                let mut v = vec![0i64; nw];
                v[alg.index(w)] = 1;
                rels.push(v);
            }
        }
        if k >= 2 {
            for rest in multisets(&symbols, k - 2) {
                for i in 1..=l {
                    for j in 1..=l {
                        for m in 1..=l {
                            if i == j || j == m || i == m {
                                continue;
                            }
                            let mut v = vec![0i64; nw];
                            for (a, b) in [((i, j), (j, m)), ((j, m), (m, i)), ((m, i), (i, j))] {
                                let mut w = rest.clone();
                                w.push(a);
                                w.push(b);
                                v[alg.index(&w)] += 1;
                            }
                            rels.push(v);
                        }
                    }
                }
            }
        }
        alg.relations = rels;
        alg
    }

    pub fn index(&self, word: &[(u16, u16)]) -> usize {
        let mut w = word.to_vec();
        w.sort_unstable();
        self.words.binary_search(&w).expect("word of the right degree")
    }

    pub fn relation_rank(&self) -> usize {
        dense_rank_q(&self.relations)
    }

    pub fn quotient_dim(&self) -> usize {
        self.words.len() - self.relation_rank()
    }

    /// Whether every vector in `vs` (indexed by words) lies in the relation span.
    pub fn spans_all(&self, vs: &[Vec<i64>]) -> bool {
        let mut rows = self.relations.clone();
        rows.extend_from_slice(vs);
        dense_rank_q(&rows) == self.relation_rank()
    }
}

/// Inverse of a unimodular integer matrix, by Gauss-Jordan over Q.
pub fn integer_inverse(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .chain((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }))
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("invertible");
        a.swap(c, p);
        let inv = BigRational::one() / a[c][c].clone();
        for v in a[c].iter_mut() {
            *v *= inv.clone();
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in 0..2 * n {
                    let t = a[c][j].clone() * f.clone();
                    a[r][j] -= t;
                }
            }
        }
    }
    a.into_iter()
        .map(|r| {
            r[n..]
                .iter()
                .map(|v| {
                    assert!(v.is_integer());
                    i64::try_from(v.to_integer()).unwrap()
                })
                .collect()
        })
        .collect()
}

/// Perfect matchings of `2n` points as words in chord labels.
pub fn matching_words(n: usize) -> Vec<Vec<u8>> {
    fn go(word: &mut Vec<Option<u8>>, next: u8, out: &mut Vec<Vec<u8>>) {
        let Some(first) = word.iter().position(Option::is_none) else {
            out.push(word.iter().map(|c| c.unwrap()).collect());
            return;
        };
        word[first] = Some(next);
        for j in first + 1..word.len() {
            if word[j].is_none() {
                word[j] = Some(next);
                go(word, next + 1, out);
                word[j] = None;
            }
        }
        word[first] = None;
    }
    let mut out = Vec::new();
    go(&mut vec![None; 2 * n], 0, &mut out);
    out
}

fn relabel(word: &[u8]) -> Vec<u8> {
    let mut map = [u8::MAX; 256];
    let mut next = 0;
    word.iter()
        .map(|&c| {
            if map[c as usize] == u8::MAX {
                map[c as usize] = next;
                next += 1;
            }
            map[c as usize]
        })
        .collect()
}

/// Canonical representative of a word up to rotation.
pub fn circular_class(word: &[u8]) -> Vec<u8> {
    (0..word.len().max(1))
        .map(|r| {
            let mut w = word.to_vec();
            w.rotate_left(r.min(word.len()));
            relabel(&w)
        })
        .min()
        .unwrap()
}

/// Dimension of circular chord diagrams modulo 1T and 4T, over Q.
pub fn circular_dim_a(n: usize) -> usize {
    let words = matching_words(n);
    let mut classes: Vec<Vec<u8>> = words.iter().map(|w| circular_class(w)).collect();
    classes.sort();
    classes.dedup();
    let idx = |w: &[u8]| classes.binary_search(&circular_class(w)).unwrap();
    let mut rels = Vec::new();
    let len = 2 * n;
    for (i, c) in classes.iter().enumerate() {
        if (0..len).any(|p| c[p] == c[(p + 1) % len]) {
            let mut v = vec![0i64; classes.len()];
            v[i] = 1;
            rels.push(v);
        }
    }
    for w in &words {
        for alpha in 0..len {
            let a = w[alpha];
            let mut rest = w.clone();
            rest.remove(alpha);
            let b_labels: Vec<u8> = (0..n as u8).filter(|&b| b != a).collect();
            for b in b_labels {
                let ends: Vec<usize> = (0..rest.len()).filter(|&p| rest[p] == b).collect();
                let mut v = vec![0i64; classes.len()];
                for (slot, sign) in [(ends[0], 1), (ends[0] + 1, -1), (ends[1], 1), (ends[1] + 1, -1)] {
                    let mut d = rest.clone();
                    d.insert(slot, a);
                    v[idx(&d)] += sign;
                }
                rels.push(v);
            }
        }
    }
    classes.len() - dense_rank_q(&rels)
}
