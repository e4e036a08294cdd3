//! Linear chord diagrams and the space `A_n` of diagrams with `n` chords
//! modulo the one-term (isolated chord) and four-term relations.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::linalg::{Field, SparseMatrix};

/// A perfect matching of the points `1..=2n` on a line, as pairs `(a, b)`
/// with `a < b`, sorted by `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChordDiagram {
    chords: Vec<(u16, u16)>,
}

impl ChordDiagram {
    /// Validates that `chords` is a perfect matching of `1..=2n`.
    pub fn new(chords: impl IntoIterator<Item = (u16, u16)>) -> Option<Self> {
        let mut chords: Vec<(u16, u16)> = chords.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        chords.sort_unstable();
        let n2 = 2 * chords.len();
        let mut seen = vec![false; n2 + 1];
        for &(a, b) in &chords {
            if a == 0 || a == b || b as usize > n2 || seen[a as usize] || seen[b as usize] {
                return None;
            }
            seen[a as usize] = true;
            seen[b as usize] = true;
        }
        Some(ChordDiagram { chords })
    }

    /// Builds from the partner table `partner[p - 1]` of each point `p`.
    fn from_partners(partner: &[u16]) -> Self {
        let chords = partner
            .iter()
            .enumerate()
            .filter_map(|(i, &q)| {
                let p = i as u16 + 1;
                (p < q).then_some((p, q))
            })
            .collect();
        ChordDiagram { chords }
    }

    pub fn n(&self) -> usize {
        self.chords.len()
    }

    pub fn chords(&self) -> &[(u16, u16)] {
        &self.chords
    }

    /// A chord joining two adjacent points.
    pub fn has_isolated_chord(&self) -> bool {
        self.chords.iter().any(|&(a, b)| b == a + 1)
    }

    /// Mirror image under `p ↦ 2n + 1 - p`.
    pub fn reflect(&self) -> Self {
        let m = 2 * self.chords.len() as u16 + 1;
        let mut chords: Vec<_> = self.chords.iter().map(|&(a, b)| (m - b, m - a)).collect();
        chords.sort_unstable();
        ChordDiagram { chords }
    }
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in &self.chords {
            write!(f, "({a}{b})")?;
        }
        Ok(())
    }
}

/// All `(2n-1)!!` diagrams with `n` chords, ascending.
pub fn enumerate_diagrams(n: usize) -> Vec<ChordDiagram> {
    fn go(free: &mut Vec<u16>, current: &mut Vec<(u16, u16)>, out: &mut Vec<ChordDiagram>) {
        if free.is_empty() {
            let mut chords = current.clone();
            chords.sort_unstable();
            out.push(ChordDiagram { chords });
            return;
        }
        let first = free.remove(0);
        for idx in 0..free.len() {
            let partner = free.remove(idx);
            current.push((first, partner));
            go(free, current, out);
            current.pop();
            free.insert(idx, partner);
        }
        free.insert(0, first);
    }
    let mut out = Vec::new();
    go(&mut (1..=2 * n as u16).collect(), &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationKind {
    OneTerm,
    FourTerm,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelationVector {
    pub kind: RelationKind,
    pub terms: BTreeMap<ChordDiagram, i64>,
}

impl RelationVector {
    /// Sum of coefficients; zero for every four-term relation.
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }
}

/// One relation `D = 0` per diagram with an isolated chord.
pub fn one_term_relations(n: usize) -> Vec<RelationVector> {
    enumerate_diagrams(n)
        .into_iter()
        .filter(ChordDiagram::has_isolated_chord)
        .map(|d| RelationVector { kind: RelationKind::OneTerm, terms: [(d, 1)].into_iter().collect() })
        .collect()
}

/// Four-term relations, deduplicated and ascending.
///
/// A generating datum is a partial diagram on `2n - 1` points (`n - 1`
/// chords plus one free endpoint `x`), a chord `(b1, b2)` of it, and a new
/// endpoint `y` joined to `x`. Writing `D(p±)` for the diagram with `y`
/// inserted just before/after point `p`, the relation is
/// `D(b1-) - D(b1+) + D(b2-) - D(b2+) = 0`.
pub fn four_term_relations(n: usize) -> Vec<RelationVector> {
    if n < 2 {
        return Vec::new();
    }
    let m = 2 * n as u16 - 1;
    let mut out = BTreeSet::new();
    for x in 1..=m {
        let rest: Vec<u16> = (1..=m).filter(|&p| p != x).collect();
        for skeleton in enumerate_diagrams(n - 1) {
            // relabel the skeleton onto the points other than x
            let chords: Vec<(u16, u16)> = skeleton
                .chords()
                .iter()
                .map(|&(a, b)| (rest[a as usize - 1], rest[b as usize - 1]))
                .collect();
            for &(b1, b2) in &chords {
                let mut terms: BTreeMap<ChordDiagram, i64> = BTreeMap::new();
                // slot s means: y placed between old points s and s+1
                for (slot, sign) in [(b1 - 1, 1), (b1, -1), (b2 - 1, 1), (b2, -1)] {
                    let d = insert_endpoint(&chords, x, slot, m);
                    *terms.entry(d).or_insert(0) += sign;
                }
                terms.retain(|_, c| *c != 0);
                if !terms.is_empty() {
                    out.insert(RelationVector { kind: RelationKind::FourTerm, terms });
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Inserts a new point after old point `slot` (0 means first), joins it to
/// old point `x`, and renumbers.
fn insert_endpoint(chords: &[(u16, u16)], x: u16, slot: u16, m: u16) -> ChordDiagram {
    let shift = |p: u16| if p > slot { p + 1 } else { p };
    let y = slot + 1;
    let mut partner = vec![0u16; m as usize + 1];
    for &(a, b) in chords {
        partner[shift(a) as usize - 1] = shift(b);
        partner[shift(b) as usize - 1] = shift(a);
    }
    partner[shift(x) as usize - 1] = y;
    partner[y as usize - 1] = shift(x);
    ChordDiagram::from_partners(&partner)
}

/// The relation matrix: one row per relation, one column per diagram.
pub fn relation_matrix(n: usize, relations: &[RelationVector], field: Field) -> SparseMatrix {
    let diagrams = enumerate_diagrams(n);
    let index: HashMap<&ChordDiagram, usize> = diagrams.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let triplets = relations
        .iter()
        .enumerate()
        .flat_map(|(r, rel)| rel.terms.iter().map(move |(d, &c)| (r, d, c)))
        .map(|(r, d, c)| (r, index[d], c));
    SparseMatrix::from_int_triplets(relations.len(), diagrams.len(), field, triplets)
        .expect("relations live on n-chord diagrams")
}

/// `dim A_n = (2n-1)!! - rank(1T ∪ 4T)`, which is also `dim W_n`.
pub fn dim_a(n: usize, field: Field) -> usize {
    let mut relations = one_term_relations(n);
    relations.extend(four_term_relations(n));
    let total = double_factorial(n);
    total - relation_matrix(n, &relations, field).rank()
}

/// `(2n - 1)!!`, the number of diagrams with `n` chords.
pub fn double_factorial(n: usize) -> usize {
    (1..=n).map(|i| 2 * i - 1).product()
}
