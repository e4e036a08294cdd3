//! Brute-force check that the unit `N ČF(F*Y) -> NY` of the left Kan
//! extension along `F` induces an isomorphism on total homology.
//!
//! In simplicial degree `s` the left side is `⊕_f Y_s`, one copy for each
//! order-preserving injection `f : [s] -> {1, ..., n+1}`, i.e. each
//! `(s+1)`-subset of `{1, ..., n+1}`. Its face `d_i` drops the `i`-th
//! element of the label and applies `∂_i` to the class. The right side is
//! the normalized complex `NY` truncated at `n`. The unit forgets the label
//! and projects onto the normalized quotient.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::complex::{d1_integral, face_integral, normalized_basis};
use crate::algebra::{basis_monomials, subsets, BasisMonomial, Strand};
use crate::error::{Error, Result};
use crate::linalg::{Field, SparseMatrix};

/// Largest truncation accepted by [`kan_unit_check`].
pub const KAN_MAX_N: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KanVariant {
    Faithful,
    /// Flips the sign of the face `d_0` on the Kan side (negative control).
    CorruptedSign,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KanReport {
    pub n: usize,
    pub k_max: usize,
    /// Total degree `2k - s` to `dim - rank - rank`, which is the homology
    /// dimension whenever the side is a complex.
    pub lhs_dims: BTreeMap<i64, i64>,
    pub rhs_dims: BTreeMap<i64, i64>,
    pub lhs_is_complex: bool,
    pub unit_is_chain_map: bool,
    /// Mapping cone of the unit is acyclic, i.e. the unit is a quasi-isomorphism.
    pub cone_acyclic: bool,
    pub equal: bool,
}

pub fn kan_unit_check(n: usize, k_max: usize, field: Field) -> Result<KanReport> {
    kan_unit_check_variant(n, k_max, field, KanVariant::Faithful)
}

pub fn kan_unit_check_variant(n: usize, k_max: usize, field: Field, variant: KanVariant) -> Result<KanReport> {
    if n == 0 {
        return Err(Error::Argument("kan check needs n >= 1".into()));
    }
    if n > KAN_MAX_N {
        return Err(Error::Capacity {
            what: "kan-extension brute force".into(),
            requested: n as u128,
            limit: KAN_MAX_N as u128,
        });
    }
    let mut report = KanReport {
        n,
        k_max,
        lhs_dims: BTreeMap::new(),
        rhs_dims: BTreeMap::new(),
        lhs_is_complex: true,
        unit_is_chain_map: true,
        cone_acyclic: true,
        equal: false,
    };
    for k in 0..=k_max {
        let row = RowComplexes::build(n, k, field, variant);
        report.lhs_is_complex &= row.lhs_is_complex()?;
        report.unit_is_chain_map &= row.unit_is_chain_map()?;
        report.cone_acyclic &= row.cone_is_acyclic()?;
        for s in 0..=n {
            let t = 2 * k as i64 - s as i64;
            *report.lhs_dims.entry(t).or_insert(0) += raw_homology(&row.lhs, s);
            *report.rhs_dims.entry(t).or_insert(0) += raw_homology(&row.rhs, s);
        }
    }
    report.equal = report.lhs_is_complex && report.lhs_dims == report.rhs_dims;
    Ok(report)
}

/// `dim C_s - rank d_s - rank d_{s+1}` where `diffs[s] : C_s -> C_{s-1}`.
/// Only meaningful as homology when the differentials compose to zero.
fn raw_homology(diffs: &[SparseMatrix], s: usize) -> i64 {
    let dim = diffs[s].cols() as i64;
    let out = diffs[s].rank() as i64;
    let inc = diffs.get(s + 1).map_or(0, SparseMatrix::rank) as i64;
    dim - out - inc
}

struct RowComplexes {
    field: Field,
    /// `lhs[s] : L_s -> L_{s-1}`, `s = 0..=n`.
    lhs: Vec<SparseMatrix>,
    /// `rhs[s] : N_s -> N_{s-1}`, `s = 0..=n`.
    rhs: Vec<SparseMatrix>,
    /// `unit[s] : L_s -> N_s`.
    unit: Vec<SparseMatrix>,
}

impl RowComplexes {
    fn build(n: usize, k: usize, field: Field, variant: KanVariant) -> Self {
        let labels: Vec<Vec<Vec<Strand>>> = (0..=n).map(|s| subsets(n as Strand + 1, s + 1)).collect();
        let ybases: Vec<Vec<BasisMonomial>> = (0..=n).map(|s| basis_monomials(s as Strand, k)).collect();
        let yindex: Vec<HashMap<&BasisMonomial, usize>> = ybases
            .iter()
            .map(|b| b.iter().enumerate().map(|(i, m)| (m, i)).collect())
            .collect();
        let label_index: Vec<HashMap<&Vec<Strand>, usize>> = labels
            .iter()
            .map(|ls| ls.iter().enumerate().map(|(i, f)| (f, i)).collect())
            .collect();

        let mut lhs = Vec::with_capacity(n + 1);
        for s in 0..=n {
            let cols = labels[s].len() * ybases[s].len();
            if s == 0 {
                lhs.push(SparseMatrix::zeros(0, cols, field));
                continue;
            }
            let tdim = ybases[s - 1].len();
            let rows = labels[s - 1].len() * tdim;
            let mut triplets = Vec::new();
            for (fi, f) in labels[s].iter().enumerate() {
                for (mi, m) in ybases[s].iter().enumerate() {
                    let col = fi * ybases[s].len() + mi;
                    for i in 0..=s {
                        let mut sign: i64 = if i % 2 == 0 { 1 } else { -1 };
                        if i == 0 && variant == KanVariant::CorruptedSign {
                            sign = -sign;
                        }
                        let mut face_label = f.clone();
                        face_label.remove(i);
                        let li = label_index[s - 1][&face_label];
                        for (b, c) in face_integral(s as Strand, i as Strand, m) {
                            triplets.push((li * tdim + yindex[s - 1][&b], col, sign * c));
                        }
                    }
                }
            }
            lhs.push(SparseMatrix::from_int_triplets(rows, cols, field, triplets).expect("indices in range"));
        }

        let rhs: Vec<SparseMatrix> = (0..=n).map(|s| d1_integral(s as Strand, k).over(field)).collect();

        let unit = (0..=n)
            .map(|s| {
                let nbasis = normalized_basis(s as Strand, k);
                let nindex: HashMap<&BasisMonomial, usize> =
                    nbasis.iter().enumerate().map(|(i, m)| (m, i)).collect();
                let ydim = ybases[s].len();
                let triplets = (0..labels[s].len()).flat_map(|fi| {
                    ybases[s]
                        .iter()
                        .enumerate()
                        .filter_map(|(mi, m)| nindex.get(m).map(|&r| (r, fi * ydim + mi, 1)))
                        .collect::<Vec<_>>()
                });
                SparseMatrix::from_int_triplets(nbasis.len(), labels[s].len() * ydim, field, triplets)
                    .expect("indices in range")
            })
            .collect();

        RowComplexes { field, lhs, rhs, unit }
    }

    fn lhs_is_complex(&self) -> Result<bool> {
        for s in 1..self.lhs.len() {
            if !self.lhs[s - 1].compose(&self.lhs[s])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn unit_is_chain_map(&self) -> Result<bool> {
        for s in 1..self.lhs.len() {
            let a = self.unit[s - 1].compose(&self.lhs[s])?;
            let b = self.rhs[s].compose(&self.unit[s])?;
            if a != b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Cone in degree `s` is `L_{s-1} ⊕ N_s` with differential
    /// `(a, b) ↦ (-d a, u a + d b)`.
    fn cone_is_acyclic(&self) -> Result<bool> {
        let n = self.lhs.len() - 1;
        let ldim = |s: usize| self.lhs[s].cols();
        let ndim = |s: usize| if s <= n { self.rhs[s].cols() } else { 0 };
        let cone_dim = |s: usize| if s == 0 { ndim(0) } else { ldim(s - 1) + ndim(s) };
        let mut diffs = Vec::with_capacity(n + 2);
        for s in 0..=n + 1 {
            if s == 0 {
                diffs.push(SparseMatrix::zeros(0, cone_dim(0), self.field));
                continue;
            }
            // source L_{s-1} ⊕ N_s, target L_{s-2} ⊕ N_{s-1}
            let t_ldim = if s >= 2 { ldim(s - 2) } else { 0 };
            let mut triplets = Vec::new();
            if s >= 2 {
                for (r, c, v) in self.lhs[s - 1].iter() {
                    triplets.push((r, c, v.neg()));
                }
            }
            for (r, c, v) in self.unit[s - 1].iter() {
                triplets.push((t_ldim + r, c, v.clone()));
            }
            if s <= n {
                for (r, c, v) in self.rhs[s].iter() {
                    triplets.push((t_ldim + r, ldim(s - 1) + c, v.clone()));
                }
            }
            diffs.push(SparseMatrix::from_triplets(cone_dim(s - 1), cone_dim(s), self.field, triplets)?);
        }
        for s in 1..diffs.len() {
            if !diffs[s - 1].compose(&diffs[s])?.is_zero() {
                return Ok(false);
            }
        }
        Ok((0..diffs.len()).all(|s| raw_homology(&diffs, s) == 0))
    }
}
