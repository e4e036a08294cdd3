//! Simplicial structure on `Y = H*(S^•)` and its normalization.
//!
//! `Y_l` is the algebra on `l` strands. The face `∂_i` (0 <= i <= l) is the
//! pullback along the coface that doubles point `i` (inner faces) or adds a
//! point at the boundary (outer faces). Inner faces relabel `g_jk` along the
//! order-preserving surjection that merges strands `i` and `i+1`, so
//! `g_{i,i+1}` becomes the tangent class `g_ii`. Outer faces send every
//! generator touching the boundary strand to zero.
//!
//! The normalized module `N_l` is spanned by the basis monomials that touch
//! every strand; the remaining basis monomials span the degenerate part.

use std::collections::HashMap;

use crate::algebra::{
    basis_monomials, dim_y, reduce_factors, AlgebraElement, BasisMonomial, IntegralElement, Strand,
};
use crate::error::{Error, Result};
use crate::linalg::{Field, SparseMatrix};

/// Factors of `∂_i m` before normalization, or `None` when the face kills `m`.
pub(crate) fn face_factors(l: Strand, i: Strand, m: &BasisMonomial) -> Option<Vec<(Strand, Strand)>> {
    if i == 0 {
        if m.factors().any(|(a, _)| a == 1) {
            return None;
        }
        return Some(m.factors().map(|(a, b)| (a - 1, b - 1)).collect());
    }
    if i == l {
        if m.factors().any(|(_, b)| b == l) {
            return None;
        }
        return Some(m.factors().collect());
    }
    let shrink = |j: Strand| if j <= i { j } else { j - 1 };
    Some(m.factors().map(|(a, b)| (shrink(a), shrink(b))).collect())
}

/// `∂_i m` in the basis of `Y_{l-1}`, with integer coefficients.
pub fn face_integral(l: Strand, i: Strand, m: &BasisMonomial) -> IntegralElement {
    face_factors(l, i, m).map(|f| reduce_factors(&f)).unwrap_or_default()
}

/// The face map `∂_i : Y_l -> Y_{l-1}`.
pub fn face_pullback(i: Strand, x: &AlgebraElement) -> Result<AlgebraElement> {
    let l = x.strands();
    if l == 0 || i > l {
        return Err(Error::Argument(format!("face index {i} out of range for {l} strands")));
    }
    let field = x.field();
    let mut out = AlgebraElement::zero(l - 1, field);
    for (m, c) in x.terms() {
        let image = AlgebraElement::from_integral(l - 1, field, &face_integral(l, i, m));
        out = out.add(&image.scale(c))?;
    }
    Ok(out)
}

fn skip_strand(i: Strand, m: &BasisMonomial) -> BasisMonomial {
    let lift = |j: Strand| if j < i { j } else { j + 1 };
    BasisMonomial::new(
        m.diagonal().iter().map(|&j| lift(j)).collect(),
        m.forest().iter().map(|&(a, b)| (lift(a), lift(b))).collect(),
    )
    .expect("an order-preserving injection keeps basis form")
}

/// The degeneracy map `Y_{l-1} -> Y_l` forgetting strand `i` (1 <= i <= l),
/// i.e. relabeling along the injection that skips `i`.
pub fn degeneracy_pullback(i: Strand, x: &AlgebraElement) -> Result<AlgebraElement> {
    let l = x.strands() + 1;
    if i == 0 || i > l {
        return Err(Error::Argument(format!("degeneracy index {i} out of range for {l} strands")));
    }
    let field = x.field();
    let mut out = AlgebraElement::zero(l, field);
    for (m, c) in x.terms() {
        out = out.add(&AlgebraElement::basis(l, field, skip_strand(i, m)).scale(c))?;
    }
    Ok(out)
}

/// Basis monomials of degree `2k` on `l` strands touching every strand, ascending.
pub fn normalized_basis(l: Strand, k: usize) -> Vec<BasisMonomial> {
    let mut out = Vec::new();
    // k factors touch at most 2k strands.
    if l as usize > 2 * k {
        return out;
    }
    for edges in (l as usize).saturating_sub(k)..=k {
        let mut forest = Vec::new();
        forests_with(l, 2, edges, &mut forest, &mut |f| {
            let mut touched = vec![false; l as usize + 1];
            for &(a, b) in f {
                touched[a as usize] = true;
                touched[b as usize] = true;
            }
            let untouched: Vec<Strand> = (1..=l).filter(|&s| !touched[s as usize]).collect();
            let diag_count = k - edges;
            if untouched.len() > diag_count {
                return;
            }
            let extra_pool: Vec<Strand> = (1..=l).filter(|&s| touched[s as usize]).collect();
            for extra in choose(&extra_pool, diag_count - untouched.len()) {
                let mut diagonal = untouched.clone();
                diagonal.extend(extra);
                out.push(BasisMonomial::new(diagonal, f.to_vec()).expect("valid basis data"));
            }
        });
    }
    out.sort();
    out
}

fn forests_with(
    l: Strand,
    b: Strand,
    remaining: usize,
    current: &mut Vec<(Strand, Strand)>,
    emit: &mut dyn FnMut(&[(Strand, Strand)]),
) {
    if remaining == 0 {
        emit(current);
        return;
    }
    if b > l || ((l - b + 1) as usize) < remaining {
        return;
    }
    forests_with(l, b + 1, remaining, current, emit);
    for a in 1..b {
        current.push((a, b));
        forests_with(l, b + 1, remaining - 1, current, emit);
        current.pop();
    }
}

fn choose(pool: &[Strand], r: usize) -> Vec<Vec<Strand>> {
    if r == 0 {
        return vec![Vec::new()];
    }
    if pool.len() < r {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (idx, &s) in pool.iter().enumerate() {
        for mut rest in choose(&pool[idx + 1..], r - 1) {
            rest.insert(0, s);
            out.push(rest);
        }
    }
    out
}

/// `sum_j (-1)^j C(l, j) dim Y_{l-j}^{2k}`.
pub fn normalized_dim_formula(l: Strand, k: usize) -> i128 {
    let mut binom: i128 = 1;
    let mut total: i128 = 0;
    for j in 0..=l {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * binom * dim_y(l - j, k) as i128;
        binom = binom * (l - j) as i128 / (j + 1) as i128;
    }
    total
}

/// `dim Y_l^{2k} / (sum of degeneracy images)`, computed as a rank.
pub fn degenerate_quotient_dim(l: Strand, k: usize, field: Field) -> usize {
    let basis = basis_monomials(l, k);
    if l == 0 {
        return basis.len();
    }
    let index: HashMap<&BasisMonomial, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut triplets = Vec::new();
    let mut row = 0;
    for i in 1..=l {
        for m in basis_monomials(l - 1, k) {
            let x = degeneracy_pullback(i, &AlgebraElement::basis(l - 1, field, m)).expect("index in range");
            for (b, c) in x.terms() {
                triplets.push((row, index[b], c.clone()));
            }
            row += 1;
        }
    }
    let images = SparseMatrix::from_triplets(row, basis.len(), field, triplets).expect("indices in range");
    basis.len() - images.rank()
}

/// Integer matrix of `d1 = sum_i (-1)^i ∂_i : N_l -> N_{l-1}` in the
/// normalized bases, before choosing a field.
#[derive(Clone, Debug)]
pub struct IntegralDifferential {
    pub source: Vec<BasisMonomial>,
    pub target: Vec<BasisMonomial>,
    /// `(target index, source index, coefficient)`, no zeros.
    pub entries: Vec<(usize, usize, i64)>,
}

impl IntegralDifferential {
    pub fn over(&self, field: Field) -> SparseMatrix {
        SparseMatrix::from_int_triplets(self.target.len(), self.source.len(), field, self.entries.iter().copied())
            .expect("indices in range")
    }
}

pub fn d1_integral(l: Strand, k: usize) -> IntegralDifferential {
    let source = normalized_basis(l, k);
    if l == 0 {
        return IntegralDifferential { source, target: Vec::new(), entries: Vec::new() };
    }
    let target = normalized_basis(l - 1, k);
    let index: HashMap<&BasisMonomial, usize> = target.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut entries = Vec::new();
    for (col, m) in source.iter().enumerate() {
        let mut column: IntegralElement = IntegralElement::new();
        for i in 0..=l {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for (b, c) in face_integral(l, i, m) {
                *column.entry(b).or_insert(0) += sign * c;
            }
        }
        for (b, c) in column {
            // Terms missing a strand are degenerate and vanish in N_{l-1}.
            if c != 0 {
                if let Some(&row) = index.get(&b) {
                    entries.push((row, col, c));
                }
            }
        }
    }
    IntegralDifferential { source, target, entries }
}

/// Matrix of `d1 : N_l^{2k} -> N_{l-1}^{2k}` (rows index the target).
pub fn d1_matrix(l: Strand, k: usize, field: Field) -> SparseMatrix {
    d1_integral(l, k).over(field)
}

/// Whether both outer faces vanish on every normalized basis monomial.
pub fn outer_faces_vanish(l: Strand, k: usize) -> bool {
    l == 0
        || normalized_basis(l, k)
            .iter()
            .all(|m| face_factors(l, 0, m).is_none() && face_factors(l, l, m).is_none())
}

/// The row `2k` of the normalized complex, columns `0..=max_l`.
#[derive(Clone, Debug)]
pub struct ColumnComplex {
    pub k: usize,
    pub field: Field,
    /// `bases[l]` spans `N_l^{2k}`.
    pub bases: Vec<Vec<BasisMonomial>>,
    /// `differentials[l] : N_l -> N_{l-1}`; `differentials[0]` has no rows.
    pub differentials: Vec<SparseMatrix>,
}

impl ColumnComplex {
    pub fn build(k: usize, max_l: Strand, field: Field) -> Self {
        let (bases, differentials) = (0..=max_l)
            .map(|l| {
                let d = d1_integral(l, k);
                let m = d.over(field);
                (d.source, m)
            })
            .unzip();
        ColumnComplex { k, field, bases, differentials }
    }

    pub fn max_l(&self) -> usize {
        self.bases.len() - 1
    }

    /// Checks that consecutive differentials compose to zero.
    pub fn check(&self) -> Result<()> {
        for l in 1..self.differentials.len() {
            let dd = self.differentials[l - 1].compose(&self.differentials[l])?;
            if !dd.is_zero() {
                return Err(Error::ComplexViolation(format!(
                    "d1 d1 != 0 from column {l} in row {}",
                    2 * self.k
                )));
            }
        }
        Ok(())
    }
}
