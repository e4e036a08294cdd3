//! The graded commutative algebra `Y[l]`: cohomology of the configuration
//! space of `l` ordered points in R^3 with unit tangent vectors.
//!
//! Generators `g_ij` (1 <= i <= j <= l) all have degree 2. Off-diagonal
//! generators satisfy `g_ij = -g_ji`, every generator squares to zero, and
//! off-diagonal triples satisfy the Arnold relation
//! `g_ij g_jk + g_jk g_ki + g_ki g_ij = 0` for pairwise distinct indices.
//! The diagonal class `g_ii` is the tangent sphere of strand `i` and does
//! not interact with the other generators.
//!
//! Basis: a set of diagonal classes times a product of off-diagonal
//! generators `g_ab` (a < b) whose larger indices `b` are pairwise
//! distinct. Any other monomial is brought into this form by repeatedly
//! applying `g_ac g_bc = g_ab g_bc - g_ab g_ac` (a < b < c).

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar};

/// Strand index, starting at 1.
pub type Strand = u16;

/// Integer linear combination of basis monomials.
pub type IntegralElement = BTreeMap<BasisMonomial, i64>;

/// A canonical generator `g_ij` with `i <= j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenPair {
    pub i: Strand,
    pub j: Strand,
}

impl GenPair {
    /// Canonicalizes `g_ij`, returning the sign picked up by antisymmetry.
    pub fn canonical(i: Strand, j: Strand) -> (GenPair, i64) {
        if i > j {
            (GenPair { i: j, j: i }, -1)
        } else {
            (GenPair { i, j }, 1)
        }
    }

    pub fn is_diagonal(&self) -> bool {
        self.i == self.j
    }
}

/// An arbitrary product of generators on `strands` strands. Factors may be
/// given in either index order and may repeat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    strands: Strand,
    factors: Vec<(Strand, Strand)>,
}

impl Monomial {
    pub fn new(strands: Strand, factors: impl IntoIterator<Item = (Strand, Strand)>) -> Result<Self> {
        let factors: Vec<_> = factors.into_iter().collect();
        for &(i, j) in &factors {
            if i == 0 || j == 0 || i > strands || j > strands {
                return Err(Error::Argument(format!(
                    "generator g_{i}{j} is not defined on {strands} strands"
                )));
            }
        }
        Ok(Monomial { strands, factors })
    }

    pub fn strands(&self) -> Strand {
        self.strands
    }

    pub fn factors(&self) -> &[(Strand, Strand)] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        2 * self.factors.len()
    }
}

/// A basis monomial: diagonal set `D` and forest factors `(a, b)`, `a < b`,
/// stored by strictly increasing `b`. Ordered lexicographically on
/// `(diagonal, forest)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisMonomial {
    diagonal: Vec<Strand>,
    forest: Vec<(Strand, Strand)>,
}

impl BasisMonomial {
    pub fn unit() -> Self {
        BasisMonomial { diagonal: Vec::new(), forest: Vec::new() }
    }

    /// Validating constructor; `None` if the data is not in basis form.
    pub fn new(mut diagonal: Vec<Strand>, mut forest: Vec<(Strand, Strand)>) -> Option<Self> {
        diagonal.sort_unstable();
        if diagonal.windows(2).any(|w| w[0] == w[1]) || diagonal.first() == Some(&0) {
            return None;
        }
        forest.sort_unstable_by_key(|&(a, b)| (b, a));
        if forest.iter().any(|&(a, b)| a == 0 || a >= b) || forest.windows(2).any(|w| w[0].1 == w[1].1) {
            return None;
        }
        Some(BasisMonomial { diagonal, forest })
    }

    pub fn diagonal(&self) -> &[Strand] {
        &self.diagonal
    }

    pub fn forest(&self) -> &[(Strand, Strand)] {
        &self.forest
    }

    /// Number of generator factors; the degree is twice this.
    pub fn complexity(&self) -> usize {
        self.diagonal.len() + self.forest.len()
    }

    pub fn degree(&self) -> usize {
        2 * self.complexity()
    }

    /// All factors as `(i, j)` pairs, diagonal ones first.
    pub fn factors(&self) -> impl Iterator<Item = (Strand, Strand)> + '_ {
        self.diagonal.iter().map(|&i| (i, i)).chain(self.forest.iter().copied())
    }

    pub fn max_strand(&self) -> Strand {
        self.factors().map(|(_, j)| j).max().unwrap_or(0)
    }

    /// Whether every strand `1..=l` occurs in some factor.
    pub fn covers(&self, l: Strand) -> bool {
        let mut seen = vec![false; l as usize + 1];
        for (i, j) in self.factors() {
            seen[i as usize] = true;
            seen[j as usize] = true;
        }
        seen[1..].iter().all(|&s| s)
    }
}

impl fmt::Display for BasisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.complexity() == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors().map(|(i, j)| format!("g{i}_{j}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Reduces a product of generators to basis form with integer coefficients,
/// always rewriting at the largest shared index first.
pub fn reduce_factors(factors: &[(Strand, Strand)]) -> IntegralElement {
    reduce_factors_with(factors, &mut |_| 0)
}

/// Same as [`reduce_factors`], but `pick(n)` selects which of the `n`
/// currently admissible rewrites to apply. Index 0 is the canonical choice.
pub fn reduce_factors_with(
    factors: &[(Strand, Strand)],
    pick: &mut dyn FnMut(usize) -> usize,
) -> IntegralElement {
    let mut out = IntegralElement::new();
    let mut sign = 1i64;
    let mut diagonal = Vec::new();
    let mut edges = Vec::new();
    for &(i, j) in factors {
        let (g, s) = GenPair::canonical(i, j);
        sign *= s;
        if g.is_diagonal() {
            diagonal.push(g.i);
        } else {
            edges.push((g.i, g.j));
        }
    }
    diagonal.sort_unstable();
    if diagonal.windows(2).any(|w| w[0] == w[1]) {
        return out;
    }

    let mut work = vec![(edges, sign)];
    while let Some((mut edges, coef)) = work.pop() {
        edges.sort_unstable_by_key(|&(a, b)| (b, a));
        if edges.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let choices = rewrite_choices(&edges);
        if choices.is_empty() {
            let key = BasisMonomial { diagonal: diagonal.clone(), forest: edges };
            let slot = out.entry(key).or_insert(0);
            *slot += coef;
            continue;
        }
        let (a, b, c) = choices[pick(choices.len()).min(choices.len() - 1)];
        // g_ac g_bc = g_ab g_bc - g_ab g_ac
        let rest: Vec<_> = edges.into_iter().filter(|&e| e != (a, c) && e != (b, c)).collect();
        let mut first = rest.clone();
        first.extend([(a, b), (b, c)]);
        let mut second = rest;
        second.extend([(a, b), (a, c)]);
        work.push((second, -coef));
        work.push((first, coef));
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Admissible rewrites `(a, b, c)` with `a < b < c` and both `g_ac`, `g_bc`
/// present, ordered by descending `c` then ascending `(a, b)`.
fn rewrite_choices(sorted_edges: &[(Strand, Strand)]) -> Vec<(Strand, Strand, Strand)> {
    let mut out = Vec::new();
    for group in sorted_edges.chunk_by(|x, y| x.1 == y.1).rev() {
        for (i, &(a, c)) in group.iter().enumerate() {
            for &(b, _) in &group[i + 1..] {
                out.push((a, b, c));
            }
        }
    }
    out
}

/// Element of `Y[l]` over a field, stored in the monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    strands: Strand,
    field: Field,
    terms: BTreeMap<BasisMonomial, Scalar>,
}

impl AlgebraElement {
    pub fn zero(strands: Strand, field: Field) -> Self {
        AlgebraElement { strands, field, terms: BTreeMap::new() }
    }

    pub fn one(strands: Strand, field: Field) -> Self {
        Self::basis(strands, field, BasisMonomial::unit())
    }

    pub fn basis(strands: Strand, field: Field, m: BasisMonomial) -> Self {
        debug_assert!(m.max_strand() <= strands);
        let mut terms = BTreeMap::new();
        terms.insert(m, field.one());
        AlgebraElement { strands, field, terms }
    }

    pub fn from_integral(strands: Strand, field: Field, x: &IntegralElement) -> Self {
        let terms = x
            .iter()
            .map(|(m, &c)| (m.clone(), field.from_i64(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        AlgebraElement { strands, field, terms }
    }

    pub fn strands(&self) -> Strand {
        self.strands
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<BasisMonomial, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, m: &BasisMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_compatible(&self, other: &AlgebraElement) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::Shape(format!(
                "elements live on {} and {} strands",
                self.strands, other.strands
            )));
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: other.field.to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_compatible(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone(), self.field);
        }
        Ok(AlgebraElement { strands: self.strands, field: self.field, terms })
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), v.mul(c)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        AlgebraElement { strands: self.strands, field: self.field, terms }
    }

    pub fn multiply(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_compatible(other)?;
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let factors: Vec<_> = m1.factors().chain(m2.factors()).collect();
                let c = c1.mul(c2);
                for (m, k) in reduce_factors(&factors) {
                    accumulate(&mut terms, m, c.mul(&self.field.from_i64(k)), self.field);
                }
            }
        }
        Ok(AlgebraElement { strands: self.strands, field: self.field, terms })
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c})*{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn accumulate(terms: &mut BTreeMap<BasisMonomial, Scalar>, m: BasisMonomial, c: Scalar, field: Field) {
    let slot = terms.entry(m).or_insert_with(|| field.zero());
    *slot = slot.add(&c);
    if slot.is_zero() {
        terms.retain(|_, v| !v.is_zero());
    }
}

/// The image of `m` in the monomial basis.
pub fn normal_form(m: &Monomial, field: Field) -> AlgebraElement {
    AlgebraElement::from_integral(m.strands, field, &reduce_factors(&m.factors))
}

/// All basis monomials of degree `2k` on `l` strands, in ascending order.
pub fn basis_monomials(l: Strand, k: usize) -> Vec<BasisMonomial> {
    let mut out = Vec::new();
    for d in 0..=k.min(l as usize) {
        for diagonal in subsets(l, d) {
            let mut forest = Vec::new();
            forests(l, 2, k - d, &mut forest, &mut |f| {
                out.push(BasisMonomial { diagonal: diagonal.clone(), forest: f.to_vec() });
            });
        }
    }
    out.sort();
    out
}

fn forests(
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
    forests(l, b + 1, remaining, current, emit);
    for a in 1..b {
        current.push((a, b));
        forests(l, b + 1, remaining - 1, current, emit);
        current.pop();
    }
}

/// `d`-element subsets of `1..=l` in lexicographic order.
pub(crate) fn subsets(l: Strand, d: usize) -> Vec<Vec<Strand>> {
    fn go(start: Strand, l: Strand, d: usize, cur: &mut Vec<Strand>, out: &mut Vec<Vec<Strand>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for s in start..=l {
            if ((l - s + 1) as usize) < d - cur.len() {
                break;
            }
            cur.push(s);
            go(s + 1, l, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, l, d, &mut Vec::new(), &mut out);
    out
}

/// Coefficient of `t^k` in `(1+t)^l * prod_{i=1}^{l-1} (1 + i t)`.
pub fn dim_y(l: Strand, k: usize) -> u128 {
    let mut poly = vec![1u128];
    let mut mul = |c: u128| {
        let mut next = vec![0u128; poly.len() + 1];
        for (e, &v) in poly.iter().enumerate() {
            next[e] += v;
            next[e + 1] += v * c;
        }
        poly = next;
    };
    for _ in 0..l {
        mul(1);
    }
    for i in 1..l {
        mul(i as u128);
    }
    poly.get(k).copied().unwrap_or(0)
}
