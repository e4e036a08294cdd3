use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::elim;
use super::field::{inv_mod, Field, Scalar};
use crate::error::{Error, Result};

/// Immutable sparse matrix over a [`Field`], stored row-major with each row
/// sorted by column. No stored entry is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize, field: Field) -> Self {
        SparseMatrix { rows, cols, field, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        let data = (0..n).map(|i| vec![(i, field.one())]).collect();
        SparseMatrix { rows: n, cols: n, field, data }
    }

    /// Builds a matrix from `(row, col, value)` triplets. Repeated positions are summed.
    pub fn from_triplets<I>(rows: usize, cols: usize, field: Field, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(Error::Shape(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            if v.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.to_string(),
                    right: v.field().to_string(),
                });
            }
            let slot = acc[r].entry(c).or_insert_with(|| field.zero());
            *slot = slot.add(&v);
        }
        let data = acc
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Ok(SparseMatrix { rows, cols, field, data })
    }

    pub fn from_int_triplets<I>(rows: usize, cols: usize, field: Field, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        Self::from_triplets(
            rows,
            cols,
            field,
            entries.into_iter().map(|(r, c, v)| (r, c, field.from_i64(v))),
        )
    }

    /// Dense integer rows; every row must have length `cols`.
    pub fn from_dense(field: Field, cols: usize, dense: &[Vec<i64>]) -> Result<Self> {
        let mut entries = Vec::new();
        for (r, row) in dense.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Shape(format!(
                    "row {r} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row.iter().enumerate().map(|(c, &v)| (r, c, v)));
        }
        Self::from_int_triplets(dense.len(), cols, field, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn row(&self, r: usize) -> &[(usize, Scalar)] {
        &self.data[r]
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&Scalar> {
        let row = self.data.get(r)?;
        row.binary_search_by_key(&c, |(j, _)| *j).ok().map(|k| &row[k].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut data = vec![Vec::new(); self.cols];
        for (r, c, v) in self.iter() {
            data[c].push((r, v.clone()));
        }
        SparseMatrix { rows: self.cols, cols: self.rows, field: self.field, data }
    }

    /// Matrix product `self * rhs`.
    pub fn compose(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch {
                left: self.field.to_string(),
                right: rhs.field.to_string(),
            });
        }
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot compose {}x{} with {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in &rhs.data[*k] {
                        let t = a.mul(b);
                        match acc.get_mut(j) {
                            Some(s) => *s = s.add(&t),
                            None => {
                                acc.insert(*j, t);
                            }
                        }
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Ok(SparseMatrix { rows: self.rows, cols: rhs.cols, field: self.field, data })
    }

    /// Rank over the matrix's field.
    pub fn rank(&self) -> usize {
        match self.field {
            Field::Prime(p) => rank_mod_p(self, p),
            Field::Rationals => rank_rational(self),
        }
    }

    /// Dimension of the right kernel.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMatrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for (r, row) in self.data.iter().enumerate() {
            if row.is_empty() {
                continue;
            }
            write!(f, "  {r}:")?;
            for (c, v) in row {
                write!(f, " ({c}, {v})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    let rows: Vec<Vec<(usize, u64)>> = m
        .data
        .iter()
        .map(|row| {
            row.iter()
                .map(|(c, v)| match v {
                    Scalar::Residue { value, .. } => (*c, *value),
                    Scalar::Rational(_) => unreachable!("rational entry in F_p matrix"),
                })
                .collect()
        })
        .collect();
    elim::echelon_rank(m.cols, rows, |t, piv| {
        let factor = t[0].1 * inv_mod(piv[0].1, p) % p;
        Some(elim::combine(t, piv, |a, b| {
            let v = (a + (p - factor * b % p)) % p;
            (v != 0).then_some(v)
        }))
    })
    .expect("mod-p elimination cannot overflow")
}

fn rank_rational(m: &SparseMatrix) -> usize {
    let big_rows: Vec<Vec<(usize, BigInt)>> = m.data.iter().map(|row| integer_row(row)).collect();

    // Entries are usually tiny; try machine integers first and fall back on overflow.
    let small: Option<Vec<Vec<(usize, i64)>>> = big_rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|(c, v)| i64::try_from(v).ok().map(|v| (*c, v)))
                .collect()
        })
        .collect();
    if let Some(rows) = small {
        if let Some(rank) = elim::echelon_rank(m.cols, rows, fraction_free_i64) {
            return rank;
        }
    }
    elim::echelon_rank(m.cols, big_rows, |t, piv| Some(fraction_free_big(t, piv)))
        .expect("bigint elimination cannot overflow")
}

/// Clears denominators of a rational row.
fn integer_row(row: &[(usize, Scalar)]) -> Vec<(usize, BigInt)> {
    let mut lcm = BigInt::one();
    for (_, v) in row {
        if let Scalar::Rational(r) = v {
            lcm = lcm.lcm(r.denom());
        }
    }
    row.iter()
        .map(|(c, v)| match v {
            Scalar::Rational(r) => (*c, r.numer() * (&lcm / r.denom())),
            Scalar::Residue { .. } => unreachable!("residue entry in rational matrix"),
        })
        .collect()
}

fn fraction_free_i64(t: &[(usize, i64)], piv: &[(usize, i64)]) -> Option<Vec<(usize, i64)>> {
    let (a, p) = (t[0].1, piv[0].1);
    let g = a.gcd(&p);
    let (ta, pa) = (p / g, a / g);
    let mut overflow = false;
    let mut out = elim::combine(t, piv, |x, y| {
        let v = ta.checked_mul(*x).zip(pa.checked_mul(*y)).and_then(|(u, w)| u.checked_sub(w));
        match v {
            Some(v) => (v != 0).then_some(v),
            None => {
                overflow = true;
                None
            }
        }
    });
    if overflow {
        return None;
    }
    let content = out.iter().fold(0i64, |g, (_, v)| g.gcd(v));
    if content > 1 {
        out.iter_mut().for_each(|(_, v)| *v /= content);
    }
    Some(out)
}

fn fraction_free_big(t: &[(usize, BigInt)], piv: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
    let (a, p) = (&t[0].1, &piv[0].1);
    let g = a.gcd(p);
    let (ta, pa) = (p / &g, a / &g);
    let mut out = elim::combine(t, piv, |x, y| {
        let v = &ta * x - &pa * y;
        (!v.is_zero()).then_some(v)
    });
    let content = out.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    if content > BigInt::one() {
        out.iter_mut().for_each(|(_, v)| *v = &*v / &content);
    }
    out
}
