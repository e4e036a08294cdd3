use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::complex::{d1_integral, normalized_dim_formula};
use crate::algebra::Strand;
use crate::error::{Error, Result};
use crate::linalg::{homology_dim, Field, SparseMatrix};

/// A position `(column, row)` on a page. Ordered by column, then row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bidegree {
    pub col: i64,
    pub row: i64,
}

impl Bidegree {
    pub fn new(col: i64, row: i64) -> Self {
        Bidegree { col, row }
    }

    /// Sinha position of column `-l`, row `2k`.
    pub fn sinha(l: usize, k: usize) -> Self {
        Bidegree { col: -(l as i64), row: 2 * k as i64 }
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.col, self.row)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PageLabel {
    SinhaE1,
    SinhaE2,
    VassilievE1,
}

/// Dimensions of one page; absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PageTable {
    pub label: PageLabel,
    pub field: Field,
    pub truncation: usize,
    pub entries: BTreeMap<Bidegree, usize>,
}

impl PageTable {
    pub fn get(&self, b: Bidegree) -> usize {
        self.entries.get(&b).copied().unwrap_or(0)
    }

    /// Column where the truncated page differs from the untruncated one.
    pub fn boundary_column(&self) -> Option<i64> {
        match self.label {
            PageLabel::SinhaE2 => Some(-(self.truncation as i64)),
            _ => None,
        }
    }
}

/// Size guard for basis construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_basis: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_basis: 2_000_000 }
    }
}

fn check_capacity(n: usize, k_max: usize, limits: Limits) -> Result<()> {
    if n > Strand::MAX as usize - 1 {
        return Err(Error::Capacity {
            what: "truncation".into(),
            requested: n as u128,
            limit: Strand::MAX as u128 - 1,
        });
    }
    for k in 0..=k_max {
        for l in 1..=n.min(2 * k) {
            let dim = normalized_dim_formula(l as Strand, k).max(0) as u128;
            if dim > limits.max_basis {
                return Err(Error::Capacity {
                    what: format!("normalized basis at column -{l}, row {}", 2 * k),
                    requested: dim,
                    limit: limits.max_basis,
                });
            }
        }
    }
    Ok(())
}

/// Dimensions of `N_l^{2k}` for `1 <= l <= n`, `0 <= k <= k_max`.
pub fn e1_page(n: usize, k_max: usize, field: Field) -> Result<PageTable> {
    if n == 0 {
        return Err(Error::Argument("truncation must be at least 1".into()));
    }
    check_capacity(n, k_max, Limits::default())?;
    let entries = (0..=k_max)
        .flat_map(|k| (1..=n).map(move |l| (l, k)))
        .map(|(l, k)| (Bidegree::sinha(l, k), normalized_dim_formula(l as Strand, k) as usize))
        .collect();
    Ok(PageTable { label: PageLabel::SinhaE1, field, truncation: n, entries })
}

pub fn e2_page(n: usize, k_max: usize, field: Field) -> Result<PageTable> {
    e2_page_with_limits(n, k_max, field, Limits::default())
}

/// E2 of the `n`-truncated sequence: homology of `N_{l+1} -> N_l -> N_{l-1}`
/// with `N_{n+1} = 0`.
pub fn e2_page_with_limits(n: usize, k_max: usize, field: Field, limits: Limits) -> Result<PageTable> {
    if n == 0 {
        return Err(Error::Argument("truncation must be at least 1".into()));
    }
    check_capacity(n, k_max, limits)?;

    let jobs: Vec<(usize, usize)> = (0..=k_max).flat_map(|k| (1..=n).map(move |l| (l, k))).collect();
    let matrices: BTreeMap<(usize, usize), SparseMatrix> = jobs
        .par_iter()
        .map(|&(l, k)| ((l, k), d1_integral(l as Strand, k).over(field)))
        .collect();

    let entries = jobs
        .par_iter()
        .map(|&(l, k)| {
            let d_out = &matrices[&(l, k)];
            let dim = match matrices.get(&(l + 1, k)) {
                Some(d_in) => homology_dim(d_in, d_out)?,
                None => homology_dim(&SparseMatrix::zeros(d_out.cols(), 0, field), d_out)?,
            };
            Ok((Bidegree::sinha(l, k), dim))
        })
        .collect::<Result<BTreeMap<_, _>>>()?;

    Ok(PageTable { label: PageLabel::SinhaE2, field, truncation: n, entries })
}

/// A single E2 entry at column `-l`, row `2k` of the `truncation`-truncated page.
pub fn e2_entry(l: usize, k: usize, truncation: usize, field: Field) -> Result<usize> {
    if l == 0 || l > truncation {
        return Err(Error::Argument(format!("column -{l} outside truncation {truncation}")));
    }
    check_capacity(l.min(truncation), k, Limits::default())?;
    let d_out = d1_integral(l as Strand, k).over(field);
    let d_in = if l < truncation {
        d1_integral(l as Strand + 1, k).over(field)
    } else {
        SparseMatrix::zeros(d_out.cols(), 0, field)
    };
    homology_dim(&d_in, &d_out)
}

/// Whether a Sinha bidegree has the form `(q - 3p, 2p)`.
pub fn on_lattice(b: Bidegree) -> bool {
    b.row.rem_euclid(2) == 0
}

/// Relabels Sinha `(q - 3p, 2p)` as Vassiliev `(-p, q)`. Off-lattice
/// entries must be zero; a nonzero one is reported as an error.
pub fn vassiliev_e1_view(page: &PageTable) -> Result<PageTable> {
    if page.label != PageLabel::SinhaE2 {
        return Err(Error::Argument(format!("expected a Sinha E2 page, got {:?}", page.label)));
    }
    let mut entries = BTreeMap::new();
    for (&b, &dim) in &page.entries {
        if !on_lattice(b) {
            if dim != 0 {
                return Err(Error::Consistency(format!(
                    "nonzero entry {dim} at off-lattice bidegree {b}"
                )));
            }
            continue;
        }
        let p = b.row / 2;
        let q = b.col + 3 * p;
        entries.insert(Bidegree::new(-p, q), dim);
    }
    Ok(PageTable { label: PageLabel::VassilievE1, field: page.field, truncation: page.truncation, entries })
}
