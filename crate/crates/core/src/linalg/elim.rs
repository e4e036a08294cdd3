//! Row-echelon elimination over sparse rows.
//!
//! Columns are processed left to right. Among the rows whose leading entry
//! sits in the current column, the pivot is the sparsest one, ties broken by
//! the lowest row index; every other such row is reduced against it. The
//! reduction rule is supplied by the caller so the same driver serves F_p
//! and fraction-free integer elimination.

/// Merges two sorted sparse rows with `f(t_entry, pivot_entry)`; `f` returns
/// `None` for entries that cancel. The shared leading column is dropped.
pub(crate) fn combine<C: Clone + Default>(
    t: &[(usize, C)],
    piv: &[(usize, C)],
    mut f: impl FnMut(&C, &C) -> Option<C>,
) -> Vec<(usize, C)> {
    let zero = C::default();
    let mut out = Vec::with_capacity(t.len() + piv.len());
    let (mut i, mut j) = (1, 1);
    while i < t.len() || j < piv.len() {
        let ci = t.get(i).map_or(usize::MAX, |e| e.0);
        let cj = piv.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, f(&t[i - 1].1, &zero))
        } else if cj < ci {
            j += 1;
            (cj, f(&zero, &piv[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, f(&t[i - 1].1, &piv[j - 1].1))
        };
        if let Some(v) = v {
            out.push((col, v));
        }
    }
    out
}

/// Returns the rank, or `None` if `reduce` gave up (e.g. on overflow).
pub(crate) fn echelon_rank<C>(
    cols: usize,
    mut rows: Vec<Vec<(usize, C)>>,
    mut reduce: impl FnMut(&[(usize, C)], &[(usize, C)]) -> Option<Vec<(usize, C)>>,
) -> Option<usize> {
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); cols];
    for (r, row) in rows.iter().enumerate() {
        if let Some((c, _)) = row.first() {
            buckets[*c].push(r);
        }
    }
    let mut rank = 0;
    for c in 0..cols {
        let candidates = std::mem::take(&mut buckets[c]);
        let Some(&pivot) = candidates.iter().min_by_key(|&&r| (rows[r].len(), r)) else {
            continue;
        };
        rank += 1;
        let pivot_row = std::mem::take(&mut rows[pivot]);
        for &r in candidates.iter().filter(|&&r| r != pivot) {
            let reduced = reduce(&rows[r], &pivot_row)?;
            if let Some((lead, _)) = reduced.first() {
                debug_assert!(*lead > c);
                buckets[*lead].push(r);
            }
            rows[r] = reduced;
        }
    }
    Some(rank)
}
