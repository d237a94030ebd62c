//! Exact sparse row reduction over `Q`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::arith::{bit_size, Rational};

/// Sparse vector: `(column, value)` pairs with strictly increasing columns and
/// nonzero values.
pub type SparseRow = Vec<(usize, Rational)>;

/// Builds a [`SparseRow`] from unordered entries, summing duplicates.
pub fn sparse_row(entries: impl IntoIterator<Item = (usize, Rational)>) -> SparseRow {
    let mut map: BTreeMap<usize, Rational> = BTreeMap::new();
    for (c, v) in entries {
        *map.entry(c).or_insert_with(Rational::zero) += v;
    }
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// `row - factor · pivot`, where both share the same leading column, which cancels.
fn eliminate(row: &SparseRow, pivot: &SparseRow, factor: &Rational) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let rc = row.get(i).map_or(usize::MAX, |e| e.0);
        let pc = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if rc < pc {
            out.push(row[i].clone());
            i += 1;
        } else if pc < rc {
            out.push((pc, -(factor * &pivot[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - factor * &pivot[j].1;
            if !v.is_zero() {
                out.push((rc, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of the matrix with the given rows and `ncols` columns.
///
/// Gaussian elimination column by column; among the rows leading in the current
/// column the pivot is the one whose leading entry has the smallest bit size,
/// ties broken by fewest nonzeros. Stops as soon as the rank reaches `ncols`.
pub fn rank(rows: Vec<SparseRow>, ncols: usize) -> usize {
    let mut buckets: BTreeMap<usize, Vec<SparseRow>> = BTreeMap::new();
    for row in rows.into_iter().filter(|r| !r.is_empty()) {
        debug_assert!(row.last().unwrap().0 < ncols);
        buckets.entry(row[0].0).or_default().push(row);
    }
    let mut rank = 0;
    while let Some((_, mut group)) = buckets.pop_first() {
        rank += 1;
        if rank == ncols {
            break;
        }
        let best = group
            .iter()
            .enumerate()
            .min_by_key(|(_, r)| (bit_size(&r[0].1), r.len()))
            .map(|(i, _)| i)
            .expect("buckets are never empty");
        let pivot = group.swap_remove(best);
        for row in group {
            let factor = &row[0].1 / &pivot[0].1;
            let reduced = eliminate(&row, &pivot, &factor);
            if let Some(&(lead, _)) = reduced.first() {
                buckets.entry(lead).or_default().push(reduced);
            }
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;
    use proptest::prelude::*;

    fn dense(rows: &[&[i64]]) -> Vec<SparseRow> {
        rows.iter()
            .map(|r| sparse_row(r.iter().enumerate().map(|(c, &v)| (c, rational(v, 1)))))
            .collect()
    }

    /// Dense fraction Gaussian elimination with first-nonzero pivoting.
    fn dense_rank(mut m: Vec<Vec<Rational>>, ncols: usize) -> usize {
        let mut r = 0;
        for c in 0..ncols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(r, p);
            for i in r + 1..m.len() {
                let f = &m[i][c] / &m[r][c];
                let (top, bottom) = m.split_at_mut(i);
                for (x, y) in bottom[0][c..].iter_mut().zip(&top[r][c..]) {
                    *x -= &f * y;
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(dense(&[&[1, 2], &[2, 4]]), 2), 1);
        assert_eq!(rank(dense(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]]), 3), 2);
        assert_eq!(rank(dense(&[&[0, 0], &[0, 0]]), 2), 0);
        assert_eq!(rank(vec![], 4), 0);
        assert_eq!(rank(dense(&[&[3, 1], &[1, 7], &[5, 5]]), 2), 2);
    }

    #[test]
    fn duplicate_entries_are_summed() {
        let r = sparse_row([(2, rational(1, 2)), (0, rational(1, 1)), (2, rational(-1, 2))]);
        assert_eq!(r, vec![(0, rational(1, 1))]);
    }

    proptest! {
        #[test]
        fn agrees_with_dense_elimination(
            m in prop::collection::vec(prop::collection::vec(-3i64..=3, 6), 0..9)
        ) {
            let rows: Vec<SparseRow> = m.iter()
                .map(|r| sparse_row(r.iter().enumerate().map(|(c, &v)| (c, rational(v, 1)))))
                .collect();
            let dense_m = m.iter().map(|r| r.iter().map(|&v| rational(v, 1)).collect()).collect();
            prop_assert_eq!(rank(rows, 6), dense_rank(dense_m, 6));
        }
    }
}
