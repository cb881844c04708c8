//! Robinson–Schensted shapes and the partition statistics built on them.

use std::fmt;

/// A Young diagram, rows weakly decreasing, zero rows never stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    /// Builds a partition from row lengths, dropping trailing zeros.
    ///
    /// Returns `None` if the rows are not weakly decreasing.
    pub fn new(mut rows: Vec<usize>) -> Option<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).all(|w| w[0] >= w[1]) {
            Some(Partition { rows })
        } else {
            None
        }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Total number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Length of column `j` (0-based).
    pub fn column_len(&self, j: usize) -> usize {
        self.rows.iter().take_while(|&&r| r > j).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

/// Per-row counts of even and odd boxes. Box `(k, l)` (1-based) is even
/// when `k + l` is even.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowParityCounts {
    rows: Vec<(usize, usize)>,
}

impl RowParityCounts {
    /// `(ev, odd)` per row.
    pub fn rows(&self) -> &[(usize, usize)] {
        &self.rows
    }

    pub fn even(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.0).collect()
    }

    pub fn odd(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.1).collect()
    }
}

/// Shape of the Robinson–Schensted insertion tableau of `x`.
///
/// Row insertion bumps the leftmost entry strictly greater than the incoming
/// value, so equal values sit next to each other in a row.
pub fn rs_shape<T: Ord + Clone>(x: &[T]) -> Partition {
    let mut tableau: Vec<Vec<T>> = Vec::new();
    for v in x {
        let mut carry = v.clone();
        let mut row = 0;
        loop {
            if row == tableau.len() {
                tableau.push(vec![carry]);
                break;
            }
            let r = &mut tableau[row];
            let pos = r.partition_point(|e| *e <= carry);
            if pos == r.len() {
                r.push(carry);
                break;
            }
            carry = std::mem::replace(&mut r[pos], carry);
            row += 1;
        }
    }
    Partition {
        rows: tableau.iter().map(Vec::len).collect(),
    }
}

/// Conjugate partition: row `i` of the result is column `i` of `p`.
pub fn dual_partition(p: &Partition) -> Partition {
    let width = p.rows.first().copied().unwrap_or(0);
    Partition {
        rows: (0..width).map(|j| p.column_len(j)).collect(),
    }
}

pub fn row_parity_counts(p: &Partition) -> RowParityCounts {
    let rows = p
        .rows
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            let (lo, hi) = (len / 2, len.div_ceil(2));
            // row index i + 1 is odd exactly when i is even
            if i % 2 == 0 {
                (hi, lo)
            } else {
                (lo, hi)
            }
        })
        .collect();
    RowParityCounts { rows }
}

fn weighted_row_sum(counts: impl IntoIterator<Item = usize>) -> usize {
    counts.into_iter().enumerate().map(|(k, c)| k * c).sum()
}

/// `Σ (k - 1) p_k` over the shape of `x`.
pub fn f_a<T: Ord + Clone>(x: &[T]) -> usize {
    weighted_row_sum(rs_shape(x).rows)
}

/// `Σ (k - 1) p_k^odd` over the shape of `x`.
pub fn g_odd<T: Ord + Clone>(x: &[T]) -> usize {
    weighted_row_sum(row_parity_counts(&rs_shape(x)).rows.iter().map(|r| r.1))
}

/// `Σ (k - 1) p_k^ev` over the shape of `x`.
pub fn g_ev<T: Ord + Clone>(x: &[T]) -> usize {
    weighted_row_sum(row_parity_counts(&rs_shape(x)).rows.iter().map(|r| r.0))
}
