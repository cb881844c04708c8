//! Piecewise closed-form GK dimensions of `L(z ξ_p)` for types A, B and D,
//! transcribed clause by clause.
//!
//! Each table is an ordered list of clauses; the first clause whose
//! condition holds gives the value. A parameter `k` is always a
//! nonnegative integer unless the clause states a stronger lower bound.
//! Points no clause covers are undefined. Type C has no table.

use std::fmt;

use crate::rootdata::{LieType, ParabolicChoice};
use crate::scalar::Scalar;

/// Identifies the clause a table value came from, e.g. `B.p_even#4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TableBranch {
    pub case: &'static str,
    pub clause: u8,
}

impl fmt::Display for TableBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.case, self.clause)
    }
}

/// `z`, with its half-lattice coordinates precomputed.
struct Point<S> {
    z: S,
    /// `2z` when `z ∈ (1/2)Z`
    twice: Option<i64>,
}

impl<S: Scalar> Point<S> {
    fn new(z: &S) -> Self {
        let twice = (z.clone() + z.clone()).to_int();
        Point {
            z: z.clone(),
            twice,
        }
    }

    fn in_half_lattice(&self) -> bool {
        self.twice.is_some()
    }

    /// `z` if integral.
    fn int(&self) -> Option<i64> {
        self.twice.filter(|h| h % 2 == 0).map(|h| h / 2)
    }

    /// `z - 1/2` if `z ∈ 1/2 + Z`.
    fn half_floor(&self) -> Option<i64> {
        self.twice
            .filter(|h| h.rem_euclid(2) == 1)
            .map(|h| (h - 1) / 2)
    }

    fn is_nonneg_int(&self) -> bool {
        self.int().is_some_and(|z| z >= 0)
    }

    /// `z < num / den`
    fn below(&self, num: i64, den: i64) -> bool {
        self.z < S::from_frac(num, den)
    }
}

struct Table {
    case: &'static str,
    hit: Option<(u8, i64)>,
    next: u8,
}

impl Table {
    fn new(case: &'static str) -> Self {
        Table {
            case,
            hit: None,
            next: 0,
        }
    }

    /// Records `value` for the next clause if `cond` holds and no earlier
    /// clause has matched.
    fn clause(&mut self, cond: bool, value: impl FnOnce() -> i64) -> &mut Self {
        self.next += 1;
        if self.hit.is_none() && cond {
            self.hit = Some((self.next, value()));
        }
        self
    }

    /// As [`Table::clause`], for a clause parametrized by `k`.
    fn clause_k(
        &mut self,
        k: Option<i64>,
        range: impl FnOnce(i64) -> bool,
        value: impl FnOnce(i64) -> i64,
    ) -> &mut Self {
        self.next += 1;
        if self.hit.is_none() {
            if let Some(k) = k.filter(|&k| k >= 0 && range(k)) {
                self.hit = Some((self.next, value(k)));
            }
        }
        self
    }

    fn finish(&self) -> Option<(TableBranch, i64)> {
        self.hit.map(|(clause, v)| {
            (
                TableBranch {
                    case: self.case,
                    clause,
                },
                v,
            )
        })
    }
}

fn table_a<S: Scalar>(n: i64, p: i64, pt: &Point<S>) -> Option<(TableBranch, i64)> {
    let r = p.min(n - p);
    let int = pt.int();
    Table::new("A")
        .clause(pt.below(1 - r, 1) || int.is_none(), || p * (n - p))
        .clause_k(int.map(|z| -z), |k| 1 <= k && k <= r - 1, |k| k * (n - k))
        .clause(pt.is_nonneg_int(), || 0)
        .finish()
}

fn table_b<S: Scalar>(n: i64, p: i64, pt: &Point<S>) -> Option<(TableBranch, i64)> {
    let int = pt.int();
    let hf = pt.half_floor();
    if p == 1 {
        return Table::new("B.p1")
            .clause(
                pt.below(3 - 2 * n, 2) || int.is_some_and(|z| z < 0) || !pt.in_half_lattice(),
                || 2 * n - 1,
            )
            // z = 3/2 - n + k
            .clause_k(hf.map(|h| h - 1 + n), |_| true, |_| 2 * n - 2)
            .clause(pt.is_nonneg_int(), || 0)
            .finish();
    }
    if p == n {
        let (case, bound, kmax2) = if n % 2 == 0 {
            ("B.pn.n_even", 2 - n, n - 2)
        } else {
            ("B.pn.n_odd", 1 - n, n - 1)
        };
        // z = -2k or z = -2k + 1
        let k = int.map(|z| if z % 2 == 0 { -z / 2 } else { (1 - z) / 2 });
        return Table::new(case)
            .clause(pt.below(bound, 1) || int.is_none(), || n * (n + 1) / 2)
            .clause_k(k, |k| 1 <= k && 2 * k <= kmax2, |k| k * (2 * n - 2 * k + 1))
            .clause(pt.is_nonneg_int(), || 0)
            .finish();
    }

    let dim_u = 2 * n * p - p * (3 * p - 1) / 2;
    let base = 2 * n * p - 2 * p * p;
    let neg_k = int.map(|z| -z);
    let shifted_k = int.map(|z| p - n - z);
    // z = -k - 1/2
    let half_k = hf.map(|h| -h - 1);
    // z = p - n - k - 1/2
    let half_shifted_k = hf.map(|h| p - n - h - 1);

    if p % 2 == 1 && 3 * p >= 2 * n + 1 {
        Table::new("B.p_odd_large")
            .clause(pt.is_nonneg_int(), || 0)
            .clause(pt.below(1 - 2 * n + p, 2) || !pt.in_half_lattice(), || {
                dim_u
            })
            .clause_k(neg_k, |k| 1 <= k && k <= n - p, |k| k * (2 * n - 2 * k + 1))
            .clause_k(
                shifted_k,
                |k| 1 <= k && k <= n - p,
                |k| base + 2 * k * p - 2 * k * k + n,
            )
            .clause_k(
                shifted_k,
                |k| n - p < k && 2 * k <= p - 1,
                |k| base + 2 * k * p - 2 * k * k + k,
            )
            .clause_k(half_k, |k| k < n - p, |_| base)
            .clause_k(
                half_shifted_k,
                |k| 2 * k <= p - 3,
                |k| base + k * (2 * p - 2 * k - 3) + 2 * p - 1,
            )
            .finish()
    } else if p % 2 == 0 {
        Table::new("B.p_even")
            .clause(pt.is_nonneg_int(), || 0)
            .clause(pt.below(2 - 2 * n + p, 2) || !pt.in_half_lattice(), || {
                dim_u
            })
            .clause_k(
                neg_k,
                |k| k <= p && 1 <= k && k <= n - p,
                |k| k * (2 * n - 2 * k + 1),
            )
            .clause_k(neg_k, |k| p < k && k <= n - p, |_| p * (2 * n - 2 * p + 1))
            .clause_k(
                shifted_k,
                |k| 2 * k < p && 1 <= k && k <= n - p,
                |k| base + 2 * k * p - 2 * k * k + n,
            )
            .clause_k(
                shifted_k,
                |k| n - p < k && 2 * k <= p - 2,
                |k| base + 2 * k * p - 2 * k * k + k,
            )
            .clause_k(half_k, |k| k < n - p, |_| base)
            .clause_k(
                half_shifted_k,
                |k| 2 * k <= p - 4,
                |k| base + k * (2 * p - 2 * k - 3) + 2 * p - 1,
            )
            .finish()
    } else {
        Table::new("B.p_odd_small")
            .clause(pt.is_nonneg_int(), || 0)
            .clause(pt.below(2 - 2 * n + p, 2) || !pt.in_half_lattice(), || {
                dim_u
            })
            .clause_k(
                neg_k,
                |k| k <= p && 1 <= k && k <= n - p,
                |k| k * (2 * n - 2 * k + 1),
            )
            .clause_k(neg_k, |k| p < k && k <= n - p, |_| p * (2 * n - 2 * p + 1))
            .clause_k(
                shifted_k,
                |k| 1 <= k && k <= 2 * p - n,
                |k| base + 2 * k * p - 2 * k * k + n,
            )
            .clause_k(
                shifted_k,
                |k| 2 * p - n < k && 2 * k <= p - 3,
                |k| base + (2 * k + 1) * (p - k),
            )
            .clause_k(half_k, |k| k < n - p, |_| base)
            .clause_k(
                half_shifted_k,
                |k| 2 * k <= p - 3,
                |k| base + k * (2 * p - 2 * k - 3) + 2 * p - 1,
            )
            .finish()
    }
}

fn table_d<S: Scalar>(n: i64, p: i64, pt: &Point<S>) -> Option<(TableBranch, i64)> {
    let int = pt.int();
    let hf = pt.half_floor();
    if p == 1 {
        return Table::new("D.p1")
            .clause(pt.below(2 - n, 1) || int.is_none(), || 2 * n - 2)
            .clause(int.is_some_and(|z| 2 - n <= z && z <= -1), || 2 * n - 3)
            .clause(pt.is_nonneg_int(), || 0)
            .finish();
    }
    if p + 1 >= n {
        let (case, bound, kmax2) = if n % 2 == 0 {
            ("D.spin.n_even", 2 - n, n - 2)
        } else {
            ("D.spin.n_odd", 3 - n, n - 3)
        };
        let k = int.map(|z| if z % 2 == 0 { -z / 2 } else { (1 - z) / 2 });
        return Table::new(case)
            .clause(pt.below(bound, 1) || int.is_none(), || n * (n - 1) / 2)
            .clause_k(k, |k| 1 <= k && 2 * k <= kmax2, |k| k * (2 * n - 2 * k - 1))
            .clause(pt.is_nonneg_int(), || 0)
            .finish();
    }

    let dim_u = 2 * n * p - p * (3 * p + 1) / 2;
    let base = 2 * n * p - 2 * p * p;
    let neg_k = int.map(|z| -z);
    let shifted_k = int.map(|z| p - n - z);
    // z = -k + 1/2
    let half_k = hf.map(|h| -h);
    // z = p - n - k - 1/2
    let half_shifted_k = hf.map(|h| p - n - h - 1);

    if p % 2 == 0 && 3 * p >= 2 * n {
        Table::new("D.p_even_large")
            .clause(pt.is_nonneg_int(), || 0)
            .clause(pt.below(2 + p - 2 * n, 2) || !pt.in_half_lattice(), || {
                dim_u
            })
            .clause_k(
                neg_k,
                |k| 1 <= k && k < n - p,
                |k| 2 * n * k - 2 * k * k - k,
            )
            .clause_k(
                shifted_k,
                |k| k < n - p,
                |k| base + k * (2 * p - 2 * k - 2) + n - p - 1,
            )
            .clause_k(
                shifted_k,
                |k| n - p <= k && 2 * k < p,
                |k| base + k * (2 * p - 2 * k - 1),
            )
            .clause_k(half_k, |k| k <= n - p, |_| base)
            .clause_k(
                half_shifted_k,
                |k| 2 * k <= p - 4,
                |k| base + k * (2 * p - 2 * k - 5) + 2 * p - 3,
            )
            .finish()
    } else if p % 2 == 1 {
        Table::new("D.p_odd")
            .clause(pt.is_nonneg_int(), || 0)
            .clause(pt.below(3 + p - 2 * n, 2) || !pt.in_half_lattice(), || {
                dim_u
            })
            .clause_k(
                neg_k,
                |k| k < n - p && 1 <= k && k <= p,
                |k| 2 * n * k - 2 * k * k - k,
            )
            .clause_k(neg_k, |k| p < k && k < n - p, |_| base - p)
            .clause_k(
                shifted_k,
                |k| 0.max(2 * p - n) < k && 2 * k <= p - 3,
                |k| base + k * (2 * p - 2 * k - 3) + p - 1,
            )
            .clause_k(
                shifted_k,
                |k| k <= 2 * p - n && k < n - p,
                |k| base + k * (2 * p - 2 * k - 2) + n - p - 1,
            )
            .clause_k(
                shifted_k,
                |k| n - p <= k && 2 * k <= p - 3,
                |k| base + k * (2 * p - 2 * k - 1),
            )
            .clause_k(half_k, |k| k <= n - p, |_| base)
            .clause_k(
                half_shifted_k,
                |k| 2 * k <= p - 5,
                |k| base + k * (2 * p - 2 * k - 5) + 2 * p - 3,
            )
            .finish()
    } else {
        Table::new("D.p_even_small")
            .clause(pt.is_nonneg_int(), || 0)
            .clause(pt.below(3 + p - 2 * n, 2) || !pt.in_half_lattice(), || {
                dim_u
            })
            .clause_k(
                neg_k,
                |k| 1 <= k && k < n - p && k < p,
                |k| 2 * n * k - 2 * k * k - k,
            )
            .clause_k(neg_k, |k| p <= k && k < n - p, |_| base - p)
            .clause_k(
                shifted_k,
                |k| k <= 2 * p - n,
                |k| base + k * (2 * p - 2 * k - 2) + n - p - 1,
            )
            // printed as "2p - n < 0 <= k <= (p-3)/2"
            .clause_k(
                shifted_k,
                |k| 2 * p - n < k && 2 * k <= p - 3,
                |k| base + k * (2 * p - 2 * k - 3) + p - 1,
            )
            .clause_k(half_k, |k| k <= n - p, |_| base)
            .clause_k(
                half_shifted_k,
                |k| 2 * k <= p - 4,
                |k| base + k * (2 * p - 2 * k - 5) + 2 * p - 3,
            )
            .finish()
    }
}

/// The table value at `z` together with the clause it came from. Values
/// are returned as printed, without clamping, so a negative or otherwise
/// impossible entry stays visible.
pub fn table_value<S: Scalar>(choice: &ParabolicChoice, z: &S) -> Option<(TableBranch, i64)> {
    let n = choice.n() as i64;
    let p = choice.p() as i64;
    let pt = Point::new(z);
    match choice.lie_type() {
        LieType::A => table_a(n, p, &pt),
        LieType::B => table_b(n, p, &pt),
        LieType::C => None,
        LieType::D => table_d(n, p, &pt),
    }
}

/// Closed-form GK dimension of `L(z ξ_p)` for types A, B and D; `None` for
/// type C and for points no clause covers.
pub fn gkdim_closed_form<S: Scalar>(choice: &ParabolicChoice, z: &S) -> Option<usize> {
    table_value(choice, z).and_then(|(_, v)| usize::try_from(v).ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn at(t: LieType, n: usize, p: usize, num: i64, den: i64) -> Option<usize> {
        gkdim_closed_form(
            &ParabolicChoice::of(t, n, p).unwrap(),
            &Rational::from_frac(num, den),
        )
    }

    #[test]
    fn table_examples() {
        assert_eq!(at(LieType::A, 6, 3, -2, 1), Some(8));
        assert_eq!(at(LieType::B, 4, 4, -2, 1), Some(7));
        assert_eq!(at(LieType::D, 6, 6, -2, 1), Some(9));
    }

    #[test]
    fn generic_and_dominant_regions() {
        assert_eq!(at(LieType::A, 6, 3, 1, 3), Some(9));
        assert_eq!(at(LieType::A, 6, 3, -3, 1), Some(9));
        assert_eq!(at(LieType::A, 6, 3, 2, 1), Some(0));
        assert_eq!(at(LieType::B, 5, 1, -9, 2), Some(9));
        assert_eq!(at(LieType::B, 5, 1, -7, 2), Some(8));
        assert_eq!(at(LieType::B, 5, 1, -5, 2), Some(8));
        assert_eq!(at(LieType::D, 5, 1, -3, 1), Some(7));
        assert_eq!(at(LieType::D, 5, 1, -1, 3), Some(8));
    }

    #[test]
    fn type_c_has_no_table() {
        assert_eq!(at(LieType::C, 4, 4, -1, 2), None);
    }

    #[test]
    fn branch_labels() {
        let c = ParabolicChoice::of(LieType::B, 4, 4).unwrap();
        let (b, v) = table_value(&c, &Rational::from_int(-2)).unwrap();
        assert_eq!(b.to_string(), "B.pn.n_even#2");
        assert_eq!(v, 7);
    }
}
