//! Closed-form reducibility loci of scalar generalized Verma modules
//! `M_I(z ξ_p)`, and the algorithmic predicate they are checked against.
//!
//! `M_I(z ξ_p)` is irreducible exactly when `GKdim L(z ξ_p) = dim u`; the
//! reducible `z` form finitely many arithmetic progressions with step `1`
//! or `1/2`, closed upwards.

// bounds are kept in the form the formulas state them, e.g. `3p >= 2n + 1`
#[allow(clippy::int_plus_one)]
mod table;
#[allow(clippy::int_plus_one)]
mod wallach;

use std::fmt;

use crate::gkdim::gkdim_scalar;
use crate::rootdata::{dim_nilradical, LieType, ParabolicChoice};
use crate::scalar::Scalar;

pub use table::{gkdim_closed_form, table_value, TableBranch};
pub use wallach::wallach_annotation;

/// `{ base + step * k : k >= 0 }`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfLattice<S> {
    pub base: S,
    pub step: S,
}

impl<S: Scalar> HalfLattice<S> {
    pub fn new(base: S, step: S) -> Self {
        assert!(step.is_positive(), "lattice step must be positive");
        HalfLattice { base, step }
    }

    pub fn contains(&self, z: &S) -> bool {
        *z >= self.base && ((z.clone() - self.base.clone()) / self.step.clone()).is_integral()
    }

    /// Which lattice the progression runs along.
    pub fn lattice(&self) -> LatticeTag {
        if !self.step.is_one() {
            LatticeTag::HalfStep
        } else if self.base.is_integral() {
            LatticeTag::Integer
        } else {
            LatticeTag::HalfInteger
        }
    }

    fn covers(&self, other: &HalfLattice<S>) -> bool {
        self.contains(&other.base) && (other.step.clone() / self.step.clone()).is_integral()
    }
}

impl<S: Scalar> fmt::Display for HalfLattice<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·Z≥0", self.base, self.step)
    }
}

/// A finite union of [`HalfLattice`]s, kept normalized: sorted, with no
/// component contained in another, and two step-1 components whose bases
/// differ by exactly `1/2` merged into one step-`1/2` component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducibilitySet<S> {
    components: Vec<HalfLattice<S>>,
}

impl<S: Scalar> ReducibilitySet<S> {
    pub fn new(components: Vec<HalfLattice<S>>) -> Self {
        let mut comps = components;
        let half = S::half();
        loop {
            comps.sort();
            comps.dedup();
            let mut changed = false;
            'outer: for i in 0..comps.len() {
                for j in 0..comps.len() {
                    if i == j {
                        continue;
                    }
                    if comps[i].covers(&comps[j]) {
                        comps.remove(j);
                        changed = true;
                        break 'outer;
                    }
                    let (a, b) = (&comps[i], &comps[j]);
                    if a.step.is_one() && b.step.is_one() && b.base.clone() - a.base.clone() == half
                    {
                        let merged = HalfLattice::new(a.base.clone(), half.clone());
                        let (hi, lo) = (i.max(j), i.min(j));
                        comps.remove(hi);
                        comps.remove(lo);
                        comps.push(merged);
                        changed = true;
                        break 'outer;
                    }
                }
            }
            if !changed {
                return ReducibilitySet { components: comps };
            }
        }
    }

    pub fn components(&self) -> &[HalfLattice<S>] {
        &self.components
    }

    pub fn contains(&self, z: &S) -> bool {
        self.components.iter().any(|c| c.contains(z))
    }
}

impl<S: Scalar> fmt::Display for ReducibilitySet<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∪ ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Which lattice a first reducible point lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LatticeTag {
    /// `Z`, step 1.
    Integer,
    /// `1/2 + Z`, step 1.
    HalfInteger,
    /// `(1/2) Z`, step 1/2: both lattices from this point on.
    HalfStep,
}

impl LatticeTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            LatticeTag::Integer => "integer",
            LatticeTag::HalfInteger => "half_integer",
            LatticeTag::HalfStep => "half_step",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "integer" => Some(LatticeTag::Integer),
            "half_integer" => Some(LatticeTag::HalfInteger),
            "half_step" => Some(LatticeTag::HalfStep),
            _ => None,
        }
    }
}

impl fmt::Display for LatticeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FirstPoint<S> {
    pub lattice: LatticeTag,
    pub z: S,
}

/// Reducibility by the GK-dimension criterion.
pub fn is_reducible<S: Scalar>(choice: &ParabolicChoice, z: &S) -> bool {
    gkdim_scalar(choice, z) < dim_nilradical(choice)
}

/// The closed-form set of reducible `z`.
pub fn reducibility_set<S: Scalar>(choice: &ParabolicChoice) -> ReducibilitySet<S> {
    let n = choice.n() as i64;
    let p = choice.p() as i64;
    let q = |num: i64, den: i64| S::from_frac(num, den);
    let one = || S::one();
    let half = || S::half();
    let comps = match choice.lie_type() {
        LieType::A => vec![HalfLattice::new(q(1 - p.min(n - p), 1), one())],
        LieType::B => {
            if p == 1 {
                vec![
                    HalfLattice::new(q(0, 1), one()),
                    HalfLattice::new(q(3 - 2 * n, 2), one()),
                ]
            } else if p < n {
                // 1 - n + p/2, or 1/2 - n + p/2
                let base = if p % 2 == 0 || 3 * p < 2 * n + 1 {
                    q(2 - 2 * n + p, 2)
                } else {
                    q(1 - 2 * n + p, 2)
                };
                vec![HalfLattice::new(base, half())]
            } else if n % 2 == 0 {
                vec![HalfLattice::new(q(2 - n, 1), one())]
            } else {
                vec![HalfLattice::new(q(1 - n, 1), one())]
            }
        }
        LieType::C => {
            if p == 1 {
                vec![HalfLattice::new(q(0, 1), one())]
            } else if p < n {
                // p/2 - n + 1/2, or p/2 - n
                let base = if p % 2 == 1 || 3 * p > 2 * n {
                    q(p - 2 * n + 1, 2)
                } else {
                    q(p - 2 * n, 2)
                };
                vec![HalfLattice::new(base, half())]
            } else {
                vec![HalfLattice::new(q(1 - n, 2), half())]
            }
        }
        LieType::D => {
            if p == 1 {
                vec![HalfLattice::new(q(2 - n, 1), one())]
            } else if p + 2 <= n {
                // 3/2 + p/2 - n, or 1 + p/2 - n
                let base = if p % 2 == 1 || 3 * p < 2 * n {
                    q(3 + p - 2 * n, 2)
                } else {
                    q(2 + p - 2 * n, 2)
                };
                vec![HalfLattice::new(base, half())]
            } else if n % 2 == 0 {
                vec![HalfLattice::new(q(2 - n, 1), one())]
            } else {
                vec![HalfLattice::new(q(3 - n, 1), one())]
            }
        }
    };
    ReducibilitySet::new(comps)
}

/// Minimum of each component of [`reducibility_set`], tagged by lattice,
/// in increasing order of `z`.
pub fn first_reducible_point<S: Scalar>(choice: &ParabolicChoice) -> Vec<FirstPoint<S>> {
    first_points_of(&reducibility_set(choice))
}

pub(crate) fn first_points_of<S: Scalar>(set: &ReducibilitySet<S>) -> Vec<FirstPoint<S>> {
    let mut pts: Vec<FirstPoint<S>> = set
        .components()
        .iter()
        .map(|c| FirstPoint {
            lattice: c.lattice(),
            z: c.base.clone(),
        })
        .collect();
    pts.sort_by(|a, b| a.z.cmp(&b.z).then(a.lattice.cmp(&b.lattice)));
    pts
}

/// Default lower end of the reducibility scan, `-3n`.
pub fn default_floor<S: Scalar>(choice: &ParabolicChoice) -> S {
    S::from_int(-3 * choice.n() as i64)
}

/// First reducible points found by scanning `Z` and `1/2 + Z` upward from
/// `z_floor` to `n` with [`is_reducible`].
///
/// A lattice with no reducible point in range is absent from the result.
/// When the two minima are exactly `1/2` apart they are reported as one
/// [`LatticeTag::HalfStep`] point, matching how [`ReducibilitySet`]
/// normalizes.
pub fn first_reducible_point_searched<S: Scalar>(
    choice: &ParabolicChoice,
    z_floor: &S,
) -> Vec<FirstPoint<S>> {
    let top = S::from_int(choice.n() as i64);
    let scan = |offset: S| -> Option<S> {
        // smallest value >= z_floor congruent to offset mod 1
        let shifted = z_floor.clone() - offset.clone();
        let start = ceil_of(&shifted) + offset;
        let mut z = start;
        while z <= top {
            if is_reducible(choice, &z) {
                return Some(z);
            }
            z = z + S::one();
        }
        None
    };
    let int_min = scan(S::zero());
    let half_min = scan(S::half());
    let mut pts = match (int_min, half_min) {
        (Some(a), Some(b)) if (a.clone() - b.clone()).abs() == S::half() => {
            vec![FirstPoint {
                lattice: LatticeTag::HalfStep,
                z: a.min(b),
            }]
        }
        (a, b) => a
            .map(|z| FirstPoint {
                lattice: LatticeTag::Integer,
                z,
            })
            .into_iter()
            .chain(b.map(|z| FirstPoint {
                lattice: LatticeTag::HalfInteger,
                z,
            }))
            .collect(),
    };
    pts.sort_by(|a, b| a.z.cmp(&b.z).then(a.lattice.cmp(&b.lattice)));
    pts
}

fn ceil_of<S: Scalar>(v: &S) -> S {
    let f = v.fract_part();
    if f.is_zero() {
        v.clone()
    } else {
        v.clone() - f + S::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_frac(n, d)
    }

    fn choice(t: LieType, n: usize, p: usize) -> ParabolicChoice {
        ParabolicChoice::of(t, n, p).unwrap()
    }

    fn lat(base: Rational, step: Rational) -> HalfLattice<Rational> {
        HalfLattice::new(base, step)
    }

    #[test]
    fn reducibility_verdicts() {
        assert!(is_reducible(&choice(LieType::A, 3, 1), &q(0, 1)));
        assert!(is_reducible(&choice(LieType::B, 3, 3), &q(-2, 1)));
        assert!(!is_reducible(&choice(LieType::B, 3, 3), &q(-3, 1)));
        assert!(!is_reducible(&choice(LieType::C, 4, 1), &q(-1, 2)));
    }

    #[test]
    fn closed_sets() {
        let s = reducibility_set::<Rational>(&choice(LieType::A, 3, 1));
        assert_eq!(s.components(), &[lat(q(0, 1), q(1, 1))]);
        let s = reducibility_set::<Rational>(&choice(LieType::B, 3, 3));
        assert_eq!(s.components(), &[lat(q(-2, 1), q(1, 1))]);
        let s = reducibility_set::<Rational>(&choice(LieType::C, 4, 4));
        assert_eq!(s.components(), &[lat(q(-3, 2), q(1, 2))]);
    }

    #[test]
    fn normalization_merges_offset_progressions() {
        let s = ReducibilitySet::new(vec![lat(q(0, 1), q(1, 1)), lat(q(-1, 2), q(1, 1))]);
        assert_eq!(s.components(), &[lat(q(-1, 2), q(1, 2))]);
        let s = ReducibilitySet::new(vec![lat(q(-3, 2), q(1, 2)), lat(q(2, 1), q(1, 1))]);
        assert_eq!(s.components(), &[lat(q(-3, 2), q(1, 2))]);
        let s = ReducibilitySet::new(vec![lat(q(0, 1), q(1, 1)), lat(q(-3, 2), q(1, 1))]);
        assert_eq!(s.components().len(), 2);
        // B, n = 2, p = 1: Z>=0 and -1/2 + Z>=0 merge
        let s = reducibility_set::<Rational>(&choice(LieType::B, 2, 1));
        assert_eq!(s.components(), &[lat(q(-1, 2), q(1, 2))]);
    }

    #[test]
    fn membership() {
        let s = reducibility_set::<Rational>(&choice(LieType::C, 4, 4));
        assert!(s.contains(&q(-3, 2)));
        assert!(s.contains(&q(7, 1)));
        assert!(!s.contains(&q(-2, 1)));
        assert!(!s.contains(&q(-1, 3)));
    }

    #[test]
    fn first_points() {
        let fp = first_reducible_point::<Rational>(&choice(LieType::B, 4, 2));
        assert_eq!(
            fp,
            vec![FirstPoint {
                lattice: LatticeTag::HalfStep,
                z: q(-2, 1)
            }]
        );
        let fp = first_reducible_point::<Rational>(&choice(LieType::D, 5, 1));
        assert_eq!(
            fp,
            vec![FirstPoint {
                lattice: LatticeTag::Integer,
                z: q(-3, 1)
            }]
        );
        let fp = first_reducible_point::<Rational>(&choice(LieType::A, 6, 3));
        assert_eq!(
            fp,
            vec![FirstPoint {
                lattice: LatticeTag::Integer,
                z: q(-2, 1)
            }]
        );
    }

    #[test]
    fn searched_first_points() {
        let c = choice(LieType::B, 3, 3);
        assert_eq!(
            first_reducible_point_searched(&c, &q(-9, 1)),
            vec![FirstPoint {
                lattice: LatticeTag::Integer,
                z: q(-2, 1)
            }]
        );
        let c = choice(LieType::C, 4, 1);
        assert_eq!(
            first_reducible_point_searched(&c, &q(-12, 1)),
            vec![FirstPoint {
                lattice: LatticeTag::Integer,
                z: q(0, 1)
            }]
        );
        let c = choice(LieType::D, 4, 2);
        assert_eq!(
            first_reducible_point_searched(&c, &q(-12, 1)),
            first_reducible_point::<Rational>(&c)
        );
    }

    #[test]
    fn searched_floor_may_be_fractional() {
        let c = choice(LieType::B, 3, 3);
        assert_eq!(
            first_reducible_point_searched(&c, &q(-7, 3)),
            vec![FirstPoint {
                lattice: LatticeTag::Integer,
                z: q(-2, 1)
            }]
        );
        assert_eq!(default_floor::<Rational>(&c), q(-9, 1));
    }
}
