//! Root data for the classical types and their maximal parabolics.
//!
//! Coordinates are always the standard `e_i` coordinates. For type A the
//! algebra is `sl(n)`: weights have `n` coordinates and the rank is `n - 1`.
//! For B, C and D (`so(2n+1)`, `sp(2n)`, `so(2n)`) weights have `n`
//! coordinates and the rank is `n`.
//!
//! `D_3` is accepted (it is `A_3` in disguise); the interesting range for D
//! starts at `n = 4`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieType {
    A,
    B,
    C,
    D,
}

impl LieType {
    pub const ALL: [LieType; 4] = [LieType::A, LieType::B, LieType::C, LieType::D];

    /// Smallest accepted `n`.
    pub fn min_n(self) -> usize {
        match self {
            LieType::D => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieType::A => "A",
            LieType::B => "B",
            LieType::C => "C",
            LieType::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(LieType::A),
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            other => Err(Error::UnknownType(other.to_string())),
        }
    }
}

/// A classical Lie algebra: `sl(n)`, `so(2n+1)`, `sp(2n)` or `so(2n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieAlgebra {
    lie_type: LieType,
    n: usize,
}

impl LieAlgebra {
    pub fn new(lie_type: LieType, n: usize) -> Result<Self> {
        let min = lie_type.min_n();
        if n < min {
            return Err(Error::RankDomain { lie_type, n, min });
        }
        Ok(LieAlgebra { lie_type, n })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    /// Number of weight coordinates.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        match self.lie_type {
            LieType::A => self.n - 1,
            _ => self.n,
        }
    }

    /// Largest admissible index of the removed simple root.
    pub fn max_p(&self) -> usize {
        self.rank()
    }

    /// `|Δ⁺|`, which is also the largest possible GK dimension.
    pub fn num_positive_roots(&self) -> usize {
        let n = self.n;
        match self.lie_type {
            LieType::A => n * (n - 1) / 2,
            LieType::B | LieType::C => n * n,
            LieType::D => n * n - n,
        }
    }

    /// All valid parabolic choices for this algebra, in increasing `p`.
    pub fn parabolics(&self) -> impl Iterator<Item = ParabolicChoice> + '_ {
        (1..=self.max_p()).map(move |p| ParabolicChoice {
            algebra: *self,
            p,
            spin: SpinConvention::Uniform,
        })
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.lie_type {
            LieType::A => write!(f, "sl({})", self.n),
            LieType::B => write!(f, "so({})", 2 * self.n + 1),
            LieType::C => write!(f, "sp({})", 2 * self.n),
            LieType::D => write!(f, "so({})", 2 * self.n),
        }
    }
}

/// Which vector to use for the type D fundamental weight at `p = n - 1`.
///
/// `Uniform` uses `(1/2, ..., 1/2)` for both spin nodes, so `p = n - 1` and
/// `p = n` give literally the same weights. `Standard` uses
/// `(1/2, ..., 1/2, -1/2)` at `p = n - 1`. Ignored for other types and nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum SpinConvention {
    #[default]
    Uniform,
    Standard,
}

/// A maximal parabolic `q = l + u`, given by the removed simple root `α_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParabolicChoice {
    algebra: LieAlgebra,
    p: usize,
    spin: SpinConvention,
}

impl ParabolicChoice {
    pub fn new(algebra: LieAlgebra, p: usize) -> Result<Self> {
        let max = algebra.max_p();
        if p == 0 || p > max {
            return Err(Error::ParabolicDomain {
                lie_type: algebra.lie_type,
                n: algebra.n,
                p,
                max,
            });
        }
        Ok(ParabolicChoice {
            algebra,
            p,
            spin: SpinConvention::Uniform,
        })
    }

    /// Shorthand for `LieAlgebra::new` followed by `ParabolicChoice::new`.
    pub fn of(lie_type: LieType, n: usize, p: usize) -> Result<Self> {
        Self::new(LieAlgebra::new(lie_type, n)?, p)
    }

    pub fn with_spin(mut self, spin: SpinConvention) -> Self {
        self.spin = spin;
        self
    }

    pub fn algebra(&self) -> LieAlgebra {
        self.algebra
    }

    pub fn lie_type(&self) -> LieType {
        self.algebra.lie_type
    }

    pub fn n(&self) -> usize {
        self.algebra.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn spin(&self) -> SpinConvention {
        self.spin
    }
}

/// A weight in `e_i` coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight<S> {
    coords: Vec<S>,
}

impl<S: Scalar> Weight<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Weight { coords }
    }

    /// Checks the coordinate count against `algebra`.
    pub fn for_algebra(algebra: &LieAlgebra, coords: Vec<S>) -> Result<Self> {
        if coords.len() != algebra.n() {
            return Err(Error::WeightLength {
                expected: algebra.n(),
                got: coords.len(),
            });
        }
        Ok(Weight { coords })
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

impl<S: Scalar> fmt::Display for Weight<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A positive root, stored structurally. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Root {
    /// `e_i - e_j`, `i < j`
    Diff(usize, usize),
    /// `e_i + e_j`, `i < j`
    Sum(usize, usize),
    /// `e_i` (type B)
    Short(usize),
    /// `2 e_i` (type C)
    Long(usize),
}

impl Root {
    /// Coordinates with the multiplicity of each `e_k` (as integers).
    pub fn coords(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        match *self {
            Root::Diff(i, j) => {
                v[i - 1] += 1;
                v[j - 1] -= 1;
            }
            Root::Sum(i, j) => {
                v[i - 1] += 1;
                v[j - 1] += 1;
            }
            Root::Short(i) => v[i - 1] += 1,
            Root::Long(i) => v[i - 1] += 2,
        }
        v
    }

    /// Whether the root lies in the Levi factor of the parabolic `choice`,
    /// i.e. is supported on simple roots other than `α_p`.
    fn in_levi(&self, choice: &ParabolicChoice) -> bool {
        let p = choice.p;
        let n = choice.n();
        let same_block = |i: usize, j: usize| (j <= p) || (i > p);
        match (choice.lie_type(), *self) {
            // Coefficient of α_p in e_i - e_j is 1 iff i <= p < j.
            (_, Root::Diff(i, j)) => same_block(i, j),
            // Every e_i + e_j contains α_n once; it contains α_{n-1} iff j < n.
            (LieType::D, Root::Sum(_, j)) if p + 1 >= n => p == n - 1 && j == n,
            (LieType::D, Root::Sum(i, _)) => i > p,
            (_, Root::Sum(i, _)) => i > p,
            (_, Root::Short(i)) | (_, Root::Long(i)) => {
                // e_i = α_i + ... + α_n; 2e_i = 2(α_i + ... + α_{n-1}) + α_n.
                i > p
            }
        }
    }
}

/// `ρ`, the half-sum of positive roots.
pub fn rho<S: Scalar>(algebra: &LieAlgebra) -> Weight<S> {
    let n = algebra.n() as i64;
    let coords = (1..=n)
        .map(|i| match algebra.lie_type() {
            LieType::A => S::from_frac(n + 1 - 2 * i, 2),
            LieType::B => S::from_frac(2 * (n - i) + 1, 2),
            LieType::C => S::from_int(n - i + 1),
            LieType::D => S::from_int(n - i),
        })
        .collect();
    Weight::new(coords)
}

/// The fundamental weight `ξ_p` dual to the removed simple root.
pub fn fundamental_weight<S: Scalar>(choice: &ParabolicChoice) -> Weight<S> {
    let n = choice.n();
    let p = choice.p;
    let coords = match choice.lie_type() {
        LieType::A => {
            let a = S::from_frac((n - p) as i64, n as i64);
            let b = a.clone() - S::one();
            (0..n)
                .map(|i| if i < p { a.clone() } else { b.clone() })
                .collect()
        }
        LieType::B if p == n => vec![S::half(); n],
        LieType::D if p + 1 >= n => {
            let mut v = vec![S::half(); n];
            if p == n - 1 && choice.spin == SpinConvention::Standard {
                v[n - 1] = -S::half();
            }
            v
        }
        _ => (0..n)
            .map(|i| if i < p { S::one() } else { S::zero() })
            .collect(),
    };
    Weight::new(coords)
}

/// `λ + ρ` for the scalar-type weight `λ = z ξ_p`.
pub fn scalar_weight<S: Scalar>(choice: &ParabolicChoice, z: &S) -> Weight<S> {
    let xi = fundamental_weight::<S>(choice);
    let r = rho::<S>(&choice.algebra);
    let coords = xi
        .coords
        .into_iter()
        .zip(r.coords)
        .map(|(x, r)| x * z.clone() + r)
        .collect();
    Weight::new(coords)
}

pub fn positive_roots(algebra: &LieAlgebra) -> Vec<Root> {
    let n = algebra.n();
    let t = algebra.lie_type();
    let mut roots = Vec::with_capacity(algebra.num_positive_roots());
    for i in 1..=n {
        for j in i + 1..=n {
            roots.push(Root::Diff(i, j));
            if t != LieType::A {
                roots.push(Root::Sum(i, j));
            }
        }
        match t {
            LieType::B => roots.push(Root::Short(i)),
            LieType::C => roots.push(Root::Long(i)),
            _ => {}
        }
    }
    roots
}

/// `dim u` from the closed forms.
pub fn dim_nilradical(choice: &ParabolicChoice) -> usize {
    let n = choice.n();
    let p = choice.p;
    match choice.lie_type() {
        LieType::A => p * (n - p),
        // 2np - (3/2)p^2 + p/2 = 2np - p(3p - 1)/2
        LieType::B | LieType::C => 2 * n * p - p * (3 * p - 1) / 2,
        LieType::D if p + 1 >= n => n * (n - 1) / 2,
        // 2np - (3/2)p^2 - p/2 = 2np - p(3p + 1)/2
        LieType::D => 2 * n * p - p * (3 * p + 1) / 2,
    }
}

/// `dim u` by counting positive roots outside the Levi factor.
pub fn dim_nilradical_enumerated(choice: &ParabolicChoice) -> usize {
    positive_roots(&choice.algebra)
        .iter()
        .filter(|r| !r.in_levi(choice))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_frac(n, d)
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn rank_floors() {
        assert!(LieAlgebra::new(LieType::A, 1).is_err());
        assert!(LieAlgebra::new(LieType::B, 1).is_err());
        assert!(LieAlgebra::new(LieType::C, 1).is_err());
        assert!(LieAlgebra::new(LieType::D, 2).is_err());
        assert!(LieAlgebra::new(LieType::D, 3).is_ok());
        let err = LieAlgebra::new(LieType::D, 2).unwrap_err();
        assert_eq!(
            err,
            Error::RankDomain {
                lie_type: LieType::D,
                n: 2,
                min: 3
            }
        );
    }

    #[test]
    fn parabolic_range() {
        assert!(ParabolicChoice::of(LieType::A, 4, 4).is_err());
        assert!(ParabolicChoice::of(LieType::A, 4, 3).is_ok());
        assert!(ParabolicChoice::of(LieType::B, 4, 4).is_ok());
        assert!(ParabolicChoice::of(LieType::C, 4, 0).is_err());
        assert!(ParabolicChoice::of(LieType::D, 5, 6).is_err());
    }

    #[test]
    fn rho_examples() {
        let a4 = LieAlgebra::new(LieType::A, 4).unwrap();
        assert_eq!(
            rho::<Rational>(&a4).into_coords(),
            vec![q(3, 2), q(1, 2), q(-1, 2), q(-3, 2)]
        );
        let c3 = LieAlgebra::new(LieType::C, 3).unwrap();
        assert_eq!(rho::<Rational>(&c3).into_coords(), ints(&[3, 2, 1]));
        let d4 = LieAlgebra::new(LieType::D, 4).unwrap();
        assert_eq!(rho::<Rational>(&d4).into_coords(), ints(&[3, 2, 1, 0]));
        let b3 = LieAlgebra::new(LieType::B, 3).unwrap();
        assert_eq!(
            rho::<Rational>(&b3).into_coords(),
            vec![q(5, 2), q(3, 2), q(1, 2)]
        );
    }

    #[test]
    fn fundamental_weight_examples() {
        let c = ParabolicChoice::of(LieType::A, 4, 1).unwrap();
        assert_eq!(
            fundamental_weight::<Rational>(&c).into_coords(),
            vec![q(3, 4), q(-1, 4), q(-1, 4), q(-1, 4)]
        );
        let c = ParabolicChoice::of(LieType::B, 3, 3).unwrap();
        assert_eq!(
            fundamental_weight::<Rational>(&c).into_coords(),
            vec![q(1, 2); 3]
        );
        let c = ParabolicChoice::of(LieType::C, 4, 2).unwrap();
        assert_eq!(
            fundamental_weight::<Rational>(&c).into_coords(),
            ints(&[1, 1, 0, 0])
        );
    }

    #[test]
    fn spin_convention_flips_last_coordinate_only_at_n_minus_1() {
        let uniform = ParabolicChoice::of(LieType::D, 5, 4).unwrap();
        let std = uniform.with_spin(SpinConvention::Standard);
        let mut expected = vec![q(1, 2); 5];
        assert_eq!(
            fundamental_weight::<Rational>(&uniform).into_coords(),
            expected
        );
        expected[4] = q(-1, 2);
        assert_eq!(fundamental_weight::<Rational>(&std).into_coords(), expected);
        let top = ParabolicChoice::of(LieType::D, 5, 5)
            .unwrap()
            .with_spin(SpinConvention::Standard);
        assert_eq!(
            fundamental_weight::<Rational>(&top).into_coords(),
            vec![q(1, 2); 5]
        );
    }

    #[test]
    fn scalar_weight_examples() {
        let c = ParabolicChoice::of(LieType::B, 3, 3).unwrap();
        assert_eq!(scalar_weight(&c, &q(-1, 1)).into_coords(), ints(&[2, 1, 0]));
        let c = ParabolicChoice::of(LieType::C, 4, 1).unwrap();
        assert_eq!(
            scalar_weight(&c, &q(0, 1)).into_coords(),
            ints(&[4, 3, 2, 1])
        );
        let c = ParabolicChoice::of(LieType::D, 4, 1).unwrap();
        assert_eq!(
            scalar_weight(&c, &q(-3, 1)).into_coords(),
            ints(&[0, 2, 1, 0])
        );
    }

    #[test]
    fn positive_root_counts() {
        let count = |t, n| positive_roots(&LieAlgebra::new(t, n).unwrap()).len();
        assert_eq!(count(LieType::A, 3), 3);
        assert_eq!(count(LieType::B, 2), 4);
        assert_eq!(count(LieType::D, 3), 6);
        for n in 3..=10 {
            for t in LieType::ALL {
                let alg = LieAlgebra::new(t, n).unwrap();
                assert_eq!(positive_roots(&alg).len(), alg.num_positive_roots());
            }
        }
    }

    #[test]
    fn nilradical_examples() {
        let dim = |t, n, p| dim_nilradical(&ParabolicChoice::of(t, n, p).unwrap());
        let en = |t, n, p| dim_nilradical_enumerated(&ParabolicChoice::of(t, n, p).unwrap());
        assert_eq!(dim(LieType::A, 5, 2), 6);
        assert_eq!(dim(LieType::B, 5, 2), 15);
        assert_eq!(dim(LieType::D, 6, 3), 21);
        assert_eq!(en(LieType::B, 5, 2), 15);
        assert_eq!(en(LieType::A, 3, 1), 2);
        assert_eq!(en(LieType::D, 4, 4), 6);
        // end points
        assert_eq!(dim(LieType::B, 7, 1), 13);
        assert_eq!(dim(LieType::C, 7, 7), 28);
        assert_eq!(dim(LieType::D, 7, 1), 12);
        assert_eq!(dim(LieType::D, 7, 6), 21);
    }

    #[test]
    fn nilradical_closed_form_matches_enumeration() {
        for t in LieType::ALL {
            for n in t.min_n()..=20 {
                let alg = LieAlgebra::new(t, n).unwrap();
                for c in alg.parabolics() {
                    assert_eq!(
                        dim_nilradical(&c),
                        dim_nilradical_enumerated(&c),
                        "{t} n={n} p={}",
                        c.p()
                    );
                }
            }
        }
    }

    #[test]
    fn rho_is_half_sum_of_positive_roots() {
        for t in LieType::ALL {
            for n in t.min_n()..=10 {
                let alg = LieAlgebra::new(t, n).unwrap();
                let mut sum = vec![0i64; n];
                for r in positive_roots(&alg) {
                    for (s, c) in sum.iter_mut().zip(r.coords(n)) {
                        *s += c;
                    }
                }
                let half: Vec<Rational> = sum.iter().map(|&s| q(s, 2)).collect();
                assert_eq!(rho::<Rational>(&alg).into_coords(), half, "{t} n={n}");
            }
        }
    }

    #[test]
    fn fundamental_weight_shapes() {
        for t in LieType::ALL {
            for n in t.min_n()..=9 {
                let alg = LieAlgebra::new(t, n).unwrap();
                for c in alg.parabolics() {
                    let xi = fundamental_weight::<Rational>(&c).into_coords();
                    let p = c.p();
                    match t {
                        LieType::A => {
                            let s: Rational = xi.iter().cloned().sum();
                            assert_eq!(s, q(0, 1));
                        }
                        LieType::B | LieType::C if p < n => {
                            assert_eq!(
                                xi,
                                (0..n).map(|i| q((i < p) as i64, 1)).collect::<Vec<_>>()
                            );
                        }
                        LieType::D if p + 1 < n => {
                            assert_eq!(
                                xi,
                                (0..n).map(|i| q((i < p) as i64, 1)).collect::<Vec<_>>()
                            );
                        }
                        _ => {}
                    }
                    assert_eq!(scalar_weight(&c, &q(0, 1)), rho::<Rational>(&alg));
                }
            }
        }
    }
}
