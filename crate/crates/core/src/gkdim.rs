//! GK dimension of the simple highest weight module `L(λ)`, computed from
//! `λ + ρ` by Robinson–Schensted shapes.
//!
//! For types B, C and D the entries of `λ + ρ` are split into classes whose
//! members pairwise have an integral difference or an integral sum. The
//! integral class and the half-integral class are doubled with
//! [`minus_extension`] and measured with an even/odd box statistic; every
//! other class is folded by [`tilde_normalize`] and measured with
//! [`f_a`]. Type A uses classes of integral difference and `f_a` alone.
//!
//! Which parity statistic goes with which class:
//!
//! | type | integral class | half-integral class |
//! |------|----------------|---------------------|
//! | B    | odd            | odd                 |
//! | C    | odd            | even                |
//! | D    | even           | even                |

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rootdata::{scalar_weight, LieAlgebra, LieType, ParabolicChoice, Weight};
use crate::scalar::Scalar;
use crate::tableaux::{f_a, g_ev, g_odd};

/// The classes of `λ + ρ`, each keeping the original order of its entries.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassDecomposition<S> {
    /// Entries in `Z` (B/C/D only).
    pub class_int: Option<Vec<S>>,
    /// Entries in `1/2 + Z` (B/C/D only).
    pub class_half: Option<Vec<S>>,
    /// Every other class, ordered by first occurrence. For type A this holds
    /// all classes.
    pub others: Vec<Vec<S>>,
}

impl<S: Scalar> ClassDecomposition<S> {
    /// All classes, integral first, then half-integral, then the rest.
    pub fn all_classes(&self) -> impl Iterator<Item = &Vec<S>> {
        self.class_int
            .iter()
            .chain(self.class_half.iter())
            .chain(self.others.iter())
    }
}

/// `(x_1, ..., x_n, -x_n, ..., -x_1)`.
pub fn minus_extension<S: Scalar>(x: &[S]) -> Vec<S> {
    let mut out = Vec::with_capacity(2 * x.len());
    out.extend(x.iter().cloned());
    out.extend(x.iter().rev().map(|v| -v.clone()));
    out
}

/// Key of the class of `v`: `v mod Z` for type A, and the smaller of
/// `v mod Z` and `-v mod Z` otherwise. Two entries share a key exactly when
/// their difference (or, off type A, their difference or sum) is integral.
fn class_key<S: Scalar>(lie_type: LieType, v: &S) -> S {
    let f = v.fract_part();
    if lie_type == LieType::A {
        return f;
    }
    let g = (-v.clone()).fract_part();
    f.min(g)
}

pub fn decompose_classes<S: Scalar>(
    algebra: &LieAlgebra,
    weight: &Weight<S>,
) -> ClassDecomposition<S> {
    let t = algebra.lie_type();
    let mut order: Vec<S> = Vec::new();
    let mut groups: BTreeMap<S, Vec<S>> = BTreeMap::new();
    for v in weight.coords() {
        let key = class_key(t, v);
        groups
            .entry(key.clone())
            .or_insert_with(|| {
                order.push(key);
                Vec::new()
            })
            .push(v.clone());
    }

    let mut out = ClassDecomposition {
        class_int: None,
        class_half: None,
        others: Vec::new(),
    };
    let half = S::half();
    for key in order {
        let class = groups.remove(&key).expect("class recorded on first sight");
        if t != LieType::A && key.is_zero() {
            out.class_int = Some(class);
        } else if t != LieType::A && key == half {
            out.class_half = Some(class);
        } else {
            out.others.push(class);
        }
    }
    out
}

/// Folds a mixed class: keeps the entries congruent to the first one and
/// appends the negated reverse of the remaining entries.
pub fn tilde_normalize<S: Scalar>(x: &[S]) -> Result<Vec<S>> {
    let Some(first) = x.first() else {
        return Ok(Vec::new());
    };
    let key = class_key(LieType::B, first);
    if key.is_zero() || key == S::half() {
        return Err(Error::ClassDomain(format!(
            "entries lie in Z or 1/2 + Z, starting with {first}"
        )));
    }
    let (mut y, mut z) = (Vec::new(), Vec::new());
    for v in x {
        if (v.clone() - first.clone()).is_integral() {
            y.push(v.clone());
        } else if (v.clone() + first.clone()).is_integral() {
            z.push(v.clone());
        } else {
            return Err(Error::ClassDomain(format!(
                "{v} and {first} have neither integral sum nor integral difference"
            )));
        }
    }
    y.extend(z.drain(..).rev().map(|v| -v));
    Ok(y)
}

fn check_len<S: Scalar>(algebra: &LieAlgebra, weight: &Weight<S>) -> Result<()> {
    if weight.len() != algebra.n() {
        return Err(Error::WeightLength {
            expected: algebra.n(),
            got: weight.len(),
        });
    }
    Ok(())
}

/// GK dimension of `L(λ)` for an arbitrary `λ + ρ`.
pub fn gkdim_general<S: Scalar>(algebra: &LieAlgebra, weight: &Weight<S>) -> Result<usize> {
    check_len(algebra, weight)?;
    let t = algebra.lie_type();
    let classes = decompose_classes(algebra, weight);
    let top = algebra.num_positive_roots();

    if t == LieType::A {
        let loss: usize = classes.others.iter().map(|x| f_a(x)).sum();
        return Ok(top - loss);
    }

    let stat = |class: &Option<Vec<S>>, odd: bool| -> usize {
        class.as_deref().map_or(0, |x| {
            let ext = minus_extension(x);
            if odd {
                g_odd(&ext)
            } else {
                g_ev(&ext)
            }
        })
    };
    let (int_odd, half_odd) = match t {
        LieType::B => (true, true),
        LieType::C => (true, false),
        _ => (false, false),
    };
    let mut loss = stat(&classes.class_int, int_odd) + stat(&classes.class_half, half_odd);
    for x in &classes.others {
        loss += f_a(&tilde_normalize(x)?);
    }
    Ok(top - loss)
}

/// GK dimension for integral `λ`. That means `λ + ρ` has every entry in `Z`,
/// or for B and D every entry in `1/2 + Z`; for type A, all pairwise
/// differences integral. Since `ρ` is integral for C, a type C weight with
/// entries in `1/2 + Z` is not integral and is rejected.
pub fn gkdim_integral<S: Scalar>(algebra: &LieAlgebra, weight: &Weight<S>) -> Result<usize> {
    check_len(algebra, weight)?;
    let x = weight.coords();
    let t = algebra.lie_type();
    let integral = match t {
        LieType::A => x
            .first()
            .is_none_or(|a| x.iter().all(|v| (v.clone() - a.clone()).is_integral())),
        LieType::C => x.iter().all(S::is_integral),
        _ => x.iter().all(S::is_integral) || x.iter().all(S::is_half_integral),
    };
    if !integral {
        return Err(Error::Integrality(weight.to_string()));
    }
    let top = algebra.num_positive_roots();
    let loss = match t {
        LieType::A => f_a(x),
        LieType::B | LieType::C => g_odd(&minus_extension(x)),
        LieType::D => g_ev(&minus_extension(x)),
    };
    Ok(top - loss)
}

/// GK dimension of `L(z ξ_p)`.
pub fn gkdim_scalar<S: Scalar>(choice: &ParabolicChoice, z: &S) -> usize {
    let weight = scalar_weight(choice, z);
    gkdim_general(&choice.algebra(), &weight)
        .expect("scalar weights have the right length and well-formed classes")
}
