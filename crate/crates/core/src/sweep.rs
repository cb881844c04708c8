//! Cross-validation sweeps run by `selfcheck` and the acceptance tests.
//!
//! Every suite fans out over its cells with rayon and collects results in
//! cell order, so reports are identical for any thread count. Cells are
//! enumerated sorted by type, `n`, `p`, then `z`.

use std::fmt;

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::closedform::{
    default_floor, first_reducible_point, first_reducible_point_searched, is_reducible,
    reducibility_set, table_value,
};
use crate::error::{Error, Result};
use crate::gkdim::{gkdim_general, gkdim_integral, gkdim_scalar};
use crate::rootdata::{dim_nilradical, dim_nilradical_enumerated, Weight};
use crate::scalar::{format_rational, parse_rational};
use crate::tableaux::rs_shape;
use crate::{LieAlgebra, LieType, ParabolicChoice, Rational, Scalar, SpinConvention};

/// Table clauses whose printed value is known to be wrong. Mismatches from
/// these clauses are reported but do not fail a suite. See
/// `docs/known_misprints.md` for the derivation.
pub const KNOWN_MISPRINTS: &[(&str, &str)] = &[
    ("B.p_even#5", "printed +n, actual +min(n-p, p-k)"),
    ("B.p_odd_large#4", "printed +n, actual +min(n-p, p-k)"),
    ("B.p_odd_small#5", "printed +n, actual +min(n-p, p-k)"),
];

/// Largest `max_n` accepted by [`SweepConfig::new`].
pub const MAX_N_CEILING: usize = 16;

/// Default seed for the random-weight suites.
pub const DEFAULT_SEED: u64 = 0x6b64_696d;

const MAX_REPORTED: usize = 10;

/// The `z` values swept for a given `n`: for each `(step, offset)` pair,
/// every `offset + m * step` with `m * step` in `[-3n, n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZGrid {
    lattices: Vec<(Rational, Rational)>,
}

impl ZGrid {
    /// Parses a comma-separated list of `step` or `step@offset` items, e.g.
    /// `1/2,1@1/3`.
    pub fn parse(spec: &str) -> Result<Self> {
        let bad = || Error::GridSpec(spec.to_string());
        let mut lattices = Vec::new();
        for item in spec.split(',') {
            let (step, offset) = match item.trim().split_once('@') {
                Some((s, o)) => (s, o),
                None => (item.trim(), "0"),
            };
            let step: Rational = parse_rational(step.trim()).map_err(|_| bad())?;
            let offset: Rational = parse_rational(offset.trim()).map_err(|_| bad())?;
            if !step.is_positive() {
                return Err(bad());
            }
            lattices.push((step, offset));
        }
        Ok(ZGrid { lattices })
    }

    /// Sorted, deduplicated grid points for rank `n`.
    pub fn points(&self, n: usize) -> Vec<Rational> {
        let lo = Rational::from_int(-3 * n as i64);
        let hi = Rational::from_int(n as i64);
        let mut out = Vec::new();
        for (step, offset) in &self.lattices {
            let mut t = lo.clone();
            while t <= hi {
                out.push(t.clone() + offset.clone());
                t += step.clone();
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

impl Default for ZGrid {
    fn default() -> Self {
        ZGrid::parse("1/2,1@1/3").expect("default grid parses")
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub max_n: usize,
    pub grid: ZGrid,
    /// Weights per type for the integral coherence suite.
    pub integral_samples: usize,
    /// Weights per kind for the type A dominance suite.
    pub dominance_samples: usize,
    /// Largest rank used by the random-weight suites.
    pub sample_max_n: usize,
    pub seed: u64,
}

impl SweepConfig {
    pub fn new(max_n: usize, grid: ZGrid) -> Result<Self> {
        if max_n > MAX_N_CEILING {
            return Err(Error::SweepCeiling {
                max_n,
                ceiling: MAX_N_CEILING,
            });
        }
        Ok(SweepConfig {
            max_n,
            grid,
            integral_samples: 1000,
            dominance_samples: 500,
            sample_max_n: 8,
            seed: DEFAULT_SEED,
        })
    }
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig::new(10, ZGrid::default()).expect("default config is in range")
    }
}

/// One failing (or allow-listed) cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub lie_type: LieType,
    pub n: usize,
    pub p: Option<usize>,
    pub z: Option<Rational>,
    pub detail: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={}", self.lie_type, self.n)?;
        if let Some(p) = self.p {
            write!(f, " p={p}")?;
        }
        if let Some(z) = &self.z {
            write!(f, " z={}", format_rational(z))?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    /// Mismatches excused by [`KNOWN_MISPRINTS`].
    pub allowed: usize,
    /// The first few failures, in cell order.
    pub counterexamples: Vec<Witness>,
    /// The first few allow-listed mismatches, in cell order.
    pub allowed_examples: Vec<Witness>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

enum Outcome {
    Pass,
    Fail(Witness),
    Allowed(Witness),
}

fn report(name: &'static str, outcomes: Vec<Outcome>) -> SuiteReport {
    let mut r = SuiteReport {
        name,
        passed: 0,
        failed: 0,
        allowed: 0,
        counterexamples: Vec::new(),
        allowed_examples: Vec::new(),
    };
    for o in outcomes {
        match o {
            Outcome::Pass => r.passed += 1,
            Outcome::Fail(w) => {
                r.failed += 1;
                if r.counterexamples.len() < MAX_REPORTED {
                    r.counterexamples.push(w);
                }
            }
            Outcome::Allowed(w) => {
                r.allowed += 1;
                if r.allowed_examples.len() < MAX_REPORTED {
                    r.allowed_examples.push(w);
                }
            }
        }
    }
    r
}

fn witness(c: &ParabolicChoice, z: Option<&Rational>, detail: String) -> Witness {
    Witness {
        lie_type: c.lie_type(),
        n: c.n(),
        p: Some(c.p()),
        z: z.cloned(),
        detail,
    }
}

fn check(
    c: &ParabolicChoice,
    z: Option<&Rational>,
    ok: bool,
    detail: impl FnOnce() -> String,
) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(witness(c, z, detail()))
    }
}

/// Smallest rank swept for each type: 2, except 4 for D.
pub fn sweep_min_n(t: LieType) -> usize {
    match t {
        LieType::D => 4,
        _ => 2,
    }
}

/// Every maximal parabolic of every type with rank in range, sorted.
pub fn choices(max_n: usize) -> Vec<ParabolicChoice> {
    let mut out = Vec::new();
    for t in LieType::ALL {
        for n in sweep_min_n(t)..=max_n {
            let algebra = LieAlgebra::new(t, n).expect("rank above the sweep floor");
            out.extend(algebra.parabolics());
        }
    }
    out
}

/// Every `(choice, z)` pair of the sweep, sorted.
pub fn cells(max_n: usize, grid: &ZGrid) -> Vec<(ParabolicChoice, Rational)> {
    choices(max_n)
        .into_iter()
        .flat_map(|c| grid.points(c.n()).into_iter().map(move |z| (c, z)))
        .collect()
}

/// Covers every rank the types allow, including D at `n = 3`.
pub fn nilradical(max_n: usize) -> SuiteReport {
    let all: Vec<ParabolicChoice> = LieType::ALL
        .into_iter()
        .flat_map(|t| (t.min_n()..=max_n).filter_map(move |n| LieAlgebra::new(t, n).ok()))
        .flat_map(|a| a.parabolics().collect::<Vec<_>>())
        .collect();
    let outcomes = all
        .par_iter()
        .map(|c| {
            let (closed, listed) = (dim_nilradical(c), dim_nilradical_enumerated(c));
            check(c, None, closed == listed, || {
                format!("closed form {closed}, enumeration {listed}")
            })
        })
        .collect();
    report("nilradical", outcomes)
}

pub fn oracle_equivalence(cells: &[(ParabolicChoice, Rational)]) -> SuiteReport {
    let outcomes = cells
        .par_iter()
        .map(|(c, z)| {
            let algo = is_reducible(c, z);
            let set = reducibility_set::<Rational>(c);
            check(c, Some(z), algo == set.contains(z), || {
                format!("algorithm says reducible={algo}, set {set} disagrees")
            })
        })
        .collect();
    report("oracle_equivalence", outcomes)
}

pub fn table_equivalence(cells: &[(ParabolicChoice, Rational)]) -> SuiteReport {
    let outcomes = cells
        .par_iter()
        .filter_map(|(c, z)| {
            let (branch, value) = table_value(c, z)?;
            let algo = gkdim_scalar(c, z);
            if value == algo as i64 {
                return Some(Outcome::Pass);
            }
            let id = branch.to_string();
            let w = witness(
                c,
                Some(z),
                format!("table {id} gives {value}, algorithm gives {algo}"),
            );
            Some(if KNOWN_MISPRINTS.iter().any(|(k, _)| *k == id) {
                Outcome::Allowed(w)
            } else {
                Outcome::Fail(w)
            })
        })
        .collect();
    report("table_equivalence", outcomes)
}

fn show_points(pts: &[crate::closedform::FirstPoint<Rational>]) -> String {
    let items: Vec<String> = pts
        .iter()
        .map(|p| format!("{}:{}", p.lattice, format_rational(&p.z)))
        .collect();
    format!("[{}]", items.join(";"))
}

pub fn first_points(max_n: usize) -> SuiteReport {
    let outcomes = choices(max_n)
        .par_iter()
        .map(|c| {
            let closed = first_reducible_point::<Rational>(c);
            let searched = first_reducible_point_searched(c, &default_floor::<Rational>(c));
            check(c, None, closed == searched, || {
                format!(
                    "closed form {}, search {}",
                    show_points(&closed),
                    show_points(&searched)
                )
            })
        })
        .collect();
    report("first_points", outcomes)
}

/// Below the smallest component minimum the module is irreducible, so the
/// GK dimension is `dim u`. Checked at three half-steps below it.
pub fn below_minimum(max_n: usize) -> SuiteReport {
    let outcomes = choices(max_n)
        .par_iter()
        .flat_map_iter(|c| {
            let set = reducibility_set::<Rational>(c);
            let min = set
                .components()
                .iter()
                .map(|h| h.base.clone())
                .min()
                .expect("reducibility sets are nonempty");
            let dim_u = dim_nilradical(c);
            (1..=3)
                .map(|k| {
                    let z = min.clone() - Rational::from_frac(k, 2);
                    let g = gkdim_scalar(c, &z);
                    check(c, Some(&z), g == dim_u, || {
                        format!("gkdim {g}, dim u {dim_u}")
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    report("below_minimum", outcomes)
}

pub fn monotonicity(cells: &[(ParabolicChoice, Rational)]) -> SuiteReport {
    let outcomes = cells
        .par_iter()
        .map(|(c, z)| {
            let here = gkdim_scalar(c, z);
            let next = gkdim_scalar(c, &(z.clone() + Rational::from_int(1)));
            check(c, Some(z), next <= here, || {
                format!("gkdim {here} at z but {next} at z+1")
            })
        })
        .collect();
    report("monotonicity", outcomes)
}

pub fn dominant_vanishing(max_n: usize) -> SuiteReport {
    let outcomes = choices(max_n)
        .par_iter()
        .flat_map_iter(|c| {
            (0..=3)
                .map(|k| {
                    let z = Rational::from_int(k);
                    let g = gkdim_scalar(c, &z);
                    check(c, Some(&z), g == 0, || format!("gkdim {g}, expected 0"))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    report("dominant_vanishing", outcomes)
}

/// Any two `z` outside `(1/2)Z` give the same GK dimension.
pub fn congruence(max_n: usize) -> SuiteReport {
    let probes = [(1, 3), (1, 5), (-7, 3)].map(|(a, b)| Rational::from_frac(a, b));
    let outcomes = choices(max_n)
        .par_iter()
        .flat_map_iter(|c| {
            let reference = gkdim_scalar(c, &probes[0]);
            probes[1..]
                .iter()
                .map(|z| {
                    let g = gkdim_scalar(c, z);
                    check(c, Some(z), g == reference, || {
                        format!("gkdim {g}, but {reference} at z=1/3")
                    })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    report("congruence", outcomes)
}

/// Type D with `p = n - 1`: the uniform and standard spin conventions give the
/// same GK dimension and reducibility verdict.
pub fn spin_flip(cells: &[(ParabolicChoice, Rational)]) -> SuiteReport {
    let outcomes = cells
        .par_iter()
        .filter(|(c, _)| c.lie_type() == LieType::D && c.p() + 1 == c.n())
        .map(|(c, z)| {
            let flipped = c.with_spin(SpinConvention::Standard);
            let (a, b) = (gkdim_scalar(c, z), gkdim_scalar(&flipped, z));
            check(c, Some(z), a == b, || {
                format!("uniform spin {a}, standard spin {b}")
            })
        })
        .collect();
    report("spin_flip", outcomes)
}

fn random_weight(rng: &mut ChaCha8Rng, n: usize, half: bool) -> Vec<Rational> {
    let r = n as i64 + 3;
    (0..n)
        .map(|_| {
            let v = rng.gen_range(-r..=r);
            if half {
                Rational::from_frac(2 * v + 1, 2)
            } else {
                Rational::from_int(v)
            }
        })
        .collect()
}

/// `gkdim_integral == gkdim_general` on random integral weights. Half of
/// the draws have entries in `1/2 + Z`. For type C those are not integral,
/// so the check there is that `gkdim_integral` rejects them.
pub fn integral_coherence(samples: usize, max_n: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draws = Vec::new();
    for t in LieType::ALL {
        for i in 0..samples {
            let n = rng.gen_range(t.min_n()..=max_n.max(t.min_n()));
            let half = i % 2 == 1;
            draws.push((t, n, random_weight(&mut rng, n, half)));
        }
    }
    let outcomes = draws
        .par_iter()
        .map(|(t, n, coords)| {
            let algebra = LieAlgebra::new(*t, *n).expect("rank above the type minimum");
            let w = Weight::new(coords.clone());
            let fail = |detail: String| {
                Outcome::Fail(Witness {
                    lie_type: *t,
                    n: *n,
                    p: None,
                    z: None,
                    detail: format!("{w}: {detail}"),
                })
            };
            let general = gkdim_general(&algebra, &w);
            let integral = gkdim_integral(&algebra, &w);
            let c_half = *t == LieType::C && coords.iter().all(Scalar::is_half_integral);
            match (general, integral) {
                (Ok(_), Err(Error::Integrality(_))) if c_half => Outcome::Pass,
                (Ok(g), Ok(i)) if g == i && !c_half && g <= algebra.num_positive_roots() => {
                    Outcome::Pass
                }
                (g, i) => fail(format!("general {g:?}, integral {i:?}")),
            }
        })
        .collect();
    report("integral_coherence", outcomes)
}

/// A strictly decreasing sequence of `len` values with positive integral
/// gaps, starting near zero, shifted by `offset`.
fn decreasing_block(rng: &mut ChaCha8Rng, len: usize, offset: &Rational) -> Vec<Rational> {
    let mut v = rng.gen_range(-4i64..=4);
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(Rational::from_int(v) + offset.clone());
        v -= rng.gen_range(1i64..=3);
    }
    out
}

/// Type A `(p, q)`-dominant weights. For integral ones the GK dimension is
/// `m (n - m)` with `m` the second-column length of the RS shape; when the
/// two blocks differ by a non-integer it is `p q`.
pub fn type_a_dominance(samples: usize, max_n: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xa);
    let offsets = [(1, 3), (1, 2), (2, 5), (-3, 7)].map(|(a, b)| Rational::from_frac(a, b));
    let mut draws = Vec::new();
    for integral in [true, false] {
        for _ in 0..samples {
            let n = rng.gen_range(2..=max_n.max(2));
            let p = rng.gen_range(1..n);
            let shift = if integral {
                Rational::from_int(0)
            } else {
                offsets[rng.gen_range(0..offsets.len())].clone()
            };
            let mut x = decreasing_block(&mut rng, p, &Rational::from_int(0));
            x.extend(decreasing_block(&mut rng, n - p, &shift));
            draws.push((integral, n, p, x));
        }
    }
    let outcomes = draws
        .par_iter()
        .map(|(integral, n, p, x)| {
            let algebra = LieAlgebra::new(LieType::A, *n).expect("n >= 2");
            let g = gkdim_general(&algebra, &Weight::new(x.clone())).expect("length matches");
            let expected = if *integral {
                let m = rs_shape(x).column_len(1);
                m * (n - m)
            } else {
                p * (n - p)
            };
            if g == expected {
                Outcome::Pass
            } else {
                Outcome::Fail(Witness {
                    lie_type: LieType::A,
                    n: *n,
                    p: Some(*p),
                    z: None,
                    detail: format!("{}: gkdim {g}, expected {expected}", Weight::new(x.clone())),
                })
            }
        })
        .collect();
    report("type_a_dominance", outcomes)
}

/// Runs every suite in a fixed order.
pub fn run_all(config: &SweepConfig) -> Vec<SuiteReport> {
    let cells = cells(config.max_n, &config.grid);
    vec![
        nilradical(config.max_n),
        oracle_equivalence(&cells),
        table_equivalence(&cells),
        first_points(config.max_n),
        below_minimum(config.max_n),
        monotonicity(&cells),
        dominant_vanishing(config.max_n),
        congruence(config.max_n),
        spin_flip(&cells),
        integral_coherence(config.integral_samples, config.sample_max_n, config.seed),
        type_a_dominance(config.dominance_samples, config.sample_max_n, config.seed),
    ]
}
