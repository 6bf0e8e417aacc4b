//! Uniform random generation of shifted standard tableaux: fill a uniform
//! permutation into the diagram and standardize it. The constant fiber
//! size of the standardization map makes the output distribution exactly
//! uniform.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::error::{SamplerError, TabloidError};
use crate::shape::{OrderScheme, StrictPartition};
use crate::tabloid::ShiftedTabloid;

/// Deterministic generator: a fixed seed yields an identical sample
/// stream on every platform (ChaCha with 8 rounds).
pub struct SeededRng {
    rng: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A uniform permutation of 1..=n.
    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut values: Vec<usize> = (1..=n).collect();
        values.shuffle(&mut self.rng);
        values
    }
}

/// Fills a permutation into the diagram rowwise, top to bottom and left to
/// right within each row.
pub fn tabloid_from_permutation(
    shape: &StrictPartition,
    perm: &[usize],
) -> Result<ShiftedTabloid, TabloidError> {
    ShiftedTabloid::from_row_major(shape.clone(), perm.to_vec())
}

/// Draws one uniformly distributed shifted standard tableau.
pub fn sample_ssyt(shape: &StrictPartition, rng: &mut SeededRng) -> ShiftedTabloid {
    let perm = rng.permutation(shape.n());
    let t = tabloid_from_permutation(shape, &perm).expect("permutation is valid");
    t.standardize(OrderScheme::Rowwise)
}

/// Canonical census key: the row-major reading of a tableau.
pub fn tableau_key(t: &ShiftedTabloid) -> String {
    let parts: Vec<String> = t.row_major().iter().map(|v| v.to_string()).collect();
    parts.join(",")
}

/// Empirical distribution of sampled tableaux with a chi-square
/// goodness-of-fit statistic against the uniform distribution.
#[derive(Debug, Clone)]
pub struct UniformityReport {
    pub shape: StrictPartition,
    pub samples: u64,
    pub class_count: u64,
    pub observed_classes: u64,
    pub counts: BTreeMap<String, u64>,
    pub chi_square: f64,
    pub degrees_of_freedom: u64,
    pub p_value: f64,
}

impl UniformityReport {
    /// Acceptance threshold chosen to keep the false-alarm rate of the
    /// automated check negligible.
    pub fn passes(&self) -> bool {
        self.p_value > 0.001
    }
}

const CLASS_GUARD: u64 = 1_000_000;

/// Samples `samples` tableaux and tabulates the per-class frequencies.
/// The class count comes from the hook-length formula and is guarded so
/// the table stays tractable.
pub fn uniformity_report(
    shape: &StrictPartition,
    samples: u64,
    rng: &mut SeededRng,
) -> Result<UniformityReport, SamplerError> {
    let class_count = class_count_guarded(shape)?;
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    for _ in 0..samples {
        let s = sample_ssyt(shape, rng);
        *counts.entry(tableau_key(&s)).or_insert(0) += 1;
    }
    Ok(report_from_counts(shape, samples, class_count, counts))
}

/// Feeds every permutation of 1..=n through the deterministic core
/// instead of sampling; the resulting counts are a fiber census rather
/// than a statistical observation.
pub fn exhaustive_driver_report(shape: &StrictPartition) -> Result<UniformityReport, SamplerError> {
    let class_count = class_count_guarded(shape)?;
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    let mut perm: Vec<usize> = (1..=shape.n()).collect();
    let mut samples = 0u64;
    loop {
        let t = tabloid_from_permutation(shape, &perm)?;
        let s = t.standardize(OrderScheme::Rowwise);
        *counts.entry(tableau_key(&s)).or_insert(0) += 1;
        samples += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(report_from_counts(shape, samples, class_count, counts))
}

fn class_count_guarded(shape: &StrictPartition) -> Result<u64, SamplerError> {
    let count: BigUint = shape
        .diagram()
        .count_standard()
        .expect("hook product divides n!");
    match count.to_u64() {
        Some(c) if c <= CLASS_GUARD => Ok(c),
        _ => Err(SamplerError::TooManyClasses {
            classes: count.to_u64().unwrap_or(u64::MAX),
            limit: CLASS_GUARD,
        }),
    }
}

fn report_from_counts(
    shape: &StrictPartition,
    samples: u64,
    class_count: u64,
    counts: BTreeMap<String, u64>,
) -> UniformityReport {
    let expected = samples as f64 / class_count as f64;
    let observed_nonzero: u64 = counts.len() as u64;
    let mut chi_square = 0.0;
    for &c in counts.values() {
        let d = c as f64 - expected;
        chi_square += d * d / expected;
    }
    // Classes never observed still contribute their expectation.
    chi_square += (class_count - observed_nonzero) as f64 * expected;
    let degrees_of_freedom = class_count.saturating_sub(1);
    let p_value = if degrees_of_freedom == 0 {
        1.0
    } else {
        let dist = ChiSquared::new(degrees_of_freedom as f64).expect("positive dof");
        1.0 - dist.cdf(chi_square)
    };
    UniformityReport {
        shape: shape.clone(),
        samples,
        class_count,
        observed_classes: observed_nonzero,
        counts,
        chi_square,
        degrees_of_freedom,
        p_value,
    }
}

/// Advances to the lexicographically next permutation; false once the
/// sequence wraps around.
pub fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        perm.reverse();
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}
