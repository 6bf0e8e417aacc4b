//! Brute-force machinery, independent of the counting formula and of the
//! split pipeline: direct enumeration of shifted standard tableaux,
//! exhaustive iteration over all fillings, fiber censuses of the
//! standardization map under pluggable cell orders, and round-trip
//! verification of the split/merge pair.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::OracleError;
use crate::hook_tabloid::HookTabloid;
use crate::merge::merge;
use crate::sampler::{next_permutation, tableau_key, SeededRng};
use crate::shape::{Cell, OrderScheme, StrictPartition};
use crate::split::split;
use crate::tabloid::ShiftedTabloid;

/// Enumeration bounds; configuration rather than constants. The defaults
/// keep every exhaustive run at desk scale.
#[derive(Debug, Clone, Copy)]
pub struct Bounds {
    /// Largest n for direct standard-tableau enumeration.
    pub max_enumeration_n: usize,
    /// Largest n for exhaustive iteration over all n! fillings.
    pub max_exhaustive_n: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_enumeration_n: 16,
            max_exhaustive_n: 10,
        }
    }
}

impl Bounds {
    /// Overrides both bounds, as the environment variable hook does.
    pub fn with_max_n(n: usize) -> Self {
        Bounds {
            max_enumeration_n: n,
            max_exhaustive_n: n,
        }
    }
}

/// All shifted standard tableaux of the shape, in lexicographic order of
/// their row-major readings, by backtracking over cells.
pub fn enumerate_ssyt(
    shape: &StrictPartition,
    bounds: &Bounds,
) -> Result<Vec<ShiftedTabloid>, OracleError> {
    if shape.n() > bounds.max_enumeration_n {
        return Err(OracleError::BoundExceeded {
            n: shape.n(),
            bound: bounds.max_enumeration_n,
        });
    }
    let cells = shape.cells();
    let n = shape.n();
    let mut filling: Vec<usize> = vec![0; n];
    let mut used = vec![false; n + 1];
    let mut out = Vec::new();
    fill_cell(shape, &cells, 0, &mut filling, &mut used, &mut out);
    Ok(out)
}

fn fill_cell(
    shape: &StrictPartition,
    cells: &[Cell],
    pos: usize,
    filling: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<ShiftedTabloid>,
) {
    if pos == cells.len() {
        let t = ShiftedTabloid::from_row_major(shape.clone(), filling.clone())
            .expect("backtracking placed a permutation");
        debug_assert!(t.is_standard());
        out.push(t);
        return;
    }
    let c = cells[pos];
    let mut floor = 0;
    let west = Cell::new(c.row, c.col - 1);
    if c.col > c.row && shape.contains(west) {
        floor = floor.max(filling[shape.cell_index(west)]);
    }
    if c.row > 1 {
        let north = Cell::new(c.row - 1, c.col);
        if shape.contains(north) {
            floor = floor.max(filling[shape.cell_index(north)]);
        }
    }
    for v in (floor + 1)..=cells.len() {
        if used[v] {
            continue;
        }
        used[v] = true;
        filling[shape.cell_index(c)] = v;
        fill_cell(shape, cells, pos + 1, filling, used, out);
        used[v] = false;
    }
    filling[shape.cell_index(c)] = 0;
}

/// All n! fillings, lexicographically by row-major reading, applied to a
/// visitor. Exists for small exhaustive runs; the census functions shard
/// the same space for parallel workers.
pub fn for_each_tabloid<F: FnMut(&ShiftedTabloid)>(
    shape: &StrictPartition,
    bounds: &Bounds,
    mut visit: F,
) -> Result<u64, OracleError> {
    if shape.n() > bounds.max_exhaustive_n {
        return Err(OracleError::BoundExceeded {
            n: shape.n(),
            bound: bounds.max_exhaustive_n,
        });
    }
    let mut perm: Vec<usize> = (1..=shape.n()).collect();
    let mut count = 0u64;
    loop {
        let t = ShiftedTabloid::from_row_major(shape.clone(), perm.clone())
            .expect("permutation fillings are valid");
        visit(&t);
        count += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(count)
}

/// The lexicographically `rank`-th permutation of 1..=n (factorial number
/// system); used to cut the permutation space into contiguous blocks.
pub fn unrank_permutation(n: usize, mut rank: u64) -> Vec<usize> {
    let mut available: Vec<usize> = (1..=n).collect();
    let mut radix: Vec<u64> = vec![1; n];
    for k in (0..n.saturating_sub(1)).rev() {
        radix[k] = radix[k + 1] * (n - 1 - k) as u64;
    }
    let mut out = Vec::with_capacity(n);
    for &base in radix.iter().take(n) {
        let digit = (rank / base) as usize;
        rank %= base;
        out.push(available.remove(digit));
    }
    out
}

fn factorial_u64(n: usize) -> u64 {
    (2..=n as u64).product::<u64>().max(1)
}

/// Census of the standardization map under a cell order: how many fillings
/// map onto each output, whether every output is standard, and whether
/// every fiber has the size the hook-length formula demands.
#[derive(Debug, Clone)]
pub struct FiberCensus {
    pub shape: StrictPartition,
    pub scheme: OrderScheme,
    pub expected_fiber: BigUint,
    pub total: u64,
    pub counts: BTreeMap<String, u64>,
    pub nonstandard_images: BTreeMap<String, u64>,
}

/// A census entry proving or refuting admissibility.
#[derive(Debug, Clone)]
pub enum CensusWitness {
    WrongFiber { key: String, count: u64 },
    NonstandardImage { key: String, count: u64 },
}

impl FiberCensus {
    pub fn is_admissible(&self) -> bool {
        self.witness().is_none()
    }

    /// A concrete offending fiber, when one exists.
    pub fn witness(&self) -> Option<CensusWitness> {
        if let Some((key, count)) = self.nonstandard_images.iter().next() {
            return Some(CensusWitness::NonstandardImage {
                key: key.clone(),
                count: *count,
            });
        }
        let expected = self.expected_fiber.to_u64();
        for (key, &count) in &self.counts {
            if Some(count) != expected {
                return Some(CensusWitness::WrongFiber {
                    key: key.clone(),
                    count,
                });
            }
        }
        None
    }
}

/// Runs the full n!-filling census, sharded into contiguous lexicographic
/// blocks; the per-worker tables merge by addition.
pub fn fiber_census(
    shape: &StrictPartition,
    scheme: OrderScheme,
    bounds: &Bounds,
) -> Result<FiberCensus, OracleError> {
    if shape.n() > bounds.max_exhaustive_n {
        return Err(OracleError::BoundExceeded {
            n: shape.n(),
            bound: bounds.max_exhaustive_n,
        });
    }
    let n = shape.n();
    let total = factorial_u64(n);
    let workers = rayon::current_num_threads().max(1) as u64;
    let blocks: Vec<(u64, u64)> = split_range(total, workers * 4);
    let merged = blocks
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut counts: BTreeMap<String, u64> = BTreeMap::new();
            let mut nonstandard: BTreeMap<String, u64> = BTreeMap::new();
            let mut perm = unrank_permutation(n, lo);
            for _ in lo..hi {
                let t = ShiftedTabloid::from_row_major(shape.clone(), perm.clone())
                    .expect("permutation fillings are valid");
                let s = t.standardize(scheme);
                let key = tableau_key(&s);
                if s.is_standard() {
                    *counts.entry(key).or_insert(0) += 1;
                } else {
                    *nonstandard.entry(key).or_insert(0) += 1;
                }
                next_permutation(&mut perm);
            }
            (counts, nonstandard)
        })
        .reduce(
            || (BTreeMap::new(), BTreeMap::new()),
            |(mut ca, mut na), (cb, nb)| {
                for (k, v) in cb {
                    *ca.entry(k).or_insert(0) += v;
                }
                for (k, v) in nb {
                    *na.entry(k).or_insert(0) += v;
                }
                (ca, na)
            },
        );
    debug_assert_eq!(
        merged.0.values().sum::<u64>() + merged.1.values().sum::<u64>(),
        total
    );
    Ok(FiberCensus {
        shape: shape.clone(),
        scheme,
        expected_fiber: shape.diagram().hook_product(),
        total,
        counts: merged.0,
        nonstandard_images: merged.1,
    })
}

fn split_range(total: u64, parts: u64) -> Vec<(u64, u64)> {
    let parts = parts.min(total).max(1);
    let chunk = total / parts;
    let rem = total % parts;
    let mut out = Vec::new();
    let mut lo = 0;
    for k in 0..parts {
        let len = chunk + if k < rem { 1 } else { 0 };
        out.push((lo, lo + len));
        lo += len;
    }
    out
}

/// How a round-trip run iterates its cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoundTripMode {
    /// All n! fillings, plus all (tableau, hook tabloid) pairs when their
    /// number stays below the exhaustive bound.
    Exhaustive,
    /// Seeded random fillings.
    Sampled { samples: u64, seed: u64 },
}

/// Outcome of a round-trip verification.
#[derive(Debug, Clone)]
pub struct RoundTripReport {
    pub shape: StrictPartition,
    pub mode: RoundTripMode,
    pub split_merge_cases: u64,
    pub merge_split_cases: u64,
    pub failures: Vec<String>,
}

impl RoundTripReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

const FAILURE_WITNESS_LIMIT: usize = 8;

/// Checks that merging undoes splitting for every filling in the chosen
/// mode, that the split agrees with the plain standardization map, and (in
/// exhaustive mode) that splitting undoes merging over every valid
/// (tableau, hook tabloid) pair.
pub fn roundtrip_check(
    shape: &StrictPartition,
    mode: RoundTripMode,
    bounds: &Bounds,
) -> Result<RoundTripReport, OracleError> {
    let mut failures = Vec::new();
    let mut split_merge_cases = 0u64;
    let mut merge_split_cases = 0u64;

    let check_tabloid = |t: &ShiftedTabloid, failures: &mut Vec<String>| {
        if failures.len() >= FAILURE_WITNESS_LIMIT {
            return;
        }
        match split(t) {
            Ok((s, h)) => {
                if s != t.standardize(OrderScheme::Rowwise) {
                    failures.push(format!(
                        "split disagrees with standardize on {:?}",
                        t.row_major()
                    ));
                }
                match merge(&s, &h) {
                    Ok(back) => {
                        if back != *t {
                            failures.push(format!("merge(split(t)) != t for {:?}", t.row_major()));
                        }
                    }
                    Err(e) => {
                        failures.push(format!("merge failed on split of {:?}: {e}", t.row_major()))
                    }
                }
            }
            Err(e) => failures.push(format!("split failed on {:?}: {e}", t.row_major())),
        }
    };

    match mode {
        RoundTripMode::Exhaustive => {
            split_merge_cases = for_each_tabloid(shape, bounds, |t| {
                check_tabloid(t, &mut failures);
            })?;
            merge_split_cases = roundtrip_pairs(shape, bounds, &mut failures)?;
        }
        RoundTripMode::Sampled { samples, seed } => {
            let mut rng = SeededRng::new(seed);
            for _ in 0..samples {
                let perm = rng.permutation(shape.n());
                let t = ShiftedTabloid::from_row_major(shape.clone(), perm)
                    .expect("permutation fillings are valid");
                check_tabloid(&t, &mut failures);
                split_merge_cases += 1;
            }
        }
    }

    Ok(RoundTripReport {
        shape: shape.clone(),
        mode,
        split_merge_cases,
        merge_split_cases,
        failures,
    })
}

/// All (tableau, hook tabloid) pairs: split(merge(s,h)) must reproduce
/// the pair exactly.
fn roundtrip_pairs(
    shape: &StrictPartition,
    bounds: &Bounds,
    failures: &mut Vec<String>,
) -> Result<u64, OracleError> {
    let diagram = shape.diagram();
    let tableaux = enumerate_ssyt(shape, &Bounds::with_max_n(bounds.max_exhaustive_n))?;
    let cells = shape.cells();
    let hooks: Vec<Vec<Cell>> = cells
        .iter()
        .map(|&c| diagram.hook(c).expect("cell of own diagram"))
        .collect();
    let mut cases = 0u64;
    for s in &tableaux {
        let mut choice = vec![0usize; cells.len()];
        loop {
            let mut h = HookTabloid::empty(shape.clone());
            for (idx, &c) in cells.iter().enumerate() {
                h.set(c, Some(hooks[idx][choice[idx]]));
            }
            cases += 1;
            if failures.len() < FAILURE_WITNESS_LIMIT {
                match merge(s, &h) {
                    Ok(t) => match split(&t) {
                        Ok((s2, h2)) => {
                            if s2 != *s || h2 != h {
                                failures.push(format!(
                                    "split(merge(s,h)) != (s,h) for s={:?} h={:?}",
                                    s.row_major(),
                                    h.rows()
                                ));
                            }
                        }
                        Err(e) => failures.push(format!(
                            "split failed after merge of s={:?}: {e}",
                            s.row_major()
                        )),
                    },
                    Err(e) => failures.push(format!(
                        "merge failed on s={:?} h={:?}: {e}",
                        s.row_major(),
                        h.rows()
                    )),
                }
            }
            // Advance the mixed-radix hook choice.
            let mut idx = 0;
            loop {
                if idx == cells.len() {
                    break;
                }
                choice[idx] += 1;
                if choice[idx] < hooks[idx].len() {
                    break;
                }
                choice[idx] = 0;
                idx += 1;
            }
            if idx == cells.len() {
                break;
            }
        }
    }
    Ok(cases)
}
