//! The split pipeline: converts an arbitrary shifted tabloid into a pair
//! of a shifted standard tableau and a shifted hook tabloid, one row at a
//! time from the bottom row up. Within a row the work happens in three
//! stages: slide the row entries with the main diagonal as stop set,
//! resolve the run of entries stuck on the diagonal, then drain the
//! remaining candidate sets.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::AlgoError;
use crate::hook_tabloid::{candidates, classify_candidate, js, CandidateKind, HookTabloid};
use crate::shape::Cell;
use crate::tabloid::{CellSet, Path, ShiftedTabloid};

/// Which way the diagonal-run stage resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Split2Outcome {
    /// The stuck run is re-slid cell by cell; entries from `h` up stay in
    /// their own rows and become vertical candidates.
    Case1 {
        i_prime: usize,
        h: usize,
    },
    Case2 {
        i_prime: usize,
        reason: Case2Reason,
    },
}

/// Why the diagonal-run stage chose its second case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case2Reason {
    /// No diagonal run above the working row.
    RunEmpty,
    /// Every run entry left its row in the scratch slide.
    NoEntryStaysInRow,
    /// The top run entry stays, but a horizontal candidate below it is
    /// smaller in the backward paths order.
    SmallerCandidateBelow { h: usize },
}

impl Split2Outcome {
    pub fn is_case1(&self) -> bool {
        matches!(self, Split2Outcome::Case1 { .. })
    }
}

/// Case taken by one step of the candidate-draining loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Split3Case {
    /// The slide of `e` clears the remaining diagonal candidates: slide
    /// freely and retire `e`.
    Case1,
    /// The slide of `e` would run through the diagonal cell above `e'`:
    /// stop it there and convert the blocked diagonal run into vertical
    /// candidates.
    Case2,
    /// The slide of `e` passes right of `e'` without touching the diagonal
    /// cell above it: promote `e'` first.
    Case3,
}

/// One step of the candidate-draining loop, for tracing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split3Step {
    pub case: Split3Case,
    pub e: usize,
    pub e_prime: Option<usize>,
}

/// Observation hooks for the row pipeline; the default implementation
/// ignores everything.
pub trait SplitObserver {
    fn after_split1_step(&mut self, _j: usize, _e: usize, _t: &ShiftedTabloid, _h: &HookTabloid) {}
    fn scratch_tabloid(&mut self, _u: &ShiftedTabloid) {}
    fn split2_done(&mut self, _outcome: &Split2Outcome, _t: &ShiftedTabloid, _h: &HookTabloid) {}
    fn candidate_sets(&mut self, _c_prime: &BTreeSet<usize>, _c: &BTreeSet<usize>) {}
    fn split3_step(
        &mut self,
        _step: &Split3Step,
        _t: &ShiftedTabloid,
        _h: &HookTabloid,
        _c_prime: &BTreeSet<usize>,
        _c: &BTreeSet<usize>,
    ) {
    }
}

/// Ignores all observations.
pub struct NoopObserver;

impl SplitObserver for NoopObserver {}

/// Working state of the row pipeline.
pub struct SplitRowState {
    pub t: ShiftedTabloid,
    pub h: HookTabloid,
    pub row: usize,
    pub c_prime: BTreeSet<usize>,
    pub c_set: BTreeSet<usize>,
    pub outcome: Option<Split2Outcome>,
    scratch_paths: Vec<(usize, Path)>,
}

impl SplitRowState {
    pub fn new(t: ShiftedTabloid, h: HookTabloid, row: usize) -> Self {
        debug_assert!(t.is_ordered_up_to(Cell::new(row + 1, row + 1)));
        SplitRowState {
            t,
            h,
            row,
            c_prime: BTreeSet::new(),
            c_set: BTreeSet::new(),
            outcome: None,
            scratch_paths: Vec::new(),
        }
    }
}

/// Stage one: slide every entry of the working row, right to left, with
/// the main diagonal as stop set, recording each end cell.
pub fn split1(state: &mut SplitRowState, obs: &mut dyn SplitObserver) -> Result<(), AlgoError> {
    let i = state.row;
    let shape = state.t.shape().clone();
    for j in (shape.row_start(i)..=shape.row_end(i)).rev() {
        let e = state.t.value_at(Cell::new(i, j));
        let (t2, h2) = js(&state.t, &state.h, e, &CellSet::MainDiagonal, i)?;
        state.t = t2;
        state.h = h2;
        obs.after_split1_step(j, e, &state.t, &state.h);
    }
    debug_assert!(unstable_entries_are_horizontal(&state.t, &state.h, i));
    Ok(())
}

/// Every unstable entry weakly below the working row must be a horizontal
/// candidate once stage one is done.
fn unstable_entries_are_horizontal(t: &ShiftedTabloid, h: &HookTabloid, i: usize) -> bool {
    let shape = t.shape();
    shape.cells().into_iter().filter(|c| c.row >= i).all(|c| {
        let e = t.value_at(c);
        t.is_stable(e)
            || classify_candidate(t, h, i, e)
                .map(|cand| cand.kind == CandidateKind::Horizontal)
                .unwrap_or(false)
    })
}

/// Stage two: resolve the run of diagonal cells (k,k), k > i, that hold
/// stuck entries (the pointer of (i,k) is (k,k) and the entry above-left
/// of (k,k) is unstable).
pub fn split2(state: &mut SplitRowState, obs: &mut dyn SplitObserver) -> Result<(), AlgoError> {
    let i = state.row;
    let shape = state.t.shape().clone();

    let mut i_prime = i;
    while i_prime < shape.rows() {
        let k = i_prime + 1;
        if !shape.contains(Cell::new(i, k)) {
            break;
        }
        if state.h.get(Cell::new(i, k)) != Some(Cell::new(k, k)) {
            break;
        }
        if state.t.is_stable(state.t.value_at(Cell::new(k - 1, k - 1))) {
            break;
        }
        i_prime = k;
    }

    if i_prime == i {
        let outcome = Split2Outcome::Case2 {
            i_prime,
            reason: Case2Reason::RunEmpty,
        };
        split2_case2(state, i_prime)?;
        state.outcome = Some(outcome);
        obs.split2_done(&outcome, &state.t, &state.h);
        return Ok(());
    }

    // Scratch slide: drop each run entry towards the next row, keeping the
    // forward paths for the first case.
    let diag_entries: Vec<usize> = (i..=i_prime)
        .map(|g| state.t.value_at(Cell::new(g, g)))
        .collect();
    let mut u = state.t.clone();
    state.scratch_paths.clear();
    for g in (i..=i_prime).rev() {
        let e = diag_entries[g - i];
        let path = u.jdt_in_place(e, &CellSet::Row(g + 1));
        state.scratch_paths.push((g, path));
    }
    obs.scratch_tabloid(&u);

    let h_stuck = (i..=i_prime).find(|&g| u.cell_of(diag_entries[g - i]).row != g + 1);

    let case2_reason = match h_stuck {
        None => Some(Case2Reason::NoEntryStaysInRow),
        Some(h) if h == i_prime => {
            let pivot = diag_entries[i_prime - 1 - i];
            let mut smaller_below = false;
            for cand in candidates(&u, &state.h, i) {
                if cand.kind == CandidateKind::Horizontal && cand.cell.row > i_prime {
                    let ord = u.backward_paths_compare(i_prime, cand.value, pivot)?;
                    if ord == Ordering::Less {
                        smaller_below = true;
                        break;
                    }
                }
            }
            smaller_below.then_some(Case2Reason::SmallerCandidateBelow { h })
        }
        Some(_) => None,
    };

    let outcome = match case2_reason {
        Some(reason) => {
            split2_case2(state, i_prime)?;
            Split2Outcome::Case2 { i_prime, reason }
        }
        None => {
            let h = h_stuck.expect("first case requires a stuck entry");
            split2_case1(state, i_prime, h, &diag_entries)?;
            Split2Outcome::Case1 { i_prime, h }
        }
    };
    state.outcome = Some(outcome);
    obs.split2_done(&outcome, &state.t, &state.h);
    Ok(())
}

/// First case: redo the scratch slides for real. Entries from `h_stuck`
/// upward stop on the last row cell of their scratch path and become
/// vertical candidates; entries below slide into the next row.
fn split2_case1(
    state: &mut SplitRowState,
    i_prime: usize,
    h_stuck: usize,
    diag_entries: &[usize],
) -> Result<(), AlgoError> {
    let i = state.row;
    for g in ((h_stuck + 1)..=i_prime).rev() {
        let path = &state
            .scratch_paths
            .iter()
            .find(|(gg, _)| *gg == g)
            .expect("scratch path recorded")
            .1;
        let end = path.end();
        let k = end.col;
        let stop = Cell::new(g, k);
        let p = state
            .t
            .jdt_in_place(diag_entries[g - i], &CellSet::Single(stop));
        debug_assert_eq!(p.end(), stop);
        state.h.set(Cell::new(i, g - 1), Some(stop));
    }

    let e_h = diag_entries[h_stuck - i];
    let path = state.t.jdt_in_place(e_h, &CellSet::Empty);
    let end = path.end();
    debug_assert_eq!(end.row, h_stuck);
    let k = end.col;
    let pointer = if k - h_stuck >= i_prime - i {
        Cell::new(i, i + k - h_stuck)
    } else {
        Cell::new(i_prime + h_stuck - k, i_prime)
    };
    state.h.set(Cell::new(i, i_prime), Some(pointer));

    for g in (i..h_stuck).rev() {
        let path = state
            .t
            .jdt_in_place(diag_entries[g - i], &CellSet::Row(g + 1));
        state.h.set(Cell::new(i, g), Some(path.end()));
    }
    Ok(())
}

/// Second case: adopt the scratch result. The top run entry slides with
/// the full bookkeeping move; the others record their end cells directly.
fn split2_case2(state: &mut SplitRowState, i_prime: usize) -> Result<(), AlgoError> {
    let i = state.row;
    let top = state.t.value_at(Cell::new(i_prime, i_prime));
    let (t2, h2) = js(&state.t, &state.h, top, &CellSet::Row(i_prime + 1), i)?;
    state.t = t2;
    state.h = h2;
    for g in (i..i_prime).rev() {
        let e = state.t.value_at(Cell::new(g, g));
        let path = state.t.jdt_in_place(e, &CellSet::Row(g + 1));
        state.h.set(Cell::new(i, g), Some(path.end()));
    }
    Ok(())
}

/// Builds the two candidate sets the draining loop works through: the
/// vertical candidates (plus the smallest candidate overall when it is
/// unstable) and the diagonal horizontal candidates left over.
pub fn build_candidate_sets(
    state: &mut SplitRowState,
    obs: &mut dyn SplitObserver,
) -> Result<(), AlgoError> {
    let i = state.row;
    let cands = candidates(&state.t, &state.h, i);
    let mut c_prime: BTreeSet<usize> = cands
        .iter()
        .filter(|c| c.kind == CandidateKind::Vertical)
        .map(|c| c.value)
        .collect();

    // Only entries strictly below the working row compete for the
    // smallest-candidate slot; the row itself is already ordered.
    let values: BTreeSet<usize> = cands
        .iter()
        .filter(|c| c.cell.row > i)
        .map(|c| c.value)
        .collect();
    let mut smallest: Option<usize> = None;
    for &v in &values {
        match smallest {
            None => smallest = Some(v),
            Some(s) => {
                if state.t.backward_paths_compare(i, v, s)? == Ordering::Less {
                    smallest = Some(v);
                }
            }
        }
    }
    if let Some(s) = smallest {
        if !state.t.is_stable(s) {
            c_prime.insert(s);
        }
    }

    let c_set: BTreeSet<usize> = cands
        .iter()
        .filter(|c| {
            c.kind == CandidateKind::Horizontal
                && c.cell.is_diagonal()
                && c.cell.row > i
                && !c_prime.contains(&c.value)
        })
        .map(|c| c.value)
        .collect();

    state.c_prime = c_prime;
    state.c_set = c_set;
    obs.candidate_sets(&state.c_prime, &state.c_set);
    Ok(())
}

/// Stage three: drain the candidate sets.
pub fn split3(state: &mut SplitRowState, obs: &mut dyn SplitObserver) -> Result<(), AlgoError> {
    let i = state.row;
    let mut guard = 0usize;
    let max_steps = 4 * (state.c_prime.len() + state.c_set.len()) + 4;
    while !(state.c_prime.is_empty() && state.c_set.is_empty()) {
        guard += 1;
        if guard > max_steps {
            return Err(AlgoError::CorruptState(
                "candidate-draining loop did not terminate".into(),
            ));
        }

        if state.c_prime.is_empty() {
            let bar_e = *state
                .c_set
                .iter()
                .min_by_key(|&&v| state.t.cell_of(v).row)
                .expect("set checked non-empty");
            state.c_set.remove(&bar_e);
            state.c_prime.insert(bar_e);
        }

        let e = choose_max_row(&state.t, &state.c_prime, i)?;
        let e_prime = state
            .c_set
            .iter()
            .copied()
            .min_by_key(|&v| state.t.cell_of(v).row);
        let path = state.t.forward_path(e, &CellSet::Empty);

        let case = select_case(&state.t, &path, e_prime)?;
        let step = Split3Step { case, e, e_prime };
        match case {
            Split3Case::Case1 => {
                let (t2, h2) = js(&state.t, &state.h, e, &CellSet::Empty, i)?;
                state.t = t2;
                state.h = h2;
                state.c_prime.remove(&e);
            }
            Split3Case::Case2 => {
                let h_diag = state
                    .t
                    .cell_of(e_prime.expect("second case requires e'"))
                    .row;
                let was_horizontal =
                    classify_candidate(&state.t, &state.h, i, e)?.kind == CandidateKind::Horizontal;
                let stop = Cell::new(h_diag - 1, h_diag - 1);
                let (t2, h2) = js(&state.t, &state.h, e, &CellSet::Single(stop), i)?;
                state.t = t2;
                state.h = h2;

                let mut h_top = h_diag;
                while h_top < state.t.shape().rows() {
                    let j = h_top + 1;
                    let prev = state.t.value_at(Cell::new(j - 1, j - 1));
                    let diag = state.t.value_at(Cell::new(j, j));
                    if !state.t.is_stable(prev) && state.c_set.contains(&diag) {
                        h_top = j;
                    } else {
                        break;
                    }
                }
                state.h = if was_horizontal {
                    state.h.trans(i, h_diag - 2, h_top - 1)?
                } else {
                    state.h.trans(i, h_diag - 1, h_top)?
                };
                for j in h_diag..=h_top {
                    let v = state.t.value_at(Cell::new(j, j));
                    state.c_set.remove(&v);
                    state.c_prime.insert(v);
                }
            }
            Split3Case::Case3 => {
                let ep = e_prime.expect("third case requires e'");
                state.c_set.remove(&ep);
                state.c_prime.insert(ep);
            }
        }
        obs.split3_step(&step, &state.t, &state.h, &state.c_prime, &state.c_set);
    }
    Ok(())
}

/// Chooses the working entry: maximal row, ties broken towards the entry
/// that is smaller in the backward paths order.
fn choose_max_row(
    t: &ShiftedTabloid,
    set: &BTreeSet<usize>,
    fixed_row: usize,
) -> Result<usize, AlgoError> {
    let max_row = set
        .iter()
        .map(|&v| t.cell_of(v).row)
        .max()
        .expect("set checked non-empty");
    let mut best: Option<usize> = None;
    for &v in set.iter().filter(|&&v| t.cell_of(v).row == max_row) {
        best = Some(match best {
            None => v,
            Some(b) => {
                if t.backward_paths_compare(fixed_row, v, b)? == Ordering::Less {
                    v
                } else {
                    b
                }
            }
        });
    }
    Ok(best.expect("set checked non-empty"))
}

fn select_case(
    t: &ShiftedTabloid,
    path: &Path,
    e_prime: Option<usize>,
) -> Result<Split3Case, AlgoError> {
    let Some(ep) = e_prime else {
        return Ok(Split3Case::Case1);
    };
    let h = t.cell_of(ep).row;
    debug_assert!(t.cell_of(ep).is_diagonal());
    if path.contains(Cell::new(h - 1, h - 1)) && path.contains(Cell::new(h - 1, h)) {
        return Ok(Split3Case::Case2);
    }
    if path.end().col < h {
        return Ok(Split3Case::Case1);
    }
    if !path.contains(Cell::new(h - 1, h - 1)) {
        return Ok(Split3Case::Case3);
    }
    Err(AlgoError::NoCaseMatched {
        entry: t.value_at(path.start()),
    })
}

/// Runs the full row pipeline on row `i`.
pub fn split_row(
    t: ShiftedTabloid,
    h: HookTabloid,
    i: usize,
) -> Result<(ShiftedTabloid, HookTabloid), AlgoError> {
    split_row_observed(t, h, i, &mut NoopObserver)
}

pub fn split_row_observed(
    t: ShiftedTabloid,
    h: HookTabloid,
    i: usize,
    obs: &mut dyn SplitObserver,
) -> Result<(ShiftedTabloid, HookTabloid), AlgoError> {
    let mut state = SplitRowState::new(t, h, i);
    split1(&mut state, obs)?;
    split2(&mut state, obs)?;
    build_candidate_sets(&mut state, obs)?;
    split3(&mut state, obs)?;
    debug_assert!(state.t.is_ordered_up_to(Cell::new(i, i)));
    Ok((state.t, state.h))
}

/// Splits a shifted tabloid into a shifted standard tableau and a total,
/// hook-valid shifted hook tabloid.
pub fn split(t: &ShiftedTabloid) -> Result<(ShiftedTabloid, HookTabloid), AlgoError> {
    let mut cur = t.clone();
    let mut h = HookTabloid::empty_shared(t.shape_arc());
    for i in (1..=t.shape().rows()).rev() {
        let (t2, h2) = split_row(cur, h, i)?;
        cur = t2;
        h = h2;
    }
    debug_assert!(cur.is_standard());
    debug_assert!(h.is_total());
    debug_assert!(h.is_valid());
    Ok((cur, h))
}
