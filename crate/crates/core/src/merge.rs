//! The merge pipeline: reassembles the shifted tabloid from a shifted
//! standard tableau and a shifted hook tabloid, one row at a time from the
//! top, inverting the split pipeline. Within a row the stages run in
//! reverse: first the vertical candidates are walked back towards the
//! diagonal run, then the run itself is dissolved, then every row entry is
//! pulled back onto its cell.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::AlgoError;
use crate::hook_tabloid::{
    candidates, classify_candidate, rjs, Candidate, CandidateKind, HookTabloid,
};
use crate::shape::Cell;
use crate::tabloid::{CellSet, ShiftedTabloid};

/// Working state of the merge row pipeline.
pub struct MergeRowState {
    pub t: ShiftedTabloid,
    pub h: HookTabloid,
    pub row: usize,
}

fn vertical_candidates(t: &ShiftedTabloid, h: &HookTabloid, i: usize) -> Vec<Candidate> {
    candidates(t, h, i)
        .into_iter()
        .filter(|c| c.kind == CandidateKind::Vertical)
        .collect()
}

fn horizontal_candidates(t: &ShiftedTabloid, h: &HookTabloid, i: usize) -> Vec<Candidate> {
    candidates(t, h, i)
        .into_iter()
        .filter(|c| c.kind == CandidateKind::Horizontal)
        .collect()
}

fn max_by_backward_paths(
    t: &ShiftedTabloid,
    fixed_row: usize,
    values: impl IntoIterator<Item = usize>,
) -> Result<Option<usize>, AlgoError> {
    let mut best: Option<usize> = None;
    for v in values {
        best = Some(match best {
            None => v,
            Some(b) if v == b => b,
            Some(b) => {
                if t.backward_paths_compare(fixed_row, v, b)? == Ordering::Greater {
                    v
                } else {
                    b
                }
            }
        });
    }
    Ok(best)
}

fn min_by_backward_paths(
    t: &ShiftedTabloid,
    fixed_row: usize,
    values: impl IntoIterator<Item = usize>,
) -> Result<Option<usize>, AlgoError> {
    let mut best: Option<usize> = None;
    for v in values {
        best = Some(match best {
            None => v,
            Some(b) if v == b => b,
            Some(b) => {
                if t.backward_paths_compare(fixed_row, v, b)? == Ordering::Less {
                    v
                } else {
                    b
                }
            }
        });
    }
    Ok(best)
}

/// Stage three inverse: repeatedly walks the maximal vertical candidate
/// below the frontier row `z` back up, dissolving diagonal stops on the
/// way, until no vertical candidate lies strictly below the frontier.
pub fn merge3(state: &mut MergeRowState) -> Result<(), AlgoError> {
    let i = state.row;
    let mut z = i;
    let mut guard = 0usize;
    let max_steps = 8 * state.t.n() * state.t.n() + 64;
    loop {
        let below: Vec<usize> = vertical_candidates(&state.t, &state.h, i)
            .into_iter()
            .filter(|c| c.cell.row > z)
            .map(|c| c.value)
            .collect();
        let Some(mut e) = max_by_backward_paths(&state.t, i, below)? else {
            break;
        };
        guard += 1;
        if guard > max_steps {
            return Err(AlgoError::CorruptState(
                "vertical-candidate walk did not terminate".into(),
            ));
        }

        let cell = state.t.cell_of(e);
        if cell.is_diagonal() {
            let hh = cell.row;
            // Lowest start of the contiguous run of unstable vertical
            // candidates on the diagonal cells directly above (hh,hh).
            let mut hp = hh;
            while hp > i + 1 {
                let v = state.t.value_at(Cell::new(hp - 1, hp - 1));
                let is_run = !state.t.is_stable(v)
                    && classify_candidate(&state.t, &state.h, i, v)?.kind
                        == CandidateKind::Vertical;
                if is_run {
                    hp -= 1;
                } else {
                    break;
                }
            }

            let mut pulled_horizontal = false;
            if !state.t.is_stable(e) {
                let below_h: Vec<usize> = horizontal_candidates(&state.t, &state.h, i)
                    .into_iter()
                    .filter(|c| c.cell.row > hh)
                    .map(|c| c.value)
                    .collect();
                if let Some(ep) = min_by_backward_paths(&state.t, i, below_h)? {
                    let target = Cell::new(hh + 1, hh + 1);
                    if state
                        .t
                        .backward_path(ep, i, &CellSet::Empty)
                        .contains(target)
                    {
                        let (t2, h2) = rjs(&state.t, &state.h, ep, &CellSet::Single(target), i)?;
                        state.t = t2;
                        state.h = h2;
                        pulled_horizontal = true;
                    }
                }
            }
            state.h = if pulled_horizontal {
                state.h.retrans(i, hh, hp - 1)?
            } else {
                state.h.retrans(i, hh, hp)?
            };
            e = state.t.value_at(Cell::new(hp, hp));
        }

        if classify_candidate(&state.t, &state.h, i, e)?.kind == CandidateKind::Vertical {
            loop {
                guard += 1;
                if guard > max_steps {
                    return Err(AlgoError::CorruptState(
                        "vertical-candidate walk did not terminate".into(),
                    ));
                }
                let c = state.t.cell_of(e);
                if c.is_diagonal() && c.row != z + 1 {
                    // Hop off the diagonal so the main move below does not
                    // stop before it starts.
                    let hop = Cell::new(c.row - 1, c.row);
                    let (t2, h2) = rjs(&state.t, &state.h, e, &CellSet::Single(hop), i)?;
                    state.t = t2;
                    state.h = h2;
                }
                let stops = CellSet::MainDiagonal.union(CellSet::Row(z + 1));
                let (t2, h2) = rjs(&state.t, &state.h, e, &stops, i)?;
                state.t = t2;
                state.h = h2;

                let c = state.t.cell_of(e);
                if c.row == z + 1 {
                    break;
                }
                let deeper_vertical = vertical_candidates(&state.t, &state.h, i)
                    .into_iter()
                    .any(|cand| cand.cell.row > c.row);
                if deeper_vertical {
                    break;
                }
                if c.is_diagonal() {
                    let l = c.row;
                    let target = Cell::new(l + 1, l + 1);
                    let blocked = horizontal_candidates(&state.t, &state.h, i)
                        .into_iter()
                        .any(|cand| {
                            state
                                .t
                                .backward_path(cand.value, i, &CellSet::Empty)
                                .contains(target)
                        });
                    if blocked {
                        break;
                    }
                    let prev = state.t.value_at(Cell::new(l - 1, l - 1));
                    let prev_vertical = classify_candidate(&state.t, &state.h, i, prev)?.kind
                        == CandidateKind::Vertical;
                    if !state.t.is_stable(prev) && prev_vertical {
                        break;
                    }
                }
            }
        }

        if state.t.cell_of(e).row == z + 1 {
            z += 1;
        }
    }
    Ok(())
}

/// Stage two inverse: dissolves the diagonal run.
pub fn merge2(state: &mut MergeRowState) -> Result<(), AlgoError> {
    let i = state.row;
    let verts = vertical_candidates(&state.t, &state.h, i);
    let i_dd = if verts.is_empty() {
        i
    } else {
        let rows: BTreeSet<usize> = verts.iter().map(|c| c.cell.row).collect();
        let max = *rows.iter().max().unwrap();
        let expected: BTreeSet<usize> = (i + 1..=max).collect();
        if rows != expected {
            return Err(AlgoError::CorruptState(format!(
                "vertical candidates occupy rows {rows:?}, expected {expected:?}"
            )));
        }
        max
    };

    let case2 = if i_dd == i {
        true
    } else {
        let below_h: Vec<usize> = horizontal_candidates(&state.t, &state.h, i)
            .into_iter()
            .filter(|c| c.cell.row > i_dd)
            .map(|c| c.value)
            .collect();
        match min_by_backward_paths(&state.t, i, below_h)? {
            None => false,
            Some(mh) => {
                let mv = min_by_backward_paths(
                    &state.t,
                    i,
                    verts.iter().map(|c| c.value).collect::<Vec<_>>(),
                )?
                .expect("vertical candidates present");
                state.t.backward_paths_compare(i, mh, mv)? == Ordering::Less
            }
        }
    };

    if case2 {
        merge2_case2(state, i_dd)
    } else {
        merge2_case1(state, i_dd)
    }
}

/// The walked-back run entries return onto the diagonal cells one by one;
/// the cell left out identifies where the run was broken.
fn merge2_case2(state: &mut MergeRowState, i_dd: usize) -> Result<(), AlgoError> {
    let i = state.row;
    let mut landed: BTreeSet<usize> = BTreeSet::new();
    for g in i..i_dd {
        let ptr = state.h.get(Cell::new(i, g)).ok_or_else(|| {
            AlgoError::CorruptState(format!("cell ({i},{g}) is empty during the run dissolve"))
        })?;
        let e = state.t.value_at(ptr);
        let path = state.t.reverse_jdt_in_place(e, i, &CellSet::MainDiagonal);
        let end = path.end();
        if !end.is_diagonal() {
            return Err(AlgoError::CorruptState(format!(
                "run entry {e} stopped off the diagonal at {end}"
            )));
        }
        landed.insert(end.row);
    }
    let gaps: Vec<usize> = (i..=i_dd).filter(|g| !landed.contains(g)).collect();
    let [ip] = gaps.as_slice() else {
        return Err(AlgoError::NoUnoccupiedDiagonal { lo: i, hi: i_dd });
    };
    state.h = state.h.retrans(i, i_dd, *ip)?;
    for g in i..*ip {
        state.h.set(Cell::new(i, g), Some(Cell::new(g, g)));
    }
    Ok(())
}

/// The run entries walk back onto their own diagonal cells. The pointer
/// at (i, i_dd) encodes, through the offset of its target from the
/// diagonal, the column displacement of the one run entry that has no
/// vertical pointer of its own; the entry currently at that displacement
/// joins the scan as an honorary vertical candidate.
fn merge2_case1(state: &mut MergeRowState, i_dd: usize) -> Result<(), AlgoError> {
    let i = state.row;
    let anchor = state.h.get(Cell::new(i, i_dd)).ok_or_else(|| {
        AlgoError::CorruptState(format!("cell ({i},{i_dd}) is empty during the run rebuild"))
    })?;
    if anchor.col < anchor.row {
        return Err(AlgoError::CorruptState(format!(
            "anchor pointer {anchor} at ({i},{i_dd}) is below the diagonal"
        )));
    }
    let displacement = anchor.col - anchor.row;

    let mut consumed: BTreeSet<Cell> = BTreeSet::new();
    let mut honorary_used = false;
    let mut a = true;
    for g in i..=i_dd {
        // Candidate pool: unconsumed vertical pointers plus the honorary
        // entry of row g, tagged with the pointer cell that found them.
        let collect = |state: &MergeRowState,
                       consumed: &BTreeSet<Cell>,
                       honorary_used: bool,
                       rows: &[usize]|
         -> Vec<(usize, Option<Cell>)> {
            let mut vals: Vec<(usize, Option<Cell>)> = vertical_candidates(&state.t, &state.h, i)
                .into_iter()
                .filter(|c| rows.contains(&c.cell.row) && !consumed.contains(&c.pointer_cell))
                .map(|c| (c.value, Some(c.pointer_cell)))
                .collect();
            if !honorary_used && rows.contains(&g) {
                let cell = Cell::new(g, g + displacement);
                if state.t.shape().contains(cell) {
                    let v = state.t.value_at(cell);
                    if !vals.iter().any(|(w, _)| *w == v) {
                        vals.push((v, None));
                    }
                }
            }
            vals
        };
        let pool = if a {
            collect(state, &consumed, honorary_used, &[g, (g + 1).min(i_dd)])
        } else {
            collect(state, &consumed, honorary_used, &[g])
        };
        let e =
            max_by_backward_paths(&state.t, i, pool.iter().map(|(v, _)| *v))?.ok_or_else(|| {
                AlgoError::CorruptState(format!("no vertical candidate while rebuilding row {g}"))
            })?;
        match pool
            .iter()
            .find(|(v, _)| *v == e)
            .expect("chosen from pool")
            .1
        {
            Some(sigma) => {
                consumed.insert(sigma);
            }
            None => honorary_used = true,
        }
        let path = state
            .t
            .reverse_jdt_in_place(e, i, &CellSet::Single(Cell::new(g, g)));
        if path.contains(Cell::new(g + 1, g + 1)) {
            a = false;
        }
    }
    for g in i..=i_dd {
        state.h.set(Cell::new(i, g), Some(Cell::new(g, g)));
    }
    Ok(())
}

/// Stage one inverse: pulls the minimal horizontal candidate back onto
/// each cell of the working row, left to right, consuming the pointers.
pub fn merge1(state: &mut MergeRowState) -> Result<(), AlgoError> {
    let i = state.row;
    let shape = state.t.shape().clone();
    for j in shape.row_start(i)..=shape.row_end(i) {
        let values: Vec<usize> = horizontal_candidates(&state.t, &state.h, i)
            .into_iter()
            .map(|c| c.value)
            .collect();
        let e = min_by_backward_paths(&state.t, i, values)?
            .ok_or(AlgoError::NoHorizontalCandidate { col: j })?;
        let (t2, h2) = rjs(&state.t, &state.h, e, &CellSet::Single(Cell::new(i, j)), i)?;
        state.t = t2;
        state.h = h2;
        if state.t.cell_of(e) != Cell::new(i, j) {
            return Err(AlgoError::CorruptState(format!(
                "entry {e} was pulled to {} instead of ({i},{j})",
                state.t.cell_of(e)
            )));
        }
        state.h.set(Cell::new(i, j), None);
    }
    Ok(())
}

/// Runs the full row pipeline on row `i`.
pub fn merge_row(
    t: ShiftedTabloid,
    h: HookTabloid,
    i: usize,
) -> Result<(ShiftedTabloid, HookTabloid), AlgoError> {
    let mut state = MergeRowState { t, h, row: i };
    merge3(&mut state)?;
    merge2(&mut state)?;
    merge1(&mut state)?;
    Ok((state.t, state.h))
}

/// Merges a shifted standard tableau and a total hook tabloid back into
/// the shifted tabloid that splits to them. The hook tabloid is consumed
/// row by row; it is fully cleared afterwards.
pub fn merge(s: &ShiftedTabloid, h: &HookTabloid) -> Result<ShiftedTabloid, AlgoError> {
    let mut t = s.clone();
    let mut hook = h.clone();
    for i in 1..=s.shape().rows() {
        let (t2, h2) = merge_row(t, hook, i)?;
        t = t2;
        hook = h2;
    }
    Ok(t)
}
