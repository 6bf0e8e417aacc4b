//! Shifted hook tabloids: partial pointer fillings of a shifted diagram,
//! the four row rewrites (shift, reshift, transfer, retransfer), candidate
//! classification, and the combined slide-plus-rewrite moves.

use std::fmt;
use std::sync::Arc;

use crate::error::HookError;
use crate::shape::{Cell, StrictPartition};
use crate::tabloid::{CellSet, ShiftedTabloid};

/// A partial mapping from cells to cells. A total mapping is a shifted hook
/// tabloid when every stored cell lies in the shifted hook of its key cell;
/// during the split and merge pipelines only the rows below the working row
/// are required to satisfy that.
#[derive(Clone, PartialEq, Eq)]
pub struct HookTabloid {
    shape: Arc<StrictPartition>,
    ptrs: Vec<Option<Cell>>,
}

impl HookTabloid {
    pub fn empty(shape: StrictPartition) -> Self {
        let n = shape.n();
        HookTabloid {
            shape: shape.shared(),
            ptrs: vec![None; n],
        }
    }

    pub(crate) fn empty_shared(shape: Arc<StrictPartition>) -> Self {
        let n = shape.n();
        HookTabloid {
            shape,
            ptrs: vec![None; n],
        }
    }

    /// Builds a hook tabloid from per-row pointer lists; `None` marks an
    /// empty cell. Pointers must be diagram cells.
    pub fn from_rows(
        shape: StrictPartition,
        rows: &[Vec<Option<(usize, usize)>>],
    ) -> Result<Self, HookError> {
        let shape = shape.shared();
        let mut out = HookTabloid::empty_shared(Arc::clone(&shape));
        if rows.len() != shape.rows() {
            return Err(HookError::PreconditionViolated(format!(
                "expected {} rows, found {}",
                shape.rows(),
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            let r = i + 1;
            if row.len() != shape.part(r) {
                return Err(HookError::PreconditionViolated(format!(
                    "row {r} must have {} cells",
                    shape.part(r)
                )));
            }
            for (k, p) in row.iter().enumerate() {
                let cell = Cell::new(r, r + k);
                if let Some((a, b)) = *p {
                    let target = Cell::new(a, b);
                    if !shape.contains(target) {
                        return Err(HookError::PointerLeavesDiagram {
                            cell,
                            pointer: target,
                        });
                    }
                    out.set(cell, Some(target));
                }
            }
        }
        Ok(out)
    }

    pub fn shape(&self) -> &StrictPartition {
        &self.shape
    }

    pub fn get(&self, c: Cell) -> Option<Cell> {
        self.ptrs[self.shape.cell_index(c)]
    }

    pub fn set(&mut self, c: Cell, v: Option<Cell>) {
        let idx = self.shape.cell_index(c);
        self.ptrs[idx] = v;
    }

    /// Pointer list of one row, leftmost cell first.
    pub fn row(&self, i: usize) -> Vec<Option<Cell>> {
        (self.shape.row_start(i)..=self.shape.row_end(i))
            .map(|j| self.get(Cell::new(i, j)))
            .collect()
    }

    pub fn rows(&self) -> Vec<Vec<Option<Cell>>> {
        (1..=self.shape.rows()).map(|i| self.row(i)).collect()
    }

    pub fn is_total(&self) -> bool {
        self.ptrs.iter().all(|p| p.is_some())
    }

    /// Whether every stored pointer lies in the shifted hook of its cell.
    pub fn is_valid(&self) -> bool {
        let diagram = self.shape.diagram();
        for c in self.shape.cells() {
            if let Some(p) = self.get(c) {
                let hook = diagram.hook(c).expect("cell of own diagram");
                if !hook.contains(&p) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether the rows from `lo` down are totally filled and hook-valid
    /// while the rows above `lo` are empty.
    pub fn is_valid_below(&self, lo: usize) -> bool {
        let diagram = self.shape.diagram();
        for c in self.shape.cells() {
            match self.get(c) {
                Some(_) if c.row < lo => return false,
                Some(p) => {
                    let hook = diagram.hook(c).expect("cell of own diagram");
                    if !hook.contains(&p) {
                        return false;
                    }
                }
                None if c.row >= lo => return false,
                None => {}
            }
        }
        true
    }

    fn check_row_cell(&self, c: Cell) -> Result<(), HookError> {
        if self.shape.contains(c) {
            Ok(())
        } else {
            Err(HookError::PreconditionViolated(format!(
                "cell {c} is not in the diagram"
            )))
        }
    }

    /// Shift from (i,j) to (i,j'): every pointer of the window slides one
    /// cell to the left and (i,j') is emptied. Same-row pointers keep their
    /// value; a pointer whose column equals its own cell's column, or whose
    /// row exceeds its own cell's column by one, has both coordinates
    /// decreased by one.
    pub fn shift(&self, i: usize, j: usize, j_prime: usize) -> Result<HookTabloid, HookError> {
        debug_assert!(j <= j_prime);
        self.check_row_cell(Cell::new(i, j))?;
        self.check_row_cell(Cell::new(i, j_prime))?;
        let mut out = self.clone();
        for k in j..j_prime {
            let src_cell = Cell::new(i, k + 1);
            let moved = match self.get(src_cell) {
                None => None,
                Some(p) => Some(shift_pointer(p, i, k + 1).map_err(|_| {
                    HookError::UnhandledPointerForm {
                        cell: src_cell,
                        pointer: p,
                    }
                })?),
            };
            out.set(Cell::new(i, k), moved);
        }
        out.set(Cell::new(i, j_prime), None);
        Ok(out)
    }

    /// Reshift from (i,j') to (i,j): the inverse of `shift`. Every pointer
    /// of the window slides one cell to the right and (i,j) is emptied.
    pub fn rshift(&self, i: usize, j_prime: usize, j: usize) -> Result<HookTabloid, HookError> {
        debug_assert!(j <= j_prime);
        self.check_row_cell(Cell::new(i, j))?;
        self.check_row_cell(Cell::new(i, j_prime))?;
        let mut out = self.clone();
        for k in (j + 1)..=j_prime {
            let src_cell = Cell::new(i, k - 1);
            let moved = match self.get(src_cell) {
                None => None,
                Some(p) => {
                    let q = rshift_pointer(p, i, k - 1).map_err(|_| {
                        HookError::UnhandledPointerForm {
                            cell: src_cell,
                            pointer: p,
                        }
                    })?;
                    if q != p && !self.shape.contains(q) {
                        return Err(HookError::PointerLeavesDiagram {
                            cell: Cell::new(i, k),
                            pointer: q,
                        });
                    }
                    Some(q)
                }
            };
            out.set(Cell::new(i, k), moved);
        }
        out.set(Cell::new(i, j), None);
        Ok(out)
    }

    /// Transfer from (i,j) to (i,k): relocates the pointer of (i,j), which
    /// must lie in the same row or the same column as (i,j), to (i,k), and
    /// fills the vacated cells (i,l), j <= l < k, with the diagonal
    /// pointers (l+1,l+1). Requires the cells (i,l), j < l <= k, to hold
    /// (l,l) beforehand.
    pub fn trans(&self, i: usize, j: usize, k: usize) -> Result<HookTabloid, HookError> {
        debug_assert!(j <= k);
        self.check_row_cell(Cell::new(i, j))?;
        self.check_row_cell(Cell::new(i, k))?;
        let p = self.get(Cell::new(i, j)).ok_or_else(|| {
            HookError::PreconditionViolated(format!("transfer source (i,{j}) is empty"))
        })?;
        if p.row != i && p.col != j {
            return Err(HookError::PreconditionViolated(format!(
                "transfer source pointer {p} is in neither the row nor the column of ({i},{j})"
            )));
        }
        for l in (j + 1)..=k {
            if self.get(Cell::new(i, l)) != Some(Cell::new(l, l)) {
                return Err(HookError::PreconditionViolated(format!(
                    "transfer context requires ({i},{l}) to hold ({l},{l})"
                )));
            }
        }
        let moved = if p.row == i && k <= p.col {
            p
        } else {
            Cell::new(p.row + k - p.col, k)
        };
        debug_assert!(self.shape.contains(moved));
        let mut out = self.clone();
        for l in j..k {
            out.set(Cell::new(i, l), Some(Cell::new(l + 1, l + 1)));
        }
        out.set(Cell::new(i, k), Some(moved));
        Ok(out)
    }

    /// Retransfer from (i,k) to (i,j): the inverse of `trans`. The window
    /// cells (i,l), j < l <= k, are reset to (l,l); whatever they held is
    /// overwritten (the merge pipeline reaches retransfers whose window
    /// still carries stale pointers).
    pub fn retrans(&self, i: usize, k: usize, j: usize) -> Result<HookTabloid, HookError> {
        debug_assert!(j <= k);
        self.check_row_cell(Cell::new(i, j))?;
        self.check_row_cell(Cell::new(i, k))?;
        let p = self.get(Cell::new(i, k)).ok_or_else(|| {
            HookError::PreconditionViolated(format!("retransfer source (i,{k}) is empty"))
        })?;
        if p.row != i && p.col != k {
            return Err(HookError::PreconditionViolated(format!(
                "retransfer source pointer {p} is in neither the row nor the column of ({i},{k})"
            )));
        }
        let moved = if p.col == k && p.row - i >= k - j {
            Cell::new(p.row + j - k, j)
        } else {
            Cell::new(i, p.col + i - p.row)
        };
        debug_assert!(self.shape.contains(moved));
        let mut out = self.clone();
        for l in (j + 1)..=k {
            out.set(Cell::new(i, l), Some(Cell::new(l, l)));
        }
        out.set(Cell::new(i, j), Some(moved));
        Ok(out)
    }
}

/// Rewrites one window pointer of a left shift. `src_col` is the column
/// the pointer currently occupies; the result belongs one cell further
/// left. The two non-trivial forms (column equal to the own column; row
/// equal to the own column plus one) both decrease the target by (1,1),
/// so a pointer matching both forms is rewritten consistently.
fn shift_pointer(p: Cell, i: usize, src_col: usize) -> Result<Cell, ()> {
    if p.row == i {
        return Ok(p);
    }
    if (p.col == src_col && p.row > i) || p.row == src_col + 1 {
        Ok(Cell::new(p.row - 1, p.col - 1))
    } else {
        Err(())
    }
}

/// Rewrites one window pointer of a right shift (the inverse of
/// `shift_pointer`); the result belongs one cell further right.
fn rshift_pointer(p: Cell, i: usize, src_col: usize) -> Result<Cell, ()> {
    if p.row == i && p.col > src_col {
        return Ok(p);
    }
    if p.col == src_col || p.row == src_col + 1 {
        Ok(Cell::new(p.row + 1, p.col + 1))
    } else {
        Err(())
    }
}

/// How an entry is pointed at from the working row of the hook tabloid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateKind {
    /// The pointer target shares its column with the pointer cell.
    Horizontal,
    /// The pointer target shares neither row nor column with the pointer
    /// cell.
    Vertical,
    NotACandidate,
}

/// One candidate entry: the pointer cell sigma in the working row, the
/// pointed cell and its current entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Candidate {
    pub value: usize,
    pub cell: Cell,
    pub pointer_cell: Cell,
    pub kind: CandidateKind,
}

/// All candidates induced by the pointers of row `i`. A pointer lying in
/// the same row as its cell induces no candidate.
pub fn candidates(t: &ShiftedTabloid, h: &HookTabloid, i: usize) -> Vec<Candidate> {
    let shape = t.shape();
    let mut out = Vec::new();
    for col in shape.row_start(i)..=shape.row_end(i) {
        let sigma = Cell::new(i, col);
        let Some(rho) = h.get(sigma) else { continue };
        let kind = if rho.col == sigma.col {
            CandidateKind::Horizontal
        } else if rho.row == sigma.row {
            continue;
        } else {
            CandidateKind::Vertical
        };
        out.push(Candidate {
            value: t.value_at(rho),
            cell: rho,
            pointer_cell: sigma,
            kind,
        });
    }
    out
}

/// Classifies one entry. When a vertical and a horizontal pointer both
/// target the entry (a state the combined moves create transiently), the
/// vertical pointer governs; two pointers of the same kind are an error.
pub fn classify_candidate(
    t: &ShiftedTabloid,
    h: &HookTabloid,
    i: usize,
    e: usize,
) -> Result<Candidate, HookError> {
    let cell = t.cell_of(e);
    let mut vertical: Option<Candidate> = None;
    let mut horizontal: Option<Candidate> = None;
    for cand in candidates(t, h, i) {
        if cand.cell != cell {
            continue;
        }
        let slot = match cand.kind {
            CandidateKind::Vertical => &mut vertical,
            CandidateKind::Horizontal => &mut horizontal,
            CandidateKind::NotACandidate => unreachable!(),
        };
        if let Some(prev) = slot {
            return Err(HookError::MultiplePointers {
                value: e,
                first: prev.pointer_cell,
                second: cand.pointer_cell,
            });
        }
        *slot = Some(cand);
    }
    Ok(vertical.or(horizontal).unwrap_or(Candidate {
        value: e,
        cell,
        pointer_cell: cell,
        kind: CandidateKind::NotACandidate,
    }))
}

/// Jeu de taquin combined with the hook-tabloid bookkeeping: slide `e`
/// with respect to `d`, then store the end cell of the forward path in row
/// `i`, shifting the stale pointer window out of the way first. Horizontal
/// candidates and non-candidates store the end cell in its own column;
/// vertical candidates store it in the column one left of its row.
pub fn js(
    t: &ShiftedTabloid,
    h: &HookTabloid,
    e: usize,
    d: &CellSet,
    i: usize,
) -> Result<(ShiftedTabloid, HookTabloid), HookError> {
    let cand = classify_candidate(t, h, i, e)?;
    let (t2, path) = t.jdt(e, d);
    let end = path.end();
    let h2 = match cand.kind {
        CandidateKind::Horizontal | CandidateKind::NotACandidate => {
            let q = cand.cell.col;
            let mut h2 = h.shift(i, q, end.col)?;
            h2.set(Cell::new(i, end.col), Some(end));
            h2
        }
        CandidateKind::Vertical => {
            let p = cand.cell.row;
            let mut h2 = h.shift(i, p - 1, end.row - 1)?;
            h2.set(Cell::new(i, end.row - 1), Some(end));
            h2
        }
    };
    Ok((t2, h2))
}

/// The inverse of `js`: reverse jeu de taquin combined with a reshift.
pub fn rjs(
    t: &ShiftedTabloid,
    h: &HookTabloid,
    e: usize,
    d: &CellSet,
    i: usize,
) -> Result<(ShiftedTabloid, HookTabloid), HookError> {
    let cand = classify_candidate(t, h, i, e)?;
    let (t2, path) = t.reverse_jdt(e, i, d);
    let end = path.end();
    let h2 = match cand.kind {
        CandidateKind::Horizontal => {
            let q = cand.cell.col;
            let mut h2 = h.rshift(i, q, end.col)?;
            h2.set(Cell::new(i, end.col), Some(end));
            h2
        }
        CandidateKind::Vertical => {
            let p = cand.cell.row;
            let mut h2 = h.rshift(i, p - 1, end.row - 1)?;
            h2.set(Cell::new(i, end.row - 1), Some(end));
            h2
        }
        CandidateKind::NotACandidate => {
            return Err(HookError::PreconditionViolated(format!(
                "entry {e} is not a candidate"
            )));
        }
    };
    Ok((t2, h2))
}

impl fmt::Debug for HookTabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "HookTabloid {} [", self.shape)?;
        for (i, row) in self.rows().iter().enumerate() {
            write!(f, "{}", " ".repeat(i * 2))?;
            for p in row {
                match p {
                    Some(c) => write!(f, " {c}")?,
                    None => write!(f, " (-,-)")?,
                }
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
