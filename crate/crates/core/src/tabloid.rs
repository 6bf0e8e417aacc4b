//! Shifted tabloids and the modified jeu de taquin: forward and reverse
//! slides with respect to a cell set, slide paths, the ordered-up-to
//! predicate, the backward paths order and the standardization map.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::TabloidError;
use crate::shape::{rowwise_cmp, Cell, OrderScheme, StrictPartition};

/// Sentinel for entries of cells outside the diagram.
pub const INFINITY: usize = usize::MAX;

/// A set of cells at which a slide stops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellSet {
    Empty,
    /// All cells (k,k).
    MainDiagonal,
    /// All cells of the given row; rows past the diagram are empty sets.
    Row(usize),
    Single(Cell),
    Union(Box<CellSet>, Box<CellSet>),
}

impl CellSet {
    pub fn union(self, other: CellSet) -> CellSet {
        CellSet::Union(Box::new(self), Box::new(other))
    }

    pub fn contains(&self, c: Cell) -> bool {
        match self {
            CellSet::Empty => false,
            CellSet::MainDiagonal => c.is_diagonal(),
            CellSet::Row(k) => c.row == *k,
            CellSet::Single(s) => c == *s,
            CellSet::Union(a, b) => a.contains(c) || b.contains(c),
        }
    }
}

/// The ordered sequence of cells an entry comes across during a slide.
/// Consecutive cells differ by one step south/east (forward slides) or
/// north/west (backward slides).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    cells: Vec<Cell>,
}

impl Path {
    fn new(cells: Vec<Cell>) -> Self {
        debug_assert!(!cells.is_empty());
        debug_assert!(cells.windows(2).all(|w| {
            let (a, b) = (w[0], w[1]);
            (a.row.abs_diff(b.row) + a.col.abs_diff(b.col)) == 1
        }));
        Path { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn start(&self) -> Cell {
        self.cells[0]
    }

    pub fn end(&self) -> Cell {
        *self.cells.last().unwrap()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    /// Number of cells traversed; never zero, a path has at least its
    /// start cell.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn reversed(&self) -> Path {
        let mut cells = self.cells.clone();
        cells.reverse();
        Path { cells }
    }
}

/// A bijective filling of a shifted diagram with 1..=n, together with the
/// inverse index from values to cells.
#[derive(Clone, PartialEq, Eq)]
pub struct ShiftedTabloid {
    shape: Arc<StrictPartition>,
    entries: Vec<usize>,
    index: Vec<usize>,
}

impl ShiftedTabloid {
    /// Builds a tabloid from per-row value lists; row i's k-th value
    /// occupies cell (i, i+k-1).
    pub fn from_rows(shape: StrictPartition, rows: &[Vec<usize>]) -> Result<Self, TabloidError> {
        Self::from_rows_shared(shape.shared(), rows)
    }

    pub(crate) fn from_rows_shared(
        shape: Arc<StrictPartition>,
        rows: &[Vec<usize>],
    ) -> Result<Self, TabloidError> {
        if rows.len() != shape.rows() {
            return Err(TabloidError::WrongRowCount {
                expected: shape.rows(),
                found: rows.len(),
            });
        }
        let mut entries = Vec::with_capacity(shape.n());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.part(i + 1) {
                return Err(TabloidError::WrongRowLength {
                    row: i + 1,
                    expected: shape.part(i + 1),
                    found: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Self::from_entries(shape, entries)
    }

    /// Builds a tabloid from a row-major list of values (a permutation of
    /// 1..=n).
    pub fn from_row_major(
        shape: StrictPartition,
        values: Vec<usize>,
    ) -> Result<Self, TabloidError> {
        Self::from_entries(shape.shared(), values)
    }

    pub(crate) fn from_entries(
        shape: Arc<StrictPartition>,
        entries: Vec<usize>,
    ) -> Result<Self, TabloidError> {
        let n = shape.n();
        if entries.len() != n {
            return Err(TabloidError::NotAPermutation);
        }
        let mut index = vec![usize::MAX; n];
        for (pos, &v) in entries.iter().enumerate() {
            if v == 0 || v > n || index[v - 1] != usize::MAX {
                return Err(TabloidError::NotAPermutation);
            }
            index[v - 1] = pos;
        }
        Ok(ShiftedTabloid {
            shape,
            entries,
            index,
        })
    }

    pub fn shape(&self) -> &StrictPartition {
        &self.shape
    }

    pub(crate) fn shape_arc(&self) -> Arc<StrictPartition> {
        Arc::clone(&self.shape)
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    /// The entries as per-row value lists.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(self.shape.rows());
        let mut pos = 0;
        for i in 1..=self.shape.rows() {
            let len = self.shape.part(i);
            out.push(self.entries[pos..pos + len].to_vec());
            pos += len;
        }
        out
    }

    /// Row-major list of values.
    pub fn row_major(&self) -> &[usize] {
        &self.entries
    }

    /// The entry of a diagram cell.
    pub fn value_at(&self, c: Cell) -> usize {
        self.entries[self.shape.cell_index(c)]
    }

    /// The entry of a cell, or the infinity sentinel when the cell is not
    /// in the diagram.
    pub fn value_or_infinity(&self, c: Cell) -> usize {
        if self.shape.contains(c) {
            self.value_at(c)
        } else {
            INFINITY
        }
    }

    /// The cell holding value `e`.
    pub fn cell_of(&self, e: usize) -> Cell {
        debug_assert!(e >= 1 && e <= self.n());
        self.shape.cell_at(self.index[e - 1])
    }

    fn swap_cells(&mut self, a: Cell, b: Cell) {
        let ia = self.shape.cell_index(a);
        let ib = self.shape.cell_index(b);
        self.entries.swap(ia, ib);
        let (va, vb) = (self.entries[ia], self.entries[ib]);
        self.index[va - 1] = ia;
        self.index[vb - 1] = ib;
    }

    /// An entry is stable when it is at most the minimum of its south and
    /// east neighbours (missing neighbours count as infinity).
    pub fn is_stable(&self, e: usize) -> bool {
        let c = self.cell_of(e);
        let south = self.value_or_infinity(c.south());
        let east = self.value_or_infinity(c.east());
        e <= south.min(east)
    }

    /// The cell sequence a forward slide of `e` with respect to `d` would
    /// traverse, computed without moving anything.
    pub fn forward_path(&self, e: usize, d: &CellSet) -> Path {
        let mut cur = self.cell_of(e);
        let mut cells = vec![cur];
        loop {
            if d.contains(cur) {
                break;
            }
            let south = self.value_or_infinity(cur.south());
            let east = self.value_or_infinity(cur.east());
            if e <= south.min(east) {
                break;
            }
            cur = if south < east {
                cur.south()
            } else {
                cur.east()
            };
            cells.push(cur);
        }
        Path::new(cells)
    }

    /// Jeu de taquin with entry `e` and with respect to `d`: repeatedly
    /// exchange `e` with the smaller of its south and east neighbours until
    /// `e` is stable or rests on a cell of `d` (membership in `d` is tested
    /// first, at the start cell included). Returns the slid tabloid and the
    /// forward path.
    pub fn jdt(&self, e: usize, d: &CellSet) -> (ShiftedTabloid, Path) {
        let mut out = self.clone();
        let path = out.jdt_in_place(e, d);
        (out, path)
    }

    pub(crate) fn jdt_in_place(&mut self, e: usize, d: &CellSet) -> Path {
        let path = self.forward_path(e, d);
        self.apply_path(&path);
        path
    }

    /// The cell sequence a reverse slide of `e` (fixed row `fixed_row`,
    /// stop set `d`) would traverse.
    pub fn backward_path(&self, e: usize, fixed_row: usize, d: &CellSet) -> Path {
        let i = fixed_row;
        let mut cur = self.cell_of(e);
        debug_assert!(cur.row >= i, "entry must be weakly below the fixed row");
        let mut cells = vec![cur];
        loop {
            if (cur.row == i && cur.col == i) || d.contains(cur) {
                break;
            }
            let west = Cell::new(cur.row, cur.col - 1);
            let north = Cell::new(cur.row - 1, cur.col);
            cur = if cur.row == i {
                west
            } else if cur.is_diagonal() {
                north
            } else {
                let wv = self.value_or_infinity(west);
                let nv = self.value_or_infinity(north);
                debug_assert!(wv != INFINITY && nv != INFINITY);
                if nv > wv {
                    north
                } else {
                    west
                }
            };
            cells.push(cur);
        }
        Path::new(cells)
    }

    /// Reverse jeu de taquin with entry `e`: repeatedly move `e` to the
    /// larger of its north and west neighbours (forced west in the fixed
    /// row, forced north on the main diagonal) until it reaches
    /// (fixed_row, fixed_row) or a cell of `d`.
    pub fn reverse_jdt(&self, e: usize, fixed_row: usize, d: &CellSet) -> (ShiftedTabloid, Path) {
        let mut out = self.clone();
        let path = out.reverse_jdt_in_place(e, fixed_row, d);
        (out, path)
    }

    pub(crate) fn reverse_jdt_in_place(&mut self, e: usize, fixed_row: usize, d: &CellSet) -> Path {
        let path = self.backward_path(e, fixed_row, d);
        self.apply_path(&path);
        path
    }

    /// Slides the entry at `path.start()` along the path; intermediate
    /// entries shift one cell backwards.
    fn apply_path(&mut self, path: &Path) {
        let cells = path.cells();
        for k in 0..cells.len() - 1 {
            self.swap_cells(cells[k], cells[k + 1]);
        }
    }

    /// Whether rows and columns increase on the restriction to the cells
    /// that are less than or equal to `rho` in the rowwise total order
    /// (adjacent comparisons only, both cells in the restriction).
    pub fn is_ordered_up_to(&self, rho: Cell) -> bool {
        let in_restriction = |c: Cell| -> bool {
            self.shape.contains(c) && rowwise_cmp(c, rho) != Ordering::Greater
        };
        for c in self.shape.cells() {
            if !in_restriction(c) {
                continue;
            }
            let v = self.value_at(c);
            for nb in [c.east(), c.south()] {
                if in_restriction(nb) && v > self.value_at(nb) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether rows and columns increase everywhere.
    pub fn is_standard(&self) -> bool {
        self.is_ordered_up_to(Cell::new(1, 1))
    }

    /// The backward paths order: compare two entries by the smallest common
    /// cell of their backward paths (fixed row `fixed_row`, empty stop set)
    /// and the directions from which the paths arrive there.
    pub fn backward_paths_compare(
        &self,
        fixed_row: usize,
        e1: usize,
        e2: usize,
    ) -> Result<Ordering, TabloidError> {
        if e1 == e2 {
            return Ok(Ordering::Equal);
        }
        let p1 = self.backward_path(e1, fixed_row, &CellSet::Empty);
        let p2 = self.backward_path(e2, fixed_row, &CellSet::Empty);
        let merge = p1
            .cells()
            .iter()
            .copied()
            .filter(|c| p2.contains(*c))
            .min_by(|&a, &b| rowwise_cmp(a, b))
            .expect("backward paths share the diagonal end cell");
        let below = merge.south();
        let right = merge.east();
        let less = p1.contains(below) || p2.contains(right);
        let greater = p2.contains(below) || p1.contains(right);
        match (less, greater) {
            (true, false) => Ok(Ordering::Less),
            (false, true) => Ok(Ordering::Greater),
            _ => Err(TabloidError::InconsistentPaths { e1, e2 }),
        }
    }

    /// The standardization map: slide the entry of every cell, from the
    /// smallest cell of the chosen order through the largest.
    pub fn standardize(&self, scheme: OrderScheme) -> ShiftedTabloid {
        let mut out = self.clone();
        let order = self.shape.total_order(scheme);
        for &c in order.cells() {
            let e = out.value_at(c);
            out.jdt_in_place(e, &CellSet::Empty);
        }
        out
    }
}

impl ShiftedTabloid {
    fn fmt_grid(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.n().to_string().len();
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", " ".repeat(i * (width + 1)))?;
            for (k, v) in row.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v:width$}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ShiftedTabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ShiftedTabloid {} [", self.shape)?;
        self.fmt_grid(f)?;
        write!(f, "\n]")
    }
}

impl fmt::Display for ShiftedTabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_grid(f)
    }
}
