//! Strict partitions, shifted and ordinary Ferrers diagrams, hooks and
//! exact counting of standard fillings via the hook-length formula.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::ShapeError;

/// A 1-indexed (row, column) coordinate in a Ferrers diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// The cell directly below.
    pub fn south(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }

    /// The cell directly to the right.
    pub fn east(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }

    /// Whether the cell lies on the main diagonal.
    pub fn is_diagonal(self) -> bool {
        self.row == self.col
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Diagram geometry: shifted (row i indented i-1 cells) or ordinary
/// (left-justified rows).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    Shifted,
    Ordinary,
}

/// A strictly decreasing sequence of positive parts. Indexes shifted
/// diagrams; row i occupies columns i..=parts[i-1]+i-1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrictPartition {
    parts: Vec<usize>,
    offsets: Vec<usize>,
    n: usize,
}

impl StrictPartition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self, ShapeError> {
        let parts = parts.into();
        if parts.is_empty() {
            return Err(ShapeError::EmptyPartition);
        }
        for (idx, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(ShapeError::NonPositivePart(idx + 1));
            }
        }
        if !parts.windows(2).all(|w| w[0] > w[1]) {
            return Err(ShapeError::NotStrictlyDecreasing);
        }
        let mut offsets = Vec::with_capacity(parts.len() + 1);
        let mut acc = 0;
        for &p in &parts {
            offsets.push(acc);
            acc += p;
        }
        offsets.push(acc);
        Ok(StrictPartition {
            parts,
            offsets,
            n: acc,
        })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Total number of cells.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of the 1-indexed row `i`.
    pub fn part(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    /// First column of row `i` in the shifted diagram.
    pub fn row_start(&self, i: usize) -> usize {
        i
    }

    /// Last column of row `i` in the shifted diagram.
    pub fn row_end(&self, i: usize) -> usize {
        self.parts[i - 1] + i - 1
    }

    /// Whether `c` is a cell of the shifted diagram.
    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1
            && c.row <= self.rows()
            && c.col >= self.row_start(c.row)
            && c.col <= self.row_end(c.row)
    }

    /// Row-major position of a cell; the inverse of `cell_at`.
    pub fn cell_index(&self, c: Cell) -> usize {
        debug_assert!(self.contains(c));
        self.offsets[c.row - 1] + (c.col - c.row)
    }

    pub fn cell_at(&self, index: usize) -> Cell {
        debug_assert!(index < self.n);
        let row = self.offsets.partition_point(|&o| o <= index);
        Cell::new(row, index - self.offsets[row - 1] + row)
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.n);
        for i in 1..=self.rows() {
            for j in self.row_start(i)..=self.row_end(i) {
                out.push(Cell::new(i, j));
            }
        }
        out
    }

    /// The shifted diagram of this partition.
    pub fn diagram(&self) -> Diagram {
        Diagram {
            parts: self.parts.clone(),
            kind: ShapeKind::Shifted,
        }
    }

    pub fn total_order(&self, scheme: OrderScheme) -> TotalOrder {
        TotalOrder::new(self, scheme)
    }

    pub(crate) fn shared(self) -> Arc<StrictPartition> {
        Arc::new(self)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A validated partition together with its diagram geometry. Ordinary
/// diagrams accept weakly decreasing parts; shifted diagrams require
/// strictly decreasing parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    parts: Vec<usize>,
    kind: ShapeKind,
}

impl Diagram {
    pub fn new(parts: impl Into<Vec<usize>>, kind: ShapeKind) -> Result<Self, ShapeError> {
        let parts = parts.into();
        if parts.is_empty() {
            return Err(ShapeError::EmptyPartition);
        }
        for (idx, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(ShapeError::NonPositivePart(idx + 1));
            }
        }
        match kind {
            ShapeKind::Shifted => {
                if !parts.windows(2).all(|w| w[0] > w[1]) {
                    return Err(ShapeError::NotStrictlyDecreasing);
                }
            }
            ShapeKind::Ordinary => {
                if !parts.windows(2).all(|w| w[0] >= w[1]) {
                    return Err(ShapeError::NotWeaklyDecreasing);
                }
            }
        }
        Ok(Diagram { parts, kind })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn kind(&self) -> ShapeKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    fn row_start(&self, i: usize) -> usize {
        match self.kind {
            ShapeKind::Shifted => i,
            ShapeKind::Ordinary => 1,
        }
    }

    fn row_end(&self, i: usize) -> usize {
        self.row_start(i) + self.parts[i - 1] - 1
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1
            && c.row <= self.rows()
            && c.col >= self.row_start(c.row)
            && c.col <= self.row_end(c.row)
    }

    /// All cells in row-major order, left to right within a row.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.n());
        for i in 1..=self.rows() {
            for j in self.row_start(i)..=self.row_end(i) {
                out.push(Cell::new(i, j));
            }
        }
        out
    }

    /// The hook of `c`: the cell itself, its arm (cells to the right in the
    /// same row) and its leg (cells below in the same column). In a shifted
    /// diagram, whenever the diagonal cell (j,j) belongs to this set (which
    /// happens exactly when row j exists, the case c = (j,j) included), all
    /// cells of row j+1 belong to the hook as well.
    pub fn hook(&self, c: Cell) -> Result<Vec<Cell>, ShapeError> {
        if !self.contains(c) {
            return Err(ShapeError::CellNotInDiagram(c));
        }
        let mut out = Vec::new();
        for j in c.col..=self.row_end(c.row) {
            out.push(Cell::new(c.row, j));
        }
        let mut row = c.row + 1;
        while self.contains(Cell::new(row, c.col)) {
            out.push(Cell::new(row, c.col));
            row += 1;
        }
        if self.kind == ShapeKind::Shifted && c.col <= self.rows() {
            // The leg (or c itself) reaches the diagonal cell (col, col),
            // so row col+1 joins the hook.
            let extra = c.col + 1;
            if extra <= self.rows() {
                for j in self.row_start(extra)..=self.row_end(extra) {
                    out.push(Cell::new(extra, j));
                }
            }
        }
        Ok(out)
    }

    pub fn hook_length(&self, c: Cell) -> Result<usize, ShapeError> {
        Ok(self.hook(c)?.len())
    }

    /// Product of all hook lengths.
    pub fn hook_product(&self) -> BigUint {
        let mut acc = BigUint::one();
        for c in self.cells() {
            acc *= BigUint::from(self.hook_length(c).expect("cell of own diagram"));
        }
        acc
    }

    /// Number of standard fillings: n! divided by the hook product. The
    /// division is checked to be exact.
    pub fn count_standard(&self) -> Result<BigUint, ShapeError> {
        let fact = factorial(self.n());
        let prod = self.hook_product();
        if !(&fact % &prod).is_zero() {
            return Err(ShapeError::NonIntegerResult);
        }
        Ok(fact / prod)
    }
}

/// n! computed iteratively with arbitrary precision.
pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// Processing orders for the standardization map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderScheme {
    /// Rows bottom to top, each row right to left. The admissible order for
    /// shifted shapes; (1,1) comes last.
    Rowwise,
    /// Columns right to left, each column bottom to top (the order used for
    /// ordinary shapes by Novelli, Pak and Stoyanovskii).
    Columnwise,
}

/// A total order on the cells of a shifted diagram, smallest first, plus a
/// positional comparator.
#[derive(Debug, Clone)]
pub struct TotalOrder {
    seq: Vec<Cell>,
    pos: Vec<usize>,
}

impl TotalOrder {
    fn new(shape: &StrictPartition, scheme: OrderScheme) -> Self {
        let mut seq = Vec::with_capacity(shape.n());
        match scheme {
            OrderScheme::Rowwise => {
                for i in (1..=shape.rows()).rev() {
                    for j in (shape.row_start(i)..=shape.row_end(i)).rev() {
                        seq.push(Cell::new(i, j));
                    }
                }
            }
            OrderScheme::Columnwise => {
                let max_col = shape.row_end(1);
                for j in (1..=max_col).rev() {
                    for i in (1..=shape.rows()).rev() {
                        let c = Cell::new(i, j);
                        if shape.contains(c) {
                            seq.push(c);
                        }
                    }
                }
            }
        }
        let mut pos = vec![0; shape.n()];
        for (k, &c) in seq.iter().enumerate() {
            pos[shape.cell_index(c)] = k;
        }
        TotalOrder { seq, pos }
    }

    /// Cells from smallest to largest.
    pub fn cells(&self) -> &[Cell] {
        &self.seq
    }

    /// Position of a cell in the order (0 = smallest).
    pub fn position(&self, shape: &StrictPartition, c: Cell) -> usize {
        self.pos[shape.cell_index(c)]
    }

    pub fn cmp(&self, shape: &StrictPartition, a: Cell, b: Cell) -> Ordering {
        self.position(shape, a).cmp(&self.position(shape, b))
    }
}

/// Compares cells of any shifted diagram in the rowwise order without
/// materializing the sequence: lower rows come first, and within a row the
/// rightmost cell comes first.
pub fn rowwise_cmp(a: Cell, b: Cell) -> Ordering {
    b.row.cmp(&a.row).then(b.col.cmp(&a.col))
}
