//! Exhaustive small-instance checkers for the four mutually inverse
//! pairs; each returns the number of identities verified.

use shifted_hooks::hook_tabloid::{js, rjs, HookTabloid};
use shifted_hooks::oracle::{for_each_tabloid, Bounds};
use shifted_hooks::shape::{Cell, OrderScheme, StrictPartition};
use shifted_hooks::split::split_row;
use shifted_hooks::tabloid::CellSet;

fn sp(parts: &[usize]) -> StrictPartition {
    StrictPartition::new(parts.to_vec()).unwrap()
}

/// Every strict partition with at most six cells.
pub fn small_shapes() -> Vec<StrictPartition> {
    [
        vec![1],
        vec![2],
        vec![2, 1],
        vec![3],
        vec![3, 1],
        vec![3, 2],
        vec![3, 2, 1],
        vec![4],
        vec![4, 1],
        vec![4, 2],
        vec![5],
        vec![5, 1],
        vec![6],
    ]
    .into_iter()
    .map(|p| sp(&p))
    .collect()
}

fn cells_with_predecessors(shape: &StrictPartition) -> Vec<(Cell, Option<Cell>)> {
    let order = shape.total_order(OrderScheme::Rowwise);
    let cells = order.cells();
    (0..cells.len())
        .map(|k| (cells[k], k.checked_sub(1).map(|p| cells[p])))
        .collect()
}

/// Forward slide then reverse slide (fixed on the start cell) is the
/// identity, the backward path is the reversed forward path, and an
/// unrestricted slide extends the ordered region by one cell.
pub fn slide_reverse_identities() -> u64 {
    let mut cases = 0;
    for shape in small_shapes() {
        let pairs = cells_with_predecessors(&shape);
        for_each_tabloid(&shape, &Bounds::default(), |t| {
            for (cell, pred) in &pairs {
                let ordered = match pred {
                    Some(p) => t.is_ordered_up_to(*p),
                    None => true,
                };
                if !ordered {
                    continue;
                }
                let e = t.value_at(*cell);
                for d in [CellSet::Empty, CellSet::MainDiagonal] {
                    let (u, fwd) = t.jdt(e, &d);
                    let (back, bwd) = u.reverse_jdt(e, cell.row, &CellSet::Single(*cell));
                    assert_eq!(back, *t);
                    assert_eq!(bwd, fwd.reversed());
                    cases += 1;
                }
                let (u, _) = t.jdt(e, &CellSet::Empty);
                assert!(u.is_ordered_up_to(*cell));
            }
        })
        .unwrap();
    }
    cases
}

/// Reverse slide then forward slide under the stated hypotheses is the
/// identity.
pub fn reverse_slide_identities() -> u64 {
    let mut cases = 0;
    for shape in small_shapes() {
        let pairs = cells_with_predecessors(&shape);
        for_each_tabloid(&shape, &Bounds::default(), |t| {
            for (cell, _) in &pairs {
                if !t.is_ordered_up_to(*cell) {
                    continue;
                }
                let i = cell.row;
                for e in 1..=t.n() {
                    if t.cell_of(e).row < i {
                        continue;
                    }
                    if !t.backward_path(e, i, &CellSet::Empty).contains(*cell) {
                        continue;
                    }
                    let start = t.cell_of(e);
                    let (u, _) = t.reverse_jdt(e, i, &CellSet::Single(*cell));
                    let (back, _) = u.jdt(e, &CellSet::Single(start));
                    assert_eq!(back, *t);
                    cases += 1;
                }
            }
        })
        .unwrap();
    }
    cases
}

/// Shift/reshift round trips over every hook-valid first row of a
/// four-row shape and every window.
pub fn shift_reshift_identities() -> u64 {
    let shape = sp(&[4, 3, 2, 1]);
    let diagram = shape.diagram();
    let row_cells: Vec<Cell> = (1..=shape.row_end(1)).map(|j| Cell::new(1, j)).collect();
    let hooks: Vec<Vec<Cell>> = row_cells
        .iter()
        .map(|&c| diagram.hook(c).unwrap())
        .collect();
    let mut cases = 0;
    let mut choice = vec![0usize; row_cells.len()];
    loop {
        let mut full = HookTabloid::empty(shape.clone());
        for (idx, &c) in row_cells.iter().enumerate() {
            full.set(c, Some(hooks[idx][choice[idx]]));
        }
        for j in 1..=shape.row_end(1) {
            let mut h = full.clone();
            h.set(Cell::new(1, j), None);
            for j_prime in j..=shape.row_end(1) {
                let shifted = h.shift(1, j, j_prime).expect("hook-valid rows shift");
                assert_eq!(shifted.rshift(1, j_prime, j).unwrap(), h);
                cases += 1;
            }
            for j_prime in j..=shape.row_end(1) {
                let mut h2 = full.clone();
                h2.set(Cell::new(1, j_prime), None);
                if let Ok(reshifted) = h2.rshift(1, j_prime, j) {
                    assert_eq!(reshifted.shift(1, j, j_prime).unwrap(), h2);
                    cases += 1;
                }
            }
        }
        let mut idx = 0;
        loop {
            if idx == choice.len() {
                break;
            }
            choice[idx] += 1;
            if choice[idx] < hooks[idx].len() {
                break;
            }
            choice[idx] = 0;
            idx += 1;
        }
        if idx == choice.len() {
            break;
        }
    }
    cases
}

/// Transfer/retransfer round trips over every admissible source and
/// window of a five-row shape.
pub fn trans_retrans_identities() -> u64 {
    let shape = sp(&[5, 4, 3, 2, 1]);
    let diagram = shape.diagram();
    let mut cases = 0;
    for j in 1..=shape.rows() {
        for k in j..=shape.rows() {
            let sources: Vec<Cell> = diagram
                .hook(Cell::new(1, j))
                .unwrap()
                .into_iter()
                .filter(|p| p.row == 1 || p.col == j)
                .collect();
            for src in sources {
                let mut h = HookTabloid::empty(shape.clone());
                h.set(Cell::new(1, j), Some(src));
                for l in (j + 1)..=k {
                    h.set(Cell::new(1, l), Some(Cell::new(l, l)));
                }
                let t = h.trans(1, j, k).expect("context satisfied");
                assert_eq!(t.retrans(1, k, j).unwrap(), h);
                cases += 1;
            }
            let sources: Vec<Cell> = diagram
                .hook(Cell::new(1, k))
                .unwrap()
                .into_iter()
                .filter(|p| p.row == 1 || p.col == k)
                .collect();
            for src in sources {
                let mut h = HookTabloid::empty(shape.clone());
                h.set(Cell::new(1, k), Some(src));
                for l in j..k {
                    h.set(Cell::new(1, l), Some(Cell::new(l + 1, l + 1)));
                }
                let back = h.retrans(1, k, j).expect("retransfer");
                let decoded = back.get(Cell::new(1, j)).unwrap();
                if decoded.row == 1 || decoded.col == j {
                    assert_eq!(back.trans(1, j, k).unwrap(), h);
                    cases += 1;
                }
            }
        }
    }
    cases
}

/// Combined move and reverse combined move undo each other along every
/// state the first split stage reaches.
pub fn js_rjs_identities() -> u64 {
    let mut cases = 0;
    for shape in small_shapes() {
        let i = 1;
        for_each_tabloid(&shape, &Bounds::default(), |t| {
            // Bring the rows below into their final form first, so the
            // moves run on states the pipeline actually visits.
            let mut cur = t.clone();
            let mut h = HookTabloid::empty(shape.clone());
            for row in (2..=shape.rows()).rev() {
                let (t2, h2) = split_row(cur, h, row).unwrap();
                cur = t2;
                h = h2;
            }
            for j in (shape.row_start(i)..=shape.row_end(i)).rev() {
                let e = cur.value_at(Cell::new(i, j));
                let before_t = cur.clone();
                let before_h = h.clone();
                let (t2, h2) = js(&cur, &h, e, &CellSet::MainDiagonal, i).unwrap();
                let (bt, bh) = rjs(&t2, &h2, e, &CellSet::Single(Cell::new(i, j)), i).unwrap();
                assert_eq!(bt, before_t);
                let mut cleared = bh.clone();
                cleared.set(Cell::new(i, j), None);
                let mut expect = before_h;
                expect.set(Cell::new(i, j), None);
                assert_eq!(cleared, expect);
                cases += 1;
                cur = t2;
                h = h2;
            }
        })
        .unwrap();
    }
    cases
}
