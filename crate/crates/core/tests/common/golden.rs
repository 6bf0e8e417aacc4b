//! Golden traces of the row pipeline on five ten-row fixtures, one per
//! branch of the diagonal-run stage. Every recorded intermediate state is
//! asserted exactly, including the branch taken and the candidate sets.
//! Shared between the detailed golden tests and the acceptance suite.

use std::collections::BTreeSet;

use shifted_hooks::hook_tabloid::HookTabloid;
use shifted_hooks::merge::merge_row;
use shifted_hooks::shape::{Cell, StrictPartition};
use shifted_hooks::split::{
    split_row_observed, Case2Reason, Split2Outcome, Split3Case, Split3Step, SplitObserver,
};
use shifted_hooks::tabloid::ShiftedTabloid;

fn shape10() -> StrictPartition {
    StrictPartition::new(vec![11, 10, 9, 8, 7, 6, 5, 4, 3, 2]).unwrap()
}

fn tab(text: &str) -> ShiftedTabloid {
    let rows: Vec<Vec<usize>> = text
        .split('/')
        .map(|row| row.split_whitespace().map(|v| v.parse().unwrap()).collect())
        .collect();
    ShiftedTabloid::from_rows(shape10(), &rows).unwrap()
}

/// Parses a first-row pointer list: `-` for empty, `a,b` for a cell.
fn hrow(text: &str) -> Vec<Option<Cell>> {
    text.split_whitespace()
        .map(|tok| {
            if tok == "-" {
                None
            } else {
                let (a, b) = tok.split_once(',').unwrap();
                Some(Cell::new(a.parse().unwrap(), b.parse().unwrap()))
            }
        })
        .collect()
}

fn set(values: &[usize]) -> BTreeSet<usize> {
    values.iter().copied().collect()
}

#[derive(Default)]
struct Recorder {
    split1: Vec<(usize, ShiftedTabloid, Vec<Option<Cell>>)>,
    scratch: Option<ShiftedTabloid>,
    split2: Option<(Split2Outcome, ShiftedTabloid, Vec<Option<Cell>>)>,
    sets: Option<(BTreeSet<usize>, BTreeSet<usize>)>,
    steps: Vec<StepRecord>,
}

struct StepRecord {
    case: Split3Case,
    e: usize,
    e_prime: Option<usize>,
    t: ShiftedTabloid,
    h1: Vec<Option<Cell>>,
    c_prime: BTreeSet<usize>,
    c: BTreeSet<usize>,
}

impl SplitObserver for Recorder {
    fn after_split1_step(&mut self, _j: usize, e: usize, t: &ShiftedTabloid, h: &HookTabloid) {
        self.split1.push((e, t.clone(), h.row(1)));
    }
    fn scratch_tabloid(&mut self, u: &ShiftedTabloid) {
        self.scratch = Some(u.clone());
    }
    fn split2_done(&mut self, outcome: &Split2Outcome, t: &ShiftedTabloid, h: &HookTabloid) {
        self.split2 = Some((*outcome, t.clone(), h.row(1)));
    }
    fn candidate_sets(&mut self, c_prime: &BTreeSet<usize>, c: &BTreeSet<usize>) {
        self.sets = Some((c_prime.clone(), c.clone()));
    }
    fn split3_step(
        &mut self,
        step: &Split3Step,
        t: &ShiftedTabloid,
        h: &HookTabloid,
        c_prime: &BTreeSet<usize>,
        c: &BTreeSet<usize>,
    ) {
        self.steps.push(StepRecord {
            case: step.case,
            e: step.e,
            e_prime: step.e_prime,
            t: t.clone(),
            h1: h.row(1),
            c_prime: c_prime.clone(),
            c: c.clone(),
        });
    }
}

struct RowRun {
    rec: Recorder,
    t: ShiftedTabloid,
    h: HookTabloid,
    input: ShiftedTabloid,
}

fn run_row1(input: &ShiftedTabloid) -> RowRun {
    let mut rec = Recorder::default();
    let h = HookTabloid::empty(shape10());
    let (t, h) = split_row_observed(input.clone(), h, 1, &mut rec).unwrap();
    RowRun {
        rec,
        t,
        h,
        input: input.clone(),
    }
}

impl RowRun {
    /// The row pipeline must be undone exactly by the inverse pipeline.
    fn assert_row_inverts(&self) {
        let (back_t, back_h) = merge_row(self.t.clone(), self.h.clone(), 1).unwrap();
        assert_eq!(back_t, self.input);
        assert!(back_h.row(1).iter().all(|p| p.is_none()));
    }

    fn step(&self, idx: usize) -> &StepRecord {
        &self.rec.steps[idx]
    }

    fn assert_step(&self, idx: usize, case: Split3Case, e: usize, e_prime: Option<usize>) {
        let s = self.step(idx);
        assert_eq!((s.case, s.e, s.e_prime), (case, e, e_prime), "step {idx}");
    }
}

pub fn example_one_case2_no_entry_stays() {
    let input = tab(
        "63 64 61 41 34 20 62 65 56 15 54 / 1 2 3 4 7 8 13 16 18 24 / 5 6 9 10 17 19 30 31 45 / \
         11 12 21 23 26 32 37 47 / 14 22 25 27 36 39 51 / 28 29 35 40 44 52 / 33 38 43 48 53 / \
         42 46 49 55 / 50 57 58 / 59 60",
    );
    let run = run_row1(&input);
    let rec = &run.rec;

    // Sliding 54 ends in (7,11).
    let (e, t, h1) = &rec.split1[0];
    assert_eq!(*e, 54);
    assert_eq!(
        *t,
        tab("63 64 61 41 34 20 62 65 56 15 24 / 1 2 3 4 7 8 13 16 18 45 / 5 6 9 10 17 19 30 31 47 / \
             11 12 21 23 26 32 37 51 / 14 22 25 27 36 39 52 / 28 29 35 40 44 53 / 33 38 43 48 54 / \
             42 46 49 55 / 50 57 58 / 59 60")
    );
    assert_eq!(h1, &hrow("- - - - - - - - - - 7,11"));

    // 15 is stable; its own cell is recorded.
    let (e, t, h1) = &rec.split1[1];
    assert_eq!(*e, 15);
    assert_eq!(t, &rec.split1[0].1);
    assert_eq!(h1, &hrow("- - - - - - - - - 1,10 7,11"));

    // Sliding 56 ends in (8,11); the stale window shifts left.
    let (e, t, h1) = &rec.split1[2];
    assert_eq!(*e, 56);
    assert_eq!(
        *t,
        tab("63 64 61 41 34 20 62 65 15 18 24 / 1 2 3 4 7 8 13 16 31 45 / 5 6 9 10 17 19 30 37 47 / \
             11 12 21 23 26 32 39 51 / 14 22 25 27 36 44 52 / 28 29 35 40 48 53 / 33 38 43 49 54 / \
             42 46 55 56 / 50 57 58 / 59 60")
    );
    assert_eq!(h1, &hrow("- - - - - - - - 1,10 6,10 8,11"));

    // Sliding 65 sticks unstable on the diagonal cell (9,9).
    let (e, t, h1) = &rec.split1[3];
    assert_eq!(*e, 65);
    assert_eq!(
        *t,
        tab("63 64 61 41 34 20 62 13 15 18 24 / 1 2 3 4 7 8 16 30 31 45 / 5 6 9 10 17 19 32 37 47 / \
             11 12 21 23 26 36 39 51 / 14 22 25 27 40 44 52 / 28 29 35 43 48 53 / 33 38 46 49 54 / \
             42 50 55 56 / 65 57 58 / 59 60")
    );
    assert_eq!(h1, &hrow("- - - - - - - 1,10 9,9 6,10 8,11"));

    // Full first stage.
    let (_, t, h1) = rec.split1.last().unwrap();
    assert_eq!(
        *t,
        tab("63 1 2 3 4 7 8 13 15 18 24 / 64 5 6 9 10 16 19 30 31 45 / 61 11 12 17 20 26 32 37 47 / \
             41 14 21 23 27 36 39 51 / 34 22 25 35 40 44 52 / 28 29 38 43 48 53 / 33 42 46 49 54 / \
             62 50 55 56 / 65 57 58 / 59 60")
    );
    assert_eq!(h1, &hrow("1,1 2,2 3,3 4,4 5,5 1,10 3,7 8,8 9,9 6,10 8,11"));

    // Scratch slide of the diagonal run: every entry changes row.
    assert_eq!(
        rec.scratch.as_ref().unwrap(),
        &tab("1 2 3 4 7 8 13 15 18 24 45 / 5 6 9 10 16 19 30 31 37 63 / 11 12 17 20 26 32 36 64 47 / \
              14 21 23 27 35 61 39 51 / 22 25 29 41 40 44 52 / 28 34 38 43 48 53 / 33 42 46 49 54 / \
              62 50 55 56 / 65 57 58 / 59 60")
    );

    let (outcome, t, h1) = rec.split2.as_ref().unwrap();
    assert_eq!(
        *outcome,
        Split2Outcome::Case2 {
            i_prime: 5,
            reason: Case2Reason::NoEntryStaysInRow
        }
    );
    assert_eq!(t, rec.scratch.as_ref().unwrap());
    assert_eq!(
        h1,
        &hrow("2,11 3,10 4,9 5,8 1,10 2,6 6,7 8,8 9,9 6,10 8,11")
    );

    let (c_prime, c) = rec.sets.as_ref().unwrap();
    assert_eq!(c_prime, &set(&[34, 41, 61, 64, 63]));
    assert_eq!(c, &set(&[62, 65]));

    // 34 slides to (7,7).
    run.assert_step(0, Split3Case::Case1, 34, Some(62));
    let s = run.step(0);
    assert_eq!(
        s.t,
        tab("1 2 3 4 7 8 13 15 18 24 45 / 5 6 9 10 16 19 30 31 37 63 / 11 12 17 20 26 32 36 64 47 / \
            14 21 23 27 35 61 39 51 / 22 25 29 41 40 44 52 / 28 33 38 43 48 53 / 34 42 46 49 54 / \
            62 50 55 56 / 65 57 58 / 59 60")
    );
    assert_eq!(
        s.h1,
        hrow("2,11 3,10 4,9 5,8 1,10 2,6 7,7 8,8 9,9 6,10 8,11")
    );
    assert_eq!(s.c_prime, set(&[41, 61, 64, 63]));
    assert_eq!(s.c, set(&[62, 65]));

    // The path of 41 passes right of 62 without touching (7,7): promote 62.
    run.assert_step(1, Split3Case::Case3, 41, Some(62));

    // The path of 62 runs through (8,8) and (8,9): convert it.
    run.assert_step(2, Split3Case::Case2, 62, Some(65));
    let s = run.step(2);
    assert_eq!(s.t, run.step(0).t);
    assert_eq!(
        s.h1,
        hrow("2,11 3,10 4,9 5,8 1,10 2,6 8,8 8,8 9,9 6,10 8,11")
    );
    assert_eq!(s.c_prime, set(&[65, 62, 41, 61, 64, 63]));
    assert_eq!(s.c, set(&[]));

    // 65 slides to (10,11).
    run.assert_step(3, Split3Case::Case1, 65, None);
    let s = run.step(3);
    assert_eq!(
        s.t,
        tab("1 2 3 4 7 8 13 15 18 24 45 / 5 6 9 10 16 19 30 31 37 63 / 11 12 17 20 26 32 36 64 47 / \
            14 21 23 27 35 61 39 51 / 22 25 29 41 40 44 52 / 28 33 38 43 48 53 / 34 42 46 49 54 / \
            62 50 55 56 / 57 58 60 / 59 65")
    );
    assert_eq!(
        s.h1,
        hrow("2,11 3,10 4,9 5,8 1,10 2,6 8,8 8,8 5,9 7,10 10,11")
    );
    assert_eq!(s.c_prime, set(&[62, 41, 61, 64, 63]));

    // 62 slides to (9,11).
    run.assert_step(4, Split3Case::Case1, 62, None);
    let s = run.step(4);
    assert_eq!(
        s.t,
        tab("1 2 3 4 7 8 13 15 18 24 45 / 5 6 9 10 16 19 30 31 37 63 / 11 12 17 20 26 32 36 64 47 / \
            14 21 23 27 35 61 39 51 / 22 25 29 41 40 44 52 / 28 33 38 43 48 53 / 34 42 46 49 54 / \
            50 55 56 60 / 57 58 62 / 59 65")
    );
    assert_eq!(
        s.h1,
        hrow("2,11 3,10 4,9 5,8 1,10 2,6 7,7 9,11 5,9 7,10 10,11")
    );
    assert_eq!(s.c_prime, set(&[41, 61, 64, 63]));

    // Remaining entries drain top-down.
    run.assert_step(5, Split3Case::Case1, 41, None);
    run.assert_step(6, Split3Case::Case1, 61, None);
    run.assert_step(7, Split3Case::Case1, 64, None);
    run.assert_step(8, Split3Case::Case1, 63, None);
    assert_eq!(rec.steps.len(), 9);

    assert_eq!(
        run.t,
        tab("1 2 3 4 7 8 13 15 18 24 45 / 5 6 9 10 16 19 30 31 37 47 / 11 12 17 20 26 32 36 44 51 / \
            14 21 23 27 35 39 48 52 / 22 25 29 38 40 49 60 / 28 33 41 43 53 61 / 34 42 46 54 62 / \
            50 55 56 63 / 57 58 64 / 59 65")
    );
    assert_eq!(
        run.h.row(1),
        hrow("1,10 3,5 1,5 4,4 6,9 7,9 8,11 9,11 5,9 7,10 10,11")
    );
    run.assert_row_inverts();
}

pub fn example_two_case2_run_empty() {
    let input = tab(
        "64 35 8 12 36 49 51 1 34 63 54 / 2 3 5 6 10 13 14 15 20 27 / 4 7 9 11 16 21 25 30 31 / \
         17 18 19 24 28 29 37 41 / 22 23 26 33 42 43 45 / 32 38 40 46 47 53 / 39 44 50 52 58 / \
         48 55 56 61 / 57 59 62 / 60 65",
    );
    let run = run_row1(&input);
    let rec = &run.rec;

    let (_, t, h1) = rec.split1.last().unwrap();
    assert_eq!(
        *t,
        tab("64 1 3 5 6 10 13 14 15 20 27 / 2 4 7 9 11 16 21 25 30 31 / 35 8 12 19 24 28 29 37 41 / \
             17 18 23 26 33 34 43 45 / 22 32 38 40 42 47 53 / 36 39 44 46 52 54 / 49 48 50 56 58 / \
             51 55 59 61 / 57 60 62 / 63 65")
    );
    assert_eq!(h1, &hrow("1,1 1,8 3,3 3,4 3,5 6,6 7,7 8,8 4,9 10,10 6,11"));

    let (outcome, t, h1) = rec.split2.as_ref().unwrap();
    assert_eq!(
        *outcome,
        Split2Outcome::Case2 {
            i_prime: 1,
            reason: Case2Reason::RunEmpty
        }
    );
    assert_eq!(
        *t,
        tab("1 2 3 5 6 10 13 14 15 20 27 / 64 4 7 9 11 16 21 25 30 31 / 35 8 12 19 24 28 29 37 41 / \
             17 18 23 26 33 34 43 45 / 22 32 38 40 42 47 53 / 36 39 44 46 52 54 / 49 48 50 56 58 / \
             51 55 59 61 / 57 60 62 / 63 65")
    );
    assert_eq!(h1, &hrow("1,8 2,2 3,3 3,4 3,5 6,6 7,7 8,8 4,9 10,10 6,11"));

    let (c_prime, c) = rec.sets.as_ref().unwrap();
    assert_eq!(c_prime, &set(&[64]));
    assert_eq!(c, &set(&[35, 36, 49, 51, 63]));

    // 64 converts on (2,2); its stale pointer transfers out of the way.
    run.assert_step(0, Split3Case::Case2, 64, Some(35));
    let s = run.step(0);
    assert_eq!(s.t, *t);
    assert_eq!(s.h1, hrow("2,2 1,8 3,3 3,4 3,5 6,6 7,7 8,8 4,9 10,10 6,11"));
    assert_eq!(s.c_prime, set(&[35, 64]));
    assert_eq!(s.c, set(&[36, 49, 51, 63]));

    // 35 stops on (5,5) and converts.
    run.assert_step(1, Split3Case::Case2, 35, Some(36));
    let s = run.step(1);
    assert_eq!(
        s.t,
        tab("1 2 3 5 6 10 13 14 15 20 27 / 64 4 7 9 11 16 21 25 30 31 / 8 12 18 19 24 28 29 37 41 / \
            17 22 23 26 33 34 43 45 / 35 32 38 40 42 47 53 / 36 39 44 46 52 54 / 49 48 50 56 58 / \
            51 55 59 61 / 57 60 62 / 63 65")
    );
    assert_eq!(s.h1, hrow("2,2 1,8 2,3 5,5 3,5 6,6 7,7 8,8 4,9 10,10 6,11"));
    assert_eq!(s.c_prime, set(&[36, 35, 64]));
    assert_eq!(s.c, set(&[49, 51, 63]));

    // 36 is stable.
    run.assert_step(2, Split3Case::Case1, 36, Some(49));
    let s = run.step(2);
    assert_eq!(s.t, run.step(1).t);
    assert_eq!(s.h1, run.step(1).h1);

    // 35 slides one cell east.
    run.assert_step(3, Split3Case::Case1, 35, Some(49));
    let s = run.step(3);
    assert_eq!(
        s.t,
        tab("1 2 3 5 6 10 13 14 15 20 27 / 64 4 7 9 11 16 21 25 30 31 / 8 12 18 19 24 28 29 37 41 / \
            17 22 23 26 33 34 43 45 / 32 35 38 40 42 47 53 / 36 39 44 46 52 54 / 49 48 50 56 58 / \
            51 55 59 61 / 57 60 62 / 63 65")
    );
    assert_eq!(s.h1, hrow("2,2 1,8 2,3 5,6 3,5 6,6 7,7 8,8 4,9 10,10 6,11"));
    assert_eq!(s.c_prime, set(&[64]));
    assert_eq!(s.c, set(&[49, 51, 63]));

    run.assert_step(4, Split3Case::Case3, 64, Some(49));

    // 49 converts on (7,7); the occupied pointer transfers.
    run.assert_step(5, Split3Case::Case2, 49, Some(51));
    let s = run.step(5);
    assert_eq!(s.t, run.step(3).t);
    assert_eq!(s.h1, hrow("2,2 1,8 2,3 5,6 3,5 7,7 7,7 8,8 4,9 10,10 6,11"));
    assert_eq!(s.c_prime, set(&[51, 49, 64]));
    assert_eq!(s.c, set(&[63]));

    run.assert_step(6, Split3Case::Case1, 51, Some(63));

    // 49 slides one cell east.
    run.assert_step(7, Split3Case::Case1, 49, Some(63));
    let s = run.step(7);
    assert_eq!(
        s.t,
        tab("1 2 3 5 6 10 13 14 15 20 27 / 64 4 7 9 11 16 21 25 30 31 / 8 12 18 19 24 28 29 37 41 / \
            17 22 23 26 33 34 43 45 / 32 35 38 40 42 47 53 / 36 39 44 46 52 54 / 48 49 50 56 58 / \
            51 55 59 61 / 57 60 62 / 63 65")
    );
    assert_eq!(s.h1, hrow("2,2 1,8 2,3 5,6 3,5 7,8 7,7 8,8 4,9 10,10 6,11"));
    assert_eq!(s.c_prime, set(&[64]));
    assert_eq!(s.c, set(&[63]));

    // 64 walks the long diagonal path down to (9,9) and converts.
    run.assert_step(8, Split3Case::Case2, 64, Some(63));
    let s = run.step(8);
    assert_eq!(
        s.t,
        tab("1 2 3 5 6 10 13 14 15 20 27 / 4 7 9 11 16 21 25 29 30 31 / 8 12 18 19 24 28 34 37 41 / \
            17 22 23 26 33 42 43 45 / 32 35 38 40 46 47 53 / 36 39 44 50 52 54 / 48 49 55 56 58 / \
            51 57 59 61 / 64 60 62 / 63 65")
    );
    assert_eq!(
        s.h1,
        hrow("1,8 1,2 4,5 2,4 6,7 6,6 7,7 9,9 10,10 5,10 6,11")
    );
    assert_eq!(s.c_prime, set(&[63, 64]));
    assert_eq!(s.c, set(&[]));

    run.assert_step(9, Split3Case::Case1, 63, None);
    run.assert_step(10, Split3Case::Case1, 64, None);
    assert_eq!(rec.steps.len(), 11);

    assert_eq!(
        run.t,
        tab("1 2 3 5 6 10 13 14 15 20 27 / 4 7 9 11 16 21 25 29 30 31 / 8 12 18 19 24 28 34 37 41 / \
            17 22 23 26 33 42 43 45 / 32 35 38 40 46 47 53 / 36 39 44 50 52 54 / 48 49 55 56 58 / \
            51 57 59 61 / 60 62 64 / 63 65")
    );
    assert_eq!(
        run.h.row(1),
        hrow("1,8 1,2 4,5 2,4 6,7 6,6 7,7 9,11 10,10 5,10 6,11")
    );
    run.assert_row_inverts();
}

pub fn example_three_case1_h_bottom() {
    let input = tab(
        "22 15 37 21 44 11 62 14 57 13 34 / 1 2 4 5 7 10 17 19 28 32 / 3 6 8 9 23 27 31 38 41 / \
         12 16 18 24 29 36 40 53 / 20 25 26 30 46 47 54 / 33 35 42 48 50 55 / 39 43 49 51 60 / \
         45 52 58 63 / 56 59 64 / 61 65",
    );
    let run = run_row1(&input);
    let rec = &run.rec;

    let (_, t, h1) = rec.split1.last().unwrap();
    assert_eq!(
        *t,
        tab("22 1 2 4 5 7 10 13 14 28 32 / 15 3 6 8 9 17 19 31 34 41 / 37 11 16 18 23 27 36 38 53 / \
             12 20 24 26 29 40 47 54 / 21 25 30 42 46 50 55 / 33 35 43 48 51 57 / 39 44 49 58 60 / \
             45 52 59 63 / 56 61 64 / 62 65")
    );
    assert_eq!(
        h1,
        &hrow("1,1 2,2 3,3 1,4 5,5 1,10 1,9 7,8 1,10 10,10 6,11")
    );

    let (outcome, t, h1) = rec.split2.as_ref().unwrap();
    assert_eq!(*outcome, Split2Outcome::Case1 { i_prime: 3, h: 1 });
    assert_eq!(
        *t,
        tab("1 2 4 5 7 10 13 14 22 28 32 / 3 6 8 9 15 17 19 31 34 41 / 11 37 16 18 23 27 36 38 53 / \
             12 20 24 26 29 40 47 54 / 21 25 30 42 46 50 55 / 33 35 43 48 51 57 / 39 44 49 58 60 / \
             45 52 59 63 / 56 61 64 / 62 65")
    );
    assert_eq!(
        h1,
        &hrow("2,6 3,4 1,9 1,4 5,5 1,10 1,9 7,8 1,10 10,10 6,11")
    );

    assert_eq!(
        run.t,
        tab("1 2 4 5 7 10 13 14 22 28 32 / 3 6 8 9 15 17 19 31 34 41 / 11 12 16 18 23 27 36 38 53 / \
            20 21 24 26 29 40 47 54 / 25 30 35 42 46 50 55 / 33 37 43 48 51 57 / 39 44 49 58 60 / \
            45 52 59 63 / 56 61 64 / 62 65")
    );
    assert_eq!(
        run.h.row(1),
        hrow("2,6 1,9 4,4 1,4 6,7 1,10 1,9 7,8 1,10 10,10 6,11")
    );
    run.assert_row_inverts();
}

pub fn example_four_case1_h_top() {
    let input = tab(
        "20 9 64 7 33 54 65 13 61 50 46 / 1 2 4 8 11 14 16 22 24 37 / 3 5 10 12 18 23 26 29 41 / \
         6 15 17 21 25 30 36 43 / 19 27 28 34 35 39 53 / 31 32 38 42 44 55 / 40 45 48 51 58 / \
         47 49 52 59 / 56 57 62 / 60 63",
    );
    let run = run_row1(&input);
    let rec = &run.rec;

    let (_, t, h1) = rec.split1.last().unwrap();
    assert_eq!(
        *t,
        tab("20 1 2 4 8 11 13 16 22 24 37 / 9 3 5 10 12 14 23 26 29 41 / 64 6 15 17 18 25 30 36 43 / \
             7 19 21 28 34 35 39 46 / 33 27 32 38 42 44 53 / 31 40 45 48 50 55 / 54 47 49 51 58 / \
             65 52 57 59 / 56 60 62 / 61 63")
    );
    assert_eq!(h1, &hrow("1,1 2,2 3,3 4,4 5,5 1,8 7,7 8,8 5,9 10,10 4,11"));

    assert_eq!(
        rec.scratch.as_ref().unwrap(),
        &tab("1 2 4 7 8 11 13 16 22 24 37 / 3 5 20 10 12 14 23 26 29 41 / 6 9 15 17 18 25 30 36 43 / \
              64 19 21 28 34 35 39 46 / 33 27 32 38 42 44 53 / 31 40 45 48 50 55 / 54 47 49 51 58 / \
              65 52 57 59 / 56 60 62 / 61 63")
    );

    let (outcome, t, h1) = rec.split2.as_ref().unwrap();
    assert_eq!(*outcome, Split2Outcome::Case1 { i_prime: 4, h: 4 });
    assert_eq!(t, rec.scratch.as_ref().unwrap());
    assert_eq!(h1, &hrow("2,4 3,4 4,4 4,4 5,5 1,8 7,7 8,8 5,9 10,10 4,11"));

    assert_eq!(
        run.t,
        tab("1 2 4 7 8 11 13 16 22 24 37 / 3 5 9 10 12 14 23 26 29 41 / 6 15 17 18 20 25 30 36 43 / \
            19 21 28 32 34 35 39 46 / 27 31 38 42 44 50 53 / 33 40 45 48 54 55 / 47 49 51 57 58 / \
            52 56 59 62 / 60 61 64 / 63 65")
    );
    assert_eq!(
        run.h.row(1),
        hrow("2,3 3,7 3,3 5,5 6,9 1,8 3,7 9,11 10,11 10,10 4,11")
    );
    run.assert_row_inverts();
}

pub fn example_five_case2_smaller_candidate_below() {
    let input = tab(
        "26 4 13 31 47 24 58 65 53 25 60 / 1 2 3 6 8 9 11 14 22 29 / 5 7 10 16 17 20 23 30 36 / \
         12 15 18 19 21 33 41 43 / 27 28 32 37 38 42 49 / 34 35 39 40 46 51 / 44 45 48 52 54 / \
         50 55 57 61 / 56 59 62 / 63 64",
    );
    let run = run_row1(&input);
    let rec = &run.rec;

    let (_, t, h1) = rec.split1.last().unwrap();
    assert_eq!(
        *t,
        tab("26 1 2 3 6 8 9 11 14 22 29 / 4 5 7 10 16 17 20 23 25 36 / 13 12 15 18 19 21 30 41 43 / \
             31 24 28 32 33 38 42 49 / 27 34 35 37 40 46 51 / 47 39 45 48 52 54 / 44 50 53 57 60 / \
             58 55 59 61 / 56 62 64 / 63 65")
    );
    assert_eq!(h1, &hrow("1,1 2,2 3,3 4,4 3,5 6,6 1,9 8,8 6,9 6,10 10,11"));

    assert_eq!(
        rec.scratch.as_ref().unwrap(),
        &tab("1 2 3 6 8 9 11 14 22 25 29 / 4 5 7 10 16 17 20 23 26 36 / 13 12 15 18 19 21 30 41 43 / \
              31 24 28 32 33 38 42 49 / 27 34 35 37 40 46 51 / 47 39 45 48 52 54 / 44 50 53 57 60 / \
              58 55 59 61 / 56 62 64 / 63 65")
    );

    let (outcome, t, h1) = rec.split2.as_ref().unwrap();
    assert_eq!(
        *outcome,
        Split2Outcome::Case2 {
            i_prime: 2,
            reason: Case2Reason::SmallerCandidateBelow { h: 2 }
        }
    );
    assert_eq!(t, rec.scratch.as_ref().unwrap());
    assert_eq!(h1, &hrow("2,10 2,2 3,3 4,4 3,5 6,6 1,9 8,8 6,9 6,10 10,11"));

    assert_eq!(
        run.t,
        tab("1 2 3 6 8 9 11 14 22 25 29 / 4 5 7 10 16 17 20 23 26 36 / 12 13 15 18 19 21 30 41 43 / \
            24 27 28 32 33 38 42 49 / 31 34 35 37 40 46 51 / 39 44 45 48 52 54 / 47 50 53 57 60 / \
            55 56 59 61 / 58 62 64 / 63 65")
    );
    assert_eq!(
        run.h.row(1),
        hrow("2,10 3,4 3,3 2,4 5,5 1,9 7,7 5,8 9,9 6,10 10,11")
    );
    run.assert_row_inverts();
}
