//! Smith normal form over the integers with exact transforms.
//!
//! For an integer matrix `A` the routine produces unimodular `U`, `V` with
//! `U·A·V = diag(d_1, …, d_r, 0, …)`, `d_i > 0` and `d_i | d_{i+1}`. `V` is
//! returned explicitly; `U` is never materialized; every row operation is
//! forwarded to a [`RowCompanion`] instead, so right-hand sides (or a replay
//! log) see exactly the same transformation as the matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::phase::Phase;

/// Receiver of the row operations performed during reduction.
pub trait RowCompanion {
    fn swap_rows(&mut self, i: usize, j: usize);
    /// `row[dst] += k · row[src]`
    fn add_multiple(&mut self, dst: usize, src: usize, k: &BigInt);
    fn negate_row(&mut self, i: usize);
}

impl RowCompanion for () {
    fn swap_rows(&mut self, _: usize, _: usize) {}
    fn add_multiple(&mut self, _: usize, _: usize, _: &BigInt) {}
    fn negate_row(&mut self, _: usize) {}
}

impl RowCompanion for Vec<Phase> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.swap(i, j);
    }
    fn add_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        let add = self[src].times_big(k);
        self[dst] += add;
    }
    fn negate_row(&mut self, i: usize) {
        self[i] = -self[i];
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowOp {
    Swap(usize, usize),
    AddMultiple { dst: usize, src: usize, k: BigInt },
    Negate(usize),
}

/// Records row operations so they can be replayed on many right-hand sides.
#[derive(Clone, Debug, Default)]
pub struct RowLog(pub Vec<RowOp>);

impl RowCompanion for RowLog {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.0.push(RowOp::Swap(i, j));
    }
    fn add_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.0.push(RowOp::AddMultiple { dst, src, k: k.clone() });
    }
    fn negate_row(&mut self, i: usize) {
        self.0.push(RowOp::Negate(i));
    }
}

impl RowLog {
    pub fn replay<C: RowCompanion>(&self, c: &mut C) {
        for op in &self.0 {
            match op {
                RowOp::Swap(i, j) => c.swap_rows(*i, *j),
                RowOp::AddMultiple { dst, src, k } => c.add_multiple(*dst, *src, k),
                RowOp::Negate(i) => c.negate_row(*i),
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct SmithForm {
    pub rows: usize,
    pub cols: usize,
    /// Nonzero diagonal entries, positive and forming a divisibility chain.
    pub diag: Vec<BigInt>,
    /// Right transform, `v[r][c]`.
    pub v: Vec<Vec<BigInt>>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// Invariant factors different from one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diag.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    /// `V·s` for an integer vector.
    pub fn apply_v(&self, s: &[BigInt]) -> Vec<BigInt> {
        self.v.iter().map(|row| row.iter().zip(s).map(|(a, b)| a * b).sum()).collect()
    }

    /// `V·s` for a phase vector.
    pub fn apply_v_phases(&self, s: &[Phase]) -> Vec<Phase> {
        self.v
            .iter()
            .map(|row| row.iter().zip(s).filter(|(a, _)| !a.is_zero()).map(|(a, p)| p.times_big(a)).sum())
            .collect()
    }

    pub fn diag_u64(&self, i: usize) -> u64 {
        self.diag[i].to_u64().expect("invariant factor fits in u64")
    }
}

fn row_add(a: &mut [Vec<BigInt>], dst: usize, src: usize, k: &BigInt, from: usize) {
    let (d, s) = if dst < src {
        let (lo, hi) = a.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for j in from..d.len() {
        if !s[j].is_zero() {
            d[j] += &s[j] * k;
        }
    }
}

fn col_add(a: &mut [Vec<BigInt>], v: &mut [Vec<BigInt>], dst: usize, src: usize, k: &BigInt, from: usize) {
    for row in a[from..].iter_mut() {
        if !row[src].is_zero() {
            let add = &row[src] * k;
            row[dst] += add;
        }
    }
    for row in v.iter_mut() {
        if !row[src].is_zero() {
            let add = &row[src] * k;
            row[dst] += add;
        }
    }
}

fn col_swap(a: &mut [Vec<BigInt>], v: &mut [Vec<BigInt>], i: usize, j: usize) {
    for row in a.iter_mut().chain(v.iter_mut()) {
        row.swap(i, j);
    }
}

/// Position of a smallest nonzero entry in the lower-right block starting at `t`.
fn min_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            let m = x.abs();
            if m.is_one() {
                return Some((i, j));
            }
            if best.as_ref().is_none_or(|b| m < b.2) {
                best = Some((i, j, m));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Reduces `a` (given as rows of length `cols`) to Smith normal form.
pub fn smith_normal_form<C: RowCompanion>(mut a: Vec<Vec<BigInt>>, cols: usize, comp: &mut C) -> SmithForm {
    let rows = a.len();
    assert!(a.iter().all(|r| r.len() == cols), "ragged matrix");
    let mut v: Vec<Vec<BigInt>> =
        (0..cols).map(|i| (0..cols).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    let mut diag = Vec::new();
    let one = BigInt::one();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = min_entry(&a, t) else { break };
        if pi != t {
            a.swap(pi, t);
            comp.swap_rows(pi, t);
        }
        if pj != t {
            col_swap(&mut a, &mut v, pj, t);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    let k = -q;
                    row_add(&mut a, i, t, &k, t);
                    comp.add_multiple(i, t, &k);
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    col_add(&mut a, &mut v, j, t, &-q, t);
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                // a remainder smaller than the pivot survived; promote it
                let mut best: Option<(bool, usize, BigInt)> = None;
                for (i, row) in a.iter().enumerate().skip(t + 1) {
                    if !row[t].is_zero() && best.as_ref().is_none_or(|b| row[t].abs() < b.2) {
                        best = Some((true, i, row[t].abs()));
                    }
                }
                for (j, x) in a[t].iter().enumerate().skip(t + 1) {
                    if !x.is_zero() && best.as_ref().is_none_or(|b| x.abs() < b.2) {
                        best = Some((false, j, x.abs()));
                    }
                }
                match best {
                    Some((true, i, _)) => {
                        a.swap(i, t);
                        comp.swap_rows(i, t);
                    }
                    Some((false, j, _)) => col_swap(&mut a, &mut v, j, t),
                    None => unreachable!("unclean pivot without remainders"),
                }
                continue;
            }
            let p = a[t][t].clone();
            let offender = (t + 1..rows).find(|&i| a[i][t + 1..].iter().any(|x| !x.is_zero() && !x.is_multiple_of(&p)));
            if let Some(i) = offender {
                row_add(&mut a, t, i, &one, t);
                comp.add_multiple(t, i, &one);
                continue;
            }
            break;
        }
        if a[t][t].is_negative() {
            a[t][t] = -a[t][t].clone();
            comp.negate_row(t);
        }
        diag.push(a[t][t].clone());
        t += 1;
    }
    SmithForm { rows, cols, diag, v }
}
